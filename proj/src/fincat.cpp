#include "fibalg/fincat.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>

namespace fibalg {

void LawReport::add(Violation::Kind kind, std::string law, std::string witness) {
  violations.push_back({kind, std::move(law), std::move(witness)});
}

std::string LawReport::summary() const {
  std::ostringstream os;
  for (const auto& v : violations) {
    os << (v.kind == Violation::Kind::Structural ? "[structural] " : "[law] ")
       << v.law << " @ " << v.witness << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// FinCategory

bool FinCategory::has_object(const std::string& o) const {
  return std::find(objects.begin(), objects.end(), o) != objects.end();
}

bool FinCategory::has_morphism(const std::string& m) const {
  return std::any_of(morphisms.begin(), morphisms.end(),
                     [&](const Morphism& x) { return x.id == m; });
}

const Morphism& FinCategory::morphism(const std::string& m) const {
  for (const auto& x : morphisms)
    if (x.id == m) return x;
  throw Error("category '" + name + "': unknown morphism '" + m + "'");
}

const std::string& FinCategory::identity(const std::string& o) const {
  auto it = identities.find(o);
  if (it == identities.end())
    throw Error("category '" + name + "': no identity for object '" + o + "'");
  return it->second;
}

bool FinCategory::is_identity(const std::string& m) const {
  for (const auto& [o, i] : identities)
    if (i == m) return true;
  return false;
}

const std::string& FinCategory::compose(const std::string& g,
                                        const std::string& f) const {
  auto it = composition.find({g, f});
  if (it != composition.end()) return it->second;
  // Identity absorption is implicit even if tabulated sparsely.
  if (is_identity(g) && dst(f) == src(g)) return f;
  if (is_identity(f) && dst(f) == src(g)) return g;
  throw Error("category '" + name + "': composite " + g + " . " + f +
              " not tabulated");
}

std::vector<std::string> FinCategory::hom(const std::string& x,
                                          const std::string& y) const {
  std::vector<std::string> out;
  for (const auto& m : morphisms)
    if (m.src == x && m.dst == y) out.push_back(m.id);
  return out;
}

std::vector<std::string> FinCategory::from(const std::string& x) const {
  std::vector<std::string> out;
  for (const auto& m : morphisms)
    if (m.src == x) out.push_back(m.id);
  return out;
}

std::vector<std::string> FinCategory::into(const std::string& y) const {
  std::vector<std::string> out;
  for (const auto& m : morphisms)
    if (m.dst == y) out.push_back(m.id);
  return out;
}

std::optional<std::string> FinCategory::inverse(const std::string& m) const {
  const auto& mo = morphism(m);
  for (const auto& g : hom(mo.dst, mo.src)) {
    if (compose(g, m) == identity(mo.src) && compose(m, g) == identity(mo.dst))
      return g;
  }
  return std::nullopt;
}

bool FinCategory::is_iso(const std::string& m) const {
  return inverse(m).has_value();
}

bool FinCategory::objects_isomorphic(const std::string& x,
                                     const std::string& y) const {
  if (x == y) return true;
  for (const auto& f : hom(x, y))
    if (is_iso(f)) return true;
  return false;
}

LawReport FinCategory::validate() const {
  LawReport r;
  std::map<std::string, int> seen_obj;
  for (const auto& o : objects)
    if (++seen_obj[o] > 1)
      r.add(Violation::Kind::Structural, "duplicate object", o);
  std::map<std::string, int> seen_mor;
  for (const auto& m : morphisms) {
    if (++seen_mor[m.id] > 1)
      r.add(Violation::Kind::Structural, "duplicate morphism", m.id);
    if (!has_object(m.src) || !has_object(m.dst))
      r.add(Violation::Kind::Structural, "morphism endpoints undeclared", m.id);
  }
  if (!r.ok()) return r;

  for (const auto& o : objects) {
    auto it = identities.find(o);
    if (it == identities.end()) {
      r.add(Violation::Kind::Structural, "missing identity", o);
      continue;
    }
    if (!has_morphism(it->second)) {
      r.add(Violation::Kind::Structural, "identity is not a morphism", o);
      continue;
    }
    const auto& m = morphism(it->second);
    if (m.src != o || m.dst != o)
      r.add(Violation::Kind::Law, "identity endpoints", o + " via " + m.id);
  }
  if (!r.ok()) return r;

  // Composition table: totality on composable pairs, correct typing.
  for (const auto& f : morphisms) {
    for (const auto& g : morphisms) {
      bool composable = f.dst == g.src;
      auto it = composition.find({g.id, f.id});
      if (!composable) {
        if (it != composition.end())
          r.add(Violation::Kind::Law, "composite of non-composable pair",
                g.id + " . " + f.id);
        continue;
      }
      std::string gf;
      if (it != composition.end()) {
        gf = it->second;
      } else if (is_identity(g.id)) {
        gf = f.id;
      } else if (is_identity(f.id)) {
        gf = g.id;
      } else {
        r.add(Violation::Kind::Law, "composition table incomplete",
              g.id + " . " + f.id);
        continue;
      }
      if (!has_morphism(gf)) {
        r.add(Violation::Kind::Structural, "composite is not a morphism",
              g.id + " . " + f.id + " = " + gf);
        continue;
      }
      const auto& c = morphism(gf);
      if (c.src != f.src || c.dst != g.dst)
        r.add(Violation::Kind::Law, "composite endpoints",
              g.id + " . " + f.id + " = " + gf);
    }
  }
  if (!r.ok()) return r;

  for (const auto& m : morphisms) {
    if (compose(m.id, identity(m.src)) != m.id)
      r.add(Violation::Kind::Law, "right identity", m.id);
    if (compose(identity(m.dst), m.id) != m.id)
      r.add(Violation::Kind::Law, "left identity", m.id);
  }

  for (const auto& f : morphisms)
    for (const auto& g : morphisms) {
      if (f.dst != g.src) continue;
      for (const auto& h : morphisms) {
        if (g.dst != h.src) continue;
        if (compose(h.id, compose(g.id, f.id)) !=
            compose(compose(h.id, g.id), f.id))
          r.add(Violation::Kind::Law, "associativity",
                h.id + " . " + g.id + " . " + f.id);
      }
    }
  return r;
}

CatPtr make_cat(FinCategory c) {
  return std::make_shared<const FinCategory>(std::move(c));
}

// ---------------------------------------------------------------------------
// FunctorData / NatTransData

const std::string& FunctorData::on_object(const std::string& o) const {
  auto it = omap.find(o);
  if (it == omap.end())
    throw Error("functor '" + name + "': no image for object '" + o + "'");
  return it->second;
}

const std::string& FunctorData::on_morphism(const std::string& m) const {
  auto it = mmap.find(m);
  if (it == mmap.end())
    throw Error("functor '" + name + "': no image for morphism '" + m + "'");
  return it->second;
}

LawReport FunctorData::validate() const {
  LawReport r;
  if (!dom || !cod) {
    r.add(Violation::Kind::Structural, "functor endpoints missing", name);
    return r;
  }
  for (const auto& o : dom->objects) {
    auto it = omap.find(o);
    if (it == omap.end()) {
      r.add(Violation::Kind::Structural, "object image missing", o);
    } else if (!cod->has_object(it->second)) {
      r.add(Violation::Kind::Structural, "object image undeclared", o);
    }
  }
  for (const auto& m : dom->morphisms) {
    auto it = mmap.find(m.id);
    if (it == mmap.end()) {
      r.add(Violation::Kind::Structural, "morphism image missing", m.id);
    } else if (!cod->has_morphism(it->second)) {
      r.add(Violation::Kind::Structural, "morphism image undeclared", m.id);
    }
  }
  if (!r.ok()) return r;

  for (const auto& m : dom->morphisms) {
    const auto& im = cod->morphism(on_morphism(m.id));
    if (im.src != on_object(m.src) || im.dst != on_object(m.dst))
      r.add(Violation::Kind::Law, "functor src/dst preservation", m.id);
  }
  if (!r.ok()) return r;  // composites below assume well-typed images
  for (const auto& o : dom->objects) {
    if (on_morphism(dom->identity(o)) != cod->identity(on_object(o)))
      r.add(Violation::Kind::Law, "functor identity preservation", o);
  }
  for (const auto& f : dom->morphisms)
    for (const auto& g : dom->morphisms) {
      if (f.dst != g.src) continue;
      if (on_morphism(dom->compose(g.id, f.id)) !=
          cod->compose(on_morphism(g.id), on_morphism(f.id)))
        r.add(Violation::Kind::Law, "functor composition preservation",
              g.id + " . " + f.id);
    }
  return r;
}

bool FunctorData::same_action(const FunctorData& other) const {
  return omap == other.omap && mmap == other.mmap;
}

const std::string& NatTransData::at(const std::string& o) const {
  auto it = components.find(o);
  if (it == components.end())
    throw Error("nat '" + name + "': no component at '" + o + "'");
  return it->second;
}

LawReport NatTransData::validate() const {
  LawReport r;
  if (!source.dom || !target.dom || *source.dom != *target.dom ||
      *source.cod != *target.cod) {
    r.add(Violation::Kind::Structural, "nat endpoints not parallel", name);
    return r;
  }
  const auto& C = *source.dom;
  const auto& D = *source.cod;
  for (const auto& o : C.objects) {
    auto it = components.find(o);
    if (it == components.end()) {
      r.add(Violation::Kind::Structural, "component missing", o);
      continue;
    }
    if (!D.has_morphism(it->second)) {
      r.add(Violation::Kind::Structural, "component undeclared", o);
      continue;
    }
    const auto& m = D.morphism(it->second);
    if (m.src != source.on_object(o) || m.dst != target.on_object(o))
      r.add(Violation::Kind::Law, "component endpoints", o);
  }
  if (!r.ok()) return r;
  for (const auto& f : C.morphisms) {
    // target(f) . alpha_src = alpha_dst . source(f)
    if (D.compose(target.on_morphism(f.id), at(f.src)) !=
        D.compose(at(f.dst), source.on_morphism(f.id)))
      r.add(Violation::Kind::Law, "naturality", f.id);
  }
  return r;
}

bool NatTransData::same_components(const NatTransData& other) const {
  return components == other.components;
}

// ---------------------------------------------------------------------------
// Size guard

std::size_t size_guard() {
  if (const char* env = std::getenv("FIBALG_SIZE_GUARD")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 512;
}

void check_size_guard(const FinCategory& c) {
  if (c.morphisms.size() > size_guard())
    throw Error("category '" + c.name + "' exceeds size guard (" +
                std::to_string(c.morphisms.size()) + " > " +
                std::to_string(size_guard()) + " morphisms)");
}

// ---------------------------------------------------------------------------
// Constructions

FinCategory opposite(const FinCategory& c) {
  FinCategory o;
  o.name = c.name + "_op";
  o.objects = c.objects;
  for (const auto& m : c.morphisms) o.morphisms.push_back({m.id, m.dst, m.src});
  o.identities = c.identities;
  for (const auto& [gf, c2] : c.composition)
    o.composition[{gf.second, gf.first}] = c2;
  return o;
}

CatPtr opposite(const CatPtr& c) { return make_cat(opposite(*c)); }

FunctorData opposite(const FunctorData& f) {
  FunctorData o = f;
  o.name = f.name + "_op";
  o.dom = opposite(f.dom);
  o.cod = opposite(f.cod);
  return o;
}

NatTransData opposite(const NatTransData& a) {
  NatTransData o;
  o.name = a.name + "_op";
  o.source = opposite(a.target);
  o.target = opposite(a.source);
  o.components = a.components;
  return o;
}

std::string pair_object_id(const std::string& a, const std::string& b) {
  return a + "__" + b;
}
std::string pair_morphism_id(const std::string& f, const std::string& g) {
  return f + "__" + g;
}
std::pair<std::string, std::string> split_pair_id(const std::string& id) {
  auto pos = id.find("__");
  if (pos == std::string::npos) throw Error("not a pair id: " + id);
  return {id.substr(0, pos), id.substr(pos + 2)};
}

FinCategory product(const FinCategory& a, const FinCategory& b,
                    const std::string& name) {
  FinCategory p;
  p.name = name.empty() ? a.name + "_x_" + b.name : name;
  for (const auto& x : a.objects)
    for (const auto& y : b.objects)
      p.objects.push_back(pair_object_id(x, y));
  for (const auto& f : a.morphisms)
    for (const auto& g : b.morphisms)
      p.morphisms.push_back({pair_morphism_id(f.id, g.id),
                             pair_object_id(f.src, g.src),
                             pair_object_id(f.dst, g.dst)});
  for (const auto& x : a.objects)
    for (const auto& y : b.objects)
      p.identities[pair_object_id(x, y)] =
          pair_morphism_id(a.identity(x), b.identity(y));
  for (const auto& f1 : a.morphisms)
    for (const auto& f2 : a.morphisms) {
      if (f1.dst != f2.src) continue;
      for (const auto& g1 : b.morphisms)
        for (const auto& g2 : b.morphisms) {
          if (g1.dst != g2.src) continue;
          p.composition[{pair_morphism_id(f2.id, g2.id),
                         pair_morphism_id(f1.id, g1.id)}] =
              pair_morphism_id(a.compose(f2.id, f1.id), b.compose(g2.id, g1.id));
        }
    }
  return p;
}

FunctorData identity_functor(const CatPtr& c) {
  FunctorData f;
  f.name = "id_" + c->name;
  f.dom = f.cod = c;
  for (const auto& o : c->objects) f.omap[o] = o;
  for (const auto& m : c->morphisms) f.mmap[m.id] = m.id;
  return f;
}

FunctorData compose_functors(const FunctorData& g, const FunctorData& f) {
  if (*f.cod != *g.dom)
    throw Error("compose_functors: " + g.name + " . " + f.name +
                " not composable");
  FunctorData h;
  h.name = g.name + "." + f.name;
  h.dom = f.dom;
  h.cod = g.cod;
  for (const auto& [o, fo] : f.omap) h.omap[o] = g.on_object(fo);
  for (const auto& [m, fm] : f.mmap) h.mmap[m] = g.on_morphism(fm);
  return h;
}

FunctorData constant_functor(const CatPtr& dom, const CatPtr& cod,
                             const std::string& obj) {
  FunctorData f;
  f.name = "const_" + obj;
  f.dom = dom;
  f.cod = cod;
  for (const auto& o : dom->objects) f.omap[o] = obj;
  for (const auto& m : dom->morphisms) f.mmap[m.id] = cod->identity(obj);
  return f;
}

FinCategory full_subcategory(const FinCategory& c,
                             const std::vector<std::string>& objs,
                             const std::string& name) {
  FinCategory s;
  s.name = name;
  s.objects = objs;
  auto keep = [&](const std::string& o) {
    return std::find(objs.begin(), objs.end(), o) != objs.end();
  };
  for (const auto& m : c.morphisms)
    if (keep(m.src) && keep(m.dst)) s.morphisms.push_back(m);
  for (const auto& o : objs) s.identities[o] = c.identity(o);
  for (const auto& [gf, comp] : c.composition) {
    const auto& g = c.morphism(gf.first);
    const auto& f = c.morphism(gf.second);
    if (keep(f.src) && keep(f.dst) && keep(g.dst)) s.composition[gf] = comp;
  }
  return s;
}

FinCategory pullback_category(const FunctorData& F, const FunctorData& G,
                              const std::string& name) {
  if (*F.cod != *G.cod) throw Error("pullback_category: codomains differ");
  const auto& A = *F.dom;
  const auto& B = *G.dom;
  FinCategory p;
  p.name = name.empty() ? A.name + "_pb_" + B.name : name;
  for (const auto& a : A.objects)
    for (const auto& b : B.objects)
      if (F.on_object(a) == G.on_object(b))
        p.objects.push_back(pair_object_id(a, b));
  for (const auto& f : A.morphisms)
    for (const auto& g : B.morphisms)
      if (F.on_morphism(f.id) == G.on_morphism(g.id))
        p.morphisms.push_back({pair_morphism_id(f.id, g.id),
                               pair_object_id(f.src, g.src),
                               pair_object_id(f.dst, g.dst)});
  for (const auto& o : p.objects) {
    auto [a, b] = split_pair_id(o);
    p.identities[o] = pair_morphism_id(A.identity(a), B.identity(b));
  }
  for (const auto& m1 : p.morphisms)
    for (const auto& m2 : p.morphisms) {
      if (m1.dst != m2.src) continue;
      auto [f1, g1] = split_pair_id(m1.id);
      auto [f2, g2] = split_pair_id(m2.id);
      p.composition[{m2.id, m1.id}] =
          pair_morphism_id(A.compose(f2, f1), B.compose(g2, g1));
    }
  return p;
}

NatTransData identity_nat(const FunctorData& f) {
  NatTransData a;
  a.name = "id_" + f.name;
  a.source = a.target = f;
  for (const auto& o : f.dom->objects)
    a.components[o] = f.cod->identity(f.on_object(o));
  return a;
}

NatTransData vertical_compose(const NatTransData& b, const NatTransData& a) {
  if (!b.source.same_action(a.target))
    throw Error("vertical_compose: middle functors differ");
  NatTransData c;
  c.name = b.name + "." + a.name;
  c.source = a.source;
  c.target = b.target;
  const auto& D = *a.source.cod;
  for (const auto& o : a.source.dom->objects)
    c.components[o] = D.compose(b.at(o), a.at(o));
  return c;
}

NatTransData whisker_left(const FunctorData& h, const NatTransData& a) {
  NatTransData c;
  c.name = h.name + "*" + a.name;
  c.source = compose_functors(h, a.source);
  c.target = compose_functors(h, a.target);
  for (const auto& o : a.source.dom->objects)
    c.components[o] = h.on_morphism(a.at(o));
  return c;
}

NatTransData whisker_right(const NatTransData& a, const FunctorData& h) {
  NatTransData c;
  c.name = a.name + "*" + h.name;
  c.source = compose_functors(a.source, h);
  c.target = compose_functors(a.target, h);
  for (const auto& o : h.dom->objects) c.components[o] = a.at(h.on_object(o));
  return c;
}

NatTransData horizontal_compose(const NatTransData& b, const NatTransData& a) {
  // (b * a)_X = b_{G X} . H(a_X)  =  K(a_X) . b_{F X}
  return vertical_compose(whisker_right(b, a.target),
                          whisker_left(b.source, a));
}

// ---------------------------------------------------------------------------
// Limits

namespace {

// Enumerates all assignments: for each key, pick one of its options.
// Visit returns false to abort the whole enumeration.
bool for_each_assignment(
    const std::vector<std::pair<std::string, std::vector<std::string>>>& slots,
    const std::function<bool(const std::map<std::string, std::string>&)>& visit) {
  std::map<std::string, std::string> cur;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == slots.size()) return visit(cur);
    for (const auto& opt : slots[i].second) {
      cur[slots[i].first] = opt;
      if (!rec(i + 1)) return false;
    }
    cur.erase(slots[i].first);
    return true;
  };
  return rec(0);
}

std::vector<Cone> all_cones(const FunctorData& diagram) {
  const auto& J = *diagram.dom;
  const auto& C = *diagram.cod;
  std::vector<Cone> cones;
  for (const auto& apex : C.objects) {
    std::vector<std::pair<std::string, std::vector<std::string>>> slots;
    bool feasible = true;
    for (const auto& j : J.objects) {
      auto opts = C.hom(apex, diagram.on_object(j));
      if (opts.empty()) {
        feasible = false;
        break;
      }
      slots.push_back({j, std::move(opts)});
    }
    if (!feasible) continue;
    for_each_assignment(slots, [&](const std::map<std::string, std::string>& legs) {
      for (const auto& e : J.morphisms) {
        if (C.compose(diagram.on_morphism(e.id), legs.at(e.src)) !=
            legs.at(e.dst))
          return true;  // not a cone, keep enumerating
      }
      cones.push_back({apex, legs});
      return true;
    });
  }
  return cones;
}

}  // namespace

std::optional<Cone> limit(const FunctorData& diagram) {
  check_size_guard(*diagram.cod);
  const auto& J = *diagram.dom;
  const auto& C = *diagram.cod;
  auto cones = all_cones(diagram);
  // Candidates are in apex declaration order; ties go to the
  // lexicographically least apex id, so sort by apex first.
  std::stable_sort(cones.begin(), cones.end(),
                   [](const Cone& a, const Cone& b) { return a.apex < b.apex; });
  for (const auto& cand : cones) {
    bool universal = true;
    for (const auto& other : cones) {
      int count = 0;
      for (const auto& m : C.hom(other.apex, cand.apex)) {
        bool factors = true;
        for (const auto& j : J.objects)
          if (C.compose(cand.legs.at(j), m) != other.legs.at(j)) {
            factors = false;
            break;
          }
        if (factors) ++count;
      }
      if (count != 1) {
        universal = false;
        break;
      }
    }
    if (universal) return cand;
  }
  return std::nullopt;
}

std::optional<Cone> colimit(const FunctorData& diagram) {
  FunctorData d = diagram;
  d.dom = opposite(diagram.dom);
  d.cod = opposite(diagram.cod);
  return limit(d);
}

namespace {

// Discrete / shaped helper categories for the small colimit recipes.

FinCategory discrete2() {
  FinCategory j;
  j.name = "disc2";
  j.objects = {"n1", "n2"};
  j.morphisms = {{"id_n1", "n1", "n1"}, {"id_n2", "n2", "n2"}};
  j.identities = {{"n1", "id_n1"}, {"n2", "id_n2"}};
  return j;
}

FinCategory span_shape() {
  FinCategory j;
  j.name = "span";
  j.objects = {"a", "l", "r"};
  j.morphisms = {{"id_a", "a", "a"},
                 {"id_l", "l", "l"},
                 {"id_r", "r", "r"},
                 {"el", "a", "l"},
                 {"er", "a", "r"}};
  j.identities = {{"a", "id_a"}, {"l", "id_l"}, {"r", "id_r"}};
  return j;
}

FinCategory parallel_pair_shape() {
  FinCategory j;
  j.name = "pair";
  j.objects = {"a", "b"};
  j.morphisms = {{"id_a", "a", "a"},
                 {"id_b", "b", "b"},
                 {"e1", "a", "b"},
                 {"e2", "a", "b"}};
  j.identities = {{"a", "id_a"}, {"b", "id_b"}};
  return j;
}

}  // namespace

std::optional<CoconeResult> coproduct(const FinCategory& c, const std::string& x,
                                      const std::string& y) {
  FunctorData d;
  d.name = "copr";
  d.dom = make_cat(discrete2());
  d.cod = make_cat(c);
  d.omap = {{"n1", x}, {"n2", y}};
  d.mmap = {{"id_n1", c.identity(x)}, {"id_n2", c.identity(y)}};
  auto co = colimit(d);
  if (!co) return std::nullopt;
  return CoconeResult{co->apex, {co->legs.at("n1"), co->legs.at("n2")}};
}

std::optional<CoconeResult> pushout(const FinCategory& c, const std::string& f,
                                    const std::string& g) {
  if (c.src(f) != c.src(g)) throw Error("pushout: not a span");
  FunctorData d;
  d.name = "po";
  d.dom = make_cat(span_shape());
  d.cod = make_cat(c);
  d.omap = {{"a", c.src(f)}, {"l", c.dst(f)}, {"r", c.dst(g)}};
  d.mmap = {{"id_a", c.identity(c.src(f))},
            {"id_l", c.identity(c.dst(f))},
            {"id_r", c.identity(c.dst(g))},
            {"el", f},
            {"er", g}};
  auto co = colimit(d);
  if (!co) return std::nullopt;
  return CoconeResult{co->apex, {co->legs.at("l"), co->legs.at("r")}};
}

std::optional<CoconeResult> coequalizer(const FinCategory& c,
                                        const std::string& f,
                                        const std::string& g) {
  if (c.src(f) != c.src(g) || c.dst(f) != c.dst(g))
    throw Error("coequalizer: not a parallel pair");
  FunctorData d;
  d.name = "coeq";
  d.dom = make_cat(parallel_pair_shape());
  d.cod = make_cat(c);
  d.omap = {{"a", c.src(f)}, {"b", c.dst(f)}};
  d.mmap = {{"id_a", c.identity(c.src(f))},
            {"id_b", c.identity(c.dst(f))},
            {"e1", f},
            {"e2", g}};
  auto co = colimit(d);
  if (!co) return std::nullopt;
  return CoconeResult{co->apex, {co->legs.at("b")}};
}

Extremal find_extremal(const FinCategory& c) {
  Extremal e;
  for (const auto& x : c.objects) {
    bool initial = true, terminal = true;
    for (const auto& y : c.objects) {
      if (c.hom(x, y).size() != 1) initial = false;
      if (c.hom(y, x).size() != 1) terminal = false;
    }
    if (initial && !e.initial) e.initial = x;
    if (terminal && !e.terminal) e.terminal = x;
  }
  return e;
}

// ---------------------------------------------------------------------------
// Adjunctions

namespace {

Verdict check_triangles(const FunctorData& F, const FunctorData& G,
                        const NatTransData& unit, const NatTransData& counit) {
  const auto& C = *F.dom;
  const auto& D = *F.cod;
  if (!unit.source.same_action(identity_functor(F.dom)) ||
      !unit.target.same_action(compose_functors(G, F)))
    throw Error("check_adjunction: unit shape mismatch");
  if (!counit.source.same_action(compose_functors(F, G)) ||
      !counit.target.same_action(identity_functor(F.cod)))
    throw Error("check_adjunction: counit shape mismatch");
  for (auto lr = unit.validate(); !lr.ok();)
    return {false, "unit not natural: " + lr.violations.front().witness};
  for (auto lr = counit.validate(); !lr.ok();)
    return {false, "counit not natural: " + lr.violations.front().witness};
  // (counit F) . (F unit) = id_F
  for (const auto& c : C.objects) {
    auto lhs = D.compose(counit.at(F.on_object(c)), F.on_morphism(unit.at(c)));
    if (lhs != D.identity(F.on_object(c)))
      return {false, "triangle (eF)(Fu) fails at " + c};
  }
  // (G counit) . (unit G) = id_G
  for (const auto& d : D.objects) {
    auto lhs = C.compose(G.on_morphism(counit.at(d)), unit.at(G.on_object(d)));
    if (lhs != C.identity(G.on_object(d)))
      return {false, "triangle (Ge)(uG) fails at " + d};
  }
  return {true, ""};
}

Verdict check_homset(const FunctorData& F, const FunctorData& G) {
  const auto& C = *F.dom;
  const auto& D = *F.cod;
  // Search for a unit family making g |-> G(g) . eta_c a bijection
  // Hom_D(Fc, d) -> Hom_C(c, Gd) for every pair (c, d).
  std::vector<std::pair<std::string, std::vector<std::string>>> slots;
  for (const auto& c : C.objects) {
    auto opts = C.hom(c, G.on_object(F.on_object(c)));
    if (opts.empty()) {
      // No unit can exist; produce a hom-set count witness if there is one.
      break;
    }
    slots.push_back({c, std::move(opts)});
  }
  bool found = false;
  if (slots.size() == C.objects.size()) {
    for_each_assignment(slots, [&](const std::map<std::string, std::string>& eta) {
      // eta must be natural: GF(f) . eta_c = eta_c' . f
      for (const auto& f : C.morphisms) {
        if (C.compose(G.on_morphism(F.on_morphism(f.id)), eta.at(f.src)) !=
            C.compose(eta.at(f.dst), f.id))
          return true;
      }
      for (const auto& c : C.objects)
        for (const auto& d : D.objects) {
          auto src = D.hom(F.on_object(c), d);
          auto dst = C.hom(c, G.on_object(d));
          if (src.size() != dst.size()) return true;
          std::vector<std::string> image;
          for (const auto& g : src)
            image.push_back(C.compose(G.on_morphism(g), eta.at(c)));
          std::sort(image.begin(), image.end());
          if (std::adjacent_find(image.begin(), image.end()) != image.end())
            return true;  // not injective
          auto sorted_dst = dst;
          std::sort(sorted_dst.begin(), sorted_dst.end());
          if (image != sorted_dst) return true;  // not surjective onto hom
        }
      found = true;
      return false;  // stop: adjunction established
    });
  }
  if (found) return {true, ""};
  for (const auto& c : C.objects)
    for (const auto& d : D.objects) {
      auto ls = D.hom(F.on_object(c), d).size();
      auto rs = C.hom(c, G.on_object(d)).size();
      if (ls != rs)
        return {false, "hom-set mismatch at (" + c + ", " + d + "): |Hom(F" +
                           c + "," + d + ")| = " + std::to_string(ls) +
                           " vs |Hom(" + c + ",G" + d +
                           ")| = " + std::to_string(rs)};
    }
  return {false, "hom-set cardinalities match but no natural unit exists"};
}

}  // namespace

Verdict check_adjunction(const FunctorData& F, const FunctorData& G,
                         AdjunctionMode mode, const NatTransData* unit,
                         const NatTransData* counit) {
  if (*F.dom != *G.cod || *F.cod != *G.dom)
    throw Error("check_adjunction: F and G are not opposed");
  if (mode == AdjunctionMode::Triangle) {
    if (!unit || !counit)
      throw Error("check_adjunction: triangle mode needs unit and counit");
    return check_triangles(F, G, *unit, *counit);
  }
  return check_homset(F, G);
}

Verdict check_equivalence(const FunctorData& F) {
  const auto& C = *F.dom;
  const auto& D = *F.cod;
  for (const auto& x : C.objects)
    for (const auto& y : C.objects) {
      auto domhom = C.hom(x, y);
      std::vector<std::string> image;
      for (const auto& m : domhom) image.push_back(F.on_morphism(m));
      auto sorted = image;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        // locate the collapsing pair
        for (std::size_t i = 0; i < domhom.size(); ++i)
          for (std::size_t j = i + 1; j < domhom.size(); ++j)
            if (image[i] == image[j])
              return {false, "not faithful: " + domhom[i] + " and " +
                                 domhom[j] + " both map to " + image[i]};
      }
      auto codhom = D.hom(F.on_object(x), F.on_object(y));
      if (codhom.size() != domhom.size()) {
        for (const auto& g : codhom)
          if (std::find(image.begin(), image.end(), g) == image.end())
            return {false, "not full: " + g + " has no preimage in Hom(" + x +
                               "," + y + ")"};
      }
    }
  for (const auto& d : D.objects) {
    bool hit = false;
    for (const auto& c : C.objects)
      if (D.objects_isomorphic(F.on_object(c), d)) {
        hit = true;
        break;
      }
    if (!hit)
      return {false, "not essentially surjective: no object maps onto " + d};
  }
  return {true, ""};
}

// ---------------------------------------------------------------------------
// Isomorphism search

namespace {

// Degree profile used to prune object matching: sorted multiset of
// (|hom(x,y)|, |hom(y,x)|) over all y is invariant under isomorphism only
// in aggregate; we use in/out totals plus endo-hom size.
struct ObjProfile {
  std::size_t out = 0, in = 0, endo = 0;
  bool operator==(const ObjProfile&) const = default;
};

ObjProfile profile(const FinCategory& c, const std::string& x) {
  ObjProfile p;
  p.out = c.from(x).size();
  p.in = c.into(x).size();
  p.endo = c.hom(x, x).size();
  return p;
}

bool extend_morphisms(const FinCategory& A, const FinCategory& B,
                      FunctorData& F) {
  // With the object bijection fixed, match morphisms hom-set by hom-set.
  F.mmap.clear();
  // Backtracking over each hom-set independently is not sound (composition
  // couples them), so do a global backtracking over all morphisms.
  std::vector<std::string> ms;
  for (const auto& m : A.morphisms) ms.push_back(m.id);
  std::map<std::string, bool> used;  // morphisms of B already taken
  for (const auto& m : B.morphisms) used[m.id] = false;

  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == ms.size()) {
      // Verify full functoriality (identities/composition).
      for (const auto& o : A.objects)
        if (F.mmap.at(A.identity(o)) != B.identity(F.omap.at(o))) return false;
      for (const auto& f : A.morphisms)
        for (const auto& g : A.morphisms) {
          if (f.dst != g.src) continue;
          if (F.mmap.at(A.compose(g.id, f.id)) !=
              B.compose(F.mmap.at(g.id), F.mmap.at(f.id)))
            return false;
        }
      return true;
    }
    const auto& m = A.morphism(ms[i]);
    for (const auto& cand : B.hom(F.omap.at(m.src), F.omap.at(m.dst))) {
      if (used[cand]) continue;
      if (A.is_identity(m.id) && cand != B.identity(F.omap.at(m.src))) continue;
      F.mmap[m.id] = cand;
      used[cand] = true;
      // Early composition consistency check against already-assigned pairs.
      bool ok = true;
      for (std::size_t j = 0; j <= i && ok; ++j) {
        const auto& n = A.morphism(ms[j]);
        if (m.dst == n.src) {
          auto c = A.compose(n.id, m.id);
          auto cit = F.mmap.find(c);
          if (cit != F.mmap.end() &&
              cit->second != B.compose(F.mmap.at(n.id), F.mmap.at(m.id)))
            ok = false;
        }
        if (ok && n.dst == m.src) {
          auto c = A.compose(m.id, n.id);
          auto cit = F.mmap.find(c);
          if (cit != F.mmap.end() &&
              cit->second != B.compose(F.mmap.at(m.id), F.mmap.at(n.id)))
            ok = false;
        }
      }
      if (ok && rec(i + 1)) return true;
      used[cand] = false;
      F.mmap.erase(m.id);
    }
    return false;
  };
  return rec(0);
}

}  // namespace

std::optional<FunctorData> find_isomorphism(const CatPtr& a, const CatPtr& b) {
  const auto& A = *a;
  const auto& B = *b;
  if (A.objects.size() != B.objects.size() ||
      A.morphisms.size() != B.morphisms.size())
    return std::nullopt;
  FunctorData F;
  F.name = "iso_" + A.name + "_" + B.name;
  F.dom = a;
  F.cod = b;
  std::map<std::string, bool> used;
  for (const auto& o : B.objects) used[o] = false;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == A.objects.size()) return extend_morphisms(A, B, F);
    const auto& x = A.objects[i];
    auto px = profile(A, x);
    for (const auto& y : B.objects) {
      if (used[y] || !(profile(B, y) == px)) continue;
      // hom-count consistency with already placed objects
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        const auto& x2 = A.objects[j];
        const auto& y2 = F.omap.at(x2);
        if (A.hom(x, x2).size() != B.hom(y, y2).size() ||
            A.hom(x2, x).size() != B.hom(y2, y).size())
          ok = false;
      }
      if (!ok) continue;
      F.omap[x] = y;
      used[y] = true;
      if (rec(i + 1)) return true;
      used[y] = false;
      F.omap.erase(x);
    }
    return false;
  };
  if (rec(0)) return F;
  return std::nullopt;
}

}  // namespace fibalg
