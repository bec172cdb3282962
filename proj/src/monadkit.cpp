#include "fibalg/monadkit.hpp"

#include <algorithm>

namespace fibalg {

MonadData identity_monad(const CatPtr& c) {
  MonadData m;
  m.name = "id_monad_" + c->name;
  m.carrier = c;
  m.T = identity_functor(c);
  m.eta = identity_nat(m.T);
  m.eta.name = "eta_" + m.name;
  m.mu = identity_nat(m.T);
  m.mu.name = "mu_" + m.name;
  m.mu.source = compose_functors(m.T, m.T);
  return m;
}

bool same_monad(const MonadData& a, const MonadData& b) {
  return a.T.same_action(b.T) && a.eta.same_components(b.eta) &&
         a.mu.same_components(b.mu);
}

LawReport check_monad(const MonadData& m) {
  LawReport r;
  if (auto lr = m.T.validate(); !lr.ok()) return lr;
  if (*m.T.dom != *m.carrier || *m.T.cod != *m.carrier) {
    r.add(Violation::Kind::Structural, "T is not an endofunctor on the carrier",
          m.name);
    return r;
  }
  if (!m.eta.source.same_action(identity_functor(m.carrier)) ||
      !m.eta.target.same_action(m.T)) {
    r.add(Violation::Kind::Structural, "eta shape (Id => T)", m.name);
    return r;
  }
  if (!m.mu.source.same_action(compose_functors(m.T, m.T)) ||
      !m.mu.target.same_action(m.T)) {
    r.add(Violation::Kind::Structural, "mu shape (T.T => T)", m.name);
    return r;
  }
  if (auto lr = m.eta.validate(); !lr.ok()) return lr;
  if (auto lr = m.mu.validate(); !lr.ok()) return lr;

  const auto& C = *m.carrier;
  for (const auto& x : C.objects) {
    auto tx = m.T.on_object(x);
    // mu . T eta = id_T
    if (C.compose(m.mu.at(x), m.T.on_morphism(m.eta.at(x))) != C.identity(tx))
      r.add(Violation::Kind::Law, "unit law mu . T eta", x);
    // mu . eta T = id_T
    if (C.compose(m.mu.at(x), m.eta.at(tx)) != C.identity(tx))
      r.add(Violation::Kind::Law, "unit law mu . eta T", x);
    // mu . T mu = mu . mu T
    if (C.compose(m.mu.at(x), m.T.on_morphism(m.mu.at(x))) !=
        C.compose(m.mu.at(x), m.mu.at(tx)))
      r.add(Violation::Kind::Law, "associativity", x);
  }
  return r;
}

LawReport check_monad_morphism(const MonadMorphismData& m) {
  LawReport r;
  if (*m.source.carrier != *m.target.carrier) {
    r.add(Violation::Kind::Structural, "carrier categories differ",
          m.alpha.name);
    return r;
  }
  if (!m.alpha.source.same_action(m.source.T) ||
      !m.alpha.target.same_action(m.target.T)) {
    r.add(Violation::Kind::Structural, "alpha shape (S => T)", m.alpha.name);
    return r;
  }
  if (auto lr = m.alpha.validate(); !lr.ok()) return lr;

  const auto& C = *m.source.carrier;
  const auto& S = m.source;
  const auto& T = m.target;
  for (const auto& x : C.objects) {
    // eta^T = alpha . eta^S
    if (C.compose(m.alpha.at(x), S.eta.at(x)) != T.eta.at(x))
      r.add(Violation::Kind::Law, "unit compatibility", x);
    // alpha . mu^S = mu^T . (alpha * alpha), with
    // (alpha * alpha)_X = alpha_{TX} . S(alpha_X)
    auto star = C.compose(m.alpha.at(T.T.on_object(x)),
                          S.T.on_morphism(m.alpha.at(x)));
    if (C.compose(m.alpha.at(x), S.mu.at(x)) != C.compose(T.mu.at(x), star))
      r.add(Violation::Kind::Law, "multiplication compatibility", x);
  }
  return r;
}

ParamEndofunctorData ParamMonadData::underlying() const {
  ParamEndofunctorData e;
  e.name = name;
  e.params = params;
  e.carriers = carriers;
  for (const auto& [a, m] : per_object) e.per_object[a] = m.T;
  e.per_morphism = per_morphism;
  return e;
}

namespace {

// Shared structural/strictness checks for the endofunctor layer.
LawReport check_param_shape(const ParamEndofunctorData& p) {
  LawReport r;
  for (const auto& a : p.params->objects) {
    auto it = p.per_object.find(a);
    if (it == p.per_object.end()) {
      r.add(Violation::Kind::Structural, "missing component functor", a);
      continue;
    }
    if (*it->second.dom != *p.carriers || *it->second.cod != *p.carriers) {
      r.add(Violation::Kind::Structural, "component not an endofunctor", a);
      continue;
    }
    if (auto lr = it->second.validate(); !lr.ok())
      r.add(Violation::Kind::Law, "component functor laws", a);
  }
  if (!r.ok()) return r;
  for (const auto& f : p.params->morphisms) {
    auto it = p.per_morphism.find(f.id);
    if (it == p.per_morphism.end()) {
      r.add(Violation::Kind::Structural, "missing component transformation",
            f.id);
      continue;
    }
    const auto& n = it->second;
    if (!n.source.same_action(p.per_object.at(f.src)) ||
        !n.target.same_action(p.per_object.at(f.dst))) {
      r.add(Violation::Kind::Structural, "component endpoints", f.id);
      continue;
    }
    if (auto lr = n.validate(); !lr.ok())
      r.add(Violation::Kind::Law, "component naturality", f.id);
  }
  if (!r.ok()) return r;
  // Strict functoriality into the functor category.
  for (const auto& a : p.params->objects) {
    if (!p.per_morphism.at(p.params->identity(a))
             .same_components(identity_nat(p.per_object.at(a))))
      r.add(Violation::Kind::Law, "strictness on identities", a);
  }
  for (const auto& f : p.params->morphisms)
    for (const auto& g : p.params->morphisms) {
      if (f.dst != g.src) continue;
      auto gf = p.params->compose(g.id, f.id);
      if (!p.per_morphism.at(gf).same_components(vertical_compose(
              p.per_morphism.at(g.id), p.per_morphism.at(f.id))))
        r.add(Violation::Kind::Law, "strictness on composites",
              g.id + " . " + f.id);
    }
  return r;
}

}  // namespace

LawReport check_param(const ParamEndofunctorData& p) {
  return check_param_shape(p);
}

LawReport check_param(const ParamMonadData& p) {
  LawReport r = check_param_shape(p.underlying());
  if (!r.ok()) return r;
  for (const auto& a : p.params->objects) {
    if (auto lr = check_monad(p.per_object.at(a)); !lr.ok())
      r.add(Violation::Kind::Law, "monad laws at parameter", a);
  }
  if (!r.ok()) return r;
  for (const auto& f : p.params->morphisms) {
    MonadMorphismData mm{p.per_object.at(f.src), p.per_object.at(f.dst),
                         p.per_morphism.at(f.id)};
    if (auto lr = check_monad_morphism(mm); !lr.ok())
      for (const auto& v : lr.violations)
        r.add(v.kind, "monad morphism at " + f.id + ": " + v.law, v.witness);
  }
  return r;
}

ParamMonadData constant_param_monad(const CatPtr& params,
                                    const CatPtr& carriers) {
  ParamMonadData p;
  p.name = "const_id_over_" + params->name;
  p.params = params;
  p.carriers = carriers;
  auto id_m = identity_monad(carriers);
  for (const auto& a : params->objects) p.per_object[a] = id_m;
  for (const auto& f : params->morphisms)
    p.per_morphism[f.id] = identity_nat(id_m.T);
  return p;
}

LawReport check_algebra(const ParamMonadData& p, const AlgebraObject& a) {
  LawReport r;
  const auto& m = p.per_object.at(a.param);
  const auto& C = *p.carriers;
  const auto& xi = C.morphism(a.xi);
  if (xi.src != m.T.on_object(a.carrier) || xi.dst != a.carrier) {
    r.add(Violation::Kind::Structural, "structure map typing", a.xi);
    return r;
  }
  if (C.compose(a.xi, m.eta.at(a.carrier)) != C.identity(a.carrier))
    r.add(Violation::Kind::Law, "algebra unit law", a.xi);
  if (C.compose(a.xi, m.T.on_morphism(a.xi)) !=
      C.compose(a.xi, m.mu.at(a.carrier)))
    r.add(Violation::Kind::Law, "algebra multiplication law", a.xi);
  return r;
}

std::vector<AlgebraObject> enumerate_algebras(const ParamEndofunctorData& p,
                                              const std::string& A) {
  std::vector<AlgebraObject> out;
  const auto& F = p.per_object.at(A);
  for (const auto& x : p.carriers->objects)
    for (const auto& xi : p.carriers->hom(F.on_object(x), x))
      out.push_back({A, x, xi});
  return out;
}

std::vector<AlgebraObject> enumerate_algebras(const ParamMonadData& p,
                                              const std::string& A,
                                              AlgFlavor flavor) {
  auto all = enumerate_algebras(p.underlying(), A);
  if (flavor == AlgFlavor::Alg) return all;
  std::vector<AlgebraObject> out;
  for (const auto& a : all)
    if (check_algebra(p, a).ok()) out.push_back(a);
  return out;
}

CatPtr hat_base(const ParamEndofunctorData& p) {
  auto prod = product(*p.params, *p.carriers);
  check_size_guard(prod);
  return make_cat(std::move(prod));
}

FunctorData hat(const ParamEndofunctorData& p, const CatPtr& prod) {
  FunctorData h;
  h.name = "hat_" + p.name;
  h.dom = h.cod = prod;
  for (const auto& a : p.params->objects)
    for (const auto& x : p.carriers->objects)
      h.omap[pair_object_id(a, x)] =
          pair_object_id(a, p.per_object.at(a).on_object(x));
  for (const auto& f : p.params->morphisms)
    for (const auto& g : p.carriers->morphisms) {
      // (f, g) |-> (f, (F_f)_{dst g} . F_{src f}(g))
      const auto& comp = p.carriers->compose(
          p.per_morphism.at(f.id).at(g.dst),
          p.per_object.at(f.src).on_morphism(g.id));
      h.mmap[pair_morphism_id(f.id, g.id)] = pair_morphism_id(f.id, comp);
    }
  return h;
}

MonadData hat(const ParamMonadData& p, const CatPtr& prod) {
  MonadData m;
  m.name = "hat_" + p.name;
  m.carrier = prod;
  m.T = hat(p.underlying(), prod);
  m.eta.name = "eta_" + m.name;
  m.eta.source = identity_functor(prod);
  m.eta.target = m.T;
  m.mu.name = "mu_" + m.name;
  m.mu.source = compose_functors(m.T, m.T);
  m.mu.target = m.T;
  for (const auto& a : p.params->objects) {
    const auto& id_a = p.params->identity(a);
    for (const auto& x : p.carriers->objects) {
      auto o = pair_object_id(a, x);
      m.eta.components[o] =
          pair_morphism_id(id_a, p.per_object.at(a).eta.at(x));
      m.mu.components[o] = pair_morphism_id(id_a, p.per_object.at(a).mu.at(x));
    }
  }
  return m;
}

std::string kleisli_morphism_id(const std::string& x, const std::string& y,
                                const std::string& f) {
  return "k__" + x + "__" + y + "__" + f;
}

FinCategory kleisli(const MonadData& m, KlFlavor flavor) {
  if (flavor == KlFlavor::coKl) {
    auto kl = kleisli(m, KlFlavor::Kl);
    auto out = opposite(kl);
    out.name = "cokl_" + m.name;
    return out;
  }
  const auto& C = *m.carrier;
  check_size_guard(C);
  FinCategory k;
  k.name = "kl_" + m.name;
  k.objects = C.objects;
  for (const auto& x : C.objects)
    for (const auto& y : C.objects)
      for (const auto& f : C.hom(x, m.T.on_object(y)))
        k.morphisms.push_back({kleisli_morphism_id(x, y, f), x, y});
  for (const auto& x : C.objects)
    k.identities[x] = kleisli_morphism_id(x, x, m.eta.at(x));
  for (const auto& mo : k.morphisms)
    for (const auto& no : k.morphisms) {
      if (mo.dst != no.src) continue;
      // no . mo with underlying f: X -> T Y, g: Y -> T Z:
      // mu_Z . T(g) . f
      auto f = mo.id.substr(("k__" + mo.src + "__" + mo.dst + "__").size());
      auto g = no.id.substr(("k__" + no.src + "__" + no.dst + "__").size());
      auto comp = C.compose(m.mu.at(no.dst),
                            C.compose(m.T.on_morphism(g), f));
      k.composition[{no.id, mo.id}] =
          kleisli_morphism_id(mo.src, no.dst, comp);
    }
  return k;
}

EmCategory em_category(const MonadData& m) {
  check_size_guard(*m.carrier);
  const auto& C = *m.carrier;
  EmCategory em;
  em.cat.name = "em_" + m.name;
  std::vector<std::pair<std::string, std::string>> algs;  // (X, xi)
  for (const auto& x : C.objects)
    for (const auto& xi : C.hom(m.T.on_object(x), x)) {
      if (C.compose(xi, m.eta.at(x)) != C.identity(x)) continue;
      if (C.compose(xi, m.T.on_morphism(xi)) != C.compose(xi, m.mu.at(x)))
        continue;
      algs.push_back({x, xi});
    }
  for (const auto& [x, xi] : algs) {
    auto id = x + "__" + xi;
    em.cat.objects.push_back(id);
    em.payload[id] = {x, xi};
  }
  for (const auto& [x, xi] : algs)
    for (const auto& [y, th] : algs) {
      auto sid = x + "__" + xi;
      auto did = y + "__" + th;
      for (const auto& g : C.hom(x, y)) {
        if (C.compose(th, m.T.on_morphism(g)) != C.compose(g, xi)) continue;
        auto mid = sid + "__" + did + "__" + g;
        em.cat.morphisms.push_back({mid, sid, did});
        em.mor_payload[mid] = g;
        if (sid == did && g == C.identity(x)) em.cat.identities[sid] = mid;
      }
    }
  for (const auto& mo : em.cat.morphisms)
    for (const auto& no : em.cat.morphisms) {
      if (mo.dst != no.src) continue;
      auto comp = C.compose(em.mor_payload.at(no.id), em.mor_payload.at(mo.id));
      em.cat.composition[{no.id, mo.id}] =
          mo.src + "__" + no.dst + "__" + comp;
    }
  return em;
}

}  // namespace fibalg
