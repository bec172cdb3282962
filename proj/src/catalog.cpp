#include "fibalg/catalog.hpp"

namespace fibalg::cat {

FinCategory poset_cat(const std::string& name,
                      const std::vector<std::string>& elems, const Leq& leq) {
  FinCategory c;
  c.name = name;
  c.objects = elems;
  auto mid = [](const std::string& x, const std::string& y) {
    return x == y ? "id_" + x : "le_" + x + "_" + y;
  };
  for (const auto& x : elems)
    for (const auto& y : elems)
      if (leq(x, y)) c.morphisms.push_back({mid(x, y), x, y});
  for (const auto& x : elems) c.identities[x] = mid(x, x);
  for (const auto& x : elems)
    for (const auto& y : elems)
      for (const auto& z : elems)
        if (leq(x, y) && leq(y, z))
          c.composition[{mid(y, z), mid(x, y)}] = mid(x, z);
  return c;
}

FinCategory chain2() {
  return poset_cat("chain2", {"o0", "o1"},
                   [](const std::string& x, const std::string& y) {
                     return x <= y;
                   });
}

FinCategory chain3() {
  return poset_cat("chain3", {"o0", "o1", "o2"},
                   [](const std::string& x, const std::string& y) {
                     return x <= y;
                   });
}

FinCategory bool4() {
  auto rank = [](const std::string& x) -> int {
    if (x == "v0") return 0;
    if (x == "v1") return 3;
    return 1;
  };
  return poset_cat("bool4", {"v0", "va", "vb", "v1"},
                   [rank](const std::string& x, const std::string& y) {
                     if (x == y) return true;
                     return rank(x) < rank(y) && (rank(x) == 0 || rank(y) == 3);
                   });
}

FinCategory terminal_cat() {
  FinCategory c;
  c.name = "pt";
  c.objects = {"s"};
  c.morphisms = {{"id_s", "s", "s"}};
  c.identities = {{"s", "id_s"}};
  return c;
}

FinCategory discrete2() {
  FinCategory c;
  c.name = "disc2";
  c.objects = {"a", "b"};
  c.morphisms = {{"id_a", "a", "a"}, {"id_b", "b", "b"}};
  c.identities = {{"a", "id_a"}, {"b", "id_b"}};
  return c;
}

std::string chain_join(const std::string& x, const std::string& y) {
  return x < y ? y : x;
}

std::string bool4_join(const std::string& x, const std::string& y) {
  if (x == y) return x;
  if (x == "v0") return y;
  if (y == "v0") return x;
  return "v1";
}

std::string bool4_meet(const std::string& x, const std::string& y) {
  if (x == y) return x;
  if (x == "v1") return y;
  if (y == "v1") return x;
  return "v0";
}

ParamMonadData writer_param(const CatPtr& poset, const Join& join,
                            const std::string& name) {
  const auto& C = *poset;
  auto the = [&](const std::string& x, const std::string& y) {
    auto h = C.hom(x, y);
    if (h.size() != 1)
      throw Error("writer_param: expected a poset, hom(" + x + "," + y +
                  ") has " + std::to_string(h.size()) + " elements");
    return h[0];
  };
  ParamMonadData p;
  p.name = name;
  p.params = poset;
  p.carriers = poset;
  for (const auto& a : C.objects) {
    MonadData m;
    m.name = name + "_" + a;
    m.carrier = poset;
    m.T.name = "T_" + a;
    m.T.dom = m.T.cod = poset;
    for (const auto& x : C.objects) m.T.omap[x] = join(a, x);
    for (const auto& mo : C.morphisms)
      m.T.mmap[mo.id] = the(join(a, mo.src), join(a, mo.dst));
    m.eta.name = "eta_" + a;
    m.eta.source = identity_functor(poset);
    m.eta.target = m.T;
    m.mu.name = "mu_" + a;
    m.mu.source = compose_functors(m.T, m.T);
    m.mu.target = m.T;
    for (const auto& x : C.objects) {
      m.eta.components[x] = the(x, join(a, x));
      m.mu.components[x] = the(join(a, join(a, x)), join(a, x));
    }
    p.per_object[a] = std::move(m);
  }
  for (const auto& f : C.morphisms) {
    NatTransData n;
    n.name = "Tmor_" + f.id;
    n.source = p.per_object.at(f.src).T;
    n.target = p.per_object.at(f.dst).T;
    for (const auto& x : C.objects)
      n.components[x] = the(join(f.src, x), join(f.dst, x));
    p.per_morphism[f.id] = std::move(n);
  }
  return p;
}

ParamMonadData writer_chain3() {
  return writer_param(make_cat(chain3()), chain_join, "writer_chain3");
}

ParamMonadData semiauto_m2() {
  // join semilattice monoid on the 2-chain; A join - gives the monoid
  // semiautomata fixture (use TotalFlavor::Alg for plain semiautomata)
  return writer_param(make_cat(chain2()), chain_join, "semiauto_m2");
}

ParamMonadData coreader_bool4() {
  // In the opposite poset the meet becomes the join, so the coreader
  // comonad is the join-writer over bool4^op.
  auto op = opposite(make_cat(bool4()));
  return writer_param(op, bool4_meet, "coreader_bool4");
}

SplitFibrationData codomain2() {
  SplitFibrationData s;
  s.name = "codomain2";
  s.base = make_cat(chain2());

  // fibre over o0: the single arrow o0 -> o0
  FinCategory f0;
  f0.name = "slice_o0";
  f0.objects = {"a00"};
  f0.morphisms = {{"id_a00", "a00", "a00"}};
  f0.identities = {{"a00", "id_a00"}};
  s.fibre["o0"] = make_cat(f0);

  // fibre over o1: arrows o0 -> o1 and o1 -> o1 with the slice morphism
  FinCategory f1;
  f1.name = "slice_o1";
  f1.objects = {"a01", "a11"};
  f1.morphisms = {{"id_a01", "a01", "a01"},
                  {"id_a11", "a11", "a11"},
                  {"s01", "a01", "a11"}};
  f1.identities = {{"a01", "id_a01"}, {"a11", "id_a11"}};
  s.fibre["o1"] = make_cat(f1);

  s.reindex_["id_o0"] = identity_functor(s.fibre.at("o0"));
  s.reindex_["id_o1"] = identity_functor(s.fibre.at("o1"));
  // pullback along o0 -> o1 collapses both arrows to a00
  FunctorData r;
  r.name = "pb_le_o0_o1";
  r.dom = s.fibre.at("o1");
  r.cod = s.fibre.at("o0");
  r.omap = {{"a01", "a00"}, {"a11", "a00"}};
  r.mmap = {{"id_a01", "id_a00"}, {"id_a11", "id_a00"}, {"s01", "id_a00"}};
  s.reindex_["le_o0_o1"] = r;
  return s;
}

SplitFibrationData identity_fibration(const CatPtr& base,
                                      const std::string& name) {
  SplitFibrationData s;
  s.name = name;
  s.base = base;
  auto pt = make_cat(terminal_cat());
  for (const auto& a : base->objects) s.fibre[a] = pt;
  for (const auto& m : base->morphisms)
    s.reindex_[m.id] = identity_functor(pt);
  return s;
}

FinCategory split_epi() {
  FinCategory c;
  c.name = "splitepi";
  c.objects = {"s0", "s1"};
  c.morphisms = {{"id_s0", "s0", "s0"},
                 {"e", "s0", "s0"},  // e = s.r, idempotent
                 {"id_s1", "s1", "s1"},
                 {"r", "s0", "s1"},
                 {"s", "s1", "s0"}};
  c.identities = {{"s0", "id_s0"}, {"s1", "id_s1"}};
  c.composition = {{{"e", "e"}, "e"},   {{"r", "e"}, "r"}, {{"e", "s"}, "s"},
                   {{"r", "s"}, "id_s1"}, {{"s", "r"}, "e"}};
  return c;
}

TotalCategory points_splitepi() {
  auto se = make_cat(split_epi());
  auto u = endofunctor_category(se);
  TotalCategory t;
  t.cat = make_cat(u.cat);
  t.base = se;
  t.flavor = TotalFlavor::Alg;
  t.p.name = "ev1";
  t.p.dom = t.cat;
  t.p.cod = se;
  for (const auto& [id, f] : u.endo) t.p.omap[id] = f.on_object("s1");
  for (const auto& [id, n] : u.nat) t.p.mmap[id] = n.at("s1");
  return t;
}

FinGroup cyclic_group(int n, const std::string& name) {
  FinGroup g;
  g.name = name;
  for (int i = 0; i < n; ++i) g.elements.push_back("g" + std::to_string(i));
  g.unit = "g0";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g.mult[{g.elements[i], g.elements[j]}] = g.elements[(i + j) % n];
  for (int i = 0; i < n; ++i) g.inverse[g.elements[i]] = g.elements[(n - i) % n];
  return g;
}

FinGroup group_product(const FinGroup& a, const FinGroup& b) {
  FinGroup g;
  g.name = a.name + "x" + b.name;
  for (const auto& x : a.elements)
    for (const auto& y : b.elements) g.elements.push_back(pair_object_id(x, y));
  g.unit = pair_object_id(a.unit, b.unit);
  for (const auto& x1 : a.elements)
    for (const auto& y1 : b.elements)
      for (const auto& x2 : a.elements)
        for (const auto& y2 : b.elements)
          g.mult[{pair_object_id(x1, y1), pair_object_id(x2, y2)}] =
              pair_object_id(a.mul(x1, x2), b.mul(y1, y2));
  for (const auto& x : a.elements)
    for (const auto& y : b.elements)
      g.inverse[pair_object_id(x, y)] = pair_object_id(a.inv(x), b.inv(y));
  return g;
}

FinGroup dihedral(int n, const std::string& name) {
  // rotations r_i, reflections s_i = s_0 r_i, with s_0 r_i s_0 = r_{-i}
  FinGroup g;
  g.name = name;
  for (int i = 0; i < n; ++i) g.elements.push_back("r" + std::to_string(i));
  for (int i = 0; i < n; ++i) g.elements.push_back("s" + std::to_string(i));
  g.unit = "r0";
  auto rot = [](int i) { return "r" + std::to_string(i); };
  auto ref = [](int i) { return "s" + std::to_string(i); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      g.mult[{rot(i), rot(j)}] = rot((i + j) % n);
      g.mult[{ref(i), rot(j)}] = ref((i + j) % n);
      g.mult[{rot(i), ref(j)}] = ref(((j - i) % n + n) % n);
      g.mult[{ref(i), ref(j)}] = rot(((j - i) % n + n) % n);
    }
  for (int i = 0; i < n; ++i) {
    g.inverse[rot(i)] = rot((n - i) % n);
    g.inverse[ref(i)] = ref(i);
  }
  return g;
}

FinGroup z2() { return cyclic_group(2, "z2"); }
FinGroup z3() { return cyclic_group(3, "z3"); }
FinGroup z4() { return cyclic_group(4, "z4"); }
FinGroup z2z2() { return group_product(z2(), z2()); }
FinGroup s3() { return dihedral(3, "s3"); }
FinGroup d4() { return dihedral(4, "d4"); }

ActionAlgebra z2_on_z3_inversion() {
  ActionAlgebra a;
  a.name = "z2_on_z3_inv";
  auto h3 = z3();
  a.acting = z2();
  a.carrier = h3;
  for (const auto& h : h3.elements) {
    a.psi[{"g0", h}] = h;
    a.psi[{"g1", h}] = h3.inv(h);
  }
  return a;
}

}  // namespace fibalg::cat
