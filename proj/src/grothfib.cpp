#include "fibalg/grothfib.hpp"

#include <algorithm>
#include <functional>

namespace fibalg {

bool is_co_flavor(TotalFlavor f) {
  return f == TotalFlavor::coAlg || f == TotalFlavor::coEM ||
         f == TotalFlavor::coKl;
}

std::string flavor_name(TotalFlavor f) {
  switch (f) {
    case TotalFlavor::Alg: return "alg";
    case TotalFlavor::EM: return "em";
    case TotalFlavor::Kl: return "kl";
    case TotalFlavor::coAlg: return "coalg";
    case TotalFlavor::coEM: return "coem";
    case TotalFlavor::coKl: return "cokl";
  }
  return "?";
}

namespace {

TotalFlavor primal_of(TotalFlavor f) {
  switch (f) {
    case TotalFlavor::coAlg: return TotalFlavor::Alg;
    case TotalFlavor::coEM: return TotalFlavor::EM;
    case TotalFlavor::coKl: return TotalFlavor::Kl;
    default: return f;
  }
}

}  // namespace

std::string alg_object_id(const AlgebraObject& a) {
  if (a.xi.empty()) return a.param + "__" + a.carrier;
  return a.param + "__" + a.carrier + "__" + a.xi;
}

std::string total_morphism_id(const std::string& src, const std::string& dst,
                              const std::string& f, const std::string& g) {
  return src + "____" + dst + "____" + f + "____" + g;
}

namespace {

// Dualize a primal total category built over opposite presentations.
TotalCategory dualize_total(TotalCategory prim, TotalFlavor co) {
  TotalCategory t;
  t.cat = opposite(prim.cat);
  t.base = opposite(prim.base);
  t.carriers = prim.carriers ? opposite(prim.carriers) : nullptr;
  t.p = prim.p;
  t.p.name = prim.p.name + "_op";
  t.p.dom = t.cat;
  t.p.cod = t.base;
  if (prim.V) {
    t.V = *prim.V;
    t.V->name = prim.V->name + "_op";
    t.V->dom = t.cat;
    t.V->cod = t.carriers;
  }
  t.flavor = co;
  t.payload = std::move(prim.payload);
  t.mor_payload = std::move(prim.mor_payload);
  return t;
}

struct AlgLike {
  std::vector<AlgebraObject> objs;
};

// Shared EM/Alg total builder; `laws` filters algebra objects and
// `square(a, b, f, g)` is the structure-compatibility condition.
TotalCategory build_alg_like(
    const std::string& name, const CatPtr& base, const CatPtr& carriers,
    TotalFlavor flavor,
    const std::function<std::vector<AlgebraObject>(const std::string&)>& algs,
    const std::function<bool(const AlgebraObject&, const AlgebraObject&,
                             const std::string&, const std::string&)>& square) {
  FinCategory cat;
  cat.name = name;
  TotalCategory t;
  std::vector<AlgebraObject> objs;
  for (const auto& a : base->objects)
    for (const auto& al : algs(a)) {
      auto id = alg_object_id(al);
      cat.objects.push_back(id);
      t.payload[id] = al;
      objs.push_back(al);
    }
  for (const auto& a : objs)
    for (const auto& b : objs) {
      auto sid = alg_object_id(a);
      auto did = alg_object_id(b);
      for (const auto& f : base->hom(a.param, b.param))
        for (const auto& g : carriers->hom(a.carrier, b.carrier)) {
          if (!square(a, b, f, g)) continue;
          auto mid = total_morphism_id(sid, did, f, g);
          cat.morphisms.push_back({mid, sid, did});
          t.mor_payload[mid] = {f, g};
          if (sid == did && f == base->identity(a.param) &&
              g == carriers->identity(a.carrier))
            cat.identities[sid] = mid;
        }
    }
  for (const auto& m1 : cat.morphisms)
    for (const auto& m2 : cat.morphisms) {
      if (m1.dst != m2.src) continue;
      const auto& [f1, g1] = t.mor_payload.at(m1.id);
      const auto& [f2, g2] = t.mor_payload.at(m2.id);
      cat.composition[{m2.id, m1.id}] = total_morphism_id(
          m1.src, m2.dst, base->compose(f2, f1), carriers->compose(g2, g1));
    }
  check_size_guard(cat);
  t.cat = make_cat(std::move(cat));
  t.base = base;
  t.carriers = carriers;
  t.flavor = flavor;
  t.p.name = "p_" + name;
  t.p.dom = t.cat;
  t.p.cod = base;
  FunctorData V;
  V.name = "V_" + name;
  V.dom = t.cat;
  V.cod = carriers;
  for (const auto& [id, al] : t.payload) {
    t.p.omap[id] = al.param;
    V.omap[id] = al.carrier;
  }
  for (const auto& [id, fg] : t.mor_payload) {
    t.p.mmap[id] = fg.first;
    V.mmap[id] = fg.second;
  }
  t.V = std::move(V);
  return t;
}

TotalCategory build_kleisli_total(const ParamMonadData& P) {
  const auto& A = *P.params;
  const auto& X = *P.carriers;
  FinCategory cat;
  cat.name = "kl_total_" + P.name;
  TotalCategory t;
  for (const auto& a : A.objects)
    for (const auto& x : X.objects) {
      AlgebraObject al{a, x, ""};
      auto id = alg_object_id(al);
      cat.objects.push_back(id);
      t.payload[id] = al;
    }
  for (const auto& [sid, a] : t.payload)
    for (const auto& [did, b] : t.payload)
      for (const auto& f : A.hom(a.param, b.param))
        for (const auto& g :
             X.hom(a.carrier, P.per_object.at(b.param).T.on_object(b.carrier))) {
          auto mid = total_morphism_id(sid, did, f, g);
          cat.morphisms.push_back({mid, sid, did});
          t.mor_payload[mid] = {f, g};
          if (sid == did && f == A.identity(a.param) &&
              g == P.per_object.at(a.param).eta.at(a.carrier))
            cat.identities[sid] = mid;
        }
  for (const auto& m1 : cat.morphisms)
    for (const auto& m2 : cat.morphisms) {
      if (m1.dst != m2.src) continue;
      const auto& [u, f] = t.mor_payload.at(m1.id);   // (A,X) -> (A', Y)
      const auto& [u2, f2] = t.mor_payload.at(m2.id);  // (A',Y) -> (A'', Z)
      const auto& z = t.payload.at(m2.dst);
      const auto& T2 = P.per_object.at(z.param);
      // mu^{A''}_Z . T_{A''}(f2) . (T_{u2})_Y . f
      auto comp = X.compose(
          T2.mu.at(z.carrier),
          X.compose(T2.T.on_morphism(f2),
                    X.compose(P.per_morphism.at(u2).at(
                                  t.payload.at(m1.dst).carrier),
                              f)));
      cat.composition[{m2.id, m1.id}] =
          total_morphism_id(m1.src, m2.dst, A.compose(u2, u), comp);
    }
  check_size_guard(cat);
  t.cat = make_cat(std::move(cat));
  t.base = P.params;
  t.carriers = P.carriers;
  t.flavor = TotalFlavor::Kl;
  t.p.name = "p_kl_" + P.name;
  t.p.dom = t.cat;
  t.p.cod = P.params;
  for (const auto& [id, al] : t.payload) t.p.omap[id] = al.param;
  for (const auto& [id, fg] : t.mor_payload) t.p.mmap[id] = fg.first;
  return t;
}

}  // namespace

TotalCategory build_total(const ParamMonadData& P, TotalFlavor flavor) {
  if (is_co_flavor(flavor))
    return dualize_total(build_total(P, primal_of(flavor)), flavor);
  if (flavor == TotalFlavor::Kl) return build_kleisli_total(P);
  const auto& X = *P.carriers;
  auto square = [&](const AlgebraObject& a, const AlgebraObject& b,
                    const std::string& f, const std::string& g) {
    // theta . (T_f)_Y . T_A(g) = g . xi
    auto lhs = X.compose(
        b.xi, X.compose(P.per_morphism.at(f).at(b.carrier),
                        P.per_object.at(a.param).T.on_morphism(g)));
    return lhs == X.compose(g, a.xi);
  };
  AlgFlavor af =
      flavor == TotalFlavor::EM ? AlgFlavor::EM : AlgFlavor::Alg;
  return build_alg_like(
      flavor_name(flavor) + "_total_" + P.name, P.params, P.carriers, flavor,
      [&](const std::string& a) { return enumerate_algebras(P, a, af); },
      square);
}

TotalCategory build_total(const ParamEndofunctorData& P, TotalFlavor flavor) {
  if (is_co_flavor(flavor))
    return dualize_total(build_total(P, primal_of(flavor)), flavor);
  if (flavor != TotalFlavor::Alg)
    throw Error("build_total: endofunctor data only supports Alg/coAlg");
  const auto& X = *P.carriers;
  auto square = [&](const AlgebraObject& a, const AlgebraObject& b,
                    const std::string& f, const std::string& g) {
    auto lhs = X.compose(
        b.xi, X.compose(P.per_morphism.at(f).at(b.carrier),
                        P.per_object.at(a.param).on_morphism(g)));
    return lhs == X.compose(g, a.xi);
  };
  return build_alg_like(
      "alg_total_" + P.name, P.params, P.carriers, flavor,
      [&](const std::string& a) { return enumerate_algebras(P, a); }, square);
}

AlgebraObject reindex(const ParamMonadData& P, const std::string& f,
                      const AlgebraObject& a) {
  if (a.param != P.params->dst(f))
    throw Error("reindex: algebra not over the codomain of " + f);
  if (!check_algebra(P, a).ok())
    throw Error("reindex: input fails the algebra laws");
  AlgebraObject out;
  out.param = P.params->src(f);
  out.carrier = a.carrier;
  out.xi = P.carriers->compose(a.xi, P.per_morphism.at(f).at(a.carrier));
  return out;
}

FibrationCheck verify_fibration(const TotalCategory& t, Variance variance) {
  if (variance == Variance::Opfibration) {
    TotalCategory op;
    op.cat = opposite(t.cat);
    op.base = opposite(t.base);
    op.p = t.p;
    op.p.dom = op.cat;
    op.p.cod = op.base;
    op.flavor = t.flavor;
    return verify_fibration(op, Variance::Fibration);
  }
  const auto& E = *t.cat;
  const auto& B = *t.base;
  const auto& p = t.p;
  FibrationCheck out;
  out.verdict.holds = true;
  for (const auto& f : B.morphisms) {
    for (const auto& e1 : E.objects) {
      if (p.on_object(e1) != f.dst) continue;
      std::optional<std::string> lift;
      for (const auto& m : E.into(e1)) {
        if (p.on_morphism(m) != f.id) continue;
        // cartesian test
        bool cartesian = true;
        const auto& e0 = E.src(m);
        for (const auto& m2 : E.into(e1)) {
          for (const auto& w : B.hom(p.on_object(E.src(m2)), f.src)) {
            if (B.compose(f.id, w) != p.on_morphism(m2)) continue;
            int count = 0;
            for (const auto& h : E.hom(E.src(m2), e0))
              if (p.on_morphism(h) == w && E.compose(m, h) == m2) ++count;
            if (count != 1) {
              cartesian = false;
              break;
            }
          }
          if (!cartesian) break;
        }
        if (cartesian) {
          // prefer the identity lift over identity base morphisms so the
          // cleavage is split on identities
          if (B.is_identity(f.id) && m == E.identity(e1)) {
            lift = m;
            break;
          }
          if (!lift) lift = m;
        }
      }
      if (B.is_identity(f.id)) lift = E.identity(e1);
      if (!lift) {
        out.verdict.holds = false;
        if (out.verdict.witness.empty())
          out.verdict.witness =
              "no cartesian lift over " + f.id + " at " + e1;
        continue;
      }
      out.cleavage[{f.id, e1}] = *lift;
    }
  }
  return out;
}

HatComparison em_hat_comparison(const ParamMonadData& P) {
  auto total = build_total(P, TotalFlavor::EM);
  auto prod = hat_base(P);
  auto hm = hat(P, prod);
  HatComparison out;
  out.em_hat = em_category(hm);
  auto emcat = make_cat(out.em_hat.cat);

  FunctorData F;
  F.name = "em_hat_cmp_" + P.name;
  F.dom = total.cat;
  F.cod = emcat;
  auto em_obj = [&](const AlgebraObject& a) {
    return pair_object_id(a.param, a.carrier) + "__" +
           pair_morphism_id(P.params->identity(a.param), a.xi);
  };
  for (const auto& [id, a] : total.payload) F.omap[id] = em_obj(a);
  for (const auto& [id, fg] : total.mor_payload) {
    const auto& m = total.cat->morphism(id);
    F.mmap[id] = F.omap.at(m.src) + "__" + F.omap.at(m.dst) + "__" +
                 pair_morphism_id(fg.first, fg.second);
  }
  if (auto lr = F.validate(); !lr.ok()) {
    out.comparison = F;
    out.equivalence = {false, "comparison is not a functor: " + lr.summary()};
    return out;
  }
  out.comparison = F;
  out.equivalence = check_equivalence(F);

  // projection triangle: pi_A . comparison = p
  FunctorData proj;
  proj.name = "pi_base";
  proj.dom = emcat;
  proj.cod = P.params;
  for (const auto& [id, px] : out.em_hat.payload)
    proj.omap[id] = split_pair_id(px.first).first;
  for (const auto& [id, g] : out.em_hat.mor_payload)
    proj.mmap[id] = split_pair_id(g).first;
  out.triangle = compose_functors(proj, F).same_action(total.p);
  return out;
}

namespace {

LawReport check_oplax_shape(const OplaxCell& c, const CatPtr& pparams,
                            const CatPtr& pcarriers,
                            const std::function<const FunctorData&(const std::string&)>& PF,
                            const std::function<const NatTransData&(const std::string&)>& Pf,
                            const std::function<const FunctorData&(const std::string&)>& QF,
                            const std::function<const NatTransData&(const std::string&)>& Qf) {
  LawReport r;
  const auto& A = *pparams;
  const auto& X = *pcarriers;
  const auto& Y = *c.V.cod;
  auto d = [&](const std::string& a, const std::string& x) -> const std::string& {
    auto it = c.delta.find(pair_object_id(a, x));
    if (it == c.delta.end()) throw Error("oplax cell: missing delta at (" + a + ", " + x + ")");
    return it->second;
  };
  for (const auto& a : A.objects)
    for (const auto& x : X.objects) {
      auto it = c.delta.find(pair_object_id(a, x));
      if (it == c.delta.end()) {
        r.add(Violation::Kind::Structural, "delta component missing",
              a + ", " + x);
        continue;
      }
      const auto& m = Y.morphism(it->second);
      if (m.src != QF(c.U.on_object(a)).on_object(c.V.on_object(x)) ||
          m.dst != c.V.on_object(PF(a).on_object(x)))
        r.add(Violation::Kind::Law, "delta component typing", a + ", " + x);
    }
  if (!r.ok()) return r;
  for (const auto& a : A.objects)
    for (const auto& g : X.morphisms) {
      // V(F_A g) . delta_{A, src g} = delta_{A, dst g} . S_{UA}(V g)
      auto lhs = Y.compose(c.V.on_morphism(PF(a).on_morphism(g.id)),
                           d(a, g.src));
      auto rhs = Y.compose(
          d(a, g.dst),
          QF(c.U.on_object(a)).on_morphism(c.V.on_morphism(g.id)));
      if (lhs != rhs)
        r.add(Violation::Kind::Law, "delta naturality in the carrier",
              a + ", " + g.id);
    }
  for (const auto& f : A.morphisms)
    for (const auto& x : X.objects) {
      // V((F_f)_x) . delta_{src f, x} = delta_{dst f, x} . (S_{Uf})_{Vx}
      auto lhs = Y.compose(c.V.on_morphism(Pf(f.id).at(x)), d(f.src, x));
      auto rhs = Y.compose(d(f.dst, x),
                           Qf(c.U.on_morphism(f.id)).at(c.V.on_object(x)));
      if (lhs != rhs)
        r.add(Violation::Kind::Law, "delta naturality in the parameter",
              f.id + ", " + x);
    }
  return r;
}

}  // namespace

LawReport check_oplax_cell(const OplaxCell& c, const ParamEndofunctorData& P,
                           const ParamEndofunctorData& Q) {
  return check_oplax_shape(
      c, P.params, P.carriers,
      [&](const std::string& a) -> const FunctorData& { return P.per_object.at(a); },
      [&](const std::string& f) -> const NatTransData& { return P.per_morphism.at(f); },
      [&](const std::string& b) -> const FunctorData& { return Q.per_object.at(b); },
      [&](const std::string& g) -> const NatTransData& { return Q.per_morphism.at(g); });
}

LawReport check_oplax_cell(const OplaxCell& c, const ParamMonadData& P,
                           const ParamMonadData& Q) {
  auto r = check_oplax_cell(c, P.underlying(), Q.underlying());
  if (!r.ok() || !c.monad_flavored) return r;
  const auto& Y = *c.V.cod;
  for (const auto& a : P.params->objects)
    for (const auto& x : P.carriers->objects) {
      const auto& d = c.delta.at(pair_object_id(a, x));
      const auto& TA = P.per_object.at(a);
      const auto& SU = Q.per_object.at(c.U.on_object(a));
      auto vx = c.V.on_object(x);
      // delta . eta^{S_UA}_{Vx} = V(eta^{T_A}_x)
      if (Y.compose(d, SU.eta.at(vx)) != c.V.on_morphism(TA.eta.at(x)))
        r.add(Violation::Kind::Law, "oplax unit pasting", a + ", " + x);
      // delta . mu^{S_UA}_{Vx} = V(mu^{T_A}_x) . delta_{A, T_A x} . S_UA(delta)
      auto lhs = Y.compose(d, SU.mu.at(vx));
      auto rhs = Y.compose(
          c.V.on_morphism(TA.mu.at(x)),
          Y.compose(c.delta.at(pair_object_id(a, TA.T.on_object(x))),
                    SU.T.on_morphism(d)));
      if (lhs != rhs)
        r.add(Violation::Kind::Law, "oplax multiplication pasting",
              a + ", " + x);
    }
  return r;
}

FunctorData map_total(const OplaxCell& c, const TotalCategory& src,
                      const TotalCategory& dst) {
  FunctorData F;
  F.name = "map_total";
  F.dom = src.cat;
  F.cod = dst.cat;
  const auto& Y = *dst.carriers;
  for (const auto& [id, a] : src.payload) {
    AlgebraObject b;
    b.param = c.U.on_object(a.param);
    b.carrier = c.V.on_object(a.carrier);
    b.xi = Y.compose(c.V.on_morphism(a.xi),
                     c.delta.at(pair_object_id(a.param, a.carrier)));
    F.omap[id] = alg_object_id(b);
  }
  for (const auto& [id, fg] : src.mor_payload) {
    const auto& m = src.cat->morphism(id);
    F.mmap[id] =
        total_morphism_id(F.omap.at(m.src), F.omap.at(m.dst),
                          c.U.on_morphism(fg.first), c.V.on_morphism(fg.second));
  }
  return F;
}

LawReport check_split(const SplitFibrationData& s) {
  LawReport r;
  for (const auto& a : s.base->objects) {
    auto it = s.fibre.find(a);
    if (it == s.fibre.end()) {
      r.add(Violation::Kind::Structural, "missing fibre", a);
      continue;
    }
    if (auto lr = it->second->validate(); !lr.ok())
      r.add(Violation::Kind::Law, "fibre category laws", a);
  }
  if (!r.ok()) return r;
  for (const auto& f : s.base->morphisms) {
    auto it = s.reindex_.find(f.id);
    if (it == s.reindex_.end()) {
      r.add(Violation::Kind::Structural, "missing reindexing functor", f.id);
      continue;
    }
    if (*it->second.dom != *s.fibre.at(f.dst) ||
        *it->second.cod != *s.fibre.at(f.src)) {
      r.add(Violation::Kind::Structural, "reindexing endpoints", f.id);
      continue;
    }
    if (auto lr = it->second.validate(); !lr.ok())
      r.add(Violation::Kind::Law, "reindexing functor laws", f.id);
  }
  if (!r.ok()) return r;
  for (const auto& a : s.base->objects)
    if (!s.reindex_.at(s.base->identity(a))
             .same_action(identity_functor(s.fibre.at(a))))
      r.add(Violation::Kind::Law, "split strictness on identities", a);
  for (const auto& f : s.base->morphisms)
    for (const auto& g : s.base->morphisms) {
      if (f.dst != g.src) continue;
      auto gf = s.base->compose(g.id, f.id);
      if (!s.reindex_.at(gf).same_action(compose_functors(
              s.reindex_.at(f.id), s.reindex_.at(g.id))))
        r.add(Violation::Kind::Law, "split strictness on composites",
              g.id + " . " + f.id);
    }
  return r;
}

TotalCategory grothendieck(const SplitFibrationData& s) {
  if (auto lr = check_split(s); !lr.ok())
    throw Error("grothendieck: invalid split data:\n" + lr.summary());
  const auto& B = *s.base;
  FinCategory cat;
  cat.name = "groth_" + s.name;
  TotalCategory t;
  for (const auto& a : B.objects)
    for (const auto& e : s.fibre.at(a)->objects) {
      auto id = pair_object_id(a, e);
      cat.objects.push_back(id);
      t.payload[id] = {a, e, ""};
    }
  for (const auto& [sid, ap] : t.payload)
    for (const auto& [did, bp] : t.payload)
      for (const auto& f : B.hom(ap.param, bp.param)) {
        const auto& fibA = *s.fibre.at(ap.param);
        auto target = s.reindex_.at(f).on_object(bp.carrier);
        for (const auto& g : fibA.hom(ap.carrier, target)) {
          auto mid = total_morphism_id(sid, did, f, g);
          cat.morphisms.push_back({mid, sid, did});
          t.mor_payload[mid] = {f, g};
          if (sid == did && f == B.identity(ap.param) &&
              g == fibA.identity(ap.carrier))
            cat.identities[sid] = mid;
        }
      }
  for (const auto& m1 : cat.morphisms)
    for (const auto& m2 : cat.morphisms) {
      if (m1.dst != m2.src) continue;
      const auto& [f1, g1] = t.mor_payload.at(m1.id);
      const auto& [f2, g2] = t.mor_payload.at(m2.id);
      const auto& A0 = t.payload.at(m1.src).param;
      auto comp = s.fibre.at(A0)->compose(s.reindex_.at(f1).on_morphism(g2), g1);
      cat.composition[{m2.id, m1.id}] =
          total_morphism_id(m1.src, m2.dst, B.compose(f2, f1), comp);
    }
  check_size_guard(cat);
  t.cat = make_cat(std::move(cat));
  t.base = s.base;
  t.carriers = nullptr;
  t.flavor = TotalFlavor::EM;  // flavor tag unused for split input
  t.p.name = "p_" + s.name;
  t.p.dom = t.cat;
  t.p.cod = s.base;
  for (const auto& [id, a] : t.payload) t.p.omap[id] = a.param;
  for (const auto& [id, fg] : t.mor_payload) t.p.mmap[id] = fg.first;
  return t;
}

namespace {

std::vector<FunctorData> all_endofunctors(const CatPtr& X) {
  const auto& C = *X;
  std::vector<FunctorData> out;
  std::vector<std::string> objs = C.objects;
  FunctorData cur;
  cur.dom = cur.cod = X;
  std::function<void(std::size_t)> rec_m = [&](std::size_t i) {
    if (i == C.morphisms.size()) {
      if (cur.validate().ok()) out.push_back(cur);
      return;
    }
    const auto& m = C.morphisms[i];
    for (const auto& g :
         C.hom(cur.omap.at(m.src), cur.omap.at(m.dst))) {
      cur.mmap[m.id] = g;
      rec_m(i + 1);
    }
    cur.mmap.erase(C.morphisms[i].id);
  };
  std::function<void(std::size_t)> rec_o = [&](std::size_t i) {
    if (i == objs.size()) {
      rec_m(0);
      return;
    }
    for (const auto& y : C.objects) {
      cur.omap[objs[i]] = y;
      rec_o(i + 1);
    }
    cur.omap.erase(objs[i]);
  };
  rec_o(0);
  return out;
}

std::vector<NatTransData> all_nats(const FunctorData& F, const FunctorData& G) {
  const auto& C = *F.cod;
  std::vector<NatTransData> out;
  NatTransData cur;
  cur.source = F;
  cur.target = G;
  const auto& objs = F.dom->objects;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == objs.size()) {
      if (cur.validate().ok()) out.push_back(cur);
      return;
    }
    for (const auto& m :
         C.hom(F.on_object(objs[i]), G.on_object(objs[i]))) {
      cur.components[objs[i]] = m;
      rec(i + 1);
    }
    cur.components.erase(objs[i]);
  };
  rec(0);
  return out;
}

}  // namespace

UniversalBase endofunctor_category(const CatPtr& X) {
  UniversalBase u;
  u.cat.name = "end_" + X->name;
  auto endos = all_endofunctors(X);
  for (std::size_t i = 0; i < endos.size(); ++i) {
    auto id = "F" + std::to_string(i);
    endos[i].name = id;
    u.cat.objects.push_back(id);
    u.endo[id] = endos[i];
  }
  // nat ids are deterministic: source object order, target object order,
  // component enumeration order
  std::map<std::pair<std::pair<std::string, std::string>,
                     std::map<std::string, std::string>>,
           std::string>
      lut;
  std::size_t k = 0;
  for (const auto& s : u.cat.objects)
    for (const auto& t : u.cat.objects)
      for (auto& n : all_nats(u.endo.at(s), u.endo.at(t))) {
        auto id = "n" + std::to_string(k++);
        n.name = id;
        u.cat.morphisms.push_back({id, s, t});
        lut[{{s, t}, n.components}] = id;
        u.nat[id] = n;
        if (s == t && n.same_components(identity_nat(u.endo.at(s))))
          u.cat.identities[s] = id;
      }
  for (const auto& m1 : u.cat.morphisms)
    for (const auto& m2 : u.cat.morphisms) {
      if (m1.dst != m2.src) continue;
      auto v = vertical_compose(u.nat.at(m2.id), u.nat.at(m1.id));
      u.cat.composition[{m2.id, m1.id}] =
          lut.at({{m1.src, m2.dst}, v.components});
    }
  check_size_guard(u.cat);
  return u;
}

UniversalBase monad_category(const CatPtr& X) {
  UniversalBase u;
  u.cat.name = "mnd_" + X->name;
  std::size_t k = 0;
  for (const auto& F : all_endofunctors(X)) {
    // enumerate (eta, mu) pairs making F a monad
    auto idf = identity_functor(X);
    for (auto& eta : all_nats(idf, F))
      for (auto& mu : all_nats(compose_functors(F, F), F)) {
        MonadData m;
        m.carrier = X;
        m.T = F;
        m.eta = eta;
        m.mu = mu;
        if (!check_monad(m).ok()) continue;
        auto id = "M" + std::to_string(k++);
        m.name = id;
        u.cat.objects.push_back(id);
        u.endo[id] = F;
        u.monad[id] = m;
      }
  }
  std::map<std::pair<std::pair<std::string, std::string>,
                     std::map<std::string, std::string>>,
           std::string>
      lut;
  std::size_t nk = 0;
  for (const auto& s : u.cat.objects)
    for (const auto& t : u.cat.objects)
      for (auto& n : all_nats(u.endo.at(s), u.endo.at(t))) {
        MonadMorphismData mm{u.monad.at(s), u.monad.at(t), n};
        if (!check_monad_morphism(mm).ok()) continue;
        auto id = "a" + std::to_string(nk++);
        n.name = id;
        u.cat.morphisms.push_back({id, s, t});
        lut[{{s, t}, n.components}] = id;
        u.nat[id] = n;
        if (s == t && n.same_components(identity_nat(u.endo.at(s))))
          u.cat.identities[s] = id;
      }
  for (const auto& m1 : u.cat.morphisms)
    for (const auto& m2 : u.cat.morphisms) {
      if (m1.dst != m2.src) continue;
      auto v = vertical_compose(u.nat.at(m2.id), u.nat.at(m1.id));
      u.cat.composition[{m2.id, m1.id}] =
          lut.at({{m1.src, m2.dst}, v.components});
    }
  check_size_guard(u.cat);
  return u;
}

TotalCategory universal_total(const CatPtr& X, TotalFlavor flavor,
                              bool opt_in) {
  if (!opt_in)
    throw Error("universal_total: combinatorial blowup; pass the opt-in flag");
  if (flavor == TotalFlavor::Alg) {
    auto u = endofunctor_category(X);
    ParamEndofunctorData P;
    P.name = "univ_" + X->name;
    P.params = make_cat(u.cat);
    P.carriers = X;
    P.per_object = u.endo;
    P.per_morphism = u.nat;
    return build_total(P, TotalFlavor::Alg);
  }
  if (flavor == TotalFlavor::EM) {
    auto u = monad_category(X);
    ParamMonadData P;
    P.name = "univ_mnd_" + X->name;
    P.params = make_cat(u.cat);
    P.carriers = X;
    P.per_object = u.monad;
    P.per_morphism = u.nat;
    return build_total(P, TotalFlavor::EM);
  }
  throw Error("universal_total: only Alg and EM flavors are materialized");
}

FunctorData classify(const ParamEndofunctorData& P, const UniversalBase& u) {
  FunctorData F;
  F.name = "classify_" + P.name;
  F.dom = P.params;
  F.cod = make_cat(u.cat);
  for (const auto& a : P.params->objects) {
    bool found = false;
    for (const auto& [id, e] : u.endo)
      if (u.monad.empty() && e.same_action(P.per_object.at(a))) {
        F.omap[a] = id;
        found = true;
        break;
      }
    if (!found)
      throw Error("classify: no universal object matches parameter " + a);
  }
  for (const auto& f : P.params->morphisms) {
    bool found = false;
    for (const auto& [id, n] : u.nat) {
      if (u.cat.src(id) != F.omap.at(f.src) ||
          u.cat.dst(id) != F.omap.at(f.dst))
        continue;
      if (n.same_components(P.per_morphism.at(f.id))) {
        F.mmap[f.id] = id;
        found = true;
        break;
      }
    }
    if (!found)
      throw Error("classify: no universal morphism matches " + f.id);
  }
  return F;
}

FunctorData classify(const ParamMonadData& P, const UniversalBase& u) {
  FunctorData F;
  F.name = "classify_" + P.name;
  F.dom = P.params;
  F.cod = make_cat(u.cat);
  for (const auto& a : P.params->objects) {
    bool found = false;
    for (const auto& [id, m] : u.monad)
      if (same_monad(m, P.per_object.at(a))) {
        F.omap[a] = id;
        found = true;
        break;
      }
    if (!found)
      throw Error("classify: no universal monad matches parameter " + a);
  }
  for (const auto& f : P.params->morphisms) {
    bool found = false;
    for (const auto& [id, n] : u.nat) {
      if (u.cat.src(id) != F.omap.at(f.src) ||
          u.cat.dst(id) != F.omap.at(f.dst))
        continue;
      if (n.same_components(P.per_morphism.at(f.id))) {
        F.mmap[f.id] = id;
        found = true;
        break;
      }
    }
    if (!found)
      throw Error("classify: no universal morphism matches " + f.id);
  }
  return F;
}

}  // namespace fibalg
