#include "fibalg/recognize.hpp"

#include <algorithm>
#include <set>

namespace fibalg {

namespace {

// unique m : X -> Y with m.a = b and m.c = d
std::string mediate(const FinCategory& E, const std::string& X,
                    const std::string& Y, const std::string& a,
                    const std::string& b, const std::string& c,
                    const std::string& d) {
  std::optional<std::string> found;
  for (const auto& m : E.hom(X, Y))
    if (E.compose(m, a) == b && E.compose(m, c) == d) {
      if (found)
        throw Error("recognize: mediating morphism " + X + " -> " + Y +
                    " not unique");
      found = m;
    }
  if (!found)
    throw Error("recognize: mediating morphism " + X + " -> " + Y +
                " not found");
  return *found;
}

struct LeftAdj {
  bool ok = false;
  std::string witness;
  FunctorData F;                             // base -> total
  std::map<std::string, std::string> unit;   // A -> u_A : A -> p(F A)
};

// universal arrow from each base object into the projection
LeftAdj projection_left_adjoint(const TotalCategory& t) {
  const auto& E = *t.cat;
  const auto& B = *t.base;
  LeftAdj out;
  out.F.name = "p_L";
  out.F.dom = t.base;
  out.F.cod = t.cat;
  for (const auto& A : B.objects) {
    bool found = false;
    for (const auto& e : E.objects) {
      if (found) break;
      for (const auto& u : B.hom(A, t.p.on_object(e))) {
        bool universal = true;
        for (const auto& e2 : E.objects) {
          for (const auto& v : B.hom(A, t.p.on_object(e2))) {
            int count = 0;
            for (const auto& m : E.hom(e, e2))
              if (B.compose(t.p.on_morphism(m), u) == v) ++count;
            if (count != 1) {
              universal = false;
              break;
            }
          }
          if (!universal) break;
        }
        if (universal) {
          out.F.omap[A] = e;
          out.unit[A] = u;
          found = true;
          break;
        }
      }
    }
    if (!found) {
      out.witness = "no universal arrow from " + A + " into the projection";
      return out;
    }
  }
  for (const auto& f : B.morphisms) {
    std::optional<std::string> img;
    std::string want = B.compose(out.unit.at(f.dst), f.id);
    for (const auto& m : E.hom(out.F.omap.at(f.src), out.F.omap.at(f.dst)))
      if (B.compose(t.p.on_morphism(m), out.unit.at(f.src)) == want) {
        img = m;
        break;
      }
    if (!img) {
      out.witness = "left adjoint has no action on " + f.id;
      return out;
    }
    out.F.mmap[f.id] = *img;
  }
  out.ok = true;
  return out;
}

std::vector<std::string> fibre_objects(const TotalCategory& t,
                                       const std::string& A) {
  std::vector<std::string> out;
  for (const auto& o : t.cat->objects)
    if (t.p.on_object(o) == A) out.push_back(o);
  return out;
}

}  // namespace

InitialFibre initial_fibre(const TotalCategory& t) {
  auto init = find_extremal(*t.base).initial;
  if (!init) throw Error("initial_fibre: base has no initial object");
  auto fc = verify_fibration(t, Variance::Fibration);
  if (!fc.verdict.holds)
    throw Error("initial_fibre: not a fibration: " + fc.verdict.witness);

  InitialFibre out;
  auto objs = fibre_objects(t, *init);
  out.fibre = full_subcategory(*t.cat, objs, t.cat->name + "_fib0");
  CatPtr fibp = make_cat(out.fibre);

  out.i.name = "incl0";
  out.i.dom = fibp;
  out.i.cod = t.cat;
  for (const auto& o : fibp->objects) out.i.omap[o] = o;
  for (const auto& m : fibp->morphisms) out.i.mmap[m.id] = m.id;

  out.i_r.name = "kernel0";
  out.i_r.dom = t.cat;
  out.i_r.cod = fibp;
  for (const auto& e : t.cat->objects) {
    std::string u = t.base->hom(*init, t.p.on_object(e)).at(0);
    const auto& lift = fc.cleavage.at({u, e});
    out.i_r.omap[e] = t.cat->src(lift);
    out.counit[e] = lift;
  }
  for (const auto& m : t.cat->morphisms) {
    // factor m . counit(src) through the cartesian counit(dst) over id_0
    std::string want = t.cat->compose(m.id, out.counit.at(m.src));
    std::optional<std::string> img;
    for (const auto& h :
         fibp->hom(out.i_r.omap.at(m.src), out.i_r.omap.at(m.dst)))
      if (t.cat->compose(out.counit.at(m.dst), h) == want) {
        img = h;
        break;
      }
    if (!img) throw Error("initial_fibre: no factorization for " + m.id);
    out.i_r.mmap[m.id] = *img;
  }
  return out;
}

PrunedReport check_pruned(const TotalCategory& t) {
  PrunedReport r;
  auto ext = find_extremal(*t.base);
  r.has_initial_base = ext.initial.has_value();

  bool all_initials = true;
  for (const auto& A : t.base->objects) {
    auto fib = full_subcategory(*t.cat, fibre_objects(t, A), "fib_" + A);
    bool has = find_extremal(fib).initial.has_value();
    r.fibrewise_initials[A] = has;
    all_initials = all_initials && has;
  }

  auto la = projection_left_adjoint(t);
  if (la.ok) {
    r.p_left_adjoint = la.F;
    // full and faithful: f |-> p_L f is a bijection onto the image hom-set
    r.p_left_ff.holds = true;
    for (const auto& A : t.base->objects)
      for (const auto& B : t.base->objects) {
        std::set<std::string> images;
        for (const auto& f : t.base->hom(A, B))
          images.insert(la.F.on_morphism(f));
        auto target = t.cat->hom(la.F.on_object(A), la.F.on_object(B));
        if (images.size() != t.base->hom(A, B).size() ||
            images.size() != target.size()) {
          r.p_left_ff = {false, "p_L not fully faithful at (" + A + ", " + B + ")"};
        }
      }
  } else {
    r.p_left_ff = {false, la.witness};
  }

  bool all_coproducts = true;
  r.p_preserves_them.holds = true;
  if (r.has_initial_base && la.ok) {
    for (const auto& A : t.base->objects)
      for (const auto& e0 : fibre_objects(t, *ext.initial)) {
        auto co = coproduct(*t.cat, la.F.on_object(A), e0);
        std::string key = pair_object_id(A, e0);
        r.required_coproducts[key] = co.has_value();
        if (!co) {
          all_coproducts = false;
          continue;
        }
        if (!t.base->objects_isomorphic(t.p.on_object(co->apex), A))
          r.p_preserves_them = {false, "p image of " + key + " not iso " + A};
      }
  } else {
    all_coproducts = false;
  }

  r.fibrewise_terminals_preserved.holds = true;
  for (const auto& A : t.base->objects) {
    bool ok = false;
    for (const auto& cand : fibre_objects(t, A)) {
      bool universal = true;
      for (const auto& e : t.cat->objects) {
        for (const auto& v : t.base->hom(t.p.on_object(e), A)) {
          int count = 0;
          for (const auto& m : t.cat->hom(e, cand))
            if (t.p.on_morphism(m) == v) ++count;
          if (count != 1) {
            universal = false;
            break;
          }
        }
        if (!universal) break;
      }
      if (universal) {
        ok = true;
        break;
      }
    }
    if (!ok)
      r.fibrewise_terminals_preserved = {
          false, "no universal fibrewise terminal over " + A};
  }

  r.pruned = r.has_initial_base && all_initials && la.ok &&
             r.p_left_ff.holds && all_coproducts;
  return r;
}

Copair copair_left_adjoint(const TotalCategory& t) {
  auto pr = check_pruned(t);
  if (!pr.pruned) throw Error("copair_left_adjoint: fibration is not pruned");
  auto inf = initial_fibre(t);
  const auto& pl = *pr.p_left_adjoint;

  Copair out;
  out.prod = make_cat(product(*t.base, inf.fibre, "copair_dom"));

  std::map<std::string, CoconeResult> co;  // pair id -> chosen coproduct
  for (const auto& A : t.base->objects)
    for (const auto& e0 : inf.fibre.objects) {
      auto c = coproduct(*t.cat, pl.on_object(A), e0);
      if (!c) throw Error("copair_left_adjoint: missing coproduct");
      co[pair_object_id(A, e0)] = *c;
    }

  out.F.name = "copair";
  out.F.dom = out.prod;
  out.F.cod = t.cat;
  for (const auto& o : out.prod->objects) out.F.omap[o] = co.at(o).apex;
  for (const auto& m : out.prod->morphisms) {
    auto [f, g] = split_pair_id(m.id);
    const auto& s = co.at(m.src);
    const auto& d = co.at(m.dst);
    out.F.mmap[m.id] = mediate(*t.cat, s.apex, d.apex, s.legs[0],
                               t.cat->compose(d.legs[0], pl.on_morphism(f)),
                               s.legs[1], t.cat->compose(d.legs[1], g));
  }

  out.R.name = "p_and_kernel";
  out.R.dom = t.cat;
  out.R.cod = out.prod;
  for (const auto& e : t.cat->objects)
    out.R.omap[e] = pair_object_id(t.p.on_object(e), inf.i_r.on_object(e));
  for (const auto& m : t.cat->morphisms)
    out.R.mmap[m.id] =
        pair_morphism_id(t.p.on_morphism(m.id), inf.i_r.on_morphism(m.id));
  return out;
}

ParamMonadData induced_param_monad(const TotalCategory& t) {
  auto pr = check_pruned(t);
  if (!pr.pruned) throw Error("induced_param_monad: fibration is not pruned");
  auto inf = initial_fibre(t);
  const auto& pl = *pr.p_left_adjoint;
  CatPtr carriers = make_cat(inf.fibre);
  const auto& E = *t.cat;

  std::map<std::string, std::map<std::string, CoconeResult>> co;  // A -> E0 -> Q
  for (const auto& A : t.base->objects)
    for (const auto& e0 : carriers->objects) {
      auto c = coproduct(E, pl.on_object(A), e0);
      if (!c) throw Error("induced_param_monad: missing coproduct");
      co[A][e0] = *c;
    }

  ParamMonadData P;
  P.name = t.cat->name + "_Tp";
  P.params = t.base;
  P.carriers = carriers;

  for (const auto& A : t.base->objects) {
    MonadData m;
    m.name = "Tp_" + A;
    m.carrier = carriers;
    m.T.name = "Tp_" + A;
    m.T.dom = m.T.cod = carriers;
    for (const auto& e0 : carriers->objects)
      m.T.omap[e0] = inf.i_r.on_object(co.at(A).at(e0).apex);
    for (const auto& g : carriers->morphisms) {
      const auto& s = co.at(A).at(g.src);
      const auto& d = co.at(A).at(g.dst);
      m.T.mmap[g.id] =
          inf.i_r.on_morphism(mediate(E, s.apex, d.apex, s.legs[0], d.legs[0],
                                      s.legs[1], E.compose(d.legs[1], g.id)));
    }
    m.eta.name = "eta_" + A;
    m.eta.source = identity_functor(carriers);
    m.eta.target = m.T;
    for (const auto& e0 : carriers->objects)
      m.eta.components[e0] = inf.i_r.on_morphism(co.at(A).at(e0).legs[1]);
    m.mu.name = "mu_" + A;
    m.mu.source = compose_functors(m.T, m.T);
    m.mu.target = m.T;
    for (const auto& e0 : carriers->objects) {
      const auto& q = co.at(A).at(e0);
      const auto& q2 = co.at(A).at(m.T.on_object(e0));
      m.mu.components[e0] = inf.i_r.on_morphism(
          mediate(E, q2.apex, q.apex, q2.legs[0], q.legs[0], q2.legs[1],
                  inf.counit.at(q.apex)));
    }
    P.per_object[A] = std::move(m);
  }

  for (const auto& f : t.base->morphisms) {
    NatTransData n;
    n.name = "Tp_" + f.id;
    n.source = P.per_object.at(f.src).T;
    n.target = P.per_object.at(f.dst).T;
    for (const auto& e0 : carriers->objects) {
      const auto& s = co.at(f.src).at(e0);
      const auto& d = co.at(f.dst).at(e0);
      n.components[e0] = inf.i_r.on_morphism(
          mediate(E, s.apex, d.apex, s.legs[0],
                  E.compose(d.legs[0], pl.on_morphism(f.id)), s.legs[1],
                  d.legs[1]));
    }
    P.per_morphism[f.id] = std::move(n);
  }
  return P;
}

RecognitionResult comparison_unit(const TotalCategory& t) {
  RecognitionResult out;
  out.T_p = induced_param_monad(t);
  out.em = build_total(out.T_p, TotalFlavor::EM);

  auto inf = initial_fibre(t);
  auto la = projection_left_adjoint(t);
  const auto& E = *t.cat;
  const auto& B = *t.base;

  out.eta_p.name = "eta_p";
  out.eta_p.dom = t.cat;
  out.eta_p.cod = out.em.cat;
  for (const auto& e : E.objects) {
    const std::string& A = t.p.on_object(e);
    const std::string& X = inf.i_r.on_object(e);
    auto q = coproduct(E, la.F.on_object(A), X);
    if (!q) throw Error("comparison_unit: missing coproduct");
    // counit of p_L -| p at e: the arrow out of 0_A whose projection is id_A
    std::optional<std::string> n;
    for (const auto& m : E.hom(la.F.on_object(A), e))
      if (B.compose(t.p.on_morphism(m), la.unit.at(A)) == B.identity(A)) {
        n = m;
        break;
      }
    if (!n) throw Error("comparison_unit: no counit component at " + e);
    std::string xi = inf.i_r.on_morphism(
        mediate(E, q->apex, e, q->legs[0], *n, q->legs[1], inf.counit.at(e)));
    out.eta_p.omap[e] = alg_object_id({A, X, xi});
    if (!out.em.cat->has_object(out.eta_p.omap.at(e)))
      throw Error("comparison_unit: structure map at " + e +
                  " is not an algebra");
  }
  for (const auto& m : E.morphisms) {
    out.eta_p.mmap[m.id] = total_morphism_id(
        out.eta_p.omap.at(m.src), out.eta_p.omap.at(m.dst),
        t.p.on_morphism(m.id), inf.i_r.on_morphism(m.id));
    if (!out.em.cat->has_morphism(out.eta_p.mmap.at(m.id)))
      throw Error("comparison_unit: image of " + m.id +
                  " is not an algebra morphism");
  }
  out.triangle = compose_functors(out.em.p, out.eta_p).same_action(t.p);
  out.is_em = check_equivalence(out.eta_p);
  return out;
}

TotalCategory opposite_total(const TotalCategory& t) {
  TotalCategory o;
  o.cat = opposite(t.cat);
  o.base = opposite(t.base);
  if (t.carriers) o.carriers = opposite(t.carriers);
  o.p.name = t.p.name + "_op";
  o.p.dom = o.cat;
  o.p.cod = o.base;
  o.p.omap = t.p.omap;
  o.p.mmap = t.p.mmap;
  if (t.V) {
    FunctorData v;
    v.name = t.V->name + "_op";
    v.dom = o.cat;
    v.cod = o.carriers;
    v.omap = t.V->omap;
    v.mmap = t.V->mmap;
    o.V = std::move(v);
  }
  switch (t.flavor) {
    case TotalFlavor::Alg: o.flavor = TotalFlavor::coAlg; break;
    case TotalFlavor::EM: o.flavor = TotalFlavor::coEM; break;
    case TotalFlavor::Kl: o.flavor = TotalFlavor::coKl; break;
    case TotalFlavor::coAlg: o.flavor = TotalFlavor::Alg; break;
    case TotalFlavor::coEM: o.flavor = TotalFlavor::EM; break;
    case TotalFlavor::coKl: o.flavor = TotalFlavor::Kl; break;
  }
  o.payload = t.payload;
  o.mor_payload = t.mor_payload;
  return o;
}

RecognitionResult dualize(const TotalCategory& opfib) {
  return comparison_unit(opposite_total(opfib));
}

}  // namespace fibalg
