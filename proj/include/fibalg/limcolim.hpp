#pragma once

// Limits created in EM total categories, coproducts via the single-fibre
// reflexive-coequalizer recipe, the pushout-chain construction of free
// algebras over a transformation of endofunctors, and left adjoints to
// fibrewise reindexing.

#include "fibalg/grothfib.hpp"

namespace fibalg {

/// The fibre of the EM total over a single parameter: objects are algebras
/// over A, morphisms are carrier maps over id_A. Morphism ids coincide with
/// the ids used by build_total.
struct FibreCategory {
  FinCategory cat;
  std::map<std::string, AlgebraObject> payload;
  std::map<std::string, std::string> mor_payload;  // morphism -> carrier map
};
FibreCategory em_fibre(const ParamMonadData& P, const std::string& A);

/// Free algebra over A on carrier X: (T_A X, mu^A_X).
AlgebraObject free_algebra(const ParamMonadData& P, const std::string& A,
                           const std::string& X);

/// Limit of a diagram into an EM total, by the creation recipe: base limit,
/// reindex the diagram into the fibre over the base apex, fibre limit,
/// reassemble. Agrees with the direct brute-force limit up to isomorphism.
std::optional<Cone> limit_in_total(const TotalCategory& t,
                                   const ParamMonadData& P,
                                   const FunctorData& diagram);

struct LintonResult {
  AlgebraObject obj;       // the coproduct algebra, over the base coproduct
  std::string total_id;    // its object id in the total category
  std::string inj_left;    // coproduct injections as total morphisms
  std::string inj_right;
};

/// Coproduct of two EM total objects via base coproduct + free algebras +
/// fibre coequalizer of the canonical parallel pair.
std::optional<LintonResult> linton_coproduct(const TotalCategory& t,
                                             const ParamMonadData& P,
                                             const std::string& o1,
                                             const std::string& o2);

struct SwindleTrace {
  // chain[k] = (P_{k-1} with P_{-1} = the starting carrier, t_k)
  std::vector<std::pair<std::string, std::string>> chain;
  std::optional<std::size_t> stabilized_at;
  std::string carrier;  // result carrier when stabilized
  std::string xi;       // result structure map G(carrier) -> carrier
  std::string unit;     // starting carrier -> result carrier
  std::string error;    // nonempty when a pushout is missing / cap exceeded
};

/// Pushout chain turning an F-algebra (X, xi) into a G-algebra along
/// alpha : F => G; stabilization = consecutive link is an isomorphism.
SwindleTrace swindle_left_adjoint(const NatTransData& alpha,
                                  const std::string& X, const std::string& xi,
                                  std::size_t cap = 64);

struct FibreAdjoint {
  std::optional<FunctorData> left;  // em_fibre(src f) -> em_fibre(dst f)
  FunctorData reindexing;           // f^* on the same category objects
  std::map<std::string, std::string> unit;  // fibre object -> carrier unit map
  std::string witness;              // algebra without a universal arrow
};

/// Left adjoint to the reindexing f^* : em_fibre(dst f) -> em_fibre(src f),
/// by exhaustive universal-arrow search per algebra. The returned functors
/// share category pointers, so check_adjunction applies directly.
FibreAdjoint fibre_left_adjoint(const ParamMonadData& P, const std::string& f);

}  // namespace fibalg
