#pragma once

// Pruned-fibration analysis and Eilenberg-Moore recognition: the initial
// fibre and its adjoint kernel, the pruned checklist, the copairing left
// adjoint, the induced parametrized monad T^p, the comparison unit, and the
// dual pipeline for opfibrations of coalgebra type.

#include "fibalg/grothfib.hpp"

namespace fibalg {

struct InitialFibre {
  FinCategory fibre;  // full subcategory over the initial base object
  FunctorData i;      // inclusion into the total category
  FunctorData i_r;    // right adjoint: reindex along the unique 0 -> p(E)
  // E -> cartesian lift i(i_r E) -> E (the counit of i -| i_r)
  std::map<std::string, std::string> counit;
};

/// Requires an initial object in the base and a fibration structure; the
/// cleavage is the one found by verify_fibration (identity lifts over
/// identity base morphisms, so i_r . i is the identity on the nose).
InitialFibre initial_fibre(const TotalCategory& t);

struct PrunedReport {
  bool has_initial_base = false;
  std::map<std::string, bool> fibrewise_initials;  // per base object
  std::optional<FunctorData> p_left_adjoint;       // base -> total
  Verdict p_left_ff;                               // full and faithful
  // key pair_object_id(A, E0): the coproduct 0_A + E0 exists in the total
  std::map<std::string, bool> required_coproducts;
  Verdict p_preserves_them;  // p(0_A + E0) iso A in the base
  Verdict fibrewise_terminals_preserved;
  bool pruned = false;  // conjunction of the first four clauses
};

PrunedReport check_pruned(const TotalCategory& t);

struct Copair {
  CatPtr prod;     // base x initial fibre
  FunctorData F;   // (A, E0) |-> p_L A + i E0
  FunctorData R;   // E |-> (p E, i_r E), right adjoint to F
};

/// Requires check_pruned to pass; the adjunction F -| R is verified by the
/// caller via check_adjunction in homset mode.
Copair copair_left_adjoint(const TotalCategory& t);

/// The induced parametrized monad T^p_A(E0) = i_r(0_A + i E0) over the base,
/// with carriers the initial fibre; unit through the second coproduct
/// injection, multiplication through the counit and the fold map.
ParamMonadData induced_param_monad(const TotalCategory& t);

struct RecognitionResult {
  ParamMonadData T_p;
  TotalCategory em;      // EM total of T_p
  FunctorData eta_p;     // comparison functor total -> em
  bool triangle = false; // p^{T_p} . eta_p = p strictly
  Verdict is_em;         // eta_p an equivalence
};

RecognitionResult comparison_unit(const TotalCategory& t);

/// Generic dual: total/base/projection reversed, flavors swapped with their
/// co-counterparts, payloads carried over.
TotalCategory opposite_total(const TotalCategory& t);

/// Recognition for opfibrations of coalgebra type: run the primal pipeline on
/// the opposite total category; the result reads as a comonad S^p with its
/// counit comparison.
RecognitionResult dualize(const TotalCategory& opfib);

}  // namespace fibalg
