#pragma once

// Total categories of fibrations of algebras: builders for the Alg, EM and
// Kleisli flavors and their duals, the projection/carrier span, cartesian
// lift verification, the comparison with algebras of the induced monad on
// the product, functoriality on oplax 1-cells, split-fibration input via the
// Grothendieck construction, and universal fibrations with their pullback
// presentations.

#include "fibalg/monadkit.hpp"

namespace fibalg {

enum class TotalFlavor { Alg, EM, Kl, coAlg, coEM, coKl };

bool is_co_flavor(TotalFlavor f);
std::string flavor_name(TotalFlavor f);

struct TotalCategory {
  CatPtr cat;       // the total category
  CatPtr base;      // parameter category the projection lands in
  CatPtr carriers;  // carrier category (when applicable)
  FunctorData p;    // projection
  std::optional<FunctorData> V;  // carrier functor (absent for split input)
  TotalFlavor flavor = TotalFlavor::EM;
  // object id -> (A, X, xi); xi empty for Kl/coKl and split-input objects
  std::map<std::string, AlgebraObject> payload;
  // morphism id -> (f, g) component pair
  std::map<std::string, std::pair<std::string, std::string>> mor_payload;
};

std::string alg_object_id(const AlgebraObject& a);
std::string total_morphism_id(const std::string& src, const std::string& dst,
                              const std::string& f, const std::string& g);

/// EM/Kl totals of a parametrized monad, Alg totals of a parametrized
/// endofunctor. Co-flavors expect dual data (a parametrized (co)monad
/// presented over the opposite parameter/carrier categories) and return the
/// opposite of the primal construction.
TotalCategory build_total(const ParamMonadData& P, TotalFlavor flavor);
TotalCategory build_total(const ParamEndofunctorData& P, TotalFlavor flavor);

/// Reindex an EM algebra over dst(f) to one over src(f): xi . (T_f)_X.
AlgebraObject reindex(const ParamMonadData& P, const std::string& f,
                      const AlgebraObject& a);

enum class Variance { Fibration, Opfibration };

struct FibrationCheck {
  Verdict verdict;
  // (base morphism, object over its codomain) -> cartesian lift morphism;
  // for opfibrations, (base morphism, object over its domain) -> opcartesian.
  std::map<std::pair<std::string, std::string>, std::string> cleavage;
};

/// Exhaustive (op)cartesian-lift search against the universal property.
FibrationCheck verify_fibration(const TotalCategory& t, Variance variance);

struct HatComparison {
  EmCategory em_hat;       // EM category of the induced monad on base x carriers
  FunctorData comparison;  // total EM category -> em_hat
  Verdict equivalence;
  bool triangle = false;   // projection triangle commutes strictly
};
HatComparison em_hat_comparison(const ParamMonadData& P);

/// Oplax 1-cell (U, V, delta): delta components are keyed by
/// pair_object_id(A, X) and go S_{UA}(V X) -> V(T_A X).
struct OplaxCell {
  FunctorData U;  // between parameter categories
  FunctorData V;  // between carrier categories
  std::map<std::string, std::string> delta;
  bool monad_flavored = false;
};

/// Shape, naturality and (when monad_flavored) unit/multiplication pastings.
LawReport check_oplax_cell(const OplaxCell& c, const ParamEndofunctorData& P,
                           const ParamEndofunctorData& Q);
LawReport check_oplax_cell(const OplaxCell& c, const ParamMonadData& P,
                           const ParamMonadData& Q);

/// The induced functor between total categories:
/// (A, X, xi) |-> (UA, VX, V xi . delta_{A,X}), (f, g) |-> (Uf, Vg).
FunctorData map_total(const OplaxCell& c, const TotalCategory& src,
                      const TotalCategory& dst);

struct SplitFibrationData {
  std::string name;
  CatPtr base;
  std::map<std::string, CatPtr> fibre;          // base object -> fibre
  std::map<std::string, FunctorData> reindex_;  // f: A->B -> fibre(B)->fibre(A)
};

/// Strictness (identity/composition of reindexing) plus componentwise checks.
LawReport check_split(const SplitFibrationData& s);

/// Grothendieck construction: objects (A, e), morphisms (f, g) with
/// g : e -> reindex(f)(e'); the result is a split fibration over the base.
TotalCategory grothendieck(const SplitFibrationData& s);

/// The category of all tabulated endofunctors (objects) and natural
/// transformations (morphisms) on X; ids are deterministic in table order.
struct UniversalBase {
  FinCategory cat;
  std::map<std::string, FunctorData> endo;      // object id -> endofunctor
  std::map<std::string, NatTransData> nat;      // morphism id -> transformation
  std::map<std::string, MonadData> monad;       // filled by monad_category only
};
UniversalBase endofunctor_category(const CatPtr& X);
UniversalBase monad_category(const CatPtr& X);  // objects restricted to monads

/// build_total of the tautological parametrized structure over End(X)/Mnd(X).
/// Gated: refuses without opt_in because the base blows up quickly.
TotalCategory universal_total(const CatPtr& X, TotalFlavor flavor, bool opt_in);

/// Classifying functor of P into the universal base (by table matching).
FunctorData classify(const ParamMonadData& P, const UniversalBase& u);
FunctorData classify(const ParamEndofunctorData& P, const UniversalBase& u);

}  // namespace fibalg
