#pragma once

// Monads, monad morphisms, and strict parametrized (co)monads as tables,
// with exhaustive law verification, algebra enumeration, the induced
// structure on the product category, and Kleisli categories.
//
// Comonads are represented as MonadData over the opposite category; all
// comonadic operations dualize instead of duplicating code.

#include "fibalg/fincat.hpp"

namespace fibalg {

struct MonadData {
  std::string name;
  CatPtr carrier;
  FunctorData T;        // endofunctor on carrier
  NatTransData eta;     // Id => T
  NatTransData mu;      // T.T => T
};

LawReport check_monad(const MonadData& m);

MonadData identity_monad(const CatPtr& c);

/// Monads are equal-as-tables; used by strictness checks.
bool same_monad(const MonadData& a, const MonadData& b);

struct MonadMorphismData {
  MonadData source;  // S
  MonadData target;  // T, same carrier
  NatTransData alpha;  // S => T
};

LawReport check_monad_morphism(const MonadMorphismData& m);

struct ParamEndofunctorData {
  std::string name;
  CatPtr params;    // parameter category
  CatPtr carriers;  // carrier category
  std::map<std::string, FunctorData> per_object;    // A -> F_A
  std::map<std::string, NatTransData> per_morphism;  // f: A->A' -> F_A => F_A'
};

struct ParamMonadData {
  std::string name;
  CatPtr params;
  CatPtr carriers;
  std::map<std::string, MonadData> per_object;
  std::map<std::string, NatTransData> per_morphism;  // monad morphisms

  ParamEndofunctorData underlying() const;
};

LawReport check_param(const ParamEndofunctorData& p);
LawReport check_param(const ParamMonadData& p);

/// Constant parametrized monad: every parameter gets the identity monad.
ParamMonadData constant_param_monad(const CatPtr& params, const CatPtr& carriers);

enum class AlgFlavor { Alg, EM };

struct AlgebraObject {
  std::string param;    // object of the parameter category
  std::string carrier;  // object of the carrier category
  std::string xi;       // structure map F_A X -> X (empty for Kl payloads)
  bool operator==(const AlgebraObject&) const = default;
  bool operator<(const AlgebraObject& o) const {
    return std::tie(param, carrier, xi) < std::tie(o.param, o.carrier, o.xi);
  }
};

/// EM laws for a single algebra over the monad at its parameter.
LawReport check_algebra(const ParamMonadData& p, const AlgebraObject& a);

/// All structure maps over parameter A, in (carrier id, xi id) order.
std::vector<AlgebraObject> enumerate_algebras(const ParamEndofunctorData& p,
                                              const std::string& A);
std::vector<AlgebraObject> enumerate_algebras(const ParamMonadData& p,
                                              const std::string& A,
                                              AlgFlavor flavor);

/// Induced endofunctor/monad on params x carriers: (A, X) |-> (A, F_A X).
FunctorData hat(const ParamEndofunctorData& p, const CatPtr& prod);
MonadData hat(const ParamMonadData& p, const CatPtr& prod);
CatPtr hat_base(const ParamEndofunctorData& p);
inline CatPtr hat_base(const ParamMonadData& p) {
  return hat_base(p.underlying());
}

enum class KlFlavor { Kl, coKl };

/// Kleisli morphism ids encode (src, dst, underlying carrier morphism).
std::string kleisli_morphism_id(const std::string& x, const std::string& y,
                                const std::string& f);

/// Kl(M): same objects, hom(X, Y) = carrier hom(X, T Y), composition via mu.
/// coKl expects comonad data (a MonadData over the opposite carrier) and is
/// computed as the opposite of the Kleisli category of that monad.
FinCategory kleisli(const MonadData& m, KlFlavor flavor);

/// Eilenberg-Moore category of a plain monad: objects are (X, xi) pairs,
/// morphisms g with theta . T g = g . xi.
struct EmCategory {
  FinCategory cat;
  std::map<std::string, std::pair<std::string, std::string>> payload;  // id -> (X, xi)
  std::map<std::string, std::string> mor_payload;  // morphism id -> carrier g
};
EmCategory em_category(const MonadData& m);

}  // namespace fibalg
