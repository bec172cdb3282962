#pragma once

// Fully tabulated finite categories, functors and natural transformations,
// with brute-force universal-property solvers on top (limits, extremal
// objects, adjunctions, equivalences, isomorphism search).

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fibalg {

/// Structural misuse (dangling references, shape mismatches). Law failures
/// are never exceptions; they go into LawReport / Verdict values.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct Violation {
  enum class Kind { Structural, Law };
  Kind kind = Kind::Law;
  std::string law;      // which law/equation failed
  std::string witness;  // witnessing objects/morphisms
};

struct LawReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  void add(Violation::Kind kind, std::string law, std::string witness);
  std::string summary() const;
};

struct Verdict {
  bool holds = false;
  std::string witness;  // populated on failure (and sometimes on success)
};

struct Morphism {
  std::string id;
  std::string src;
  std::string dst;
  bool operator==(const Morphism&) const = default;
};

class FinCategory {
 public:
  std::string name;
  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  // object id -> identity morphism id
  std::map<std::string, std::string> identities;
  // (g, f) -> g.f, defined exactly when dst(f) = src(g)
  std::map<std::pair<std::string, std::string>, std::string> composition;

  bool operator==(const FinCategory&) const = default;

  bool has_object(const std::string& o) const;
  bool has_morphism(const std::string& m) const;
  const Morphism& morphism(const std::string& m) const;
  const std::string& src(const std::string& m) const { return morphism(m).src; }
  const std::string& dst(const std::string& m) const { return morphism(m).dst; }
  const std::string& identity(const std::string& o) const;
  bool is_identity(const std::string& m) const;

  /// g.f; throws Error when the pair is not composable or not tabulated.
  const std::string& compose(const std::string& g, const std::string& f) const;

  /// All morphisms x -> y, in declaration order.
  std::vector<std::string> hom(const std::string& x, const std::string& y) const;
  /// All morphisms out of / into an object.
  std::vector<std::string> from(const std::string& x) const;
  std::vector<std::string> into(const std::string& y) const;

  bool is_iso(const std::string& m) const;
  std::optional<std::string> inverse(const std::string& m) const;
  bool objects_isomorphic(const std::string& x, const std::string& y) const;

  LawReport validate() const;
};

using CatPtr = std::shared_ptr<const FinCategory>;
CatPtr make_cat(FinCategory c);

struct FunctorData {
  std::string name;
  CatPtr dom;
  CatPtr cod;
  std::map<std::string, std::string> omap;  // object -> object
  std::map<std::string, std::string> mmap;  // morphism -> morphism

  const std::string& on_object(const std::string& o) const;
  const std::string& on_morphism(const std::string& m) const;
  LawReport validate() const;
  /// Equality of the tables (names and category identities ignored).
  bool same_action(const FunctorData& other) const;
};

struct NatTransData {
  std::string name;
  FunctorData source;
  FunctorData target;                            // parallel to source
  std::map<std::string, std::string> components;  // object -> morphism in cod

  const std::string& at(const std::string& o) const;
  LawReport validate() const;
  bool same_components(const NatTransData& other) const;
};

struct Cone {
  std::string apex;
  std::map<std::string, std::string> legs;  // diagram node -> morphism id
};

// ---------------------------------------------------------------------------
// Size guard

/// Default bound on morphism counts accepted by the exhaustive solvers.
/// Overridable through the FIBALG_SIZE_GUARD environment variable.
std::size_t size_guard();
void check_size_guard(const FinCategory& c);

// ---------------------------------------------------------------------------
// Constructions

FinCategory opposite(const FinCategory& c);
CatPtr opposite(const CatPtr& c);
FunctorData opposite(const FunctorData& f);
/// Reverses the direction: op of alpha : F => G is G^op => F^op.
NatTransData opposite(const NatTransData& a);

FinCategory product(const FinCategory& a, const FinCategory& b,
                    const std::string& name = "");
std::string pair_object_id(const std::string& a, const std::string& b);
std::string pair_morphism_id(const std::string& f, const std::string& g);
std::pair<std::string, std::string> split_pair_id(const std::string& id);

FunctorData identity_functor(const CatPtr& c);
FunctorData compose_functors(const FunctorData& g, const FunctorData& f);
FunctorData constant_functor(const CatPtr& dom, const CatPtr& cod,
                             const std::string& obj);
/// Full subcategory on the listed objects.
FinCategory full_subcategory(const FinCategory& c,
                             const std::vector<std::string>& objs,
                             const std::string& name);

/// Strict pullback of F : A -> C against G : B -> C; objects/morphisms are
/// pairs with equal images, named with pair ids.
FinCategory pullback_category(const FunctorData& F, const FunctorData& G,
                              const std::string& name = "");

NatTransData identity_nat(const FunctorData& f);
/// Vertical composite (b . a) : F => H for a : F => G, b : G => H.
NatTransData vertical_compose(const NatTransData& b, const NatTransData& a);
/// Whisker a : F => G with H on the left: H*a : H.F => H.G.
NatTransData whisker_left(const FunctorData& h, const NatTransData& a);
/// Whisker a : F => G with H on the right: a*H : F.H => G.H.
NatTransData whisker_right(const NatTransData& a, const FunctorData& h);
/// Horizontal composite of a : F => G (on C) with b : H => K (C -> D):
/// (b * a) : H.F => K.G.
NatTransData horizontal_compose(const NatTransData& b, const NatTransData& a);

// ---------------------------------------------------------------------------
// Universal-property solvers

/// Limiting cone of a diagram, by exhaustive search over (apex, legs)
/// candidates with unique-factorization test. Ties broken by the
/// lexicographically least apex id. nullopt when no limit exists.
std::optional<Cone> limit(const FunctorData& diagram);

/// Colimit via the opposite category; the cocone is returned with legs
/// pointing node -> apex morphisms of the original category.
std::optional<Cone> colimit(const FunctorData& diagram);

/// Coproduct / pushout / coequalizer helpers on top of colimit search.
/// All return nullopt when the universal object does not exist.
struct CoconeResult {
  std::string apex;
  std::vector<std::string> legs;  // one per input object / branch
};
std::optional<CoconeResult> coproduct(const FinCategory& c, const std::string& x,
                                      const std::string& y);
/// Pushout of the span  b <-f- a -g-> c.
std::optional<CoconeResult> pushout(const FinCategory& c, const std::string& f,
                                    const std::string& g);
/// Coequalizer of the parallel pair f, g : x -> y (single leg from y).
std::optional<CoconeResult> coequalizer(const FinCategory& c,
                                        const std::string& f,
                                        const std::string& g);

struct Extremal {
  std::optional<std::string> initial;
  std::optional<std::string> terminal;
};
Extremal find_extremal(const FinCategory& c);

enum class AdjunctionMode { Triangle, Homset };

/// Triangle mode: verifies both triangle identities for the supplied
/// unit/counit. Homset mode: exhaustive search for a unit inducing a
/// bijection Hom_D(Fc, d) ~ Hom_C(c, Gd) at every pair.
Verdict check_adjunction(const FunctorData& F, const FunctorData& G,
                         AdjunctionMode mode,
                         const NatTransData* unit = nullptr,
                         const NatTransData* counit = nullptr);

/// Fullness, faithfulness, essential surjectivity by table scan + iso search.
Verdict check_equivalence(const FunctorData& F);

/// Structural isomorphism search between categories (never by name).
std::optional<FunctorData> find_isomorphism(const CatPtr& a, const CatPtr& b);

}  // namespace fibalg
