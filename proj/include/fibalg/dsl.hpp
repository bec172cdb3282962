#pragma once

// Textual presentation language (.fib) for every entity the engine handles:
// categories, functors, natural transformations, (co)monads, parametrized
// monads, split fibrations, and monoid/group/action tables. parse() builds a
// fully validated workspace or a list of diagnostics with source spans;
// serialize() emits the canonical form, and parse . serialize is the
// identity up to structural equality.

#include <optional>

#include "fibalg/algkit.hpp"
#include "fibalg/fincat.hpp"
#include "fibalg/grothfib.hpp"
#include "fibalg/monadkit.hpp"

namespace fibalg::dsl {

struct Span {
  int line = 1;  // 1-based
  int col = 1;   // 1-based
  int length = 0;
  std::size_t offset = 0;  // byte offset into the source
};

struct Diagnostic {
  enum class Severity { Lexical, Syntactic, Reference, Law };
  Severity severity = Severity::Syntactic;
  std::string message;
  Span span;
};

std::string severity_name(Diagnostic::Severity s);

// Entities keep both the constructed object and the declaration-level names
// so the serializer can reproduce the source references.
struct FunctorEntity {
  FunctorData data;
  std::string dom, cod;
};

struct NatEntity {
  NatTransData data;
  std::string source, target;
};

struct MonadEntity {
  MonadData data;  // for comonads: the monad on the opposite carrier
  bool co = false;
  std::string on, functor_, unit, mult;
};

struct ParamEntity {
  ParamMonadData data;
  std::string params, carriers;
  std::map<std::string, std::string> at;     // parameter object -> monad name
  std::map<std::string, std::string> along;  // parameter morphism -> nat name
};

struct FibrationEntity {
  SplitFibrationData data;
  std::string over;
  std::map<std::string, std::string> at;     // base object -> category name
  std::map<std::string, std::string> along;  // base morphism -> functor name
};

struct ActionEntity {
  ActionAlgebra data;
  std::string acting, carrier;
};

struct Workspace {
  std::vector<std::pair<std::string, std::string>> order;  // (kind, name)
  std::map<std::string, FinCategory> categories;
  std::map<std::string, CatPtr> cat_ptrs;  // shared across dependent entities
  std::map<std::string, FunctorEntity> functors;
  std::map<std::string, NatEntity> nats;
  std::map<std::string, MonadEntity> monads;
  std::map<std::string, ParamEntity> params;
  std::map<std::string, FibrationEntity> fibrations;
  std::map<std::string, FinMonoid> monoids;
  std::map<std::string, FinGroup> groups;
  std::map<std::string, ActionEntity> actions;
};

struct ParseResult {
  std::optional<Workspace> workspace;  // present exactly when diagnostics empty
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return workspace.has_value(); }
};

/// Deterministic, whitespace-insensitive outside tokens; // line comments.
ParseResult parse(const std::string& text);

/// Canonical form: entities in declaration (= dependency) order, members in
/// declaration order, one member per line. Identity morphisms and their
/// composites are implicit; non-conventional identity names go through the
/// `identities:` section.
std::string serialize(const Workspace& w);

/// Category equality up to morphism declaration order (the parser always
/// lists implicit identities first).
bool same_structure(const FinCategory& a, const FinCategory& b);

/// Workspace equality entity-by-entity: categories up to same_structure,
/// everything else by table.
bool same_workspace(const Workspace& a, const Workspace& b);

// --- embedding engine objects into a workspace -------------------------------
// These register an entity (and, for the composite builders, everything it
// depends on) so it can be serialized. Names must be valid identifiers;
// re-registering the same name is a no-op.

void add_category(Workspace& w, const FinCategory& c);
void add_functor(Workspace& w, const std::string& name, const std::string& dom,
                 const std::string& cod, const FunctorData& f);
void add_nat(Workspace& w, const std::string& name, const std::string& source,
             const std::string& target, const NatTransData& n);
void add_group(Workspace& w, const FinGroup& g);
void add_monoid(Workspace& w, const FinMonoid& m);
void add_action(Workspace& w, const ActionAlgebra& a);

/// Categories, the identity functor, T_A/TT_A/eta_A/mu_A/M_A per parameter,
/// al_f per non-identity parameter morphism, then the parammonad entity.
void add_param_monad(Workspace& w, const ParamMonadData& p);

/// Base, fibres, pb_f reindexing functors, then the fibration entity.
void add_fibration(Workspace& w, const SplitFibrationData& s);

/// Base and total categories plus the projection functor (payloads are
/// reconstructible from the object ids and are not serialized).
void add_total(Workspace& w, const TotalCategory& t);

}  // namespace fibalg::dsl
