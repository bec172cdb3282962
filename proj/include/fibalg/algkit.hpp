#pragma once

// Finite monoids and groups as full multiplication tables, monoid/group
// actions, semidirect products, the conjugation representation, and the
// brute-force hom-set bijection behind the semidirect adjunction.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fibalg/fincat.hpp"

namespace fibalg {

struct FinMonoid {
  std::string name;
  std::vector<std::string> elements;
  std::string unit;
  std::map<std::pair<std::string, std::string>, std::string> mult;

  const std::string& mul(const std::string& a, const std::string& b) const;
  bool has(const std::string& a) const;
  LawReport validate() const;
  bool same_table(const FinMonoid& other) const;  // names ignored
};

struct FinGroup : FinMonoid {
  std::map<std::string, std::string> inverse;

  const std::string& inv(const std::string& a) const;
  LawReport validate() const;  // monoid laws plus inverse laws
};

/// Right-action convention: psi(g2, psi(g1, x)) = psi(g1 g2, x), the unique
/// orientation making the semidirect multiplication associative (and
/// associativity is re-verified by table scan on every construction).
struct ActionAlgebra {
  std::string name;
  FinMonoid acting;   // G
  FinMonoid carrier;  // H
  std::map<std::pair<std::string, std::string>, std::string> psi;

  const std::string& act(const std::string& g, const std::string& h) const;
  LawReport validate() const;
};

/// Semidirect product carrier G x H with
/// (g1, x)(g2, y) = (g1 g2, psi(g2, x) y); elements named with pair ids.
FinMonoid monoid_semidirect(const ActionAlgebra& a);

/// Monoid semidirect plus inverses found by table search; throws when some
/// element has none (inputs were not groups).
FinGroup semidirect(const ActionAlgebra& a);

/// Conjugation action psi(g, h) = g^-1 h g of a group on itself.
ActionAlgebra conjugation_rep(const FinGroup& g);

/// psi(g, h) = h.
ActionAlgebra trivial_action(const FinMonoid& g, const FinMonoid& h);

/// f(psi(g, x)) = theta(u(g), f(x)) with u, f checked as homomorphisms.
Verdict action_morphism_check(const ActionAlgebra& src,
                              const ActionAlgebra& dst,
                              const std::map<std::string, std::string>& u,
                              const std::map<std::string, std::string>& f);

/// All monoid homomorphisms, by backtracking over element images.
std::vector<std::map<std::string, std::string>> all_homs(const FinMonoid& a,
                                                         const FinMonoid& b);

/// Hom(G x| H, G') against action morphisms into conjugation_rep(G'), with
/// the correspondence phi |-> (phi(-, e), phi(e, -)); the witness records
/// both cardinalities.
Verdict check_semidirect_adjunction(const ActionAlgebra& a,
                                    const FinGroup& gprime);

/// Structural isomorphism search with unit and power-profile pruning.
std::optional<std::map<std::string, std::string>> find_monoid_iso(
    const FinMonoid& a, const FinMonoid& b);

/// Text table format: first line the element list, then one row per element
/// (row g lists g*h for each column h); the unit is detected from the table.
FinMonoid parse_monoid_table(const std::string& text, const std::string& name);
std::string monoid_table(const FinMonoid& m);

/// A group from a monoid table when every element is invertible.
FinGroup to_group(const FinMonoid& m);

}  // namespace fibalg
