#include "fibalg/algkit.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace fibalg {

const std::string& FinMonoid::mul(const std::string& a,
                                  const std::string& b) const {
  auto it = mult.find({a, b});
  if (it == mult.end())
    throw Error(name + ": product " + a + " * " + b + " not tabulated");
  return it->second;
}

bool FinMonoid::has(const std::string& a) const {
  return std::find(elements.begin(), elements.end(), a) != elements.end();
}

LawReport FinMonoid::validate() const {
  LawReport r;
  if (!has(unit)) {
    r.add(Violation::Kind::Structural, "unit element listed", unit);
    return r;
  }
  for (const auto& a : elements)
    for (const auto& b : elements) {
      auto it = mult.find({a, b});
      if (it == mult.end()) {
        r.add(Violation::Kind::Structural, "total multiplication", a + " * " + b);
        return r;
      }
      if (!has(it->second)) {
        r.add(Violation::Kind::Structural, "product is an element", it->second);
        return r;
      }
    }
  for (const auto& a : elements) {
    if (mul(unit, a) != a || mul(a, unit) != a)
      r.add(Violation::Kind::Law, "unit law", a);
  }
  for (const auto& a : elements)
    for (const auto& b : elements)
      for (const auto& c : elements)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          r.add(Violation::Kind::Law, "associativity",
                "(" + a + ", " + b + ", " + c + ")");
  return r;
}

bool FinMonoid::same_table(const FinMonoid& other) const {
  return elements == other.elements && unit == other.unit &&
         mult == other.mult;
}

const std::string& FinGroup::inv(const std::string& a) const {
  auto it = inverse.find(a);
  if (it == inverse.end()) throw Error(name + ": no inverse for " + a);
  return it->second;
}

LawReport FinGroup::validate() const {
  LawReport r = FinMonoid::validate();
  if (!r.ok()) return r;
  for (const auto& a : elements) {
    auto it = inverse.find(a);
    if (it == inverse.end() || !has(it->second)) {
      r.add(Violation::Kind::Structural, "inverse tabulated", a);
      return r;
    }
    if (mul(a, it->second) != unit || mul(it->second, a) != unit)
      r.add(Violation::Kind::Law, "inverse law", a);
  }
  return r;
}

const std::string& ActionAlgebra::act(const std::string& g,
                                      const std::string& h) const {
  auto it = psi.find({g, h});
  if (it == psi.end())
    throw Error(name + ": psi(" + g + ", " + h + ") not tabulated");
  return it->second;
}

LawReport ActionAlgebra::validate() const {
  LawReport r;
  LawReport rg = acting.validate();
  LawReport rh = carrier.validate();
  if (!rg.ok() || !rh.ok()) {
    r.add(Violation::Kind::Structural, "acting/carrier monoid laws",
          rg.ok() ? rh.summary() : rg.summary());
    return r;
  }
  for (const auto& g : acting.elements)
    for (const auto& x : carrier.elements) {
      auto it = psi.find({g, x});
      if (it == psi.end() || !carrier.has(it->second)) {
        r.add(Violation::Kind::Structural, "total action table", g + ", " + x);
        return r;
      }
    }
  for (const auto& x : carrier.elements)
    if (act(acting.unit, x) != x)
      r.add(Violation::Kind::Law, "psi(e, -) = id", x);
  for (const auto& g : acting.elements) {
    if (act(g, carrier.unit) != carrier.unit)
      r.add(Violation::Kind::Law, "psi(g, -) preserves the unit", g);
    for (const auto& x : carrier.elements)
      for (const auto& y : carrier.elements)
        if (act(g, carrier.mul(x, y)) != carrier.mul(act(g, x), act(g, y)))
          r.add(Violation::Kind::Law, "psi(g, -) is an endomorphism",
                "(" + g + ", " + x + ", " + y + ")");
  }
  for (const auto& g1 : acting.elements)
    for (const auto& g2 : acting.elements)
      for (const auto& x : carrier.elements)
        if (act(g2, act(g1, x)) != act(acting.mul(g1, g2), x))
          r.add(Violation::Kind::Law, "psi(g2, psi(g1, x)) = psi(g1 g2, x)",
                "(" + g1 + ", " + g2 + ", " + x + ")");
  return r;
}

FinMonoid monoid_semidirect(const ActionAlgebra& a) {
  LawReport laws = a.validate();
  if (!laws.ok())
    throw Error("monoid_semidirect: invalid action: " + laws.summary());
  FinMonoid m;
  m.name = a.acting.name + "_sd_" + a.carrier.name;
  for (const auto& g : a.acting.elements)
    for (const auto& x : a.carrier.elements)
      m.elements.push_back(pair_object_id(g, x));
  m.unit = pair_object_id(a.acting.unit, a.carrier.unit);
  for (const auto& g1 : a.acting.elements)
    for (const auto& x : a.carrier.elements)
      for (const auto& g2 : a.acting.elements)
        for (const auto& y : a.carrier.elements)
          m.mult[{pair_object_id(g1, x), pair_object_id(g2, y)}] =
              pair_object_id(a.acting.mul(g1, g2),
                             a.carrier.mul(a.act(g2, x), y));
  LawReport check = m.validate();
  if (!check.ok())
    throw Error("monoid_semidirect: result fails monoid laws: " +
                check.summary());
  return m;
}

FinGroup semidirect(const ActionAlgebra& a) {
  FinGroup g;
  static_cast<FinMonoid&>(g) = monoid_semidirect(a);
  for (const auto& x : g.elements) {
    std::optional<std::string> inv;
    for (const auto& y : g.elements)
      if (g.mul(x, y) == g.unit && g.mul(y, x) == g.unit) inv = y;
    if (!inv) throw Error("semidirect: " + x + " has no inverse");
    g.inverse[x] = *inv;
  }
  return g;
}

ActionAlgebra conjugation_rep(const FinGroup& g) {
  ActionAlgebra a;
  a.name = g.name + "_conj";
  a.acting = g;
  a.carrier = g;
  for (const auto& x : g.elements)
    for (const auto& h : g.elements)
      a.psi[{x, h}] = g.mul(g.mul(g.inv(x), h), x);
  return a;
}

ActionAlgebra trivial_action(const FinMonoid& g, const FinMonoid& h) {
  ActionAlgebra a;
  a.name = g.name + "_triv_" + h.name;
  a.acting = g;
  a.carrier = h;
  for (const auto& x : g.elements)
    for (const auto& y : h.elements) a.psi[{x, y}] = y;
  return a;
}

namespace {

bool is_hom(const FinMonoid& a, const FinMonoid& b,
            const std::map<std::string, std::string>& f) {
  if (f.size() != a.elements.size()) return false;
  for (const auto& [x, fx] : f)
    if (!a.has(x) || !b.has(fx)) return false;
  if (f.at(a.unit) != b.unit) return false;
  for (const auto& x : a.elements)
    for (const auto& y : a.elements)
      if (f.at(a.mul(x, y)) != b.mul(f.at(x), f.at(y))) return false;
  return true;
}

}  // namespace

Verdict action_morphism_check(const ActionAlgebra& src,
                              const ActionAlgebra& dst,
                              const std::map<std::string, std::string>& u,
                              const std::map<std::string, std::string>& f) {
  if (!is_hom(src.acting, dst.acting, u))
    return {false, "u is not a homomorphism"};
  if (!is_hom(src.carrier, dst.carrier, f))
    return {false, "f is not a homomorphism"};
  for (const auto& g : src.acting.elements)
    for (const auto& x : src.carrier.elements)
      if (f.at(src.act(g, x)) != dst.act(u.at(g), f.at(x)))
        return {false, "square fails at (" + g + ", " + x + ")"};
  return {true, ""};
}

std::vector<std::map<std::string, std::string>> all_homs(const FinMonoid& a,
                                                         const FinMonoid& b) {
  std::vector<std::map<std::string, std::string>> out;
  std::map<std::string, std::string> f;
  f[a.unit] = b.unit;
  std::vector<std::string> rest;
  for (const auto& x : a.elements)
    if (x != a.unit) rest.push_back(x);

  auto consistent = [&]() {
    for (const auto& [x, fx] : f)
      for (const auto& [y, fy] : f) {
        auto it = f.find(a.mul(x, y));
        if (it != f.end() && it->second != b.mul(fx, fy)) return false;
      }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == rest.size()) {
      if (is_hom(a, b, f)) out.push_back(f);
      return;
    }
    for (const auto& img : b.elements) {
      f[rest[i]] = img;
      if (consistent()) self(self, i + 1);
      f.erase(rest[i]);
    }
  };
  rec(rec, 0);
  return out;
}

Verdict check_semidirect_adjunction(const ActionAlgebra& a,
                                    const FinGroup& gprime) {
  FinGroup sd = semidirect(a);
  auto left = all_homs(sd, gprime);

  ActionAlgebra conj = conjugation_rep(gprime);
  auto us = all_homs(a.acting, gprime);
  auto fs = all_homs(a.carrier, gprime);
  std::vector<std::pair<std::map<std::string, std::string>,
                        std::map<std::string, std::string>>> right;
  for (const auto& u : us)
    for (const auto& f : fs)
      if (action_morphism_check(a, conj, u, f).holds) right.emplace_back(u, f);

  std::string counts = "left=" + std::to_string(left.size()) +
                       " right=" + std::to_string(right.size());
  if (left.size() != right.size()) return {false, counts};

  // the correspondence phi |-> (phi(-, e), phi(e, -)) hits the right-hand
  // side bijectively, and u(g) f(x) reconstructs phi
  std::set<std::pair<std::map<std::string, std::string>,
                     std::map<std::string, std::string>>> seen;
  for (const auto& phi : left) {
    std::map<std::string, std::string> u, f;
    for (const auto& g : a.acting.elements)
      u[g] = phi.at(pair_object_id(g, a.carrier.unit));
    for (const auto& x : a.carrier.elements)
      f[x] = phi.at(pair_object_id(a.acting.unit, x));
    if (!action_morphism_check(a, conj, u, f).holds)
      return {false, "transpose is not an action morphism; " + counts};
    for (const auto& g : a.acting.elements)
      for (const auto& x : a.carrier.elements)
        if (phi.at(pair_object_id(g, x)) != gprime.mul(u.at(g), f.at(x)))
          return {false, "reconstruction fails; " + counts};
    seen.insert({u, f});
  }
  if (seen.size() != left.size())
    return {false, "transposition not injective; " + counts};
  return {true, counts};
}

namespace {

// index and period of the power sequence x, x^2, ... (group order when the
// sequence cycles back to the unit)
std::pair<int, int> power_profile(const FinMonoid& m, const std::string& x) {
  std::vector<std::string> seen{x};
  std::string cur = x;
  for (;;) {
    cur = m.mul(cur, x);
    auto it = std::find(seen.begin(), seen.end(), cur);
    if (it != seen.end())
      return {int(it - seen.begin()), int(seen.end() - it)};
    seen.push_back(cur);
  }
}

}  // namespace

std::optional<std::map<std::string, std::string>> find_monoid_iso(
    const FinMonoid& a, const FinMonoid& b) {
  if (a.elements.size() != b.elements.size()) return std::nullopt;
  std::map<std::string, std::pair<int, int>> pa, pb;
  for (const auto& x : a.elements) pa[x] = power_profile(a, x);
  for (const auto& x : b.elements) pb[x] = power_profile(b, x);

  std::map<std::string, std::string> f;
  std::set<std::string> used;
  f[a.unit] = b.unit;
  used.insert(b.unit);
  std::vector<std::string> rest;
  for (const auto& x : a.elements)
    if (x != a.unit) rest.push_back(x);

  auto consistent = [&]() {
    for (const auto& [x, fx] : f)
      for (const auto& [y, fy] : f) {
        auto it = f.find(a.mul(x, y));
        if (it != f.end() && it->second != b.mul(fx, fy)) return false;
      }
    return true;
  };
  std::optional<std::map<std::string, std::string>> out;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (out) return;
    if (i == rest.size()) {
      if (is_hom(a, b, f)) out = f;
      return;
    }
    for (const auto& img : b.elements) {
      if (used.count(img) || pa.at(rest[i]) != pb.at(img)) continue;
      f[rest[i]] = img;
      used.insert(img);
      if (consistent()) self(self, i + 1);
      f.erase(rest[i]);
      used.erase(img);
    }
  };
  rec(rec, 0);
  return out;
}

FinMonoid parse_monoid_table(const std::string& text,
                             const std::string& name) {
  std::istringstream in(text);
  std::string line;
  FinMonoid m;
  m.name = name;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    std::vector<std::string> toks;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty()) continue;
    if (m.elements.empty()) {
      m.elements = toks;
      continue;
    }
    std::size_t row = 0;
    while (row < m.elements.size() &&
           m.mult.count({m.elements[row], m.elements[0]}))
      ++row;
    if (row >= m.elements.size() || toks.size() != m.elements.size())
      throw Error("parse_monoid_table: malformed row '" + line + "'");
    for (std::size_t j = 0; j < toks.size(); ++j)
      m.mult[{m.elements[row], m.elements[j]}] = toks[j];
  }
  if (m.elements.empty()) throw Error("parse_monoid_table: empty input");
  for (const auto& e : m.elements) {
    bool unit = true;
    for (const auto& x : m.elements) {
      auto l = m.mult.find({e, x});
      auto r = m.mult.find({x, e});
      if (l == m.mult.end() || r == m.mult.end() || l->second != x ||
          r->second != x) {
        unit = false;
        break;
      }
    }
    if (unit) {
      m.unit = e;
      break;
    }
  }
  if (m.unit.empty()) throw Error("parse_monoid_table: no unit element");
  return m;
}

std::string monoid_table(const FinMonoid& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.elements.size(); ++i)
    out << (i ? " " : "") << m.elements[i];
  out << "\n";
  for (const auto& x : m.elements) {
    for (std::size_t j = 0; j < m.elements.size(); ++j)
      out << (j ? " " : "") << m.mul(x, m.elements[j]);
    out << "\n";
  }
  return out.str();
}

FinGroup to_group(const FinMonoid& m) {
  FinGroup g;
  static_cast<FinMonoid&>(g) = m;
  for (const auto& x : m.elements) {
    std::optional<std::string> inv;
    for (const auto& y : m.elements)
      if (m.mul(x, y) == m.unit && m.mul(y, x) == m.unit) inv = y;
    if (!inv) throw Error("to_group: " + x + " has no inverse");
    g.inverse[x] = *inv;
  }
  return g;
}

}  // namespace fibalg
