#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fibalg/dsl.hpp"
#include "fixtures.hpp"

using namespace fibalg;
using namespace fibalg::dsl;
namespace fx = fibalg::fix;

namespace {

std::string slice(const std::string& src, const Span& sp) {
  return src.substr(sp.offset, sp.length);
}

// random thin category from a seeded preorder, <= max_objects objects and
// <= max_morphisms morphisms after reflexive-transitive closure
FinCategory random_thin(std::mt19937& rng, int max_objects,
                        std::size_t max_morphisms) {
  for (;;) {
    int n = std::uniform_int_distribution<int>(1, max_objects)(rng);
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) le[i][i] = true;
    std::bernoulli_distribution edge(0.25);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && edge(rng)) le[i][j] = true;
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (le[i][k] && le[k][j]) le[i][j] = true;
    // preorders with cycles give isomorphic distinct objects; keep them,
    // they are still lawful categories
    std::size_t count = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (le[i][j]) ++count;
    if (count > max_morphisms) continue;

    FinCategory c;
    c.name = "R";
    auto obj = [](int i) { return "x" + std::to_string(i); };
    auto mor = [&](int i, int j) {
      return i == j ? "id_" + obj(i)
                    : "m" + std::to_string(i) + "_" + std::to_string(j);
    };
    for (int i = 0; i < n; ++i) c.objects.push_back(obj(i));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (le[i][j]) c.morphisms.push_back({mor(i, j), obj(i), obj(j)});
    for (int i = 0; i < n; ++i) c.identities[obj(i)] = mor(i, i);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (le[i][j] && le[j][k])
            c.composition[{mor(j, k), mor(i, j)}] = mor(i, k);
    return c;
  }
}

}  // namespace

TEST_CASE("one-object category with implicit identity") {
  auto r = parse("category C { objects: a; }");
  REQUIRE(r.ok());
  const auto& c = r.workspace->categories.at("C");
  CHECK(c.objects == std::vector<std::string>{"a"});
  CHECK(c.morphisms.size() == 1);
  CHECK(c.identities.at("a") == "id_a");
  CHECK(c.validate().ok());
}

TEST_CASE("comments and whitespace are insignificant") {
  auto a = parse("category C { objects: a, b; morphisms: f : a -> b; }");
  auto b = parse(
      "// header\ncategory   C {\n  objects:\n a , b ;\n"
      "  morphisms: f : a -> b; // arrow\n}\n");
  REQUIRE(a.ok());
  REQUIRE(b.ok());
  CHECK(same_workspace(*a.workspace, *b.workspace));
}

TEST_CASE("undeclared object in a morphism is a reference diagnostic with span") {
  std::string src = "category C { objects: a; morphisms: f : a -> zz; }";
  auto r = parse(src);
  REQUIRE_FALSE(r.ok());
  REQUIRE(r.diagnostics.size() == 1);
  const auto& d = r.diagnostics.front();
  CHECK(d.severity == Diagnostic::Severity::Reference);
  CHECK(slice(src, d.span) == "zz");
}

TEST_CASE("diagnostic severities are distinct") {
  CHECK(parse("category C { objects: a ? }").diagnostics.front().severity ==
        Diagnostic::Severity::Lexical);
  CHECK(parse("category C objects }").diagnostics.front().severity ==
        Diagnostic::Severity::Syntactic);
  CHECK(parse("functor F : C -> C { objects: }").diagnostics.front().severity ==
        Diagnostic::Severity::Reference);
  // missing composite: law severity
  auto r = parse(
      "category C { objects: a, b, c;"
      " morphisms: f : a -> b; g : b -> c; h : a -> c; }");
  REQUIRE_FALSE(r.ok());
  CHECK(r.diagnostics.front().severity == Diagnostic::Severity::Law);
}

TEST_CASE("every diagnostic span slices back to the offending token") {
  std::string src =
      "category C { objects: a; }\n"
      "functor F : C -> D { objects: a |-> a; }\n";
  auto r = parse(src);
  REQUIRE_FALSE(r.ok());
  for (const auto& d : r.diagnostics) {
    CHECK(d.span.offset + d.span.length <= src.size());
    CHECK(slice(src, d.span) == "D");
  }
}

TEST_CASE("parse recovers after a broken entity") {
  auto r = parse(
      "category Bad { objects: a; morphisms: f : a -> q; }\n"
      "category Good { objects: b; }");
  REQUIRE_FALSE(r.ok());
  CHECK(r.diagnostics.size() == 1);
}

TEST_CASE("duplicate entity names are reported") {
  auto r = parse("category C { objects: a; } category C { objects: b; }");
  REQUIRE_FALSE(r.ok());
  CHECK(r.diagnostics.front().severity == Diagnostic::Severity::Reference);
}

TEST_CASE("functor, nat and monad entities parse and validate") {
  std::string src = R"(
category C {
  objects: o0, o1;
  morphisms:
    u : o0 -> o1;
}
functor Id_C : C -> C {
  objects:
    o0 |-> o0;
    o1 |-> o1;
  morphisms:
    u |-> u;
}
functor T : C -> C {
  objects:
    o0 |-> o1;
    o1 |-> o1;
  morphisms:
    u |-> id_o1;
}
functor TT : C -> C {
  objects:
    o0 |-> o1;
    o1 |-> o1;
  morphisms:
    u |-> id_o1;
}
nat eta : Id_C => T {
  at o0: u;
  at o1: id_o1;
}
nat mu : TT => T {
  at o0: id_o1;
  at o1: id_o1;
}
monad M on C {
  functor: T;
  unit: eta;
  mult: mu;
}
)";
  auto r = parse(src);
  for (const auto& d : r.diagnostics)
    MESSAGE(severity_name(d.severity), ": ", d.message);
  REQUIRE(r.ok());
  CHECK(check_monad(r.workspace->monads.at("M").data).ok());
  // breaking a monad law is caught at load time
  auto broken = src;
  auto at = broken.find("at o0: u;");
  broken.replace(at, 9, "at o0: id_o0;");
  auto rb = parse(broken);
  REQUIRE_FALSE(rb.ok());
  bool has_law = false;
  for (const auto& d : rb.diagnostics)
    if (d.severity == Diagnostic::Severity::Law) has_law = true;
  CHECK(has_law);
}

TEST_CASE("bundled fixtures embed, serialize and round-trip") {
  Workspace w;
  add_category(w, fx::chain3());
  add_category(w, fx::bool4());
  add_category(w, fx::split_epi());
  add_param_monad(w, fx::writer_chain3());
  add_param_monad(w, fx::coreader_bool4());
  add_fibration(w, fx::codomain2());
  add_group(w, fx::z2());
  add_group(w, fx::z3());
  add_group(w, fx::s3());
  add_action(w, fx::z2_on_z3_inversion());
  auto text = serialize(w);
  auto r = parse(text);
  for (const auto& d : r.diagnostics)
    MESSAGE(severity_name(d.severity), ": ", d.message, " at line ",
            d.span.line);
  REQUIRE(r.ok());
  CHECK(same_workspace(w, *r.workspace));
  // serialization is idempotent on the reparse
  CHECK(serialize(*r.workspace) == text);
}

TEST_CASE("total categories embed through the category format") {
  Workspace w;
  add_total(w, fx::points_splitepi());
  auto r = parse(serialize(w));
  REQUIRE(r.ok());
  CHECK(r.workspace->categories.count("end_splitepi") == 1);
  CHECK(r.workspace->functors.at("ev1").data.validate().ok());
}

TEST_CASE("empty workspace serializes to the empty document") {
  Workspace w;
  CHECK(serialize(w).empty());
  auto r = parse("");
  REQUIRE(r.ok());
  CHECK(r.workspace->order.empty());
}

TEST_CASE("round-trip on 500 seeded random small categories") {
  std::mt19937 rng(0xf1b);
  for (int i = 0; i < 500; ++i) {
    auto c = random_thin(rng, 6, 20);
    REQUIRE(c.validate().ok());
    Workspace w;
    add_category(w, c);
    auto text = serialize(w);
    auto r = parse(text);
    REQUIRE(r.ok());
    REQUIRE(same_workspace(w, *r.workspace));
    REQUIRE(serialize(*r.workspace) == text);
  }
}
