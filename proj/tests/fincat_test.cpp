#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fibalg/fincat.hpp"
#include "fixtures.hpp"

using namespace fibalg;
namespace fx = fibalg::fix;

TEST_CASE("validate: terminal category is lawful") {
  CHECK(fx::terminal_cat().validate().ok());
}

TEST_CASE("validate: chain3 is lawful") {
  CHECK(fx::chain3().validate().ok());
  CHECK(fx::bool4().validate().ok());
}

TEST_CASE("validate: incomplete composition table is reported") {
  FinCategory c;
  c.name = "broken";
  c.objects = {"a", "b", "c"};
  c.morphisms = {{"id_a", "a", "a"}, {"id_b", "b", "b"}, {"id_c", "c", "c"},
                 {"f", "a", "b"},    {"g", "b", "c"}};
  c.identities = {{"a", "id_a"}, {"b", "id_b"}, {"c", "id_c"}};
  // g.f missing, and its composite has no morphism to be anyway
  auto r = c.validate();
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations[0].law == "composition table incomplete");
  CHECK(r.violations[0].witness == "g . f");
}

TEST_CASE("validate: dangling reference is structural") {
  FinCategory c = fx::terminal_cat();
  c.morphisms.push_back({"f", "s", "nowhere"});
  auto r = c.validate();
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations[0].kind == Violation::Kind::Structural);
}

TEST_CASE("hom/iso helpers") {
  auto c = fx::chain3();
  CHECK(c.hom("o0", "o2") == std::vector<std::string>{"le_o0_o2"});
  CHECK(c.hom("o2", "o0").empty());
  CHECK(c.is_iso("id_o1"));
  CHECK_FALSE(c.is_iso("le_o0_o1"));
  CHECK(c.objects_isomorphic("o1", "o1"));
  CHECK_FALSE(c.objects_isomorphic("o0", "o1"));
}

TEST_CASE("functor validation catches non-functors") {
  auto c = make_cat(fx::chain3());
  auto f = identity_functor(c);
  CHECK(f.validate().ok());
  f.mmap["le_o0_o1"] = "le_o0_o2";  // breaks dst preservation
  CHECK_FALSE(f.validate().ok());
}

TEST_CASE("nat trans validation") {
  auto c = make_cat(fx::chain3());
  auto f = identity_functor(c);
  auto a = identity_nat(f);
  CHECK(a.validate().ok());
  // component with wrong endpoints
  a.components["o0"] = "le_o0_o1";
  CHECK_FALSE(a.validate().ok());
}

TEST_CASE("limit: empty diagram finds the terminal object") {
  auto c = make_cat(fx::chain3());
  FinCategory empty;
  empty.name = "empty";
  FunctorData d;
  d.name = "emptyd";
  d.dom = make_cat(empty);
  d.cod = c;
  auto l = limit(d);
  REQUIRE(l.has_value());
  CHECK(l->apex == "o2");
  auto co = colimit(d);
  REQUIRE(co.has_value());
  CHECK(co->apex == "o0");
}

TEST_CASE("limit: binary product in bool4 is the meet") {
  auto c = make_cat(fx::bool4());
  FunctorData d;
  d.name = "paird";
  d.dom = make_cat(fx::discrete2());
  d.cod = c;
  d.omap = {{"a", "va"}, {"b", "vb"}};
  d.mmap = {{"id_a", "id_va"}, {"id_b", "id_vb"}};
  auto l = limit(d);
  REQUIRE(l.has_value());
  CHECK(l->apex == "v0");
  auto co = colimit(d);
  REQUIRE(co.has_value());
  CHECK(co->apex == "v1");
}

TEST_CASE("limit: absent when no cone exists") {
  auto c = make_cat(fx::discrete2());
  FunctorData d = identity_functor(c);  // discrete 2-node diagram in itself
  CHECK_FALSE(limit(d).has_value());
}

TEST_CASE("coproduct/pushout/coequalizer in lattices") {
  auto b = fx::bool4();
  auto cp = coproduct(b, "va", "vb");
  REQUIRE(cp.has_value());
  CHECK(cp->apex == "v1");
  auto po = pushout(b, "le_v0_va", "le_v0_vb");
  REQUIRE(po.has_value());
  CHECK(po->apex == "v1");
  auto ch = fx::chain3();
  auto ce = coequalizer(ch, "le_o0_o1", "le_o0_o1");
  REQUIRE(ce.has_value());
  CHECK(ce->apex == "o1");
}

TEST_CASE("find_extremal") {
  auto e = find_extremal(fx::chain3());
  CHECK(e.initial == "o0");
  CHECK(e.terminal == "o2");
  auto e2 = find_extremal(fx::discrete2());
  CHECK_FALSE(e2.initial.has_value());
  CHECK_FALSE(e2.terminal.has_value());
  auto e3 = find_extremal(fx::terminal_cat());
  CHECK(e3.initial == "s");
  CHECK(e3.terminal == "s");
}

TEST_CASE("adjunction: identity adjoint to itself (triangle mode)") {
  auto c = make_cat(fx::chain3());
  auto f = identity_functor(c);
  auto u = identity_nat(f);
  auto v = check_adjunction(f, f, AdjunctionMode::Triangle, &u, &u);
  CHECK(v.holds);
}

TEST_CASE("adjunction: meet-with-a is left adjoint to a-implies") {
  auto c = make_cat(fx::bool4());
  FunctorData F;  // va meet -
  F.name = "meet_a";
  F.dom = F.cod = c;
  for (const auto& x : c->objects) F.omap[x] = fx::bool4_meet("va", x);
  for (const auto& m : c->morphisms) {
    auto s = F.omap[c->src(m.id)];
    auto d = F.omap[c->dst(m.id)];
    F.mmap[m.id] = c->hom(s, d).at(0);
  }
  REQUIRE(F.validate().ok());
  FunctorData G;  // va implies -
  G.name = "impl_a";
  G.dom = G.cod = c;
  G.omap = {{"v0", "vb"}, {"va", "v1"}, {"vb", "vb"}, {"v1", "v1"}};
  for (const auto& m : c->morphisms) {
    auto s = G.omap[c->src(m.id)];
    auto d = G.omap[c->dst(m.id)];
    G.mmap[m.id] = c->hom(s, d).at(0);
  }
  REQUIRE(G.validate().ok());
  CHECK(check_adjunction(F, G, AdjunctionMode::Homset).holds);
  auto wrong = check_adjunction(G, F, AdjunctionMode::Homset);
  CHECK_FALSE(wrong.holds);
  CHECK_FALSE(wrong.witness.empty());
}

TEST_CASE("equivalence: identity, skeleton inclusion, collapse") {
  auto c = make_cat(fx::chain3());
  CHECK(check_equivalence(identity_functor(c)).holds);

  // a -> b with b duplicated up to iso as b2
  FinCategory dup;
  dup.name = "dup";
  dup.objects = {"a", "b", "b2"};
  dup.morphisms = {{"id_a", "a", "a"}, {"id_b", "b", "b"},
                   {"id_b2", "b2", "b2"}, {"f", "a", "b"},
                   {"f2", "a", "b2"},   {"u", "b", "b2"},
                   {"v", "b2", "b"}};
  dup.identities = {{"a", "id_a"}, {"b", "id_b"}, {"b2", "id_b2"}};
  dup.composition = {{{"u", "f"}, "f2"}, {{"v", "f2"}, "f"},
                     {{"u", "v"}, "id_b2"}, {{"v", "u"}, "id_b"}};
  REQUIRE(dup.validate().ok());
  auto dupp = make_cat(dup);
  auto skel = make_cat(full_subcategory(dup, {"a", "b"}, "skel"));
  FunctorData incl;
  incl.name = "incl";
  incl.dom = skel;
  incl.cod = dupp;
  for (const auto& o : skel->objects) incl.omap[o] = o;
  for (const auto& m : skel->morphisms) incl.mmap[m.id] = m.id;
  REQUIRE(incl.validate().ok());
  CHECK(check_equivalence(incl).holds);

  auto collapse = constant_functor(make_cat(fx::chain2()),
                                   make_cat(fx::terminal_cat()), "s");
  auto v = check_equivalence(collapse);
  CHECK_FALSE(v.holds);
  CHECK(v.witness.find("not full") != std::string::npos);

  // a genuinely unfaithful functor: collapse a parallel pair
  FinCategory par;
  par.name = "par";
  par.objects = {"a", "b"};
  par.morphisms = {{"id_a", "a", "a"}, {"id_b", "b", "b"},
                   {"f", "a", "b"}, {"g", "a", "b"}};
  par.identities = {{"a", "id_a"}, {"b", "id_b"}};
  REQUIRE(par.validate().ok());
  FunctorData sq;
  sq.name = "squash";
  sq.dom = make_cat(par);
  sq.cod = make_cat(fx::chain2());
  sq.omap = {{"a", "o0"}, {"b", "o1"}};
  sq.mmap = {{"id_a", "id_o0"}, {"id_b", "id_o1"},
             {"f", "le_o0_o1"}, {"g", "le_o0_o1"}};
  REQUIRE(sq.validate().ok());
  auto v2 = check_equivalence(sq);
  CHECK_FALSE(v2.holds);
  CHECK(v2.witness.find("not faithful") != std::string::npos);
}

TEST_CASE("find_isomorphism: structural, never by name") {
  auto a = make_cat(fx::chain3());
  auto renamed = fx::poset_cat("renamed", {"x", "y", "z"},
                               [](const std::string& p, const std::string& q) {
                                 return p <= q ? p <= q : false;
                               });
  // x < y < z lexicographically, same shape as chain3
  auto b = make_cat(renamed);
  auto iso = find_isomorphism(a, b);
  REQUIRE(iso.has_value());
  CHECK(iso->validate().ok());
  CHECK(iso->omap.at("o0") == "x");
  CHECK(iso->omap.at("o2") == "z");
  CHECK_FALSE(find_isomorphism(a, make_cat(fx::bool4())).has_value());
}

TEST_CASE("product category and functor algebra") {
  auto p = product(fx::chain2(), fx::chain2());
  CHECK(p.validate().ok());
  CHECK(p.objects.size() == 4);
  CHECK(p.morphisms.size() == 9);
  auto [x, y] = split_pair_id(pair_object_id("o1", "o0"));
  CHECK(x == "o1");
  CHECK(y == "o0");
}

TEST_CASE("opposite is involutive and dualizes homs") {
  auto c = fx::chain3();
  auto o = opposite(c);
  CHECK(o.validate().ok());
  CHECK(o.hom("o2", "o0").size() == 1);
  CHECK(o.hom("o0", "o2").empty());
  auto oo = opposite(o);
  oo.name = c.name;
  CHECK(oo == c);
}

TEST_CASE("whiskering and horizontal composition typecheck") {
  auto c = make_cat(fx::chain3());
  auto f = identity_functor(c);
  auto a = identity_nat(f);
  auto h = horizontal_compose(a, a);
  CHECK(h.validate().ok());
  CHECK(h.same_components(identity_nat(f)));
}

TEST_CASE("size guard rejects big categories") {
  auto big = fx::poset_cat("big", [] {
    std::vector<std::string> v;
    for (int i = 0; i < 40; ++i) v.push_back("e" + std::to_string(i + 10));
    return v;
  }(), [](const std::string& x, const std::string& y) { return x <= y; });
  CHECK(big.morphisms.size() > size_guard());
  FunctorData d = identity_functor(make_cat(big));
  CHECK_THROWS_AS((void)limit(d), Error);
}
