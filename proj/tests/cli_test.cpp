#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "fibalg/cli.hpp"
#include "fibalg/dsl.hpp"

using namespace fibalg;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string root() { return FIBALG_SOURCE_DIR; }

json load_schema(const std::string& name) {
  return json::parse(slurp(root() + "/schemas/" + name + ".schema.json"));
}

// the subset of json-schema the shipped schemas use: type (string or list),
// enum, properties, required, additionalProperties:false, items, and
// $ref into #/definitions
bool conforms(const json& value, const json& schema, const json& defs,
              std::string* why) {
  if (schema.contains("$ref")) {
    std::string r = schema["$ref"];
    auto key = r.substr(r.rfind('/') + 1);
    return conforms(value, defs.at(key), defs, why);
  }
  auto type_ok = [&](const std::string& t) {
    if (t == "object") return value.is_object();
    if (t == "array") return value.is_array();
    if (t == "string") return value.is_string();
    if (t == "integer") return value.is_number_integer() ||
                                value.is_number_unsigned();
    if (t == "number") return value.is_number();
    if (t == "boolean") return value.is_boolean();
    if (t == "null") return value.is_null();
    return false;
  };
  if (schema.contains("type")) {
    const auto& t = schema["type"];
    bool any = t.is_array()
                   ? std::any_of(t.begin(), t.end(),
                                 [&](const json& x) { return type_ok(x); })
                   : type_ok(t.get<std::string>());
    if (!any) {
      *why = "type mismatch: " + value.dump() + " vs " + t.dump();
      return false;
    }
  }
  if (schema.contains("enum")) {
    bool any = false;
    for (const auto& e : schema["enum"])
      if (e == value) any = true;
    if (!any) {
      *why = "enum mismatch: " + value.dump();
      return false;
    }
  }
  if (value.is_object()) {
    if (schema.contains("required"))
      for (const auto& r : schema["required"])
        if (!value.contains(r.get<std::string>())) {
          *why = "missing required key " + r.dump();
          return false;
        }
    const json props =
        schema.contains("properties") ? schema["properties"] : json::object();
    for (const auto& [k, v] : value.items()) {
      if (props.contains(k)) {
        if (!conforms(v, props[k], defs, why)) return false;
      } else if (schema.contains("additionalProperties") &&
                 schema["additionalProperties"] == false) {
        *why = "unexpected key '" + k + "'";
        return false;
      }
    }
  }
  if (value.is_array() && schema.contains("items"))
    for (const auto& v : value)
      if (!conforms(v, schema["items"], defs, why)) return false;
  return true;
}

void check_report(const cli::RunResult& r) {
  auto report = json::parse(r.report_json);
  std::string why;
  auto envelope = load_schema("report");
  REQUIRE_MESSAGE(conforms(report, envelope, json::object(), &why), why);
  std::string cmd = report["command"];
  auto schema = load_schema(cmd);
  json defs =
      schema.contains("definitions") ? schema["definitions"] : json::object();
  REQUIRE_MESSAGE(conforms(report["payload"], schema, defs, &why),
                  cmd, ": ", why);
}

cli::RunResult run_on(const std::vector<std::string>& args,
                      const std::string& text) {
  return cli::run(args, &text);
}

}  // namespace

TEST_CASE("every catalog entry pipes through check") {
  for (const auto& n : cli::example_names()) {
    auto text = cli::emit_example(n);
    auto r = run_on({"check", "-"}, text);
    INFO(n, ": ", r.output);
    CHECK(r.exit_code == 0);
    check_report(r);
  }
}

TEST_CASE("golden .fib files match their catalog entries byte for byte") {
  for (const auto& n : cli::example_names()) {
    auto golden = slurp(root() + "/data/" + n + ".fib");
    CHECK(golden == cli::emit_example(n));
    // and the canonical serializer is a fixpoint on the file
    auto parsed = dsl::parse(golden);
    REQUIRE(parsed.ok());
    CHECK(dsl::serialize(*parsed.workspace) == golden);
  }
}

TEST_CASE("exit codes: usage, parse, validation, construction") {
  CHECK(cli::run({"frobnicate"}).exit_code == 1);
  CHECK(cli::run({"total", "--param", "P"}).exit_code == 1);  // missing file
  CHECK(run_on({"check", "-"}, "category ??").exit_code == 2);
  CHECK(run_on({"check", "-"}, "category C { objects: a; morphisms: f : a -> z; }")
            .exit_code == 3);
  auto w = cli::emit_example("writer_chain3");
  CHECK(run_on({"total", "--param", "nope", "-"}, w).exit_code == 3);
  // reindexing an algebra that does not live over the morphism's codomain
  auto r = run_on({"reindex", "--param", "writer_chain3", "--along",
                   "le_o0_o1", "--algebra", "o0__o0__id_o0", "-"},
                  w);
  CHECK(r.exit_code == 4);
  check_report(r);
}

TEST_CASE("total: the writer EM total has the six expected objects") {
  auto w = cli::emit_example("writer_chain3");
  auto r = run_on({"total", "--param", "writer_chain3", "--flavor", "em",
                   "--json", "-"},
                  w);
  CHECK(r.exit_code == 0);
  check_report(r);
  auto report = json::parse(r.report_json);
  CHECK(report["payload"]["objects"] == 6);
  // oracle: pairs (A, x) with A <= x in the 3-chain
  std::set<std::string> expect;
  for (std::string a : {"o0", "o1", "o2"})
    for (std::string x : {"o0", "o1", "o2"})
      if (a <= x) expect.insert(a + "__" + x + "__id_" + x);
  std::set<std::string> got;
  for (const auto& o : report["payload"]["object_ids"])
    got.insert(o.get<std::string>());
  CHECK(got == expect);
}

TEST_CASE("compare-hat reports the product-presentation equivalence") {
  auto w = cli::emit_example("writer_chain3");
  auto r = run_on({"compare-hat", "--param", "writer_chain3", "-"}, w);
  CHECK(r.exit_code == 0);
  check_report(r);
  auto p = json::parse(r.report_json)["payload"];
  CHECK(p["equivalence"]["holds"] == true);
  CHECK(p["hom_counts_match"] == true);
}

TEST_CASE("limits and coproduct agree with the worked instances") {
  auto w = cli::emit_example("writer_chain3");
  auto r = run_on({"limits", "--total", "writer_chain3", "--objects",
                   "o1__o1__id_o1,o0__o2__id_o2", "-"},
                  w);
  CHECK(r.exit_code == 0);
  check_report(r);
  CHECK(json::parse(r.report_json)["payload"]["apex"] == "o0__o1__id_o1");
  auto c = run_on({"coproduct", "--total", "writer_chain3", "--left",
                   "o1__o1__id_o1", "--right", "o0__o2__id_o2", "-"},
                  w);
  CHECK(c.exit_code == 0);
  check_report(c);
  CHECK(json::parse(c.report_json)["payload"]["object"] == "o1__o2__id_o2");
}

TEST_CASE("verify-fib on the codomain fibration") {
  auto t = cli::emit_example("codomain2");
  auto r = run_on({"verify-fib", "--total", "codomain2", "-"}, t);
  CHECK(r.exit_code == 0);
  check_report(r);
  CHECK(json::parse(r.report_json)["payload"]["fibration"]["holds"] == true);
}

TEST_CASE("swindle along the writer connecting map") {
  auto w = cli::emit_example("writer_chain3");
  auto r = run_on({"swindle", "--alpha", "al_le_o0_o1", "--algebra", "id_o0",
                   "-"},
                  w);
  CHECK(r.exit_code == 0);
  check_report(r);
  auto p = json::parse(r.report_json)["payload"];
  CHECK(p["stabilized"] == true);
  CHECK(p["carrier"] == "o1");
}

TEST_CASE("recognize: EM fixpoint and the codomain non-example") {
  auto w = cli::emit_example("writer_chain3");
  auto r = run_on({"recognize", "--fibration", "writer_chain3", "-"}, w);
  CHECK(r.exit_code == 0);
  check_report(r);
  auto p = json::parse(r.report_json)["payload"];
  CHECK(p["pruned_report"]["pruned"] == true);
  CHECK(p["is_em"] == true);

  auto t = cli::emit_example("codomain2");
  auto c = run_on({"recognize", "--fibration", "codomain2", "-"}, t);
  CHECK(c.exit_code == 0);
  check_report(c);
  auto q = json::parse(c.report_json)["payload"];
  CHECK(q["pruned_report"]["pruned"] == true);
  CHECK(q["is_em"] == false);
  CHECK(q["total_objects"] == 3);
  CHECK(q["em_objects"] == 2);
  CHECK_FALSE(q["witness"].get<std::string>().empty());
}

TEST_CASE("semidirect: the inversion action is S3") {
  auto g = cli::emit_example("groups");
  auto r = run_on({"semidirect", "--action", "z2_on_z3_inv", "-"}, g);
  CHECK(r.exit_code == 0);
  check_report(r);
  auto p = json::parse(r.report_json)["payload"];
  CHECK(p["order"] == 6);
  CHECK(p["iso_to"] == "S3");
}

TEST_CASE("examples list names every bundled entry") {
  auto r = cli::run({"examples", "list"});
  CHECK(r.exit_code == 0);
  check_report(r);
  for (const auto& n : cli::example_names())
    CHECK(r.output.find(n) != std::string::npos);
  CHECK(cli::run({"examples", "emit", "nosuch"}).exit_code == 3);
}

TEST_CASE("reports are deterministic apart from timing") {
  auto w = cli::emit_example("writer_chain3");
  auto a = run_on({"recognize", "--fibration", "writer_chain3", "--json", "-"},
                  w);
  auto b = run_on({"recognize", "--fibration", "writer_chain3", "--json", "-"},
                  w);
  CHECK(json::parse(a.report_json)["payload"] ==
        json::parse(b.report_json)["payload"]);
}
