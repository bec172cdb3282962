#include "fibalg/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "fibalg/catalog.hpp"
#include "fibalg/dsl.hpp"
#include "fibalg/limcolim.hpp"
#include "fibalg/recognize.hpp"

namespace fibalg::cli {

using nlohmann::json;

namespace {

struct CommandFail {
  int code;  // 2 parse, 3 validation, 4 construction
  json payload;
};

json diag_json(const std::vector<dsl::Diagnostic>& ds) {
  json out = json::array();
  for (const auto& d : ds)
    out.push_back({{"severity", dsl::severity_name(d.severity)},
                   {"message", d.message},
                   {"line", d.span.line},
                   {"col", d.span.col},
                   {"length", d.span.length}});
  return out;
}

int parse_fail_code(const std::vector<dsl::Diagnostic>& ds) {
  for (const auto& d : ds)
    if (d.severity == dsl::Diagnostic::Severity::Lexical ||
        d.severity == dsl::Diagnostic::Severity::Syntactic)
      return 2;
  return 3;
}

std::string slurp(const std::string& file, const std::string* stdin_data) {
  if (file == "-") {
    if (stdin_data) return *stdin_data;
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(file);
  if (!in)
    throw CommandFail{1, {{"witness", "cannot open file '" + file + "'"}}};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

dsl::Workspace load(const std::string& file, const std::string* stdin_data) {
  auto r = dsl::parse(slurp(file, stdin_data));
  if (!r.ok())
    throw CommandFail{parse_fail_code(r.diagnostics),
                      {{"diagnostics", diag_json(r.diagnostics)}}};
  return std::move(*r.workspace);
}

const dsl::ParamEntity& need_param(const dsl::Workspace& ws,
                                   const std::string& name) {
  auto it = ws.params.find(name);
  if (it == ws.params.end())
    throw CommandFail{
        3, {{"witness", "unknown parametrized monad '" + name + "'"}}};
  return it->second;
}

TotalFlavor parse_flavor(const std::string& f) {
  if (f == "em") return TotalFlavor::EM;
  if (f == "alg") return TotalFlavor::Alg;
  if (f == "kl") return TotalFlavor::Kl;
  if (f == "cokl") return TotalFlavor::coKl;
  if (f == "coem") return TotalFlavor::coEM;
  if (f == "coalg") return TotalFlavor::coAlg;
  throw CommandFail{1, {{"witness", "unknown flavor '" + f + "'"}}};
}

TotalCategory build_named_total(const dsl::Workspace& ws,
                                const std::string& name) {
  if (auto it = ws.fibrations.find(name); it != ws.fibrations.end())
    return grothendieck(it->second.data);
  if (auto it = ws.params.find(name); it != ws.params.end())
    return build_total(it->second.data, TotalFlavor::EM);
  throw CommandFail{
      3, {{"witness", "no fibration or parametrized monad named '" + name +
                          "'"}}};
}

AlgebraObject parse_alg_id(const std::string& id) {
  auto p1 = id.find("__");
  auto p2 = p1 == std::string::npos ? p1 : id.find("__", p1 + 2);
  AlgebraObject a;
  if (p1 == std::string::npos)
    throw CommandFail{3, {{"witness", "malformed algebra id '" + id + "'"}}};
  a.param = id.substr(0, p1);
  if (p2 == std::string::npos) {
    a.carrier = id.substr(p1 + 2);
  } else {
    a.carrier = id.substr(p1 + 2, p2 - p1 - 2);
    a.xi = id.substr(p2 + 2);
  }
  return a;
}

json verdict_json(const Verdict& v) {
  return {{"holds", v.holds}, {"witness", v.witness}};
}

std::string human(const json& payload) {
  std::ostringstream out;
  for (const auto& [k, v] : payload.items()) {
    if (v.is_string())
      out << "  " << k << ": " << v.get<std::string>() << "\n";
    else if (v.is_array())
      out << "  " << k << ": " << v.size() << " entries\n";
    else
      out << "  " << k << ": " << v.dump() << "\n";
  }
  return out.str();
}

struct GroupTable {
  std::string display;
  FinGroup group;
};

const std::vector<GroupTable>& bundled_groups() {
  static const std::vector<GroupTable> gs = {
      {"Z2", cat::z2()},   {"Z3", cat::z3()}, {"Z4", cat::z4()},
      {"Z2xZ2", cat::z2z2()}, {"S3", cat::s3()}, {"D4", cat::d4()}};
  return gs;
}

}  // namespace

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names = {
      "chain3",      "bool4",          "writer_chain3", "coreader_bool4",
      "semiauto_m2", "codomain2",      "points_splitepi", "groups"};
  return names;
}

std::string emit_example(const std::string& name) {
  dsl::Workspace w;
  if (name == "chain3") {
    dsl::add_category(w, cat::chain3());
  } else if (name == "bool4") {
    dsl::add_category(w, cat::bool4());
  } else if (name == "writer_chain3") {
    dsl::add_param_monad(w, cat::writer_chain3());
  } else if (name == "coreader_bool4") {
    dsl::add_param_monad(w, cat::coreader_bool4());
  } else if (name == "semiauto_m2") {
    dsl::add_param_monad(w, cat::semiauto_m2());
  } else if (name == "codomain2") {
    dsl::add_fibration(w, cat::codomain2());
  } else if (name == "points_splitepi") {
    dsl::add_total(w, cat::points_splitepi());
  } else if (name == "groups") {
    dsl::add_group(w, cat::z2());
    dsl::add_group(w, cat::z3());
    dsl::add_group(w, cat::z4());
    dsl::add_group(w, cat::z2z2());
    dsl::add_group(w, cat::s3());
    dsl::add_group(w, cat::d4());
    dsl::add_action(w, cat::z2_on_z3_inversion());
  } else {
    throw Error("unknown example '" + name + "'");
  }
  return dsl::serialize(w);
}

RunResult run(const std::vector<std::string>& args,
              const std::string* stdin_data) {
  CLI::App app{"finite fibrations-of-algebras workbench", "fibalg"};
  app.require_subcommand(1);
  bool jsonout = false;
  app.add_flag("--json", jsonout, "machine-readable report");

  std::string file, param, flavor = "em", along, algebra, total, diagram,
              objects, left, right, alpha, fibration, action, mode, name;
  std::size_t cap = 64;

  auto* c_check = app.add_subcommand("check", "validate a .fib file");
  c_check->add_option("file", file)->required();

  auto* c_total = app.add_subcommand("total", "build a total category");
  c_total->add_option("--param", param)->required();
  c_total->add_option("--flavor", flavor);
  c_total->add_option("file", file)->required();

  auto* c_reindex = app.add_subcommand("reindex", "reindex an algebra");
  c_reindex->add_option("--param", param)->required();
  c_reindex->add_option("--along", along)->required();
  c_reindex->add_option("--algebra", algebra)->required();
  c_reindex->add_option("file", file)->required();

  auto* c_verify = app.add_subcommand("verify-fib", "cartesian lift check");
  c_verify->add_option("--total", total)->required();
  c_verify->add_option("file", file)->required();

  auto* c_hat = app.add_subcommand("compare-hat",
                                   "compare with algebras of the induced "
                                   "monad on the product");
  c_hat->add_option("--param", param)->required();
  c_hat->add_option("file", file)->required();

  auto* c_lim = app.add_subcommand("limits", "limit by the creation recipe");
  c_lim->add_option("--total", total)->required();
  c_lim->add_option("--diagram", diagram);
  c_lim->add_option("--objects", objects);
  c_lim->add_option("file", file)->required();

  auto* c_cop = app.add_subcommand("coproduct", "binary coproduct recipe");
  c_cop->add_option("--total", total)->required();
  c_cop->add_option("--left", left)->required();
  c_cop->add_option("--right", right)->required();
  c_cop->add_option("file", file)->required();

  auto* c_sw = app.add_subcommand("swindle", "pushout-chain free algebra");
  c_sw->add_option("--alpha", alpha)->required();
  c_sw->add_option("--algebra", algebra)->required();
  c_sw->add_option("--cap", cap);
  c_sw->add_option("file", file)->required();

  auto* c_rec = app.add_subcommand("recognize", "pruned analysis + EM "
                                                "recognition");
  c_rec->add_option("--fibration", fibration)->required();
  c_rec->add_option("file", file)->required();

  auto* c_sd = app.add_subcommand("semidirect", "semidirect product table");
  c_sd->add_option("--action", action)->required();
  c_sd->add_option("file", file)->required();

  auto* c_ex = app.add_subcommand("examples", "bundled catalog");
  c_ex->add_option("mode", mode)->required()->check(
      CLI::IsMember({"list", "emit"}));
  c_ex->add_option("name", name);

  for (auto* sc : {c_check, c_total, c_reindex, c_verify, c_hat, c_lim, c_cop,
                   c_sw, c_rec, c_sd, c_ex})
    sc->fallthrough();

  std::vector<std::string> argv = args;
  std::reverse(argv.begin(), argv.end());
  RunResult res;
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    res.output = app.help();
    return res;
  } catch (const CLI::ParseError& e) {
    res.exit_code = 1;
    res.output = std::string(e.what()) + "\n";
    return res;
  }

  auto start = std::chrono::steady_clock::now();
  std::string command;
  json payload;
  bool ok = true;
  int code = 0;
  std::string raw;  // bypasses the report wrapper (examples emit)

  try {
    if (*c_check) {
      command = "check";
      auto r = dsl::parse(slurp(file, stdin_data));
      payload["diagnostics"] = diag_json(r.diagnostics);
      payload["entities"] =
          r.ok() ? json(r.workspace->order.size()) : json(0);
      if (!r.ok()) {
        ok = false;
        code = parse_fail_code(r.diagnostics);
      }
    } else if (*c_total) {
      command = "total";
      auto ws = load(file, stdin_data);
      const auto& pe = need_param(ws, param);
      auto fl = parse_flavor(flavor);
      TotalCategory t =
          (fl == TotalFlavor::Alg || fl == TotalFlavor::coAlg)
              ? build_total(pe.data.underlying(), fl)
              : build_total(pe.data, fl);
      payload["flavor"] = flavor_name(fl);
      payload["objects"] = t.cat->objects.size();
      payload["morphisms"] = t.cat->morphisms.size();
      payload["object_ids"] = t.cat->objects;
    } else if (*c_reindex) {
      command = "reindex";
      auto ws = load(file, stdin_data);
      const auto& pe = need_param(ws, param);
      if (!pe.data.params->has_morphism(along))
        throw CommandFail{
            3, {{"witness", "unknown parameter morphism '" + along + "'"}}};
      auto a = parse_alg_id(algebra);
      if (!check_algebra(pe.data, a).ok())
        throw CommandFail{3,
                          {{"witness", "'" + algebra + "' is not an algebra"}}};
      auto r = reindex(pe.data, along, a);
      payload["param"] = r.param;
      payload["carrier"] = r.carrier;
      payload["xi"] = r.xi;
      payload["id"] = alg_object_id(r);
    } else if (*c_verify) {
      command = "verify-fib";
      auto ws = load(file, stdin_data);
      auto t = build_named_total(ws, total);
      auto fc = verify_fibration(t, Variance::Fibration);
      auto oc = verify_fibration(t, Variance::Opfibration);
      payload["fibration"] = verdict_json(fc.verdict);
      payload["opfibration"] = verdict_json(oc.verdict);
      payload["cleavage_size"] = fc.cleavage.size();
    } else if (*c_hat) {
      command = "compare-hat";
      auto ws = load(file, stdin_data);
      const auto& pe = need_param(ws, param);
      auto hc = em_hat_comparison(pe.data);
      bool counts = true;
      const auto& dom = *hc.comparison.dom;
      const auto& cod = *hc.comparison.cod;
      for (const auto& x : dom.objects)
        for (const auto& y : dom.objects)
          if (dom.hom(x, y).size() !=
              cod.hom(hc.comparison.on_object(x), hc.comparison.on_object(y))
                  .size())
            counts = false;
      payload["equivalence"] = verdict_json(hc.equivalence);
      payload["triangle"] = hc.triangle;
      payload["hom_counts_match"] = counts;
      payload["total_objects"] = dom.objects.size();
      payload["hat_objects"] = cod.objects.size();
    } else if (*c_lim) {
      command = "limits";
      auto ws = load(file, stdin_data);
      const auto& pe = need_param(ws, total);
      auto t = build_total(pe.data, TotalFlavor::EM);
      FunctorData D;
      if (!objects.empty()) {
        FinCategory shape;
        shape.name = "shape";
        D.dom = nullptr;
        std::istringstream ss(objects);
        std::string o;
        int i = 0;
        std::vector<std::string> picks;
        while (std::getline(ss, o, ',')) picks.push_back(o);
        for (const auto& p : picks) {
          if (!t.cat->has_object(p))
            throw CommandFail{
                3, {{"witness", "unknown total object '" + p + "'"}}};
          auto d = "d" + std::to_string(i++);
          shape.objects.push_back(d);
          shape.morphisms.push_back({"id_" + d, d, d});
          shape.identities[d] = "id_" + d;
          D.omap[d] = p;
          D.mmap["id_" + d] = t.cat->identity(p);
        }
        D.dom = make_cat(shape);
        D.cod = t.cat;
      } else if (!diagram.empty()) {
        auto it = ws.functors.find(diagram);
        if (it == ws.functors.end())
          throw CommandFail{3,
                            {{"witness", "unknown functor '" + diagram + "'"}}};
        if (it->second.cod != t.cat->name)
          throw CommandFail{
              3, {{"witness", "diagram codomain '" + it->second.cod +
                                  "' is not the total category"}}};
        D = it->second.data;
        D.cod = t.cat;
        for (const auto& [o, img] : D.omap)
          if (!t.cat->has_object(img))
            throw CommandFail{
                3, {{"witness", "unknown total object '" + img + "'"}}};
      } else {
        throw CommandFail{1, {{"witness", "need --diagram or --objects"}}};
      }
      auto cone = limit_in_total(t, pe.data, D);
      payload["found"] = cone.has_value();
      if (cone) {
        payload["apex"] = cone->apex;
        payload["legs"] = cone->legs;
      }
    } else if (*c_cop) {
      command = "coproduct";
      auto ws = load(file, stdin_data);
      const auto& pe = need_param(ws, total);
      auto t = build_total(pe.data, TotalFlavor::EM);
      for (const auto& o : {left, right})
        if (!t.cat->has_object(o))
          throw CommandFail{3,
                            {{"witness", "unknown total object '" + o + "'"}}};
      auto r = linton_coproduct(t, pe.data, left, right);
      payload["found"] = r.has_value();
      if (r) {
        payload["object"] = r->total_id;
        payload["inj_left"] = r->inj_left;
        payload["inj_right"] = r->inj_right;
      }
    } else if (*c_sw) {
      command = "swindle";
      auto ws = load(file, stdin_data);
      auto it = ws.nats.find(alpha);
      if (it == ws.nats.end())
        throw CommandFail{
            3, {{"witness", "unknown transformation '" + alpha + "'"}}};
      const auto& n = it->second.data;
      if (!n.source.dom->has_morphism(algebra))
        throw CommandFail{
            3, {{"witness", "unknown structure map '" + algebra + "'"}}};
      auto X = n.source.dom->dst(algebra);
      auto tr = swindle_left_adjoint(n, X, algebra, cap);
      payload["stabilized"] = tr.stabilized_at.has_value();
      if (tr.stabilized_at) payload["steps"] = *tr.stabilized_at;
      json chain = json::array();
      for (const auto& [p, tk] : tr.chain)
        chain.push_back({{"pushout", p}, {"link", tk}});
      payload["chain"] = chain;
      payload["carrier"] = tr.carrier;
      payload["xi"] = tr.xi;
      payload["unit"] = tr.unit;
      payload["error"] = tr.error;
      if (!tr.error.empty()) throw CommandFail{4, payload};
    } else if (*c_rec) {
      command = "recognize";
      auto ws = load(file, stdin_data);
      auto t = build_named_total(ws, fibration);
      auto pr = check_pruned(t);
      json fibinit = json::object();
      for (const auto& [a, b] : pr.fibrewise_initials) fibinit[a] = b;
      json reqcop = json::object();
      for (const auto& [k, b] : pr.required_coproducts) reqcop[k] = b;
      payload["pruned_report"] = {
          {"has_initial_base", pr.has_initial_base},
          {"fibrewise_initials", fibinit},
          {"p_left_adjoint", pr.p_left_adjoint.has_value()},
          {"p_left_ff", verdict_json(pr.p_left_ff)},
          {"required_coproducts", reqcop},
          {"p_preserves_them", verdict_json(pr.p_preserves_them)},
          {"fibrewise_terminals_preserved",
           verdict_json(pr.fibrewise_terminals_preserved)},
          {"pruned", pr.pruned}};
      auto rr = comparison_unit(t);
      payload["triangle"] = rr.triangle;
      payload["is_em"] = rr.is_em.holds;
      payload["witness"] = rr.is_em.witness;
      payload["total_objects"] = t.cat->objects.size();
      payload["em_objects"] = rr.em.cat->objects.size();
    } else if (*c_sd) {
      command = "semidirect";
      auto ws = load(file, stdin_data);
      auto it = ws.actions.find(action);
      if (it == ws.actions.end())
        throw CommandFail{3, {{"witness", "unknown action '" + action + "'"}}};
      FinMonoid sd;
      bool is_group = true;
      try {
        sd = semidirect(it->second.data);
      } catch (const Error&) {
        sd = monoid_semidirect(it->second.data);
        is_group = false;
      }
      payload["order"] = sd.elements.size();
      payload["is_group"] = is_group;
      payload["table"] = monoid_table(sd);
      payload["iso_to"] = nullptr;
      for (const auto& g : bundled_groups())
        if (find_monoid_iso(sd, g.group)) {
          payload["iso_to"] = g.display;
          break;
        }
    } else if (*c_ex) {
      command = "examples";
      if (mode == "list") {
        payload["names"] = example_names();
        for (const auto& n : example_names()) raw += n + "\n";
      } else {
        if (name.empty())
          throw CommandFail{1, {{"witness", "emit needs a name"}}};
        try {
          raw = emit_example(name);
        } catch (const Error& e) {
          throw CommandFail{3, {{"witness", e.what()}}};
        }
        payload["name"] = name;
        payload["text"] = raw;
      }
    }
  } catch (const CommandFail& f) {
    ok = false;
    code = f.code;
    payload = f.payload;
  } catch (const Error& e) {
    ok = false;
    code = 4;
    payload = {{"witness", e.what()}};
  }

  auto ms = std::chrono::duration<double, std::milli>(
                std::chrono::steady_clock::now() - start)
                .count();
  json report = {{"command", command},
                 {"status", ok ? "ok" : "fail"},
                 {"payload", payload},
                 {"timing_ms", ms}};
  res.report_json = report.dump(2);
  res.exit_code = code;
  if (jsonout) {
    res.output = res.report_json + "\n";
  } else if (!raw.empty() && ok) {
    res.output = raw;
  } else {
    res.output = command + ": " + (ok ? "ok" : "fail") + "\n" + human(payload);
  }
  return res;
}

}  // namespace fibalg::cli
