// fusionkit-cli: JSON reports over the C interface.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fusionkit.h"
#include "json.hpp"

using Json = nlohmann::ordered_json;

namespace {

struct InputError {
  int status;
  std::string message;
};

void check(int status) {
  if (status != FK_OK) throw InputError{status, fk_last_error()};
}

Json take(char* s) {
  Json j = Json::parse(s);
  fk_string_free(s);
  return j;
}

struct GroupDel {
  void operator()(fk_group* g) const { fk_group_free(g); }
};
struct SysDel {
  void operator()(fk_system* s) const { fk_system_free(s); }
};
using GroupPtr = std::unique_ptr<fk_group, GroupDel>;
using SysPtr = std::unique_ptr<fk_system, SysDel>;

struct Options {
  std::string group;
  int prime = 0;
  std::string acting, base;
  std::string sub_acting, sub_base;
  std::string sub2_acting, sub2_base;
  std::string kernel, t, map_file, name;
  int max_order = 24;
  int max_t = 16;
  bool oracle = false;
  bool assert_all = false;
  bool pretty = false;
  bool timing = false;
};

const char* opt(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

GroupPtr load(const Options& o) {
  fk_group* g = nullptr;
  check(fk_group_load(o.group.c_str(), o.prime, &g));
  return GroupPtr(g);
}

SysPtr build(fk_group* g, const std::string& acting, const std::string& base) {
  fk_system* s = nullptr;
  check(fk_system_build(g, opt(acting), opt(base), &s));
  return SysPtr(s);
}

Json system_json(const fk_system* s) {
  char* out = nullptr;
  check(fk_system_json(s, &out));
  return take(out);
}

Json inputs_of(const std::string& cmd, const Options& o) {
  Json in = Json::object();
  if (!o.group.empty()) in["group"] = o.group;
  if (o.prime) in["prime"] = o.prime;
  auto put = [&](const char* k, const std::string& v) {
    if (!v.empty()) in[k] = v;
  };
  put("acting", o.acting);
  put("base", o.base);
  put("sub_acting", o.sub_acting);
  put("sub_base", o.sub_base);
  put("sub2_acting", o.sub2_acting);
  put("sub2_base", o.sub2_base);
  put("kernel", o.kernel);
  put("t", o.t);
  put("map", o.map_file);
  put("name", o.name);
  if (cmd == "theorem-a") in["max_t"] = o.max_t;
  if (cmd == "sweep") {
    in["max_order"] = o.max_order;
    in["max_t"] = o.max_t;
    in["oracle"] = o.oracle;
  }
  return in;
}

Json run(const std::string& cmd, const Options& o) {
  if (cmd == "examples") {
    char* out = nullptr;
    check(fk_example(o.name.c_str(), &out));
    return take(out);
  }
  if (cmd == "sweep") {
    char* out = nullptr;
    check(fk_sweep(o.max_order, o.max_t, o.oracle ? 1 : 0, &out));
    return take(out);
  }
  GroupPtr g = load(o);
  SysPtr f = build(g.get(), o.acting, o.base);
  char* out = nullptr;
  if (cmd == "build") {
    Json j{{"system", system_json(f.get())}, {"results", Json::array()}};
    return j;
  }
  if (cmd == "saturated") {
    check(fk_saturated(f.get(), &out));
    return take(out);
  }
  if (cmd == "strongly-closed") {
    check(fk_strongly_closed(f.get(), &out));
    return take(out);
  }
  if (cmd == "normality") {
    SysPtr e = build(g.get(), o.sub_acting, o.sub_base);
    check(fk_normality(f.get(), e.get(), &out));
    return take(out);
  }
  if (cmd == "quotient") {
    check(fk_quotient(f.get(), o.kernel.c_str(), nullptr, &out));
    return take(out);
  }
  if (cmd == "opprime") {
    SysPtr e = o.sub_acting.empty() && o.sub_base.empty() ? nullptr : build(g.get(), o.sub_acting, o.sub_base);
    fk_system* r = nullptr;
    check(fk_opprime(e ? e.get() : f.get(), &r));
    SysPtr res(r);
    check(fk_normality(f.get(), res.get(), &out));
    Json j = take(out);
    j["system"] = system_json(res.get());
    return j;
  }
  if (cmd == "map-check") {
    std::string text;
    if (o.map_file.empty()) {
      SysPtr e = o.sub_acting.empty() && o.sub_base.empty() ? nullptr : build(g.get(), o.sub_acting, o.sub_base);
      check(fk_aut_map(e ? e.get() : f.get(), &out));
      text = out;
      fk_string_free(out);
    } else {
      std::ifstream in(o.map_file);
      if (!in) throw InputError{FK_PARSE_ERROR, "cannot read " + o.map_file};
      std::stringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
    check(fk_map_check(f.get(), text.c_str(), &out));
    Json j = take(out);
    j["map"] = Json::parse(text);
    return j;
  }
  if (cmd == "wedge") {
    SysPtr e1 = build(g.get(), o.sub_acting, o.sub_base);
    SysPtr e2 = build(g.get(), o.sub2_acting, o.sub2_base);
    fk_system* w = nullptr;
    check(fk_wedge(f.get(), e1.get(), e2.get(), &w));
    SysPtr res(w);
    check(fk_normality(f.get(), res.get(), &out));
    Json j = take(out);
    j["system"] = system_json(res.get());
    return j;
  }
  if (cmd == "based") {
    check(fk_based(f.get(), o.t.c_str(), &out));
    return take(out);
  }
  if (cmd == "hypercentre") {
    check(fk_hypercentre(f.get(), &out));
    return take(out);
  }
  if (cmd == "perfect") {
    check(fk_perfect(f.get(), &out));
    return take(out);
  }
  if (cmd == "theorem-a") {
    check(fk_theorem_a(f.get(), opt(o.t), o.max_t, &out));
    return take(out);
  }
  throw InputError{FK_PRECONDITION_FAILED, "unknown command " + cmd};
}

bool all_hold(const Json& j) {
  for (const Json& r : j.value("results", Json::array()))
    if (!r.value("holds", false)) return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fusion systems on finite p-groups: constructions, predicates and sweeps."};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Options o;
  app.add_flag("--assert", o.assert_all, "Exit 1 when any reported predicate fails");
  app.add_flag("--pretty", o.pretty, "Indent the JSON report");
  app.add_flag("--timing", o.timing, "Add timing_ms to the report");

  auto with_group = [&](CLI::App* sub) {
    sub->add_option("group", o.group, "Catalog name or group spec file")->required();
    sub->add_option("--prime,-p", o.prime, "Prime (defaults to the spec's)");
    sub->add_option("--acting", o.acting, "Generators of the acting subgroup, ';'-separated cycles");
    sub->add_option("--base", o.base, "Generators or key of the base p-subgroup");
  };
  auto with_sub = [&](CLI::App* sub) {
    sub->add_option("--sub-acting", o.sub_acting, "Acting subgroup of the subsystem");
    sub->add_option("--sub-base", o.sub_base, "Base of the subsystem");
  };

  std::vector<std::pair<std::string, std::string>> cmds = {
      {"build", "Build F_P(G) (or F_base(acting)) and print it"},
      {"saturated", "Both saturation criteria"},
      {"strongly-closed", "List strongly closed subgroups"},
      {"normality", "Invariant, weakly normal and normal verdicts for a subsystem"},
      {"quotient", "Quotient by a strongly closed subgroup"},
      {"opprime", "O^{p'} of a system or subsystem"},
      {"map-check", "Check a weakly normal map (JSON file or the map of a subsystem)"},
      {"wedge", "Intersection of two weakly normal subsystems"},
      {"based", "Minimal and maximal weakly normal subsystems on a subgroup"},
      {"hypercentre", "Centre, upper central series and X subgroup"},
      {"perfect", "Perfectness and the Z_2 = Z_1 check"},
      {"theorem-a", "O^{p'} of every weakly normal subsystem is normal"},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, help] : cmds) {
    CLI::App* sub = app.add_subcommand(name, help);
    with_group(sub);
    subs[name] = sub;
  }
  for (const char* n : {"normality", "opprime", "map-check", "wedge"}) with_sub(subs[n]);
  subs["wedge"]->add_option("--sub2-acting", o.sub2_acting, "Acting subgroup of the second subsystem");
  subs["wedge"]->add_option("--sub2-base", o.sub2_base, "Base of the second subsystem");
  subs["quotient"]->add_option("--kernel", o.kernel, "Strongly closed kernel")->required();
  subs["based"]->add_option("--t", o.t, "Strongly closed subgroup")->required();
  subs["theorem-a"]->add_option("--t", o.t, "Restrict to one strongly closed subgroup");
  subs["theorem-a"]->add_option("--max-t", o.max_t, "Largest subgroup order searched");
  subs["map-check"]->add_option("--map", o.map_file, "AutMap JSON file");
  CLI::App* ex = app.add_subcommand("examples", "Reproduce a named example and assert its outcome");
  ex->add_option("name", o.name, "v4-a4, a4xa4, d8xc2, s3xs3 or ea9-s3")->required();
  CLI::App* sw = app.add_subcommand("sweep", "Every invariant over the catalog");
  sw->add_option("--max-order", o.max_order, "Largest group order");
  sw->add_option("--max-t", o.max_t, "Largest strongly closed subgroup searched");
  sw->add_flag("--oracle", o.oracle, "Brute-force cross-checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  std::string cmd = app.get_subcommands().front()->get_name();

  Json report{{"schema", "fusionkit-report/1"}, {"command", cmd}, {"inputs", inputs_of(cmd, o)}};
  auto t0 = std::chrono::steady_clock::now();
  try {
    Json body = run(cmd, o);
    for (auto& [k, v] : body.items()) report[k] = v;
  } catch (const InputError& e) {
    report["error"] = {{"code", fk_status_name(e.status)}, {"message", e.message}};
    std::cout << report.dump(o.pretty ? 2 : -1) << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    report["error"] = {{"code", "ParseError"}, {"message", e.what()}};
    std::cout << report.dump(o.pretty ? 2 : -1) << "\n";
    return 2;
  }
  if (o.timing)
    report["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  std::cout << report.dump(o.pretty ? 2 : -1) << "\n";
  bool strict = o.assert_all || cmd == "examples";
  return strict && !all_hold(report) ? 1 : 0;
}
