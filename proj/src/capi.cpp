#include "fusionkit.h"

#include <cstdlib>
#include <cstring>
#include <sstream>

#include "fusionkit/catalog.hpp"
#include "fusionkit/examples.hpp"
#include "fusionkit/hypercentre.hpp"
#include "fusionkit/serialize.hpp"
#include "fusionkit/sweep.hpp"

using namespace fusionkit;

struct fk_group {
  GroupSpec spec;
  std::shared_ptr<const HostedGroup> hosted;
};

struct fk_system {
  std::shared_ptr<const HostedGroup> hosted;  // null for systems on a quotient host
  FusionSystem sys;
};

namespace {

thread_local std::string last_error;

template <class F>
int guard(F&& body) {
  try {
    last_error.clear();
    body();
    return FK_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return FK_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) fail(ErrorCode::PreconditionFailed, std::string(what) + " is null");
}

char* dup(const Json& j) {
  std::string s = j.dump();
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Json result(const std::string& predicate, bool holds, Json witness = nullptr) {
  return Json{{"predicate", predicate}, {"holds", holds}, {"witness", std::move(witness)}};
}

std::vector<std::string> split_gens(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ';'))
    if (tok.find_first_not_of(" \t") != std::string::npos) out.push_back(tok);
  return out;
}

bool is_generator_list(const char* s) {
  while (*s == ' ') ++s;
  return *s == '(' || *s == '\0';
}

std::vector<int> ambient_elements(const Group& g, const std::string& s) {
  std::vector<int> out;
  for (const std::string& c : split_gens(s)) {
    int x = g.index_of(parse_cycles(c, g.degree()));
    if (x < 0) fail(ErrorCode::NotASubgroup, c + " is not an element of " + g.name);
    out.push_back(x);
  }
  return out;
}

int host_subgroup(const fk_system& s, const char* text) {
  const Lattice& lat = s.sys.lattice();
  if (!is_generator_list(text)) return subgroup_from_key(lat, text);
  if (!s.hosted) fail(ErrorCode::PreconditionFailed, "generator lists need a system built from a group");
  ElementSet set;
  set.set(0);
  for (int x : ambient_elements(*s.hosted->ambient, text)) {
    int y = s.hosted->embedding.from_ambient[x];
    if (y < 0) fail(ErrorCode::NotASubgroupOfP, "element outside the Sylow subgroup");
    set.set(y);
  }
  return lat.join_set(set);
}

fk_system* wrap(std::shared_ptr<const HostedGroup> h, FusionSystem f) {
  return new fk_system{std::move(h), std::move(f)};
}

Json witness_map(const std::optional<Map>& m) { return m ? map_json(*m) : Json(nullptr); }

Json series_json(const Lattice& lat, const std::vector<int>& terms) {
  Json out = Json::array();
  for (int z : terms) out.push_back(subgroup_json(lat, z));
  return out;
}

}  // namespace

extern "C" {

const char* fk_last_error(void) { return last_error.c_str(); }

const char* fk_status_name(int status) {
  if (status == FK_OK) return "Ok";
  if (status == FK_INTERNAL) return "Internal";
  return error_code_name(static_cast<ErrorCode>(status));
}

void fk_string_free(char* s) { std::free(s); }

int fk_group_load(const char* path_or_name, int prime, fk_group** out) {
  return guard([&] {
    need(path_or_name, "name");
    need(out, "out");
    GroupSpec spec = load_group_spec(path_or_name);
    if (prime > 0) spec.prime = prime;
    if (spec.prime <= 0 && prime_divisors(spec.group->order()).size() == 1)
      spec.prime = prime_divisors(spec.group->order())[0];
    if (spec.prime <= 0) fail(ErrorCode::ParseError, "no prime given and the spec names none");
    if (spec.group->order() % spec.prime != 0 || prime_divisors(spec.prime).size() != 1 ||
        prime_divisors(spec.prime)[0] != spec.prime)
      fail(ErrorCode::PrimeMismatch, "prime must divide the group order");
    auto hosted = std::make_shared<const HostedGroup>(host_for(spec.group, sylow(*spec.group, spec.prime)));
    *out = new fk_group{std::move(spec), std::move(hosted)};
  });
}

void fk_group_free(fk_group* g) { delete g; }
int fk_group_order(const fk_group* g) { return g ? g->spec.group->order() : 0; }
int fk_group_prime(const fk_group* g) { return g ? g->spec.prime : 0; }

int fk_group_info(const fk_group* g, char** json) {
  return guard([&] {
    need(g, "group");
    Lattice lat(g->spec.group);
    *json = dup(Json{{"name", g->spec.group->name},
                     {"order", g->spec.group->order()},
                     {"prime", g->spec.prime},
                     {"sylow_order", g->hosted->lattice->group().order()},
                     {"subgroups", lat.size()}});
  });
}

int fk_system_build(fk_group* g, const char* acting, const char* base, fk_system** out) {
  return guard([&] {
    need(g, "group");
    need(out, "out");
    const Group& amb = *g->spec.group;
    const HostedGroup& h = *g->hosted;
    ElementSet k = acting && *acting ? closure(amb, ambient_elements(amb, acting)) : amb.all();
    int b = -1;
    if (base && *base) {
      fk_system probe{g->hosted, inner_fusion(h.lattice, h.lattice->top(), g->spec.prime)};
      b = host_subgroup(probe, base);
    } else {
      ElementSet s;
      for (int x = 0; x < h.lattice->group().order(); ++x)
        if (k.test(h.embedding.to_ambient[x])) s.set(x);
      b = h.lattice->id_of(s);
    }
    *out = wrap(g->hosted, fusion_of_group(h, k, b, g->spec.prime));
  });
}

int fk_system_inner(const fk_system* ctx, const char* base, fk_system** out) {
  return guard([&] {
    need(ctx, "system");
    int b = base && *base ? host_subgroup(*ctx, base) : ctx->sys.base();
    *out = wrap(ctx->hosted, inner_fusion(ctx->sys.lattice_ptr(), b, ctx->sys.prime()));
  });
}

void fk_system_free(fk_system* s) { delete s; }

int fk_system_json(const fk_system* s, char** json) {
  return guard([&] {
    need(s, "system");
    *json = dup(fusion_to_json(s->sys));
  });
}

int fk_system_equal(const fk_system* a, const fk_system* b, int* out) {
  return guard([&] {
    need(a, "system");
    need(b, "system");
    *out = a->sys == b->sys ? 1 : 0;
  });
}

int fk_saturated(const fk_system* f, char** json) {
  return guard([&] {
    need(f, "system");
    const Lattice& lat = f->sys.lattice();
    SaturationVerdict rs = is_saturated(f->sys);
    SaturationVerdict pg = is_saturated_puig(f->sys);
    auto wit = [&](const SaturationVerdict& v) {
      return v.witness < 0 ? Json(nullptr) : Json{{"subgroup", subgroup_json(lat, v.witness)}, {"reason", v.reason}};
    };
    Json results = Json::array({result("saturated", rs.saturated, wit(rs)),
                                result("saturated_puig", pg.saturated, wit(pg)),
                                result("criteria_agree", rs.saturated == pg.saturated)});
    *json = dup(Json{{"results", results}});
  });
}

int fk_strongly_closed(const fk_system* f, char** json) {
  return guard([&] {
    need(f, "system");
    Json subs = Json::array();
    for (int t : strongly_closed_subgroups(f->sys)) subs.push_back(subgroup_json(f->sys.lattice(), t));
    *json = dup(Json{{"strongly_closed", subs}, {"results", Json::array()}});
  });
}

int fk_normality(const fk_system* f, const fk_system* e, char** json) {
  return guard([&] {
    need(f, "system");
    need(e, "subsystem");
    NormalityVerdict v = normality_status(f->sys, e->sys);
    Json w = witness_map(v.failure_witness);
    Json results = Json::array({result("invariant", v.invariant, v.invariant ? Json(nullptr) : w),
                                result("weakly_normal", v.weakly_normal, v.weakly_normal ? Json(nullptr) : w),
                                result("normal", v.normal, v.normal ? Json(nullptr) : w)});
    *json = dup(Json{{"reason", v.reason}, {"results", results}});
  });
}

int fk_quotient(const fk_system* f, const char* kernel, fk_system** out, char** json) {
  return guard([&] {
    need(f, "system");
    need(kernel, "kernel");
    int t = host_subgroup(*f, kernel);
    QuotientSystem q = quotient(f->sys, t);
    if (json)
      *json = dup(Json{{"kernel", subgroup_json(f->sys.lattice(), t)},
                       {"quotient_order", q.system.lattice().order(q.system.base())},
                       {"system", fusion_to_json(q.system)},
                       {"results", Json::array({result("saturated", is_saturated(q.system).saturated)})}});
    if (out) *out = wrap(nullptr, std::move(q.system));
  });
}

int fk_opprime(const fk_system* e, fk_system** out) {
  return guard([&] {
    need(e, "system");
    *out = wrap(e->hosted, o_p_prime_subsystem(e->sys));
  });
}

int fk_aut_map(const fk_system* e, char** json) {
  return guard([&] {
    need(e, "system");
    *json = dup(automap_to_json(e->sys.lattice(), aut_map_of(e->sys)));
  });
}

int fk_map_check(const fk_system* f, const char* aut_map_json, char** json) {
  return guard([&] {
    need(f, "system");
    need(aut_map_json, "map");
    Json j;
    try {
      j = Json::parse(aut_map_json);
    } catch (const nlohmann::json::exception& ex) {
      fail(ErrorCode::ParseError, ex.what());
    }
    const Lattice& lat = f->sys.lattice();
    AutMap a = automap_from_json(j, lat);
    MapCheck chk = check_weakly_normal_map(f->sys, a);
    Json w = nullptr;
    if (!chk.ok)
      w = Json{{"axiom", chk.axiom},
               {"subgroup", chk.subgroup < 0 ? Json(nullptr) : subgroup_json(lat, chk.subgroup)},
               {"map", witness_map(chk.witness)},
               {"detail", chk.detail}};
    Json results = Json::array({result("weakly_normal_map", chk.ok, w)});
    if (chk.ok) {
      FusionSystem e = subsystem_of_map(f->sys, a);
      results.push_back(result("generated_automorphisms_match", aut_map_of(e) == a));
      results.push_back(result("generated_weakly_normal", normality_status(f->sys, e).weakly_normal));
    }
    *json = dup(Json{{"results", results}});
  });
}

int fk_wedge(const fk_system* f, const fk_system* e1, const fk_system* e2, fk_system** out) {
  return guard([&] {
    need(f, "system");
    need(e1, "subsystem");
    need(e2, "subsystem");
    *out = wrap(f->hosted, intersection_wedge(f->sys, e1->sys, e2->sys));
  });
}

int fk_based(const fk_system* f, const char* t, char** json) {
  return guard([&] {
    need(f, "system");
    need(t, "subgroup");
    int ti = host_subgroup(*f, t);
    auto range = based_range(f->sys, ti);
    Json out{{"subgroup", subgroup_json(f->sys.lattice(), ti)}, {"results", Json::array({result("based", range.has_value())})}};
    if (range) {
      out["minimal"] = fusion_to_json(range->minimal);
      out["maximal"] = fusion_to_json(range->maximal);
      out["minimal_equals_maximal"] = range->minimal == range->maximal;
    }
    *json = dup(out);
  });
}

int fk_hypercentre(const fk_system* f, char** json) {
  return guard([&] {
    need(f, "system");
    const FusionSystem& s = f->sys;
    const Lattice& lat = s.lattice();
    int z = centre_of(s);
    int zfix = centre_by_fixed_points(s);
    CentralSeries zs = upper_central_series(s);
    CentralSeries zp = group_upper_central_series(lat, s.base());
    bool series_ok = true;
    for (size_t i = 0; i < std::max(zs.terms.size(), zp.terms.size()); ++i) {
      int zf = zs.terms[std::min(i, zs.terms.size() - 1)];
      int zi = zp.terms[std::min(i, zp.terms.size() - 1)];
      series_ok = series_ok && zf == lat.meet(zs.limit, zi);
    }
    int x = -1;
    std::string x_err;
    try {
      x = x_subgroup(s);
    } catch (const Error& e) {
      x_err = e.what();
    }
    Json results = Json::array({result("centre_definitions_agree", z == zfix),
                                result("x_subgroup_is_hypercentre", x == zs.limit, x_err.empty() ? Json(nullptr) : Json(x_err)),
                                result("series_meets_group_series", series_ok),
                                result("hypercentre_in_o_p", lat.le(zs.limit, o_p(s)))});
    *json = dup(Json{{"centre", subgroup_json(lat, z)},
                     {"series", series_json(lat, zs.terms)},
                     {"hypercentre", subgroup_json(lat, zs.limit)},
                     {"group_series", series_json(lat, zp.terms)},
                     {"results", results}});
  });
}

int fk_perfect(const fk_system* f, char** json) {
  return guard([&] {
    need(f, "system");
    const FusionSystem& s = f->sys;
    const Lattice& lat = s.lattice();
    bool perfect = is_perfect(s);
    int foc = focal_subgroup(s);
    int hyp = hyperfocal_subgroup(s);
    Json out{{"focal", subgroup_json(lat, foc)}, {"hyperfocal", subgroup_json(lat, hyp)}};
    Json results = Json::array({result("perfect", perfect),
                                result("focal_test_agrees", perfect == (foc == s.base())),
                                result("hyperfocal_test_agrees", perfect == (hyp == s.base()))});
    if (perfect) {
      PerfectReport rep = verify_perfect_z2(s);
      Json lambda = Json::array();
      for (const auto& [x, row] : rep.lambda) lambda.push_back({{"x", x}, {"commutators", row}});
      out["lambda"] = lambda;
      results.push_back(result("z2_equals_z1", rep.z1 == rep.z2));
    }
    out["results"] = results;
    *json = dup(out);
  });
}

int fk_theorem_a(const fk_system* f, const char* t, int max_t, char** json) {
  return guard([&] {
    need(f, "system");
    const FusionSystem& s = f->sys;
    const Lattice& lat = s.lattice();
    std::vector<int> ts;
    if (t && *t)
      ts.push_back(host_subgroup(*f, t));
    else
      for (int c : strongly_closed_subgroups(s))
        if (lat.order(c) <= max_t) ts.push_back(c);
    Json results = Json::array();
    for (int c : ts) {
      int n = 0;
      for (const FusionSystem& e : enumerate_weakly_normal(s, c)) {
        Json w = nullptr;
        bool ok = true;
        try {
          TheoremAReport rep = verify_theorem_a(s, e);
          w = Json{{"aut_t_order", rep.aut_t_order}, {"central_extensions", rep.w_size}, {"morphisms", rep.morphisms}};
        } catch (const Error& err) {
          ok = false;
          w = err.what();
        }
        results.push_back(result("opprime_normal[" + subgroup_key(lat, c) + "#" + std::to_string(n++) + "]", ok, w));
      }
    }
    *json = dup(Json{{"results", results}});
  });
}

int fk_example(const char* name, char** json) {
  return guard([&] {
    need(name, "name");
    ExampleReport rep = run_example(name);
    Json results = Json::array();
    for (const Check& c : rep.checks) results.push_back(result(c.name, c.holds, c.detail));
    *json = dup(Json{{"example", rep.name}, {"results", results}});
  });
}

int fk_example_names(char** json) {
  return guard([&] { *json = dup(Json(example_names())); });
}

int fk_sweep(int max_order, int max_t, int oracle, char** json) {
  return guard([&] {
    SweepOptions opt;
    opt.max_order = max_order;
    opt.max_t = max_t;
    opt.oracle = oracle != 0;
    SweepReport rep = run_sweep(opt);
    Json rows = Json::array();
    for (const SweepRow& r : rep.rows)
      rows.push_back({{"group", r.group},
                      {"order", r.order},
                      {"prime", r.prime},
                      {"p_order", r.p_order},
                      {"strongly_closed", r.strongly_closed},
                      {"weakly_normal", r.weakly_normal},
                      {"perfect", r.perfect},
                      {"hypercentre_order", r.hypercentre_order},
                      {"violations", r.violations}});
    Json results = Json::array();
    for (const auto& [prop, n] : rep.checks) {
      int bad = rep.violations.count(prop) ? rep.violations.at(prop) : 0;
      results.push_back(result(prop, bad == 0, Json{{"instances", n}, {"violations", bad}}));
    }
    *json = dup(Json{{"groups", rows}, {"results", results}});
  });
}

}  // extern "C"
