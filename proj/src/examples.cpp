#include "fusionkit/examples.hpp"

#include <functional>
#include <map>

#include "fusionkit/catalog.hpp"
#include "fusionkit/normal_maps.hpp"

namespace fusionkit {

namespace {

struct Setup {
  std::shared_ptr<const Group> g;
  HostedGroup h;
  int p = 0;

  std::shared_ptr<const Lattice> lat() const { return h.lattice; }

  int ambient(const std::string& cycles) const {
    int x = g->index_of(parse_cycles(cycles, g->degree()));
    if (x < 0) fail(ErrorCode::InvalidPermutation, cycles + " is not in " + g->name);
    return x;
  }
  int host(const std::string& cycles) const {
    int y = h.embedding.from_ambient[ambient(cycles)];
    if (y < 0) fail(ErrorCode::NotASubgroupOfP, cycles + " is not in the Sylow subgroup");
    return y;
  }
  int sub(const std::vector<std::string>& gens) const {
    ElementSet s;
    s.set(0);
    for (const auto& c : gens) s.set(host(c));
    return h.lattice->join_set(s);
  }
  ElementSet ambient_sub(const std::vector<int>& gens) const { return closure(*g, gens); }
  FusionSystem system(const ElementSet& k, int base) const { return fusion_of_group(h, k, base, p); }
};

Setup load(const std::string& name, int p) {
  Setup s;
  s.g = catalog_group(name);
  s.p = p;
  s.h = host_for(s.g, sylow(*s.g, p));
  return s;
}

struct Builder {
  ExampleReport rep;
  void expect(const std::string& name, bool actual, bool expected, const std::string& detail = {}) {
    rep.checks.push_back({name, actual == expected,
                          std::string("expected ") + (expected ? "true" : "false") +
                              (detail.empty() ? "" : "; " + detail)});
  }
  void expect_eq(const std::string& name, long actual, long expected) {
    rep.checks.push_back({name, actual == expected,
                          "expected " + std::to_string(expected) + ", got " + std::to_string(actual)});
  }
};

bool saturation_agrees(const FusionSystem& e) {
  return is_saturated(e).saturated == is_saturated_puig(e).saturated;
}

ExampleReport v4_a4() {
  Setup s = load("a4", 2);
  const Lattice& lat = *s.lat();
  FusionSystem f = s.system(s.g->all(), lat.top());
  std::vector<Map> seeds;
  for (int q : f.subgroups()) {
    if (lat.order(q) != 2) continue;
    for (int r : f.conj_class(q).members)
      if (r != q)
        for (const Map& phi : f.isos(q, r)) seeds.push_back(phi);
  }
  FusionSystem e = generated_fusion(s.lat(), 2, lat.top(), seeds);
  Builder b;
  b.rep.name = "v4-a4";
  b.expect_eq("involution maps are present", static_cast<long>(seeds.size()), 6);
  b.expect("subsystem is invariant", is_invariant(f, e), true);
  b.expect_eq("|Aut_E(P)|", e.aut_order(lat.top()), 1);
  b.expect("Aut_P(P) is Sylow in Aut_E(P)",
           p_part(e.aut_order(lat.top()), 2) == e.aut_base_order(lat.top()), true);
  bool surj = true;
  for (int q : e.subgroups()) surj = surj && has_surjectivity_property(e, q);
  b.expect("every subgroup has the surjectivity property", surj, true);
  b.expect("subsystem is saturated", is_saturated(e).saturated, false);
  b.expect("both saturation criteria agree", saturation_agrees(e), true);
  AutMap a = aut_map_of(e);
  b.expect("automorphism map passes the axioms", check_weakly_normal_map(f, a).ok, true);
  b.expect("map regenerates the subsystem", subsystem_of_map(f, a) == e, false,
           "maps between distinct involution subgroups are not restrictions of automorphisms");
  return b.rep;
}

ExampleReport a4xa4() {
  Setup s = load("a4xa4", 2);
  const Lattice& lat = *s.lat();
  const Group& g = *s.g;
  int a = s.ambient("(1,2)(3,4)");
  int bb = s.ambient("(1,3)(2,4)");
  int c = s.ambient("(5,6)(7,8)");
  int d = s.ambient("(5,7)(6,8)");
  auto find = [&](int from2, int to2) {
    for (int x = 0; x < g.order(); ++x)
      if (g.element_order(x) == 3 && g.conj(a, x) == bb && g.conj(from2, x) == to2) return x;
    fail(ErrorCode::PreconditionFailed, "no element of order 3 with the required action");
  };
  int x = find(c, d);
  int y = find(d, c);
  std::vector<int> pgens;
  for (int z : lat.gens(lat.top())) pgens.push_back(s.h.embedding.to_ambient[z]);
  auto with = [&](int t) {
    auto v = pgens;
    v.push_back(t);
    return s.ambient_sub(v);
  };
  FusionSystem f = s.system(g.all(), lat.top());
  FusionSystem e1 = s.system(with(x), lat.top());
  FusionSystem e2 = s.system(with(y), lat.top());
  FusionSystem e = intersect_systems(e1, e2);
  int q = s.sub({"(1,2)(3,4)", "(1,3)(2,4)"});
  Builder b;
  b.rep.name = "a4xa4";
  b.expect("E1 is weakly normal", normality_status(f, e1).weakly_normal, true);
  b.expect("E2 is weakly normal", normality_status(f, e2).weakly_normal, true);
  b.expect_eq("|Aut_{E1 cap E2}(P)|", e.aut_order(lat.top()), 1);
  b.expect_eq("|Aut_{E1 cap E2}(<a,b>)|", e.aut_order(q), 3);
  bool extends = false;
  for (const Map& alpha : e.aut(q))
    if (alpha != identity_map(lat, q) && extend_morphism(e, alpha, lat.top())) extends = true;
  b.expect("a nontrivial automorphism of <a,b> extends to P", extends, false);
  b.expect("E1 cap E2 is saturated", is_saturated(e).saturated, false);
  b.expect("both saturation criteria agree", saturation_agrees(e), true);
  FusionSystem w = intersection_wedge(f, e1, e2);
  b.expect("wedge is inner fusion on P", w == inner_fusion(s.lat(), lat.top(), 2), true);
  return b.rep;
}

ExampleReport d8xc2() {
  Setup s = load("d8xc2", 2);
  const Lattice& lat = *s.lat();
  FusionSystem f = s.system(s.g->all(), lat.top());
  int q = s.sub({"(1,2,3,4)", "(1,3)"});
  int r = s.sub({"(1,2,3,4)(5,6)", "(1,3)"});
  int sg = s.sub({"(1,3)(2,4)", "(1,3)"});
  FusionSystem e1 = inner_fusion(s.lat(), q, 2);
  FusionSystem e2 = inner_fusion(s.lat(), r, 2);
  FusionSystem inner_s = inner_fusion(s.lat(), sg, 2);
  Builder b;
  b.rep.name = "d8xc2";
  b.expect("S is the meet of Q and R", lat.meet(q, r) == sg, true);
  b.expect("E1 is weakly normal", normality_status(f, e1).weakly_normal, true);
  b.expect("E2 is weakly normal", normality_status(f, e2).weakly_normal, true);
  b.expect("Aut_{E1}(S) = Aut_{E2}(S)", e1.aut(sg) == e2.aut(sg), true);
  b.expect_eq("|Aut_{E1}(S)|", e1.aut_order(sg), 2);
  auto all_on_s = enumerate_subsystems(full_subcategory(f, sg), inner_s);
  int saturated = 0;
  for (const FusionSystem& e : all_on_s) saturated += is_saturated(e).saturated ? 1 : 0;
  b.expect_eq("saturated subsystems on S", saturated, 1);
  FusionSystem raw = intersect_systems(e1, e2);
  b.expect("raw intersection is saturated", is_saturated(raw).saturated, false);
  b.expect("both saturation criteria agree", saturation_agrees(raw), true);
  FusionSystem w = intersection_wedge(f, e1, e2);
  b.expect("wedge is F_S(S)", w == inner_s, true);
  return b.rep;
}

ExampleReport s3xs3() {
  Setup s = load("s3xs3", 3);
  const Lattice& lat = *s.lat();
  const Group& g = *s.g;
  ElementSet k = s.ambient_sub({s.ambient("(1,2,3)"), s.ambient("(1,2)")});
  ElementSet hset = s.ambient_sub({s.ambient("(1,2,3)"), s.ambient("(4,5,6)"), s.ambient("(1,2)(4,5)")});
  int q = s.sub({"(1,2,3)"});
  FusionSystem f = s.system(g.all(), lat.top());
  FusionSystem fh = s.system(hset, lat.top());
  FusionSystem fk = s.system(k, q);
  Builder b;
  b.rep.name = "s3xs3";
  b.expect_eq("|H|", static_cast<long>(hset.count()), 18);
  b.expect("F_Q(K) is normal in F_P(G)", normality_status(f, fk).normal, true);
  NormalityVerdict v = normality_status(fh, fk);
  b.expect("F_Q(K) is weakly normal in F_P(H)", v.weakly_normal, true);
  b.expect("F_Q(K) is normal in F_P(H)", v.normal, false, v.reason);
  b.expect("F_Q(K) lies in F_P(H)", is_subsystem(fk, fh), true);
  FusionSystem core = t_core(fh, {&fk, &fh}, q);
  b.expect("Q-core of F_Q(K) cap F_P(H) is F_Q(K)", core == fk, true);
  return b.rep;
}

ExampleReport ea9_s3() {
  Setup s = load("e9_s3", 3);
  const Lattice& lat = *s.lat();
  const Group& g = *s.g;
  FusionSystem f = s.system(g.all(), lat.top());
  ElementSet qa = s.ambient_sub({s.ambient("(1,4,7)(2,5,8)(3,6,9)"), s.ambient("(1,2,3)(4,5,6)(7,8,9)")});
  ElementSet qh;
  for (int x = 0; x < g.order(); ++x)
    if (qa.test(x)) qh.set(s.h.embedding.from_ambient[x]);
  int q = lat.id_of(qh);
  // R is the order-3 subgroup of Q normal in the whole group.
  int r = -1;
  for (int c : lat.subgroups_of(q)) {
    if (lat.order(c) != 3) continue;
    ElementSet amb;
    for (int x : lat.elements(c)) amb.set(s.h.embedding.to_ambient[x]);
    bool normal = true;
    for (int x = 0; x < g.order() && normal; ++x)
      if (amb.test(x))
        for (int t = 0; t < g.order(); ++t)
          if (!amb.test(g.conj(x, t))) {
            normal = false;
            break;
          }
    if (normal) r = c;
  }
  if (r < 0) fail(ErrorCode::PreconditionFailed, "no normal subgroup of order 3 in Q");
  int bgen = lat.gens(r).front();
  int bamb = s.h.embedding.to_ambient[bgen];
  int inverter = -1;
  for (int t = 0; t < g.order() && inverter < 0; ++t)
    if (g.element_order(t) == 2 && g.conj(bamb, t) == g.inv(bamb)) inverter = t;
  FusionSystem s3_on_r = s.system(s.ambient_sub({bamb, inverter}), r);
  FusionSystem inner_q = inner_fusion(s.lat(), q, 3);

  Builder b;
  b.rep.name = "ea9-s3";
  auto rr = based_range(f, r);
  auto rq = based_range(f, q);
  b.expect("R is based", rr.has_value(), true);
  b.expect("Q is based", rq.has_value(), true);
  if (!rr || !rq) return b.rep;
  b.expect("R^F(R) is the S3 system on R", rr->maximal == s3_on_r, true);
  b.expect_eq("|Aut_{R^F(R)}(R)|", rr->maximal.aut_order(r), 2);
  b.expect("R_F(Q) = F_Q(Q)", rq->minimal == inner_q, true);
  b.expect("R^F(Q) = F_Q(Q)", rq->maximal == inner_q, true);
  b.expect("R_F(R) <= R_F(Q)", is_subsystem(rr->minimal, rq->minimal), true);
  b.expect("R^F(R) <= R^F(Q)", is_subsystem(rr->maximal, rq->maximal), false);
  std::vector<Map> seeds = rr->maximal.generators();
  FusionSystem start = generated_fusion(s.lat(), 3, q, seeds);
  auto over = enumerate_subsystems(full_subcategory(f, q), start);
  int saturated = 0;
  int weakly_normal = 0;
  for (const FusionSystem& e : over) {
    if (!is_saturated(e).saturated) continue;
    ++saturated;
    if (normality_status(f, e).weakly_normal) ++weakly_normal;
  }
  b.expect_eq("saturated subsystems on Q containing both", saturated, 3);
  b.expect_eq("of which weakly normal", weakly_normal, 0);
  return b.rep;
}

const std::map<std::string, std::function<ExampleReport()>>& registry() {
  static const std::map<std::string, std::function<ExampleReport()>> r = {
      {"v4-a4", v4_a4}, {"a4xa4", a4xa4}, {"d8xc2", d8xc2}, {"s3xs3", s3xs3}, {"ea9-s3", ea9_s3}};
  return r;
}

}  // namespace

std::vector<std::string> example_names() { return {"v4-a4", "a4xa4", "d8xc2", "s3xs3", "ea9-s3"}; }

ExampleReport run_example(const std::string& name) {
  auto it = registry().find(name);
  if (it == registry().end()) fail(ErrorCode::UnknownCatalogName, "unknown example " + name);
  return it->second();
}

}  // namespace fusionkit
