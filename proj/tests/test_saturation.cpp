#include "doctest.h"
#include "fusionkit/saturation.hpp"
#include "fusionkit/subsystems.hpp"
#include "support.hpp"

using namespace testing;

namespace {

// The subsystem of F_{V4}(A4) generated by its isomorphisms between distinct involution subgroups.
FusionSystem involution_system(const Ctx& a4) {
  FusionSystem f = a4.full();
  std::vector<Map> seeds;
  for (int q : f.subgroups())
    if (a4.lat().order(q) == 2)
      for (int r : f.conj_class(q).members)
        if (r != q)
          for (const Map& phi : f.isos(q, r)) seeds.push_back(phi);
  return generated_fusion(a4.h.lattice, 2, a4.lat().top(), seeds);
}

// N_phi straight from the definition.
int naive_n_phi(const FusionSystem& f, const Map& phi) {
  const Lattice& lat = f.lattice();
  const Group& g = lat.group();
  int s = f.lattice().find(domain_set(phi));
  int r = image_of(lat, phi);
  ElementSet out;
  for (int x : lat.elements(f.normalizer(s))) {
    Map via = compose(compose(inverse(phi), conj_map(g, lat.set(s), x)), phi);
    for (int y : lat.elements(f.normalizer(r)))
      if (conj_map(g, lat.set(r), y) == via) {
        out.set(x);
        break;
      }
  }
  return lat.find(out);
}

}  // namespace

TEST_CASE("subgroup status") {
  Ctx d8 = ctx("D8", 2);
  FusionSystem in = d8.inner(d8.lat().top());
  SubgroupStatus st = subgroup_status(in, d8.lat().top());
  CHECK(st.fully_normalized);
  CHECK(st.fully_centralized);
  CHECK(st.fully_automized);
  CHECK(st.receptive);
  CHECK(st.centric);

  Ctx a4 = ctx("A4", 2);
  FusionSystem f = a4.full();
  int c2 = a4.sub({"(1,2)(3,4)"});
  CHECK(is_fully_normalized(f, c2));
  CHECK(is_fully_automized(f, c2));
  CHECK_FALSE(is_centric(f, c2));
  CHECK(is_centric(f, a4.lat().top()));

  FusionSystem small = a4.inner(c2);
  CHECK(error_of([&] { subgroup_status(small, a4.lat().top()); }) == "NotASubgroupOfP");
  CHECK(error_of([&] { has_surjectivity_property(small, a4.lat().top()); }) == "NotASubgroupOfP");
}

TEST_CASE("fully normalized implies fully centralized in saturated systems") {
  for_corpus(24, [](const Ctx& c) {
    FusionSystem f = c.full();
    for (int q : f.subgroups()) {
      SubgroupStatus st = subgroup_status(f, q);
      CAPTURE(label(c));
      if (st.fully_normalized) {
        CHECK(st.fully_centralized);
        CHECK(st.fully_automized);
        CHECK(st.receptive);
        CHECK(has_surjectivity_property(f, q));
      }
    }
  });
}

TEST_CASE("n_phi") {
  Ctx a4 = ctx("A4", 2);
  FusionSystem f = a4.full();
  int v4 = a4.lat().top();
  for (int q : f.subgroups()) CHECK(n_phi(f, identity_map(a4.lat(), q)) == f.normalizer(q));
  Map three = aut_of_order(a4.lat(), v4, 3);
  CHECK(n_phi(f, three) == v4);

  Ctx s4 = ctx("S4", 2);
  FusionSystem fs = s4.full();
  int checked = 0;
  for (int q : fs.subgroups())
    for (const Map& phi : fs.isos_from(q)) {
      int n = n_phi(fs, phi);
      CHECK(s4.lat().le(q, n));
      CHECK(n == naive_n_phi(fs, phi));
      ++checked;
    }
  CHECK(checked > 20);

  Map not_iso(a4.lat().group().order(), -1);
  not_iso[0] = 0;
  not_iso[1] = 2;
  CHECK(error_of([&] { n_phi(a4.inner(v4), not_iso); }) == "NotAnIsomorphism");
}

TEST_CASE("saturation criteria") {
  Ctx d8 = ctx("D8", 2);
  FusionSystem in = d8.inner(d8.lat().top());
  CHECK(is_saturated(in).saturated);
  CHECK(is_saturated_puig(in).saturated);

  Ctx a4 = ctx("A4", 2);
  CHECK(is_saturated(a4.full()).saturated);
  CHECK(is_saturated_puig(a4.full()).saturated);

  FusionSystem e = involution_system(a4);
  SaturationVerdict v = is_saturated(e);
  CHECK_FALSE(v.saturated);
  CHECK(!v.reason.empty());
  CHECK_FALSE(is_saturated_puig(e).saturated);
}

TEST_CASE("group systems are saturated") {
  for_corpus(24, [](const Ctx& c) {
    FusionSystem f = c.full();
    CAPTURE(label(c));
    CHECK(is_saturated(f).saturated);
    CHECK(is_saturated_puig(f).saturated);
  });
}

TEST_CASE("criteria agree on generated systems") {
  for (const char* name : {"D8", "C2xV4", "Q8", "C3xC3"}) {
    auto g = catalog_group(name);
    int p = prime_divisors(g->order())[0];
    Ctx c = ctx(name, p);
    const Lattice& lat = c.lat();
    int tried = 0;
    for (int q = 1; q < lat.size() && tried < 40; ++q)
      for (const Map& a : automorphisms(lat, q)) {
        FusionSystem f = generated_fusion(c.h.lattice, p, lat.top(), {a});
        CAPTURE(name);
        CHECK(is_saturated(f).saturated == is_saturated_puig(f).saturated);
        if (++tried >= 40) break;
      }
  }
}

TEST_CASE("extending morphisms") {
  Ctx a4 = ctx("A4", 2);
  FusionSystem f = a4.full();
  int v4 = a4.lat().top();
  int c2 = a4.sub({"(1,2)(3,4)"});
  Map id = identity_map(a4.lat(), c2);
  CHECK(extend_morphism(f, id, c2) == id);

  for (int r : f.conj_class(c2).members)
    for (const Map& phi : f.isos(c2, r)) {
      auto ext = extend_morphism(f, phi, v4);
      REQUIRE(ext.has_value());
      CHECK(restrict_map(*ext, a4.lat().set(c2)) == phi);
      CHECK(f.has_aut(v4, *ext));
    }

  FusionSystem e = involution_system(a4);
  for (int r : e.conj_class(c2).members)
    if (r != c2)
      for (const Map& phi : e.isos(c2, r)) CHECK_FALSE(extend_morphism(e, phi, v4).has_value());
}
