#include "doctest.h"
#include "support.hpp"

using namespace testing;

TEST_CASE("catalog orders") {
  CHECK(catalog_group("A4")->order() == 12);
  CHECK(catalog_group("S3xS3")->order() == 36);
  CHECK(catalog_group("d8xc2")->order() == 16);
  CHECK(catalog_group("a4xa4")->order() == 144);
  CHECK(error_of([] { catalog_group("no-such-group"); }) == "UnknownCatalogName");
}

TEST_CASE("group construction errors") {
  CHECK(error_of([] { parse_cycles("(1,2", 3); }) == "ParseError");
  CHECK(error_of([] { parse_cycles("(1,1)", 3); }) == "InvalidPermutation");
  CHECK(error_of([] { parse_cycles("(1,5)", 3); }) == "InvalidPermutation");
  CHECK(error_of([] { Group::from_permutations(3, {{0, 0, 1}}); }) == "InvalidPermutation");
  // S5 has order 120.
  CHECK(error_of([] {
          Group::from_permutations(5, {parse_cycles("(1,2,3,4,5)", 5), parse_cycles("(1,2)", 5)}, 100);
        }) == "OrderBoundExceeded");
  auto s4 = std::make_shared<const Group>(
      Group::from_permutations(4, {parse_cycles("(1,2,3,4)", 4), parse_cycles("(1,2)", 4)}));
  CHECK(error_of([&] { Lattice(s4, 10); }) == "OrderBoundExceeded");
  Lattice lat(s4);
  ElementSet bad;
  bad.set(0);
  bad.set(s4->index_of(parse_cycles("(1,2)", 4)));
  bad.set(s4->index_of(parse_cycles("(2,3)", 4)));
  CHECK(error_of([&] { lat.id_of(bad); }) == "NotASubgroup");
}

TEST_CASE("lattice sizes") {
  CHECK(Lattice(catalog_group("V4")).size() == 5);
  CHECK(Lattice(catalog_group("D8")).size() == 10);
  CHECK(Lattice(catalog_group("C3")).size() == 2);
  CHECK(Lattice(catalog_group("S4")).size() == 30);
}

TEST_CASE("lattice matches subset closure") {
  for (const CatalogEntry& e : catalog_index()) {
    if (e.order > 24) continue;
    auto g = catalog_group(e.name);
    Lattice lat(g);
    auto naive = oracle::subgroups(*g, oracle::all_elements(*g));
    CAPTURE(e.name);
    CHECK(lat.size() == static_cast<int>(naive.size()));
    for (int q = 0; q < lat.size(); ++q) CHECK(naive.count(elems(lat, q)) == 1);
  }
}

TEST_CASE("normalizers and centralizers") {
  auto d8 = catalog_group("D8");
  Lattice lat(d8);
  int z = lat.centre(lat.top());
  CHECK(lat.order(z) == 2);
  CHECK(lat.normalizer(z) == lat.top());
  CHECK(lat.normalizer(lat.top()) == lat.top());
  for (int q = 0; q < lat.size(); ++q)
    if (lat.order(q) == 4 && lat.gens(q).size() == 1) CHECK(lat.centralizer(q) == q);

  auto s3 = catalog_group("S3");
  Lattice l3(s3);
  for (int q = 0; q < l3.size(); ++q)
    if (l3.order(q) == 2) CHECK(l3.normalizer(q) == q);

  auto v4 = catalog_group("V4");
  Lattice lv(v4);
  for (int q = 0; q < lv.size(); ++q) CHECK(lv.centralizer(q) == lv.top());

  Ctx c = ctx("d8xc2", 2);
  int d8f = c.sub({"(1,2,3,4)", "(1,3)"});
  CHECK(c.lat().order(c.lat().centralizer(d8f)) == 4);
}

TEST_CASE("normalizer and centralizer properties") {
  for (const char* name : {"S4", "D8xC2", "SL23", "C3:S3"}) {
    auto g = catalog_group(name);
    Lattice lat(g);
    for (int q = 0; q < lat.size(); ++q) {
      int n = lat.normalizer(q);
      int c = lat.centralizer(q);
      CHECK(lat.is_normal_in(q, n));
      CHECK(lat.le(c, n));
      for (int x : lat.elements(c))
        for (int y : lat.elements(q)) CHECK(g->mul(x, y) == g->mul(y, x));
      for (int x = 0; x < g->order(); ++x)
        if (!lat.contains(n, x)) CHECK(lat.conjugate(q, x) != q);
    }
  }
}

TEST_CASE("meet and join") {
  auto g = catalog_group("S4");
  Lattice lat(g);
  for (int a = 0; a < lat.size(); a += 3)
    for (int b = 0; b < lat.size(); b += 5) {
      int m = lat.meet(a, b);
      int j = lat.join(a, b);
      CHECK(lat.le(m, a));
      CHECK(lat.le(m, b));
      CHECK(lat.le(a, j));
      CHECK(lat.le(b, j));
      CHECK(lat.join(a, m) == a);
    }
}

TEST_CASE("sylow subgroups") {
  auto a4 = catalog_group("A4");
  ElementSet s = sylow(*a4, 2);
  CHECK(s.count() == 4);
  for (int x = 0; x < 12; ++x)
    if (s.test(x)) CHECK(a4->power(x, 2) == 0);
  CHECK(sylow(*catalog_group("S3"), 3).count() == 3);
  CHECK(sylow(*catalog_group("C5"), 3).count() == 1);
  for (const CatalogEntry& e : catalog_index()) {
    if (e.order > 24) continue;
    auto g = catalog_group(e.name);
    for (int p : prime_divisors(g->order())) {
      ElementSet t = sylow(*g, p);
      CHECK(static_cast<int>(t.count()) == p_part(g->order(), p));
      CHECK(is_subgroup(*g, t));
    }
  }
}

TEST_CASE("automorphism counts") {
  Lattice v4(catalog_group("V4"));
  CHECK(automorphisms(v4, v4.top()).size() == 6);
  Lattice c3(catalog_group("C3"));
  CHECK(automorphisms(c3, c3.top()).size() == 2);
  CHECK(automorphisms(c3, c3.bottom()).size() == 1);
  Lattice d8(catalog_group("D8"));
  CHECK(automorphisms(d8, d8.top()).size() == 8);
  Lattice q8(catalog_group("Q8"));
  CHECK(automorphisms(q8, q8.top()).size() == 24);
}

TEST_CASE("conjugation morphisms") {
  auto a4 = catalog_group("A4");
  Lattice lat(a4);
  int t = a4->index_of(parse_cycles("(1,2,3)", 4));
  int x = a4->index_of(parse_cycles("(1,2)(3,4)", 4));
  int q = lat.cyclic(x);
  int r = lat.cyclic(a4->conj(x, t));
  CHECK(q != r);
  Morphism m = conj_morphism(lat, t, q, r);
  CHECK(image_of(lat, m.map) == r);
  Morphism id = conj_morphism(lat, 0, q, q);
  CHECK(id.map == identity_map(lat, q));
  Morphism inc = conj_morphism(lat, 0, q, lat.top());
  CHECK(image_of(lat, inc.map) == q);
  CHECK(error_of([&] { conj_morphism(lat, t, q, q); }) == "ImageNotContained");
}
