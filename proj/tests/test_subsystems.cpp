#include "doctest.h"
#include "fusionkit/subsystems.hpp"
#include "support.hpp"

using namespace testing;

namespace {

struct S3xS3 {
  Ctx c = ctx("s3xs3", 3);
  int q = c.sub({"(1,2,3)"});
  FusionSystem f = c.full();
  FusionSystem fh = c.sys({"(1,2,3)", "(4,5,6)", "(1,2)(4,5)"}, c.lat().top());
  FusionSystem fk = c.sys({"(1,2,3)", "(1,2)"}, q);
};

}  // namespace

TEST_CASE("strongly closed subgroups") {
  Ctx v = ctx("C2xV4", 2);
  CHECK(static_cast<int>(strongly_closed_subgroups(v.inner(v.lat().top())).size()) == v.lat().size());

  Ctx a4 = ctx("A4", 2);
  CHECK(strongly_closed_subgroups(a4.full()) == std::vector<int>{0, a4.lat().top()});

  S3xS3 s;
  auto sc = strongly_closed_subgroups(s.f);
  auto has = [&](int t) { return std::find(sc.begin(), sc.end(), t) != sc.end(); };
  CHECK(has(s.q));
  CHECK(has(s.c.sub({"(4,5,6)"})));
  CHECK_FALSE(has(s.c.sub({"(1,2,3)(4,5,6)"})));
  CHECK_FALSE(has(s.c.sub({"(1,2,3)(4,6,5)"})));
  CHECK(sc.size() == 4);
}

TEST_CASE("strongly closed subgroups match the extensional test") {
  for_corpus(24, [](const Ctx& c) {
    FusionSystem f = c.full();
    auto ext = oracle::morphisms(f);
    auto sc = strongly_closed_subgroups(f);
    for (int t : f.subgroups()) {
      bool lib = std::find(sc.begin(), sc.end(), t) != sc.end();
      CAPTURE(label(c));
      CHECK(lib == oracle::strongly_closed(ext, elems(c.lat(), t)));
      CHECK(lib == is_strongly_closed(f, t));
      // X strongly closed implies X C_P(X) strongly closed.
      if (lib) CHECK(is_strongly_closed(f, c.lat().join(t, f.centralizer(t))));
    }
  });
}

TEST_CASE("normality verdicts") {
  S3xS3 s;
  NormalityVerdict self = normality_status(s.f, s.f);
  CHECK(self.invariant);
  CHECK(self.weakly_normal);
  CHECK(self.normal);

  NormalityVerdict g = normality_status(s.f, s.fk);
  CHECK(g.normal);
  NormalityVerdict h = normality_status(s.fh, s.fk);
  CHECK(h.invariant);
  CHECK(h.weakly_normal);
  CHECK_FALSE(h.normal);
  CHECK(h.failure_witness.has_value());

  int diag = s.c.sub({"(1,2,3)(4,5,6)"});
  CHECK(error_of([&] { normality_status(s.f, s.c.inner(diag)); }) == "NotStronglyClosed");
  Ctx a4 = ctx("A4", 2);
  FusionSystem other = a4.full();
  FusionSystem inner = a4.inner(a4.lat().top());
  CHECK(error_of([&] { normality_status(inner, other); }) == "NotASubsystem");
}

TEST_CASE("verdict hierarchy on group subsystems") {
  for (const char* name : {"S4", "C3:S3", "A4xC2", "SL23"})
    for (int p : prime_divisors(catalog_group(name)->order())) {
      Ctx c = ctx(name, p);
      FusionSystem f = c.full();
      for (int t : strongly_closed_subgroups(f)) {
        NormalityVerdict v = normality_status(f, c.inner(t));
        CAPTURE(name);
        if (v.normal) CHECK(v.weakly_normal);
        if (v.weakly_normal) CHECK(v.invariant);
      }
    }
}

TEST_CASE("quotients") {
  Ctx a4 = ctx("A4", 2);
  FusionSystem f = a4.full();
  QuotientSystem top = quotient(f, a4.lat().top());
  CHECK(top.system.host().order() == 1);
  QuotientSystem triv = quotient(f, 0);
  CHECK(triv.system.morphism_count() == f.morphism_count());
  CHECK(error_of([&] { quotient(f, a4.sub({"(1,2)(3,4)"})); }) == "NotStronglyClosed");
}

TEST_CASE("normalizers commute with quotients") {
  int checked = 0;
  for_corpus(24, [&](const Ctx& c) {
    FusionSystem f = c.full();
    const Lattice& lat = c.lat();
    for (int t : strongly_closed_subgroups(f)) {
      QuotientSystem qs = quotient(f, t);
      for (int q : f.subgroups()) {
        if (!lat.le(t, q) || !is_fully_normalized(f, q)) continue;
        int qbar = qs.image(lat, q);
        if (!is_fully_normalized(qs.system, qbar)) continue;
        FusionSystem lhs = quotient(local_subsystem(f, q, LocalKind::Normalizer), t).system;
        FusionSystem rhs = local_subsystem(qs.system, qbar, LocalKind::Normalizer);
        CAPTURE(label(c));
        CHECK(lhs == rhs);
        ++checked;
      }
    }
  });
  CHECK(checked > 100);
}

TEST_CASE("local subsystems") {
  Ctx a4 = ctx("A4", 2);
  FusionSystem f = a4.full();
  int v4 = a4.lat().top();
  CHECK(local_subsystem(f, v4, LocalKind::Normalizer) == f);
  CHECK(local_subsystem(f, v4, LocalKind::PCentralizer) == a4.inner(v4));

  Ctx s4 = ctx("S4", 2);
  FusionSystem fs = s4.full();
  int bad = -1;
  for (int q : fs.subgroups())
    if (!is_fully_normalized(fs, q)) bad = q;
  REQUIRE(bad >= 0);
  CHECK(error_of([&] { local_subsystem(fs, bad, LocalKind::Normalizer); }) == "NotFullyNormalized");
  int badc = -1;
  for (int q : fs.subgroups())
    if (!is_fully_centralized(fs, q)) badc = q;
  REQUIRE(badc >= 0);
  CHECK(error_of([&] { local_subsystem(fs, badc, LocalKind::Centralizer); }) == "NotFullyCentralized");

  // Central subgroups have the whole system as centralizer.
  Ctx d8 = ctx("D8", 2);
  FusionSystem fd = d8.full();
  int z = d8.lat().centre(d8.lat().top());
  CHECK(local_subsystem(fd, z, LocalKind::Centralizer) == fd);
}

TEST_CASE("local subsystems of group systems are saturated") {
  for_corpus(24, [](const Ctx& c) {
    FusionSystem f = c.full();
    for (int q : f.subgroups()) {
      CAPTURE(label(c));
      if (is_fully_normalized(f, q)) {
        FusionSystem n = local_subsystem(f, q, LocalKind::Normalizer);
        CHECK(is_saturated(n).saturated);
        CHECK(is_saturated_puig(n).saturated);
      }
      if (is_fully_centralized(f, q)) CHECK(is_saturated(local_subsystem(f, q, LocalKind::Centralizer)).saturated);
    }
  });
}

TEST_CASE("O_p") {
  Ctx d8 = ctx("D8", 2);
  CHECK(o_p(d8.full()) == d8.lat().top());
  Ctx a4 = ctx("A4", 2);
  CHECK(o_p(a4.full()) == a4.lat().top());
  Ctx s4 = ctx("S4", 2);
  int v = o_p(s4.full());
  CHECK(s4.lat().order(v) == 4);
  CHECK(v == s4.sub({"(1,2)(3,4)", "(1,3)(2,4)"}));

  Ctx a = ctx("A4", 2);
  FusionSystem f = a.full();
  std::vector<Map> seeds;
  for (int q : f.subgroups())
    if (a.lat().order(q) == 2)
      for (int r : f.conj_class(q).members)
        if (r != q)
          for (const Map& phi : f.isos(q, r)) seeds.push_back(phi);
  FusionSystem e = generated_fusion(a.h.lattice, 2, a.lat().top(), seeds);
  CHECK(error_of([&] { o_p(e); }) == "NotSaturated");
  CHECK(error_of([&] { o_p_prime_subsystem(e); }) == "NotSaturated");
}

TEST_CASE("O_p by central series and containment") {
  for_corpus(24, [](const Ctx& c) {
    FusionSystem f = c.full();
    int op = o_p(f);
    CAPTURE(label(c));
    CHECK(op == o_p_by_central_series(f));
    CHECK(local_subsystem(f, op, LocalKind::Normalizer) == f);
    for (int q : f.subgroups()) {
      if (!is_fully_normalized(f, q)) continue;
      FusionSystem e = local_subsystem(f, q, LocalKind::Normalizer);
      int base = e.base();
      CHECK(c.lat().le(c.lat().meet(op, base), o_p(e)));
    }
  });
}

TEST_CASE("O^{p'}") {
  Ctx d8 = ctx("D8", 2);
  FusionSystem in = d8.inner(d8.lat().top());
  CHECK(o_p_prime_subsystem(in) == in);
  Ctx s3 = ctx("S3", 3);
  CHECK(o_p_prime_subsystem(s3.full()) == s3.inner(s3.lat().top()));
  Ctx a4 = ctx("A4", 2);
  CHECK(o_p_prime_subsystem(a4.full()) == a4.inner(a4.lat().top()));

  S3xS3 s;
  FusionSystem ofh = o_p_prime_subsystem(s.fh);
  CHECK(normality_status(s.f, ofh).normal);
  FusionSystem ofk = o_p_prime_subsystem(s.fk);
  CHECK(ofk == s.c.inner(s.q));
  CHECK(normality_status(s.fh, ofk).normal);
}

TEST_CASE("Frattini decomposition") {
  S3xS3 s;
  for (auto [f, e] : {std::pair{&s.f, &s.fk}, std::pair{&s.fh, &s.fk}, std::pair{&s.f, &s.fh}}) {
    int t = e->base();
    for (int a : f->lattice().subgroups_of(t))
      for (const Map& psi : f->isos_from(a)) {
        if (!f->lattice().le(image_of(f->lattice(), psi), t)) continue;
        auto [alpha, beta] = frattini_decompose(*f, *e, psi);
        CHECK(f->has_aut(t, alpha));
        CHECK(e->contains_map(beta));
        CHECK(compose(restrict_map(alpha, f->lattice().set(a)), beta) == psi);
      }
  }
  Map id = identity_map(s.c.lat(), s.q);
  auto [alpha, beta] = frattini_decompose(s.f, s.fk, id);
  CHECK(alpha == identity_map(s.c.lat(), s.q));
  CHECK(beta == id);
}

TEST_CASE("detecting subgroups") {
  S3xS3 s;
  int t = s.q;
  for (const Map& alpha : s.fk.aut(t)) CHECK(detecting_witness(s.f, s.fk, alpha, t).has_value());
  // Inner automorphisms are always detected.
  Ctx d8 = ctx("D8xC2", 2);
  FusionSystem f = d8.full();
  int tt = d8.sub({"(1,2,3,4)", "(1,3)"});
  FusionSystem e = d8.inner(tt);
  for (const Map& alpha : e.aut_base(tt))
    for (int q : e.subgroups())
      if (is_e_centric(e, q)) CHECK(detecting_witness(f, e, alpha, q).has_value());
  CHECK(error_of([&] { detecting_witness(s.f, s.fk, s.fk.aut(t)[0], 0); }) == "NotCentric");
}

TEST_CASE("centric intersections") {
  for_corpus(24, [](const Ctx& c) {
    FusionSystem f = c.full();
    const Lattice& lat = c.lat();
    for (int t : strongly_closed_subgroups(f)) {
      if (!normality_status(f, c.inner(t)).weakly_normal) continue;
      FusionSystem e = c.inner(t);
      int ct = f.centralizer(t);
      for (int q : e.subgroups()) {
        if (!is_e_centric(e, q)) continue;
        int qc = lat.join(q, f.centralizer(q));
        CAPTURE(label(c));
        CHECK(lat.meet(qc, t) == q);
        CHECK(lat.meet(qc, lat.join(t, ct)) == lat.join(q, ct));
      }
    }
  });
}

TEST_CASE("commutator conditions agree") {
  // For phi: QC_P(T) -> RC_P(T) in F with Q E-centric: [phi, C_P(T)] <= T iff <= Z(R).
  int checked = 0;
  for_corpus(24, [&](const Ctx& c) {
    FusionSystem f = c.full();
    const Lattice& lat = c.lat();
    const Group& g = lat.group();
    for (int t : strongly_closed_subgroups(f)) {
      FusionSystem e = c.inner(t);
      if (!normality_status(f, e).weakly_normal) continue;
      int ct = f.centralizer(t);
      for (int q : e.subgroups()) {
        if (!is_e_centric(e, q)) continue;
        int qc = lat.join(q, ct);
        for (const Map& phi : f.isos_from(qc)) {
          int r = apply(lat, phi, q);
          if (!lat.le(r, t)) continue;
          int zr = lat.centre(r);
          bool in_t = true, in_z = true, cosets = true;
          for (int x : lat.elements(ct)) {
            int comm = g.mul(g.inv(x), phi[x]);
            in_t = in_t && lat.contains(t, comm);
            in_z = in_z && lat.contains(zr, comm);
            ElementSet lhs, rhs;
            for (int z : lat.elements(lat.centre(q))) lhs.set(phi[g.mul(z, x)]);
            for (int z : lat.elements(zr)) rhs.set(g.mul(z, x));
            cosets = cosets && lhs == rhs;
          }
          CAPTURE(label(c));
          CHECK(in_t == in_z);
          CHECK(in_z == cosets);
          ++checked;
        }
      }
    }
  });
  CHECK(checked > 100);
}

TEST_CASE("p-automorphisms fixing a self-centralizing normal subgroup") {
  std::vector<Ctx> groups;
  for (const CatalogEntry& e : catalog_index()) {
    auto g = catalog_group(e.name);
    auto ps = prime_divisors(g->order());
    if (ps.size() == 1 && g->order() <= 16) groups.push_back(ctx(e.name, ps[0]));
  }
  groups.push_back(ctx("e9_s3", 3));  // Sylow subgroup of order 27
  int checked = 0;
  for (const Ctx& c : groups) {
    const Lattice& lat = c.lat();
    const Group& g = lat.group();
    int v = lat.top();
    for (int u = 1; u < lat.size(); ++u) {
      if (!lat.is_normal_in(u, v) || !lat.le(lat.centralizer(u), u)) continue;
      for (const Map& a : automorphisms(g, lat.set(v), lat.set(u))) {
        CAPTURE(c.g->name);
        CHECK(is_p_group_order(map_order(a), c.p));
        ++checked;
      }
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("O^{p'} of weakly normal subsystems is normal") {
  S3xS3 s;
  CHECK(verify_theorem_a(s.f, s.f).normal);
  CHECK(verify_theorem_a(s.f, s.fh).normal);
  TheoremAReport r = verify_theorem_a(s.fh, s.fk);
  CHECK(r.normal);
  CHECK(r.aut_t_order == 1);
}

TEST_CASE("subsystem enumeration matches the extensional search") {
  for (auto [name, p] : {std::pair{"A4", 2}, std::pair{"S3", 3}, std::pair{"S4", 2}, std::pair{"C3:S3", 3},
                         std::pair{"D8", 2}}) {
    Ctx c = ctx(name, p);
    FusionSystem f = c.full();
    int top = c.lat().top();
    auto lib = enumerate_subsystems(f, c.inner(top));
    auto naive = oracle::subsystems(c.lat().group(), oracle::morphisms(f), elems(c.lat(), top),
                                    oracle::morphisms(c.inner(top)));
    CAPTURE(name);
    CHECK(lib.size() == naive.size());
    std::set<std::set<oracle::NMap>> a(naive.begin(), naive.end()), b;
    for (const FusionSystem& e : lib) b.insert(oracle::morphisms(e));
    CHECK(a == b);
  }
}

TEST_CASE("full subcategories") {
  S3xS3 s;
  FusionSystem sub = full_subcategory(s.f, s.q);
  CHECK(sub.base() == s.q);
  CHECK(sub.aut_order(s.q) == 2);
  CHECK(is_subsystem(sub, s.f));
}
