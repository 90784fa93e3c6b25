#include "fusionkit/subsystems.hpp"

#include <algorithm>
#include <set>

namespace fusionkit {

int commutator_subgroup(const Lattice& lat, int a, int b) {
  const Group& g = lat.group();
  ElementSet s;
  s.set(0);
  for (int x : lat.elements(a))
    for (int y : lat.elements(b)) s.set(g.commutator(x, y));
  return lat.join_set(s);
}

std::vector<ElementSet> element_orbits(const FusionSystem& f) {
  const Lattice& lat = f.lattice();
  const int n = f.host().order();
  std::vector<ElementSet> out(n);
  for (int x : lat.elements(f.base())) {
    int c = lat.cyclic(x);
    const ConjClass& cls = f.conj_class(c);
    Map tci = inverse(cls.transport[cls.position(c)]);
    int y = tci[x];
    for (size_t i = 0; i < cls.members.size(); ++i)
      for (const Map& a : cls.aut) out[x].set(cls.transport[i][a[y]]);
  }
  return out;
}

static bool strongly_closed_with(const FusionSystem& f, const std::vector<ElementSet>& orbits, int t) {
  const Lattice& lat = f.lattice();
  if (!f.in_base(t)) return false;
  for (int x : lat.elements(t))
    if ((orbits[x] & ~lat.set(t)).any()) return false;
  return true;
}

bool is_strongly_closed(const FusionSystem& f, int t) {
  return strongly_closed_with(f, element_orbits(f), t);
}

std::vector<int> strongly_closed_subgroups(const FusionSystem& f) {
  auto orbits = element_orbits(f);
  std::vector<int> out;
  for (int t : f.subgroups())
    if (strongly_closed_with(f, orbits, t)) out.push_back(t);
  return out;
}

bool is_invariant(const FusionSystem& f, const FusionSystem& e, Map* witness) {
  const Lattice& lat = f.lattice();
  for (const ConjClass& c : e.classes()) {
    for (int q1 : c.members)
      for (int q2 : c.members) {
        int r = lat.join(q1, q2);
        std::set<std::pair<Map, Map>> pairs;
        for (const Map& psi : f.isos_from(r))
          pairs.emplace(restrict_map(psi, lat.set(q1)), restrict_map(psi, lat.set(q2)));
        std::vector<Map> phis = e.isos(q1, q2);
        for (const auto& [p1, p2] : pairs) {
          Map p1i = inverse(p1);
          for (const Map& phi : phis) {
            Map conj = compose(compose(p1i, phi), p2);
            if (!e.contains_map(conj)) {
              if (witness) *witness = conj;
              return false;
            }
          }
        }
      }
  }
  return true;
}

std::optional<Map> central_extension(const FusionSystem& f, int t, const Map& alpha) {
  const Lattice& lat = f.lattice();
  const Group& g = f.host();
  int c = f.centralizer(t);
  int tc = lat.join(t, c);
  int zt = lat.centre(t);
  for (const Map& a : f.aut(tc)) {
    bool ok = true;
    for (int x : lat.gens(t))
      if (a[x] != alpha[x]) {
        ok = false;
        break;
      }
    if (!ok) continue;
    for (int x : lat.elements(c))
      if (!lat.contains(zt, g.mul(g.inv(x), a[x]))) {
        ok = false;
        break;
      }
    if (ok) return a;
  }
  return std::nullopt;
}

static void require_normal_setting(const FusionSystem& f, const FusionSystem& e) {
  if (!same_host(f, e) || !f.lattice().le(e.base(), f.base()))
    fail(ErrorCode::NotASubsystem, "subsystem does not sit inside the system's base");
  if (!is_strongly_closed(f, e.base()))
    fail(ErrorCode::NotStronglyClosed, "subsystem base is not strongly closed");
  if (!is_subsystem(e, f)) fail(ErrorCode::NotASubsystem, "not a subsystem");
}

NormalityVerdict normality_status(const FusionSystem& f, const FusionSystem& e) {
  require_normal_setting(f, e);
  NormalityVerdict v;
  Map w;
  v.invariant = is_invariant(f, e, &w);
  if (!v.invariant) {
    v.failure_witness = w;
    v.reason = "conjugate of a subsystem map by a system map leaves the subsystem";
    return v;
  }
  SaturationVerdict sat = is_saturated(e);
  v.weakly_normal = sat.saturated;
  if (!v.weakly_normal) {
    v.reason = "subsystem is not saturated";
    return v;
  }
  int t = e.base();
  for (const Map& alpha : e.aut(t))
    if (!central_extension(f, t, alpha)) {
      v.failure_witness = alpha;
      v.reason = "automorphism of the base has no extension acting centrally on its centralizer";
      return v;
    }
  v.normal = true;
  return v;
}

int QuotientSystem::image(const Lattice& old_lat, int q) const {
  ElementSet s;
  for (int x : old_lat.elements(q)) s.set(quotient.coset_of[x]);
  return system.lattice().id_of(s);
}

int QuotientSystem::preimage(const Lattice& old_lat, int q) const {
  ElementSet s;
  const ElementSet& qs = system.lattice().set(q);
  for (int x = 0; x < old_lat.group().order(); ++x)
    if (quotient.coset_of[x] >= 0 && qs.test(quotient.coset_of[x])) s.set(x);
  return old_lat.id_of(s);
}

QuotientSystem quotient(const FusionSystem& f, int t) {
  if (!is_strongly_closed(f, t)) fail(ErrorCode::NotStronglyClosed, "kernel is not strongly closed");
  const Lattice& lat = f.lattice();
  const Group& g = f.host();
  bool normal_in_host = lat.is_normal_in(t, lat.top());
  ElementSet num = normal_in_host ? g.all() : lat.set(f.base());
  Quotient q = quotient_group(g, num, lat.set(t));
  auto nlat = std::make_shared<const Lattice>(q.group, kPGroupOrderBound);
  const int m = q.group->order();
  std::vector<Map> seeds;
  for (const ConjClass& c : f.classes()) {
    if (!lat.le(t, c.rep)) continue;
    std::vector<Map> gens = c.aut_gens;
    for (size_t i = 1; i < c.transport.size(); ++i) gens.push_back(c.transport[i]);
    for (const Map& a : gens) {
      if (apply(lat, a, t) != t) fail(ErrorCode::NotStronglyClosed, "morphism moves the kernel");
      Map b(m, -1);
      for (size_t x = 0; x < a.size(); ++x)
        if (a[x] >= 0) b[q.coset_of[x]] = static_cast<int16_t>(q.coset_of[a[x]]);
      seeds.push_back(std::move(b));
    }
  }
  ElementSet bs;
  for (int x : lat.elements(f.base())) bs.set(q.coset_of[x]);
  int base = nlat->id_of(bs);
  FusionSystem sys = generated_fusion(nlat, f.prime(), base, seeds);
  return QuotientSystem{std::move(sys), std::move(q), t};
}

FusionSystem local_subsystem(const FusionSystem& f, int q, LocalKind kind) {
  const Lattice& lat = f.lattice();
  std::vector<Map> seeds;
  int base = 0;
  auto preserves = [&](const Map& phi) {
    for (int x : lat.gens(q))
      if (!lat.contains(q, phi[x])) return false;
    return true;
  };
  auto scan = [&](int top, auto&& accept) {
    for (int x = 0; x < lat.size(); ++x) {
      if (!lat.le(q, x) || !lat.le(x, top)) continue;
      for (int y : f.conj_class(x).members) {
        if (!lat.le(q, y) || !lat.le(y, top)) continue;
        for (const Map& phi : f.isos(x, y)) accept(x, phi);
      }
    }
  };
  if (kind == LocalKind::Centralizer) {
    if (!is_fully_centralized(f, q)) fail(ErrorCode::NotFullyCentralized, "subgroup is not fully centralized");
    base = f.centralizer(q);
    int top = lat.join(q, base);
    scan(top, [&](int x, const Map& phi) {
      for (int y : lat.gens(q))
        if (phi[y] != y) return;
      seeds.push_back(restrict_map(phi, lat.set(lat.meet(x, base))));
    });
  } else {
    if (!is_fully_normalized(f, q)) fail(ErrorCode::NotFullyNormalized, "subgroup is not fully normalized");
    base = f.normalizer(q);
    MapSet inner;
    if (kind == LocalKind::PCentralizer)
      for (Map& m : f.aut_base(q)) inner.insert(std::move(m));
    scan(base, [&](int, const Map& phi) {
      if (!preserves(phi)) return;
      if (kind == LocalKind::PCentralizer && !inner.count(restrict_map(phi, lat.set(q)))) return;
      seeds.push_back(phi);
    });
  }
  return generated_fusion(f.lattice_ptr(), f.prime(), base, seeds);
}

int o_p(const FusionSystem& f) {
  if (!is_saturated(f).saturated) fail(ErrorCode::NotSaturated, "system is not saturated");
  const Lattice& lat = f.lattice();
  int best = 0;
  for (int q : strongly_closed_subgroups(f))
    if (local_subsystem(f, q, LocalKind::Normalizer) == f) best = lat.join(best, q);
  if (best != 0 && local_subsystem(f, best, LocalKind::Normalizer) != f)
    fail(ErrorCode::TheoremViolation, "join of normal subgroups is not normal");
  return best;
}

int o_p_by_central_series(const FusionSystem& f) {
  const Lattice& lat = f.lattice();
  std::vector<int> sc = strongly_closed_subgroups(f);
  // t qualifies when the ascending chain X_{i+1} = <Y strongly closed : [Y, t] <= X_i> reaches t.
  auto has_series = [&](int t) {
    int x = 0;
    while (true) {
      int next = x;
      for (int y : sc)
        if (lat.le(y, t) && lat.le(commutator_subgroup(lat, y, t), x)) next = lat.join(next, y);
      if (next == x) return x == t;
      x = next;
    }
  };
  int best = 0;
  for (int t : sc)
    if (has_series(t)) best = lat.join(best, t);
  if (!has_series(best)) fail(ErrorCode::TheoremViolation, "join of subgroups with central series has none");
  return best;
}

FusionSystem o_p_prime_subsystem(const FusionSystem& e) {
  if (!is_saturated(e).saturated) fail(ErrorCode::NotSaturated, "system is not saturated");
  std::vector<Map> seeds;
  for (int q : e.subgroups())
    for (Map& a : p_elements(e.aut(q), e.prime())) seeds.push_back(std::move(a));
  FusionSystem out = generated_fusion(e.lattice_ptr(), e.prime(), e.base(), seeds);
  if (!is_saturated(out).saturated)
    fail(ErrorCode::SaturationValidationFailed, "generated subsystem is not saturated");
  return out;
}

std::pair<Map, Map> frattini_decompose(const FusionSystem& f, const FusionSystem& e, const Map& psi) {
  const Lattice& lat = f.lattice();
  int a = lat.id_of(domain_set(psi));
  for (const Map& alpha : f.aut(e.base())) {
    Map ra = restrict_map(alpha, lat.set(a));
    Map beta = compose(inverse(ra), psi);
    if (e.contains_map(beta)) return {alpha, beta};
  }
  fail(ErrorCode::NoDecomposition, "no factorization through Aut_F(T)");
}

bool is_e_centric(const FusionSystem& e, int q) { return is_centric(e, q); }

std::optional<Map> detecting_witness(const FusionSystem& f, const FusionSystem& e, const Map& alpha,
                                     int q) {
  if (!is_e_centric(e, q)) fail(ErrorCode::NotCentric, "subgroup is not centric in the subsystem");
  const Lattice& lat = f.lattice();
  const Group& g = f.host();
  int t = e.base();
  int c = f.centralizer(t);
  int r = apply(lat, alpha, q);
  int qc = lat.join(q, c);
  int rc = lat.join(r, c);
  int zr = lat.centre(r);
  for (int u : f.conj_class(qc).members) {
    if (!lat.le(u, rc)) continue;
    for (const Map& beta : f.isos(qc, u)) {
      bool ok = true;
      for (int x : lat.gens(q))
        if (beta[x] != alpha[x]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      for (int x : lat.elements(c))
        if (!lat.contains(zr, g.mul(g.inv(x), beta[x]))) {
          ok = false;
          break;
        }
      if (ok) return beta;
    }
  }
  return std::nullopt;
}

TheoremAReport verify_theorem_a(const FusionSystem& f, const FusionSystem& e) {
  FusionSystem o = o_p_prime_subsystem(e);
  NormalityVerdict v = normality_status(f, o);
  TheoremAReport rep;
  rep.normal = v.normal;
  rep.morphisms = o.morphism_count();
  int t = o.base();
  for (const Map& a : o.aut(t)) {
    ++rep.aut_t_order;
    if (central_extension(f, t, a)) ++rep.w_size;
  }
  if (!rep.normal) fail(ErrorCode::TheoremViolation, "O^{p'} of a weakly normal subsystem is not normal: " + v.reason);
  return rep;
}

FusionSystem full_subcategory(const FusionSystem& f, int base) {
  const Lattice& lat = f.lattice();
  std::vector<Map> seeds;
  for (const ConjClass& c : f.classes()) {
    int first = -1;
    for (int m : c.members) {
      if (!lat.le(m, base)) continue;
      if (first < 0) {
        first = m;
        const Map& t = c.transport[c.position(m)];
        Map ti = inverse(t);
        for (const Map& a : c.aut_gens) seeds.push_back(compose(compose(ti, a), t));
      } else {
        seeds.push_back(f.isos(first, m).front());
      }
    }
  }
  return generated_fusion(f.lattice_ptr(), f.prime(), base, seeds);
}

std::vector<FusionSystem> enumerate_subsystems(const FusionSystem& f, const FusionSystem& start,
                                               size_t limit) {
  const Lattice& lat = f.lattice();
  int base = start.base();
  std::vector<Map> atoms;
  for (const ConjClass& c : f.classes())
    for (int m1 : c.members) {
      if (!lat.le(m1, base)) continue;
      for (int m2 : c.members) {
        if (!lat.le(m2, base)) continue;
        for (Map& phi : f.isos(m1, m2))
          if (!start.contains_map(phi)) atoms.push_back(std::move(phi));
      }
    }
  std::vector<FusionSystem> found{start};
  for (size_t i = 0; i < found.size(); ++i) {
    std::vector<Map> gens = found[i].generators();
    for (const Map& a : atoms) {
      if (found[i].contains_map(a)) continue;
      std::vector<Map> seeds = gens;
      seeds.push_back(a);
      FusionSystem next = generated_fusion(f.lattice_ptr(), f.prime(), base, seeds);
      bool seen = false;
      for (const FusionSystem& s : found)
        if (s == next) {
          seen = true;
          break;
        }
      if (!seen) {
        if (found.size() >= limit) fail(ErrorCode::OrderBoundExceeded, "too many subsystems");
        found.push_back(std::move(next));
      }
    }
  }
  return found;
}

}  // namespace fusionkit
