#include "fusionkit/hypercentre.hpp"

#include <algorithm>
#include <set>

namespace fusionkit {

namespace {

void require_saturated(const FusionSystem& f) {
  if (!is_saturated(f).saturated) fail(ErrorCode::NotSaturated, "system is not saturated");
}

// Isomorphisms out of class representatives generate every morphism, so checking them suffices.
bool extends_fixing(const FusionSystem& f, int x) {
  const Lattice& lat = f.lattice();
  int cx = lat.cyclic(x);
  for (const ConjClass& c : f.classes()) {
    int q = c.rep;
    int qx = lat.join(q, cx);
    std::set<Map> restr;
    for (const Map& psi : f.isos_from(qx))
      if (psi[x] == x) restr.insert(restrict_map(psi, lat.set(q)));
    for (const Map& phi : f.isos_from(q))
      if (!restr.count(phi)) return false;
  }
  return true;
}

int centre_raw(const FusionSystem& f) {
  const Lattice& lat = f.lattice();
  ElementSet z;
  for (int x : lat.elements(lat.centre(f.base())))
    if (extends_fixing(f, x)) z.set(x);
  return lat.id_of(z);
}

CentralSeries series_raw(const FusionSystem& f) {
  CentralSeries s;
  int z = centre_raw(f);
  s.terms.push_back(z);
  while (z != f.base() && z != f.lattice().bottom()) {
    QuotientSystem qs = quotient(f, z);
    int nz = qs.preimage(f.lattice(), centre_raw(qs.system));
    if (nz == z) break;
    z = nz;
    s.terms.push_back(z);
  }
  s.limit = s.terms.back();
  return s;
}

std::vector<int> padded(std::vector<int> v, size_t n) {
  while (v.size() < n) v.push_back(v.back());
  return v;
}

}  // namespace

int centre_of(const FusionSystem& f) {
  require_saturated(f);
  return centre_raw(f);
}

int centre_by_fixed_points(const FusionSystem& f) {
  const Lattice& lat = f.lattice();
  ElementSet z;
  for (int x : lat.elements(lat.centre(f.base()))) {
    bool fixed = true;
    for (const Map& phi : f.isos_from(lat.cyclic(x)))
      if (phi[x] != x) {
        fixed = false;
        break;
      }
    if (fixed) z.set(x);
  }
  return lat.id_of(z);
}

CentralSeries upper_central_series(const FusionSystem& f) {
  require_saturated(f);
  return series_raw(f);
}

CentralSeries group_upper_central_series(const Lattice& lat, int base) {
  const Group& g = lat.group();
  CentralSeries s;
  int z = lat.bottom();
  for (;;) {
    ElementSet next;
    for (int x : lat.elements(base)) {
      bool ok = true;
      for (int y : lat.elements(base))
        if (!lat.contains(z, g.commutator(x, y))) {
          ok = false;
          break;
        }
      if (ok) next.set(x);
    }
    int nz = lat.id_of(next);
    if (nz == z && !s.terms.empty()) break;
    s.terms.push_back(nz);
    if (nz == z) break;
    z = nz;
  }
  s.limit = s.terms.back();
  return s;
}

bool is_p_centralized_by(const FusionSystem& f, int q) {
  const Lattice& lat = f.lattice();
  if (!lat.is_normal_in(q, f.base())) fail(ErrorCode::PreconditionFailed, "subgroup is not normal in the base");
  std::set<Map> autp;
  for (int g : lat.elements(f.base())) autp.insert(conj_map(lat.group(), lat.set(q), g));
  for (const ConjClass& c : f.classes()) {
    int r = c.rep;
    std::set<Map> restr;
    for (const Map& psi : f.isos_from(lat.join(q, r)))
      if (autp.count(restrict_map(psi, lat.set(q)))) restr.insert(restrict_map(psi, lat.set(r)));
    for (const Map& phi : f.isos_from(r))
      if (!restr.count(phi)) return false;
  }
  return true;
}

int x_subgroup(const FusionSystem& f) {
  const Lattice& lat = f.lattice();
  int x = lat.bottom();
  for (int q : f.subgroups())
    if (lat.is_normal_in(q, f.base()) && is_p_centralized_by(f, q)) x = lat.join(x, q);
  if (!is_p_centralized_by(f, x)) fail(ErrorCode::TheoremViolation, "join of centralizing subgroups does not centralize");
  if (x != upper_central_series(f).limit) fail(ErrorCode::TheoremViolation, "X subgroup differs from the hypercentre");
  return x;
}

int focal_subgroup(const FusionSystem& f) {
  const Lattice& lat = f.lattice();
  const Group& g = lat.group();
  auto orbits = element_orbits(f);
  ElementSet s;
  s.set(0);
  for (int x : lat.elements(f.base()))
    for (int y = 0; y < g.order(); ++y)
      if (orbits[x].test(y)) s.set(g.mul(g.inv(x), y));
  return lat.join_set(s);
}

int hyperfocal_subgroup(const FusionSystem& f) {
  const Lattice& lat = f.lattice();
  const Group& g = lat.group();
  ElementSet s;
  s.set(0);
  for (int q : f.subgroups())
    for (const Map& a : p_elements(f.aut(q), f.prime(), false))
      for (int x : lat.elements(q)) s.set(g.mul(g.inv(x), a[x]));
  return lat.join_set(s);
}

bool is_perfect(const FusionSystem& f) {
  require_saturated(f);
  const Lattice& lat = f.lattice();
  int derived = commutator_subgroup(lat, f.base(), f.base());
  for (int t : strongly_closed_subgroups(f)) {
    if (t == f.base() || !lat.le(derived, t)) continue;
    QuotientSystem qs = quotient(f, t);
    const FusionSystem& e = qs.system;
    if (e == inner_fusion(e.lattice_ptr(), e.base(), f.prime())) return false;
  }
  return true;
}

PerfectReport verify_perfect_z2(const FusionSystem& f) {
  if (!is_perfect(f)) fail(ErrorCode::PreconditionFailed, "system is not perfect");
  const Lattice& lat = f.lattice();
  CentralSeries s = series_raw(f);
  PerfectReport rep;
  rep.z1 = s.terms[0];
  rep.z2 = s.terms.size() > 1 ? s.terms[1] : s.terms[0];
  for (int x : lat.elements(rep.z2)) {
    std::vector<int> row;
    for (int g : lat.elements(f.base())) row.push_back(lat.group().commutator(x, g));
    rep.lambda.emplace_back(x, std::move(row));
  }
  if (rep.z1 != rep.z2) fail(ErrorCode::TheoremViolation, "perfect system with Z_2 larger than Z_1");
  return rep;
}

CentreComparison group_vs_fusion_centres(std::shared_ptr<const Group> g, int p) {
  if (o_p_prime(*g, p).count() > 1) fail(ErrorCode::PreconditionFailed, "O_{p'}(G) is nontrivial");
  HostedGroup h = host_for(g, sylow(*g, p));
  FusionSystem f = fusion_of_group(h, g->all(), h.lattice->top(), p);
  Lattice glat(g);
  CentreComparison cmp;
  for (int z : group_upper_central_series(glat, glat.top()).terms) {
    ElementSet s;
    for (int x : glat.elements(z)) {
      int y = h.embedding.from_ambient[x];
      if (y < 0) fail(ErrorCode::TheoremViolation, "upper central term is not inside the Sylow subgroup");
      s.set(y);
    }
    cmp.group_terms.push_back(h.lattice->id_of(s));
  }
  cmp.fusion_terms = upper_central_series(f).terms;
  size_t n = std::max(cmp.group_terms.size(), cmp.fusion_terms.size());
  cmp.equal = padded(cmp.group_terms, n) == padded(cmp.fusion_terms, n);
  if (!cmp.equal) fail(ErrorCode::TheoremViolation, "group and fusion upper central series differ");
  return cmp;
}

}  // namespace fusionkit
