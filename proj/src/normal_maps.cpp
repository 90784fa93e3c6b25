#include "fusionkit/normal_maps.hpp"

#include <algorithm>
#include <set>

namespace fusionkit {

namespace {

std::vector<Map> sorted_unique(std::vector<Map> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// a^phi, an automorphism of the image of phi.
Map conj_by(const Map& a, const Map& phi) { return compose(compose(inverse(phi), a), phi); }

std::vector<Map> conj_all(const std::vector<Map>& group, const Map& phi) {
  std::vector<Map> out;
  out.reserve(group.size());
  for (const Map& a : group) out.push_back(conj_by(a, phi));
  return sorted_unique(std::move(out));
}

bool preserves(const Lattice& lat, const Map& b, int u) {
  for (int x : lat.gens(u))
    if (!lat.contains(u, b[x])) return false;
  return true;
}

// Aut_V(U) for U normalized by v.
std::vector<Map> aut_by(const Lattice& lat, int u, int v) {
  std::vector<Map> out;
  for (int x : lat.elements(v)) out.push_back(conj_map(lat.group(), lat.set(u), x));
  return sorted_unique(std::move(out));
}

bool subset_of(const std::vector<Map>& a, const std::vector<Map>& sorted_b) {
  for (const Map& m : a)
    if (!std::binary_search(sorted_b.begin(), sorted_b.end(), m)) return false;
  return true;
}

bool is_centric_in(const Lattice& lat, int u, int t) { return lat.le(lat.centralizer_in(u, t), u); }

void require_strongly_closed(const FusionSystem& f, int t) {
  if (!is_strongly_closed(f, t)) fail(ErrorCode::NotStronglyClosed, "subgroup is not strongly closed");
}

// Applies axiom (i) across every class meeting t.
void propagate(const FusionSystem& f, int t, AutMap& a) {
  const Lattice& lat = f.lattice();
  for (const ConjClass& c : f.classes()) {
    if (!lat.le(c.rep, t)) continue;
    int src = -1;
    for (int m : c.members)
      if (a.defined(m)) {
        src = m;
        break;
      }
    if (src < 0) continue;
    const std::vector<Map>& as = a.a[src];
    for (const Map& g : c.aut_gens) {
      Map tg = conj_by(g, c.transport[c.position(src)]);
      for (const Map& x : as)
        if (!std::binary_search(as.begin(), as.end(), conj_by(x, tg)))
          fail(ErrorCode::InconsistentPartial, "assignment is not normal in the system automorphisms");
    }
    Map to_rep = inverse(c.transport[c.position(src)]);
    for (size_t i = 0; i < c.members.size(); ++i) {
      int m = c.members[i];
      std::vector<Map> img = conj_all(as, compose(to_rep, c.transport[i]));
      if (a.defined(m) && a.a[m] != img)
        fail(ErrorCode::InconsistentPartial, "conjugation routes disagree on subgroup " + std::to_string(m));
      a.a[m] = std::move(img);
    }
  }
}

}  // namespace

AutMap aut_map_of(const FusionSystem& e) {
  AutMap a;
  a.t = e.base();
  a.a.assign(e.lattice().size(), {});
  for (int u : e.subgroups()) a.a[u] = e.aut(u);
  return a;
}

MapCheck check_weakly_normal_map(const FusionSystem& f, const AutMap& a) {
  const Lattice& lat = f.lattice();
  const int t = a.t;
  MapCheck r;
  auto bad = [&](int axiom, int u, std::optional<Map> w, std::string why) {
    r.ok = false;
    r.axiom = axiom;
    r.subgroup = u;
    r.witness = std::move(w);
    r.detail = std::move(why);
    return r;
  };
  std::vector<int> subs = lat.subgroups_of(t);
  for (int u : subs) {
    if (!a.defined(u)) return bad(0, u, std::nullopt, "assignment missing");
    const std::vector<Map>& au = a.a[u];
    if (!std::is_sorted(au.begin(), au.end())) return bad(0, u, std::nullopt, "assignment not sorted");
    for (const Map& x : au)
      if (!f.has_aut(u, x)) return bad(0, u, x, "not an automorphism in the system");
    if (generate_group(au, identity_map(lat, u)) != au) return bad(0, u, std::nullopt, "not a subgroup");
  }
  // (i)
  for (const ConjClass& c : f.classes()) {
    if (!lat.le(c.rep, t)) continue;
    const std::vector<Map>& ar = a.a[c.rep];
    for (const Map& g : c.aut_gens)
      for (const Map& x : ar)
        if (!std::binary_search(ar.begin(), ar.end(), conj_by(x, g)))
          return bad(1, c.rep, g, "assignment not invariant under this automorphism");
    for (size_t i = 1; i < c.members.size(); ++i)
      if (conj_all(ar, c.transport[i]) != a.a[c.members[i]])
        return bad(1, c.members[i], c.transport[i], "assignment not carried along this isomorphism");
  }
  std::vector<bool> fn(lat.size(), false);
  for (int u : subs) fn[u] = is_fully_normalized(f, u);
  // (ii)
  for (int u : subs) {
    if (!fn[u]) continue;
    for (const Map& x : aut_by(lat, u, lat.normalizer_in(u, t)))
      if (!std::binary_search(a.a[u].begin(), a.a[u].end(), x)) return bad(2, u, x, "missing a conjugation by T");
  }
  // (iii)
  if (p_part(static_cast<int>(a.a[t].size()), f.prime()) != static_cast<int>(aut_by(lat, t, t).size()))
    return bad(3, t, std::nullopt, "inner automorphisms are not Sylow");
  // (iv)
  for (int u : subs) {
    if (!fn[u]) continue;
    int w = lat.join(u, lat.centralizer_in(u, t));
    std::set<Map> restr;
    for (const Map& b : a.a[w])
      if (preserves(lat, b, u)) restr.insert(restrict_map(b, lat.set(u)));
    for (const Map& x : a.a[u])
      if (!restr.count(x)) return bad(4, u, x, "does not extend over the centralizer");
    // Read as an equality: anything restricting from A(UC_T(U)) would be generated anyway.
    for (const Map& x : restr)
      if (!std::binary_search(a.a[u].begin(), a.a[u].end(), x))
        return bad(4, u, x, "restriction from the centralizer product is missing");
  }
  // (v)
  for (int u : subs) {
    if (!fn[u] || !is_centric_in(lat, u, t)) continue;
    int nu = lat.normalizer_in(u, t);
    for (int v : lat.subgroups_of(nu)) {
      if (!lat.le(u, v)) continue;
      std::vector<Map> av = aut_by(lat, u, v);
      std::set<Map> restr;
      for (const Map& b : a.a[v])
        if (preserves(lat, b, u)) restr.insert(restrict_map(b, lat.set(u)));
      for (const Map& x : a.a[u]) {
        if (conj_all(av, x) != av) continue;
        if (!restr.count(x)) return bad(5, u, x, "normalizing automorphism does not lift to " + std::to_string(v));
      }
    }
  }
  return r;
}

AutMap complete_partial_map(const FusionSystem& f, int t, const AutMap& partial) {
  const Lattice& lat = f.lattice();
  require_strongly_closed(f, t);
  AutMap a;
  a.t = t;
  a.a.assign(lat.size(), {});
  std::vector<int> subs = lat.subgroups_of(t);
  for (int u : subs)
    if (partial.defined(u)) a.a[u] = sorted_unique(partial.a[u]);
  propagate(f, t, a);
  std::vector<std::pair<int, std::vector<Map>>> fill;
  for (int u : subs) {
    if (a.defined(u) || !is_fully_normalized(f, u)) continue;
    int w = lat.join(u, lat.centralizer_in(u, t));
    if (!a.defined(w))
      fail(ErrorCode::InconsistentPartial, "no assignment on the centralizer product of " + std::to_string(u));
    std::vector<Map> restr;
    for (const Map& b : a.a[w])
      if (preserves(lat, b, u)) restr.push_back(restrict_map(b, lat.set(u)));
    fill.emplace_back(u, sorted_unique(std::move(restr)));
  }
  for (auto& [u, v] : fill) a.a[u] = std::move(v);
  propagate(f, t, a);
  for (int u : subs)
    if (!a.defined(u)) fail(ErrorCode::InconsistentPartial, "subgroup " + std::to_string(u) + " left unassigned");
  return a;
}

FusionSystem subsystem_of_map(const FusionSystem& f, const AutMap& a) {
  std::vector<Map> seeds;
  for (int u : f.lattice().subgroups_of(a.t))
    if (a.defined(u)) seeds.insert(seeds.end(), a.a[u].begin(), a.a[u].end());
  return generated_fusion(f.lattice_ptr(), f.prime(), a.t, seeds);
}

FusionSystem generate_from_map(const FusionSystem& f, const AutMap& a) {
  MapCheck chk = check_weakly_normal_map(f, a);
  if (!chk.ok)
    fail(ErrorCode::PreconditionFailed, "not a weakly normal map: axiom " + std::to_string(chk.axiom) + ", " + chk.detail);
  FusionSystem e = subsystem_of_map(f, a);
  if (!(aut_map_of(e) == a)) fail(ErrorCode::PostconditionViolation, "generated automorphisms differ from the map");
  if (!normality_status(f, e).weakly_normal)
    fail(ErrorCode::PostconditionViolation, "generated subsystem is not weakly normal");
  return e;
}

FusionSystem intersect_systems(const FusionSystem& e1, const FusionSystem& e2) {
  if (!same_host(e1, e2)) fail(ErrorCode::HostMismatch, "systems live on different hosts");
  const Lattice& lat = e1.lattice();
  int base = lat.meet(e1.base(), e2.base());
  std::vector<Map> seeds;
  for (const ConjClass& c : e1.classes()) {
    std::vector<int> inside;
    for (int m : c.members)
      if (lat.le(m, base)) inside.push_back(m);
    for (int q : inside)
      for (int r : inside)
        for (const Map& phi : e1.isos(q, r))
          if (e2.contains_map(phi)) seeds.push_back(phi);
  }
  return generated_fusion(e1.lattice_ptr(), e1.prime(), base, seeds);
}

FusionSystem intersection_wedge(const FusionSystem& f, const FusionSystem& e1, const FusionSystem& e2) {
  const Lattice& lat = f.lattice();
  for (const FusionSystem* e : {&e1, &e2})
    if (!normality_status(f, *e).weakly_normal)
      fail(ErrorCode::PreconditionFailed, "wedge needs weakly normal subsystems");
  const FusionSystem* lo = &e1;
  const FusionSystem* hi = &e2;
  if (!lat.le(lo->base(), hi->base())) std::swap(lo, hi);
  if (!lat.le(lo->base(), hi->base())) {
    // Incomparable bases: largest weakly normal subsystem on the meet inside both.
    int t = lat.meet(e1.base(), e2.base());
    return t_core(f, {&e1, &e2}, t);
  }
  int t = lo->base();
  AutMap partial;
  partial.t = t;
  partial.a.assign(lat.size(), {});
  for (int q : lat.subgroups_of(t)) {
    if (!is_centric_in(lat, q, t) || !is_fully_normalized(f, q)) continue;
    std::vector<Map> both;
    for (const Map& x : lo->aut(q))
      if (hi->has_aut(q, x)) both.push_back(x);
    partial.a[q] = std::move(both);
  }
  return generate_from_map(f, complete_partial_map(f, t, partial));
}

std::vector<std::vector<Map>> admissible_overgroups(const FusionSystem& f, int t, const std::vector<Map>& bottom) {
  MapGroup mg = map_group(f.aut(t));
  ElementSet bs = mg.set_of(bottom);
  Lattice al(mg.table);
  const int bo = static_cast<int>(bottom.size());
  std::vector<std::vector<Map>> out;
  for (int h = 0; h < al.size(); ++h) {
    if ((bs & ~al.set(h)).any() || !al.is_normal_in(h, al.top())) continue;
    if ((al.order(h) / bo) % f.prime() == 0) continue;
    std::vector<Map> maps = mg.maps_of(al.set(h));
    std::sort(maps.begin(), maps.end());
    out.push_back(std::move(maps));
  }
  return out;
}

FusionSystem enlarge_weakly_normal(const FusionSystem& f, const FusionSystem& e, const std::vector<Map>& h) {
  const Lattice& lat = f.lattice();
  const int t = e.base();
  std::vector<Map> hs = sorted_unique(h);
  std::vector<Map> autf = f.aut(t);
  if (!subset_of(hs, autf)) fail(ErrorCode::PreconditionFailed, "H is not inside Aut_F(T)");
  if (generate_group(hs, identity_map(lat, t)) != hs) fail(ErrorCode::PreconditionFailed, "H is not a group");
  for (const Map& g : f.conj_class(t).aut_gens)
    if (conj_all(hs, g) != hs) fail(ErrorCode::NotNormalInAutF, "H is not normal in Aut_F(T)");
  std::vector<Map> ae = e.aut(t);
  if (!subset_of(ae, hs)) fail(ErrorCode::PreconditionFailed, "H does not contain Aut_E(T)");
  if ((hs.size() / ae.size()) % f.prime() == 0) fail(ErrorCode::IndexNotCoprime, "index of Aut_E(T) in H is divisible by p");

  std::vector<Map> seeds = e.generators();
  seeds.insert(seeds.end(), hs.begin(), hs.end());
  FusionSystem out = generated_fusion(f.lattice_ptr(), f.prime(), t, seeds);
  for (int q : lat.subgroups_of(t)) {
    std::set<Map> lhs;
    for (const Map& phi : out.isos_from(q)) lhs.insert(phi);
    std::set<Map> rhs;
    for (const Map& phi : e.isos_from(q))
      for (const Map& x : hs) rhs.insert(compose(phi, x));
    if (lhs != rhs) fail(ErrorCode::PostconditionViolation, "Hom(Q,T) is not Hom_E(Q,T)H at " + std::to_string(q));
  }
  if (out.aut(t) != hs) fail(ErrorCode::PostconditionViolation, "Aut(T) of the enlargement differs from H");
  if (!normality_status(f, out).weakly_normal)
    fail(ErrorCode::PostconditionViolation, "enlargement is not weakly normal");
  return out;
}

std::optional<BasedRange> based_range(const FusionSystem& f, int t) {
  require_strongly_closed(f, t);
  std::vector<FusionSystem> any = enumerate_weakly_normal(f, t, true);
  if (any.empty()) return std::nullopt;
  FusionSystem lo = o_p_prime_subsystem(any.front());
  auto hs = admissible_overgroups(f, t, lo.aut(t));
  std::vector<Map> all;
  for (const auto& h : hs) all.insert(all.end(), h.begin(), h.end());
  std::vector<Map> top = generate_group(sorted_unique(all), identity_map(f.lattice(), t));
  if (std::find(hs.begin(), hs.end(), top) == hs.end())
    fail(ErrorCode::PostconditionViolation, "join of admissible subgroups is not admissible");
  FusionSystem hi = enlarge_weakly_normal(f, lo, top);
  return BasedRange{std::move(lo), std::move(hi)};
}

FusionSystem t_core(const FusionSystem& f, const std::vector<const FusionSystem*>& containers, int t) {
  auto range = based_range(f, t);
  if (!range) fail(ErrorCode::CoreUndefined, "subgroup carries no weakly normal subsystem");
  const FusionSystem& lo = range->minimal;
  for (const FusionSystem* d : containers)
    if (!is_subsystem(lo, *d)) fail(ErrorCode::CoreUndefined, "minimal subsystem is not inside the container");
  std::vector<FusionSystem> inside;
  for (const auto& h : admissible_overgroups(f, t, lo.aut(t))) {
    FusionSystem eh = enlarge_weakly_normal(f, lo, h);
    bool ok = true;
    for (const FusionSystem* d : containers) ok = ok && is_subsystem(eh, *d);
    if (ok) inside.push_back(std::move(eh));
  }
  // Admissible groups come smallest first, so the largest candidate is last.
  const FusionSystem& best = inside.back();
  for (const FusionSystem& e : inside)
    if (!is_subsystem(e, best)) fail(ErrorCode::PostconditionViolation, "no largest subsystem inside the container");
  return best;
}

std::vector<FusionSystem> enumerate_weakly_normal(const FusionSystem& f, int t, bool first_only, size_t limit) {
  const Lattice& lat = f.lattice();
  require_strongly_closed(f, t);
  struct Slot {
    const ConjClass* cls;
    int s;
    std::vector<std::vector<Map>> options;
  };
  std::vector<Slot> slots;
  size_t tuples = 1;
  for (const ConjClass& c : f.classes()) {
    if (!lat.le(c.rep, t)) continue;
    int s = -1;
    for (int m : c.members)
      if (is_centric_in(lat, m, t) && is_fully_normalized(f, m)) {
        s = m;
        break;
      }
    if (s < 0) continue;
    std::vector<Map> inner = aut_by(lat, s, lat.normalizer_in(s, t));
    MapGroup mg = map_group(f.aut(s));
    ElementSet bs = mg.set_of(inner);
    Lattice al(mg.table);
    Slot slot{&c, s, {}};
    for (int h = 0; h < al.size(); ++h) {
      if ((bs & ~al.set(h)).any() || !al.is_normal_in(h, al.top())) continue;
      if (s == t && p_part(al.order(h), f.prime()) != static_cast<int>(inner.size())) continue;
      std::vector<Map> maps = mg.maps_of(al.set(h));
      std::sort(maps.begin(), maps.end());
      slot.options.push_back(std::move(maps));
    }
    tuples *= slot.options.size();
    if (tuples > limit) fail(ErrorCode::OrderBoundExceeded, "too many candidate assignments");
    slots.push_back(std::move(slot));
  }
  std::vector<FusionSystem> out;
  if (tuples == 0) return out;
  std::vector<size_t> pick(slots.size(), 0);
  for (size_t n = 0; n < tuples; ++n) {
    std::vector<Map> seeds;
    for (size_t i = 0; i < slots.size(); ++i) {
      const Slot& sl = slots[i];
      const ConjClass& c = *sl.cls;
      Map to_rep = inverse(c.transport[c.position(sl.s)]);
      for (size_t k = 0; k < c.members.size(); ++k) {
        std::vector<Map> img = conj_all(sl.options[pick[i]], compose(to_rep, c.transport[k]));
        seeds.insert(seeds.end(), img.begin(), img.end());
      }
    }
    FusionSystem e = generated_fusion(f.lattice_ptr(), f.prime(), t, seeds);
    if (normality_status(f, e).weakly_normal &&
        std::find(out.begin(), out.end(), e) == out.end()) {
      out.push_back(std::move(e));
      if (first_only) return out;
    }
    for (size_t i = 0; i < pick.size(); ++i) {
      if (++pick[i] < slots[i].options.size()) break;
      pick[i] = 0;
    }
  }
  return out;
}

}  // namespace fusionkit
