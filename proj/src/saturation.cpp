#include "fusionkit/saturation.hpp"

#include <algorithm>

namespace fusionkit {

namespace {

// Calls fn(map) for each isomorphism from d onto a conjugate inside `within` that satisfies
// `accept` on the precomputed values; stops when fn returns true.
template <typename Accept, typename Fn>
bool scan_isos(const FusionSystem& f, int d, int within, Accept accept, Fn fn) {
  const Lattice& lat = f.lattice();
  const ConjClass& c = f.conj_class(d);
  Map tdi = inverse(c.transport[c.position(d)]);
  for (size_t i = 0; i < c.members.size(); ++i) {
    int u = c.members[i];
    if (!lat.le(u, within)) continue;
    const Map& tu = c.transport[i];
    std::vector<Map> hits;
    for (const Map& a : c.aut) {
      auto value = [&](int x) { return static_cast<int>(tu[a[tdi[x]]]); };
      if (!accept(value)) continue;
      hits.push_back(compose(compose(tdi, a), tu));
    }
    std::sort(hits.begin(), hits.end());
    for (const Map& h : hits)
      if (fn(h)) return true;
  }
  return false;
}

}  // namespace

bool is_fully_normalized(const FusionSystem& f, int q) {
  const Lattice& lat = f.lattice();
  int n = lat.order(f.normalizer(q));
  for (int r : f.conj_class(q).members)
    if (lat.order(f.normalizer(r)) > n) return false;
  return true;
}

bool is_fully_centralized(const FusionSystem& f, int q) {
  const Lattice& lat = f.lattice();
  int n = lat.order(f.centralizer(q));
  for (int r : f.conj_class(q).members)
    if (lat.order(f.centralizer(r)) > n) return false;
  return true;
}

bool is_fully_automized(const FusionSystem& f, int q) {
  return f.aut_base_order(q) == p_part(f.aut_order(q), f.prime());
}

bool is_centric(const FusionSystem& f, int q) {
  const Lattice& lat = f.lattice();
  for (int r : f.conj_class(q).members)
    if (!lat.le(f.centralizer(r), r)) return false;
  return true;
}

int n_phi(const FusionSystem& f, const Map& phi) {
  if (!f.contains_map(phi)) fail(ErrorCode::NotAnIsomorphism, "map is not an isomorphism of the system");
  const Lattice& lat = f.lattice();
  const Group& g = f.host();
  int s = lat.id_of(domain_set(phi));
  int r = lat.id_of(image_set(phi));
  MapSet aut_r;
  for (Map& m : f.aut_base(r)) aut_r.insert(std::move(m));
  Map phii = inverse(phi);
  ElementSet out;
  for (int x : lat.elements(f.normalizer(s))) {
    Map c = compose(compose(phii, conj_map(g, lat.set(s), x)), phi);
    if (aut_r.count(c)) out.set(x);
  }
  return lat.id_of(out);
}

std::optional<Map> extend_into(const FusionSystem& f, const Map& phi, int d, int within) {
  const Lattice& lat = f.lattice();
  int s = lat.id_of(domain_set(phi));
  if (!lat.le(s, d)) fail(ErrorCode::PreconditionFailed, "extension target does not contain the domain");
  const std::vector<int>& gens = lat.gens(s);
  std::optional<Map> found;
  scan_isos(
      f, d, within,
      [&](auto value) {
        for (int x : gens)
          if (value(x) != phi[x]) return false;
        return true;
      },
      [&](const Map& m) {
        found = m;
        return true;
      });
  return found;
}

std::optional<Map> extend_morphism(const FusionSystem& f, const Map& phi, int d) {
  return extend_into(f, phi, d, f.base());
}

bool is_receptive(const FusionSystem& f, int q, Map* witness) {
  for (int s : f.conj_class(q).members)
    for (const Map& phi : f.isos(s, q)) {
      int n = n_phi(f, phi);
      if (n == s) continue;
      if (!extend_morphism(f, phi, n)) {
        if (witness) *witness = phi;
        return false;
      }
    }
  return true;
}

bool has_surjectivity_property(const FusionSystem& f, int q) {
  const Lattice& lat = f.lattice();
  const Group& g = f.host();
  int nq = f.normalizer(q);
  int qc = lat.join(q, f.centralizer(q));
  std::vector<Map> autq = f.aut(q);
  for (int r = 0; r < lat.size(); ++r) {
    if (!lat.le(qc, r) || !lat.le(r, nq)) continue;
    MapSet autr_q;
    for (int x : lat.elements(r)) autr_q.insert(conj_map(g, lat.set(q), x));
    MapSet restricted;
    for (const Map& a : f.aut(r)) {
      bool keeps = true;
      for (int x : lat.gens(q))
        if (!lat.contains(q, a[x])) {
          keeps = false;
          break;
        }
      if (keeps) restricted.insert(restrict_map(a, lat.set(q)));
    }
    for (const Map& a : autq) {
      Map ai = inverse(a);
      bool normalizes = true;
      for (const Map& c : autr_q)
        if (!autr_q.count(compose(compose(ai, c), a))) {
          normalizes = false;
          break;
        }
      if (normalizes && !restricted.count(a)) return false;
    }
  }
  return true;
}

SubgroupStatus subgroup_status(const FusionSystem& f, int q) {
  SubgroupStatus s;
  s.fully_normalized = is_fully_normalized(f, q);
  s.fully_centralized = is_fully_centralized(f, q);
  s.fully_automized = is_fully_automized(f, q);
  s.receptive = is_receptive(f, q);
  s.centric = is_centric(f, q);
  return s;
}

SaturationVerdict is_saturated(const FusionSystem& f) {
  for (const ConjClass& c : f.classes()) {
    bool ok = false;
    for (int q : c.members)
      if (is_fully_automized(f, q) && is_receptive(f, q)) {
        ok = true;
        break;
      }
    if (!ok) return {false, c.rep, "no fully automized receptive member"};
  }
  return {};
}

SaturationVerdict is_saturated_puig(const FusionSystem& f) {
  const Lattice& lat = f.lattice();
  if (!is_fully_automized(f, f.base())) return {false, f.base(), "base is not fully automized"};
  for (const ConjClass& c : f.classes()) {
    bool ok = false;
    for (int q : c.members) {
      int nq = f.normalizer(q);
      bool moves = true;
      for (int r : c.members) {
        const std::vector<int>& rg = lat.gens(r);
        bool hit = scan_isos(
            f, f.normalizer(r), nq,
            [&](auto value) {
              for (int x : rg)
                if (!lat.contains(q, value(x))) return false;
              return true;
            },
            [](const Map&) { return true; });
        if (!hit) {
          moves = false;
          break;
        }
      }
      if (moves && has_surjectivity_property(f, q)) {
        ok = true;
        break;
      }
    }
    if (!ok) return {false, c.rep, "no member receives normalizers and has the surjectivity property"};
  }
  return {};
}

}  // namespace fusionkit
