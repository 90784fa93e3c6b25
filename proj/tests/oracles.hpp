// Brute-force reference implementations used only by the tests. They work on plain element
// lists and extensional morphism sets and share no algorithms with the library.
#ifndef FUSIONKIT_TEST_ORACLES_HPP
#define FUSIONKIT_TEST_ORACLES_HPP

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "fusionkit/fusion.hpp"

namespace oracle {

using fusionkit::Group;
using Elems = std::vector<int>;  // sorted
using NMap = std::map<int, int>;  // domain element -> image

inline Elems close(const Group& g, Elems gens) {
  std::set<int> s{0};
  s.insert(gens.begin(), gens.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(s.begin(), s.end());
    for (int a : cur)
      for (int b : cur)
        if (s.insert(g.mul(a, b)).second) grew = true;
  }
  return Elems(s.begin(), s.end());
}

// Every subgroup of `within`, found by adjoining one element at a time to known subgroups.
inline std::set<Elems> subgroups(const Group& g, const Elems& within) {
  std::set<Elems> found{{0}};
  std::vector<Elems> queue{{0}};
  while (!queue.empty()) {
    Elems h = queue.back();
    queue.pop_back();
    for (int x : within) {
      if (std::binary_search(h.begin(), h.end(), x)) continue;
      Elems gens = h;
      gens.push_back(x);
      Elems k = close(g, gens);
      if (found.insert(k).second) queue.push_back(k);
    }
  }
  return found;
}

inline Elems all_elements(const Group& g) {
  Elems e(g.order());
  for (int i = 0; i < g.order(); ++i) e[i] = i;
  return e;
}

inline Elems image(const NMap& m) {
  Elems out;
  for (auto [x, y] : m) out.push_back(y);
  std::sort(out.begin(), out.end());
  return out;
}

inline Elems domain(const NMap& m) {
  Elems out;
  for (auto [x, y] : m) out.push_back(x);
  return out;
}

// Conjugation maps c_t restricted to subgroups of `base` landing in `base`, for t in `acting`.
inline std::set<NMap> group_fusion(const Group& g, const Elems& acting, const Elems& base) {
  std::set<NMap> out;
  for (const Elems& q : subgroups(g, base))
    for (int t : acting) {
      NMap m;
      bool ok = true;
      for (int x : q) {
        int y = g.conj(x, t);
        if (!std::binary_search(base.begin(), base.end(), y)) {
          ok = false;
          break;
        }
        m[x] = y;
      }
      if (ok) out.insert(m);
    }
  return out;
}

// Closure under inverses, composition and restriction to subgroups.
inline std::set<NMap> closure(const Group& g, std::set<NMap> maps) {
  std::map<Elems, std::vector<Elems>> subs_of;
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<NMap> cur(maps.begin(), maps.end());
    for (const NMap& a : cur) {
      NMap inv;
      for (auto [x, y] : a) inv[y] = x;
      if (maps.insert(inv).second) grew = true;
      Elems d = domain(a);
      auto it = subs_of.find(d);
      if (it == subs_of.end()) {
        auto s = subgroups(g, d);
        it = subs_of.emplace(d, std::vector<Elems>(s.begin(), s.end())).first;
      }
      for (const Elems& r : it->second) {
        NMap res;
        for (int x : r) res[x] = a.at(x);
        if (maps.insert(res).second) grew = true;
      }
    }
    std::map<Elems, std::vector<const NMap*>> by_domain;
    for (const NMap& b : maps) by_domain[domain(b)].push_back(&b);
    std::vector<NMap> fresh;
    for (const NMap& a : maps) {
      auto it = by_domain.find(image(a));
      if (it == by_domain.end()) continue;
      for (const NMap* b : it->second) {
        NMap c;
        for (auto [x, y] : a) c[x] = b->at(y);
        if (!maps.count(c)) fresh.push_back(c);
      }
    }
    for (NMap& c : fresh)
      if (maps.insert(std::move(c)).second) grew = true;
  }
  return maps;
}

inline NMap to_nmap(const fusionkit::Map& m) {
  NMap out;
  for (size_t x = 0; x < m.size(); ++x)
    if (m[x] >= 0) out[static_cast<int>(x)] = m[x];
  return out;
}

inline fusionkit::Map from_nmap(const NMap& m, int n) {
  fusionkit::Map out(n, -1);
  for (auto [x, y] : m) out[x] = static_cast<int16_t>(y);
  return out;
}

// Every morphism of a library system, extensionally.
inline std::set<NMap> morphisms(const fusionkit::FusionSystem& f) {
  std::set<NMap> out;
  for (int q : f.subgroups())
    for (const auto& m : f.isos_from(q)) out.insert(to_nmap(m));
  return out;
}

inline bool strongly_closed(const std::set<NMap>& f, const Elems& t) {
  for (const NMap& m : f)
    for (auto [x, y] : m)
      if (std::binary_search(t.begin(), t.end(), x) && !std::binary_search(t.begin(), t.end(), y)) return false;
  return true;
}

// Centre by the literal extension definition over an extensional morphism set.
inline Elems centre(const Group& g, const std::set<NMap>& f, const Elems& base) {
  Elems out;
  for (int x : base) {
    bool ok = true;
    for (const NMap& phi : f) {
      Elems gens = domain(phi);
      gens.push_back(x);
      Elems qx = close(g, gens);
      bool found = false;
      for (const NMap& psi : f) {
        if (domain(psi) != qx || psi.at(x) != x) continue;
        bool agrees = true;
        for (auto [a, b] : phi)
          if (psi.at(a) != b) {
            agrees = false;
            break;
          }
        if (agrees) {
          found = true;
          break;
        }
      }
      if (!found) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return out;
}

// Every subsystem on t of the extensional system f containing `start`, adding one map at a time.
inline std::vector<std::set<NMap>> subsystems(const Group& g, const std::set<NMap>& f, const Elems& t,
                                              const std::set<NMap>& start, size_t limit = 3000) {
  std::vector<NMap> atoms;
  for (const NMap& m : f) {
    Elems d = domain(m);
    Elems i = image(m);
    if (std::includes(t.begin(), t.end(), d.begin(), d.end()) && std::includes(t.begin(), t.end(), i.begin(), i.end()))
      atoms.push_back(m);
  }
  std::vector<std::set<NMap>> found{closure(g, start)};
  std::set<std::set<NMap>> seen{found[0]};
  for (size_t i = 0; i < found.size(); ++i)
    for (const NMap& a : atoms) {
      if (found[i].count(a)) continue;
      std::set<NMap> next = found[i];
      next.insert(a);
      next = closure(g, next);
      if (seen.insert(next).second) found.push_back(next);
      if (found.size() > limit) throw std::length_error("subsystem search limit reached");
    }
  return found;
}

inline bool contains(const Elems& s, int x) { return std::binary_search(s.begin(), s.end(), x); }

inline NMap conj_on(const Group& g, const Elems& q, int t) {
  NMap m;
  for (int x : q) m[x] = g.conj(x, t);
  return m;
}

// For phi: Q -> R in e (R = <Q, Q phi>) and psi: R -> T in f, psi^-1 phi psi must lie in e.
inline bool invariant(const Group& g, const std::set<NMap>& f, const std::set<NMap>& e) {
  std::map<Elems, std::vector<const NMap*>> from;
  for (const NMap& m : f) from[domain(m)].push_back(&m);
  for (const NMap& phi : e) {
    Elems gens = domain(phi);
    Elems im = image(phi);
    gens.insert(gens.end(), im.begin(), im.end());
    Elems r = close(g, gens);
    for (const NMap* psi : from[r]) {
      NMap c;
      for (auto [x, y] : phi) c[psi->at(x)] = psi->at(y);
      if (!e.count(c)) return false;
    }
  }
  return true;
}

inline int p_part(int n, int p) {
  int k = 1;
  while (n % p == 0) {
    n /= p;
    k *= p;
  }
  return k;
}

// Every conjugacy class has a fully automized member that is receptive.
inline bool saturated(const Group& g, const std::set<NMap>& f, const Elems& base, int p) {
  std::map<Elems, std::vector<const NMap*>> from, onto;
  for (const NMap& m : f) {
    from[domain(m)].push_back(&m);
    onto[image(m)].push_back(&m);
  }
  auto normalizer = [&](const Elems& q) {
    Elems n;
    for (int t : base) {
      bool ok = true;
      for (int x : q) ok = ok && contains(q, g.conj(x, t));
      if (ok) n.push_back(t);
    }
    return n;
  };
  auto aut_p = [&](const Elems& r) {
    std::set<NMap> out;
    for (int t : normalizer(r)) out.insert(conj_on(g, r, t));
    return out;
  };
  auto good = [&](const Elems& r) {
    int autf = 0;
    for (const NMap* m : from[r])
      if (image(*m) == r) ++autf;
    std::set<NMap> ap = aut_p(r);
    if (static_cast<int>(ap.size()) != p_part(autf, p)) return false;
    for (const NMap* phi : onto[r]) {
      Elems s = domain(*phi);
      NMap inv;
      for (auto [x, y] : *phi) inv[y] = x;
      Elems nphi;
      for (int t : normalizer(s)) {
        NMap c;
        for (int y : r) c[y] = phi->at(g.conj(inv.at(y), t));
        if (ap.count(c)) nphi.push_back(t);
      }
      bool ext = false;
      for (const NMap* psi : from[close(g, nphi)]) {
        bool agrees = true;
        for (auto [x, y] : *phi) agrees = agrees && psi->at(x) == y;
        if (agrees) {
          ext = true;
          break;
        }
      }
      if (!ext) return false;
    }
    return true;
  };
  for (const Elems& q : subgroups(g, base)) {
    bool ok = false;
    for (const NMap* phi : from[q])
      if (good(image(*phi))) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

// Subsystems on t of f restricted to t, with t's inner fusion as the bottom.
inline std::set<NMap> restrict_to(const std::set<NMap>& f, const Elems& t) {
  std::set<NMap> out;
  for (const NMap& m : f) {
    Elems d = domain(m);
    if (std::includes(t.begin(), t.end(), d.begin(), d.end())) out.insert(m);
  }
  return out;
}

// Every weakly normal subsystem of f on the strongly closed subgroup t.
inline std::vector<std::set<NMap>> weakly_normal(const Group& g, const std::set<NMap>& f, const Elems& t, int p,
                                                 size_t limit = 3000) {
  std::set<NMap> bottom = group_fusion(g, t, t);
  std::vector<std::set<NMap>> out;
  for (auto& e : subsystems(g, restrict_to(f, t), t, bottom, limit))
    if (invariant(g, f, e) && saturated(g, e, t, p)) out.push_back(std::move(e));
  return out;
}

}  // namespace oracle

#endif  // FUSIONKIT_TEST_ORACLES_HPP
