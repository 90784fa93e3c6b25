#ifndef FUSIONKIT_TEST_SUPPORT_HPP
#define FUSIONKIT_TEST_SUPPORT_HPP

#include <functional>
#include <string>
#include <vector>

#include "fusionkit/catalog.hpp"
#include "fusionkit/fusion.hpp"
#include "oracles.hpp"

namespace testing {

using namespace fusionkit;

// An ambient group with its Sylow subgroup as host.
struct Ctx {
  std::shared_ptr<const Group> g;
  HostedGroup h;
  int p = 0;

  const Lattice& lat() const { return *h.lattice; }
  int amb(const std::string& cycles) const { return g->index_of(parse_cycles(cycles, g->degree())); }
  int host(const std::string& cycles) const { return h.embedding.from_ambient[amb(cycles)]; }
  int sub(const std::vector<std::string>& gens) const {
    ElementSet s;
    s.set(0);
    for (const auto& c : gens) s.set(host(c));
    return lat().join_set(s);
  }
  ElementSet ambient_sub(const std::vector<std::string>& gens) const {
    std::vector<int> v;
    for (const auto& c : gens) v.push_back(amb(c));
    return closure(*g, v);
  }
  FusionSystem full() const { return fusion_of_group(h, g->all(), lat().top(), p); }
  FusionSystem inner(int base) const { return inner_fusion(h.lattice, base, p); }
  FusionSystem sys(const std::vector<std::string>& acting, int base) const {
    return fusion_of_group(h, ambient_sub(acting), base, p);
  }
};

inline Ctx ctx(const std::string& name, int p) {
  Ctx c;
  c.g = catalog_group(name);
  c.p = p;
  c.h = host_for(c.g, sylow(*c.g, p));
  return c;
}

// Every (group, prime) pair of the catalog with |G| <= max_order.
inline void for_corpus(int max_order, const std::function<void(const Ctx&)>& body) {
  for (const CatalogEntry& e : catalog_index()) {
    if (e.order > max_order) continue;
    auto g = catalog_group(e.name);
    for (int p : prime_divisors(g->order())) {
      Ctx c;
      c.g = g;
      c.p = p;
      c.h = host_for(g, sylow(*g, p));
      body(c);
    }
  }
}

inline std::string label(const Ctx& c) { return c.g->name + "@" + std::to_string(c.p); }

inline oracle::Elems elems(const Lattice& lat, int q) {
  return oracle::Elems(lat.elements(q).begin(), lat.elements(q).end());
}

inline int to_id(const Lattice& lat, const oracle::Elems& e) {
  ElementSet s;
  for (int x : e) s.set(x);
  return lat.find(s);
}

// The automorphism of order k of subgroup q, first in sorted order.
inline Map aut_of_order(const Lattice& lat, int q, int k) {
  for (const Map& a : automorphisms(lat, q))
    if (map_order(a) == k) return a;
  return {};
}

// Name of the error code thrown by body, or "none".
inline std::string error_of(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return error_code_name(e.code());
  }
  return "none";
}

}  // namespace testing

#endif  // FUSIONKIT_TEST_SUPPORT_HPP
