#ifndef FUSIONKIT_MORPHISM_HPP
#define FUSIONKIT_MORPHISM_HPP

#include <vector>

#include "fusionkit/group.hpp"

namespace fusionkit {

// A map indexed by element of the host group; -1 outside the domain.
using Map = std::vector<int16_t>;

struct MapHash {
  size_t operator()(const Map& m) const {
    uint64_t h = 1469598103934665603ULL;
    for (int16_t v : m) {
      h ^= static_cast<uint16_t>(v);
      h *= 1099511628211ULL;
    }
    return static_cast<size_t>(h);
  }
};

// An injective homomorphism between subgroups (lattice ids) of one host.
struct Morphism {
  int dom = 0;
  int cod = 0;
  Map map;

  bool operator==(const Morphism& o) const { return dom == o.dom && cod == o.cod && map == o.map; }
  bool operator<(const Morphism& o) const {
    if (dom != o.dom) return dom < o.dom;
    if (cod != o.cod) return cod < o.cod;
    return map < o.map;
  }
};

Map identity_map(const Lattice& lat, int q);
// a then b.
Map compose(const Map& a, const Map& b);
Map inverse(const Map& a);
Map restrict_map(const Map& a, const ElementSet& s);
ElementSet domain_set(const Map& a);
ElementSet image_set(const Map& a);
int image_of(const Lattice& lat, const Map& a);
// Image of a subgroup contained in the domain.
int apply(const Lattice& lat, const Map& a, int q);
// x -> g^-1 x g on the elements of s.
Map conj_map(const Group& g, const ElementSet& s, int x);
bool is_injective_hom(const Group& g, const Map& a);
bool agrees_on(const Map& a, const Map& b, const std::vector<int>& points);

Morphism conj_morphism(const Lattice& lat, int g, int q, int r);

// All automorphisms of the subgroup with element set q, optionally fixing the given elements.
std::vector<Map> automorphisms(const Group& g, const ElementSet& q, const ElementSet& fixed = {});
std::vector<Map> automorphisms(const Lattice& lat, int q);

// Closes a set of automorphisms of one subgroup under composition. Output is sorted.
std::vector<Map> generate_group(const std::vector<Map>& gens, const Map& identity);

}  // namespace fusionkit

#endif  // FUSIONKIT_MORPHISM_HPP
