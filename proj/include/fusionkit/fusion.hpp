#ifndef FUSIONKIT_FUSION_HPP
#define FUSIONKIT_FUSION_HPP

#include <memory>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "fusionkit/morphism.hpp"

namespace fusionkit {

using MapSet = std::unordered_set<Map, MapHash>;

// One conjugacy class of subgroups. Every isomorphism q1 -> q2 inside the class is
// transport[q1]^-1 * a * transport[q2] for a unique a in aut (automorphisms of rep).
struct ConjClass {
  int rep = 0;
  std::vector<int> members;  // sorted; members[0] == rep
  std::vector<Map> transport;  // rep -> members[i]
  std::vector<Map> aut;  // sorted
  MapSet aut_index;
  std::vector<Map> aut_gens;

  int position(int q) const;
};

// A fusion system on the base subgroup of a host p-group. Subsystems of a system share its
// host lattice and may sit on a smaller base.
class FusionSystem {
public:
  FusionSystem(std::shared_ptr<const Lattice> lat, int p, int base, std::vector<ConjClass> classes);

  const Lattice& lattice() const { return *lat_; }
  std::shared_ptr<const Lattice> lattice_ptr() const { return lat_; }
  const Group& host() const { return lat_->group(); }
  int prime() const { return p_; }
  int base() const { return base_; }
  bool in_base(int q) const { return lat_->le(q, base_); }
  // Subgroups of the base, in lattice order.
  std::vector<int> subgroups() const { return lat_->subgroups_of(base_); }

  const std::vector<ConjClass>& classes() const { return classes_; }
  int class_index(int q) const;
  const ConjClass& conj_class(int q) const { return classes_[class_index(q)]; }
  const Map& transport(int q) const;
  bool are_conjugate(int q, int r) const { return class_index(q) == class_index(r); }

  std::vector<Map> aut(int q) const;
  int aut_order(int q) const { return static_cast<int>(conj_class(q).aut.size()); }
  bool has_aut(int q, const Map& a) const;
  // Isomorphisms q -> r; empty unless conjugate.
  std::vector<Map> isos(int q, int r) const;
  // Hom(q, r) as morphisms with codomain r.
  std::vector<Morphism> homs(int q, int r) const;
  // Every isomorphism from q onto some subgroup of the base.
  std::vector<Map> isos_from(int q) const;

  bool contains_map(const Map& phi) const;
  bool contains(const Morphism& m) const;

  // Automorphism generators of each class representative followed by its transports.
  std::vector<Map> generators() const;
  size_t morphism_count() const;

  // N_B(q), C_B(q), Aut_B(q) relative to the base B.
  int normalizer(int q) const { return lat_->normalizer_in(q, base_); }
  int centralizer(int q) const { return lat_->centralizer_in(q, base_); }
  std::vector<Map> aut_base(int q) const;
  int aut_base_order(int q) const;

private:
  std::shared_ptr<const Lattice> lat_;
  int p_;
  int base_;
  std::vector<ConjClass> classes_;
  std::vector<int> class_of_;
};

bool same_host(const FusionSystem& a, const FusionSystem& b);
bool is_subsystem(const FusionSystem& e, const FusionSystem& f);
bool operator==(const FusionSystem& a, const FusionSystem& b);
inline bool operator!=(const FusionSystem& a, const FusionSystem& b) { return !(a == b); }

// Least system on the base containing inner fusion and the seed isomorphisms.
FusionSystem generated_fusion(std::shared_ptr<const Lattice> lat, int p, int base,
                              const std::vector<Map>& seeds);
FusionSystem inner_fusion(std::shared_ptr<const Lattice> lat, int base, int p);

// Host for a system of an ambient group: the chosen p-subgroup as a standalone group.
struct HostedGroup {
  std::shared_ptr<const Group> ambient;
  Embedding embedding;
  std::shared_ptr<const Lattice> lattice;
};
HostedGroup host_for(std::shared_ptr<const Group> ambient, const ElementSet& p_subgroup);

// System on `base` (a host subgroup) whose morphisms are conjugations by elements of `k`.
FusionSystem fusion_of_group(const HostedGroup& host, const ElementSet& k, int base, int p);
// System of G on its canonical Sylow p-subgroup.
FusionSystem fusion_of_group(std::shared_ptr<const Group> g, int p);

// Internal product of two systems whose bases commute and meet trivially.
FusionSystem internal_product(const FusionSystem& e1, const FusionSystem& e2);
// External product on host1 x host2.
FusionSystem direct_product(const FusionSystem& f1, const FusionSystem& f2);
// Re-hosts a system along an injective homomorphism of hosts.
FusionSystem transport_system(const FusionSystem& f, std::shared_ptr<const Lattice> target,
                              const std::vector<int>& embed);

// A group of automorphisms of one subgroup, as a Cayley table over its sorted elements.
struct MapGroup {
  std::vector<Map> elems;  // sorted; elems[0] is the identity
  std::shared_ptr<const Group> table;
  std::unordered_map<Map, int, MapHash> index;

  int find(const Map& m) const {
    auto it = index.find(m);
    return it == index.end() ? -1 : it->second;
  }
  ElementSet set_of(const std::vector<Map>& maps) const;
  std::vector<Map> maps_of(const ElementSet& s) const;
};
MapGroup map_group(std::vector<Map> elems);

int map_order(const Map& a);
// Elements of p-power order (which generate O^{p'}), or of order prime to p (which generate O^p).
std::vector<Map> p_elements(const std::vector<Map>& group, int p, bool p_power = true);

}  // namespace fusionkit

#endif  // FUSIONKIT_FUSION_HPP
