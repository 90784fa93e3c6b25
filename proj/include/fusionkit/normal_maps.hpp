#ifndef FUSIONKIT_NORMAL_MAPS_HPP
#define FUSIONKIT_NORMAL_MAPS_HPP

#include <optional>
#include <string>
#include <vector>

#include "fusionkit/subsystems.hpp"

namespace fusionkit {

// U -> A(U) for subgroups U of t; entries for other subgroups stay empty. Each A(U) is sorted.
struct AutMap {
  int t = 0;
  std::vector<std::vector<Map>> a;

  bool defined(int u) const { return u < static_cast<int>(a.size()) && !a[u].empty(); }
  bool operator==(const AutMap& o) const { return t == o.t && a == o.a; }
};

AutMap aut_map_of(const FusionSystem& e);

struct MapCheck {
  bool ok = true;
  int axiom = 0;  // 1..5 for the weakly normal map axioms; 0 for "A(U) is a subgroup of Aut_F(U)"
  int subgroup = -1;
  std::optional<Map> witness;
  std::string detail;
};
MapCheck check_weakly_normal_map(const FusionSystem& f, const AutMap& a);

// `partial` is defined on the fully normalized U <= t with C_t(U) <= U. Fills in conjugates,
// then the remaining fully normalized subgroups by restriction from U C_t(U), then conjugates.
AutMap complete_partial_map(const FusionSystem& f, int t, const AutMap& partial);

// Subsystem on a.t generated by every A(U), without checks.
FusionSystem subsystem_of_map(const FusionSystem& f, const AutMap& a);
// As above, but requires a valid map and asserts the result is weakly normal with Aut = A.
FusionSystem generate_from_map(const FusionSystem& f, const AutMap& a);

// Every map of e1 that is also in e2.
FusionSystem intersect_systems(const FusionSystem& e1, const FusionSystem& e2);
FusionSystem intersection_wedge(const FusionSystem& f, const FusionSystem& e1, const FusionSystem& e2);

// Normal subgroups H of Aut_F(t) containing `bottom` with |H : bottom| prime to p, smallest first.
std::vector<std::vector<Map>> admissible_overgroups(const FusionSystem& f, int t,
                                                    const std::vector<Map>& bottom);
FusionSystem enlarge_weakly_normal(const FusionSystem& f, const FusionSystem& e,
                                   const std::vector<Map>& h);

struct BasedRange {
  FusionSystem minimal;
  FusionSystem maximal;
};
// nullopt when t carries no weakly normal subsystem.
std::optional<BasedRange> based_range(const FusionSystem& f, int t);

// Largest weakly normal subsystem on t contained in every container.
FusionSystem t_core(const FusionSystem& f, const std::vector<const FusionSystem*>& containers, int t);

// All weakly normal subsystems on t: one choice of normal A(S) <= Aut_F(S) per class of
// fully normalized S <= t with C_t(S) <= S, closed up under conjugation.
std::vector<FusionSystem> enumerate_weakly_normal(const FusionSystem& f, int t, bool first_only = false,
                                                  size_t limit = 20000);

}  // namespace fusionkit

#endif  // FUSIONKIT_NORMAL_MAPS_HPP
