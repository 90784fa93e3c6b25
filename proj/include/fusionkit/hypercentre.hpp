#ifndef FUSIONKIT_HYPERCENTRE_HPP
#define FUSIONKIT_HYPERCENTRE_HPP

#include <memory>
#include <utility>
#include <vector>

#include "fusionkit/subsystems.hpp"

namespace fusionkit {

// Elements x of the base such that every morphism Q -> R extends to Q<x> -> R<x> fixing x.
int centre_of(const FusionSystem& f);
// Central elements of the base fixed by every morphism whose domain contains them.
int centre_by_fixed_points(const FusionSystem& f);

struct CentralSeries {
  std::vector<int> terms;  // Z_1, Z_2, ... up to the first repeat
  int limit = 0;
};
CentralSeries upper_central_series(const FusionSystem& f);
// Upper central series of the base group itself.
CentralSeries group_upper_central_series(const Lattice& lat, int base);

// Is every morphism extendable over q with a base conjugation on q? q must be normal in the base.
bool is_p_centralized_by(const FusionSystem& f, int q);
// Join of the normal subgroups q with F = P C_F(q); checked against the hypercentre.
int x_subgroup(const FusionSystem& f);

int focal_subgroup(const FusionSystem& f);
int hyperfocal_subgroup(const FusionSystem& f);
// No quotient by a strongly closed subgroup is the inner system of a nontrivial abelian group.
bool is_perfect(const FusionSystem& f);

struct PerfectReport {
  int z1 = 0;
  int z2 = 0;
  // For x in Z_2: the images [x, g] for g running over the base in element order.
  std::vector<std::pair<int, std::vector<int>>> lambda;
};
PerfectReport verify_perfect_z2(const FusionSystem& f);

struct CentreComparison {
  std::vector<int> group_terms;  // host lattice ids
  std::vector<int> fusion_terms;
  bool equal = false;
};
// Throws PreconditionFailed when O_{p'}(G) is nontrivial and TheoremViolation on mismatch.
CentreComparison group_vs_fusion_centres(std::shared_ptr<const Group> g, int p);

}  // namespace fusionkit

#endif  // FUSIONKIT_HYPERCENTRE_HPP
