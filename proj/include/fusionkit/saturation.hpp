#ifndef FUSIONKIT_SATURATION_HPP
#define FUSIONKIT_SATURATION_HPP

#include <optional>
#include <string>

#include "fusionkit/fusion.hpp"

namespace fusionkit {

// All local notions are taken relative to the base B of the system.
struct SubgroupStatus {
  bool fully_normalized = false;
  bool fully_centralized = false;
  bool fully_automized = false;
  bool receptive = false;
  bool centric = false;
};

SubgroupStatus subgroup_status(const FusionSystem& f, int q);

bool is_fully_normalized(const FusionSystem& f, int q);
bool is_fully_centralized(const FusionSystem& f, int q);
bool is_fully_automized(const FusionSystem& f, int q);
bool is_centric(const FusionSystem& f, int q);
// On failure, `witness` receives an isomorphism into q that does not extend.
bool is_receptive(const FusionSystem& f, int q, Map* witness = nullptr);
bool has_surjectivity_property(const FusionSystem& f, int q);

// Preimage in N_B(S) of Aut_B(S) meet Aut_B(R)^(phi^-1) for an isomorphism phi: S -> R in f.
int n_phi(const FusionSystem& f, const Map& phi);

// First psi in Hom(D, B) restricting to phi, scanning targets and maps in sorted order.
std::optional<Map> extend_morphism(const FusionSystem& f, const Map& phi, int d);
// Same search restricted to targets inside `within`.
std::optional<Map> extend_into(const FusionSystem& f, const Map& phi, int d, int within);

struct SaturationVerdict {
  bool saturated = true;
  int witness = -1;  // representative of a failing class, or the base
  std::string reason;
};

// Every class has a fully automized, receptive member.
SaturationVerdict is_saturated(const FusionSystem& f);
// B fully automized, and every class has a member Q that receives a map from N_B(R) for each
// conjugate R and has the surjectivity property.
SaturationVerdict is_saturated_puig(const FusionSystem& f);

}  // namespace fusionkit

#endif  // FUSIONKIT_SATURATION_HPP
