#ifndef FUSIONKIT_SUBSYSTEMS_HPP
#define FUSIONKIT_SUBSYSTEMS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fusionkit/fusion.hpp"
#include "fusionkit/saturation.hpp"

namespace fusionkit {

// Subgroup generated by [x, y] for x in a, y in b.
int commutator_subgroup(const Lattice& lat, int a, int b);

// For each element x of the base, every image x*phi under a morphism defined on <x>.
std::vector<ElementSet> element_orbits(const FusionSystem& f);
bool is_strongly_closed(const FusionSystem& f, int t);
std::vector<int> strongly_closed_subgroups(const FusionSystem& f);

struct NormalityVerdict {
  bool invariant = false;
  bool weakly_normal = false;
  bool normal = false;
  std::optional<Map> failure_witness;
  std::string reason;
};

NormalityVerdict normality_status(const FusionSystem& f, const FusionSystem& e);
// Only the invariance clause; e need not be saturated.
bool is_invariant(const FusionSystem& f, const FusionSystem& e, Map* witness = nullptr);
// Does alpha in Aut(T) extend to Aut_F(T C_P(T)) moving C_P(T) only inside Z(T)?
std::optional<Map> central_extension(const FusionSystem& f, int t, const Map& alpha);

struct QuotientSystem {
  FusionSystem system;
  Quotient quotient;  // maps the old host onto the new one
  int kernel = 0;

  int image(const Lattice& old_lat, int q) const;  // q must contain the kernel
  int preimage(const Lattice& old_lat, int q) const;
};
QuotientSystem quotient(const FusionSystem& f, int t);

enum class LocalKind { Normalizer, Centralizer, PCentralizer };
FusionSystem local_subsystem(const FusionSystem& f, int q, LocalKind kind);

int o_p(const FusionSystem& f);
// Largest strongly closed subgroup with a central series of strongly closed subgroups.
int o_p_by_central_series(const FusionSystem& f);
FusionSystem o_p_prime_subsystem(const FusionSystem& e);

// psi = alpha|_A * beta with alpha in Aut_F(T) and beta in e.
std::pair<Map, Map> frattini_decompose(const FusionSystem& f, const FusionSystem& e, const Map& psi);

// Subgroups of T whose every conjugate in e contains its centralizer in T.
bool is_e_centric(const FusionSystem& e, int q);
std::optional<Map> detecting_witness(const FusionSystem& f, const FusionSystem& e, const Map& alpha,
                                     int q);

struct TheoremAReport {
  bool normal = false;
  int aut_t_order = 0;  // |Aut_{O^{p'}(E)}(T)|
  int w_size = 0;  // how many of those extend centrally
  size_t morphisms = 0;
};
// Throws TheoremViolation if O^{p'}(e) is not normal in f.
TheoremAReport verify_theorem_a(const FusionSystem& f, const FusionSystem& e);

// Every subsystem of f on `base` that contains `start`, found by adding one isomorphism at a
// time. Throws OrderBoundExceeded past `limit` systems.
std::vector<FusionSystem> enumerate_subsystems(const FusionSystem& f, const FusionSystem& start,
                                               size_t limit = 5000);

// All maps of f between subgroups of `base`.
FusionSystem full_subcategory(const FusionSystem& f, int base);

}  // namespace fusionkit

#endif  // FUSIONKIT_SUBSYSTEMS_HPP
