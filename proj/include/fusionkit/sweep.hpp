#ifndef FUSIONKIT_SWEEP_HPP
#define FUSIONKIT_SWEEP_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "fusionkit/group.hpp"

namespace fusionkit {

struct SweepOptions {
  int max_order = 24;
  int max_t = 16;  // largest strongly closed subgroup searched for weakly normal subsystems
  bool oracle = false;  // brute-force cross-checks for |T| <= 9
};

struct SweepRow {
  std::string group;
  int order = 0;
  int prime = 0;
  int p_order = 0;
  int strongly_closed = 0;
  int weakly_normal = 0;  // found over all strongly closed T within the bound
  bool perfect = false;
  int hypercentre_order = 0;
  std::map<std::string, int> checks;  // property -> instances examined
  std::vector<std::string> violations;  // "property: detail"
};

// Every invariant the library asserts, on F_P(G) for one group and prime.
SweepRow sweep_group(std::shared_ptr<const Group> g, int p, const SweepOptions& opt);

struct SweepReport {
  std::vector<SweepRow> rows;
  std::map<std::string, int> checks;
  std::map<std::string, int> violations;
};
// All catalog groups up to opt.max_order, every prime divisor, in catalog order.
SweepReport run_sweep(const SweepOptions& opt);

}  // namespace fusionkit

#endif  // FUSIONKIT_SWEEP_HPP
