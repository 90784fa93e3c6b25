#ifndef FUSIONKIT_CATALOG_HPP
#define FUSIONKIT_CATALOG_HPP

#include <memory>
#include <string>
#include <vector>

#include "fusionkit/group.hpp"

namespace fusionkit {

struct GroupSpec {
  std::shared_ptr<const Group> group;
  int prime = 0;  // 0 when the spec does not name one
};

struct CatalogEntry {
  std::string name;
  int order = 0;
  std::string file;
};

// FUSIONKIT_CATALOG in the environment overrides the built-in location.
std::string catalog_dir();
std::vector<CatalogEntry> catalog_index();

GroupSpec parse_group_spec(const std::string& json_text, int max_order = kDefaultOrderBound);
// Accepts a path to a spec file or a catalog name (case-insensitive).
GroupSpec load_group_spec(const std::string& path_or_name, int max_order = kDefaultOrderBound);
std::shared_ptr<const Group> catalog_group(const std::string& name);

}  // namespace fusionkit

#endif  // FUSIONKIT_CATALOG_HPP
