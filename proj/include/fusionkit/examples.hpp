#ifndef FUSIONKIT_EXAMPLES_HPP
#define FUSIONKIT_EXAMPLES_HPP

#include <string>
#include <vector>

namespace fusionkit {

struct Check {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct ExampleReport {
  std::string name;
  std::vector<Check> checks;

  bool passed() const {
    for (const Check& c : checks)
      if (!c.holds) return false;
    return true;
  }
};

// v4-a4, a4xa4, d8xc2, s3xs3, ea9-s3
std::vector<std::string> example_names();
// Builds the named configuration and compares every computed outcome with the expected one.
// Throws UnknownCatalogName for an unknown name.
ExampleReport run_example(const std::string& name);

}  // namespace fusionkit

#endif  // FUSIONKIT_EXAMPLES_HPP
