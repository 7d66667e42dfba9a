#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace trider {

/// One failed identity together with the basis indices that witness it.
struct Violation {
  std::string law;
  std::vector<std::size_t> witness;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string law, std::vector<std::size_t> witness, std::string detail = {}) {
    violations.push_back({std::move(law), std::move(witness), std::move(detail)});
  }
  void append(const ValidationReport& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
};

std::string describe(const Violation& v);

}  // namespace trider
