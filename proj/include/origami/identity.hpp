#ifndef ORIGAMI_IDENTITY_HPP
#define ORIGAMI_IDENTITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "origami/polyring.hpp"

namespace origami {

/// Structured pass/fail record for one symbolic identity check.
struct IdentityCheck {
  std::string name;
  bool passed = false;
  std::string note;                    // display typos, sign conventions, ...
  std::optional<MultiPoly> residual;   // nonzero difference when failed
};

struct IdentityReport {
  std::string name;
  std::vector<IdentityCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  IdentityCheck& add(const std::string& check_name, bool ok) {
    checks.push_back({check_name, ok, "", std::nullopt});
    return checks.back();
  }
  IdentityCheck& add(const std::string& check_name, const MultiPoly& difference) {
    IdentityCheck c{check_name, difference.is_zero(), "", std::nullopt};
    if (!c.passed) c.residual = difference;
    checks.push_back(std::move(c));
    return checks.back();
  }
};

}  // namespace origami

#endif
