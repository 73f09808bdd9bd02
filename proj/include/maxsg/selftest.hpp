#pragma once

#include <string>
#include <vector>

namespace maxsg {

struct SelfCheck {
  std::string suite;
  std::string name;
  bool ok = false;
  std::string detail;  // exception text when a check throws
};

/// Reference examples for one module ("core", "mapexpr", "classify",
/// "genpairs", "relcalc", "fintrans") or "all". Throws Error(UsageError) on
/// an unknown suite.
std::vector<SelfCheck> run_selftest(const std::string& suite);

}  // namespace maxsg
