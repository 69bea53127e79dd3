#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "krulldim/catalog.hpp"

namespace krulldim {

struct CaseFailure {
  std::string inputs;
  std::string expected;
  std::string actual;
};

struct CheckReport {
  std::string suite;
  std::size_t cases = 0;   // independent work items
  std::size_t checks = 0;  // individual comparisons across all cases
  std::vector<CaseFailure> failures;
  double seconds = 0.0;

  bool passed() const { return failures.empty(); }
};

enum class Exec { kSerial, kParallel };

/// Names accepted by run_suite, in execution order for "all".
const std::vector<std::string>& suite_names();

/// Runs one named check suite over the grid. Case order and the failure
/// list are identical for both execution modes. Throws PreconditionError
/// for an unknown name.
CheckReport run_suite(std::string_view name, const Grid& grid, Exec exec = Exec::kParallel);

}  // namespace krulldim
