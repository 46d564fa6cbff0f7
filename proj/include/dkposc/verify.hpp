#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dkposc/params.hpp"

// Self-contained cross-check battery behind the `verify` CLI subcommand.
// Each check re-derives something from an independent direction: algebra
// identities in integer arithmetic, finite differences against analytic
// connections, eliminated components against the radial operator, and the
// finite-difference eigenproblem against the closed-form spectrum.
namespace dkp::verify {

enum class Level { quick, full };

struct CheckResult {
  std::string name;
  bool passed;
  double worst;       // worst observed deviation
  double tolerance;   // bound it was held to
  std::string detail; // short human-readable note
};

struct Report {
  std::vector<CheckResult> checks;
  std::uint64_t seed;
  bool all_passed() const;
};

// Runs the battery. quick subsamples draws and grid sizes to stay under a
// few seconds; full runs the complete set.
Report run(Level level, std::uint64_t seed);

}  // namespace dkp::verify
