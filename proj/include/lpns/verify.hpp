#pragma once

#include <cstdint>

#include "lpns/report.hpp"
#include "lpns/solver.hpp"

namespace lpns {

/// Knobs for the verification suites. `quick` shrinks corpus sizes for a fast
/// smoke pass; the defaults match the acceptance configuration.
struct VerifyConfig {
  std::uint64_t seed = 42;
  bool quick = false;
  bool with_acceptance = true;
  /// Bilinear/contraction suites are guarded: a non-critical index is reported
  /// as skipped-with-reason rather than failed.
  double sigma_override = 0.0;
  bool has_sigma_override = false;
};

/// Measures the Bernstein constant over a seeded calibration corpus of ball-
/// and annulus-limited fields. The value (with its 25% headroom) is what the
/// embedding and block-decay suites assert against.
double calibrate_bernstein_constant(const Grid& grid, const FilterBank& bank,
                                    std::uint64_t seed);

/// The twelve acceptance criteria at desk scale, one suite per criterion.
std::vector<SuiteReport> run_acceptance(const VerifyConfig& cfg);

/// Module oracle suites plus the acceptance criteria; the full report the CLI
/// `verify` subcommand emits.
VerificationReport run_verify(const VerifyConfig& cfg);

}  // namespace lpns
