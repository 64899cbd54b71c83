#pragma once

// Floating-point falsifier for the scalar triangle inequality and numeric
// spot checks of certificate lines. Nothing here is part of the proof path.

#include <cstdint>
#include <vector>

#include "gradenorm/certificate.hpp"
#include "gradenorm/graded_space.hpp"

namespace gradenorm {

struct SearchConfig {
  int r = 5;
  /// Random profile pairs drawn in the sampling phase.
  std::int64_t sample_count = 1'000'000;
  /// Values per coordinate of the [0, 1]^{2r} grid.
  int grid_resolution = 3;
  /// Upper bound on grid points; larger grids are subsampled with a fixed stride.
  std::int64_t grid_cap = 1 << 16;
  /// Best points refined by coordinate ascent.
  int ascent_starts = 8;
  int ascent_steps = 200;
  /// Initial relative step of the ascent.
  double ascent_step_size = 0.5;
  std::uint64_t rng_seed = 42;
  /// Relative violation threshold.
  double tolerance = 1e-12;
  /// Worker threads; 0 picks from GRADENORM_THREADS or the hardware.
  int threads = 0;

  /// Throws std::domain_error when a count is not positive or tolerance <= 0.
  void validate() const;
};

struct ProfilePair {
  ScalarProfile a;
  ScalarProfile b;
};

struct SearchOutcome {
  /// Raw defect at the argmax.
  double max_defect = 0.0;
  /// max_defect / max(1, |a| + |b|); the quantity the search maximizes.
  double max_relative_defect = 0.0;
  ProfilePair argmax;
  std::int64_t samples_evaluated = 0;
  bool violation_found = false;
};

/// scalar_norm(a + b) - scalar_norm(a) - scalar_norm(b). Throws
/// std::domain_error on signature mismatch.
double scalar_defect(const ScalarProfile& a, const ScalarProfile& b);

/// scalar_defect / max(1, scalar_norm(a) + scalar_norm(b)).
double relative_defect(const ScalarProfile& a, const ScalarProfile& b);

/// Derivative-free coordinate ascent on relative_defect, projected onto the
/// nonnegative orthant. The returned pair never has a lower relative defect
/// than the start.
ProfilePair refine(const ProfilePair& start, int steps, double step_size,
                   std::int64_t* evaluations = nullptr);

/// Grid, random sampling, then ascent from the best points found. The result
/// depends only on the config (not on the thread count).
SearchOutcome hunt(const SearchConfig& config);

/// c_L (x^{e-s} y^s + x^s y^{e-s}) - c_R * shadow_{k,i}(x, y) for one line, with
/// both sides folded to one monomial for middle orbits.
double line_margin(const GradingSignature& sig, const CertificateLine& line, double x, double y);

/// Largest relative line_margin over the boundary points (0, y), (x, 0), the
/// diagonal, and config.sample_count log-uniform (x, y) in [1e-3, 1e2]^2.
double check_line_numeric(const GradingSignature& sig, const CertificateLine& line,
                          const SearchConfig& config);

/// Worker count from GRADENORM_THREADS (when set and positive), capped by the
/// hardware concurrency.
int default_thread_count();

}  // namespace gradenorm
