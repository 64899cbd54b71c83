#pragma once

// Orbit-level bookkeeping for the 2r-th power expansion of the triangle
// inequality: sum_i (a_i + b_i)^{e_i} <= (A + B)^{2r}.

#include <cstdint>
#include <vector>

#include "gradenorm/exactmath.hpp"
#include "gradenorm/graded_space.hpp"

namespace gradenorm {

/// Left-hand cross terms binom(e_i, s) (a_i^{e_i-s} b_i^s + a_i^s b_i^{e_i-s}),
/// folded by symmetry so 1 <= s <= e_i / 2. A middle orbit (s == e_i / 2) is
/// the single term binom(e_i, s) a_i^s b_i^s.
struct TermOrbit {
  int level = 0;
  int split = 0;
  int exponent = 0;  // e_i
  BigInt coefficient;
  bool is_middle = false;

  /// (e_i - s, s).
  ExponentPair exponents() const;
};

/// Right-hand terms binom(2r, k) (A^{2r-k} B^k + A^k B^{2r-k}), 1 <= k <= r;
/// single term when k == r.
struct RhsOrbit {
  int k = 0;
  int degree = 0;  // 2r
  BigInt coefficient;
  bool is_middle = false;

  ExponentPair exponents() const;
};

/// Per-level Hoelder shadow of the k-th right-hand term:
/// a_i^{e_i (2r-k) / 2r} b_i^{e_i k / 2r}.
struct ShadowPair {
  int k = 0;
  int level = 0;
  ExponentPair exponents;
};

std::vector<TermOrbit> lhs_orbits(const GradingSignature& sig);
std::vector<RhsOrbit> rhs_orbits(const GradingSignature& sig);

/// Throws std::domain_error unless 1 <= k <= r and 1 <= i <= r.
TermOrbit lhs_orbit(const GradingSignature& sig, int level, int split);
RhsOrbit rhs_orbit(const GradingSignature& sig, int k);
ShadowPair shadow(const GradingSignature& sig, int k, int level);

/// Orbit value at (x, y) without its coefficient; one monomial when middle.
double orbit_value(const TermOrbit& orbit, double x, double y);
double orbit_value(const RhsOrbit& orbit, double big_a, double big_b);
/// Shadow value at (x, y), symmetrized to match the right-hand orbit k: two
/// monomials for k < r, one for k == r.
double shadow_value(const GradingSignature& sig, const ShadowPair& pair, double x, double y);

/// Checks that the k = 0 and k = 2r right-hand terms are exactly the pure
/// left-hand terms sum_i a_i^{e_i} and sum_i b_i^{e_i}: symbolically (unit
/// coefficients, matching exponent ladders) and numerically on `samples`
/// seeded random profiles to 1e-12 relative.
bool pure_terms_cancel(const GradingSignature& sig, int samples = 1000, std::uint64_t seed = 7);

/// sum_i a_i^{alpha(k,i)} b_i^{beta(k,i)} - A^{2r-k} B^k. Hoelder's inequality
/// says this is <= 0. Throws std::domain_error for k outside [1, r] or
/// mismatched profiles.
double holder_shadow_bound_check(const GradingSignature& sig, int k, const ScalarProfile& a,
                                 const ScalarProfile& b);

}  // namespace gradenorm
