#include "gradenorm/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace gradenorm {

ExponentPair TermOrbit::exponents() const { return ExponentPair(exponent - split, split); }

ExponentPair RhsOrbit::exponents() const { return ExponentPair(degree - k, k); }

TermOrbit lhs_orbit(const GradingSignature& sig, int level, int split) {
  if (level < 1 || level > sig.r()) {
    throw std::domain_error("lhs_orbit: level " + std::to_string(level) + " out of range");
  }
  const int e = sig.exponent(level);
  if (split < 1 || split > e / 2) {
    throw std::domain_error("lhs_orbit: split " + std::to_string(split) + " out of range for level " +
                            std::to_string(level));
  }
  return TermOrbit{level, split, e, binom(e, split), 2 * split == e};
}

RhsOrbit rhs_orbit(const GradingSignature& sig, int k) {
  if (k < 1 || k > sig.r()) {
    throw std::domain_error("rhs_orbit: k " + std::to_string(k) + " out of range");
  }
  return RhsOrbit{k, sig.degree(), binom(sig.degree(), k), k == sig.r()};
}

std::vector<TermOrbit> lhs_orbits(const GradingSignature& sig) {
  std::vector<TermOrbit> out;
  for (int i = 1; i <= sig.r(); ++i) {
    for (int s = 1; s <= sig.exponent(i) / 2; ++s) out.push_back(lhs_orbit(sig, i, s));
  }
  return out;
}

std::vector<RhsOrbit> rhs_orbits(const GradingSignature& sig) {
  std::vector<RhsOrbit> out;
  for (int k = 1; k <= sig.r(); ++k) out.push_back(rhs_orbit(sig, k));
  return out;
}

ShadowPair shadow(const GradingSignature& sig, int k, int level) {
  if (k < 1 || k > sig.r() || level < 1 || level > sig.r()) {
    throw std::domain_error("shadow: (k=" + std::to_string(k) + ", i=" + std::to_string(level) +
                            ") out of range for r=" + std::to_string(sig.r()));
  }
  const Rational e = sig.exponent(level);
  const Rational n = sig.degree();
  return ShadowPair{k, level, ExponentPair(e * (n - k) / n, e * k / n)};
}

double orbit_value(const TermOrbit& orbit, double x, double y) {
  const int s = orbit.split;
  const int t = orbit.exponent - orbit.split;
  if (orbit.is_middle) return std::pow(x, s) * std::pow(y, s);
  return std::pow(x, t) * std::pow(y, s) + std::pow(x, s) * std::pow(y, t);
}

double orbit_value(const RhsOrbit& orbit, double big_a, double big_b) {
  const int k = orbit.k;
  const int t = orbit.degree - orbit.k;
  if (orbit.is_middle) return std::pow(big_a, k) * std::pow(big_b, k);
  return std::pow(big_a, t) * std::pow(big_b, k) + std::pow(big_a, k) * std::pow(big_b, t);
}

double shadow_value(const GradingSignature& sig, const ShadowPair& pair, double x, double y) {
  if (pair.k == sig.r()) {
    const double half = pair.exponents.hi().to_double();
    return std::pow(x, half) * std::pow(y, half);
  }
  return symmetric_sum(pair.exponents, x, y);
}

bool pure_terms_cancel(const GradingSignature& sig, int samples, std::uint64_t seed) {
  // Symbolic part: the s = 0 / s = e_i left terms carry coefficient
  // binom(e_i, 0) = binom(e_i, e_i) = 1 with monomials a_i^{e_i}, b_i^{e_i};
  // the k = 0 / k = 2r right terms carry binom(2r, 0) = binom(2r, 2r) = 1 with
  // A^{2r}, B^{2r}, and A^{2r} = sum_i a_i^{e_i} by definition of A.
  if (binom(sig.degree(), 0) != 1 || binom(sig.degree(), sig.degree()) != 1) return false;
  for (int i = 1; i <= sig.r(); ++i) {
    const int e = sig.exponent(i);
    if (binom(e, 0) != 1 || binom(e, e) != 1) return false;
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> log_mag(-3.0, 3.0);
  for (int n = 0; n < samples; ++n) {
    std::vector<double> mags;
    for (int i = 0; i < sig.r(); ++i) mags.push_back(std::pow(10.0, log_mag(rng)));
    const ScalarProfile a(sig, mags);
    double pure = 0.0;
    for (int i = 1; i <= sig.r(); ++i) pure += std::pow(a[i], sig.exponent(i));
    const double a_pow = std::pow(scalar_norm(a), sig.degree());
    if (std::abs(a_pow - pure) > 1e-12 * std::max({1.0, pure, a_pow})) return false;
  }
  return true;
}

double holder_shadow_bound_check(const GradingSignature& sig, int k, const ScalarProfile& a,
                                 const ScalarProfile& b) {
  if (k < 1 || k > sig.r()) {
    throw std::domain_error("holder_shadow_bound_check: k out of range");
  }
  if (!(a.signature() == sig) || !(b.signature() == sig)) {
    throw std::domain_error("holder_shadow_bound_check: profile signature mismatch");
  }
  // Same exponents as shadow(sig, k, i), rounded once from the exact ratio.
  const double n = sig.degree();
  double lhs = 0.0;
  for (int i = 1; i <= sig.r(); ++i) {
    const double e = sig.exponent(i);
    lhs += std::pow(a[i], e * (n - k) / n) * std::pow(b[i], e * k / n);
  }
  const double rhs = std::pow(scalar_norm(a), sig.degree() - k) * std::pow(scalar_norm(b), k);
  return lhs - rhs;
}

}  // namespace gradenorm
