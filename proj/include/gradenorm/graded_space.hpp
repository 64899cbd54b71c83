#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace gradenorm {

/// Length r of a grading and its exponent ladder e_i = 2(r - i + 1), i = 1..r.
class GradingSignature {
 public:
  /// Throws std::domain_error unless r >= 1.
  explicit GradingSignature(int r);

  int r() const { return r_; }
  /// Total degree 2r of the expansion.
  int degree() const { return 2 * r_; }
  /// e_i for a 1-based level. Throws std::out_of_range outside [1, r].
  int exponent(int level) const;
  const std::vector<int>& exponents() const { return exponents_; }

  friend bool operator==(const GradingSignature&, const GradingSignature&) = default;

 private:
  int r_;
  std::vector<int> exponents_;
};

/// Nonnegative per-level magnitudes a_1..a_r.
class ScalarProfile {
 public:
  /// Throws std::domain_error on size mismatch or a negative (or NaN) entry.
  ScalarProfile(GradingSignature signature, std::vector<double> magnitudes);

  const GradingSignature& signature() const { return signature_; }
  std::span<const double> magnitudes() const { return magnitudes_; }
  /// 1-based level access.
  double operator[](int level) const { return magnitudes_.at(static_cast<std::size_t>(level - 1)); }

  friend bool operator==(const ScalarProfile&, const ScalarProfile&) = default;

 private:
  GradingSignature signature_;
  std::vector<double> magnitudes_;
};

/// Componentwise sum. Throws std::domain_error on signature mismatch.
ScalarProfile operator+(const ScalarProfile& a, const ScalarProfile& b);

/// X = (v_1, ..., v_r), level i living in R^{dim_i}.
class GradedVector {
 public:
  /// Throws std::domain_error when the component count differs from r or a
  /// level is empty.
  GradedVector(GradingSignature signature, std::vector<std::vector<double>> components);

  /// Zero vector with the given per-level dimensions.
  static GradedVector zero(GradingSignature signature, std::span<const std::size_t> dims);

  const GradingSignature& signature() const { return signature_; }
  const std::vector<std::vector<double>>& components() const { return components_; }
  std::span<const double> level(int i) const { return components_.at(static_cast<std::size_t>(i - 1)); }
  std::vector<std::size_t> dims() const;

  GradedVector operator-() const;

  friend bool operator==(const GradedVector&, const GradedVector&) = default;

 private:
  GradingSignature signature_;
  std::vector<std::vector<double>> components_;
};

/// Throws std::domain_error unless both vectors share signature and dimensions.
GradedVector operator+(const GradedVector& x, const GradedVector& y);

/// Euclidean norms of the components.
ScalarProfile scalar_profile(const GradedVector& x);

/// (sum_i a_i^{e_i})^{1/2r}. Throws std::domain_error on a negative magnitude.
double scalar_norm(const ScalarProfile& a);
/// Same on raw magnitudes; `a` must hold r nonnegative entries (unchecked).
double scalar_norm(const GradingSignature& sig, std::span<const double> a);

/// Candidate homogeneous norm (sum_i |v_i|^{e_i})^{1/2r}.
double hnorm(const GradedVector& x);

/// alpha_t: level i scaled by t^i. Throws std::domain_error for t == 0.
GradedVector dilate(double t, const GradedVector& x);

/// hnorm(dilate(t, X)) - |t| hnorm(X). Throws std::domain_error for t == 0.
double homogeneity_defect(const GradedVector& x, double t);

/// hnorm(X + Y) - hnorm(X) - hnorm(Y).
double triangle_defect(const GradedVector& x, const GradedVector& y);

}  // namespace gradenorm
