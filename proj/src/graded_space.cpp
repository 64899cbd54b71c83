#include "gradenorm/graded_space.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace gradenorm {

namespace {

double euclidean_norm(std::span<const double> v) {
  double sum = 0.0;
  for (double c : v) sum += c * c;
  return std::sqrt(sum);
}

}  // namespace

GradingSignature::GradingSignature(int r) : r_(r) {
  if (r < 1) {
    throw std::domain_error("GradingSignature: length must be >= 1, got " + std::to_string(r));
  }
  exponents_.reserve(static_cast<std::size_t>(r));
  for (int i = 1; i <= r; ++i) exponents_.push_back(2 * (r - i + 1));
}

int GradingSignature::exponent(int level) const {
  if (level < 1 || level > r_) {
    throw std::out_of_range("GradingSignature: level " + std::to_string(level) + " outside [1, " +
                            std::to_string(r_) + "]");
  }
  return exponents_[static_cast<std::size_t>(level - 1)];
}

ScalarProfile::ScalarProfile(GradingSignature signature, std::vector<double> magnitudes)
    : signature_(std::move(signature)), magnitudes_(std::move(magnitudes)) {
  if (magnitudes_.size() != static_cast<std::size_t>(signature_.r())) {
    throw std::domain_error("ScalarProfile: expected " + std::to_string(signature_.r()) +
                            " magnitudes, got " + std::to_string(magnitudes_.size()));
  }
  for (double m : magnitudes_) {
    if (!(m >= 0.0)) throw std::domain_error("ScalarProfile: magnitudes must be nonnegative");
  }
}

ScalarProfile operator+(const ScalarProfile& a, const ScalarProfile& b) {
  if (!(a.signature() == b.signature())) {
    throw std::domain_error("ScalarProfile: signature mismatch");
  }
  std::vector<double> sum(a.magnitudes().begin(), a.magnitudes().end());
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += b.magnitudes()[i];
  return ScalarProfile(a.signature(), std::move(sum));
}

GradedVector::GradedVector(GradingSignature signature, std::vector<std::vector<double>> components)
    : signature_(std::move(signature)), components_(std::move(components)) {
  if (components_.size() != static_cast<std::size_t>(signature_.r())) {
    throw std::domain_error("GradedVector: expected " + std::to_string(signature_.r()) +
                            " components, got " + std::to_string(components_.size()));
  }
  for (const auto& level : components_) {
    if (level.empty()) throw std::domain_error("GradedVector: every level needs dimension >= 1");
  }
}

GradedVector GradedVector::zero(GradingSignature signature, std::span<const std::size_t> dims) {
  std::vector<std::vector<double>> components;
  components.reserve(dims.size());
  for (std::size_t d : dims) components.emplace_back(d, 0.0);
  return GradedVector(std::move(signature), std::move(components));
}

std::vector<std::size_t> GradedVector::dims() const {
  std::vector<std::size_t> out;
  out.reserve(components_.size());
  for (const auto& level : components_) out.push_back(level.size());
  return out;
}

GradedVector GradedVector::operator-() const {
  auto components = components_;
  for (auto& level : components) {
    for (double& c : level) c = -c;
  }
  return GradedVector(signature_, std::move(components));
}

GradedVector operator+(const GradedVector& x, const GradedVector& y) {
  if (!(x.signature() == y.signature()) || x.dims() != y.dims()) {
    throw std::domain_error("GradedVector: operands live in different spaces");
  }
  auto components = x.components();
  for (std::size_t i = 0; i < components.size(); ++i) {
    for (std::size_t j = 0; j < components[i].size(); ++j) components[i][j] += y.components()[i][j];
  }
  return GradedVector(x.signature(), std::move(components));
}

ScalarProfile scalar_profile(const GradedVector& x) {
  std::vector<double> magnitudes;
  magnitudes.reserve(x.components().size());
  for (const auto& level : x.components()) magnitudes.push_back(euclidean_norm(level));
  return ScalarProfile(x.signature(), std::move(magnitudes));
}

double scalar_norm(const GradingSignature& sig, std::span<const double> a) {
  // (a^2)^{1/2} == a; skip the round trip through pow.
  if (sig.r() == 1) return a[0];
  double sum = 0.0;
  const auto& exponents = sig.exponents();
  for (std::size_t i = 0; i < exponents.size(); ++i) sum += std::pow(a[i], exponents[i]);
  return std::pow(sum, 1.0 / sig.degree());
}

double scalar_norm(const ScalarProfile& a) { return scalar_norm(a.signature(), a.magnitudes()); }

double hnorm(const GradedVector& x) { return scalar_norm(scalar_profile(x)); }

GradedVector dilate(double t, const GradedVector& x) {
  if (t == 0.0) throw std::domain_error("dilate: t must be nonzero");
  auto components = x.components();
  double scale = 1.0;
  for (auto& level : components) {
    scale *= t;
    for (double& c : level) c *= scale;
  }
  return GradedVector(x.signature(), std::move(components));
}

double homogeneity_defect(const GradedVector& x, double t) {
  if (t == 0.0) throw std::domain_error("homogeneity_defect: t must be nonzero");
  return hnorm(dilate(t, x)) - std::abs(t) * hnorm(x);
}

double triangle_defect(const GradedVector& x, const GradedVector& y) {
  const GradedVector sum = x + y;
  return hnorm(sum) - (hnorm(x) + hnorm(y));
}

}  // namespace gradenorm
