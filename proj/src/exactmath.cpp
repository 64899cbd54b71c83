#include "gradenorm/exactmath.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace gradenorm {

Rational::Rational(std::int64_t value) : value_(BigInt(static_cast<long>(value))) {}

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) {
    throw std::domain_error("Rational: zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto is_integer_text = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("Rational: malformed literal '" + std::string(text) + "'");
  }
  const auto strip_plus = [](std::string_view s) {
    return std::string(s.front() == '+' ? s.substr(1) : s);
  };
  const BigInt d(strip_plus(den));
  if (d == 0) {
    throw std::invalid_argument("Rational: zero denominator in '" + std::string(text) + "'");
  }
  return Rational(BigInt(strip_plus(num)), d);
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  value_.canonicalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  value_.canonicalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  value_.canonicalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.value_ == 0) {
    throw std::domain_error("Rational: division by zero");
  }
  value_ /= other.value_;
  value_.canonicalize();
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

ExponentPair::ExponentPair(Rational first, Rational second) {
  if (first < 0 || second < 0) {
    throw std::domain_error("ExponentPair: negative exponent");
  }
  if (first < second) std::swap(first, second);
  hi_ = std::move(first);
  lo_ = std::move(second);
}

std::ostream& operator<<(std::ostream& os, const ExponentPair& pair) {
  return os << '(' << pair.hi() << ", " << pair.lo() << ')';
}

BigInt binom(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) {
    throw std::domain_error("binom: requires 0 <= k <= n");
  }
  k = std::min(k, n - k);
  BigInt result = 1;
  // After step j the value is C(n - k + j, j), so each division is exact.
  for (std::int64_t j = 1; j <= k; ++j) {
    result *= static_cast<unsigned long>(n - k + j);
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), static_cast<unsigned long>(j));
  }
  return result;
}

bool majorizes(const ExponentPair& p, const ExponentPair& q) {
  return p.degree() == q.degree() && p.hi() >= q.hi();
}

double symmetric_sum(const ExponentPair& pair, double x, double y) {
  const double hi = pair.hi().to_double();
  const double lo = pair.lo().to_double();
  return std::pow(x, hi) * std::pow(y, lo) + std::pow(x, lo) * std::pow(y, hi);
}

bool muirhead_pair_holds(const ExponentPair& dominant, const ExponentPair& dominated, double x,
                         double y) {
  if (!majorizes(dominant, dominated)) {
    throw std::domain_error("muirhead_pair_holds: dominant pair does not majorize");
  }
  if (!(x >= 0.0) || !(y >= 0.0)) {
    throw std::domain_error("muirhead_pair_holds: variables must be nonnegative");
  }
  const double lhs = symmetric_sum(dominant, x, y);
  const double rhs = symmetric_sum(dominated, x, y);
  return lhs - rhs >= -1e-12 * std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

}  // namespace gradenorm
