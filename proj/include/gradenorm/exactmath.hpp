#pragma once

// Exact arithmetic used by the certificate kernel: big integers, reduced
// rationals, binomial coefficients and two-element majorization.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace gradenorm {

using BigInt = mpz_class;

/// Exact rational number, always stored reduced with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& numerator, const BigInt& denominator = 1);

  /// Parses "p/q" or "p". Throws std::invalid_argument on malformed text or a
  /// zero denominator.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_integer() const { return value_.get_den() == 1; }
  double to_double() const { return value_.get_d(); }

  /// "p/q", or "p" when q == 1.
  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit Rational(mpq_class value);

  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// Exponent pair of a two-variable monomial orbit x^hi y^lo + x^lo y^hi.
/// Components are kept sorted so that hi >= lo >= 0.
class ExponentPair {
 public:
  /// Accepts the components in either order. Throws std::domain_error if
  /// either is negative.
  ExponentPair(Rational first, Rational second);

  const Rational& hi() const { return hi_; }
  const Rational& lo() const { return lo_; }
  Rational degree() const { return hi_ + lo_; }

  friend bool operator==(const ExponentPair&, const ExponentPair&) = default;

 private:
  Rational hi_;
  Rational lo_;
};

std::ostream& operator<<(std::ostream& os, const ExponentPair& pair);

/// C(n, k). Throws std::domain_error when k > n or either is negative.
BigInt binom(std::int64_t n, std::int64_t k);

/// Two-element majorization: equal degree and p.hi >= q.hi, decided exactly.
bool majorizes(const ExponentPair& p, const ExponentPair& q);

/// Numerically evaluates the two-variable Muirhead inequality
/// x^a' y^b' + x^b' y^a' >= x^a y^b + x^b y^a for a dominating pair (a', b')
/// at the point (x, y), with relative tolerance 1e-12. Test oracle only.
/// Throws std::domain_error when `dominant` does not majorize `dominated` or
/// when x or y is negative.
bool muirhead_pair_holds(const ExponentPair& dominant, const ExponentPair& dominated, double x,
                         double y);

/// x^hi y^lo + x^lo y^hi (two terms even when hi == lo).
double symmetric_sum(const ExponentPair& pair, double x, double y);

}  // namespace gradenorm
