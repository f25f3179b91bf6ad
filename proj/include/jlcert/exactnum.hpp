#pragma once

// Exact numeric substrate on top of GMP. Surds a + b*sqrt(d) carry a single
// radical; rational intervals round outward.

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>

namespace jlcert {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Raised when an operation leaves its mathematical domain, e.g. a negative
/// radicand. `expression` names the offending quantity for reports.
class DomainError : public std::domain_error {
 public:
  DomainError(std::string expression, const std::string& what)
      : std::domain_error(what), expression_(std::move(expression)) {}

  const std::string& expression() const noexcept { return expression_; }

 private:
  std::string expression_;
};

/// Raised when a computation that must be integral is not; always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Ordering { LT, EQ, GT };

const char* to_string(Ordering o);

int sign(const BigInt& x);
int sign(const Rational& x);

Rational make_rational(long num, long den = 1);
Rational make_rational(const BigInt& num, const BigInt& den);

/// Exact quotient a / b, throwing InternalError when b does not divide a.
BigInt exact_div(const BigInt& a, const BigInt& b, const char* context);

std::string to_string(const BigInt& x);
std::string to_string(const Rational& x);

/// r with r^2 <= x < (r+1)^2.
BigInt isqrt_floor(const BigInt& x);

bool is_perfect_square(const BigInt& x);

/// If x is the square of a rational, stores the root in *root.
bool rational_sqrt_exact(const Rational& x, Rational* root);

Rational pow2(long e);

// ---------------------------------------------------------------------------

class RatInterval {
 public:
  RatInterval() = default;
  explicit RatInterval(const Rational& point) : lo_(point), hi_(point) {}
  RatInterval(const Rational& lo, const Rational& hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  bool is_point() const { return lo_ == hi_; }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains_zero() const { return sign(lo_) <= 0 && sign(hi_) >= 0; }
  bool subset_of(const RatInterval& other) const {
    return other.lo_ <= lo_ && hi_ <= other.hi_;
  }

  /// -1, +1 when every point has that sign; 0 when the interval touches 0.
  int certain_sign() const;

  RatInterval operator-() const { return {-hi_, -lo_}; }
  friend RatInterval operator+(const RatInterval& a, const RatInterval& b);
  friend RatInterval operator-(const RatInterval& a, const RatInterval& b);
  friend RatInterval operator*(const RatInterval& a, const RatInterval& b);
  /// Throws DomainError if b contains zero.
  friend RatInterval operator/(const RatInterval& a, const RatInterval& b);

  friend bool operator==(const RatInterval& a, const RatInterval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

  std::string str() const;

 private:
  Rational lo_{0};
  Rational hi_{0};
};

enum class IntervalOp { Add, Sub, Mul, Div };

RatInterval interval_arith(IntervalOp op, const RatInterval& a,
                           const RatInterval& b);

/// Maximum precision used by adaptive refinement loops (bits).
inline constexpr long kMaxWidthExponent = 256;

/// [lo, hi] with lo^2 <= x <= hi^2, lo >= 0 and width <= 2^-width_exponent.
/// Exact squares give a point interval.
RatInterval sqrt_enclosure(const Rational& x, long width_exponent,
                           const std::string& expression = "radicand");

/// sqrt of every point of a nonnegative interval, outward.
RatInterval sqrt_enclosure(const RatInterval& x, long width_exponent,
                           const std::string& expression = "radicand");

// ---------------------------------------------------------------------------

/// a + b*sqrt(d), d >= 0. Canonical: b == 0 iff d == 0, and d is never a
/// rational square (such radicals are folded into a).
class QuadSurd {
 public:
  QuadSurd() = default;
  explicit QuadSurd(const Rational& a) : a_(a) {}
  /// Throws DomainError if d < 0.
  QuadSurd(const Rational& a, const Rational& b, const Rational& d,
           const std::string& expression = "radicand");

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& d() const { return d_; }
  bool is_rational() const { return ::jlcert::sign(b_) == 0; }

  int sign() const;

  /// Arithmetic within Q(sqrt d). Operands must share the radicand (or be
  /// rational); mixing radicands throws DomainError.
  friend QuadSurd operator+(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator-(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator*(const QuadSurd& x, const QuadSurd& y);
  QuadSurd operator-() const;
  friend QuadSurd operator*(const Rational& c, const QuadSurd& x);

  RatInterval enclose(long width_exponent) const;

  std::string str() const;

 private:
  static const Rational& common_radicand(const QuadSurd& x, const QuadSurd& y);

  Rational a_{0};
  Rational b_{0};
  Rational d_{0};
};

/// Exact comparison of s against t; never approximates.
Ordering surd_compare(const QuadSurd& s, const Rational& t);
Ordering surd_compare(const Rational& t, const QuadSurd& s);

}  // namespace jlcert
