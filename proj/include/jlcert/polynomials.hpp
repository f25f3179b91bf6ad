#pragma once

// Rational-coefficient polynomials in one and two variables, Sturm-based
// real root counting and isolation, and two sound positivity certificates.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jlcert/exactnum.hpp"

namespace jlcert {

class UniPoly {
 public:
  UniPoly() = default;
  /// Coefficients in ascending degree order.
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<long> coeffs);

  static UniPoly x();
  static UniPoly constant(const Rational& c);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;
  RatInterval operator()(const RatInterval& x) const;
  UniPoly derivative() const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& c, const UniPoly& a);
  UniPoly operator-() const;
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division; throws DomainError on zero divisor.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& num, const UniPoly& den);
  static UniPoly gcd(const UniPoly& a, const UniPoly& b);
  UniPoly monic() const;

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Polynomial in two variables with sparse exponent-pair keys. The variable
/// names are carried for printing only; (n, k) is the default reading.
class BiPoly {
 public:
  using Exponents = std::pair<int, int>;

  BiPoly() = default;
  BiPoly(long c);  // NOLINT(google-explicit-constructor): polynomial literals
  BiPoly(const Rational& c);  // NOLINT

  /// The first (index 0) or second (index 1) variable.
  static BiPoly var(int index);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  Rational coeff(int i, int j) const;
  int total_degree() const;

  Rational operator()(const Rational& first, const Rational& second) const;
  RatInterval operator()(const RatInterval& first, const RatInterval& second) const;

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly operator-() const;
  BiPoly pow(int e) const;
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  /// Replaces the first variable by alpha*second + beta + t; the result is a
  /// polynomial in (second, t).
  BiPoly substitute_first_affine(const Rational& alpha, const Rational& beta) const;
  /// p(first + a, second + b).
  BiPoly shift(const Rational& a, const Rational& b) const;
  /// Univariate polynomial in the second variable with the first fixed.
  UniPoly restrict_first(const Rational& first) const;
  /// Univariate polynomial in the first variable with the second fixed.
  UniPoly restrict_second(const Rational& second) const;
  /// p(first, second) with second := q(first) for a univariate q.
  UniPoly compose_second(const UniPoly& q) const;

  std::string str(const std::string& v0 = "n", const std::string& v1 = "k") const;

 private:
  void add_term(Exponents e, const Rational& c);
  std::map<Exponents, Rational> terms_;
};

/// Quotient of two BiPolys; no cancellation is attempted. Equality is
/// decided by cross multiplication.
class RatFunc {
 public:
  RatFunc() : num_(0), den_(1) {}
  RatFunc(BiPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(BiPoly num, BiPoly den);

  const BiPoly& num() const { return num_; }
  const BiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Throws DomainError when the denominator vanishes at the point.
  Rational operator()(const Rational& n, const Rational& k) const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc operator-() const { return {-num_, den_}; }
  RatFunc shift(const Rational& a, const Rational& b) const {
    return {num_.shift(a, b), den_.shift(a, b)};
  }

  bool equals(const RatFunc& other) const;

  std::string str() const;

 private:
  BiPoly num_;
  BiPoly den_;
};

// ---------------------------------------------------------------------------

enum class CertStatus { Certified, Inconclusive };

struct CertResult {
  CertStatus status = CertStatus::Inconclusive;
  std::string witness;

  bool certified() const { return status == CertStatus::Certified; }
};

/// 1 + max |c_i / c_lead|: every real root lies strictly inside (-B, B).
Rational cauchy_bound(const UniPoly& p);

/// p / gcd(p, p').
UniPoly squarefree_part(const UniPoly& p);

std::vector<UniPoly> sturm_chain(const UniPoly& p);

/// Distinct real roots of p in (lo, hi]. Throws DomainError for p == 0.
long sturm_count(const UniPoly& p, const Rational& lo, const Rational& hi);

/// Interval of width <= 2^-width_exponent holding exactly the smallest real
/// root; exact rational roots come back as point intervals.
RatInterval isolate_smallest_root(const UniPoly& p, long width_exponent);

enum class Positivity { NonNegative, Positive };

/// Substitutes first = alpha*second + beta + t and checks coefficient signs
/// over second >= 0, t >= 0. Sound but incomplete.
CertResult shift_expand_nonneg(const BiPoly& p, const Rational& alpha, const Rational& beta,
                               Positivity claim);

enum class RaySign { Positive, Negative };

/// Decides whether p has the claimed strict sign on all of [from, inf).
CertResult univariate_positive_on_ray(const UniPoly& p, const Rational& from, RaySign claim);

}  // namespace jlcert
