#include "jlcert/exactnum.hpp"

#include <algorithm>
#include <sstream>

namespace jlcert {

const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::LT: return "LT";
    case Ordering::EQ: return "EQ";
    case Ordering::GT: return "GT";
  }
  return "?";
}

int sign(const BigInt& x) { return sgn(x); }
int sign(const Rational& x) { return sgn(x); }

Rational make_rational(long num, long den) {
  if (den == 0) throw DomainError("denominator", "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw DomainError("denominator", "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

BigInt exact_div(const BigInt& a, const BigInt& b, const char* context) {
  if (sgn(b) == 0) throw InternalError(std::string(context) + ": division by zero");
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
    throw InternalError(std::string(context) + ": non-integral quotient " +
                        a.get_str() + "/" + b.get_str());
  }
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

std::string to_string(const BigInt& x) { return x.get_str(); }
std::string to_string(const Rational& x) { return x.get_str(); }

BigInt isqrt_floor(const BigInt& x) {
  if (sgn(x) < 0) throw DomainError("isqrt", "square root of negative integer " + x.get_str());
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

bool is_perfect_square(const BigInt& x) {
  return sgn(x) >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

bool rational_sqrt_exact(const Rational& x, Rational* root) {
  if (sgn(x) < 0) return false;
  const BigInt& num = x.get_num();
  const BigInt& den = x.get_den();
  if (!is_perfect_square(num) || !is_perfect_square(den)) return false;
  if (root != nullptr) *root = make_rational(isqrt_floor(num), isqrt_floor(den));
  return true;
}

Rational pow2(long e) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e >= 0 ? Rational(p) : make_rational(BigInt(1), p);
}

// ---------------------------------------------------------------------------

RatInterval::RatInterval(const Rational& lo, const Rational& hi) : lo_(lo), hi_(hi) {
  if (lo_ > hi_) throw DomainError("interval", "lo > hi in interval [" + lo.get_str() + ", " + hi.get_str() + "]");
}

int RatInterval::certain_sign() const {
  if (sign(lo_) > 0) return 1;
  if (sign(hi_) < 0) return -1;
  return 0;
}

RatInterval operator+(const RatInterval& a, const RatInterval& b) {
  return {a.lo_ + b.lo_, a.hi_ + b.hi_};
}

RatInterval operator-(const RatInterval& a, const RatInterval& b) {
  return {a.lo_ - b.hi_, a.hi_ - b.lo_};
}

RatInterval operator*(const RatInterval& a, const RatInterval& b) {
  Rational p[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
  auto [mn, mx] = std::minmax_element(std::begin(p), std::end(p));
  return {*mn, *mx};
}

RatInterval operator/(const RatInterval& a, const RatInterval& b) {
  if (b.contains_zero()) {
    throw DomainError("divisor", "interval division by " + b.str() + " which contains 0");
  }
  RatInterval inv{1 / b.hi_, 1 / b.lo_};
  return a * inv;
}

std::string RatInterval::str() const {
  return "[" + lo_.get_str() + ", " + hi_.get_str() + "]";
}

RatInterval interval_arith(IntervalOp op, const RatInterval& a, const RatInterval& b) {
  switch (op) {
    case IntervalOp::Add: return a + b;
    case IntervalOp::Sub: return a - b;
    case IntervalOp::Mul: return a * b;
    case IntervalOp::Div: return a / b;
  }
  throw DomainError("op", "unknown interval operation");
}

RatInterval sqrt_enclosure(const Rational& x, long width_exponent, const std::string& expression) {
  if (sign(x) < 0) {
    throw DomainError(expression, "negative radicand " + x.get_str() + " in " + expression);
  }
  if (width_exponent < 0) throw DomainError("width_exponent", "negative width exponent");
  Rational root;
  if (rational_sqrt_exact(x, &root)) return RatInterval(root);
  // floor(x * 4^w) = floor(num * 4^w / den)
  BigInt scaled = x.get_num();
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(2 * width_exponent));
  mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), x.get_den().get_mpz_t());
  BigInt r = isqrt_floor(scaled);
  Rational step = pow2(-width_exponent);
  Rational lo = Rational(r) * step;
  return {lo, lo + step};
}

RatInterval sqrt_enclosure(const RatInterval& x, long width_exponent, const std::string& expression) {
  if (x.is_point()) return sqrt_enclosure(x.lo(), width_exponent, expression);
  if (sign(x.lo()) < 0) {
    throw DomainError(expression, "radicand enclosure " + x.str() + " reaches below 0 in " + expression);
  }
  return {sqrt_enclosure(x.lo(), width_exponent, expression).lo(),
          sqrt_enclosure(x.hi(), width_exponent, expression).hi()};
}

// ---------------------------------------------------------------------------

QuadSurd::QuadSurd(const Rational& a, const Rational& b, const Rational& d,
                   const std::string& expression)
    : a_(a), b_(b), d_(d) {
  if (jlcert::sign(d_) < 0) {
    throw DomainError(expression, "negative radicand " + d.get_str() + " in " + expression);
  }
  Rational root;
  if (jlcert::sign(b_) == 0 || jlcert::sign(d_) == 0) {
    b_ = 0;
    d_ = 0;
  } else if (rational_sqrt_exact(d_, &root)) {
    a_ += b_ * root;
    b_ = 0;
    d_ = 0;
  }
}

int QuadSurd::sign() const {
  int sa = jlcert::sign(a_);
  int sb = jlcert::sign(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare a^2 with b^2 d
  int c = cmp(a_ * a_, b_ * b_ * d_);
  if (c > 0) return sa;
  if (c < 0) return sb;
  return 0;
}

const Rational& QuadSurd::common_radicand(const QuadSurd& x, const QuadSurd& y) {
  if (x.is_rational()) return y.d_;
  if (y.is_rational() || x.d_ == y.d_) return x.d_;
  throw DomainError("radicand", "surd arithmetic with distinct radicands " + x.d_.get_str() +
                                    " and " + y.d_.get_str());
}

QuadSurd operator+(const QuadSurd& x, const QuadSurd& y) {
  const Rational& d = QuadSurd::common_radicand(x, y);
  return {x.a_ + y.a_, x.b_ + y.b_, d};
}

QuadSurd operator-(const QuadSurd& x, const QuadSurd& y) { return x + (-y); }

QuadSurd operator*(const QuadSurd& x, const QuadSurd& y) {
  const Rational& d = QuadSurd::common_radicand(x, y);
  return {x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d};
}

QuadSurd QuadSurd::operator-() const {
  QuadSurd r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

QuadSurd operator*(const Rational& c, const QuadSurd& x) { return {c * x.a_, c * x.b_, x.d_}; }

RatInterval QuadSurd::enclose(long width_exponent) const {
  if (is_rational()) return RatInterval(a_);
  Rational mag = abs(b_);
  BigInt ceil_mag;
  mpz_cdiv_q(ceil_mag.get_mpz_t(), mag.get_num_mpz_t(), mag.get_den_mpz_t());
  long extra = static_cast<long>(mpz_sizeinbase(ceil_mag.get_mpz_t(), 2));
  RatInterval root = sqrt_enclosure(d_, width_exponent + extra);
  return RatInterval(a_) + RatInterval(b_) * root;
}

std::string QuadSurd::str() const {
  if (is_rational()) return a_.get_str();
  std::ostringstream os;
  os << a_.get_str() << (jlcert::sign(b_) < 0 ? " - " : " + ") << Rational(abs(b_)).get_str() << "*sqrt("
     << d_.get_str() << ")";
  return os.str();
}

Ordering surd_compare(const QuadSurd& s, const Rational& t) {
  int sg = (s - QuadSurd(t)).sign();
  return sg < 0 ? Ordering::LT : (sg > 0 ? Ordering::GT : Ordering::EQ);
}

Ordering surd_compare(const Rational& t, const QuadSurd& s) {
  switch (surd_compare(s, t)) {
    case Ordering::LT: return Ordering::GT;
    case Ordering::GT: return Ordering::LT;
    default: return Ordering::EQ;
  }
}

}  // namespace jlcert
