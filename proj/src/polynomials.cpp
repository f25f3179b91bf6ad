#include "jlcert/polynomials.hpp"

#include <algorithm>
#include <sstream>

namespace jlcert {

namespace {

std::string monomial(const Rational& c, const std::vector<std::pair<std::string, int>>& vars, bool first) {
  std::ostringstream os;
  bool is_const = std::all_of(vars.begin(), vars.end(), [](const auto& v) { return v.second == 0; });
  Rational mag = abs(c);
  if (!first) os << (sign(c) < 0 ? " - " : " + ");
  else if (sign(c) < 0) os << "-";
  if (is_const || mag != 1) os << mag.get_str();
  bool need_star = is_const || mag != 1;
  for (const auto& [name, e] : vars) {
    if (e == 0) continue;
    if (need_star) os << "*";
    os << name;
    if (e > 1) os << "^" << e;
    need_star = true;
  }
  return os.str();
}

std::vector<Rational> powers(const Rational& x, int max_exp) {
  std::vector<Rational> p(static_cast<size_t>(max_exp) + 1);
  p[0] = 1;
  for (int i = 1; i <= max_exp; ++i) p[i] = p[i - 1] * x;
  return p;
}

}  // namespace

// ---------------------------------------------------------------------------
// UniPoly

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

UniPoly UniPoly::x() { return UniPoly({0, 1}); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

void UniPoly::trim() {
  while (!coeffs_.empty() && sign(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<size_t>(i)];
}

const Rational& UniPoly::leading() const {
  if (is_zero()) throw DomainError("polynomial", "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatInterval UniPoly::operator()(const RatInterval& x) const {
  RatInterval acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + RatInterval(*it);
  return acc;
}

UniPoly UniPoly::derivative() const {
  std::vector<Rational> d;
  for (size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<long>(i));
  return UniPoly(std::move(d));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < a.coeffs_.size()) c[i] += a.coeffs_[i];
    if (i < b.coeffs_.size()) c[i] += b.coeffs_[i];
  }
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(c));
}

UniPoly operator*(const Rational& c, const UniPoly& a) { return UniPoly::constant(c) * a; }

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& num, const UniPoly& den) {
  if (den.is_zero()) throw DomainError("divisor", "polynomial division by zero");
  std::vector<Rational> rem = num.coeffs_;
  int dd = den.degree();
  int nd = num.degree();
  if (nd < dd) return {UniPoly(), num};
  std::vector<Rational> quot(static_cast<size_t>(nd - dd + 1));
  const Rational& lead = den.leading();
  for (int i = nd; i >= dd; --i) {
    Rational f = rem[static_cast<size_t>(i)] / lead;
    quot[static_cast<size_t>(i - dd)] = f;
    if (sign(f) == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<size_t>(i - dd + j)] -= f * den.coeffs_[static_cast<size_t>(j)];
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return (1 / leading()) * *this;
}

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<size_t>(i)];
    if (sign(c) == 0) continue;
    out += monomial(c, {{var, i}}, first);
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// BiPoly

BiPoly::BiPoly(long c) { add_term({0, 0}, Rational(c)); }

BiPoly::BiPoly(const Rational& c) { add_term({0, 0}, c); }

BiPoly BiPoly::var(int index) {
  BiPoly p;
  p.add_term(index == 0 ? Exponents{1, 0} : Exponents{0, 1}, Rational(1));
  return p;
}

void BiPoly::add_term(Exponents e, const Rational& c) {
  if (sign(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sign(it->second) == 0) terms_.erase(it);
  }
}

Rational BiPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

Rational BiPoly::operator()(const Rational& first, const Rational& second) const {
  int m0 = 0, m1 = 0;
  for (const auto& [e, c] : terms_) {
    m0 = std::max(m0, e.first);
    m1 = std::max(m1, e.second);
  }
  auto p0 = powers(first, m0);
  auto p1 = powers(second, m1);
  Rational acc = 0;
  for (const auto& [e, c] : terms_) acc += c * p0[static_cast<size_t>(e.first)] * p1[static_cast<size_t>(e.second)];
  return acc;
}

RatInterval BiPoly::operator()(const RatInterval& first, const RatInterval& second) const {
  RatInterval acc(0);
  for (const auto& [e, c] : terms_) {
    RatInterval term(c);
    for (int i = 0; i < e.first; ++i) term = term * first;
    for (int j = 0; j < e.second; ++j) term = term * second;
    acc = acc + term;
  }
  return acc;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  return r;
}

BiPoly BiPoly::pow(int e) const {
  if (e < 0) throw DomainError("exponent", "negative polynomial power");
  BiPoly result(1L);
  BiPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

BiPoly BiPoly::substitute_first_affine(const Rational& alpha, const Rational& beta) const {
  // result variables: index 0 = old second variable, index 1 = t
  BiPoly lin = BiPoly(alpha) * var(0) + BiPoly(beta) + var(1);
  std::vector<BiPoly> lin_pow{BiPoly(1L)};
  BiPoly r;
  for (const auto& [e, c] : terms_) {
    while (static_cast<int>(lin_pow.size()) <= e.first) lin_pow.push_back(lin_pow.back() * lin);
    BiPoly mono;
    mono.add_term({e.second, 0}, c);
    r = r + mono * lin_pow[static_cast<size_t>(e.first)];
  }
  return r;
}

BiPoly BiPoly::shift(const Rational& a, const Rational& b) const {
  BiPoly x = var(0) + BiPoly(a);
  BiPoly y = var(1) + BiPoly(b);
  BiPoly r;
  for (const auto& [e, c] : terms_) r = r + BiPoly(c) * x.pow(e.first) * y.pow(e.second);
  return r;
}

UniPoly BiPoly::restrict_first(const Rational& first) const {
  std::vector<Rational> coeffs;
  for (const auto& [e, c] : terms_) {
    if (static_cast<int>(coeffs.size()) <= e.second) coeffs.resize(static_cast<size_t>(e.second) + 1);
    Rational v = c;
    for (int i = 0; i < e.first; ++i) v *= first;
    coeffs[static_cast<size_t>(e.second)] += v;
  }
  return UniPoly(std::move(coeffs));
}

UniPoly BiPoly::restrict_second(const Rational& second) const {
  std::vector<Rational> coeffs;
  for (const auto& [e, c] : terms_) {
    if (static_cast<int>(coeffs.size()) <= e.first) coeffs.resize(static_cast<size_t>(e.first) + 1);
    Rational v = c;
    for (int j = 0; j < e.second; ++j) v *= second;
    coeffs[static_cast<size_t>(e.first)] += v;
  }
  return UniPoly(std::move(coeffs));
}

UniPoly BiPoly::compose_second(const UniPoly& q) const {
  UniPoly r;
  for (const auto& [e, c] : terms_) {
    UniPoly term = UniPoly::constant(c);
    for (int i = 0; i < e.first; ++i) term = term * UniPoly::x();
    for (int j = 0; j < e.second; ++j) term = term * q;
    r = r + term;
  }
  return r;
}

std::string BiPoly::str(const std::string& v0, const std::string& v1) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    out += monomial(it->second, {{v0, it->first.first}, {v1, it->first.second}}, first);
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("denominator", "rational function with zero denominator");
}

Rational RatFunc::operator()(const Rational& n, const Rational& k) const {
  Rational d = den_(n, k);
  if (sign(d) == 0) {
    throw DomainError(den_.str(), "denominator " + den_.str() + " vanishes at (n,k) = (" + n.get_str() +
                                      "," + k.get_str() + ")");
  }
  return num_(n, k) / d;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) { return {a.num_ * b.num_, a.den_ * b.den_}; }

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw DomainError("divisor", "division by the zero rational function");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

bool RatFunc::equals(const RatFunc& other) const { return num_ * other.den_ == other.num_ * den_; }

std::string RatFunc::str() const { return "(" + num_.str() + ")/(" + den_.str() + ")"; }

// ---------------------------------------------------------------------------
// Root counting and certificates

Rational cauchy_bound(const UniPoly& p) {
  if (p.is_zero()) throw DomainError("polynomial", "Cauchy bound of the zero polynomial");
  Rational m = 0;
  const Rational& lead = p.leading();
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeff(i) / lead)));
  return 1 + m;
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() < 1) return p;
  UniPoly g = UniPoly::gcd(p, p.derivative());
  return UniPoly::divmod(p, g).first;
}

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
  std::vector<UniPoly> chain{p};
  if (p.degree() < 1) return chain;
  chain.push_back(p.derivative());
  while (true) {
    UniPoly r = -UniPoly::divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  return chain;
}

namespace {

long sign_variations(const std::vector<UniPoly>& chain, const Rational& x) {
  long v = 0;
  int prev = 0;
  for (const auto& q : chain) {
    int s = sign(q(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

long count_with_chain(const std::vector<UniPoly>& chain, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) return 0;
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

}  // namespace

long sturm_count(const UniPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw DomainError("polynomial", "Sturm count of the zero polynomial");
  return count_with_chain(sturm_chain(squarefree_part(p)), lo, hi);
}

RatInterval isolate_smallest_root(const UniPoly& p, long width_exponent) {
  if (p.is_zero()) throw DomainError("polynomial", "root isolation of the zero polynomial");
  UniPoly q = squarefree_part(p);
  if (q.degree() < 1) throw DomainError(p.str(), "polynomial " + p.str() + " has no real root");
  auto chain = sturm_chain(q);
  Rational bound = cauchy_bound(q);
  Rational lo = -bound, hi = bound;
  if (count_with_chain(chain, lo, hi) == 0) {
    throw DomainError(p.str(), "polynomial " + p.str() + " has no real root");
  }
  Rational target = pow2(-width_exponent);
  // invariant: exactly the smallest root lies in (lo, hi], none in (-bound, lo]
  while (hi - lo > target) {
    Rational mid = (lo + hi) / 2;
    long left = count_with_chain(chain, lo, mid);
    if (left >= 1) {
      if (sign(q(mid)) == 0 && left == 1) return RatInterval(mid);
      hi = mid;
    } else {
      lo = mid;
    }
  }
  if (sign(q(hi)) == 0) return RatInterval(hi);
  return {lo, hi};
}

CertResult shift_expand_nonneg(const BiPoly& p, const Rational& alpha, const Rational& beta, Positivity claim) {
  BiPoly expanded = p.substitute_first_affine(alpha, beta);
  for (const auto& [e, c] : expanded.terms()) {
    if (sign(c) < 0) {
      return {CertStatus::Inconclusive,
              "negative coefficient " + c.get_str() + " on k^" + std::to_string(e.first) + "*t^" +
                  std::to_string(e.second) + " of " + expanded.str("k", "t")};
    }
  }
  if (expanded.is_zero()) {
    if (claim == Positivity::NonNegative) return {CertStatus::Certified, "expansion is identically 0"};
    return {CertStatus::Inconclusive, "expansion is identically 0"};
  }
  Rational constant = expanded.coeff(0, 0);
  if (claim == Positivity::Positive && sign(constant) <= 0) {
    return {CertStatus::Inconclusive, "constant term " + constant.get_str() + " is not positive"};
  }
  return {CertStatus::Certified, "expansion " + expanded.str("k", "t") + " has nonnegative coefficients"};
}

CertResult univariate_positive_on_ray(const UniPoly& p, const Rational& from, RaySign claim) {
  if (p.is_zero()) throw DomainError("polynomial", "sign certificate for the zero polynomial");
  Rational at_from = p(from);
  int want = claim == RaySign::Positive ? 1 : -1;
  if (sign(at_from) != want) {
    return {CertStatus::Inconclusive, "p(" + from.get_str() + ") = " + at_from.get_str()};
  }
  Rational bound = cauchy_bound(p);
  if (from >= bound) return {CertStatus::Certified, "start lies beyond the Cauchy bound"};
  long roots = sturm_count(p, from, bound);
  if (roots != 0) {
    return {CertStatus::Inconclusive,
            std::to_string(roots) + " real root(s) in (" + from.get_str() + ", " + bound.get_str() + "]"};
  }
  return {CertStatus::Certified, "p(" + from.get_str() + ") = " + at_from.get_str() + ", no roots in (" +
                                     from.get_str() + ", " + bound.get_str() + "]"};
}

}  // namespace jlcert
