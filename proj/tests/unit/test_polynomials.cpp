#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jlcert/polynomials.hpp"
#include "jlcert/recurrences.hpp"
#include "support.hpp"

using namespace jlcert;
using testsupport::uniform;

namespace {

const UniPoly p10{-2640, 984, -96, 1};  // X^3 - 96X^2 + 984X - 2640

UniPoly random_poly(int degree) {
  std::vector<Rational> c;
  for (int i = 0; i <= degree; ++i) c.push_back(Rational(uniform(-20, 20)));
  c.back() = Rational(uniform(1, 5));
  return UniPoly(c);
}

}  // namespace

TEST_CASE("UniPoly arithmetic") {
  UniPoly x = UniPoly::x();
  UniPoly p = (x - UniPoly::constant(1)) * (x - UniPoly::constant(2));
  CHECK(p == UniPoly({2, -3, 1}));
  CHECK(p.derivative() == UniPoly({-3, 2}));
  auto [q, r] = UniPoly::divmod(p, x - UniPoly::constant(1));
  CHECK(q == UniPoly({-2, 1}));
  CHECK(r.is_zero());
  CHECK(UniPoly::gcd(p, p.derivative()).degree() == 0);
  CHECK_THROWS_AS(UniPoly::divmod(p, UniPoly()), DomainError);
  CHECK(p(Rational(5)) == 12);
}

TEST_CASE("BiPoly arithmetic and substitutions") {
  BiPoly n = BiPoly::var(0), k = BiPoly::var(1);
  BiPoly p = (n - k) * (n + k);
  CHECK(p == n.pow(2) - k.pow(2));
  CHECK(p(Rational(5), Rational(3)) == 16);
  CHECK(p.shift(1, 0)(Rational(4), Rational(3)) == 16);
  CHECK(p.restrict_first(Rational(2)) == UniPoly({4, 0, -1}));
  CHECK(p.restrict_second(Rational(1)) == UniPoly({-1, 0, 1}));
  // n -> 2k + 1 + t, read back in (k, t)
  BiPoly s = (n - 2 * k - 1).substitute_first_affine(2, 1);
  CHECK(s == BiPoly::var(1));
  CHECK(p.compose_second(UniPoly({0, 1})).is_zero());
}

TEST_CASE("RatFunc equality is by cross multiplication") {
  BiPoly n = BiPoly::var(0), k = BiPoly::var(1);
  RatFunc a(n * (n + 1), n * k);
  RatFunc b(n + 1, k);
  CHECK(a.equals(b));
  CHECK_FALSE(a.equals(RatFunc(n, k)));
  CHECK((a - b).is_zero());
  CHECK(b(Rational(3), Rational(2)) == 2);
  CHECK_THROWS_AS(b(Rational(3), Rational(0)), DomainError);
}

TEST_CASE("sturm_count examples") {
  CHECK(sturm_count(p10, 0, 100) == 3);
  CHECK(sturm_count(UniPoly({1, 0, 1}), -10, 10) == 0);
  CHECK(sturm_count(UniPoly::x(), -1, 1) == 1);
  CHECK(sturm_count(p10, 4, 5) == 1);
  CHECK(sturm_count(p10, 5, 12) == 1);
  CHECK(sturm_count(p10, 80, 90) == 1);
  // repeated roots count once
  CHECK(sturm_count(UniPoly({1, -2, 1}), 0, 2) == 1);
}

TEST_CASE("sturm_count is additive over adjacent intervals") {
  for (int i = 0; i < 200; ++i) {
    UniPoly p = random_poly(static_cast<int>(uniform(1, 6)));
    Rational a(uniform(-30, -1)), b(uniform(0, 5)), c(uniform(6, 30));
    CHECK(sturm_count(p, a, b) + sturm_count(p, b, c) == sturm_count(p, a, c));
  }
}

TEST_CASE("cauchy bound encloses every root") {
  for (int i = 0; i < 100; ++i) {
    UniPoly p = random_poly(static_cast<int>(uniform(1, 6)));
    Rational bound = cauchy_bound(p);
    CHECK(sturm_count(p, -bound, bound) == sturm_count(p, -bound * 4, bound * 4));
  }
}

TEST_CASE("isolate_smallest_root examples") {
  RatInterval r = isolate_smallest_root(p10, 32);
  CHECK(r.lo() > 4);
  CHECK(r.hi() < 5);
  CHECK(isolate_smallest_root(UniPoly({-3, 1}), 8) == RatInterval(Rational(3)));
  UniPoly cubic = UniPoly({-1, 1}) * UniPoly({-2, 1}) * UniPoly({-3, 1});
  RatInterval one = isolate_smallest_root(cubic, 20);
  CHECK(one.contains(Rational(1)));
  CHECK(one.width() <= pow2(-20));
  CHECK_THROWS_AS(isolate_smallest_root(UniPoly({1, 0, 1}), 8), DomainError);
}

TEST_CASE("isolated intervals hold exactly one root and it is the smallest") {
  for (int i = 0; i < 150; ++i) {
    UniPoly p = random_poly(static_cast<int>(uniform(1, 5)));
    Rational bound = cauchy_bound(p);
    if (sturm_count(p, -bound, bound) == 0) continue;
    RatInterval r = isolate_smallest_root(p, 24);
    if (r.is_point()) {
      CHECK(sign(p(r.lo())) == 0);
      CHECK(sturm_count(p, -bound, r.lo()) == 1);
    } else {
      CHECK(sturm_count(p, r.lo(), r.hi()) == 1);
      CHECK(sturm_count(p, -bound, r.lo()) == 0);
    }
  }
}

TEST_CASE("shift_expand_nonneg examples") {
  BiPoly n = BiPoly::var(0), k = BiPoly::var(1);
  CertResult lin = shift_expand_nonneg(n - 6 * k - 4, 6, 4, Positivity::NonNegative);
  CHECK(lin.certified());
  CHECK_FALSE(shift_expand_nonneg(n - 6 * k - 4, 6, 4, Positivity::Positive).certified());
  BiPoly d2_surrogate = (1 + n) * (n - 6 * k - 3) * (n - 3 * k - 1) * (n - 2 * k + 2);
  CHECK(shift_expand_nonneg(d2_surrogate, 6, 4, Positivity::Positive).certified());
  CertResult bad = shift_expand_nonneg(k - n, 1, 0, Positivity::NonNegative);
  CHECK_FALSE(bad.certified());
  CHECK(bad.witness.find("-1") != std::string::npos);
}

TEST_CASE("shift_expand_nonneg is sound at random lattice points") {
  BiPoly n = BiPoly::var(0), k = BiPoly::var(1);
  int certified = 0;
  for (int i = 0; i < 60; ++i) {
    BiPoly p;
    for (int t = 0; t < 5; ++t) p = p + uniform(-3, 6) * n.pow(static_cast<int>(uniform(0, 2))) * k.pow(static_cast<int>(uniform(0, 2)));
    p = p - uniform(0, 3) * k;
    CertResult c = shift_expand_nonneg(p, 3, 2, Positivity::NonNegative);
    if (!c.certified()) continue;
    ++certified;
    for (int s = 0; s < 100; ++s) {
      long kk = uniform(0, 200), tt = uniform(0, 200);
      CHECK(sign(p(Rational(3 * kk + 2 + tt), Rational(kk))) >= 0);
    }
  }
  CHECK(certified > 0);
}

TEST_CASE("univariate_positive_on_ray examples") {
  CHECK(univariate_positive_on_ray(b_coeff(2), 0, RaySign::Positive).certified());
  UniPoly square = UniPoly({-1, 1}) * UniPoly({-1, 1});
  CHECK_FALSE(univariate_positive_on_ray(square, 0, RaySign::Positive).certified());
  UniPoly sum = b_coeff(0) + b_coeff(1) + b_coeff(2);
  CHECK(sign(sum(Rational(0))) < 0);
  CHECK(univariate_positive_on_ray(sum, 0, RaySign::Negative).certified());
  CHECK(univariate_positive_on_ray(c_coeff(2), 0, RaySign::Positive).certified());
  CHECK_FALSE(univariate_positive_on_ray(UniPoly({-1, 1}), 0, RaySign::Positive).certified());
}
