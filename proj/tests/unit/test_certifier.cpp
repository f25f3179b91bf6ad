#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jlcert/certifier.hpp"
#include "jlcert/recurrences.hpp"
#include "support.hpp"

using namespace jlcert;
using testsupport::uniform;

namespace {

const JLTable& table() {
  static const JLTable t = build_table(80, Engine::RecColumns);
  return t;
}

Rational ratio(int n, int k) { return make_rational(table()(n + 1, k), table()(n, k)); }

}  // namespace

TEST_CASE("L examples") {
  CHECK(eval_L(6, 3) == make_rational(7, 2));
  CHECK(eval_L(10, 2) == make_rational(44, 35));
  CHECK(eval_L(4, 2) == make_rational(5, 2));
  CHECK(eval_L(10, 2) <= ratio(10, 2));
  CHECK(ratio(10, 2) == make_rational(143, 71));
  CHECK(ratio(2, 1) == make_rational(3, 2));
}

TEST_CASE("window at n = 19") {
  auto [k1, k2] = eval_window(19);
  CHECK(k1.is_rational());
  CHECK(k1.a() == 7);
  CHECK(k2.a() == make_rational(25, 3));
  CHECK(poly_window_radicand()(Rational(19), Rational(0)) == 2304);
  CHECK(in_window(19, 8));
  CHECK_FALSE(in_window(19, 7));  // k = k1 belongs to the L branch
  CHECK_FALSE(in_window(19, 9));
  CHECK_THROWS_AS(eval_window(1), DomainError);
}

TEST_CASE("l and h") {
  // l(2k,k) against its specialized closed form; real only from k = 5 on
  CHECK_THROWS_AS(eval_l(4, 2), DomainError);
  for (long k = 5; k <= 12; ++k) {
    QuadSurd general = eval_l(static_cast<int>(2 * k), static_cast<int>(k));
    QuadSurd special(-make_rational(2 + 3 * k - 2 * k * k, 4 * k), make_rational(1, 4),
                     make_rational(-40 - 196 * k - 300 * k * k - 127 * k * k * k + 20 * k * k * k * k +
                                       4 * k * k * k * k * k,
                                   k * k * k));
    RatInterval a = general.enclose(80), b = special.enclose(80);
    CHECK(a.lo() <= b.hi());
    CHECK(b.lo() <= a.hi());
  }
  CHECK(surd_compare(eval_l(10, 5), make_rational(11, 2)) == Ordering::LT);

  auto h = eval_h(8, 4, 32);
  REQUIRE(h);
  CHECK(*h == RatInterval(make_rational(9, 2)));
  for (int k = 1; k <= 100; ++k) {
    CHECK(*eval_h(2 * k, k, 16) == RatInterval(make_rational(2L * k + 1, 2)));
    CHECK(eval_L(2 * k, k) == make_rational(2L * k + 1, 2));
  }

  Rational r = ratio(19, 8);
  CHECK(surd_compare(eval_l(19, 8), r) != Ordering::GT);
  RatInterval hw = eval_h_width(19, 8, 64);
  CHECK(hw.width() <= pow2(-64));
  CHECK(hw.lo() >= r);
  CHECK_THROWS_AS(eval_l(10, 2), DomainError);  // H1(10,2) < 0: l is not real
  CHECK_THROWS_AS(eval_h(5, 3, 16), DomainError);
}

TEST_CASE("discriminant and quadratic") {
  CHECK(eval_delt(10, 5) == 302500);
  CHECK(poly_threshold_cubic()(Rational(10), Rational(5)) == 5);
  CHECK(eval_delt(10, 5) == Rational(5 * 100 * 121) * 5);
  QuadraticForm g = QuadraticForm::at(10, 5);
  CHECK(g.discriminant() == eval_delt(10, 5));
  CHECK(eval_g(10, 2, Rational(1)) == QuadraticForm::at(10, 2)(Rational(1)));
  // l is the larger root of g wherever it is real
  QuadraticForm g19 = QuadraticForm::at(19, 8);
  QuadSurd l = eval_l(19, 8);
  CHECK(g19(l).sign() == 0);
  CHECK(g19.derivative(l).sign() >= 0);
}

TEST_CASE("log-concavity identity at (10,2)") {
  const JLTable& t = table();
  BigInt gap = t(10, 2) * t(10, 2) - t(10, 3) * t(10, 1);
  CHECK(gap == 68225);
  Rational prefactor = Rational(t(10, 2) * t(10, 2)) / Rational(5 * 3 * 121 * 8);
  CHECK(Rational(gap) == prefactor * eval_g(10, 2, ratio(10, 2)));
}

TEST_CASE("threshold root R1") {
  RatInterval r = isolate_R1(10, 40);
  CHECK(r.lo() > 4);
  CHECK(r.hi() < 5);
  UniPoly p = poly_threshold_cubic().restrict_first(Rational(10));
  CHECK(sturm_count(p, 0, 100) == 3);
  CHECK(sturm_count(p, 5, 12) == 1);
  CHECK(sturm_count(p, 80, 90) == 1);
  CHECK(sign(eval_delt(10, 5)) > 0);
  CHECK(sign(eval_delt(10, 4)) < 0);
  // the threshold is an integer at n = 11
  CHECK(isolate_R1(11, 8).contains(Rational(5)));
  CHECK(eval_delt(11, 5) == 0);
}

TEST_CASE("parabola criterion never misses a negative value") {
  for (int i = 0; i < 200; ++i) {
    QuadraticForm q{Rational(uniform(1, 9)), Rational(uniform(-50, 50)), Rational(uniform(-50, 50))};
    Rational x0 = make_rational(uniform(-40, 40), uniform(1, 7));
    if (sign(q(x0)) < 0 || sign(q.derivative(x0)) < 0) continue;
    for (int s = 0; s < 100; ++s) {
      Rational x = x0 + make_rational(uniform(0, 10000), uniform(1, 100));
      CHECK(sign(q(x)) >= 0);
    }
  }
}

TEST_CASE("interval forms of the induction step agree at (19,8)") {
  Decision composed = decide_nonnegative([](long p) { return eval_step_composed(19, 8, p); });
  Decision transcribed = decide_nonnegative([](long p) { return eval_step_transcribed(19, 8, p); });
  CHECK(composed == Decision::True);
  CHECK(transcribed == composed);
}

TEST_CASE("lemma suites on small bounds") {
  const JLTable& t = table();
  CHECK(verify_ratio_lower_bound(t, 60).status() == Status::Verified);
  Report window = verify_ratio_window(t, 19);
  CHECK(window.status() == Status::Verified);
  CHECK(window.find("ratio_window.lower")->points_checked == 1);
  Report window_wide = verify_ratio_window(t, 40);
  CHECK(window_wide.status() == Status::Verified);
  CHECK(window_wide.find("ratio_window.base")->points_checked > 0);
  // base at k = 10: 21/2 >= l(20,10)
  CHECK(surd_compare(make_rational(21, 2), eval_l(20, 10)) != Ordering::LT);
  Report vacuous = verify_ratio_window(t, 18);
  CHECK(vacuous.status() == Status::Verified);
  CHECK(vacuous.find("ratio_window.lower")->points_checked == 0);
  CHECK(verify_log_concavity_argument(t, 60).status() == Status::Verified);
  CHECK(verify_discriminant_threshold(60).status == Status::Verified);
}

TEST_CASE("discriminant factorization identities") {
  Report r = verify_discriminant_factorization();
  CHECK(r.status() == Status::Verified);
  CHECK(r.checks.size() == 4);
  CHECK(poly_delt() == BiPoly::var(1) * BiPoly::var(0).pow(2) * (1 + BiPoly::var(0)).pow(2) * poly_threshold_cubic());
}

TEST_CASE("cone certificates") {
  for (ConeSystem s : {ConeSystem::DSystem, ConeSystem::BSystem, ConeSystem::CSystem}) {
    CheckResult c = cone_certificate(s, 60);
    CAPTURE(to_string(s));
    CHECK(c.status == Status::Verified);
    CHECK(c.method == Method::SymbolicCertificate);
  }
}

TEST_CASE("cone reduction agrees with the implication at random cone points") {
  // d-system: n >= 6k+4, 0 < D0 < D1 forces the next difference above D1
  for (int i = 0; i < 300; ++i) {
    long k = uniform(0, 30), n = 6 * k + 4 + uniform(0, 50);
    Rational D0 = make_rational(uniform(1, 1000), uniform(1, 20));
    Rational D1 = D0 + make_rational(uniform(1, 1000), uniform(1, 20));
    Rational d0 = d_coeff(0)(Rational(n), Rational(k)), d1 = d_coeff(1)(Rational(n), Rational(k)),
             d2 = d_coeff(2)(Rational(n), Rational(k));
    CHECK(-(d0 / d2) * D0 - (d1 / d2) * D1 > D1);
  }
}

TEST_CASE("diagonals and phi") {
  JLTable t = build_table(6 * 20 + 6, Engine::RecColumns);
  CHECK(verify_diagonals(t, 20).status() == Status::Verified);
  Report phi = audit_phi(t, 100);
  CHECK(phi.status() == Status::Verified);
  CHECK(phi.find("phi.base_audit")->method == Method::Empirical);
}

TEST_CASE("pipeline on the smallest configuration") {
  PipelineConfig c;
  c.n_max = 18;
  c.scan_n_max = 60;
  c.recurrence_n_max = 40;
  c.k_max = 8;
  c.oracle_n_max = 8;
  c.engine_check_n_max = 40;
  Report r = certify_all(c);
  CHECK(r.status() == Status::Verified);
  CHECK(r.find("scope") != nullptr);

  JLTable mutated = build_table(rows_required(c), Engine::RecColumns).with_entry(10, 2, BigInt(356));
  Report bad = certify_all(mutated, c);
  CHECK(bad.status() == Status::Violation);
  const CheckResult* lc = bad.find("table.closed_form_agreement");
  REQUIRE(lc != nullptr);
  REQUIRE_FALSE(lc->failures.empty());
  CHECK(lc->failures.front().find("(10,2)") != std::string::npos);
  CHECK_THROWS_AS(certify_all(build_table(20, Engine::RecColumns), c), DomainError);
}
