#include "jlcert/certifier.hpp"

#include <mutex>
#include <set>
#include <sstream>
#include <vector>

#include "jlcert/combinatorics.hpp"
#include "jlcert/parallel.hpp"
#include "jlcert/recurrences.hpp"

namespace jlcert {

namespace {

const BiPoly N = BiPoly::var(0);
const BiPoly K = BiPoly::var(1);

const char* kLatticeNotice =
    "verified exactly at every integer point of the stated bounded region; not a proof for all n";

std::string pt(int n, int k) { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; }

Rational q(long v) { return Rational(v); }

Rational ratio(const JLTable& t, int n, int k) {
  const BigInt& den = t(n, k);
  if (sign(den) <= 0) throw DomainError("JL" + pt(n, k), "non-positive table entry JL" + pt(n, k));
  return make_rational(t(n + 1, k), den);
}

CheckResult make_check(std::string id, std::string region, Method method) {
  CheckResult c;
  c.id = std::move(id);
  c.region = std::move(region);
  c.method = method;
  return c;
}

// Per-thread partial results merged under a lock.
struct Accumulator {
  std::mutex mu;
  void merge(CheckResult& into, const CheckResult& part) {
    std::lock_guard lock(mu);
    into.merge_counts(part);
  }
};

}  // namespace

// ---------------------------------------------------------------------------

BiPoly poly_h1() {
  return -40 + 84 * K + 4 * K.pow(2) + K.pow(3) - 140 * N + 208 * K * N - 2 * K.pow(2) * N + 2 * K.pow(3) * N -
         180 * N.pow(2) + 169 * K * N.pow(2) - 16 * K.pow(2) * N.pow(2) + K.pow(3) * N.pow(2) - 100 * N.pow(3) +
         50 * K * N.pow(3) - 10 * K.pow(2) * N.pow(3) - 20 * N.pow(4) + 5 * K * N.pow(4);
}

BiPoly poly_h2() {
  return 49 * K + 14 * K.pow(2) + K.pow(3) - 20 * N + 30 * K * N - 10 * K.pow(2) * N - 20 * N.pow(2) +
         5 * K * N.pow(2);
}

BiPoly poly_delt() {
  return (K * (N - K - 2) * N * (1 + N)).pow(2) +
         4 * K * N.pow(2) * (N - 2 * K + 1) * (1 + N).pow(2) * (-10 + (-5 + K) * N);
}

BiPoly poly_window_radicand() { return 480 + 400 * N + 41 * N.pow(2) - 22 * N.pow(3) + N.pow(4); }

BiPoly poly_threshold_cubic() {
  const BiPoly& X = K;
  return X.pow(3) + (4 - 10 * N) * X.pow(2) + (84 + 40 * N + 5 * N.pow(2)) * X - (40 + 60 * N + 20 * N.pow(2));
}

Rational eval_L(int n, int k) {
  long den = static_cast<long>(n) * (n - 2 * k + 1);
  if (den == 0) throw DomainError("n(n-2k+1)", "L" + pt(n, k) + " has a zero denominator");
  return make_rational(static_cast<long>(n - k) * (n + 1), den);
}

std::pair<QuadSurd, QuadSurd> eval_window(int n) {
  if (n < 2) throw DomainError("n", "window bounds need n >= 2");
  Rational center = make_rational(20L + 9L * n + static_cast<long>(n) * n, 4L * (n - 1));
  static const BiPoly W = poly_window_radicand();
  Rational radicand = W(q(n), q(0)) / Rational(static_cast<long>(n - 1) * (n - 1));
  std::string expr = "window radicand at n = " + std::to_string(n);
  return {QuadSurd(center, make_rational(-1, 4), radicand, expr), QuadSurd(center, make_rational(1, 4), radicand, expr)};
}

bool in_window(int n, int k) {
  auto [k1, k2] = eval_window(n);
  return surd_compare(k1, q(k)) == Ordering::LT && surd_compare(k2, q(k)) == Ordering::GT;
}

QuadSurd eval_l(int n, int k) {
  if (k < 1 || n < 1 || n == 2 * k - 1) throw DomainError("(n,k)", "l" + pt(n, k) + " undefined");
  Rational lead = -make_rational(2L + k + n + static_cast<long>(k) * n - static_cast<long>(n) * n,
                                 2L * n * (1 - 2 * k + n));
  static const BiPoly H1 = poly_h1();
  Rational h1 = H1(q(n), q(k));
  Rational scale = Rational(static_cast<long>(k)) * Rational(static_cast<long>(-1 + 2 * k - n) * (-1 + 2 * k - n)) *
                   Rational(static_cast<long>(n) * n);
  return QuadSurd(lead, make_rational(1, 2), h1 / scale, "H1" + pt(n, k));
}

std::optional<RatInterval> eval_h(int n, int k, long precision) {
  if (k < 1 || n < 2 * k) throw DomainError("(n,k)", "h" + pt(n, k) + " needs n >= 2k >= 2");
  if (n == 2 * k) return RatInterval(eval_L(n, k));
  static const BiPoly H2 = poly_h2();
  Rational h2 = H2(q(n), q(k));
  RatInterval sk = sqrt_enclosure(q(k), precision, "k");
  RatInterval sh2 = sqrt_enclosure(h2, precision, "H2" + pt(n, k));
  RatInterval den = RatInterval(q(k)) * sk - sh2 - sk * RatInterval(q(n - 3));
  if (den.contains_zero()) return std::nullopt;
  RatInterval inner = RatInterval(q(n - k)) + RatInterval(q(2L * (2 * k - n) * (n - 1))) * sk / den;
  return inner * RatInterval(make_rational(n + 1L, static_cast<long>(n) * (1 - 2 * k + n)));
}

RatInterval eval_h_width(int n, int k, long width_exponent) {
  Rational target = pow2(-width_exponent);
  for (long p = width_exponent + 8; p <= 4 * kMaxWidthExponent + width_exponent; p *= 2) {
    auto v = eval_h(n, k, p);
    if (v && v->width() <= target) return *v;
  }
  throw DomainError("h" + pt(n, k), "h" + pt(n, k) + " not resolved within the precision cap");
}

std::optional<RatInterval> eval_step_composed(int n, int k, long precision) {
  auto h = eval_h(n, k, precision);
  if (!h || h->contains_zero()) return std::nullopt;
  RatInterval first = RatInterval(make_rational(2L + n, n - 2L * k + 2)) / *h;
  RatInterval l_next = eval_l(n + 1, k).enclose(precision);
  return first + RatInterval(eval_L(n + 1, k)) - l_next;
}

std::optional<RatInterval> eval_step_transcribed(int n, int k, long precision) {
  const long nl = n, kl = k;
  Rational t1 = make_rational(1 + kl - nl, 4 - 4 * kl + 2 * nl) + make_rational(1 - kl + nl, 2 - 2 * kl + nl);
  Rational r3 = Rational(kl * kl * kl - 20 * (2 + nl) * (3 + nl) - 2 * kl * kl * (3 + 5 * nl) +
                         kl * (129 + 5 * nl * (10 + nl)));
  Rational r4 = Rational(kl * (7 + kl) * (7 + kl) - 10 * (-2 + kl) * (-1 + kl) * nl + 5 * (-4 + kl) * nl * nl);
  RatInterval sk = sqrt_enclosure(q(k), precision, "k");
  RatInterval t2 = sqrt_enclosure(r3, precision, "G radicand" + pt(n, k)) /
                   (sk * RatInterval(q(4 - 4 * kl + 2 * nl)));
  RatInterval inner(q(n - k));
  if (n != 2 * k) {
    RatInterval den = sk * RatInterval(q(3 + k - n)) - sqrt_enclosure(r4, precision, "G inner radicand" + pt(n, k));
    if (den.contains_zero()) return std::nullopt;
    inner = inner + RatInterval(q(2 * (2 * kl - nl) * (nl - 1))) * sk / den;
  }
  if (inner.contains_zero()) return std::nullopt;
  return RatInterval(t1) - t2 + RatInterval(q(nl * (1 - 2 * kl + nl))) / inner;
}

QuadraticForm QuadraticForm::at(int n, int k) {
  const long nl = n, kl = k;
  return {Rational(kl * nl * nl * (nl - 2 * kl + 1)), Rational(-kl * (nl - kl - 2) * nl * (1 + nl)),
          Rational(-(1 + nl) * (1 + nl) * (-10 + (-5 + kl) * nl))};
}

QuadSurd QuadraticForm::operator()(const QuadSurd& x) const {
  return (QuadSurd(a) * x + QuadSurd(b)) * x + QuadSurd(c);
}

QuadSurd QuadraticForm::derivative(const QuadSurd& x) const { return (2 * a) * x + QuadSurd(b); }

Rational eval_delt(int n, int k) {
  static const BiPoly delt = poly_delt();
  return delt(q(n), q(k));
}

Rational eval_g(int n, int k, const Rational& x) { return QuadraticForm::at(n, k)(x); }

RatInterval isolate_R1(int n, long width_exponent) {
  return isolate_smallest_root(poly_threshold_cubic().restrict_first(q(n)), width_exponent);
}

// ---------------------------------------------------------------------------

Report verify_ratio_lower_bound(const JLTable& table, int n_max) {
  Report rep;
  if (table.n_max() < n_max + 2) throw DomainError("n_max", "lemma checks need table rows up to n_max + 2");

  CheckResult base = make_check("ratio_lower.base", "ratio(2k,k) = L(2k,k) = (2k+1)/2, 1 <= k <= " +
                                                    std::to_string(n_max / 2), Method::ExactPointwise);
  {
    Stopwatch timer;
    for (int k = 1; 2 * k <= n_max; ++k) {
      ++base.points_checked;
      Rational r = ratio(table, 2 * k, k);
      Rational expected = make_rational(2L * k + 1, 2);
      if (r != expected || eval_L(2 * k, k) != expected) {
        base.fail("k = " + std::to_string(k) + ": ratio " + r.get_str() + ", L " + eval_L(2 * k, k).get_str());
      }
    }
    base.duration_ms = timer.ms();
  }
  rep.add(std::move(base));

  CheckResult lower = make_check("ratio_lower.lower_bound", "L(n,k) <= JL(n+1,k)/JL(n,k), 2k <= n <= " +
                                                            std::to_string(n_max) + ", k >= 1",
                                 Method::ExactPointwise);
  CheckResult step = make_check("ratio_lower.step_identity", "one-step ratio identity, 2k <= n <= " +
                                                             std::to_string(n_max) + ", k >= 1",
                                Method::ExactPointwise);
  {
    Stopwatch timer;
    for (int n = 2; n <= n_max; ++n) {
      for (int k = 1; 2 * k <= n; ++k) {
        ++lower.points_checked;
        ++step.points_checked;
        try {
          Rational r = ratio(table, n, k);
          if (eval_L(n, k) > r) lower.fail(pt(n, k) + ": L = " + eval_L(n, k).get_str() + " > " + r.get_str());
          Rational next = ratio(table, n + 1, k);
          Rational rhs = make_rational(2L + n, n - 2L * k + 2) / r +
                         make_rational(static_cast<long>(n - k + 1) * (n + 2), static_cast<long>(1 + n) * (n - 2 * k + 2));
          if (next != rhs) step.fail(pt(n, k) + ": residual " + Rational(next - rhs).get_str());
        } catch (const DomainError& e) {
          lower.fail(pt(n, k) + ": " + e.what());
        }
      }
    }
    lower.duration_ms = step.duration_ms = timer.ms();
  }
  lower.notes.push_back(kLatticeNotice);
  rep.add(std::move(lower));
  rep.add(std::move(step));

  CheckResult shape = make_check("ratio_lower.shift_structure", "L(n+1,k) as a rational function in (n,k)",
                                 Method::SymbolicCertificate);
  shape.points_checked = 1;
  RatFunc L(RatFunc((N - K) * (N + 1), N * (N - 2 * K + 1)));
  RatFunc constant_term((N - K + 1) * (N + 2), (1 + N) * (N - 2 * K + 2));
  if (!L.shift(1, 0).equals(constant_term)) shape.fail("L(n+1,k) differs from the constant term of the step");
  rep.add(std::move(shape));
  return rep;
}

Report verify_ratio_window(const JLTable& table, int n_max) {
  Report rep;
  const std::string region = "19 <= n <= " + std::to_string(n_max) + ", n >= 2k, k1 < k < k2";
  CheckResult lower = make_check("ratio_window.lower", region + ": l(n,k) <= ratio", Method::ExactPointwise);
  CheckResult upper = make_check("ratio_window.upper", region + ": ratio <= h(n,k)", Method::Interval);
  CheckResult step = make_check("ratio_window.step", region + ": composed induction step >= 0", Method::Interval);
  CheckResult agree = make_check("ratio_window.transcription_agreement",
                                 region + ": one-expression step has the same sign as the composed step",
                                 Method::Interval);
  CheckResult base = make_check("ratio_window.base", "(2k+1)/2 >= l(2k,k) for every k met in a window",
                                Method::ExactPointwise);
  if (n_max < 19) {
    for (CheckResult* c : {&lower, &upper, &step, &agree, &base}) {
      c->notes.push_back("vacuous: n_max < 19");
      rep.add(std::move(*c));
    }
    return rep;
  }
  if (table.n_max() < n_max + 1) throw DomainError("n_max", "window checks need table rows up to n_max + 1");

  Stopwatch timer;
  Accumulator acc;
  std::set<int> window_ks;
  std::mutex ks_mu;
  long empty_windows = 0;

  parallel_for(19, n_max + 1, [&](long nl) {
    const int n = static_cast<int>(nl);
    CheckResult lo_part, up_part, st_part, ag_part;
    auto [k1, k2] = eval_window(n);
    bool any = false;
    for (int k = 1; 2 * k <= n; ++k) {
      if (!(surd_compare(k1, q(k)) == Ordering::LT && surd_compare(k2, q(k)) == Ordering::GT)) continue;
      any = true;
      {
        std::lock_guard lock(ks_mu);
        window_ks.insert(k);
      }
      Rational r = ratio(table, n, k);
      ++lo_part.points_checked;
      try {
        if (surd_compare(eval_l(n, k), r) == Ordering::GT) lo_part.fail(pt(n, k) + ": l > ratio " + r.get_str());
      } catch (const DomainError& e) {
        lo_part.fail(pt(n, k) + ": " + e.what());
      }
      ++up_part.points_checked;
      ++st_part.points_checked;
      ++ag_part.points_checked;
      try {
        Decision up = decide_nonnegative([&](long p) -> std::optional<RatInterval> {
          auto h = eval_h(n, k, p);
          if (!h) return std::nullopt;
          return *h - RatInterval(r);
        });
        if (up == Decision::False) up_part.fail(pt(n, k) + ": ratio " + r.get_str() + " > h");
        if (up == Decision::Undecided) up_part.undecide(pt(n, k));

        Decision composed = decide_nonnegative([&](long p) { return eval_step_composed(n, k, p); });
        if (composed == Decision::False) st_part.fail(pt(n, k) + ": induction step negative");
        if (composed == Decision::Undecided) st_part.undecide(pt(n, k));

        Decision transcribed = decide_nonnegative([&](long p) { return eval_step_transcribed(n, k, p); });
        if (transcribed == Decision::Undecided || composed == Decision::Undecided) {
          ag_part.undecide(pt(n, k));
        } else if (transcribed != composed) {
          ag_part.fail(pt(n, k) + ": composed and one-expression forms disagree in sign");
        }
      } catch (const DomainError& e) {
        up_part.fail(pt(n, k) + ": " + e.what());
      }
    }
    if (!any) {
      std::lock_guard lock(ks_mu);
      ++empty_windows;
    }
    acc.merge(lower, lo_part);
    acc.merge(upper, up_part);
    acc.merge(step, st_part);
    acc.merge(agree, ag_part);
  });

  lower.duration_ms = upper.duration_ms = step.duration_ms = agree.duration_ms = timer.ms();
  Stopwatch base_timer;
  for (int k : window_ks) {
    ++base.points_checked;
    try {
      if (surd_compare(make_rational(2L * k + 1, 2), eval_l(2 * k, k)) == Ordering::LT) {
        base.fail("k = " + std::to_string(k) + ": (2k+1)/2 < l(2k,k)");
      }
    } catch (const DomainError& e) {
      base.fail("k = " + std::to_string(k) + ": " + e.what());
    }
  }
  base.duration_ms = base_timer.ms();
  lower.notes.push_back("one pass computes lower, upper, step and agreement together; durations are shared");
  lower.notes.push_back(std::to_string(empty_windows) + " row(s) with an empty window (vacuous)");
  for (CheckResult* c : {&lower, &upper, &step, &agree, &base}) c->notes.push_back(kLatticeNotice);
  upper.notes.push_back("interval refinement from 2^-16 to 2^-" + std::to_string(kMaxWidthExponent));
  rep.add(std::move(lower));
  rep.add(std::move(upper));
  rep.add(std::move(step));
  rep.add(std::move(agree));
  rep.add(std::move(base));
  return rep;
}

Report verify_log_concavity_argument(const JLTable& table, int n_max) {
  Report rep;
  if (table.n_max() < n_max + 1) throw DomainError("n_max", "log-concavity checks need rows up to n_max + 1");
  const std::string region = "1 <= k < floor(n/2), n <= " + std::to_string(n_max);
  CheckResult ident = make_check("log_concavity.identity", region + ": JL^2 - JL(k+1)JL(k-1) = prefactor * g(ratio)",
                                 Method::ExactPointwise);
  CheckResult branch = make_check("log_concavity.branch", region + ": discriminant / lower-bound argument",
                                  Method::ExactPointwise);
  CheckResult outside = make_check("log_concavity.window_L_bound",
                                   "19 <= n <= " + std::to_string(n_max) + ", 1 <= k <= n/2, k <= k1 or k >= k2: L >= l",
                                   Method::ExactPointwise);
  Stopwatch timer;
  Accumulator acc;
  std::mutex count_mu;
  long by_disc = 0, by_L = 0, by_l = 0, by_table = 0, l_roots = 0, imaginary = 0;

  const BiPoly H1 = poly_h1();
  parallel_for(1, n_max + 1, [&](long nl) {
    const int n = static_cast<int>(nl);
    CheckResult id_part, br_part, out_part;
    long c_disc = 0, c_L = 0, c_l = 0, c_table = 0, c_roots = 0, c_imag = 0;
    std::optional<std::pair<QuadSurd, QuadSurd>> window;
    if (n >= 19) {
      window = eval_window(n);
      for (int k = 1; 2 * k <= n; ++k) {
        if (surd_compare(window->first, q(k)) == Ordering::LT && surd_compare(window->second, q(k)) == Ordering::GT) {
          continue;
        }
        ++out_part.points_checked;
        if (sign(H1(q(n), q(k))) < 0) {
          ++c_imag;  // l is not real here
          continue;
        }
        if (surd_compare(eval_l(n, k), eval_L(n, k)) == Ordering::GT) out_part.fail(pt(n, k) + ": L < l");
      }
    }
    for (int k = 1; k < n / 2; ++k) {
      ++id_part.points_checked;
      ++br_part.points_checked;
      const BigInt& v = table(n, k);
      BigInt gap = v * v - table(n, k + 1) * table(n, k - 1);
      QuadraticForm g = QuadraticForm::at(n, k);
      Rational r;
      try {
        r = ratio(table, n, k);
      } catch (const DomainError& e) {
        id_part.fail(pt(n, k) + ": " + e.what());
        continue;
      }
      Rational prefactor = Rational(v * v) / Rational(5L * (k + 1) * (n + 1) * (n + 1) * (n - 2 * k + 2));
      if (Rational(gap) != prefactor * g(r)) id_part.fail(pt(n, k) + ": identity residual nonzero");

      if (n < 19) {
        ++c_table;
        if (sign(gap) < 0) br_part.fail(pt(n, k) + ": JL^2 - JL(k+1)JL(k-1) = " + gap.get_str());
        continue;
      }
      if (sign(g.discriminant()) <= 0) {
        ++c_disc;
        continue;
      }
      bool inside = surd_compare(window->first, q(k)) == Ordering::LT &&
                    surd_compare(window->second, q(k)) == Ordering::GT;
      try {
        if (inside) {
          ++c_l;
          QuadSurd x = eval_l(n, k);
          QuadSurd gx = g(x);
          if (gx.sign() == 0) ++c_roots;
          if (gx.sign() < 0 || g.derivative(x).sign() < 0) br_part.fail(pt(n, k) + ": g or g' negative at l");
          if (surd_compare(x, r) == Ordering::GT) br_part.fail(pt(n, k) + ": ratio below l");
        } else {
          ++c_L;
          Rational x = eval_L(n, k);
          if (sign(g(x)) < 0 || sign(g.derivative(x)) < 0) br_part.fail(pt(n, k) + ": g or g' negative at L");
          if (x > r) br_part.fail(pt(n, k) + ": ratio below L");
        }
      } catch (const DomainError& e) {
        br_part.fail(pt(n, k) + ": " + e.what());
      }
      if (sign(g(r)) < 0) br_part.fail(pt(n, k) + ": g(ratio) < 0");
    }
    acc.merge(ident, id_part);
    acc.merge(branch, br_part);
    acc.merge(outside, out_part);
    std::lock_guard lock(count_mu);
    imaginary += c_imag;
    by_disc += c_disc;
    by_L += c_L;
    by_l += c_l;
    by_table += c_table;
    l_roots += c_roots;
  });
  ident.duration_ms = branch.duration_ms = outside.duration_ms = timer.ms();
  outside.notes.push_back(std::to_string(imaginary) + " point(s) with H1 < 0 skipped: l is not real there");
  outside.notes.push_back(kLatticeNotice);
  std::ostringstream os;
  os << "rows n <= 18 checked directly: " << by_table << " point(s); non-positive discriminant: " << by_disc
     << "; lower bound L: " << by_L << "; lower bound l: " << by_l << " (g(l) = 0 exactly at " << l_roots << ")";
  branch.notes.push_back(os.str());
  branch.notes.push_back(kLatticeNotice);
  rep.add(std::move(ident));
  rep.add(std::move(branch));
  rep.add(std::move(outside));
  return rep;
}

Report verify_discriminant_factorization() {
  Report rep;
  const BiPoly cubic = poly_threshold_cubic();
  auto symbolic = [&](const std::string& id, const std::string& what, bool ok) {
    CheckResult c = make_check(id, "polynomial identity in (n,k)", Method::SymbolicCertificate);
    c.points_checked = 1;
    c.notes.push_back(what);
    if (!ok) c.fail(what + " does not hold");
    rep.add(std::move(c));
  };
  symbolic("discriminant.factorization", "delt(n,k) = k n^2 (1+n)^2 p_n(k)",
           poly_delt() == K * N.pow(2) * (1 + N).pow(2) * cubic);
  symbolic("discriminant.h1_factorization", "H1(n,k) = (1+n)^2 p_n(k)", poly_h1() == (1 + N).pow(2) * cubic);
  UniPoly h1_diag = poly_h1().substitute_first_affine(2, 0).restrict_second(0);
  symbolic("discriminant.l_base_specialization", "H1(2k,k) = 4k^5 + 20k^4 - 127k^3 - 300k^2 - 196k - 40",
           h1_diag == UniPoly({-40, -196, -300, -127, 20, 4}));

  CheckResult num = make_check("discriminant.numeric", "n = 10", Method::ExactPointwise);
  num.points_checked = 3;
  Rational d = eval_delt(10, 5);
  Rational p10 = cubic(q(10), q(5));
  if (d != 302500 || d != Rational(5 * 100 * 121) * p10 || p10 != 5) {
    num.fail("delt(10,5) = " + d.get_str() + ", p_10(5) = " + p10.get_str());
  }
  RatInterval r1 = isolate_R1(10, 32);
  if (!(r1.lo() > 4 && r1.hi() < 5)) num.fail("R1(10) enclosure " + r1.str() + " not inside (4,5)");
  num.notes.push_back("R1(10) in " + r1.str());
  rep.add(std::move(num));
  return rep;
}

CheckResult verify_discriminant_threshold(int n_max) {
  CheckResult c = make_check("log_concavity.discriminant_threshold",
                             "10 <= n <= " + std::to_string(n_max) + ", 1 <= k <= n/2: delt > 0 iff k > R1(n)",
                             Method::ExactPointwise);
  Stopwatch timer;
  const BiPoly cubic = poly_threshold_cubic();
  long exact_roots = 0;
  for (int n = 10; n <= n_max; ++n) {
    UniPoly p = cubic.restrict_first(q(n));
    RatInterval root = isolate_smallest_root(p, 16);
    for (int k = 1; 2 * k <= n; ++k) {
      ++c.points_checked;
      std::optional<bool> above;
      for (long w = 32; !above; w *= 2) {
        if (q(k) > root.hi()) above = true;
        else if (q(k) < root.lo()) above = false;
        else if (sign(p(q(k))) == 0) {
          // the isolating interval holds only the smallest root
          above = false;
          ++exact_roots;
        } else if (w > kMaxWidthExponent) {
          break;
        } else {
          root = isolate_smallest_root(p, w);
        }
      }
      if (!above) {
        c.undecide(pt(n, k));
        continue;
      }
      bool positive = sign(eval_delt(n, k)) > 0;
      if (positive != *above) {
        c.fail(pt(n, k) + ": delt " + (positive ? "> 0" : "<= 0") + " but k is " + (*above ? "above" : "not above") +
               " R1");
      }
    }
  }
  c.notes.push_back("integer thresholds hit exactly: " + std::to_string(exact_roots));
  c.duration_ms = timer.ms();
  c.notes.push_back(kLatticeNotice);
  return c;
}

// ---------------------------------------------------------------------------

const char* to_string(ConeSystem s) {
  switch (s) {
    case ConeSystem::DSystem: return "d-system";
    case ConeSystem::BSystem: return "b-system";
    case ConeSystem::CSystem: return "c-system";
  }
  return "?";
}

namespace {

// For a linear implication over the open cone {0 < D0 < D1} (or its mirror
// {D1 < D0 < 0}), write D0 = s, D1 = s + t with s, t > 0. The conclusion is
// linear in (s, t), so it holds on the whole cone iff both coefficients have
// the required weak sign and they do not both vanish.
CheckResult diagonal_cone(ConeSystem system, int lattice_bound) {
  const bool is_b = system == ConeSystem::BSystem;
  auto coeff = [&](int j) { return is_b ? b_coeff(j) : c_coeff(j); };
  const UniPoly lead = coeff(2);
  const UniPoly all = coeff(0) + coeff(1) + coeff(2);
  const UniPoly tail = coeff(1) + coeff(2);
  const std::string name = to_string(system);
  CheckResult c = make_check("cone." + name, "k >= 0", Method::SymbolicCertificate);
  Stopwatch timer;
  c.notes.push_back(is_b ? "D1 > D0 > 0 and b0 D0 + b1 D1 + b2 D2 = 0 imply D2 > D1, reduced to: b2 > 0, "
                           "b0+b1+b2 <= 0, b1+b2 <= 0, not both zero"
                         : "D1 < D0 < 0 and c0 D0 + c1 D1 + c2 D2 = 0 imply D2 < D1, reduced to: c2 > 0, "
                           "c0+c1+c2 <= 0, c1+c2 <= 0, not both zero");
  CertResult r_lead = univariate_positive_on_ray(lead, 0, RaySign::Positive);
  CertResult r_all = univariate_positive_on_ray(all, 0, RaySign::Negative);
  CertResult r_tail = univariate_positive_on_ray(tail, 0, RaySign::Negative);
  c.points_checked = 3;
  c.notes.push_back("leading coefficient > 0: " + r_lead.witness);
  c.notes.push_back("sum of all coefficients < 0: " + r_all.witness);
  c.notes.push_back("sum of the two upper coefficients < 0: " + r_tail.witness);
  if (r_lead.certified() && r_all.certified() && r_tail.certified()) {
    c.duration_ms = timer.ms();
    return c;
  }

  c.method = Method::ExactPointwise;
  c.region = "0 <= k <= " + std::to_string(lattice_bound);
  c.notes.push_back("certificate inconclusive; fell back to an exact lattice scan");
  c.points_checked = 0;
  for (int k = 0; k <= lattice_bound; ++k) {
    ++c.points_checked;
    Rational a = all(q(k)), t = tail(q(k));
    if (sign(lead(q(k))) <= 0 || sign(a) > 0 || sign(t) > 0 || (sign(a) == 0 && sign(t) == 0)) {
      c.fail("k = " + std::to_string(k));
    }
  }
  c.duration_ms = timer.ms();
  return c;
}

CheckResult difference_cone(int lattice_bound) {
  const BiPoly neg_lead = -d_coeff(2);
  const BiPoly all = d_coeff(0) + d_coeff(1) + d_coeff(2);
  const BiPoly tail = d_coeff(1) + d_coeff(2);
  CheckResult c = make_check("cone.d-system", "n = 6k + 4 + t, k >= 0, t >= 0", Method::SymbolicCertificate);
  Stopwatch timer;
  c.notes.push_back("n >= 6k+4, D1 > D0 > 0 imply -(d0/d2) D0 - (d1/d2) D1 > D1, reduced to: d2 < 0, "
                    "d0+d1+d2 >= 0, d1+d2 >= 0, not both zero");
  CertResult r_lead = shift_expand_nonneg(neg_lead, 6, 4, Positivity::Positive);
  CertResult r_all = shift_expand_nonneg(all, 6, 4, Positivity::Positive);
  CertResult r_tail = shift_expand_nonneg(tail, 6, 4, Positivity::Positive);
  c.points_checked = 3;
  c.notes.push_back("-d2 > 0: " + std::string(r_lead.certified() ? "certified" : "inconclusive") + ", " + r_lead.witness);
  c.notes.push_back("d0+d1+d2 > 0: " + std::string(r_all.certified() ? "certified" : "inconclusive") + ", " + r_all.witness);
  c.notes.push_back("d1+d2 > 0: " + std::string(r_tail.certified() ? "certified" : "inconclusive") + ", " + r_tail.witness);
  if (r_lead.certified() && r_all.certified() && r_tail.certified()) {
    c.duration_ms = timer.ms();
    return c;
  }

  c.method = Method::ExactPointwise;
  c.region = "n >= 6k + 4, n <= " + std::to_string(lattice_bound);
  c.notes.push_back("certificate inconclusive; fell back to an exact lattice scan");
  c.points_checked = 0;
  for (int n = 4; n <= lattice_bound; ++n) {
    for (int k = 0; 6 * k + 4 <= n; ++k) {
      ++c.points_checked;
      Rational a = all(q(n), q(k)), t = tail(q(n), q(k));
      if (sign(neg_lead(q(n), q(k))) <= 0 || sign(a) < 0 || sign(t) < 0 || (sign(a) == 0 && sign(t) == 0)) {
        c.fail(pt(n, k));
      }
    }
  }
  c.duration_ms = timer.ms();
  return c;
}

}  // namespace

CheckResult cone_certificate(ConeSystem system, int lattice_bound) {
  if (system == ConeSystem::DSystem) return difference_cone(lattice_bound);
  return diagonal_cone(system, lattice_bound);
}

Report verify_diagonals(const JLTable& table, int k_max) {
  Report rep;
  for (bool is_a : {true, false}) {
    CheckResult c = make_check(is_a ? "diagonal.A" : "diagonal.B",
                               std::string(is_a ? "A(k) = Delta(6k+4,k)" : "B(k) = Delta(6k+3,k)") + ", 0 <= k <= " +
                                   std::to_string(k_max),
                               Method::ExactPointwise);
    auto value = [&](int k) { return is_a ? diag_a(table, k) : diag_b(table, k); };
    BigInt first = value(0);
    ++c.points_checked;
    if (first != (is_a ? 1 : -1)) c.fail("initial value " + first.get_str());
    BigInt prev = first;
    for (int k = 1; k <= k_max; ++k) {
      ++c.points_checked;
      BigInt cur = value(k);
      if (is_a ? !(cur > prev) : !(cur < prev)) {
        c.fail("k = " + std::to_string(k) + ": " + prev.get_str() + " -> " + cur.get_str());
      }
      prev = cur;
    }
    c.notes.push_back(std::string(is_a ? "strictly increasing" : "strictly decreasing") + " required");
    rep.add(std::move(c));
  }
  return rep;
}

Report audit_phi(const JLTable& table, int n_max) {
  Report rep;
  CheckResult base = make_check("phi.base_audit", "Phi(6k+4,k) > 0 for 6k+5 <= " + std::to_string(n_max),
                                Method::Empirical);
  for (int k = 0; 6 * k + 5 <= n_max; ++k) {
    ++base.points_checked;
    BigInt v = phi(table, 6 * k + 4, k);
    if (sign(v) <= 0) base.fail("k = " + std::to_string(k) + ": Phi = " + v.get_str());
  }
  base.notes.push_back("the induction supplies only the step; this base row is audited, not proved");
  rep.add(std::move(base));

  CheckResult all = make_check("phi.phi_positive", "Phi(n,k) > 0 on 6k+4 <= n < " + std::to_string(n_max),
                               Method::ExactPointwise);
  for (int n = 4; n + 1 <= n_max; ++n) {
    for (int k = 0; 6 * k + 4 <= n; ++k) {
      ++all.points_checked;
      BigInt v = phi(table, n, k);
      if (sign(v) <= 0) all.fail(pt(n, k) + ": Phi = " + v.get_str());
    }
  }
  rep.add(std::move(all));
  return rep;
}

// ---------------------------------------------------------------------------

int rows_required(const PipelineConfig& config) {
  int rows = std::max({config.scan_n_max, config.n_max + 2, 18, config.engine_check_n_max});
  for (IdentityId id : all_identities()) {
    const bool diagonal = id == IdentityId::DiagonalA || id == IdentityId::DiagonalB;
    rows = std::max(rows, rows_needed(id, diagonal ? config.k_max : config.recurrence_n_max));
  }
  return rows;
}

Report certify_all(const PipelineConfig& config) {
  return certify_all(build_table(rows_required(config), Engine::RecColumns), config);
}

namespace {

// Scans that report no duration of their own get the wall time of the stage.
template <typename F>
void timed_stage(Report& rep, F&& stage) {
  Stopwatch timer;
  Report part = stage();
  const double ms = timer.ms();
  for (CheckResult& c : part.checks) {
    if (c.duration_ms == 0) c.duration_ms = ms;
  }
  rep.append(part);
}

Report single(CheckResult c) {
  Report r;
  r.add(std::move(c));
  return r;
}

}  // namespace

Report certify_all(const JLTable& table, const PipelineConfig& config) {
  if (table.n_max() < rows_required(config)) {
    throw DomainError("n_max", "pipeline needs table rows up to " + std::to_string(rows_required(config)));
  }
  Report rep;
  CheckResult scope = make_check("scope", "whole pipeline", Method::ExactPointwise);
  scope.notes.push_back("polynomial implications are certified for all parameters; inequalities with radicals are "
                        "verified only on bounded integer lattices; recurrences are verified, not derived");
  rep.add(std::move(scope));

  rep.add(check_against_closed_form(table, table.n_max()));
  rep.add(cross_check_engines(config.engine_check_n_max));
  if (config.run_oracle) rep.add(cross_check_oracle(config.oracle_n_max));

  for (IdentityId id : all_identities()) {
    const bool diagonal = id == IdentityId::DiagonalA || id == IdentityId::DiagonalB;
    timed_stage(rep, [&] {
      return single(scan_identity(table, id, diagonal ? config.k_max : config.recurrence_n_max).to_check());
    });
  }
  timed_stage(rep, [] { return verify_chaining(); });

  rep.append(verify_ratio_lower_bound(table, config.n_max));
  rep.append(verify_ratio_window(table, config.n_max));
  rep.append(verify_log_concavity_argument(table, config.n_max));
  timed_stage(rep, [] { return verify_discriminant_factorization(); });
  rep.add(verify_discriminant_threshold(config.n_max));

  for (ConeSystem s : {ConeSystem::DSystem, ConeSystem::BSystem, ConeSystem::CSystem}) {
    rep.add(cone_certificate(s, config.scan_n_max));
  }
  timed_stage(rep, [&] { return verify_diagonals(table, config.k_max); });
  timed_stage(rep, [&] { return audit_phi(table, config.scan_n_max); });

  timed_stage(rep, [&] {
    return single(scan_log_concavity(table, config.scan_n_max).to_check("triangle.log_concavity"));
  });
  timed_stage(rep, [&] {
    return single(scan_delta_signs(table, config.scan_n_max).to_check("triangle.delta_signs"));
  });
  rep.add(scan_mode(table, config.scan_n_max));
  return rep;
}

}  // namespace jlcert
