#include "jlcert/combinatorics.hpp"

#include <array>
#include <cstdint>
#include <string>

#include "jlcert/parallel.hpp"
#include "jlcert/triangle.hpp"

namespace jlcert {

namespace {

bool clashes(int a, int b) { return a != 0 && b != 0; }

// Depth-first odometer over symbols with pruning on adjacent {1,2} pairs;
// the wrap-around pair is checked once the string is complete.
class Enumerator {
 public:
  explicit Enumerator(int n) : n_(n), symbols_(static_cast<size_t>(n)), counts_(static_cast<size_t>(n) + 1, 0) {}

  void run_from(int first) {
    symbols_[0] = first;
    extend(1, first == 2 ? 1 : 0);
  }

  const std::vector<std::uint64_t>& counts() const { return counts_; }

 private:
  void extend(int pos, int twos) {
    if (pos == n_) {
      if (!clashes(symbols_[static_cast<size_t>(n_ - 1)], symbols_[0])) ++counts_[static_cast<size_t>(twos)];
      return;
    }
    for (int s = 0; s < 3; ++s) {
      if (clashes(symbols_[static_cast<size_t>(pos - 1)], s)) continue;
      symbols_[static_cast<size_t>(pos)] = s;
      extend(pos + 1, twos + (s == 2 ? 1 : 0));
    }
  }

  int n_;
  std::vector<int> symbols_;
  std::vector<std::uint64_t> counts_;
};

void check_cap(int n, int cap) {
  if (n < 1) throw DomainError("n", "string length must be >= 1");
  if (n > cap) {
    throw ResourceLimitError("enumeration length " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace

std::vector<BigInt> count_cyclic_strings_by_twos(int n, int cap) {
  check_cap(n, cap);
  // partition by the first symbol
  std::array<std::vector<std::uint64_t>, 3> parts;
  parallel_for(0, 3, [&](long first) {
    Enumerator e(n);
    e.run_from(static_cast<int>(first));
    parts[static_cast<size_t>(first)] = e.counts();
  });
  std::vector<BigInt> out(static_cast<size_t>(n) + 1, 0);
  for (const auto& p : parts)
    for (size_t k = 0; k < p.size(); ++k) out[k] += BigInt(static_cast<unsigned long>(p[k]));
  return out;
}

BigInt count_cyclic_strings(int n, int k, int cap) {
  check_cap(n, cap);
  if (k < 0 || k > n) throw DomainError("k", "number of twos must lie in [0, n]");
  return count_cyclic_strings_by_twos(n, cap)[static_cast<size_t>(k)];
}

BigInt count_cyclic_strings_any(int n, int cap) {
  check_cap(n, cap);
  // plain odometer over all 3^n strings, no pruning
  std::vector<int> digits(static_cast<size_t>(n), 0);
  std::uint64_t total = 0;
  while (true) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = !clashes(digits[static_cast<size_t>(i)], digits[static_cast<size_t>((i + 1) % n)]);
    if (ok) ++total;
    int pos = 0;
    while (pos < n && digits[static_cast<size_t>(pos)] == 2) digits[static_cast<size_t>(pos++)] = 0;
    if (pos == n) break;
    ++digits[static_cast<size_t>(pos)];
  }
  return BigInt(static_cast<unsigned long>(total));
}

CheckResult cross_check_oracle(int n_max, int cap) {
  CheckResult r;
  r.id = "oracle.cyclic_strings";
  r.region = "1 <= n <= " + std::to_string(n_max) + ", 0 <= k <= n";
  r.method = Method::ExactPointwise;
  Stopwatch timer;
  check_cap(n_max, cap);
  for (int n = 1; n <= n_max; ++n) {
    auto counts = count_cyclic_strings_by_twos(n, cap);
    for (int k = 0; k <= n; ++k) {
      ++r.points_checked;
      BigInt expected = jl_closed_form(n, k);
      if (counts[static_cast<size_t>(k)] != expected) {
        r.fail("(" + std::to_string(n) + "," + std::to_string(k) + "): enumeration " +
               counts[static_cast<size_t>(k)].get_str() + " vs closed form " + expected.get_str());
      }
    }
  }
  r.duration_ms = timer.ms();
  return r;
}

}  // namespace jlcert
