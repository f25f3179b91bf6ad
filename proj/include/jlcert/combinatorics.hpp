#pragma once

// Brute-force count of cyclic {0,1,2}-strings with no two cyclically adjacent
// symbols from {1,2}. Serves as ground truth for the binomial-sum formula.

#include <stdexcept>
#include <vector>

#include "jlcert/exactnum.hpp"
#include "jlcert/report.hpp"

namespace jlcert {

inline constexpr int kDefaultEnumerationCap = 18;

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CyclicStringSpec {
  int n;  // length, >= 1
  int k;  // number of 2's, 0 <= k <= n
};

/// Number of valid strings of length n with exactly k twos. At n = 1 the
/// single position is its own neighbour, so only "0" survives.
BigInt count_cyclic_strings(int n, int k, int cap = kDefaultEnumerationCap);
inline BigInt count_cyclic_strings(const CyclicStringSpec& s, int cap = kDefaultEnumerationCap) {
  return count_cyclic_strings(s.n, s.k, cap);
}

/// Counts for every k = 0..n from a single enumeration.
std::vector<BigInt> count_cyclic_strings_by_twos(int n, int cap = kDefaultEnumerationCap);

/// Total valid strings of length n with the k constraint dropped.
BigInt count_cyclic_strings_any(int n, int cap = kDefaultEnumerationCap);

/// Enumeration against jl_closed_form for 1 <= n <= n_max, 0 <= k <= n.
CheckResult cross_check_oracle(int n_max, int cap = kDefaultEnumerationCap);

}  // namespace jlcert
