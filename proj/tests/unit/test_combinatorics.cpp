#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>

#include "jlcert/combinatorics.hpp"
#include "jlcert/triangle.hpp"

using namespace jlcert;

namespace {

// Independent enumeration for the rotation audit: every string over {0,1,2}
// with no cyclically adjacent pair from {1,2}.
std::set<std::string> valid_strings(int n) {
  std::set<std::string> out;
  std::string s(static_cast<std::size_t>(n), '0');
  long total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (int i = 0; i < n; ++i, c /= 3) s[static_cast<std::size_t>(i)] = static_cast<char>('0' + c % 3);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      char a = s[static_cast<std::size_t>(i)], b = s[static_cast<std::size_t>((i + 1) % n)];
      ok = !(a != '0' && b != '0');
    }
    if (ok) out.insert(s);
  }
  return out;
}

}  // namespace

TEST_CASE("oracle examples") {
  CHECK(count_cyclic_strings(2, 1) == 2);
  CHECK(count_cyclic_strings(4, 1) == 8);
  CHECK(count_cyclic_strings(2, 0) == 3);
  CHECK(count_cyclic_strings(1, 0) == 1);
  CHECK(count_cyclic_strings(CyclicStringSpec{5, 3}) == 0);
}

TEST_CASE("oracle matches the closed form") {
  CheckResult small = cross_check_oracle(4);
  CHECK(small.status == Status::Verified);
  CheckResult r = cross_check_oracle(12);
  CHECK(r.status == Status::Verified);
  CHECK(r.points_checked == 90);  // sum of (n + 1) for n = 1..12
}

TEST_CASE("summing over k recovers the unconstrained count") {
  for (int n = 1; n <= 12; ++n) {
    BigInt sum = 0;
    for (const BigInt& c : count_cyclic_strings_by_twos(n)) sum += c;
    CHECK(sum == count_cyclic_strings_any(n));
  }
}

TEST_CASE("valid strings are closed under rotation") {
  for (int n = 1; n <= 8; ++n) {
    auto strings = valid_strings(n);
    for (const auto& s : strings) {
      std::string r = s.substr(1) + s.substr(0, 1);
      CHECK(strings.count(r) == 1);
    }
    CHECK(BigInt(static_cast<unsigned long>(strings.size())) == count_cyclic_strings_any(n));
  }
}

TEST_CASE("enumeration respects the cap") {
  CHECK_THROWS_AS(count_cyclic_strings(19, 2), ResourceLimitError);
  CHECK_THROWS_AS(count_cyclic_strings(10, 2, 8), ResourceLimitError);
  CHECK_THROWS_AS(count_cyclic_strings(0, 0), DomainError);
}
