#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace jlcert {

/// Ordered by severity: the aggregate of several checks is the maximum.
enum class Status { Verified = 0, Undecided = 1, Violation = 2 };

enum class Method { ExactPointwise, Interval, SymbolicCertificate, Empirical };

const char* to_string(Status s);
const char* to_string(Method m);

Status worst(Status a, Status b);

/// Upper bound on failure strings kept per check; counts stay exact.
inline constexpr std::size_t kMaxListedFailures = 50;

/// Outcome of one scan or certificate.
struct CheckResult {
  std::string id;
  std::string region;
  Method method = Method::ExactPointwise;
  Status status = Status::Verified;
  std::uint64_t points_checked = 0;
  std::uint64_t failure_count = 0;
  std::uint64_t undecided_count = 0;
  std::vector<std::string> failures;
  std::vector<std::string> undecided;
  std::vector<std::string> notes;
  double duration_ms = 0;

  void fail(std::string what);
  void undecide(std::string what);
  void merge_counts(const CheckResult& other);
};

struct Report {
  std::vector<CheckResult> checks;

  Status status() const;
  void add(CheckResult c) { checks.push_back(std::move(c)); }
  void append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
  const CheckResult* find(const std::string& id) const;
};

/// Elapsed wall time since construction.
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace jlcert
