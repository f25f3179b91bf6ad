#include "jlcert/report.hpp"

#include <algorithm>

namespace jlcert {

const char* to_string(Status s) {
  switch (s) {
    case Status::Verified: return "verified";
    case Status::Undecided: return "undecided";
    case Status::Violation: return "violation";
  }
  return "?";
}

const char* to_string(Method m) {
  switch (m) {
    case Method::ExactPointwise: return "exact-pointwise";
    case Method::Interval: return "interval";
    case Method::SymbolicCertificate: return "symbolic-certificate";
    case Method::Empirical: return "empirical";
  }
  return "?";
}

Status worst(Status a, Status b) { return std::max(a, b); }

void CheckResult::fail(std::string what) {
  status = worst(status, Status::Violation);
  ++failure_count;
  if (failures.size() < kMaxListedFailures) failures.push_back(std::move(what));
}

void CheckResult::undecide(std::string what) {
  status = worst(status, Status::Undecided);
  ++undecided_count;
  if (undecided.size() < kMaxListedFailures) undecided.push_back(std::move(what));
}

void CheckResult::merge_counts(const CheckResult& other) {
  points_checked += other.points_checked;
  failure_count += other.failure_count;
  undecided_count += other.undecided_count;
  status = worst(status, other.status);
  for (const auto& f : other.failures)
    if (failures.size() < kMaxListedFailures) failures.push_back(f);
  for (const auto& u : other.undecided)
    if (undecided.size() < kMaxListedFailures) undecided.push_back(u);
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

Status Report::status() const {
  Status s = Status::Verified;
  for (const auto& c : checks) s = worst(s, c.status);
  return s;
}

const CheckResult* Report::find(const std::string& id) const {
  auto it = std::find_if(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.id == id; });
  return it == checks.end() ? nullptr : &*it;
}

}  // namespace jlcert
