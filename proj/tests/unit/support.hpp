#pragma once
// Shared fixtures for the unit tests: the published table of small values and
// a seeded generator.
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "jlcert/exactnum.hpp"

#ifndef JLCERT_TEST_DATA
#error "JLCERT_TEST_DATA must point at tests/data"
#endif

namespace testsupport {

inline std::string data_path(const std::string& name) { return std::string(JLCERT_TEST_DATA) + "/" + name; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Rows 1..18 of the published table; rows[n-1][k].
inline std::vector<std::vector<jlcert::BigInt>> table1() {
  std::vector<std::vector<jlcert::BigInt>> rows(18);
  std::istringstream in(slurp(data_path("table1.csv")));
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string n, k, v;
    std::getline(fields, n, ',');
    std::getline(fields, k, ',');
    std::getline(fields, v, ',');
    rows.at(std::stoul(n) - 1).emplace_back(v);
  }
  return rows;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20260418);
  return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline jlcert::Rational random_rational(long max_num, long max_den) {
  return jlcert::make_rational(uniform(-max_num, max_num), uniform(1, max_den));
}

}  // namespace testsupport
