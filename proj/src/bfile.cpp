#include "jlcert/bfile.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "jlcert/triangle.hpp"

namespace jlcert {

namespace {

bool is_integer_token(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<long>(i), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string default_id(const std::string& path) {
  std::string stem = std::filesystem::path(path).stem().string();
  if (stem.size() == 7 && (stem[0] == 'b' || stem[0] == 'B') && is_integer_token(stem.substr(1))) {
    return "A" + stem.substr(1);
  }
  return stem;
}

// Flattened triangle, rows from first_row on, k = 0..floor(n/2).
std::vector<BigInt> flattened_jl(int first_row, std::size_t count) {
  std::vector<BigInt> out;
  out.reserve(count);
  for (int n = first_row; out.size() < count; ++n) {
    for (int k = 0; 2 * k <= n && out.size() < count; ++k) {
      out.push_back(n == 0 ? BigInt(2) : jl_closed_form(n, k));
    }
  }
  return out;
}

// (n, k) of the i-th value of the flattened triangle starting at first_row.
std::pair<int, int> flat_position(int first_row, std::size_t i) {
  for (int n = first_row;; ++n) {
    std::size_t len = static_cast<std::size_t>(n / 2 + 1);
    if (i < len) return {n, static_cast<int>(i)};
    i -= len;
  }
}

std::vector<BigInt> values_of(const BFile& b) {
  std::vector<BigInt> v;
  v.reserve(b.entries.size());
  for (const auto& e : b.entries) v.push_back(e.second);
  return v;
}

Report compare_jl(const BFile& bfile) {
  Report rep;
  Alignment a = align_jl(bfile);
  CheckResult align;
  align.id = "oeis.A245962.alignment";
  align.region = "first " + std::to_string(a.window) + " b-file values";
  align.points_checked = a.window;
  align.notes.push_back("first b-file entry (index " + std::to_string(bfile.entries.front().first) +
                        ") is JL(" + std::to_string(a.first_row) + ",0); " + std::to_string(a.score) + "/" +
                        std::to_string(a.window) + " leading values agree");
  rep.add(std::move(align));

  CheckResult values;
  values.id = "oeis.A245962.values";
  values.region = "all " + std::to_string(bfile.entries.size()) + " b-file entries";
  Stopwatch timer;
  std::vector<BigInt> expected = flattened_jl(a.first_row, bfile.entries.size());
  for (std::size_t i = 0; i < bfile.entries.size(); ++i) {
    ++values.points_checked;
    const auto& [index, value] = bfile.entries[i];
    if (value != expected[i]) {
      auto [n, k] = flat_position(a.first_row, i);
      values.fail("index " + std::to_string(index) + ": b-file " + value.get_str() + " vs JL(" + std::to_string(n) +
                  "," + std::to_string(k) + ") = " + expected[i].get_str());
    }
  }
  values.duration_ms = timer.ms();
  rep.add(std::move(values));
  return rep;
}

Report scan_rows(const BFile& bfile, const std::string& id, std::optional<RowPattern> pattern) {
  std::vector<BigInt> flat = values_of(bfile);
  if (!pattern) pattern = detect_row_pattern(flat);
  if (!pattern) {
    throw AlignmentError("cannot detect the row layout of " + id + "; pass --row-pattern");
  }
  CheckResult c;
  c.id = "oeis." + id + ".row_log_concavity";
  c.method = Method::Empirical;
  Stopwatch timer;
  auto rows = split_rows(flat, *pattern);
  c.region = std::to_string(rows.size()) + " complete row(s), layout " + to_string(*pattern);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    for (std::size_t k = 1; k + 1 < row.size(); ++k) {
      ++c.points_checked;
      if (row[k] * row[k] < row[k - 1] * row[k + 1]) {
        c.fail("row " + std::to_string(r) + ", position " + std::to_string(k));
      }
    }
  }
  c.duration_ms = timer.ms();
  c.notes.push_back("empirical: rows are rebuilt from the b-file alone; nothing is proved");
  std::size_t used = 0;
  for (const auto& row : rows) used += row.size();
  if (used < flat.size()) c.notes.push_back(std::to_string(flat.size() - used) + " trailing value(s) in a partial row ignored");
  Report rep;
  rep.add(std::move(c));
  return rep;
}

}  // namespace

BFile parse_bfile(const std::string& text, std::string id) {
  BFile out{std::move(id), {}};
  std::istringstream in(text);
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string index, value, extra;
    fields >> index >> value;
    if (value.empty()) throw BFileParseError(line_no, "expected \"index value\", got \"" + line + "\"");
    if (fields >> extra) throw BFileParseError(line_no, "trailing field \"" + extra + "\"");
    if (!is_integer_token(index)) throw BFileParseError(line_no, "index \"" + index + "\" is not an integer");
    if (!is_integer_token(value)) throw BFileParseError(line_no, "value \"" + value + "\" is not an integer");
    long idx = 0;
    try {
      idx = std::stol(index);
    } catch (const std::out_of_range&) {
      throw BFileParseError(line_no, "index \"" + index + "\" out of range");
    }
    if (!out.entries.empty() && idx != out.entries.back().first + 1) {
      throw BFileFormatError("index gap at line " + std::to_string(line_no) + ": " +
                             std::to_string(out.entries.back().first) + " followed by " + index);
    }
    out.entries.emplace_back(idx, BigInt(value));
  }
  return out;
}

BFile ingest_bfile(const std::string& path, std::string id) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read b-file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_bfile(buf.str(), id.empty() ? default_id(path) : std::move(id));
}

const char* to_string(RowPattern p) {
  switch (p) {
    case RowPattern::Full: return "full";
    case RowPattern::Half: return "half";
    case RowPattern::HalfFromOne: return "half-from-1";
  }
  return "?";
}

RowPattern row_pattern_from_string(const std::string& name) {
  for (RowPattern p : {RowPattern::Full, RowPattern::Half, RowPattern::HalfFromOne}) {
    if (name == to_string(p)) return p;
  }
  throw DomainError("row pattern", "unknown row pattern \"" + name + "\"");
}

std::vector<std::vector<BigInt>> split_rows(const std::vector<BigInt>& values, RowPattern pattern) {
  std::vector<std::vector<BigInt>> rows;
  std::size_t pos = 0;
  for (int n = pattern == RowPattern::HalfFromOne ? 1 : 0;; ++n) {
    std::size_t len = pattern == RowPattern::Full ? static_cast<std::size_t>(n + 1) : static_cast<std::size_t>(n / 2 + 1);
    if (pos + len > values.size()) break;
    rows.emplace_back(values.begin() + static_cast<long>(pos), values.begin() + static_cast<long>(pos + len));
    pos += len;
  }
  return rows;
}

std::optional<RowPattern> detect_row_pattern(const std::vector<BigInt>& values) {
  std::optional<RowPattern> found;
  for (RowPattern p : {RowPattern::Full, RowPattern::Half, RowPattern::HalfFromOne}) {
    auto rows = split_rows(values, p);
    if (rows.size() < 3) continue;
    bool constant_tail = std::all_of(rows.begin(), rows.end(),
                                     [&](const std::vector<BigInt>& r) { return r.back() == rows.front().back(); });
    if (!constant_tail) continue;
    if (found) return std::nullopt;
    found = p;
  }
  return found;
}

Alignment align_jl(const BFile& bfile) {
  if (bfile.entries.empty()) throw AlignmentError("empty b-file");
  const std::size_t window = std::min(kAlignmentWindow, bfile.entries.size());
  std::vector<Alignment> scored;
  for (int first_row : {0, 1}) {
    std::vector<BigInt> expected = flattened_jl(first_row, window);
    std::size_t score = 0;
    for (std::size_t i = 0; i < window; ++i) score += bfile.entries[i].second == expected[i] ? 1 : 0;
    scored.push_back({first_row, score, window});
  }
  std::sort(scored.begin(), scored.end(), [](const Alignment& a, const Alignment& b) { return a.score > b.score; });
  if (2 * scored[0].score <= window || scored[0].score == scored[1].score) {
    throw AlignmentError("no unique starting row matches the first " + std::to_string(window) + " values (best " +
                         std::to_string(scored[0].score) + "/" + std::to_string(window) + ")");
  }
  return scored[0];
}

Report compare_oeis(const BFile& bfile, const std::string& id, std::optional<RowPattern> pattern) {
  if (id == "A245962") return compare_jl(bfile);
  if (id == "A037027" || id == "A073370") return scan_rows(bfile, id, pattern);
  throw DomainError("id", "unsupported sequence id \"" + id + "\" (expected A245962, A037027 or A073370)");
}

}  // namespace jlcert
