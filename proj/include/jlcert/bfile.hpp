#pragma once
// OEIS b-files: plain text "index value" lines with '#' comments. Ingestion
// plus comparison against the triangle (A245962) or empirical row scans
// (A037027, A073370).
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jlcert/exactnum.hpp"
#include "jlcert/report.hpp"

namespace jlcert {

/// Malformed line; line() is 1-based.
class BFileParseError : public std::runtime_error {
 public:
  BFileParseError(long line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  long line() const noexcept { return line_; }

 private:
  long line_;
};

/// Indices not strictly consecutive.
class BFileFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No unique linearization of the triangle matches the b-file.
class AlignmentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BFile {
  std::string id;
  std::vector<std::pair<long, BigInt>> entries;  // consecutive indices
};

BFile parse_bfile(const std::string& text, std::string id = "");
/// Reads a file; the id defaults to the "bNNNNNN" stem mapped to "ANNNNNN".
BFile ingest_bfile(const std::string& path, std::string id = "");

/// How a flattened triangle splits into rows.
enum class RowPattern {
  Full,        // lengths 1, 2, 3, ...
  Half,        // lengths 1, 1, 2, 2, 3, ... (k = 0..floor(n/2) from row 0)
  HalfFromOne, // lengths 1, 2, 2, 3, 3, ... (k = 0..floor(n/2) from row 1)
};
const char* to_string(RowPattern p);
RowPattern row_pattern_from_string(const std::string& name);

/// Complete rows under a pattern; a trailing partial row is dropped.
std::vector<std::vector<BigInt>> split_rows(const std::vector<BigInt>& values, RowPattern pattern);

/// The pattern whose rows all end in the same value; nullopt if none or
/// several do.
std::optional<RowPattern> detect_row_pattern(const std::vector<BigInt>& values);

/// Number of leading values that the alignment step scores.
inline constexpr std::size_t kAlignmentWindow = 20;

struct Alignment {
  int first_row;       // triangle row matched to the first b-file entry
  std::size_t score;   // agreements within the window
  std::size_t window;
};

/// Scores starting rows 0 and 1 of the flattened triangle (row 0 is the
/// single Lucas value 2). The best candidate must be unique and agree on a
/// strict majority of the window.
Alignment align_jl(const BFile& bfile);

/// id must be A245962, A037027 or A073370. A pattern override applies to the
/// latter two only.
Report compare_oeis(const BFile& bfile, const std::string& id,
                    std::optional<RowPattern> pattern = std::nullopt);

}  // namespace jlcert
