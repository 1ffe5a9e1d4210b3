#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kpave/matroid.hpp"

namespace kpave {

/// Matrix file:
///
///   q r n
///   # optional comment lines, anywhere
///   r rows of n whitespace-separated integers in [0, q)
///
/// Entries use the canonical field encoding. Comment text is kept verbatim
/// (without the leading "# "); a `# loose-element <index>` comment marks the
/// distinguished element of an extremal construction.
struct MatrixFile {
  MatroidRep matroid;
  std::vector<std::string> comments;
  std::optional<Label> loose_element;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

MatrixFile parse_matrix(std::istream& in);
MatrixFile parse_matrix(std::string_view text);
MatrixFile read_matrix_file(const std::filesystem::path& path);

/// Header, then comments, then rows; single spaces, newline-terminated.
std::string serialize_matrix(const MatroidRep& m, const std::vector<std::string>& comments = {});
void write_matrix_file(const std::filesystem::path& path, const MatroidRep& m,
                       const std::vector<std::string>& comments = {});

}  // namespace kpave
