#include "kpave/matrix_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace kpave {

namespace {

struct Token {
  long long value;
  int column;
};

std::vector<Token> tokenize(const std::string& line, int line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    long long value = 0;
    const char* first = line.data() + i;
    const char* last = line.data() + j;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
      throw ParseError(line_no, static_cast<int>(i) + 1,
                       "expected an integer, found '" + line.substr(i, j - i) + "'");
    }
    out.push_back({value, static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

std::string_view trim_left(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

std::optional<Label> parse_loose_comment(std::string_view text) {
  constexpr std::string_view kKey = "loose-element";
  if (text.substr(0, kKey.size()) != kKey) return std::nullopt;
  text = trim_left(text.substr(kKey.size()));
  Label value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc()) return std::nullopt;
  return value;
}

}  // namespace

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

MatrixFile parse_matrix(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::optional<FieldSpec> field;
  int rows = -1;
  int cols = -1;
  std::vector<Element> entries;
  int rows_read = 0;
  std::vector<std::string> comments;
  std::optional<Label> loose;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view = trim_left(line);
    if (!view.empty() && view.front() == '#') {
      std::string_view text = view.substr(1);
      if (!text.empty() && text.front() == ' ') text.remove_prefix(1);
      while (!text.empty() && text.back() == '\r') text.remove_suffix(1);
      comments.emplace_back(text);
      if (auto l = parse_loose_comment(text)) loose = l;
      continue;
    }
    auto tokens = tokenize(line, line_no);
    // Blank lines are ignored, except as the rows of an r x 0 matrix.
    if (tokens.empty() && !(field && cols == 0 && rows_read < rows)) continue;

    if (!field) {
      if (tokens.size() != 3)
        throw ParseError(line_no, tokens.front().column, "header must be 'q r n'");
      const long long q = tokens[0].value;
      if (q < 0 || q > 1000 || !FieldSpec::is_supported(static_cast<int>(q))) {
        throw ParseError(line_no, tokens[0].column,
                         "unsupported order " + std::to_string(q) +
                             "; supported orders are 2, 3, 4, 5, 7, 8, 9");
      }
      for (int i = 1; i < 3; ++i) {
        if (tokens[i].value < 0 || tokens[i].value > 1'000'000)
          throw ParseError(line_no, tokens[i].column, "bad matrix dimension");
      }
      field = FieldSpec::make(static_cast<int>(q));
      rows = static_cast<int>(tokens[1].value);
      cols = static_cast<int>(tokens[2].value);
      entries.reserve(static_cast<std::size_t>(rows) * cols);
      continue;
    }

    if (rows_read == rows) throw ParseError(line_no, tokens.front().column, "extra row");
    if (static_cast<int>(tokens.size()) != cols) {
      const int col = tokens.size() > static_cast<std::size_t>(cols)
                          ? tokens[cols].column
                          : static_cast<int>(line.size()) + 1;
      throw ParseError(line_no, col,
                       "row has " + std::to_string(tokens.size()) + " entries, expected " +
                           std::to_string(cols));
    }
    for (const Token& t : tokens) {
      if (!field->contains(static_cast<int>(t.value)) || t.value < 0 || t.value >= field->order()) {
        throw ParseError(line_no, t.column,
                         "entry " + std::to_string(t.value) + " is not an element of " +
                             field->name());
      }
      entries.push_back(static_cast<Element>(t.value));
    }
    ++rows_read;
  }

  if (!field) throw ParseError(line_no + 1, 1, "missing header 'q r n'");
  if (rows_read != rows) {
    throw ParseError(line_no + 1, 1,
                     "expected " + std::to_string(rows) + " rows, found " +
                         std::to_string(rows_read));
  }
  MatroidRep m(*field, rows, cols, std::move(entries));
  if (loose && (*loose < 0 || *loose >= cols)) loose.reset();
  return MatrixFile{std::move(m), std::move(comments), loose};
}

MatrixFile parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_matrix(in);
}

MatrixFile read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return parse_matrix(in);
}

std::string serialize_matrix(const MatroidRep& m, const std::vector<std::string>& comments) {
  std::string out = std::to_string(m.field().order()) + " " + std::to_string(m.rows()) + " " +
                    std::to_string(m.size()) + "\n";
  for (const auto& c : comments) out += "# " + c + "\n";
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.size(); ++c) {
      if (c) out += ' ';
      out += std::to_string(m.at(r, c));
    }
    out += '\n';
  }
  return out;
}

void write_matrix_file(const std::filesystem::path& path, const MatroidRep& m,
                       const std::vector<std::string>& comments) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << serialize_matrix(m, comments);
}

}  // namespace kpave
