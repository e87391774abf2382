#include "algenus/smat.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace algenus {

namespace {

std::string position_message(std::size_t line, std::size_t column,
                             const std::string& message) {
  std::ostringstream os;
  os << "line " << line << ", column " << column << ": " << message;
  return os.str();
}

struct Token {
  std::string text;
  std::size_t line, column;
};

// Whitespace-splits content lines, dropping blank and comment lines.
std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++lineno;
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      if (line[i] == '#') break;  // comment to end of line
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
        ++j;
      tokens.push_back(Token{std::string(line.substr(i, j - i)), lineno, i + 1});
      i = j;
    }
    if (!tokens.empty()) lines.push_back(std::move(tokens));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

Int parse_integer(const Token& tok) {
  const std::string& s = tok.text;
  std::size_t i = s[0] == '-' || s[0] == '+' ? 1 : 0;
  if (i == s.size())
    throw SmatError(tok.line, tok.column, "non-integer token '" + s + "'");
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw SmatError(tok.line, tok.column, "non-integer token '" + s + "'");
  return Int(s);
}

}  // namespace

SmatError::SmatError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(position_message(line, column, message)),
      line_(line),
      column_(column) {}

SeifertPair parse_smat(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw SmatError(1, 1, "missing header line 'n r'");
  const auto& header = lines.front();
  if (header.size() != 2)
    throw SmatError(header.front().line, header.front().column,
                    "header must be exactly 'n r'");
  Int n_big = parse_integer(header[0]);
  Int r_big = parse_integer(header[1]);
  if (n_big < 0 || n_big > 4096)
    throw SmatError(header[0].line, header[0].column, "matrix size out of range");
  if (r_big < 1 || r_big > 4096)
    throw SmatError(header[1].line, header[1].column, "component count out of range");
  auto n = static_cast<std::size_t>(n_big);
  auto r = static_cast<int>(r_big);

  if (lines.size() != n + 1) {
    if (lines.size() < n + 1)
      throw SmatError(header[0].line, header[0].column,
                      "expected " + std::to_string(n) + " matrix rows");
    const auto& extra = lines[n + 1].front();
    throw SmatError(extra.line, extra.column, "unexpected trailing content");
  }

  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = lines[i + 1];
    if (row.size() != n)
      throw SmatError(row.front().line, row.front().column,
                      "row has " + std::to_string(row.size()) + " entries, expected " +
                          std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = parse_integer(row[j]);
  }
  return SeifertPair(std::move(m), r);
}

std::string format_smat(const SeifertPair& s) {
  std::ostringstream os;
  os << s.size() << ' ' << s.components() << '\n';
  os << s.matrix().str();
  return os.str();
}

SeifertPair read_smat_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_smat(buf.str());
}

}  // namespace algenus
