// The .smat interchange format: "n r" on the first line, then n rows of n
// integers. '#' starts a comment line; readers also tolerate blank lines.
#pragma once

#include "algenus/seifert.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace algenus {

// Parse failure with 1-based line/column position.
class SmatError : public std::runtime_error {
 public:
  SmatError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

// Throws SmatError on grammar problems and std::invalid_argument when the
// matrix violates the SeifertPair invariants.
SeifertPair parse_smat(std::string_view text);

// Exact writer form: "n r\n" followed by n space-separated rows.
std::string format_smat(const SeifertPair& s);

SeifertPair read_smat_file(const std::string& path);

}  // namespace algenus
