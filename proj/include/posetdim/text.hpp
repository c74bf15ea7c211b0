#pragma once

#include <cstddef>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "posetdim/errors.hpp"

namespace posetdim::text {

// Reads significant lines: strips `#` comments and surrounding blanks, skips
// empty lines, remembers the 1-based line number of each kept line.
struct Line {
  std::size_t number;
  std::string content;
  std::vector<std::string> tokens;
};

std::vector<Line> significant_lines(std::istream& in);

// Parses a non-negative decimal integer token; throws ParseError otherwise.
int parse_index(const std::string& token, std::size_t line);

// Everything after the first `skip` tokens, with inner spacing preserved.
std::string rest_after_tokens(const std::string& content, std::size_t skip);

}  // namespace posetdim::text
