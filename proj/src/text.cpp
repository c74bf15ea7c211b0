#include "posetdim/text.hpp"

#include <cctype>
#include <charconv>

namespace posetdim::text {

std::vector<Line> significant_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = raw.find_last_not_of(" \t\r");
    Line line{number, raw.substr(first, last - first + 1), {}};
    std::istringstream tokens(line.content);
    for (std::string t; tokens >> t;) line.tokens.push_back(t);
    lines.push_back(std::move(line));
  }
  return lines;
}

int parse_index(const std::string& token, std::size_t line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0)
    throw ParseError("expected a non-negative integer, got '" + token + "'", line);
  return value;
}

std::string rest_after_tokens(const std::string& content, std::size_t skip) {
  std::size_t pos = 0;
  for (std::size_t i = 0; i < skip; ++i) {
    while (pos < content.size() && std::isspace(static_cast<unsigned char>(content[pos]))) ++pos;
    while (pos < content.size() && !std::isspace(static_cast<unsigned char>(content[pos]))) ++pos;
  }
  while (pos < content.size() && std::isspace(static_cast<unsigned char>(content[pos]))) ++pos;
  return content.substr(pos);
}

}  // namespace posetdim::text
