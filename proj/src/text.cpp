#include "sepnoether/text.hpp"

#include <cctype>
#include <charconv>

#include "sepnoether/error.hpp"

namespace sepnoether::text {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::vector<Int> parse_int_list(std::string_view s) {
  s = trim(s);
  if (s.size() >= 2 && ((s.front() == '(' && s.back() == ')') || (s.front() == '[' && s.back() == ']')))
    s = trim(s.substr(1, s.size() - 2));
  if (s.empty()) fail(ErrorKind::Parse, "empty integer list");
  std::vector<Int> out;
  for (std::string_view part : split(s, ',')) {
    part = trim(part);
    if (!part.empty() && part.front() == '+') part.remove_prefix(1);
    Int value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size())
      fail(ErrorKind::Parse, "not an integer: '" + std::string(part) + "'");
    out.push_back(value);
  }
  return out;
}

std::string join(std::span<const Int> values, char open, char close) {
  std::string out(1, open);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  out += close;
  return out;
}

}  // namespace sepnoether::text
