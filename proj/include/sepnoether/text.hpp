#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sepnoether/arith.hpp"

namespace sepnoether::text {

std::string_view trim(std::string_view s);

/// Parses a comma-separated list of integers, optionally wrapped in a single
/// pair of matching brackets: "1,2", "(1,2)", "[1,2]". Throws ErrorKind::Parse.
std::vector<Int> parse_int_list(std::string_view s);

std::vector<std::string_view> split(std::string_view s, char sep);

/// Joins with ',' and wraps in the given brackets.
std::string join(std::span<const Int> values, char open, char close);

}  // namespace sepnoether::text
