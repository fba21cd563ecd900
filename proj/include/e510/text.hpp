#pragma once

#include <string>
#include <utility>
#include <vector>

#include "e510/rational.hpp"

namespace e510::text {

// Splits "a - 2 b + 1/2 c" into signed terms {(1,"a"),(-1,"2 b"),(1,"1/2 c")}.
// Accepts the unicode minus sign as well as '-'.
std::vector<std::pair<int, std::string>> split_terms(const std::string& s);

// Whitespace tokens; '*' and the middle dot act as separators too.
std::vector<std::string> tokens(const std::string& s);

bool is_rational_token(const std::string& tok);

std::string trim(const std::string& s);

// Parses "0,1,2,3" or "(0,1,2,3)" into four integers.
std::vector<int> parse_int_list(const std::string& s);

}  // namespace e510::text
