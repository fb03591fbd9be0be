#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fixfree/codec.hpp"
#include "fixfree/length_vector.hpp"

namespace fixfree {

// Text formats. All of them treat '#' through end of line as a comment and
// ignore blank lines. Malformed input throws ParseError naming the line.

// Whitespace-separated nonnegative integers k1 ... kn.
LengthVector parse_length_vector(std::string_view text);

// Lines "symbol<TAB>bitstring". Duplicate symbols or words are rejected;
// fix-freeness is not checked here (CodeTable does that).
std::vector<CodeTableEntry> parse_code_table(std::string_view text);
std::string format_code_table(std::span<const CodeTableEntry> entries);

// Whitespace-separated symbol tokens.
std::vector<std::string> parse_message(std::string_view text);
// Tokens joined by single spaces with a trailing newline; empty for an empty
// message.
std::string format_message(std::span<const std::string> msg);

// Lines "symbol<TAB>probability" with a decimal probability. Only the syntax
// is checked; value validation belongs to Distribution.
std::vector<std::pair<std::string, double>> parse_distribution(std::string_view text);

}  // namespace fixfree
