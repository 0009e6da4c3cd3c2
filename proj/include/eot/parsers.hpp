#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "eot/decimal.hpp"

namespace eot {

/// First maximal numeric token in the text, after stripping currency symbols,
/// digit-triple thousands separators and any trailing '%'. Sign and decimal
/// point are honored. Absence of a number is a valid outcome.
std::optional<Decimal> parse_number(std::string_view text);

/// First standalone letter in A..max_letter ("(D)", "D)", "D.", bare "D"),
/// case-insensitive; letters embedded inside words are ignored.
/// max_letter must be in 'B'..'E'.
std::optional<char> parse_option(std::string_view text, char max_letter);

/// First whole-word "yes"/"no", case-insensitive.
std::optional<bool> parse_yesno(std::string_view text);

/// Content of the last complete double-quoted span, else the last maximal
/// alphabetic token; lowercased, surrounding punctuation stripped.
std::optional<std::string> parse_string(std::string_view text);

} // namespace eot
