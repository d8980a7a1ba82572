#ifndef PPSBREAK_KEYSPEC_HPP
#define PPSBREAK_KEYSPEC_HPP

#include <string>
#include <string_view>

#include "ppsbreak/chaos.hpp"

namespace ppsbreak {

/// The four key components exactly as typed by the user, plain decimal
/// notation (no sign, no exponent). x0/y0/K shorter than 15 significant
/// digits are right-padded with zeros for the digit schedule.
struct KeySpec {
    std::string x0;
    std::string y0;
    std::string k;
    std::string n;
};

/// Splits a "x0,y0,K,N" command-line value into its four fields.
KeySpec split_key_flag(std::string_view flag);

/// Parses and validates the four decimal strings into a SecretKey: float
/// values from the strings plus the exact 15-entry digit lists. Out-of-range
/// values raise KeyFormatError naming the violated bound.
SecretKey parse_key(const KeySpec& spec);

} // namespace ppsbreak

#endif
