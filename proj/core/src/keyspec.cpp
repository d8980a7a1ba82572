#include "ppsbreak/keyspec.hpp"

#include <cctype>
#include <cstdlib>

#include "ppsbreak/error.hpp"

namespace ppsbreak {

namespace {

struct DecimalParts {
    std::string int_part;   // may be empty ("" in ".5")
    std::string frac_part;  // may be empty
    double value = 0.0;
};

// Plain decimal notation only: digits with an optional single point,
// no sign, no exponent. At least one digit overall.
DecimalParts parse_decimal(const std::string& text, const char* field) {
    if (text.empty()) {
        throw KeyFormatError(std::string(field) + " must not be empty");
    }
    DecimalParts parts;
    bool seen_point = false;
    bool seen_digit = false;
    for (char c : text) {
        if (c == '.') {
            if (seen_point) {
                throw KeyFormatError(std::string(field) + ": more than one decimal point");
            }
            seen_point = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            seen_digit = true;
            (seen_point ? parts.frac_part : parts.int_part).push_back(c);
        } else {
            throw KeyFormatError(std::string(field) +
                                 ": plain decimal notation required, got '" + text + "'");
        }
    }
    if (!seen_digit) {
        throw KeyFormatError(std::string(field) + ": no digits in '" + text + "'");
    }
    parts.value = std::strtod(text.c_str(), nullptr);
    return parts;
}

// 15-entry digit list: one integer-part digit then the first 14 fractional
// digits, zero-padded. For K the integer-part digit is the one immediately
// left of the decimal point.
std::array<std::uint8_t, 15> digit_list(const DecimalParts& parts, bool last_int_digit,
                                        const char* field) {
    std::array<std::uint8_t, 15> digits{};
    std::string int_digits = parts.int_part;
    // Strip leading zeros so "03.9" and "3.9" agree.
    const std::size_t first_nonzero = int_digits.find_first_not_of('0');
    int_digits = first_nonzero == std::string::npos ? "" : int_digits.substr(first_nonzero);

    if (int_digits.empty()) {
        digits[0] = 0;
    } else if (last_int_digit) {
        digits[0] = static_cast<std::uint8_t>(int_digits.back() - '0');
    } else if (int_digits.size() == 1) {
        digits[0] = static_cast<std::uint8_t>(int_digits.front() - '0');
    } else {
        throw KeyFormatError(std::string(field) + ": integer part must be a single digit");
    }
    for (std::size_t i = 0; i < 14; ++i) {
        digits[i + 1] = i < parts.frac_part.size()
                            ? static_cast<std::uint8_t>(parts.frac_part[i] - '0')
                            : 0;
    }
    return digits;
}

} // namespace

KeySpec split_key_flag(std::string_view flag) {
    KeySpec spec;
    std::string* fields[4] = {&spec.x0, &spec.y0, &spec.k, &spec.n};
    std::size_t field = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= flag.size(); ++i) {
        if (i == flag.size() || flag[i] == ',') {
            if (field >= 4) {
                throw KeyFormatError("key must have exactly four comma-separated fields");
            }
            *fields[field++] = std::string(flag.substr(start, i - start));
            start = i + 1;
        }
    }
    if (field != 4) {
        throw KeyFormatError("key must have exactly four comma-separated fields");
    }
    return spec;
}

SecretKey parse_key(const KeySpec& spec) {
    const DecimalParts x0 = parse_decimal(spec.x0, "x0");
    const DecimalParts y0 = parse_decimal(spec.y0, "y0");
    const DecimalParts k = parse_decimal(spec.k, "K");

    const DecimalParts n_parts = parse_decimal(spec.n, "N");
    if (!n_parts.frac_part.empty()) {
        throw KeyFormatError("N must be an integer");
    }

    if (n_parts.value <= 100.0 || n_parts.value >= 1100.0) {
        throw KeyFormatError("N must satisfy 100 < N < 1100");
    }

    SecretKey key;
    key.x0 = x0.value;
    key.y0 = y0.value;
    key.k = k.value;
    key.n = static_cast<int>(n_parts.value);

    // Range-check before digit extraction so errors name the violated bound.
    validate_secret_key(key);

    key.x0_digits = digit_list(x0, /*last_int_digit=*/false, "x0");
    key.y0_digits = digit_list(y0, /*last_int_digit=*/false, "y0");
    key.k_digits = digit_list(k, /*last_int_digit=*/true, "K");
    return key;
}

} // namespace ppsbreak
