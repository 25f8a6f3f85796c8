#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace qsplice {

enum class Currency : uint8_t { USD, Credits };

const char* currency_name(Currency c);

// Exact money: integer micro-units (1e-6) plus a currency tag. Mixing
// currencies throws std::invalid_argument; there is no floating point in any
// arithmetic path.
struct Money {
    int64_t micros = 0;
    Currency currency = Currency::Credits;

    static Money from_micros(int64_t micros, Currency c);
    // Parses "2", "0.30", "0.00145"; rejects > 6 fractional digits.
    static Money parse(std::string_view text, Currency c);

    Money operator+(Money rhs) const;
    Money operator-(Money rhs) const;
    Money operator*(int64_t n) const;
    Money& operator+=(Money rhs);
    bool operator==(const Money&) const = default;
    bool operator<(Money rhs) const;
    bool operator<=(Money rhs) const;
    bool operator>(Money rhs) const { return rhs < *this; }
    bool operator>=(Money rhs) const { return rhs <= *this; }

    // Minimal decimal form with at least min_frac digits: "1.50", "0.000141".
    std::string to_string(int min_frac = 2) const;
    // Fixed number of fractional digits, rounded half up: "2.25", "10.50".
    std::string to_fixed(int frac_digits) const;
};

// round_half_up(num / den * 10^digits) as an integer, den > 0. Used for every
// displayed cell so display rounding never depends on binary floating point.
int64_t rounded_scaled_ratio(int64_t num, int64_t den, int digits);

// Decimal rendering of num/den with `digits` fractional digits, half-up.
std::string ratio_to_decimal(int64_t num, int64_t den, int digits);

}  // namespace qsplice
