#include "qsplice/money.hpp"

#include <cctype>
#include <stdexcept>

namespace qsplice {

namespace {

constexpr int64_t kScale = 1'000'000;

void require_same(Currency a, Currency b, const char* what) {
    if (a != b) {
        throw std::invalid_argument(std::string("currency mismatch in ") + what);
    }
}

int64_t pow10(int n) {
    int64_t v = 1;
    for (int i = 0; i < n; i++) v *= 10;
    return v;
}

}  // namespace

const char* currency_name(Currency c) {
    switch (c) {
        case Currency::USD: return "USD";
        case Currency::Credits: return "credits";
    }
    return "?";
}

Money Money::from_micros(int64_t micros, Currency c) { return Money{micros, c}; }

Money Money::parse(std::string_view text, Currency c) {
    if (text.empty()) throw std::invalid_argument("money: empty amount");
    size_t i = 0;
    bool neg = false;
    if (text[0] == '-' || text[0] == '+') {
        neg = text[0] == '-';
        i = 1;
    }
    int64_t units = 0;
    size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        units = units * 10 + (text[i] - '0');
        if (units > 9'000'000'000'000LL) throw std::invalid_argument("money: amount too large");
        i++;
        digits++;
    }
    int64_t frac = 0;
    int frac_digits = 0;
    if (i < text.size() && text[i] == '.') {
        i++;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            if (frac_digits == 6) {
                throw std::invalid_argument(
                    "money: more than 6 fractional digits cannot be represented exactly");
            }
            frac = frac * 10 + (text[i] - '0');
            frac_digits++;
            i++;
            digits++;
        }
    }
    if (i != text.size() || digits == 0) {
        throw std::invalid_argument("money: malformed amount '" + std::string(text) + "'");
    }
    int64_t micros = units * kScale + frac * pow10(6 - frac_digits);
    return Money{neg ? -micros : micros, c};
}

Money Money::operator+(Money rhs) const {
    require_same(currency, rhs.currency, "addition");
    return Money{micros + rhs.micros, currency};
}

Money Money::operator-(Money rhs) const {
    require_same(currency, rhs.currency, "subtraction");
    return Money{micros - rhs.micros, currency};
}

Money Money::operator*(int64_t n) const { return Money{micros * n, currency}; }

Money& Money::operator+=(Money rhs) {
    *this = *this + rhs;
    return *this;
}

bool Money::operator<(Money rhs) const {
    require_same(currency, rhs.currency, "comparison");
    return micros < rhs.micros;
}

bool Money::operator<=(Money rhs) const {
    require_same(currency, rhs.currency, "comparison");
    return micros <= rhs.micros;
}

std::string Money::to_string(int min_frac) const {
    int64_t abs = micros < 0 ? -micros : micros;
    int64_t units = abs / kScale;
    int64_t frac = abs % kScale;
    char buf[8];
    std::string digits;
    for (int i = 5; i >= 0; i--) {
        buf[5 - i] = static_cast<char>('0' + (frac / pow10(i)) % 10);
    }
    digits.assign(buf, 6);
    while (static_cast<int>(digits.size()) > min_frac && digits.back() == '0') digits.pop_back();
    std::string out = micros < 0 ? "-" : "";
    out += std::to_string(units);
    if (!digits.empty()) {
        out += ".";
        out += digits;
    }
    return out;
}

std::string Money::to_fixed(int frac_digits) const {
    return ratio_to_decimal(micros, kScale, frac_digits);
}

int64_t rounded_scaled_ratio(int64_t num, int64_t den, int digits) {
    if (den <= 0) throw std::invalid_argument("rounded_scaled_ratio: denominator must be > 0");
    bool neg = num < 0;
    __int128 n = neg ? -static_cast<__int128>(num) : static_cast<__int128>(num);
    __int128 scaled = n;
    for (int i = 0; i < digits; i++) scaled *= 10;
    // Half away from zero: published tables round 0.0005625 up to 0.000563.
    __int128 q = (2 * scaled + den) / (2 * static_cast<__int128>(den));
    int64_t out = static_cast<int64_t>(q);
    return neg ? -out : out;
}

std::string ratio_to_decimal(int64_t num, int64_t den, int digits) {
    int64_t scaled = rounded_scaled_ratio(num, den, digits);
    bool neg = scaled < 0;
    int64_t abs = neg ? -scaled : scaled;
    int64_t scale = pow10(digits);
    std::string out = neg ? "-" : "";
    out += std::to_string(abs / scale);
    if (digits > 0) {
        std::string frac = std::to_string(abs % scale);
        out += ".";
        out += std::string(static_cast<size_t>(digits) - frac.size(), '0');
        out += frac;
    }
    return out;
}

}  // namespace qsplice
