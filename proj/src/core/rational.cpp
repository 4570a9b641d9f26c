#include "rational.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace ethdinner {
namespace {

constexpr __int128 kWideLimit = static_cast<__int128>(1) << 120;

[[noreturn]] void bad(std::string_view text, const char* why) {
    throw std::invalid_argument("cannot parse rational '" + std::string(text) + "': " + why);
}

std::int64_t parse_int(std::string_view whole, std::string_view text) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec == std::errc::result_out_of_range) bad(whole, "integer out of range");
    if (ec != std::errc() || p != text.data() + text.size() || text.empty()) bad(whole, "not an integer");
    return v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) bad(text, "empty");

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::int64_t n = parse_int(text, s.substr(0, slash));
        std::int64_t d = parse_int(text, s.substr(slash + 1));
        if (d == 0) bad(text, "zero denominator");
        return Rational(n, d);
    }

    bool negative = false;
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') {
        negative = s[i] == '-';
        ++i;
    }
    __int128 mantissa = 0;
    int scale = 0;  // value = mantissa * 10^scale
    bool any_digit = false;
    bool seen_point = false;
    for (; i < s.size(); ++i) {
        char ch = s[i];
        if (ch >= '0' && ch <= '9') {
            any_digit = true;
            mantissa = mantissa * 10 + (ch - '0');
            if (mantissa > kWideLimit) bad(text, "too many digits");
            if (seen_point) --scale;
        } else if (ch == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!any_digit) bad(text, "no digits");
    if (i < s.size()) {
        if (s[i] != 'e' && s[i] != 'E') bad(text, "unexpected character");
        std::string_view exp = s.substr(i + 1);
        if (!exp.empty() && exp.front() == '+') exp.remove_prefix(1);
        std::int64_t e = parse_int(text, exp);
        if (e > 40 || e < -40) bad(text, "exponent out of range");
        scale += static_cast<int>(e);
    }
    __int128 num = negative ? -mantissa : mantissa;
    __int128 den = 1;
    for (; scale > 0; --scale) {
        num *= 10;
        if (num > kWideLimit || num < -kWideLimit) bad(text, "value out of range");
    }
    for (; scale < 0; ++scale) {
        den *= 10;
        if (den > kWideLimit) bad(text, "value out of range");
    }
    try {
        return from_wide(num, den);
    } catch (const std::overflow_error&) {
        bad(text, "value out of range");
    }
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::to_exact_text() const {
    if (den_ == 1) return std::to_string(num_);
    std::int64_t d = den_;
    int twos = 0;
    int fives = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++twos;
    }
    while (d % 5 == 0) {
        d /= 5;
        ++fives;
    }
    if (d != 1) return to_string();
    int digits = std::max(twos, fives);
    // Scale numerator so that the denominator becomes 10^digits.
    __int128 scaled = num_;
    for (int k = twos; k < digits; ++k) scaled *= 2;
    for (int k = fives; k < digits; ++k) scaled *= 5;
    bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    std::string body;
    while (scaled > 0) {
        body.insert(body.begin(), static_cast<char>('0' + static_cast<int>(scaled % 10)));
        scaled /= 10;
    }
    while (body.size() <= static_cast<std::size_t>(digits)) body.insert(body.begin(), '0');
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    return negative ? "-" + body : body;
}

}  // namespace ethdinner
