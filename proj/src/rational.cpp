#include "cyclemass/rational.hpp"

#include <cctype>

namespace cyclemass {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::size_t first_non_digit(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return i;
}

// cpp_int reads a leading zero as an octal prefix; digit strings here are
// always decimal.
BigInt decimal_int(std::string_view digits) {
    std::size_t nz = digits.find_first_not_of('0');
    if (nz == std::string_view::npos) return BigInt(0);
    return BigInt{std::string(digits.substr(nz))};
}

} // namespace

Rational parse_rational(std::string_view s) {
    std::string_view rest = s;
    std::size_t pos = 0;
    if (rest.empty()) throw parse_error("empty number", 0);

    bool negative = false;
    if (rest.front() == '+' || rest.front() == '-') {
        negative = rest.front() == '-';
        rest.remove_prefix(1);
        ++pos;
    }
    if (rest.empty()) throw parse_error("sign without digits", pos);

    auto slash = rest.find('/');
    if (slash != std::string_view::npos) {
        std::string_view num = rest.substr(0, slash);
        std::string_view den = rest.substr(slash + 1);
        if (!all_digits(num)) throw parse_error("bad numerator", pos + first_non_digit(num));
        if (!all_digits(den)) throw parse_error("bad denominator", pos + slash + 1 + first_non_digit(den));
        BigInt n = decimal_int(num), d = decimal_int(den);
        if (d == 0) throw parse_error("zero denominator", pos + slash + 1);
        Rational r(n, d);
        return negative ? Rational(-r) : r;
    }

    std::string digits;
    long scale = 0; // value = digits * 10^-scale * 10^exponent
    std::size_t i = first_non_digit(rest);
    digits.assign(rest.substr(0, i));
    if (i < rest.size() && rest[i] == '.') {
        std::size_t j = i + 1;
        std::size_t k = j + first_non_digit(rest.substr(j));
        digits.append(rest.substr(j, k - j));
        scale = static_cast<long>(k - j);
        i = k;
    }
    if (digits.empty()) throw parse_error("no digits", pos + i);
    long exponent = 0;
    if (i < rest.size() && (rest[i] == 'e' || rest[i] == 'E')) {
        std::size_t j = i + 1;
        bool eneg = false;
        if (j < rest.size() && (rest[j] == '+' || rest[j] == '-')) {
            eneg = rest[j] == '-';
            ++j;
        }
        std::string_view ed = rest.substr(j);
        if (!all_digits(ed) || ed.size() > 4) throw parse_error("bad exponent", pos + j);
        exponent = std::stol(std::string(ed));
        if (eneg) exponent = -exponent;
        i = rest.size();
    }
    if (i != rest.size()) throw parse_error("trailing characters in number", pos + i);

    Rational r(decimal_int(digits), 1);
    long shift = exponent - scale;
    if (shift > 0)
        r *= rational_pow(Rational(10), shift);
    else if (shift < 0)
        r /= rational_pow(Rational(10), -shift);
    return negative ? Rational(-r) : r;
}

BigInt round_half_even(const Rational& r) {
    BigInt q = rational_floor(r);
    Rational frac = r - Rational(q);
    Rational half(1, 2);
    if (frac < half) return q;
    if (frac > half) return q + 1;
    return (q % 2 == 0) ? q : q + 1;
}

} // namespace cyclemass
