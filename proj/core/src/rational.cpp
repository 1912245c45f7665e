#include "morsegraph/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace morsegraph {

Rational rational_from_decimal(std::string_view text) {
    std::size_t i = 0;
    const std::size_t n = text.size();
    bool negative = false;
    if (i < n && (text[i] == '+' || text[i] == '-')) {
        negative = (text[i] == '-');
        ++i;
    }

    BigInt mantissa = 0;
    long frac_digits = 0;
    bool any_digit = false;
    for (; i < n && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
        mantissa = mantissa * 10 + (text[i] - '0');
        any_digit = true;
    }
    if (i < n && text[i] == '.') {
        ++i;
        for (; i < n && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
            mantissa = mantissa * 10 + (text[i] - '0');
            ++frac_digits;
            any_digit = true;
        }
    }
    long exponent = 0;
    if (any_digit && i < n && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        bool exp_neg = false;
        if (i < n && (text[i] == '+' || text[i] == '-')) {
            exp_neg = (text[i] == '-');
            ++i;
        }
        bool exp_digit = false;
        for (; i < n && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
            exponent = exponent * 10 + (text[i] - '0');
            exp_digit = true;
            if (exponent > 100000) throw std::invalid_argument("exponent out of range: " + std::string(text));
        }
        if (!exp_digit) throw std::invalid_argument("malformed exponent: " + std::string(text));
        if (exp_neg) exponent = -exponent;
    }
    if (!any_digit || i != n) {
        throw std::invalid_argument("malformed decimal value: \"" + std::string(text) + "\"");
    }

    BigInt num = negative ? BigInt(-mantissa) : mantissa;
    BigInt den = 1;
    long shift = exponent - frac_digits;
    for (long k = 0; k < shift; ++k) num *= 10;
    for (long k = 0; k > shift; --k) den *= 10;
    return Rational(num, den);
}

std::string rational_to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace morsegraph
