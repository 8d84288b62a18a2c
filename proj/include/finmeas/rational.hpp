#ifndef FINMEAS_RATIONAL_HPP
#define FINMEAS_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>
#include <utility>

#include "finmeas/errors.hpp"

namespace finmeas {

// Exact arbitrary-precision arithmetic. All weights, coordinates, and bounds
// in the library are Rat; no floating point appears anywhere in the core.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Canonical constructor: lowest terms, positive denominator. Rejects q = 0.
inline Rat make_rational(Int num, Int den) {
    if (den == 0) {
        throw MalformedRational("zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(std::move(num), std::move(den));
}

inline Rat rat_abs(const Rat& q) {
    return q < 0 ? Rat(-q) : q;
}

inline std::string to_string(const Rat& q) {
    return q.str();
}

namespace detail {

inline Int parse_integer_literal(std::string_view text) {
    if (text.empty()) {
        throw MalformedRational("empty integer literal");
    }
    std::size_t i = (text[0] == '+' || text[0] == '-') ? 1 : 0;
    if (i == text.size()) {
        throw MalformedRational("sign without digits");
    }
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw MalformedRational("invalid digit in '" + std::string(text) + "'");
        }
    }
    // the big-integer reader rejects an explicit '+'
    if (text[0] == '+') text.remove_prefix(1);
    return Int(std::string(text));
}

} // namespace detail

// Accepts "p", "-p", "p/q" with optional sign on either part.
inline Rat parse_rational(std::string_view text) {
    const std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rat(detail::parse_integer_literal(text));
    }
    if (text.find('/', slash + 1) != std::string_view::npos) {
        throw MalformedRational("more than one '/' in '" + std::string(text) + "'");
    }
    Int num = detail::parse_integer_literal(text.substr(0, slash));
    Int den = detail::parse_integer_literal(text.substr(slash + 1));
    return make_rational(std::move(num), std::move(den));
}

// Rounded decimal rendering (half away from zero). Presentation only; the
// core never consumes decimal strings.
inline std::string decimal_string(const Rat& q, unsigned digits) {
    Int scale = 1;
    for (unsigned i = 0; i < digits; ++i) {
        scale *= 10;
    }
    Int num = numerator(q);
    Int den = denominator(q);
    const bool negative = num < 0;
    if (negative) {
        num = -num;
    }
    Int scaled = num * scale;
    Int quot = scaled / den;
    Int rem = scaled % den;
    if (2 * rem >= den) {
        ++quot;
    }
    Int whole = quot / scale;
    Int frac = quot % scale;
    std::string out = (negative && quot != 0) ? "-" : "";
    out += whole.str();
    if (digits > 0) {
        std::string f = frac.str();
        out += "." + std::string(digits - f.size(), '0') + f;
    }
    return out;
}

} // namespace finmeas

#endif // FINMEAS_RATIONAL_HPP
