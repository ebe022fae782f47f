// Copyright 2026 The pdqubo authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include "pdqubo/rational.hpp"

#include <charconv>
#include <cctype>
#include <cmath>
#include <cstdlib>

#include "pdqubo/errors.hpp"

namespace pdqubo {

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) {
        throw DomainError("cannot convert non-finite double to a rational");
    }
    return Rational(x);
}

Rational rational_from_decimal(std::string_view text) {
    const auto fail = [&](const char* why) -> Rational {
        throw ParseError("bad decimal literal '" + std::string(text) + "': " + why);
    };

    std::size_t pos = 0;
    const auto peek = [&]() -> int {
        return pos < text.size() ? static_cast<unsigned char>(text[pos]) : -1;
    };

    bool negative = false;
    if (peek() == '+' || peek() == '-') {
        negative = (text[pos] == '-');
        ++pos;
    }

    BigInt digits = 0;
    long frac_digits = 0;
    bool any_digit = false;
    while (std::isdigit(peek())) {
        digits = digits * 10 + (text[pos] - '0');
        any_digit = true;
        ++pos;
    }
    if (peek() == '.') {
        ++pos;
        while (std::isdigit(peek())) {
            digits = digits * 10 + (text[pos] - '0');
            ++frac_digits;
            any_digit = true;
            ++pos;
        }
    }
    if (!any_digit) return fail("no digits");

    long exponent = 0;
    if (peek() == 'e' || peek() == 'E') {
        ++pos;
        bool exp_negative = false;
        if (peek() == '+' || peek() == '-') {
            exp_negative = (text[pos] == '-');
            ++pos;
        }
        if (!std::isdigit(peek())) return fail("empty exponent");
        while (std::isdigit(peek())) {
            exponent = exponent * 10 + (text[pos] - '0');
            if (exponent > 100000) return fail("exponent out of range");
            ++pos;
        }
        if (exp_negative) exponent = -exponent;
    }
    if (pos != text.size()) return fail("trailing characters");

    Rational value(digits);
    const long shift = exponent - frac_digits;
    if (shift > 0) {
        value *= Rational(boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(shift)));
    } else if (shift < 0) {
        value /= Rational(boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(-shift)));
    }
    return negative ? Rational(-value) : value;
}

std::string decimal_string(const Rational& r) {
    BigInt num = numerator(r);
    BigInt den = denominator(r);

    bool negative = num < 0;
    if (negative) num = -num;
    if (num == 0) return "0";

    // Count the 2s and 5s in the denominator; anything else means a
    // non-terminating expansion.
    BigInt d = den;
    unsigned twos = 0, fives = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++twos;
    }
    while (d % 5 == 0) {
        d /= 5;
        ++fives;
    }
    if (d != 1) return double_string(to_double(r));

    const unsigned places = std::max(twos, fives);
    // Scale so that num / den == scaled / 10^places.
    BigInt scaled = num * boost::multiprecision::pow(BigInt(2), places - twos) *
                    boost::multiprecision::pow(BigInt(5), places - fives);

    std::string body = scaled.str();
    std::string out = negative ? "-" : "";
    if (places == 0) {
        out += body;
        return out;
    }
    if (body.size() <= places) body.insert(0, places + 1 - body.size(), '0');
    std::string int_part = body.substr(0, body.size() - places);
    std::string frac_part = body.substr(body.size() - places);
    while (!frac_part.empty() && frac_part.back() == '0') frac_part.pop_back();
    out += int_part;
    if (!frac_part.empty()) {
        out += '.';
        out += frac_part;
    }
    return out;
}

std::string double_string(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

Rational rational_pow(const Rational& r, unsigned e) {
    Rational acc(1);
    Rational base = r;
    while (e > 0) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

}  // namespace pdqubo
