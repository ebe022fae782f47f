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

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace pdqubo {

/// Model coefficients are exact rationals. Conversion to floating point
/// happens only at the sampler/oracle boundaries, via to_double().
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Nearest double to an exact rational.
double to_double(const Rational& r);

/// Exact rational value of a double (every finite double is dyadic).
/// Throws DomainError for NaN or infinities.
Rational rational_from_double(double x);

/// Parses a decimal literal with optional sign, fraction, and exponent
/// ("-1.25e-3") into the exact rational it denotes. Throws ParseError.
Rational rational_from_decimal(std::string_view text);

/// Shortest decimal string that parses back to exactly the same rational.
/// Requires a terminating decimal expansion (denominator 2^a * 5^b), which
/// every value produced by this library has; other denominators fall back
/// to the shortest round-trip form of the nearest double.
std::string decimal_string(const Rational& r);

/// Shortest round-trip decimal form of a double ("0.1", "2.25", "1e+30").
std::string double_string(double x);

/// r^e for a nonnegative integer exponent.
Rational rational_pow(const Rational& r, unsigned e);

}  // namespace pdqubo
