// Copyright 2026 The Agreeable Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AGREEABLE_RATIONAL_H_
#define AGREEABLE_RATIONAL_H_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace agreeable {

// Exact arbitrary-precision rational. Utilities and cover-matrix entries are
// kept in this type so weak inequalities are decided without rounding.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "7", "-3", "3/4" and finite decimals such as "0.25" or "1e-3".
// Throws ParseError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise (lowest terms, q > 0).
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

double to_double(const Rational& value);

}  // namespace agreeable

#endif  // AGREEABLE_RATIONAL_H_
