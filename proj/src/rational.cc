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

#include "agreeable/rational.h"

#include <cctype>

#include "agreeable/errors.h"

namespace agreeable {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// cpp_int treats a leading 0 as an octal prefix.
BigInt decimal(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return 0;
  return BigInt(std::string(digits.substr(first)));
}

BigInt parse_unsigned(std::string_view s, std::string_view whole) {
  if (!all_digits(s)) {
    throw ParseError("not a rational number: '" + std::string(whole) + "'");
  }
  return decimal(s);
}

BigInt pow10(long exponent) {
  BigInt r = 1;
  for (long i = 0; i < exponent; ++i) r *= 10;
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_unsigned(text.substr(0, slash), whole);
    BigInt den = parse_unsigned(text.substr(slash + 1), whole);
    if (den == 0) {
      throw ParseError("zero denominator in '" + std::string(whole) + "'");
    }
    value = Rational(num, den);
  } else {
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp_text = text.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6) {
        throw ParseError("not a rational number: '" + std::string(whole) + "'");
      }
      exponent = std::stol(std::string(exp_text));
      if (exp_negative) exponent = -exponent;
      text = text.substr(0, e);
    }
    std::string digits;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      std::string_view int_part = text.substr(0, dot);
      std::string_view frac_part = text.substr(dot + 1);
      if ((int_part.empty() && frac_part.empty()) ||
          (!int_part.empty() && !all_digits(int_part)) ||
          (!frac_part.empty() && !all_digits(frac_part))) {
        throw ParseError("not a rational number: '" + std::string(whole) + "'");
      }
      digits = std::string(int_part) + std::string(frac_part);
      exponent -= static_cast<long>(frac_part.size());
    } else {
      if (!all_digits(text)) {
        throw ParseError("not a rational number: '" + std::string(whole) + "'");
      }
      digits = std::string(text);
    }
    BigInt mantissa = decimal(digits);
    if (exponent >= 0) {
      value = Rational(mantissa * pow10(exponent));
    } else {
      value = Rational(mantissa, pow10(-exponent));
    }
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

bool is_integer(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

double to_double(const Rational& value) {
  return value.convert_to<double>();
}

}  // namespace agreeable
