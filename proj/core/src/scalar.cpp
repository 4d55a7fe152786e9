// Copyright 2026 The hopfadams Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hopfadams/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace hopfadams {

std::string to_pq_string(const Scalar& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_display_string(const Scalar& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return to_pq_string(value);
}

namespace {

Integer parse_integer(std::string_view text, bool allow_sign) {
  std::size_t start = 0;
  if (allow_sign && !text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
  if (start == text.size()) throw std::invalid_argument("malformed scalar: empty integer");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("malformed scalar: '" + std::string(text) + "'");
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Integer(digits, 10);
}

}  // namespace

ParsedScalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  ParsedScalar out;
  if (slash == std::string_view::npos) {
    out.value = Scalar(parse_integer(text, true));
    return out;
  }
  Integer num = parse_integer(text.substr(0, slash), true);
  Integer den = parse_integer(text.substr(slash + 1), false);
  if (den == 0) throw std::invalid_argument("malformed scalar: zero denominator");
  Scalar q(num, den);
  q.canonicalize();
  out.was_reduced = (q.get_num() == num && q.get_den() == den);
  out.value = q;
  return out;
}

Scalar binomial(unsigned long n, unsigned long k) {
  if (k > n) return Scalar(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Scalar(r);
}

Scalar factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return Scalar(r);
}

Scalar power(const Scalar& base, unsigned long exponent) {
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  return Scalar(num, den);
}

}  // namespace hopfadams
