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

#ifndef HOPFADAMS_SCALAR_HPP
#define HOPFADAMS_SCALAR_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hopfadams {

/// Exact rational scalar. GMP keeps results of arithmetic in canonical form
/// (reduced, positive denominator).
using Scalar = mpq_class;
using Integer = mpz_class;

/// Canonical "p/q" text, always with an explicit denominator.
std::string to_pq_string(const Scalar& value);

/// Short text: "p" when integral, "p/q" otherwise.
std::string to_display_string(const Scalar& value);

struct ParsedScalar {
  Scalar value;
  bool was_reduced = true;  // false when the input was not in lowest terms
};

/// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator.
ParsedScalar parse_scalar(std::string_view text);

Scalar binomial(unsigned long n, unsigned long k);
Scalar factorial(unsigned long n);
/// base^exponent for any integer exponent >= 0 (0^0 = 1).
Scalar power(const Scalar& base, unsigned long exponent);

}  // namespace hopfadams

#endif  // HOPFADAMS_SCALAR_HPP
