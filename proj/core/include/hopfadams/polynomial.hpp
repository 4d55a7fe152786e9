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

#ifndef HOPFADAMS_POLYNOMIAL_HPP
#define HOPFADAMS_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hopfadams/matrix.hpp"
#include "hopfadams/scalar.hpp"

namespace hopfadams {

/// Univariate polynomial over Q, coefficients stored from x^0 upward with no
/// trailing zeros. The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs);
  static Polynomial constant(const Scalar& c);
  static Polynomial x();
  /// (x - root)^multiplicity.
  static Polynomial linear_power(const Scalar& root, unsigned multiplicity);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  Scalar coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }
  const Scalar& leading() const { return coeffs_.back(); }

  Polynomial monic() const;
  Polynomial derivative() const;
  Scalar evaluate(const Scalar& at) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

/// Quotient and remainder. Throws std::domain_error for a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
bool divides(const Polynomial& d, const Polynomial& p);
/// Monic gcd (zero if both inputs are zero).
Polynomial gcd(Polynomial a, Polynomial b);
Polynomial lcm(const Polynomial& a, const Polynomial& b);
bool is_squarefree(const Polynomial& p);

/// Product of linear factors (x - root)^exponent with a polynomial remainder
/// that has none of the listed roots.
struct FactoredPolynomial {
  std::map<Scalar, unsigned> roots;  // root -> exponent
  Polynomial residual = Polynomial::constant(1);

  Polynomial expand() const;
  /// e.g. "(x-2)^4 (x-4) (x-8)"; roots printed in descending order of
  /// exponent, then ascending value.
  std::string to_string() const;
  friend bool operator==(const FactoredPolynomial&, const FactoredPolynomial&) = default;
};

/// Divides out (x - c) repeatedly for each candidate root c.
FactoredPolynomial factor_over(const Polynomial& p, const std::vector<Scalar>& candidates);

/// Monic characteristic polynomial det(xI - m), by similarity reduction to
/// upper Hessenberg form. Throws std::invalid_argument if m is not square.
Polynomial char_poly(const Matrix& m);

/// Monic minimal polynomial: lcm over the standard basis of the Krylov
/// annihilators. Throws std::invalid_argument if m is not square.
Polynomial min_poly(const Matrix& m);

/// p(m), evaluated by Horner's rule.
Matrix evaluate(const Polynomial& p, const Matrix& m);

}  // namespace hopfadams

#endif  // HOPFADAMS_POLYNOMIAL_HPP
