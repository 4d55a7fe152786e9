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

#include "hopfadams/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hopfadams {

Polynomial::Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Scalar& c) { return Polynomial(std::vector<Scalar>{c}); }

Polynomial Polynomial::x() { return Polynomial(std::vector<Scalar>{Scalar(0), Scalar(1)}); }

Polynomial Polynomial::linear_power(const Scalar& root, unsigned multiplicity) {
  Polynomial out = constant(1);
  const Polynomial factor(std::vector<Scalar>{-root, Scalar(1)});
  for (unsigned i = 0; i < multiplicity; ++i) out *= factor;
  return out;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial out = *this;
  const Scalar lead = leading();
  for (auto& c : out.coeffs_) c /= lead;
  return out;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Scalar> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return Polynomial(std::move(d));
}

Scalar Polynomial::evaluate(const Scalar& at) const {
  Scalar acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Scalar(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Scalar(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Scalar> out(coeffs_.size() + other.coeffs_.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Scalar& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    const Scalar mag = abs(c);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = (mag == 1);
    if (k == 0) {
      os << to_display_string(mag);
    } else {
      if (!unit) os << to_display_string(mag) << '*';
      os << 'x';
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("divmod: division by the zero polynomial");
  std::vector<Scalar> rem = a.coefficients();
  const auto& bc = b.coefficients();
  if (rem.size() < bc.size()) return {Polynomial(), a};
  std::vector<Scalar> quot(rem.size() - bc.size() + 1, Scalar(0));
  const Scalar lead = b.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Scalar q = rem[k + bc.size() - 1] / lead;
    quot[k] = q;
    if (sgn(q) == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[k + j] -= q * bc[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

bool divides(const Polynomial& d, const Polynomial& p) { return divmod(p, d).second.is_zero(); }

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return divmod(a * b, gcd(a, b)).first.monic();
}

bool is_squarefree(const Polynomial& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

Polynomial FactoredPolynomial::expand() const {
  Polynomial out = residual;
  for (const auto& [root, e] : roots) out *= Polynomial::linear_power(root, e);
  return out;
}

std::string FactoredPolynomial::to_string() const {
  std::vector<std::pair<Scalar, unsigned>> items(roots.begin(), roots.end());
  std::stable_sort(items.begin(), items.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  std::vector<std::string> factors;
  if (residual.degree() == 0 && residual.leading() != 1) factors.push_back(to_display_string(residual.leading()));
  for (const auto& [root, e] : items) {
    if (e == 0) continue;
    std::string f;
    if (sgn(root) == 0) {
      f = "x";
    } else if (sgn(root) > 0) {
      f = "(x-" + to_display_string(root) + ")";
    } else {
      f = "(x+" + to_display_string(-root) + ")";
    }
    if (e > 1) f += "^" + std::to_string(e);
    factors.push_back(std::move(f));
  }
  if (residual.degree() > 0) factors.push_back("(" + residual.to_string() + ")");
  if (factors.empty()) return "1";
  std::string out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out += " " + factors[i];
  return out;
}

FactoredPolynomial factor_over(const Polynomial& p, const std::vector<Scalar>& candidates) {
  if (p.is_zero()) throw std::domain_error("factor_over: zero polynomial");
  FactoredPolynomial out;
  Polynomial rest = p;
  for (const auto& c : candidates) {
    if (out.roots.count(c)) continue;
    const Polynomial lin = Polynomial::linear_power(c, 1);
    unsigned e = 0;
    while (rest.degree() > 0) {
      auto [q, r] = divmod(rest, lin);
      if (!r.is_zero()) break;
      rest = std::move(q);
      ++e;
    }
    if (e) out.roots[c] = e;
  }
  out.residual = rest;
  return out;
}

Polynomial char_poly(const Matrix& input) {
  if (!input.is_square()) throw std::invalid_argument("char_poly: non-square matrix");
  const std::size_t n = input.rows();
  Matrix h = input;
  Scalar u;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t c = 0; c + 2 < n; ++c) {
    const std::size_t r = c + 1;
    std::size_t i = r;
    while (i < n && sgn(h(i, c)) == 0) ++i;
    if (i == n) continue;
    if (i != r) {
      for (std::size_t j = 0; j < n; ++j) swap(h(i, j), h(r, j));
      for (std::size_t j = 0; j < n; ++j) swap(h(j, i), h(j, r));
    }
    const Scalar inv = 1 / h(r, c);
    for (std::size_t j = r + 1; j < n; ++j) {
      if (sgn(h(j, c)) == 0) continue;
      u = h(j, c) * inv;
      for (std::size_t k = c; k < n; ++k)
        if (sgn(h(r, k)) != 0) h(j, k) -= u * h(r, k);
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(h(k, j)) != 0) h(k, r) += u * h(k, j);
    }
  }
  // p_m = (x - h_mm) p_{m-1} - sum_{i=1}^{m-1} h_{m-i,m} (prod_{j=m-i+1}^{m} h_{j,j-1}) p_{m-i-1}
  std::vector<Polynomial> p;
  p.reserve(n + 1);
  p.push_back(Polynomial::constant(1));
  for (std::size_t m = 1; m <= n; ++m) {
    Polynomial next = Polynomial(std::vector<Scalar>{-h(m - 1, m - 1), Scalar(1)}) * p[m - 1];
    Scalar sub(1);
    for (std::size_t i = 1; i < m; ++i) {
      sub *= h(m - i, m - i - 1);
      if (sgn(sub) == 0) break;
      const Scalar coef = h(m - i - 1, m - 1) * sub;
      if (sgn(coef) == 0) continue;
      next -= Polynomial::constant(coef) * p[m - i - 1];
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

namespace {

/// Annihilator of v under m: the monic polynomial of least degree with
/// q(m) v = 0, found by incremental elimination on the Krylov sequence.
Polynomial krylov_annihilator(const Matrix& m, std::vector<Scalar> v) {
  const std::size_t n = m.rows();
  struct Reduced {
    std::vector<Scalar> vec;
    std::size_t pivot;
    std::vector<Scalar> comb;  // coefficients in the Krylov basis
  };
  std::vector<Reduced> basis;
  std::vector<Scalar> current = std::move(v);
  for (std::size_t d = 0; d <= n; ++d) {
    std::vector<Scalar> w = current;
    std::vector<Scalar> comb(d + 1, Scalar(0));
    comb[d] = 1;
    for (const auto& b : basis) {
      if (sgn(w[b.pivot]) == 0) continue;
      const Scalar f = w[b.pivot] / b.vec[b.pivot];
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(b.vec[k]) != 0) w[k] -= f * b.vec[k];
      for (std::size_t k = 0; k < b.comb.size(); ++k) comb[k] -= f * b.comb[k];
    }
    std::size_t pivot = 0;
    while (pivot < n && sgn(w[pivot]) == 0) ++pivot;
    if (pivot == n) return Polynomial(std::move(comb)).monic();
    basis.push_back({std::move(w), pivot, std::move(comb)});
    current = m * std::span<const Scalar>(current);
  }
  throw std::logic_error("krylov_annihilator: no dependence found");
}

}  // namespace

Polynomial min_poly(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("min_poly: non-square matrix");
  const std::size_t n = m.rows();
  Polynomial acc = Polynomial::constant(1);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Scalar> e(n, Scalar(0));
    e[i] = 1;
    acc = lcm(acc, krylov_annihilator(m, std::move(e)));
    if (acc.degree() == static_cast<long>(n)) break;
  }
  return acc;
}

Matrix evaluate(const Polynomial& p, const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("evaluate: non-square matrix");
  Matrix acc(m.rows(), m.cols());
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = acc * m;
    for (std::size_t i = 0; i < m.rows(); ++i) acc(i, i) += c[k];
  }
  return acc;
}

}  // namespace hopfadams
