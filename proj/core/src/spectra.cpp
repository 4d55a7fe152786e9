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

#include "hopfadams/spectra.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace hopfadams {

namespace {

Integer integer_binomial(const Integer& n, unsigned long k) {
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

Integer lookup(const DegreeTable& t, const MultiDegree& d) {
  auto it = t.find(d);
  return it == t.end() ? Integer(0) : it->second;
}

DegreeTable unit_series(std::size_t rank, unsigned bound) {
  DegreeTable t;
  for (const auto& d : degrees_up_to(rank, bound)) t[d] = 0;
  t[MultiDegree::zero(rank)] = 1;
  return t;
}

// series * (1 - t^g)^(-p), truncated at the bound.
void multiply_factor(DegreeTable& series, const MultiDegree& g, const Integer& p, unsigned bound) {
  if (p == 0) return;
  DegreeTable out = series;
  for (const auto& [d, c] : series) {
    if (c == 0) continue;
    MultiDegree shifted = d;
    for (unsigned long k = 1;; ++k) {
      shifted += g;
      if (shifted.total() > bound) break;
      out[shifted] += c * integer_binomial(p + k - 1, k);
    }
  }
  series = std::move(out);
}

void count_families(const std::vector<std::pair<MultiDegree, Integer>>& support, std::size_t at, unsigned n,
                    const MultiDegree& remaining, const Integer& acc, Integer& total) {
  if (remaining.is_zero()) {
    if (n == 0) total += acc;
    return;
  }
  if (at == support.size() || n == 0) return;
  const auto& [alpha, p] = support[at];
  count_families(support, at + 1, n, remaining, acc, total);
  MultiDegree rest = remaining;
  for (unsigned long d = 1; d <= n; ++d) {
    auto next = subtract(rest, alpha);
    if (!next) break;
    rest = *next;
    count_families(support, at + 1, n - static_cast<unsigned>(d), rest, acc * integer_binomial(p + d - 1, d),
                   total);
  }
}

}  // namespace

Integer PrimitiveDims::at(const MultiDegree& d) const { return lookup(dims, d); }

HilbertSeries hilbert_series(const HopfData& h) {
  const GradedBasis& b = h.basis();
  HilbertSeries s{b.rank(), b.bound(), {}};
  for (const auto& d : degrees_up_to(b.rank(), b.bound())) {
    auto st = b.stratum_of_degree(d);
    s.dims[d] = st ? Integer(static_cast<unsigned long>(b.stratum(*st).dim())) : Integer(0);
  }
  return s;
}

HilbertSeries series_from_primitives(const PrimitiveDims& p) {
  DegreeTable series = unit_series(p.rank, p.bound);
  for (const auto& d : degrees_up_to(p.rank, p.bound))
    if (!d.is_zero()) multiply_factor(series, d, p.at(d), p.bound);
  return {p.rank, p.bound, std::move(series)};
}

PrimitiveDims primitive_dims(const HilbertSeries& series) {
  const MultiDegree zero = MultiDegree::zero(series.rank);
  if (lookup(series.dims, zero) != 1) throw std::invalid_argument("primitive_dims: series must start with 1");
  PrimitiveDims p{series.rank, series.bound, {}};
  DegreeTable partial = unit_series(series.rank, series.bound);
  for (const auto& d : degrees_up_to(series.rank, series.bound)) {
    if (d.is_zero()) continue;
    const Integer value = lookup(series.dims, d) - lookup(partial, d);
    if (value < 0)
      throw std::domain_error("primitive_dims: negative exponent " + value.get_str() + " at degree " +
                              d.to_string() + "; not the series of a connected graded Hopf algebra");
    p.dims[d] = value;
    multiply_factor(partial, d, value, series.bound);
  }
  return p;
}

Integer multiplicity(const PrimitiveDims& p, unsigned n, const MultiDegree& degree) {
  if (degree.is_zero()) return n == 0 ? 1 : 0;
  std::vector<std::pair<MultiDegree, Integer>> support;
  for (const auto& [alpha, dim] : p.dims)
    if (!alpha.is_zero() && dim > 0 && divides(alpha, degree)) support.emplace_back(alpha, dim);
  Integer total = 0;
  count_families(support, 0, n, degree, Integer(1), total);
  return total;
}

FactoredPolynomial predicted_char_poly(const PrimitiveDims& p, long n, const MultiDegree& degree) {
  FactoredPolynomial f;
  Scalar root = 1;
  for (unsigned s = 0; s <= max_parts(degree); ++s) {
    const Integer m = multiplicity(p, s, degree);
    if (m > 0) f.roots[root] += static_cast<unsigned>(m.get_ui());
    root *= Scalar(n);
  }
  return f;
}

Report count_sequences_check(const PBWBasis& basis, const PrimitiveDims& p) {
  Report report("sequence counts against mul(n, g)");
  if (!basis.family().all_heights_infinite()) {
    report.fail("all heights infinite", "the family has a finite height");
    return report;
  }
  const GradedBasis& gb = basis.hopf().basis();
  for (const auto& d : degrees_up_to(gb.rank(), basis.bound())) {
    std::map<unsigned, Integer> counts;
    if (auto st = gb.stratum_of_degree(d); st && *st < basis.strata())
      for (const auto& v : basis.sequences(*st)) counts[static_cast<unsigned>(v.size())] += 1;
    for (unsigned n = 0; n <= max_parts(d); ++n) {
      const Integer expected = multiplicity(p, n, d);
      const Integer got = counts.count(n) ? counts[n] : Integer(0);
      report.record("length " + std::to_string(n) + ", degree " + d.to_string(), got == expected,
                    got.get_str() + " sequences, mul = " + expected.get_str());
    }
  }
  return report;
}

Report check_char_poly_prediction(const ConvolutionContext& ctx, const PrimitiveDims& p,
                                  const std::vector<long>& n_values) {
  Report report("characteristic polynomials of Adams operators");
  const GradedBasis& gb = ctx.hopf().basis();
  for (long n : n_values) {
    const GradedMap psi = adams(ctx, n);
    for (std::size_t s = 0; s < ctx.strata(); ++s) {
      const MultiDegree& d = gb.stratum(s).degree;
      const FactoredPolynomial predicted = predicted_char_poly(p, n, d);
      const Polynomial exact = char_poly(psi.block(s));
      report.record("n = " + std::to_string(n) + ", degree " + d.to_string(), exact == predicted.expand(),
                    "exact " + exact.to_string() + ", predicted " + predicted.to_string());
    }
  }
  return report;
}

}  // namespace hopfadams
