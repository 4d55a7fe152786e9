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

#ifndef HOPFADAMS_SPECTRA_HPP
#define HOPFADAMS_SPECTRA_HPP

#include <map>
#include <vector>

#include "hopfadams/convolution.hpp"
#include "hopfadams/grading.hpp"
#include "hopfadams/hopf.hpp"
#include "hopfadams/pbw.hpp"
#include "hopfadams/polynomial.hpp"
#include "hopfadams/report.hpp"
#include "hopfadams/scalar.hpp"

namespace hopfadams {

using DegreeTable = std::map<MultiDegree, Integer, GradedLess>;

/// Dimension per degree, for every degree up to the bound (zeros included).
struct HilbertSeries {
  std::size_t rank = 1;
  unsigned bound = 0;
  DegreeTable dims;
};

/// Exponents p in the product over nonzero degrees of (1 - t^g)^(-p_g).
struct PrimitiveDims {
  std::size_t rank = 1;
  unsigned bound = 0;
  DegreeTable dims;
  Integer at(const MultiDegree& d) const;
};

HilbertSeries hilbert_series(const HopfData& h);
/// Expansion of the product formula up to the bound.
HilbertSeries series_from_primitives(const PrimitiveDims& p);
/// Throws std::invalid_argument unless dims[0] = 1, and std::domain_error
/// when the inversion produces a negative exponent.
PrimitiveDims primitive_dims(const HilbertSeries& series);

/// Sum over families (d_a) with sum d_a = n and sum d_a a = g of the product
/// of binom(p_a + d_a - 1, d_a).
Integer multiplicity(const PrimitiveDims& p, unsigned n, const MultiDegree& degree);

/// Product over s of (x - n^s)^mul(s, g), colliding roots merged.
FactoredPolynomial predicted_char_poly(const PrimitiveDims& p, long n, const MultiDegree& degree);

/// Number of sorted sequences of each length and degree against mul(n, g).
Report count_sequences_check(const PBWBasis& basis, const PrimitiveDims& p);

/// Exact characteristic polynomial of each Adams operator block against the
/// prediction, for every stratum of the context.
Report check_char_poly_prediction(const ConvolutionContext& ctx, const PrimitiveDims& p,
                                  const std::vector<long>& n_values);

}  // namespace hopfadams

#endif  // HOPFADAMS_SPECTRA_HPP
