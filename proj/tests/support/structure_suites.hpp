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

// Exhaustive checks of the straightening, coproduct and reordering
// properties of a family {z_V}, shared by the unit tests and the acceptance
// runner.

#ifndef HOPFADAMS_TESTS_STRUCTURE_SUITES_HPP
#define HOPFADAMS_TESTS_STRUCTURE_SUITES_HPP

#include <hopfadams/convolution.hpp>
#include <hopfadams/pbw.hpp>
#include <hopfadams/report.hpp>
#include <hopfadams/sequences.hpp>

#include <vector>

namespace suites {

/// Every sequence of family indices with part-sum at most the bound, in any
/// order of entries, the empty one included.
std::vector<hopfadams::Sequence> raw_sequences(const hopfadams::GeneratorFamily& family, unsigned bound);

/// Both sequence orders are strict partial orders on the raw sequences up to
/// the bound, total within a degree, and every decreasing chain is no longer
/// than the number of sequences below its top.
hopfadams::Report finite_descent(const hopfadams::GeneratorFamily& family, unsigned bound);

/// z_V for a raw V equals c z_Pi(V) plus terms strictly below Pi(V) in the
/// right order, c the product of the measured swap coefficients over the
/// inversions of V.
hopfadams::Report straightening(const hopfadams::PBWBasis& basis);

/// Delta(z_V) minus the binomial sum over sub-sequences lives on
/// z_M (x) z_N with M, N nonempty and Pi(MN) below V.
hopfadams::Report binomial_coproduct(const hopfadams::PBWBasis& basis);

/// Convolutions of triangular maps are triangular with the diagonal
/// b(V) = sum over W | V of binom(V, W) b1(W) b2(V/W); id * id gives 2^l(V).
hopfadams::Report diagonal_transport(const hopfadams::ConvolutionContext& ctx, const hopfadams::PBWBasis& basis);

/// Every reordering of the generators of the given total degree, and the
/// full reversal, still yields invertible expansions up to the bound.
hopfadams::Report reorder_invariance(const hopfadams::PBWBasis& basis, unsigned restack_degree);

}  // namespace suites

#endif  // HOPFADAMS_TESTS_STRUCTURE_SUITES_HPP
