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

#include <hopfadams/instances.hpp>
#include <hopfadams/spectra.hpp>
#include <hopfadams/ssym.hpp>

#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"

using namespace hopfadams;

namespace {

std::vector<Integer> dims_of(const DegreeTable& t) {
  std::vector<Integer> out;
  for (const auto& [d, v] : t) out.push_back(v);
  return out;
}

PrimitiveDims graded(std::vector<long> p) {
  PrimitiveDims out{1, static_cast<unsigned>(p.size() - 1), {}};
  for (std::size_t m = 1; m < p.size(); ++m) out.dims[MultiDegree{static_cast<unsigned>(m)}] = p[m];
  return out;
}

HilbertSeries series(std::vector<long> dims) {
  HilbertSeries s{1, static_cast<unsigned>(dims.size() - 1), {}};
  for (std::size_t m = 0; m < dims.size(); ++m) s.dims[MultiDegree{static_cast<unsigned>(m)}] = dims[m];
  return s;
}

using V = std::vector<Integer>;

}  // namespace

TEST_CASE("Hilbert series of the built instances") {
  CHECK(dims_of(hilbert_series(build_ssym(5)).dims) == V{1, 1, 2, 6, 24, 120});
  CHECK(dims_of(hilbert_series(build_tensor_hopf({InstanceKind::Tensor, {MultiDegree{1}}, 4})).dims) ==
        V{1, 1, 1, 1, 1});
  CHECK(dims_of(hilbert_series(build_tensor_hopf({InstanceKind::Tensor, {MultiDegree{1}, MultiDegree{2}}, 6})).dims) ==
        V{1, 1, 2, 3, 5, 8, 13});
}

TEST_CASE("primitive dimensions by inversion") {
  CHECK(dims_of(primitive_dims(series({1, 1, 1, 1, 1})).dims) == V{1, 0, 0, 0});
  CHECK(dims_of(primitive_dims(hilbert_series(build_ssym(5))).dims) == V{1, 1, 4, 17, 92});
  // Dimensions binom(m + 1, 1) come from two primitives in degree one.
  CHECK(dims_of(primitive_dims(series({1, 2, 3, 4})).dims) == V{2, 0, 0});
  CHECK(dims_of(primitive_dims(series({1, 1, 2, 3, 5, 8})).dims) == V{1, 1, 1, 1, 2});
  CHECK_THROWS_AS(primitive_dims(series({1, 2, 1})), std::domain_error);
  CHECK_THROWS_AS(primitive_dims(series({1, 3, 1})), std::domain_error);
  CHECK_THROWS_AS(primitive_dims(series({2, 1})), std::invalid_argument);
}

TEST_CASE("inversion and expansion are mutually inverse") {
  std::mt19937 rng(20261014);
  std::uniform_int_distribution<int> d(0, 4);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<long> p(7, 0);
    std::vector<mpz_class> q(7, 0);
    for (std::size_t m = 1; m < p.size(); ++m) q[m] = p[m] = d(rng);
    const HilbertSeries s = series_from_primitives(graded(p));
    CHECK(dims_of(s.dims) == oracle::expand_product(q, 6));
    CHECK(primitive_dims(s).dims == graded(p).dims);
  }
}

TEST_CASE("multigraded inversion") {
  const HopfData h = build_shuffle_hopf({InstanceKind::Shuffle, {MultiDegree{1, 0}, MultiDegree{0, 1}}, 4});
  const PrimitiveDims p = primitive_dims(hilbert_series(h));
  // Lyndon words with a letters and b letters.
  CHECK(p.at(MultiDegree{1, 0}) == 1);
  CHECK(p.at(MultiDegree{1, 1}) == 1);
  CHECK(p.at(MultiDegree{2, 1}) == 1);
  CHECK(p.at(MultiDegree{2, 2}) == 1);
  CHECK(p.at(MultiDegree{3, 1}) == 1);
  CHECK(p.at(MultiDegree{2, 0}) == 0);
  CHECK(series_from_primitives(p).dims == hilbert_series(h).dims);
}

TEST_CASE("multiplicities") {
  const PrimitiveDims p = primitive_dims(hilbert_series(build_ssym(5)));
  CHECK(multiplicity(p, 1, MultiDegree{3}) == 4);
  CHECK(multiplicity(p, 2, MultiDegree{3}) == 1);
  CHECK(multiplicity(p, 3, MultiDegree{3}) == 1);
  CHECK(multiplicity(p, 0, MultiDegree{0}) == 1);
  CHECK(multiplicity(p, 0, MultiDegree{2}) == 0);
  for (unsigned m = 0; m <= 5; ++m) {
    Integer total = 0;
    for (unsigned n = 0; n <= m; ++n) total += multiplicity(p, n, MultiDegree{m});
    CHECK(total == hilbert_series(build_ssym(5)).dims.at(MultiDegree{m}));
  }
}

TEST_CASE("predicted characteristic polynomials") {
  const PrimitiveDims p = primitive_dims(hilbert_series(build_ssym(5)));
  CHECK(predicted_char_poly(p, 2, MultiDegree{3}).to_string() == "(x-2)^4 (x-4) (x-8)");
  CHECK(predicted_char_poly(p, 1, MultiDegree{3}).to_string() == "(x-1)^6");
  CHECK(predicted_char_poly(p, 0, MultiDegree{3}).to_string() == "x^6");
  CHECK(predicted_char_poly(p, 0, MultiDegree{0}).to_string() == "(x-1)");
  // (-1)^1 and (-1)^3 collide.
  const FactoredPolynomial neg = predicted_char_poly(p, -1, MultiDegree{3});
  CHECK(neg.roots.at(Scalar(-1)) == 5);
  CHECK(neg.roots.at(Scalar(1)) == 1);
  CHECK(neg.expand().degree() == 6);
}

TEST_CASE("predictions match exact characteristic polynomials") {
  const HopfData s = build_ssym(4);
  const std::vector<long> ns{-2, -1, 0, 1, 2, 3};
  CHECK(check_char_poly_prediction(ConvolutionContext(s), primitive_dims(hilbert_series(s)), ns).passed());
  for (InstanceKind kind : {InstanceKind::Tensor, InstanceKind::Shuffle}) {
    const HopfData h = build_instance({kind, {MultiDegree{1}, MultiDegree{2}}, 5});
    CHECK(check_char_poly_prediction(ConvolutionContext(h), primitive_dims(hilbert_series(h)), ns).passed());
  }
  PrimitiveDims wrong = primitive_dims(hilbert_series(s));
  wrong.dims[MultiDegree{2}] = 0;
  CHECK_FALSE(check_char_poly_prediction(ConvolutionContext(s), wrong, {2}).passed());
}

TEST_CASE("sequence counts") {
  const HopfData s = build_ssym(4);
  const PrimitiveDims p = primitive_dims(hilbert_series(s));
  CHECK(count_sequences_check(PBWBasis::build(s, t_family(s, 4), 4), p).passed());
  const HopfData t = build_tensor_hopf({InstanceKind::Tensor, {MultiDegree{1}}, 3});
  std::vector<Generator> gens{{"a", MultiDegree{1}, Element::basis(t.basis().index("a")), 2}};
  const PBWBasis finite = PBWBasis::build(t, GeneratorFamily(1, gens), 1);
  CHECK_FALSE(count_sequences_check(finite, primitive_dims(hilbert_series(t))).passed());
}
