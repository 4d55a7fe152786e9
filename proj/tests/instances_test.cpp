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

#include <hopfadams/convolution.hpp>
#include <hopfadams/instances.hpp>
#include <hopfadams/polynomial.hpp>

#include <doctest.h>

#include <stdexcept>

using namespace hopfadams;

namespace {

InstanceSpec spec(InstanceKind kind, std::vector<unsigned> degrees, unsigned bound) {
  InstanceSpec s{kind, {}, bound};
  for (unsigned d : degrees) s.generator_degrees.push_back(MultiDegree{d});
  return s;
}

Element w(const HopfData& h, const std::string& label, long c = 1) {
  return Element::basis(h.basis().index(label), Scalar(c));
}

}  // namespace

TEST_CASE("tensor algebra on one letter") {
  const HopfData h = build_tensor_hopf(spec(InstanceKind::Tensor, {1}, 4));
  const ConvolutionContext ctx(h);
  CHECK(apply(ctx, adams(ctx, 2), w(h, "aa")) == w(h, "aa", 4));
  CHECK(apply(ctx, adams(ctx, -1), w(h, "aaa")) == w(h, "aaa", -1));
  CHECK(h.basis().size() == 5);
}

TEST_CASE("tensor algebra on two letters") {
  const HopfData h = build_tensor_hopf(spec(InstanceKind::Tensor, {1, 1}, 4));
  for (unsigned m = 0; m <= 4; ++m) CHECK(h.basis().stratum(m).dim() == (1u << m));
  CHECK(multiply(h, w(h, "a"), w(h, "b")) == w(h, "ab"));
  Tensor d;
  d.add(h.basis().index("ab"), h.unit(), 1);
  d.add(h.basis().index("a"), h.basis().index("b"), 1);
  d.add(h.basis().index("b"), h.basis().index("a"), 1);
  d.add(h.unit(), h.basis().index("ab"), 1);
  CHECK(h.coproduct(h.basis().index("ab")) == d);
  CHECK_FALSE(is_commutative(h));
  CHECK(is_cocommutative(h));
  const ConvolutionContext ctx(h, 2);
  const Polynomial cp = char_poly(adams(ctx, 2).block(2));
  CHECK(cp == Polynomial::linear_power(2, 1) * Polynomial::linear_power(4, 3));
}

TEST_CASE("shuffle algebra") {
  const HopfData h = build_shuffle_hopf(spec(InstanceKind::Shuffle, {1, 1}, 4));
  CHECK(multiply(h, w(h, "a"), w(h, "a")) == w(h, "aa", 2));
  CHECK(multiply(h, w(h, "a"), w(h, "b")) == w(h, "ab") + w(h, "ba"));
  Tensor d;
  d.add(h.basis().index("ab"), h.unit(), 1);
  d.add(h.basis().index("a"), h.basis().index("b"), 1);
  d.add(h.unit(), h.basis().index("ab"), 1);
  CHECK(h.coproduct(h.basis().index("ab")) == d);
  CHECK(is_commutative(h));
  CHECK_FALSE(is_cocommutative(h));
  const ConvolutionContext ctx(h, 2);
  const Polynomial cp = char_poly(adams(ctx, 2).block(2));
  CHECK(cp == Polynomial::linear_power(2, 1) * Polynomial::linear_power(4, 3));
}

TEST_CASE("mixed degrees and multigradings") {
  const HopfData h = build_tensor_hopf(spec(InstanceKind::Tensor, {1, 2}, 4));
  std::vector<std::size_t> dims;
  for (const auto& s : h.basis().strata()) dims.push_back(s.dim());
  CHECK(dims == std::vector<std::size_t>{1, 1, 2, 3, 5});
  CHECK(h.basis().degree_of(h.basis().index("b")) == MultiDegree{2});

  InstanceSpec two{InstanceKind::Shuffle, {MultiDegree{1, 0}, MultiDegree{0, 1}}, 3};
  const HopfData g = build_shuffle_hopf(two);
  CHECK(g.basis().degree_of(g.basis().index("ab")) == MultiDegree{1, 1});
  CHECK(g.basis().stratum(*g.basis().stratum_of_degree(MultiDegree{1, 1})).dim() == 2);
  CHECK(verify_bialgebra(g).passed());
}

TEST_CASE("duality of the tensor and shuffle instances") {
  for (std::vector<unsigned> degrees : {std::vector<unsigned>{1}, {1, 1}, {1, 2}}) {
    const HopfData t = build_instance(spec(InstanceKind::Tensor, degrees, 4));
    const HopfData s = build_instance(spec(InstanceKind::Shuffle, degrees, 4));
    const Report r = check_duality(t, s);
    CHECK_MESSAGE(r.passed(), r.to_text());
    CHECK(verify_bialgebra(t).passed());
    CHECK(verify_bialgebra(s).passed());
  }
  const HopfData t = build_instance(spec(InstanceKind::Tensor, {1, 1}, 3));
  CHECK_FALSE(check_duality(t, build_instance(spec(InstanceKind::Shuffle, {1, 2}, 3))).passed());
  CHECK_FALSE(check_duality(t, t).passed());
}

TEST_CASE("invalid instance specifications") {
  CHECK_THROWS_AS(build_tensor_hopf(spec(InstanceKind::Tensor, {}, 3)), std::invalid_argument);
  CHECK_THROWS_AS(build_tensor_hopf(spec(InstanceKind::Tensor, {0}, 3)), std::invalid_argument);
  CHECK_THROWS_AS(build_shuffle_hopf(InstanceSpec{InstanceKind::Shuffle, {MultiDegree{1}, MultiDegree{1, 0}}, 3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_tensor_hopf(spec(InstanceKind::Tensor, std::vector<unsigned>(27, 1), 1)),
                  std::invalid_argument);
}
