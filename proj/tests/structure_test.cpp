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
#include <hopfadams/pbw.hpp>
#include <hopfadams/ssym.hpp>

#include <doctest.h>

#include "structure_suites.hpp"

using namespace hopfadams;

namespace {

const HopfData& ssym4() {
  static const HopfData h = build_ssym(4);
  return h;
}

const PBWBasis& t_basis(LetterOrder order) {
  static const PBWBasis plex = PBWBasis::build(ssym4(), t_family(ssym4(), 4), 4);
  static const PBWBasis degree = PBWBasis::build(ssym4(), t_family(ssym4(), 4, LetterOrder::DegreeFirst), 4);
  return order == LetterOrder::PseudoLex ? plex : degree;
}

void require_pass(const Report& r) { CHECK_MESSAGE(r.passed(), r.to_text()); }

}  // namespace

TEST_CASE("finite descent of the sequence orders") {
  for (LetterOrder o : {LetterOrder::PseudoLex, LetterOrder::DegreeFirst})
    require_pass(suites::finite_descent(t_basis(o).family(), 4));
  CHECK(suites::raw_sequences(t_basis(LetterOrder::PseudoLex).family(), 2).size() == 4);
}

TEST_CASE("straightening of unsorted products") {
  for (LetterOrder o : {LetterOrder::PseudoLex, LetterOrder::DegreeFirst}) require_pass(suites::straightening(t_basis(o)));
}

TEST_CASE("reordered families remain bases") {
  for (LetterOrder o : {LetterOrder::PseudoLex, LetterOrder::DegreeFirst})
    require_pass(suites::reorder_invariance(t_basis(o), 3));
}

TEST_CASE("binomial coproduct and diagonal transport on the degree-first family") {
  require_pass(suites::binomial_coproduct(t_basis(LetterOrder::DegreeFirst)));
  require_pass(suites::diagonal_transport(ConvolutionContext(ssym4()), t_basis(LetterOrder::DegreeFirst)));
}

TEST_CASE("the suites on the word instances") {
  const HopfData t = build_tensor_hopf({InstanceKind::Tensor, {MultiDegree{1}, MultiDegree{1}}, 4});
  Alphabet ab(std::vector<LetterInfo>{{"a", MultiDegree{1}}, {"b", MultiDegree{1}}});
  const PBWConstruction c =
      construct_pbw(t, ab, {Element::basis(t.basis().index("a")), Element::basis(t.basis().index("b"))}, 4);
  require_pass(suites::finite_descent(c.basis.family(), 4));
  require_pass(suites::straightening(c.basis));
  require_pass(suites::binomial_coproduct(c.basis));
  require_pass(suites::diagonal_transport(ConvolutionContext(t), c.basis));
  require_pass(suites::reorder_invariance(c.basis, 2));
}
