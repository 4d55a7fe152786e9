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

// Small conversions between the oracle's plain containers and library
// values, for the permutation algebra.

#ifndef HOPFADAMS_TESTS_BRIDGE_HPP
#define HOPFADAMS_TESTS_BRIDGE_HPP

#include <hopfadams/hopf.hpp>
#include <hopfadams/ssym.hpp>

#include <string>

#include "oracles.hpp"

namespace bridge {

inline hopfadams::Permutation perm(const oracle::Perm& p) {
  return hopfadams::Permutation(std::vector<unsigned>(p.begin(), p.end()));
}

inline oracle::Perm perm(const hopfadams::Permutation& p) {
  return oracle::Perm(p.entries().begin(), p.entries().end());
}

inline hopfadams::Element element(const hopfadams::HopfData& h, const oracle::Combo& c) {
  hopfadams::Element out;
  for (const auto& [p, x] : c) out.add(hopfadams::f_index(h, perm(p)), x);
  return out;
}

/// F_p for a one-line string such as "231".
inline hopfadams::Element F(const hopfadams::HopfData& h, const std::string& oneline, long coeff = 1) {
  return hopfadams::Element::basis(hopfadams::f_index(h, hopfadams::Permutation::parse(oneline)),
                                   hopfadams::Scalar(coeff));
}

}  // namespace bridge

#endif  // HOPFADAMS_TESTS_BRIDGE_HPP
