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

#ifndef HOPFADAMS_SEQUENCES_HPP
#define HOPFADAMS_SEQUENCES_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfadams/grading.hpp"
#include "hopfadams/hopf.hpp"
#include "hopfadams/scalar.hpp"

namespace hopfadams {

/// One member of a generator family. An empty height means no finite
/// height was detected within the bound.
struct Generator {
  std::string label;
  MultiDegree degree;
  Element element;
  std::optional<unsigned> height;
};

/// Generators listed in ascending order under the family order; the order
/// is the index order.
class GeneratorFamily {
 public:
  GeneratorFamily() = default;
  /// Throws std::invalid_argument on a zero degree, a height below 2, a rank
  /// mismatch or a duplicate label.
  GeneratorFamily(std::size_t rank, std::vector<Generator> generators);

  std::size_t rank() const { return rank_; }
  std::size_t size() const { return gens_.size(); }
  const Generator& operator[](std::size_t i) const { return gens_.at(i); }
  const std::vector<Generator>& generators() const { return gens_; }
  std::optional<std::size_t> find(const std::string& label) const;
  /// True when every height is infinite within the bound.
  bool all_heights_infinite() const;

 private:
  std::size_t rank_ = 1;
  std::vector<Generator> gens_;
};

/// Finite sequence of family indices.
using Sequence = std::vector<std::size_t>;

enum class SeqOrder { L, R };

MultiDegree sequence_degree(const GeneratorFamily& family, const Sequence& v);

/// Nondecreasing, with every run shorter than its generator's height.
bool is_sorted_sequence(const GeneratorFamily& family, const Sequence& v);

/// Degree first (|U| + g = |V| with g nonzero makes U smaller), then the
/// first difference from the left or from the right. `degree` maps an entry
/// to its degree; `entry` compares entries.
template <class Entry, class DegreeFn, class EntryCmp>
std::partial_ordering compare_sequences(SeqOrder variant, const std::vector<Entry>& u, const std::vector<Entry>& v,
                                        DegreeFn&& degree, EntryCmp&& entry) {
  auto total = [&](const std::vector<Entry>& w) {
    std::optional<MultiDegree> d;
    for (const auto& x : w) {
      if (d)
        *d += degree(x);
      else
        d = degree(x);
    }
    return d;
  };
  const auto du = total(u);
  const auto dv = total(v);
  if (!du || !dv) {
    if (!du && !dv) return std::partial_ordering::equivalent;
    return du ? std::partial_ordering::greater : std::partial_ordering::less;
  }
  if (*du != *dv) {
    if (divides(*du, *dv)) return std::partial_ordering::less;
    if (divides(*dv, *du)) return std::partial_ordering::greater;
    return std::partial_ordering::unordered;
  }
  const std::size_t n = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = variant == SeqOrder::L ? u[i] : u[u.size() - 1 - i];
    const auto& b = variant == SeqOrder::L ? v[i] : v[v.size() - 1 - i];
    const std::strong_ordering c = entry(a, b);
    if (c != 0) return c;
  }
  // Equal degree and a common prefix (or suffix) force equal lengths.
  return u.size() <=> v.size();
}

std::partial_ordering seq_compare(SeqOrder variant, const GeneratorFamily& family, const Sequence& u,
                                  const Sequence& v);

/// Sorted sequences of exactly the given degree, ascending under the right
/// order. Degree zero yields the single empty sequence.
std::vector<Sequence> enumerate_sorted(const GeneratorFamily& family, const MultiDegree& degree);

struct Rearranged {
  Sequence sorted;
  bool admissible = true;  // run lengths respect the heights
};

/// The nondecreasing rearrangement of v.
Rearranged seq_rearrange(const GeneratorFamily& family, const Sequence& v);

/// For W dividing V run by run: the product of binomials binom(p_i, q_i) and
/// the quotient V/W. Both arguments are read as multisets. Throws
/// std::invalid_argument when W does not divide V.
std::pair<Scalar, Sequence> seq_binomial(const Sequence& v, const Sequence& w);

/// All sorted W with W | V, including the empty one and V itself.
std::vector<Sequence> sub_sequences(const Sequence& v);

std::string sequence_to_string(const GeneratorFamily& family, const Sequence& v);

}  // namespace hopfadams

#endif  // HOPFADAMS_SEQUENCES_HPP
