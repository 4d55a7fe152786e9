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

#include "hopfadams/sequences.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hopfadams {

GeneratorFamily::GeneratorFamily(std::size_t rank, std::vector<Generator> generators)
    : rank_(rank), gens_(std::move(generators)) {
  std::set<std::string> seen;
  for (const auto& g : gens_) {
    if (g.degree.rank() != rank_) throw std::invalid_argument("GeneratorFamily: rank mismatch for " + g.label);
    if (g.degree.is_zero()) throw std::invalid_argument("GeneratorFamily: generator " + g.label + " has zero degree");
    if (g.height && *g.height < 2) throw std::invalid_argument("GeneratorFamily: height below 2 for " + g.label);
    if (!seen.insert(g.label).second) throw std::invalid_argument("GeneratorFamily: duplicate label " + g.label);
  }
}

std::optional<std::size_t> GeneratorFamily::find(const std::string& label) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].label == label) return i;
  return std::nullopt;
}

bool GeneratorFamily::all_heights_infinite() const {
  return std::none_of(gens_.begin(), gens_.end(), [](const Generator& g) { return g.height.has_value(); });
}

MultiDegree sequence_degree(const GeneratorFamily& family, const Sequence& v) {
  MultiDegree d = MultiDegree::zero(family.rank());
  for (std::size_t x : v) d += family[x].degree;
  return d;
}

bool is_sorted_sequence(const GeneratorFamily& family, const Sequence& v) {
  std::size_t run = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] >= family.size()) return false;
    if (i > 0 && v[i] < v[i - 1]) return false;
    run = (i > 0 && v[i] == v[i - 1]) ? run + 1 : 1;
    const auto& h = family[v[i]].height;
    if (h && run >= *h) return false;
  }
  return true;
}

std::partial_ordering seq_compare(SeqOrder variant, const GeneratorFamily& family, const Sequence& u,
                                  const Sequence& v) {
  return compare_sequences(
      variant, u, v, [&](std::size_t x) { return family[x].degree; },
      [](std::size_t a, std::size_t b) { return a <=> b; });
}

namespace {

void extend_sorted(const GeneratorFamily& family, const MultiDegree& remaining, std::size_t min_index,
                   std::size_t run, Sequence& prefix, std::vector<Sequence>& out) {
  if (remaining.is_zero()) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t x = min_index; x < family.size(); ++x) {
    const std::size_t next_run = (!prefix.empty() && prefix.back() == x) ? run + 1 : 1;
    const auto& h = family[x].height;
    if (h && next_run >= *h) continue;
    auto rest = subtract(remaining, family[x].degree);
    if (!rest) continue;
    prefix.push_back(x);
    extend_sorted(family, *rest, x, next_run, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Sequence> enumerate_sorted(const GeneratorFamily& family, const MultiDegree& degree) {
  std::vector<Sequence> out;
  Sequence prefix;
  extend_sorted(family, degree, 0, 0, prefix, out);
  std::sort(out.begin(), out.end(),
            [&](const Sequence& a, const Sequence& b) { return seq_compare(SeqOrder::R, family, a, b) < 0; });
  return out;
}

Rearranged seq_rearrange(const GeneratorFamily& family, const Sequence& v) {
  Rearranged r{v, true};
  std::sort(r.sorted.begin(), r.sorted.end());
  r.admissible = is_sorted_sequence(family, r.sorted);
  return r;
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> runs(Sequence v) {
  std::sort(v.begin(), v.end());
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x : v) {
    if (!out.empty() && out.back().first == x)
      ++out.back().second;
    else
      out.emplace_back(x, 1);
  }
  return out;
}

}  // namespace

std::pair<Scalar, Sequence> seq_binomial(const Sequence& v, const Sequence& w) {
  const auto vr = runs(v);
  const auto wr = runs(w);
  Scalar coeff = 1;
  Sequence quotient;
  std::size_t j = 0;
  for (const auto& [x, p] : vr) {
    std::size_t q = 0;
    if (j < wr.size() && wr[j].first == x) q = wr[j++].second;
    if (q > p) throw std::invalid_argument("seq_binomial: W does not divide V");
    coeff *= binomial(p, q);
    quotient.insert(quotient.end(), p - q, x);
  }
  if (j != wr.size()) throw std::invalid_argument("seq_binomial: W does not divide V");
  return {coeff, quotient};
}

std::vector<Sequence> sub_sequences(const Sequence& v) {
  const auto vr = runs(v);
  std::vector<Sequence> out{{}};
  for (const auto& [x, p] : vr) {
    std::vector<Sequence> next;
    for (const auto& w : out)
      for (std::size_t q = 0; q <= p; ++q) {
        Sequence ext = w;
        ext.insert(ext.end(), q, x);
        next.push_back(std::move(ext));
      }
    out = std::move(next);
  }
  return out;
}

std::string sequence_to_string(const GeneratorFamily& family, const Sequence& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += family[v[i]].label;
  }
  return s + ")";
}

}  // namespace hopfadams
