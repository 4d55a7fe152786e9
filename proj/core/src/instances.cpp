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

#include "hopfadams/instances.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hopfadams {

namespace {

using Letters = std::vector<unsigned>;

std::string word_label(const Letters& w) {
  if (w.empty()) return "1";
  std::string s;
  for (unsigned x : w) s += static_cast<char>('a' + x);
  return s;
}

void validate(const InstanceSpec& spec) {
  if (spec.generator_degrees.empty()) throw std::invalid_argument("instance: at least one generator required");
  if (spec.generator_degrees.size() > 26) throw std::invalid_argument("instance: at most 26 generators");
  const std::size_t rank = spec.generator_degrees.front().rank();
  for (const auto& d : spec.generator_degrees) {
    if (d.rank() != rank) throw std::invalid_argument("instance: generator degrees have mixed ranks");
    if (d.is_zero()) throw std::invalid_argument("instance: generator of zero degree");
  }
}

struct WordBasis {
  std::map<Letters, BasisIndex> index;
  std::vector<Letters> words;
};

void grow(const InstanceSpec& spec, const MultiDegree& degree, Letters& w,
          std::map<MultiDegree, std::vector<Letters>, GradedLess>& out) {
  out[degree].push_back(w);
  for (unsigned x = 0; x < spec.generator_degrees.size(); ++x) {
    const MultiDegree next = degree + spec.generator_degrees[x];
    if (next.total() > spec.bound) continue;
    w.push_back(x);
    grow(spec, next, w, out);
    w.pop_back();
  }
}

HopfData word_algebra(const InstanceSpec& spec, WordBasis& wb) {
  validate(spec);
  const std::size_t rank = spec.generator_degrees.front().rank();
  std::map<MultiDegree, std::vector<Letters>, GradedLess> by_degree;
  Letters w;
  grow(spec, MultiDegree::zero(rank), w, by_degree);
  std::vector<std::pair<MultiDegree, std::vector<std::string>>> strata;
  for (auto& [d, words] : by_degree) {
    std::sort(words.begin(), words.end());
    std::vector<std::string> labels;
    for (const auto& u : words) labels.push_back(word_label(u));
    strata.emplace_back(d, std::move(labels));
  }
  HopfData h(GradedBasis(rank, spec.bound, strata));
  for (const auto& [d, words] : by_degree)
    for (const auto& u : words) {
      wb.index[u] = h.basis().index(word_label(u));
      wb.words.push_back(u);
    }
  std::sort(wb.words.begin(), wb.words.end(),
            [&](const Letters& a, const Letters& b) { return wb.index[a] < wb.index[b]; });
  return h;
}

void shuffle_words(const Letters& a, std::size_t i, const Letters& b, std::size_t j, Letters& acc,
                   std::map<Letters, Scalar>& out) {
  if (i == a.size() && j == b.size()) {
    out[acc] += 1;
    return;
  }
  if (i < a.size()) {
    acc.push_back(a[i]);
    shuffle_words(a, i + 1, b, j, acc, out);
    acc.pop_back();
  }
  if (j < b.size()) {
    acc.push_back(b[j]);
    shuffle_words(a, i, b, j + 1, acc, out);
    acc.pop_back();
  }
}

bool in_bound(const HopfData& h, BasisIndex i, BasisIndex j) { return h.product_in_bound(i, j); }

}  // namespace

HopfData build_tensor_hopf(const InstanceSpec& spec) {
  WordBasis wb;
  HopfData h = word_algebra(spec, wb);
  for (const auto& a : wb.words)
    for (const auto& b : wb.words) {
      const BasisIndex i = wb.index.at(a);
      const BasisIndex j = wb.index.at(b);
      if (!in_bound(h, i, j)) continue;
      Letters ab = a;
      ab.insert(ab.end(), b.begin(), b.end());
      h.set_product(i, j, Element::basis(wb.index.at(ab)));
    }
  for (const auto& w : wb.words) {
    Tensor t;
    const std::size_t n = w.size();
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
      Letters left, right;
      for (std::size_t k = 0; k < n; ++k) ((mask >> k) & 1UL ? left : right).push_back(w[k]);
      t.add(wb.index.at(left), wb.index.at(right), 1);
    }
    h.set_coproduct(wb.index.at(w), std::move(t));
  }
  return h;
}

HopfData build_shuffle_hopf(const InstanceSpec& spec) {
  WordBasis wb;
  HopfData h = word_algebra(spec, wb);
  for (const auto& a : wb.words)
    for (const auto& b : wb.words) {
      const BasisIndex i = wb.index.at(a);
      const BasisIndex j = wb.index.at(b);
      if (!in_bound(h, i, j)) continue;
      std::map<Letters, Scalar> terms;
      Letters acc;
      shuffle_words(a, 0, b, 0, acc, terms);
      Element e;
      for (const auto& [w, c] : terms) e.add(wb.index.at(w), c);
      h.set_product(i, j, std::move(e));
    }
  for (const auto& w : wb.words) {
    Tensor t;
    for (std::size_t k = 0; k <= w.size(); ++k)
      t.add(wb.index.at(Letters(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k))),
            wb.index.at(Letters(w.begin() + static_cast<std::ptrdiff_t>(k), w.end())), 1);
    h.set_coproduct(wb.index.at(w), std::move(t));
  }
  return h;
}

HopfData build_instance(const InstanceSpec& spec) {
  return spec.kind == InstanceKind::Tensor ? build_tensor_hopf(spec) : build_shuffle_hopf(spec);
}

Report check_duality(const HopfData& tensor, const HopfData& shuffle) {
  Report report("tensor/shuffle duality");
  const GradedBasis& tb = tensor.basis();
  const GradedBasis& sb = shuffle.basis();
  if (!(tb == sb)) {
    report.fail("same word basis", "bases differ");
    return report;
  }
  report.pass("same word basis");
  const std::size_t n = tb.size();
  std::optional<std::string> first, second;
  for (BasisIndex a = 0; a < n; ++a)
    for (BasisIndex b = 0; b < n; ++b) {
      if (!tensor.product_in_bound(a, b)) continue;
      const Element& ab = tensor.product(a, b);
      const Element& ba_shuffle = shuffle.product(a, b);
      for (BasisIndex c = 0; c < n; ++c) {
        if (tb.degree_of(c) != tb.degree_of(a) + tb.degree_of(b)) continue;
        if (!first && ab.coefficient(c) != shuffle.coproduct(c).coefficient(a, b))
          first = "<" + tb.label(a) + "*" + tb.label(b) + ", " + tb.label(c) + ">";
        if (!second && tensor.coproduct(c).coefficient(a, b) != ba_shuffle.coefficient(c))
          second = "<Delta " + tb.label(c) + ", " + tb.label(a) + " (x) " + tb.label(b) + ">";
      }
    }
  report.record("product of tensor dual to coproduct of shuffle", !first, first.value_or(""));
  report.record("coproduct of tensor dual to product of shuffle", !second, second.value_or(""));
  return report;
}

bool is_commutative(const HopfData& h) {
  const std::size_t n = h.basis().size();
  for (BasisIndex i = 0; i < n; ++i)
    for (BasisIndex j = i + 1; j < n; ++j)
      if (h.product_in_bound(i, j) && !(h.product(i, j) == h.product(j, i))) return false;
  return true;
}

bool is_cocommutative(const HopfData& h) {
  for (BasisIndex i = 0; i < h.basis().size(); ++i) {
    const Tensor& t = h.coproduct(i);
    for (const auto& [key, c] : t.terms())
      if (t.coefficient(key.second, key.first) != c) return false;
  }
  return true;
}

}  // namespace hopfadams
