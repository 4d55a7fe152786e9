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

#include "hopfadams/hopf.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <tuple>

namespace hopfadams {

// ---------------------------------------------------------------- Element

Element Element::basis(BasisIndex i, const Scalar& c) {
  Element e;
  e.add(i, c);
  return e;
}

void Element::add(BasisIndex i, const Scalar& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Scalar Element::coefficient(BasisIndex i) const {
  auto it = terms_.find(i);
  return it == terms_.end() ? Scalar(0) : it->second;
}

Element& Element::operator+=(const Element& other) {
  for (const auto& [i, c] : other.terms_) add(i, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  for (const auto& [i, c] : other.terms_) add(i, -c);
  return *this;
}

Element& Element::operator*=(const Scalar& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [i, c] : terms_) c *= s;
  return *this;
}

// ---------------------------------------------------------------- Tensor

void Tensor::add(BasisIndex left, BasisIndex right, const Scalar& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace({left, right}, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Tensor& Tensor::operator+=(const Tensor& other) {
  for (const auto& [k, c] : other.terms_) add(k.first, k.second, c);
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& other) {
  for (const auto& [k, c] : other.terms_) add(k.first, k.second, -c);
  return *this;
}

Tensor& Tensor::operator*=(const Scalar& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

Scalar Tensor::coefficient(BasisIndex left, BasisIndex right) const {
  auto it = terms_.find({left, right});
  return it == terms_.end() ? Scalar(0) : it->second;
}

std::vector<TensorTerm> Tensor::to_terms() const {
  std::vector<TensorTerm> out;
  out.reserve(terms_.size());
  for (const auto& [k, c] : terms_) out.push_back({k.first, k.second, c});
  return out;
}

// ---------------------------------------------------------------- GradedBasis

GradedBasis::GradedBasis(std::size_t rank, unsigned bound,
                         std::vector<std::pair<MultiDegree, std::vector<std::string>>> strata)
    : rank_(rank), bound_(bound) {
  std::sort(strata.begin(), strata.end(),
            [](const auto& a, const auto& b) { return graded_compare(a.first, b.first) < 0; });
  for (std::size_t i = 0; i < strata.size(); ++i) {
    const auto& [deg, labels] = strata[i];
    if (deg.rank() != rank) throw std::invalid_argument("GradedBasis: degree " + deg.to_string() + " has wrong rank");
    if (deg.total() > bound)
      throw std::invalid_argument("GradedBasis: degree " + deg.to_string() + " exceeds the bound");
    if (i > 0 && deg == strata[i - 1].first)
      throw std::invalid_argument("GradedBasis: degree " + deg.to_string() + " listed twice");
  }
  if (strata.empty() || !strata.front().first.is_zero())
    throw std::invalid_argument("GradedBasis: missing degree-zero stratum (not connected)");
  if (strata.front().second.size() != 1)
    throw std::invalid_argument("GradedBasis: degree-zero stratum must have dimension 1 (connectedness)");

  for (auto& [deg, labels] : strata) {
    if (labels.empty()) continue;
    Stratum s{deg, std::move(labels), total_};
    for (const auto& l : s.labels) {
      if (!by_label_.emplace(l, total_).second)
        throw std::invalid_argument("GradedBasis: duplicate label '" + l + "'");
      labels_.push_back(l);
      degrees_.push_back(deg);
      stratum_index_.push_back(strata_.size());
      ++total_;
    }
    strata_.push_back(std::move(s));
  }
}

std::optional<std::size_t> GradedBasis::stratum_of_degree(const MultiDegree& d) const {
  auto it = std::lower_bound(strata_.begin(), strata_.end(), d, [](const Stratum& s, const MultiDegree& x) {
    return graded_compare(s.degree, x) < 0;
  });
  if (it == strata_.end() || !(it->degree == d)) return std::nullopt;
  return static_cast<std::size_t>(it - strata_.begin());
}

const std::string& GradedBasis::label(BasisIndex i) const { return labels_.at(i); }

std::optional<BasisIndex> GradedBasis::find(const std::string& label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

BasisIndex GradedBasis::index(const std::string& label) const {
  auto i = find(label);
  if (!i) throw std::invalid_argument("unknown basis label '" + label + "'");
  return *i;
}

// ---------------------------------------------------------------- HopfData

namespace {
constexpr std::size_t kNoSlot = std::numeric_limits<std::size_t>::max();
}

HopfData::HopfData(GradedBasis basis) : basis_(std::move(basis)) {
  const auto& strata = basis_.strata();
  pair_slot_.assign(strata.size(), std::vector<std::size_t>(strata.size(), kNoSlot));
  std::size_t next = 0;
  for (std::size_t a = 0; a < strata.size(); ++a) {
    for (std::size_t b = 0; b < strata.size(); ++b) {
      if (strata[a].degree.total() + strata[b].degree.total() > basis_.bound()) continue;
      pair_slot_[a][b] = next;
      next += strata[a].dim() * strata[b].dim();
    }
  }
  products_.assign(next, Element());
  product_set_.assign(next, false);
  coproduct_.assign(basis_.size(), Tensor());
}

std::size_t HopfData::slot(BasisIndex i, BasisIndex j) const {
  const std::size_t a = basis_.stratum_of(i);
  const std::size_t b = basis_.stratum_of(j);
  const std::size_t base = pair_slot_[a][b];
  if (base == kNoSlot) return kNoSlot;
  return base + basis_.local_index(i) * basis_.stratum(b).dim() + basis_.local_index(j);
}

bool HopfData::product_in_bound(BasisIndex i, BasisIndex j) const { return slot(i, j) != kNoSlot; }

bool HopfData::has_product(BasisIndex i, BasisIndex j) const {
  const std::size_t s = slot(i, j);
  return s != kNoSlot && product_set_[s];
}

const Element& HopfData::product(BasisIndex i, BasisIndex j) const {
  const std::size_t s = slot(i, j);
  if (s == kNoSlot)
    throw DegreeOverflow("product of " + basis_.label(i) + " and " + basis_.label(j) + " exceeds the degree bound");
  return products_[s];
}

void HopfData::set_product(BasisIndex i, BasisIndex j, Element value) {
  const std::size_t s = slot(i, j);
  if (s == kNoSlot)
    throw DegreeOverflow("product of " + basis_.label(i) + " and " + basis_.label(j) + " exceeds the degree bound");
  products_[s] = std::move(value);
  product_set_[s] = true;
}

void HopfData::set_coproduct(BasisIndex i, Tensor value) { coproduct_.at(i) = std::move(value); }

// ---------------------------------------------------------------- operations

Element multiply(const HopfData& h, const Element& a, const Element& b) {
  Element out;
  for (const auto& [i, ci] : a) {
    for (const auto& [j, cj] : b) {
      const Scalar c = ci * cj;
      for (const auto& [k, ck] : h.product(i, j)) out.add(k, c * ck);
    }
  }
  return out;
}

Tensor comultiply(const HopfData& h, const Element& a) {
  Tensor out;
  for (const auto& [i, c] : a) {
    for (const auto& [k, ck] : h.coproduct(i).terms()) out.add(k.first, k.second, c * ck);
  }
  return out;
}

Tensor multiply(const HopfData& h, const Tensor& a, const Tensor& b) {
  Tensor out;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      const Scalar c = ca * cb;
      const Element& left = h.product(ka.first, kb.first);
      const Element& right = h.product(ka.second, kb.second);
      for (const auto& [l, cl] : left)
        for (const auto& [r, cr] : right) out.add(l, r, c * cl * cr);
    }
  }
  return out;
}

Element commutator(const HopfData& h, const Element& a, const Element& b) {
  return multiply(h, a, b) - multiply(h, b, a);
}

namespace {

const Element& image_of(const std::vector<Element>& images, Letter x) {
  if (x >= images.size()) throw std::invalid_argument("evaluate_word: letter " + std::to_string(x) + " has no image");
  return images[x];
}

}  // namespace

Element evaluate_word(const HopfData& h, const std::vector<Element>& images, const Word& w) {
  Element out = Element::basis(h.unit());
  for (Letter x : w) out = multiply(h, out, image_of(images, x));
  return out;
}

Element evaluate_word(const HopfData& h, const std::vector<Element>& images, const ShirshovTree& t) {
  if (t.is_leaf()) return image_of(images, t.letter());
  return commutator(h, evaluate_word(h, images, t.left()), evaluate_word(h, images, t.right()));
}

std::optional<MultiDegree> homogeneous_degree(const HopfData& h, const Element& a) {
  if (a.is_zero()) return std::nullopt;
  const MultiDegree& d = h.basis().degree_of(a.begin()->first);
  for (const auto& [i, c] : a)
    if (!(h.basis().degree_of(i) == d)) return std::nullopt;
  return d;
}

std::vector<Scalar> component(const HopfData& h, const Element& a, std::size_t stratum) {
  const Stratum& s = h.basis().stratum(stratum);
  std::vector<Scalar> out(s.dim(), Scalar(0));
  for (const auto& [i, c] : a)
    if (i >= s.offset && i < s.offset + s.dim()) out[i - s.offset] = c;
  return out;
}

Element from_component(const HopfData& h, std::size_t stratum, std::span<const Scalar> coords) {
  const Stratum& s = h.basis().stratum(stratum);
  if (coords.size() != s.dim()) throw std::invalid_argument("from_component: size mismatch");
  Element out;
  for (std::size_t k = 0; k < coords.size(); ++k) out.add(s.offset + k, coords[k]);
  return out;
}

std::string to_string(const HopfData& h, const Element& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : a) {
    const bool neg = sgn(c) < 0;
    if (first) os << (neg ? "-" : "");
    else os << (neg ? " - " : " + ");
    first = false;
    const Scalar mag = abs(c);
    if (mag != 1) os << to_display_string(mag) << ' ';
    os << h.basis().label(i);
  }
  return os.str();
}

std::string to_string(const HopfData& h, const Tensor& t) {
  if (t.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t.terms()) {
    const bool neg = sgn(c) < 0;
    if (first) os << (neg ? "-" : "");
    else os << (neg ? " - " : " + ");
    first = false;
    const Scalar mag = abs(c);
    if (mag != 1) os << to_display_string(mag) << ' ';
    os << h.basis().label(k.first) << "(x)" << h.basis().label(k.second);
  }
  return os.str();
}

// ---------------------------------------------------------------- verification

namespace {

using Triple = std::map<std::tuple<BasisIndex, BasisIndex, BasisIndex>, Scalar>;

void add_triple(Triple& t, BasisIndex a, BasisIndex b, BasisIndex c, const Scalar& v) {
  if (sgn(v) == 0) return;
  auto [it, ins] = t.try_emplace({a, b, c}, v);
  if (!ins) {
    it->second += v;
    if (sgn(it->second) == 0) t.erase(it);
  }
}

}  // namespace

Report verify_bialgebra(const HopfData& h) {
  Report report("bialgebra axioms");
  const auto& basis = h.basis();
  const std::size_t n = basis.size();
  const BasisIndex one = h.unit();
  auto lbl = [&](BasisIndex i) { return basis.label(i); };

  // Connectedness is enforced by GradedBasis; recorded for the report.
  report.record("connected (dim H_0 = 1)",
                basis.strata().front().degree.is_zero() && basis.strata().front().dim() == 1);

  // Product table completeness and grading.
  {
    bool ok = true;
    std::string witness;
    for (BasisIndex i = 0; i < n && ok; ++i) {
      for (BasisIndex j = 0; j < n && ok; ++j) {
        if (!h.product_in_bound(i, j)) continue;
        if (!h.has_product(i, j)) {
          ok = false;
          witness = "product " + lbl(i) + " * " + lbl(j) + " missing from the table";
          break;
        }
        const MultiDegree target = basis.degree_of(i) + basis.degree_of(j);
        for (const auto& [k, c] : h.product(i, j)) {
          if (!(basis.degree_of(k) == target)) {
            ok = false;
            witness = lbl(i) + " * " + lbl(j) + " has a term " + lbl(k) + " of degree " +
                      basis.degree_of(k).to_string() + ", expected " + target.to_string();
            break;
          }
        }
      }
    }
    report.record("product grading H_a H_b in H_(a+b)", ok, witness);
  }
  {
    bool ok = true;
    std::string witness;
    for (BasisIndex i = 0; i < n && ok; ++i) {
      for (const auto& [k, c] : h.coproduct(i).terms()) {
        if (!(basis.degree_of(k.first) + basis.degree_of(k.second) == basis.degree_of(i))) {
          ok = false;
          witness = "Delta(" + lbl(i) + ") has a term " + lbl(k.first) + "(x)" + lbl(k.second);
          break;
        }
      }
    }
    report.record("coproduct grading", ok, witness);
  }

  // Unit laws.
  {
    bool ok = true;
    std::string witness;
    for (BasisIndex i = 0; i < n && ok; ++i) {
      if (!(h.product(one, i) == Element::basis(i))) {
        ok = false;
        witness = "1 * " + lbl(i) + " = " + to_string(h, h.product(one, i));
      } else if (!(h.product(i, one) == Element::basis(i))) {
        ok = false;
        witness = lbl(i) + " * 1 = " + to_string(h, h.product(i, one));
      }
    }
    report.record("unit laws 1 a = a 1 = a", ok, witness);
  }
  {
    Tensor expect;
    expect.add(one, one, Scalar(1));
    report.record("Delta(1) = 1 (x) 1", h.coproduct(one) == expect,
                  h.coproduct(one) == expect ? "" : to_string(h, h.coproduct(one)));
  }

  // Counit laws.
  {
    bool ok = true;
    std::string witness;
    for (BasisIndex i = 0; i < n && ok; ++i) {
      Element left;
      Element right;
      for (const auto& [k, c] : h.coproduct(i).terms()) {
        left.add(k.second, c * h.counit(k.first));
        right.add(k.first, c * h.counit(k.second));
      }
      if (!(left == Element::basis(i)) || !(right == Element::basis(i))) {
        ok = false;
        witness = "counit fails on " + lbl(i);
      }
    }
    report.record("counit laws (eps (x) id) Delta = (id (x) eps) Delta = id", ok, witness);
  }

  // Associativity on positive-degree triples.
  {
    bool ok = true;
    std::string witness;
    for (BasisIndex i = 1; i < n && ok; ++i) {
      for (BasisIndex j = 1; j < n && ok; ++j) {
        if (!h.product_in_bound(i, j)) continue;
        const Element& ij = h.product(i, j);
        for (BasisIndex k = 1; k < n && ok; ++k) {
          if (basis.degree_of(i).total() + basis.degree_of(j).total() + basis.degree_of(k).total() > h.bound())
            continue;
          const Element lhs = multiply(h, ij, Element::basis(k));
          const Element rhs = multiply(h, Element::basis(i), h.product(j, k));
          if (!(lhs == rhs)) {
            ok = false;
            witness = "(" + lbl(i) + " " + lbl(j) + ") " + lbl(k) + " = " + to_string(h, lhs) + " but " + lbl(i) +
                      " (" + lbl(j) + " " + lbl(k) + ") = " + to_string(h, rhs);
          }
        }
      }
    }
    report.record("associativity", ok, witness);
  }

  // Coassociativity.
  {
    bool ok = true;
    std::string witness;
    for (BasisIndex i = 0; i < n && ok; ++i) {
      Triple lhs;
      Triple rhs;
      for (const auto& [k, c] : h.coproduct(i).terms()) {
        for (const auto& [kk, cc] : h.coproduct(k.first).terms()) add_triple(lhs, kk.first, kk.second, k.second, c * cc);
        for (const auto& [kk, cc] : h.coproduct(k.second).terms()) add_triple(rhs, k.first, kk.first, kk.second, c * cc);
      }
      if (lhs != rhs) {
        ok = false;
        witness = "(Delta (x) id) Delta != (id (x) Delta) Delta on " + lbl(i);
      }
    }
    report.record("coassociativity", ok, witness);
  }

  // Delta is multiplicative.
  {
    bool ok = true;
    std::string witness;
    for (BasisIndex i = 1; i < n && ok; ++i) {
      for (BasisIndex j = 1; j < n && ok; ++j) {
        if (!h.product_in_bound(i, j)) continue;
        const Tensor lhs = comultiply(h, h.product(i, j));
        const Tensor rhs = multiply(h, h.coproduct(i), h.coproduct(j));
        if (!(lhs == rhs)) {
          ok = false;
          witness = "Delta(" + lbl(i) + " " + lbl(j) + ") = " + to_string(h, lhs) + " but Delta(" + lbl(i) +
                    ") Delta(" + lbl(j) + ") = " + to_string(h, rhs);
        }
      }
    }
    report.record("Delta(ab) = Delta(a) Delta(b)", ok, witness);
  }
  return report;
}

}  // namespace hopfadams
