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

#include "hopfadams/ssym.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hopfadams {

Permutation::Permutation(std::vector<unsigned> one_line) : entries_(std::move(one_line)) {
  std::vector<bool> seen(entries_.size() + 1, false);
  for (unsigned v : entries_) {
    if (v == 0 || v > entries_.size() || seen[v])
      throw std::invalid_argument("Permutation: entries are not a permutation of 1.." + std::to_string(entries_.size()));
    seen[v] = true;
  }
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<unsigned> entries;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t end = std::min(text.find(',', start), text.size());
      const std::string_view piece = text.substr(start, end - start);
      if (piece.empty() || !std::all_of(piece.begin(), piece.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw std::invalid_argument("Permutation: malformed entry in '" + std::string(text) + "'");
      entries.push_back(static_cast<unsigned>(std::stoul(std::string(piece))));
      start = end + 1;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw std::invalid_argument("Permutation: malformed '" + std::string(text) + "'");
      entries.push_back(static_cast<unsigned>(c - '0'));
    }
  }
  return Permutation(std::move(entries));
}

std::string Permutation::to_string() const {
  std::string s;
  const bool wide = entries_.size() >= 10;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (wide && i) s += ',';
    s += std::to_string(entries_[i]);
  }
  return s;
}

std::vector<Permutation> permutations_of(unsigned m) {
  std::vector<unsigned> v(m);
  std::iota(v.begin(), v.end(), 1U);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::size_t lex_rank(const Permutation& p) {
  const std::size_t m = p.size();
  std::size_t rank = 0;
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < m; ++j)
      if (p[j] < p[i]) ++smaller;
    rank = rank * (m - i) + smaller;
  }
  return rank;
}

Permutation direct_sum(const Permutation& a, const Permutation& b) {
  std::vector<unsigned> v = a.entries();
  const auto shift = static_cast<unsigned>(a.size());
  for (unsigned x : b.entries()) v.push_back(x + shift);
  return Permutation(std::move(v));
}

Permutation standardize(std::span<const unsigned> values) {
  std::vector<unsigned> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<unsigned> out;
  out.reserve(values.size());
  for (unsigned v : values)
    out.push_back(static_cast<unsigned>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1);
  return Permutation(std::move(out));
}

Permutation inverse(const Permutation& p) {
  std::vector<unsigned> v(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) v[p[i] - 1] = static_cast<unsigned>(i + 1);
  return Permutation(std::move(v));
}

std::vector<Permutation> connected_split(const Permutation& p) {
  std::vector<Permutation> out;
  unsigned max = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    max = std::max(max, p[i]);
    if (max == i + 1) {
      std::vector<unsigned> block;
      for (std::size_t j = start; j <= i; ++j) block.push_back(p[j] - static_cast<unsigned>(start));
      out.emplace_back(std::move(block));
      start = i + 1;
    }
  }
  return out;
}

bool is_connected(const Permutation& p) { return connected_split(p).size() == 1; }

Permutation join(const std::vector<Permutation>& parts) {
  Permutation out;
  for (const auto& q : parts) out = direct_sum(out, q);
  return out;
}

std::strong_ordering prec_compare(const Permutation& a, const Permutation& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return b.size() <=> a.size();
}

std::strong_ordering letter_compare(LetterOrder order, const Permutation& a, const Permutation& b) {
  if (order == LetterOrder::DegreeFirst && a.size() != b.size()) return a.size() <=> b.size();
  return prec_compare(a, b);
}

std::strong_ordering phi_compare(LetterOrder order, const Permutation& a, const Permutation& b) {
  const auto wa = connected_split(a);
  const auto wb = connected_split(b);
  const std::size_t n = std::min(wa.size(), wb.size());
  for (std::size_t i = 0; i < n; ++i)
    if (wa[i] != wb[i]) return letter_compare(order, wa[i], wb[i]);
  return wb.size() <=> wa.size();
}

namespace {

// The distinct connected permutations in `parts` as an alphabet under the
// letter order, and each part's letter.
struct LocalAlphabet {
  Alphabet alphabet;
  std::vector<Permutation> letters;
  Word word;
};

LocalAlphabet local_alphabet(const std::vector<Permutation>& parts, LetterOrder order) {
  LocalAlphabet la;
  la.letters = parts;
  std::sort(la.letters.begin(), la.letters.end(),
            [order](const Permutation& x, const Permutation& y) { return letter_compare(order, x, y) < 0; });
  la.letters.erase(std::unique(la.letters.begin(), la.letters.end()), la.letters.end());
  for (const auto& q : la.letters) la.alphabet.add(q.to_string(), MultiDegree{static_cast<unsigned>(q.size())});
  for (const auto& q : parts)
    la.word.push_back(static_cast<Letter>(std::find(la.letters.begin(), la.letters.end(), q) - la.letters.begin()));
  return la;
}

Permutation join_word(const LocalAlphabet& la, const Word& w) {
  std::vector<Permutation> parts;
  for (Letter x : w) parts.push_back(la.letters[x]);
  return join(parts);
}

}  // namespace

PermClass classify(const Permutation& p, LetterOrder order) {
  PermClass c;
  if (p.empty()) return c;
  const auto split = connected_split(p);
  c.connected = split.size() == 1;
  const LocalAlphabet la = local_alphabet(split, order);
  for (const Word& f : lyndon_factorize(la.alphabet, la.word)) c.factors.push_back(join_word(la, f));
  c.lyndon = c.factors.size() == 1;
  return c;
}

std::strong_ordering perm_compare(PermOrder order, const Permutation& a, const Permutation& b, LetterOrder letters) {
  if (order == PermOrder::Prec) return phi_compare(letters, a, b);
  const auto fa = classify(a, letters).factors;
  const auto fb = classify(b, letters).factors;
  const auto c = compare_sequences(
      order == PermOrder::PrecL ? SeqOrder::L : SeqOrder::R, fa, fb,
      [](const Permutation& q) { return MultiDegree{static_cast<unsigned>(q.size())}; },
      [letters](const Permutation& x, const Permutation& y) { return phi_compare(letters, x, y); });
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::vector<Permutation> sorted_permutations(unsigned m, PermOrder order, LetterOrder letters) {
  auto perms = permutations_of(m);
  std::stable_sort(perms.begin(), perms.end(), [&](const Permutation& a, const Permutation& b) {
    return perm_compare(order, a, b, letters) < 0;
  });
  return perms;
}

std::string f_label(const Permutation& p) { return p.empty() ? "1" : "F:" + p.to_string(); }

namespace {

void shuffle_into(const std::vector<unsigned>& a, std::size_t i, const std::vector<unsigned>& b, std::size_t j,
                  std::vector<unsigned>& acc, std::vector<Permutation>& out) {
  if (i == a.size() && j == b.size()) {
    out.emplace_back(acc);
    return;
  }
  if (i < a.size()) {
    acc.push_back(a[i]);
    shuffle_into(a, i + 1, b, j, acc, out);
    acc.pop_back();
  }
  if (j < b.size()) {
    acc.push_back(b[j]);
    shuffle_into(a, i, b, j + 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Permutation> shifted_shuffles(const Permutation& a, const Permutation& b) {
  std::vector<unsigned> shifted;
  for (unsigned x : b.entries()) shifted.push_back(x + static_cast<unsigned>(a.size()));
  std::vector<Permutation> out;
  std::vector<unsigned> acc;
  shuffle_into(a.entries(), 0, shifted, 0, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<Permutation, Permutation>> deconcatenations(const Permutation& p) {
  std::vector<std::pair<Permutation, Permutation>> out;
  const auto& e = p.entries();
  for (std::size_t i = 0; i <= e.size(); ++i)
    out.emplace_back(standardize(std::span<const unsigned>(e.data(), i)),
                     standardize(std::span<const unsigned>(e.data() + i, e.size() - i)));
  return out;
}

HopfData build_ssym(unsigned bound) {
  std::vector<std::pair<MultiDegree, std::vector<std::string>>> strata;
  std::vector<std::vector<Permutation>> perms;
  for (unsigned m = 0; m <= bound; ++m) {
    perms.push_back(permutations_of(m));
    std::vector<std::string> labels;
    for (const auto& p : perms.back()) labels.push_back(f_label(p));
    strata.emplace_back(MultiDegree{m}, std::move(labels));
  }
  HopfData h(GradedBasis(1, bound, std::move(strata)));
  std::vector<BasisIndex> offset(bound + 1);
  for (unsigned m = 0; m <= bound; ++m) offset[m] = h.basis().stratum(m).offset;
  auto index = [&](const Permutation& p) { return offset[p.size()] + lex_rank(p); };

  for (unsigned a = 0; a <= bound; ++a)
    for (unsigned b = 0; a + b <= bound; ++b)
      for (const auto& p : perms[a])
        for (const auto& q : perms[b]) {
          Element e;
          for (const auto& w : shifted_shuffles(p, q)) e.add(index(w), 1);
          h.set_product(index(p), index(q), std::move(e));
        }
  for (unsigned m = 0; m <= bound; ++m)
    for (const auto& p : perms[m]) {
      Tensor t;
      for (const auto& [l, r] : deconcatenations(p)) t.add(index(l), index(r), 1);
      h.set_coproduct(index(p), std::move(t));
    }
  return h;
}

BasisIndex f_index(const HopfData& h, const Permutation& p) { return h.basis().index(f_label(p)); }

Element f_product(const HopfData& h, const Permutation& a, const Permutation& b) {
  return h.product(f_index(h, a), f_index(h, b));
}

Tensor f_coproduct(const HopfData& h, const Permutation& p) { return h.coproduct(f_index(h, p)); }

namespace {

std::vector<std::pair<unsigned, unsigned>> inversions(const Permutation& p) {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned i = 0; i < p.size(); ++i)
    for (unsigned j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) out.emplace_back(i, j);
  return out;
}

}  // namespace

bool weak_leq(WeakSide side, const Permutation& u, const Permutation& w) {
  if (u.size() != w.size()) return false;
  const auto iu = side == WeakSide::Right ? inversions(u) : inversions(inverse(u));
  const auto iw = side == WeakSide::Right ? inversions(w) : inversions(inverse(w));
  return std::includes(iw.begin(), iw.end(), iu.begin(), iu.end());
}

Matrix m_to_f(unsigned m, WeakSide side, ZetaDirection direction) {
  const auto perms = permutations_of(m);
  const std::size_t n = perms.size();
  Matrix zeta(n, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t w = 0; w < n; ++w) {
      const bool related =
          direction == ZetaDirection::Up ? weak_leq(side, perms[u], perms[w]) : weak_leq(side, perms[w], perms[u]);
      if (related) zeta(w, u) = 1;
    }
  auto inv = inverse(zeta);
  if (!inv) throw std::logic_error("m_to_f: zeta matrix is singular");
  return *inv;
}

ConnectedAlphabet connected_alphabet(const HopfData& h, unsigned bound, LetterOrder order) {
  ConnectedAlphabet ca;
  for (unsigned m = 1; m <= bound; ++m)
    for (const auto& p : permutations_of(m))
      if (is_connected(p)) ca.letters.push_back(p);
  std::sort(ca.letters.begin(), ca.letters.end(),
            [order](const Permutation& x, const Permutation& y) { return letter_compare(order, x, y) < 0; });
  for (const auto& p : ca.letters) {
    ca.alphabet.add(p.to_string(), MultiDegree{static_cast<unsigned>(p.size())});
    ca.images.push_back(Element::basis(f_index(h, p)));
  }
  return ca;
}

namespace {

class TBuilder {
 public:
  TBuilder(const HopfData& h, LetterOrder order) : h_(h), order_(order) {}

  const Element& get(const Permutation& p) {
    auto it = memo_.find(p);
    if (it != memo_.end()) return it->second;
    return memo_.emplace(p, compute(p)).first->second;
  }

 private:
  Element compute(const Permutation& p) {
    if (p.empty()) return Element::basis(h_.unit());
    const auto split = connected_split(p);
    if (split.size() == 1) return Element::basis(f_index(h_, p));
    const LocalAlphabet la = local_alphabet(split, order_);
    const auto factors = lyndon_factorize(la.alphabet, la.word);
    if (factors.size() == 1) {
      const auto [left, right] = shirshov_factorize(la.alphabet, la.word);
      return commutator(h_, get(join_word(la, left)), get(join_word(la, right)));
    }
    Element out = Element::basis(h_.unit());
    for (const Word& f : factors) out = multiply(h_, out, get(join_word(la, f)));
    return out;
  }

  const HopfData& h_;
  LetterOrder order_;
  std::map<Permutation, Element> memo_;
};

}  // namespace

Element t_element(const HopfData& h, const Permutation& p, LetterOrder order) {
  TBuilder b(h, order);
  return b.get(p);
}

GeneratorFamily t_family(const HopfData& h, unsigned bound, LetterOrder order) {
  TBuilder builder(h, order);
  std::vector<Permutation> lyndon;
  for (unsigned m = 1; m <= bound; ++m)
    for (const auto& p : permutations_of(m))
      if (classify(p, order).lyndon) lyndon.push_back(p);
  std::sort(lyndon.begin(), lyndon.end(),
            [order](const Permutation& x, const Permutation& y) { return phi_compare(order, x, y) < 0; });
  std::vector<Generator> gens;
  for (const auto& p : lyndon)
    gens.push_back({p.to_string(), MultiDegree{static_cast<unsigned>(p.size())}, builder.get(p), std::nullopt});
  return GeneratorFamily(1, std::move(gens));
}

Sequence t_sequence(const GeneratorFamily& family, const Permutation& p, LetterOrder order) {
  Sequence v;
  for (const auto& f : classify(p, order).factors) {
    const auto i = family.find(f.to_string());
    if (!i) throw std::out_of_range("t_sequence: factor " + f.to_string() + " is not in the family");
    v.push_back(*i);
  }
  return v;
}

Matrix t_to_f(const HopfData& h, const std::vector<Permutation>& order, LetterOrder letters) {
  TBuilder builder(h, letters);
  if (order.empty()) return Matrix();
  const auto s = h.basis().stratum_of_degree(MultiDegree{static_cast<unsigned>(order.front().size())});
  if (!s) throw DegreeOverflow("t_to_f: size beyond the algebra bound");
  const std::size_t dim = h.basis().stratum(*s).dim();
  Matrix m(dim, order.size());
  for (std::size_t c = 0; c < order.size(); ++c) m.set_column(c, component(h, builder.get(order[c]), *s));
  return m;
}

}  // namespace hopfadams
