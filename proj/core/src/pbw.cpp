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

#include "hopfadams/pbw.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hopfadams {

namespace {

std::size_t strata_within(const HopfData& h, unsigned bound) {
  std::size_t n = 0;
  for (const auto& st : h.basis().strata())
    if (st.degree.total() <= bound) ++n;
  return n;
}

std::vector<Scalar> local_coords(const HopfData& h, const Element& a, std::size_t stratum) {
  return component(h, a, stratum);
}

}  // namespace

PBWBasis PBWBasis::build(const HopfData& h, GeneratorFamily family, unsigned bound) {
  if (bound > h.bound()) throw std::invalid_argument("PBWBasis: bound exceeds the algebra bound");
  if (family.rank() != h.basis().rank()) throw std::invalid_argument("PBWBasis: grading rank mismatch");
  for (const auto& g : family.generators()) {
    if (g.degree.total() > bound) continue;
    const auto d = homogeneous_degree(h, g.element);
    if (!d || *d != g.degree)
      throw std::invalid_argument("PBWBasis: generator " + g.label + " is not homogeneous of degree " +
                                  g.degree.to_string());
  }

  PBWBasis b;
  b.hopf_ = &h;
  b.family_ = std::move(family);
  b.bound_ = bound;
  const GradedBasis& basis = h.basis();

  for (const auto& d : degrees_up_to(basis.rank(), bound)) {
    if (basis.stratum_of_degree(d)) continue;
    const auto extra = enumerate_sorted(b.family_, d);
    if (!extra.empty())
      throw NotABasis("PBWBasis: " + std::to_string(extra.size()) + " sorted sequences in degree " + d.to_string() +
                      " where the algebra is zero");
  }

  std::map<Sequence, Element> cache;
  cache.emplace(Sequence{}, Element::basis(h.unit()));
  auto product_along = [&](const Sequence& v) -> const Element& {
    // Every proper prefix of a sorted sequence is sorted and of lower degree,
    // so it is already cached when strata are processed in graded order.
    auto it = cache.find(v);
    if (it != cache.end()) return it->second;
    Sequence prefix(v.begin(), v.end() - 1);
    auto pit = cache.find(prefix);
    Element base = pit != cache.end() ? pit->second : b.z(prefix);
    return cache.emplace(v, multiply(h, base, b.family_[v.back()].element)).first->second;
  };

  const std::size_t strata = strata_within(h, bound);
  for (std::size_t s = 0; s < strata; ++s) {
    const Stratum& st = basis.stratum(s);
    auto seqs = enumerate_sorted(b.family_, st.degree);
    if (seqs.size() != st.dim())
      throw NotABasis("PBWBasis: degree " + st.degree.to_string() + " has " + std::to_string(seqs.size()) +
                      " sorted sequences but dimension " + std::to_string(st.dim()));
    Matrix m(st.dim(), st.dim());
    for (std::size_t k = 0; k < seqs.size(); ++k) m.set_column(k, local_coords(h, product_along(seqs[k]), s));
    auto inv = hopfadams::inverse(m);
    if (!inv) throw NotABasis("PBWBasis: expansion matrix in degree " + st.degree.to_string() + " is singular");
    b.sequences_.push_back(std::move(seqs));
    b.expansion_.push_back(std::move(m));
    b.inverse_.push_back(std::move(*inv));
  }
  return b;
}

std::optional<std::size_t> PBWBasis::position(std::size_t stratum, const Sequence& v) const {
  const auto& seqs = sequences_.at(stratum);
  auto it = std::find(seqs.begin(), seqs.end(), v);
  if (it == seqs.end()) return std::nullopt;
  return static_cast<std::size_t>(it - seqs.begin());
}

Element PBWBasis::z(const Sequence& v) const {
  Element out = Element::basis(hopf_->unit());
  for (std::size_t x : v) out = multiply(*hopf_, out, family_[x].element);
  return out;
}

std::map<Sequence, Scalar> PBWBasis::decompose(const Element& a) const {
  const GradedBasis& basis = hopf_->basis();
  std::set<std::size_t> touched;
  for (const auto& [i, c] : a) {
    const std::size_t s = basis.stratum_of(i);
    if (s >= strata()) throw DegreeOverflow("PBWBasis::decompose: component beyond the basis bound");
    touched.insert(s);
  }
  std::map<Sequence, Scalar> out;
  for (std::size_t s : touched) {
    const auto coords = inverse_[s] * std::span<const Scalar>(component(*hopf_, a, s));
    for (std::size_t k = 0; k < coords.size(); ++k)
      if (sgn(coords[k]) != 0) out.emplace(sequences_[s][k], coords[k]);
  }
  return out;
}

GradedMap to_pbw_basis(const PBWBasis& basis, const GradedMap& f) {
  const std::size_t n = std::min(basis.strata(), f.strata());
  std::vector<Matrix> blocks;
  for (std::size_t s = 0; s < n; ++s) blocks.push_back(basis.inverse(s) * f.block(s) * basis.expansion(s));
  return GradedMap(std::move(blocks));
}

std::vector<TriangularReport> triangular_check(const ConvolutionContext& ctx, const PBWBasis& basis,
                                               const GradedMap& f,
                                               const std::function<Scalar(const Sequence&)>& expected_diagonal) {
  const std::size_t n = std::min({ctx.strata(), basis.strata(), f.strata()});
  const GeneratorFamily& fam = basis.family();
  std::vector<TriangularReport> out;
  for (std::size_t s = 0; s < n; ++s) {
    TriangularReport r;
    r.degree = ctx.hopf().basis().stratum(s).degree;
    r.order = basis.sequences(s);
    r.matrix = basis.inverse(s) * f.block(s) * basis.expansion(s);
    const std::size_t d = r.matrix.rows();
    for (std::size_t c = 0; c < d && r.triangular; ++c)
      for (std::size_t row = c + 1; row < d; ++row)
        if (sgn(r.matrix(row, c)) != 0) {
          r.triangular = false;
          r.first_violation = "below the diagonal: row " + sequence_to_string(fam, r.order[row]) + ", column " +
                              sequence_to_string(fam, r.order[c]) + " = " + to_display_string(r.matrix(row, c));
          break;
        }
    for (std::size_t k = 0; k < d; ++k) {
      r.diagonal.push_back(r.matrix(k, k));
      const Scalar want = expected_diagonal(r.order[k]);
      if (r.matrix(k, k) != want && r.diagonal_matches) {
        r.diagonal_matches = false;
        if (r.first_violation.empty())
          r.first_violation = "diagonal at " + sequence_to_string(fam, r.order[k]) + ": " +
                              to_display_string(r.matrix(k, k)) + ", expected " + to_display_string(want);
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

Report summarize(const std::vector<TriangularReport>& reports, const std::string& title) {
  Report report(title);
  for (const auto& r : reports)
    report.record("degree " + r.degree.to_string() + " (" + std::to_string(r.order.size()) + " x " +
                      std::to_string(r.order.size()) + ")",
                  r.passed(), r.first_violation);
  return report;
}

namespace {

bool below(const Sequence& v, std::size_t bound_index) {
  return std::all_of(v.begin(), v.end(), [&](std::size_t x) { return x < bound_index; });
}

// Coordinates of a tensor in the basis z_V (x) z_W.
std::map<std::pair<Sequence, Sequence>, Scalar> decompose_tensor(const PBWBasis& basis, const Tensor& t) {
  const GradedBasis& hb = basis.hopf().basis();
  std::map<std::pair<Sequence, Sequence>, Scalar> out;
  for (const auto& [key, c] : t.terms()) {
    const std::size_t sl = hb.stratum_of(key.first);
    const std::size_t sr = hb.stratum_of(key.second);
    const Matrix& il = basis.inverse(sl);
    const Matrix& ir = basis.inverse(sr);
    const std::size_t jl = hb.local_index(key.first);
    const std::size_t jr = hb.local_index(key.second);
    for (std::size_t a = 0; a < il.rows(); ++a) {
      if (sgn(il(a, jl)) == 0) continue;
      for (std::size_t b = 0; b < ir.rows(); ++b) {
        if (sgn(ir(b, jr)) == 0) continue;
        Scalar& slot = out[{basis.sequences(sl)[a], basis.sequences(sr)[b]}];
        slot += c * il(a, jl) * ir(b, jr);
      }
    }
  }
  std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

}  // namespace

Report verify_pbw_conditions(const HopfData& h, const PBWBasis& basis) {
  Report report("PBW conditions");
  const GeneratorFamily& fam = basis.family();
  const unsigned bound = basis.bound();
  report.pass("(1) z_V form a basis", "expansion invertible in " + std::to_string(basis.strata()) + " strata");

  std::optional<std::string> cop;
  std::size_t checked = 0;
  for (std::size_t x = 0; x < fam.size() && !cop; ++x) {
    if (fam[x].degree.total() > bound) continue;
    ++checked;
    const Element& z = fam[x].element;
    Tensor t = comultiply(h, z);
    for (const auto& [i, c] : z) {
      t.add(h.unit(), i, -c);
      t.add(i, h.unit(), -c);
    }
    for (const auto& [key, c] : decompose_tensor(basis, t)) {
      const auto& [v, w] = key;
      if (v.empty() || w.empty() || !below(v, x) || !below(w, x)) {
        cop = "generator " + fam[x].label + ": term " + to_display_string(c) + " " + sequence_to_string(fam, v) +
              " (x) " + sequence_to_string(fam, w);
        break;
      }
    }
  }
  report.record("(2) reduced coproduct of z_xi in H[xi]+ (x) H[xi]+", !cop,
                cop.value_or(std::to_string(checked) + " generators"));

  std::optional<std::string> hgt;
  std::size_t finite = 0;
  for (std::size_t x = 0; x < fam.size() && !hgt; ++x) {
    if (!fam[x].height) continue;
    const unsigned k = *fam[x].height;
    if (fam[x].degree.total() * k > bound) continue;
    ++finite;
    for (const auto& [v, c] : basis.decompose(basis.z(Sequence(k, x))))
      if (!below(v, x)) {
        hgt = "generator " + fam[x].label + ": power has term " + sequence_to_string(fam, v);
        break;
      }
  }
  report.record("(3) z_xi^h(xi) in H[xi]", !hgt,
                hgt.value_or(finite == 0 ? "all heights infinite within bound"
                                         : std::to_string(finite) + " finite heights"));

  std::optional<std::string> comm;
  std::set<Scalar> measured;
  std::size_t pairs = 0;
  for (std::size_t nu = 0; nu < fam.size() && !comm; ++nu) {
    for (std::size_t mu = 0; mu < nu && !comm; ++mu) {
      if ((fam[nu].degree + fam[mu].degree).total() > bound) continue;
      ++pairs;
      const Sequence sorted{mu, nu};
      const auto coords = basis.decompose(multiply(h, fam[nu].element, fam[mu].element));
      Scalar a = 0;
      for (const auto& [v, c] : coords) {
        if (v == sorted) {
          a = c;
          continue;
        }
        if (!below(v, nu)) {
          comm = "z_" + fam[nu].label + " z_" + fam[mu].label + " has term " + to_display_string(c) + " " +
                 sequence_to_string(fam, v);
          break;
        }
      }
      measured.insert(a);
      if (!comm && a != 1)
        comm = "z_" + fam[nu].label + " z_" + fam[mu].label + ": coefficient of z_" + fam[mu].label + " z_" +
               fam[nu].label + " is " + to_display_string(a);
    }
  }
  std::string detail = std::to_string(pairs) + " pairs; measured coefficients {";
  bool first = true;
  for (const auto& a : measured) {
    detail += (first ? "" : ",") + to_display_string(a);
    first = false;
  }
  detail += "}";
  report.record("(4) z_nu z_mu in z_mu z_nu + H[nu]", !comm, comm ? *comm + "; " + detail : detail);
  return report;
}

namespace {

Word power_word(const Word& w, unsigned n) {
  Word out;
  for (unsigned i = 0; i < n; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

// n with degree = n * base, or 0 if none.
unsigned multiple_of(const MultiDegree& degree, const MultiDegree& base) {
  unsigned n = 0;
  MultiDegree acc = MultiDegree::zero(base.rank());
  while (graded_compare(acc, degree) < 0) {
    acc += base;
    ++n;
  }
  return acc == degree ? n : 0;
}

}  // namespace

PBWConstruction construct_pbw(const HopfData& h, const Alphabet& alphabet, const std::vector<Element>& images,
                              unsigned bound, const PBWOptions& options) {
  if (bound > h.bound()) throw std::invalid_argument("construct_pbw: bound exceeds the algebra bound");
  if (images.size() != alphabet.size()) throw std::invalid_argument("construct_pbw: one image per letter required");
  if (options.require_degree_compatible && !alphabet.is_degree_compatible())
    throw std::domain_error("construct_pbw: alphabet order is not degree-compatible");
  const GradedBasis& basis = h.basis();
  for (std::size_t x = 0; x < alphabet.size(); ++x) {
    const auto d = homogeneous_degree(h, images[x]);
    if (!d || *d != alphabet.letter(static_cast<Letter>(x)).degree)
      throw std::invalid_argument("construct_pbw: image of " + alphabet.letter(static_cast<Letter>(x)).label +
                                  " is not homogeneous of the letter's degree");
  }

  PBWConstruction out;
  out.alphabet = alphabet;
  std::map<Word, Element> pi;
  pi.emplace(Word{}, Element::basis(h.unit()));
  std::set<Word> reducible;
  std::vector<Word> generators;

  std::vector<MultiDegree> degrees = degrees_up_to(basis.rank(), bound);
  std::sort(degrees.begin(), degrees.end(), GradedLess{});
  for (const auto& gamma : degrees) {
    if (gamma.is_zero()) continue;
    PBWLogEntry entry{gamma, 0, 0, {}, {}};
    const auto stratum = basis.stratum_of_degree(gamma);
    const std::size_t dim = stratum ? basis.stratum(*stratum).dim() : 0;
    const auto asc = words_of_degree(alphabet, gamma);
    entry.words = asc.size();
    if (asc.empty()) {
      if (dim > 0) throw std::domain_error("construct_pbw: no words of degree " + gamma.to_string() + " to span it");
      continue;
    }
    std::vector<Word> desc(asc.rbegin(), asc.rend());
    Matrix a(dim, desc.size());
    for (std::size_t c = 0; c < desc.size(); ++c) {
      const Word& w = desc[c];
      Word prefix(w.begin(), w.end() - 1);
      Element value = multiply(h, pi.at(prefix), images[w.back()]);
      if (dim > 0) a.set_column(c, component(h, value, *stratum));
      pi.emplace(w, std::move(value));
    }
    if (rank(a) != dim)
      throw std::domain_error("construct_pbw: the letters do not generate degree " + gamma.to_string());

    const auto kernel = kernel_basis(a);
    entry.kernel_dim = kernel.size();
    if (!kernel.empty()) {
      Matrix k(kernel.size(), desc.size());
      for (std::size_t r = 0; r < kernel.size(); ++r)
        for (std::size_t c = 0; c < desc.size(); ++c) k(r, c) = kernel[r][c];
      for (std::size_t c : rref(k)) {
        reducible.insert(desc[c]);
        entry.reducible.push_back(desc[c]);
      }
    }
    for (const Word& w : asc)
      if (!reducible.count(w) && is_lyndon(alphabet, w)) {
        generators.push_back(w);
        entry.new_generators.push_back(w);
      }
    for (const Word& g : generators) {
      const unsigned n = multiple_of(gamma, word_degree(alphabet, g));
      if (n >= 2 && reducible.count(power_word(g, n)))
        throw std::domain_error("construct_pbw: power " + std::to_string(n) + " of generator " +
                                word_to_string(alphabet, g) + " is reducible (finite height)");
    }
    out.log.push_back(std::move(entry));
  }

  std::sort(generators.begin(), generators.end(),
            [&](const Word& x, const Word& y) { return pseudo_lex_compare(alphabet, x, y) < 0; });
  std::vector<Generator> gens;
  for (const Word& w : generators)
    gens.push_back({word_to_string(alphabet, w), word_degree(alphabet, w), evaluate_word(h, images, bracket_tree(alphabet, w)),
                    std::nullopt});
  out.generator_words = generators;
  out.notes.push_back("generators ordered by the pseudo-lexicographic order on their defining words");
  out.notes.push_back("no reducible power of a generator within bound " + std::to_string(bound) +
                      ": all heights infinite within bound");
  if (!alphabet.is_degree_compatible())
    out.notes.push_back("letter order is not degree-compatible; the coproduct condition is not guaranteed");
  out.basis = PBWBasis::build(h, GeneratorFamily(basis.rank(), std::move(gens)), bound);
  return out;
}

std::string PBWConstruction::log_text() const {
  std::ostringstream os;
  for (const auto& e : log) {
    os << "degree " << e.degree << ": " << e.words << " words, kernel dimension " << e.kernel_dim << ", "
       << e.reducible.size() << " reducible, " << e.new_generators.size() << " new generators\n";
    for (const auto& w : e.reducible) os << "  reducible " << word_to_string(alphabet, w) << '\n';
    for (const auto& w : e.new_generators) os << "  generator " << word_to_string(alphabet, w) << '\n';
  }
  for (const auto& n : notes) os << "note: " << n << '\n';
  return os.str();
}

}  // namespace hopfadams
