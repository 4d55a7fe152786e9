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

#include "hopfadams/serialize.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace hopfadams {

SchemaError::SchemaError(std::string pointer, const std::string& message)
    : std::runtime_error(message + " at " + (pointer.empty() ? std::string("/") : pointer)),
      pointer_(std::move(pointer)) {}

namespace {

std::string escape_token(const std::string& token) {
  std::string out;
  for (char c : token) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

std::string at(const std::string& base, const std::string& token) { return base + "/" + escape_token(token); }
std::string at(const std::string& base, std::size_t i) { return base + "/" + std::to_string(i); }

const Json& member(const Json& obj, const std::string& key, const std::string& ptr) {
  if (!obj.is_object()) throw SchemaError(ptr, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(at(ptr, key), "missing key '" + key + "'");
  return *it;
}

const Json& array_of(const Json& j, const std::string& ptr, std::size_t size = 0) {
  if (!j.is_array()) throw SchemaError(ptr, "expected an array");
  if (size != 0 && j.size() != size)
    throw SchemaError(ptr, "expected an array of length " + std::to_string(size));
  return j;
}

std::string string_of(const Json& j, const std::string& ptr) {
  if (!j.is_string()) throw SchemaError(ptr, "expected a string");
  return j.get<std::string>();
}

unsigned unsigned_of(const Json& j, const std::string& ptr) {
  if (!j.is_number_unsigned()) throw SchemaError(ptr, "expected a nonnegative integer");
  return j.get<unsigned>();
}

MultiDegree degree_of_json(const Json& j, const std::string& ptr) {
  array_of(j, ptr);
  std::vector<unsigned> parts;
  for (std::size_t i = 0; i < j.size(); ++i) parts.push_back(unsigned_of(j[i], at(ptr, i)));
  return MultiDegree(std::move(parts));
}

Json degree_to_json(const MultiDegree& d) { return Json(d.parts()); }

MultiDegree degree_of_key(const std::string& key, const std::string& ptr) {
  Json parsed = Json::parse(key, nullptr, false);
  if (parsed.is_discarded() || !parsed.is_array()) throw SchemaError(ptr, "degree key must look like [m] or [a,b]");
  return degree_of_json(parsed, ptr);
}

Scalar scalar_of(const Json& j, const std::string& ptr, std::vector<std::string>& warnings) {
  const std::string text = string_of(j, ptr);
  try {
    ParsedScalar p = parse_scalar(text);
    if (!p.was_reduced)
      warnings.push_back(ptr + ": \"" + text + "\" normalized to \"" + to_pq_string(p.value) + "\"");
    return p.value;
  } catch (const std::invalid_argument& e) {
    throw SchemaError(ptr, e.what());
  }
}

BasisIndex label_of(const GradedBasis& b, const Json& j, const std::string& ptr) {
  const std::string label = string_of(j, ptr);
  auto i = b.find(label);
  if (!i) throw SchemaError(ptr, "unknown basis label '" + label + "'");
  return *i;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_pq_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json hopf_to_json(const HopfData& h) {
  const GradedBasis& b = h.basis();
  Json doc;
  doc["grading_rank"] = b.rank();
  doc["degree_bound"] = b.bound();
  doc["unit"] = b.label(h.unit());
  Json degrees = Json::array();
  Json basis = Json::object();
  for (const auto& st : b.strata()) {
    degrees.push_back(degree_to_json(st.degree));
    basis[st.degree.to_string()] = st.labels;
  }
  doc["degrees"] = std::move(degrees);
  doc["basis"] = std::move(basis);
  Json product = Json::array();
  for (BasisIndex i = 0; i < b.size(); ++i)
    for (BasisIndex j = 0; j < b.size(); ++j) {
      if (!h.product_in_bound(i, j)) continue;
      const Element& e = h.product(i, j);
      if (e.is_zero()) continue;
      Json terms = Json::array();
      for (const auto& [k, c] : e) terms.push_back({b.label(k), to_pq_string(c)});
      product.push_back({b.label(i), b.label(j), std::move(terms)});
    }
  doc["product"] = std::move(product);
  Json coproduct = Json::array();
  for (BasisIndex i = 0; i < b.size(); ++i) {
    Json terms = Json::array();
    for (const auto& [key, c] : h.coproduct(i).terms())
      terms.push_back({b.label(key.first), b.label(key.second), to_pq_string(c)});
    coproduct.push_back({b.label(i), std::move(terms)});
  }
  doc["coproduct"] = std::move(coproduct);
  return doc;
}

LoadedHopf hopf_from_json(const Json& doc) {
  LoadedHopf out;
  if (!doc.is_object()) throw SchemaError("", "expected an object");
  const unsigned rank = unsigned_of(member(doc, "grading_rank", ""), "/grading_rank");
  if (rank == 0) throw SchemaError("/grading_rank", "grading rank must be positive");
  const unsigned bound = unsigned_of(member(doc, "degree_bound", ""), "/degree_bound");

  const Json& basis = member(doc, "basis", "");
  if (!basis.is_object()) throw SchemaError("/basis", "expected an object");
  std::vector<std::pair<MultiDegree, std::vector<std::string>>> strata;
  std::set<std::vector<unsigned>> keyed;
  for (const auto& [key, labels] : basis.items()) {
    const std::string ptr = at("/basis", key);
    MultiDegree d = degree_of_key(key, ptr);
    if (d.rank() != rank) throw SchemaError(ptr, "degree rank differs from grading_rank");
    if (d.total() > bound) throw SchemaError(ptr, "degree exceeds degree_bound");
    array_of(labels, ptr);
    std::vector<std::string> names;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      names.push_back(string_of(labels[i], at(ptr, i)));
      if (!seen.insert(names.back()).second) throw SchemaError(at(ptr, i), "duplicate label '" + names.back() + "'");
    }
    if (d.is_zero() && names.size() != 1)
      throw SchemaError(ptr, "degree-zero stratum must hold exactly the unit (connectedness)");
    if (!names.empty()) keyed.insert(d.parts());
    strata.emplace_back(std::move(d), std::move(names));
  }
  if (!keyed.count(std::vector<unsigned>(rank, 0))) throw SchemaError("/basis", "missing degree-zero stratum");
  if (auto it = doc.find("degrees"); it != doc.end()) {
    array_of(*it, "/degrees");
    std::set<std::vector<unsigned>> listed;
    for (std::size_t i = 0; i < it->size(); ++i) listed.insert(degree_of_json((*it)[i], at("/degrees", i)).parts());
    if (listed != keyed) throw SchemaError("/degrees", "degrees do not match the basis keys");
  }

  GradedBasis gb;
  try {
    gb = GradedBasis(rank, bound, std::move(strata));
  } catch (const std::invalid_argument& e) {
    throw SchemaError("/basis", e.what());
  }
  if (string_of(member(doc, "unit", ""), "/unit") != gb.label(0))
    throw SchemaError("/unit", "unit is not the degree-zero label");
  HopfData h(gb);

  const Json& product = array_of(member(doc, "product", ""), "/product");
  for (std::size_t n = 0; n < product.size(); ++n) {
    const std::string ptr = at("/product", n);
    const Json& entry = array_of(product[n], ptr, 3);
    const BasisIndex i = label_of(gb, entry[0], at(ptr, 0));
    const BasisIndex j = label_of(gb, entry[1], at(ptr, 1));
    if (!h.product_in_bound(i, j)) throw SchemaError(ptr, "product exceeds degree_bound");
    if (h.has_product(i, j)) throw SchemaError(ptr, "duplicate product entry");
    const MultiDegree target = gb.degree_of(i) + gb.degree_of(j);
    const std::string tptr = at(ptr, 2);
    const Json& terms = array_of(entry[2], tptr);
    Element e;
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string term_ptr = at(tptr, t);
      const Json& term = array_of(terms[t], term_ptr, 2);
      const BasisIndex k = label_of(gb, term[0], at(term_ptr, 0));
      if (gb.degree_of(k) != target) throw SchemaError(at(term_ptr, 0), "term not in the sum degree");
      e.add(k, scalar_of(term[1], at(term_ptr, 1), out.warnings));
    }
    h.set_product(i, j, std::move(e));
  }
  for (BasisIndex i = 0; i < gb.size(); ++i)
    for (BasisIndex j = 0; j < gb.size(); ++j)
      if (h.product_in_bound(i, j) && !h.has_product(i, j)) h.set_product(i, j, Element{});

  const Json& coproduct = array_of(member(doc, "coproduct", ""), "/coproduct");
  std::vector<bool> seen(gb.size(), false);
  for (std::size_t n = 0; n < coproduct.size(); ++n) {
    const std::string ptr = at("/coproduct", n);
    const Json& entry = array_of(coproduct[n], ptr, 2);
    const BasisIndex i = label_of(gb, entry[0], at(ptr, 0));
    if (seen[i]) throw SchemaError(ptr, "duplicate coproduct entry");
    seen[i] = true;
    const std::string tptr = at(ptr, 1);
    const Json& terms = array_of(entry[1], tptr);
    Tensor t;
    for (std::size_t k = 0; k < terms.size(); ++k) {
      const std::string term_ptr = at(tptr, k);
      const Json& term = array_of(terms[k], term_ptr, 3);
      const BasisIndex l = label_of(gb, term[0], at(term_ptr, 0));
      const BasisIndex r = label_of(gb, term[1], at(term_ptr, 1));
      if (gb.degree_of(l) + gb.degree_of(r) != gb.degree_of(i))
        throw SchemaError(term_ptr, "tensor term degrees do not sum to the source degree");
      t.add(l, r, scalar_of(term[2], at(term_ptr, 2), out.warnings));
    }
    h.set_coproduct(i, std::move(t));
  }
  for (BasisIndex i = 0; i < gb.size(); ++i)
    if (!seen[i]) throw SchemaError("/coproduct", "no coproduct for '" + gb.label(i) + "'");
  out.hopf = std::move(h);
  return out;
}

std::string canonical_dump(const Json& doc) { return doc.dump(2) + "\n"; }

void save_hopf(const HopfData& h, const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << canonical_dump(hopf_to_json(h));
  if (!f) throw std::runtime_error("write failed for " + path.string());
}

LoadedHopf load_hopf(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read " + path.string());
  std::stringstream buf;
  buf << f.rdbuf();
  Json doc = Json::parse(buf.str(), nullptr, false);
  if (doc.is_discarded()) throw SchemaError("", "malformed JSON in " + path.string());
  return hopf_from_json(doc);
}

Json graded_map_to_json(const ConvolutionContext& ctx, const GradedMap& f) {
  const GradedBasis& b = ctx.hopf().basis();
  Json out = Json::array();
  for (std::size_t s = 0; s < std::min(ctx.strata(), f.strata()); ++s)
    out.push_back({{"degree", b.stratum(s).degree.to_string()},
                   {"labels", b.stratum(s).labels},
                   {"matrix", matrix_to_json(f.block(s))}});
  return out;
}

Json pbw_to_json(const PBWBasis& basis) {
  const HopfData& h = basis.hopf();
  const GeneratorFamily& family = basis.family();
  Json gens = Json::array();
  for (const auto& g : family.generators()) {
    Json element = Json::array();
    for (const auto& [k, c] : g.element) element.push_back({h.basis().label(k), to_pq_string(c)});
    gens.push_back({{"label", g.label},
                    {"degree", degree_to_json(g.degree)},
                    {"height", g.height ? Json(*g.height) : Json("inf")},
                    {"element", std::move(element)}});
  }
  Json strata = Json::array();
  for (std::size_t s = 0; s < basis.strata(); ++s) {
    const Stratum& st = h.basis().stratum(s);
    Json seqs = Json::array();
    for (const auto& v : basis.sequences(s)) seqs.push_back(sequence_to_string(family, v));
    strata.push_back({{"degree", st.degree.to_string()},
                      {"labels", st.labels},
                      {"sequences", std::move(seqs)},
                      {"expansion", matrix_to_json(basis.expansion(s))}});
  }
  return {{"generators", std::move(gens)}, {"bound", basis.bound()}, {"strata", std::move(strata)}};
}

Json pbw_to_json(const PBWConstruction& construction) {
  Json doc = pbw_to_json(construction.basis);
  for (std::size_t i = 0; i < construction.generator_words.size() && i < doc["generators"].size(); ++i)
    doc["generators"][i]["word"] = word_to_json(construction.generator_words[i]);
  doc["alphabet"] = alphabet_to_json(construction.alphabet);
  doc["notes"] = construction.notes;
  doc["log"] = construction.log_text();
  return doc;
}

Json word_to_json(const Word& w) { return Json(w); }

Json alphabet_to_json(const Alphabet& alphabet) {
  Json letters = Json::array();
  for (Letter x = 0; x < alphabet.size(); ++x)
    letters.push_back({{"label", alphabet.letter(x).label},
                       {"degree", degree_to_json(alphabet.letter(x).degree)},
                       {"rank", alphabet.rank(x)}});
  return letters;
}

Json permutation_to_json(const Permutation& p) { return Json(p.entries()); }

Json report_to_json(const Report& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks())
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"title", report.title()}, {"passed", report.passed()}, {"checks", std::move(checks)}};
}

}  // namespace hopfadams
