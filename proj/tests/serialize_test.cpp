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
#include <hopfadams/serialize.hpp>
#include <hopfadams/ssym.hpp>

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace hopfadams;
namespace fs = std::filesystem;

namespace {

fs::path scratch_file(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("hopfadams-serialize-" + std::to_string(std::random_device{}()));
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json one_letter() {
  return hopf_to_json(build_tensor_hopf({InstanceKind::Tensor, {MultiDegree{1}}, 2}));
}

}  // namespace

TEST_CASE("save and load round trip is the identity and byte-stable") {
  const HopfData h = build_ssym(3);
  const fs::path p = scratch_file("ssym3.json");
  save_hopf(h, p);
  const LoadedHopf back = load_hopf(p);
  CHECK(back.warnings.empty());
  CHECK(back.hopf == h);
  CHECK(canonical_dump(hopf_to_json(back.hopf)) == slurp(p));
  fs::remove_all(p.parent_path());
}

TEST_CASE("round trip on the word instances") {
  for (InstanceKind kind : {InstanceKind::Tensor, InstanceKind::Shuffle}) {
    const HopfData h = build_instance({kind, {MultiDegree{1}, MultiDegree{2}}, 4});
    CHECK(hopf_from_json(hopf_to_json(h)).hopf == h);
  }
}

TEST_CASE("document layout") {
  const Json doc = one_letter();
  CHECK(doc["grading_rank"] == 1);
  CHECK(doc["degree_bound"] == 2);
  CHECK(doc["unit"] == "1");
  CHECK(doc["basis"]["[2]"] == Json::array({"aa"}));
  CHECK(doc["degrees"] == Json::parse("[[0],[1],[2]]"));
  const std::string text = canonical_dump(doc);
  CHECK(text.back() == '\n');
  CHECK(text.find("\"2/1\"") != std::string::npos);
}

TEST_CASE("non-reduced fractions are normalized with a warning") {
  Json doc = one_letter();
  for (auto& entry : doc["coproduct"])
    if (entry[0] == "aa")
      for (auto& term : entry[1])
        if (term[0] == "a") term[2] = "4/2";
  for (auto& entry : doc["product"])
    if (entry[0] == "a" && entry[1] == "a") entry[2][0][1] = "2/4";
  const LoadedHopf l = hopf_from_json(doc);
  REQUIRE(l.warnings.size() == 2);
  bool saw_half = false;
  for (const auto& w : l.warnings) saw_half = saw_half || w.find("normalized to \"1/2\"") != std::string::npos;
  CHECK(saw_half);
  const BasisIndex a = l.hopf.basis().index("a");
  CHECK(l.hopf.product(a, a).coefficient(l.hopf.basis().index("aa")) == Scalar(1, 2));
}

TEST_CASE("a degree-zero stratum other than the unit is rejected") {
  Json doc = one_letter();
  doc["basis"]["[0]"] = Json::array({"1", "e"});
  CHECK_THROWS_AS(hopf_from_json(doc), SchemaError);
  try {
    hopf_from_json(doc);
  } catch (const SchemaError& e) {
    CHECK(e.pointer() == "/basis/[0]");
  }
  doc["basis"].erase("[0]");
  doc["degrees"] = Json::parse("[[1],[2]]");
  CHECK_THROWS_AS(hopf_from_json(doc), SchemaError);
}

TEST_CASE("schema violations point at the offending entry") {
  auto pointer_of = [](const Json& doc) {
    try {
      hopf_from_json(doc);
    } catch (const SchemaError& e) {
      return e.pointer();
    }
    return std::string("no error");
  };
  Json wrong_degree = one_letter();
  for (auto& entry : wrong_degree["product"])
    if (entry[0] == "a" && entry[1] == "a") entry[2][0][0] = "a";
  CHECK(pointer_of(wrong_degree).rfind("/product/", 0) == 0);

  Json bad_scalar = one_letter();
  bad_scalar["coproduct"][1][1][0][2] = "1/0";
  CHECK(pointer_of(bad_scalar) == "/coproduct/1/1/0/2");

  Json unknown = one_letter();
  unknown["coproduct"][1][1][0][0] = "zz";
  CHECK(pointer_of(unknown) == "/coproduct/1/1/0/0");

  Json missing = one_letter();
  missing.erase("unit");
  CHECK(pointer_of(missing) == "/unit");

  Json lost = one_letter();
  lost["coproduct"].erase(2);
  CHECK(pointer_of(lost) == "/coproduct");

  Json off = one_letter();
  off["coproduct"][2][1][1][0] = "1";
  CHECK(pointer_of(off) == "/coproduct/2/1/1");
}

TEST_CASE("missing in-bound products are zero") {
  Json doc = one_letter();
  Json kept = Json::array();
  for (auto& entry : doc["product"])
    if (!(entry[0] == "a" && entry[1] == "a")) kept.push_back(entry);
  doc["product"] = kept;
  const LoadedHopf l = hopf_from_json(doc);
  const BasisIndex a = l.hopf.basis().index("a");
  CHECK(l.hopf.product(a, a).is_zero());
}

TEST_CASE("file errors") {
  CHECK_THROWS_AS(load_hopf("/nonexistent/dir/file.json"), std::runtime_error);
  const fs::path p = scratch_file("broken.json");
  std::ofstream(p) << "{ not json";
  CHECK_THROWS_AS(load_hopf(p), SchemaError);
  fs::remove_all(p.parent_path());
  CHECK_THROWS_AS(save_hopf(build_ssym(1), "/nonexistent/dir/file.json"), std::runtime_error);
}

TEST_CASE("maps, words, alphabets, permutations and reports") {
  const HopfData h = build_ssym(2);
  const ConvolutionContext ctx(h);
  const Json m = graded_map_to_json(ctx, adams(ctx, 2));
  REQUIRE(m.size() == 3);
  CHECK(m[2]["degree"] == "[2]");
  CHECK(m[2]["labels"] == Json::array({"F:12", "F:21"}));
  CHECK(m[1]["matrix"] == Json::parse(R"([["2/1"]])"));

  CHECK(word_to_json(Word{2, 0, 1}) == Json::parse("[2,0,1]"));
  CHECK(permutation_to_json(Permutation::parse("231")) == Json::parse("[2,3,1]"));
  Alphabet a(std::vector<LetterInfo>{{"x", MultiDegree{1}}, {"y", MultiDegree{2}}});
  CHECK(alphabet_to_json(a) == Json::parse(R"([{"label":"x","degree":[1],"rank":0},{"label":"y","degree":[2],"rank":1}])"));

  Report r("demo");
  r.pass("one");
  r.fail("two", "witness");
  const Json rj = report_to_json(r);
  CHECK(rj["passed"] == false);
  CHECK(rj["checks"][1]["detail"] == "witness");
}

TEST_CASE("PBW bases serialize with their generators and sequences") {
  const HopfData h = build_ssym(3);
  const PBWBasis basis = PBWBasis::build(h, t_family(h, 3), 3);
  const Json j = pbw_to_json(basis);
  CHECK(j["bound"] == 3);
  CHECK(j["generators"].size() == 6);
  CHECK(j["generators"][0]["height"] == "inf");
  CHECK(j["strata"][3]["sequences"].size() == 6);

  const auto ca = connected_alphabet(h, 3);
  PBWOptions opt;
  opt.require_degree_compatible = false;
  const Json c = pbw_to_json(construct_pbw(h, ca.alphabet, ca.images, 3, opt));
  CHECK(c["alphabet"].size() == ca.letters.size());
  CHECK(c["generators"][0].contains("word"));
  CHECK(c["log"].get<std::string>().find("degree [3]") != std::string::npos);
}
