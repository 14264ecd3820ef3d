// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "zrec/cli.hpp"
#include "zrec/errors.hpp"
#include "zrec/io.hpp"
#include "zrec/random_systems.hpp"

namespace zrec {
namespace {

std::string sample(const std::string& name) { return std::string(ZREC_SAMPLES_DIR) + "/" + name; }

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  std::string path = std::string(ZREC_TEST_TMP_DIR) + "/" + name;
  std::ofstream(path) << content;
  return path;
}

TEST(Io, ParsesExample1Composition) {
  Document doc = load_document(sample("example1_composition.json"));
  ASSERT_EQ(doc.kind, DocumentKind::composition);
  EXPECT_EQ(fixtures::scalars(iterate(*doc.composition, 4)),
            (std::vector<Value>{0, 0, 1, 6, 33}));
}

TEST(Io, ParseErrorsCarryContext) {
  try {
    parse_document(R"({"semiring": "natural", "k": 1, "coefficients": {"constant": [["x"]]},
                       "input": ["1"], "initial": ["0"]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("/coefficients/constant/0/0"), std::string::npos) << e.what();
  }
  try {
    parse_document("{\n  \"semiring\": \"natural\",\n  \"k\": 1,,\n}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_document(R"({"semiring": "reals", "k": 1})"), UnknownSemiringError);
  EXPECT_THROW(parse_document(R"({"semiring": "natural", "k": 2, "coefficients": {"constant": [["1"]]},
                                  "input": ["1"], "initial": ["0"]})"),
               Error);
}

TEST(Io, SemiringOverride) {
  Document doc = load_document(sample("example1_inner.json"), "integer");
  EXPECT_EQ(doc.semiring, &builtin_semiring("integer"));
}

TEST(Io, SystemJsonRoundTrip) {
  Rng rng(21);
  for (const auto& name : builtin_semiring_names()) {
    const Semiring& s = builtin_semiring(name);
    for (int trial = 0; trial < 5; ++trial) {
      RecurrenceSystem sys = random_system(s, rng, 2, trial % 2 == 0);
      Document back = parse_document(dump(to_json(sys)));
      ASSERT_TRUE(back.system.has_value());
      EXPECT_EQ(iterate(*back.system, 10), iterate(sys, 10));
      WeightedAutomaton aut = system_to_automaton(sys);
      Document aback = parse_document(dump(to_json(aut)));
      ASSERT_TRUE(aback.automaton.has_value());
      EXPECT_EQ(iterate(automaton_to_system(*aback.automaton), 10), iterate(sys, 10));
    }
  }
}

TEST(Cli, SolveExample1) {
  CliResult r = run({"solve", sample("example1_composition.json"), "--upto", "4"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "n\tf(n)\n0\t[0]\n1\t[0]\n2\t[1]\n3\t[6]\n4\t[33]\n");
  CliResult it = run({"solve", sample("example1_composition.json"), "--upto", "4", "--method", "iterate"});
  EXPECT_EQ(it.out, r.out);
  CliResult j = run({"--out", "json", "solve", sample("example1_composition.json"), "--upto", "4"});
  EXPECT_EQ(j.code, 0);
  auto doc = Json::parse(j.out);
  EXPECT_EQ(doc.dump().find("33") != std::string::npos, true);
}

TEST(Cli, SolveSeparateExample1Files) {
  CliResult inner = run({"solve", sample("example1_inner.json"), "--upto", "3"});
  EXPECT_EQ(inner.out, "n\tf(n)\n0\t[0]\n1\t[1]\n2\t[3]\n3\t[9]\n");
  CliResult outer = run({"solve", sample("example1_outer.json"), "--upto", "4"});
  EXPECT_EQ(outer.out, "n\tf(n)\n0\t[0]\n1\t[0]\n2\t[1]\n3\t[6]\n4\t[33]\n");
}

TEST(Cli, SolveZeroInput) {
  std::string path = temp_file("zero.json", R"({"format": 1, "semiring": "natural", "k": 2,
    "coefficients": {"constant": [["1", "2"], ["3", "4"]]}, "input": ["0", "0"], "initial": ["0", "0"]})");
  CliResult r = run({"solve", path, "--upto", "2"});
  EXPECT_EQ(r.out, "n\tf(n)\n0\t[0, 0]\n1\t[0, 0]\n2\t[0, 0]\n");
}

TEST(Cli, NonzeroInitialNeedsIterate) {
  std::string path = temp_file("init.json", R"({"format": 1, "semiring": "natural", "k": 1,
    "coefficients": {"constant": [["2"]]}, "input": ["1"], "initial": ["3"]})");
  CliResult r = run({"solve", path, "--upto", "2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--method iterate"), std::string::npos);
  CliResult ok = run({"solve", path, "--upto", "2", "--method", "iterate"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out, "n\tf(n)\n0\t[3]\n1\t[7]\n2\t[15]\n");
}

TEST(Cli, BadSemiringName) {
  CliResult r = run({"--semiring", "reals", "solve", sample("example1_inner.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("tropical_min_plus"), std::string::npos);
}

TEST(Cli, TransformExample1) {
  CliResult r = run({"transform", sample("example1_composition.json"), "--order", "4"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("f_1 direct:  0 + 0/z + 1/z^2 + 6/z^3 + 33/z^4\n"), std::string::npos);
  EXPECT_NE(r.out.find("f_1 theorem: 0 + 0/z + 1/z^2 + 6/z^3 + 33/z^4\n"), std::string::npos);
  CliResult zero = run({"transform", sample("example1_composition.json"), "--order", "0"});
  EXPECT_NE(zero.out.find("f_1 direct:  0\n"), std::string::npos);
}

TEST(Cli, TransformPowersOfTwo) {
  std::string path = temp_file("two.json", R"({"format": 1, "semiring": "natural", "k": 1,
    "coefficients": {"constant": [["2"]]}, "input": ["1"], "initial": ["0"]})");
  CliResult r = run({"transform", path, "--order", "4"});
  EXPECT_NE(r.out.find("f_1 theorem: 0 + 1/z + 3/z^2 + 7/z^3 + 15/z^4\n"), std::string::npos) << r.out;
}

TEST(Cli, Verify) {
  CliResult r = run({"verify", sample("example1_composition.json"), "--theorem", "4", "--order", "8"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  CliResult rnd = run({"--seed", "7", "--semiring", "boolean", "verify", "--random", "--trials", "100",
                 "--theorem", "1"});
  EXPECT_EQ(rnd.code, 0) << rnd.out;
  EXPECT_NE(rnd.out.find("100/100 passed"), std::string::npos);
  CliResult bad = run({"verify", sample("example1_inner.json"), "--theorem", "3"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_FALSE(bad.err.empty());
}

TEST(Cli, PathsSelfLoop) {
  std::string path = temp_file("loop.json", R"({"format": 1, "semiring": "natural", "states": ["p"],
    "inputs": [], "edges": [{"from": "p", "to": "p", "weight": "2"}]})");
  CliResult r = run({"paths", path, "--length", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "p -> p -> p -> p\t8\npaths\t1\ntotal\t8\n");
}

TEST(Cli, PathsOnEverySample) {
  for (const auto& name : builtin_semiring_names()) {
    CliResult r = run({"paths", sample("automaton_" + name + ".json"), "--length", "3"});
    EXPECT_EQ(r.code, 0) << name << r.err;
    EXPECT_NE(r.out.find("paths\t8\n"), std::string::npos) << name;
  }
}

TEST(Cli, ConvertRoundTrip) {
  CliResult a = run({"convert", sample("example1_inner.json"), "--to", "automaton"});
  EXPECT_EQ(a.code, 0) << a.err;
  std::string path = temp_file("aut.json", a.out);
  CliResult s = run({"convert", path, "--to", "system"});
  EXPECT_EQ(s.code, 0) << s.err;
  auto original = Json::parse(std::ifstream(sample("example1_inner.json")));
  EXPECT_EQ(Json::parse(s.out), original);
}

TEST(Cli, LawsAndSemirings) {
  CliResult r = run({"laws", "--semiring", "tropical_min_plus"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  CliResult l = run({"semirings"});
  EXPECT_EQ(l.out, "natural\nboolean\ntropical_min_plus\nmax_plus\ninteger\n");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"solve"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"solve", "/nonexistent.json"}).code, 2);
}

}  // namespace
}  // namespace zrec
