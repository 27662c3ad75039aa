// Copyright 2026 The Authors.
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

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "test_util.hpp"

namespace mchroma {
namespace {

using namespace mchroma::testing;
using nlohmann::json;

struct CliRun {
  int code;
  std::string out;
  std::string err;
  json body() const { return json::parse(out); }
};

CliRun run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "mchroma");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string error_of(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const Error& e) {
    return std::string(error_code_name(e.code())) + ": " + e.what();
  }
  return "";
}

TEST(InstanceIo, FixturesRoundTrip) {
  for (const char* name : {"single_example.json", "intersection_example.json",
                           "rainbow_uniform.json", "happy_dean.json", "empty.json"}) {
    const InstanceFile a = load_instance(fixture(name));
    const std::string text = save_instance(a);
    const InstanceFile b = parse_instance(text);
    EXPECT_EQ(save_instance(b), text) << name;
    EXPECT_EQ(a.n, b.n);
    EXPECT_EQ(a.matroids.size(), b.matroids.size());
  }
}

TEST(InstanceIo, AllKindsRoundTrip) {
  InstanceFile f;
  f.n = 4;
  f.labels = {"a", "b", "c", "d"};
  f.matroids = {Matroid::uniform(4, 2), Matroid::partition(4, {{0, 1}, {2, 3}}, {1, 2}),
                Matroid::laminar(4, {{0, 1}}, {1}), Matroid::graphic(3, {{0, 1}, {1, 2}, {0, 2}, {0, 1}}),
                Matroid::transversal(2, {{0}, {1}, {0, 1}, {1}}),
                Matroid::explicit_sets(4, {{}, {0}, {1}, {2}, {3}})};
  f.coloring = Coloring({1, 0, 2, 1}, 3);
  const InstanceFile g = parse_instance(save_instance(f));
  ASSERT_EQ(g.matroids.size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(g.matroids[i].kind(), f.matroids[i].kind());
    for (std::uint64_t s = 0; s < 16; ++s) {
      const auto es = ElementSet::from_mask(4, s);
      EXPECT_EQ(g.matroids[i].is_independent(es), f.matroids[i].is_independent(es));
    }
  }
  EXPECT_EQ(g.coloring, f.coloring);
  EXPECT_EQ(g.labels, f.labels);
}

TEST(InstanceIo, ValidationErrorsCarryPaths) {
  EXPECT_NE(error_of("{").find("parse"), std::string::npos);
  EXPECT_NE(error_of(R"({"schema":"other/1","ground":{"n":1},"matroids":[]})").find("$.schema"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"schema":"matroid-chroma/1","matroids":[]})").find("missing field 'ground'"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"schema":"matroid-chroma/1","ground":{"n":2},
      "matroids":[{"kind":"uniform","data":{"rank":1}},{"kind":"partition","data":{"parts":[[0],[0,1]]}}]})")
                .find("$.matroids[1].data"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"schema":"matroid-chroma/1","ground":{"n":2},
      "matroids":[{"kind":"bogus","data":{}}]})").find("unknown matroid kind"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"schema":"matroid-chroma/1","ground":{"n":2},
      "matroids":[{"kind":"uniform","data":{"rank":"two"}}]})").find("$.matroids[0].data.rank"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"schema":"matroid-chroma/1","ground":{"n":2},
      "matroids":[{"kind":"uniform","data":{"rank":1}}],"coloring":[1]})").find("$.coloring"),
            std::string::npos);
}

TEST(InstanceIo, MalformedFixtures) {
  EXPECT_THROW(load_instance(fixture("overlapping_parts.json")), ValidationError);
  EXPECT_THROW(load_instance(fixture("crossing_laminar.json")), ValidationError);
  EXPECT_THROW(load_instance(fixture("graphic_loop.json")), ValidationError);
  LoadOptions lenient;
  lenient.reject_loops = false;
  EXPECT_NO_THROW(load_instance(fixture("graphic_loop.json"), lenient));
  EXPECT_THROW(load_instance(fixture("does_not_exist.json")), ParseError);
}

TEST(Generators, Deterministic) {
  for (auto fam : {Family::kPartition, Family::kLaminar, Family::kGraphic, Family::kTransversal,
                   Family::kUniform, Family::kRainbow, Family::kStrong}) {
    GenParams params;
    params.n = 12;
    const std::string a = save_instance(generate(42, fam, params));
    EXPECT_EQ(save_instance(generate(42, fam, params)), a);
    EXPECT_NE(save_instance(generate(43, fam, params)), a);
    // Generated instances load back and satisfy the matroid axioms.
    const InstanceFile f = parse_instance(a);
    for (const auto& m : f.matroids) {
      if (m.ground_size() <= 12) {
        EXPECT_TRUE(axiom_check(m).ok);
      }
    }
  }
}

TEST(Generators, SizeZeroAndErrors) {
  GenParams params;
  params.n = 0;
  for (auto fam : {Family::kPartition, Family::kLaminar, Family::kGraphic, Family::kTransversal,
                   Family::kUniform, Family::kStrong}) {
    const InstanceFile f = generate(1, fam, params);
    EXPECT_EQ(f.n, 0u);
  }
  params.n = -1;
  EXPECT_THROW(generate(1, Family::kUniform, params), InputError);
  EXPECT_THROW(parse_family("matching"), InputError);
  EXPECT_EQ(parse_family("strong-coloring"), Family::kStrong);
}

TEST(Rng, ReproducibleAndInRange) {
  Rng a(9), b(9);
  for (int i = 0; i < 100; ++i) {
    const auto v = a.below(7);
    EXPECT_LT(v, 7u);
    EXPECT_EQ(v, b.below(7));
  }
  Rng c(1);
  for (int i = 0; i < 100; ++i) {
    const int v = c.range(-2, 2);
    EXPECT_GE(v, -2);
    EXPECT_LE(v, 2);
  }
}

TEST(BruteForce, AgreesWithUnprunedSearch) {
  Rng rng(55);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.range(1, 7);
    const Matroid m1 = random_m1(rng, n, trial);
    const Matroid m2(gen::random_partition(rng, n));
    EXPECT_EQ(brute_chromatic(std::vector<Matroid>{m1, m2}),
              brute_chromatic_plain(static_cast<std::size_t>(n), tests_of<Matroid>({&m1, &m2})));
  }
  EXPECT_THROW(brute_chromatic(std::vector<Matroid>{Matroid::uniform(11, 2)}), BoundExceeded);
  EXPECT_THROW(brute_chromatic(std::vector<Matroid>{Matroid::uniform(3, 0)}), InputError);
  EXPECT_EQ(brute_chromatic(std::vector<Matroid>{Matroid::uniform(0, 0)}), 0);
}

TEST(Cli, ColorAndChiOnFixture) {
  auto r = run_cli({"color", fixture("single_example.json"), "--json"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.body()["status"], "ok");
  EXPECT_EQ(r.body()["colors_used"], 2);
  EXPECT_TRUE(r.err.empty());

  auto chi = run_cli({"chi", fixture("single_example.json")});
  EXPECT_EQ(chi.code, 0);
  EXPECT_EQ(chi.body()["chi"], 2);
  EXPECT_NE(chi.err.find("chi(M1) = 2"), std::string::npos);

  auto low = run_cli({"color", fixture("single_example.json"), "--alpha", "1", "--json"});
  EXPECT_EQ(low.code, 2);
  EXPECT_EQ(low.body()["status"], "uncolorable");
}

TEST(Cli, IntersectResumesFixtureColoring) {
  auto r = run_cli({"intersect", fixture("intersection_example.json"), "--json"});
  ASSERT_EQ(r.code, 0) << r.out;
  const json b = r.body();
  EXPECT_EQ(b["palette_bound"], 3);
  EXPECT_EQ(b["iterations"], 1);
  EXPECT_EQ(b["coloring"], json::parse("[3,3,1,2,1,2]"));
}

TEST(Cli, VerifyAndAxioms) {
  auto bad = run_cli({"verify", fixture("corrupted_coloring.json"), "--json"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_EQ(bad.body()["feasible"][0]["dependent_classes"], json::parse("[1]"));

  auto good = run_cli({"verify", fixture("single_example.json"), "--json"});
  EXPECT_EQ(good.code, 0);

  auto ax = run_cli({"axioms", fixture("not_a_matroid.json"), "--json"});
  EXPECT_EQ(ax.code, 3);
  EXPECT_EQ(ax.body()["results"][0]["axiom"], "subset");
}

TEST(Cli, RainbowAndStrong) {
  auto rb = run_cli({"rainbow", fixture("rainbow_uniform.json"), "--json"});
  EXPECT_EQ(rb.code, 0) << rb.out;
  EXPECT_EQ(rb.body()["bound"], 3);
  EXPECT_EQ(rb.body()["optimum"], 2);

  auto st = run_cli({"strong", fixture("happy_dean.json"), "--json"});
  EXPECT_EQ(st.code, 0) << st.out;
  EXPECT_EQ(st.body()["max_degree"], 2);
  EXPECT_EQ(st.body()["bound"], 5);
  EXPECT_LE(st.body()["colors_used"].get<int>(), 5);
}

TEST(Cli, ErrorsAndUsage) {
  auto missing = run_cli({"color", fixture("does_not_exist.json"), "--json"});
  EXPECT_EQ(missing.code, 3);
  EXPECT_EQ(missing.body()["status"], "error");
  EXPECT_EQ(missing.body()["error"]["code"], "parse");

  auto overlap = run_cli({"color", fixture("overlapping_parts.json"), "--json"});
  EXPECT_EQ(overlap.code, 3);
  EXPECT_EQ(overlap.body()["error"]["code"], "validation");

  EXPECT_EQ(run_cli({}).code, 1);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 1);
  EXPECT_EQ(run_cli({"color", fixture("single_example.json"), "--selector", "zigzag", "--json"}).code, 3);
  EXPECT_EQ(run_cli({"bench", "--family", "rainbow", "--json"}).code, 3);
  EXPECT_EQ(run_cli({"color", "--help"}).code, 0);
}

TEST(Cli, EmptyInstance) {
  for (const char* cmd : {"color", "chi", "intersect"}) {
    auto r = run_cli({cmd, fixture("empty.json"), "--json"});
    EXPECT_EQ(r.code, 0) << cmd << ": " << r.out;
  }
}

int expected_exit(const json& body) {
  const std::string status = body.at("status").get<std::string>();
  if (status == "ok") return 0;
  if (status == "infeasible" || status == "uncolorable" || status == "bound-violation") return 2;
  if (status == "not-a-matroid") return 3;
  EXPECT_EQ(status, "error");
  return body.at("error").at("code") == "invariant-violation" ? 4 : 3;
}

TEST(Cli, ExitCodeMatchesStatusOnEveryFixture) {
  int runs = 0;
  for (const auto& entry : std::filesystem::directory_iterator(MCHROMA_FIXTURE_DIR)) {
    if (entry.path().extension() != ".json") continue;
    for (const char* cmd : {"color", "chi", "intersect", "verify", "axioms", "rainbow", "strong"}) {
      const auto r = run_cli({cmd, entry.path().string(), "--json"});
      ASSERT_NO_THROW(r.body()) << cmd << " " << entry.path() << ": " << r.out;
      EXPECT_EQ(r.code, expected_exit(r.body())) << cmd << " " << entry.path();
      ++runs;
    }
  }
  EXPECT_GE(runs, 70);
}

TEST(Generators, GraphicWithTwoPartitionsRoundTrips) {
  GenParams params;
  params.n = 9;
  params.vertices = 6;
  params.k = 2;
  const InstanceFile f = generate(1, Family::kGraphic, params);
  EXPECT_EQ(f.n, 9u);
  ASSERT_EQ(f.matroids.size(), 3u);
  const std::string text = save_instance(f);
  EXPECT_EQ(save_instance(parse_instance(text)), text);
  const auto r = run_cli({"gen", "--family", "graphic", "--n", "9", "--vertices", "6", "--k", "2",
                          "--seed", "1", "--json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(save_instance(parse_instance(r.out)), text);
}

TEST(Cli, GenAndBenchAreDeterministic) {
  auto g1 = run_cli({"gen", "--family", "laminar", "--n", "9", "--seed", "5", "--json"});
  auto g2 = run_cli({"gen", "--family", "laminar", "--n", "9", "--seed", "5", "--json"});
  EXPECT_EQ(g1.code, 0);
  EXPECT_EQ(g1.out, g2.out);
  EXPECT_NO_THROW(parse_instance(g1.out));

  auto b1 = run_cli({"bench", "--family", "partition", "--n", "8", "--count", "6", "--threads", "3", "--json"});
  auto b2 = run_cli({"bench", "--family", "partition", "--n", "8", "--count", "6", "--threads", "1", "--json"});
  EXPECT_EQ(b1.code, 0) << b1.out;
  EXPECT_EQ(b1.out, b2.out);
  const json rows = b1.body()["rows"];
  ASSERT_EQ(rows.size(), 6u);
  for (const auto& row : rows) {
    EXPECT_TRUE(row["feasible"].get<bool>());
    EXPECT_LE(row["optimum"].get<int>(), row["colors_used"].get<int>());
    EXPECT_LE(row["colors_used"].get<int>(), row["bound"].get<int>());
  }

  auto timed = run_cli({"chi", fixture("single_example.json"), "--json", "--timing"});
  EXPECT_TRUE(timed.body().contains("wall_ms"));
}

}  // namespace
}  // namespace mchroma
