#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "pencil/campaign.hpp"
#include "pencil/concordance.hpp"
#include "pencil/errors.hpp"
#include "pencil/fixtures.hpp"
#include "pencil/json_io.hpp"
#include "support.hpp"

using namespace pencil;
using namespace pencil::test;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto dir = std::filesystem::temp_directory_path() / "pencil_lab_tests";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << body;
  return path.string();
}

const char* kDiag = R"({"m":2,"n":2,"A":[[0,0],[0,0]],"B":[[1,0],[0,1]]})";
const char* kOneS = R"({"m":1,"n":2,"A":[[1,0]],"B":[[0,1]]})";

}  // namespace

TEST_SUITE("json") {
  TEST_CASE("round trips") {
    const auto w = chr({{Eigenvalue(Rational(1, 2)), Partition{2, 1}}, {Eigenvalue::infinity(), Partition{1}}},
                       star(2, {1}), star(1));
    CHECK(weyr_from_json(to_json(w)) == w);
    const Pencil h = pen({{1, 2}}, {{0, -3}});
    CHECK(pencil_from_json(to_json(h)) == h);
    CHECK(to_json(star(1, {1})).dump() == R"({"zeroth":1,"tail":[1]})");
  }

  TEST_CASE("run-length partitions") {
    CHECK(partition_from_json(Json::parse(R"(["11 x 3", 2])")) == Partition{11, 11, 11, 2});
    CHECK_THROWS_AS(partition_from_json(Json::parse(R"(["11 y 3"])")), InputError);
    CHECK_THROWS_AS(partition_from_json(Json::parse(R"([1, 2])")), InputError);
  }

  TEST_CASE("malformed input") {
    CHECK_THROWS_AS(pencil_from_json(Json::parse(R"({"m":1,"n":2,"A":[[1]],"B":[[0,1]]})")), InputError);
    CHECK_THROWS_AS(pencil_from_json(Json::parse(R"({"m":1,"n":1,"A":[["x"]],"B":[[0]]})")), InputError);
    CHECK_THROWS_AS(weyr_from_json(Json::parse(R"({"regular":[{"lambda":"0","weyr":[1]},{"lambda":"0","weyr":[1]}]})")),
                    InputError);
    CHECK_THROWS_AS(kind_from_string("diagonal"), InputError);
    CHECK(pencil_from_json(Json::parse(R"({"m":1,"n":1,"A":[["-3/6"]],"B":[[2]]})")).a(0, 0) == Rational(-1, 2));
  }
}

TEST_SUITE("fixtures") {
  TEST_CASE("all reachability fixtures pass") {
    const auto cases = load_fixtures(PENCIL_FIXTURE_FILE);
    CHECK(cases.size() == 14);
    std::set<Int> examples;
    for (const auto& c : cases) {
      examples.insert(c.example);
      const FixtureResult r = run_fixture(c);
      INFO(c.id);
      for (const auto& f : r.failures) INFO(f);
      CHECK(r.passed);
      CHECK(r.checked.size() == c.expected.size());
    }
    CHECK(examples.size() == 13);
  }

  TEST_CASE("a wrong expectation fails") {
    Json j = read_json_file(PENCIL_FIXTURE_FILE);
    j["fixtures"] = Json::array({j["fixtures"][0]});
    j["fixtures"][0]["expected"][0]["value"] = 7;
    const auto cases = fixtures_from_json(j);
    CHECK_FALSE(run_fixture(cases.at(0)).passed);
    j["fixtures"][0].erase("H");
    CHECK_THROWS_AS(fixtures_from_json(j), InputError);
  }
}

TEST_SUITE("campaign") {
  TEST_CASE("small campaign is sound and deterministic") {
    CampaignConfig cfg;
    cfg.trials = 150;
    cfg.seed = 9;
    const auto a = run_campaign(cfg), b = run_campaign(cfg);
    CHECK(a.passed());
    CHECK(a.violations == 0);
    CHECK(a.trials_run == 150);
    CHECK(a.rank_equal + a.rank_minus_one + a.rank_plus_one + a.rank_other + a.skipped == 150);
    CHECK(a.rank_minus_one > 0);
    CHECK(a.rank_plus_one > 0);
    CHECK(to_json(a).dump() == to_json(b).dump());
    cfg.seed = 10;
    CHECK(to_json(run_campaign(cfg)).dump() != to_json(a).dump());
  }

  TEST_CASE("fault injection reports violations without failing") {
    CampaignConfig cfg;
    cfg.trials = 200;
    cfg.fault_injection = true;
    const auto s = run_campaign(cfg);
    CHECK(s.passed());
    CHECK(s.violations > 0);
    CHECK_FALSE(s.counterexamples.empty());
  }

  TEST_CASE("levels") {
    CHECK(level_from_string("rank-only") == Level::RankOnly);
    CHECK_THROWS_AS(level_from_string("loose"), InputError);
    const Scenario s = scenario_for(Level::KindOnly, RankOneKind::Row, RankChange::PlusOne);
    CHECK(s.kind == RankOneKind::Row);
    CHECK(s.change == RankChange::Unknown);
  }
}

TEST_SUITE("concordance") {
  TEST_CASE("exhaustive at weight 3") {
    ConcordanceConfig cfg;
    cfg.max_weight = 3;
    const auto s = run_concordance(cfg);
    CHECK(s.mismatch_count == 0);
    CHECK(s.pairs_feasible > 0);
    CHECK(s.pairs_checked > s.pairs_feasible);
  }

  TEST_CASE("reachable completions of L1") {
    const auto sub = chr({}, star(1, {1}), star(0));
    const auto reach = reachable_completions(sub, 1);
    bool regular_pair = false;
    for (const auto& [w, g] : reach.reached) {
      REQUIRE(weyr_characteristic(g) == w);
      REQUIRE(completion_exists(sub, w));
      regular_pair = regular_pair || (w.r_star.zeroth() == 0 && w.regular_weight() == 2);
    }
    CHECK(regular_pair);
  }
}

TEST_SUITE("cli") {
  TEST_CASE("invariants") {
    const auto r = cli({"invariants", temp_file("diag.json", kDiag)});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["regular"][0]["lambda"] == "0");
    CHECK(j["regular"][0]["weyr"] == Json::array({2}));
    const auto one = Json::parse(cli({"invariants", temp_file("one_s.json", kOneS)}).out);
    CHECK(one["r_star"].dump() == R"({"zeroth":1,"tail":[1]})");
    const auto text = cli({"invariants", temp_file("diag.json", kDiag), "--format", "text"});
    CHECK(text.out.find("w(0) = (2)") != std::string::npos);
  }

  TEST_CASE("input errors exit 2") {
    CHECK(cli({"invariants", temp_file("bad.json", "{\"m\": 1,")}).code == 2);
    CHECK(cli({"invariants", "/nonexistent/file.json"}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({}).code == 2);
    CHECK(cli({"--help"}).code == 0);
    const auto irr = temp_file("irr.json", R"({"m":2,"n":2,"A":[[0,-2],[-1,0]],"B":[[1,0],[0,1]]})");
    const auto r = cli({"invariants", irr});
    CHECK(r.code == 2);
    CHECK(r.err.find("irrational") != std::string::npos);
  }

  TEST_CASE("generate") {
    const auto wfile = temp_file("w.json", R"({"regular":[{"lambda":"1/2","weyr":[1,1]}],"r_star":{"zeroth":1,"tail":[1]}})");
    const auto plain = cli({"generate", wfile});
    CHECK(plain.code == 0);
    const auto seeded = cli({"generate", wfile, "--seed", "4"});
    CHECK(seeded.out != plain.out);
    const auto p1 = temp_file("p1.json", plain.out), p2 = temp_file("p2.json", seeded.out);
    CHECK(Json::parse(cli({"invariants", p1}).out) == Json::parse(cli({"invariants", p2}).out));
    CHECK(weyr_from_json(Json::parse(cli({"invariants", p1}).out)) == weyr_from_json(read_json_file(wfile)));
    CHECK(cli({"equiv", p1, p2}).code == 0);
    CHECK(cli({"equiv", p1, temp_file("diag.json", kDiag)}).code == 1);
    const auto zero = cli({"generate", temp_file("z.json", R"({"r_star":{"zeroth":3,"tail":[]}})")});
    const Json z = Json::parse(zero.out);
    CHECK(z["m"] == 0);
    CHECK(z["n"] == 3);
  }

  TEST_CASE("perturb") {
    const auto h = temp_file("h.json", kDiag);
    const auto r = cli({"perturb", h, "--random", "--kind", "row", "--seed", "3"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["violations"] == 0);
    CHECK(j["reports"].size() == 4);
    CHECK(j["reports"][0]["bounds"]["w"].contains("formula_tag"));
    const auto zero = temp_file("zero.json", R"({"m":2,"n":2,"A":[[0,0],[0,0]],"B":[[0,0],[0,0]]})");
    CHECK(cli({"perturb", h, zero}).code == 2);
    const auto col = temp_file("col.json", R"({"m":2,"n":2,"A":[[1,0],[0,0]],"B":[[0,1],[0,0]]})");
    const Json c = Json::parse(cli({"perturb", h, col, "--scenario", "exact"}).out);
    CHECK(c["kind"] == "col");
    CHECK(c["reports"].size() == 1);
  }

  TEST_CASE("feasible") {
    const auto full = temp_file("full.json", R"({"regular":[{"lambda":"0","weyr":[1]}],"s_star":{"zeroth":2,"tail":[]}})");
    const auto sub = temp_file("sub.json", R"({"regular":[{"lambda":"0","weyr":[1]}],"s_star":{"zeroth":1,"tail":[]}})");
    const Json pair = Json::parse(cli({"feasible", sub, full, "--direction", "pair"}).out);
    CHECK(pair["feasible"] == true);
    const Json same = Json::parse(cli({"feasible", full, full, "--direction", "pair"}).out);
    CHECK(same["feasible"] == false);
    const auto presc = temp_file("presc.json", R"({"zeroth":0,"tail":[]})");
    const Json v = Json::parse(cli({"feasible", full, presc, "--component", "col", "--rank", "equal"}).out);
    CHECK(v["feasible"] == true);
    CHECK(v.contains("companion"));
    CHECK(cli({"feasible", full, presc, "--component", "col"}).code == 2);
  }

  TEST_CASE("fixtures and campaign") {
    const auto f = cli({"fixtures", "--format", "text"});
    CHECK(f.code == 0);
    CHECK(f.out.find("14/14 fixtures passed") != std::string::npos);
    const std::vector<std::string> args{"campaign", "--seed", "5", "--trials", "60"};
    const auto a = cli(args), b = cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(Json::parse(a.out)["violations"] == 0);
    CHECK(cli({"campaign", "--trials", "80", "--fault-injection"}).code == 0);
    CHECK(cli({"campaign", "--trials", "0"}).code == 2);
  }
}
