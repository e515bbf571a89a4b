#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pencil/completion.hpp"
#include "pencil/json_io.hpp"

namespace pencil {

// One completion step of a reachability example: the prescribed component
// of the unknown side and the rank relation of the completion.
struct FixtureStep {
  Component component;
  RankChange change;
  Prescription prescribed;
};

struct ExpectedDifference {
  char component;
  std::optional<Eigenvalue> lambda;
  Int index;
  Int value;
  std::string attains;  // "lower" or "upper"
  std::string formula_tag;
};

// H is known. sub_step prescribes part of H1 (H = [h; H1]); completion_step
// prescribes part of G = [g; H1]. G is then H + P for a column kind P.
struct FixtureCase {
  std::string id;
  Int example = 0;
  WeyrCharacteristic h;
  FixtureStep sub_step, completion_step;
  RankChange perturbation_rank;
  std::vector<ExpectedDifference> expected;
};

struct CheckedDifference {
  std::string at;  // e.g. "w_1(0)"
  Int value;       // observed G - H difference
  Int endpoint;    // the interval end named by the fixture
  std::string formula_tag;
};

struct FixtureResult {
  std::string id;
  bool passed = false;
  std::vector<std::string> failures;
  std::vector<CheckedDifference> checked;
  std::optional<WeyrCharacteristic> h1, g;
  std::optional<BoundReport> report;
};

std::vector<FixtureCase> fixtures_from_json(const Json& j);
std::vector<FixtureCase> load_fixtures(const std::string& path);

FixtureResult run_fixture(const FixtureCase& c);

Json to_json(const FixtureResult& r);

}  // namespace pencil
