// Acceptance suite: one PASS/FAIL line per criterion.
//   pencil_acceptance            all six
//   pencil_acceptance 2 4        only those
//   pencil_acceptance slow       concordance with entries in {-2..2}, weight <= 4
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "pencil/builder.hpp"
#include "pencil/campaign.hpp"
#include "pencil/concordance.hpp"
#include "pencil/fixtures.hpp"
#include "pencil/invariants.hpp"

using namespace pencil;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

using Criterion = std::function<Outcome()>;

Outcome fixtures() {
  Outcome o;
  std::ostringstream d;
  const auto cases = load_fixtures(PENCIL_FIXTURE_FILE);
  std::set<Int> examples;
  std::map<std::string, std::vector<Int>> seen;
  size_t passed = 0;
  for (const auto& c : cases) {
    const FixtureResult r = run_fixture(c);
    if (r.passed) {
      ++passed;
      examples.insert(c.example);
    } else {
      o.ok = false;
      d << " [" << c.id << ": " << (r.failures.empty() ? "failed" : r.failures.front()) << "]";
    }
    for (const auto& k : r.checked) seen[c.id].push_back(k.value);
  }
  // extremal values that must be attained, by fixture
  const std::vector<std::pair<std::string, Int>> required{
      {"sec5-s-lower", -101}, {"sec5-r-lower", -11}, {"sec5-r-upper", 10}, {"sec5-s-upper", 10},
      {"sec5-r-drop", -100},  {"sec5-s-drop", -50},  {"sec5-s-rise", 99},  {"sec5-w-rr", 1},
      {"sec5-w-rr", -1},      {"sec5-w-drop", -2},   {"sec5-w-rise", 2}};
  size_t hit = 0;
  for (const auto& [id, v] : required) {
    const auto& vals = seen[id];
    if (std::find(vals.begin(), vals.end(), v) != vals.end()) ++hit;
    else {
      o.ok = false;
      d << " [" << id << " missing " << v << "]";
    }
  }
  if (examples.size() != 13) o.ok = false;
  o.detail = std::to_string(passed) + "/" + std::to_string(cases.size()) + " fixtures, " +
             std::to_string(examples.size()) + "/13 examples, " + std::to_string(hit) + "/" +
             std::to_string(required.size()) + " extremal values" + d.str();
  return o;
}

Outcome round_trip() {
  Outcome o;
  long count = 0, bad = 0;
  for_each_characteristic(10, eigenvalue_pool(), [&](const WeyrCharacteristic& w) {
    ++count;
    if (weyr_characteristic(build_pencil(w)) != w) ++bad;
  });
  long random_bad = 0;
  for (std::uint64_t t = 0; t < 200; ++t) {
    Rng rng = stream(2024, t);
    const WeyrCharacteristic w = random_weyr(rng, 10);
    if (weyr_characteristic(random_equivalent(rng, build_pencil(w))) != w) ++random_bad;
  }
  o.ok = bad == 0 && random_bad == 0 && count > 0;
  o.detail = std::to_string(count) + " characteristics (" + std::to_string(bad) + " mismatches), 200 random equivalences (" +
             std::to_string(random_bad) + " mismatches)";
  return o;
}

Outcome campaign() {
  CampaignConfig cfg;
  cfg.trials = 1000;
  const CampaignSummary s = run_campaign(cfg);
  Outcome o;
  o.ok = s.violations == 0 && s.trials_run == 1000 && s.skipped == 0;
  std::ostringstream d;
  d << s.trials_run << " trials, " << s.differences_checked << " differences, violations";
  for (const auto& [l, n] : s.violations_by_level) d << " " << to_string(l) << "=" << n;
  for (const auto& [l, n] : s.checks)
    if (n == 0) o.ok = false;
  o.detail = d.str();
  return o;
}

Outcome concordance() {
  ConcordanceConfig cfg;
  cfg.max_weight = 5;
  const ConcordanceSummary s = run_concordance(cfg);
  Outcome o;
  o.ok = s.mismatch_count == 0 && s.pairs_checked > 0;
  o.detail = std::to_string(s.subpencils) + " subpencils, " + std::to_string(s.pairs_checked) + " pairs (" +
             std::to_string(s.pairs_feasible) + " feasible, " + std::to_string(s.pairs_relabeled) + " via change of variable, " +
             std::to_string(s.pairs_widened) + " widened), " + std::to_string(s.mismatch_count) + " mismatches";
  return o;
}

Outcome wide_concordance() {
  ConcordanceConfig cfg;
  cfg.max_weight = 4;
  cfg.entry_bound = 2;
  cfg.max_entry_bound = 2;
  const ConcordanceSummary s = run_concordance(cfg);
  Outcome o;
  o.ok = s.mismatch_count == 0 && s.pairs_checked > 0;
  o.detail = std::to_string(s.rows_enumerated) + " rows, " + std::to_string(s.pairs_checked) + " pairs (" +
             std::to_string(s.pairs_feasible) + " feasible), " + std::to_string(s.mismatch_count) + " mismatches";
  return o;
}

Outcome combinatorics() {
  const auto conj = test::conjugation_oracle(20, 20000, 5);
  const auto dual = test::duality_oracle(6, 5);
  const auto gap = test::gap_oracle(12);
  const auto def = test::deficit_oracle(12);
  Outcome o;
  o.ok = conj.ok() && dual.ok() && gap.ok() && def.ok();
  std::ostringstream d;
  d << "conjugation " << conj.checked << ", duality " << dual.checked << ", gap bounds " << gap.checked
    << " pairs, deficit " << def.checked << "; failures " << conj.failures + dual.failures + gap.failures + def.failures;
  for (const auto* r : {&conj, &dual, &gap, &def})
    if (r->failures) d << " [" << r->first_failure << "]";
  o.detail = d.str();
  return o;
}

Outcome nesting() {
  const auto run = test::nesting_oracle(500, 6);
  Outcome o;
  o.ok = run.ok();
  o.detail = "500 characteristics, " + std::to_string(run.checked) + " scenario comparisons, " +
             std::to_string(run.failures) + " failures" + (run.failures ? " [" + run.first_failure + "]" : "");
  return o;
}

struct Entry {
  int id;
  const char* name;
  double limit_s;
  Criterion run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Entry> all{
      {1, "reachability fixtures", 5, fixtures},
      {2, "round trip extractor after builder", 120, round_trip},
      {3, "perturbation bound soundness", 120, campaign},
      {4, "exhaustive completion concordance", 600, concordance},
      {5, "combinatorial oracles", 60, combinatorics},
      {6, "interval nesting", 10, nesting},
  };
  const Entry slow{0, "slow tier, wide entry concordance", 600, wide_concordance};
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::string(argv[i]) == "slow" ? 0 : std::atoi(argv[i]));
  std::vector<Entry> plan;
  for (const auto& e : all)
    if (wanted.empty() || wanted.count(e.id)) plan.push_back(e);
  if (wanted.count(0)) plan.push_back(slow);
  int failed = 0;
  for (const auto& e : plan) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = e.run();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = s < e.limit_s;
    const bool pass = o.ok && in_time;
    failed += !pass;
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << s;
    std::cout << (pass ? "PASS" : "FAIL") << (e.id ? " criterion " + std::to_string(e.id) : std::string(" extra")) << ": " << e.name << ": " << o.detail << " ("
              << t.str() << " s, limit " << e.limit_s << " s" << (in_time ? "" : ", too slow") << ")" << std::endl;
  }
  return failed ? 1 : 0;
}
