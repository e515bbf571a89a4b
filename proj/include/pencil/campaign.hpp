#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pencil/bounds.hpp"
#include "pencil/concordance.hpp"
#include "pencil/json_io.hpp"

namespace pencil {

// How much of the perturbation is assumed known when checking bounds.
enum class Level { Exact, KindOnly, RankOnly, None };

std::string to_string(Level l);
Level level_from_string(const std::string& s);  // throws InputError
Scenario scenario_for(Level l, RankOneKind kind, RankChange change);

struct CampaignConfig {
  std::uint64_t seed = 1;
  Int trials = 1000;
  Int budget = 6;    // total weight of the random characteristic
  Int max_size = 6;  // rows and columns
  std::vector<RankOneKind> kinds{RankOneKind::Column, RankOneKind::Row};
  std::vector<Level> levels{Level::Exact, Level::KindOnly, Level::RankOnly, Level::None};
  // Perturb by a sum of two rank one pencils instead. Outside the
  // hypotheses; violations are reported but not an error.
  bool fault_injection = false;
  // Exhaustive concordance up to this total weight; 0 skips it.
  Int concordance_weight = 0;
};

struct Counterexample {
  Int trial;
  Level level;
  RankOneKind kind;
  Pencil h, p;
  WeyrCharacteristic before, after;
  BoundReport report;
};

struct CampaignSummary {
  CampaignConfig config;
  Int trials_run = 0;
  Int redraws = 0;   // draws discarded for an irrational spectrum of H + P
  Int skipped = 0;   // trials that never produced a rational spectrum
  Int rank_equal = 0, rank_minus_one = 0, rank_plus_one = 0, rank_other = 0;
  Int kind_col = 0, kind_row = 0;
  std::vector<std::pair<Level, Int>> checks, violations_by_level, endpoint_hits;
  Int differences_checked = 0;
  Int violations = 0;
  std::vector<Counterexample> counterexamples;  // first few only
  std::optional<ConcordanceSummary> concordance;

  // No violations and no concordance mismatches. Fault injection runs
  // always pass.
  bool passed() const;
};

CampaignSummary run_campaign(const CampaignConfig& cfg);

Json to_json(const CampaignConfig& c);
Json to_json(const CampaignSummary& s);
Json to_json(const ConcordanceSummary& s);

}  // namespace pencil
