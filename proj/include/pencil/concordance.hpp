#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pencil/completion.hpp"

namespace pencil {

// Exhaustive check of check_completion_full against explicit row
// completions [h; H1], H1 = build_pencil(sub), with the entries of h of
// the form a + b s, |a|, |b| <= entry_bound.
struct ConcordanceConfig {
  Int max_weight = 5;
  Int max_cols = 5;
  Int entry_bound = 1;
  // Feasible pairs not reached at entry_bound are first looked up under
  // the changes of variable that permute the pool, then retried for that
  // subpencil with bounds up to this one, varying only the entries of h off
  // the pivots of the row space of H1.
  Int max_entry_bound = 2;
  std::vector<Eigenvalue> pool{Eigenvalue(0), Eigenvalue(1), Eigenvalue(-1), Eigenvalue::infinity()};
};

struct ConcordanceMismatch {
  WeyrCharacteristic sub, full;
  bool predicate;  // check_completion_full(sub, full)
  std::optional<Pencil> completion;  // set when realized by a row
};

struct ConcordanceSummary {
  Int subpencils = 0;
  Int rows_enumerated = 0;
  Int rows_distinct = 0;     // after the equivalence reductions
  Int rows_irrational = 0;   // completions with spectrum outside Q, skipped
  Int pairs_checked = 0;     // (sub, full) pairs with full in range
  Int pairs_feasible = 0;
  Int pairs_relabeled = 0;  // reached only after a change of variable s -> (as + b)/(cs + d)
  Int escalations = 0;      // (subpencil, wider bound) reruns
  Int pairs_widened = 0;    // feasible pairs first reached with wider entries
  Int mismatch_count = 0;
  std::vector<ConcordanceMismatch> mismatches;  // first few only
};

// Distinct completion characteristics reachable from sub, with one
// completing pencil each. Rows equivalent under the stabilizer of H1 are
// tried once. With wanted given, stops once all of those keys (JSON dumps
// of characteristics) have been reached.
struct ReachableSet {
  std::vector<std::pair<WeyrCharacteristic, Pencil>> reached;
  Int enumerated = 0, distinct = 0, irrational = 0;
};
ReachableSet reachable_completions(const WeyrCharacteristic& sub, Int entry_bound,
                                  const std::set<std::string>* wanted = nullptr);

ConcordanceSummary run_concordance(const ConcordanceConfig& cfg,
                                   const std::function<void(Int done, Int total)>& progress = {});

}  // namespace pencil
