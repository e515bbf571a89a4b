#pragma once

#include <cstdint>
#include <string>

#include "pencil/partition.hpp"

namespace pencil::test {

// Counts from one exhaustive oracle run. Only the first failure is kept.
struct OracleRun {
  long checked = 0;
  long failures = 0;
  std::string first_failure;
  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
  bool ok() const { return failures == 0 && checked > 0; }
};

// conjugate twice is the identity: every partition of weight <= max_weight,
// plus random ones with parts and length <= 20.
OracleRun conjugation_oracle(Int max_weight, long random_draws, std::uint64_t seed);

// c (length m+1) 1step-majorizes d (length m) iff conj-star(d) ∠ conj-star(c),
// all nonnegative entries <= max_entry, m <= max_m.
OracleRun duality_oracle(Int max_entry, Int max_m);

// Every pair s ∠ r with star weights <= max_weight: k <= g, the tail
// bound past g, and g = c1 or g <= c2 for c = conj(r tail).
OracleRun gap_oracle(Int max_weight);

// deficit_feasible against enumeration of q, and deficit_construct
// rechecked, for star weight <= max_weight and |x| <= max_weight.
OracleRun deficit_oracle(Int max_weight);

// Interval containment exact ⊆ kind-only ⊆ none and exact ⊆ rank-only ⊆ none,
// the completion intervals inside the any-rank ones, and the col/row
// transpose duality, on random characteristics of growing size.
OracleRun nesting_oracle(long draws, std::uint64_t seed);

// Star partitions of every star weight <= k.
std::vector<StarPartition> star_partitions_upto(Int k);

}  // namespace pencil::test
