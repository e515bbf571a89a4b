#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pencil/invariants.hpp"

namespace pencil {

// rank(after) - rank(before). For completions "after" is the bigger pencil.
enum class RankChange { Equal, MinusOne, PlusOne, Unknown };

std::string to_string(RankChange c);
RankChange rank_change_from(Int delta);

// What is known about a rank one perturbation. An empty kind means unknown.
struct Scenario {
  std::optional<RankOneKind> kind;
  RankChange change = RankChange::Unknown;
};

struct Interval {
  Int lower = 0, upper = 0;
  std::string tag;
  bool contains(Int x) const { return lower <= x && x <= upper; }
  bool operator==(const Interval&) const = default;
};

// Bounds on w_i(lambda) (i >= 1, every lambda), r_i and s_i (i >= 0)
// differences.
struct DeltaBounds {
  Interval w, r, s;
};

// Row completion H of H1: differences are H minus H1. change must be
// Equal or PlusOne. The Equal case reads |s1*| from sub and the PlusOne
// case reads |r| from full.
DeltaBounds completion_bounds(const WeyrCharacteristic& sub, const WeyrCharacteristic& full, RankChange change);
// Same, rank relation not known.
DeltaBounds completion_bounds_any_rank(const WeyrCharacteristic& sub, const WeyrCharacteristic& full);

// Two completions H, G of a common H1 (differences G minus H):
//   1: rank G = rank H = rank H1
//   2: rank G = rank H = rank H1 + 1
//   3: rank G = rank H1 = rank H - 1
//   4: rank H = rank H1 = rank G - 1
DeltaBounds two_sided_completion_bounds(const WeyrCharacteristic& h, int which);

// Bounds for H + P against H, P of rank one, for the given scenario.
DeltaBounds perturbation_bounds(const WeyrCharacteristic& h, const Scenario& sc);

struct Difference {
  char component;  // 'w', 'r' or 's'
  std::optional<Eigenvalue> lambda;
  Int index;
  Int value;
};

struct BoundReport {
  Scenario scenario;
  DeltaBounds bounds;
  std::vector<Difference> differences;
  std::vector<Difference> violations;
};

// Every difference between two characteristics of pencils with the same
// dimensions: w over the union of spectra for i >= 1, r and s for i >= 0,
// up to one past the longest partition involved.
std::vector<Difference> all_differences(const WeyrCharacteristic& before, const WeyrCharacteristic& after);

BoundReport check_bounds(const WeyrCharacteristic& before, const WeyrCharacteristic& after, const Scenario& sc);

}  // namespace pencil
