#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pencil/bounds.hpp"

namespace pencil {

// Throughout, H1 is the subpencil and H = [h; H1] its row completion
// (one more row, same columns). RankChange is rank H - rank H1 and must be
// Equal or PlusOne.

enum class Component { Regular, ColumnStar, RowStar };
enum class Direction {
  FullPrescribed,       // omega(H) known, part of omega(H1) prescribed
  SubpencilPrescribed,  // omega(H1) known, part of omega(H) prescribed
};

std::string to_string(Component c);
std::string to_string(Direction d);

struct Target {
  Direction direction;
  Component component;
  RankChange change;
};

// Prescribed part of the unknown characteristic.
struct Prescription {
  Spectrum regular;   // used when the component is Regular
  StarPartition star;  // used for ColumnStar / RowStar
};

struct Condition {
  std::string tag;
  bool holds;
};

struct Verdict {
  bool feasible = false;
  std::vector<Condition> conditions;
  // The completed unknown characteristic, when feasible.
  std::optional<WeyrCharacteristic> companion;
};

// Is there a row completion of a pencil with characteristic sub having
// characteristic full? Sizes that do not fit a one-row completion give an
// infeasible verdict with the single condition "one-more-row".
Verdict check_completion_full(const WeyrCharacteristic& sub, const WeyrCharacteristic& full, RankChange change);
// Same with the rank change read off the characteristics; false when the
// ranks differ by anything other than 0 or 1.
bool completion_exists(const WeyrCharacteristic& sub, const WeyrCharacteristic& full);

Verdict feasible_prescribed_sub(const WeyrCharacteristic& full, const Target& t, const Prescription& p);
Verdict feasible_prescribed_completion(const WeyrCharacteristic& sub, const Target& t, const Prescription& p);

// The companion characteristic of a feasible prescription. Throws
// DomainError when the prescription is infeasible.
WeyrCharacteristic realize_companion(const WeyrCharacteristic& known, const Target& t, const Prescription& p);

// First eigenvalue of 0, 1, -1, 2, -2, ... outside the spectrum of w.
Eigenvalue fresh_eigenvalue(const WeyrCharacteristic& w);

struct Witness {
  Pencil perturbation;
  Int trial;
};

// Seeded random search for P of the given kind with weyr(h + P) = target.
// Trial t draws from stream(seed, t) only, so results do not depend on
// how trials are scheduled.
std::optional<Witness> search_rank_one_witness(const Pencil& h, const WeyrCharacteristic& target, RankOneKind kind,
                                               std::uint64_t seed, Int budget);

}  // namespace pencil
