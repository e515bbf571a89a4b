#pragma once

#include <vector>

#include "pencil/invariants.hpp"
#include "pencil/pencil.hpp"

namespace pencil::test {

// A + sB from integer rows.
inline Pencil pen(const std::vector<std::vector<long>>& a, const std::vector<std::vector<long>>& b) {
  return {Matrix::from_ints(a), Matrix::from_ints(b)};
}

inline Pencil diag_s_s() { return pen({{0, 0}, {0, 0}}, {{1, 0}, {0, 1}}); }
inline Pencil jordan_s2() { return pen({{0, 1}, {0, 0}}, {{1, 0}, {0, 1}}); }
inline Pencil one_s() { return pen({{1, 0}}, {{0, 1}}); }

inline StarPartition star(Int zeroth, std::vector<Int> tail = {}) { return StarPartition(zeroth, Partition(std::move(tail))); }

inline WeyrCharacteristic chr(Spectrum regular, StarPartition r, StarPartition s) {
  WeyrCharacteristic w;
  w.regular = std::move(regular);
  w.r_star = std::move(r);
  w.s_star = std::move(s);
  return w;
}

// k copies of v
inline std::vector<Int> rep(Int v, Int k) { return std::vector<Int>(static_cast<size_t>(k), v); }

}  // namespace pencil::test
