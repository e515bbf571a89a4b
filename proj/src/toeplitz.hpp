#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "pencil/matrix.hpp"

namespace pencil::detail {

// T_k is the k x k block lower bidiagonal matrix with x on the diagonal and
// y below it. M_k is T_k with one more block row holding y in block column
// k. With square set, entry k of the result is rank T_k, otherwise rank
// M_k; entry 0 is 0. Steps continue until stop(ranks) holds or max_steps
// is reached. Returns nullopt when the entries are too large for the
// modular certificate.
using RankStop = std::function<bool(const std::vector<size_t>&)>;
std::optional<std::vector<size_t>> bidiagonal_ranks(const IntMatrix& x, const IntMatrix& y, bool square,
                                                    size_t max_steps, const RankStop& stop);

}  // namespace pencil::detail
