#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "pencil/invariants.hpp"

namespace pencil {

using Rng = std::mt19937_64;

// Block-diagonal Kronecker canonical form: L_eps blocks, L_eta^T blocks,
// Jordan blocks sI - J_k(lambda), then I + sN_k for infinity.
// The result has rank(w) + s0 rows and rank(w) + r0 columns.
Pencil build_pencil(const WeyrCharacteristic& w);
Pencil build_pencil(const KroneckerStructure& k);

// Eigenvalues drawn by the random generators: 0, 1, -1, 2, 1/2, infinity.
const std::vector<Eigenvalue>& eigenvalue_pool();

// Random characteristic with total weight |W| + |r*| + |s*| <= budget.
WeyrCharacteristic random_weyr(Rng& rng, Int budget);

// Random rank one pencil. For Column (u v(s)^T) with n >= 2 the two
// coefficient vectors of v are independent, and likewise for Row with
// m >= 2, so classify_rank_one recovers the kind.
Pencil random_rank_one(Rng& rng, size_t m, size_t n, RankOneKind kind);

// Product of random elementary integer operations; determinant +-1.
Matrix random_unimodular(Rng& rng, size_t n);

// A random strictly equivalent copy P H Q.
Pencil random_equivalent(Rng& rng, const Pencil& h);

// Star partitions (p0, p1, ...) with p0 + |p| = k.
std::vector<StarPartition> star_partitions_of(Int k);

// Calls f on every characteristic with total weight <= max_weight whose
// eigenvalues lie in pool. Each one is visited exactly once.
void for_each_characteristic(Int max_weight, const std::vector<Eigenvalue>& pool,
                             const std::function<void(const WeyrCharacteristic&)>& f);

// Reproducible stream for (seed, index) pairs.
Rng stream(std::uint64_t seed, std::uint64_t index);

}  // namespace pencil
