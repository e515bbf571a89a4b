#pragma once

#include <map>
#include <utility>
#include <vector>

#include "pencil/partition.hpp"
#include "pencil/pencil.hpp"
#include "pencil/polynomial.hpp"

namespace pencil {

using Spectrum = std::map<Eigenvalue, Partition>;

// Partial multiplicities z(lambda) and minimal indices, both decreasing.
struct KroneckerStructure {
  Int rows = 0, cols = 0, rank = 0;
  Spectrum multiplicities;
  FiniteSequence column_indices, row_indices;

  bool operator==(const KroneckerStructure&) const = default;
};

// omega = (W, r*, s*), W holding the Weyr partitions w(lambda) = conj z(lambda).
// Only eigenvalues with a nonzero partition are stored.
struct WeyrCharacteristic {
  Spectrum regular;
  StarPartition r_star, s_star;

  const Partition& weyr(const Eigenvalue& lambda) const;
  void set_weyr(const Eigenvalue& lambda, Partition w);
  std::vector<Eigenvalue> spectrum() const;

  Int regular_weight() const;
  Int rank() const { return regular_weight() + r_star.tail_weight() + s_star.tail_weight(); }
  Int rows() const { return rank() + s_star.zeroth(); }
  Int cols() const { return rank() + r_star.zeroth(); }
  // |W| + |r*| + |s*|
  Int total_weight() const { return regular_weight() + r_star.star_weight() + s_star.star_weight(); }

  bool operator==(const WeyrCharacteristic&) const = default;
};

// The same characteristic with rows and columns exchanged.
WeyrCharacteristic transpose(const WeyrCharacteristic& w);

WeyrCharacteristic weyr_from_kronecker(const KroneckerStructure& k);
KroneckerStructure kronecker_from_weyr(const WeyrCharacteristic& w);

// Invariant factors of A + sB over Q[s]: the nonzero monic diagonal of the
// Smith form, in divisibility order.
std::vector<Polynomial> smith_invariant_factors(const Pencil& h);

// z(lambda), the sizes of the Jordan blocks at lambda.
Partition partial_multiplicities(const Pencil& h, const Eigenvalue& lambda);
// w(lambda) = conj z(lambda)
Partition weyr_partition(const Pencil& h, const Eigenvalue& lambda);

// (column minimal indices, row minimal indices), decreasing.
std::pair<FiniteSequence, FiniteSequence> minimal_indices(const Pencil& h);

// Throws IrrationalSpectrum when some finite eigenvalue is not rational.
KroneckerStructure kronecker_structure(const Pencil& h);
WeyrCharacteristic weyr_characteristic(const Pencil& h);

bool strictly_equivalent(const Pencil& g, const Pencil& h);

}  // namespace pencil
