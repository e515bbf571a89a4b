#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace pencil {

using Int = std::int64_t;

// Weakly decreasing sequence of nonnegative integers. Stored without
// trailing zeros; part(i) is 1-based and returns 0 past the end.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<Int> parts);
  Partition(std::initializer_list<Int> parts) : Partition(std::vector<Int>(parts)) {}

  Int part(Int i) const {
    return (i >= 1 && i <= static_cast<Int>(parts_.size())) ? parts_[i - 1] : 0;
  }
  Int length() const { return static_cast<Int>(parts_.size()); }
  Int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  Int weight() const;
  bool empty() const { return parts_.empty(); }
  const std::vector<Int>& parts() const { return parts_; }

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<Int> parts_;
};

// Weakly decreasing integer sequence of fixed length (entries may repeat
// zeros, and 1step majorization allows negative entries). at(i) is 1-based.
class FiniteSequence {
 public:
  FiniteSequence() = default;
  explicit FiniteSequence(std::vector<Int> values);
  FiniteSequence(std::initializer_list<Int> v) : FiniteSequence(std::vector<Int>(v)) {}

  Int at(Int i) const { return values_.at(static_cast<size_t>(i - 1)); }
  Int size() const { return static_cast<Int>(values_.size()); }
  Int sum() const;
  const std::vector<Int>& values() const { return values_; }

  bool operator==(const FiniteSequence&) const = default;

 private:
  std::vector<Int> values_;
};

// (p0, p1, p2, ...) with p0 >= p1 >= ... ; index 0 is the "zeroth" entry.
class StarPartition {
 public:
  StarPartition() = default;
  StarPartition(Int zeroth, Partition tail);
  // Accepts (p0, p1, ...) and strips trailing zeros of the tail.
  static StarPartition from_sequence(const std::vector<Int>& seq);

  Int zeroth() const { return zeroth_; }
  const Partition& tail() const { return tail_; }
  Int at(Int i) const { return i == 0 ? zeroth_ : tail_.part(i); }
  Int tail_weight() const { return tail_.weight(); }
  Int star_weight() const { return zeroth_ + tail_.weight(); }
  // (p0, ..., p_len) with len = tail length
  std::vector<Int> to_sequence() const;

  bool operator==(const StarPartition&) const = default;

 private:
  Int zeroth_ = 0;
  Partition tail_;
};

// r_k = #{ i : c_i >= k }
Partition conjugate(const Partition& p);
Partition conjugate(const FiniteSequence& c);
// (length of c, conj(c)); c must be nonnegative
StarPartition conjugate_star(const FiniteSequence& c);
// Inverse of conjugate_star: the sequence (c_1..c_{p0}), zero padded.
FiniteSequence indices_from_star(const StarPartition& p);

Int weight(const Partition& p);
Int star_weight(const StarPartition& p);

// d has one more entry than c.  True iff c_i = d_{i+1} for h <= i <= len(c),
// where h is the first index with c_h < d_h (c_{len+1} = -infinity).
bool is_1step_majorized(const FiniteSequence& d, const FiniteSequence& c);

// s ∠ r : r0 = s0 + 1 and r_i = s_i + 1 for 0 <= i <= g, g = max{i : r_i > s_i}.
bool is_conjugate_majorized(const StarPartition& s, const StarPartition& r);
// g for a pair with s ∠ r; throws InputError otherwise.
Int gap_index(const StarPartition& r, const StarPartition& s);

// Is there q with q ∠ p and weight(q tail) = weight(p tail) - x ?
bool deficit_feasible(const StarPartition& p, Int x);
// The explicit q; throws DomainError when infeasible.
StarPartition deficit_construct(const StarPartition& p, Int x);

// Componentwise sum.
Partition add(const Partition& a, const Partition& b);
// Star partition plus a partition aligned at index 0:
// (p0 + q1, p1 + q2, ...).
StarPartition add_at_zero(const StarPartition& p, const Partition& q);

// floor(sqrt(x)) for x >= 0.
Int isqrt(Int x);

// All partitions of n (weakly decreasing, reverse lexicographic).
std::vector<Partition> partitions_of(Int n);
// All partitions of n with parts <= max_part.
std::vector<Partition> partitions_of(Int n, Int max_part);

std::string to_string(const Partition& p);
std::string to_string(const StarPartition& p);

}  // namespace pencil
