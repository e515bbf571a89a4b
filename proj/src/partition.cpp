#include "pencil/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pencil/errors.hpp"

namespace pencil {

namespace {

void require_decreasing(const std::vector<Int>& v, const char* what) {
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[i - 1])
      throw InputError(std::string(what) + ": entries must be weakly decreasing");
}

}  // namespace

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
  require_decreasing(parts_, "partition");
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  if (!parts_.empty() && parts_.back() < 0)
    throw InputError("partition: negative part");
}

Int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), Int{0}); }

FiniteSequence::FiniteSequence(std::vector<Int> values) : values_(std::move(values)) {
  require_decreasing(values_, "finite sequence");
}

Int FiniteSequence::sum() const {
  return std::accumulate(values_.begin(), values_.end(), Int{0});
}

StarPartition::StarPartition(Int zeroth, Partition tail) : zeroth_(zeroth), tail_(std::move(tail)) {
  if (zeroth_ < 0) throw InputError("star partition: negative zeroth entry");
  if (zeroth_ < tail_.largest())
    throw InputError("star partition: zeroth entry smaller than first tail entry");
}

StarPartition StarPartition::from_sequence(const std::vector<Int>& seq) {
  if (seq.empty()) return {};
  return StarPartition(seq[0], Partition(std::vector<Int>(seq.begin() + 1, seq.end())));
}

std::vector<Int> StarPartition::to_sequence() const {
  std::vector<Int> out{zeroth_};
  out.insert(out.end(), tail_.parts().begin(), tail_.parts().end());
  return out;
}

Partition conjugate(const Partition& p) {
  std::vector<Int> out(static_cast<size_t>(p.largest()), 0);
  for (Int v : p.parts())
    for (Int k = 0; k < v; ++k) ++out[static_cast<size_t>(k)];
  return Partition(std::move(out));
}

Partition conjugate(const FiniteSequence& c) {
  Int top = 0;
  for (Int v : c.values()) {
    if (v < 0) throw InputError("conjugate: negative entry");
    top = std::max(top, v);
  }
  std::vector<Int> out(static_cast<size_t>(top), 0);
  for (Int v : c.values())
    for (Int k = 0; k < v; ++k) ++out[static_cast<size_t>(k)];
  return Partition(std::move(out));
}

StarPartition conjugate_star(const FiniteSequence& c) { return StarPartition(c.size(), conjugate(c)); }

FiniteSequence indices_from_star(const StarPartition& p) {
  std::vector<Int> c = conjugate(p.tail()).parts();
  c.resize(static_cast<size_t>(p.zeroth()), 0);
  return FiniteSequence(std::move(c));
}

Int weight(const Partition& p) { return p.weight(); }
Int star_weight(const StarPartition& p) { return p.star_weight(); }

bool is_1step_majorized(const FiniteSequence& d, const FiniteSequence& c) {
  const Int p = c.size();
  if (d.size() != p + 1) throw InputError("is_1step_majorized: d must have one more entry than c");
  Int h = p + 1;
  for (Int i = 1; i <= p; ++i)
    if (c.at(i) < d.at(i)) {
      h = i;
      break;
    }
  for (Int i = h; i <= p; ++i)
    if (c.at(i) != d.at(i + 1)) return false;
  return true;
}

namespace {

Int last_index(const StarPartition& a, const StarPartition& b) {
  return std::max(a.tail().length(), b.tail().length());
}

Int gap(const StarPartition& r, const StarPartition& s) {
  Int g = -1;
  for (Int i = 0; i <= last_index(r, s); ++i)
    if (r.at(i) > s.at(i)) g = i;
  return g;
}

}  // namespace

bool is_conjugate_majorized(const StarPartition& s, const StarPartition& r) {
  if (r.zeroth() != s.zeroth() + 1) return false;
  const Int g = gap(r, s);
  for (Int i = 0; i <= g; ++i)
    if (r.at(i) != s.at(i) + 1) return false;
  return true;
}

Int gap_index(const StarPartition& r, const StarPartition& s) {
  if (!is_conjugate_majorized(s, r)) throw InputError("gap_index: s is not conjugate-majorized by r");
  return gap(r, s);
}

bool deficit_feasible(const StarPartition& p, Int x) {
  if (p.zeroth() == 0) return false;
  const Partition a = conjugate(p.tail());
  if (p.zeroth() == 1) return x == a.part(1);
  return x == a.part(1) || x <= a.part(2);
}

StarPartition deficit_construct(const StarPartition& p, Int x) {
  if (!deficit_feasible(p, x)) throw DomainError("deficit_construct: no q with the requested deficit");
  const Partition a = conjugate(p.tail());
  const Int a1 = a.part(1), a2 = a.part(2);
  std::vector<Int> q;
  if (x == a1) {
    for (Int i = 0; i <= a1; ++i) q.push_back(p.at(i) - 1);
  } else {
    for (Int i = 0; i <= a2; ++i) q.push_back(p.at(i) - 1);
    for (Int i = a2 + 1; i <= a1; ++i) q.push_back(1);
    for (Int i = a1 + 1; i <= a1 + a2 - x; ++i) q.push_back(1);
  }
  return StarPartition::from_sequence(q);
}

Partition add(const Partition& a, const Partition& b) {
  std::vector<Int> out(static_cast<size_t>(std::max(a.length(), b.length())));
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = a.part(static_cast<Int>(i) + 1) + b.part(static_cast<Int>(i) + 1);
  return Partition(std::move(out));
}

StarPartition add_at_zero(const StarPartition& p, const Partition& q) {
  std::vector<Int> seq = p.to_sequence();
  if (static_cast<Int>(seq.size()) < q.length()) seq.resize(static_cast<size_t>(q.length()), 0);
  for (Int i = 0; i < q.length(); ++i) seq[static_cast<size_t>(i)] += q.part(i + 1);
  return StarPartition::from_sequence(seq);
}

Int isqrt(Int x) {
  if (x < 0) throw InputError("isqrt: negative argument");
  Int r = static_cast<Int>(std::sqrt(static_cast<long double>(x)));
  using Wide = __int128;
  while (r > 0 && Wide(r) * r > x) --r;
  while (Wide(r + 1) * (r + 1) <= x) ++r;
  return r;
}

namespace {

void grow(Int n, Int max_part, std::vector<Int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (Int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    grow(n - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(Int n, Int max_part) {
  std::vector<Partition> out;
  std::vector<Int> cur;
  if (n >= 0) grow(n, max_part, cur, out);
  return out;
}

std::vector<Partition> partitions_of(Int n) { return partitions_of(n, n); }

std::string to_string(const Partition& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.parts().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p.parts()[i]);
  }
  return s + ")";
}

std::string to_string(const StarPartition& p) {
  std::string s = "(" + std::to_string(p.zeroth());
  for (Int v : p.tail().parts()) s += "," + std::to_string(v);
  return s + ")";
}

}  // namespace pencil
