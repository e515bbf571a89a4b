#include "pencil/concordance.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "pencil/builder.hpp"
#include "pencil/errors.hpp"
#include "pencil/json_io.hpp"

namespace pencil {

namespace {

using Vec = std::vector<Rational>;
using Key = std::vector<long long>;

struct KeyHash {
  size_t operator()(const Key& k) const {
    size_t h = 1469598103934665603ull;
    for (long long x : k) h = (h ^ static_cast<size_t>(x + 1000003)) * 1099511628211ull;
    return h;
  }
};

std::string key_of(const WeyrCharacteristic& w) { return to_json(w).dump(); }

// Row h of a completion as a vector (h(0) | h'(0)) of length 2n. Two rows are
// identified when one is carried to the other by
//   h -> c h + x H1            (row operations fixing H1)
//   scaling one block of columns of H1 together with its rows
//   swapping two identical blocks
// each of which maps [h; H1] to a strictly equivalent pencil. The canonical
// form keeps each block segment as a primitive integer vector with positive
// leading entry.
class RowReducer {
 public:
  explicit RowReducer(const Pencil& h1) : n_(h1.cols()) {
    const size_t m = h1.rows();
    std::vector<Vec> rows(m, Vec(2 * n_));
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < n_; ++j) {
        rows[i][j] = h1.a(i, j);
        rows[i][n_ + j] = h1.b(i, j);
      }
    echelon(rows);
    blocks(h1);
  }

  // Coordinates that are not pivots of the row space of H1. Every coset
  // h + span(H1) has exactly one member supported on them.
  std::vector<size_t> free_coordinates() const {
    std::vector<bool> pivot(2 * n_, false);
    for (const auto& [p, row] : pivots_) pivot[p] = true;
    std::vector<size_t> out;
    for (size_t j = 0; j < 2 * n_; ++j)
      if (!pivot[j]) out.push_back(j);
    return out;
  }

  Key canonical(const std::vector<Int>& digits) const {
    Key out(2 * n_);
    if (integral_) {
      for (size_t j = 0; j < out.size(); ++j) out[j] = digits[j];
      for (const auto& [p, row] : int_pivots_) {
        const long long f = out[p];
        if (f == 0) continue;
        for (size_t j = 0; j < out.size(); ++j) out[j] -= f * row[j];
      }
    } else {
      Vec v(2 * n_);
      for (size_t j = 0; j < v.size(); ++j) v[j] = digits[j];
      for (const auto& [p, row] : pivots_) {
        if (sgn(v[p]) == 0) continue;
        const Rational f = v[p];
        for (size_t j = 0; j < v.size(); ++j)
          if (sgn(row[j]) != 0) v[j] -= f * row[j];
      }
      mpz_class l = 1;
      for (const auto& x : v) l = lcm(l, mpz_class(x.get_den()));
      for (size_t j = 0; j < v.size(); ++j) {
        const mpz_class z = v[j].get_num() * (l / v[j].get_den());
        if (!z.fits_slong_p()) throw std::overflow_error("row entry out of range");
        out[j] = z.get_si();
      }
    }
    std::vector<Key> seg(blocks_.size());
    for (size_t k = 0; k < blocks_.size(); ++k) {
      Key& s = seg[k];
      for (size_t c : blocks_[k]) s.push_back(out[c]);
      for (size_t c : blocks_[k]) s.push_back(out[n_ + c]);
      long long g = 0, lead = 0;
      for (long long x : s) {
        g = std::gcd(g, x);
        if (lead == 0) lead = x;
      }
      if (g == 0) continue;
      if (lead < 0) g = -g;
      for (auto& x : s) x /= g;
    }
    for (const auto& group : twins_) {
      std::vector<Key> s;
      for (size_t k : group) s.push_back(seg[k]);
      std::sort(s.begin(), s.end());
      for (size_t t = 0; t < group.size(); ++t) seg[group[t]] = std::move(s[t]);
    }
    for (size_t k = 0; k < blocks_.size(); ++k) {
      const size_t w = blocks_[k].size();
      for (size_t t = 0; t < w; ++t) {
        out[blocks_[k][t]] = seg[k][t];
        out[n_ + blocks_[k][t]] = seg[k][w + t];
      }
    }
    return out;
  }

 private:
  void echelon(std::vector<Vec>& rows) {
    size_t next = 0;
    for (size_t c = 0; c < 2 * n_ && next < rows.size(); ++c) {
      size_t p = next;
      while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
      if (p == rows.size()) continue;
      std::swap(rows[p], rows[next]);
      const Rational inv = 1 / rows[next][c];
      for (auto& x : rows[next]) x *= inv;
      for (size_t i = 0; i < rows.size(); ++i) {
        if (i == next || sgn(rows[i][c]) == 0) continue;
        const Rational f = rows[i][c];
        for (size_t j = 0; j < 2 * n_; ++j) rows[i][j] -= f * rows[next][j];
      }
      pivots_.emplace_back(c, rows[next]);
      ++next;
    }
    for (const auto& [p, row] : pivots_) {
      Key r;
      for (const auto& x : row) {
        if (x.get_den() != 1 || !x.get_num().fits_sint_p()) {
          integral_ = false;
          return;
        }
        r.push_back(x.get_num().get_si());
      }
      int_pivots_.emplace_back(p, std::move(r));
    }
  }

  // Connected components of the support of H1, as column sets.
  void blocks(const Pencil& h1) {
    std::vector<size_t> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<std::vector<size_t>> row_cols(h1.rows());
    for (size_t i = 0; i < h1.rows(); ++i) {
      for (size_t j = 0; j < n_; ++j)
        if (sgn(h1.a(i, j)) != 0 || sgn(h1.b(i, j)) != 0) row_cols[i].push_back(j);
      for (size_t t = 1; t < row_cols[i].size(); ++t) parent[find(row_cols[i][t])] = find(row_cols[i][0]);
    }
    std::map<size_t, size_t> index;
    for (size_t j = 0; j < n_; ++j) {
      auto [it, fresh] = index.try_emplace(find(j), blocks_.size());
      if (fresh) blocks_.emplace_back();
      blocks_[it->second].push_back(j);
    }
    // Signature: the block's rows restricted to its columns.
    std::vector<std::vector<std::vector<std::string>>> sig(blocks_.size());
    for (size_t i = 0; i < h1.rows(); ++i) {
      if (row_cols[i].empty()) continue;
      const size_t k = index[find(row_cols[i][0])];
      std::vector<std::string> r;
      for (size_t c : blocks_[k]) r.push_back(format_rational(h1.a(i, c)) + "," + format_rational(h1.b(i, c)));
      sig[k].push_back(std::move(r));
    }
    std::map<std::pair<size_t, std::vector<std::vector<std::string>>>, std::vector<size_t>> same;
    for (size_t k = 0; k < blocks_.size(); ++k) same[{blocks_[k].size(), sig[k]}].push_back(k);
    for (auto& [s, group] : same)
      if (group.size() > 1) twins_.push_back(group);
  }

  size_t n_;
  bool integral_ = true;
  std::vector<std::pair<size_t, Vec>> pivots_;
  std::vector<std::pair<size_t, Key>> int_pivots_;
  std::vector<std::vector<size_t>> blocks_;
  std::vector<std::vector<size_t>> twins_;
};

Pencil stack(const Key& h, const Pencil& h1) {
  const size_t n = h1.cols(), m = h1.rows();
  Pencil g = Pencil::zero(m + 1, n);
  for (size_t j = 0; j < n; ++j) {
    g.a(0, j) = static_cast<long>(h[j]);
    g.b(0, j) = static_cast<long>(h[n + j]);
  }
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < n; ++j) {
      g.a(i + 1, j) = h1.a(i, j);
      g.b(i + 1, j) = h1.b(i, j);
    }
  return g;
}

}  // namespace

namespace {

// Rows with entries in [-bound, bound] on all 2n coordinates, or only on
// the free coordinates of H1 (zero elsewhere).
ReachableSet reach(const WeyrCharacteristic& sub, Int entry_bound, const std::set<std::string>* wanted,
                   bool free_only) {
  if (entry_bound < 0) throw InputError("entry bound must be nonnegative");
  const Pencil h1 = build_pencil(sub);
  const RowReducer reducer(h1);
  std::vector<size_t> coords = reducer.free_coordinates();
  if (!free_only) {
    coords.resize(2 * h1.cols());
    std::iota(coords.begin(), coords.end(), 0);
  }
  const size_t len = coords.size();
  ReachableSet out;
  std::unordered_set<Key, KeyHash> rows;
  std::set<std::string> seen;
  size_t hits = 0;
  std::vector<Int> digits(len, -entry_bound), full(2 * h1.cols(), 0);
  for (;;) {
    for (size_t t = 0; t < len; ++t) full[coords[t]] = digits[t];
    Key k = reducer.canonical(full);
    ++out.enumerated;
    if (rows.insert(k).second) {
      Pencil g = stack(k, h1);
      try {
        WeyrCharacteristic w = weyr_characteristic(g);
        std::string key = key_of(w);
        if (seen.insert(key).second) {
          if (wanted && wanted->count(key)) ++hits;
          out.reached.emplace_back(std::move(w), std::move(g));
        }
      } catch (const IrrationalSpectrum&) {
        ++out.irrational;
      }
      if (wanted && hits == wanted->size()) break;
    }
    size_t j = 0;
    while (j < len && digits[j] == entry_bound) digits[j++] = -entry_bound;
    if (j == len) break;
    ++digits[j];
  }
  out.distinct = static_cast<Int>(rows.size());
  return out;
}

}  // namespace

ReachableSet reachable_completions(const WeyrCharacteristic& sub, Int entry_bound,
                                  const std::set<std::string>* wanted) {
  return reach(sub, entry_bound, wanted, false);
}

namespace {

// Change of variable (s, t) -> (a s + b t, c s + d t) on the homogeneous
// pencil tA + sB. It is invertible, so it preserves partial multiplicities
// and minimal indices and moves the eigenvalue lambda to inverse(lambda).
struct Mobius {
  long a, b, c, d;

  Eigenvalue operator()(const Eigenvalue& l) const {
    if (l.is_infinite()) return c == 0 ? Eigenvalue::infinity() : Eigenvalue(Rational(a) / c);
    const Rational den = c * l.value() + d;
    if (sgn(den) == 0) return Eigenvalue::infinity();
    return Eigenvalue(Rational((a * l.value() + b) / den));
  }
  Mobius inverse() const { return {d, -b, -c, a}; }

  Pencil apply(const Pencil& h) const {
    return {Rational(d) * h.a + Rational(b) * h.b, Rational(c) * h.a + Rational(a) * h.b};
  }
};

// Characteristic of m.apply(H) given that of H.
WeyrCharacteristic relabel(const WeyrCharacteristic& w, const Mobius& m) {
  WeyrCharacteristic out = w;
  out.regular.clear();
  const Mobius inv = m.inverse();
  for (const auto& [l, p] : w.regular) out.regular[inv(l)] = p;
  return out;
}

// Maps other than the identity permuting the pool.
std::vector<Mobius> pool_symmetries(const std::vector<Eigenvalue>& pool) {
  std::vector<Mobius> out;
  std::set<std::vector<std::string>> actions;
  std::vector<std::string> identity;
  for (const auto& l : pool) identity.push_back(l.to_string());
  actions.insert(identity);
  for (long a = -1; a <= 1; ++a)
    for (long b = -1; b <= 1; ++b)
      for (long c = -1; c <= 1; ++c)
        for (long d = -1; d <= 1; ++d) {
          if (a * d - b * c == 0) continue;
          const Mobius m{a, b, c, d};
          std::vector<std::string> act;
          bool closed = true;
          for (const auto& l : pool) {
            const Eigenvalue x = m(l);
            closed = closed && std::find(pool.begin(), pool.end(), x) != pool.end();
            act.push_back(x.to_string());
          }
          if (closed && actions.insert(act).second) out.push_back(m);
        }
  return out;
}

Pencil bottom_rows(const Pencil& g) {
  Pencil h = Pencil::zero(g.rows() - 1, g.cols());
  for (size_t i = 1; i < g.rows(); ++i)
    for (size_t j = 0; j < g.cols(); ++j) {
      h.a(i - 1, j) = g.a(i, j);
      h.b(i - 1, j) = g.b(i, j);
    }
  return h;
}

}  // namespace

ConcordanceSummary run_concordance(const ConcordanceConfig& cfg, const std::function<void(Int, Int)>& progress) {
  std::vector<WeyrCharacteristic> all;
  for_each_characteristic(cfg.max_weight, cfg.pool, [&](const WeyrCharacteristic& w) { all.push_back(w); });
  std::map<std::pair<Int, Int>, std::vector<const WeyrCharacteristic*>> by_size;
  for (const auto& w : all) by_size[{w.rows(), w.cols()}].push_back(&w);

  ConcordanceSummary sum;
  constexpr size_t kKeep = 20;
  auto report = [&](const WeyrCharacteristic& sub, const WeyrCharacteristic& full, bool pred, const Pencil* g) {
    ++sum.mismatch_count;
    if (sum.mismatches.size() < kKeep)
      sum.mismatches.push_back({sub, full, pred, g ? std::optional<Pencil>(*g) : std::nullopt});
  };
  auto predicate = [](const WeyrCharacteristic& sub, const WeyrCharacteristic& full) {
    const Int delta = full.rank() - sub.rank();
    return (delta == 0 || delta == 1) && check_completion_full(sub, full, rank_change_from(delta)).feasible;
  };

  // key(sub) -> key(full) -> completing pencil
  std::map<std::string, std::map<std::string, Pencil>> reached;
  std::vector<std::pair<const WeyrCharacteristic*, const WeyrCharacteristic*>> missing;
  const Int total = static_cast<Int>(all.size());
  Int done = 0;
  for (const auto& sub : all) {
    if (progress) progress(done, total);
    ++done;
    if (sub.cols() < 1 || sub.cols() > cfg.max_cols) continue;
    ++sum.subpencils;
    ReachableSet rs = reachable_completions(sub, cfg.entry_bound);
    sum.rows_enumerated += rs.enumerated;
    sum.rows_distinct += rs.distinct;
    sum.rows_irrational += rs.irrational;
    auto& mine = reached[key_of(sub)];
    for (auto& [w, g] : rs.reached) {
      if (!predicate(sub, w)) report(sub, w, false, &g);
      mine.emplace(key_of(w), std::move(g));
    }
    auto it = by_size.find({sub.rows() + 1, sub.cols()});
    if (it == by_size.end()) continue;
    for (const WeyrCharacteristic* full : it->second) {
      ++sum.pairs_checked;
      if (!predicate(sub, *full)) continue;
      ++sum.pairs_feasible;
      if (!mine.count(key_of(*full))) missing.emplace_back(&sub, full);
    }
  }
  if (progress) progress(total, total);

  // A pair missed with small entries may be the image of a reached pair
  // under a change of variable permuting the pool. The transformed witness
  // is checked from scratch.
  const std::vector<Mobius> maps = pool_symmetries(cfg.pool);
  std::map<const WeyrCharacteristic*, std::set<std::string>> still;
  for (const auto& [sub, full] : missing) {
    bool found = false;
    for (const Mobius& m : maps) {
      const Mobius back = m.inverse();
      auto s = reached.find(key_of(relabel(*sub, back)));
      if (s == reached.end()) continue;
      auto g = s->second.find(key_of(relabel(*full, back)));
      if (g == s->second.end()) continue;
      const Pencil witness = m.apply(g->second);
      try {
        if (weyr_characteristic(witness) == *full && weyr_characteristic(bottom_rows(witness)) == *sub) {
          found = true;
          break;
        }
      } catch (const IrrationalSpectrum&) {
      }
    }
    if (found) ++sum.pairs_relabeled;
    else still[sub].insert(key_of(*full));
  }

  // Whatever is left: widen the entries of h for that subpencil only.
  for (auto& [sub, want] : still) {
    for (Int bound = cfg.entry_bound + 1; bound <= cfg.max_entry_bound && !want.empty(); ++bound) {
      ++sum.escalations;
      const ReachableSet wide = reach(*sub, bound, &want, true);
      for (const auto& [w, g] : wide.reached) {
        if (!predicate(*sub, w)) report(*sub, w, false, &g);
        if (want.erase(key_of(w))) ++sum.pairs_widened;
      }
    }
    for (const auto& k : want) report(*sub, weyr_from_json(Json::parse(k)), true, nullptr);
  }
  return sum;
}

}  // namespace pencil
