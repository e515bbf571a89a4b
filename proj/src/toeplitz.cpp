#include "toeplitz.hpp"

#include <algorithm>
#include <cstdint>

namespace pencil::detail {

namespace {

constexpr std::uint64_t kPrimes[] = {2147483629, 2147483587, 2147483579, 2147483563,
                                     2147483549, 2147483543, 2147483497, 2147483489};
constexpr double kPrimeBits = 30.9;

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1, e = p - 2;
  while (e) {
    if (e & 1) result = result * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return result;
}

// Row echelon form mod P of T_k, grown one block row at a time. A block row
// only meets the last two block columns, so each step reduces against the
// pivots of those columns alone. Pivot rows are normalized and stored flat.
template <std::uint64_t P>
class Echelon {
 public:
  Echelon(const IntMatrix& x, const IntMatrix& y) : m_(x.rows), n_(x.cols), x_(residues(x)), y_(residues(y)) {}

  size_t step() {
    const size_t k = ++k_;
    pivot_.resize(k * n_, -1);
    const size_t lo = k >= 2 ? (k - 2) * n_ : 0, hi = k * n_;
    const size_t off = (k - 1) * n_ - lo;
    v_.resize(hi - lo);
    for (size_t i = 0; i < m_; ++i) {
      std::fill(v_.begin(), v_.end(), 0);
      for (size_t j = 0; j < n_; ++j) {
        if (k >= 2) v_[j] = y_[i * n_ + j];
        v_[off + j] = x_[i * n_ + j];
      }
      reduce_insert(lo, hi);
    }
    return rows_;
  }

  // Rank of T_k with a further block row holding y in block column k. The
  // echelon form is restored afterwards.
  size_t probe() {
    const size_t lo = (k_ - 1) * n_, hi = k_ * n_;
    const size_t rows = rows_, used = start_.size(), pool = pool_.size();
    v_.resize(hi - lo);
    for (size_t i = 0; i < m_; ++i) {
      std::copy(y_.begin() + i * n_, y_.begin() + (i + 1) * n_, v_.begin());
      reduce_insert(lo, hi);
    }
    const size_t r = rows_;
    for (size_t t = used; t < start_.size(); ++t) pivot_[start_[t]] = -1;
    rows_ = rows;
    start_.resize(used);
    offset_.resize(used);
    pool_.resize(pool);
    return r;
  }

 private:
  static std::vector<std::uint64_t> residues(const IntMatrix& a) {
    std::vector<std::uint64_t> r(a.data.size());
    for (size_t k = 0; k < r.size(); ++k) {
      const long long v = a.data[k] % static_cast<long long>(P);
      r[k] = static_cast<std::uint64_t>(v < 0 ? v + static_cast<long long>(P) : v);
    }
    return r;
  }

  // Reduces v_ (columns lo .. hi) and stores it as a pivot row if nonzero.
  void reduce_insert(size_t lo, size_t hi) {
    for (size_t c = lo; c < hi; ++c) {
      const std::uint64_t f = v_[c - lo];
      if (f == 0) continue;
      const long p = pivot_[c];
      if (p < 0) {
        const std::uint64_t inv = inverse_mod(f, P);
        pivot_[c] = static_cast<long>(start_.size());
        start_.push_back(c);
        offset_.push_back(pool_.size());
        ends_.resize(start_.size());
        ends_.back() = hi;
        for (size_t j = c; j < hi; ++j) pool_.push_back(v_[j - lo] * inv % P);
        ++rows_;
        return;
      }
      const std::uint64_t* r = &pool_[offset_[p]];
      const std::uint64_t g = P - f;
      const size_t end = ends_[p];
      for (size_t j = c; j < end; ++j)
        if (r[j - c]) v_[j - lo] = (v_[j - lo] + g * r[j - c]) % P;
    }
  }

  size_t m_, n_, k_ = 0, rows_ = 0;
  std::vector<std::uint64_t> x_, y_, v_, pool_;
  std::vector<size_t> start_, offset_, ends_;
  std::vector<long> pivot_;
};

double half_bits(unsigned __int128 x) {
  if (x <= 1) return 0;
  const std::uint64_t hi = static_cast<std::uint64_t>(x >> 64), lo = static_cast<std::uint64_t>(x);
  return 0.5 * (hi ? 128 - __builtin_clzll(hi) : 64 - __builtin_clzll(lo));
}

unsigned __int128 sat_add(unsigned __int128 a, unsigned __int128 b) {
  unsigned __int128 r;
  return __builtin_add_overflow(a, b, &r) ? ~static_cast<unsigned __int128>(0) : r;
}

// Half bit lengths of squared row and column norms of x, y and x + y
// stacked, used to bound minors of the block matrices.
struct Norms {
  std::vector<double> row_x, row_y, row_xy, col_x, col_y, col_xy;

  Norms(const IntMatrix& x, const IntMatrix& y) {
    std::vector<unsigned __int128> rx(x.rows), ry(x.rows), cx(x.cols), cy(x.cols);
    for (size_t i = 0; i < x.rows; ++i)
      for (size_t j = 0; j < x.cols; ++j) {
        const __int128 a = x(i, j), b = y(i, j);
        const auto a2 = static_cast<unsigned __int128>(a * a), b2 = static_cast<unsigned __int128>(b * b);
        rx[i] = sat_add(rx[i], a2);
        cx[j] = sat_add(cx[j], a2);
        ry[i] = sat_add(ry[i], b2);
        cy[j] = sat_add(cy[j], b2);
      }
    for (size_t i = 0; i < x.rows; ++i) {
      row_x.push_back(half_bits(rx[i]));
      row_y.push_back(half_bits(ry[i]));
      row_xy.push_back(half_bits(sat_add(rx[i], ry[i])));
    }
    for (size_t j = 0; j < x.cols; ++j) {
      col_x.push_back(half_bits(cx[j]));
      col_y.push_back(half_bits(cy[j]));
      col_xy.push_back(half_bits(sat_add(cx[j], cy[j])));
    }
    for (auto* v : {&row_x, &row_y, &row_xy, &col_x, &col_y, &col_xy}) std::sort(v->begin(), v->end(), std::greater<>());
  }

  // Sum of the s largest entries of the union of the lists, each entry
  // taken with the multiplicity of its list. Lists are sorted descending.
  static double top(size_t s, std::initializer_list<std::pair<const std::vector<double>*, size_t>> parts) {
    size_t pos[3] = {0, 0, 0};
    double total = 0;
    while (s > 0) {
      size_t pick = 3, idx = 0;
      double bestv = -1;
      for (const auto& [v, mult] : parts) {
        if (mult && pos[idx] < v->size() && (*v)[pos[idx]] > bestv) {
          bestv = (*v)[pos[idx]];
          pick = idx;
        }
        ++idx;
      }
      if (pick == 3) break;
      const size_t mult = (parts.begin() + pick)->second, take = std::min(s, mult);
      total += bestv * static_cast<double>(take);
      s -= take;
      ++pos[pick];
    }
    return total;
  }

  // log2 bound on minors of size s of T_k (square) or M_k.
  double minor_log2(size_t k, size_t s, bool square) const {
    double rows, cols;
    if (square) {
      rows = top(s, {{&row_x, 1}, {&row_xy, k - 1}});
      cols = top(s, {{&col_x, 1}, {&col_xy, k - 1}});
    } else {
      rows = top(s, {{&row_x, 1}, {&row_xy, k - 1}, {&row_y, 1}});
      cols = top(s, {{&col_xy, k}});
    }
    return std::min(rows, cols);
  }
};

template <std::uint64_t P>
void run_pass(const IntMatrix& x, const IntMatrix& y, bool square, size_t max_steps, const RankStop& stop,
              std::vector<size_t>& best, std::vector<size_t>& passes) {
  Echelon<P> e(x, y);
  std::vector<size_t> merged{0};
  for (size_t k = 1; k <= max_steps; ++k) {
    size_t r = e.step();
    if (!square) r = e.probe();
    if (k < best.size()) {
      r = std::max(r, best[k]);
      ++passes[k];
    } else {
      best.push_back(r);
      passes.push_back(1);
    }
    best[k] = r;
    merged.push_back(r);
    if (stop(merged)) break;
  }
  best.resize(merged.size());
  passes.resize(merged.size());
}

void pass(size_t index, const IntMatrix& x, const IntMatrix& y, bool square, size_t max_steps, const RankStop& stop,
          std::vector<size_t>& best, std::vector<size_t>& passes) {
  switch (index) {
    case 0: return run_pass<kPrimes[0]>(x, y, square, max_steps, stop, best, passes);
    case 1: return run_pass<kPrimes[1]>(x, y, square, max_steps, stop, best, passes);
    case 2: return run_pass<kPrimes[2]>(x, y, square, max_steps, stop, best, passes);
    case 3: return run_pass<kPrimes[3]>(x, y, square, max_steps, stop, best, passes);
    case 4: return run_pass<kPrimes[4]>(x, y, square, max_steps, stop, best, passes);
    case 5: return run_pass<kPrimes[5]>(x, y, square, max_steps, stop, best, passes);
    case 6: return run_pass<kPrimes[6]>(x, y, square, max_steps, stop, best, passes);
    default: return run_pass<kPrimes[7]>(x, y, square, max_steps, stop, best, passes);
  }
}

}  // namespace

std::optional<std::vector<size_t>> bidiagonal_ranks(const IntMatrix& x, const IntMatrix& y, bool square,
                                                    size_t max_steps, const RankStop& stop) {
  std::optional<Norms> norms;
  std::vector<size_t> best{0}, passes{0};
  for (size_t p = 0; p < std::size(kPrimes); ++p) {
    pass(p, x, y, square, max_steps, stop, best, passes);
    bool certified = true;
    for (size_t k = 1; k < best.size() && certified; ++k) {
      const size_t full = std::min((square ? k : k + 1) * x.rows, k * x.cols);
      if (best[k] == full) continue;
      if (!norms) norms.emplace(x, y);
      certified = norms->minor_log2(k, best[k] + 1, square) < kPrimeBits * static_cast<double>(passes[k]);
    }
    if (certified) return best;
  }
  return std::nullopt;
}

}  // namespace pencil::detail
