#include "pencil/invariants.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "pencil/errors.hpp"
#include "toeplitz.hpp"

namespace pencil {

const Partition& WeyrCharacteristic::weyr(const Eigenvalue& lambda) const {
  static const Partition kEmpty;
  auto it = regular.find(lambda);
  return it == regular.end() ? kEmpty : it->second;
}

void WeyrCharacteristic::set_weyr(const Eigenvalue& lambda, Partition w) {
  if (w.empty()) regular.erase(lambda);
  else regular[lambda] = std::move(w);
}

std::vector<Eigenvalue> WeyrCharacteristic::spectrum() const {
  std::vector<Eigenvalue> out;
  for (const auto& [l, w] : regular) out.push_back(l);
  return out;
}

Int WeyrCharacteristic::regular_weight() const {
  Int t = 0;
  for (const auto& [l, w] : regular) t += w.weight();
  return t;
}

WeyrCharacteristic transpose(const WeyrCharacteristic& w) {
  WeyrCharacteristic t = w;
  std::swap(t.r_star, t.s_star);
  return t;
}

WeyrCharacteristic weyr_from_kronecker(const KroneckerStructure& k) {
  WeyrCharacteristic w;
  for (const auto& [l, z] : k.multiplicities) w.set_weyr(l, conjugate(z));
  w.r_star = conjugate_star(k.column_indices);
  w.s_star = conjugate_star(k.row_indices);
  return w;
}

KroneckerStructure kronecker_from_weyr(const WeyrCharacteristic& w) {
  KroneckerStructure k;
  k.rank = w.rank();
  k.rows = w.rows();
  k.cols = w.cols();
  for (const auto& [l, p] : w.regular) k.multiplicities[l] = conjugate(p);
  k.column_indices = indices_from_star(w.r_star);
  k.row_indices = indices_from_star(w.s_star);
  return k;
}

std::vector<Polynomial> smith_invariant_factors(const Pencil& h) {
  PolyMatrix m(h.rows(), std::vector<Polynomial>(h.cols()));
  for (size_t i = 0; i < h.rows(); ++i)
    for (size_t j = 0; j < h.cols(); ++j) m[i][j] = Polynomial::linear(h.a(i, j), h.b(i, j));
  return smith_diagonal(std::move(m));
}

namespace {

size_t nrows(const IntMatrix& m) { return m.rows; }
size_t ncols(const IntMatrix& m) { return m.cols; }
size_t nrows(const Matrix& m) { return m.rows(); }
size_t ncols(const Matrix& m) { return m.cols(); }
size_t rank_of(const IntMatrix& m) { return integer_rank(m); }
size_t rank_of(const Matrix& m) { return matrix_rank(m); }

IntMatrix transposed(const IntMatrix& m) {
  IntMatrix t(m.cols, m.rows);
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
  return t;
}
Matrix transposed(const Matrix& m) { return m.transpose(); }

// Block (i, j) is d when i == j and s when i == j + 1.
template <class M>
size_t toeplitz_rank(const M& d, const M& s, size_t block_rows, size_t block_cols) {
  const size_t m = nrows(d), n = ncols(d);
  M t(m * block_rows, n * block_cols);
  for (size_t bj = 0; bj < block_cols; ++bj)
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < n; ++j) {
        if (bj < block_rows) t(bj * m + i, bj * n + j) = d(i, j);
        if (bj + 1 < block_rows) t((bj + 1) * m + i, bj * n + j) = s(i, j);
      }
  return rank_of(t);
}

// Weyr partition from ranks r[k] of the square Toeplitz matrices. Stops
// once the weight reaches cap, which must bound the true weight; done
// reports whether r was long enough to decide.
Partition weyr_from_ranks(const std::vector<size_t>& r, Int rho, Int cap, bool& done) {
  std::vector<Int> w;
  Int total = 0;
  done = total >= cap;
  for (size_t k = 1; k < r.size() && !done; ++k) {
    const Int wk = rho - static_cast<Int>(r[k] - r[k - 1]);
    if (wk <= 0) {
      done = true;
      break;
    }
    w.push_back(wk);
    total += wk;
    done = total >= cap;
  }
  return Partition(std::move(w));
}

// Kernel degrees from ranks r[k] of the Toeplitz matrices with k + 1 block
// rows and k block columns.
FiniteSequence degrees_from_ranks(const std::vector<size_t>& r, Int n, Int need, bool& done) {
  std::vector<Int> idx;
  Int prev_dim = 0, prev_count = 0;
  for (size_t c = 1; c < r.size() && prev_count < need; ++c) {
    const Int k = static_cast<Int>(c) - 1;
    const Int dim = static_cast<Int>(c) * n - static_cast<Int>(r[c]);
    const Int count = dim - prev_dim;  // #{c_i <= k}
    for (Int i = prev_count; i < count; ++i) idx.push_back(k);
    prev_dim = dim;
    prev_count = count;
  }
  done = prev_count >= need;
  std::reverse(idx.begin(), idx.end());
  return FiniteSequence(std::move(idx));
}

template <class M>
std::vector<size_t> direct_ranks(const M& d, const M& s, bool square, size_t max_steps, const detail::RankStop& stop) {
  std::vector<size_t> r{0};
  for (size_t k = 1; k <= max_steps; ++k) {
    r.push_back(toeplitz_rank(d, s, square ? k : k + 1, k));
    if (stop(r)) break;
  }
  return r;
}

std::vector<size_t> ranks(const Matrix& d, const Matrix& s, bool square, size_t max_steps, const detail::RankStop& stop) {
  return direct_ranks(d, s, square, max_steps, stop);
}

std::vector<size_t> ranks(const IntMatrix& d, const IntMatrix& s, bool square, size_t max_steps,
                          const detail::RankStop& stop) {
  if (auto r = detail::bidiagonal_ranks(d, s, square, max_steps, stop)) return *std::move(r);
  return direct_ranks(d, s, square, max_steps, stop);
}

template <class M>
Partition local_weyr(const M& d, const M& s, Int rho, Int cap) {
  if (cap <= 0) return {};
  bool done = false;
  auto stop = [&](const std::vector<size_t>& r) {
    weyr_from_ranks(r, rho, cap, done);
    return done;
  };
  const auto r = ranks(d, s, true, static_cast<size_t>(std::max<Int>(cap, 0)) + 1, stop);
  const Partition w = weyr_from_ranks(r, rho, cap, done);
  if (!done) throw std::logic_error("Weyr search did not terminate");
  return w;
}

// Degrees of a minimal polynomial basis of the right kernel of a + s b.
template <class M>
FiniteSequence kernel_degrees(const M& a, const M& b, Int rho) {
  const Int n = static_cast<Int>(ncols(a));
  const Int need = n - rho;
  bool done = false;
  auto stop = [&](const std::vector<size_t>& r) {
    degrees_from_ranks(r, n, need, done);
    return done;
  };
  const auto r = ranks(a, b, false, static_cast<size_t>(rho) + 1, stop);
  FiniteSequence out = degrees_from_ranks(r, n, need, done);
  if (!done) throw std::logic_error("minimal index search did not terminate");
  return out;
}

std::uint64_t splitmix(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr long kSmall = 1L << 30;

Matrix to_matrix(const IntMatrix& m) {
  Matrix out(m.rows, m.cols);
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j) out(i, j) = static_cast<long>(m(i, j));
  return out;
}

// The pencil, plus an integer copy with denominators cleared when the
// entries are small enough for the scaled combinations used below. When
// the copy exists, h is only used for its shape.
struct Work {
  Pencil h;
  bool small = false;
  IntMatrix a, b;

  explicit Work(const Pencil& p) : h(p) {
    if (scale_rows(p)) return;
    h = clear_denominators(p);
    IntMatrix ia, ib;
    if (!to_integer_rows(h.a, ia) || !to_integer_rows(h.b, ib)) return;
    for (size_t k = 0; k < ia.data.size(); ++k)
      if (std::llabs(ia.data[k]) >= kSmall || std::llabs(ib.data[k]) >= kSmall) return;
    a = std::move(ia);
    b = std::move(ib);
    small = true;
  }

  // Integer copy with each row of [A B] scaled by its denominator lcm, when
  // everything stays below kSmall.
  bool scale_rows(const Pencil& p) {
    const size_t m = p.rows(), n = p.cols();
    IntMatrix ia(m, n), ib(m, n);
    for (size_t i = 0; i < m; ++i) {
      long long l = 1;
      for (const Matrix* x : {&p.a, &p.b})
        for (size_t j = 0; j < n; ++j) {
          const Rational& v = (*x)(i, j);
          if (mpz_cmp_ui(v.get_den_mpz_t(), 1) == 0) continue;
          if (mpz_cmp_ui(v.get_den_mpz_t(), kSmall) >= 0) return false;
          l = std::lcm(l, static_cast<long long>(v.get_den().get_si()));
          if (l >= kSmall) return false;
        }
      for (auto [x, out] : {std::pair{&p.a, &ia}, std::pair{&p.b, &ib}})
        for (size_t j = 0; j < n; ++j) {
          const Rational& v = (*x)(i, j);
          if (mpz_cmpabs_ui(v.get_num_mpz_t(), kSmall) >= 0) return false;
          const long long e = mpz_get_si(v.get_num_mpz_t()) * (l / mpz_get_si(v.get_den_mpz_t()));
          if (std::llabs(e) >= kSmall) return false;
          (*out)(i, j) = e;
        }
    }
    a = std::move(ia);
    b = std::move(ib);
    small = true;
    return true;
  }

  size_t rows() const { return h.rows(); }
  size_t cols() const { return h.cols(); }

  Int rank() const {
    const size_t full = std::min(rows(), cols());
    size_t best = 0;
    for (size_t t = 0; t <= full && best < full; ++t) {
      if (small) {
        IntMatrix m(rows(), cols());
        for (size_t k = 0; k < m.data.size(); ++k) m.data[k] = a.data[k] + static_cast<long long>(t) * b.data[k];
        best = std::max(best, integer_rank(m));
      } else {
        best = std::max(best, matrix_rank(evaluate(h, Eigenvalue(static_cast<long>(t)))));
      }
    }
    return static_cast<Int>(best);
  }

  Partition weyr_at(const Eigenvalue& l, Int rho, Int cap) const {
    if (l.is_infinite()) return small ? local_weyr(b, a, rho, cap) : local_weyr(h.b, h.a, rho, cap);
    const Rational& v = l.value();
    if (small && abs(v.get_num()) < kSmall && v.get_den() < kSmall) {
      const long long p = v.get_num().get_si(), q = v.get_den().get_si();
      IntMatrix d(rows(), cols()), s(rows(), cols());
      for (size_t k = 0; k < d.data.size(); ++k) {
        d.data[k] = q * a.data[k] + p * b.data[k];
        s.data[k] = q * b.data[k];
      }
      return local_weyr(d, s, rho, cap);
    }
    return local_weyr(evaluate(h, l), h.b, rho, cap);
  }

  bool drops_rank(const Rational& v, Int rho) const {
    if (small) {
      const long long p = v.get_num().get_si(), q = v.get_den().get_si();
      thread_local IntMatrix d;
      d.rows = rows();
      d.cols = cols();
      d.data.resize(a.data.size());
      for (size_t k = 0; k < d.data.size(); ++k) d.data[k] = q * a.data[k] + p * b.data[k];
      return static_cast<Int>(integer_rank(d)) < rho;
    }
    return static_cast<Int>(matrix_rank(evaluate(h, Eigenvalue(v)))) < rho;
  }

  FiniteSequence column_indices(Int rho) const {
    if (static_cast<Int>(cols()) == rho) return {};
    return small ? kernel_degrees(a, b, rho) : kernel_degrees(h.a, h.b, rho);
  }

  FiniteSequence row_indices(Int rho) const {
    if (static_cast<Int>(rows()) == rho) return {};
    return small ? kernel_degrees(transposed(a), transposed(b), rho)
                 : kernel_degrees(transposed(h.a), transposed(h.b), rho);
  }

  // X a Y and X b Y over the integers; false on overflow.
  bool compress(const Matrix& x, const Matrix& y, IntMatrix& xa, IntMatrix& xb) const {
    const size_t r = x.rows(), m = rows(), n = cols();
    std::vector<long long> xi(r * m), yi(n * r);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < m; ++j) xi[i * m + j] = x(i, j).get_num().get_si();
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < r; ++j) yi[i * r + j] = y(i, j).get_num().get_si();
    constexpr __int128 kLimit = __int128(1) << 52;
    auto side = [&](const IntMatrix& src, IntMatrix& out) {
      std::vector<__int128> tmp(r * n, 0);
      for (size_t i = 0; i < r; ++i)
        for (size_t k = 0; k < m; ++k) {
          const long long c = xi[i * m + k];
          if (c == 0) continue;
          for (size_t j = 0; j < n; ++j) tmp[i * n + j] += static_cast<__int128>(c) * src(k, j);
        }
      out = IntMatrix(r, r);
      for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) {
          __int128 acc = 0;
          for (size_t k = 0; k < n; ++k) acc += tmp[i * n + k] * yi[k * r + j];
          if (acc >= kLimit || acc <= -kLimit) return false;
          out(i, j) = static_cast<long long>(acc);
        }
      return true;
    };
    return side(a, xa) && side(b, xb);
  }

  // det(X (A + sB) Y) for a pseudo-random compression to rho x rho; every
  // finite eigenvalue is a root. Identity compressions are used when a
  // side is already of full rank.
  Polynomial spectral_polynomial(Int rho, std::uint64_t attempt) const {
    const size_t r = static_cast<size_t>(rho), m = rows(), n = cols();
    std::uint64_t state = 0x5eed0000ULL + attempt;
    auto draw = [&] { return static_cast<long>(splitmix(state) % 5) - 2; };
    Matrix x(r, m), y(n, r);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < m; ++j) x(i, j) = m == r ? long(i == j) : draw();
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < r; ++j) y(i, j) = n == r ? long(i == j) : draw();
    std::vector<Rational> pts, vals;
    if (small) {
      IntMatrix xa, xb;
      if (compress(x, y, xa, xb)) {
        for (size_t t = 0; t <= r; ++t) {
          IntMatrix mt(r, r);
          for (size_t k = 0; k < mt.data.size(); ++k)
            mt.data[k] = xa.data[k] + static_cast<long long>(t) * xb.data[k];
          pts.emplace_back(static_cast<long>(t));
          vals.emplace_back(integer_determinant(mt));
        }
        return interpolate(pts, vals);
      }
    }
    const Matrix xa = x * (small ? to_matrix(a) : h.a) * y, xb = x * (small ? to_matrix(b) : h.b) * y;
    for (size_t t = 0; t <= r; ++t) {
      const Matrix mt = xa + Rational(static_cast<long>(t)) * xb;
      IntMatrix im;
      pts.emplace_back(static_cast<long>(t));
      if (to_integer_rows(mt, im)) {
        // rows were not rescaled: xa, xb are integral
        vals.emplace_back(integer_determinant(im));
      } else {
        vals.push_back(determinant(mt));
      }
    }
    return interpolate(pts, vals);
  }
};

// Small rationals, most likely first.
const std::vector<Rational>& small_candidates() {
  static const std::vector<Rational> kList = [] {
    std::vector<Rational> v{Rational(0)};
    for (long p = 1; p <= 4; ++p)
      for (long q = 1; q <= 3; ++q) {
        Rational x(p, q);
        x.canonicalize();
        if (x.get_den() != q || x.get_num() != p) continue;
        v.push_back(x);
        v.push_back(-x);
      }
    return v;
  }();
  return kList;
}

}  // namespace

Partition partial_multiplicities(const Pencil& h, const Eigenvalue& lambda) {
  return conjugate(weyr_partition(h, lambda));
}

Partition weyr_partition(const Pencil& h, const Eigenvalue& lambda) {
  const Work w(h);
  const Int rho = w.rank();
  return w.weyr_at(lambda, rho, rho);
}

std::pair<FiniteSequence, FiniteSequence> minimal_indices(const Pencil& h) {
  const Work w(h);
  const Int rho = w.rank();
  return {w.column_indices(rho), w.row_indices(rho)};
}

KroneckerStructure kronecker_structure(const Pencil& h) {
  const Work w(h);
  KroneckerStructure k;
  k.rows = static_cast<Int>(h.rows());
  k.cols = static_cast<Int>(h.cols());
  k.rank = w.rank();
  k.column_indices = w.column_indices(k.rank);
  k.row_indices = w.row_indices(k.rank);
  Int finite = k.rank - k.column_indices.sum() - k.row_indices.sum();
  if (finite < 0) throw std::logic_error("inconsistent Kronecker degrees");
  const Partition inf = w.weyr_at(Eigenvalue::infinity(), k.rank, finite);
  if (!inf.empty()) k.multiplicities[Eigenvalue::infinity()] = conjugate(inf);
  finite -= inf.weight();
  if (finite == 0) return k;
  auto take = [&](const Rational& root) {
    if (k.multiplicities.count(Eigenvalue(root))) return;
    const Partition wl = w.weyr_at(Eigenvalue(root), k.rank, finite);
    if (wl.empty()) return;
    k.multiplicities[Eigenvalue(root)] = conjugate(wl);
    finite -= wl.weight();
  };
  // Cheap pass over small candidates before the full root isolation.
  for (const Rational& c : small_candidates()) {
    if (w.drops_rank(c, k.rank)) take(c);
    if (finite == 0) return k;
  }
  Polynomial p;
  for (std::uint64_t attempt = 0; p.is_zero(); ++attempt) {
    if (attempt == 64) throw std::logic_error("spectral polynomial vanished identically");
    p = w.spectral_polynomial(k.rank, attempt);
  }
  for (const Rational& root : rational_roots(p)) {
    take(root);
    if (finite == 0) break;
  }
  if (finite != 0) throw IrrationalSpectrum("pencil has eigenvalues outside Q");
  return k;
}

WeyrCharacteristic weyr_characteristic(const Pencil& h) { return weyr_from_kronecker(kronecker_structure(h)); }

bool strictly_equivalent(const Pencil& g, const Pencil& h) {
  if (g.rows() != h.rows() || g.cols() != h.cols()) return false;
  try {
    return weyr_characteristic(g) == weyr_characteristic(h);
  } catch (const IrrationalSpectrum&) {
  }
  const Work wg(g), wh(h);
  const Int rho = wg.rank();
  if (rho != wh.rank()) return false;
  if (wg.column_indices(rho) != wh.column_indices(rho) || wg.row_indices(rho) != wh.row_indices(rho))
    return false;
  const Int cap = rho - wg.column_indices(rho).sum() - wg.row_indices(rho).sum();
  if (wg.weyr_at(Eigenvalue::infinity(), rho, cap) != wh.weyr_at(Eigenvalue::infinity(), rho, cap)) return false;
  return smith_invariant_factors(g) == smith_invariant_factors(h);
}

}  // namespace pencil
