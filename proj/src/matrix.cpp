#include "pencil/matrix.hpp"

#include <algorithm>
#include <functional>
#include <cmath>
#include <cstdint>

#include "pencil/errors.hpp"

namespace pencil {

Matrix Matrix::identity(size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_ints(const std::vector<std::vector<long>>& rows, size_t cols_if_empty) {
  const size_t cols = rows.empty() ? cols_if_empty : rows[0].size();
  Matrix m(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("ragged matrix");
    for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix sum: shape mismatch");
  Matrix c(a.rows_, a.cols_);
  for (size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = a.data_[k] + b.data_[k];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix difference: shape mismatch");
  Matrix c(a.rows_, a.cols_);
  for (size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = a.data_[k] - b.data_[k];
  return c;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix product: shape mismatch");
  Matrix c(a.rows_, b.cols_);
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix c = a;
  for (auto& x : c.data_) x *= s;
  return c;
}

namespace {

constexpr std::uint64_t kPrimes[] = {2147483647, 2147483629, 2147483587, 2147483579,
                                     2147483563, 2147483549, 2147483543, 2147483497};

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1, e = p - 2;
  while (e) {
    if (e & 1) result = result * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return result;
}

template <std::uint64_t P>
size_t rank_mod(const IntMatrix& m) {
  const size_t rows = m.rows, cols = m.cols;
  thread_local std::vector<std::uint64_t> a;
  thread_local std::vector<size_t> nz;
  a.resize(m.data.size());
  for (size_t k = 0; k < a.size(); ++k) {
    long long v = m.data[k] % static_cast<long long>(P);
    a[k] = static_cast<std::uint64_t>(v < 0 ? v + static_cast<long long>(P) : v);
  }
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t piv = rank;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      std::swap_ranges(a.begin() + piv * cols, a.begin() + (piv + 1) * cols, a.begin() + rank * cols);
    std::uint64_t* prow = &a[rank * cols];
    const std::uint64_t inv = inverse_mod(prow[c], P);
    // pivot rows are usually sparse
    nz.clear();
    for (size_t j = c; j < cols; ++j)
      if (prow[j]) {
        prow[j] = prow[j] * inv % P;
        nz.push_back(j);
      }
    for (size_t i = rank + 1; i < rows; ++i) {
      std::uint64_t* row = &a[i * cols];
      const std::uint64_t f = row[c];
      if (f == 0) continue;
      const std::uint64_t g = P - f;
      for (size_t j : nz) row[j] = (row[j] + g * prow[j]) % P;
    }
    ++rank;
  }
  return rank;
}

size_t rank_mod_index(const IntMatrix& m, size_t k) {
  switch (k) {
    case 0: return rank_mod<kPrimes[0]>(m);
    case 1: return rank_mod<kPrimes[1]>(m);
    case 2: return rank_mod<kPrimes[2]>(m);
    case 3: return rank_mod<kPrimes[3]>(m);
    case 4: return rank_mod<kPrimes[4]>(m);
    case 5: return rank_mod<kPrimes[5]>(m);
    case 6: return rank_mod<kPrimes[6]>(m);
    default: return rank_mod<kPrimes[7]>(m);
  }
}

// Half bit lengths of the squared row and column norms, largest first.
// The sum of the first k entries of either list bounds log2 of every
// k x k minor.
struct NormBits {
  std::vector<double> row, col;
  double minor_log2(size_t k) const {
    double r = 0, c = 0;
    for (size_t i = 0; i < k && i < row.size(); ++i) r += row[i];
    for (size_t i = 0; i < k && i < col.size(); ++i) c += col[i];
    return std::min(r, c);
  }
};

NormBits norm_bits(const IntMatrix& m) {
  std::vector<unsigned __int128> row(m.rows, 0), col(m.cols, 0);
  NormBits out;
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j) {
      const long long v = m(i, j);
      if (v == 0) continue;
      const unsigned __int128 sq = static_cast<unsigned __int128>(static_cast<__int128>(v) * v);
      if (__builtin_add_overflow(row[i], sq, &row[i])) row[i] = ~static_cast<unsigned __int128>(0);
      if (__builtin_add_overflow(col[j], sq, &col[j])) col[j] = ~static_cast<unsigned __int128>(0);
    }
  auto bits = [](unsigned __int128 x) {
    const std::uint64_t hi = static_cast<std::uint64_t>(x >> 64), lo = static_cast<std::uint64_t>(x);
    return 0.5 * (hi ? 128 - __builtin_clzll(hi) : 64 - __builtin_clzll(lo));
  };
  auto fill = [&](const std::vector<unsigned __int128>& v, std::vector<double>& o) {
    for (unsigned __int128 x : v)
      if (x > 1) o.push_back(bits(x));
    std::sort(o.begin(), o.end(), std::greater<>());
  };
  fill(row, out.row);
  fill(col, out.col);
  return out;
}

template <class Cell>
size_t bareiss_rank(std::vector<Cell> a, size_t rows, size_t cols) {
  Cell prev = 1;
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t piv = rank;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[rank * cols + j]);
    const Cell p = a[rank * cols + c];
    for (size_t i = rank + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j) {
        Cell t = p * a[i * cols + j] - a[i * cols + c] * a[rank * cols + j];
        a[i * cols + j] = t / prev;
      }
      a[i * cols + c] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

size_t bareiss_rank_mpz(const IntMatrix& m) {
  std::vector<Integer> a(m.data.size());
  for (size_t k = 0; k < a.size(); ++k) a[k] = static_cast<long>(m.data[k]);
  return bareiss_rank(std::move(a), m.rows, m.cols);
}

// Bareiss determinant in __int128; returns false on overflow.
bool det_int128(const IntMatrix& m, __int128& out) {
  const size_t n = m.rows;
  std::vector<__int128> a(m.data.begin(), m.data.end());
  __int128 prev = 1;
  int sign = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && a[piv * n + k] == 0) ++piv;
    if (piv == n) {
      out = 0;
      return true;
    }
    if (piv != k) {
      for (size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[k * n + j]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        __int128 x, y, t;
        if (__builtin_mul_overflow(a[k * n + k], a[i * n + j], &x)) return false;
        if (__builtin_mul_overflow(a[i * n + k], a[k * n + j], &y)) return false;
        if (__builtin_sub_overflow(x, y, &t)) return false;
        a[i * n + j] = t / prev;
      }
    prev = a[k * n + k];
  }
  out = n == 0 ? 1 : sign * a[n * n - 1];
  return true;
}

Integer from_int128(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  Integer hi(static_cast<unsigned long>(u >> 64)), lo(static_cast<unsigned long>(u));
  Integer r = (hi << 64) + lo;
  return neg ? Integer(-r) : r;
}

}  // namespace

size_t integer_rank(const IntMatrix& m) {
  const size_t full = std::min(m.rows, m.cols);
  if (full == 0) return 0;
  // A rank above the best modular rank needs a nonzero minor one size
  // larger, which the product of the primes used must exceed.
  NormBits nb;
  bool have_bits = false;
  size_t best = 0;
  double covered = 0;
  for (size_t k = 0; k < std::size(kPrimes); ++k) {
    best = std::max(best, rank_mod_index(m, k));
    covered += 30.9;
    if (best == full) return best;
    if (!have_bits) {
      nb = norm_bits(m);
      have_bits = true;
    }
    if (nb.minor_log2(best + 1) < covered) return best;
  }
  return bareiss_rank_mpz(m);
}

Integer integer_determinant(const IntMatrix& m) {
  if (m.rows != m.cols) throw InputError("determinant of a non-square matrix");
  __int128 d;
  if (det_int128(m, d)) return from_int128(d);
  const size_t n = m.rows;
  std::vector<Integer> a(m.data.size());
  for (size_t k = 0; k < a.size(); ++k) a[k] = static_cast<long>(m.data[k]);
  Integer prev = 1;
  int sign = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && a[piv * n + k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[k * n + j]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        Integer t = a[k * n + k] * a[i * n + j] - a[i * n + k] * a[k * n + j];
        mpz_divexact(a[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k * n + k];
  }
  return sign * a[n * n - 1];
}

bool to_integer_rows(const Matrix& m, IntMatrix& out) {
  out = IntMatrix(m.rows(), m.cols());
  static const Integer limit = Integer(1) << 62;
  for (size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (size_t j = 0; j < m.cols(); ++j) {
      Integer v = m(i, j).get_num() * (l / m(i, j).get_den());
      if (abs(v) >= limit) return false;
      out(i, j) = v.get_si();
    }
  }
  return true;
}

namespace {

std::vector<Integer> scaled_rows_mpz(const Matrix& m) {
  std::vector<Integer> a(m.rows() * m.cols());
  for (size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (size_t j = 0; j < m.cols(); ++j) a[i * m.cols() + j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  return a;
}

}  // namespace

size_t matrix_rank(const Matrix& m) {
  IntMatrix im;
  if (to_integer_rows(m, im)) return integer_rank(im);
  return bareiss_rank(scaled_rows_mpz(m), m.rows(), m.cols());
}

Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  const size_t n = m.rows();
  std::vector<Rational> a(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  Rational det = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && a[piv * n + k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[k * n + j]);
      det = -det;
    }
    det *= a[k * n + k];
    for (size_t i = k + 1; i < n; ++i) {
      if (a[i * n + k] == 0) continue;
      Rational f = a[i * n + k] / a[k * n + k];
      for (size_t j = k; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
    }
  }
  return det;
}

}  // namespace pencil
