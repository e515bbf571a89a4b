#include "pencil/builder.hpp"

#include <algorithm>

#include "pencil/errors.hpp"

namespace pencil {

namespace {

struct Assembler {
  Pencil h;
  size_t row = 0, col = 0;

  Assembler(size_t m, size_t n) : h(Pencil::zero(m, n)) {}

  void set_a(size_t i, size_t j, const Rational& v) { h.a(row + i, col + j) = v; }
  void set_b(size_t i, size_t j, const Rational& v) { h.b(row + i, col + j) = v; }
  void advance(size_t r, size_t c) {
    row += r;
    col += c;
  }
};

}  // namespace

Pencil build_pencil(const KroneckerStructure& k) {
  if (k.rows < 0 || k.cols < 0) throw InputError("negative dimensions");
  Assembler as(static_cast<size_t>(k.rows), static_cast<size_t>(k.cols));
  for (Int eps : k.column_indices.values()) {
    // L_eps: eps x (eps + 1), row i = s e_i + e_{i+1}
    const size_t e = static_cast<size_t>(eps);
    for (size_t i = 0; i < e; ++i) {
      as.set_b(i, i, 1);
      as.set_a(i, i + 1, 1);
    }
    as.advance(e, e + 1);
  }
  for (Int eta : k.row_indices.values()) {
    // L_eta^T: (eta + 1) x eta
    const size_t e = static_cast<size_t>(eta);
    for (size_t i = 0; i < e; ++i) {
      as.set_b(i, i, 1);
      as.set_a(i + 1, i, 1);
    }
    as.advance(e + 1, e);
  }
  for (const auto& [lambda, z] : k.multiplicities)
    for (Int size : z.parts()) {
      const size_t n = static_cast<size_t>(size);
      if (lambda.is_infinite()) {
        // I + s N
        for (size_t i = 0; i < n; ++i) {
          as.set_a(i, i, 1);
          if (i + 1 < n) as.set_b(i, i + 1, 1);
        }
      } else {
        // s I - J(lambda)
        for (size_t i = 0; i < n; ++i) {
          as.set_b(i, i, 1);
          as.set_a(i, i, -lambda.value());
          if (i + 1 < n) as.set_a(i, i + 1, -1);
        }
      }
      as.advance(n, n);
    }
  if (as.row != as.h.rows() || as.col != as.h.cols())
    throw InputError("Kronecker structure does not match the stated dimensions");
  return as.h;
}

Pencil build_pencil(const WeyrCharacteristic& w) { return build_pencil(kronecker_from_weyr(w)); }

const std::vector<Eigenvalue>& eigenvalue_pool() {
  static const std::vector<Eigenvalue> pool{Eigenvalue(0), Eigenvalue(1), Eigenvalue(-1), Eigenvalue(2),
                                            Eigenvalue(Rational(1, 2)), Eigenvalue::infinity()};
  return pool;
}

namespace {

Int uniform(Rng& rng, Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); }

}  // namespace

WeyrCharacteristic random_weyr(Rng& rng, Int budget) {
  if (budget < 0) throw InputError("negative budget");
  KroneckerStructure k;
  std::vector<Int> cols, rows;
  Int left = uniform(rng, 0, budget);
  while (left > 0) {
    switch (uniform(rng, 0, 2)) {
      case 0: {
        const auto& pool = eigenvalue_pool();
        const Eigenvalue l = pool[static_cast<size_t>(uniform(rng, 0, static_cast<Int>(pool.size()) - 1))];
        const Int size = uniform(rng, 1, left);
        std::vector<Int> z = k.multiplicities[l].parts();
        z.push_back(size);
        std::sort(z.rbegin(), z.rend());
        k.multiplicities[l] = Partition(z);
        left -= size;
        break;
      }
      case 1: {
        const Int eps = uniform(rng, 0, left - 1);
        cols.push_back(eps);
        left -= eps + 1;
        break;
      }
      default: {
        const Int eta = uniform(rng, 0, left - 1);
        rows.push_back(eta);
        left -= eta + 1;
      }
    }
  }
  std::sort(cols.rbegin(), cols.rend());
  std::sort(rows.rbegin(), rows.rend());
  k.column_indices = FiniteSequence(cols);
  k.row_indices = FiniteSequence(rows);
  WeyrCharacteristic w;
  for (const auto& [l, z] : k.multiplicities) w.set_weyr(l, conjugate(z));
  w.r_star = conjugate_star(k.column_indices);
  w.s_star = conjugate_star(k.row_indices);
  return w;
}

namespace {

Matrix random_vector(Rng& rng, size_t n) {
  Matrix v(n, 1);
  for (size_t i = 0; i < n; ++i) v(i, 0) = static_cast<long>(uniform(rng, -2, 2));
  return v;
}

Matrix random_nonzero_vector(Rng& rng, size_t n) {
  for (;;) {
    Matrix v = random_vector(rng, n);
    if (!v.is_zero()) return v;
  }
}

// (v0, v1): independent when n >= 2, not both zero otherwise.
std::pair<Matrix, Matrix> random_linear_vector(Rng& rng, size_t n) {
  for (;;) {
    Matrix v0 = random_vector(rng, n), v1 = random_vector(rng, n);
    Matrix both(n, 2);
    for (size_t i = 0; i < n; ++i) {
      both(i, 0) = v0(i, 0);
      both(i, 1) = v1(i, 0);
    }
    if (matrix_rank(both) == std::min<size_t>(n, 2)) return {v0, v1};
  }
}

}  // namespace

Pencil random_rank_one(Rng& rng, size_t m, size_t n, RankOneKind kind) {
  if (m == 0 || n == 0) throw InputError("rank one pencil needs positive dimensions");
  RankOneDecomposition d;
  d.kind = kind;
  if (kind == RankOneKind::Column) {
    d.constant = random_nonzero_vector(rng, m);
    std::tie(d.poly0, d.poly1) = random_linear_vector(rng, n);
  } else {
    d.constant = random_nonzero_vector(rng, n);
    std::tie(d.poly0, d.poly1) = random_linear_vector(rng, m);
  }
  return d.reconstruct();
}

Matrix random_unimodular(Rng& rng, size_t n) {
  Matrix u = Matrix::identity(n);
  if (n < 2) {
    if (n == 1 && uniform(rng, 0, 1)) u(0, 0) = -1;
    return u;
  }
  const Int ops = static_cast<Int>(2 * n);
  for (Int t = 0; t < ops; ++t) {
    const size_t i = static_cast<size_t>(uniform(rng, 0, static_cast<Int>(n) - 1));
    size_t j = static_cast<size_t>(uniform(rng, 0, static_cast<Int>(n) - 2));
    if (j >= i) ++j;
    if (uniform(rng, 0, 3) == 0) {
      for (size_t c = 0; c < n; ++c) std::swap(u(i, c), u(j, c));
    } else {
      const long f = uniform(rng, 0, 1) ? 1 : -1;
      for (size_t c = 0; c < n; ++c) u(i, c) += f * u(j, c);
    }
  }
  return u;
}

Pencil random_equivalent(Rng& rng, const Pencil& h) {
  const Matrix p = random_unimodular(rng, h.rows());
  const Matrix q = random_unimodular(rng, h.cols());
  return apply_equivalence(h, p, q);
}

std::vector<StarPartition> star_partitions_of(Int k) {
  std::vector<StarPartition> out;
  for (Int p0 = 0; p0 <= k; ++p0)
    for (const auto& tail : partitions_of(k - p0, p0)) out.emplace_back(p0, tail);
  return out;
}

namespace {

void fill_regular(size_t at, Int left, const std::vector<Eigenvalue>& pool,
                  const std::vector<std::vector<Partition>>& parts, WeyrCharacteristic& w,
                  const std::function<void(const WeyrCharacteristic&)>& f) {
  if (at == pool.size()) {
    f(w);
    return;
  }
  fill_regular(at + 1, left, pool, parts, w, f);
  for (Int k = 1; k <= left; ++k)
    for (const auto& p : parts[static_cast<size_t>(k)]) {
      w.regular[pool[at]] = p;
      fill_regular(at + 1, left - k, pool, parts, w, f);
    }
  w.regular.erase(pool[at]);
}

}  // namespace

void for_each_characteristic(Int max_weight, const std::vector<Eigenvalue>& pool,
                             const std::function<void(const WeyrCharacteristic&)>& f) {
  WeyrCharacteristic w;
  std::vector<std::vector<Partition>> parts;
  for (Int k = 0; k <= max_weight; ++k) parts.push_back(partitions_of(k));
  for (Int kr = 0; kr <= max_weight; ++kr)
    for (const auto& r : star_partitions_of(kr))
      for (Int ks = 0; kr + ks <= max_weight; ++ks)
        for (const auto& s : star_partitions_of(ks)) {
          w.r_star = r;
          w.s_star = s;
          fill_regular(0, max_weight - kr - ks, pool, parts, w, f);
        }
}

Rng stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

}  // namespace pencil
