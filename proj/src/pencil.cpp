#include "pencil/pencil.hpp"

#include <algorithm>

#include "pencil/errors.hpp"

namespace pencil {

std::string Eigenvalue::to_string() const { return value_ ? format_rational(*value_) : "inf"; }

Eigenvalue Eigenvalue::parse(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "oo") return infinity();
  return Eigenvalue(parse_rational(text));
}

bool Eigenvalue::operator==(const Eigenvalue& o) const {
  if (is_infinite() || o.is_infinite()) return is_infinite() == o.is_infinite();
  return *value_ == *o.value_;
}

std::strong_ordering Eigenvalue::operator<=>(const Eigenvalue& o) const {
  if (is_infinite() && o.is_infinite()) return std::strong_ordering::equal;
  if (is_infinite()) return std::strong_ordering::greater;
  if (o.is_infinite()) return std::strong_ordering::less;
  const int c = cmp(*value_, *o.value_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

Pencil::Pencil(Matrix a_, Matrix b_) : a(std::move(a_)), b(std::move(b_)) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("pencil: A and B differ in shape");
}

Pencil operator+(const Pencil& g, const Pencil& h) { return {g.a + h.a, g.b + h.b}; }

Matrix evaluate(const Pencil& h, const Eigenvalue& lambda) {
  if (lambda.is_infinite()) return h.b;
  return h.a + lambda.value() * h.b;
}

size_t normal_rank(const Pencil& h) {
  const size_t full = std::min(h.rows(), h.cols());
  size_t best = 0;
  for (size_t k = 0; k <= full && best < full; ++k)
    best = std::max(best, matrix_rank(evaluate(h, Eigenvalue(static_cast<long>(k)))));
  return best;
}

Pencil transpose(const Pencil& h) { return {h.a.transpose(), h.b.transpose()}; }

Pencil reversal(const Pencil& h) { return {h.b, h.a}; }

Pencil apply_equivalence(const Pencil& h, const Matrix& p, const Matrix& q) {
  if (p.rows() != h.rows() || p.cols() != h.rows()) throw InputError("left transform has the wrong shape");
  if (q.rows() != h.cols() || q.cols() != h.cols()) throw InputError("right transform has the wrong shape");
  if (matrix_rank(p) != p.rows()) throw InputError("left transform is singular");
  if (matrix_rank(q) != q.rows()) throw InputError("right transform is singular");
  return {p * h.a * q, p * h.b * q};
}

Pencil clear_denominators(const Pencil& h) {
  Integer l = 1;
  for (const Matrix* m : {&h.a, &h.b})
    for (size_t i = 0; i < m->rows(); ++i)
      for (size_t j = 0; j < m->cols(); ++j)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), (*m)(i, j).get_den_mpz_t());
  if (l == 1) return h;
  const Rational s(l);
  return {s * h.a, s * h.b};
}

std::string to_string(RankOneKind k) { return k == RankOneKind::Column ? "col" : "row"; }

Pencil RankOneDecomposition::reconstruct() const {
  if (kind == RankOneKind::Column) return {constant * poly0.transpose(), constant * poly1.transpose()};
  return {poly0 * constant.transpose(), poly1 * constant.transpose()};
}

namespace {

// Writes every row of m as a multiple of the first nonzero row.
// Returns (coefficients as a column, the row as a column).
std::pair<Matrix, Matrix> factor_rows(const Matrix& m) {
  size_t lead = 0;
  while (lead < m.rows()) {
    bool nz = false;
    for (size_t j = 0; j < m.cols() && !nz; ++j) nz = m(lead, j) != 0;
    if (nz) break;
    ++lead;
  }
  size_t pc = 0;
  while (m(lead, pc) == 0) ++pc;
  Matrix coeff(m.rows(), 1), row(m.cols(), 1);
  for (size_t j = 0; j < m.cols(); ++j) row(j, 0) = m(lead, j);
  for (size_t i = 0; i < m.rows(); ++i) coeff(i, 0) = m(i, pc) / m(lead, pc);
  return {coeff, row};
}

}  // namespace

RankOneDecomposition classify_rank_one(const Pencil& p) {
  if (normal_rank(p) != 1) throw InputError("classify_rank_one: normal rank is not 1");
  const size_t m = p.rows(), n = p.cols();
  Matrix side(m, 2 * n);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < n; ++j) {
      side(i, j) = p.a(i, j);
      side(i, n + j) = p.b(i, j);
    }
  RankOneDecomposition d;
  if (matrix_rank(side) == 1) {
    auto [u, row] = factor_rows(side);
    d.kind = RankOneKind::Column;
    d.constant = u;
    d.poly0 = Matrix(n, 1);
    d.poly1 = Matrix(n, 1);
    for (size_t j = 0; j < n; ++j) {
      d.poly0(j, 0) = row(j, 0);
      d.poly1(j, 0) = row(n + j, 0);
    }
    return d;
  }
  Matrix stacked(2 * m, n);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < n; ++j) {
      stacked(i, j) = p.a(i, j);
      stacked(m + i, j) = p.b(i, j);
    }
  // columns of the stacked matrix are multiples of one column
  auto [v, col] = factor_rows(stacked.transpose());
  d.kind = RankOneKind::Row;
  d.constant = v;
  d.poly0 = Matrix(m, 1);
  d.poly1 = Matrix(m, 1);
  for (size_t i = 0; i < m; ++i) {
    d.poly0(i, 0) = col(i, 0);
    d.poly1(i, 0) = col(m + i, 0);
  }
  return d;
}

}  // namespace pencil
