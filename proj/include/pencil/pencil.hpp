#pragma once

#include <compare>
#include <optional>
#include <string>

#include "pencil/matrix.hpp"

namespace pencil {

// A finite rational eigenvalue or infinity. Finite values sort ascending,
// infinity last.
class Eigenvalue {
 public:
  Eigenvalue() = default;
  explicit Eigenvalue(Rational v) : value_(std::move(v)) {}
  Eigenvalue(long v) : value_(Rational(v)) {}
  static Eigenvalue infinity() {
    Eigenvalue e;
    e.value_.reset();
    return e;
  }

  bool is_infinite() const { return !value_; }
  const Rational& value() const { return *value_; }

  // "inf" or canonical "p/q"
  std::string to_string() const;
  static Eigenvalue parse(const std::string& text);

  bool operator==(const Eigenvalue& o) const;
  std::strong_ordering operator<=>(const Eigenvalue& o) const;

 private:
  std::optional<Rational> value_ = Rational(0);
};

// H(s) = A + s B
struct Pencil {
  Matrix a, b;

  Pencil() = default;
  Pencil(Matrix a_, Matrix b_);
  static Pencil zero(size_t m, size_t n) { return {Matrix(m, n), Matrix(m, n)}; }

  size_t rows() const { return a.rows(); }
  size_t cols() const { return a.cols(); }

  bool operator==(const Pencil&) const = default;
  friend Pencil operator+(const Pencil& g, const Pencil& h);
};

// H(lambda) for finite lambda; B for infinity.
Matrix evaluate(const Pencil& h, const Eigenvalue& lambda);
size_t normal_rank(const Pencil& h);
Pencil transpose(const Pencil& h);
// B + s A
Pencil reversal(const Pencil& h);
// P H Q. Throws InputError when P or Q is not square invertible of the
// right size.
Pencil apply_equivalence(const Pencil& h, const Matrix& p, const Matrix& q);

// Same pencil with every entry multiplied by a common positive integer so
// that all entries are integers.
Pencil clear_denominators(const Pencil& h);

enum class RankOneKind {
  Column,  // P = u v(s)^T with u constant
  Row,     // P = u(s) v^T with v constant
};

std::string to_string(RankOneKind k);

struct RankOneDecomposition {
  RankOneKind kind;
  // Column: constant u (m x 1), v(s) = v0 + s v1 (n x 1 each).
  // Row:    u(s) = u0 + s u1 (m x 1 each), constant v (n x 1).
  Matrix constant;
  Matrix poly0, poly1;

  Pencil reconstruct() const;
};

// Column wins when both factorizations exist. Throws InputError when the
// normal rank is not 1.
RankOneDecomposition classify_rank_one(const Pencil& p);

}  // namespace pencil
