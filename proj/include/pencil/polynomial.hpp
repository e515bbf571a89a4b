#pragma once

#include <string>
#include <vector>

#include "pencil/rational.hpp"

namespace pencil {

// Univariate polynomial over Q, coefficients stored low degree first.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  // c0 + c1 s
  static Polynomial linear(const Rational& c0, const Rational& c1) { return Polynomial({c0, c1}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational operator()(const Rational& x) const;
  Polynomial monic() const;
  Polynomial derivative() const;
  // Integer coefficients with gcd 1 and positive leading coefficient.
  Polynomial primitive() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  bool operator==(const Polynomial& o) const { return c_ == o.c_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r);
Polynomial operator%(const Polynomial& a, const Polynomial& b);
Polynomial operator/(const Polynomial& a, const Polynomial& b);
// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// Distinct rational roots in ascending order. p must be nonzero.
std::vector<Rational> rational_roots(const Polynomial& p);
// Largest k with (s - x)^k dividing p.
int root_multiplicity(const Polynomial& p, const Rational& x);

// Interpolating polynomial through (x_i, y_i), distinct x_i.
Polynomial interpolate(const std::vector<Rational>& x, const std::vector<Rational>& y);

using PolyMatrix = std::vector<std::vector<Polynomial>>;
// Nonzero monic diagonal of the Smith form, d_1 | d_2 | ...
std::vector<Polynomial> smith_diagonal(PolyMatrix m);

}  // namespace pencil
