#include "pencil/polynomial.hpp"

#include <algorithm>
#include <limits>

#include "pencil/errors.hpp"

namespace pencil {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
  return v;
}

Polynomial Polynomial::monic() const {
  if (c_.empty()) return *this;
  Polynomial p = *this;
  const Rational lc = c_.back();
  for (auto& x : p.c_) x /= lc;
  return p;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::primitive() const {
  if (c_.empty()) return *this;
  Integer l = 1, g = 0;
  for (const auto& x : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Rational> out;
  for (const auto& x : c_) {
    Integer v = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.emplace_back(v);
  }
  if (c_.back() < 0) g = -g;
  for (auto& x : out) x /= g;
  return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const Rational& x = c_[static_cast<size_t>(i)];
    if (x == 0) continue;
    std::string t = format_rational(abs(x));
    if (!s.empty()) s += x < 0 ? " - " : " + ";
    else if (x < 0) s += "-";
    if (i == 0) s += t;
    else {
      if (t != "1") s += t + "*";
      s += i == 1 ? "s" : "s^" + std::to_string(i);
    }
  }
  return s;
}

void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  std::vector<Rational> quo(a.degree() >= db ? static_cast<size_t>(a.degree() - db + 1) : 0);
  for (int k = a.degree(); k >= db; --k) {
    const Rational f = rem[static_cast<size_t>(k)] / b.leading();
    if (f == 0) continue;
    quo[static_cast<size_t>(k - db)] = f;
    for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(k - db + j)] -= f * b.coeff(static_cast<size_t>(j));
  }
  q = Polynomial(std::move(quo));
  rem.resize(static_cast<size_t>(std::max(db, 0)));
  r = Polynomial(std::move(rem));
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) {
  Polynomial q, r;
  divmod(a, b, q, r);
  return r;
}

Polynomial operator/(const Polynomial& a, const Polynomial& b) {
  Polynomial q, r;
  divmod(a, b, q, r);
  return q;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = (x % y).primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

namespace {

int sign_at(const Polynomial& p, const Rational& x) { return sgn(p(x)); }

int variations(const std::vector<Polynomial>& chain, const Rational& x) {
  int v = 0, last = 0;
  for (const auto& p : chain) {
    const int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

struct RootSearch {
  std::vector<Polynomial> chain;
  Integer lc;  // rational roots are k / lc
  std::vector<Rational> roots;

  // (2k+1) / (2 lc) is never a root
  Rational half_point(const Integer& k) const {
    Rational x(Integer(2 * k + 1), Integer(2 * lc));
    x.canonicalize();
    return x;
  }

  void isolate(const Integer& lo, const Integer& hi, int vlo, int vhi) {
    if (vlo - vhi <= 0) return;
    if (hi - lo == 1) {
      Rational x(hi, lc);
      x.canonicalize();
      if (chain[0](x) == 0) roots.push_back(x);
      return;
    }
    Integer mid = (lo + hi) / 2;
    const int vm = variations(chain, half_point(mid));
    isolate(lo, mid, vlo, vm);
    isolate(mid, hi, vm, vhi);
  }
};

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw InputError("rational_roots of the zero polynomial");
  std::vector<Rational> roots;
  Polynomial q = p.primitive();
  if (q.degree() <= 0) return roots;
  q = (q / gcd(q, q.derivative())).primitive();
  if (q.coeff(0) == 0) {
    roots.emplace_back(0);
    q = (q / Polynomial::linear(0, 1)).primitive();
  }
  if (q.degree() == 1) {
    Rational r = -q.coeff(0) / q.coeff(1);
    roots.push_back(r);
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  if (q.degree() >= 2) {
    RootSearch rs;
    rs.chain.push_back(q);
    rs.chain.push_back(q.derivative());
    while (rs.chain.back().degree() > 0) {
      Polynomial r = rs.chain[rs.chain.size() - 2] % rs.chain.back();
      if (r.is_zero()) break;
      rs.chain.push_back((Polynomial() - r));
    }
    rs.lc = q.leading().get_num();
    Rational bound = 0;
    for (int i = 0; i < q.degree(); ++i) bound = std::max(bound, Rational(abs(q.coeff(static_cast<size_t>(i)) / q.leading())));
    bound += 1;
    const Rational scaled = bound * rs.lc;
    Integer kb = scaled.get_num() / scaled.get_den() + 1;
    Integer lo = -kb - 1, hi = kb;
    rs.isolate(lo, hi, variations(rs.chain, rs.half_point(lo)), variations(rs.chain, rs.half_point(hi)));
    roots.insert(roots.end(), rs.roots.begin(), rs.roots.end());
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

int root_multiplicity(const Polynomial& p, const Rational& x) {
  if (p.is_zero()) throw InputError("root_multiplicity of the zero polynomial");
  const Polynomial lin = Polynomial::linear(-x, 1);
  Polynomial cur = p;
  int k = 0;
  for (;;) {
    Polynomial q, r;
    divmod(cur, lin, q, r);
    if (!r.is_zero()) return k;
    cur = q;
    ++k;
  }
}

Polynomial interpolate(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  // Newton divided differences
  const size_t n = x.size();
  std::vector<Rational> d = y;
  for (size_t k = 1; k < n; ++k)
    for (size_t i = n - 1; i >= k; --i) d[i] = (d[i] - d[i - 1]) / (x[i] - x[i - k]);
  Polynomial p;
  for (size_t k = n; k-- > 0;) p = p * Polynomial::linear(-x[k], 1) + Polynomial::constant(d[k]);
  return p;
}

namespace {

bool find_min_degree(const PolyMatrix& m, size_t t, size_t& bi, size_t& bj) {
  int best = std::numeric_limits<int>::max();
  for (size_t i = t; i < m.size(); ++i)
    for (size_t j = t; j < m[i].size(); ++j)
      if (!m[i][j].is_zero() && m[i][j].degree() < best) {
        best = m[i][j].degree();
        bi = i;
        bj = j;
      }
  return best != std::numeric_limits<int>::max();
}

}  // namespace

std::vector<Polynomial> smith_diagonal(PolyMatrix m) {
  std::vector<Polynomial> diag;
  const size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (size_t t = 0; t < std::min(rows, cols); ++t) {
    size_t bi = t, bj = t;
    if (!find_min_degree(m, t, bi, bj)) break;
    for (;;) {
      std::swap(m[t], m[bi]);
      for (auto& row : m) std::swap(row[t], row[bj]);
      bool clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        if (m[i][t].is_zero()) continue;
        Polynomial q, r;
        divmod(m[i][t], m[t][t], q, r);
        for (size_t j = t; j < cols; ++j) m[i][j] = m[i][j] - q * m[t][j];
        if (!r.is_zero()) clean = false;
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (m[t][j].is_zero()) continue;
        Polynomial q, r;
        divmod(m[t][j], m[t][t], q, r);
        for (size_t i = t; i < rows; ++i) m[i][j] = m[i][j] - q * m[i][t];
        if (!r.is_zero()) clean = false;
      }
      if (clean) {
        // every remaining entry must be divisible by the pivot
        for (size_t i = t + 1; i < rows && clean; ++i)
          for (size_t j = t + 1; j < cols && clean; ++j)
            if (!(m[i][j] % m[t][t]).is_zero()) {
              for (size_t k = t; k < cols; ++k) m[t][k] = m[t][k] + m[i][k];
              clean = false;
            }
        if (clean) break;
      }
      // move the smallest entry of row t / column t into the pivot
      bi = t;
      bj = t;
      int best = m[t][t].degree();
      for (size_t i = t + 1; i < rows; ++i)
        if (!m[i][t].is_zero() && m[i][t].degree() < best) best = m[i][t].degree(), bi = i, bj = t;
      for (size_t j = t + 1; j < cols; ++j)
        if (!m[t][j].is_zero() && m[t][j].degree() < best) best = m[t][j].degree(), bi = t, bj = j;
    }
    diag.push_back(m[t][t].monic());
  }
  return diag;
}

}  // namespace pencil
