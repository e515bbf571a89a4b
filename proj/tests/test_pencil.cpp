#include <set>

#include "doctest.h"
#include "pencil/builder.hpp"
#include "pencil/errors.hpp"
#include "pencil/invariants.hpp"
#include "pencil/polynomial.hpp"
#include "support.hpp"

using namespace pencil;
using namespace pencil::test;

namespace {

const Eigenvalue kInf = Eigenvalue::infinity();

Polynomial poly(std::vector<long> c) {
  std::vector<Rational> q;
  for (long v : c) q.emplace_back(v);
  return Polynomial(q);
}

}  // namespace

TEST_SUITE("pencil") {
  TEST_CASE("evaluate") {
    const Pencil h = pen({{1, 0}, {0, 0}}, {{0, 1}, {0, 0}});
    CHECK(evaluate(h, Eigenvalue(0)) == Matrix::from_ints({{1, 0}, {0, 0}}));
    CHECK(evaluate(h, kInf) == Matrix::from_ints({{0, 1}, {0, 0}}));
    CHECK(evaluate(diag_s_s(), Eigenvalue(2)) == Matrix::from_ints({{2, 0}, {0, 2}}));
    CHECK(evaluate(h, Eigenvalue(Rational(1, 2))) == Matrix::from_ints({{1, 0}, {0, 0}}) + Rational(1, 2) * h.b);
  }

  TEST_CASE("ranks") {
    CHECK(matrix_rank(Matrix::identity(3)) == 3);
    CHECK(matrix_rank(Matrix(3, 2)) == 0);
    CHECK(matrix_rank(Matrix::from_ints({{1, 2}, {2, 4}})) == 1);
    CHECK(normal_rank(one_s()) == 1);
    CHECK(normal_rank(Pencil::zero(2, 3)) == 0);
    CHECK(normal_rank(pen({{0, 0}, {0, 1}}, {{1, 0}, {0, 0}})) == 2);
    CHECK(normal_rank(Pencil::zero(0, 3)) == 0);
  }

  TEST_CASE("transpose and reversal") {
    const Pencil t = transpose(one_s());
    CHECK(t.rows() == 2);
    CHECK(t.cols() == 1);
    CHECK(reversal(reversal(jordan_s2())) == jordan_s2());
    const Pencil r = reversal(diag_s_s());
    CHECK(partial_multiplicities(r, kInf) == partial_multiplicities(diag_s_s(), Eigenvalue(0)));
    CHECK(partial_multiplicities(r, Eigenvalue(0)).empty());
    CHECK(smith_invariant_factors(reversal(r)) == smith_invariant_factors(diag_s_s()));
  }

  TEST_CASE("apply_equivalence") {
    const Pencil h = one_s();
    CHECK(apply_equivalence(h, Matrix::identity(1), Matrix::identity(2)) == h);
    const Pencil j = jordan_s2();
    const Matrix swap = Matrix::from_ints({{0, 1}, {1, 0}});
    const Pencil pj = apply_equivalence(j, swap, Matrix::identity(2));
    CHECK(pj.a == swap * j.a);
    CHECK(weyr_characteristic(pj) == weyr_characteristic(j));
    CHECK_THROWS_AS(apply_equivalence(h, Matrix::identity(2), Matrix::identity(2)), InputError);
    CHECK_THROWS_AS(apply_equivalence(h, Matrix::identity(1), Matrix::from_ints({{1, 1}, {1, 1}})), InputError);
    CHECK_THROWS_AS(Pencil(Matrix(1, 2), Matrix(2, 1)), InputError);
  }

  TEST_CASE("classify_rank_one examples") {
    const auto col = classify_rank_one(pen({{1, 0}, {0, 0}}, {{0, 1}, {0, 0}}));
    CHECK(col.kind == RankOneKind::Column);
    CHECK(col.constant == Matrix::from_ints({{1}, {0}}));
    CHECK(col.poly0 == Matrix::from_ints({{1}, {0}}));
    CHECK(col.poly1 == Matrix::from_ints({{0}, {1}}));
    const auto row = classify_rank_one(pen({{1}, {0}}, {{0}, {1}}));
    CHECK(row.kind == RankOneKind::Row);
    CHECK(row.reconstruct() == pen({{1}, {0}}, {{0}, {1}}));
    CHECK(classify_rank_one(pen({{1, 0}, {0, 0}}, {{0, 0}, {0, 0}})).kind == RankOneKind::Column);
    CHECK_THROWS_AS(classify_rank_one(Pencil::zero(2, 2)), InputError);
    CHECK_THROWS_AS(classify_rank_one(diag_s_s()), InputError);
  }

  TEST_CASE("classify_rank_one reconstructs random factors") {
    Rng rng = stream(11, 0);
    for (int t = 0; t < 300; ++t) {
      const size_t m = 1 + rng() % 5, n = 1 + rng() % 5;
      const RankOneKind kind = rng() % 2 ? RankOneKind::Column : RankOneKind::Row;
      const Pencil p = random_rank_one(rng, m, n, kind);
      REQUIRE(normal_rank(p) == 1);
      const auto d = classify_rank_one(p);
      REQUIRE(d.reconstruct() == p);
      if (kind == RankOneKind::Column && n >= 2) CHECK(d.kind == RankOneKind::Column);
      if (kind == RankOneKind::Row && m >= 2) CHECK(d.kind == RankOneKind::Row);
    }
  }

  TEST_CASE("normal rank is stable under transpose and reversal") {
    Rng rng = stream(12, 0);
    for (int t = 0; t < 200; ++t) {
      const Pencil h = random_equivalent(rng, build_pencil(random_weyr(rng, 8)));
      REQUIRE(normal_rank(h) == normal_rank(transpose(h)));
      REQUIRE(normal_rank(h) == normal_rank(reversal(h)));
    }
  }

  TEST_CASE("clear_denominators") {
    Pencil h{Matrix(1, 2), Matrix(1, 2)};
    h.a(0, 0) = Rational(1, 2);
    h.b(0, 1) = Rational(2, 3);
    const Pencil c = clear_denominators(h);
    CHECK(c.a(0, 0) == 3);
    CHECK(c.b(0, 1) == 4);
  }
}

TEST_SUITE("polynomial") {
  TEST_CASE("arithmetic and roots") {
    const Polynomial p = poly({-2, 1}) * poly({-2, 1}) * poly({1, 2});  // (s-2)^2 (2s+1)
    CHECK(p.degree() == 3);
    CHECK(root_multiplicity(p, 2) == 2);
    CHECK(rational_roots(p) == std::vector<Rational>{Rational(-1, 2), Rational(2)});
    CHECK(gcd(p, poly({-2, 1}) * poly({5, 1})) == poly({-2, 1}));
    CHECK(rational_roots(poly({-2, 0, 1})).empty());
    Polynomial q, r;
    divmod(p, poly({-2, 1}), q, r);
    CHECK(r.is_zero());
    CHECK(q * poly({-2, 1}) == p);
  }

  TEST_CASE("interpolate") {
    const Polynomial p = poly({1, -3, 0, 2});
    std::vector<Rational> x, y;
    for (long v = 0; v < 4; ++v) {
      x.emplace_back(v);
      y.push_back(p(Rational(v)));
    }
    CHECK(interpolate(x, y) == p);
  }
}

TEST_SUITE("extractor") {
  TEST_CASE("smith forms") {
    CHECK(smith_invariant_factors(diag_s_s()) == std::vector<Polynomial>{poly({0, 1}), poly({0, 1})});
    CHECK(smith_invariant_factors(jordan_s2()) == std::vector<Polynomial>{poly({1}), poly({0, 0, 1})});
    CHECK(smith_invariant_factors(one_s()) == std::vector<Polynomial>{poly({1})});
  }

  TEST_CASE("partial multiplicities") {
    CHECK(partial_multiplicities(diag_s_s(), Eigenvalue(0)) == Partition{1, 1});
    CHECK(partial_multiplicities(jordan_s2(), Eigenvalue(0)) == Partition{2});
    CHECK(partial_multiplicities(diag_s_s(), Eigenvalue(1)).empty());
    CHECK(weyr_partition(jordan_s2(), Eigenvalue(0)) == Partition{1, 1});
  }

  TEST_CASE("minimal indices") {
    auto [c, u] = minimal_indices(one_s());
    CHECK(c == FiniteSequence{1});
    CHECK(u == FiniteSequence{});
    std::tie(c, u) = minimal_indices(diag_s_s());
    CHECK(c.size() == 0);
    CHECK(u.size() == 0);
    std::tie(c, u) = minimal_indices(Pencil::zero(1, 1));
    CHECK(c == FiniteSequence{0});
    CHECK(u == FiniteSequence{0});
  }

  TEST_CASE("weyr characteristics") {
    CHECK(weyr_characteristic(diag_s_s()) == chr({{Eigenvalue(0), Partition{2}}}, star(0), star(0)));
    CHECK(weyr_characteristic(one_s()) == chr({}, star(1, {1}), star(0)));
    CHECK(weyr_characteristic(jordan_s2()) == chr({{Eigenvalue(0), Partition{1, 1}}}, star(0), star(0)));
    const WeyrCharacteristic empty = weyr_characteristic(Pencil::zero(0, 3));
    CHECK(empty == chr({}, star(3), star(0)));
  }

  TEST_CASE("strict equivalence") {
    Rng rng = stream(5, 0);
    const Pencil h = jordan_s2();
    CHECK(strictly_equivalent(h, random_equivalent(rng, h)));
    CHECK_FALSE(strictly_equivalent(diag_s_s(), jordan_s2()));
    CHECK(strictly_equivalent(h, h));
    CHECK_FALSE(strictly_equivalent(one_s(), transpose(one_s())));
  }

  TEST_CASE("irrational spectrum") {
    const Pencil h = pen({{0, -2}, {-1, 0}}, {{1, 0}, {0, 1}});  // s^2 - 2
    CHECK_THROWS_AS(weyr_characteristic(h), IrrationalSpectrum);
    CHECK(partial_multiplicities(h, Eigenvalue(1)).empty());
  }

  TEST_CASE("infinite and rational eigenvalues") {
    // (2s - 1) and an infinite Jordan block of size 2
    const Pencil h = pen({{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{2, 0, 0}, {0, 0, 1}, {0, 0, 0}});
    const auto w = weyr_characteristic(h);
    CHECK(w.weyr(Eigenvalue(Rational(1, 2))) == Partition{1});
    CHECK(w.weyr(Eigenvalue::infinity()) == Partition{1, 1});
    CHECK(w.regular.size() == 2);
  }

  TEST_CASE("invariants under equivalence, transpose duality, sum identity") {
    Rng rng = stream(21, 0);
    for (int t = 0; t < 500; ++t) {
      const WeyrCharacteristic w = random_weyr(rng, 8);
      const Pencil h = build_pencil(w);
      if (h.rows() > 6 || h.cols() > 6) continue;
      const Pencil g = random_equivalent(rng, h);
      const KroneckerStructure k = kronecker_structure(g);
      REQUIRE(k == kronecker_structure(h));
      REQUIRE(weyr_characteristic(g) == w);
      REQUIRE(weyr_characteristic(transpose(g)) == transpose(w));
      REQUIRE(w.regular_weight() + w.r_star.tail_weight() + w.s_star.tail_weight() ==
              static_cast<Int>(normal_rank(g)));
      REQUIRE(k.column_indices.size() == static_cast<Int>(g.cols() - normal_rank(g)));
      REQUIRE(k.row_indices.size() == static_cast<Int>(g.rows() - normal_rank(g)));
    }
  }

  TEST_CASE("smith cross-check on small pencils") {
    Rng rng = stream(22, 0);
    for (int t = 0; t < 150; ++t) {
      WeyrCharacteristic w = random_weyr(rng, 6);
      w.r_star = star(0);
      w.s_star = star(0);
      const Pencil h = random_equivalent(rng, build_pencil(w));
      const auto d = smith_invariant_factors(h);
      for (size_t i = 0; i + 1 < d.size(); ++i) REQUIRE((d[i + 1] % d[i]).is_zero());
      // finite multiplicities read from the Smith diagonal
      for (const auto& [lambda, z] : kronecker_structure(h).multiplicities) {
        if (lambda.is_infinite()) continue;
        std::vector<Int> parts;
        for (auto it = d.rbegin(); it != d.rend(); ++it) {
          const int m = root_multiplicity(*it, lambda.value());
          if (m > 0) parts.push_back(m);
        }
        REQUIRE(Partition(parts) == z);
      }
    }
  }
}

TEST_SUITE("builder") {
  TEST_CASE("examples") {
    const auto j = chr({{Eigenvalue(0), Partition{1, 1}}}, star(0), star(0));
    CHECK(strictly_equivalent(build_pencil(j), jordan_s2()));
    const auto l1 = chr({}, star(1, {1}), star(0));
    CHECK(strictly_equivalent(build_pencil(l1), one_s()));
    const Pencil z = build_pencil(chr({}, star(2), star(0)));
    CHECK(z.rows() == 0);
    CHECK(z.cols() == 2);
    const Pencil zr = build_pencil(chr({}, star(0), star(3)));
    CHECK(zr.rows() == 3);
    CHECK(zr.cols() == 0);
  }

  TEST_CASE("dimensions and exact round trip") {
    Rng rng = stream(31, 0);
    for (int t = 0; t < 300; ++t) {
      const WeyrCharacteristic w = random_weyr(rng, 10);
      const Pencil h = build_pencil(w);
      REQUIRE(static_cast<Int>(h.rows()) == w.rank() + w.s_star.zeroth());
      REQUIRE(static_cast<Int>(h.cols()) == w.rank() + w.r_star.zeroth());
      REQUIRE(weyr_characteristic(h) == w);
      REQUIRE(strictly_equivalent(build_pencil(weyr_characteristic(h)), h));
    }
  }

  TEST_CASE("random_weyr") {
    Rng rng = stream(32, 0);
    for (int t = 0; t < 50; ++t) {
      const WeyrCharacteristic w = random_weyr(rng, 0);
      CHECK(w.total_weight() == 0);
    }
    bool finite = false, infinite = false, column = false, row = false;
    for (int t = 0; t < 1000; ++t) {
      const WeyrCharacteristic w = random_weyr(rng, 8);
      REQUIRE(w.total_weight() <= 8);
      for (const auto& [l, p] : w.regular) (l.is_infinite() ? infinite : finite) = true;
      column = column || w.r_star.tail_weight() > 0;
      row = row || w.s_star.tail_weight() > 0;
    }
    CHECK(finite);
    CHECK(infinite);
    CHECK(column);
    CHECK(row);
  }

  TEST_CASE("random_rank_one kinds") {
    Rng rng = stream(33, 0);
    for (int t = 0; t < 100; ++t) {
      const Pencil c = random_rank_one(rng, 2, 2, RankOneKind::Column);
      Matrix side(2, 4);
      for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) {
          side(i, j) = c.a(i, j);
          side(i, 2 + j) = c.b(i, j);
        }
      REQUIRE(matrix_rank(side) == 1);
      const Pencil r = random_rank_one(rng, 3, 2, RankOneKind::Row);
      Matrix stacked(6, 2);
      for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 2; ++j) {
          stacked(i, j) = r.a(i, j);
          stacked(3 + i, j) = r.b(i, j);
        }
      REQUIRE(matrix_rank(stacked) == 1);
      REQUIRE(normal_rank(r) == 1);
    }
  }

  TEST_CASE("enumeration visits each characteristic once") {
    std::set<std::string> seen;
    long count = 0;
    for_each_characteristic(4, {Eigenvalue(0), Eigenvalue::infinity()}, [&](const WeyrCharacteristic& w) {
      ++count;
      REQUIRE(w.total_weight() <= 4);
      std::string key;
      for (const auto& [l, p] : w.regular) key += l.to_string() + to_string(p);
      key += "|" + to_string(w.r_star) + "|" + to_string(w.s_star);
      seen.insert(key);
    });
    CHECK(count == static_cast<long>(seen.size()));
    CHECK(count > 100);
  }

  TEST_CASE("streams are reproducible") {
    Rng a = stream(7, 3), b = stream(7, 3), c = stream(7, 4);
    CHECK(a() == b());
    CHECK(stream(7, 3)() != c());
  }
}
