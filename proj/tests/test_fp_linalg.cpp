#include "doctest.h"
#include "rlie/fp_linalg.hpp"

#include <random>

using namespace rlie;

TEST_CASE("solve_linear on small systems") {
  auto sol = solve_linear(Matrix::identity(2, 2), {1, 0});
  REQUIRE(sol.particular);
  CHECK(*sol.particular == Vec{1, 0});
  CHECK(sol.kernel.dim() == 0);

  auto rank1 = solve_linear(Matrix::from_rows(2, 2, {{1, 1}, {0, 0}}), {0, 0});
  REQUIRE(rank1.particular);
  CHECK(rank1.kernel.dim() == 1);
  CHECK(rank1.kernel.contains(Vec{1, 1}));

  auto none = solve_linear(Matrix::zero(3, 2, 2), {1, 0});
  CHECK_FALSE(none.particular);

  CHECK_THROWS_AS(solve_linear(Matrix::identity(2, 2), {1, 0, 0}), std::invalid_argument);
}

TEST_CASE("kernel_image and rank-nullity") {
  auto [k1, i1] = kernel_image(Matrix::identity(5, 3));
  CHECK(k1.dim() == 0);
  CHECK(i1.dim() == 3);
  auto [k2, i2] = kernel_image(Matrix::zero(2, 2, 2));
  CHECK(k2.dim() == 2);
  CHECK(i2.dim() == 0);
  auto [k3, i3] = kernel_image(Matrix::from_rows(2, 2, {{1, 1}, {1, 1}}));
  CHECK(k3 == Subspace::span(2, 2, {{1, 1}}));
  CHECK(i3.dim() == 1);

  std::mt19937_64 rng(7);
  for (Coeff p : {2u, 3u, 5u, 7u}) {
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t r = 1 + rng() % 5;
      const std::size_t c = 1 + rng() % 5;
      Matrix m(p, r, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, static_cast<std::int64_t>(rng() % p));
      auto [k, im] = kernel_image(m);
      CHECK(k.dim() + im.dim() == c);
      for (const auto& v : k.basis()) CHECK(PrimeField::is_zero(m.apply(v)));
    }
  }
}

TEST_CASE("rref is canonical for a subspace") {
  auto a = Subspace::span(3, 3, {{1, 2, 0}, {0, 1, 1}});
  auto b = Subspace::span(3, 3, {{1, 0, 1}, {2, 1, 0}, {1, 0, 1}});
  CHECK(a == b);
  CHECK(a.dim() == 2);
}

TEST_CASE("quotient_with_section") {
  PrimeField f(2);
  auto q1 = quotient_with_section(3, Subspace::span(2, 3, {{0, 0, 1}}));
  CHECK(q1.quotient_dim() == 2);
  CHECK(q1.projection * q1.section == Matrix::identity(2, 2));
  CHECK(image(q1.section) == Subspace::span(2, 3, {{1, 0, 0}, {0, 1, 0}}));
  CHECK(kernel(q1.projection) == q1.kernel);

  auto q2 = quotient_with_section(2, Subspace::full(2, 2));
  CHECK(q2.quotient_dim() == 0);

  auto q3 = quotient_with_section(2, Subspace::span(2, 2, {{1, 1}}));
  CHECK(q3.quotient_dim() == 1);
  CHECK(q3.projection.apply({1, 0}) == q3.projection.apply({0, 1}));
  CHECK(q3.projection * q3.section == Matrix::identity(2, 1));

  std::mt19937_64 rng(11);
  for (Coeff p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = 1 + rng() % 5;
      std::vector<Vec> gens(rng() % (n + 1), Vec(n));
      for (auto& g : gens)
        for (auto& x : g) x = static_cast<Coeff>(rng() % p);
      auto k = Subspace::span(p, n, gens);
      auto q = quotient_with_section(n, k);
      CHECK(q.quotient_dim() == n - k.dim());
      CHECK(q.projection * q.section == Matrix::identity(p, q.quotient_dim()));
      CHECK(kernel(q.projection) == k);
    }
  }
}

TEST_CASE("subspace intersection and sum") {
  auto u = Subspace::span(2, 3, {{1, 0, 0}, {0, 1, 0}});
  auto w = Subspace::span(2, 3, {{0, 1, 0}, {0, 0, 1}});
  CHECK(u.intersect(w) == Subspace::span(2, 3, {{0, 1, 0}}));
  CHECK(u.sum(w).dim() == 3);
  CHECK(u.coordinates({1, 1, 0}) == Vec{1, 1});
  CHECK_THROWS(u.coordinates({0, 0, 1}));
}

TEST_CASE("scalar arithmetic") {
  for (Coeff p : {2u, 3u, 5u, 7u})
    for (Coeff a = 0; a < p; ++a) CHECK(FpScalar(a, p).pow(p) == FpScalar(a, p));
  CHECK((FpScalar(2, 5) / FpScalar(3, 5)).value() == 4);
  CHECK_THROWS(FpScalar(1, 4));
  CHECK_THROWS(FpScalar(1, 5) / FpScalar(0, 5));
  CHECK((FpScalar(-1, 3)).value() == 2);
}

TEST_CASE("matrix power and solve_affine") {
  auto m = Matrix::from_rows(2, 2, {{1, 1}, {0, 1}});
  CHECK(m.pow(2) == Matrix::identity(2, 2));
  auto sol = solve_affine(3, 2, 2, [](const Vec& x) {
    PrimeField f(3);
    return Vec{f.add(x[0], 1), f.add(x[1], x[0])};
  });
  REQUIRE(sol.particular);
  CHECK(*sol.particular == Vec{2, 1});
}
