#include "doctest.h"
#include "fixtures.hpp"

using namespace rlie;

TEST_CASE("crossed module verification") {
  for (const auto& ex : fixtures::crossed_examples()) {
    INFO(ex.name);
    CHECK(verify_crossed(ex.x).passed());
  }
  // mu = 0 with the adjoint action on Heisenberg breaks the Peiffer identity.
  auto h = heisenberg(2);
  auto full = ideal_crossed_module(h, Subspace::full(2, 3));
  full.mu = Matrix::zero(2, 3, 3);
  auto rep = verify_crossed(full);
  CHECK_FALSE(rep.passed());
  CHECK(rep.failures().find("Peiffer") != std::string::npos);
}

TEST_CASE("groupoid round trip") {
  for (const auto& ex : fixtures::crossed_examples()) {
    INFO(ex.name);
    const auto g = to_groupoid(ex.x);
    CHECK(g.c.dim() == ex.x.m.dim() + ex.x.n.dim());
    CHECK(verify_groupoid(g).passed());
    const auto back = from_groupoid(g);
    CHECK(verify_crossed(back).passed());
    const Matrix phi = round_trip_isomorphism(ex.x, g);
    CHECK(check_crossed_isomorphism(ex.x, back, phi, Matrix::identity(ex.x.n.modulus(), ex.x.n.dim())).passed());
    CHECK(back.mu * phi == ex.x.mu);

    // ker s meets ker t inside the center of ker s.
    const Subspace ker_s = kernel(g.s);
    const Subspace both = ker_s.intersect(kernel(g.t));
    for (const auto& v : both.basis())
      for (const auto& w : ker_s.basis()) CHECK(PrimeField::is_zero(g.c.bracket(v, w)));
  }
}

TEST_CASE("ker s and ker t need not meet in the center of C") {
  auto ex = fixtures::crossed_examples()[5];
  REQUIRE(ex.name == "module F_2^2 over F_2, mu = 0");
  auto g = to_groupoid(ex.x);
  const Subspace both = kernel(g.s).intersect(kernel(g.t));
  CHECK_FALSE(g.c.center().contains(both));
}

TEST_CASE("identity groupoid gives the zero crossed module") {
  auto h = heisenberg(2);
  const Matrix id = Matrix::identity(2, 3);
  InternalGroupoid g{h, h, id, id, id, id.hstack(Matrix::zero(2, 3, 3))};
  CHECK(verify_groupoid(g).passed());
  CHECK(from_groupoid(g).m.dim() == 0);

  auto zero = ideal_crossed_module(h, Subspace(2, 3));
  auto tg = to_groupoid(zero);
  CHECK(tg.c.same_structure(h));
  CHECK(tg.s == id);
}

TEST_CASE("theta preserves p-th powers of the generating composites") {
  auto ex = fixtures::crossed_examples()[0].x;
  auto g = to_groupoid(ex);
  const PrimeField f(2);
  const std::size_t dn = ex.n.dim();
  for (std::size_t j = 0; j < ex.m.dim(); ++j) {
    // ((0,m), (mu m, 0)) is composable; so is its p-th power in C x C.
    Vec c1(g.c.dim(), 0);
    c1[dn + j] = 1;
    Vec c2(g.c.dim(), 0);
    const Vec mu_m = ex.mu.column(j);
    for (std::size_t i = 0; i < dn; ++i) c2[i] = mu_m[i];
    const Vec pair_power = [&] {
      Vec a = g.c.p_power(c1);
      Vec b = g.c.p_power(c2);
      a.insert(a.end(), b.begin(), b.end());
      return a;
    }();
    Vec joined = c1;
    joined.insert(joined.end(), c2.begin(), c2.end());
    CHECK(composable_pairs(g).contains(joined));
    CHECK(g.theta.apply(pair_power) == g.c.p_power(g.theta.apply(joined)));
  }
}

TEST_CASE("fault injection flips groupoid verdicts") {
  for (const auto& ex : fixtures::crossed_examples()) {
    INFO(ex.name);
    auto g = to_groupoid(ex.x);
    if (g.c.dim() == 0) continue;
    auto bad = g;
    bad.theta.set(0, g.c.dim(), bad.theta(0, g.c.dim()) + 1);
    CHECK_FALSE(verify_groupoid(bad).passed());
  }
}
