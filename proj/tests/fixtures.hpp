#pragma once

// Shared example objects for the unit and acceptance tests.

#include <string>
#include <utility>
#include <vector>

#include "rlie/crossed.hpp"
#include "rlie/sequences.hpp"

namespace fixtures {

using namespace rlie;

inline RestrictedLieAlgebra heisenberg_quotient(Coeff p) {
  auto h = heisenberg(p);
  return quotient_algebra(h, Subspace::span(p, 3, {h.unit(2)})).algebra;
}

struct NamedCrossed {
  std::string name;
  CrossedModule x;
};

inline std::vector<NamedCrossed> crossed_examples() {
  std::vector<NamedCrossed> out;
  auto h2 = heisenberg(2);
  out.push_back({"center in heisenberg F_2", ideal_crossed_module(h2, Subspace::span(2, 3, {h2.unit(2)}))});
  out.push_back({"span{x,z} in heisenberg F_2", ideal_crossed_module(h2, Subspace::span(2, 3, {h2.unit(0), h2.unit(2)}))});
  auto gl23 = gl(2, 3);
  out.push_back({"sl_2 in gl_2 F_3", ideal_crossed_module(gl23, Subspace::span(3, 4, [] {
                                          std::vector<Vec> b{{0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 2}};
                                          return b;
                                        }()))});
  auto gl22 = gl(2, 2);
  out.push_back({"gl_2 F_2 onto itself", ideal_crossed_module(gl22, Subspace::full(2, 4))});
  auto h3 = heisenberg(3);
  out.push_back({"zero into heisenberg F_3", ideal_crossed_module(h3, Subspace(3, 3))});

  // Trivial-pmap plane with a nilpotent action of F_2 and mu = 0.
  auto line = abelian(2, Matrix::zero(2, 1, 1));
  auto plane = abelian(2, Matrix::zero(2, 2, 2));
  out.push_back({"module F_2^2 over F_2, mu = 0",
                 {plane, line, Matrix::zero(2, 1, 2), {Matrix::from_rows(2, 2, {{0, 1}, {0, 0}})}}});

  // Heisenberg F_2 onto its abelianization, acting through a lift.
  auto ab = heisenberg_quotient(2);
  std::vector<Matrix> eta;
  for (std::size_t i = 0; i < 2; ++i)
    eta.push_back(Matrix::of_linear_map(2, 3, 3, [&](const Vec& v) { return h2.bracket(h2.unit(i), v); }));
  out.push_back({"heisenberg F_2 onto F_2^2",
                 {h2, ab, Matrix::from_rows(2, 3, {{1, 0, 0}, {0, 1, 0}}), eta}});
  return out;
}

// gl_2 F_2 -> F_2 by the trace; kernel sl_2.
inline ShortExactSequence trace_sequence() {
  return sequence_from_epimorphism(gl(2, 2), abelian(2, Matrix::identity(2, 1), "t"),
                                   Matrix::from_rows(2, 4, {{1, 0, 0, 1}}));
}

// g = F_2^2 onto its first coordinate, N = span{e2}.
inline ShortExactSequence plane_sequence() {
  return sequence_from_epimorphism(abelian(2, Matrix::zero(2, 2, 2), "e"), abelian(2, Matrix::zero(2, 1, 1), "b"),
                                   Matrix::from_rows(2, 2, {{1, 0}}));
}

// g = b x N with b = F_p^2 abelian and N = F_p, split by the product section.
inline ShortExactSequence split_sequence(Coeff p) {
  const auto b = abelian(p, Matrix::zero(p, 2, 2), "e");
  const auto n = abelian(p, Matrix::zero(p, 1, 1), "n");
  const auto g = direct_product(b, n);
  return sequence_from_epimorphism(g, b, product_projection(2, 1, p, 1));
}

}  // namespace fixtures
