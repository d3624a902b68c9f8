#pragma once

// Crossed modules of restricted Lie algebras and the equivalent internal groupoids.

#include <vector>

#include "rlie/algebra.hpp"

namespace rlie {

struct CrossedModule {
  RestrictedLieAlgebra m;
  RestrictedLieAlgebra n;
  Matrix mu;                // n.dim() x m.dim()
  std::vector<Matrix> eta;  // eta[i]: action of the i-th basis vector of N on M
};

/// Component axioms, action by restricted derivations, mu(n.m) = [n, mu m] and mu(m).m' = [m, m'].
Report verify_crossed(const CrossedModule& x, const CheckOptions& opts = {});

/// Ideal I of L (a p-ideal) with the adjoint action.
CrossedModule ideal_crossed_module(const RestrictedLieAlgebra& l, const Subspace& ideal);

/// Internal groupoid (C, C0, s, t, e, theta). theta is a C x (C (+) C) matrix; only its
/// restriction to the pullback {(c1, c2) : t c1 = s c2} is meaningful.
struct InternalGroupoid {
  RestrictedLieAlgebra c;
  RestrictedLieAlgebra c0;
  Matrix s;  // c0 x c
  Matrix t;  // c0 x c
  Matrix e;  // c x c0
  Matrix theta;
};

/// The composable pairs as a subspace of C (+) C.
Subspace composable_pairs(const InternalGroupoid& g);
Report verify_groupoid(const InternalGroupoid& g, const CheckOptions& opts = {});

/// C = N x| M with coordinates (n, m); s(n,m) = n, t(n,m) = n + mu(m), e(n) = (n,0),
/// theta((n,m),(n + mu m, m')) = (n, m + m').
InternalGroupoid to_groupoid(const CrossedModule& x);
/// M = ker s, mu = t on M, eta(n)(m) = [e(n), m].
CrossedModule from_groupoid(const InternalGroupoid& g);

/// Checks that (phi_m, phi_n) is an isomorphism of crossed modules x -> y.
Report check_crossed_isomorphism(const CrossedModule& x, const CrossedModule& y, const Matrix& phi_m,
                                 const Matrix& phi_n, const CheckOptions& opts = {});

/// For g = to_groupoid(x): the map m -> (0, m), written in the basis of ker s that
/// from_groupoid(g) uses for its M.
Matrix round_trip_isomorphism(const CrossedModule& x, const InternalGroupoid& g);

}  // namespace rlie
