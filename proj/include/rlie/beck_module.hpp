#pragma once

// Restricted modules and Beck modules (A, f) with f: A -> A^L.

#include <vector>

#include "rlie/algebra.hpp"

namespace rlie {

struct RestrictedModule {
  RestrictedLieAlgebra algebra;
  std::size_t dim = 0;
  std::vector<Matrix> action;  // action[i] = rho(e_i), dim x dim

  /// rho(x) for an arbitrary element x of the algebra.
  Matrix act(const Vec& x) const { return action_of(action, x, algebra.modulus(), dim); }
  Coeff modulus() const { return algebra.modulus(); }
};

/// Over F_p the p-semi-linear map f is just a matrix.
struct BeckModule {
  RestrictedModule module;
  Matrix f;

  std::size_t dim() const { return module.dim; }
  Coeff modulus() const { return module.modulus(); }
  const RestrictedLieAlgebra& algebra() const { return module.algebra; }
};

RestrictedModule trivial_module(const RestrictedLieAlgebra& l, std::size_t dim);
RestrictedModule adjoint_module(const RestrictedLieAlgebra& l);
BeckModule trivial_beck(const RestrictedLieAlgebra& l, std::size_t dim);
BeckModule zero_beck(const RestrictedLieAlgebra& l);
/// Restriction of scalars along a morphism pi: g -> L.
RestrictedModule pull_back_module(const RestrictedModule& a, const RestrictedLieAlgebra& g, const Matrix& pi);
BeckModule pull_back_beck(const BeckModule& b, const RestrictedLieAlgebra& g, const Matrix& pi);

/// rho([e_i,e_j]) = [rho e_i, rho e_j] and rho(x^[p]) = rho(x)^p (element-quantified).
Report verify_restricted_module(const RestrictedModule& a, const CheckOptions& opts = {});
/// Module axioms plus image(f) inside the invariants.
Report verify_beck(const BeckModule& b, const CheckOptions& opts = {});

Subspace invariants(const RestrictedModule& a);

/// L x_f A: bracket ([l,l'], l.a' - l'.a), p-map (l,a)^[p] = (l^[p], l^{p-1}.a + f(a)).
RestrictedLieAlgebra beck_semidirect(const BeckModule& b);

struct WHomSpace {
  std::vector<Matrix> basis;  // each dim(B2) x dim(B1)
  std::size_t dim() const { return basis.size(); }
};

/// L-equivariant alpha with f2 alpha = alpha f1.
WHomSpace hom_w(const BeckModule& b1, const BeckModule& b2);
bool is_w_hom(const BeckModule& b1, const BeckModule& b2, const Matrix& alpha);

}  // namespace rlie
