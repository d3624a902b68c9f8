#pragma once

#include <vector>

#include "rlie/beck_module.hpp"

namespace rlie {

enum class DerivationKind { ordinary, restricted, beck };

struct DerivationSpace {
  DerivationKind kind = DerivationKind::ordinary;
  std::vector<Matrix> basis;  // each dim(A) x dim(g)
  bool sampled = false;       // element conditions were only imposed on a sample
  Coeff modulus = 2;
  std::size_t rows = 0;  // dim(A)
  std::size_t cols = 0;  // dim(g)

  std::size_t dim() const { return basis.size(); }
  Subspace as_subspace() const;
};

/// Linear d: L -> A with d[x,y] = x.d(y) - y.d(x).
DerivationSpace der(const RestrictedModule& coefficients);
/// Derivations D of L with D(x^[p]) = ad^{p-1}(x)(D x) for all x.
DerivationSpace restricted_der(const RestrictedLieAlgebra& l, const CheckOptions& opts = {});
/// d: g -> A with Leibniz through pi and d(x^[p]) = x^{p-1}.d(x) + f(d(x)) for all x in g.
DerivationSpace beck_der(const RestrictedLieAlgebra& g, const Matrix& pi, const BeckModule& b,
                         const CheckOptions& opts = {});

bool is_beck_derivation(const RestrictedLieAlgebra& g, const Matrix& pi, const BeckModule& b, const Matrix& d,
                        const CheckOptions& opts = {});

/// Sections over L into L x_f A versus Beck derivations: x -> (pi(x), d(x)) and back.
Matrix derivation_to_morphism(const Matrix& pi, const Matrix& d);
/// Throws std::invalid_argument if phi does not lie over pi.
Matrix morphism_to_derivation(const Matrix& phi, const Matrix& pi);

}  // namespace rlie
