#pragma once

// Independent reference computations used by the tests. They avoid the
// library's own recursion so agreement is meaningful.

#include <vector>

#include "rlie/algebra.hpp"

namespace oracle {

using rlie::Coeff;
using rlie::Vec;

/// s_1..s_{p-1} by evaluating ad^{p-1}_{t x + y}(x) at t = 0..p-1 and
/// Lagrange-interpolating the coefficients of the degree <= p-1 polynomial.
inline std::vector<Vec> s_by_interpolation(const rlie::RestrictedLieAlgebra& l, const Vec& x, const Vec& y) {
  const Coeff p = l.modulus();
  const rlie::PrimeField f(p);
  const std::size_t n = l.dim();
  std::vector<Vec> values;
  for (Coeff t = 0; t < p; ++t) {
    Vec z = f.add(f.scale(t, x), y);
    Vec v = x;
    for (Coeff k = 0; k + 1 < p; ++k) v = l.bracket(v, z);
    values.push_back(v);
  }
  // Coefficients of prod_{m != t} (X - m) / (t - m), accumulated per node.
  std::vector<Vec> coeffs(p, Vec(n, 0));
  for (Coeff t = 0; t < p; ++t) {
    std::vector<Coeff> poly{1};
    Coeff denom = 1;
    for (Coeff m = 0; m < p; ++m) {
      if (m == t) continue;
      std::vector<Coeff> next(poly.size() + 1, 0);
      for (std::size_t k = 0; k < poly.size(); ++k) {
        next[k + 1] = f.add(next[k + 1], poly[k]);
        next[k] = f.sub(next[k], f.mul(m, poly[k]));
      }
      poly = next;
      denom = f.mul(denom, f.sub(t, m));
    }
    const Coeff scale = f.inv(denom);
    for (std::size_t k = 0; k < poly.size() && k < p; ++k) f.axpy(coeffs[k], f.mul(scale, poly[k]), values[t]);
  }
  std::vector<Vec> s;
  for (Coeff i = 1; i < p; ++i) s.push_back(f.scale(f.inv(i), coeffs[i - 1]));
  return s;
}

/// Number of linear maps d on L with d[x,y] = [dx,y] + [x,dy], by brute force over all matrices.
inline std::size_t count_derivations_brute(const rlie::RestrictedLieAlgebra& l) {
  const std::size_t n = l.dim();
  const Coeff p = l.modulus();
  const rlie::PrimeField f(p);
  std::size_t count = 0;
  rlie::for_each_vector(p, n * n, [&](const Vec& flat) {
    const rlie::Matrix d = rlie::Matrix::unflatten(p, n, n, flat);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Vec lhs = d.apply(l.basis_bracket(i, j));
        const Vec rhs = f.add(l.bracket(d.column(i), l.unit(j)), l.bracket(l.unit(i), d.column(j)));
        if (lhs != rhs) return true;
      }
    ++count;
    return true;
  });
  return count;
}

}  // namespace oracle
