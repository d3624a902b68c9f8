#include "rlie/derivations.hpp"

#include <stdexcept>

namespace rlie {

Subspace DerivationSpace::as_subspace() const {
  std::vector<Vec> flat;
  for (const auto& m : basis) flat.push_back(m.flatten());
  return Subspace::span(modulus, rows * cols, flat);
}

namespace {

std::vector<Matrix> leibniz_solutions(const RestrictedLieAlgebra& g, const std::vector<Matrix>& rho,
                                      std::size_t module_dim) {
  const std::size_t n = g.dim();
  const Coeff p = g.modulus();
  const PrimeField f(p);
  return solve_homogeneous_matrices(p, module_dim, n, [&](const Matrix& d) {
    Vec out;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const Vec lhs = d.apply(g.basis_bracket(i, j));
        const Vec rhs = f.sub(rho[i].apply(d.column(j)), rho[j].apply(d.column(i)));
        const Vec diff = f.sub(lhs, rhs);
        out.insert(out.end(), diff.begin(), diff.end());
      }
    return out;
  });
}

// Intersects span(candidates) with the solutions of condition(d, x) = 0 for all x.
// condition must be linear in d for fixed x.
std::vector<Matrix> impose_element_conditions(const RestrictedLieAlgebra& g, const std::vector<Matrix>& candidates,
                                              const std::function<Vec(const Matrix&, const Vec&)>& condition,
                                              const CheckOptions& opts, bool& sampled) {
  const Coeff p = g.modulus();
  const PrimeField f(p);
  const std::size_t k = candidates.size();
  if (k == 0) {
    sampled = false;
    return {};
  }
  std::vector<Vec> rows;
  sampled = for_each_element(p, g.dim(), opts, [&](const Vec& x) {
    std::vector<Vec> cols;
    for (const auto& d : candidates) cols.push_back(condition(d, x));
    for (std::size_t r = 0; r < cols.front().size(); ++r) {
      Vec row(k);
      for (std::size_t c = 0; c < k; ++c) row[c] = cols[c][r];
      if (!PrimeField::is_zero(row)) rows.push_back(std::move(row));
    }
    // Keep the system small: rows only ever add independent constraints.
    if (rows.size() > 4 * k) rows = Subspace::span(p, k, rows).basis();
    return true;
  });
  const Matrix system = rows.empty() ? Matrix::zero(p, 1, k) : Matrix::from_rows(p, k, rows);
  std::vector<Matrix> out;
  const Subspace combos = kernel(system);
  for (const auto& c : combos.basis()) {
    Matrix d = Matrix::zero(p, candidates.front().rows(), candidates.front().cols());
    for (std::size_t j = 0; j < k; ++j)
      if (c[j] != 0) d = d + candidates[j].scaled(c[j]);
    out.push_back(std::move(d));
  }
  return out;
}

Vec beck_condition(const RestrictedLieAlgebra& g, const Matrix& pi, const BeckModule& b, const Matrix& d,
                   const Vec& x) {
  const PrimeField f(g.modulus());
  const Vec dx = d.apply(x);
  const Vec lhs = d.apply(g.p_power(x));
  const Vec rhs = f.add(b.module.act(pi.apply(x)).pow(g.modulus() - 1).apply(dx), b.f.apply(dx));
  return f.sub(lhs, rhs);
}

}  // namespace

DerivationSpace der(const RestrictedModule& coefficients) {
  return {DerivationKind::ordinary, leibniz_solutions(coefficients.algebra, coefficients.action, coefficients.dim),
          false, coefficients.modulus(), coefficients.dim, coefficients.algebra.dim()};
}

DerivationSpace restricted_der(const RestrictedLieAlgebra& l, const CheckOptions& opts) {
  const auto ordinary = der(adjoint_module(l));
  const PrimeField f(l.modulus());
  DerivationSpace out{DerivationKind::restricted, {}, false, l.modulus(), l.dim(), l.dim()};
  out.basis = impose_element_conditions(
      l, ordinary.basis,
      [&](const Matrix& d, const Vec& x) {
        return f.sub(d.apply(l.p_power(x)), l.ad_power(x, l.modulus() - 1, d.apply(x)));
      },
      opts, out.sampled);
  return out;
}

DerivationSpace beck_der(const RestrictedLieAlgebra& g, const Matrix& pi, const BeckModule& b,
                         const CheckOptions& opts) {
  if (pi.rows() != b.algebra().dim() || pi.cols() != g.dim())
    throw std::invalid_argument("beck_der: structure map has wrong shape");
  const RestrictedModule pulled = pull_back_module(b.module, g, pi);
  const auto ordinary = leibniz_solutions(g, pulled.action, b.dim());
  DerivationSpace out{DerivationKind::beck, {}, false, g.modulus(), b.dim(), g.dim()};
  out.basis = impose_element_conditions(
      g, ordinary, [&](const Matrix& d, const Vec& x) { return beck_condition(g, pi, b, d, x); }, opts,
      out.sampled);
  return out;
}

bool is_beck_derivation(const RestrictedLieAlgebra& g, const Matrix& pi, const BeckModule& b, const Matrix& d,
                        const CheckOptions& opts) {
  const PrimeField f(g.modulus());
  const RestrictedModule pulled = pull_back_module(b.module, g, pi);
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      const Vec rhs = f.sub(pulled.action[i].apply(d.column(j)), pulled.action[j].apply(d.column(i)));
      if (d.apply(g.basis_bracket(i, j)) != rhs) return false;
    }
  bool ok = true;
  for_each_element(g.modulus(), g.dim(), opts, [&](const Vec& x) {
    ok = PrimeField::is_zero(beck_condition(g, pi, b, d, x));
    return ok;
  });
  return ok;
}

Matrix derivation_to_morphism(const Matrix& pi, const Matrix& d) { return pi.vstack(d); }

Matrix morphism_to_derivation(const Matrix& phi, const Matrix& pi) {
  if (phi.cols() != pi.cols() || phi.rows() < pi.rows())
    throw std::invalid_argument("morphism_to_derivation: shape mismatch");
  Matrix top(phi.modulus(), pi.rows(), phi.cols());
  Matrix bottom(phi.modulus(), phi.rows() - pi.rows(), phi.cols());
  for (std::size_t r = 0; r < phi.rows(); ++r)
    for (std::size_t c = 0; c < phi.cols(); ++c) {
      if (r < pi.rows())
        top.set(r, c, phi(r, c));
      else
        bottom.set(r - pi.rows(), c, phi(r, c));
    }
  if (top != pi) throw std::invalid_argument("morphism_to_derivation: map does not lie over the structure map");
  return bottom;
}

}  // namespace rlie
