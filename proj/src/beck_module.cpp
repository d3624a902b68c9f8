#include "rlie/beck_module.hpp"

#include <stdexcept>

namespace rlie {

RestrictedModule trivial_module(const RestrictedLieAlgebra& l, std::size_t dim) {
  return {l, dim, std::vector<Matrix>(l.dim(), Matrix::zero(l.modulus(), dim, dim))};
}

RestrictedModule adjoint_module(const RestrictedLieAlgebra& l) {
  // x.v = [x, v]
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < l.dim(); ++i)
    action.push_back(Matrix::of_linear_map(l.modulus(), l.dim(), l.dim(),
                                           [&](const Vec& v) { return l.bracket(l.unit(i), v); }));
  return {l, l.dim(), std::move(action)};
}

BeckModule trivial_beck(const RestrictedLieAlgebra& l, std::size_t dim) {
  return {trivial_module(l, dim), Matrix::zero(l.modulus(), dim, dim)};
}

BeckModule zero_beck(const RestrictedLieAlgebra& l) { return trivial_beck(l, 0); }

RestrictedModule pull_back_module(const RestrictedModule& a, const RestrictedLieAlgebra& g, const Matrix& pi) {
  if (pi.rows() != a.algebra.dim() || pi.cols() != g.dim())
    throw std::invalid_argument("pull_back_module: map has wrong shape");
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < g.dim(); ++i) action.push_back(a.act(pi.column(i)));
  return {g, a.dim, std::move(action)};
}

BeckModule pull_back_beck(const BeckModule& b, const RestrictedLieAlgebra& g, const Matrix& pi) {
  return {pull_back_module(b.module, g, pi), b.f};
}

Report verify_restricted_module(const RestrictedModule& a, const CheckOptions& opts) {
  Report rep;
  const auto& l = a.algebra;
  const Coeff p = l.modulus();
  if (a.action.size() != l.dim()) throw std::invalid_argument("module needs one action matrix per basis vector");
  for (const auto& m : a.action)
    if (m.rows() != a.dim || m.cols() != a.dim) throw std::invalid_argument("action matrix has wrong size");

  std::string bad;
  for (std::size_t i = 0; i < l.dim() && bad.empty(); ++i)
    for (std::size_t j = i + 1; j < l.dim() && bad.empty(); ++j)
      if (a.act(l.basis_bracket(i, j)) != a.action[i] * a.action[j] - a.action[j] * a.action[i])
        bad = "at (" + l.labels()[i] + "," + l.labels()[j] + ")";
  rep.add("module bracket", bad.empty(), bad);

  bad.clear();
  const bool sampled = for_each_element(p, l.dim(), opts, [&](const Vec& x) {
    if (a.act(l.p_power(x)) != a.act(x).pow(p)) {
      bad = "rho(x^[p]) != rho(x)^p";
      return false;
    }
    return true;
  });
  rep.add("module restricted", bad.empty(), bad);
  if (sampled) rep.mark_sampled();
  return rep;
}

Subspace invariants(const RestrictedModule& a) {
  Matrix stacked(a.modulus(), 0, a.dim);
  for (const auto& m : a.action) stacked = stacked.vstack(m);
  return kernel(stacked);
}

Report verify_beck(const BeckModule& b, const CheckOptions& opts) {
  Report rep = verify_restricted_module(b.module, opts);
  if (b.f.rows() != b.dim() || b.f.cols() != b.dim()) throw std::invalid_argument("f has wrong size");
  const Subspace inv = invariants(b.module);
  const bool ok = inv.contains(image(b.f));
  rep.add("f lands in invariants", ok, ok ? "" : "some l.f(a) != 0");
  return rep;
}

RestrictedLieAlgebra beck_semidirect(const BeckModule& b) {
  return semidirect(b.algebra(), abelian(b.modulus(), b.f), b.module.action);
}

bool is_w_hom(const BeckModule& b1, const BeckModule& b2, const Matrix& alpha) {
  for (std::size_t i = 0; i < b1.algebra().dim(); ++i)
    if (alpha * b1.module.action[i] != b2.module.action[i] * alpha) return false;
  return alpha * b1.f == b2.f * alpha;
}

WHomSpace hom_w(const BeckModule& b1, const BeckModule& b2) {
  if (b1.algebra().dim() != b2.algebra().dim() || b1.modulus() != b2.modulus())
    throw std::invalid_argument("hom_w: modules over different algebras");
  const std::size_t n = b1.algebra().dim();
  auto constraint = [&](const Matrix& alpha) {
    Vec out;
    auto append = [&](const Matrix& m) { out.insert(out.end(), m.flatten().begin(), m.flatten().end()); };
    for (std::size_t i = 0; i < n; ++i) append(alpha * b1.module.action[i] - b2.module.action[i] * alpha);
    append(alpha * b1.f - b2.f * alpha);
    return out;
  };
  return {solve_homogeneous_matrices(b1.modulus(), b2.dim(), b1.dim(), constraint)};
}

}  // namespace rlie
