#include "rlie/two_fold.hpp"

#include <stdexcept>

namespace rlie {

namespace {

Vec concat(const Vec& a, const Vec& b) {
  Vec r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

bool same_beck(const BeckModule& a, const BeckModule& b) {
  return a.algebra().same_structure(b.algebra()) && a.dim() == b.dim() && a.module.action == b.module.action &&
         a.f == b.f;
}

void require_comparable(const TwoFoldExtension& x, const TwoFoldExtension& y, const char* where) {
  if (!same_beck(x.a, y.a) || !x.r.same_structure(y.r) || x.fixed_augmentation != y.fixed_augmentation)
    throw std::invalid_argument(std::string(where) + ": extensions of different (R, A) or variant");
  if (x.fixed_augmentation && (!x.n().same_structure(y.n()) || x.pi != y.pi))
    throw std::invalid_argument(std::string(where) + ": fixed variants over different augmentations");
}

// Bracket and p-map on basis vectors; enough for a linear map to be a restricted morphism.
bool preserves_on_basis(const RestrictedLieAlgebra& s, const RestrictedLieAlgebra& t, const Matrix& m) {
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (m.apply(s.basis_pmap(i)) != t.p_power(m.column(i))) return false;
    for (std::size_t j = i + 1; j < s.dim(); ++j)
      if (m.apply(s.basis_bracket(i, j)) != t.bracket(m.column(i), m.column(j))) return false;
  }
  return true;
}

bool intertwines(const TwoFoldExtension& x, const TwoFoldExtension& y, const TwoFoldMorphism& phi) {
  for (std::size_t i = 0; i < x.n().dim(); ++i)
    if (phi.f * x.crossed.eta[i] !=
        action_of(y.crossed.eta, phi.g.column(i), y.r.modulus(), y.m().dim()) * phi.f)
      return false;
  return true;
}

}  // namespace

BeckModule induced_beck_structure(const TwoFoldExtension& x) {
  const Coeff p = x.r.modulus();
  const RestrictedLieAlgebra& m = x.m();
  const std::size_t da = x.a.dim();
  if (x.iota.rows() != m.dim() || x.iota.cols() != da || rank(x.iota) != da)
    throw std::invalid_argument("induced_beck_structure: A -> M is not injective");
  const Subspace a_in_m = image(x.iota);
  for (const auto& v : a_in_m.basis())
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (!PrimeField::is_zero(m.bracket(v, m.unit(j))))
        throw std::invalid_argument("induced_beck_structure: A is not central in M");
  auto back = [&](const Vec& v) {
    const LinearSolution s = solve_linear(x.iota, v);
    if (!s.particular) throw std::invalid_argument("induced_beck_structure: value leaves A");
    return *s.particular;
  };
  RestrictedModule mod{x.r, da, {}};
  for (std::size_t k = 0; k < x.r.dim(); ++k) {
    const LinearSolution lift = solve_linear(x.pi, x.r.unit(k));
    if (!lift.particular) throw std::invalid_argument("induced_beck_structure: N -> R is not onto");
    const Matrix act = action_of(x.crossed.eta, *lift.particular, p, m.dim());
    mod.action.push_back(Matrix::of_linear_map(p, da, da, [&](const Vec& a) { return back(act.apply(x.iota.apply(a))); }));
  }
  const Matrix f = Matrix::of_linear_map(p, da, da, [&](const Vec& a) { return back(m.p_power(x.iota.apply(a))); });
  return {std::move(mod), f};
}

Report verify_two_fold(const TwoFoldExtension& x, const CheckOptions& opts) {
  Report rep;
  const Coeff p = x.r.modulus();
  const std::size_t da = x.a.dim();
  if (x.iota.rows() != x.m().dim() || x.iota.cols() != da || x.pi.rows() != x.r.dim() || x.pi.cols() != x.n().dim())
    throw std::invalid_argument("two-fold extension: maps have wrong shapes");
  rep.merge(verify_crossed(x.crossed, opts), "crossed ");
  rep.merge(verify_restricted(x.r, opts), "R ");
  rep.merge(verify_beck(x.a, opts), "A ");
  rep.merge(check_restricted_morphism({abelian(p, x.a.f), x.m(), x.iota}, opts), "A->M ");
  rep.merge(check_restricted_morphism({x.n(), x.r, x.pi}, opts), "N->R ");
  rep.add("A -> M injective", rank(x.iota) == da);
  rep.add("exact at M", image(x.iota) == kernel(x.crossed.mu));
  rep.add("exact at N", image(x.crossed.mu) == kernel(x.pi));
  rep.add("N -> R onto", rank(x.pi) == x.r.dim());
  bool induced = false;
  std::string detail;
  try {
    const BeckModule b = induced_beck_structure(x);
    induced = b.module.action == x.a.module.action && b.f == x.a.f;
    if (!induced) detail = "induced action or p-map on A differs";
  } catch (const std::invalid_argument& e) {
    detail = e.what();
  }
  rep.add("induced Beck structure equals declared", induced, detail);
  return rep;
}

TwoFoldExtension trivial_two_fold(const BeckModule& a) {
  const Coeff p = a.modulus();
  const RestrictedLieAlgebra& r = a.algebra();
  const std::size_t da = a.dim();
  CrossedModule x{abelian(p, a.f), r, Matrix::zero(p, r.dim(), da), a.module.action};
  return {a, std::move(x), Matrix::identity(p, da), r, Matrix::identity(p, r.dim()), false};
}

TwoFoldExtension trivial_two_fold_fixed(const RestrictedLieAlgebra& g, const Matrix& p_map, const BeckModule& a) {
  const Coeff p = g.modulus();
  const RestrictedLieAlgebra& r = a.algebra();
  if (p_map.rows() != r.dim() || p_map.cols() != g.dim() || rank(p_map) != r.dim())
    throw std::invalid_argument("trivial_two_fold_fixed: p must be an epimorphism onto the module's algebra");
  const Subspace ker = kernel(p_map);
  const Subalgebra nsub = subalgebra(g, ker);
  const std::size_t da = a.dim();
  const std::size_t dn = ker.dim();
  const RestrictedLieAlgebra m = direct_product(abelian(p, a.f), nsub.algebra);
  std::vector<Matrix> eta;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    const Matrix on_a = a.module.act(p_map.column(i));
    const Matrix on_n = Matrix::of_linear_map(p, dn, dn, [&](const Vec& v) {
      return ker.coordinates(g.bracket(g.unit(i), nsub.inclusion.apply(v)));
    });
    eta.push_back(on_a.direct_sum(on_n));
  }
  CrossedModule x{m, g, nsub.inclusion * product_projection(da, dn, p, 2), std::move(eta)};
  return {a, std::move(x), product_inclusion(da, dn, p, 1), r, p_map, true};
}

Report check_two_fold_morphism(const TwoFoldExtension& x, const TwoFoldExtension& y, const TwoFoldMorphism& phi,
                               const CheckOptions& opts) {
  require_comparable(x, y, "check_two_fold_morphism");
  Report rep;
  if (phi.f.rows() != y.m().dim() || phi.f.cols() != x.m().dim() || phi.g.rows() != y.n().dim() ||
      phi.g.cols() != x.n().dim()) {
    rep.add("shapes", false, "f or g has the wrong size");
    return rep;
  }
  rep.merge(check_restricted_morphism({x.m(), y.m(), phi.f}, opts), "f ");
  rep.merge(check_restricted_morphism({x.n(), y.n(), phi.g}, opts), "g ");
  rep.add("f iota = iota'", phi.f * x.iota == y.iota);
  rep.add("mu' f = g mu", y.crossed.mu * phi.f == phi.g * x.crossed.mu);
  rep.add("pi' g = pi", y.pi * phi.g == x.pi);
  rep.add("f(n.m) = g(n).f(m)", intertwines(x, y, phi));
  if (x.fixed_augmentation) rep.add("g = id", phi.g == Matrix::identity(x.r.modulus(), x.n().dim()));
  return rep;
}

TwoFoldExtension baer_sum_2(const TwoFoldExtension& x, const TwoFoldExtension& y, const CheckOptions& opts) {
  require_comparable(x, y, "baer_sum_2");
  if (x.fixed_augmentation) throw std::invalid_argument("baer_sum_2: defined on extensions with free augmentation");
  const Coeff p = x.r.modulus();
  const PrimeField fld(p);
  const std::size_t da = x.a.dim();
  const std::size_t dm1 = x.m().dim();
  const std::size_t dm2 = y.m().dim();

  const Pullback nn = pullback({x.n(), x.r, x.pi}, {y.n(), y.r, y.pi});
  const Matrix nn_into = nn.proj1.vstack(nn.proj2);
  auto nn_coords = [&](const Vec& v) {
    const LinearSolution s = solve_linear(nn_into, v);
    if (!s.particular) throw std::logic_error("baer_sum_2: element outside N x_R N'");
    return *s.particular;
  };

  const RestrictedLieAlgebra mm = direct_product(x.m(), y.m());
  std::vector<Vec> anti;
  for (std::size_t k = 0; k < da; ++k) {
    const Vec a = fld.unit(da, k);
    anti.push_back(concat(x.iota.apply(a), fld.neg(y.iota.apply(a))));
  }
  const Quotient q = quotient_algebra(mm, Subspace::span(p, dm1 + dm2, anti));
  const std::size_t dq = q.algebra.dim();
  const Matrix mu_prod = x.crossed.mu.direct_sum(y.crossed.mu);

  CrossedModule c;
  c.m = q.algebra;
  c.n = nn.algebra;
  c.mu = Matrix::of_linear_map(p, dq, nn.algebra.dim(),
                               [&](const Vec& v) { return nn_coords(mu_prod.apply(q.maps.section.apply(v))); });
  for (std::size_t j = 0; j < nn.algebra.dim(); ++j) {
    const Matrix act = action_of(x.crossed.eta, nn.proj1.column(j), p, dm1)
                           .direct_sum(action_of(y.crossed.eta, nn.proj2.column(j), p, dm2));
    c.eta.push_back(q.maps.projection * act * q.maps.section);
  }
  TwoFoldExtension out{x.a, std::move(c), q.maps.projection * product_inclusion(dm1, dm2, p, 1) * x.iota, x.r,
                       x.pi * nn.proj1, false};
  const Report rep = verify_two_fold(out, opts);
  if (!rep.passed()) throw std::logic_error("baer_sum_2: result fails verification (" + rep.failures() + ")");
  return out;
}

MorphismSearch find_two_fold_morphism(const TwoFoldExtension& x, const TwoFoldExtension& y, const CheckOptions& opts) {
  require_comparable(x, y, "find_two_fold_morphism");
  const Coeff p = x.r.modulus();
  const PrimeField fld(p);
  const std::size_t fm_r = y.m().dim(), fm_c = x.m().dim();
  const std::size_t gn_r = y.n().dim(), gn_c = x.n().dim();
  const std::size_t nf = fm_r * fm_c;
  const std::size_t unknowns = nf + gn_r * gn_c;
  auto split = [&](const Vec& v) {
    return TwoFoldMorphism{Matrix::unflatten(p, fm_r, fm_c, Vec(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(nf))),
                           Matrix::unflatten(p, gn_r, gn_c, Vec(v.begin() + static_cast<std::ptrdiff_t>(nf), v.end()))};
  };
  auto linear_part = [&](const Vec& v) {
    const TwoFoldMorphism phi = split(v);
    Vec out = (phi.f * x.iota - y.iota).flatten();
    auto append = [&](const Matrix& m) { out.insert(out.end(), m.flatten().begin(), m.flatten().end()); };
    append(y.crossed.mu * phi.f - phi.g * x.crossed.mu);
    append(y.pi * phi.g - x.pi);
    if (x.fixed_augmentation) append(phi.g - Matrix::identity(p, gn_c));
    return out;
  };
  const std::size_t equations = linear_part(Vec(unknowns, 0)).size();
  const LinearSolution sol = solve_affine(p, unknowns, equations, linear_part);

  MorphismSearch res;
  if (!sol.particular) return res;
  const std::vector<Vec>& dirs = sol.kernel.basis();
  if (count_vectors(p, dirs.size()) > opts.search_limit) {
    res.exhausted = false;
    return res;
  }
  for_each_vector(p, dirs.size(), [&](const Vec& coeffs) {
    Vec v = *sol.particular;
    for (std::size_t k = 0; k < dirs.size(); ++k) fld.axpy(v, coeffs[k], dirs[k]);
    ++res.candidates;
    const TwoFoldMorphism phi = split(v);
    if (!preserves_on_basis(x.m(), y.m(), phi.f) || !preserves_on_basis(x.n(), y.n(), phi.g) ||
        !intertwines(x, y, phi))
      return true;
    if (!check_two_fold_morphism(x, y, phi, opts).passed()) return true;
    res.found = phi;
    return false;
  });
  return res;
}

Equivalence2 is_equivalent_2(const TwoFoldExtension& x, const TwoFoldExtension& y, std::size_t max_zigzag,
                             const CheckOptions& opts) {
  Equivalence2 out;
  const MorphismSearch fwd = find_two_fold_morphism(x, y, opts);
  out.forward = fwd.found;
  const MorphismSearch bwd = find_two_fold_morphism(y, x, opts);
  out.backward = bwd.found;
  out.equivalent = out.forward.has_value() || out.backward.has_value();
  if (out.equivalent) {
    out.note = out.forward ? "morphism x -> y" : "morphism y -> x";
  } else if (!fwd.exhausted || !bwd.exhausted) {
    out.undetermined = true;
    out.note = "candidate space above the search limit";
  } else if (max_zigzag > 1) {
    out.undetermined = true;
    out.note = "no single morphism; longer zigzags not searched";
  } else {
    out.note = "no single morphism in either direction (search exhausted)";
  }
  return out;
}

}  // namespace rlie
