#include "rlie/crossed.hpp"

#include <stdexcept>

namespace rlie {

namespace {

Vec concat(const Vec& a, const Vec& b) {
  Vec r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Vec slice(const Vec& v, std::size_t from, std::size_t len) {
  return Vec(v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(from + len));
}

}  // namespace

Report verify_crossed(const CrossedModule& x, const CheckOptions& opts) {
  Report rep;
  const Coeff p = x.n.modulus();
  const PrimeField f(p);
  if (x.mu.rows() != x.n.dim() || x.mu.cols() != x.m.dim() || x.eta.size() != x.n.dim())
    throw std::invalid_argument("crossed module: mu/eta shapes do not match M and N");
  rep.merge(verify_restricted(x.m, opts), "M ");
  rep.merge(verify_restricted(x.n, opts), "N ");
  rep.merge(check_restricted_morphism({x.m, x.n, x.mu}, opts), "mu ");
  rep.merge(check_action_by_derivations(x.n, x.m, x.eta, opts), "eta ");

  std::string bad;
  for (std::size_t i = 0; i < x.n.dim() && bad.empty(); ++i)
    for (std::size_t j = 0; j < x.m.dim() && bad.empty(); ++j)
      if (x.mu.apply(x.eta[i].column(j)) != x.n.bracket(x.n.unit(i), x.mu.column(j)))
        bad = "at (" + x.n.labels()[i] + "," + x.m.labels()[j] + ")";
  rep.add("equivariance mu(n.m) = [n, mu(m)]", bad.empty(), bad);

  bad.clear();
  for (std::size_t i = 0; i < x.m.dim() && bad.empty(); ++i) {
    const Matrix act = action_of(x.eta, x.mu.column(i), p, x.m.dim());
    for (std::size_t j = 0; j < x.m.dim() && bad.empty(); ++j)
      if (act.column(j) != x.m.basis_bracket(i, j)) bad = "at (" + x.m.labels()[i] + "," + x.m.labels()[j] + ")";
  }
  rep.add("Peiffer identity mu(m).m' = [m, m']", bad.empty(), bad);
  return rep;
}

CrossedModule ideal_crossed_module(const RestrictedLieAlgebra& l, const Subspace& ideal) {
  if (!is_p_ideal(l, ideal)) throw std::invalid_argument("ideal_crossed_module: not a p-ideal");
  Subalgebra sub = subalgebra(l, ideal);
  std::vector<Matrix> eta;
  for (std::size_t i = 0; i < l.dim(); ++i)
    eta.push_back(Matrix::of_linear_map(l.modulus(), ideal.dim(), ideal.dim(), [&](const Vec& m) {
      return ideal.coordinates(l.bracket(l.unit(i), sub.inclusion.apply(m)));
    }));
  return {sub.algebra, l, sub.inclusion, std::move(eta)};
}

Subspace composable_pairs(const InternalGroupoid& g) {
  // t c1 - s c2 = 0
  const Coeff p = g.c.modulus();
  return kernel(g.t.hstack(g.s.scaled(p - 1)));
}

Report verify_groupoid(const InternalGroupoid& g, const CheckOptions& opts) {
  Report rep;
  const Coeff p = g.c.modulus();
  const PrimeField f(p);
  const std::size_t dc = g.c.dim();
  const std::size_t d0 = g.c0.dim();
  if (g.s.rows() != d0 || g.s.cols() != dc || g.t.rows() != d0 || g.t.cols() != dc || g.e.rows() != dc ||
      g.e.cols() != d0 || g.theta.rows() != dc || g.theta.cols() != 2 * dc)
    throw std::invalid_argument("groupoid: structure maps have wrong shapes");

  rep.merge(verify_restricted(g.c, opts), "C ");
  rep.merge(verify_restricted(g.c0, opts), "C0 ");
  rep.merge(check_restricted_morphism({g.c, g.c0, g.s}, opts), "s ");
  rep.merge(check_restricted_morphism({g.c, g.c0, g.t}, opts), "t ");
  rep.merge(check_restricted_morphism({g.c0, g.c, g.e}, opts), "e ");
  const Matrix id0 = Matrix::identity(p, d0);
  rep.add("se = te = id", g.s * g.e == id0 && g.t * g.e == id0);

  const Subspace pairs = composable_pairs(g);
  try {
    const Subalgebra pb = subalgebra(direct_product(g.c, g.c), pairs);
    rep.merge(check_restricted_morphism({pb.algebra, g.c, g.theta * pb.inclusion}, opts), "theta ");
  } catch (const std::invalid_argument&) {
    rep.add("composable pairs form a subalgebra", false);
  }

  auto compose = [&](const Vec& c1, const Vec& c2) { return g.theta.apply(concat(c1, c2)); };
  bool src_tgt = true;
  for (const auto& v : pairs.basis()) {
    const Vec c1 = slice(v, 0, dc);
    const Vec c2 = slice(v, dc, dc);
    const Vec comp = compose(c1, c2);
    src_tgt = src_tgt && g.s.apply(comp) == g.s.apply(c1) && g.t.apply(comp) == g.t.apply(c2);
  }
  rep.add("s(c1 c2) = s c1, t(c1 c2) = t c2", src_tgt);

  bool units = true;
  bool inverses = true;
  for (std::size_t i = 0; i < dc; ++i) {
    const Vec c = g.c.unit(i);
    const Vec es = g.e.apply(g.s.apply(c));
    const Vec et = g.e.apply(g.t.apply(c));
    units = units && compose(es, c) == c && compose(c, et) == c;
    const Vec inv = f.sub(f.add(es, et), c);
    inverses = inverses && g.s.apply(inv) == g.t.apply(c) && g.t.apply(inv) == g.s.apply(c) &&
               compose(c, inv) == es && compose(inv, c) == et;
  }
  rep.add("unit laws", units);
  rep.add("inverse c' = es(c) + et(c) - c", inverses);

  // Triples with t c1 = s c2 and t c2 = s c3.
  const Matrix zs = Matrix::zero(p, d0, dc);
  const Matrix row1 = g.t.hstack(g.s.scaled(p - 1)).hstack(zs);
  const Matrix row2 = zs.hstack(g.t).hstack(g.s.scaled(p - 1));
  const Subspace triples = kernel(row1.vstack(row2));
  bool assoc = true;
  for (const auto& v : triples.basis()) {
    const Vec c1 = slice(v, 0, dc);
    const Vec c2 = slice(v, dc, dc);
    const Vec c3 = slice(v, 2 * dc, dc);
    assoc = assoc && compose(compose(c1, c2), c3) == compose(c1, compose(c2, c3));
  }
  rep.add("associativity", assoc);
  return rep;
}

InternalGroupoid to_groupoid(const CrossedModule& x) {
  const Coeff p = x.n.modulus();
  const std::size_t dn = x.n.dim();
  const std::size_t dm = x.m.dim();
  const std::size_t dc = dn + dm;
  InternalGroupoid g;
  g.c = semidirect(x.n, x.m, x.eta);
  g.c0 = x.n;
  g.s = product_projection(dn, dm, p, 1);
  g.t = g.s + x.mu * product_projection(dn, dm, p, 2);
  g.e = product_inclusion(dn, dm, p, 1);
  // theta(c1, c2) = c1 + c2 - e s(c2), linear on all of C (+) C.
  const Matrix id = Matrix::identity(p, dc);
  g.theta = id.hstack(id - g.e * g.s);
  return g;
}

CrossedModule from_groupoid(const InternalGroupoid& g) {
  const Coeff p = g.c.modulus();
  const Subspace ker_s = kernel(g.s);
  const Subalgebra m = subalgebra(g.c, ker_s);
  CrossedModule x;
  x.m = m.algebra;
  x.n = g.c0;
  x.mu = g.t * m.inclusion;
  for (std::size_t i = 0; i < g.c0.dim(); ++i) {
    const Vec en = g.e.column(i);
    x.eta.push_back(Matrix::of_linear_map(p, ker_s.dim(), ker_s.dim(), [&](const Vec& v) {
      return ker_s.coordinates(g.c.bracket(en, m.inclusion.apply(v)));
    }));
  }
  return x;
}

Report check_crossed_isomorphism(const CrossedModule& x, const CrossedModule& y, const Matrix& phi_m,
                                 const Matrix& phi_n, const CheckOptions& opts) {
  Report rep;
  rep.add("bijective", x.m.dim() == y.m.dim() && x.n.dim() == y.n.dim() && rank(phi_m) == x.m.dim() &&
                           rank(phi_n) == x.n.dim());
  rep.merge(check_restricted_morphism({x.m, y.m, phi_m}, opts), "M-map ");
  rep.merge(check_restricted_morphism({x.n, y.n, phi_n}, opts), "N-map ");
  rep.add("commutes with mu", phi_n * x.mu == y.mu * phi_m);
  bool eq = true;
  for (std::size_t i = 0; i < x.n.dim(); ++i)
    eq = eq && phi_m * x.eta[i] == action_of(y.eta, phi_n.column(i), y.n.modulus(), y.m.dim()) * phi_m;
  rep.add("commutes with the actions", eq);
  return rep;
}

Matrix round_trip_isomorphism(const CrossedModule& x, const InternalGroupoid& g) {
  const Subspace ker_s = kernel(g.s);
  const std::size_t dn = x.n.dim();
  return Matrix::of_linear_map(x.n.modulus(), x.m.dim(), ker_s.dim(), [&](const Vec& m) {
    Vec c(dn, 0);
    c.insert(c.end(), m.begin(), m.end());
    return ker_s.coordinates(c);
  });
}

}  // namespace rlie
