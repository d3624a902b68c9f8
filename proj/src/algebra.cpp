#include "rlie/algebra.hpp"

#include <stdexcept>

namespace rlie {

RestrictedLieAlgebra::RestrictedLieAlgebra(Coeff p, std::vector<std::string> labels, std::vector<Vec> table,
                                           std::vector<Vec> pmap)
    : p_(p), labels_(std::move(labels)), table_(std::move(table)), pmap_(std::move(pmap)) {
  PrimeField f(p);  // validates p
  const std::size_t n = labels_.size();
  if (table_.size() != n * n) throw std::invalid_argument("bracket table must have dim^2 entries");
  if (pmap_.size() != n) throw std::invalid_argument("p-map needs one image per basis vector");
  for (auto& v : table_) {
    if (v.size() != n) throw std::invalid_argument("bracket value has wrong length");
    for (auto& c : v) c %= p;
  }
  for (auto& v : pmap_) {
    if (v.size() != n) throw std::invalid_argument("p-map image has wrong length");
    for (auto& c : v) c %= p;
  }
}

RestrictedLieAlgebra RestrictedLieAlgebra::from_upper(
    Coeff p, std::vector<std::string> labels,
    const std::vector<std::pair<std::pair<std::size_t, std::size_t>, Vec>>& upper, std::vector<Vec> pmap) {
  const std::size_t n = labels.size();
  PrimeField f(p);
  std::vector<Vec> table(n * n, Vec(n, 0));
  for (const auto& [ij, v] : upper) {
    const auto [i, j] = ij;
    if (i >= n || j >= n || i == j) throw std::invalid_argument("bracket entry needs distinct indices below dim");
    if (v.size() != n) throw std::invalid_argument("bracket value has wrong length");
    Vec r(n);
    for (std::size_t k = 0; k < n; ++k) r[k] = f.reduce(v[k]);
    table[i * n + j] = r;
    table[j * n + i] = f.neg(r);
  }
  return {p, std::move(labels), std::move(table), std::move(pmap)};
}

RestrictedLieAlgebra RestrictedLieAlgebra::zero(Coeff p) { return {p, {}, {}, {}}; }

void RestrictedLieAlgebra::check_dim(const Vec& v) const {
  if (v.size() != dim()) throw std::invalid_argument("element does not belong to this algebra (length mismatch)");
}

Vec RestrictedLieAlgebra::bracket(const Vec& u, const Vec& v) const {
  check_dim(u);
  check_dim(v);
  const std::size_t n = dim();
  const PrimeField f = field();
  Vec out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j] == 0 || i == j) continue;
      f.axpy(out, f.mul(u[i], v[j]), table_[i * n + j]);
    }
  }
  return out;
}

Vec RestrictedLieAlgebra::ad_power(const Vec& y, std::size_t k, const Vec& x) const {
  check_dim(y);
  Vec r = x;
  check_dim(r);
  for (std::size_t i = 0; i < k; ++i) r = bracket(r, y);
  return r;
}

Matrix RestrictedLieAlgebra::ad_matrix(const Vec& y) const {
  return Matrix::of_linear_map(p_, dim(), dim(), [&](const Vec& v) { return bracket(v, y); });
}

LambdaPolynomial RestrictedLieAlgebra::lambda_expansion(const Vec& x, const Vec& y) const {
  check_dim(x);
  check_dim(y);
  const PrimeField f = field();
  std::vector<Vec> poly{x};
  for (Coeff step = 0; step + 1 < p_; ++step) {
    std::vector<Vec> next(poly.size() + 1, f.zero(dim()));
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k] = f.add(next[k], bracket(poly[k], y));
      next[k + 1] = f.add(next[k + 1], bracket(poly[k], x));
    }
    poly = std::move(next);
  }
  while (!poly.empty() && PrimeField::is_zero(poly.back())) poly.pop_back();
  return {std::move(poly)};
}

std::vector<Vec> RestrictedLieAlgebra::s_coefficients(const Vec& x, const Vec& y) const {
  const PrimeField f = field();
  const auto poly = lambda_expansion(x, y);
  std::vector<Vec> s;
  for (Coeff i = 1; i < p_; ++i) {
    const std::size_t k = i - 1;
    if (k < poly.coeffs.size())
      s.push_back(f.scale(f.inv(i), poly.coeffs[k]));
    else
      s.push_back(f.zero(dim()));
  }
  return s;
}

Vec RestrictedLieAlgebra::p_power_split(const Vec& a, const Vec& b) const {
  const PrimeField f = field();
  Vec r = f.add(p_power(a), p_power(b));
  // Skip the expansion when it is trivially zero.
  if (PrimeField::is_zero(a) || PrimeField::is_zero(b)) return r;
  for (const auto& s : s_coefficients(a, b)) r = f.add(r, s);
  return r;
}

Vec RestrictedLieAlgebra::p_power(const Vec& v) const {
  check_dim(v);
  const PrimeField f = field();
  std::size_t first = dim();
  std::size_t support = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (v[i] == 0) continue;
    if (first == dim()) first = i;
    ++support;
  }
  if (support == 0) return f.zero(dim());
  // (a e_i)^[p] = a^p e_i^[p] = a e_i^[p] over F_p.
  if (support == 1) return f.scale(f.pow(v[first], p_), pmap_[first]);
  Vec head = f.zero(dim());
  head[first] = v[first];
  Vec tail = v;
  tail[first] = 0;
  return p_power_split(head, tail);
}

bool RestrictedLieAlgebra::is_abelian() const {
  for (const auto& v : table_)
    if (!PrimeField::is_zero(v)) return false;
  return true;
}

Subspace RestrictedLieAlgebra::center() const {
  // z is central iff [z, e_j] = 0 for all j: stack the ad-maps.
  const std::size_t n = dim();
  Matrix stacked(p_, 0, n);
  for (std::size_t j = 0; j < n; ++j) stacked = stacked.vstack(ad_matrix(unit(j)));
  return kernel(stacked);
}

// ---------------------------------------------------------------------------

namespace {

std::string pair_name(const RestrictedLieAlgebra& l, std::size_t i, std::size_t j) {
  return "(" + l.labels()[i] + "," + l.labels()[j] + ")";
}

}  // namespace

Report verify_restricted(const RestrictedLieAlgebra& l, const CheckOptions& opts) {
  Report rep;
  const std::size_t n = l.dim();
  const PrimeField f = l.field();

  std::string bad;
  for (std::size_t i = 0; i < n && bad.empty(); ++i) {
    if (!PrimeField::is_zero(l.basis_bracket(i, i))) bad = "[" + l.labels()[i] + "," + l.labels()[i] + "] != 0";
    for (std::size_t j = i + 1; j < n && bad.empty(); ++j)
      if (l.basis_bracket(i, j) != f.neg(l.basis_bracket(j, i))) bad = "at " + pair_name(l, i, j);
  }
  rep.add("antisymmetry", bad.empty(), bad);

  bad.clear();
  for (std::size_t i = 0; i < n && bad.empty(); ++i)
    for (std::size_t j = i + 1; j < n && bad.empty(); ++j)
      for (std::size_t k = j + 1; k < n && bad.empty(); ++k) {
        const Vec a = l.bracket(l.basis_bracket(i, j), l.unit(k));
        const Vec b = l.bracket(l.basis_bracket(j, k), l.unit(i));
        const Vec c = l.bracket(l.basis_bracket(k, i), l.unit(j));
        if (!PrimeField::is_zero(f.add(f.add(a, b), c)))
          bad = "at (" + l.labels()[i] + "," + l.labels()[j] + "," + l.labels()[k] + ")";
      }
  rep.add("jacobi", bad.empty(), bad);

  bad.clear();
  for (std::size_t i = 0; i < n && bad.empty(); ++i)
    for (std::size_t j = 0; j < n && bad.empty(); ++j) {
      const Vec lhs = l.bracket(l.unit(i), l.basis_pmap(j));
      const Vec rhs = l.ad_power(l.unit(j), l.modulus(), l.unit(i));
      if (lhs != rhs) bad = "[x, y^[p]] != ad_y^p(x) at (x,y) = " + pair_name(l, i, j);
    }
  rep.add("p-map compatibility", bad.empty(), bad);

  // Only meaningful once the identities above hold.
  if (!rep.passed() || n == 0) return rep;

  // Both sides are linear in u, so basis u against every v covers all pairs.
  bad.clear();
  const bool sampled_v = for_each_element(l.modulus(), n, opts, [&](const Vec& v) {
    const Vec vp = l.p_power(v);
    for (std::size_t i = 0; i < n; ++i)
      if (l.bracket(l.unit(i), vp) != l.ad_power(v, l.modulus(), l.unit(i))) {
        bad = "[u, v^[p]] != ad_v^p(u) for u = " + l.labels()[i];
        return false;
      }
    return true;
  });
  rep.add("p-map compatibility on elements", bad.empty(), bad);
  if (sampled_v) rep.mark_sampled();

  // A check on the extension of the p-map from the basis, not on the input; the entry name says it is sampled.
  if (n >= 2) {
    bad.clear();
    VecSampler sampler(l.modulus(), opts.seed ^ 0x51u);
    for (std::size_t k = 0; k < opts.split_samples && bad.empty(); ++k) {
      const Vec a = sampler.next(n);
      const Vec b = sampler.next(n);
      const Vec direct = l.p_power(f.add(a, b));
      if (direct != l.p_power_split(a, b) || direct != l.p_power_split(b, a)) bad = "sample " + std::to_string(k);
    }
    rep.add("p-map split-order independence (" + std::to_string(opts.split_samples) + " random decompositions)",
            bad.empty(), bad);
  }
  return rep;
}

Report check_restricted_morphism(const RestrictedMorphism& phi, const CheckOptions& opts) {
  Report rep;
  const auto& src = phi.source;
  const auto& tgt = phi.target;
  if (phi.matrix.rows() != tgt.dim() || phi.matrix.cols() != src.dim() || src.modulus() != tgt.modulus())
    throw std::invalid_argument("morphism matrix does not match source/target dimensions");
  std::string bad;
  for (std::size_t i = 0; i < src.dim() && bad.empty(); ++i)
    for (std::size_t j = i + 1; j < src.dim() && bad.empty(); ++j) {
      if (phi(src.basis_bracket(i, j)) != tgt.bracket(phi(src.unit(i)), phi(src.unit(j))))
        bad = "at " + pair_name(src, i, j);
    }
  rep.add("bracket preserved", bad.empty(), bad);
  bad.clear();
  const bool sampled = for_each_element(src.modulus(), src.dim(), opts, [&](const Vec& v) {
    if (phi(src.p_power(v)) != tgt.p_power(phi(v))) {
      bad = "fails on an element";
      return false;
    }
    return true;
  });
  rep.add("p-map preserved", bad.empty(), bad);
  if (sampled) rep.mark_sampled();
  return rep;
}

bool is_restricted_morphism(const RestrictedMorphism& phi, const CheckOptions& opts) {
  return check_restricted_morphism(phi, opts).passed();
}

// ---------------------------------------------------------------------------

RestrictedLieAlgebra abelian(Coeff p, const Matrix& f, const std::string& prefix) {
  if (f.rows() != f.cols()) throw std::invalid_argument("abelian: p-map matrix must be square");
  const std::size_t n = f.rows();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i + 1));
  std::vector<Vec> pmap;
  for (std::size_t i = 0; i < n; ++i) pmap.push_back(f.column(i));
  return {p, std::move(labels), std::vector<Vec>(n * n, Vec(n, 0)), std::move(pmap)};
}

RestrictedLieAlgebra heisenberg(Coeff p) {
  return RestrictedLieAlgebra::from_upper(p, {"x", "y", "z"}, {{{0, 1}, {0, 0, 1}}}, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}});
}

RestrictedLieAlgebra matrix_algebra(Coeff p, std::size_t n, const std::vector<Matrix>& basis,
                                    std::vector<std::string> labels) {
  const std::size_t d = basis.size();
  std::vector<Vec> flat;
  for (const auto& m : basis) flat.push_back(m.flatten());
  const Matrix coords = Matrix::from_columns(p, n * n, flat);
  if (rank(coords) != d) throw std::invalid_argument("matrix_algebra: basis is not linearly independent");
  auto express = [&](const Matrix& m) {
    auto sol = solve_linear(coords, m.flatten());
    if (!sol.particular) throw std::invalid_argument("matrix_algebra: span not closed");
    return *sol.particular;
  };
  std::vector<Vec> table(d * d);
  std::vector<Vec> pmap;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) table[i * d + j] = express(basis[i] * basis[j] - basis[j] * basis[i]);
    pmap.push_back(express(basis[i].pow(p)));
  }
  return {p, std::move(labels), std::move(table), std::move(pmap)};
}

namespace {

Matrix elementary(Coeff p, std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(p, n, n);
  m.set(i, j, 1);
  return m;
}

std::string elementary_label(std::size_t i, std::size_t j) {
  return "e" + std::to_string(i + 1) + std::to_string(j + 1);
}

}  // namespace

RestrictedLieAlgebra gl(std::size_t n, Coeff p) {
  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      basis.push_back(elementary(p, n, i, j));
      labels.push_back(elementary_label(i, j));
    }
  return matrix_algebra(p, n, basis, std::move(labels));
}

RestrictedLieAlgebra sl(std::size_t n, Coeff p) {
  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      basis.push_back(elementary(p, n, i, j));
      labels.push_back(elementary_label(i, j));
    }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    basis.push_back(elementary(p, n, i, i) - elementary(p, n, i + 1, i + 1));
    labels.push_back("h" + std::to_string(i + 1));
  }
  return matrix_algebra(p, n, basis, std::move(labels));
}

StandardAlgebra standard_algebra(const std::string& name, Coeff p, std::size_t n, const Matrix* f) {
  StandardAlgebra out;
  if (name == "abelian_semilinear") {
    out.algebra = abelian(p, f ? *f : Matrix::zero(p, n, n));
  } else if (name == "heisenberg") {
    out.algebra = heisenberg(p);
  } else if (name == "gl") {
    out.algebra = gl(n, p);
  } else if (name == "sl") {
    out.algebra = sl(n, p);
    if (n % p == 0) out.caveats.push_back("p divides n: sl_n contains the scalar matrices, so its center is nonzero");
  } else {
    throw std::invalid_argument("unknown standard algebra '" + name + "'");
  }
  const Report rep = verify_restricted(out.algebra);
  if (!rep.passed()) throw std::runtime_error("standard algebra " + name + " failed verification: " + rep.failures());
  return out;
}

RestrictedLieAlgebra direct_product(const RestrictedLieAlgebra& a, const RestrictedLieAlgebra& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("direct_product: modulus mismatch");
  const std::size_t n = a.dim() + b.dim();
  std::vector<std::string> labels = a.labels();
  for (const auto& s : b.labels()) labels.push_back(s + "'");
  auto embed = [&](const Vec& v, bool second) {
    Vec r(n, 0);
    for (std::size_t k = 0; k < v.size(); ++k) r[(second ? a.dim() : 0) + k] = v[k];
    return r;
  };
  std::vector<Vec> table(n * n, Vec(n, 0));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) table[i * n + j] = embed(a.basis_bracket(i, j), false);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      table[(a.dim() + i) * n + a.dim() + j] = embed(b.basis_bracket(i, j), true);
  std::vector<Vec> pmap;
  for (std::size_t i = 0; i < a.dim(); ++i) pmap.push_back(embed(a.basis_pmap(i), false));
  for (std::size_t i = 0; i < b.dim(); ++i) pmap.push_back(embed(b.basis_pmap(i), true));
  return {a.modulus(), std::move(labels), std::move(table), std::move(pmap)};
}

Matrix product_projection(std::size_t dim_a, std::size_t dim_b, Coeff p, int which) {
  const std::size_t out = which == 1 ? dim_a : dim_b;
  const std::size_t offset = which == 1 ? 0 : dim_a;
  Matrix m(p, out, dim_a + dim_b);
  for (std::size_t i = 0; i < out; ++i) m.set(i, offset + i, 1);
  return m;
}

Matrix product_inclusion(std::size_t dim_a, std::size_t dim_b, Coeff p, int which) {
  return product_projection(dim_a, dim_b, p, which).transpose();
}

Subalgebra subalgebra(const RestrictedLieAlgebra& l, const Subspace& s) {
  if (s.ambient_dim() != l.dim()) throw std::invalid_argument("subalgebra: ambient mismatch");
  const std::size_t d = s.dim();
  const auto& basis = s.basis();
  auto coords = [&](const Vec& v) {
    if (!s.contains(v)) throw std::invalid_argument("subalgebra: subspace is not closed under bracket and p-map");
    return s.coordinates(v);
  };
  std::vector<Vec> table(d * d);
  std::vector<Vec> pmap;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) table[i * d + j] = coords(l.bracket(basis[i], basis[j]));
    pmap.push_back(coords(l.p_power(basis[i])));
    labels.push_back("s" + std::to_string(i + 1));
  }
  return {RestrictedLieAlgebra(l.modulus(), std::move(labels), std::move(table), std::move(pmap)),
          s.basis_matrix()};
}

Pullback pullback(const RestrictedMorphism& f, const RestrictedMorphism& g) {
  if (f.target.dim() != g.target.dim() || f.target.modulus() != g.target.modulus())
    throw std::invalid_argument("pullback: morphisms have different targets");
  const Coeff p = f.target.modulus();
  const std::size_t da = f.source.dim();
  const std::size_t db = g.source.dim();
  const RestrictedLieAlgebra prod = direct_product(f.source, g.source);
  const Matrix eq = f.matrix.hstack(g.matrix.scaled(p - 1));
  const Subalgebra sub = subalgebra(prod, kernel(eq));
  return {sub.algebra, product_projection(da, db, p, 1) * sub.inclusion,
          product_projection(da, db, p, 2) * sub.inclusion};
}

Subspace p_ideal_generated(const RestrictedLieAlgebra& l, const std::vector<Vec>& gens) {
  Subspace s = Subspace::span(l.modulus(), l.dim(), gens);
  while (true) {
    std::vector<Vec> more = s.basis();
    for (const auto& b : s.basis()) {
      for (std::size_t j = 0; j < l.dim(); ++j) more.push_back(l.bracket(b, l.unit(j)));
      more.push_back(l.p_power(b));
    }
    Subspace next = Subspace::span(l.modulus(), l.dim(), more);
    if (next.dim() == s.dim()) return s;
    s = std::move(next);
  }
}

bool is_p_ideal(const RestrictedLieAlgebra& l, const Subspace& s) {
  for (const auto& b : s.basis()) {
    if (!s.contains(l.p_power(b))) return false;
    for (std::size_t j = 0; j < l.dim(); ++j)
      if (!s.contains(l.bracket(b, l.unit(j)))) return false;
  }
  return true;
}

Quotient quotient_algebra(const RestrictedLieAlgebra& l, const Subspace& ideal) {
  if (!is_p_ideal(l, ideal)) throw std::invalid_argument("quotient_algebra: subspace is not a p-ideal");
  QuotientWithSection q = quotient_with_section(l.dim(), ideal);
  const std::size_t d = q.quotient_dim();
  std::vector<Vec> lifts;
  for (std::size_t i = 0; i < d; ++i) lifts.push_back(q.section.column(i));
  std::vector<Vec> table(d * d);
  std::vector<Vec> pmap;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) table[i * d + j] = q.projection.apply(l.bracket(lifts[i], lifts[j]));
    pmap.push_back(q.projection.apply(l.p_power(lifts[i])));
    // The section picks unit vectors, so a label can be inherited.
    std::size_t src = 0;
    while (lifts[i][src] == 0) ++src;
    labels.push_back(l.labels()[src]);
  }
  return {RestrictedLieAlgebra(l.modulus(), std::move(labels), std::move(table), std::move(pmap)), std::move(q)};
}

RestrictedLieAlgebra rebase(const RestrictedLieAlgebra& l, const Matrix& t) {
  if (t.rows() != l.dim() || t.cols() != l.dim() || rank(t) != l.dim())
    throw std::invalid_argument("rebase: change of basis must be invertible");
  const std::size_t n = l.dim();
  auto coords = [&](const Vec& v) { return *solve_linear(t, v).particular; };
  std::vector<Vec> table(n * n);
  std::vector<Vec> pmap;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = coords(l.bracket(t.column(i), t.column(j)));
    pmap.push_back(coords(l.p_power(t.column(i))));
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i + 1));
  return {l.modulus(), std::move(labels), std::move(table), std::move(pmap)};
}

Matrix action_of(const std::vector<Matrix>& eta, const Vec& v, Coeff p, std::size_t module_dim) {
  Matrix m = Matrix::zero(p, module_dim, module_dim);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) m = m + eta.at(i).scaled(v[i]);
  return m;
}

RestrictedLieAlgebra semidirect(const RestrictedLieAlgebra& l, const RestrictedLieAlgebra& n,
                                const std::vector<Matrix>& eta) {
  if (l.modulus() != n.modulus()) throw std::invalid_argument("semidirect: modulus mismatch");
  if (eta.size() != l.dim()) throw std::invalid_argument("semidirect: need one action matrix per basis vector of L");
  for (const auto& m : eta)
    if (m.rows() != n.dim() || m.cols() != n.dim()) throw std::invalid_argument("semidirect: action matrix has wrong size");
  const Coeff p = l.modulus();
  const PrimeField f(p);
  const std::size_t dl = l.dim();
  const std::size_t dn = n.dim();
  const std::size_t d = dl + dn;
  auto pack = [&](const Vec& lv, const Vec& nv) {
    Vec r(d, 0);
    for (std::size_t k = 0; k < dl; ++k) r[k] = lv[k];
    for (std::size_t k = 0; k < dn; ++k) r[dl + k] = nv[k];
    return r;
  };
  std::vector<Vec> table(d * d, Vec(d, 0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const bool il = i < dl;
      const bool jl = j < dl;
      if (il && jl) {
        table[i * d + j] = pack(l.basis_bracket(i, j), f.zero(dn));
      } else if (il && !jl) {
        table[i * d + j] = pack(f.zero(dl), eta[i].column(j - dl));
      } else if (!il && jl) {
        table[i * d + j] = pack(f.zero(dl), f.neg(eta[j].column(i - dl)));
      } else {
        table[i * d + j] = pack(f.zero(dl), n.basis_bracket(i - dl, j - dl));
      }
    }
  std::vector<Vec> pmap;
  for (std::size_t i = 0; i < dl; ++i) pmap.push_back(pack(l.basis_pmap(i), f.zero(dn)));
  for (std::size_t i = 0; i < dn; ++i) pmap.push_back(pack(f.zero(dl), n.basis_pmap(i)));
  std::vector<std::string> labels = l.labels();
  for (const auto& s : n.labels()) labels.push_back(s);
  return {p, std::move(labels), std::move(table), std::move(pmap)};
}

Report check_action_by_derivations(const RestrictedLieAlgebra& l, const RestrictedLieAlgebra& n,
                                   const std::vector<Matrix>& eta, const CheckOptions& opts) {
  Report rep;
  const Coeff p = l.modulus();
  const PrimeField f(p);
  const std::size_t dn = n.dim();
  std::string bad;
  for (std::size_t i = 0; i < l.dim() && bad.empty(); ++i)
    for (std::size_t j = 0; j < l.dim() && bad.empty(); ++j) {
      const Matrix lhs = action_of(eta, l.basis_bracket(i, j), p, dn);
      if (lhs != eta[i] * eta[j] - eta[j] * eta[i]) bad = "at " + pair_name(l, i, j);
    }
  rep.add("action is a Lie map", bad.empty(), bad);

  bad.clear();
  for (std::size_t i = 0; i < l.dim() && bad.empty(); ++i)
    if (action_of(eta, l.basis_pmap(i), p, dn) != eta[i].pow(p)) bad = "at " + l.labels()[i];
  rep.add("action is restricted", bad.empty(), bad);

  bad.clear();
  for (std::size_t i = 0; i < l.dim() && bad.empty(); ++i)
    for (std::size_t a = 0; a < dn && bad.empty(); ++a)
      for (std::size_t b = 0; b < dn && bad.empty(); ++b) {
        const Vec lhs = eta[i].apply(n.basis_bracket(a, b));
        const Vec rhs = f.add(n.bracket(eta[i].column(a), n.unit(b)), n.bracket(n.unit(a), eta[i].column(b)));
        if (lhs != rhs) bad = "action of " + l.labels()[i] + " is not a derivation";
      }
  rep.add("acts by derivations", bad.empty(), bad);

  bad.clear();
  const bool sampled = for_each_element(p, dn, opts, [&](const Vec& v) {
    for (std::size_t i = 0; i < l.dim(); ++i) {
      if (eta[i].apply(n.p_power(v)) != n.ad_power(v, p - 1, eta[i].apply(v))) {
        bad = "action of " + l.labels()[i] + " is not a restricted derivation";
        return false;
      }
    }
    return true;
  });
  rep.add("acts by restricted derivations", bad.empty(), bad);
  if (sampled) rep.mark_sampled();
  return rep;
}

}  // namespace rlie
