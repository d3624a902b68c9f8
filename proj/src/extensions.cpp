#include "rlie/extensions.hpp"

#include <stdexcept>

namespace rlie {

namespace {

Vec pack(const Vec& x, const Vec& a) {
  Vec r = x;
  r.insert(r.end(), a.begin(), a.end());
  return r;
}

Vec head(const Vec& v, std::size_t n) { return Vec(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n)); }
Vec tail(const Vec& v, std::size_t n) { return Vec(v.begin() + static_cast<std::ptrdiff_t>(n), v.end()); }

void require_same_module(const RestrictedLieAlgebra& l, const BeckModule& b, const char* where) {
  if (!b.algebra().same_structure(l))
    throw std::invalid_argument(std::string(where) + ": module is over a different algebra");
}

bool same_beck(const BeckModule& a, const BeckModule& b) {
  return a.algebra().same_structure(b.algebra()) && a.dim() == b.dim() && a.module.action == b.module.action &&
         a.f == b.f;
}

}  // namespace

std::size_t pair_count(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
  if (!(i < j && j < n)) throw std::out_of_range("pair_index: need i < j < n");
  // Pairs (0,1), (0,2), ..., (0,n-1), (1,2), ...
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

CocycleData zero_cocycle(std::size_t base_dim, std::size_t module_dim) {
  return {std::vector<Vec>(pair_count(base_dim), Vec(module_dim, 0)), std::vector<Vec>(base_dim, Vec(module_dim, 0))};
}

Vec flatten(const CocycleData& d) {
  Vec out;
  for (const auto& v : d.c) out.insert(out.end(), v.begin(), v.end());
  for (const auto& v : d.omega) out.insert(out.end(), v.begin(), v.end());
  return out;
}

CocycleData unflatten_cocycle(const Vec& v, std::size_t base_dim, std::size_t module_dim) {
  const std::size_t pairs = pair_count(base_dim);
  if (v.size() != (pairs + base_dim) * module_dim) throw std::invalid_argument("unflatten_cocycle: wrong length");
  CocycleData d;
  std::size_t at = 0;
  auto take = [&] {
    Vec r(v.begin() + static_cast<std::ptrdiff_t>(at), v.begin() + static_cast<std::ptrdiff_t>(at + module_dim));
    at += module_dim;
    return r;
  };
  for (std::size_t k = 0; k < pairs; ++k) d.c.push_back(take());
  for (std::size_t k = 0; k < base_dim; ++k) d.omega.push_back(take());
  return d;
}

CocycleData add(const CocycleData& a, const CocycleData& b, Coeff p) {
  const PrimeField f(p);
  CocycleData r = a;
  if (a.c.size() != b.c.size() || a.omega.size() != b.omega.size())
    throw std::invalid_argument("cocycle add: shape mismatch");
  for (std::size_t k = 0; k < r.c.size(); ++k) r.c[k] = f.add(a.c[k], b.c[k]);
  for (std::size_t k = 0; k < r.omega.size(); ++k) r.omega[k] = f.add(a.omega[k], b.omega[k]);
  return r;
}

CocycleData negate(const CocycleData& a, Coeff p) {
  const PrimeField f(p);
  CocycleData r = a;
  for (auto& v : r.c) v = f.neg(v);
  for (auto& v : r.omega) v = f.neg(v);
  return r;
}

Matrix AbelianExtension::inclusion() const {
  return product_inclusion(base.dim(), module.dim(), base.modulus(), 2);
}

Matrix AbelianExtension::projection() const {
  return product_projection(base.dim(), module.dim(), base.modulus(), 1);
}

RestrictedLieAlgebra realize_extension(const RestrictedLieAlgebra& l, const BeckModule& b, const CocycleData& d) {
  require_same_module(l, b, "realize_extension");
  const Coeff p = l.modulus();
  const PrimeField f(p);
  const std::size_t dl = l.dim();
  const std::size_t da = b.dim();
  if (d.c.size() != pair_count(dl) || d.omega.size() != dl)
    throw std::invalid_argument("realize_extension: cocycle data has the wrong shape");
  for (const auto& v : d.c)
    if (v.size() != da) throw std::invalid_argument("realize_extension: c value has the wrong length");
  for (const auto& v : d.omega)
    if (v.size() != da) throw std::invalid_argument("realize_extension: omega value has the wrong length");

  const std::size_t n = dl + da;
  std::vector<Vec> table(n * n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i < dl && j < dl) {
        Vec c = f.zero(da);
        if (i < j) c = d.c[pair_index(dl, i, j)];
        if (j < i) c = f.neg(d.c[pair_index(dl, j, i)]);
        table[i * n + j] = pack(l.basis_bracket(i, j), c);
      } else if (i < dl) {
        table[i * n + j] = pack(f.zero(dl), b.module.action[i].column(j - dl));
      } else if (j < dl) {
        table[i * n + j] = pack(f.zero(dl), f.neg(b.module.action[j].column(i - dl)));
      }
    }
  std::vector<Vec> pmap;
  for (std::size_t i = 0; i < dl; ++i) pmap.push_back(pack(l.basis_pmap(i), d.omega[i]));
  for (std::size_t k = 0; k < da; ++k) pmap.push_back(pack(f.zero(dl), b.f.column(k)));
  std::vector<std::string> labels = l.labels();
  const RestrictedLieAlgebra a = abelian(p, b.f);
  labels.insert(labels.end(), a.labels().begin(), a.labels().end());
  return RestrictedLieAlgebra(p, std::move(labels), std::move(table), std::move(pmap));
}

AbelianExtension build_abelian_extension(const RestrictedLieAlgebra& l, const BeckModule& b, const CocycleData& d,
                                         const CheckOptions& opts) {
  AbelianExtension e{l, b, d, realize_extension(l, b, d)};
  const Report rep = verify_restricted(e.total, opts);
  if (!rep.passed())
    throw std::invalid_argument("build_abelian_extension: data does not define a restricted Lie algebra (" +
                                rep.failures() + ")");
  return e;
}

Report verify_abelian_extension(const AbelianExtension& e, const CheckOptions& opts) {
  Report rep;
  rep.merge(verify_beck(e.module, opts), "module ");
  rep.merge(verify_restricted(e.total, opts), "E ");
  rep.merge(check_restricted_morphism({e.total, e.base, e.projection()}, opts), "projection ");
  const Subspace a = image(e.inclusion());
  bool abelian_ideal = is_p_ideal(e.total, a);
  for (const auto& u : a.basis())
    for (const auto& v : a.basis()) abelian_ideal = abelian_ideal && PrimeField::is_zero(e.total.bracket(u, v));
  rep.add("A is an abelian p-ideal", abelian_ideal);
  bool consistent = true;
  try {
    consistent = extract_cocycle(e.total, Matrix::identity(e.base.modulus(), e.total.dim()), e.base, e.module) == e.data;
  } catch (const std::invalid_argument&) {
    consistent = false;
  }
  rep.add("induced module and data match", consistent);
  return rep;
}

CocycleData extract_cocycle(const RestrictedLieAlgebra& q, const Matrix& sigma, const RestrictedLieAlgebra& l,
                            const BeckModule& b) {
  require_same_module(l, b, "extract_cocycle");
  const std::size_t dl = l.dim();
  const std::size_t da = b.dim();
  if (q.dim() != dl + da || sigma.rows() != q.dim() || sigma.cols() != q.dim() || rank(sigma) != q.dim())
    throw std::invalid_argument("extract_cocycle: sigma must be an isomorphism L (+) A -> q");
  const PrimeField f(l.modulus());
  auto back = [&](const Vec& v) { return *solve_linear(sigma, v).particular; };
  auto unit = [&](std::size_t i) { return sigma.column(i); };

  CocycleData d = zero_cocycle(dl, da);
  for (std::size_t i = 0; i < dl; ++i)
    for (std::size_t j = i + 1; j < dl; ++j) {
      const Vec w = back(q.bracket(unit(i), unit(j)));
      if (head(w, dl) != l.basis_bracket(i, j))
        throw std::invalid_argument("extract_cocycle: bracket does not lie over L");
      d.c[pair_index(dl, i, j)] = tail(w, dl);
    }
  for (std::size_t i = 0; i < dl; ++i) {
    const Vec w = back(q.p_power(unit(i)));
    if (head(w, dl) != l.basis_pmap(i)) throw std::invalid_argument("extract_cocycle: p-map does not lie over L");
    d.omega[i] = tail(w, dl);
  }
  for (std::size_t k = 0; k < da; ++k) {
    const Vec ak = unit(dl + k);
    for (std::size_t i = 0; i < dl; ++i)
      if (back(q.bracket(unit(i), ak)) != pack(f.zero(dl), b.module.action[i].column(k)))
        throw std::invalid_argument("extract_cocycle: action on A differs from the module");
    for (std::size_t m = 0; m < da; ++m)
      if (!PrimeField::is_zero(q.bracket(ak, unit(dl + m))))
        throw std::invalid_argument("extract_cocycle: A is not abelian");
    if (back(q.p_power(ak)) != pack(f.zero(dl), b.f.column(k)))
      throw std::invalid_argument("extract_cocycle: p-map on A differs from f");
  }
  return d;
}

CocycleData coboundary(const RestrictedLieAlgebra& l, const BeckModule& b, const Matrix& map) {
  require_same_module(l, b, "coboundary");
  const std::size_t dl = l.dim();
  if (map.rows() != b.dim() || map.cols() != dl) throw std::invalid_argument("coboundary: map has the wrong shape");
  const Coeff p = l.modulus();
  const PrimeField f(p);
  CocycleData d = zero_cocycle(dl, b.dim());
  for (std::size_t i = 0; i < dl; ++i)
    for (std::size_t j = i + 1; j < dl; ++j)
      d.c[pair_index(dl, i, j)] =
          f.sub(f.sub(b.module.action[i].apply(map.column(j)), b.module.action[j].apply(map.column(i))),
                map.apply(l.basis_bracket(i, j)));
  for (std::size_t i = 0; i < dl; ++i) {
    const Vec bi = map.column(i);
    d.omega[i] = f.sub(f.add(b.module.action[i].pow(p - 1).apply(bi), b.f.apply(bi)), map.apply(l.basis_pmap(i)));
  }
  return d;
}

std::optional<Matrix> is_equivalent_1(const AbelianExtension& e, const AbelianExtension& e2, const CheckOptions& opts) {
  if (!e.base.same_structure(e2.base) || !same_beck(e.module, e2.module))
    throw std::invalid_argument("is_equivalent_1: extensions of different data");
  const Coeff p = e.base.modulus();
  const PrimeField f(p);
  const std::size_t dl = e.base.dim();
  const std::size_t da = e.module.dim();
  // psi(x,a) = (x, a + b x) is a morphism E -> E2 iff data(E) = data(E2) + coboundary(b).
  const Vec target = f.sub(flatten(e.data), flatten(e2.data));
  const LinearSolution sol = solve_affine(p, da * dl, target.size(), [&](const Vec& x) {
    return f.sub(flatten(coboundary(e.base, e.module, Matrix::unflatten(p, da, dl, x))), target);
  });
  if (!sol.particular) return std::nullopt;
  const Matrix b = Matrix::unflatten(p, da, dl, *sol.particular);
  const Matrix psi = Matrix::identity(p, dl + da) + Matrix::zero(p, dl, dl + da).vstack(b.hstack(Matrix::zero(p, da, da)));
  if (!is_restricted_morphism({e.total, e2.total, psi}, opts))
    throw std::logic_error("is_equivalent_1: solved witness is not a restricted morphism");
  return b;
}

AbelianExtension baer_sum_1(const AbelianExtension& e, const AbelianExtension& e2, const CheckOptions& opts) {
  if (!e.base.same_structure(e2.base) || !same_beck(e.module, e2.module))
    throw std::invalid_argument("baer_sum_1: extensions of different data");
  const Coeff p = e.base.modulus();
  const PrimeField f(p);
  const std::size_t dl = e.base.dim();
  const std::size_t da = e.module.dim();
  const Pullback pb = pullback({e.total, e.base, e.projection()}, {e2.total, e2.base, e2.projection()});
  const Matrix into_product = pb.proj1.vstack(pb.proj2);
  auto coords = [&](const Vec& v) {
    const LinearSolution s = solve_linear(into_product, v);
    if (!s.particular) throw std::logic_error("baer_sum_1: element outside the pullback");
    return *s.particular;
  };
  std::vector<Vec> anti;
  for (std::size_t k = 0; k < da; ++k) {
    const Vec a = f.unit(da, k);
    anti.push_back(coords(pack(pack(f.zero(dl), a), pack(f.zero(dl), f.neg(a)))));
  }
  const Quotient q = quotient_algebra(pb.algebra, Subspace::span(p, pb.algebra.dim(), anti));
  // (x, a) -> class of ((x, a), (x, 0)).
  const Matrix sigma = Matrix::of_linear_map(p, dl + da, q.algebra.dim(), [&](const Vec& v) {
    const Vec x = head(v, dl);
    return q.maps.projection.apply(coords(pack(v, pack(x, f.zero(da)))));
  });
  return build_abelian_extension(e.base, e.module, extract_cocycle(q.algebra, sigma, e.base, e.module), opts);
}

Vec cocycle_defect(const RestrictedLieAlgebra& l, const BeckModule& b, const CocycleData& d) {
  const RestrictedLieAlgebra e = realize_extension(l, b, d);
  const PrimeField f(l.modulus());
  const std::size_t dl = l.dim();
  Vec out;
  auto append = [&](const Vec& v) {
    const Vec a = tail(v, dl);
    out.insert(out.end(), a.begin(), a.end());
  };
  for (std::size_t i = 0; i < dl; ++i)
    for (std::size_t j = i + 1; j < dl; ++j)
      for (std::size_t k = j + 1; k < dl; ++k) {
        const Vec x = e.unit(i), y = e.unit(j), z = e.unit(k);
        append(f.add(f.add(e.bracket(e.bracket(x, y), z), e.bracket(e.bracket(y, z), x)),
                     e.bracket(e.bracket(z, x), y)));
      }
  for (std::size_t i = 0; i < dl; ++i)
    for (std::size_t j = 0; j < dl; ++j)
      append(f.sub(e.bracket(e.unit(i), e.basis_pmap(j)), e.ad_power(e.unit(j), l.modulus(), e.unit(i))));
  return out;
}

H1Space h1_space(const RestrictedLieAlgebra& l, const BeckModule& b) {
  require_same_module(l, b, "h1_space");
  const Coeff p = l.modulus();
  const std::size_t dl = l.dim();
  const std::size_t da = b.dim();
  const std::size_t data = (pair_count(dl) + dl) * da;
  const std::size_t defect_len = cocycle_defect(l, b, zero_cocycle(dl, da)).size();
  const Matrix defect = Matrix::of_linear_map(p, data, defect_len, [&](const Vec& v) {
    return cocycle_defect(l, b, unflatten_cocycle(v, dl, da));
  });
  const Matrix cob = Matrix::of_linear_map(p, da * dl, data, [&](const Vec& v) {
    return flatten(coboundary(l, b, Matrix::unflatten(p, da, dl, v)));
  });
  H1Space h{l, b, kernel(defect), image(cob)};
  if (data == 0) h.cocycles = h.coboundaries = Subspace(p, 0);
  if (!h.cocycles.contains(h.coboundaries)) throw std::logic_error("h1_space: coboundaries are not cocycles");
  return h;
}

Vec H1Space::class_key(const CocycleData& d) const { return coboundaries.reduce(flatten(d)); }

bool H1Space::is_cocycle(const CocycleData& d) const { return cocycles.contains(flatten(d)); }

std::uint64_t H1Space::class_count() const { return count_vectors(base.modulus(), dim()); }

std::vector<CocycleData> H1Space::class_representatives(std::uint64_t limit) const {
  if (class_count() > limit) throw std::length_error("class_representatives: too many classes");
  const Coeff p = base.modulus();
  const Matrix z = cocycles.basis_matrix();
  std::vector<Vec> b_in_z;
  for (const auto& v : coboundaries.basis()) b_in_z.push_back(cocycles.coordinates(v));
  const QuotientWithSection q = quotient_with_section(cocycles.dim(), Subspace::span(p, cocycles.dim(), b_in_z));
  std::vector<CocycleData> out;
  for_each_vector(p, q.quotient_dim(), [&](const Vec& v) {
    const Vec data = cocycles.dim() == 0 ? Vec(data_dim(), 0) : z.apply(q.section.apply(v));
    out.push_back(unflatten_cocycle(data, base.dim(), module.dim()));
    return true;
  });
  return out;
}

}  // namespace rlie
