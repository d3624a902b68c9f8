#pragma once

// Abelian extensions 0 -> A -> E -> L -> 0 by a Beck module, described by
// cocycle data (c on basis pairs i < j, omega on basis vectors).

#include <cstdint>
#include <optional>
#include <vector>

#include "rlie/beck_module.hpp"

namespace rlie {

struct CocycleData {
  std::vector<Vec> c;      // c[pair_index(i, j)] = c(e_i, e_j) for i < j
  std::vector<Vec> omega;  // omega[i] = omega(e_i)

  bool operator==(const CocycleData& o) const = default;
};

std::size_t pair_count(std::size_t n);
std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j);

CocycleData zero_cocycle(std::size_t base_dim, std::size_t module_dim);
/// Flat coordinates: all c values in pair order, then all omega values.
Vec flatten(const CocycleData& d);
CocycleData unflatten_cocycle(const Vec& v, std::size_t base_dim, std::size_t module_dim);
CocycleData add(const CocycleData& a, const CocycleData& b, Coeff p);
CocycleData negate(const CocycleData& a, Coeff p);

struct AbelianExtension {
  RestrictedLieAlgebra base;
  BeckModule module;
  CocycleData data;
  /// Underlying space L (+) A: [(e_i,0),(e_j,0)] = ([e_i,e_j], c), [(x,0),(0,a)] = (0, x.a),
  /// (e_i,0)^[p] = (e_i^[p], omega(e_i)), (0,a)^[p] = (0, f a).
  RestrictedLieAlgebra total;

  Matrix inclusion() const;   // A -> E
  Matrix projection() const;  // E -> L
};

/// Total algebra for the data, without checking anything.
RestrictedLieAlgebra realize_extension(const RestrictedLieAlgebra& l, const BeckModule& b, const CocycleData& d);
/// Throws std::invalid_argument unless the realized algebra passes verify_restricted.
AbelianExtension build_abelian_extension(const RestrictedLieAlgebra& l, const BeckModule& b, const CocycleData& d,
                                         const CheckOptions& opts = {});
/// All checks on an extension: the total algebra, the maps, A an abelian p-ideal, induced Beck structure.
Report verify_abelian_extension(const AbelianExtension& e, const CheckOptions& opts = {});

/// Reads (c, omega) off an algebra q together with a linear isomorphism
/// sigma: L (+) A -> q under which q is an abelian extension of L by A.
/// Throws std::invalid_argument if q is not such an extension over sigma.
CocycleData extract_cocycle(const RestrictedLieAlgebra& q, const Matrix& sigma, const RestrictedLieAlgebra& l,
                            const BeckModule& b);

/// delta b(x,y) = x.b(y) - y.b(x) - b([x,y]) and nu b(x) = x^{p-1}.b(x) + f(b(x)) - b(x^[p]).
CocycleData coboundary(const RestrictedLieAlgebra& l, const BeckModule& b, const Matrix& map);

/// Witness b with psi(x,a) = (x, a + b(x)) a restricted isomorphism E -> E', if one exists.
std::optional<Matrix> is_equivalent_1(const AbelianExtension& e, const AbelianExtension& e2,
                                      const CheckOptions& opts = {});

/// Pullback over L, then quotient by the antidiagonal copy of A.
AbelianExtension baer_sum_1(const AbelianExtension& e, const AbelianExtension& e2, const CheckOptions& opts = {});

/// Cocycles Z (data whose realization is a restricted Lie algebra) and coboundaries B.
struct H1Space {
  RestrictedLieAlgebra base;
  BeckModule module;
  Subspace cocycles{2, 0};
  Subspace coboundaries{2, 0};

  std::size_t data_dim() const { return cocycles.ambient_dim(); }
  std::size_t dim() const { return cocycles.dim() - coboundaries.dim(); }
  /// Canonical representative of the class of valid data.
  Vec class_key(const CocycleData& d) const;
  bool is_cocycle(const CocycleData& d) const;
  /// One representative per class. Throws std::length_error above the limit.
  std::vector<CocycleData> class_representatives(std::uint64_t limit) const;
  std::uint64_t class_count() const;
};

/// Linear defect of the axioms (Jacobi on basis triples, [x, y^[p]] = ad^p_y x on basis pairs) in A.
Vec cocycle_defect(const RestrictedLieAlgebra& l, const BeckModule& b, const CocycleData& d);
H1Space h1_space(const RestrictedLieAlgebra& l, const BeckModule& b);

}  // namespace rlie
