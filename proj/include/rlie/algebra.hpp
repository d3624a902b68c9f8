#pragma once

// Finite-dimensional restricted Lie algebras over F_p given by structure
// constants and the p-map on basis vectors.

#include <string>
#include <vector>

#include "rlie/check.hpp"
#include "rlie/fp_linalg.hpp"

namespace rlie {

/// Coefficients of a polynomial in a formal variable lambda with values in L.
struct LambdaPolynomial {
  std::vector<Vec> coeffs;  // coeffs[k] multiplies lambda^k
};

class RestrictedLieAlgebra {
 public:
  RestrictedLieAlgebra() : p_(2) {}

  /// table[i*n + j] = [e_i, e_j]. No axioms are checked here; see verify_restricted.
  RestrictedLieAlgebra(Coeff p, std::vector<std::string> labels, std::vector<Vec> table,
                       std::vector<Vec> pmap);

  /// Builds the full table from the entries with i < j and antisymmetry.
  static RestrictedLieAlgebra from_upper(Coeff p, std::vector<std::string> labels,
                                         const std::vector<std::pair<std::pair<std::size_t, std::size_t>, Vec>>& upper,
                                         std::vector<Vec> pmap);
  static RestrictedLieAlgebra zero(Coeff p);

  Coeff modulus() const { return p_; }
  PrimeField field() const { return PrimeField(p_); }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vec& basis_bracket(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  const Vec& basis_pmap(std::size_t i) const { return pmap_[i]; }
  const std::vector<Vec>& pmap_images() const { return pmap_; }
  Vec unit(std::size_t i) const { return field().unit(dim(), i); }

  Vec bracket(const Vec& u, const Vec& v) const;
  /// k-fold right bracketing: [...[[x,y],y]...,y].
  Vec ad_power(const Vec& y, std::size_t k, const Vec& x) const;
  /// Matrix of v -> [v, y].
  Matrix ad_matrix(const Vec& y) const;
  /// ad^{p-1}_{lambda x + y}(x), with ad_a(b) = [b, a].
  LambdaPolynomial lambda_expansion(const Vec& x, const Vec& y) const;
  /// s_1 .. s_{p-1}; s_i is the lambda^{i-1} coefficient of lambda_expansion divided by i.
  std::vector<Vec> s_coefficients(const Vec& x, const Vec& y) const;
  /// p-map extended from the basis by recursion on the support.
  Vec p_power(const Vec& v) const;
  /// a^[p] + b^[p] + sum s_i(a, b).
  Vec p_power_split(const Vec& a, const Vec& b) const;

  bool is_abelian() const;
  Subspace center() const;

  bool operator==(const RestrictedLieAlgebra& o) const = default;
  /// Equality of brackets and p-map, ignoring labels.
  bool same_structure(const RestrictedLieAlgebra& o) const {
    return p_ == o.p_ && table_ == o.table_ && pmap_ == o.pmap_;
  }

 private:
  void check_dim(const Vec& v) const;

  Coeff p_;
  std::vector<std::string> labels_;
  std::vector<Vec> table_;
  std::vector<Vec> pmap_;
};

/// Antisymmetry, Jacobi, relation [e_i, e_j^[p]] = ad^p_{e_j}(e_i) on basis pairs,
/// and a sampled split-order check of p_power.
Report verify_restricted(const RestrictedLieAlgebra& l, const CheckOptions& opts = {});

struct RestrictedMorphism {
  RestrictedLieAlgebra source;
  RestrictedLieAlgebra target;
  Matrix matrix;  // target.dim() x source.dim()

  Vec operator()(const Vec& v) const { return matrix.apply(v); }
};

/// Bracket condition on basis pairs; p-map condition on elements (exhaustive or sampled).
Report check_restricted_morphism(const RestrictedMorphism& phi, const CheckOptions& opts = {});
bool is_restricted_morphism(const RestrictedMorphism& phi, const CheckOptions& opts = {});

// ---------------------------------------------------------------------------
// Constructions

RestrictedLieAlgebra abelian(Coeff p, const Matrix& f, const std::string& prefix = "a");
RestrictedLieAlgebra heisenberg(Coeff p);
/// Algebra spanned by the given matrices under commutator and p-th power. Throws if not closed.
RestrictedLieAlgebra matrix_algebra(Coeff p, std::size_t n, const std::vector<Matrix>& basis,
                                    std::vector<std::string> labels);
RestrictedLieAlgebra gl(std::size_t n, Coeff p);
RestrictedLieAlgebra sl(std::size_t n, Coeff p);

struct StandardAlgebra {
  RestrictedLieAlgebra algebra;
  std::vector<std::string> caveats;
};

/// name in {abelian_semilinear, gl, sl, heisenberg}. The result is verified;
/// throws std::invalid_argument on an unknown name or std::runtime_error if verification fails.
StandardAlgebra standard_algebra(const std::string& name, Coeff p, std::size_t n,
                                 const Matrix* f = nullptr);

RestrictedLieAlgebra direct_product(const RestrictedLieAlgebra& a, const RestrictedLieAlgebra& b);
/// Projections and inclusions of a direct product.
Matrix product_projection(std::size_t dim_a, std::size_t dim_b, Coeff p, int which);
Matrix product_inclusion(std::size_t dim_a, std::size_t dim_b, Coeff p, int which);

struct Subalgebra {
  RestrictedLieAlgebra algebra;
  Matrix inclusion;  // ambient x sub
};

/// Algebra structure on a subspace closed under bracket and p-map. Throws if not closed.
Subalgebra subalgebra(const RestrictedLieAlgebra& l, const Subspace& s);

struct Pullback {
  RestrictedLieAlgebra algebra;
  Matrix proj1;
  Matrix proj2;
};

Pullback pullback(const RestrictedMorphism& f, const RestrictedMorphism& g);

/// Smallest subspace containing gens, stable under ad(L) and the p-map.
Subspace p_ideal_generated(const RestrictedLieAlgebra& l, const std::vector<Vec>& gens);
bool is_p_ideal(const RestrictedLieAlgebra& l, const Subspace& s);

struct Quotient {
  RestrictedLieAlgebra algebra;
  QuotientWithSection maps;
};

Quotient quotient_algebra(const RestrictedLieAlgebra& l, const Subspace& ideal);

/// Semidirect product L x N on the space L (+) N. eta[i] is the action of e_i on N.
/// (l,0)^[p] = (l^[p],0), (0,n)^[p] = (0,n^[p]); mixed elements via p_power.
RestrictedLieAlgebra semidirect(const RestrictedLieAlgebra& l, const RestrictedLieAlgebra& n,
                                const std::vector<Matrix>& eta);
/// Checks that eta is a restricted Lie map into restricted derivations of N.
Report check_action_by_derivations(const RestrictedLieAlgebra& l, const RestrictedLieAlgebra& n,
                                   const std::vector<Matrix>& eta, const CheckOptions& opts = {});

/// Same algebra in the basis given by the (invertible) columns of t.
RestrictedLieAlgebra rebase(const RestrictedLieAlgebra& l, const Matrix& t);

/// Action matrix of an arbitrary element: sum v_i eta[i].
Matrix action_of(const std::vector<Matrix>& eta, const Vec& v, Coeff p, std::size_t module_dim);

}  // namespace rlie
