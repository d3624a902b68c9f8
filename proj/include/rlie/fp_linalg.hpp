#pragma once

// Dense exact linear algebra over prime fields F_p.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rlie {

using Coeff = std::uint32_t;
using Vec = std::vector<Coeff>;

bool is_prime(std::uint64_t n);

/// Arithmetic in F_p. All inputs are expected reduced; outputs always are.
class PrimeField {
 public:
  explicit PrimeField(Coeff p);

  Coeff modulus() const { return p_; }

  Coeff reduce(std::int64_t v) const {
    auto r = v % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }
  Coeff add(Coeff a, Coeff b) const { return static_cast<Coeff>((std::uint64_t{a} + b) % p_); }
  Coeff sub(Coeff a, Coeff b) const { return static_cast<Coeff>((std::uint64_t{a} + p_ - b) % p_); }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const { return static_cast<Coeff>((std::uint64_t{a} * b) % p_); }
  Coeff pow(Coeff a, std::uint64_t e) const;
  Coeff inv(Coeff a) const;  // throws std::domain_error on 0

  Vec zero(std::size_t n) const { return Vec(n, 0); }
  Vec unit(std::size_t n, std::size_t i) const;
  Vec add(const Vec& a, const Vec& b) const;
  Vec sub(const Vec& a, const Vec& b) const;
  Vec neg(const Vec& a) const;
  Vec scale(Coeff s, const Vec& a) const;
  /// y += a * x
  void axpy(Vec& y, Coeff a, const Vec& x) const;
  static bool is_zero(const Vec& v);

 private:
  Coeff p_;
};

/// A single residue together with its modulus.
class FpScalar {
 public:
  FpScalar(std::int64_t value, Coeff p) : field_(p), value_(field_.reduce(value)) {}

  Coeff value() const { return value_; }
  Coeff modulus() const { return field_.modulus(); }

  FpScalar operator+(const FpScalar& o) const { return {field_.add(value_, check(o)), modulus()}; }
  FpScalar operator-(const FpScalar& o) const { return {field_.sub(value_, check(o)), modulus()}; }
  FpScalar operator*(const FpScalar& o) const { return {field_.mul(value_, check(o)), modulus()}; }
  FpScalar operator/(const FpScalar& o) const { return {field_.mul(value_, field_.inv(check(o))), modulus()}; }
  FpScalar operator-() const { return {field_.neg(value_), modulus()}; }
  FpScalar pow(std::uint64_t e) const { return {field_.pow(value_, e), modulus()}; }
  bool operator==(const FpScalar& o) const { return value_ == o.value_ && modulus() == o.modulus(); }

 private:
  Coeff check(const FpScalar& o) const {
    if (o.modulus() != modulus()) throw std::invalid_argument("FpScalar: modulus mismatch");
    return o.value_;
  }
  PrimeField field_;
  Coeff value_;
};

/// Row-major dense matrix over F_p. Acts on column vectors.
class Matrix {
 public:
  Matrix() : p_(2) {}
  Matrix(Coeff p, std::size_t rows, std::size_t cols) : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix zero(Coeff p, std::size_t rows, std::size_t cols) { return {p, rows, cols}; }
  static Matrix identity(Coeff p, std::size_t n);
  static Matrix from_rows(Coeff p, std::size_t cols, const std::vector<Vec>& rows);
  static Matrix from_columns(Coeff p, std::size_t rows, const std::vector<Vec>& cols);
  /// Inverse of flatten().
  static Matrix unflatten(Coeff p, std::size_t rows, std::size_t cols, const Vec& flat);
  /// Matrix of a linear map given by its action on unit vectors.
  static Matrix of_linear_map(Coeff p, std::size_t in_dim, std::size_t out_dim,
                              const std::function<Vec(const Vec&)>& map);

  Coeff modulus() const { return p_; }
  PrimeField field() const { return PrimeField(p_); }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Coeff operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t v);

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  Vec apply(const Vec& v) const;
  const Vec& flatten() const { return data_; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(Coeff s) const;
  Matrix transpose() const;
  Matrix pow(std::uint64_t e) const;
  Matrix hstack(const Matrix& right) const;
  Matrix vstack(const Matrix& below) const;
  /// Block-diagonal sum.
  Matrix direct_sum(const Matrix& o) const;
  bool is_zero() const { return PrimeField::is_zero(data_); }
  bool operator==(const Matrix& o) const = default;

 private:
  Coeff p_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec data_;
};

/// Row-reduced echelon form with pivot columns.
struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Subspace of F_p^n stored by its canonical rref basis.
class Subspace {
 public:
  Subspace(Coeff p, std::size_t ambient) : p_(p), ambient_(ambient) {}

  static Subspace span(Coeff p, std::size_t ambient, const std::vector<Vec>& generators);
  static Subspace full(Coeff p, std::size_t ambient);

  Coeff modulus() const { return p_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Canonical coset representative: pivot coordinates eliminated.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates with respect to basis(); throws std::invalid_argument if v is outside.
  Vec coordinates(const Vec& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// Image of this subspace under a linear map.
  Subspace image_under(const Matrix& map) const;
  /// Basis as matrix columns (ambient x dim).
  Matrix basis_matrix() const;

  bool operator==(const Subspace& o) const {
    return p_ == o.p_ && ambient_ == o.ambient_ && basis_ == o.basis_;
  }

 private:
  Coeff p_;
  std::size_t ambient_;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

struct LinearSolution {
  std::optional<Vec> particular;
  Subspace kernel;
};

/// All solutions of A x = b: one particular solution (if consistent) plus ker A.
LinearSolution solve_linear(const Matrix& a, const Vec& b);

/// (ker A inside F^cols, im A inside F^rows).
std::pair<Subspace, Subspace> kernel_image(const Matrix& a);
Subspace kernel(const Matrix& a);
Subspace image(const Matrix& a);

/// Solution set of an affine system given as a callable map(x) = A x + c.
LinearSolution solve_affine(Coeff p, std::size_t unknowns, std::size_t equations,
                            const std::function<Vec(const Vec&)>& map);

/// Basis of the matrices X (rows x cols) with constraint(X) = 0; constraint must be linear.
std::vector<Matrix> solve_homogeneous_matrices(Coeff p, std::size_t rows, std::size_t cols,
                                               const std::function<Vec(const Matrix&)>& constraint);

/// F_p^n / K with a linear section; projection * section = identity.
struct QuotientWithSection {
  std::size_t ambient = 0;
  Subspace kernel{2, 0};
  Matrix projection;  // quotient_dim x ambient
  Matrix section;     // ambient x quotient_dim

  std::size_t quotient_dim() const { return projection.rows(); }
};

QuotientWithSection quotient_with_section(std::size_t ambient, const Subspace& k);

/// Calls fn on every vector of F_p^n in lexicographic order while fn returns true.
void for_each_vector(Coeff p, std::size_t n, const std::function<bool(const Vec&)>& fn);

/// p^n saturated at UINT64_MAX.
std::uint64_t count_vectors(Coeff p, std::size_t n);

}  // namespace rlie
