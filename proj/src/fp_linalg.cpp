#include "rlie/fp_linalg.hpp"

#include <algorithm>
#include <limits>

namespace rlie {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(Coeff p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const {
  std::uint64_t result = 1 % p_;
  std::uint64_t base = a % p_;
  while (e > 0) {
    if (e & 1u) result = result * base % p_;
    base = base * base % p_;
    e >>= 1u;
  }
  return static_cast<Coeff>(result);
}

Coeff PrimeField::inv(Coeff a) const {
  if (a % p_ == 0) throw std::domain_error("division by zero in F_p");
  return pow(a, p_ - 2);
}

Vec PrimeField::unit(std::size_t n, std::size_t i) const {
  Vec v(n, 0);
  v.at(i) = 1;
  return v;
}

Vec PrimeField::add(const Vec& a, const Vec& b) const {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = add(a[i], b[i]);
  return r;
}

Vec PrimeField::sub(const Vec& a, const Vec& b) const {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = sub(a[i], b[i]);
  return r;
}

Vec PrimeField::neg(const Vec& a) const {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = neg(a[i]);
  return r;
}

Vec PrimeField::scale(Coeff s, const Vec& a) const {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul(s, a[i]);
  return r;
}

void PrimeField::axpy(Vec& y, Coeff a, const Vec& x) const {
  if (y.size() != x.size()) throw std::invalid_argument("vector length mismatch");
  if (a == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) y[i] = static_cast<Coeff>((y[i] + std::uint64_t{a} * x[i]) % p_);
}

bool PrimeField::is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Coeff c) { return c == 0; });
}

// ---------------------------------------------------------------------------

Matrix Matrix::identity(Coeff p, std::size_t n) {
  Matrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

Matrix Matrix::from_rows(Coeff p, std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(p, rows.size(), cols);
  PrimeField f(p);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("Matrix::from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m.data_[r * cols + c] = f.reduce(rows[r][c]);
  }
  return m;
}

Matrix Matrix::from_columns(Coeff p, std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(p, rows, cols.size());
  PrimeField f(p);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("Matrix::from_columns: ragged columns");
    for (std::size_t r = 0; r < rows; ++r) m.data_[r * cols.size() + c] = f.reduce(cols[c][r]);
  }
  return m;
}

Matrix Matrix::unflatten(Coeff p, std::size_t rows, std::size_t cols, const Vec& flat) {
  if (flat.size() != rows * cols) throw std::invalid_argument("Matrix::unflatten: size mismatch");
  Matrix m(p, rows, cols);
  PrimeField f(p);
  for (std::size_t i = 0; i < flat.size(); ++i) m.data_[i] = f.reduce(flat[i]);
  return m;
}

Matrix Matrix::of_linear_map(Coeff p, std::size_t in_dim, std::size_t out_dim,
                             const std::function<Vec(const Vec&)>& map) {
  PrimeField f(p);
  std::vector<Vec> cols;
  cols.reserve(in_dim);
  for (std::size_t k = 0; k < in_dim; ++k) {
    Vec img = map(f.unit(in_dim, k));
    if (img.size() != out_dim) throw std::invalid_argument("Matrix::of_linear_map: image has wrong length");
    cols.push_back(std::move(img));
  }
  return from_columns(p, out_dim, cols);
}

void Matrix::set(std::size_t r, std::size_t c, std::int64_t v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("Matrix::set");
  data_[r * cols_ + c] = PrimeField(p_).reduce(v);
}

Vec Matrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = data_[r * cols_ + c];
  return v;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: dimension mismatch");
  Vec out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    const Coeff* row = data_.data() + r * cols_;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (row[c] != 0 && v[c] != 0) acc = (acc + std::uint64_t{row[c]} * v[c]) % p_;
    }
    out[r] = static_cast<Coeff>(acc);
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_ || p_ != o.p_) throw std::invalid_argument("Matrix::operator*: shape mismatch");
  Matrix m(p_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Coeff a = data_[r * cols_ + k];
      if (a == 0) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) {
        const Coeff b = o.data_[k * o.cols_ + c];
        if (b != 0) m.data_[r * o.cols_ + c] = static_cast<Coeff>((m.data_[r * o.cols_ + c] + std::uint64_t{a} * b) % p_);
      }
    }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_) throw std::invalid_argument("Matrix::operator+: shape mismatch");
  Matrix m(*this);
  PrimeField f(p_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = f.add(data_[i], o.data_[i]);
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_) throw std::invalid_argument("Matrix::operator-: shape mismatch");
  Matrix m(*this);
  PrimeField f(p_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = f.sub(data_[i], o.data_[i]);
  return m;
}

Matrix Matrix::scaled(Coeff s) const {
  Matrix m(*this);
  PrimeField f(p_);
  for (auto& x : m.data_) x = f.mul(s % p_, x);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(p_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.data_[c * rows_ + r] = data_[r * cols_ + c];
  return m;
}

Matrix Matrix::pow(std::uint64_t e) const {
  if (rows_ != cols_) throw std::invalid_argument("Matrix::pow: not square");
  Matrix result = identity(p_, rows_);
  Matrix base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

Matrix Matrix::hstack(const Matrix& right) const {
  if (rows_ != right.rows_) throw std::invalid_argument("Matrix::hstack: row mismatch");
  Matrix m(p_, rows_, cols_ + right.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m.data_[r * m.cols_ + c] = data_[r * cols_ + c];
    for (std::size_t c = 0; c < right.cols_; ++c) m.data_[r * m.cols_ + cols_ + c] = right.data_[r * right.cols_ + c];
  }
  return m;
}

Matrix Matrix::vstack(const Matrix& below) const {
  if (cols_ != below.cols_) throw std::invalid_argument("Matrix::vstack: column mismatch");
  Matrix m(p_, rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), m.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(), m.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return m;
}

Matrix Matrix::direct_sum(const Matrix& o) const {
  Matrix m(p_, rows_ + o.rows_, cols_ + o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.data_[r * m.cols_ + c] = data_[r * cols_ + c];
  for (std::size_t r = 0; r < o.rows_; ++r)
    for (std::size_t c = 0; c < o.cols_; ++c) m.data_[(rows_ + r) * m.cols_ + cols_ + c] = o.data_[r * o.cols_ + c];
  return m;
}

// ---------------------------------------------------------------------------

RrefResult rref(const Matrix& input) {
  Matrix m = input;
  PrimeField f(m.modulus());
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<Vec> a(rows);
  for (std::size_t r = 0; r < rows; ++r) a[r] = m.row(r);

  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows; ++c) {
    std::size_t sel = next;
    while (sel < rows && a[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[next]);
    const Coeff inv = f.inv(a[next][c]);
    a[next] = f.scale(inv, a[next]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r != next && a[r][c] != 0) f.axpy(a[r], f.neg(a[r][c]), a[next]);
    }
    pivots.push_back(c);
    ++next;
  }
  return {Matrix::from_rows(m.modulus(), cols, a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

Subspace Subspace::span(Coeff p, std::size_t ambient, const std::vector<Vec>& generators) {
  Subspace s(p, ambient);
  if (generators.empty()) return s;
  auto r = rref(Matrix::from_rows(p, ambient, generators));
  for (std::size_t i = 0; i < r.rank(); ++i) s.basis_.push_back(r.reduced.row(i));
  s.pivots_ = std::move(r.pivots);
  return s;
}

Subspace Subspace::full(Coeff p, std::size_t ambient) {
  PrimeField f(p);
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < ambient; ++i) gens.push_back(f.unit(ambient, i));
  return span(p, ambient, gens);
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("Subspace::reduce: dimension mismatch");
  PrimeField f(p_);
  Vec r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Coeff c = r[pivots_[i]];
    if (c != 0) f.axpy(r, f.neg(c), basis_[i]);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return PrimeField::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vec& v) { return contains(v); });
}

Vec Subspace::coordinates(const Vec& v) const {
  if (!contains(v)) throw std::invalid_argument("Subspace::coordinates: vector not in subspace");
  Vec c(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace::sum: ambient mismatch");
  std::vector<Vec> gens = basis_;
  gens.insert(gens.end(), other.basis_.begin(), other.basis_.end());
  return span(p_, ambient_, gens);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace::intersect: ambient mismatch");
  // Solve sum a_i u_i = sum b_j w_j; the intersection is spanned by the u-combinations.
  const std::size_t k = basis_.size();
  const std::size_t l = other.basis_.size();
  if (k == 0 || l == 0) return Subspace(p_, ambient_);
  Matrix sys(p_, ambient_, k + l);
  PrimeField f(p_);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t r = 0; r < ambient_; ++r) sys.set(r, i, basis_[i][r]);
  for (std::size_t j = 0; j < l; ++j)
    for (std::size_t r = 0; r < ambient_; ++r) sys.set(r, k + j, f.neg(other.basis_[j][r]));
  std::vector<Vec> gens;
  const Subspace solutions = kernel(sys);
  for (const auto& sol : solutions.basis()) {
    Vec v(ambient_, 0);
    for (std::size_t i = 0; i < k; ++i) f.axpy(v, sol[i], basis_[i]);
    gens.push_back(std::move(v));
  }
  return span(p_, ambient_, gens);
}

Subspace Subspace::image_under(const Matrix& map) const {
  if (map.cols() != ambient_) throw std::invalid_argument("Subspace::image_under: dimension mismatch");
  std::vector<Vec> gens;
  for (const auto& b : basis_) gens.push_back(map.apply(b));
  return span(p_, map.rows(), gens);
}

Matrix Subspace::basis_matrix() const { return Matrix::from_columns(p_, ambient_, basis_); }

// ---------------------------------------------------------------------------

LinearSolution solve_linear(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_linear: dimension mismatch");
  const Coeff p = a.modulus();
  PrimeField f(p);
  Matrix aug = a.hstack(Matrix::from_columns(p, a.rows(), {b}));
  auto r = rref(aug);
  LinearSolution out{std::nullopt, kernel(a)};
  for (std::size_t piv : r.pivots)
    if (piv == a.cols()) return out;  // inconsistent
  Vec x(a.cols(), 0);
  for (std::size_t i = 0; i < r.rank(); ++i) x[r.pivots[i]] = r.reduced(i, a.cols());
  out.particular = std::move(x);
  return out;
}

Subspace kernel(const Matrix& a) {
  const Coeff p = a.modulus();
  PrimeField f(p);
  auto r = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : r.pivots) is_pivot[c] = true;
  std::vector<Vec> gens;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(a.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < r.rank(); ++i) v[r.pivots[i]] = f.neg(r.reduced(i, free));
    gens.push_back(std::move(v));
  }
  return Subspace::span(p, a.cols(), gens);
}

Subspace image(const Matrix& a) {
  std::vector<Vec> cols;
  for (std::size_t c = 0; c < a.cols(); ++c) cols.push_back(a.column(c));
  return Subspace::span(a.modulus(), a.rows(), cols);
}

std::pair<Subspace, Subspace> kernel_image(const Matrix& a) { return {kernel(a), image(a)}; }

LinearSolution solve_affine(Coeff p, std::size_t unknowns, std::size_t equations,
                            const std::function<Vec(const Vec&)>& map) {
  PrimeField f(p);
  const Vec constant = map(f.zero(unknowns));
  if (constant.size() != equations) throw std::invalid_argument("solve_affine: wrong equation count");
  Matrix linear = Matrix::of_linear_map(p, unknowns, equations,
                                        [&](const Vec& e) { return f.sub(map(e), constant); });
  return solve_linear(linear, f.neg(constant));
}

std::vector<Matrix> solve_homogeneous_matrices(Coeff p, std::size_t rows, std::size_t cols,
                                               const std::function<Vec(const Matrix&)>& constraint) {
  const std::size_t unknowns = rows * cols;
  const std::size_t equations = constraint(Matrix::zero(p, rows, cols)).size();
  const Matrix system = Matrix::of_linear_map(p, unknowns, equations, [&](const Vec& flat) {
    return constraint(Matrix::unflatten(p, rows, cols, flat));
  });
  std::vector<Matrix> out;
  const Subspace sol = kernel(system);
  for (const auto& v : sol.basis()) out.push_back(Matrix::unflatten(p, rows, cols, v));
  return out;
}

QuotientWithSection quotient_with_section(std::size_t ambient, const Subspace& k) {
  if (k.ambient_dim() != ambient) throw std::invalid_argument("quotient_with_section: ambient mismatch");
  const Coeff p = k.modulus();
  std::vector<bool> is_pivot(ambient, false);
  for (auto c : k.pivots()) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < ambient; ++c)
    if (!is_pivot[c]) free.push_back(c);

  QuotientWithSection q;
  q.ambient = ambient;
  q.kernel = k;
  q.projection = Matrix(p, free.size(), ambient);
  q.section = Matrix(p, ambient, free.size());
  PrimeField f(p);
  for (std::size_t c = 0; c < ambient; ++c) {
    const Vec red = k.reduce(f.unit(ambient, c));
    for (std::size_t i = 0; i < free.size(); ++i) q.projection.set(i, c, red[free[i]]);
  }
  for (std::size_t i = 0; i < free.size(); ++i) q.section.set(free[i], i, 1);
  return q;
}

void for_each_vector(Coeff p, std::size_t n, const std::function<bool(const Vec&)>& fn) {
  Vec v(n, 0);
  while (true) {
    if (!fn(v)) return;
    std::size_t i = 0;
    while (i < n) {
      if (++v[i] < p) break;
      v[i] = 0;
      ++i;
    }
    if (i == n) return;
  }
}

std::uint64_t count_vectors(Coeff p, std::size_t n) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / p) return std::numeric_limits<std::uint64_t>::max();
    total *= p;
  }
  return total;
}

}  // namespace rlie
