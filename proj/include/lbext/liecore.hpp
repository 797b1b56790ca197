#pragma once

// Lie algebras, Lie coalgebras and Lie bialgebras given by structure
// constants, the small tensor toolkit their axioms are written in, and exact
// axiom checkers.

#include <array>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lbext/exactnum.hpp"

namespace lbext {

/// A finite basis with distinct labels.
class BasisSpace {
 public:
  BasisSpace() = default;
  explicit BasisSpace(std::vector<std::string> names);
  /// "prefix1", "prefix2", ...
  static BasisSpace numbered(std::string_view prefix, std::size_t dim);

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t k) const { return names_.at(k); }
  std::optional<std::size_t> index_of(std::string_view label) const;

  friend bool operator==(const BasisSpace&, const BasisSpace&) = default;

 private:
  std::vector<std::string> names_;
};

/// Dense row-major tensor of fixed rank over Q(i).
template <std::size_t Rank>
class Tensor {
 public:
  using Shape = std::array<std::size_t, Rank>;

  Tensor() { shape_.fill(0); }
  explicit Tensor(Shape shape) : shape_(shape), data_(count(shape)) {}
  Tensor(Shape shape, std::vector<Scalar> values) : shape_(shape), data_(std::move(values)) {
    if (data_.size() != count(shape_)) throw DimensionMismatch("tensor data length does not match shape");
  }

  const Shape& shape() const { return shape_; }
  std::size_t dim(std::size_t axis) const { return shape_[axis]; }
  std::size_t size() const { return data_.size(); }

  template <typename... I>
    requires(sizeof...(I) == Rank)
  Scalar& operator()(I... idx) {
    return data_[offset({static_cast<std::size_t>(idx)...})];
  }
  template <typename... I>
    requires(sizeof...(I) == Rank)
  const Scalar& operator()(I... idx) const {
    return data_[offset({static_cast<std::size_t>(idx)...})];
  }

  std::span<const Scalar> values() const { return data_; }
  std::span<Scalar> values() { return data_; }
  std::vector<Scalar> to_vector() const { return data_; }

  bool is_zero() const { return is_zero_vector(data_); }

  Tensor& operator+=(const Tensor& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (!o.data_[k].is_zero()) data_[k] += o.data_[k];
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (!o.data_[k].is_zero()) data_[k] -= o.data_[k];
    return *this;
  }
  Tensor& operator*=(const Scalar& s) {
    for (auto& v : data_)
      if (!v.is_zero()) v *= s;
    return *this;
  }
  Tensor operator-() const {
    Tensor out(*this);
    for (auto& v : out.data_) v = -v;
    return out;
  }

  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(Tensor a, const Scalar& s) { return a *= s; }
  friend Tensor operator*(const Scalar& s, Tensor a) { return a *= s; }
  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  static std::size_t count(const Shape& s) {
    return std::accumulate(s.begin(), s.end(), std::size_t{1}, std::multiplies<>());
  }
  std::size_t offset(const Shape& idx) const {
    std::size_t off = 0;
    for (std::size_t a = 0; a < Rank; ++a) off = off * shape_[a] + idx[a];
    return off;
  }
  void require_same_shape(const Tensor& o) const {
    if (shape_ != o.shape_) throw DimensionMismatch("tensor shape mismatch");
  }

  Shape shape_;
  std::vector<Scalar> data_;
};

using Vector = Tensor<1>;
using Tensor2 = Tensor<2>;
using Tensor3 = Tensor<3>;

Vector zero_vector(std::size_t dim);
Vector basis_vector(std::size_t dim, std::size_t k);
Vector make_vector(std::vector<Scalar> values);

/// Linear map `from -> to`; matrix is to.dim x from.dim, column j is the image
/// of basis vector j.
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(std::size_t from_dim, std::size_t to_dim) : matrix_(to_dim, from_dim) {}
  explicit LinearMap(Matrix matrix) : matrix_(std::move(matrix)) {}

  static LinearMap identity(std::size_t n) { return LinearMap(Matrix::identity(n)); }
  static LinearMap from_images(std::size_t to_dim, const std::vector<Vector>& images);

  std::size_t from_dim() const { return matrix_.cols(); }
  std::size_t to_dim() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }
  Scalar& operator()(std::size_t to, std::size_t from) { return matrix_(to, from); }
  const Scalar& operator()(std::size_t to, std::size_t from) const { return matrix_(to, from); }

  Vector apply(const Vector& x) const;
  Vector image(std::size_t from) const;
  /// this ∘ inner
  LinearMap after(const LinearMap& inner) const { return LinearMap(matrix_ * inner.matrix_); }
  bool is_zero() const { return is_zero_vector(matrix_.data()); }

  LinearMap operator+(const LinearMap& o) const;
  LinearMap operator-(const LinearMap& o) const;
  LinearMap operator*(const Scalar& s) const;
  friend bool operator==(const LinearMap&, const LinearMap&) = default;

 private:
  Matrix matrix_;
};

/// m(e_i, f_j) = sum_k c(i, j, k) g_k
class BilinearMap {
 public:
  BilinearMap() = default;
  BilinearMap(std::size_t left, std::size_t right, std::size_t target) : c_({left, right, target}) {}
  explicit BilinearMap(Tensor3 coeffs) : c_(std::move(coeffs)) {}

  std::size_t left_dim() const { return c_.dim(0); }
  std::size_t right_dim() const { return c_.dim(1); }
  std::size_t target_dim() const { return c_.dim(2); }

  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_(i, j, k); }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const { return c_(i, j, k); }
  const Tensor3& coeffs() const { return c_; }

  Vector on_basis(std::size_t i, std::size_t j) const;
  Vector apply(const Vector& l, const Vector& r) const;
  /// y -> m(e_i, y)
  LinearMap left_fixed(std::size_t i) const;
  LinearMap left_fixed(const Vector& l) const;
  /// x -> m(x, e_j)
  LinearMap right_fixed(std::size_t j) const;
  LinearMap right_fixed(const Vector& r) const;
  bool is_zero() const { return c_.is_zero(); }

  friend bool operator==(const BilinearMap&, const BilinearMap&) = default;

 private:
  Tensor3 c_;
};

/// Linear map into a tensor product: phi(e_i) = sum_{j,k} d(i, j, k) l_j ⊗ r_k.
/// Used for cobrackets and for the co-action maps of extending data.
class CobracketMap {
 public:
  CobracketMap() = default;
  CobracketMap(std::size_t source, std::size_t left, std::size_t right) : d_({source, left, right}) {}
  explicit CobracketMap(Tensor3 coeffs) : d_(std::move(coeffs)) {}

  std::size_t source_dim() const { return d_.dim(0); }
  std::size_t left_dim() const { return d_.dim(1); }
  std::size_t right_dim() const { return d_.dim(2); }

  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return d_(i, j, k); }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const { return d_(i, j, k); }
  const Tensor3& coeffs() const { return d_; }

  Tensor2 on_basis(std::size_t i) const;
  Tensor2 apply(const Vector& x) const;
  void set(std::size_t i, const Tensor2& value);
  bool is_zero() const { return d_.is_zero(); }

  friend bool operator==(const CobracketMap&, const CobracketMap&) = default;

 private:
  Tensor3 d_;
};

// Tensor toolkit ------------------------------------------------------------

/// τ(a⊗b) = b⊗a
Tensor2 twist(const Tensor2& t);
/// τ12(a⊗b⊗c) = b⊗a⊗c
Tensor3 twist12(const Tensor3& t);
Tensor2 outer(const Vector& a, const Vector& b);
Tensor3 outer(const Vector& a, const Tensor2& t);
Tensor3 outer(const Tensor2& t, const Vector& a);
/// a⊗b - b⊗a
Tensor2 wedge(const Vector& a, const Vector& b);
/// (F⊗G) t
Tensor2 on_legs(const LinearMap& f, const LinearMap& g, const Tensor2& t);
/// (F⊗G⊗H) t
Tensor3 on_legs(const LinearMap& f, const LinearMap& g, const LinearMap& h, const Tensor3& t);
/// (I⊗φ) t
Tensor3 on_right(const Tensor2& t, const CobracketMap& phi);
/// (φ⊗I) t
Tensor3 on_left(const CobracketMap& phi, const Tensor2& t);

/// t = -τ(t)
bool is_wedge(const Tensor2& t);

// Violation reports -----------------------------------------------------------

/// An exact residual tensor, flattened row-major.
struct Residual {
  std::vector<std::size_t> shape;
  std::vector<Scalar> values;

  template <std::size_t R>
  static Residual of(const Tensor<R>& t) {
    return {std::vector<std::size_t>(t.shape().begin(), t.shape().end()), t.to_vector()};
  }
  bool is_zero() const { return is_zero_vector(values); }
  friend bool operator==(const Residual&, const Residual&) = default;
};

struct Violation {
  std::string condition;
  std::vector<std::size_t> indices;  // 0-based basis indices
  std::vector<std::string> at;       // the matching basis labels
  Residual residual;
};

/// The outcome of a checker: an empty list means every condition holds.
class VerdictReport {
 public:
  bool valid() const { return violations_.empty(); }
  const std::vector<Violation>& violations() const { return violations_; }
  std::size_t count(std::string_view condition) const;
  bool has(std::string_view condition) const { return count(condition) > 0; }

  void add(Violation v) { violations_.push_back(std::move(v)); }
  /// Records a violation only when the residual is nonzero.
  template <std::size_t R>
  void check(std::string condition, std::vector<std::size_t> indices, std::vector<std::string> at,
             const Tensor<R>& residual) {
    if (!residual.is_zero())
      violations_.push_back({std::move(condition), std::move(indices), std::move(at), Residual::of(residual)});
  }
  void append(const VerdictReport& other);

 private:
  std::vector<Violation> violations_;
};

// Algebraic structures ----------------------------------------------------------

class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// Full dense table taken as is; an asymmetric table is representable so that
  /// the checker can reject it.
  LieAlgebra(BasisSpace space, BilinearMap bracket);
  /// Reads only the i < j entries; fills i > j by negation and zeroes the diagonal.
  static LieAlgebra from_upper_triangle(BasisSpace space, const BilinearMap& table);

  const BasisSpace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }
  const BilinearMap& bracket() const { return bracket_; }

  Vector bracket(const Vector& a, const Vector& b) const { return bracket_.apply(a, b); }
  Vector bracket(std::size_t i, std::size_t j) const { return bracket_.on_basis(i, j); }
  /// ad(a) = [a, ·]
  LinearMap ad(std::size_t i) const { return bracket_.left_fixed(i); }
  LinearMap ad(const Vector& a) const { return bracket_.left_fixed(a); }

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

 private:
  BasisSpace space_;
  BilinearMap bracket_;
};

class LieCoalgebra {
 public:
  LieCoalgebra() = default;
  LieCoalgebra(BasisSpace space, CobracketMap cobracket);

  const BasisSpace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }
  const CobracketMap& cobracket() const { return cobracket_; }
  Tensor2 cobracket(std::size_t i) const { return cobracket_.on_basis(i); }
  Tensor2 cobracket(const Vector& a) const { return cobracket_.apply(a); }

  friend bool operator==(const LieCoalgebra&, const LieCoalgebra&) = default;

 private:
  BasisSpace space_;
  CobracketMap cobracket_;
};

class LieBialgebra {
 public:
  LieBialgebra() = default;
  LieBialgebra(BasisSpace space, BilinearMap bracket, CobracketMap cobracket);
  LieBialgebra(const LieAlgebra& algebra, const LieCoalgebra& coalgebra);

  const BasisSpace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }
  const BilinearMap& bracket() const { return bracket_; }
  const CobracketMap& cobracket() const { return cobracket_; }
  LieAlgebra algebra() const { return {space_, bracket_}; }
  LieCoalgebra coalgebra() const { return {space_, cobracket_}; }

  Vector bracket(const Vector& a, const Vector& b) const { return bracket_.apply(a, b); }
  Tensor2 cobracket(const Vector& a) const { return cobracket_.apply(a); }
  LinearMap ad(std::size_t i) const { return bracket_.left_fixed(i); }
  LinearMap ad(const Vector& a) const { return bracket_.left_fixed(a); }

  friend bool operator==(const LieBialgebra&, const LieBialgebra&) = default;

 private:
  BasisSpace space_;
  BilinearMap bracket_;
  CobracketMap cobracket_;
};

/// a.t = sum [a, t1]⊗t2 + t1⊗[a, t2]
Tensor2 adjoint_act_tensor(const LieAlgebra& g, const Vector& a, const Tensor2& t);

/// Conditions "antisymmetry" and "jacobi".
VerdictReport check_lie_algebra(const LieAlgebra& g);
/// Conditions "co-antisymmetry" and "co-jacobi".
VerdictReport check_lie_coalgebra(const LieCoalgebra& g);
/// Both of the above plus "cocycle" on every basis pair.
VerdictReport check_lie_bialgebra(const LieBialgebra& g);

/// Structure constants of g expressed in a reordered basis: new basis k is old
/// basis order[k].
LieBialgebra permute_basis(const LieBialgebra& g, std::span<const std::size_t> order);

}  // namespace lbext
