#pragma once

// Exact arithmetic over the Gaussian rationals Q(i) and dense linear algebra.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lbext/errors.hpp"

namespace lbext {

/// Arbitrary precision rational, always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;

std::string to_string(const Rational& q);

/// re + im*i with exact rational parts.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT: integers promote implicitly
  Scalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar i() { return Scalar(0, 1); }
  static Scalar ratio(long num, long den) { return Scalar(Rational(num, den)); }

  /// Parses "p", "p/q", "re+im*i", "2i", "-i", "1/3-2/5*i" ...
  static Scalar parse(std::string_view text);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  Scalar inverse() const;

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Canonical text: "p/q" (denominator omitted when 1), or "re+im*i" when the
  /// imaginary part is nonzero.
  std::string str() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

enum class ArithOp { add, sub, mul, div };

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op);

/// Dense row-major matrix of scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::size_t cols, const std::vector<std::vector<Scalar>>& rows);
  static Matrix from_columns(std::size_t rows, const std::vector<std::vector<Scalar>>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<Scalar> column(std::size_t c) const;
  const std::vector<Scalar>& data() const { return data_; }

  std::vector<Scalar> apply(std::span<const Scalar> x) const;
  Matrix operator*(const Matrix& o) const;
  Matrix transpose() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form; leftmost pivot column first, topmost candidate row.
RowEchelon rref(Matrix m);

std::size_t rank(const Matrix& m);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Affine solution set of a linear system.
struct SolutionSpace {
  std::size_t ambient_dim = 0;
  std::optional<std::vector<Scalar>> particular;  // nullopt when inconsistent
  std::vector<std::vector<Scalar>> basis;         // rows of an RREF matrix

  bool consistent() const { return particular.has_value(); }
  std::size_t dimension() const { return basis.size(); }
  /// particular + sum coeffs[i] * basis[i]
  std::vector<Scalar> point(std::span<const Scalar> coeffs) const;
};

SolutionSpace solve_affine(const Matrix& a, std::span<const Scalar> b);
SolutionSpace nullspace(const Matrix& a);

/// RREF basis of the span of the given vectors (zero vectors dropped).
std::vector<std::vector<Scalar>> span_basis(const std::vector<std::vector<Scalar>>& vectors,
                                            std::size_t dim);

/// Reduces v modulo an RREF basis: clears every pivot coordinate of the basis.
std::vector<Scalar> reduce_modulo(std::vector<Scalar> v,
                                  const std::vector<std::vector<Scalar>>& rref_basis);

bool is_zero_vector(std::span<const Scalar> v);

}  // namespace lbext
