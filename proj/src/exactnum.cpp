#include "lbext/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace lbext {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

Rational parse_rational(std::string_view body, std::string_view whole) {
  auto digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!digits(num) || (slash != std::string_view::npos && !digits(den)))
    throw ParseError("malformed scalar '" + std::string(whole) + "'");
  Rational q;
  q.get_num() = mpz_class(std::string(num), 10);
  q.get_den() = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (q.get_den() == 0) throw ParseError("zero denominator in scalar '" + std::string(whole) + "'");
  q.canonicalize();
  return q;
}

std::string normalise_minus(std::string_view text) {
  // accept U+2212 as well as ASCII '-'; drop whitespace
  std::string out;
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text.substr(k, 3) == "\xE2\x88\x92") {
      out.push_back('-');
      k += 2;
    } else if (!std::isspace(static_cast<unsigned char>(text[k]))) {
      out.push_back(text[k]);
    }
  }
  return out;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  const std::string s = normalise_minus(text);
  if (s.empty()) throw ParseError("empty scalar");

  std::vector<std::string_view> terms;
  std::size_t start = 0;
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (s[k] == '+' || s[k] == '-') {
      terms.emplace_back(s.data() + start, k - start);
      start = k;
    }
  }
  terms.emplace_back(s.data() + start, s.size() - start);
  if (terms.size() > 2) throw ParseError("malformed scalar '" + std::string(text) + "'");

  bool seen_re = false, seen_im = false;
  Rational re, im;
  for (std::string_view term : terms) {
    bool negative = false;
    if (term.front() == '+' || term.front() == '-') {
      negative = term.front() == '-';
      term.remove_prefix(1);
    }
    if (term.empty()) throw ParseError("malformed scalar '" + std::string(text) + "'");
    if (term.back() == 'i') {
      term.remove_suffix(1);
      if (!term.empty() && term.back() == '*') {
        term.remove_suffix(1);
        if (term.empty()) throw ParseError("malformed scalar '" + std::string(text) + "'");
      }
      if (seen_im) throw ParseError("two imaginary parts in '" + std::string(text) + "'");
      seen_im = true;
      im = term.empty() ? Rational(1) : parse_rational(term, text);
      if (negative) im = -im;
    } else {
      if (seen_re) throw ParseError("two real parts in '" + std::string(text) + "'");
      seen_re = true;
      re = parse_rational(term, text);
      if (negative) re = -re;
    }
  }
  return Scalar(re, im);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Rational norm = re_ * re_ + im_ * im_;
  return Scalar(re_ / norm, -im_ / norm);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DivisionByZero();
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string Scalar::str() const {
  if (sgn(im_) == 0) return to_string(re_);
  std::string out = to_string(re_);
  out += sgn(im_) < 0 ? "-" : "+";
  out += to_string(abs(im_));
  out += "*i";
  return out;
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  return {};
}

// ---------------------------------------------------------------------------

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw DimensionMismatch("matrix data length does not match shape");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<std::vector<Scalar>>& rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
  }
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<std::vector<Scalar>>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionMismatch("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

std::vector<Scalar> Matrix::column(std::size_t c) const {
  std::vector<Scalar> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

std::vector<Scalar> Matrix::apply(std::span<const Scalar> x) const {
  if (x.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
  std::vector<Scalar> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!x[c].is_zero() && !(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * x[c];
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix out(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c)
        if (!o(k, c).is_zero()) out(r, c) += a * o(k, c);
    }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

RowEchelon rref(Matrix m) {
  RowEchelon out;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(lead_row, c));

    const Scalar inv = m(lead_row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(lead_row, c) *= inv;

    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, col).is_zero()) continue;
      const Scalar factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(lead_row, c).is_zero()) m(r, c) -= factor * m(lead_row, c);
    }
    out.pivots.push_back(col);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  RowEchelon e = rref(std::move(aug));
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

std::vector<Scalar> SolutionSpace::point(std::span<const Scalar> coeffs) const {
  if (!particular) throw Error("point of an inconsistent solution space");
  if (coeffs.size() != basis.size()) throw DimensionMismatch("coefficient count does not match dimension");
  std::vector<Scalar> out = *particular;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    for (std::size_t j = 0; j < ambient_dim; ++j) out[j] += coeffs[k] * basis[k][j];
  }
  return out;
}

namespace {

// Kernel basis read off an RREF of the coefficient block (first `cols` columns).
std::vector<std::vector<Scalar>> kernel_from_rref(const RowEchelon& e, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  std::size_t coeff_rank = 0;
  for (std::size_t p : e.pivots)
    if (p < cols) {
      is_pivot[p] = true;
      ++coeff_rank;
    }
  std::vector<std::vector<Scalar>> raw;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < coeff_rank; ++r) v[e.pivots[r]] = -e.reduced(r, free);
    raw.push_back(std::move(v));
  }
  return span_basis(raw, cols);
}

}  // namespace

SolutionSpace solve_affine(const Matrix& a, std::span<const Scalar> b) {
  if (a.rows() != b.size()) throw DimensionMismatch("solve_affine: rows of A and length of b differ");
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  RowEchelon e = rref(std::move(aug));

  SolutionSpace out;
  out.ambient_dim = n;
  if (!e.pivots.empty() && e.pivots.back() == n) return out;  // inconsistent

  std::vector<Scalar> particular(n);
  for (std::size_t r = 0; r < e.rank(); ++r) particular[e.pivots[r]] = e.reduced(r, n);
  out.particular = std::move(particular);
  out.basis = kernel_from_rref(e, n);
  return out;
}

SolutionSpace nullspace(const Matrix& a) {
  SolutionSpace out;
  out.ambient_dim = a.cols();
  out.particular = std::vector<Scalar>(a.cols());
  out.basis = kernel_from_rref(rref(a), a.cols());
  return out;
}

std::vector<std::vector<Scalar>> span_basis(const std::vector<std::vector<Scalar>>& vectors,
                                            std::size_t dim) {
  if (vectors.empty()) return {};
  RowEchelon e = rref(Matrix::from_rows(dim, vectors));
  std::vector<std::vector<Scalar>> out;
  for (std::size_t r = 0; r < e.rank(); ++r) {
    auto row = e.reduced.row(r);
    out.emplace_back(row.begin(), row.end());
  }
  return out;
}

std::vector<Scalar> reduce_modulo(std::vector<Scalar> v,
                                  const std::vector<std::vector<Scalar>>& rref_basis) {
  for (const auto& row : rref_basis) {
    std::size_t pivot = 0;
    while (pivot < row.size() && row[pivot].is_zero()) ++pivot;
    if (pivot == row.size() || v[pivot].is_zero()) continue;
    const Scalar factor = v[pivot] / row[pivot];
    for (std::size_t k = pivot; k < v.size(); ++k)
      if (!row[k].is_zero()) v[k] -= factor * row[k];
  }
  return v;
}

bool is_zero_vector(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

}  // namespace lbext
