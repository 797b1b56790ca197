#include "lbext/liecore.hpp"

#include <algorithm>
#include <set>

namespace lbext {

BasisSpace::BasisSpace(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw ParseError("empty basis label");
    if (!seen.insert(n).second) throw ParseError("duplicate basis label '" + n + "'");
  }
}

BasisSpace BasisSpace::numbered(std::string_view prefix, std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < dim; ++k) names.push_back(std::string(prefix) + std::to_string(k + 1));
  return BasisSpace(std::move(names));
}

std::optional<std::size_t> BasisSpace::index_of(std::string_view label) const {
  auto it = std::find(names_.begin(), names_.end(), label);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

Vector zero_vector(std::size_t dim) { return Vector(Vector::Shape{dim}); }

Vector basis_vector(std::size_t dim, std::size_t k) {
  Vector v = zero_vector(dim);
  v(k) = 1;
  return v;
}

Vector make_vector(std::vector<Scalar> values) {
  const std::size_t n = values.size();
  return Vector(Vector::Shape{n}, std::move(values));
}

// LinearMap ---------------------------------------------------------------------

LinearMap LinearMap::from_images(std::size_t to_dim, const std::vector<Vector>& images) {
  LinearMap m(images.size(), to_dim);
  for (std::size_t j = 0; j < images.size(); ++j) {
    if (images[j].dim(0) != to_dim) throw DimensionMismatch("image has the wrong dimension");
    for (std::size_t i = 0; i < to_dim; ++i) m(i, j) = images[j](i);
  }
  return m;
}

Vector LinearMap::apply(const Vector& x) const {
  if (x.dim(0) != from_dim()) throw DimensionMismatch("linear map applied to a vector of the wrong dimension");
  return make_vector(matrix_.apply(x.values()));
}

Vector LinearMap::image(std::size_t from) const { return make_vector(matrix_.column(from)); }

LinearMap LinearMap::operator+(const LinearMap& o) const {
  if (from_dim() != o.from_dim() || to_dim() != o.to_dim()) throw DimensionMismatch("linear map shapes differ");
  LinearMap out(*this);
  for (std::size_t r = 0; r < to_dim(); ++r)
    for (std::size_t c = 0; c < from_dim(); ++c) out(r, c) += o(r, c);
  return out;
}

LinearMap LinearMap::operator-(const LinearMap& o) const { return *this + o * Scalar(-1); }

LinearMap LinearMap::operator*(const Scalar& s) const {
  LinearMap out(*this);
  for (std::size_t r = 0; r < to_dim(); ++r)
    for (std::size_t c = 0; c < from_dim(); ++c) out(r, c) *= s;
  return out;
}

// BilinearMap -------------------------------------------------------------------

Vector BilinearMap::on_basis(std::size_t i, std::size_t j) const {
  Vector out = zero_vector(target_dim());
  for (std::size_t k = 0; k < target_dim(); ++k) out(k) = c_(i, j, k);
  return out;
}

Vector BilinearMap::apply(const Vector& l, const Vector& r) const {
  if (l.dim(0) != left_dim() || r.dim(0) != right_dim())
    throw DimensionMismatch("bilinear map applied to vectors of the wrong dimension");
  Vector out = zero_vector(target_dim());
  for (std::size_t i = 0; i < left_dim(); ++i) {
    if (l(i).is_zero()) continue;
    for (std::size_t j = 0; j < right_dim(); ++j) {
      if (r(j).is_zero()) continue;
      const Scalar w = l(i) * r(j);
      for (std::size_t k = 0; k < target_dim(); ++k)
        if (!c_(i, j, k).is_zero()) out(k) += w * c_(i, j, k);
    }
  }
  return out;
}

LinearMap BilinearMap::left_fixed(std::size_t i) const {
  LinearMap m(right_dim(), target_dim());
  for (std::size_t j = 0; j < right_dim(); ++j)
    for (std::size_t k = 0; k < target_dim(); ++k) m(k, j) = c_(i, j, k);
  return m;
}

LinearMap BilinearMap::left_fixed(const Vector& l) const {
  LinearMap m(right_dim(), target_dim());
  for (std::size_t i = 0; i < left_dim(); ++i)
    if (!l(i).is_zero()) m = m + left_fixed(i) * l(i);
  return m;
}

LinearMap BilinearMap::right_fixed(std::size_t j) const {
  LinearMap m(left_dim(), target_dim());
  for (std::size_t i = 0; i < left_dim(); ++i)
    for (std::size_t k = 0; k < target_dim(); ++k) m(k, i) = c_(i, j, k);
  return m;
}

LinearMap BilinearMap::right_fixed(const Vector& r) const {
  LinearMap m(left_dim(), target_dim());
  for (std::size_t j = 0; j < right_dim(); ++j)
    if (!r(j).is_zero()) m = m + right_fixed(j) * r(j);
  return m;
}

// CobracketMap ------------------------------------------------------------------

Tensor2 CobracketMap::on_basis(std::size_t i) const {
  Tensor2 out({left_dim(), right_dim()});
  for (std::size_t j = 0; j < left_dim(); ++j)
    for (std::size_t k = 0; k < right_dim(); ++k) out(j, k) = d_(i, j, k);
  return out;
}

Tensor2 CobracketMap::apply(const Vector& x) const {
  if (x.dim(0) != source_dim()) throw DimensionMismatch("co-map applied to a vector of the wrong dimension");
  Tensor2 out({left_dim(), right_dim()});
  for (std::size_t i = 0; i < source_dim(); ++i) {
    if (x(i).is_zero()) continue;
    for (std::size_t j = 0; j < left_dim(); ++j)
      for (std::size_t k = 0; k < right_dim(); ++k)
        if (!d_(i, j, k).is_zero()) out(j, k) += x(i) * d_(i, j, k);
  }
  return out;
}

void CobracketMap::set(std::size_t i, const Tensor2& value) {
  if (value.dim(0) != left_dim() || value.dim(1) != right_dim()) throw DimensionMismatch("co-map value has the wrong shape");
  for (std::size_t j = 0; j < left_dim(); ++j)
    for (std::size_t k = 0; k < right_dim(); ++k) d_(i, j, k) = value(j, k);
}

// Tensor toolkit ----------------------------------------------------------------

Tensor2 twist(const Tensor2& t) {
  Tensor2 out({t.dim(1), t.dim(0)});
  for (std::size_t i = 0; i < t.dim(0); ++i)
    for (std::size_t j = 0; j < t.dim(1); ++j) out(j, i) = t(i, j);
  return out;
}

Tensor3 twist12(const Tensor3& t) {
  Tensor3 out({t.dim(1), t.dim(0), t.dim(2)});
  for (std::size_t i = 0; i < t.dim(0); ++i)
    for (std::size_t j = 0; j < t.dim(1); ++j)
      for (std::size_t k = 0; k < t.dim(2); ++k) out(j, i, k) = t(i, j, k);
  return out;
}

Tensor2 outer(const Vector& a, const Vector& b) {
  Tensor2 out({a.dim(0), b.dim(0)});
  for (std::size_t i = 0; i < a.dim(0); ++i) {
    if (a(i).is_zero()) continue;
    for (std::size_t j = 0; j < b.dim(0); ++j)
      if (!b(j).is_zero()) out(i, j) = a(i) * b(j);
  }
  return out;
}

Tensor3 outer(const Vector& a, const Tensor2& t) {
  Tensor3 out({a.dim(0), t.dim(0), t.dim(1)});
  for (std::size_t i = 0; i < a.dim(0); ++i) {
    if (a(i).is_zero()) continue;
    for (std::size_t j = 0; j < t.dim(0); ++j)
      for (std::size_t k = 0; k < t.dim(1); ++k)
        if (!t(j, k).is_zero()) out(i, j, k) = a(i) * t(j, k);
  }
  return out;
}

Tensor3 outer(const Tensor2& t, const Vector& a) {
  Tensor3 out({t.dim(0), t.dim(1), a.dim(0)});
  for (std::size_t i = 0; i < t.dim(0); ++i)
    for (std::size_t j = 0; j < t.dim(1); ++j) {
      if (t(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < a.dim(0); ++k)
        if (!a(k).is_zero()) out(i, j, k) = t(i, j) * a(k);
    }
  return out;
}

Tensor2 wedge(const Vector& a, const Vector& b) { return outer(a, b) - outer(b, a); }

Tensor2 on_legs(const LinearMap& f, const LinearMap& g, const Tensor2& t) {
  if (t.dim(0) != f.from_dim() || t.dim(1) != g.from_dim()) throw DimensionMismatch("on_legs: tensor shape mismatch");
  Tensor2 out({f.to_dim(), g.to_dim()});
  for (std::size_t i = 0; i < t.dim(0); ++i)
    for (std::size_t j = 0; j < t.dim(1); ++j) {
      if (t(i, j).is_zero()) continue;
      for (std::size_t p = 0; p < f.to_dim(); ++p) {
        if (f(p, i).is_zero()) continue;
        const Scalar w = t(i, j) * f(p, i);
        for (std::size_t q = 0; q < g.to_dim(); ++q)
          if (!g(q, j).is_zero()) out(p, q) += w * g(q, j);
      }
    }
  return out;
}

Tensor3 on_legs(const LinearMap& f, const LinearMap& g, const LinearMap& h, const Tensor3& t) {
  if (t.dim(0) != f.from_dim() || t.dim(1) != g.from_dim() || t.dim(2) != h.from_dim())
    throw DimensionMismatch("on_legs: tensor shape mismatch");
  Tensor3 out({f.to_dim(), g.to_dim(), h.to_dim()});
  for (std::size_t i = 0; i < t.dim(0); ++i)
    for (std::size_t j = 0; j < t.dim(1); ++j)
      for (std::size_t k = 0; k < t.dim(2); ++k) {
        if (t(i, j, k).is_zero()) continue;
        for (std::size_t p = 0; p < f.to_dim(); ++p) {
          if (f(p, i).is_zero()) continue;
          const Scalar w1 = t(i, j, k) * f(p, i);
          for (std::size_t q = 0; q < g.to_dim(); ++q) {
            if (g(q, j).is_zero()) continue;
            const Scalar w2 = w1 * g(q, j);
            for (std::size_t r = 0; r < h.to_dim(); ++r)
              if (!h(r, k).is_zero()) out(p, q, r) += w2 * h(r, k);
          }
        }
      }
  return out;
}

Tensor3 on_right(const Tensor2& t, const CobracketMap& phi) {
  if (t.dim(1) != phi.source_dim()) throw DimensionMismatch("on_right: tensor shape mismatch");
  Tensor3 out({t.dim(0), phi.left_dim(), phi.right_dim()});
  for (std::size_t i = 0; i < t.dim(0); ++i)
    for (std::size_t s = 0; s < t.dim(1); ++s) {
      if (t(i, s).is_zero()) continue;
      for (std::size_t j = 0; j < phi.left_dim(); ++j)
        for (std::size_t k = 0; k < phi.right_dim(); ++k)
          if (!phi(s, j, k).is_zero()) out(i, j, k) += t(i, s) * phi(s, j, k);
    }
  return out;
}

Tensor3 on_left(const CobracketMap& phi, const Tensor2& t) {
  if (t.dim(0) != phi.source_dim()) throw DimensionMismatch("on_left: tensor shape mismatch");
  Tensor3 out({phi.left_dim(), phi.right_dim(), t.dim(1)});
  for (std::size_t s = 0; s < t.dim(0); ++s)
    for (std::size_t r = 0; r < t.dim(1); ++r) {
      if (t(s, r).is_zero()) continue;
      for (std::size_t j = 0; j < phi.left_dim(); ++j)
        for (std::size_t k = 0; k < phi.right_dim(); ++k)
          if (!phi(s, j, k).is_zero()) out(j, k, r) += t(s, r) * phi(s, j, k);
    }
  return out;
}

bool is_wedge(const Tensor2& t) {
  if (t.dim(0) != t.dim(1)) return false;
  return (t + twist(t)).is_zero();
}

// Reports -----------------------------------------------------------------------

std::size_t VerdictReport::count(std::string_view condition) const {
  return static_cast<std::size_t>(
      std::count_if(violations_.begin(), violations_.end(), [&](const Violation& v) { return v.condition == condition; }));
}

void VerdictReport::append(const VerdictReport& other) {
  violations_.insert(violations_.end(), other.violations_.begin(), other.violations_.end());
}

// Structures --------------------------------------------------------------------

namespace {

void require_bracket_shape(const BasisSpace& s, const BilinearMap& m) {
  const std::size_t n = s.dim();
  if (m.left_dim() != n || m.right_dim() != n || m.target_dim() != n)
    throw DimensionMismatch("bracket table does not match the basis");
}

void require_cobracket_shape(const BasisSpace& s, const CobracketMap& m) {
  const std::size_t n = s.dim();
  if (m.source_dim() != n || m.left_dim() != n || m.right_dim() != n)
    throw DimensionMismatch("cobracket table does not match the basis");
}

std::vector<std::string> labels(const BasisSpace& s, std::initializer_list<std::size_t> idx) {
  std::vector<std::string> out;
  for (auto k : idx) out.push_back(s.name(k));
  return out;
}

}  // namespace

LieAlgebra::LieAlgebra(BasisSpace space, BilinearMap bracket) : space_(std::move(space)), bracket_(std::move(bracket)) {
  require_bracket_shape(space_, bracket_);
}

LieAlgebra LieAlgebra::from_upper_triangle(BasisSpace space, const BilinearMap& table) {
  require_bracket_shape(space, table);
  const std::size_t n = space.dim();
  BilinearMap full(n, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        full(i, j, k) = table(i, j, k);
        full(j, i, k) = -table(i, j, k);
      }
  return LieAlgebra(std::move(space), std::move(full));
}

LieCoalgebra::LieCoalgebra(BasisSpace space, CobracketMap cobracket)
    : space_(std::move(space)), cobracket_(std::move(cobracket)) {
  require_cobracket_shape(space_, cobracket_);
}

LieBialgebra::LieBialgebra(BasisSpace space, BilinearMap bracket, CobracketMap cobracket)
    : space_(std::move(space)), bracket_(std::move(bracket)), cobracket_(std::move(cobracket)) {
  require_bracket_shape(space_, bracket_);
  require_cobracket_shape(space_, cobracket_);
}

LieBialgebra::LieBialgebra(const LieAlgebra& algebra, const LieCoalgebra& coalgebra)
    : LieBialgebra(algebra.space(), algebra.bracket(), coalgebra.cobracket()) {
  if (!(algebra.space() == coalgebra.space())) throw DimensionMismatch("algebra and coalgebra live on different bases");
}

Tensor2 adjoint_act_tensor(const LieAlgebra& g, const Vector& a, const Tensor2& t) {
  if (a.dim(0) != g.dim() || t.dim(0) != g.dim() || t.dim(1) != g.dim())
    throw DimensionMismatch("adjoint action: space mismatch");
  const LinearMap ad = g.ad(a);
  const LinearMap id = LinearMap::identity(g.dim());
  return on_legs(ad, id, t) + on_legs(id, ad, t);
}

namespace {

void check_algebra_into(const BasisSpace& s, const BilinearMap& br, VerdictReport& rep) {
  const std::size_t n = s.dim();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u; v < n; ++v)
      rep.check("antisymmetry", {u, v}, labels(s, {u, v}), br.on_basis(u, v) + br.on_basis(v, u));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      for (std::size_t w = v + 1; w < n; ++w) {
        const Vector eu = basis_vector(n, u), ev = basis_vector(n, v), ew = basis_vector(n, w);
        Vector r = br.apply(eu, br.on_basis(v, w)) - br.apply(br.on_basis(u, v), ew) - br.apply(ev, br.on_basis(u, w));
        rep.check("jacobi", {u, v, w}, labels(s, {u, v, w}), r);
      }
}

void check_coalgebra_into(const BasisSpace& s, const CobracketMap& d, VerdictReport& rep) {
  const std::size_t n = s.dim();
  const LinearMap id = LinearMap::identity(n);
  for (std::size_t u = 0; u < n; ++u) {
    const Tensor2 du = d.on_basis(u);
    rep.check("co-antisymmetry", {u}, labels(s, {u}), du + twist(du));
  }
  for (std::size_t u = 0; u < n; ++u) {
    const Tensor2 du = d.on_basis(u);
    const Tensor3 right = on_right(du, d);
    Tensor3 r = right - twist12(right) - on_left(d, du);
    rep.check("co-jacobi", {u}, labels(s, {u}), r);
  }
}

}  // namespace

VerdictReport check_lie_algebra(const LieAlgebra& g) {
  VerdictReport rep;
  check_algebra_into(g.space(), g.bracket(), rep);
  return rep;
}

VerdictReport check_lie_coalgebra(const LieCoalgebra& g) {
  VerdictReport rep;
  check_coalgebra_into(g.space(), g.cobracket(), rep);
  return rep;
}

VerdictReport check_lie_bialgebra(const LieBialgebra& g) {
  VerdictReport rep;
  check_algebra_into(g.space(), g.bracket(), rep);
  check_coalgebra_into(g.space(), g.cobracket(), rep);
  const std::size_t n = g.dim();
  const LieAlgebra alg = g.algebra();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      const Vector eu = basis_vector(n, u), ev = basis_vector(n, v);
      Tensor2 r = adjoint_act_tensor(alg, eu, g.cobracket().on_basis(v)) -
                  adjoint_act_tensor(alg, ev, g.cobracket().on_basis(u)) - g.cobracket(g.bracket().on_basis(u, v));
      rep.check("cocycle", {u, v}, labels(g.space(), {u, v}), r);
    }
  return rep;
}

LieBialgebra permute_basis(const LieBialgebra& g, std::span<const std::size_t> order) {
  const std::size_t n = g.dim();
  if (order.size() != n) throw DimensionMismatch("permutation has the wrong length");
  std::vector<std::size_t> inv(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (order[k] >= n || inv[order[k]] != n) throw DimensionMismatch("not a permutation");
    inv[order[k]] = k;
  }
  std::vector<std::string> names;
  for (auto o : order) names.push_back(g.space().name(o));
  BilinearMap br(n, n, n);
  CobracketMap co(n, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        br(i, j, k) = g.bracket()(order[i], order[j], order[k]);
        co(i, j, k) = g.cobracket()(order[i], order[j], order[k]);
      }
  return LieBialgebra(BasisSpace(std::move(names)), std::move(br), std::move(co));
}

}  // namespace lbext
