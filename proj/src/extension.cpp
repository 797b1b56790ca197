#include "lbext/extension.hpp"

#include <algorithm>

#include "lift.hpp"

namespace lbext {

namespace detail {

Lift::Lift(const BasisSpace& g, const BasisSpace& V)
    : n(g.dim()),
      m(V.dim()),
      N(g.dim() + V.dim()),
      space(direct_sum_space(g, V)),
      br(N, N, N),
      lact(N, N, N),
      ract(N, N, N),
      f(N, N, N),
      vb(N, N, N),
      dg(N, N, N),
      DE(N, N, N),
      DV(N, N, N),
      dV(N, N, N),
      I(LinearMap::identity(N)) {}

void Lift::set_algebra(const BilinearMap& bracket) {
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) br(a, b, c) = bracket(a, b, c);
}

void Lift::set_alg(const AlgExtendingDatum& d) {
  set_algebra(d.g.bracket());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t k = 0; k < m; ++k) lact(v(i), a, v(k)) = d.lact(i, a, k);
      for (std::size_t b = 0; b < n; ++b) ract(v(i), a, b) = d.ract(i, a, b);
    }
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t a = 0; a < n; ++a) f(v(i), v(j), a) = d.f(i, j, a);
      for (std::size_t k = 0; k < m; ++k) vb(v(i), v(j), v(k)) = d.vbracket(i, j, k);
    }
  }
}

void Lift::set_coalgebra(const CobracketMap& cobracket) {
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) dg(a, b, c) = cobracket(a, b, c);
}

void Lift::set_coalg(const CoalgExtendingDatum& d) {
  set_coalgebra(d.g.cobracket());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t k = 0; k < m; ++k) DE(v(i), a, v(k)) = d.DeltaE(i, a, k);
      for (std::size_t b = 0; b < n; ++b) DV(v(i), a, b) = d.DeltaV(i, a, b);
    }
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) dV(v(i), v(j), v(k)) = d.deltaV(i, j, k);
  }
}

Lift Lift::of(const AlgExtendingDatum& d) {
  validate_shapes(d);
  Lift L(d.g.space(), d.V);
  L.set_alg(d);
  return L;
}

Lift Lift::of(const CoalgExtendingDatum& d) {
  validate_shapes(d);
  Lift L(d.g.space(), d.V);
  L.set_coalg(d);
  return L;
}

Lift Lift::of(const BiExtendingDatum& d) {
  validate_shapes(d);
  Lift L(d.base.space(), d.V);
  L.set_alg(d.alg());
  L.set_coalg(d.coalg());
  return L;
}

LinearMap Lift::lift_p(const LinearMap& p) const {
  if (p.from_dim() != m || p.to_dim() != n) throw DimensionMismatch("p must map V to g");
  LinearMap P(N, N);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t a = 0; a < n; ++a) P(a, v(i)) = p(a, i);
  return P;
}

LinearMap Lift::lift_q(const LinearMap& q) const {
  if (q.from_dim() != m || q.to_dim() != m) throw DimensionMismatch("q must map V to V");
  LinearMap Q(N, N);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k) Q(v(k), v(i)) = q(k, i);
  return Q;
}

Tensor2 Lift::adjoint(const Vector& a, const Tensor2& t) const { return derive(ad(a), t); }

Tensor2 Lift::derive(const LinearMap& F, const Tensor2& t) const { return on_legs(F, I, t) + on_legs(I, F, t); }

std::vector<std::string> Lift::labels(std::initializer_list<std::size_t> idx) const {
  std::vector<std::string> out;
  for (auto k : idx) out.push_back(space.name(k));
  return out;
}

BiExtendingDatum Lift::unlift(const LieBialgebra& base, const BasisSpace& V) const {
  BiExtendingDatum d = BiExtendingDatum::zero(base, V);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t k = 0; k < m; ++k) {
        d.lact(i, a, k) = lact(v(i), a, v(k));
        d.DeltaE(i, a, k) = DE(v(i), a, v(k));
      }
      for (std::size_t b = 0; b < n; ++b) {
        d.ract(i, a, b) = ract(v(i), a, b);
        d.DeltaV(i, a, b) = DV(v(i), a, b);
      }
    }
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t a = 0; a < n; ++a) d.f(i, j, a) = f(v(i), v(j), a);
      for (std::size_t k = 0; k < m; ++k) {
        d.vbracket(i, j, k) = vb(v(i), v(j), v(k));
        d.deltaV(i, j, k) = dV(v(i), v(j), v(k));
      }
    }
  }
  return d;
}

}  // namespace detail

using detail::Lift;

// Datums ------------------------------------------------------------------------

AlgExtendingDatum AlgExtendingDatum::zero(LieAlgebra g, BasisSpace V) {
  const std::size_t n = g.dim(), m = V.dim();
  return {std::move(g), std::move(V), BilinearMap(m, n, m), BilinearMap(m, n, n), BilinearMap(m, m, n),
          BilinearMap(m, m, m)};
}

CoalgExtendingDatum CoalgExtendingDatum::zero(LieCoalgebra g, BasisSpace V) {
  const std::size_t n = g.dim(), m = V.dim();
  return {std::move(g), std::move(V), CobracketMap(m, n, m), CobracketMap(m, n, n), CobracketMap(m, m, m)};
}

BiExtendingDatum BiExtendingDatum::zero(LieBialgebra base, BasisSpace V) {
  const std::size_t n = base.dim(), m = V.dim();
  return {std::move(base),      std::move(V),         BilinearMap(m, n, m),  BilinearMap(m, n, n),
          BilinearMap(m, m, n), BilinearMap(m, m, m), CobracketMap(m, n, m), CobracketMap(m, n, n),
          CobracketMap(m, m, m)};
}

BiExtendingDatum BiExtendingDatum::combine(const AlgExtendingDatum& alg, const CoalgExtendingDatum& coalg) {
  if (!(alg.g.space() == coalg.g.space()) || !(alg.V == coalg.V))
    throw DimensionMismatch("algebra and coalgebra halves use different spaces");
  return {LieBialgebra(alg.g, coalg.g), alg.V,        alg.lact,     alg.ract,   alg.f,
          alg.vbracket,                 coalg.DeltaE, coalg.DeltaV, coalg.deltaV};
}

AlgExtendingDatum BiExtendingDatum::alg() const { return {base.algebra(), V, lact, ract, f, vbracket}; }

CoalgExtendingDatum BiExtendingDatum::coalg() const { return {base.coalgebra(), V, DeltaE, DeltaV, deltaV}; }

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw DimensionMismatch(std::string("datum component has the wrong shape: ") + what);
}

bool shaped(const BilinearMap& b, std::size_t l, std::size_t r, std::size_t t) {
  return b.left_dim() == l && b.right_dim() == r && b.target_dim() == t;
}

bool shaped(const CobracketMap& c, std::size_t s, std::size_t l, std::size_t r) {
  return c.source_dim() == s && c.left_dim() == l && c.right_dim() == r;
}

}  // namespace

void validate_shapes(const AlgExtendingDatum& d) {
  const std::size_t n = d.g.dim(), m = d.V.dim();
  require(shaped(d.lact, m, n, m), "lact");
  require(shaped(d.ract, m, n, n), "ract");
  require(shaped(d.f, m, m, n), "f");
  require(shaped(d.vbracket, m, m, m), "vbracket");
}

void validate_shapes(const CoalgExtendingDatum& d) {
  const std::size_t n = d.g.dim(), m = d.V.dim();
  require(shaped(d.DeltaE, m, n, m), "DeltaE");
  require(shaped(d.DeltaV, m, n, n), "DeltaV");
  require(shaped(d.deltaV, m, m, m), "deltaV");
}

void validate_shapes(const BiExtendingDatum& d) {
  validate_shapes(d.alg());
  validate_shapes(d.coalg());
}

InvalidDatum::InvalidDatum(VerdictReport report)
    : Error([&] {
        std::string msg = "invalid extending datum:";
        std::size_t shown = 0;
        for (const auto& v : report.violations()) {
          if (shown++ == 4) {
            msg += " ...";
            break;
          }
          msg += " " + v.condition;
        }
        return msg;
      }()),
      report_(std::move(report)) {}

BasisSpace direct_sum_space(const BasisSpace& g, const BasisSpace& V) {
  // a V label that collides with an earlier one gets primes appended
  std::vector<std::string> names = g.names();
  for (std::string label : V.names()) {
    while (std::find(names.begin(), names.end(), label) != names.end()) label += "'";
    names.push_back(std::move(label));
  }
  return BasisSpace(std::move(names));
}

// Condition systems ---------------------------------------------------------------

namespace {

void le_conditions(const Lift& L, VerdictReport& rep) {
  const auto& br = L.br;
  const auto& la = L.lact;
  const auto& ra = L.ract;
  const auto& f = L.f;
  const auto& vb = L.vb;
  const std::size_t n = L.n, N = L.N;

  for (std::size_t x = n; x < N; ++x)
    for (std::size_t y = x; y < N; ++y) {
      const Vector ex = L.e(x), ey = L.e(y);
      rep.check("LE1", {x, y}, L.labels({x, y}), f.apply(ex, ey) + f.apply(ey, ex) + vb.apply(ex, ey) + vb.apply(ey, ex));
    }

  for (std::size_t x = n; x < N; ++x)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        const Vector ex = L.e(x), ea = L.e(a), eb = L.e(b);
        const Vector ab = br.apply(ea, eb);
        const Vector xa = la.apply(ex, ea), xb = la.apply(ex, eb);
        rep.check("LE2", {x, a, b}, L.labels({x, a, b}), la.apply(ex, ab) - la.apply(xa, eb) + la.apply(xb, ea));
        Vector le3 = ra.apply(ex, ab) - br.apply(ra.apply(ex, ea), eb) - br.apply(ea, ra.apply(ex, eb)) -
                     ra.apply(xa, eb) + ra.apply(xb, ea);
        rep.check("LE3", {x, a, b}, L.labels({x, a, b}), le3);
      }

  for (std::size_t x = n; x < N; ++x)
    for (std::size_t y = x + 1; y < N; ++y)
      for (std::size_t a = 0; a < n; ++a) {
        const Vector ex = L.e(x), ey = L.e(y), ea = L.e(a);
        const Vector xy = vb.apply(ex, ey), fxy = f.apply(ex, ey);
        const Vector xa = la.apply(ex, ea), ya = la.apply(ey, ea);
        Vector le4 = la.apply(xy, ea) - vb.apply(ex, ya) - vb.apply(xa, ey) - la.apply(ex, ra.apply(ey, ea)) +
                     la.apply(ey, ra.apply(ex, ea));
        rep.check("LE4", {x, y, a}, L.labels({x, y, a}), le4);
        Vector le5 = ra.apply(xy, ea) - ra.apply(ex, ra.apply(ey, ea)) + ra.apply(ey, ra.apply(ex, ea)) -
                     br.apply(ea, fxy) - f.apply(ex, ya) - f.apply(xa, ey);
        rep.check("LE5", {x, y, a}, L.labels({x, y, a}), le5);
      }

  for (std::size_t x = n; x < N; ++x)
    for (std::size_t y = x + 1; y < N; ++y)
      for (std::size_t z = y + 1; z < N; ++z) {
        const Vector ex = L.e(x), ey = L.e(y), ez = L.e(z);
        const Vector yz = vb.apply(ey, ez), zx = vb.apply(ez, ex), xy = vb.apply(ex, ey);
        const Vector fyz = f.apply(ey, ez), fzx = f.apply(ez, ex), fxy = f.apply(ex, ey);
        Vector le6 = f.apply(ex, yz) + f.apply(ey, zx) + f.apply(ez, xy) + ra.apply(ex, fyz) + ra.apply(ey, fzx) +
                     ra.apply(ez, fxy);
        rep.check("LE6", {x, y, z}, L.labels({x, y, z}), le6);
        Vector le7 = vb.apply(ex, yz) + vb.apply(ey, zx) + vb.apply(ez, xy) + la.apply(ex, fyz) + la.apply(ey, fzx) +
                     la.apply(ez, fxy);
        rep.check("LE7", {x, y, z}, L.labels({x, y, z}), le7);
      }
}

void cle_conditions(const Lift& L, VerdictReport& rep) {
  for (std::size_t x = L.n; x < L.N; ++x) {
    const Tensor2 DEx = L.DE.on_basis(x), DVx = L.DV.on_basis(x), dVx = L.dV.on_basis(x);
    rep.check("CLE1", {x}, L.labels({x}), DVx + twist(DVx) + dVx + twist(dVx));

    const Tensor3 a = on_right(DEx, L.DV) + on_right(DVx, L.dg);
    Tensor3 cle2 = a - twist12(a) + on_left(L.DV, twist(DEx)) - on_left(L.dg, DVx);
    rep.check("CLE2", {x}, L.labels({x}), cle2);

    const Tensor3 b = on_right(DEx, L.DE);
    Tensor3 cle3 = b - twist12(b) - on_left(L.dg, DEx) - on_left(L.DV, dVx);
    rep.check("CLE3", {x}, L.labels({x}), cle3);

    Tensor3 cle4 = on_right(DEx, L.dV) - twist12(on_right(dVx, L.DE)) - on_left(L.DE, dVx);
    rep.check("CLE4", {x}, L.labels({x}), cle4);

    const Tensor3 c = on_right(dVx, L.dV);
    Tensor3 cle5 = c - twist12(c) - on_left(L.dV, dVx);
    rep.check("CLE5", {x}, L.labels({x}), cle5);
  }
}

void be_conditions(const Lift& L, VerdictReport& rep) {
  const auto& I = L.I;
  const std::size_t n = L.n, N = L.N;

  for (std::size_t x = n; x < N; ++x)
    for (std::size_t a = 0; a < n; ++a) {
      const Vector ex = L.e(x), ea = L.e(a);
      const Tensor2 DEx = L.DE.on_basis(x), DVx = L.DV.on_basis(x), dVx = L.dV.on_basis(x), dga = L.dg.on_basis(a);
      const Vector xla = L.lact.apply(ex, ea), xra = L.ract.apply(ex, ea);
      const LinearMap Rr = L.ract.right_fixed(ea), Lr = L.ract.left_fixed(ex);
      const LinearMap Rl = L.lact.right_fixed(ea), Ll = L.lact.left_fixed(ex);

      Tensor2 be2 = -L.DV.apply(xla) - L.dg.apply(xra) + Lift::antisym(on_legs(I, Rr, DEx)) - L.adjoint(ea, DVx) +
                    L.derive(Lr, dga);
      rep.check("BE2", {x, a}, L.labels({x, a}), be2);

      Tensor2 be3 = L.DE.apply(xla) + on_legs(L.ad(ea), I, DEx) - on_legs(I, Rl, DEx) - on_legs(Rr, I, dVx) -
                    on_legs(I, Ll, dga);
      rep.check("BE3", {x, a}, L.labels({x, a}), be3);

      Tensor2 be4 = L.dV.apply(xla) - L.derive(Rl, dVx);
      rep.check("BE4", {x, a}, L.labels({x, a}), be4);
    }

  for (std::size_t x = n; x < N; ++x)
    for (std::size_t y = x + 1; y < N; ++y) {
      const Vector ex = L.e(x), ey = L.e(y);
      const Tensor2 DEx = L.DE.on_basis(x), DVx = L.DV.on_basis(x), dVx = L.dV.on_basis(x);
      const Tensor2 DEy = L.DE.on_basis(y), DVy = L.DV.on_basis(y), dVy = L.dV.on_basis(y);
      const LinearMap Lrx = L.ract.left_fixed(ex), Lry = L.ract.left_fixed(ey);
      const LinearMap Llx = L.lact.left_fixed(ex), Lly = L.lact.left_fixed(ey);
      const LinearMap fx = L.f.left_fixed(ex), fy = L.f.left_fixed(ey);
      const LinearMap bx = L.vb.left_fixed(ex), by = L.vb.left_fixed(ey);
      const Vector fxy = L.f.apply(ex, ey), bxy = L.vb.apply(ex, ey);

      Tensor2 be5 = L.dg.apply(fxy) + L.DV.apply(bxy) - Lift::antisym(on_legs(I, fx, DEy)) - L.derive(Lrx, DVy) +
                    Lift::antisym(on_legs(I, fy, DEx)) + L.derive(Lry, DVx);
      rep.check("BE5", {x, y}, L.labels({x, y}), be5);

      Tensor2 be6 = L.DE.apply(bxy) - on_legs(Lrx, I, DEy) - on_legs(I, bx, DEy) - on_legs(I, Llx, DVy) -
                    on_legs(fx, I, dVy) + on_legs(Lry, I, DEx) + on_legs(I, by, DEx) + on_legs(I, Lly, DVx) +
                    on_legs(fy, I, dVx);
      rep.check("BE6", {x, y}, L.labels({x, y}), be6);

      Tensor2 be7 = L.dV.apply(bxy) - Lift::antisym(on_legs(Llx, I, DEy)) - L.derive(bx, dVy) +
                    Lift::antisym(on_legs(Lly, I, DEx)) + L.derive(by, dVx);
      rep.check("BE7", {x, y}, L.labels({x, y}), be7);
    }
}

}  // namespace

VerdictReport check_alg_extending(const AlgExtendingDatum& d) {
  VerdictReport rep;
  le_conditions(Lift::of(d), rep);
  return rep;
}

VerdictReport check_coalg_extending(const CoalgExtendingDatum& d) {
  VerdictReport rep;
  cle_conditions(Lift::of(d), rep);
  return rep;
}

VerdictReport check_bi_extending(const BiExtendingDatum& d) {
  VerdictReport rep;
  const VerdictReport base = check_lie_bialgebra(d.base);
  for (auto v : base.violations()) {
    v.condition = "base." + v.condition;
    rep.add(std::move(v));
  }
  const Lift L = Lift::of(d);
  le_conditions(L, rep);
  cle_conditions(L, rep);
  be_conditions(L, rep);
  return rep;
}

// Constructors ------------------------------------------------------------------

namespace {

BilinearMap product_table(const Lift& L) {
  BilinearMap out(L.N, L.N, L.N);
  for (std::size_t u = 0; u < L.N; ++u)
    for (std::size_t v = 0; v < L.N; ++v) {
      const Vector eu = L.e(u), ev = L.e(v);
      Vector r = L.br.apply(eu, ev) + L.ract.apply(eu, ev) - L.ract.apply(ev, eu) + L.f.apply(eu, ev) +
                 L.lact.apply(eu, ev) - L.lact.apply(ev, eu) + L.vb.apply(eu, ev);
      for (std::size_t k = 0; k < L.N; ++k) out(u, v, k) = r(k);
    }
  return out;
}

CobracketMap coproduct_table(const Lift& L) {
  CobracketMap out(L.N, L.N, L.N);
  for (std::size_t u = 0; u < L.N; ++u) {
    const Tensor2 DE = L.DE.on_basis(u);
    out.set(u, L.dg.on_basis(u) + DE - twist(DE) + L.DV.on_basis(u) + L.dV.on_basis(u));
  }
  return out;
}

}  // namespace

LieAlgebra unified_product_unchecked(const AlgExtendingDatum& d) {
  const Lift L = Lift::of(d);
  return LieAlgebra(L.space, product_table(L));
}

LieCoalgebra unified_coproduct_unchecked(const CoalgExtendingDatum& d) {
  const Lift L = Lift::of(d);
  return LieCoalgebra(L.space, coproduct_table(L));
}

LieBialgebra unified_biproduct_unchecked(const BiExtendingDatum& d) {
  const Lift L = Lift::of(d);
  return LieBialgebra(L.space, product_table(L), coproduct_table(L));
}

LieAlgebra unified_product(const AlgExtendingDatum& d) {
  auto rep = check_alg_extending(d);
  if (!rep.valid()) throw InvalidDatum(std::move(rep));
  return unified_product_unchecked(d);
}

LieCoalgebra unified_coproduct(const CoalgExtendingDatum& d) {
  auto rep = check_coalg_extending(d);
  if (!rep.valid()) throw InvalidDatum(std::move(rep));
  return unified_coproduct_unchecked(d);
}

LieBialgebra unified_biproduct(const BiExtendingDatum& d) {
  auto rep = check_bi_extending(d);
  if (!rep.valid()) throw InvalidDatum(std::move(rep));
  return unified_biproduct_unchecked(d);
}

// Extraction --------------------------------------------------------------------

std::vector<std::size_t> subspace_order(std::size_t dim, std::span<const std::size_t> g_indices) {
  std::vector<std::size_t> sub(g_indices.begin(), g_indices.end());
  std::sort(sub.begin(), sub.end());
  if (std::adjacent_find(sub.begin(), sub.end()) != sub.end()) throw DimensionMismatch("repeated sub-bialgebra index");
  if (!sub.empty() && sub.back() >= dim) throw DimensionMismatch("sub-bialgebra index out of range");
  std::vector<std::size_t> order = sub;
  for (std::size_t k = 0; k < dim; ++k)
    if (!std::binary_search(sub.begin(), sub.end(), k)) order.push_back(k);
  return order;
}

BiExtendingDatum extract_datum(const LieBialgebra& E, std::span<const std::size_t> g_indices) {
  if (g_indices.empty()) throw NotASubBialgebra("the sub-bialgebra index set is empty");
  const std::vector<std::size_t> order = subspace_order(E.dim(), g_indices);
  const LieBialgebra P = permute_basis(E, order);
  const std::size_t n = g_indices.size(), N = E.dim(), m = N - n;
  const auto& br = P.bracket();
  const auto& co = P.cobracket();
  const auto& names = P.space().names();

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = n; k < N; ++k)
        if (!br(a, b, k).is_zero())
          throw NotASubBialgebra("bracket [" + names[a] + "," + names[b] + "] leaves the span (component " +
                                 names[k] + ")");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t k = 0; k < N; ++k)
        if ((j >= n || k >= n) && !co(a, j, k).is_zero())
          throw NotASubBialgebra("cobracket of " + names[a] + " leaves the span (component " + names[j] + "⊗" +
                                 names[k] + ")");

  BilinearMap gbr(n, n, n);
  CobracketMap gco(n, n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        gbr(a, b, c) = br(a, b, c);
        gco(a, b, c) = co(a, b, c);
      }
  LieBialgebra base(BasisSpace(std::vector<std::string>(names.begin(), names.begin() + static_cast<long>(n))),
                    std::move(gbr), std::move(gco));
  BasisSpace V(std::vector<std::string>(names.begin() + static_cast<long>(n), names.end()));
  BiExtendingDatum d = BiExtendingDatum::zero(std::move(base), std::move(V));

  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t x = n + i;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t k = 0; k < m; ++k) {
        d.lact(i, a, k) = br(x, a, n + k);
        d.DeltaE(i, a, k) = co(x, a, n + k);
      }
      for (std::size_t b = 0; b < n; ++b) {
        d.ract(i, a, b) = br(x, a, b);
        d.DeltaV(i, a, b) = co(x, a, b);
      }
    }
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t a = 0; a < n; ++a) d.f(i, j, a) = br(x, n + j, a);
      for (std::size_t k = 0; k < m; ++k) {
        d.vbracket(i, j, k) = br(x, n + j, n + k);
        d.deltaV(i, j, k) = co(x, n + j, n + k);
      }
    }
  }
  return d;
}

// Homomorphisms and equivalence -----------------------------------------------

PQPair PQPair::identity(std::size_t dim_g, std::size_t dim_v) {
  return {LinearMap(dim_v, dim_g), LinearMap::identity(dim_v)};
}

LinearMap phi_matrix(std::size_t dim_g, const PQPair& pq) {
  const std::size_t m = pq.q.from_dim(), N = dim_g + m;
  if (pq.p.from_dim() != m || pq.p.to_dim() != dim_g || pq.q.to_dim() != m)
    throw DimensionMismatch("(p, q) shapes do not match g and V");
  LinearMap phi(N, N);
  for (std::size_t a = 0; a < dim_g; ++a) phi(a, a) = 1;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t a = 0; a < dim_g; ++a) phi(a, dim_g + i) = pq.p(a, i);
    for (std::size_t k = 0; k < m; ++k) phi(dim_g + k, dim_g + i) = pq.q(k, i);
  }
  return phi;
}

HomReport hom_from_pq(const BiExtendingDatum& src, const BiExtendingDatum& dst, const PQPair& pq) {
  if (!(src.base == dst.base) || !(src.V == dst.V)) throw DimensionMismatch("datums have different bases or V");
  if (auto r = check_bi_extending(src); !r.valid()) throw InvalidDatum(std::move(r));
  if (auto r = check_bi_extending(dst); !r.valid()) throw InvalidDatum(std::move(r));

  const Lift S = Lift::of(src), T = Lift::of(dst);
  const LinearMap P = S.lift_p(pq.p), Q = S.lift_q(pq.q);
  const LinearMap& I = S.I;
  HomReport out;
  out.phi = phi_matrix(S.n, pq);
  out.q_invertible = inverse(pq.q.matrix()).has_value();

  for (std::size_t x = S.n; x < S.N; ++x) {
    const Vector ex = S.e(x), px = P.apply(ex), qx = Q.apply(ex);
    const Tensor2 DEx = S.DE.on_basis(x), DVx = S.DV.on_basis(x), dVx = S.dV.on_basis(x);
    Tensor2 gg = S.dg.apply(px) + T.DV.apply(qx) - on_legs(I, P, DEx) + on_legs(P, I, twist(DEx)) -
                 on_legs(P, P, dVx) - DVx;
    out.conditions.check("hom.coalgebra-gg", {x}, S.labels({x}), gg);
    Tensor2 gv = T.DE.apply(qx) - on_legs(I, Q, DEx) - on_legs(P, Q, dVx);
    out.conditions.check("hom.coalgebra-gV", {x}, S.labels({x}), gv);
    Tensor2 vv = T.dV.apply(qx) - on_legs(Q, Q, dVx);
    out.conditions.check("hom.coalgebra-VV", {x}, S.labels({x}), vv);

    for (std::size_t a = 0; a < S.n; ++a) {
      const Vector ea = S.e(a), xla = S.lact.apply(ex, ea);
      out.conditions.check("hom.lact", {x, a}, S.labels({x, a}), T.lact.apply(qx, ea) - Q.apply(xla));
      Vector r = P.apply(xla) - S.br.apply(px, ea) + S.ract.apply(ex, ea) - T.ract.apply(qx, ea);
      out.conditions.check("hom.ract", {x, a}, S.labels({x, a}), r);
    }
    for (std::size_t y = x + 1; y < S.N; ++y) {
      const Vector ey = S.e(y), py = P.apply(ey), qy = Q.apply(ey);
      const Vector bxy = S.vb.apply(ex, ey);
      Vector rv = Q.apply(bxy) - T.vb.apply(qx, qy) - T.lact.apply(qx, py) + T.lact.apply(qy, px);
      out.conditions.check("hom.vbracket", {x, y}, S.labels({x, y}), rv);
      Vector rf = P.apply(bxy) - S.br.apply(px, py) - T.ract.apply(qx, py) + T.ract.apply(qy, px) -
                  T.f.apply(qx, qy) + S.f.apply(ex, ey);
      out.conditions.check("hom.f", {x, y}, S.labels({x, y}), rf);
    }
  }

  const LieBialgebra Es = unified_biproduct_unchecked(src), Et = unified_biproduct_unchecked(dst);
  const LinearMap& phi = out.phi;
  for (std::size_t u = 0; u < S.N; ++u) {
    const Vector eu = S.e(u), pu = phi.apply(eu);
    for (std::size_t v = u + 1; v < S.N; ++v) {
      const Vector ev = S.e(v);
      Vector r = phi.apply(Es.bracket(eu, ev)) - Et.bracket(pu, phi.apply(ev));
      out.direct.check("hom.bracket", {u, v}, S.labels({u, v}), r);
    }
    Tensor2 rc = Et.cobracket(pu) - on_legs(phi, phi, Es.cobracket(eu));
    out.direct.check("hom.cobracket", {u}, S.labels({u}), rc);
  }
  return out;
}

BiExtendingDatum transform_datum(const BiExtendingDatum& d, const PQPair& pq) {
  const auto qinv = inverse(pq.q.matrix());
  if (!qinv) throw SingularQ();
  const Lift S = Lift::of(d);
  const LinearMap P = S.lift_p(pq.p), Q = S.lift_q(pq.q), Qi = S.lift_q(LinearMap(*qinv));
  const LinearMap& I = S.I;
  Lift T(d.base.space(), d.V);
  T.set_algebra(d.base.bracket());
  T.set_coalgebra(d.base.cobracket());

  for (std::size_t x = S.n; x < S.N; ++x) {
    const Vector u = Qi.apply(S.e(x)), pu = P.apply(u);
    for (std::size_t a = 0; a < S.n; ++a) {
      const Vector ea = S.e(a), ula = S.lact.apply(u, ea);
      const Vector l = Q.apply(ula);
      const Vector r = P.apply(ula) + S.ract.apply(u, ea) - S.br.apply(pu, ea);
      for (std::size_t k = 0; k < S.N; ++k) {
        T.lact(x, a, k) = l(k);
        T.ract(x, a, k) = r(k);
      }
    }
    for (std::size_t y = S.n; y < S.N; ++y) {
      const Vector w = Qi.apply(S.e(y)), pw = P.apply(w);
      const Vector uw = S.vb.apply(u, w), ulpw = S.lact.apply(u, pw), wlpu = S.lact.apply(w, pu);
      const Vector fv = S.f.apply(u, w) + P.apply(uw) + S.br.apply(pu, pw) - P.apply(ulpw) - S.ract.apply(u, pw) +
                        P.apply(wlpu) + S.ract.apply(w, pu);
      const Vector bv = Q.apply(uw) - Q.apply(ulpw) + Q.apply(wlpu);
      for (std::size_t k = 0; k < S.N; ++k) {
        T.f(x, y, k) = fv(k);
        T.vb(x, y, k) = bv(k);
      }
    }
    const Tensor2 DEu = S.DE.apply(u), dVu = S.dV.apply(u);
    T.dV.set(x, on_legs(Q, Q, dVu));
    T.DE.set(x, on_legs(I, Q, DEu) + on_legs(P, Q, dVu));
    T.DV.set(x, on_legs(I, P, DEu) - on_legs(P, I, twist(DEu)) + on_legs(P, P, dVu) + S.DV.apply(u) - S.dg.apply(pu));
  }
  return T.unlift(d.base, d.V);
}

PQPair compose(const PQPair& first, const PQPair& second) {
  return {first.p + second.p.after(first.q), second.q.after(first.q)};
}

}  // namespace lbext
