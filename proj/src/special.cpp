#include "lbext/special.hpp"

#include "lift.hpp"

namespace lbext {

using detail::Lift;

namespace {

BiExtendingDatum skeleton(const LieBialgebra& base, const LieBialgebra& V) {
  BiExtendingDatum d = BiExtendingDatum::zero(base, V.space());
  d.vbracket = V.bracket();
  d.deltaV = V.cobracket();
  return d;
}

LieBialgebra v_part(const BiExtendingDatum& d) { return LieBialgebra(d.V, d.vbracket, d.deltaV); }

void forbid(bool nonzero, const char* what) {
  if (nonzero) throw InvariantViolation(std::string(what) + " must vanish for this kind of datum");
}

void check_v_bialgebra(const LieBialgebra& V, VerdictReport& rep) {
  const VerdictReport own = check_lie_bialgebra(V);
  for (auto v : own.violations()) {
    v.condition = "V." + v.condition;
    rep.add(std::move(v));
  }
}

void check_base(const LieBialgebra& g, VerdictReport& rep) {
  const VerdictReport own = check_lie_bialgebra(g);
  for (auto v : own.violations()) {
    v.condition = "base." + v.condition;
    rep.add(std::move(v));
  }
}

// x▷[a,b] - [x▷a,b] - [a,x▷b] for a < b
void derivation_rows(const Lift& L, const std::string& label, VerdictReport& rep) {
  for (std::size_t x = L.n; x < L.N; ++x)
    for (std::size_t a = 0; a < L.n; ++a)
      for (std::size_t b = a + 1; b < L.n; ++b) {
        const Vector ex = L.e(x), ea = L.e(a), eb = L.e(b);
        Vector r = L.ract.apply(ex, L.br.apply(ea, eb)) - L.br.apply(L.ract.apply(ex, ea), eb) -
                   L.br.apply(ea, L.ract.apply(ex, eb));
        rep.check(label, {x, a, b}, L.labels({x, a, b}), r);
      }
}

// {x,y}▷a - x▷(y▷a) + y▷(x▷a) - [a, f(x,y)] for x < y
void module_rows(const Lift& L, const std::string& label, VerdictReport& rep) {
  for (std::size_t x = L.n; x < L.N; ++x)
    for (std::size_t y = x + 1; y < L.N; ++y)
      for (std::size_t a = 0; a < L.n; ++a) {
        const Vector ex = L.e(x), ey = L.e(y), ea = L.e(a);
        Vector r = L.ract.apply(L.vb.apply(ex, ey), ea) - L.ract.apply(ex, L.ract.apply(ey, ea)) +
                   L.ract.apply(ey, L.ract.apply(ex, ea)) - L.br.apply(ea, L.f.apply(ex, ey));
        rep.check(label, {x, y, a}, L.labels({x, y, a}), r);
      }
}

// -(ad(a)⊗I)Δ_E(x) + (R▷(a)⊗I)δ_V(x)
void delta_e_ad_rows(const Lift& L, const std::string& label, VerdictReport& rep) {
  for (std::size_t x = L.n; x < L.N; ++x)
    for (std::size_t a = 0; a < L.n; ++a) {
      const Vector ea = L.e(a);
      Tensor2 r = on_legs(L.br.left_fixed(ea), L.I, L.DE.on_basis(x)) * Scalar(-1) +
                  on_legs(L.ract.right_fixed(ea), L.I, L.dV.on_basis(x));
      rep.check(label, {x, a}, L.labels({x, a}), r);
    }
}

// δ_g(x▷a) - (I⊗I - τ)(I⊗R▷(a))Δ_E(x) + a.Δ_V(x) - (L▷(x)⊗I + I⊗L▷(x))δ_g(a)
void delta_ract_rows(const Lift& L, const std::string& label, VerdictReport& rep) {
  for (std::size_t x = L.n; x < L.N; ++x)
    for (std::size_t a = 0; a < L.n; ++a) {
      const Vector ex = L.e(x), ea = L.e(a);
      const Tensor2 DEx = L.DE.on_basis(x);
      const Tensor2 t = on_legs(L.I, L.ract.right_fixed(ea), DEx);
      const LinearMap Lx = L.ract.left_fixed(ex);
      const Tensor2 dga = L.dg.on_basis(a);
      const LinearMap ad = L.br.left_fixed(ea);
      const Tensor2 DVx = L.DV.on_basis(x);
      Tensor2 r = L.dg.apply(L.ract.apply(ex, ea)) - (t - twist(t)) + on_legs(ad, L.I, DVx) + on_legs(L.I, ad, DVx) -
                  on_legs(Lx, L.I, dga) - on_legs(L.I, Lx, dga);
      rep.check(label, {x, a}, L.labels({x, a}), r);
    }
}

// Δ_E({x,y}) - (L▷(x)⊗I + I⊗{x,·})Δ_E(y) - (f(x,·)⊗I)δ_V(y) + (same with x, y swapped)
void delta_e_bracket_rows(const Lift& L, const std::string& label, VerdictReport& rep) {
  for (std::size_t x = L.n; x < L.N; ++x)
    for (std::size_t y = x + 1; y < L.N; ++y) {
      const Vector ex = L.e(x), ey = L.e(y);
      auto side = [&](const Vector& u, std::size_t w) {
        const Tensor2 DEw = L.DE.on_basis(w);
        return on_legs(L.ract.left_fixed(u), L.I, DEw) + on_legs(L.I, L.vb.left_fixed(u), DEw) +
               on_legs(L.f.left_fixed(u), L.I, L.dV.on_basis(w));
      };
      Tensor2 r = L.DE.apply(L.vb.apply(ex, ey)) - side(ex, y) + side(ey, x);
      rep.check(label, {x, y}, L.labels({x, y}), r);
    }
}

}  // namespace

// Crossed bi-product ------------------------------------------------------------

CrossedBiDatum CrossedBiDatum::zero(LieBialgebra base, LieBialgebra V) {
  const std::size_t n = base.dim(), m = V.dim();
  return {std::move(base), std::move(V), BilinearMap(m, n, n), BilinearMap(m, m, n), CobracketMap(m, n, m),
          CobracketMap(m, n, n)};
}

CrossedBiDatum CrossedBiDatum::from_general(const BiExtendingDatum& d) {
  validate_shapes(d);
  forbid(!d.lact.is_zero(), "the left action ◁");
  return {d.base, v_part(d), d.ract, d.f, d.DeltaE, d.DeltaV};
}

BiExtendingDatum CrossedBiDatum::general() const {
  BiExtendingDatum d = skeleton(base, V);
  d.ract = ract;
  d.f = f;
  d.DeltaE = DeltaE;
  d.DeltaV = DeltaV;
  validate_shapes(d);
  return d;
}

VerdictReport check_crossed(const CrossedBiDatum& d) {
  VerdictReport rep;
  check_base(d.base, rep);
  check_v_bialgebra(d.V, rep);
  const Lift L = Lift::of(d.general());

  for (std::size_t x = L.n; x < L.N; ++x)
    for (std::size_t y = x; y < L.N; ++y) {
      const Vector ex = L.e(x), ey = L.e(y);
      rep.check("f-alternating", {x, y}, L.labels({x, y}), L.f.apply(ex, ey) + L.f.apply(ey, ex));
    }
  for (std::size_t x = L.n; x < L.N; ++x)
    for (std::size_t y = x + 1; y < L.N; ++y)
      for (std::size_t z = y + 1; z < L.N; ++z) {
        const Vector ex = L.e(x), ey = L.e(y), ez = L.e(z);
        Vector r = L.f.apply(ex, L.vb.apply(ey, ez)) + L.f.apply(ey, L.vb.apply(ez, ex)) +
                   L.f.apply(ez, L.vb.apply(ex, ey)) + L.ract.apply(ex, L.f.apply(ey, ez)) +
                   L.ract.apply(ey, L.f.apply(ez, ex)) + L.ract.apply(ez, L.f.apply(ex, ey));
        rep.check("LE6", {x, y, z}, L.labels({x, y, z}), r);
      }

  for (std::size_t x = L.n; x < L.N; ++x) {
    const Tensor2 DEx = L.DE.on_basis(x), DVx = L.DV.on_basis(x), dVx = L.dV.on_basis(x);
    rep.check("CLE1", {x}, L.labels({x}), DVx + twist(DVx) + dVx + twist(dVx));
    const Tensor3 u = on_right(DEx, L.DV) + on_right(DVx, L.dg);
    rep.check("CLE2", {x}, L.labels({x}), u - twist12(u) + on_left(L.DV, twist(DEx)) - on_left(L.dg, DVx));
    const Tensor3 w = on_right(DEx, L.DE);
    rep.check("CLE3", {x}, L.labels({x}), w - twist12(w) - on_left(L.dg, DEx) - on_left(L.DV, dVx));
    rep.check("CLE4", {x}, L.labels({x}),
              on_right(DEx, L.dV) - twist12(on_right(dVx, L.DE)) - on_left(L.DE, dVx));
    const Tensor3 c = on_right(dVx, L.dV);
    rep.check("CLE5", {x}, L.labels({x}), c - twist12(c) - on_left(L.dV, dVx));
  }

  for (std::size_t x = L.n; x < L.N; ++x)
    for (std::size_t y = x + 1; y < L.N; ++y) {
      const Vector ex = L.e(x), ey = L.e(y);
      auto side = [&](const Vector& u, std::size_t w) {
        const Tensor2 t = on_legs(L.I, L.f.left_fixed(u), L.DE.on_basis(w));
        const LinearMap Lu = L.ract.left_fixed(u);
        const Tensor2 DVw = L.DV.on_basis(w);
        return (t - twist(t)) + on_legs(Lu, L.I, DVw) + on_legs(L.I, Lu, DVw);
      };
      Tensor2 r = L.dg.apply(L.f.apply(ex, ey)) + L.DV.apply(L.vb.apply(ex, ey)) - side(ex, y) + side(ey, x);
      rep.check("BE5", {x, y}, L.labels({x, y}), r);
    }

  derivation_rows(L, "crossed.derivation", rep);
  module_rows(L, "crossed.action", rep);
  delta_ract_rows(L, "crossed.delta-ract", rep);
  delta_e_ad_rows(L, "crossed.DeltaE-ad", rep);
  delta_e_bracket_rows(L, "crossed.DeltaE-bracket", rep);
  return rep;
}

LieBialgebra crossed_biproduct(const CrossedBiDatum& d) {
  if (auto rep = check_crossed(d); !rep.valid()) throw InvalidDatum(std::move(rep));
  const std::size_t n = d.base.dim(), m = d.V.dim(), N = n + m;
  BilinearMap br(N, N, N);
  CobracketMap co(N, N, N);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        br(a, b, c) = d.base.bracket()(a, b, c);
        co(a, b, c) = d.base.cobracket()(a, b, c);
      }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        br(n + i, a, b) = d.ract(i, a, b);
        br(a, n + i, b) = -d.ract(i, a, b);
        co(n + i, a, b) = d.DeltaV(i, a, b);
      }
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t a = 0; a < n; ++a) br(n + i, n + j, a) = d.f(i, j, a);
      for (std::size_t k = 0; k < m; ++k) {
        br(n + i, n + j, n + k) = d.V.bracket()(i, j, k);
        co(n + i, n + j, n + k) = d.V.cobracket()(i, j, k);
      }
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t k = 0; k < m; ++k) {
        co(n + i, a, n + k) += d.DeltaE(i, a, k);
        co(n + i, n + k, a) -= d.DeltaE(i, a, k);
      }
  }
  return LieBialgebra(direct_sum_space(d.base.space(), d.V.space()), std::move(br), std::move(co));
}

// Bicrossed sum -----------------------------------------------------------------

BicrossedSumDatum BicrossedSumDatum::zero(LieBialgebra base, LieBialgebra V) {
  const std::size_t n = base.dim(), m = V.dim();
  return {std::move(base), std::move(V), BilinearMap(m, n, n), CobracketMap(m, n, m)};
}

BicrossedSumDatum BicrossedSumDatum::from_general(const BiExtendingDatum& d) {
  validate_shapes(d);
  forbid(!d.lact.is_zero(), "the left action ◁");
  forbid(!d.f.is_zero(), "the cocycle f");
  forbid(!d.DeltaV.is_zero(), "Delta_V");
  return {d.base, v_part(d), d.ract, d.DeltaE};
}

BiExtendingDatum BicrossedSumDatum::general() const {
  BiExtendingDatum d = skeleton(base, V);
  d.ract = ract;
  d.DeltaE = DeltaE;
  validate_shapes(d);
  return d;
}

VerdictReport check_bicrossed(const BicrossedSumDatum& d) {
  VerdictReport rep;
  check_base(d.base, rep);
  check_v_bialgebra(d.V, rep);
  const Lift L = Lift::of(d.general());

  derivation_rows(L, "bicrossed.derivation", rep);
  module_rows(L, "bicrossed.module", rep);
  for (std::size_t x = L.n; x < L.N; ++x) {
    const Tensor2 DEx = L.DE.on_basis(x), dVx = L.dV.on_basis(x);
    const Tensor3 w = on_right(DEx, L.DE);
    rep.check("bicrossed.DeltaE-coassoc", {x}, L.labels({x}), w - twist12(w) - on_left(L.dg, DEx));
    rep.check("bicrossed.DeltaE-deltaV", {x}, L.labels({x}),
              on_right(DEx, L.dV) - twist12(on_right(dVx, L.DE)) - on_left(L.DE, dVx));
  }
  delta_ract_rows(L, "bicrossed.delta-ract", rep);
  delta_e_ad_rows(L, "bicrossed.DeltaE-ad", rep);
  delta_e_bracket_rows(L, "bicrossed.DeltaE-bracket", rep);
  return rep;
}

LieBialgebra bicrossed_sum(const BicrossedSumDatum& d) {
  if (auto rep = check_bicrossed(d); !rep.valid()) throw InvalidDatum(std::move(rep));
  const std::size_t n = d.base.dim(), m = d.V.dim(), N = n + m;
  BilinearMap br(N, N, N);
  CobracketMap co(N, N, N);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        br(a, b, c) = d.base.bracket()(a, b, c);
        co(a, b, c) = d.base.cobracket()(a, b, c);
      }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        br(n + i, a, b) = d.ract(i, a, b);
        br(a, n + i, b) = -d.ract(i, a, b);
      }
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        br(n + i, n + j, n + k) = d.V.bracket()(i, j, k);
        co(n + i, n + j, n + k) = d.V.cobracket()(i, j, k);
      }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t k = 0; k < m; ++k) {
        co(n + i, a, n + k) += d.DeltaE(i, a, k);
        co(n + i, n + k, a) -= d.DeltaE(i, a, k);
      }
  }
  return LieBialgebra(direct_sum_space(d.base.space(), d.V.space()), std::move(br), std::move(co));
}

// Double cross sum --------------------------------------------------------------

DoubleCrossSumDatum DoubleCrossSumDatum::zero(LieBialgebra base, LieBialgebra V) {
  const std::size_t n = base.dim(), m = V.dim();
  return {std::move(base), std::move(V), BilinearMap(m, n, m), BilinearMap(m, n, n)};
}

DoubleCrossSumDatum DoubleCrossSumDatum::from_general(const BiExtendingDatum& d) {
  validate_shapes(d);
  forbid(!d.f.is_zero(), "the cocycle f");
  forbid(!d.DeltaE.is_zero(), "Delta_E");
  forbid(!d.DeltaV.is_zero(), "Delta_V");
  return {d.base, v_part(d), d.lact, d.ract};
}

BiExtendingDatum DoubleCrossSumDatum::general() const {
  BiExtendingDatum d = skeleton(base, V);
  d.lact = lact;
  d.ract = ract;
  validate_shapes(d);
  return d;
}

VerdictReport check_double_cross(const DoubleCrossSumDatum& d) {
  VerdictReport rep;
  check_base(d.base, rep);
  check_v_bialgebra(d.V, rep);
  const Lift L = Lift::of(d.general());

  module_rows(L, "double.left-module", rep);
  for (std::size_t x = L.n; x < L.N; ++x)
    for (std::size_t a = 0; a < L.n; ++a)
      for (std::size_t b = a + 1; b < L.n; ++b) {
        const Vector ex = L.e(x), ea = L.e(a), eb = L.e(b);
        const Vector xa = L.lact.apply(ex, ea), xb = L.lact.apply(ex, eb);
        Vector rm = L.lact.apply(ex, L.br.apply(ea, eb)) - L.lact.apply(xa, eb) + L.lact.apply(xb, ea);
        rep.check("double.right-module", {x, a, b}, L.labels({x, a, b}), rm);
        Vector r3 = L.ract.apply(ex, L.br.apply(ea, eb)) - L.br.apply(L.ract.apply(ex, ea), eb) -
                    L.br.apply(ea, L.ract.apply(ex, eb)) - L.ract.apply(xa, eb) + L.ract.apply(xb, ea);
        rep.check("LE3", {x, a, b}, L.labels({x, a, b}), r3);
      }
  for (std::size_t x = L.n; x < L.N; ++x)
    for (std::size_t y = x + 1; y < L.N; ++y)
      for (std::size_t a = 0; a < L.n; ++a) {
        const Vector ex = L.e(x), ey = L.e(y), ea = L.e(a);
        Vector r = L.lact.apply(L.vb.apply(ex, ey), ea) - L.vb.apply(ex, L.lact.apply(ey, ea)) -
                   L.vb.apply(L.lact.apply(ex, ea), ey) - L.lact.apply(ex, L.ract.apply(ey, ea)) +
                   L.lact.apply(ey, L.ract.apply(ex, ea));
        rep.check("LE4", {x, y, a}, L.labels({x, y, a}), r);
      }
  for (std::size_t x = L.n; x < L.N; ++x)
    for (std::size_t a = 0; a < L.n; ++a) {
      const Vector ex = L.e(x), ea = L.e(a);
      const LinearMap Rl = L.lact.right_fixed(ea), Lr = L.ract.left_fixed(ex);
      const Tensor2 dVx = L.dV.on_basis(x), dga = L.dg.on_basis(a);
      rep.check("BE4", {x, a}, L.labels({x, a}),
                L.dV.apply(L.lact.apply(ex, ea)) - on_legs(L.I, Rl, dVx) - on_legs(Rl, L.I, dVx));
      rep.check("double.delta-ract", {x, a}, L.labels({x, a}),
                L.dg.apply(L.ract.apply(ex, ea)) - on_legs(Lr, L.I, dga) - on_legs(L.I, Lr, dga));
      // the coupling term acts on δ_g(a), the only cobracket defined on g
      rep.check("double.coupling", {x, a}, L.labels({x, a}),
                on_legs(L.ract.right_fixed(ea), L.I, dVx) + on_legs(L.I, L.lact.left_fixed(ex), dga));
    }
  return rep;
}

LieBialgebra double_cross_sum(const DoubleCrossSumDatum& d) {
  if (auto rep = check_double_cross(d); !rep.valid()) throw InvalidDatum(std::move(rep));
  const std::size_t n = d.base.dim(), m = d.V.dim(), N = n + m;
  BilinearMap br(N, N, N);
  CobracketMap co(N, N, N);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        br(a, b, c) = d.base.bracket()(a, b, c);
        co(a, b, c) = d.base.cobracket()(a, b, c);
      }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        br(n + i, a, b) = d.ract(i, a, b);
        br(a, n + i, b) = -d.ract(i, a, b);
      }
      for (std::size_t k = 0; k < m; ++k) {
        br(n + i, a, n + k) = d.lact(i, a, k);
        br(a, n + i, n + k) = -d.lact(i, a, k);
      }
    }
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        br(n + i, n + j, n + k) = d.V.bracket()(i, j, k);
        co(n + i, n + j, n + k) = d.V.cobracket()(i, j, k);
      }
  }
  return LieBialgebra(direct_sum_space(d.base.space(), d.V.space()), std::move(br), std::move(co));
}

}  // namespace lbext
