#pragma once

// Every component of an extending datum re-expressed as a map on E = g ⊕ V,
// extended by zero off its natural domain. Condition residuals then become
// plain E-tensors.

#include "lbext/extension.hpp"

namespace lbext::detail {

struct Lift {
  std::size_t n = 0;  // dim g
  std::size_t m = 0;  // dim V
  std::size_t N = 0;
  BasisSpace space;

  BilinearMap br, lact, ract, f, vb;
  CobracketMap dg, DE, DV, dV;
  LinearMap I;

  Lift(const BasisSpace& g, const BasisSpace& V);
  static Lift of(const AlgExtendingDatum& d);
  static Lift of(const CoalgExtendingDatum& d);
  static Lift of(const BiExtendingDatum& d);

  void set_algebra(const BilinearMap& bracket);
  void set_alg(const AlgExtendingDatum& d);
  void set_coalgebra(const CobracketMap& cobracket);
  void set_coalg(const CoalgExtendingDatum& d);

  Vector e(std::size_t k) const { return basis_vector(N, k); }
  std::size_t v(std::size_t i) const { return n + i; }

  /// p: V→g and q: V→V as maps on E
  LinearMap lift_p(const LinearMap& p) const;
  LinearMap lift_q(const LinearMap& q) const;

  LinearMap ad(const Vector& a) const { return br.left_fixed(a); }
  /// t ↦ (ad(a)⊗I + I⊗ad(a)) t
  Tensor2 adjoint(const Vector& a, const Tensor2& t) const;
  /// (F⊗I + I⊗F) t
  Tensor2 derive(const LinearMap& F, const Tensor2& t) const;
  /// (I⊗I - τ) t
  static Tensor2 antisym(const Tensor2& t) { return t - twist(t); }

  std::vector<std::string> labels(std::initializer_list<std::size_t> idx) const;

  BiExtendingDatum unlift(const LieBialgebra& base, const BasisSpace& V) const;
};

}  // namespace lbext::detail
