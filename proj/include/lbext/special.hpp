#pragma once

// Three special shapes of bialgebraic extending data, each with its own
// reduced condition list and product formula:
//   crossed bi-product     ◁ = 0
//   bicrossed sum          ◁ = f = Δ_V = 0
//   double cross sum       f = Δ_E = Δ_V = 0
// In all three V carries its own Lie bialgebra structure ({·,·}, δ_V).

#include "lbext/extension.hpp"

namespace lbext {

struct CrossedBiDatum {
  LieBialgebra base;
  LieBialgebra V;
  BilinearMap ract;    // V×g→g
  BilinearMap f;       // V×V→g
  CobracketMap DeltaE; // V→g⊗V
  CobracketMap DeltaV; // V→g⊗g

  static CrossedBiDatum zero(LieBialgebra base, LieBialgebra V);
  /// Throws InvariantViolation when ◁ is nonzero.
  static CrossedBiDatum from_general(const BiExtendingDatum& d);
  BiExtendingDatum general() const;
};

struct BicrossedSumDatum {
  LieBialgebra base;
  LieBialgebra V;
  BilinearMap ract;
  CobracketMap DeltaE;

  static BicrossedSumDatum zero(LieBialgebra base, LieBialgebra V);
  /// Throws InvariantViolation when ◁, f or Δ_V is nonzero.
  static BicrossedSumDatum from_general(const BiExtendingDatum& d);
  BiExtendingDatum general() const;
};

struct DoubleCrossSumDatum {
  LieBialgebra base;
  LieBialgebra V;
  BilinearMap lact;  // V×g→V
  BilinearMap ract;  // V×g→g

  static DoubleCrossSumDatum zero(LieBialgebra base, LieBialgebra V);
  /// Throws InvariantViolation when f, Δ_E or Δ_V is nonzero.
  static DoubleCrossSumDatum from_general(const BiExtendingDatum& d);
  BiExtendingDatum general() const;
};

VerdictReport check_crossed(const CrossedBiDatum& d);
VerdictReport check_bicrossed(const BicrossedSumDatum& d);
VerdictReport check_double_cross(const DoubleCrossSumDatum& d);

/// Throw InvalidDatum when the reduced conditions fail.
LieBialgebra crossed_biproduct(const CrossedBiDatum& d);
LieBialgebra bicrossed_sum(const BicrossedSumDatum& d);
LieBialgebra double_cross_sum(const DoubleCrossSumDatum& d);

}  // namespace lbext
