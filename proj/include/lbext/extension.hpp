#pragma once

// Extending data of a Lie (co/bi)algebra g by a complement V, their
// compatibility condition systems, the unified (co/bi)products on E = g ⊕ V,
// extraction from a decomposition and the (p, q) homomorphisms between products.
//
// Basis of E: the basis of g followed by the basis of V.

#include <span>
#include <vector>

#include "lbext/liecore.hpp"

namespace lbext {

/// (◁, ▷, f, {·,·}) with ◁: V×g→V, ▷: V×g→g, f: V×V→g, {·,·}: V×V→V.
struct AlgExtendingDatum {
  LieAlgebra g;
  BasisSpace V;
  BilinearMap lact;
  BilinearMap ract;
  BilinearMap f;
  BilinearMap vbracket;

  static AlgExtendingDatum zero(LieAlgebra g, BasisSpace V);
  friend bool operator==(const AlgExtendingDatum&, const AlgExtendingDatum&) = default;
};

/// (Δ_E, Δ_V, δ_V) with Δ_E: V→g⊗V, Δ_V: V→g⊗g, δ_V: V→V⊗V.
struct CoalgExtendingDatum {
  LieCoalgebra g;
  BasisSpace V;
  CobracketMap DeltaE;
  CobracketMap DeltaV;
  CobracketMap deltaV;

  static CoalgExtendingDatum zero(LieCoalgebra g, BasisSpace V);
  friend bool operator==(const CoalgExtendingDatum&, const CoalgExtendingDatum&) = default;
};

struct BiExtendingDatum {
  LieBialgebra base;
  BasisSpace V;
  BilinearMap lact;
  BilinearMap ract;
  BilinearMap f;
  BilinearMap vbracket;
  CobracketMap DeltaE;
  CobracketMap DeltaV;
  CobracketMap deltaV;

  static BiExtendingDatum zero(LieBialgebra base, BasisSpace V);
  static BiExtendingDatum combine(const AlgExtendingDatum& alg, const CoalgExtendingDatum& coalg);

  std::size_t dim_g() const { return base.dim(); }
  std::size_t dim_v() const { return V.dim(); }
  AlgExtendingDatum alg() const;
  CoalgExtendingDatum coalg() const;

  friend bool operator==(const BiExtendingDatum&, const BiExtendingDatum&) = default;
};

/// Throws DimensionMismatch when a component does not match g and V.
void validate_shapes(const AlgExtendingDatum& d);
void validate_shapes(const CoalgExtendingDatum& d);
void validate_shapes(const BiExtendingDatum& d);

/// Raised by the checked constructors; carries the failing conditions.
class InvalidDatum : public Error {
 public:
  explicit InvalidDatum(VerdictReport report);
  const VerdictReport& report() const { return report_; }

 private:
  VerdictReport report_;
};

/// Conditions LE1..LE7.
VerdictReport check_alg_extending(const AlgExtendingDatum& d);
/// Conditions CLE1..CLE5.
VerdictReport check_coalg_extending(const CoalgExtendingDatum& d);
/// LE1..LE7, CLE1..CLE5, then BE2..BE7. Violations of the base bialgebra
/// itself are reported with a "base." prefix.
VerdictReport check_bi_extending(const BiExtendingDatum& d);

/// Basis of E = g ⊕ V.
BasisSpace direct_sum_space(const BasisSpace& g, const BasisSpace& V);

LieAlgebra unified_product(const AlgExtendingDatum& d);
LieCoalgebra unified_coproduct(const CoalgExtendingDatum& d);
LieBialgebra unified_biproduct(const BiExtendingDatum& d);

/// The same formulas applied without checking anything; the result may fail
/// the axioms.
LieAlgebra unified_product_unchecked(const AlgExtendingDatum& d);
LieCoalgebra unified_coproduct_unchecked(const CoalgExtendingDatum& d);
LieBialgebra unified_biproduct_unchecked(const BiExtendingDatum& d);

/// Reads off the datum of E relative to the sub-bialgebra spanned by
/// g_indices (0-based). The datum's g keeps the order of g_indices after
/// sorting; V is the complement in increasing order. Its biproduct equals
/// E with the basis reordered accordingly (see subspace_order).
BiExtendingDatum extract_datum(const LieBialgebra& E, std::span<const std::size_t> g_indices);
/// Sorted g_indices followed by the complement: the basis order of the
/// biproduct of extract_datum(E, g_indices) relative to E.
std::vector<std::size_t> subspace_order(std::size_t dim, std::span<const std::size_t> g_indices);

/// p: V→g and q: V→V.
struct PQPair {
  LinearMap p;
  LinearMap q;

  static PQPair identity(std::size_t dim_g, std::size_t dim_v);
  friend bool operator==(const PQPair&, const PQPair&) = default;
};

/// φ(a + x) = a + p(x) + q(x) as a matrix on E.
LinearMap phi_matrix(std::size_t dim_g, const PQPair& pq);

struct HomReport {
  LinearMap phi;
  VerdictReport conditions;  // the (p, q) condition list
  VerdictReport direct;      // φ checked against both biproducts
  bool q_invertible = false;

  bool is_homomorphism() const { return conditions.valid(); }
  bool verdicts_agree() const { return conditions.valid() == direct.valid(); }
  bool is_isomorphism() const { return is_homomorphism() && q_invertible; }
};

/// Throws InvalidDatum when either side is not a bialgebraic extending structure.
HomReport hom_from_pq(const BiExtendingDatum& src, const BiExtendingDatum& dst, const PQPair& pq);

/// The datum d' for which φ_{p,q}: E_d → E_{d'} is an isomorphism.
/// Throws SingularQ when q is not invertible.
BiExtendingDatum transform_datum(const BiExtendingDatum& d, const PQPair& pq);

/// The pair of φ_second ∘ φ_first.
PQPair compose(const PQPair& first, const PQPair& second);

}  // namespace lbext
