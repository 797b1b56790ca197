#pragma once

// Codimension one: flag datums (α, D, A, B), their defining linear systems,
// the bijection with one-dimensional extending data, the (U, β) equivalence
// and the classification driver.

#include <optional>
#include <string>
#include <vector>

#include "lbext/extension.hpp"

namespace lbext {

struct FlagDatum {
  LieBialgebra base;
  std::vector<Scalar> alpha;  // α(e_k)
  LinearMap D;                // g → g
  Vector A;
  Tensor2 B;                  // expected to be a wedge

  static FlagDatum zero(LieBialgebra base);
  std::size_t dim() const { return base.dim(); }
  friend bool operator==(const FlagDatum&, const FlagDatum&) = default;
};

/// Throws DimensionMismatch when a component does not match the base.
void validate_shapes(const FlagDatum& fd);

struct EquivWitness {
  Vector U;
  Scalar beta;
};

/// Conditions "flag.B-wedge", "flag.alpha-derived", "flag.delta-A",
/// "flag.coupling", "flag.derivation", "flag.B-cojacobi", "flag.cocycle".
VerdictReport check_flag_datum(const FlagDatum& fd);

/// Label of the single basis vector of V used by flag_to_bidatum.
std::string flag_v_label(const BasisSpace& g);

/// x◁a = α(a)x, x▷a = D(a), Δ_E(x) = A⊗x, Δ_V(x) = B.
BiExtendingDatum flag_to_bidatum(const FlagDatum& fd);
/// Inverse of flag_to_bidatum. Throws DimensionMismatch unless dim V = 1 and
/// InvariantViolation when f, {·,·} or δ_V is nonzero.
FlagDatum bidatum_to_flag(const BiExtendingDatum& d);

// Linear pieces -------------------------------------------------------------------

/// {α : α([g,g]) = 0}
SolutionSpace alpha_space(const LieBialgebra& base);
/// ker δ
SolutionSpace a_space(const LieBialgebra& base);
/// {α : α([g,g]) = 0 and [a,A] = Σ α(a₂)a₁ for all a}; affine in α.
SolutionSpace coupled_alpha_space(const LieBialgebra& base, const Vector& A);
/// "flag.coupling" residual per basis element.
VerdictReport coupling_check(const LieBialgebra& base, std::span<const Scalar> alpha, const Vector& A);

/// Coordinates of the (D, B) space: the n² entries of D row-major (entry
/// (r, c) is the e_r-coefficient of D(e_c)), then the wedge coordinates of B
/// for i < j in lexicographic order, B = Σ w_ij (e_i⊗e_j - e_j⊗e_i).
std::size_t db_ambient_dim(std::size_t n);
std::vector<Scalar> db_coordinates(const LinearMap& D, const Tensor2& B);
std::pair<LinearMap, Tensor2> db_from_coordinates(std::size_t n, std::span<const Scalar> coords);
std::string db_coordinate_name(const BasisSpace& g, std::size_t k);

/// The homogeneous linear system in (D, B) for fixed (α, A): every row is one
/// coordinate of a derivation, co-Jacobi or cocycle residual.
Matrix db_system(const LieBialgebra& base, std::span<const Scalar> alpha, const Vector& A);
SolutionSpace solve_db(const LieBialgebra& base, std::span<const Scalar> alpha, const Vector& A);

// Equivalence ---------------------------------------------------------------------

/// The datum fd' with fd ≡ fd' through (U, β):
/// D' = (D - [U,·] + α(·)U)/β, B' = (B - δ(U) - U⊗A + A⊗U)/β.
FlagDatum flag_action(const FlagDatum& fd, const EquivWitness& w);

/// A witness (U, β) with flag_action(fd1, (U, β)) = fd2, or nullopt.
std::optional<EquivWitness> flag_equivalent(const FlagDatum& fd1, const FlagDatum& fd2);

/// (p, q) = (v ↦ U, β·id) on the one-dimensional V.
PQPair witness_pq(const EquivWitness& w, std::size_t dim_g);

// Classification ------------------------------------------------------------------

struct StructureFacts {
  std::size_t dim = 0;
  std::size_t derived_dim = 0;          // dim [g,g]
  std::size_t center_dim = 0;
  std::size_t der_dim = 0;              // derivations
  std::size_t inn_dim = 0;              // inner derivations
  std::size_t wedge_invariant_dim = 0;  // dim (g∧g)^g

  bool perfect() const { return derived_dim == dim; }
  bool centerless() const { return center_dim == 0; }
  /// α = 0 and A = 0 are forced.
  bool forces_trivial_alpha_a() const { return perfect() && centerless(); }
  /// Additionally every extension is trivial.
  bool forces_trivial_class() const {
    return forces_trivial_alpha_a() && der_dim == inn_dim && wedge_invariant_dim == 0;
  }
};

StructureFacts structure_facts(const LieBialgebra& base);

/// One family of equivalence classes: representative + Σ t_i parameters_i.
/// A "normalized" family has its leading coordinate fixed to 1 by β, so its
/// parameters are fixed invariants. The "D = 0" family is closed under β,
/// so points differing by a nonzero scalar are equivalent.
struct FlagFamily {
  std::string kind;  // "normalized" or "D = 0"
  std::optional<std::size_t> normalized_coordinate;
  std::vector<Scalar> representative;
  std::vector<std::vector<Scalar>> parameters;
  bool beta_scalable = false;

  FlagDatum representative_datum(const LieBialgebra& base, std::span<const Scalar> alpha, const Vector& A) const;
};

struct AlphaCase {
  std::vector<Scalar> alpha;
  VerdictReport coupling;
  SolutionSpace db_space;
  std::vector<std::vector<Scalar>> u_image;          // RREF basis of the U-shift directions
  std::vector<std::vector<Scalar>> quotient_basis;   // RREF basis of the canonical slice
  std::vector<FlagFamily> families;
};

struct SampleReport {
  Vector A;
  SolutionSpace coupled_alpha;
  std::vector<AlphaCase> cases;
  std::size_t db_dimension() const;  // max over cases, 0 when there are none
};

struct FlagSolutionReport {
  SolutionSpace alpha_space;
  SolutionSpace a_space;
  StructureFacts facts;
  std::vector<SampleReport> samples;
  std::vector<std::size_t> dimension_jumps;  // indices of samples above the smallest dimension
  std::vector<std::string> notes;

  /// Number of classes when every family is a single point, else nullopt.
  std::optional<std::size_t> finite_class_count() const;
};

/// Throws SampleNotInASpace when a sample is not in ker δ. The zero sample is
/// always processed first; a zero entry in samples is not repeated.
FlagSolutionReport classify_codim1(const LieBialgebra& base, const std::vector<Vector>& samples);

}  // namespace lbext
