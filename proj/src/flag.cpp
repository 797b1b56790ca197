#include "lbext/flag.hpp"

#include <algorithm>
#include <functional>

namespace lbext {

FlagDatum FlagDatum::zero(LieBialgebra base) {
  const std::size_t n = base.dim();
  return {std::move(base), std::vector<Scalar>(n), LinearMap(n, n), zero_vector(n), Tensor2({n, n})};
}

void validate_shapes(const FlagDatum& fd) {
  const std::size_t n = fd.dim();
  if (fd.alpha.size() != n) throw DimensionMismatch("alpha must have one entry per basis vector");
  if (fd.D.from_dim() != n || fd.D.to_dim() != n) throw DimensionMismatch("D must be a square matrix of size dim g");
  if (fd.A.dim(0) != n) throw DimensionMismatch("A must have one entry per basis vector");
  if (fd.B.dim(0) != n || fd.B.dim(1) != n) throw DimensionMismatch("B must be a dim g x dim g tensor");
}

namespace {

using Emit = std::function<void(const std::string&, std::vector<std::size_t>, const Residual&)>;

Scalar apply_form(std::span<const Scalar> alpha, const Vector& v) {
  Scalar s;
  for (std::size_t k = 0; k < alpha.size(); ++k)
    if (!alpha[k].is_zero() && !v(k).is_zero()) s += alpha[k] * v(k);
  return s;
}

// Σ α(a₂) a₁ for δ(a) = Σ a₁⊗a₂
Vector contract_right(const Tensor2& t, std::span<const Scalar> alpha) {
  Vector out = zero_vector(t.dim(0));
  for (std::size_t j = 0; j < t.dim(0); ++j)
    for (std::size_t k = 0; k < t.dim(1); ++k)
      if (!t(j, k).is_zero() && !alpha[k].is_zero()) out(j) += t(j, k) * alpha[k];
  return out;
}

// The three conditions that involve D or B; all linear in (D, B) for fixed (α, A).
void db_residuals(const LieBialgebra& g, std::span<const Scalar> alpha, const Vector& A, const LinearMap& D,
                  const Tensor2& B, const Emit& emit) {
  const std::size_t n = g.dim();
  const LinearMap I = LinearMap::identity(n);
  const LieAlgebra alg = g.algebra();
  const CobracketMap& co = g.cobracket();

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const Vector ea = basis_vector(n, a), eb = basis_vector(n, b);
      const Vector Da = D.image(a), Db = D.image(b);
      Vector r = D.apply(g.bracket(ea, eb)) - g.bracket(Da, eb) - g.bracket(ea, Db) - Db * alpha[a] + Da * alpha[b];
      emit("flag.derivation", {a, b}, Residual::of(r));
    }

  const Tensor3 AB = outer(A, B);
  const Tensor3 IdB = on_right(B, co);
  Tensor3 cj = AB - twist12(AB) + outer(B, A) + IdB - twist12(IdB) - on_left(co, B);
  emit("flag.B-cojacobi", {}, Residual::of(cj));

  for (std::size_t a = 0; a < n; ++a) {
    const Vector ea = basis_vector(n, a), Da = D.image(a);
    const Tensor2 da = co.on_basis(a);
    Tensor2 r = outer(Da, A) - outer(A, Da) + B * alpha[a] + adjoint_act_tensor(alg, ea, B) + co.apply(Da) -
                on_legs(D, I, da) - on_legs(I, D, da);
    emit("flag.cocycle", {a}, Residual::of(r));
  }
}

std::vector<std::string> labels_of(const BasisSpace& s, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (auto k : idx) out.push_back(s.name(k));
  return out;
}

void coupling_into(const LieBialgebra& g, std::span<const Scalar> alpha, const Vector& A, VerdictReport& rep) {
  const std::size_t n = g.dim();
  for (std::size_t a = 0; a < n; ++a) {
    const Vector ea = basis_vector(n, a);
    Vector r = g.bracket(ea, A) - contract_right(g.cobracket().on_basis(a), alpha);
    rep.check("flag.coupling", {a}, {g.space().name(a)}, r);
  }
}

// Matrix of a linear map given as a function on coordinate vectors, by probing
// unit vectors.
Matrix probe(std::size_t unknowns, const std::function<std::vector<Scalar>(std::span<const Scalar>)>& fn) {
  std::vector<std::vector<Scalar>> cols;
  std::vector<Scalar> unit(unknowns);
  for (std::size_t k = 0; k < unknowns; ++k) {
    unit[k] = 1;
    cols.push_back(fn(unit));
    unit[k] = 0;
  }
  const std::size_t rows = cols.empty() ? fn(unit).size() : cols.front().size();
  return Matrix::from_columns(rows, cols);
}

}  // namespace

VerdictReport check_flag_datum(const FlagDatum& fd) {
  validate_shapes(fd);
  const LieBialgebra& g = fd.base;
  const std::size_t n = g.dim();
  VerdictReport rep;
  rep.check("flag.B-wedge", {}, {}, fd.B + twist(fd.B));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Vector r = make_vector({apply_form(fd.alpha, g.bracket().on_basis(a, b))});
      rep.check("flag.alpha-derived", {a, b}, labels_of(g.space(), {a, b}), r);
    }
  rep.check("flag.delta-A", {}, {}, g.cobracket(fd.A));
  coupling_into(g, fd.alpha, fd.A, rep);
  db_residuals(g, fd.alpha, fd.A, fd.D, fd.B, [&](const std::string& label, std::vector<std::size_t> idx, const Residual& r) {
    if (!r.is_zero()) rep.add({label, idx, labels_of(g.space(), idx), r});
  });
  return rep;
}

std::string flag_v_label(const BasisSpace& g) {
  std::string label = "v";
  while (g.index_of(label)) label += "'";
  return label;
}

BiExtendingDatum flag_to_bidatum(const FlagDatum& fd) {
  validate_shapes(fd);
  const std::size_t n = fd.dim();
  BiExtendingDatum d = BiExtendingDatum::zero(fd.base, BasisSpace({flag_v_label(fd.base.space())}));
  for (std::size_t a = 0; a < n; ++a) {
    d.lact(0, a, 0) = fd.alpha[a];
    d.DeltaE(0, a, 0) = fd.A(a);
    for (std::size_t b = 0; b < n; ++b) {
      d.ract(0, a, b) = fd.D(b, a);
      d.DeltaV(0, a, b) = fd.B(a, b);
    }
  }
  return d;
}

FlagDatum bidatum_to_flag(const BiExtendingDatum& d) {
  validate_shapes(d);
  if (d.dim_v() != 1) throw DimensionMismatch("a flag datum needs dim V = 1");
  if (!d.f.is_zero() || !d.vbracket.is_zero() || !d.deltaV.is_zero())
    throw InvariantViolation("f, {.,.} and delta_V vanish on flag-shaped data");
  FlagDatum fd = FlagDatum::zero(d.base);
  const std::size_t n = d.dim_g();
  for (std::size_t a = 0; a < n; ++a) {
    fd.alpha[a] = d.lact(0, a, 0);
    fd.A(a) = d.DeltaE(0, a, 0);
    for (std::size_t b = 0; b < n; ++b) {
      fd.D(b, a) = d.ract(0, a, b);
      fd.B(a, b) = d.DeltaV(0, a, b);
    }
  }
  return fd;
}

// Linear pieces -------------------------------------------------------------------

SolutionSpace alpha_space(const LieBialgebra& base) {
  const std::size_t n = base.dim();
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) rows.push_back(base.bracket().on_basis(a, b).to_vector());
  return nullspace(Matrix::from_rows(n, rows));
}

SolutionSpace a_space(const LieBialgebra& base) {
  const std::size_t n = base.dim();
  return nullspace(probe(n, [&](std::span<const Scalar> A) {
    return base.cobracket(make_vector({A.begin(), A.end()})).to_vector();
  }));
}

SolutionSpace coupled_alpha_space(const LieBialgebra& base, const Vector& A) {
  const std::size_t n = base.dim();
  // rows: α([a,b]) = 0, then Σ α(a₂)a₁ = [a, A]
  auto lhs = [&](std::span<const Scalar> alpha) {
    std::vector<Scalar> out;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) out.push_back(apply_form(alpha, base.bracket().on_basis(a, b)));
    for (std::size_t a = 0; a < n; ++a) {
      const Vector c = contract_right(base.cobracket().on_basis(a), alpha);
      out.insert(out.end(), c.values().begin(), c.values().end());
    }
    return out;
  };
  std::vector<Scalar> rhs(n * (n - 1) / 2);
  for (std::size_t a = 0; a < n; ++a) {
    const Vector r = base.bracket(basis_vector(n, a), A);
    rhs.insert(rhs.end(), r.values().begin(), r.values().end());
  }
  return solve_affine(probe(n, lhs), rhs);
}

VerdictReport coupling_check(const LieBialgebra& base, std::span<const Scalar> alpha, const Vector& A) {
  if (alpha.size() != base.dim() || A.dim(0) != base.dim()) throw DimensionMismatch("alpha or A has the wrong size");
  VerdictReport rep;
  coupling_into(base, alpha, A, rep);
  return rep;
}

std::size_t db_ambient_dim(std::size_t n) { return n * n + n * (n - 1) / 2; }

std::vector<Scalar> db_coordinates(const LinearMap& D, const Tensor2& B) {
  const std::size_t n = D.from_dim();
  std::vector<Scalar> out;
  out.reserve(db_ambient_dim(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out.push_back(D(r, c));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.push_back(B(i, j));
  return out;
}

std::pair<LinearMap, Tensor2> db_from_coordinates(std::size_t n, std::span<const Scalar> coords) {
  if (coords.size() != db_ambient_dim(n)) throw DimensionMismatch("(D, B) coordinate vector has the wrong length");
  LinearMap D(n, n);
  Tensor2 B({n, n});
  std::size_t k = 0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) D(r, c) = coords[k++];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      B(i, j) = coords[k];
      B(j, i) = -coords[k];
      ++k;
    }
  return {std::move(D), std::move(B)};
}

std::string db_coordinate_name(const BasisSpace& g, std::size_t k) {
  const std::size_t n = g.dim();
  if (k < n * n) return "D[" + g.name(k / n) + "," + g.name(k % n) + "]";
  k -= n * n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (k-- == 0) return "B[" + g.name(i) + "^" + g.name(j) + "]";
  throw DimensionMismatch("(D, B) coordinate index out of range");
}

Matrix db_system(const LieBialgebra& base, std::span<const Scalar> alpha, const Vector& A) {
  const std::size_t n = base.dim();
  if (alpha.size() != n || A.dim(0) != n) throw DimensionMismatch("alpha or A has the wrong size");
  return probe(db_ambient_dim(n), [&](std::span<const Scalar> coords) {
    auto [D, B] = db_from_coordinates(n, coords);
    std::vector<Scalar> out;
    db_residuals(base, alpha, A, D, B, [&](const std::string&, std::vector<std::size_t>, const Residual& r) {
      out.insert(out.end(), r.values.begin(), r.values.end());
    });
    return out;
  });
}

SolutionSpace solve_db(const LieBialgebra& base, std::span<const Scalar> alpha, const Vector& A) {
  return nullspace(db_system(base, alpha, A));
}

// Equivalence ---------------------------------------------------------------------

FlagDatum flag_action(const FlagDatum& fd, const EquivWitness& w) {
  validate_shapes(fd);
  if (w.beta.is_zero()) throw DivisionByZero();
  const std::size_t n = fd.dim();
  const Scalar inv = w.beta.inverse();
  FlagDatum out = fd;
  for (std::size_t a = 0; a < n; ++a) {
    const Vector ea = basis_vector(n, a);
    const Vector col = (fd.D.image(a) - fd.base.bracket(w.U, ea) + w.U * fd.alpha[a]) * inv;
    for (std::size_t r = 0; r < n; ++r) out.D(r, a) = col(r);
  }
  out.B = (fd.B - fd.base.cobracket(w.U) - outer(w.U, fd.A) + outer(fd.A, w.U)) * inv;
  return out;
}

std::optional<EquivWitness> flag_equivalent(const FlagDatum& fd1, const FlagDatum& fd2) {
  validate_shapes(fd1);
  validate_shapes(fd2);
  if (!(fd1.base == fd2.base)) throw DimensionMismatch("flag datums over different bases");
  if (fd1.alpha != fd2.alpha || !(fd1.A == fd2.A)) return std::nullopt;
  const LieBialgebra& g = fd1.base;
  const std::size_t n = g.dim();

  // unknowns (U, β):  [U,a] + β D2(a) - α(a)U = D1(a),  δ(U) + β B2 + U⊗A - A⊗U = B1
  auto lhs = [&](std::span<const Scalar> x) {
    const Vector U = make_vector({x.begin(), x.begin() + static_cast<long>(n)});
    const Scalar& beta = x[n];
    std::vector<Scalar> out;
    for (std::size_t a = 0; a < n; ++a) {
      const Vector r = g.bracket(U, basis_vector(n, a)) + fd2.D.image(a) * beta - U * fd1.alpha[a];
      out.insert(out.end(), r.values().begin(), r.values().end());
    }
    const Tensor2 t = g.cobracket(U) + fd2.B * beta + outer(U, fd1.A) - outer(fd1.A, U);
    out.insert(out.end(), t.values().begin(), t.values().end());
    return out;
  };
  std::vector<Scalar> rhs;
  for (std::size_t a = 0; a < n; ++a) {
    const Vector c = fd1.D.image(a);
    rhs.insert(rhs.end(), c.values().begin(), c.values().end());
  }
  rhs.insert(rhs.end(), fd1.B.values().begin(), fd1.B.values().end());

  const SolutionSpace sol = solve_affine(probe(n + 1, lhs), rhs);
  if (!sol.consistent()) return std::nullopt;
  std::vector<Scalar> x = *sol.particular;
  auto free_beta = std::find_if(sol.basis.begin(), sol.basis.end(), [&](const auto& v) { return !v[n].is_zero(); });
  if (free_beta != sol.basis.end()) {
    const Scalar t = (Scalar(1) - x[n]) / (*free_beta)[n];
    for (std::size_t k = 0; k <= n; ++k) x[k] += t * (*free_beta)[k];
  }
  if (x[n].is_zero()) return std::nullopt;

  return EquivWitness{make_vector({x.begin(), x.begin() + static_cast<long>(n)}), x[n]};
}

PQPair witness_pq(const EquivWitness& w, std::size_t dim_g) {
  PQPair pq{LinearMap(1, dim_g), LinearMap(1, 1)};
  for (std::size_t a = 0; a < dim_g; ++a) pq.p(a, 0) = w.U(a);
  pq.q(0, 0) = w.beta;
  return pq;
}

// Classification ------------------------------------------------------------------

StructureFacts structure_facts(const LieBialgebra& base) {
  const std::size_t n = base.dim();
  StructureFacts f;
  f.dim = n;

  std::vector<std::vector<Scalar>> brackets;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) brackets.push_back(base.bracket().on_basis(a, b).to_vector());
  f.derived_dim = span_basis(brackets, n).size();

  f.center_dim = nullspace(probe(n, [&](std::span<const Scalar> z) {
                   const Vector Z = make_vector({z.begin(), z.end()});
                   std::vector<Scalar> out;
                   for (std::size_t b = 0; b < n; ++b) {
                     const Vector r = base.bracket(Z, basis_vector(n, b));
                     out.insert(out.end(), r.values().begin(), r.values().end());
                   }
                   return out;
                 })).dimension();

  f.der_dim = nullspace(probe(n * n, [&](std::span<const Scalar> d) {
                std::vector<Scalar> out;
                const LinearMap D(Matrix(n, n, {d.begin(), d.end()}));
                for (std::size_t a = 0; a < n; ++a)
                  for (std::size_t b = a + 1; b < n; ++b) {
                    const Vector ea = basis_vector(n, a), eb = basis_vector(n, b);
                    const Vector r = D.apply(base.bracket(ea, eb)) - base.bracket(D.image(a), eb) -
                                     base.bracket(ea, D.image(b));
                    out.insert(out.end(), r.values().begin(), r.values().end());
                  }
                return out;
              })).dimension();

  std::vector<std::vector<Scalar>> ads;
  for (std::size_t k = 0; k < n; ++k) ads.push_back(base.ad(k).matrix().data());
  f.inn_dim = span_basis(ads, n * n).size();

  const LieAlgebra alg = base.algebra();
  f.wedge_invariant_dim = nullspace(probe(n * (n - 1) / 2, [&](std::span<const Scalar> w) {
                            std::vector<Scalar> coords(n * n);
                            coords.insert(coords.end(), w.begin(), w.end());
                            const Tensor2 B = db_from_coordinates(n, coords).second;
                            std::vector<Scalar> out;
                            for (std::size_t a = 0; a < n; ++a) {
                              const Tensor2 r = adjoint_act_tensor(alg, basis_vector(n, a), B);
                              out.insert(out.end(), r.values().begin(), r.values().end());
                            }
                            return out;
                          })).dimension();
  return f;
}

FlagDatum FlagFamily::representative_datum(const LieBialgebra& base, std::span<const Scalar> alpha,
                                           const Vector& A) const {
  FlagDatum fd = FlagDatum::zero(base);
  fd.alpha.assign(alpha.begin(), alpha.end());
  fd.A = A;
  auto [D, B] = db_from_coordinates(base.dim(), representative);
  fd.D = std::move(D);
  fd.B = std::move(B);
  return fd;
}

std::size_t SampleReport::db_dimension() const {
  std::size_t d = 0;
  for (const auto& c : cases) d = std::max(d, c.db_space.dimension());
  return d;
}

std::optional<std::size_t> FlagSolutionReport::finite_class_count() const {
  std::size_t count = 0;
  for (const auto& s : samples)
    for (const auto& c : s.cases)
      for (const auto& fam : c.families) {
        if (!fam.parameters.empty()) return std::nullopt;
        ++count;
      }
  return count;
}

namespace {

AlphaCase classify_case(const LieBialgebra& g, std::vector<Scalar> alpha, const Vector& A) {
  const std::size_t n = g.dim(), dim = db_ambient_dim(n);
  AlphaCase c;
  c.alpha = std::move(alpha);
  c.coupling = coupling_check(g, c.alpha, A);
  c.db_space = solve_db(g, c.alpha, A);

  // U ↦ (D_U, B_U) with D_U(a) = [U,a] - α(a)U and B_U = δ(U) + U⊗A - A⊗U
  std::vector<std::vector<Scalar>> shifts;
  for (std::size_t k = 0; k < n; ++k) {
    const Vector U = basis_vector(n, k);
    LinearMap DU(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      const Vector col = g.bracket(U, basis_vector(n, a)) - U * c.alpha[a];
      for (std::size_t r = 0; r < n; ++r) DU(r, a) = col(r);
    }
    const Tensor2 BU = g.cobracket(U) + outer(U, A) - outer(A, U);
    shifts.push_back(db_coordinates(DU, BU));
  }
  c.u_image = span_basis(shifts, dim);
  for (const auto& v : c.u_image) {
    std::vector<std::vector<Scalar>> both = c.db_space.basis;
    both.push_back(v);
    if (span_basis(both, dim).size() != c.db_space.dimension())
      throw InvariantViolation("U-shift leaves the (D, B) solution space");
  }

  std::vector<std::vector<Scalar>> reduced;
  for (const auto& v : c.db_space.basis) reduced.push_back(reduce_modulo(v, c.u_image));
  c.quotient_basis = span_basis(reduced, dim);

  auto pivot_of = [](const std::vector<Scalar>& v) {
    return static_cast<std::size_t>(std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); }) -
                                    v.begin());
  };
  FlagFamily scalable{"D = 0", std::nullopt, std::vector<Scalar>(dim), {}, true};
  for (std::size_t i = 0; i < c.quotient_basis.size(); ++i) {
    const std::size_t p = pivot_of(c.quotient_basis[i]);
    if (p < n * n) {
      FlagFamily fam{"normalized", p, c.quotient_basis[i], {}, false};
      fam.parameters.assign(c.quotient_basis.begin() + static_cast<long>(i) + 1, c.quotient_basis.end());
      c.families.push_back(std::move(fam));
    } else {
      scalable.parameters.push_back(c.quotient_basis[i]);
    }
  }
  c.families.push_back(std::move(scalable));
  return c;
}

}  // namespace

FlagSolutionReport classify_codim1(const LieBialgebra& base, const std::vector<Vector>& samples) {
  if (auto rep = check_lie_bialgebra(base); !rep.valid()) throw InvalidDatum(std::move(rep));
  const std::size_t n = base.dim();
  FlagSolutionReport out;
  out.alpha_space = alpha_space(base);
  out.a_space = a_space(base);
  out.facts = structure_facts(base);

  std::vector<Vector> todo{zero_vector(n)};
  for (const auto& s : samples) {
    if (s.dim(0) != n) throw DimensionMismatch("sample A has the wrong dimension");
    if (!base.cobracket(s).is_zero()) throw SampleNotInASpace("sample A is not in ker delta");
    if (!s.is_zero()) todo.push_back(s);
  }

  if (out.facts.forces_trivial_alpha_a()) out.notes.push_back("[g,g] = g and Z(g) = 0: alpha = 0 and A = 0 are forced");
  if (out.facts.forces_trivial_class())
    out.notes.push_back("additionally Der(g) = Inn(g) and (g^g)^g = 0: every extension is trivial");

  for (const auto& A : todo) {
    SampleReport s{A, coupled_alpha_space(base, A), {}};
    if (s.coupled_alpha.consistent()) {
      std::vector<std::vector<Scalar>> candidates{*s.coupled_alpha.particular};
      for (const auto& b : s.coupled_alpha.basis) {
        std::vector<Scalar> v = *s.coupled_alpha.particular;
        for (std::size_t k = 0; k < n; ++k) v[k] += b[k];
        candidates.push_back(std::move(v));
      }
      for (auto& alpha : candidates) s.cases.push_back(classify_case(base, std::move(alpha), A));
    }
    out.samples.push_back(std::move(s));
  }

  std::optional<std::size_t> lowest;
  for (const auto& s : out.samples)
    if (!s.cases.empty()) lowest = std::min(lowest.value_or(s.db_dimension()), s.db_dimension());
  for (std::size_t i = 0; i < out.samples.size(); ++i)
    if (!out.samples[i].cases.empty() && out.samples[i].db_dimension() > *lowest) out.dimension_jumps.push_back(i);
  if (!out.dimension_jumps.empty())
    out.notes.push_back(
        "the (D, B) solution dimension jumps at some samples; values of A that were not sampled are expected to "
        "behave like the lowest-dimensional samples (observed at the samples, not proven)");
  return out;
}

}  // namespace lbext
