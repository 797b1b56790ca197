// One line per acceptance criterion; exit status is nonzero when any fails.
// Every comparison is exact; the only tolerances are the runtime limits below.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "generators.hpp"
#include "lbext/cli.hpp"
#include "lbext/io.hpp"

using namespace lbext;
using testgen::Rng;

namespace {

constexpr double kGoldenSeconds = 1.0;
constexpr double kMasterSeconds = 30.0;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Plain Gaussian elimination, kept separate from the library solver.
std::size_t oracle_rank(std::vector<std::vector<Scalar>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t q = r + 1; q < rows.size(); ++q) {
      if (rows[q][c].is_zero()) continue;
      const Scalar f = rows[q][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[q][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

std::vector<std::vector<Scalar>> rows_of(const Matrix& m) {
  std::vector<std::vector<Scalar>> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.emplace_back(m.row(r).begin(), m.row(r).end());
  return out;
}

bool same_span(const std::vector<std::vector<Scalar>>& a, const std::vector<std::vector<Scalar>>& b) {
  auto both = a;
  both.insert(both.end(), b.begin(), b.end());
  if (both.empty()) return true;
  const std::size_t ra = a.empty() ? 0 : oracle_rank(a), rb = b.empty() ? 0 : oracle_rank(b);
  return ra == rb && oracle_rank(both) == ra;
}

std::vector<Scalar> unit(std::size_t dim, std::size_t k) {
  std::vector<Scalar> v(dim);
  v[k] = 1;
  return v;
}

// 1 -------------------------------------------------------------------------------

// Coordinates of the (D, B) space for Heisenberg, D(x) = a1 x + a2 y + a3 h,
// D(y) = b1 x + b2 y + b3 h, B = e1 x∧y + e2 y∧h + e3 h∧x.
enum HeisCoord : std::size_t { A1 = 0, B1 = 1, XH = 2, A2 = 3, B2 = 4, YH = 5, A3 = 6, B3 = 7, HH = 8, E1 = 9 };

std::vector<std::vector<Scalar>> heisenberg_rows(const Scalar& k) {
  auto row = [](std::initializer_list<std::pair<std::size_t, Scalar>> terms) {
    std::vector<Scalar> r(12);
    for (const auto& [i, c] : terms) r[i] += c;
    return r;
  };
  return {
      row({{A1, k}, {E1, 1}, {A2, -1}, {B1, -1}}),
      row({{A2, k}, {B2, -2}}),
      row({{B2, k}, {E1, 1}, {B1, 1}, {A2, 1}}),
      row({{B1, k}, {A1, 2}}),
      row({{E1, k}}),
      // D is a derivation: D(h) = (a1 + b2) h
      row({{XH, 1}}),
      row({{YH, 1}}),
      row({{HH, 1}, {A1, -1}, {B2, -1}}),
  };
}

FlagDatum heisenberg_datum(const Scalar& k, const Scalar& a1, const Scalar& a2, const Scalar& b1, const Scalar& b2,
                           std::span<const Scalar> b_coords = {}) {
  const std::size_t n = 3;
  FlagDatum fd = FlagDatum::zero(heisenberg());
  fd.A = basis_vector(n, 2) * k;
  std::vector<Scalar> c(12);
  c[A1] = a1;
  c[A2] = a2;
  c[B1] = b1;
  c[B2] = b2;
  c[HH] = a1 + b2;
  for (std::size_t i = 0; i < b_coords.size(); ++i) c[9 + i] = b_coords[i];
  std::tie(fd.D, fd.B) = db_from_coordinates(n, c);
  return fd;
}

std::vector<Scalar> add(std::vector<Scalar> a, const std::vector<Scalar>& b, const Scalar& t = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += t * b[i];
  return a;
}

FlagDatum datum_at(const std::vector<Scalar>& coords, const Scalar& k) {
  FlagDatum fd = FlagDatum::zero(heisenberg());
  fd.A = basis_vector(3, 2) * k;
  std::tie(fd.D, fd.B) = db_from_coordinates(3, coords);
  return fd;
}

Outcome golden_classification() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const LieBialgebra g = heisenberg();
  std::ostringstream out, err;
  const int code = run_cli({"flag", "classify", "heisenberg", "--samples", "0,1,2i,-2i", "--format", "machine"}, out, err);
  const FlagSolutionReport r = classify_codim1(g, {basis_vector(3, 2), basis_vector(3, 2) * Scalar(0, 2),
                                                   basis_vector(3, 2) * Scalar(0, -2)});
  const double elapsed = seconds_since(t0);
  o.require(code == 0, "flag classify exited with " + std::to_string(code));
  if (!o.pass) return o;

  const auto json = nlohmann::json::parse(out.str());
  o.require(json["samples"].size() == 4, "classify did not report four samples");

  o.require(r.a_space.dimension() == 1 && r.a_space.basis[0] == std::vector<Scalar>{0, 0, 1}, "A-space is not span{h}");
  const Scalar ks[] = {0, 1, Scalar(0, 2), Scalar(0, -2)};
  const std::vector<std::vector<Scalar>> fixed_b{unit(12, 10), unit(12, 11)};
  o.require(r.samples.size() == 4, "sample count");
  for (std::size_t s = 0; s < r.samples.size() && o.pass; ++s) {
    const Scalar& k = ks[s];
    const SampleReport& sr = r.samples[s];
    const std::string at = " at k = " + k.str();
    o.require(sr.A == basis_vector(3, 2) * k, "sample order" + at);
    o.require(sr.coupled_alpha.dimension() == 0 && sr.coupled_alpha.consistent() &&
                  is_zero_vector(*sr.coupled_alpha.particular),
              "alpha not forced to 0" + at);
    o.require(sr.cases.size() == 1, "expected one alpha case" + at);
    if (!o.pass) break;
    const AlphaCase& c = sr.cases[0];
    o.require(same_span(rows_of(db_system(g, c.alpha, sr.A)), heisenberg_rows(k)), "constraint rows differ" + at);
    o.require(json["samples"][s]["cases"][0]["families"].size() == c.families.size(), "CLI families differ" + at);

    const bool special = s >= 2;
    o.require(c.families.size() == (s == 1 ? 1u : 2u), "family count" + at);
    if (!o.pass) break;
    const FlagFamily& zero_family = c.families.back();
    o.require(zero_family.kind == "D = 0" && zero_family.beta_scalable && is_zero_vector(zero_family.representative),
              "D = 0 family" + at);
    o.require(same_span(zero_family.parameters, fixed_b), "D = 0 family parameters are not (e2, e3)" + at);
    // β-scalable: a point and its double are equivalent
    const auto p = add(zero_family.representative, fixed_b[0]);
    o.require(flag_equivalent(datum_at(p, k), datum_at(add(p, p), k)).has_value(), "D = 0 family not beta-scalable" + at);
    if (s == 1) continue;

    const FlagFamily& fam = c.families.front();
    o.require(fam.kind == "normalized" && !fam.beta_scalable, "normalized family" + at);
    o.require(same_span(fam.parameters, fixed_b), "normalized family parameters are not (e2, e3)" + at);
    const FlagDatum rep = fam.representative_datum(g, c.alpha, sr.A);
    o.require(check_flag_datum(rep).valid(), "representative invalid" + at);
    FlagDatum stated;
    if (!special) {
      // rotation with b1 = 1
      stated = heisenberg_datum(k, 0, -1, 1, 0);
      o.require(rep == stated, "k = 0 representative is not the rotation");
      o.require(fam.normalized_coordinate == std::optional<std::size_t>(B1), "rotation not normalized on b1");
    } else {
      // b1 = 1, a1 = -k/2, a2 = 1, b2 = k/2
      stated = heisenberg_datum(k, -k / Scalar(2), 1, 1, k / Scalar(2));
      o.require(check_flag_datum(stated).valid(), "stated matrix invalid" + at);
      o.require(flag_equivalent(rep, stated).has_value(), "representative not equivalent to the stated matrix" + at);
    }
    // (e2, e3) are invariants of the normalized family
    const auto q = add(fam.representative, fixed_b[0]);
    o.require(!flag_equivalent(datum_at(q, k), datum_at(add(q, fixed_b[0]), k)).has_value(),
              "normalized family parameter is not fixed" + at);
  }
  o.require(r.dimension_jumps == std::vector<std::size_t>{0, 2, 3}, "dimension jumps");
  o.require(elapsed < kGoldenSeconds, "runtime " + std::to_string(elapsed) + " s");
  if (o.pass) o.detail = "4 samples, " + std::to_string(elapsed) + " s";
  return o;
}

// 2 -------------------------------------------------------------------------------

Outcome master_equivalence() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(1002);
  const auto bases = testgen::small_bases();
  std::vector<BiExtendingDatum> valid_pool;
  std::size_t total = 0, mutated = 0, valid = 0;
  auto compare = [&](const BiExtendingDatum& d) {
    ++total;
    const bool le = check_alg_extending(d.alg()).valid();
    const bool cle = check_coalg_extending(d.coalg()).valid();
    const bool be = check_bi_extending(d).valid();
    o.require(le == check_lie_algebra(unified_product_unchecked(d.alg())).valid(), "LE disagrees");
    o.require(cle == check_lie_coalgebra(unified_coproduct_unchecked(d.coalg())).valid(), "CLE disagrees");
    o.require(be == check_lie_bialgebra(unified_biproduct_unchecked(d)).valid(), "BE disagrees");
    return be;
  };
  for (int t = 0; t < 500; ++t) {
    const LieBialgebra& g = bases[testgen::below(rng, bases.size())];
    const BiExtendingDatum d = testgen::random_datum(g, 1 + testgen::below(rng, 2), rng);
    if (compare(d)) {
      ++valid;
      valid_pool.push_back(d);
    }
  }
  for (int t = 0; t < 40; ++t)
    if (auto fd = testgen::random_valid_flag(bases[testgen::below(rng, bases.size())], rng)) {
      const BiExtendingDatum d = flag_to_bidatum(*fd);
      valid += compare(d);
      valid_pool.push_back(d);
    }
  o.require(!valid_pool.empty(), "no valid data generated");
  for (int t = 0; t < 120 && o.pass; ++t) {
    compare(testgen::mutate(valid_pool[testgen::below(rng, valid_pool.size())], rng));
    ++mutated;
  }
  const double elapsed = seconds_since(t0);
  o.require(total >= 500 && mutated >= 50, "too few data");
  o.require(elapsed < kMasterSeconds, "runtime " + std::to_string(elapsed) + " s");
  if (o.pass)
    o.detail = std::to_string(total) + " data, " + std::to_string(valid) + " valid, " + std::to_string(mutated) +
               " mutated, " + std::to_string(elapsed) + " s";
  return o;
}

// 3 -------------------------------------------------------------------------------

// Is the span of the chosen basis vectors closed under bracket and cobracket?
bool closed_oracle(const LieBialgebra& E, const std::vector<std::size_t>& idx) {
  const std::size_t N = E.dim();
  std::vector<bool> in(N, false);
  for (auto k : idx) in[k] = true;
  for (auto i : idx) {
    for (auto j : idx)
      for (std::size_t k = 0; k < N; ++k)
        if (!in[k] && !E.bracket()(i, j, k).is_zero()) return false;
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b)
        if ((!in[a] || !in[b]) && !E.cobracket()(i, a, b).is_zero()) return false;
  }
  return true;
}

Outcome extraction_round_trip() {
  Outcome o;
  std::size_t closed = 0, rejected = 0;
  for (const auto& e : corpus_entries()) {
    if (e.kind != "bialgebra") continue;
    const LieBialgebra E = corpus_bialgebra(e.name);
    const std::size_t N = E.dim();
    for (unsigned mask = 1; mask + 1 < (1u << N); ++mask) {
      std::vector<std::size_t> idx;
      for (std::size_t k = 0; k < N; ++k)
        if (mask & (1u << k)) idx.push_back(k);
      const std::string at = " (" + e.name + ", mask " + std::to_string(mask) + ")";
      if (!closed_oracle(E, idx)) {
        bool threw = false;
        try {
          (void)extract_datum(E, idx);
        } catch (const NotASubBialgebra&) {
          threw = true;
        }
        o.require(threw, "non-closed subset accepted" + at);
        ++rejected;
        continue;
      }
      ++closed;
      const BiExtendingDatum d = extract_datum(E, idx);
      o.require(check_bi_extending(d).valid(), "extracted datum invalid" + at);
      o.require(unified_biproduct(d) == permute_basis(E, subspace_order(N, idx)), "rebuild differs" + at);
      std::vector<std::size_t> first(idx.size());
      for (std::size_t k = 0; k < first.size(); ++k) first[k] = k;
      o.require(extract_datum(unified_biproduct(d), first) == d, "re-extraction differs" + at);
      const std::string text = write_datum(e.name, d);
      o.require(parse_datum(text) == d && write_datum(e.name, parse_datum(text)) == text, "serialization" + at);
    }
  }
  // biproduct → extract on random valid data
  Rng rng(1003);
  std::size_t random_ok = 0;
  const auto bases = testgen::small_bases();
  for (int t = 0; t < 2000 && random_ok < 100; ++t) {
    const BiExtendingDatum d = testgen::random_datum(bases[testgen::below(rng, bases.size())], 1 + testgen::below(rng, 2), rng);
    if (!check_bi_extending(d).valid()) continue;
    ++random_ok;
    std::vector<std::size_t> first(d.dim_g());
    for (std::size_t k = 0; k < first.size(); ++k) first[k] = k;
    const BiExtendingDatum back = extract_datum(unified_biproduct(d), first);
    o.require(back.lact == d.lact && back.ract == d.ract && back.f == d.f && back.vbracket == d.vbracket &&
                  back.DeltaE == d.DeltaE && back.DeltaV == d.DeltaV && back.deltaV == d.deltaV,
              "random datum does not round trip");
  }
  o.require(closed > 0 && random_ok >= 100, "too few cases");
  if (o.pass)
    o.detail = std::to_string(closed) + " sub-bialgebras, " + std::to_string(rejected) + " rejected subsets, " +
               std::to_string(random_ok) + " random data";
  return o;
}

// 4 -------------------------------------------------------------------------------

EquivWitness then(const EquivWitness& first, const EquivWitness& second) {
  return {first.U + second.U * first.beta, first.beta * second.beta};
}

Outcome equivalence_laws() {
  Outcome o;
  Rng rng(1004);
  const std::vector<LieBialgebra> bases{heisenberg(), abelian(1), abelian(2), abelian(3)};
  std::size_t triples = 0, negatives = 0;
  for (int t = 0; t < 240 && o.pass; ++t) {
    const LieBialgebra& g = bases[t % bases.size()];
    const std::size_t n = g.dim();
    const auto fd = testgen::random_valid_flag(g, rng);
    if (!fd) continue;
    const EquivWitness w1 = testgen::random_witness(n, rng), w2 = testgen::random_witness(n, rng);
    const FlagDatum fd2 = flag_action(*fd, w1), fd3 = flag_action(fd2, w2);
    o.require(check_flag_datum(fd2).valid() && check_flag_datum(fd3).valid(), "action leaves the valid set");

    const auto refl = flag_equivalent(*fd, *fd);
    o.require(refl && flag_action(*fd, *refl) == *fd, "reflexivity");
    const auto f12 = flag_equivalent(*fd, fd2), f21 = flag_equivalent(fd2, *fd);
    o.require(f12 && flag_action(*fd, *f12) == fd2, "forward witness");
    o.require(f21 && flag_action(fd2, *f21) == *fd, "symmetry");
    const auto f23 = flag_equivalent(fd2, fd3), f13 = flag_equivalent(*fd, fd3);
    o.require(f23 && f13, "transitivity");
    if (!o.pass) break;
    o.require(flag_action(*fd, then(*f12, *f23)) == fd3, "composed witness");
    o.require(flag_action(*fd, then(w1, w2)) == fd3, "composition law");
    o.require(flag_action(fd2, then(*f21, *f12)) == fd2, "inverse witnesses");

    o.require(transform_datum(flag_to_bidatum(*fd), witness_pq(w1, n)) == flag_to_bidatum(fd2), "transport of w1");
    o.require(transform_datum(flag_to_bidatum(*fd), witness_pq(*f13, n)) == flag_to_bidatum(fd3), "transport of found witness");

    // different A can never be related
    FlagDatum other = *fd;
    other.A = fd->A + basis_vector(n, n - 1);
    if (check_flag_datum(other).valid()) {
      o.require(!flag_equivalent(*fd, other), "witness across different A");
      ++negatives;
    }
    ++triples;
  }
  o.require(triples >= 200, "only " + std::to_string(triples) + " triples");
  if (o.pass) o.detail = std::to_string(triples) + " triples, " + std::to_string(negatives) + " inequivalent pairs";
  return o;
}

// 5 -------------------------------------------------------------------------------

struct IndependentFacts {
  std::size_t derived, center, der, inn, wedge_inv;
};

IndependentFacts facts_by_hand(const LieBialgebra& g) {
  const std::size_t n = g.dim();
  auto c = [&](std::size_t a, std::size_t b, std::size_t k) { return g.bracket()(a, b, k); };
  IndependentFacts f{};

  std::vector<std::vector<Scalar>> brackets;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<Scalar> v(n);
      for (std::size_t k = 0; k < n; ++k) v[k] = c(a, b, k);
      brackets.push_back(v);
    }
  f.derived = oracle_rank(brackets);

  Matrix center(n * n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t u = 0; u < n; ++u) center(a * n + k, u) = c(u, a, k);
  f.center = nullspace(center).dimension();

  // unknown D(r, m) at r*n + m
  Matrix der(n * n * n, n * n);
  std::size_t row = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < n; ++k, ++row)
        for (std::size_t m = 0; m < n; ++m) {
          der(row, k * n + m) += c(a, b, m);
          der(row, m * n + a) -= c(m, b, k);
          der(row, m * n + b) -= c(a, m, k);
        }
  f.der = nullspace(der).dimension();

  std::vector<std::vector<Scalar>> ads;
  for (std::size_t u = 0; u < n; ++u) {
    std::vector<Scalar> v(n * n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t m = 0; m < n; ++m) v[r * n + m] = c(u, m, r);
    ads.push_back(v);
  }
  f.inn = oracle_rank(ads);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  Matrix inv(n * n * n, pairs.size());
  for (std::size_t w = 0; w < pairs.size(); ++w) {
    const auto [i, j] = pairs[w];
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t p = 0; p < n; ++p) {
        // a.(e_i⊗e_j - e_j⊗e_i) at (p, q)
        for (std::size_t q = 0; q < n; ++q) {
          Scalar s;
          if (q == j) s += c(a, i, p);
          if (q == i) s -= c(a, j, p);
          if (p == i) s += c(a, j, q);
          if (p == j) s -= c(a, i, q);
          inv((a * n + p) * n + q, w) += s;
        }
      }
  }
  f.wedge_inv = nullspace(inv).dimension();
  return f;
}

Outcome sl2_fast_path() {
  Outcome o;
  const LieBialgebra g = corpus_bialgebra("sl2-trivial");
  const FlagSolutionReport r = classify_codim1(g, {});
  const IndependentFacts f = facts_by_hand(g);
  o.require(f.derived == 3 && f.center == 0 && f.der == 3 && f.inn == 3 && f.wedge_inv == 0,
            "independent facts are not [g,g]=g, Z=0, Der=Inn=3, (g^g)^g=0");
  o.require(r.facts.derived_dim == f.derived && r.facts.center_dim == f.center && r.facts.der_dim == f.der &&
                r.facts.inn_dim == f.inn && r.facts.wedge_invariant_dim == f.wedge_inv,
            "driver facts disagree with the independent computation");
  o.require(r.facts.forces_trivial_class(), "fast path not taken");
  o.require(r.finite_class_count() == std::optional<std::size_t>(1), "class count is not 1");
  o.require(r.samples.size() == 1 && r.samples[0].cases.size() == 1 && r.samples[0].cases[0].families.size() == 1,
            "unexpected report shape");
  if (o.pass) {
    const AlphaCase& c = r.samples[0].cases[0];
    o.require(is_zero_vector(c.alpha) && r.samples[0].A.is_zero(), "alpha or A nonzero");
    const FlagDatum rep = c.families[0].representative_datum(g, c.alpha, r.samples[0].A);
    o.require(rep == FlagDatum::zero(g), "the class is not the zero flag datum");
    o.require(c.db_space.dimension() == c.u_image.size(), "(D, B) space larger than the U-orbit");
  }
  // cross-check the heisenberg facts too, where the fast path must not fire
  const IndependentFacts h = facts_by_hand(heisenberg());
  const StructureFacts hs = structure_facts(heisenberg());
  o.require(h.derived == hs.derived_dim && h.center == hs.center_dim && h.der == hs.der_dim && h.inn == hs.inn_dim &&
                h.wedge_inv == hs.wedge_invariant_dim && !hs.forces_trivial_alpha_a(),
            "heisenberg facts disagree");
  if (o.pass) o.detail = "one class; Der = Inn = 3, Z = 0, [g,g] = g, (g^g)^g = 0";
  return o;
}

// 6 -------------------------------------------------------------------------------

Outcome flag_bijection() {
  Outcome o;
  Rng rng(1006);
  const auto bases = testgen::small_bases();
  std::size_t total = 0, valid = 0;
  for (int t = 0; t < 300; ++t) {
    const LieBialgebra& g = bases[testgen::below(rng, bases.size())];
    FlagDatum fd = testgen::random_flag(g, rng);
    if (t % 2 == 0)
      if (auto v = testgen::random_valid_flag(g, rng)) fd = *v;
    const bool ok = check_flag_datum(fd).valid();
    valid += ok;
    ++total;
    o.require(ok == check_bi_extending(flag_to_bidatum(fd)).valid(), "verdicts disagree");
    o.require(bidatum_to_flag(flag_to_bidatum(fd)) == fd, "round trip is not the identity");
  }
  o.require(valid >= 50 && total - valid >= 50, "unbalanced sample");
  if (o.pass) o.detail = std::to_string(total) + " flags, " + std::to_string(valid) + " valid";
  return o;
}

// 7 -------------------------------------------------------------------------------

Outcome special_kinds() {
  Outcome o;
  Rng rng(1007);
  const auto bases = testgen::small_bases();
  auto random_v = [&] {
    switch (testgen::below(rng, 3)) {
      case 0: return abelian(1);
      case 1: return abelian(2);
      default: return testgen::two_dim_nonabelian();
    }
  };
  auto maybe_fill = [&](auto& m) {
    if (testgen::percent(rng, 60)) testgen::fill(m, rng, 5 + static_cast<unsigned>(testgen::below(rng, 15)));
  };
  std::size_t counts[3] = {0, 0, 0}, valid[3] = {0, 0, 0};
  for (int t = 0; t < 150 && o.pass; ++t) {
    const LieBialgebra& g = bases[testgen::below(rng, bases.size())];
    const LieBialgebra V = random_v();
    const std::size_t n = g.dim();

    CrossedBiDatum c = CrossedBiDatum::zero(g, V);
    maybe_fill(c.ract);
    maybe_fill(c.f);
    maybe_fill(c.DeltaE);
    maybe_fill(c.DeltaV);
    ++counts[0];
    const bool cv = check_crossed(c).valid();
    o.require(cv == check_bi_extending(c.general()).valid(), "crossed verdicts disagree");
    if (cv) {
      ++valid[0];
      const LieBialgebra E = crossed_biproduct(c);
      o.require(E == unified_biproduct(c.general()), "crossed tables differ");
      for (std::size_t z = 0; z < E.dim(); ++z)
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t k = n; k < E.dim(); ++k) o.require(E.bracket()(z, a, k).is_zero(), "g is not an ideal");
    }

    BicrossedSumDatum b = BicrossedSumDatum::zero(g, V);
    maybe_fill(b.ract);
    maybe_fill(b.DeltaE);
    ++counts[1];
    const bool bv = check_bicrossed(b).valid();
    o.require(bv == check_bi_extending(b.general()).valid(), "bicrossed verdicts disagree");
    if (bv) {
      ++valid[1];
      o.require(bicrossed_sum(b) == unified_biproduct(b.general()), "bicrossed tables differ");
    }

    DoubleCrossSumDatum m = DoubleCrossSumDatum::zero(g, V);
    maybe_fill(m.lact);
    maybe_fill(m.ract);
    ++counts[2];
    const bool mv = check_double_cross(m).valid();
    o.require(mv == check_bi_extending(m.general()).valid(), "double cross verdicts disagree");
    if (mv) {
      ++valid[2];
      o.require(double_cross_sum(m) == unified_biproduct(m.general()), "double cross tables differ");
    }
  }
  for (int k = 0; k < 3; ++k) o.require(counts[k] >= 100 && valid[k] >= 10, "too few data of one kind");
  if (o.pass)
    o.detail = "valid crossed/bicrossed/double " + std::to_string(valid[0]) + "/" + std::to_string(valid[1]) + "/" +
               std::to_string(valid[2]) + " of " + std::to_string(counts[0]) + " each";
  return o;
}

// 8 -------------------------------------------------------------------------------

Outcome exact_arithmetic() {
  Outcome o;
  Rng rng(1008);
  auto big = [&] {
    auto part = [&] {
      return Rational(static_cast<long>(rng() % 2000001) - 1000000, static_cast<long>(rng() % 1000000) + 1);
    };
    return Scalar(part(), part());
  };
  for (int t = 0; t < 1000; ++t) {
    const Scalar a = big(), b = big(), c = big();
    o.require((a + b) + c == a + (b + c) && (a * b) * c == a * (b * c), "associativity");
    o.require(a + b == b + a && a * b == b * a, "commutativity");
    o.require(a * (b + c) == a * b + a * c, "distributivity");
    o.require((a - a).is_zero() && a * Scalar(1) == a && a + Scalar() == a, "identities");
    if (!a.is_zero()) o.require((a * a.inverse()).is_one() && (b / a) * a == b, "inverses");
    o.require(Scalar::parse(a.str()) == a, "canonical text round trip");
  }

  std::size_t consistent = 0;
  for (int t = 0; t < 1000 && o.pass; ++t) {
    const std::size_t rows = 1 + testgen::below(rng, 12), cols = 1 + testgen::below(rng, 12);
    const Matrix m = testgen::random_matrix(rows, cols, rng, static_cast<unsigned>(testgen::below(rng, 80)));
    std::vector<Scalar> rhs(rows);
    if (testgen::percent(rng, 50)) {
      std::vector<Scalar> x(cols);
      for (auto& v : x) v = testgen::gaussian_rational(rng);
      rhs = m.apply(x);
    } else {
      for (auto& v : rhs) v = testgen::gaussian_rational(rng);
    }
    const std::size_t rk = oracle_rank(rows_of(m));
    auto aug = rows_of(m);
    for (std::size_t r = 0; r < rows; ++r) aug[r].push_back(rhs[r]);
    const bool solvable = oracle_rank(aug) == rk;

    const SolutionSpace s = solve_affine(m, rhs);
    o.require(s.consistent() == solvable, "consistency verdict");
    if (solvable) o.require(s.dimension() == cols - rk, "solution dimension");
    o.require(s.basis.empty() || oracle_rank(s.basis) == s.basis.size(), "dependent basis");
    for (const auto& v : s.basis) o.require(is_zero_vector(m.apply(v)), "basis vector not in the kernel");
    if (s.consistent()) {
      ++consistent;
      o.require(m.apply(*s.particular) == rhs, "particular solution fails substitution");
    }
    const SolutionSpace k = nullspace(m);
    o.require(k.dimension() == cols - rk, "nullspace dimension");
    for (const auto& v : k.basis) o.require(is_zero_vector(m.apply(v)), "nullspace vector fails substitution");
    o.require(rank(m) == rk, "rank");
  }
  if (o.pass) o.detail = "1000 field triples, 1000 systems (" + std::to_string(consistent) + " consistent)";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"heisenberg-golden-classification", golden_classification},
      {"master-condition-equivalence", master_equivalence},
      {"extraction-round-trip", extraction_round_trip},
      {"equivalence-relation-laws", equivalence_laws},
      {"sl2-fast-path", sl2_fast_path},
      {"flag-bijection", flag_bijection},
      {"special-kinds", special_kinds},
      {"exact-arithmetic", exact_arithmetic},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << k + 1 << " " << criteria[k].first << " (" << o.detail << ")\n";
  }
  return failed == 0 ? 0 : 1;
}
