#include <doctest.h>

#include "generators.hpp"

using namespace lbext;
using testgen::Rng;

namespace {

LieBialgebra random_v(Rng& rng) {
  switch (testgen::below(rng, 3)) {
    case 0: return abelian(1);
    case 1: return abelian(2);
    default: return testgen::two_dim_nonabelian();
  }
}

template <class Map>
void maybe_fill(Map& m, Rng& rng) {
  if (testgen::percent(rng, 60)) testgen::fill(m, rng, 5 + static_cast<unsigned>(testgen::below(rng, 15)));
}

}  // namespace

TEST_SUITE("special") {
  TEST_CASE("direct sums") {
    const LieBialgebra h = heisenberg(), v = abelian(1);
    const LieBialgebra sum = unified_biproduct(BiExtendingDatum::zero(h, v.space()));
    CHECK(crossed_biproduct(CrossedBiDatum::zero(h, v)) == sum);
    CHECK(bicrossed_sum(BicrossedSumDatum::zero(h, v)) == sum);
    CHECK(double_cross_sum(DoubleCrossSumDatum::zero(h, v)) == sum);
  }

  TEST_CASE("crossed bi-product of the rotation datum with B = y^h") {
    FlagDatum fd = corpus_flag("heisenberg-flag-rotation");
    fd.B = wedge(basis_vector(3, 1), basis_vector(3, 2));
    const BiExtendingDatum general = flag_to_bidatum(fd);
    const CrossedBiDatum c = CrossedBiDatum::from_general(general);
    CHECK(check_crossed(c).valid());
    CHECK(crossed_biproduct(c) == unified_biproduct(general));
  }

  TEST_CASE("smuggled components are rejected") {
    FlagDatum fd = FlagDatum::zero(heisenberg());
    fd.alpha[0] = 1;
    CHECK_THROWS_AS(CrossedBiDatum::from_general(flag_to_bidatum(fd)), InvariantViolation);
    BiExtendingDatum d = BiExtendingDatum::zero(heisenberg(), BasisSpace({"v1", "v2"}));
    d.f(0, 1, 2) = 1;
    CHECK_THROWS_AS(DoubleCrossSumDatum::from_general(d), InvariantViolation);
    CHECK_THROWS_AS(BicrossedSumDatum::from_general(d), InvariantViolation);
  }

  TEST_CASE("bicrossed sum with an inner derivation") {
    const LieBialgebra h = heisenberg();
    for (std::size_t u = 0; u < 3; ++u) {
      BicrossedSumDatum d = BicrossedSumDatum::zero(h, abelian(1));
      const LinearMap D = h.ad(u);
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t k = 0; k < 3; ++k) d.ract(0, a, k) = D(k, a);
      bool coderivation = true;
      for (std::size_t a = 0; a < 3; ++a) {
        const Tensor2 da = h.cobracket().on_basis(a);
        const Tensor2 r = h.cobracket(D.image(a)) - on_legs(D, LinearMap::identity(3), da) -
                          on_legs(LinearMap::identity(3), D, da);
        coderivation = coderivation && r.is_zero();
      }
      CHECK(check_bicrossed(d).valid() == coderivation);
      CHECK(check_bicrossed(d).valid() == check_bi_extending(d.general()).valid());
    }
  }

  TEST_CASE("bicrossed module violation is reported") {
    BicrossedSumDatum d = BicrossedSumDatum::zero(abelian(1), testgen::two_dim_nonabelian());
    // {x,y} = y acts by 1 while x acts trivially
    d.ract(1, 0, 0) = 1;
    CHECK(check_bicrossed(d).has("bicrossed.module"));
    CHECK_FALSE(check_bi_extending(d.general()).valid());
  }

  TEST_CASE("double cross sum with a character") {
    DoubleCrossSumDatum d = DoubleCrossSumDatum::zero(heisenberg(), abelian(1));
    d.lact(0, 0, 0) = 1;  // v ◁ x = v
    CHECK(check_double_cross(d).valid() == check_bi_extending(d.general()).valid());
  }

  TEST_CASE("reduced lists agree with the general machinery") {
    Rng rng(41);
    const auto bases = testgen::small_bases();
    int valid[3] = {0, 0, 0};
    for (int t = 0; t < 150; ++t) {
      const LieBialgebra& g = bases[testgen::below(rng, bases.size())];
      const LieBialgebra V = random_v(rng);

      CrossedBiDatum c = CrossedBiDatum::zero(g, V);
      maybe_fill(c.ract, rng);
      maybe_fill(c.f, rng);
      maybe_fill(c.DeltaE, rng);
      maybe_fill(c.DeltaV, rng);
      const bool cv = check_crossed(c).valid();
      CHECK(cv == check_bi_extending(c.general()).valid());
      if (cv) {
        ++valid[0];
        const LieBialgebra E = crossed_biproduct(c);
        CHECK(E == unified_biproduct(c.general()));
        const std::size_t n = g.dim();
        for (std::size_t z = 0; z < E.dim(); ++z)
          for (std::size_t a = 0; a < n; ++a)
            for (std::size_t k = n; k < E.dim(); ++k) CHECK(E.bracket()(z, a, k).is_zero());
      }

      BicrossedSumDatum b = BicrossedSumDatum::zero(g, V);
      maybe_fill(b.ract, rng);
      maybe_fill(b.DeltaE, rng);
      const bool bv = check_bicrossed(b).valid();
      CHECK(bv == check_bi_extending(b.general()).valid());
      if (bv) {
        ++valid[1];
        CHECK(bicrossed_sum(b) == unified_biproduct(b.general()));
      }

      DoubleCrossSumDatum m = DoubleCrossSumDatum::zero(g, V);
      maybe_fill(m.lact, rng);
      maybe_fill(m.ract, rng);
      const bool mv = check_double_cross(m).valid();
      CHECK(mv == check_bi_extending(m.general()).valid());
      if (mv) {
        ++valid[2];
        const LieBialgebra E = double_cross_sum(m);
        CHECK(E == unified_biproduct(m.general()));
        std::vector<std::size_t> v_idx;
        for (std::size_t k = g.dim(); k < E.dim(); ++k) v_idx.push_back(k);
        CHECK_NOTHROW(extract_datum(E, v_idx));
      }
    }
    CHECK(valid[0] > 15);
    CHECK(valid[1] > 15);
    CHECK(valid[2] > 15);
  }
}
