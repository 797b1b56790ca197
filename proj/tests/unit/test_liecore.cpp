#include <doctest.h>

#include "generators.hpp"

using namespace lbext;
using testgen::Rng;

namespace {

Vector e(std::size_t n, std::size_t k) { return basis_vector(n, k); }

// Jacobi residuals by explicit index loops over the coefficient array.
bool brute_force_jacobi(const Tensor3& c, std::size_t n) {
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t d = 0; d < n; ++d)
        for (std::size_t out = 0; out < n; ++out) {
          Scalar r;
          for (std::size_t m = 0; m < n; ++m) {
            r += c(b, d, m) * c(a, m, out);  // [a,[b,d]]
            r -= c(a, b, m) * c(m, d, out);  // [[a,b],d]
            r -= c(a, d, m) * c(b, m, out);  // [b,[a,d]]
          }
          if (!r.is_zero()) return false;
        }
  return true;
}

}  // namespace

TEST_SUITE("liecore") {
  TEST_CASE("basis spaces") {
    CHECK_THROWS_AS(BasisSpace({"x", "x"}), ParseError);
    CHECK_THROWS_AS(BasisSpace({""}), ParseError);
    CHECK(BasisSpace::numbered("v", 2).names() == std::vector<std::string>{"v1", "v2"});
    CHECK(*BasisSpace({"x", "y"}).index_of("y") == 1);
    CHECK_FALSE(BasisSpace({"x"}).index_of("z"));
  }

  TEST_CASE("twists") {
    const std::size_t n = 3;
    CHECK(twist(outer(e(n, 0), e(n, 1))) == outer(e(n, 1), e(n, 0)));
    CHECK(twist(outer(e(n, 0), e(n, 0))) == outer(e(n, 0), e(n, 0)));
    CHECK(twist12(outer(e(n, 0), outer(e(n, 1), e(n, 2)))) == outer(e(n, 1), outer(e(n, 0), e(n, 2))));
    Rng rng(21);
    for (int t = 0; t < 50; ++t) {
      Tensor2 a({n, n});
      Tensor3 b({n, n, n});
      for (auto& v : a.values()) v = testgen::small_scalar(rng);
      for (auto& v : b.values()) v = testgen::small_scalar(rng);
      CHECK(twist(twist(a)) == a);
      CHECK(twist12(twist12(b)) == b);
    }
  }

  TEST_CASE("is_wedge") {
    CHECK(is_wedge(wedge(e(3, 0), e(3, 1))));
    CHECK_FALSE(is_wedge(outer(e(3, 0), e(3, 0))));
    CHECK(is_wedge(Tensor2({3, 3})));
  }

  TEST_CASE("adjoint action on tensors") {
    const LieAlgebra h = heisenberg().algebra();
    // x.(x∧y) = x⊗[x,y] - [x,y]⊗x = x⊗h - h⊗x
    CHECK(adjoint_act_tensor(h, e(3, 0), wedge(e(3, 0), e(3, 1))) == wedge(e(3, 0), e(3, 2)));
    CHECK(adjoint_act_tensor(h, e(3, 1), Tensor2({3, 3})).is_zero());
    Rng rng(22);
    const LieAlgebra ab = abelian(3).algebra();
    for (int t = 0; t < 100; ++t) {
      const Vector a = testgen::random_vector(3, rng), b = testgen::random_vector(3, rng);
      Tensor2 s({3, 3}), u({3, 3});
      for (auto& v : s.values()) v = testgen::small_scalar(rng);
      for (auto& v : u.values()) v = testgen::small_scalar(rng);
      const Scalar c = testgen::small_scalar(rng, 100);
      CHECK(adjoint_act_tensor(ab, a, s).is_zero());
      CHECK(adjoint_act_tensor(h, a + b * c, s) == adjoint_act_tensor(h, a, s) + adjoint_act_tensor(h, b, s) * c);
      CHECK(adjoint_act_tensor(h, a, s + u * c) == adjoint_act_tensor(h, a, s) + adjoint_act_tensor(h, a, u) * c);
    }
  }

  TEST_CASE("algebra checker examples") {
    CHECK(check_lie_algebra(heisenberg().algebra()).valid());
    CHECK(check_lie_algebra(abelian(3).algebra()).valid());
    BilinearMap br(3, 3, 3);
    br(0, 1, 2) = 1;
    br(1, 0, 2) = 1;
    const VerdictReport rep = check_lie_algebra(LieAlgebra(BasisSpace({"x", "y", "h"}), br));
    REQUIRE(rep.has("antisymmetry"));
    CHECK(rep.violations().front().indices == std::vector<std::size_t>{0, 1});
  }

  TEST_CASE("Jacobi checker agrees with a brute-force oracle") {
    Rng rng(23);
    int valid = 0, invalid = 0;
    for (int t = 0; t < 300; ++t) {
      const std::size_t n = 2 + testgen::below(rng, 2);
      BilinearMap table(n, n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k) table(i, j, k) = testgen::small_scalar(rng, 25);
      const LieAlgebra g = LieAlgebra::from_upper_triangle(BasisSpace::numbered("e", n), table);
      const bool oracle = brute_force_jacobi(g.bracket().coeffs(), n);
      CHECK(check_lie_algebra(g).valid() == oracle);
      (oracle ? valid : invalid)++;
    }
    CHECK(valid > 20);
    CHECK(invalid > 20);
  }

  TEST_CASE("coalgebra checker examples") {
    CHECK(check_lie_coalgebra(heisenberg().coalgebra()).valid());
    CHECK(check_lie_coalgebra(LieCoalgebra(BasisSpace::numbered("e", 2), CobracketMap(2, 2, 2))).valid());
    CobracketMap co(3, 3, 3);
    co(0, 0, 0) = 1;
    CHECK(check_lie_coalgebra(LieCoalgebra(BasisSpace({"x", "y", "h"}), co)).has("co-antisymmetry"));
  }

  TEST_CASE("bialgebra checker examples") {
    for (const auto& g : {heisenberg(), sl2_trivial(), abelian(2), testgen::two_dim_nonabelian()})
      CHECK(check_lie_bialgebra(g).valid());
    const LieBialgebra h = heisenberg();
    CobracketMap co(3, 3, 3);
    co(2, 0, 1) = 1;
    co(2, 1, 0) = -1;
    const VerdictReport rep = check_lie_bialgebra(LieBialgebra(h.space(), h.bracket(), co));
    REQUIRE(rep.has("cocycle"));
    bool at_xy = false;
    for (const auto& v : rep.violations())
      if (v.condition == "cocycle" && v.indices == std::vector<std::size_t>{0, 1}) at_xy = true;
    CHECK(at_xy);
  }

  TEST_CASE("corpus cocycle residuals vanish") {
    for (const auto& e : corpus_entries()) {
      if (e.kind != "bialgebra") continue;
      const LieBialgebra g = corpus_bialgebra(e.name);
      const LieAlgebra alg = g.algebra();
      const std::size_t n = g.dim();
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          const Tensor2 r = adjoint_act_tensor(alg, basis_vector(n, a), g.cobracket().on_basis(b)) -
                            adjoint_act_tensor(alg, basis_vector(n, b), g.cobracket().on_basis(a)) -
                            g.cobracket(alg.bracket(a, b));
          CHECK(r.is_zero());
        }
    }
  }

  TEST_CASE("linear maps and leg operators") {
    const LinearMap f = LinearMap::from_images(2, {make_vector({1, 2}), make_vector({0, 1})});
    CHECK(f(1, 0) == Scalar(2));
    CHECK(f.apply(make_vector({1, 1})) == make_vector({1, 3}));
    CHECK(f.after(LinearMap::identity(2)) == f);
    CHECK(on_legs(f, LinearMap::identity(2), outer(basis_vector(2, 0), basis_vector(2, 1))) ==
          outer(make_vector({1, 2}), basis_vector(2, 1)));
  }

  TEST_CASE("permute_basis") {
    const LieBialgebra h = heisenberg();
    const std::vector<std::size_t> order{2, 0, 1};
    const LieBialgebra p = permute_basis(h, order);
    CHECK(p.space().names() == std::vector<std::string>{"h", "x", "y"});
    CHECK(p.bracket()(1, 2, 0) == Scalar(1));
    CHECK(check_lie_bialgebra(p).valid());
  }
}
