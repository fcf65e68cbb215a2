#include <catch2/catch_amalgamated.hpp>

#include "wigner/catalog.hpp"
#include "wigner/wigner.hpp"

using namespace wigner;

namespace {

// independent oracle: literal transcription of the defining dyad sum
Matrix ppo_brute(const IrrepSet& S, int g, int j, int m, int mp) {
  const GroupTable& G = S.group;
  const int N = G.order();
  Matrix out = Matrix::Zero(N, N);
  for (int gp = 0; gp < N; ++gp) {
    Vector ket = Vector::Zero(N), bra = Vector::Zero(N);
    ket(G.mul(gp, g)) = 1.0;
    bra(G.mul(G.inv(gp), g)) = 1.0;
    out += ket * S.D(j, G.mul(gp, gp))(m, mp) * bra.transpose();
  }
  return out;
}

}  // namespace

TEST_CASE("phase point operator matches the brute-force dyad sum") {
  for (int n : {3, 5}) {
    IrrepSet S = compute_irreps(build_group(GroupSpec::Cyclic(n)));
    for (int g = 0; g < n; ++g)
      for (int j = 0; j < n; ++j)
        REQUIRE((phase_point_operator(S, g, j, 0, 0) - ppo_brute(S, g, j, 0, 0))
                    .cwiseAbs()
                    .maxCoeff() < 1e-12);
  }
}

TEST_CASE("expectation value reproduces the Wigner distribution") {
  IrrepSet S = compute_irreps(build_group(detail::f21_spec()));
  StateVector psi = random_state(21, 53);
  WignerTensor W = wigner_I(psi, S);
  for (int g = 0; g < 21; ++g)
    for (int j = 0; j < S.num_irreps(); ++j)
      for (int m = 0; m < S.dim(j); ++m)
        for (int mp = 0; mp < S.dim(j); ++mp) {
          Matrix op = phase_point_operator(S, g, j, m, mp);
          REQUIRE(std::abs((psi.adjoint() * op * psi)(0, 0) -
                           W.at(g, j)(m, mp)) < 1e-9);
        }
}

TEST_CASE("adjoint and trace rules") {
  IrrepSet S = compute_irreps(build_group(detail::heisenberg27_spec()));
  for (int g : {0, 5, 13})
    for (int j = 0; j < S.num_irreps(); ++j)
      for (int m = 0; m < S.dim(j); ++m)
        for (int mp = 0; mp < S.dim(j); ++mp) {
          Matrix op = phase_point_operator(S, g, j, m, mp);
          Matrix swapped = phase_point_operator(S, g, j, mp, m);
          REQUIRE((op.adjoint() - swapped).cwiseAbs().maxCoeff() < 1e-9);
          cplx want = m == mp ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
          REQUIRE(std::abs(op.trace() - want) < 1e-9);
        }
}

TEST_CASE("sum rules") {
  {
    IrrepSet S = compute_irreps(build_group(GroupSpec::Cyclic(9)));
    REQUIRE(phase_point_sums(S, momentum_basis(S)).max() < 1e-12);
  }
  {
    IrrepSet S = compute_irreps(build_group(detail::f21_spec()));
    REQUIRE(phase_point_sums(S, momentum_basis(S)).max() < 1e-9);
  }
}

TEST_CASE("Hilbert-Schmidt orthogonality on C7, all index pairs") {
  IrrepSet S = compute_irreps(build_group(GroupSpec::Cyclic(7)));
  const GroupTable& G = S.group;
  std::vector<Matrix> ops;
  for (int g = 0; g < 7; ++g)
    for (int j = 0; j < 7; ++j)
      ops.push_back(phase_point_operator(S, g, j, 0, 0));
  for (int a = 0; a < 49; ++a)
    for (int b = 0; b < 49; ++b) {
      cplx tr = (ops[a] * ops[b].adjoint()).trace();
      cplx want = a == b ? cplx(7.0, 0.0) : cplx(0.0, 0.0);
      REQUIRE(std::abs(tr - want) < 1e-12);
    }
  (void)G;
}

TEST_CASE("inversion operator at the origin") {
  IrrepSet S = compute_irreps(build_group(detail::f21_spec()));
  const GroupTable& G = S.group;
  Matrix op = phase_point_operator(S, 0, 0, 0, 0);
  for (int g = 0; g < 21; ++g) {
    Vector got = op * position_eigenstate(21, g);
    REQUIRE((got - position_eigenstate(21, G.inv(g))).cwiseAbs().maxCoeff() ==
            0.0);
  }
  REQUIRE((op * op - Matrix::Identity(21, 21)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("dyad reconstruction") {
  SECTION("g' = e recovers the projector |g><g|") {
    IrrepSet S = compute_irreps(build_group(GroupSpec::Cyclic(5)));
    for (int g = 0; g < 5; ++g) {
      Matrix got = reconstruct_dyad(S, g, 0);
      Matrix want = Matrix::Zero(5, 5);
      want(g, g) = 1.0;
      REQUIRE((got - want).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
  SECTION("all dyads on C3") {
    IrrepSet S = compute_irreps(build_group(GroupSpec::Cyclic(3)));
    const GroupTable& G = S.group;
    for (int g = 0; g < 3; ++g)
      for (int gp = 0; gp < 3; ++gp) {
        Matrix got = reconstruct_dyad(S, g, gp);
        Matrix want = Matrix::Zero(3, 3);
        want(G.mul(gp, g), G.mul(G.inv(gp), g)) = 1.0;
        REQUIRE((got - want).cwiseAbs().maxCoeff() < 1e-12);
      }
  }
  SECTION("random operator round-trips through the phase point basis on C7") {
    IrrepSet S = compute_irreps(build_group(GroupSpec::Cyclic(7)));
    std::mt19937_64 rng(61);
    std::normal_distribution<double> nd(0.0, 1.0);
    Matrix A(7, 7);
    for (int r = 0; r < 7; ++r)
      for (int c = 0; c < 7; ++c) A(r, c) = cplx(nd(rng), nd(rng));
    Matrix back = Matrix::Zero(7, 7);
    for (int g = 0; g < 7; ++g)
      for (int j = 0; j < 7; ++j) {
        Matrix op = phase_point_operator(S, g, j, 0, 0);
        cplx coeff = (A * op.adjoint()).trace() / 7.0;  // N/N_j = 7
        back += coeff * op;
      }
    REQUIRE((A - back).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("phase point layer rejects even orders") {
  IrrepSet S = compute_irreps(build_group(GroupSpec::Cyclic(4)));
  REQUIRE_THROWS_AS(phase_point_operator(S, 0, 0, 0, 0), EvenOrderGroup);
  REQUIRE_THROWS_AS(reconstruct_dyad(S, 0, 0), EvenOrderGroup);
  REQUIRE_THROWS_AS(phase_point_sums(S, momentum_basis(S)), EvenOrderGroup);
}
