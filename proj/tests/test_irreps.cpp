#include <catch2/catch_amalgamated.hpp>

#include "wigner/catalog.hpp"
#include "wigner/irreps.hpp"

using namespace wigner;

TEST_CASE("trivial group has a single trivial irrep") {
  GroupTable G = build_group(GroupSpec::Cyclic(1));
  CharacterTable T = character_table(G);
  REQUIRE(T.num_irreps() == 1);
  REQUIRE(T.dims == std::vector<int>{1});
  REQUIRE(std::abs(T.chars[0][0] - cplx(1.0, 0.0)) < 1e-14);
  IrrepSet S = compute_irreps(G);
  REQUIRE(S.num_irreps() == 1);
  REQUIRE(S.D(0, 0)(0, 0) == cplx(1.0, 0.0));
}

TEST_CASE("C3 characters are cube roots of unity") {
  GroupTable G = build_group(GroupSpec::Cyclic(3));
  CharacterTable T = character_table(G);
  REQUIRE(T.num_irreps() == 3);
  // row 0 trivial
  for (int c = 0; c < 3; ++c)
    REQUIRE(std::abs(T.chars[0][c] - cplx(1.0, 0.0)) < 1e-12);
  // every row is chi(g^n) = exp(2 pi i j n / 3) for some exponent j
  for (int row = 0; row < 3; ++row) {
    cplx z = T.chars[row][T.class_of[1]];
    int j = static_cast<int>(
        std::lround(std::arg(z) * 3 / (2 * std::numbers::pi) + 3)) % 3;
    for (int n = 0; n < 3; ++n) {
      cplx want = std::polar(1.0, 2 * std::numbers::pi * j * n / 3);
      REQUIRE(std::abs(T.chars[row][T.class_of[n]] - want) < 1e-12);
    }
  }
}

TEST_CASE("character row orthogonality") {
  for (const auto& entry : catalog()) {
    GroupTable G = build_group(entry.spec);
    CharacterTable T = character_table(G);
    const int N = G.order();
    for (int a = 0; a < T.num_irreps(); ++a)
      for (int b = 0; b < T.num_irreps(); ++b) {
        cplx s = 0.0;
        for (int c = 0; c < T.num_classes(); ++c)
          s += static_cast<double>(T.classes[c].size()) * T.chars[a][c] *
               std::conj(T.chars[b][c]);
        cplx want = a == b ? cplx(N, 0.0) : cplx(0.0, 0.0);
        INFO(entry.name);
        REQUIRE(std::abs(s - want) < 1e-9);
      }
  }
}

TEST_CASE("irrep dimensions") {
  auto dims_of = [](const GroupSpec& spec) {
    CharacterTable T = character_table(build_group(spec));
    std::vector<int> d = T.dims;
    std::sort(d.begin(), d.end());
    return d;
  };
  REQUIRE(dims_of(detail::f21_spec()) == std::vector<int>{1, 1, 1, 3, 3});
  REQUIRE(dims_of(detail::heisenberg27_spec()) ==
          std::vector<int>{1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3});
  REQUIRE(dims_of(GroupSpec::Cyclic(9)) ==
          std::vector<int>(9, 1));
}

TEST_CASE("number of irreps equals number of classes") {
  for (const auto& entry : catalog()) {
    GroupTable G = build_group(entry.spec);
    CharacterTable T = character_table(G);
    REQUIRE(T.num_irreps() == T.num_classes());
    long long sq = 0;
    for (int d : T.dims) sq += 1LL * d * d;
    REQUIRE(sq == G.order());
  }
}

TEST_CASE("C5 irreps are the expected roots of unity") {
  GroupTable G = build_group(GroupSpec::Cyclic(5));
  IrrepSet S = compute_irreps(G);
  REQUIRE(S.num_irreps() == 5);
  std::vector<int> seen;
  for (int j = 0; j < 5; ++j) {
    REQUIRE(S.dim(j) == 1);
    cplx z = S.D(j, 1)(0, 0);
    int e = static_cast<int>(
        std::lround(std::arg(z) * 5 / (2 * std::numbers::pi) + 5)) % 5;
    seen.push_back(e);
    for (int n = 0; n < 5; ++n) {
      cplx want = std::polar(1.0, 2 * std::numbers::pi * e * n / 5);
      REQUIRE(std::abs(S.D(j, n)(0, 0) - want) < 1e-14);
    }
  }
  std::sort(seen.begin(), seen.end());
  REQUIRE(seen == std::vector<int>{0, 1, 2, 3, 4});
  REQUIRE(seen[0] == 0);  // j = 0 carries the trivial rep
  REQUIRE(std::abs(S.D(0, 3)(0, 0) - cplx(1.0, 0.0)) < 1e-14);
}

TEST_CASE("irrep identity suite on the catalog") {
  for (const auto& entry : catalog()) {
    GroupTable G = build_group(entry.spec);
    IrrepSet S = compute_irreps(G);
    IrrepResiduals r = verify_irreps(S);
    INFO(entry.name);
    REQUIRE(r.dims_square_sum);
    REQUIRE(r.max() < (entry.abelian ? 1e-12 : 1e-9));
    if (entry.abelian)
      for (int j = 0; j < S.num_irreps(); ++j) REQUIRE(S.dim(j) == 1);
  }
}

TEST_CASE("irreps are deterministic across runs") {
  GroupTable G = build_group(detail::f21_spec());
  IrrepSet a = compute_irreps(G);
  IrrepSet b = compute_irreps(G);
  REQUIRE(a.num_irreps() == b.num_irreps());
  for (int j = 0; j < a.num_irreps(); ++j)
    for (int g = 0; g < G.order(); ++g)
      REQUIRE((a.D(j, g) - b.D(j, g)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("momentum basis of C3") {
  IrrepSet S = compute_irreps(build_group(GroupSpec::Cyclic(3)));
  MomentumBasis B = momentum_basis(S);
  REQUIRE(B.labels.size() == 3);
  double w = 1.0 / std::sqrt(3.0);
  for (int col = 0; col < 3; ++col) {
    cplx z = S.D(col, 1)(0, 0);
    for (int g = 0; g < 3; ++g) {
      cplx want = w * std::pow(z, g);
      REQUIRE(std::abs(B.vectors(g, col) - want) < 1e-14);
    }
  }
}

TEST_CASE("momentum basis is orthonormal and complete") {
  for (const auto& entry : catalog()) {
    IrrepSet S = compute_irreps(build_group(entry.spec));
    MomentumBasis B = momentum_basis(S);
    const int N = S.order();
    REQUIRE(static_cast<int>(B.labels.size()) == N);
    Matrix gram = B.vectors.adjoint() * B.vectors;
    INFO(entry.name);
    REQUIRE((gram - Matrix::Identity(N, N)).cwiseAbs().maxCoeff() <
            (entry.abelian ? 1e-12 : 1e-9));
  }
}

TEST_CASE("regular actions") {
  GroupTable G = build_group(GroupSpec::Cyclic(3));
  RegularActions A = regular_actions(G);
  REQUIRE((A.L[0] - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() == 0.0);
  REQUIRE((A.R[0] - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() == 0.0);
  // L_g is the cyclic shift |n> -> |n+1>
  for (int n = 0; n < 3; ++n) REQUIRE(A.L[1]((n + 1) % 3, n) == cplx(1.0, 0));

  GroupTable F = build_group(detail::f21_spec());
  RegularActions AF = regular_actions(F);
  for (int a = 0; a < 21; ++a)
    for (int b = 0; b < 21; ++b) {
      REQUIRE((AF.L[a] * AF.L[b] - AF.L[F.mul(a, b)]).cwiseAbs().maxCoeff() ==
              0.0);
      REQUIRE((AF.R[a] * AF.R[b] - AF.R[F.mul(a, b)]).cwiseAbs().maxCoeff() ==
              0.0);
      REQUIRE((AF.L[a] * AF.R[b] - AF.R[b] * AF.L[a]).cwiseAbs().maxCoeff() ==
              0.0);
    }
}

TEST_CASE("reduced actions of L and R") {
  {
    IrrepSet S = compute_irreps(build_group(GroupSpec::Cyclic(5)));
    REQUIRE(verify_reduced_actions(S, momentum_basis(S)) < 1e-12);
  }
  {
    IrrepSet S = compute_irreps(build_group(detail::f21_spec()));
    REQUIRE(verify_reduced_actions(S, momentum_basis(S)) < 1e-9);
  }
}
