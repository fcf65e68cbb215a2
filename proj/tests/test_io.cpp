#include <catch2/catch_amalgamated.hpp>

#include "wigner/catalog.hpp"
#include "wigner/json_io.hpp"

using namespace wigner;

TEST_CASE("group JSON round trip") {
  for (const auto& entry : catalog()) {
    GroupTable G = build_group(entry.spec);
    GroupTable back = group_from_json(group_to_json(G));
    INFO(entry.name);
    REQUIRE(back.order() == G.order());
    REQUIRE(back.mul_table() == G.mul_table());
    REQUIRE(back.names() == G.names());
  }
}

TEST_CASE("group loader validates") {
  json j = group_to_json(build_group(GroupSpec::Cyclic(3)));
  SECTION("tampered table") {
    j["mul"][1][1] = 1;  // breaks the Latin square
    REQUIRE_THROWS_AS(group_from_json(j), NotAGroup);
  }
  SECTION("order mismatch") {
    j["order"] = 4;
    REQUIRE_THROWS_AS(group_from_json(j), IoError);
  }
  SECTION("missing fields") {
    REQUIRE_THROWS_AS(group_from_json(json::object()), IoError);
  }
}

TEST_CASE("state JSON round trip") {
  StateVector psi = random_state(9, 101);
  StateVector back = state_from_json(state_to_json(psi));
  REQUIRE((psi - back).cwiseAbs().maxCoeff() == 0.0);
  // reload through text, as the CLI does
  json parsed = json::parse(state_to_json(psi).dump());
  REQUIRE((psi - state_from_json(parsed)).cwiseAbs().maxCoeff() < 1e-16);
}

TEST_CASE("irreps JSON round trip preserves the identity suite") {
  IrrepSet S = compute_irreps(build_group(detail::f21_spec()));
  IrrepSet back = irreps_from_json(json::parse(irreps_to_json(S).dump()));
  REQUIRE(back.num_irreps() == S.num_irreps());
  for (int j = 0; j < S.num_irreps(); ++j) {
    REQUIRE(back.dim(j) == S.dim(j));
    for (int g = 0; g < S.order(); ++g)
      REQUIRE((back.D(j, g) - S.D(j, g)).cwiseAbs().maxCoeff() < 1e-15);
  }
  REQUIRE(verify_irreps(back).max() < 1e-9);
}

TEST_CASE("Wigner tensor JSON round trip") {
  IrrepSet S = compute_irreps(build_group(detail::f21_spec()));
  StateVector psi = random_state(21, 103);
  WignerTensor W = wigner_II(psi, S);
  WignerTensor back = wigner_from_json(json::parse(wigner_to_json(W).dump()));
  REQUIRE(back.variant == Variant::II);
  REQUIRE(back.order == W.order);
  REQUIRE(W.diff_max(back) < 1e-15);
}

TEST_CASE("CSV export of diagonal entries") {
  GroupTable G = build_group(GroupSpec::Cyclic(3));
  IrrepSet S = compute_irreps(G);
  StateVector psi = position_eigenstate(3, 0);
  std::string csv = wigner_diagonal_csv(wigner_I(psi, S), G);
  REQUIRE(csv.rfind("g,element,j,m,value\n", 0) == 0);
  REQUIRE(std::count(csv.begin(), csv.end(), '\n') == 1 + 3 * 3);
  // W(e; j) = 1 for every j on the identity eigenstate
  REQUIRE(csv.find("0,e,0,0,1\n") != std::string::npos);
}

TEST_CASE("file loader error paths") {
  REQUIRE_THROWS_AS(load_json_file("/nonexistent/path.json"), IoError);
}
