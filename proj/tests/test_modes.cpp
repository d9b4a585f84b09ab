#include <catch2/catch_amalgamated.hpp>

#include "jpsq/builtins.hpp"
#include "jpsq/modes.hpp"

using namespace jpsq;

namespace {

int count_kind(const ModeDecomposition& d, Mode::Kind k) {
  int c = 0;
  for (const auto& m : d.modes) c += m.kind == k;
  return c;
}

}  // namespace

TEST_CASE("single junction to ground is a periodic mode", "[modes]") {
  CircuitSpec s;
  s.ground = "g";
  s.nodes = {"n"};
  s.branches = {{"J", BranchKind::Junction, "g", "n", 50.0, 2.0}};
  const auto d = decompose_modes(s);
  REQUIRE(d.modes.size() == 1);
  CHECK(d.modes[0].kind == Mode::Kind::Periodic);
  CHECK(d.floating_components.size() == 1);
  CHECK(d.T(0, 0) == 1.0);
}

TEST_CASE("grounded LC column is an oscillator mode", "[modes]") {
  CircuitSpec s;
  s.ground = "g";
  s.nodes = {"n"};
  s.branches = {{"L", BranchKind::Inductor, "n", "g", 100.0, 0.0},
                {"C", BranchKind::Capacitor, "n", "g", 50.0, 0.0}};
  const auto d = decompose_modes(s);
  REQUIRE(d.modes.size() == 1);
  CHECK(d.modes[0].kind == Mode::Kind::Oscillator);
  CHECK(d.floating_components.empty());
}

TEST_CASE("fig1 flux qubit has two periodic modes", "[modes]") {
  const auto d = decompose_modes(builtins::fig1_flux_qubit());
  CHECK(count_kind(d, Mode::Kind::Periodic) == 2);
  CHECK(count_kind(d, Mode::Kind::Oscillator) == 0);
}

TEST_CASE("fig2 qubit splits into two periodic and three oscillators", "[modes]") {
  const auto d = decompose_modes(builtins::fig2_xx_qubit());
  CHECK(count_kind(d, Mode::Kind::Periodic) == 2);
  CHECK(count_kind(d, Mode::Kind::Oscillator) == 3);
}

TEST_CASE("fig3b JPSQ is all-periodic", "[modes]") {
  const auto d = decompose_modes(builtins::fig3b_jpsq());
  CHECK(count_kind(d, Mode::Kind::Periodic) == 3);
}

TEST_CASE("fig6 JPSQ has one periodic island mode and six oscillators", "[modes]") {
  const auto s = builtins::fig6_jpsq();
  const auto d = decompose_modes(s);
  CHECK(count_kind(d, Mode::Kind::Periodic) == 1);
  CHECK(count_kind(d, Mode::Kind::Oscillator) == 6);

  // the floating component is the island plus the four SQUID arm nodes,
  // rooted at the declared island node
  REQUIRE(d.floating_components.size() == 1);
  CHECK(d.floating_components[0].size() == 5);
  REQUIRE(d.component_islands[0].size() == 1);
  CHECK(d.component_islands[0][0] == "isl");
  const int isl = s.node_index("isl");
  CHECK(d.modes[isl].kind == Mode::Kind::Periodic);

  // arm nodes are measured relative to the island root
  const int a1 = s.node_index("a1");
  CHECK(d.modes[a1].kind == Mode::Kind::Oscillator);
  CHECK(d.T(a1, a1) == 1.0);
  CHECK(d.T(a1, isl) == -1.0);

  // the two loop-inductor nodes sit in the ground component
  const int n1 = s.node_index("n1");
  CHECK(d.modes[n1].kind == Mode::Kind::Oscillator);
  CHECK(d.modes[n1].component == -1);
}

TEST_CASE("fig8a decomposes into 2 periodic + 18 oscillator modes", "[modes]") {
  const auto d = decompose_modes(builtins::fig8a_coupled_jpsqs());
  CHECK(d.modes.size() == 20);
  CHECK(count_kind(d, Mode::Kind::Periodic) == 2);
  CHECK(count_kind(d, Mode::Kind::Oscillator) == 18);
  CHECK(d.floating_components.size() == 2);
}

TEST_CASE("periodic charge is the summed component charge", "[modes]") {
  // T maps fluxes to modes; charges map with Tinv^T, so the periodic row of
  // Tinv^T must be all-ones over the component.
  const auto s = builtins::fig6_jpsq();
  const auto d = decompose_modes(s);
  const Eigen::MatrixXd Qmap = d.Tinv.transpose();
  const int isl = s.node_index("isl");
  for (int j : d.floating_components[0]) CHECK(Qmap(isl, j) == 1.0);
  CHECK(Qmap(isl, s.node_index("n1")) == 0.0);

  // round trip
  CHECK((d.T * d.Tinv - Eigen::MatrixXd::Identity(7, 7)).norm() < 1e-14);
}

TEST_CASE("island-free floating component roots at its lowest node", "[modes]") {
  CircuitSpec s;
  s.ground = "g";
  s.nodes = {"b", "a"};
  s.branches = {{"L", BranchKind::Inductor, "a", "b", 10.0, 0.0},
                {"C1", BranchKind::Capacitor, "a", "g", 1.0, 0.0},
                {"C2", BranchKind::Capacitor, "b", "g", 1.0, 0.0}};
  const auto d = decompose_modes(s);
  CHECK(d.modes[0].kind == Mode::Kind::Periodic);  // node "b" (index 0)
  CHECK(d.modes[1].kind == Mode::Kind::Oscillator);
  CHECK(d.modes[1].label == "osc(a-b)");
}
