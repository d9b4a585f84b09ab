#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "jpsq/builtins.hpp"
#include "jpsq/netlist.hpp"

using namespace jpsq;

namespace {

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("serialize/parse round-trips every built-in circuit", "[netlist]") {
  const CircuitSpec specs[] = {
      builtins::fig1_flux_qubit(),  builtins::fig2_xx_qubit(),
      builtins::fig3b_jpsq(),       builtins::fig6_jpsq(),
      builtins::fig8a_coupled_jpsqs(),
  };
  for (const auto& s : specs) {
    INFO(s.name);
    const std::string text = serialize_netlist(s);
    const CircuitSpec back = parse_netlist(text);
    CHECK(back == s);
    // and the serialization itself is stable
    CHECK(serialize_netlist(back) == text);
  }
}

TEST_CASE("round trip preserves full double precision", "[netlist]") {
  auto s = builtins::fig1_flux_qubit();
  s.branches[0].value = 117.0 * (1.0 + 1e-15);
  s.branches[0].cap_fF = 0.30000000000000004;
  s.bias_defaults["dPhiZ"] = 1e-300;
  const CircuitSpec back = parse_netlist(serialize_netlist(s));
  CHECK(back.branches[0].value == s.branches[0].value);
  CHECK(back.branches[0].cap_fF == s.branches[0].cap_fF);
  CHECK(back.bias_defaults.at("dPhiZ") == 1e-300);
}

TEST_CASE("hand-written netlist parses with comments and blank lines", "[netlist]") {
  const std::string text = R"(# minimal rf-SQUID with an offset-charge island
name demo

[defaults.units]
inductance pH
charge 2e

[nodes]
ground gnd
node a   # junction node
node b

[branches]
junction  J1  gnd a  EJ=50 C=2.5
inductor  L1  a b    L=100
inductor  L2  b gnd  L=200
capacitor Cs  b gnd  C=10

[mutuals]
mutual M12 L1 L2 M=-30

[loops]
loop main flux="0.5 + f" +J1 +L1 +L2

[islands]
island q a

[bias]
f 0.125
q 0.5
)";
  const CircuitSpec s = parse_netlist(text);
  CHECK(s.name == "demo");
  CHECK(s.ground == "gnd");
  REQUIRE(s.nodes.size() == 2);
  REQUIRE(s.branches.size() == 4);
  CHECK(s.branches[0].kind == BranchKind::Junction);
  CHECK(s.branches[0].value == 50.0);
  CHECK(s.branches[0].cap_fF == 2.5);
  REQUIRE(s.mutuals.size() == 1);
  CHECK(s.mutuals[0].M_pH == -30.0);
  REQUIRE(s.loops.size() == 1);
  CHECK(s.loops[0].branches.size() == 3);
  CHECK(s.loops[0].branches[1] == std::pair<int, std::string>{1, "L1"});
  CHECK(s.loops[0].flux.evaluate({{"f", 0.125}}) == 0.625);
  REQUIRE(s.islands.size() == 1);
  CHECK(s.islands[0].node == "a");
  CHECK(s.bias_defaults.at("q") == 0.5);
  CHECK(validate(s).pass);
  // island charge splits away from fluxes
  const auto bp = default_bias(s);
  CHECK(bp.charges.at("q") == 0.5);
  CHECK(bp.fluxes.count("q") == 0);
}

TEST_CASE("parse errors carry line and column positions", "[netlist]") {
  auto expect_error = [](const std::string& text, int line,
                         const std::string& fragment) {
    try {
      parse_netlist(text);
      FAIL("expected a parse error for: " + fragment);
    } catch (const NetlistError& e) {
      INFO(e.what());
      CHECK(e.line() == line);
      CHECK(std::string(e.what()).find(fragment) != std::string::npos);
    }
  };

  expect_error("[garbage]\n", 1, "unknown section");
  expect_error("[nodes\n", 1, "malformed section header");
  expect_error("version 2\n", 1, "only 'name'");
  expect_error("[nodes]\nground g\nnode a\n[branches]\nresistor R1 a g C=1\n", 5,
               "unknown branch kind");
  expect_error("[nodes]\nground g\nnode a\n[branches]\njunction J1 a g C=1\n", 5,
               "missing its EJ=");
  expect_error("[nodes]\nground g\nnode a\n[branches]\njunction J1 a g EJ=abc\n",
               5, "expected a number");
  expect_error(
      "[nodes]\nground g\nnode a\n[branches]\ninductor L1 a g L=10 C=1\n", 5,
      "not valid on an inductor");
  expect_error("[nodes]\nground g\n[loops]\nloop m +J1 +J2\n", 4,
               "missing flux=");
  expect_error("[nodes]\nground g\n[loops]\nloop m flux=\"2**x\" +J1\n", 4,
               "bad flux expression");
  expect_error("[nodes]\nground g\n[loops]\nloop m flux=\"0.5 +J1\n", 4,
               "unterminated string");
  expect_error("[nodes]\nground g\n[bias]\nf 0\nf 1\n", 5, "declared twice");
  expect_error("[nodes]\nground g\nground h\n", 3, "ground declared twice");
  expect_error("[nodes]\nnode a\n", 2, "no ground node");
  expect_error("[defaults.units]\ninductance nH\n", 2, "unsupported unit");
  expect_error("[defaults.units]\nresistance Ohm\n", 2, "unknown quantity");
  expect_error("[mutuals]\nmutual M a b 30\n", 2, "expected M=");

  // column of the offending token
  try {
    parse_netlist("[nodes]\nground g\nnode a\n[branches]\ncapacitor C1 a g C=z\n");
    FAIL("expected a parse error");
  } catch (const NetlistError& e) {
    CHECK(e.line() == 5);
    CHECK(e.column() == 20);  // the 'z' inside C=z
  }
}

TEST_CASE("shipped netlist files match their built-in factories", "[netlist]") {
  const std::filesystem::path dir = JPSQ_NETLIST_DIR;
  const std::pair<const char*, CircuitSpec> shipped[] = {
      {"fig1.net", builtins::fig1_flux_qubit()},
      {"fig2.net", builtins::fig2_xx_qubit()},
      {"fig3b.net", builtins::fig3b_jpsq()},
      {"fig6.net", builtins::fig6_jpsq()},
      {"fig8a.net", builtins::fig8a_coupled_jpsqs()},
  };
  for (const auto& [file, spec] : shipped) {
    INFO(file);
    const CircuitSpec parsed = parse_netlist(read_file(dir / file));
    CHECK(parsed == spec);
    CHECK(validate(parsed).pass);
  }
}
