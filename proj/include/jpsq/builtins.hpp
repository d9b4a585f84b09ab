// SPDX-License-Identifier: MIT
//
// Built-in example circuits.  Each factory returns a validated CircuitSpec;
// the same circuits ship as netlist files under netlists/.

#pragma once

#include "jpsq/analytic.hpp"
#include "jpsq/circuit.hpp"
#include "jpsq/constants.hpp"

namespace jpsq::builtins {

namespace detail {

inline Branch junction(std::string name, std::string a, std::string b,
                       double EJ_GHz, double C_fF) {
  return {std::move(name), BranchKind::Junction, std::move(a), std::move(b),
          EJ_GHz, C_fF};
}
inline Branch capacitor(std::string name, std::string a, std::string b,
                        double C_fF) {
  return {std::move(name), BranchKind::Capacitor, std::move(a), std::move(b),
          C_fF, 0.0};
}
inline Branch inductor(std::string name, std::string a, std::string b,
                       double L_pH) {
  return {std::move(name), BranchKind::Inductor, std::move(a), std::move(b),
          L_pH, 0.0};
}

}  // namespace detail

// Two-loop persistent-current flux qubit: two large junctions in a main loop
// closed by a DC SQUID pair.  Bias knobs: dPhiZ (main loop, around the
// half-flux point) and dPhiX (SQUID loop).
inline CircuitSpec fig1_flux_qubit(double EJ_GHz = 134.0, double CJ_fF = 5.40,
                                   double EJa_GHz = 44.7,
                                   double CJa_fF = 1.80) {
  using namespace detail;
  CircuitSpec s;
  s.name = "fig1_flux_qubit";
  s.ground = "g";
  s.nodes = {"n1", "n2"};
  s.branches = {
      junction("J1", "g", "n1", EJ_GHz, CJ_fF),
      junction("J2", "n1", "n2", EJ_GHz, CJ_fF),
      junction("Ja1", "n2", "g", EJa_GHz, CJa_fF),
      junction("Ja2", "n2", "g", EJa_GHz, CJa_fF),
  };
  s.loops = {
      {"main", {{1, "J1"}, {1, "J2"}, {1, "Ja1"}}, LinExpr::parse("0.5 + dPhiZ")},
      {"squid", {{1, "Ja1"}, {-1, "Ja2"}}, LinExpr::parse("dPhiX")},
  };
  s.bias_defaults = {{"dPhiZ", 0.0}, {"dPhiX", 0.0}};
  return s;
}

// Two-loop flux qubit with explicit loop inductance and DC SQUID arm
// inductors, plus a shunt capacitor; used for transverse (xx) coupling
// studies.  The small C0 keeps the capacitance matrix nonsingular without
// influencing the physics.
inline CircuitSpec fig2_xx_qubit(double EJ_GHz = 117.0, double CJ_fF = 4.42,
                                 double EJa_GHz = 47.8, double CJa_fF = 1.80,
                                 double Ll_pH = 110.0, double Ldelta_pH = 20.0,
                                 double Csh_fF = 35.0, double C0_fF = 0.1) {
  using namespace detail;
  CircuitSpec s;
  s.name = "fig2_xx_qubit";
  s.ground = "g";
  s.nodes = {"n1", "n2", "s1", "s2", "n3"};
  s.branches = {
      junction("J1", "g", "n1", EJ_GHz, CJ_fF),
      junction("J2", "n1", "n2", EJ_GHz, CJ_fF),
      junction("Ja1", "n2", "s1", EJa_GHz, CJa_fF),
      junction("Ja2", "n2", "s2", EJa_GHz, CJa_fF),
      inductor("Ld1", "s1", "n3", 0.5 * Ldelta_pH),
      inductor("Ld2", "s2", "n3", 0.5 * Ldelta_pH),
      inductor("Ll", "n3", "g", Ll_pH),
      capacitor("Csh", "n2", "g", Csh_fF),
      capacitor("C0", "n3", "g", C0_fF),
  };
  s.loops = {
      {"main",
       {{1, "J1"}, {1, "J2"}, {1, "Ja1"}, {1, "Ld1"}, {1, "Ll"}},
       LinExpr::parse("0.5 + dPhiZ")},
      {"squid",
       {{1, "Ja1"}, {1, "Ld1"}, {-1, "Ld2"}, {-1, "Ja2"}},
       LinExpr::parse("dPhiX")},
  };
  s.bias_defaults = {{"dPhiZ", 0.0}, {"dPhiX", 0.0}};
  return s;
}

// Five-junction JPSQ: two large junctions and two DC SQUIDs around a charge
// island.  The SQUIDs carry opposite static offsets +-PhiDelta; dPhiZ and
// dPhiX are the emulated field knobs and the island charge is set through
// the island name ("isl").
inline CircuitSpec fig3b_jpsq(const analytic::AnalyticJpsqParams& p) {
  using namespace detail;
  const double EJ = p.E_J_GHz;
  const double CJ = p.C_Ja_fF * p.E_J_GHz / p.E_Ja_GHz;
  CircuitSpec s;
  s.name = "fig3b_jpsq";
  s.ground = "g";
  s.nodes = {"n1", "n2", "isl"};
  s.branches = {
      junction("J1", "g", "n1", EJ, CJ),
      junction("Ja1", "n1", "isl", p.E_Ja_GHz, p.C_Ja_fF),
      junction("Ja2", "n1", "isl", p.E_Ja_GHz, p.C_Ja_fF),
      junction("Jb1", "isl", "n2", p.E_Ja_GHz, p.C_Ja_fF),
      junction("Jb2", "isl", "n2", p.E_Ja_GHz, p.C_Ja_fF),
      junction("J2", "n2", "g", EJ, CJ),
      capacitor("CI", "isl", "g", p.C_I_fF),
  };
  s.loops = {
      {"main",
       {{1, "J1"}, {1, "Ja1"}, {1, "Jb1"}, {1, "J2"}},
       LinExpr::parse("0.5 + dPhiZ")},
      {"squidA", {{1, "Ja1"}, {-1, "Ja2"}}, LinExpr::parse("PhiDelta + dPhiX")},
      {"squidB", {{1, "Jb1"}, {-1, "Jb2"}}, LinExpr::parse("-PhiDelta + dPhiX")},
  };
  s.islands = {{"isl", "isl"}};
  s.bias_defaults = {{"dPhiZ", 0.0},
                     {"dPhiX", 0.0},
                     {"PhiDelta", p.Phi_Delta_Phi0},
                     {"isl", 0.0}};
  return s;
}

inline CircuitSpec fig3b_jpsq() {
  return fig3b_jpsq(analytic::AnalyticJpsqParams::from_beta(29.8, 1.44, 60.0, 15.0, 0.3));
}

struct Fig6Params {
  double EJa_GHz = 125.0;
  double CJa_fF = 5.0;
  double CI_fF = 2.0;  // r_C = 0.1
  double Ll_pH = 72.0;
  double Ldelta_pH = 50.0;
  double C0_fF = 0.1;
  double PhiDelta_Phi0 = 0.3;
};

// RF-SQUID-style JPSQ: the large junctions are replaced by linear loop
// inductors Ll, and each DC SQUID arm carries an explicit Ldelta/2.  One
// periodic (island) mode plus six oscillator modes.
inline CircuitSpec fig6_jpsq(const Fig6Params& p = {}) {
  using namespace detail;
  CircuitSpec s;
  s.name = "fig6_jpsq";
  s.ground = "g";
  s.nodes = {"n1", "n2", "isl", "a1", "a2", "a3", "a4"};
  s.branches = {
      inductor("Ll1", "n1", "g", p.Ll_pH),
      inductor("Ll2", "n2", "g", p.Ll_pH),
      junction("Ja1", "n1", "a1", p.EJa_GHz, p.CJa_fF),
      junction("Ja2", "n1", "a2", p.EJa_GHz, p.CJa_fF),
      junction("Ja3", "n2", "a3", p.EJa_GHz, p.CJa_fF),
      junction("Ja4", "n2", "a4", p.EJa_GHz, p.CJa_fF),
      inductor("Ld1", "a1", "isl", 0.5 * p.Ldelta_pH),
      inductor("Ld2", "a2", "isl", 0.5 * p.Ldelta_pH),
      inductor("Ld3", "a3", "isl", 0.5 * p.Ldelta_pH),
      inductor("Ld4", "a4", "isl", 0.5 * p.Ldelta_pH),
  };
  if (p.C0_fF > 0.0) {
    s.branches.push_back(capacitor("C01", "n1", "g", p.C0_fF));
    s.branches.push_back(capacitor("C02", "n2", "g", p.C0_fF));
  }
  if (p.CI_fF > 0.0) s.branches.push_back(capacitor("CI", "isl", "g", p.CI_fF));
  s.loops = {
      {"main",
       {{-1, "Ll1"}, {1, "Ja1"}, {1, "Ld1"}, {-1, "Ld3"}, {-1, "Ja3"}, {1, "Ll2"}},
       LinExpr::parse("0.5 + dPhiZ")},
      {"squidA",
       {{1, "Ja1"}, {1, "Ld1"}, {-1, "Ld2"}, {-1, "Ja2"}},
       LinExpr::parse("PhiDelta + dPhiX")},
      {"squidB",
       {{1, "Ja3"}, {1, "Ld3"}, {-1, "Ld4"}, {-1, "Ja4"}},
       LinExpr::parse("-PhiDelta + dPhiX")},
  };
  s.islands = {{"isl", "isl"}};
  s.bias_defaults = {{"dPhiZ", 0.0},
                     {"dPhiX", 0.0},
                     {"PhiDelta", p.PhiDelta_Phi0},
                     {"isl", 0.0}};
  return s;
}

// RF-SQUID realization of an analytic parameter set: each large junction
// becomes its Josephson inductance L_J = (Phi0/2pi)^2 / E_J.
inline CircuitSpec fig6_jpsq(const analytic::AnalyticJpsqParams& p,
                             double Ldelta_pH = 50.0, double C0_fF = 0.1) {
  Fig6Params q;
  q.EJa_GHz = p.E_Ja_GHz;
  q.CJa_fF = p.C_Ja_fF;
  q.CI_fF = p.C_I_fF;
  q.Ll_pH = units::josephson_inductance_pH(p.E_J_GHz);
  q.Ldelta_pH = Ldelta_pH;
  q.C0_fF = C0_fF;
  q.PhiDelta_Phi0 = p.Phi_Delta_Phi0;
  return fig6_jpsq(q);
}

namespace detail {

// One RF-SQUID JPSQ as in fig6_jpsq, with all names prefixed, wired into an
// existing spec.  zName/xName are the bias names for the emulated fields.
inline void add_jpsq(CircuitSpec& s, const std::string& prefix,
                     const Fig6Params& p, const std::string& zName,
                     const std::string& xName) {
  auto P = [&](const char* n) { return prefix + n; };
  for (const char* n : {"n1", "n2", "isl", "a1", "a2", "a3", "a4"})
    s.nodes.push_back(P(n));
  s.branches.push_back(inductor(P("Ll1"), P("n1"), "g", p.Ll_pH));
  s.branches.push_back(inductor(P("Ll2"), P("n2"), "g", p.Ll_pH));
  s.branches.push_back(capacitor(P("C01"), P("n1"), "g", p.C0_fF));
  s.branches.push_back(capacitor(P("C02"), P("n2"), "g", p.C0_fF));
  s.branches.push_back(junction(P("Ja1"), P("n1"), P("a1"), p.EJa_GHz, p.CJa_fF));
  s.branches.push_back(junction(P("Ja2"), P("n1"), P("a2"), p.EJa_GHz, p.CJa_fF));
  s.branches.push_back(junction(P("Ja3"), P("n2"), P("a3"), p.EJa_GHz, p.CJa_fF));
  s.branches.push_back(junction(P("Ja4"), P("n2"), P("a4"), p.EJa_GHz, p.CJa_fF));
  s.branches.push_back(inductor(P("Ld1"), P("a1"), P("isl"), 0.5 * p.Ldelta_pH));
  s.branches.push_back(inductor(P("Ld2"), P("a2"), P("isl"), 0.5 * p.Ldelta_pH));
  s.branches.push_back(inductor(P("Ld3"), P("a3"), P("isl"), 0.5 * p.Ldelta_pH));
  s.branches.push_back(inductor(P("Ld4"), P("a4"), P("isl"), 0.5 * p.Ldelta_pH));
  s.branches.push_back(capacitor(P("CI"), P("isl"), "g", p.CI_fF));
  s.loops.push_back({P("main"),
                     {{-1, P("Ll1")},
                      {1, P("Ja1")},
                      {1, P("Ld1")},
                      {-1, P("Ld3")},
                      {-1, P("Ja3")},
                      {1, P("Ll2")}},
                     LinExpr::parse("0.5 + " + zName)});
  s.loops.push_back({P("squidA"),
                     {{1, P("Ja1")}, {1, P("Ld1")}, {-1, P("Ld2")}, {-1, P("Ja2")}},
                     LinExpr::parse("PhiDelta + " + xName)});
  s.loops.push_back({P("squidB"),
                     {{1, P("Ja3")}, {1, P("Ld3")}, {-1, P("Ld4")}, {-1, P("Ja4")}},
                     LinExpr::parse("-PhiDelta + " + xName)});
  s.islands.push_back({P("isl"), P("isl")});
  s.bias_defaults[zName] = 0.0;
  s.bias_defaults[xName] = 0.0;
  s.bias_defaults[P("isl")] = 0.0;
}

// Grounded two-loop RF-SQUID coupler: a DC SQUID pair from ground, arm
// inductors joining at a loop node that closes back to ground through Ll.
// fluxName biases the main loop; the internal SQUID loop is held at zero.
inline void add_coupler(CircuitSpec& s, const std::string& prefix,
                        double EJC_GHz, double CJC_fF, double Ll_pH,
                        double Ldelta_pH, double C0_fF,
                        const std::string& fluxName) {
  auto P = [&](const char* n) { return prefix + n; };
  for (const char* n : {"s1", "s2", "n2"}) s.nodes.push_back(P(n));
  s.branches.push_back(junction(P("J1"), "g", P("s1"), EJC_GHz, CJC_fF));
  s.branches.push_back(junction(P("J2"), "g", P("s2"), EJC_GHz, CJC_fF));
  s.branches.push_back(inductor(P("Ld1"), P("s1"), P("n2"), 0.5 * Ldelta_pH));
  s.branches.push_back(inductor(P("Ld2"), P("s2"), P("n2"), 0.5 * Ldelta_pH));
  s.branches.push_back(inductor(P("Ll"), P("n2"), "g", Ll_pH));
  s.branches.push_back(capacitor(P("C0"), P("n2"), "g", C0_fF));
  s.loops.push_back({P("main"),
                     {{1, P("J1")}, {1, P("Ld1")}, {1, P("Ll")}},
                     LinExpr::parse(fluxName)});
  s.loops.push_back({P("squid"),
                     {{1, P("J1")}, {1, P("Ld1")}, {-1, P("Ld2")}, {-1, P("J2")}},
                     LinExpr::parse("0")});
}

}  // namespace detail

// Two RF-SQUID JPSQs with both a zz coupler (mutuals to the JPSQ loop
// inductors) and an xx coupler (mutuals of opposite sign to the two DC SQUID
// arms within each JPSQ).  Defaults turn the zz coupler on (PhiCz = 1) and
// the xx coupler off (PhiCx = 0.5); swap the two values for pure xx.
inline CircuitSpec fig8a_coupled_jpsqs() {
  using namespace detail;
  Fig6Params q;
  q.EJa_GHz = 70.0;
  q.CJa_fF = 2.64;
  q.CI_fF = 10.0;
  q.Ll_pH = 1000.0;
  q.Ldelta_pH = 50.0;
  q.C0_fF = 0.1;
  q.PhiDelta_Phi0 = 0.4;

  CircuitSpec s;
  s.name = "fig8a_coupled_jpsqs";
  s.ground = "g";
  s.bias_defaults["PhiDelta"] = q.PhiDelta_Phi0;
  add_jpsq(s, "A_", q, "dPhiZA", "dPhiXA");
  add_jpsq(s, "B_", q, "dPhiZB", "dPhiXB");
  add_coupler(s, "cz_", 172.0, 6.46, 600.0, 10.0, 0.1, "PhiCz");
  add_coupler(s, "cx_", 172.0, 6.46, 600.0, 10.0, 0.1, "PhiCx");
  s.bias_defaults["PhiCz"] = 1.0;
  s.bias_defaults["PhiCx"] = 0.5;

  s.mutuals = {
      {"Mzz_A", "cz_Ll", "A_Ll1", 25.0},
      {"Mzz_B", "cz_Ll", "B_Ll1", 25.0},
      {"Mxx_A1", "cx_Ll", "A_Ld1", 25.0},
      {"Mxx_A2", "cx_Ll", "A_Ld3", -25.0},
      {"Mxx_B1", "cx_Ll", "B_Ld1", 25.0},
      {"Mxx_B2", "cx_Ll", "B_Ld3", -25.0},
  };
  return s;
}

}  // namespace jpsq::builtins
