// SPDX-License-Identifier: MIT
//
// Physical constants (2019 SI exact values) and unit conversions.
//
// Internal unit system used throughout the library:
//   energy / frequency : GHz      (h = 1; E[GHz] = E[J] / h / 1e9)
//   capacitance        : fF
//   inductance         : pH
//   flux               : Phi0 = h/2e
//   charge             : 2e       (Cooper pairs)
//   phase              : rad
//
// All conversions between these units and SI live here; nothing else in the
// library hard-codes a physical constant.

#pragma once

#include <numbers>

namespace jpsq::units {

inline constexpr double pi = std::numbers::pi;

// --- exact SI defining constants -------------------------------------------
inline constexpr double h_SI = 6.62607015e-34;   // Planck constant, J s
inline constexpr double e_SI = 1.602176634e-19;  // elementary charge, C
inline constexpr double kB_SI = 1.380649e-23;    // Boltzmann constant, J/K

inline constexpr double hbar_SI = h_SI / (2.0 * pi);
inline constexpr double Phi0_SI = h_SI / (2.0 * e_SI);        // Wb
inline constexpr double RQ_SI = h_SI / (4.0 * e_SI * e_SI);   // h/(2e)^2, Ohm

// --- energy scale conversions ----------------------------------------------

// E[GHz] for an energy given in joules.
inline constexpr double joule_to_GHz(double E_J) { return E_J / h_SI * 1e-9; }
inline constexpr double GHz_to_joule(double E_GHz) { return E_GHz * h_SI * 1e9; }

// Angular frequency (rad/s) of a transition energy in GHz.
inline constexpr double GHz_to_rad_s(double E_GHz) { return 2.0 * pi * 1e9 * E_GHz; }
inline constexpr double rad_s_to_GHz(double w) { return w / (2.0 * pi * 1e9); }

// Single-electron charging energy e^2/2C in GHz, C in fF.
inline constexpr double charging_energy_GHz(double C_fF) {
  return joule_to_GHz(e_SI * e_SI / (2.0 * C_fF * 1e-15));
}

// Inductive energy (Phi0/2pi)^2 / L in GHz, L in pH.
inline constexpr double inductive_energy_GHz(double L_pH) {
  constexpr double phi0_red = Phi0_SI / (2.0 * pi);
  return joule_to_GHz(phi0_red * phi0_red / 1e-12) / L_pH;
}

// Josephson inductance (Phi0/2pi)^2 / E_J in pH, E_J in GHz.
inline constexpr double josephson_inductance_pH(double EJ_GHz) {
  constexpr double phi0_red = Phi0_SI / (2.0 * pi);
  return phi0_red * phi0_red / GHz_to_joule(EJ_GHz) * 1e12;
}

// Inverse of the above: junction energy in GHz equivalent to L in pH.
inline constexpr double josephson_energy_GHz(double L_pH) {
  constexpr double phi0_red = Phi0_SI / (2.0 * pi);
  return joule_to_GHz(phi0_red * phi0_red / (L_pH * 1e-12));
}

// Junction critical current 2pi E_J / Phi0 in nA, E_J in GHz.
inline constexpr double critical_current_nA(double EJ_GHz) {
  return 2.0 * pi * GHz_to_joule(EJ_GHz) / Phi0_SI * 1e9;
}

// Thermal energy k_B T in GHz, T in kelvin.
inline constexpr double thermal_energy_GHz(double T_K) {
  return joule_to_GHz(kB_SI * T_K);
}

// --- matrix-element conversions --------------------------------------------

// Current dipole in nA for a flux-derivative matrix element given in
// GHz/Phi0: mu[A] = dE/dPhi = (h 1e9 / Phi0) * (dE[GHz]/dPhi[Phi0]).
inline constexpr double fluxslope_GHz_per_Phi0_to_nA(double s) {
  return s * h_SI * 1e9 / Phi0_SI * 1e9;
}

// Voltage dipole in uV for a charge-derivative matrix element given in
// GHz/(2e): mu[V] = dE/dQ = (h 1e9 / 2e) * (dE[GHz]/dQ[2e]).
inline constexpr double chargeslope_GHz_per_2e_to_uV(double s) {
  return s * h_SI * 1e9 / (2.0 * e_SI) * 1e6;
}

}  // namespace jpsq::units
