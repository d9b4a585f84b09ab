// SPDX-License-Identifier: MIT
//
// Closed-form analysis of the symmetric two-SQUID phase-slip qubit: Josephson
// potential, persistent currents, the 1D instanton tunneling chain, and the
// resulting two-level (spin) model with its three dipole moments.
//
// Conventions:
//   energies in GHz, capacitances in fF, inductances via inverse henries,
//   angular frequencies in rad/s, phases in rad, fluxes in Phi0, island
//   charge in 2e.  All formulas are transcribed exactly as published;
//   discrepancies with numerics are findings, not bugs to patch here.

#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "jpsq/constants.hpp"

namespace jpsq::analytic {

using units::pi;

struct AnalyticJpsqParams {
  double E_Ja_GHz = 0.0;   // single small-junction Josephson energy
  double C_Ja_fF = 0.0;    // single small-junction capacitance
  double C_I_fF = 0.0;     // island shunt capacitance (may be 0)
  double E_J_GHz = 0.0;    // loop junction energy (sets beta)
  double Phi_Delta_Phi0 = 0.0;  // static SQUID bias flux, |.| < 0.5
  double dPhi_z_Phi0 = 0.0;     // z (loop) flux offset
  double dPhi_x_Phi0 = 0.0;     // x (SQUID imbalance) flux offset
  double Q_b_2e = 0.0;          // island polarization charge

  // Dressed DC-SQUID energy 2 E_Ja cos(phi_Delta / 2), GHz.
  double EJa_tilde_GHz() const {
    return 2.0 * E_Ja_GHz * std::cos(pi * Phi_Delta_Phi0);
  }
  double beta() const { return E_J_GHz / EJa_tilde_GHz(); }

  static AnalyticJpsqParams from_beta(double EJa_GHz, double CJa_fF, double CI_fF,
                                      double beta, double PhiDelta_Phi0) {
    AnalyticJpsqParams p;
    p.E_Ja_GHz = EJa_GHz;
    p.C_Ja_fF = CJa_fF;
    p.C_I_fF = CI_fF;
    p.Phi_Delta_Phi0 = PhiDelta_Phi0;
    p.E_J_GHz = beta * p.EJa_tilde_GHz();
    return p;
  }

  void validate() const {
    if (!(E_Ja_GHz > 0.0)) throw std::invalid_argument("E_Ja must be positive");
    if (!(C_Ja_fF > 0.0)) throw std::invalid_argument("C_Ja must be positive");
    if (C_I_fF < 0.0) throw std::invalid_argument("C_I must be nonnegative");
    if (!(std::abs(Phi_Delta_Phi0) < 0.5))
      throw std::invalid_argument("|Phi_Delta| must be < 0.5 Phi0");
    if (!(E_J_GHz > 0.0)) throw std::invalid_argument("E_J must be positive");
  }
};

// Per-tunneling-path quantities (L: +delta branch, R: -delta branch).
struct PathQuantities {
  double E_bT_GHz = 0.0;       // barrier height
  double phi_Tm = 0.0;         // minimum position along the path, rad
  double L_Tm_inv = 0.0;       // inverse inductance at the minima, 1/H
  double C_T_inv = 0.0;        // inverse capacitance along the path, 1/F
  double k_6T = 0.0;           // sextic correction coefficient
  double Omega_T_rad_s = 0.0;  // small-oscillation frequency
  double Z_T_ohm = 0.0;        // path impedance sqrt(C^-1 / L^-1)
  double S_Tb = 0.0;           // action: S_0 (1 +- ds), first order in dphi^x
  double S_direct = 0.0;       // action evaluated from this path's own chain
};

struct AnalyticIntermediates {
  AnalyticJpsqParams params;

  // dressed SQUID and dimensionless ratios
  double EJa_tilde_GHz = 0.0;
  double E_J_GHz = 0.0;
  double ICa_tilde_nA = 0.0;  // dressed SQUID critical current
  double beta = 0.0;
  double theta = 0.0;  // arccot(beta)
  double r_C = 0.0;    // C_I / 4 C_Ja
  double C_J_fF = 0.0; // loop junction capacitance, C_Ja E_J / E_Ja
  double y_Ja = 0.0;   // R_Q / Z_Ja, SQUID admittance ratio
  double Z_Ja_ohm = 0.0;       // sqrt(L~_Ja / 2 C_Ja), flux-dressed
  double omega_J_rad_s = 0.0;  // bare junction plasma frequency

  // potential minima
  double phi_Im = 0.0;  // island phase at the minima (+ branch), rad
  double phi_lm = 0.0;  // loop phase at the minima, rad

  // barriers
  double E_b_GHz = 0.0;
  double dE_b_GHz = 0.0;  // first order in dphi^x

  // path geometry
  double N_plus = 0.0;   // 1 + (4 theta / pi)^2
  double N_minus = 0.0;  // 1 - (4 theta / pi)^2
  double phi_m = 0.0;    // pi / 2
  double dphi_m = 0.0;

  // inverse inductances, 1/H
  double L_m_inv = 0.0;
  double dL_m_inv = 0.0;
  double L_Ja_tilde_inv = 0.0;

  // inverse capacitances, 1/F, and the matrix totals in fF
  double C_inv = 0.0;
  double dC_inv = 0.0;
  double C_I_tot_fF = 0.0;  // C_I + 2 (2C_Ja || C_J)
  double C_l_tot_fF = 0.0;  // C_Ja + C_J / 2
  double C_p_tot_fF = 0.0;  // 2 C_J + (C_I || 4C_Ja)

  // sextic coefficient, frequencies, action
  double k_6 = 0.0;
  double Omega_rad_s = 0.0;
  double Z_T_ohm = 0.0;
  double S_0 = 0.0;
  double ds_per_dphix = 0.0;  // d(delta s)/d(dphi^x), 1/rad
  double ds = 0.0;            // total at the params' dphi^x
  double q_b = 0.0;           // Aharonov-Casher phase 2 pi Q_b / 2e, rad

  double Omega_ge_rad_s = 0.0;  // zero-field tunnel splitting

  PathQuantities left, right;

  bool flag_k6_large = false;  // |k_6T| > 0.5 on either path
  bool flag_S0_small = false;  // S_0 < 3: dilute-instanton marginal
};

struct TwoLevelModel {
  // Zeeman coefficients in H = -(E^x sx + E^y sy + E^z sz), GHz
  double E_x_GHz = 0.0;
  double E_y_GHz = 0.0;
  double E_z_GHz = 0.0;
  // dipole moments
  double I_x_nA = 0.0;  // e Omega_ge (S_0 - 1/2) ds/dphi^x
  double V_y_uV = 0.0;  // Phi0 Omega_ge / 4
  double I_z_nA = 0.0;  // I~_Ca cos(theta)
  // validity flags
  bool beta_large_ok = false;       // beta >= 5 (strong-phase-slip regime)
  bool dilute_instanton_ok = false; // S_0 >= 3
};

// ---------------------------------------------------------------------------
// Josephson potential over (phi_I, phi_l, phi_p), in GHz.
// ---------------------------------------------------------------------------
inline double potential(const AnalyticJpsqParams& p, double phi_I, double phi_l,
                        double phi_p) {
  const double Et = p.EJa_tilde_GHz();
  const double beta = p.beta();
  const double phiD2 = pi * p.Phi_Delta_Phi0;  // phi_Delta / 2
  const double dzx = pi * p.dPhi_x_Phi0;       // dphi^x / 2
  const double dz = 2.0 * pi * p.dPhi_z_Phi0;  // dphi^z
  const double u =
      beta * (1.0 - std::cos(phi_l / 2.0) * std::cos(phi_p)) +
      std::cos(dzx) * std::sin(phi_I - phi_p) * std::sin((dz - phi_l) / 2.0) +
      (1.0 / std::cos(phiD2)) *
          (1.0 - std::sin(dzx) * std::sin(phiD2) * std::cos(phi_I - phi_p) *
                     std::cos((dz - phi_l) / 2.0));
  return 2.0 * Et * u;
}

// ---------------------------------------------------------------------------
// Persistent currents.
// ---------------------------------------------------------------------------
inline double persistent_current_nA(const AnalyticJpsqParams& p) {
  const double theta = std::atan2(1.0, p.beta());
  return units::critical_current_nA(p.EJa_tilde_GHz()) * std::cos(theta);
}

struct FluxQubitCurrent {
  double I_nA = 0.0;
  bool double_well = false;  // false when beta is outside (0.5, 1)
};

// Semiclassical flux-qubit persistent current I~_Ca sin(2 gamma), 2cos(gamma)
// = beta, valid only where the two-minimum structure exists.
inline FluxQubitCurrent flux_qubit_persistent_current(double beta,
                                                      double ICa_tilde_nA) {
  FluxQubitCurrent out;
  if (beta <= 0.5 || beta >= 1.0) return out;  // no double well: I = 0
  const double gamma = std::acos(beta / 2.0);
  out.I_nA = ICa_tilde_nA * std::sin(2.0 * gamma);
  out.double_well = true;
  return out;
}

// ---------------------------------------------------------------------------
// Full instanton chain.
// ---------------------------------------------------------------------------
inline AnalyticIntermediates instanton_chain(const AnalyticJpsqParams& p) {
  p.validate();
  AnalyticIntermediates r;
  r.params = p;

  const double phiD = 2.0 * pi * p.Phi_Delta_Phi0;
  const double c = std::cos(phiD / 2.0);
  const double t = std::tan(phiD / 2.0);
  const double dphix = 2.0 * pi * p.dPhi_x_Phi0;

  r.EJa_tilde_GHz = p.EJa_tilde_GHz();
  r.E_J_GHz = p.E_J_GHz;
  r.beta = p.beta();
  r.theta = std::atan2(1.0, r.beta);
  r.r_C = p.C_Ja_fF > 0.0 ? p.C_I_fF / (4.0 * p.C_Ja_fF) : 0.0;
  r.C_J_fF = p.C_Ja_fF * p.E_J_GHz / p.E_Ja_GHz;
  r.ICa_tilde_nA = units::critical_current_nA(r.EJa_tilde_GHz);

  const double st = std::sin(r.theta), ct = std::cos(r.theta);
  const double tt = std::tan(r.theta);
  const double cot = 1.0 / tt, csc = 1.0 / st;

  const double LJa_H = units::josephson_inductance_pH(p.E_Ja_GHz) * 1e-12;
  const double LtJa_H = units::josephson_inductance_pH(r.EJa_tilde_GHz) * 1e-12;
  r.L_Ja_tilde_inv = 1.0 / LtJa_H;
  r.Z_Ja_ohm = std::sqrt(LtJa_H / (2.0 * p.C_Ja_fF * 1e-15));
  r.y_Ja = units::RQ_SI / r.Z_Ja_ohm;
  r.omega_J_rad_s = 1.0 / std::sqrt(LJa_H * p.C_Ja_fF * 1e-15);

  // minima and barriers
  r.phi_Im = pi / 2.0 - dphix * (cot / 2.0) * t;
  r.phi_lm = 2.0 * r.theta;
  r.E_b_GHz = 2.0 * r.EJa_tilde_GHz * std::tan(r.theta / 2.0);
  const double dEb_coeff = (r.E_b_GHz / 2.0) * (cot + csc) * t;  // per rad
  r.dE_b_GHz = dphix * dEb_coeff;

  r.N_plus = 1.0 + std::pow(4.0 * r.theta / pi, 2);
  r.N_minus = 1.0 - std::pow(4.0 * r.theta / pi, 2);
  r.phi_m = pi / 2.0;
  const double dphim_coeff = -(cot / 2.0) * t * (r.N_minus / r.N_plus);
  r.dphi_m = dphix * dphim_coeff;

  // inverse inductance at the minima
  r.L_m_inv = 2.0 * r.L_Ja_tilde_inv * st *
              (1.0 + 4.0 * r.theta * r.theta / (pi * pi * st * st));
  const double dLm_coeff =
      -t * (4.0 * r.theta * r.L_Ja_tilde_inv / (pi * st)) *
      (1.0 + (4.0 * r.theta / (pi * pi * tt)) *
                 (1.0 - (2.0 - 8.0 * st * st) / r.N_plus));
  r.dL_m_inv = dphix * dLm_coeff;

  // inverse capacitance along the path.  The published form has an overall
  // 1/C_I with r_C-dependent denominators; the algebraically identical form
  // below stays finite at C_I = 0 (both terms reduce to the series-total
  // capacitances of the charge representation).
  const double CI_F = p.C_I_fF * 1e-15;
  const double CJa_F = p.C_Ja_fF * 1e-15;
  const double Np2 = r.N_plus * r.N_plus;
  r.C_inv = (1.0 / Np2) / (CI_F + 4.0 * CJa_F / (1.0 + tt / c)) +
            (16.0 * r.theta * r.theta / (pi * pi)) /
                (Np2 * CJa_F * (1.0 + cot * c));
  const double dCinv_coeff =
      t * (1.0 / CJa_F) *
      ((16.0 * r.theta * r.theta / (pi * pi)) * (2.0 / (pi * Np2)) / (tt + c));
  r.dC_inv = dphix * dCinv_coeff;

  const double CJ_F = r.C_J_fF * 1e-15;
  auto series = [](double a, double b) {
    return (a > 0.0 && b > 0.0) ? a * b / (a + b) : 0.0;
  };
  r.C_I_tot_fF = p.C_I_fF + 2.0 * series(2.0 * p.C_Ja_fF, r.C_J_fF);
  r.C_l_tot_fF = p.C_Ja_fF + r.C_J_fF / 2.0;
  r.C_p_tot_fF = 2.0 * r.C_J_fF + series(p.C_I_fF, 4.0 * p.C_Ja_fF);
  (void)CJ_F;

  // midpoint sextic coefficient, frequency, action, splitting
  const double Phim_Wb = r.phi_m * units::Phi0_SI / (2.0 * pi);
  r.k_6 = Phim_Wb * Phim_Wb * r.L_m_inv /
              (8.0 * units::GHz_to_joule(r.E_b_GHz)) -
          1.0;
  r.Omega_rad_s = std::sqrt(r.L_m_inv * r.C_inv);
  r.Z_T_ohm = std::sqrt(r.C_inv / r.L_m_inv);
  r.S_0 = (16.0 / 3.0) *
          (units::GHz_to_joule(r.E_b_GHz) / (units::hbar_SI * r.Omega_rad_s)) *
          (1.0 + 0.8 * r.k_6);
  r.Omega_ge_rad_s =
      r.Omega_rad_s * std::sqrt(12.0 * r.S_0 / pi) * std::exp(-r.S_0);

  // first-order action asymmetry (composed from the barrier, inductance and
  // capacitance coefficients; the k_6 and phi_Tm variations are not part of
  // the published first-order expression)
  r.ds_per_dphix = dEb_coeff / r.E_b_GHz -
                   0.5 * (dLm_coeff / r.L_m_inv + dCinv_coeff / r.C_inv);
  r.ds = dphix * r.ds_per_dphix;
  r.q_b = 2.0 * pi * p.Q_b_2e;

  // per-path quantities
  for (double sg : {+1.0, -1.0}) {
    PathQuantities q;
    q.E_bT_GHz = r.E_b_GHz + sg * r.dE_b_GHz;
    q.phi_Tm = r.phi_m + sg * r.dphi_m;
    q.L_Tm_inv = r.L_m_inv + sg * r.dL_m_inv;
    q.C_T_inv = r.C_inv + sg * r.dC_inv;
    const double PhiTm_Wb = q.phi_Tm * units::Phi0_SI / (2.0 * pi);
    q.k_6T = PhiTm_Wb * PhiTm_Wb * q.L_Tm_inv /
                 (8.0 * units::GHz_to_joule(q.E_bT_GHz)) -
             1.0;
    q.Omega_T_rad_s = std::sqrt(q.L_Tm_inv * q.C_T_inv);
    q.Z_T_ohm = std::sqrt(q.C_T_inv / q.L_Tm_inv);
    q.S_Tb = r.S_0 * (1.0 + sg * r.ds);
    q.S_direct = (16.0 / 3.0) *
                 (units::GHz_to_joule(q.E_bT_GHz) /
                  (units::hbar_SI * q.Omega_T_rad_s)) *
                 (1.0 + 0.8 * q.k_6T);
    (sg > 0 ? r.left : r.right) = q;
  }

  r.flag_k6_large =
      std::abs(r.left.k_6T) > 0.5 || std::abs(r.right.k_6T) > 0.5;
  r.flag_S0_small = r.S_0 < 3.0;
  return r;
}

// ---------------------------------------------------------------------------
// Instanton trajectory, eq-of-motion form: the closed-form kink solves the
// zero-energy imaginary-time equation of the sextic potential exactly.
// ---------------------------------------------------------------------------
enum class Path { Left, Right };

inline const PathQuantities& path_of(const AnalyticIntermediates& r, Path p) {
  return p == Path::Left ? r.left : r.right;
}

inline std::vector<double> instanton_trajectory(const AnalyticIntermediates& r,
                                                Path which,
                                                const std::vector<double>& tau,
                                                double tau_0 = 0.0) {
  const PathQuantities& q = path_of(r, which);
  std::vector<double> out;
  out.reserve(tau.size());
  for (double tv : tau) {
    const double u = q.Omega_T_rad_s * (tv - tau_0) / 2.0;
    const double sech = 1.0 / std::cosh(u);
    out.push_back(q.phi_Tm * std::tanh(u) /
                  std::sqrt(1.0 + q.k_6T * sech * sech));
  }
  return out;
}

// Sextic double-well potential along a path, GHz, as a function of phi_T.
inline double path_potential_GHz(const PathQuantities& q, double phi_T) {
  const double x2 = (phi_T / q.phi_Tm) * (phi_T / q.phi_Tm);
  return q.E_bT_GHz * (1.0 - x2) * (1.0 - x2) * (1.0 + q.k_6T * x2);
}

// Euclidean action of the kink by direct quadrature (Simpson), dimensionless.
inline double action_quadrature(const PathQuantities& q, int n = 4001) {
  // S = (1/hbar) Integral sqrt(2 C_T U(Phi)) dPhi over [-Phi_Tm, Phi_Tm]
  //   = sqrt(2 E_b[J] / C_T_inv) * (Phi_Tm / hbar) * I(k),
  // with I(k) = Integral_{-1}^{1} (1 - x^2) sqrt(1 + k x^2) dx.
  if (n % 2 == 0) ++n;
  double sum = 0.0;
  const double hstep = 2.0 / (n - 1);
  for (int i = 0; i < n; ++i) {
    const double x = -1.0 + i * hstep;
    const double f = (1.0 - x * x) * std::sqrt(1.0 + q.k_6T * x * x);
    const double w = (i == 0 || i == n - 1) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    sum += w * f;
  }
  const double I = sum * hstep / 3.0;
  const double PhiTm_Wb = q.phi_Tm * units::Phi0_SI / (2.0 * pi);
  return std::sqrt(2.0 * units::GHz_to_joule(q.E_bT_GHz) / q.C_T_inv) *
         PhiTm_Wb / units::hbar_SI * I;
}

// ---------------------------------------------------------------------------
// Tunnel splitting with Aharonov-Casher interference.
// ---------------------------------------------------------------------------
struct TunnelSplitting {
  double Omega_ge_rad_s = 0.0;        // zero-phase splitting scale
  std::complex<double> combined;      // two-path amplitude, rad/s
  double amp_L = 0.0, amp_R = 0.0;    // per-path magnitudes, rad/s
};

inline TunnelSplitting tunnel_splitting(const AnalyticIntermediates& r,
                                        double Q_b_2e) {
  TunnelSplitting out;
  out.Omega_ge_rad_s = r.Omega_ge_rad_s;
  const double qb = 2.0 * pi * Q_b_2e;
  auto amp = [&](const PathQuantities& q) {
    return 0.5 * r.Omega_rad_s * std::sqrt(12.0 * q.S_Tb / pi) *
           std::exp(-q.S_Tb);
  };
  out.amp_L = amp(r.left);
  out.amp_R = amp(r.right);
  out.combined = out.amp_L + out.amp_R * std::exp(std::complex<double>(0, qb));
  return out;
}

// Vector sum of >= 2 tunneling amplitudes; the phase between successive paths
// advances by 2 pi times the island charge (in 2e) enclosed between them.
inline std::complex<double> multipath_interference(
    const std::vector<std::complex<double>>& amplitudes,
    const std::vector<double>& island_charges_2e) {
  if (amplitudes.size() < 2)
    throw std::invalid_argument("need at least two tunneling paths");
  if (island_charges_2e.size() + 1 != amplitudes.size())
    throw std::invalid_argument(
        "need exactly one island charge between each pair of successive paths");
  std::complex<double> sum = amplitudes[0];
  double phase = 0.0;
  for (size_t i = 1; i < amplitudes.size(); ++i) {
    phase += 2.0 * pi * island_charges_2e[i - 1];
    sum += amplitudes[i] * std::exp(std::complex<double>(0, phase));
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Effective two-level (spin) model.
// ---------------------------------------------------------------------------
inline TwoLevelModel two_level_model(const AnalyticJpsqParams& p) {
  const AnalyticIntermediates r = instanton_chain(p);
  TwoLevelModel m;
  const double dphiz = 2.0 * pi * p.dPhi_z_Phi0;
  const double qb = r.q_b;
  const double hOmega_ge_GHz =
      units::joule_to_GHz(units::hbar_SI * r.Omega_ge_rad_s);

  // H = -sz dphi^z E~_Ja cos(theta)
  //     + (hbar Omega_ge / 2) [sy cos(q_b/2) - sx sin(q_b/2) (S_0 - 1/2) ds]
  // mapped onto H = -(E^x sx + E^y sy + E^z sz):
  m.E_z_GHz = dphiz * r.EJa_tilde_GHz * std::cos(r.theta);
  m.E_y_GHz = -(hOmega_ge_GHz / 2.0) * std::cos(qb / 2.0);
  m.E_x_GHz = (hOmega_ge_GHz / 2.0) * std::sin(qb / 2.0) * (r.S_0 - 0.5) * r.ds;

  m.I_x_nA = units::e_SI * r.Omega_ge_rad_s * (r.S_0 - 0.5) * r.ds_per_dphix * 1e9;
  m.V_y_uV = units::Phi0_SI * r.Omega_ge_rad_s / 4.0 * 1e6;
  m.I_z_nA = r.ICa_tilde_nA * std::cos(r.theta);

  m.beta_large_ok = r.beta >= 5.0;
  m.dilute_instanton_ok = r.S_0 >= 3.0;
  return m;
}

// ---------------------------------------------------------------------------
// Published large-beta (small-theta) limit expressions.
// ---------------------------------------------------------------------------
struct LargeBetaLimits {
  double Omega_rad_s = 0.0;
  double S_0 = 0.0;
  double ds_per_dphix = 0.0;
  double k_6 = 0.0;  // theta -> 0 limit (pi^2 - 12) / 16
};

inline LargeBetaLimits large_beta_limits(const AnalyticJpsqParams& p) {
  const AnalyticIntermediates r = instanton_chain(p);
  const double c = std::cos(pi * p.Phi_Delta_Phi0);
  const double t = std::tan(pi * p.Phi_Delta_Phi0);
  LargeBetaLimits lim;
  lim.Omega_rad_s = r.omega_J_rad_s * std::sqrt(c * (pi * pi + 4.0) /
                                                (pi * pi * r.beta * (1.0 + r.r_C)));
  lim.S_0 = r.y_Ja * std::sqrt((1.0 + r.r_C) / (r.beta * (pi * pi + 4.0))) *
            2.0 * (pi * pi + 8.0) / 15.0;
  lim.ds_per_dphix =
      r.beta * t * (1.0 - 1.0 / pi + 2.0 * pi / (pi * pi + 4.0));
  lim.k_6 = (pi * pi - 12.0) / 16.0;
  return lim;
}

}  // namespace jpsq::analytic
