// SPDX-License-Identifier: MIT
//
// Circuit quantization.  build_model() turns a CircuitSpec into an immutable
// QuantizedModel: mode bases (charge basis on periodic modes, harmonic基
// oscillator bases elsewhere), the inverse-capacitance and inductive-energy
// matrices in mode coordinates, and the Josephson cosine terms with their
// external-flux offset expressions.  All heavy operator pieces (displacement
// factors e^{i lambda (a+a\dag)}, charge shifts) are built once here; bias
// values only enter build_hamiltonian() as scalar phases and charge offsets,
// so sweeping a flux is cheap and trivially parallel.
//
// Unit system: energies GHz, capacitances fF, inductances pH, phases rad,
// charges in Cooper pairs.  H = sum_mn 4 E_C1 Cinv_mn (Q_m - q0_m)(Q_n - q0_n)
//   + 1/2 sum_mn K_mn theta_m theta_n - sum_j E_J cos(w_j . theta + o_j).

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "jpsq/circuit.hpp"
#include "jpsq/constants.hpp"
#include "jpsq/modes.hpp"
#include "jpsq/tensorops.hpp"

namespace jpsq {

struct TruncationOptions {
  int periodic_n_max = 10;  // charge states n in [-n_max, n_max]
  int plasma_levels = 8;    // oscillators inside floating (SQUID-arm) components
  int loop_levels = 15;     // oscillators in the ground component
  // per-node override: n_max for a periodic mode, level count for an oscillator
  std::map<std::string, int> per_node;
};

// Scale every truncation up (used by the convergence report).
inline TruncationOptions boosted(TruncationOptions t, double factor = 1.5) {
  auto up = [&](int v) { return static_cast<int>(std::ceil(v * factor)); };
  t.periodic_n_max = up(t.periodic_n_max);
  t.plasma_levels = up(t.plasma_levels);
  t.loop_levels = up(t.loop_levels);
  for (auto& [node, v] : t.per_node) v = up(v);
  return t;
}

struct ModeBasis {
  Mode::Kind kind = Mode::Kind::Oscillator;
  std::string label;
  std::string node;  // home node (component root for periodic modes)
  int dim = 0;
  int n_max = 0;  // periodic only
  // oscillator only: basis frequency/impedance from the inductive part alone
  double EC_GHz = 0.0, EL_GHz = 0.0;
  double omega_GHz = 0.0, theta_zpf = 0.0, n_zpf = 0.0, Z_ohm = 0.0;
};

struct JosephsonTerm {
  std::string branch;
  double EJ_GHz = 0.0;
  Eigen::VectorXd coeffs;  // phase-argument coefficient per mode
  LinExpr offset_Phi0;     // external flux offset in Phi0 (2*pi*value in rad)
  // cached local factors of e^{+i w.theta}; the adjoint gives e^{-i w.theta}
  std::vector<std::pair<int, Eigen::MatrixXcd>> plus_factors;
};

struct QuantizedModel {
  CircuitSpec spec;
  ModeDecomposition decomposition;
  std::vector<ModeBasis> modes;
  std::vector<int> dims;
  long long hilbert_dim = 1;

  Eigen::MatrixXd cap_inverse;  // mode coordinates, 1/fF
  Eigen::MatrixXd ind_matrix;   // K, GHz/rad^2: inductive energy = 1/2 th^T K th
  std::vector<JosephsonTerm> josephson_terms;

  // islands whose offset charge feeds each (periodic) mode
  std::vector<std::vector<std::string>> mode_islands;

  // local operators: charge (diag n, or n_zpf i(adag-a)) and theta (osc only)
  std::vector<Eigen::MatrixXcd> op_charge, op_theta;
};

namespace qdetail {

inline Eigen::MatrixXcd charge_shift(int dim, int k) {
  Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 0; n < dim; ++n)
    if (n + k >= 0 && n + k < dim) S(n + k, n) = 1.0;
  return S;
}

// eigendecomposition of X = a + a\dag in a truncated Fock basis
struct XEigen {
  Eigen::MatrixXd V;
  Eigen::VectorXd lam;
};

inline XEigen x_eigen(int dim) {
  Eigen::MatrixXd X = Eigen::MatrixXd::Zero(dim, dim);
  for (int n = 0; n + 1 < dim; ++n) X(n, n + 1) = X(n + 1, n) = std::sqrt(n + 1.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(X);
  return {es.eigenvectors(), es.eigenvalues()};
}

inline Eigen::MatrixXcd displacement(const XEigen& xe, double lambda) {
  const Eigen::VectorXcd phases =
      (cxd(0, 1) * lambda * xe.lam.array()).exp().matrix();
  return xe.V * phases.asDiagonal() * xe.V.transpose();
}

// Assign loop fluxes to junction offsets: Gaussian elimination over junction
// columns, greedily pivoting on the junction shared with the fewest other
// loops so bias-dependent phases touch as few cosines as possible.
inline std::vector<LinExpr> allocate_offsets(const CircuitSpec& spec,
                                             const std::vector<int>& junction_ids) {
  const int nl = static_cast<int>(spec.loops.size());
  const int nj = static_cast<int>(junction_ids.size());
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(nl, nj);
  std::vector<LinExpr> rhs(nl);
  std::map<std::string, int> col_of;
  for (int j = 0; j < nj; ++j)
    col_of[spec.branches[junction_ids[j]].name] = j;
  for (int l = 0; l < nl; ++l) {
    rhs[l] = spec.loops[l].flux;
    for (const auto& [sign, tag] : spec.loops[l].branches) {
      auto it = col_of.find(tag);
      if (it != col_of.end()) B(l, it->second) += sign;
    }
  }

  constexpr double tol = 1e-9;
  std::vector<int> pivot_col(nl, -1);
  std::vector<bool> col_used(nj, false);
  for (int l = 0; l < nl; ++l) {
    int best = -1, best_uses = -1;
    for (int j = 0; j < nj; ++j) {
      if (col_used[j] || std::abs(B(l, j)) < tol) continue;
      int uses = 0;
      for (int l2 = 0; l2 < nl; ++l2)
        if (l2 != l && std::abs(B(l2, j)) > tol) ++uses;
      if (best < 0 || uses < best_uses) {
        best = j;
        best_uses = uses;
      }
    }
    if (best < 0) {
      if (rhs[l].distance(LinExpr{}) > tol)
        throw std::invalid_argument(
            "loop '" + spec.loops[l].name +
            "' carries external flux but has no Josephson branch left to "
            "host its offset");
      continue;  // dependent loop with consistent (zero) flux
    }
    pivot_col[l] = best;
    col_used[best] = true;
    for (int l2 = 0; l2 < nl; ++l2) {
      if (l2 == l || std::abs(B(l2, best)) < tol) continue;
      const double f = B(l2, best) / B(l, best);
      B.row(l2) -= f * B.row(l);
      LinExpr t = rhs[l];
      t *= f;
      rhs[l2] -= t;
    }
  }

  std::vector<LinExpr> offsets(nj);  // default zero
  for (int l = 0; l < nl; ++l) {
    if (pivot_col[l] < 0) continue;
    LinExpr v = rhs[l];
    v *= 1.0 / B(l, pivot_col[l]);
    offsets[pivot_col[l]] = v;
  }
  return offsets;
}

}  // namespace qdetail

inline QuantizedModel build_model(const CircuitSpec& spec,
                                  const TruncationOptions& trunc = {}) {
  const auto rep = validate(spec);
  if (!rep.pass)
    throw std::invalid_argument("circuit failed validation:\n" + rep.summary());
  const int n = static_cast<int>(spec.nodes.size());
  if (n == 0) throw std::invalid_argument("circuit has no non-ground nodes");

  QuantizedModel model;
  model.spec = spec;
  model.decomposition = decompose_modes(spec);
  const auto& dec = model.decomposition;

  // capacitance: Cinv in mode coordinates (charges map with Tinv^T)
  const Eigen::MatrixXd C = capacitance_matrix(spec);
  const Eigen::MatrixXd Cinv_node =
      C.llt().solve(Eigen::MatrixXd::Identity(n, n));
  model.cap_inverse = dec.T * Cinv_node * dec.T.transpose();

  // inductive branches: quadratic energy in mode coordinates
  std::vector<int> inductor_ids, junction_ids;
  for (int b = 0; b < static_cast<int>(spec.branches.size()); ++b) {
    if (spec.branches[b].kind == BranchKind::Inductor) inductor_ids.push_back(b);
    if (spec.branches[b].kind == BranchKind::Junction) junction_ids.push_back(b);
  }
  const int ni = static_cast<int>(inductor_ids.size());
  Eigen::MatrixXd Lmat = Eigen::MatrixXd::Zero(ni, ni);
  for (int i = 0; i < ni; ++i) Lmat(i, i) = spec.branches[inductor_ids[i]].value;
  for (const auto& m : spec.mutuals) {
    int ia = -1, ib = -1;
    for (int i = 0; i < ni; ++i) {
      if (spec.branches[inductor_ids[i]].name == m.inductor_a) ia = i;
      if (spec.branches[inductor_ids[i]].name == m.inductor_b) ib = i;
    }
    Lmat(ia, ib) += m.M_pH;
    Lmat(ib, ia) += m.M_pH;
  }
  Eigen::MatrixXd K = Eigen::MatrixXd::Zero(n, n);
  if (ni > 0) {
    Eigen::LLT<Eigen::MatrixXd> llt(Lmat);
    if (llt.info() != Eigen::Success)
      throw std::invalid_argument(
          "inductance matrix is not positive definite: an inductive cycle "
          "has zero or negative net inductance (check mutual couplings)");
    Eigen::MatrixXd W(ni, n);  // branch phase rows in mode coordinates
    for (int i = 0; i < ni; ++i) {
      const Branch& b = spec.branches[inductor_ids[i]];
      Eigen::RowVectorXd a = Eigen::RowVectorXd::Zero(n);
      if (!spec.is_ground(b.node_a)) a(spec.node_index(b.node_a)) += 1.0;
      if (!spec.is_ground(b.node_b)) a(spec.node_index(b.node_b)) -= 1.0;
      W.row(i) = a * dec.Tinv;
    }
    const Eigen::MatrixXd Linv =
        llt.solve(Eigen::MatrixXd::Identity(ni, ni));
    K = units::inductive_energy_GHz(1.0) * W.transpose() * Linv * W;
    for (int m = 0; m < n; ++m)
      if (dec.modes[m].kind == Mode::Kind::Periodic &&
          K.row(m).cwiseAbs().maxCoeff() > 1e-9 * K.cwiseAbs().maxCoeff())
        throw std::logic_error("inductive energy leaked into a periodic mode");
  }
  model.ind_matrix = K;

  // mode bases
  model.modes.resize(n);
  model.mode_islands.assign(n, {});
  for (size_t c = 0; c < dec.floating_components.size(); ++c)
    for (int i : dec.floating_components[c])
      if (dec.modes[i].kind == Mode::Kind::Periodic)
        model.mode_islands[i] = dec.component_islands[c];
  for (int i = 0; i < n; ++i) {
    ModeBasis& mb = model.modes[i];
    mb.kind = dec.modes[i].kind;
    mb.label = dec.modes[i].label;
    mb.node = spec.nodes[i];
    const auto ov = trunc.per_node.find(mb.node);
    if (mb.kind == Mode::Kind::Periodic) {
      mb.n_max = ov != trunc.per_node.end() ? ov->second : trunc.periodic_n_max;
      if (mb.n_max < 1)
        throw std::invalid_argument("periodic mode '" + mb.node +
                                    "' needs n_max >= 1");
      mb.dim = 2 * mb.n_max + 1;
    } else {
      mb.dim = ov != trunc.per_node.end()
                   ? ov->second
                   : (dec.modes[i].component < 0 ? trunc.loop_levels
                                                 : trunc.plasma_levels);
      if (mb.dim < 2)
        throw std::invalid_argument("oscillator mode '" + mb.node +
                                    "' needs at least 2 levels");
      mb.EC_GHz = units::charging_energy_GHz(1.0) * model.cap_inverse(i, i);
      mb.EL_GHz = K(i, i);
      if (!(mb.EL_GHz > 0.0))
        throw std::logic_error("oscillator mode '" + mb.node +
                               "' has no inductive stiffness");
      mb.omega_GHz = std::sqrt(8.0 * mb.EC_GHz * mb.EL_GHz);
      mb.theta_zpf = std::pow(2.0 * mb.EC_GHz / mb.EL_GHz, 0.25);
      mb.n_zpf = 0.5 / mb.theta_zpf;
      mb.Z_ohm = units::RQ_SI / units::pi * mb.theta_zpf * mb.theta_zpf;
    }
  }
  model.dims.resize(n);
  model.hilbert_dim = 1;
  for (int i = 0; i < n; ++i) {
    model.dims[i] = model.modes[i].dim;
    model.hilbert_dim *= model.modes[i].dim;
  }

  // local charge / theta operators
  model.op_charge.resize(n);
  model.op_theta.resize(n);
  std::map<int, qdetail::XEigen> xeig;
  for (int i = 0; i < n; ++i) {
    const int d = model.modes[i].dim;
    if (model.modes[i].kind == Mode::Kind::Periodic) {
      Eigen::VectorXcd nv(d);
      for (int k = 0; k < d; ++k) nv(k) = double(k - model.modes[i].n_max);
      model.op_charge[i] = nv.asDiagonal();
      model.op_theta[i] = Eigen::MatrixXcd::Zero(d, d);
    } else {
      Eigen::MatrixXcd Q = Eigen::MatrixXcd::Zero(d, d);
      for (int k = 0; k + 1 < d; ++k) {
        const double s = std::sqrt(k + 1.0);
        Q(k + 1, k) = cxd(0, 1) * model.modes[i].n_zpf * s;   // i a\dag
        Q(k, k + 1) = cxd(0, -1) * model.modes[i].n_zpf * s;  // -i a
      }
      model.op_charge[i] = Q;
      if (!xeig.count(d)) xeig[d] = qdetail::x_eigen(d);
      Eigen::MatrixXcd th = Eigen::MatrixXcd::Zero(d, d);
      for (int k = 0; k + 1 < d; ++k) {
        const double s = model.modes[i].theta_zpf * std::sqrt(k + 1.0);
        th(k + 1, k) = s;
        th(k, k + 1) = s;
      }
      model.op_theta[i] = th;
    }
  }

  // Josephson terms with cached e^{+i w.theta} factors
  const auto offsets = qdetail::allocate_offsets(spec, junction_ids);
  std::map<std::pair<int, double>, Eigen::MatrixXcd> disp_cache;
  for (size_t j = 0; j < junction_ids.size(); ++j) {
    const Branch& b = spec.branches[junction_ids[j]];
    Eigen::RowVectorXd a = Eigen::RowVectorXd::Zero(n);
    if (!spec.is_ground(b.node_a)) a(spec.node_index(b.node_a)) += 1.0;
    if (!spec.is_ground(b.node_b)) a(spec.node_index(b.node_b)) -= 1.0;
    JosephsonTerm term;
    term.branch = b.name;
    term.EJ_GHz = b.value;
    term.coeffs = (a * dec.Tinv).transpose();
    term.offset_Phi0 = offsets[j];
    for (int m = 0; m < n; ++m) {
      const double w = term.coeffs(m);
      if (std::abs(w) < 1e-12) continue;
      if (model.modes[m].kind == Mode::Kind::Periodic) {
        const double r = std::round(w);
        if (std::abs(w - r) > 1e-9)
          throw std::invalid_argument(
              "junction '" + b.name +
              "' has a non-integer coefficient on periodic mode '" +
              model.modes[m].node + "'");
        term.plus_factors.emplace_back(
            m, qdetail::charge_shift(model.modes[m].dim, static_cast<int>(r)));
      } else {
        const double lambda = w * model.modes[m].theta_zpf;
        auto key = std::make_pair(m, lambda);
        auto it = disp_cache.find(key);
        if (it == disp_cache.end()) {
          if (!xeig.count(model.modes[m].dim))
            xeig[model.modes[m].dim] = qdetail::x_eigen(model.modes[m].dim);
          it = disp_cache
                   .emplace(key, qdetail::displacement(
                                     xeig[model.modes[m].dim], lambda))
                   .first;
        }
        term.plus_factors.emplace_back(m, it->second);
      }
    }
    model.josephson_terms.push_back(std::move(term));
  }

  return model;
}

// cos(w.theta + offset_rad) as an operator (used for junction terms and by
// tests); requires integer coefficients on periodic modes.
inline OperatorSum cosine_operator(const QuantizedModel& model,
                                   const Eigen::VectorXd& coeffs,
                                   double offset_rad) {
  const int n = static_cast<int>(model.modes.size());
  if (coeffs.size() != n)
    throw std::invalid_argument("coefficient vector has wrong length");
  std::vector<std::pair<int, Eigen::MatrixXcd>> plus;
  std::map<int, qdetail::XEigen> xeig;
  for (int m = 0; m < n; ++m) {
    const double w = coeffs(m);
    if (std::abs(w) < 1e-12) continue;
    if (model.modes[m].kind == Mode::Kind::Periodic) {
      const double r = std::round(w);
      if (std::abs(w - r) > 1e-9)
        throw std::invalid_argument(
            "non-integer coefficient on periodic mode '" +
            model.modes[m].node + "'");
      plus.emplace_back(
          m, qdetail::charge_shift(model.modes[m].dim, static_cast<int>(r)));
    } else {
      if (!xeig.count(model.modes[m].dim))
        xeig[model.modes[m].dim] = qdetail::x_eigen(model.modes[m].dim);
      plus.emplace_back(m, qdetail::displacement(xeig[model.modes[m].dim],
                                                 w * model.modes[m].theta_zpf));
    }
  }
  auto minus = plus;
  for (auto& [m, op] : minus) op = op.adjoint().eval();
  OperatorSum cosop(model.dims);
  const cxd half_phase = 0.5 * std::exp(cxd(0, 1) * offset_rad);
  if (plus.empty()) {
    cosop.add_scalar(half_phase + std::conj(half_phase));
    return cosop;
  }
  cosop.add_term(half_phase, plus);
  cosop.add_term(std::conj(half_phase), minus);
  return cosop;
}

// Hamiltonian at a bias point.  Flux biases are mandatory wherever an offset
// expression references them; island charges default to zero.  Islands named
// in odd_islands get the half-Cooper-pair (odd parity) charge shift.
inline OperatorSum build_hamiltonian(const QuantizedModel& model,
                                     const BiasPoint& bias,
                                     const std::set<std::string>& odd_islands = {}) {
  const int n = static_cast<int>(model.modes.size());
  OperatorSum H(model.dims);

  // effective charge operators (periodic modes absorb the island offset)
  std::vector<Eigen::MatrixXcd> Q(n);
  for (int m = 0; m < n; ++m) {
    Q[m] = model.op_charge[m];
    if (model.modes[m].kind == Mode::Kind::Periodic) {
      double q0 = 0.0;
      for (const auto& isl : model.mode_islands[m]) {
        q0 += bias.charge_or_zero(isl);
        if (odd_islands.count(isl)) q0 += 0.5;
      }
      if (q0 != 0.0)
        Q[m] -= q0 * Eigen::MatrixXcd::Identity(model.dims[m], model.dims[m]);
    }
  }

  const double EC1 = units::charging_energy_GHz(1.0);
  for (int m = 0; m < n; ++m) {
    const double cmm = 4.0 * EC1 * model.cap_inverse(m, m);
    if (cmm != 0.0) H.add_term(cmm, {{m, (Q[m] * Q[m]).eval()}});
    for (int k = m + 1; k < n; ++k) {
      const double cmk = 8.0 * EC1 * model.cap_inverse(m, k);
      if (std::abs(cmk) > 1e-15 * EC1)
        H.add_term(cmk, {{m, Q[m]}, {k, Q[k]}});
    }
  }

  const double kscale = model.ind_matrix.cwiseAbs().maxCoeff();
  for (int m = 0; m < n; ++m) {
    if (model.modes[m].kind != Mode::Kind::Oscillator) continue;
    const double kmm = 0.5 * model.ind_matrix(m, m);
    if (kmm != 0.0)
      H.add_term(kmm, {{m, (model.op_theta[m] * model.op_theta[m]).eval()}});
    for (int k = m + 1; k < n; ++k) {
      const double kmk = model.ind_matrix(m, k);
      if (std::abs(kmk) > 1e-15 * std::max(kscale, 1.0))
        H.add_term(kmk, {{m, model.op_theta[m]}, {k, model.op_theta[k]}});
    }
  }

  for (const auto& jt : model.josephson_terms) {
    const double off_rad =
        2.0 * units::pi * jt.offset_Phi0.evaluate(bias.fluxes);
    const cxd c = -0.5 * jt.EJ_GHz * std::exp(cxd(0, 1) * off_rad);
    if (jt.plus_factors.empty()) {
      H.add_scalar(c + std::conj(c));
      continue;
    }
    auto minus = jt.plus_factors;
    for (auto& [m, op] : minus) op = op.adjoint().eval();
    H.add_term(c, jt.plus_factors);
    H.add_term(std::conj(c), minus);
  }

  return H;
}

}  // namespace jpsq
