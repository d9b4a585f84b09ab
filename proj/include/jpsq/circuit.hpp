// SPDX-License-Identifier: MIT
//
// Circuit description: nodes, branches (junction / capacitor / inductor),
// mutual inductances, flux loops and charge islands.  Values use the library
// unit system (GHz, fF, pH, Phi0, 2e).

#pragma once

#include <Eigen/Dense>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "jpsq/linexpr.hpp"

namespace jpsq {

enum class BranchKind { Junction, Capacitor, Inductor };

inline const char* to_string(BranchKind k) {
  switch (k) {
    case BranchKind::Junction: return "junction";
    case BranchKind::Capacitor: return "capacitor";
    case BranchKind::Inductor: return "inductor";
  }
  return "?";
}

struct Branch {
  std::string name;
  BranchKind kind = BranchKind::Capacitor;
  std::string node_a, node_b;
  double value = 0.0;   // junction: E_J (GHz); capacitor: C (fF); inductor: L (pH)
  double cap_fF = 0.0;  // junction shunt capacitance
  friend bool operator==(const Branch&, const Branch&) = default;
};

// Mutual inductance declared on a pair of inductor branch tags.
struct Mutual {
  std::string name;
  std::string inductor_a, inductor_b;
  double M_pH = 0.0;
  friend bool operator==(const Mutual&, const Mutual&) = default;
};

// A closed loop given as signed branch tags; its external flux is a linear
// expression over bias names, in units of Phi0.
struct LoopSpec {
  std::string name;
  std::vector<std::pair<int, std::string>> branches;  // sign (+1/-1), tag
  LinExpr flux;
  friend bool operator==(const LoopSpec&, const LoopSpec&) = default;
};

// A charge island: names the node whose total offset charge (in 2e) is set
// from the bias point under this island's name.
struct IslandSpec {
  std::string name;
  std::string node;
  friend bool operator==(const IslandSpec&, const IslandSpec&) = default;
};

struct CircuitSpec {
  std::string name = "circuit";
  std::string ground = "g";
  std::vector<std::string> nodes;  // excludes ground
  std::vector<Branch> branches;
  std::vector<Mutual> mutuals;
  std::vector<LoopSpec> loops;
  std::vector<IslandSpec> islands;
  std::map<std::string, double> bias_defaults;

  int node_index(const std::string& n) const {
    for (size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i] == n) return static_cast<int>(i);
    return -1;
  }
  bool is_ground(const std::string& n) const { return n == ground; }
  const Branch* find_branch(const std::string& tag) const {
    for (const auto& b : branches)
      if (b.name == tag) return &b;
    return nullptr;
  }
  friend bool operator==(const CircuitSpec&, const CircuitSpec&) = default;
};

// Bias values: fluxes by bias name (Phi0), island charges by island name (2e).
struct BiasPoint {
  std::map<std::string, double> fluxes;
  std::map<std::string, double> charges;

  double charge_or_zero(const std::string& island) const {
    auto it = charges.find(island);
    return it == charges.end() ? 0.0 : it->second;
  }
};

// Bias point made from a spec's declared defaults: entries named after an
// island become charges, everything else a flux bias.
inline BiasPoint default_bias(const CircuitSpec& spec) {
  BiasPoint bp;
  auto is_island = [&](const std::string& n) {
    for (const auto& i : spec.islands)
      if (i.name == n) return true;
    return false;
  };
  for (const auto& [k, v] : spec.bias_defaults)
    (is_island(k) ? bp.charges : bp.fluxes)[k] = v;
  return bp;
}

struct ValidationIssue {
  std::string code;     // stable machine-readable tag
  std::string message;  // human-readable, names the offending element
};

struct ValidationReport {
  bool pass = true;
  std::vector<ValidationIssue> issues;

  void fail(std::string code, std::string message) {
    pass = false;
    issues.push_back({std::move(code), std::move(message)});
  }
  std::string summary() const {
    if (pass) return "pass";
    std::string s;
    for (const auto& i : issues) s += i.code + ": " + i.message + "\n";
    return s;
  }
};

// Node-basis Maxwell capacitance matrix over non-ground nodes, fF.
inline Eigen::MatrixXd capacitance_matrix(const CircuitSpec& spec) {
  const int n = static_cast<int>(spec.nodes.size());
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, n);
  auto add = [&](const std::string& a, const std::string& b, double c) {
    if (c <= 0.0) return;
    const int ia = spec.node_index(a), ib = spec.node_index(b);
    if (ia >= 0) C(ia, ia) += c;
    if (ib >= 0) C(ib, ib) += c;
    if (ia >= 0 && ib >= 0) {
      C(ia, ib) -= c;
      C(ib, ia) -= c;
    }
  };
  for (const auto& b : spec.branches) {
    if (b.kind == BranchKind::Capacitor) add(b.node_a, b.node_b, b.value);
    if (b.kind == BranchKind::Junction) add(b.node_a, b.node_b, b.cap_fF);
  }
  return C;
}

inline ValidationReport validate(const CircuitSpec& spec) {
  ValidationReport rep;

  if (spec.ground.empty()) rep.fail("ground-missing", "ground node must be named");
  std::set<std::string> node_set;
  for (const auto& n : spec.nodes) {
    if (n.empty()) rep.fail("node-empty", "empty node name");
    if (n == spec.ground)
      rep.fail("node-ground-clash", "node '" + n + "' duplicates the ground name");
    if (!node_set.insert(n).second)
      rep.fail("node-duplicate", "duplicate node '" + n + "'");
  }

  auto known_node = [&](const std::string& n) {
    return n == spec.ground || node_set.count(n) > 0;
  };

  std::set<std::string> branch_set;
  std::map<std::string, const Branch*> inductors;
  for (const auto& b : spec.branches) {
    if (!branch_set.insert(b.name).second)
      rep.fail("branch-duplicate", "duplicate branch '" + b.name + "'");
    if (!known_node(b.node_a) || !known_node(b.node_b))
      rep.fail("branch-unknown-node",
               "branch '" + b.name + "' references an unknown node");
    if (b.node_a == b.node_b)
      rep.fail("branch-self-loop", "branch '" + b.name + "' connects a node to itself");
    switch (b.kind) {
      case BranchKind::Junction:
        if (!(b.value > 0.0))
          rep.fail("junction-energy", "junction '" + b.name + "' needs E_J > 0");
        if (b.cap_fF < 0.0)
          rep.fail("junction-cap", "junction '" + b.name + "' has negative capacitance");
        break;
      case BranchKind::Capacitor:
        if (!(b.value > 0.0))
          rep.fail("capacitor-value", "capacitor '" + b.name + "' needs C > 0");
        break;
      case BranchKind::Inductor:
        if (!(b.value > 0.0))
          rep.fail("inductor-value", "inductor '" + b.name + "' needs L > 0");
        inductors[b.name] = &b;
        break;
    }
  }

  std::set<std::string> mutual_set;
  for (const auto& m : spec.mutuals) {
    if (!mutual_set.insert(m.name).second)
      rep.fail("mutual-duplicate", "duplicate mutual '" + m.name + "'");
    auto a = inductors.find(m.inductor_a), b = inductors.find(m.inductor_b);
    if (a == inductors.end()) {
      rep.fail("mutual-unknown-inductor",
               "mutual '" + m.name + "' references missing inductor '" +
                   m.inductor_a + "'");
      continue;
    }
    if (b == inductors.end()) {
      rep.fail("mutual-unknown-inductor",
               "mutual '" + m.name + "' references missing inductor '" +
                   m.inductor_b + "'");
      continue;
    }
    if (m.inductor_a == m.inductor_b)
      rep.fail("mutual-self", "mutual '" + m.name + "' couples an inductor to itself");
    else if (!(std::abs(m.M_pH) <
               std::sqrt(a->second->value * b->second->value)))
      rep.fail("mutual-too-strong",
               "mutual '" + m.name + "' violates |M| < sqrt(L_a L_b)");
  }

  std::set<std::string> loop_set;
  for (const auto& l : spec.loops) {
    if (!loop_set.insert(l.name).second)
      rep.fail("loop-duplicate", "duplicate loop '" + l.name + "'");
    if (l.branches.empty()) {
      rep.fail("loop-empty", "loop '" + l.name + "' has no branches");
      continue;
    }
    // signed endpoints must telescope to a closed cycle
    std::map<std::string, int> degree;
    bool ok = true;
    for (const auto& [sign, tag] : l.branches) {
      const Branch* b = spec.find_branch(tag);
      if (!b) {
        rep.fail("loop-unknown-branch",
                 "loop '" + l.name + "' references missing branch '" + tag + "'");
        ok = false;
        continue;
      }
      if (sign != 1 && sign != -1) {
        rep.fail("loop-bad-sign", "loop '" + l.name + "' has a sign other than +-1");
        ok = false;
        continue;
      }
      degree[b->node_a] += sign;
      degree[b->node_b] -= sign;
    }
    if (ok)
      for (const auto& [node, d] : degree)
        if (d != 0) {
          rep.fail("loop-not-closed",
                   "loop '" + l.name + "' is not a closed cycle (node '" + node +
                       "' unbalanced)");
          break;
        }
    for (const auto& v : l.flux.variables())
      if (!spec.bias_defaults.count(v))
        rep.fail("bias-undeclared",
                 "loop '" + l.name + "' uses undeclared bias '" + v + "'");
  }

  std::set<std::string> island_set;
  for (const auto& isl : spec.islands) {
    if (!island_set.insert(isl.name).second)
      rep.fail("island-duplicate", "duplicate island '" + isl.name + "'");
    if (!node_set.count(isl.node))
      rep.fail("island-unknown-node",
               "island '" + isl.name + "' references unknown node '" + isl.node + "'");
    for (const auto& l : spec.loops)
      for (const auto& v : l.flux.variables())
        if (v == isl.name)
          rep.fail("island-bias-clash",
                   "island '" + isl.name + "' shares its name with a flux bias");
  }

  // The Maxwell capacitance matrix is positive definite exactly when every
  // node reaches ground through capacitive edges; a floating capacitive
  // island contributes a Laplacian null vector.  Typical culprit: an
  // inductor-only node that needs a small parasitic shunt to ground.
  if (rep.pass && !spec.nodes.empty()) {
    const int n = static_cast<int>(spec.nodes.size());
    std::vector<int> parent(n + 1);  // index n = ground
    for (int i = 0; i <= n; ++i) parent[i] = i;
    auto find = [&](int i) {
      while (parent[i] != i) i = parent[i] = parent[parent[i]];
      return i;
    };
    auto join = [&](const std::string& a, const std::string& b) {
      const int ia = spec.is_ground(a) ? n : spec.node_index(a);
      const int ib = spec.is_ground(b) ? n : spec.node_index(b);
      parent[find(ia)] = find(ib);
    };
    for (const auto& b : spec.branches) {
      if (b.kind == BranchKind::Capacitor && b.value > 0.0) join(b.node_a, b.node_b);
      if (b.kind == BranchKind::Junction && b.cap_fF > 0.0) join(b.node_a, b.node_b);
    }
    std::map<int, std::string> floating;  // root -> node list
    for (int i = 0; i < n; ++i) {
      const int r = find(i);
      if (r == find(n)) continue;
      auto& list = floating[r];
      list += (list.empty() ? "" : ", ") + spec.nodes[i];
    }
    for (const auto& [root, list] : floating)
      rep.fail("cap-matrix-singular",
               "capacitance matrix is singular: node(s) " + list +
                   " have no capacitive path to ground -- a small parasitic "
                   "shunt (C_0-style) fixes the kinetic term");
  }

  return rep;
}

}  // namespace jpsq
