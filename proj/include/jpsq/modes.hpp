// SPDX-License-Identifier: MIT
//
// Mode decomposition.  Nodes are grouped by connected components of the
// inductor graph:
//
//   * components that reach ground keep their node fluxes as oscillator
//     coordinates (one per non-ground node);
//   * a floating component (no inductive path to ground) gets one periodic
//     mode -- its conjugate charge is the component's total charge, which is
//     integer-quantized -- plus size-1 oscillators for the fluxes relative
//     to the component root.
//
// The root of a floating component is its lowest-index declared island node
// when one exists, otherwise its lowest-index node.  A node with no
// inductors at all is a size-1 floating component, i.e. purely periodic.

#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "jpsq/circuit.hpp"

namespace jpsq {

struct Mode {
  enum class Kind { Periodic, Oscillator };
  Kind kind = Kind::Oscillator;
  std::string label;
  int component = -1;  // floating-component id, or -1 for the ground component
};

struct ModeDecomposition {
  std::vector<Mode> modes;  // one per non-ground node, quantizer ordering
  // theta = T * phi maps node fluxes to mode coordinates; phi = Tinv * theta.
  // Conjugate charges map as Q = Tinv^T * q, so a periodic row (theta = phi_root)
  // carries the summed component charge.
  Eigen::MatrixXd T, Tinv;
  // nodes of each floating component (indices into spec.nodes)
  std::vector<std::vector<int>> floating_components;
  // per floating component: declared island names found on its nodes
  std::vector<std::vector<std::string>> component_islands;

  int n_periodic() const {
    int k = 0;
    for (const auto& m : modes) k += m.kind == Mode::Kind::Periodic;
    return k;
  }
  int n_oscillator() const { return static_cast<int>(modes.size()) - n_periodic(); }
};

inline ModeDecomposition decompose_modes(const CircuitSpec& spec) {
  const int n = static_cast<int>(spec.nodes.size());
  const int G = n;  // ground's slot in the union-find
  std::vector<int> parent(n + 1);
  for (int i = 0; i <= n; ++i) parent[i] = i;
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  auto slot = [&](const std::string& name) {
    return spec.is_ground(name) ? G : spec.node_index(name);
  };
  for (const auto& b : spec.branches)
    if (b.kind == BranchKind::Inductor)
      parent[find(slot(b.node_a))] = find(slot(b.node_b));

  ModeDecomposition dec;
  dec.T = Eigen::MatrixXd::Zero(n, n);
  dec.modes.resize(n);

  // collect floating components in order of their lowest node index
  std::vector<int> comp_of(n, -1);
  for (int i = 0; i < n; ++i) {
    if (find(i) == find(G)) continue;
    const int root = find(i);
    bool seen = false;
    for (const auto& c : dec.floating_components)
      if (find(c.front()) == root) seen = true;
    if (seen) continue;
    std::vector<int> members;
    for (int j = 0; j < n; ++j)
      if (find(j) == root) members.push_back(j);
    for (int j : members) comp_of[j] = static_cast<int>(dec.floating_components.size());
    dec.floating_components.push_back(std::move(members));
  }

  dec.component_islands.resize(dec.floating_components.size());
  for (const auto& isl : spec.islands) {
    const int node = spec.node_index(isl.node);
    if (node >= 0 && comp_of[node] >= 0)
      dec.component_islands[comp_of[node]].push_back(isl.name);
  }

  // Mode rows.  Keep the node ordering: ground-component nodes keep their
  // own row; a floating component places its periodic row at the root node's
  // slot and relative rows at the member slots.
  for (int i = 0; i < n; ++i) {
    if (comp_of[i] < 0) {
      dec.T(i, i) = 1.0;
      dec.modes[i] = {Mode::Kind::Oscillator, "osc(" + spec.nodes[i] + ")", -1};
    }
  }
  for (size_t c = 0; c < dec.floating_components.size(); ++c) {
    const auto& members = dec.floating_components[c];
    int root = -1;
    for (const auto& isl : spec.islands) {
      const int node = spec.node_index(isl.node);
      if (node >= 0 && comp_of[node] == static_cast<int>(c) &&
          (root < 0 || node < root))
        root = node;
    }
    if (root < 0) root = members.front();  // members are sorted by index

    std::string pl = "periodic(" + spec.nodes[root];
    if (!dec.component_islands[c].empty())
      pl += ":" + dec.component_islands[c].front();
    pl += ")";
    dec.T(root, root) = 1.0;
    dec.modes[root] = {Mode::Kind::Periodic, pl, static_cast<int>(c)};
    for (int j : members) {
      if (j == root) continue;
      dec.T(j, j) = 1.0;
      dec.T(j, root) = -1.0;
      dec.modes[j] = {Mode::Kind::Oscillator,
                      "osc(" + spec.nodes[j] + "-" + spec.nodes[root] + ")",
                      static_cast<int>(c)};
    }
  }

  dec.Tinv = dec.T.inverse();
  return dec;
}

}  // namespace jpsq
