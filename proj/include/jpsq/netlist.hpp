// SPDX-License-Identifier: MIT
//
// Plain-text netlist format.  A document is a sequence of sections:
//
//   name my_circuit
//
//   [defaults.units]
//   energy GHz
//   capacitance fF
//   inductance pH
//   flux Phi0
//   charge 2e
//
//   [nodes]
//   ground g
//   node n1
//
//   [branches]
//   junction  J1  g n1   EJ=117 C=4.42
//   inductor  L1  n1 g   L=110
//   capacitor Cs  n1 g   C=35
//
//   [mutuals]
//   mutual M1 L1 L2 M=25
//
//   [loops]
//   loop main flux="0.5 + dPhiZ" +J1 +L1
//
//   [islands]
//   island isl n1
//
//   [bias]
//   dPhiZ 0
//
// '#' starts a comment.  parse_netlist and serialize_netlist round-trip.

#pragma once

#include <charconv>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "jpsq/circuit.hpp"

namespace jpsq {

class NetlistError : public std::runtime_error {
 public:
  NetlistError(int line, int column, const std::string& message)
      : std::runtime_error("netlist:" + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

namespace detail {

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

// Split a line into whitespace-separated tokens; a double-quoted span (after
// a 'key=' prefix or standalone) is kept as one token without the quotes.
inline std::vector<Token> tokenize(const std::string& line, int lineno) {
  std::vector<Token> out;
  size_t i = 0;
  const size_t n = line.size();
  while (i < n) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    const size_t start = i;
    std::string tok;
    while (i < n && !std::isspace(static_cast<unsigned char>(line[i]))) {
      if (line[i] == '"') {
        ++i;
        const size_t open = i;
        while (i < n && line[i] != '"') tok += line[i++];
        if (i == n)
          throw NetlistError(lineno, static_cast<int>(open),
                             "unterminated string");
        ++i;  // closing quote
      } else {
        tok += line[i++];
      }
    }
    out.push_back({tok, static_cast<int>(start) + 1});
  }
  return out;
}

inline double parse_number(const Token& t, int lineno) {
  double v = 0.0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last)
    throw NetlistError(lineno, t.column, "expected a number, got '" + t.text + "'");
  return v;
}

// key=value attribute; returns true and fills out when tok matches key.
inline bool attr(const Token& tok, const std::string& key, std::string& out) {
  if (tok.text.rfind(key + "=", 0) != 0) return false;
  out = tok.text.substr(key.size() + 1);
  return true;
}

inline std::string fmt_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

inline const std::map<std::string, std::string>& supported_units() {
  static const std::map<std::string, std::string> u = {
      {"energy", "GHz"},      {"frequency", "GHz"}, {"capacitance", "fF"},
      {"inductance", "pH"},   {"flux", "Phi0"},     {"charge", "2e"},
  };
  return u;
}

}  // namespace detail

inline CircuitSpec parse_netlist(const std::string& text) {
  using detail::Token;
  CircuitSpec spec;
  spec.nodes.clear();
  spec.ground.clear();
  std::string section;  // "" until first [section]

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = detail::tokenize(line, lineno);
    if (toks.empty()) continue;

    const Token& head = toks[0];
    if (head.text.front() == '[') {
      if (head.text.back() != ']' || toks.size() != 1)
        throw NetlistError(lineno, head.column, "malformed section header");
      section = head.text.substr(1, head.text.size() - 2);
      static const std::vector<std::string> known = {
          "defaults.units", "nodes", "branches", "mutuals",
          "loops",          "islands", "bias"};
      bool ok = false;
      for (const auto& k : known) ok = ok || k == section;
      if (!ok)
        throw NetlistError(lineno, head.column, "unknown section '" + section + "'");
      continue;
    }

    auto need = [&](size_t count, const char* what) {
      if (toks.size() < count)
        throw NetlistError(lineno, head.column,
                           std::string("expected ") + what);
    };

    if (section.empty()) {
      if (head.text == "name") {
        need(2, "name <identifier>");
        spec.name = toks[1].text;
        continue;
      }
      throw NetlistError(lineno, head.column,
                         "only 'name' may appear before the first section");
    }

    if (section == "defaults.units") {
      need(2, "<quantity> <unit>");
      auto it = detail::supported_units().find(head.text);
      if (it == detail::supported_units().end())
        throw NetlistError(lineno, head.column,
                           "unknown quantity '" + head.text + "'");
      if (toks[1].text != it->second)
        throw NetlistError(lineno, toks[1].column,
                           "unsupported unit '" + toks[1].text + "' for " +
                               head.text + " (this library uses " + it->second + ")");
      continue;
    }

    if (section == "nodes") {
      need(2, "ground|node <name>");
      if (head.text == "ground") {
        if (!spec.ground.empty())
          throw NetlistError(lineno, head.column, "ground declared twice");
        spec.ground = toks[1].text;
      } else if (head.text == "node") {
        spec.nodes.push_back(toks[1].text);
      } else {
        throw NetlistError(lineno, head.column,
                           "expected 'ground' or 'node', got '" + head.text + "'");
      }
      continue;
    }

    if (section == "branches") {
      need(4, "<kind> <tag> <nodeA> <nodeB> [attrs]");
      Branch b;
      if (head.text == "junction") b.kind = BranchKind::Junction;
      else if (head.text == "capacitor") b.kind = BranchKind::Capacitor;
      else if (head.text == "inductor") b.kind = BranchKind::Inductor;
      else
        throw NetlistError(lineno, head.column,
                           "unknown branch kind '" + head.text + "'");
      b.name = toks[1].text;
      b.node_a = toks[2].text;
      b.node_b = toks[3].text;
      bool have_value = false;
      for (size_t i = 4; i < toks.size(); ++i) {
        std::string v;
        Token vt = toks[i];
        if (detail::attr(toks[i], "EJ", v) && b.kind == BranchKind::Junction) {
          vt.text = v;
          vt.column += 3;
          b.value = detail::parse_number(vt, lineno);
          have_value = true;
        } else if (detail::attr(toks[i], "C", v)) {
          vt.text = v;
          vt.column += 2;
          if (b.kind == BranchKind::Junction) {
            b.cap_fF = detail::parse_number(vt, lineno);
          } else if (b.kind == BranchKind::Capacitor) {
            b.value = detail::parse_number(vt, lineno);
            have_value = true;
          } else {
            throw NetlistError(lineno, toks[i].column,
                               "attribute 'C' not valid on an inductor");
          }
        } else if (detail::attr(toks[i], "L", v) &&
                   b.kind == BranchKind::Inductor) {
          vt.text = v;
          vt.column += 2;
          b.value = detail::parse_number(vt, lineno);
          have_value = true;
        } else {
          throw NetlistError(lineno, toks[i].column,
                             "unknown attribute '" + toks[i].text + "'");
        }
      }
      if (!have_value)
        throw NetlistError(lineno, head.column,
                           "branch '" + b.name + "' is missing its " +
                               (b.kind == BranchKind::Junction ? "EJ=" :
                                b.kind == BranchKind::Capacitor ? "C=" : "L=") +
                               std::string(" value"));
      spec.branches.push_back(std::move(b));
      continue;
    }

    if (section == "mutuals") {
      need(5, "mutual <tag> <inductorA> <inductorB> M=<pH>");
      if (head.text != "mutual")
        throw NetlistError(lineno, head.column, "expected 'mutual'");
      Mutual m;
      m.name = toks[1].text;
      m.inductor_a = toks[2].text;
      m.inductor_b = toks[3].text;
      std::string v;
      if (!detail::attr(toks[4], "M", v))
        throw NetlistError(lineno, toks[4].column, "expected M=<value>");
      Token vt = toks[4];
      vt.text = v;
      vt.column += 2;
      m.M_pH = detail::parse_number(vt, lineno);
      spec.mutuals.push_back(std::move(m));
      continue;
    }

    if (section == "loops") {
      need(4, "loop <name> flux=\"<expr>\" <signed branch tags>");
      if (head.text != "loop")
        throw NetlistError(lineno, head.column, "expected 'loop'");
      LoopSpec l;
      l.name = toks[1].text;
      bool have_flux = false;
      for (size_t i = 2; i < toks.size(); ++i) {
        std::string v;
        if (detail::attr(toks[i], "flux", v)) {
          try {
            l.flux = LinExpr::parse(v);
          } catch (const std::invalid_argument& e) {
            throw NetlistError(lineno, toks[i].column,
                               std::string("bad flux expression: ") + e.what());
          }
          have_flux = true;
        } else if (toks[i].text.size() > 1 &&
                   (toks[i].text[0] == '+' || toks[i].text[0] == '-')) {
          l.branches.emplace_back(toks[i].text[0] == '+' ? 1 : -1,
                                  toks[i].text.substr(1));
        } else {
          throw NetlistError(lineno, toks[i].column,
                             "expected flux=\"...\" or a signed branch tag, got '" +
                                 toks[i].text + "'");
        }
      }
      if (!have_flux)
        throw NetlistError(lineno, head.column,
                           "loop '" + l.name + "' is missing flux=\"...\"");
      spec.loops.push_back(std::move(l));
      continue;
    }

    if (section == "islands") {
      need(3, "island <name> <node>");
      if (head.text != "island")
        throw NetlistError(lineno, head.column, "expected 'island'");
      spec.islands.push_back({toks[1].text, toks[2].text});
      continue;
    }

    if (section == "bias") {
      need(2, "<bias name> <default value>");
      if (spec.bias_defaults.count(head.text))
        throw NetlistError(lineno, head.column,
                           "bias '" + head.text + "' declared twice");
      spec.bias_defaults[head.text] = detail::parse_number(toks[1], lineno);
      continue;
    }
  }

  if (spec.ground.empty())
    throw NetlistError(lineno, 1, "no ground node declared ([nodes] needs 'ground <name>')");
  return spec;
}

inline std::string serialize_netlist(const CircuitSpec& spec) {
  using detail::fmt_double;
  std::string out;
  out += "name " + spec.name + "\n\n";

  out += "[defaults.units]\n";
  for (const auto& [q, u] : detail::supported_units())
    out += q + " " + u + "\n";
  out += "\n[nodes]\n";
  out += "ground " + spec.ground + "\n";
  for (const auto& n : spec.nodes) out += "node " + n + "\n";

  out += "\n[branches]\n";
  for (const auto& b : spec.branches) {
    out += std::string(to_string(b.kind)) + " " + b.name + " " + b.node_a +
           " " + b.node_b + " ";
    switch (b.kind) {
      case BranchKind::Junction:
        out += "EJ=" + fmt_double(b.value);
        if (b.cap_fF != 0.0) out += " C=" + fmt_double(b.cap_fF);
        break;
      case BranchKind::Capacitor: out += "C=" + fmt_double(b.value); break;
      case BranchKind::Inductor: out += "L=" + fmt_double(b.value); break;
    }
    out += "\n";
  }

  if (!spec.mutuals.empty()) {
    out += "\n[mutuals]\n";
    for (const auto& m : spec.mutuals)
      out += "mutual " + m.name + " " + m.inductor_a + " " + m.inductor_b +
             " M=" + fmt_double(m.M_pH) + "\n";
  }

  if (!spec.loops.empty()) {
    out += "\n[loops]\n";
    for (const auto& l : spec.loops) {
      out += "loop " + l.name + " flux=\"" + l.flux.str() + "\"";
      for (const auto& [sign, tag] : l.branches)
        out += std::string(" ") + (sign > 0 ? "+" : "-") + tag;
      out += "\n";
    }
  }

  if (!spec.islands.empty()) {
    out += "\n[islands]\n";
    for (const auto& isl : spec.islands)
      out += "island " + isl.name + " " + isl.node + "\n";
  }

  if (!spec.bias_defaults.empty()) {
    out += "\n[bias]\n";
    for (const auto& [k, v] : spec.bias_defaults)
      out += k + " " + fmt_double(v) + "\n";
  }
  return out;
}

}  // namespace jpsq
