// SPDX-License-Identifier: MIT
//
// Linear expressions over named bias variables, e.g. "0.5 + dPhiZ" or
// "-PhiDelta + 2*dPhiX".  Loop flux constraints and charge offsets are
// declared as these expressions and evaluated at concrete bias points.

#pragma once

#include <cctype>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

namespace jpsq {

class LinExpr {
 public:
  LinExpr() = default;
  /* implicit */ LinExpr(double c) : constant_(c) {}
  static LinExpr variable(const std::string& name, double coeff = 1.0) {
    LinExpr e;
    e.terms_[name] = coeff;
    return e;
  }

  // Grammar: expr := ['+'|'-'] term (('+'|'-') term)*
  //          term := number ['*' ident] | ident ['*' number]
  // Identifiers start with a letter or '_' and continue alphanumerically.
  static LinExpr parse(const std::string& text) {
    LinExpr out;
    size_t i = 0;
    auto skip_ws = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_number = [&](double& v) -> bool {
      size_t start = i;
      while (i < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '.' ||
              text[i] == 'e' || text[i] == 'E' ||
              ((text[i] == '+' || text[i] == '-') && i > start &&
               (text[i - 1] == 'e' || text[i - 1] == 'E'))))
        ++i;
      if (i == start) return false;
      try {
        size_t used = 0;
        v = std::stod(text.substr(start, i - start), &used);
        if (used != i - start) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw std::invalid_argument("bad numeric literal in expression: '" + text + "'");
      }
      return true;
    };
    auto read_ident = [&](std::string& s) -> bool {
      size_t start = i;
      if (i < text.size() &&
          (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        ++i;
        while (i < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
          ++i;
      }
      if (i == start) return false;
      s = text.substr(start, i - start);
      return true;
    };

    bool expect_term = true;
    double sign = 1.0;
    skip_ws();
    if (i >= text.size()) throw std::invalid_argument("empty expression");
    while (i < text.size()) {
      skip_ws();
      if (i >= text.size()) break;
      char c = text[i];
      if (c == '+' || c == '-') {
        if (expect_term && sign != 1.0 && c == '-')
          throw std::invalid_argument("doubled sign in expression: '" + text + "'");
        if (!expect_term) {
          expect_term = true;
          sign = 1.0;
        }
        if (c == '-') sign = -sign;
        ++i;
        continue;
      }
      if (!expect_term)
        throw std::invalid_argument("missing operator in expression: '" + text + "'");
      double coeff = sign;
      double num = 0.0;
      std::string name;
      if (read_number(num)) {
        coeff *= num;
        skip_ws();
        if (i < text.size() && text[i] == '*') {
          ++i;
          skip_ws();
          if (!read_ident(name))
            throw std::invalid_argument("expected variable after '*' in: '" + text + "'");
        }
      } else if (read_ident(name)) {
        skip_ws();
        if (i < text.size() && text[i] == '*') {
          ++i;
          skip_ws();
          if (!read_number(num))
            throw std::invalid_argument("expected number after '*' in: '" + text + "'");
          coeff *= num;
        }
      } else {
        throw std::invalid_argument("unexpected character '" + std::string(1, c) +
                                    "' in expression: '" + text + "'");
      }
      if (name.empty())
        out.constant_ += coeff;
      else
        out.terms_[name] += coeff;
      expect_term = false;
      sign = 1.0;
    }
    if (expect_term)
      throw std::invalid_argument("dangling operator in expression: '" + text + "'");
    out.prune();
    return out;
  }

  double constant() const { return constant_; }
  const std::map<std::string, double>& terms() const { return terms_; }
  bool is_constant() const { return terms_.empty(); }

  double evaluate(const std::map<std::string, double>& values) const {
    double v = constant_;
    for (const auto& [name, coeff] : terms_) {
      auto it = values.find(name);
      if (it == values.end())
        throw std::invalid_argument("bias variable '" + name + "' has no value");
      v += coeff * it->second;
    }
    return v;
  }

  std::set<std::string> variables() const {
    std::set<std::string> names;
    for (const auto& [name, coeff] : terms_) names.insert(name);
    return names;
  }

  LinExpr& operator+=(const LinExpr& o) {
    constant_ += o.constant_;
    for (const auto& [n, c] : o.terms_) terms_[n] += c;
    prune();
    return *this;
  }
  LinExpr& operator-=(const LinExpr& o) {
    constant_ -= o.constant_;
    for (const auto& [n, c] : o.terms_) terms_[n] -= c;
    prune();
    return *this;
  }
  LinExpr& operator*=(double s) {
    constant_ *= s;
    for (auto& [n, c] : terms_) c *= s;
    prune();
    return *this;
  }
  friend LinExpr operator+(LinExpr a, const LinExpr& b) { return a += b; }
  friend LinExpr operator-(LinExpr a, const LinExpr& b) { return a -= b; }
  friend LinExpr operator*(LinExpr a, double s) { return a *= s; }
  friend LinExpr operator*(double s, LinExpr a) { return a *= s; }
  friend LinExpr operator-(LinExpr a) { return a *= -1.0; }

  bool operator==(const LinExpr& o) const {
    return constant_ == o.constant_ && terms_ == o.terms_;
  }

  // Max-norm distance to another expression over constant and coefficients.
  double distance(const LinExpr& o) const {
    double d = std::abs(constant_ - o.constant_);
    auto names = variables();
    for (const auto& n : o.variables()) names.insert(n);
    for (const auto& n : names) {
      auto a = terms_.find(n), b = o.terms_.find(n);
      double ca = a == terms_.end() ? 0.0 : a->second;
      double cb = b == o.terms_.end() ? 0.0 : b->second;
      d = std::max(d, std::abs(ca - cb));
    }
    return d;
  }

  std::string str() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](double coeff, const std::string& name) {
      if (coeff == 0.0 && !name.empty()) return;
      double mag = std::abs(coeff);
      if (first) {
        if (coeff < 0) os << "-";
        first = false;
      } else {
        os << (coeff < 0 ? " - " : " + ");
      }
      if (name.empty()) {
        os << mag;
      } else {
        if (mag != 1.0) os << mag << "*";
        os << name;
      }
    };
    if (constant_ != 0.0 || terms_.empty()) emit(constant_, "");
    for (const auto& [n, c] : terms_) emit(c, n);
    return os.str();
  }

 private:
  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
      it = (it->second == 0.0) ? terms_.erase(it) : std::next(it);
  }

  double constant_ = 0.0;
  std::map<std::string, double> terms_;
};

}  // namespace jpsq
