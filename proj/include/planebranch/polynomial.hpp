#pragma once

// Sparse multivariate polynomials with exact rational coefficients.

#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "planebranch/arith.hpp"
#include "planebranch/errors.hpp"

namespace planebranch {

using Exponent = std::vector<unsigned>;

/// Graded order: lower total degree first, then larger exponent of the
/// first variable, and so on.
struct GradedLex {
  bool operator()(const Exponent& a, const Exponent& b) const {
    const unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    const unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da < db;
    return a > b;
  }
};

class SparsePoly {
 public:
  using Terms = std::map<Exponent, Rational, GradedLex>;

  SparsePoly() = default;
  explicit SparsePoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static SparsePoly constant(std::vector<std::string> vars, const Rational& c) {
    SparsePoly p(std::move(vars));
    p.add_term(Exponent(p.vars_.size(), 0), c);
    return p;
  }

  static SparsePoly monomial(std::vector<std::string> vars, Exponent e, const Rational& c = 1) {
    SparsePoly p(std::move(vars));
    if (e.size() != p.vars_.size()) throw Error(ErrorKind::PreconditionViolated, "exponent length mismatch");
    p.add_term(std::move(e), c);
    return p;
  }

  static SparsePoly variable(std::vector<std::string> vars, std::size_t index) {
    Exponent e(vars.size(), 0);
    e.at(index) = 1;
    return monomial(std::move(vars), std::move(e));
  }

  const std::vector<std::string>& variables() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, 0);
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  Rational coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Lowest total degree of a term; throws on the zero polynomial.
  unsigned order() const {
    if (terms_.empty()) throw Error(ErrorKind::PreconditionViolated, "zero polynomial has no order");
    const auto& e = terms_.begin()->first;
    return std::accumulate(e.begin(), e.end(), 0u);
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  SparsePoly& operator*=(const Rational& s) {
    if (s == 0) terms_.clear();
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(SparsePoly a, const Rational& s) { return a *= s; }
  friend SparsePoly operator*(const Rational& s, SparsePoly a) { return a *= s; }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    a.check_vars(b);
    SparsePoly out(a.vars_);
    Exponent e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
        out.add_term(e, ca * cb);
      }
    return out;
  }

  SparsePoly pow(unsigned k) const {
    SparsePoly result = constant(vars_, 1), base = *this;
    while (k) {
      if (k & 1u) result = result * base;
      k >>= 1;
      if (k) base = base * base;
    }
    return result;
  }

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

  /// Human-readable form in graded order, e.g. "y^4 - 2*x^3*y^2 + x^6 - x^5*y".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      const bool negative = c < 0;
      const Rational mag = negative ? Rational(-c) : c;
      if (first) out += negative ? "-" : "";
      else out += negative ? " - " : " + ";
      first = false;
      const std::string mono = monomial_string(e);
      if (mono.empty()) out += planebranch::to_string(mag);
      else if (mag == 1) out += mono;
      else out += planebranch::to_string(mag) + "*" + mono;
    }
    return out;
  }

  std::string monomial_string(const Exponent& e) const {
    std::string out;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!out.empty()) out += "*";
      out += vars_[v];
      if (e[v] > 1) out += "^" + std::to_string(e[v]);
    }
    return out;
  }

 private:
  void check_vars(const SparsePoly& o) const {
    if (vars_ != o.vars_) throw Error(ErrorKind::PreconditionViolated, "polynomials over different variables");
  }

  std::vector<std::string> vars_;
  Terms terms_;
};

}  // namespace planebranch
