#pragma once

// Meromorphic evaluation of Gamma ratios with exact zero/pole bookkeeping:
// the residue kernel R_{n,m}(alpha, beta; lambda) and the Gauss sum
// 2F1(a, b; c; 1).

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "planebranch/arith.hpp"
#include "planebranch/errors.hpp"
#include "planebranch/lgamma.hpp"

namespace planebranch {

/// One Gamma(u)/Gamma(v) factor of a product.
struct PairTrace {
  std::string label;
  Rational u, v;
  int order = 0;
  std::optional<Complex> value;  // set when order == 0
};

struct MeromorphicValue {
  int order = 0;                 // > 0 pole, < 0 zero, 0 finite nonzero
  std::optional<Complex> value;  // only when order == 0 and not indeterminate
  std::vector<PairTrace> reason;
  bool indeterminate = false;    // order 0 reached by a pole cancelling a zero

  /// Value as shown to users: 0 for zeros, nothing for poles.
  std::optional<Complex> reported() const {
    if (order < 0) return Complex(0.0, 0.0);
    return value;
  }
};

namespace detail {

inline bool is_nonpositive_integer(const Rational& x) { return is_integer(x) && x <= 0; }

inline Complex to_complex(const Rational& x) { return Complex(to_double(x), 0.0); }

/// Gamma(x) for rational x away from the poles.
inline Complex gamma_at(const Rational& x) {
  if (is_nonpositive_integer(x)) throw Error(ErrorKind::DomainError, "Gamma has a pole at " + to_string(x));
  if (is_integer(x) && x <= 170) return Complex(to_double(Rational(factorial(narrow<unsigned>(numerator(x) - 1, "x")))), 0.0);
  return gamma(to_complex(x));
}

/// 1/Gamma(x), zero at the poles of Gamma.
inline Complex rgamma_at(const Rational& x) {
  if (is_nonpositive_integer(x)) return Complex(0.0, 0.0);
  return 1.0 / gamma_at(x);
}

}  // namespace detail

/// Gamma(u)/Gamma(v) for u + v an integer. Along the line u + v = const both
/// arguments move in opposite directions, which fixes the sign of the
/// ratio of two simple poles.
inline MeromorphicValue gamma_pair(const Rational& u, const Rational& v, std::string label = {}) {
  if (!is_integer(u + v)) throw Error(ErrorKind::PreconditionViolated, "u + v must be an integer");
  PairTrace t{std::move(label), u, v, 0, std::nullopt};
  const bool u_pole = detail::is_nonpositive_integer(u);
  const bool v_pole = detail::is_nonpositive_integer(v);
  t.order = int(u_pole) - int(v_pole);
  if (t.order == 0) {
    if (!is_integer(u)) {
      // real arguments: the imaginary part is rounding noise from the reflection formula
      t.value = Complex(std::exp(log_gamma(detail::to_complex(u)) - log_gamma(detail::to_complex(v))).real(), 0.0);
    } else if (u_pole) {
      // Gamma(-k1 + e) / Gamma(-k2 - e) -> -(-1)^{k1 - k2} k2! / k1!
      const Integer k1 = -numerator(u), k2 = -numerator(v);
      Rational r(factorial(narrow<unsigned>(k2, "pair argument")), factorial(narrow<unsigned>(k1, "pair argument")));
      if ((k1 - k2) % 2 == 0) r = -r;
      t.value = detail::to_complex(r);
    } else {
      const Rational r(factorial(narrow<unsigned>(numerator(u) - 1, "pair argument")),
                       factorial(narrow<unsigned>(numerator(v) - 1, "pair argument")));
      t.value = detail::to_complex(r);
    }
  }
  MeromorphicValue out;
  out.order = t.order;
  out.value = t.value;
  out.reason.push_back(std::move(t));
  return out;
}

/// Product of Gamma(u_k)/Gamma(v_k) with orders added. If a pole of one pair
/// cancels a zero of another the value depends on the approach direction
/// and is left undetermined.
inline MeromorphicValue gamma_ratio_product(const std::vector<std::pair<Rational, Rational>>& pairs,
                                            const std::vector<std::string>& labels = {}) {
  MeromorphicValue out;
  Complex product(1.0, 0.0);
  bool mixed = false;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto p = gamma_pair(pairs[k].first, pairs[k].second, k < labels.size() ? labels[k] : std::string{});
    out.order += p.order;
    if (p.order != 0) mixed = true;
    else product *= *p.value;
    out.reason.push_back(std::move(p.reason.front()));
  }
  if (out.order == 0) {
    if (mixed) out.indeterminate = true;
    else out.value = product;
  }
  return out;
}

struct RnmParams {
  Rational alpha;
  long long n = 0;
  Rational beta;
  long long m = 0;
  Complex lambda{1.0, 0.0};

  Rational alpha_prime() const { return alpha + n; }
  Rational beta_prime() const { return beta + m; }
  Rational gamma() const { return -alpha - beta - n - m - 2; }
};

/// R_{n,m} = -2 pi i lambda^{-alpha'-1} conj(lambda)^{-alpha-1}
///           Gamma(alpha+1) Gamma(beta+1) Gamma(gamma+1)
///           / (Gamma(-alpha-n) Gamma(-beta-m) Gamma(-gamma-n-m))
inline MeromorphicValue rnm_closed_form(const RnmParams& p) {
  if (p.lambda == Complex(0.0, 0.0)) throw Error(ErrorKind::PreconditionViolated, "lambda must be nonzero");
  const Rational gam = p.gamma();
  auto out = gamma_ratio_product({{p.alpha + 1, -p.alpha - p.n}, {p.beta + 1, -p.beta - p.m}, {gam + 1, -gam - p.n - p.m}},
                                 {"alpha", "beta", "gamma"});
  if (out.value) {
    const Complex lam_pow = std::pow(p.lambda, -to_double(p.alpha_prime()) - 1.0);
    const Complex lambar_pow = std::pow(std::conj(p.lambda), -to_double(p.alpha) - 1.0);
    *out.value *= Complex(0.0, -2.0 * std::numbers::pi) * lam_pow * lambar_pow;
  }
  return out;
}

/// Parameters of R_{-n,-m}(alpha', beta'; conj(lambda)).
inline RnmParams swapped(const RnmParams& p) {
  return RnmParams{p.alpha_prime(), -p.n, p.beta_prime(), -p.m, std::conj(p.lambda)};
}

struct SymmetryResult {
  bool holds = false;
  MeromorphicValue lhs, rhs;
  double relerr = 0.0;
};

/// Compares R_{n,m}(alpha, beta; lambda) with R_{-n,-m}(alpha', beta'; conj(lambda)).
/// For real lambda this is the plain swap symmetry.
inline SymmetryResult symmetry_check(const RnmParams& p, double tol = 1e-10) {
  SymmetryResult r;
  r.lhs = rnm_closed_form(p);
  r.rhs = rnm_closed_form(swapped(p));
  if (r.lhs.order != r.rhs.order || r.lhs.indeterminate != r.rhs.indeterminate) return r;
  if (r.lhs.value && r.rhs.value) {
    r.relerr = std::abs(*r.lhs.value - *r.rhs.value) / std::abs(*r.lhs.value);
    r.holds = r.relerr <= tol;
  } else {
    r.holds = r.lhs.value.has_value() == r.rhs.value.has_value();
  }
  return r;
}

struct HypergeomResult {
  Complex partial;        // sum of the first K terms
  Complex closed;         // Gauss closed form
  double relerr = 0.0;    // |partial - closed| / |closed|
  Complex extrapolated;   // Richardson extrapolation of partial sums at K, K/2, K/4, K/8
  double extrapolated_relerr = 0.0;
};

/// sum_{k<K} Gamma(a+k) Gamma(b+k) / (Gamma(c+k) k!) against
/// Gamma(a) Gamma(b) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)).
inline HypergeomResult hypergeom_sum_at_1(const Rational& a, const Rational& b, const Rational& c, unsigned long K) {
  if (detail::is_nonpositive_integer(c)) throw Error(ErrorKind::DomainError, "c is a non-positive integer");
  if (c - a - b <= 0) throw Error(ErrorKind::DomainError, "need c - a - b > 0, got " + to_string(c - a - b));
  if (detail::is_nonpositive_integer(a) || detail::is_nonpositive_integer(b))
    throw Error(ErrorKind::DomainError, "a and b must not be non-positive integers");
  if (K < 8) throw Error(ErrorKind::DomainError, "need at least 8 terms");

  HypergeomResult r;
  r.closed = detail::gamma_at(a) * detail::gamma_at(b) * detail::gamma_at(c - a - b) * detail::rgamma_at(c - a) *
             detail::rgamma_at(c - b);

  const double da = to_double(a), db = to_double(b), dc = to_double(c);
  std::vector<unsigned long> marks = {K >> 3, K >> 2, K >> 1, K};
  std::vector<Complex> sums;
  Complex term = detail::gamma_at(a) * detail::gamma_at(b) * detail::rgamma_at(c);
  Complex sum(0.0), comp(0.0);
  std::size_t next = 0;
  for (unsigned long k = 0; k < K; ++k) {
    // Neumaier summation, real and imaginary parts separately
    const Complex t = sum + term;
    const double cr = std::abs(sum.real()) >= std::abs(term.real()) ? (sum.real() - t.real()) + term.real()
                                                                     : (term.real() - t.real()) + sum.real();
    const double ci = std::abs(sum.imag()) >= std::abs(term.imag()) ? (sum.imag() - t.imag()) + term.imag()
                                                                     : (term.imag() - t.imag()) + sum.imag();
    comp += Complex(cr, ci);
    sum = t;
    while (next < marks.size() && marks[next] == k + 1) {
      sums.push_back(sum + comp);
      ++next;
    }
    const double kk = static_cast<double>(k);
    term *= (da + kk) * (db + kk) / ((dc + kk) * (kk + 1.0));
  }
  r.partial = sum + comp;
  r.relerr = std::abs(r.partial - r.closed) / std::abs(r.closed);

  // S_K = S + A K^s + B K^{s-1} + ... with s = a + b - c; eliminate three powers.
  std::vector<double> nodes(marks.begin(), marks.end());
  const double s = to_double(a + b - c);
  for (int level = 0; level < 3; ++level) {
    const double p = s - level;
    std::vector<Complex> next_sums;
    for (std::size_t j = 0; j + 1 < sums.size(); ++j) {
      const double w0 = std::pow(nodes[j], p), w1 = std::pow(nodes[j + 1], p);
      next_sums.push_back((w0 * sums[j + 1] - w1 * sums[j]) / (w0 - w1));
    }
    sums = std::move(next_sums);
    nodes.erase(nodes.begin());
  }
  r.extrapolated = sums.back();
  r.extrapolated_relerr = std::abs(r.extrapolated - r.closed) / std::abs(r.closed);
  return r;
}

}  // namespace planebranch
