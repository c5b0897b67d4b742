#pragma once

// Toric resolution data of a plane branch: Bezout tuples per characteristic
// exponent, multiplicities along rupture and dead-end divisors, and the
// exponent linear forms of the strict transforms near a rupture divisor.

#include <cstddef>
#include <vector>

#include "planebranch/arith.hpp"
#include "planebranch/errors.hpp"
#include "planebranch/semigroup.hpp"

namespace planebranch {

/// Exponents of the i-th toric chart maps (x^n y^a, x^q y^b) and
/// (z^c w^n, z^d w^q), normalized by 0 <= a < n.
struct ToricStep {
  std::size_t i = 0;
  Integer n, q, a, b, c, d;

  friend bool operator==(const ToricStep&, const ToricStep&) = default;
};

struct DivisorNumerics {
  std::size_t i = 0;
  Integer N_rupture;        // n_i betabar_i
  Integer k_rupture_plus1;  // m_i + n_1 ... n_i
  Integer N_deadend;        // betabar_i
  Integer k_deadend_plus1;  // ceil((m_i + n_1 ... n_i) / n_i)

  friend bool operator==(const DivisorNumerics&, const DivisorNumerics&) = default;
};

inline ToricStep toric_step(const BranchNumerics& bn, std::size_t i) {
  if (i < 1 || i > bn.g()) throw Error(ErrorKind::IndexOutOfRange, "toric step index out of range");
  ToricStep s;
  s.i = i;
  s.n = bn.n[i];
  s.q = bn.q[i];
  // q a = -1 (mod n)
  s.a = mod(-mod_inverse(s.q, s.n), s.n);
  s.b = (1 + s.q * s.a) / s.n;
  s.c = s.n - s.a;
  s.d = s.q - s.b;
  return s;
}

inline std::vector<ToricStep> toric_steps(const BranchNumerics& bn) {
  std::vector<ToricStep> out;
  out.reserve(bn.g());
  for (std::size_t i = 1; i <= bn.g(); ++i) out.push_back(toric_step(bn, i));
  return out;
}

inline std::vector<DivisorNumerics> divisor_numerics(const BranchNumerics& bn) {
  std::vector<DivisorNumerics> out;
  for (std::size_t i = 1; i <= bn.g(); ++i) {
    DivisorNumerics d;
    d.i = i;
    d.N_rupture = bn.n[i] * bn.betabar[i];
    d.k_rupture_plus1 = bn.m[i] + bn.nprod(1, i);
    d.N_deadend = bn.betabar[i];
    d.k_deadend_plus1 = ceil_div(d.k_rupture_plus1, bn.n[i]);
    out.push_back(d);
  }
  return out;
}

/// An affine form sum_l coeffs[l] * k_l + constant over k = (k_0, ..., k_j).
struct AffineForm {
  std::vector<Integer> coeffs;
  Integer constant;

  Integer operator()(const std::vector<Integer>& k) const {
    Integer v = constant;
    for (std::size_t l = 0; l < coeffs.size(); ++l) v += coeffs[l] * k[l];
    return v;
  }
};

/// rho_{j+1}^{(i)}, A_{j+1}^{(i)}, C_{j+1}^{(i)} as affine forms in k_0..k_j.
struct StrictTransformForms {
  std::size_t i = 0, j = 0;
  AffineForm rho, A, C;
};

struct LinearFormValues {
  Integer rho, A, C;
};

inline StrictTransformForms strict_transform_forms(const BranchNumerics& bn, const ToricStep& step, std::size_t j) {
  const std::size_t i = step.i;
  if (i < 1 || j < i || j > bn.g()) throw Error(ErrorKind::IndexOutOfRange, "need 1 <= i <= j <= g");
  StrictTransformForms f;
  f.i = i;
  f.j = j;
  for (auto* form : {&f.rho, &f.A, &f.C}) form->coeffs.assign(j + 1, 0);

  const Integer& ni = bn.n[i];
  const Integer& mbar_i = bn.mbar[i];
  const Integer a_coef = step.a * bn.n[i - 1] * bn.mbar[i - 1] + step.b;
  const Integer c_coef = step.c * bn.n[i - 1] * bn.mbar[i - 1] + step.d;

  for (std::size_t l = 0; l < i; ++l) {
    const Integer w = bn.nprod(l + 1, i - 1) * bn.mbar[l];
    f.rho.coeffs[l] = ni * w;
    f.A.coeffs[l] = step.a * w;
    f.C.coeffs[l] = step.c * w;
  }
  f.rho.coeffs[i] = mbar_i;
  f.A.coeffs[i] = a_coef;
  f.C.coeffs[i] = c_coef;
  for (std::size_t l = i + 1; l <= j; ++l) {
    const Integer w = bn.nprod(i + 1, l - 1);
    f.rho.coeffs[l] = ni * mbar_i * w;
    f.A.coeffs[l] = step.a * mbar_i * w;
    f.C.coeffs[l] = ni * c_coef * w;
  }
  f.rho.constant = -bn.nprod(i, j) * mbar_i;
  f.A.constant = -step.a * mbar_i * bn.nprod(i + 1, j);
  f.C.constant = -c_coef * bn.nprod(i, j);
  return f;
}

/// Evaluates (rho, A, C) at k = (k_0, ..., k_j). Throws Error{IndexOutOfRange}.
inline LinearFormValues linear_forms(const BranchNumerics& bn, std::size_t i, std::size_t j,
                                     const std::vector<Integer>& k) {
  if (i < 1 || j < i || j > bn.g()) throw Error(ErrorKind::IndexOutOfRange, "need 1 <= i <= j <= g");
  if (k.size() != j + 1) throw Error(ErrorKind::IndexOutOfRange, "k must have j + 1 entries");
  for (const auto& v : k)
    if (v < 0) throw Error(ErrorKind::IndexOutOfRange, "k entries must be non-negative");
  const auto forms = strict_transform_forms(bn, toric_step(bn, i), j);
  return {forms.rho(k), forms.A(k), forms.C(k)};
}

/// Partial exponential Bell polynomial B_{nu,k}(x_1, ..., x_{nu-k+1}),
/// summed over all (j_1, ...) with sum j = k and sum l j_l = nu.
inline Rational bell_polynomial(unsigned nu, unsigned k, const std::vector<Rational>& x) {
  if (nu < 1 || k < 1 || k > nu || x.size() != nu - k + 1)
    throw Error(ErrorKind::InvalidIndices, "need 1 <= k <= nu and nu - k + 1 arguments");
  const std::size_t width = x.size();
  std::vector<unsigned> j(width, 0);
  const Integer nu_fact = factorial(nu);
  Rational total = 0;

  // Depth-first enumeration of j_1..j_width with both constraints.
  auto recurse = [&](auto&& self, std::size_t pos, unsigned count_left, unsigned weight_left) -> void {
    if (pos == width) {
      if (count_left != 0 || weight_left != 0) return;
      Rational term = Rational(nu_fact);
      for (std::size_t l = 0; l < width; ++l) {
        if (j[l] == 0) continue;
        const Rational base = x[l] / Rational(factorial(static_cast<unsigned>(l + 1)));
        Rational power = 1;
        for (unsigned r = 0; r < j[l]; ++r) power *= base;
        term *= power / Rational(factorial(j[l]));
      }
      total += term;
      return;
    }
    const unsigned part = static_cast<unsigned>(pos + 1);
    for (unsigned c = 0; c <= count_left && c * part <= weight_left; ++c) {
      j[pos] = c;
      self(self, pos + 1, count_left - c, weight_left - c * part);
    }
    j[pos] = 0;
  };
  recurse(recurse, 0, k, nu);
  return total;
}

}  // namespace planebranch
