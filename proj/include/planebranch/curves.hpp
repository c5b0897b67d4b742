#pragma once

// Monomial-curve equations, the plane equation built from maximal contact
// elements, and semigroup-constant deformation families.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "planebranch/arith.hpp"
#include "planebranch/errors.hpp"
#include "planebranch/polynomial.hpp"
#include "planebranch/semigroup.hpp"

namespace planebranch {

inline std::vector<std::string> monomial_curve_variables(std::size_t g) {
  std::vector<std::string> vars;
  for (std::size_t l = 0; l <= g; ++l) vars.push_back("u" + std::to_string(l));
  return vars;
}

inline const std::vector<std::string>& plane_variables() {
  static const std::vector<std::string> vars = {"x", "y"};
  return vars;
}

/// Exponents l_0..l_{i-1} with n_i betabar_i = sum l_j betabar_j.
inline std::vector<Integer> contact_exponents(const BranchNumerics& bn, std::size_t i) {
  auto k = canonical_representation(bn, bn.n[i] * bn.betabar[i]);
  for (std::size_t l = i; l < k.size(); ++l)
    if (k[l] != 0) throw Error(ErrorKind::PreconditionViolated, "n_i betabar_i not in the previous subsemigroup");
  k.resize(i);
  return k;
}

/// h_i = u_i^{n_i} - u_0^{l_0} ... u_{i-1}^{l_{i-1}}, i = 1..g.
inline std::vector<SparsePoly> monomial_curve_equations(const BranchNumerics& bn) {
  const auto vars = monomial_curve_variables(bn.g());
  std::vector<SparsePoly> out;
  for (std::size_t i = 1; i <= bn.g(); ++i) {
    Exponent lead(vars.size(), 0), tail(vars.size(), 0);
    lead[i] = narrow<unsigned>(bn.n[i], "n_i");
    const auto l = contact_exponents(bn, i);
    for (std::size_t j = 0; j < i; ++j) tail[j] = narrow<unsigned>(l[j], "contact exponent");
    out.push_back(SparsePoly::monomial(vars, lead) - SparsePoly::monomial(vars, tail));
  }
  return out;
}

/// Substitutes variable v -> t^{weights[v]}; returns exponent -> coefficient with zeros dropped.
inline std::map<Integer, Rational> substitute_weights(const SparsePoly& p, const std::vector<Integer>& weights) {
  if (weights.size() != p.variables().size()) throw Error(ErrorKind::PreconditionViolated, "one weight per variable");
  std::map<Integer, Rational> out;
  for (const auto& [e, c] : p.terms()) {
    Integer w = 0;
    for (std::size_t v = 0; v < e.size(); ++v) w += weights[v] * e[v];
    auto& slot = out[w];
    slot += c;
    if (slot == 0) out.erase(w);
  }
  return out;
}

inline Integer weight_of_monomial(const BranchNumerics& bn, const std::vector<Integer>& k) {
  if (k.size() > bn.g() + 1) throw Error(ErrorKind::IndexOutOfRange, "too many exponents");
  Integer w = 0;
  for (std::size_t l = 0; l < k.size(); ++l) {
    if (k[l] < 0) throw Error(ErrorKind::PreconditionViolated, "exponents must be non-negative");
    w += bn.betabar[l] * k[l];
  }
  return w;
}

namespace detail {

inline SparsePoly contact_product(const std::vector<SparsePoly>& f, const std::vector<Integer>& k) {
  SparsePoly out = SparsePoly::constant(plane_variables(), 1);
  for (std::size_t l = 0; l < k.size(); ++l)
    if (k[l] != 0) out = out * f[l].pow(narrow<unsigned>(k[l], "exponent"));
  return out;
}

inline std::vector<Rational> checked_lambdas(const BranchNumerics& bn, const std::vector<Rational>& lambdas) {
  // index i holds lambda_i; lambda_1 = 1
  std::vector<Rational> out(bn.g() + 1, Rational(1));
  if (!lambdas.empty() && lambdas.size() != bn.g() - 1)
    throw Error(ErrorKind::PreconditionViolated, "expected g - 1 values lambda_2..lambda_g");
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    if (lambdas[k] == 0) throw Error(ErrorKind::ZeroLambda, "lambda_" + std::to_string(k + 2) + " is zero");
    out[k + 2] = lambdas[k];
  }
  return out;
}

}  // namespace detail

/// Maximal contact elements f_0 = x, f_1 = y, ..., f_{g+1} = f.
inline std::vector<SparsePoly> contact_elements(const BranchNumerics& bn, const std::vector<Rational>& lambdas = {}) {
  const auto lam = detail::checked_lambdas(bn, lambdas);
  std::vector<SparsePoly> f = {SparsePoly::variable(plane_variables(), 0), SparsePoly::variable(plane_variables(), 1)};
  for (std::size_t i = 1; i <= bn.g(); ++i)
    f.push_back(f[i].pow(narrow<unsigned>(bn.n[i], "n_i")) - lam[i] * detail::contact_product(f, contact_exponents(bn, i)));
  return f;
}

inline SparsePoly plane_equation(const BranchNumerics& bn, const std::vector<Rational>& lambdas = {}) {
  return contact_elements(bn, lambdas).back();
}

/// The recursion written without expanding, e.g. "(y^2 - x^3)^2 - x^5*y".
inline std::string nested_plane_equation(const BranchNumerics& bn) {
  std::vector<std::string> f = {"x", "y"};
  auto power = [&](std::size_t l, const Integer& k) {
    std::string base = l <= 1 ? f[l] : "(" + f[l] + ")";
    return k == 1 ? base : base + "^" + k.str();
  };
  for (std::size_t i = 1; i <= bn.g(); ++i) {
    std::string tail;
    const auto l = contact_exponents(bn, i);
    for (std::size_t j = 0; j < l.size(); ++j) {
      if (l[j] == 0) continue;
      if (!tail.empty()) tail += "*";
      tail += power(j, l[j]);
    }
    f.push_back(power(i, bn.n[i]) + " - " + (tail.empty() ? "1" : tail));
  }
  return f.back();
}

struct DeformationTerm {
  std::string id;  // t<i>_<k0>_..._<ki>
  std::size_t level = 0;
  std::vector<Integer> k;
  Integer weight;
  SparsePoly monomial;  // f_0^{k_0} ... f_i^{k_i} with the undeformed f_l
};

struct CoefficientSource {
  enum class Kind { Symbolic, Explicit, Seeded };
  Kind kind = Kind::Symbolic;
  std::map<std::string, Rational> values;  // Explicit: missing ids are 0
  std::uint64_t seed = 0;

  static CoefficientSource symbolic() { return {}; }
  static CoefficientSource explicit_values(std::map<std::string, Rational> v) { return {Kind::Explicit, std::move(v), 0}; }
  static CoefficientSource seeded(std::uint64_t s) { return {Kind::Seeded, {}, s}; }
};

struct DeformationFamily {
  SparsePoly base;
  std::vector<DeformationTerm> terms;
  std::vector<Rational> lambdas;  // lambda_2..lambda_g
  Integer cutoff;
  std::vector<std::optional<Rational>> coefficients;  // per term; empty when symbolic
};

inline Integer default_weight_cutoff(const BranchNumerics& bn) {
  return bn.n[bn.g()] * bn.betabar[bn.g()] + bn.conductor;
}

/// Nonzero p/q with |p| <= 100 and 1 <= q <= 100.
inline Rational random_coefficient(std::mt19937_64& rng) {
  const auto v = static_cast<long long>(rng() % 200);
  const long long p = v < 100 ? -(v + 1) : v - 99;
  const long long q = static_cast<long long>(rng() % 100) + 1;
  return Rational(p, q);
}

inline std::vector<DeformationTerm> enumerate_deformation_terms(const BranchNumerics& bn, const Integer& cutoff,
                                                                 const std::vector<SparsePoly>& f) {
  std::vector<DeformationTerm> out;
  for (std::size_t i = 1; i <= bn.g(); ++i) {
    const Integer floor_weight = bn.n[i] * bn.betabar[i];
    std::vector<DeformationTerm> level;
    std::vector<Integer> k(i + 1, 0);
    // odometer over k_1..k_i with 0 <= k_l < n_l
    while (true) {
      Integer partial = 0;
      for (std::size_t l = 1; l <= i; ++l) partial += k[l] * bn.betabar[l];
      const Integer lo = std::max(Integer(0), Integer(floor_div(floor_weight - partial, bn.betabar[0]) + 1));
      for (Integer k0 = lo; partial + k0 * bn.betabar[0] <= cutoff; ++k0) {
        DeformationTerm t;
        t.level = i;
        t.k = k;
        t.k[0] = k0;
        t.weight = partial + k0 * bn.betabar[0];
        t.id = "t" + std::to_string(i);
        for (const auto& v : t.k) t.id += "_" + v.str();
        t.monomial = detail::contact_product(f, t.k);
        level.push_back(std::move(t));
      }
      std::size_t l = 1;
      while (l <= i && ++k[l] == bn.n[l]) k[l++] = 0;
      if (l > i) break;
    }
    std::sort(level.begin(), level.end(), [](const DeformationTerm& a, const DeformationTerm& b) {
      return a.weight != b.weight ? a.weight < b.weight : a.k < b.k;
    });
    for (auto& t : level) out.push_back(std::move(t));
  }
  return out;
}

inline DeformationFamily deformation_family(const BranchNumerics& bn, const std::optional<Integer>& weight_cutoff = {},
                                            const std::vector<Rational>& lambdas = {},
                                            const CoefficientSource& source = CoefficientSource::symbolic()) {
  const Integer cutoff = weight_cutoff ? *weight_cutoff : default_weight_cutoff(bn);
  for (std::size_t i = 1; i <= bn.g(); ++i)
    if (cutoff < bn.n[i] * bn.betabar[i])
      throw Error(ErrorKind::InvalidCutoff, "cutoff " + cutoff.str() + " is below n_i betabar_i = " +
                                                Integer(bn.n[i] * bn.betabar[i]).str());
  const auto f = contact_elements(bn, lambdas);
  DeformationFamily fam;
  fam.base = f.back();
  fam.lambdas = lambdas;
  fam.cutoff = cutoff;
  fam.terms = enumerate_deformation_terms(bn, cutoff, f);
  if (source.kind == CoefficientSource::Kind::Explicit) {
    for (const auto& [id, value] : source.values) {
      const bool known = std::any_of(fam.terms.begin(), fam.terms.end(), [&](const auto& t) { return t.id == id; });
      if (!known) throw Error(ErrorKind::PreconditionViolated, "unknown deformation parameter " + id);
    }
    for (const auto& t : fam.terms) {
      auto it = source.values.find(t.id);
      fam.coefficients.emplace_back(it == source.values.end() ? Rational(0) : it->second);
    }
  } else if (source.kind == CoefficientSource::Kind::Seeded) {
    std::mt19937_64 rng(source.seed);
    for (std::size_t k = 0; k < fam.terms.size(); ++k) fam.coefficients.emplace_back(random_coefficient(rng));
  }
  return fam;
}

/// f_{t, lambda}: the recursion with every deformation term added at its level.
inline SparsePoly instantiate(const BranchNumerics& bn, const DeformationFamily& fam) {
  if (fam.coefficients.size() != fam.terms.size())
    throw Error(ErrorKind::PreconditionViolated, "family has symbolic coefficients");
  const auto lam = detail::checked_lambdas(bn, fam.lambdas);
  std::vector<SparsePoly> f = {SparsePoly::variable(plane_variables(), 0), SparsePoly::variable(plane_variables(), 1)};
  for (std::size_t i = 1; i <= bn.g(); ++i) {
    SparsePoly next =
        f[i].pow(narrow<unsigned>(bn.n[i], "n_i")) - lam[i] * detail::contact_product(f, contact_exponents(bn, i));
    for (std::size_t t = 0; t < fam.terms.size(); ++t)
      if (fam.terms[t].level == i && *fam.coefficients[t] != 0)
        next += *fam.coefficients[t] * detail::contact_product(f, fam.terms[t].k);
    f.push_back(std::move(next));
  }
  return f.back();
}

/// Tjurina-type count 2 * #gaps.
inline Integer tau_from_gaps(const BranchNumerics& bn) { return 2 * gap_count(bn); }

}  // namespace planebranch
