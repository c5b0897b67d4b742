#pragma once

// Characteristic sequences, plane-branch semigroups and their derived integers.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "planebranch/arith.hpp"
#include "planebranch/errors.hpp"

namespace planebranch {

/// Characteristic sequence (n; beta_1, ..., beta_g) of a plane branch.
struct CharSeq {
  Integer n;
  std::vector<Integer> betas;

  std::size_t g() const { return betas.size(); }
  friend bool operator==(const CharSeq&, const CharSeq&) = default;
};

/// Minimal generators beta-bar_0 < ... < beta-bar_g of a semigroup.
struct PlaneSemigroup {
  std::vector<Integer> gens;

  std::size_t g() const { return gens.empty() ? 0 : gens.size() - 1; }
  friend bool operator==(const PlaneSemigroup&, const PlaneSemigroup&) = default;
};

/// Every integer derived from a characteristic sequence. All vectors are
/// indexed 0..g and carry the index-0 conventions beta_0 = n_0 = m_0 = q_0 = 0,
/// mbar_0 = 1, e_0 = betabar_0 = n.
struct BranchNumerics {
  CharSeq charseq;
  std::vector<Integer> beta;
  std::vector<Integer> betabar;
  std::vector<Integer> e;
  std::vector<Integer> n;
  std::vector<Integer> m;
  std::vector<Integer> mbar;
  std::vector<Integer> q;
  Integer conductor;
  Integer milnor;

  std::size_t g() const { return charseq.g(); }
  const Integer& multiplicity() const { return charseq.n; }
  PlaneSemigroup semigroup() const { return PlaneSemigroup{betabar}; }

  /// n_first * ... * n_last; the empty product (first > last) is 1.
  Integer nprod(std::size_t first, std::size_t last) const {
    Integer r = 1;
    for (std::size_t l = first; l <= last && l < n.size(); ++l) r *= n[l];
    return r;
  }
};

namespace detail {

inline void require_charseq(bool ok, const std::string& reason) {
  if (!ok) throw Error(ErrorKind::InvalidCharSeq, reason);
}

}  // namespace detail

/// Validates `cs` and computes the semigroup generators, gcd chain, reduced
/// exponents and the conductor. Throws Error{InvalidCharSeq}.
inline BranchNumerics derive_numerics(const CharSeq& cs) {
  using detail::require_charseq;
  const std::size_t g = cs.g();
  require_charseq(g >= 1, "smooth branch (g = 0) is not supported");
  require_charseq(cs.n >= 2, "multiplicity n must be at least 2");
  require_charseq(cs.betas[0] > cs.n, "beta1 must exceed n");
  for (std::size_t i = 1; i < g; ++i)
    require_charseq(cs.betas[i] > cs.betas[i - 1],
                    "characteristic exponents must increase (beta" + std::to_string(i + 1) + " <= beta" +
                        std::to_string(i) + ")");

  BranchNumerics bn;
  bn.charseq = cs;
  bn.beta.assign(g + 1, 0);
  bn.e.assign(g + 1, 0);
  bn.n.assign(g + 1, 0);
  bn.m.assign(g + 1, 0);
  bn.mbar.assign(g + 1, 0);
  bn.q.assign(g + 1, 0);
  bn.betabar.assign(g + 1, 0);

  bn.e[0] = cs.n;
  bn.betabar[0] = cs.n;
  bn.mbar[0] = 1;
  for (std::size_t i = 1; i <= g; ++i) {
    bn.beta[i] = cs.betas[i - 1];
    if (bn.beta[i] % bn.e[i - 1] == 0)
      throw Error(ErrorKind::InvalidCharSeq,
                  "e" + std::to_string(i - 1) + " divides beta" + std::to_string(i));
    bn.e[i] = gcd(bn.e[i - 1], bn.beta[i]);
  }
  require_charseq(bn.e[g] == 1, "gcd(n, beta1, ..., betag) must be 1");

  for (std::size_t i = 1; i <= g; ++i) {
    bn.n[i] = bn.e[i - 1] / bn.e[i];
    bn.m[i] = bn.beta[i] / bn.e[i];
    bn.q[i] = bn.m[i] - bn.n[i] * bn.m[i - 1];
    bn.betabar[i] = (i == 1) ? bn.beta[1] : bn.n[i - 1] * bn.betabar[i - 1] - bn.beta[i - 1] + bn.beta[i];
    bn.mbar[i] = bn.betabar[i] / bn.e[i];
  }

  Integer c = 1 - cs.n;
  for (std::size_t i = 1; i <= g; ++i) c += (bn.n[i] - 1) * bn.betabar[i];
  bn.conductor = c;
  bn.milnor = c;
  return bn;
}

/// Conductor c and Milnor number mu (equal for a branch).
struct ConductorMilnor {
  Integer conductor;
  Integer milnor;
};

inline ConductorMilnor conductor_and_milnor(const BranchNumerics& bn) {
  Integer c = 1 - bn.multiplicity();
  for (std::size_t i = 1; i <= bn.g(); ++i) c += (bn.n[i] - 1) * bn.betabar[i];
  return {c, c};
}

/// Alternative conductor formula n_g betabar_g - beta_g - (n - 1).
inline Integer conductor_from_top(const BranchNumerics& bn) {
  const std::size_t g = bn.g();
  return bn.n[g] * bn.betabar[g] - bn.beta[g] - (bn.multiplicity() - 1);
}

struct MembershipResult {
  bool member = false;
  /// Multiplicity of each generator; present only when `member` is true.
  std::vector<Integer> representation;
};

/// Dynamic-programming membership test of s in <gens>. The representation
/// prefers the smallest generator at every step, which makes it deterministic.
inline MembershipResult membership(const std::vector<Integer>& gens, const Integer& s) {
  if (s < 0) throw Error(ErrorKind::PreconditionViolated, "membership: s must be non-negative");
  const auto size = narrow<std::size_t>(s, "membership bound") + 1;
  std::vector<std::size_t> small;
  small.reserve(gens.size());
  for (const auto& gen : gens) {
    if (gen <= 0) throw Error(ErrorKind::PreconditionViolated, "membership: generators must be positive");
    small.push_back(gen > s ? size : static_cast<std::size_t>(gen));
  }

  constexpr std::int32_t kUnreachable = -1;
  std::vector<std::int32_t> via(size, kUnreachable);
  via[0] = static_cast<std::int32_t>(gens.size());
  for (std::size_t v = 1; v < size; ++v) {
    for (std::size_t k = 0; k < small.size(); ++k) {
      if (small[k] <= v && via[v - small[k]] != kUnreachable) {
        via[v] = static_cast<std::int32_t>(k);
        break;
      }
    }
  }

  MembershipResult out;
  if (via[size - 1] == kUnreachable) return out;
  out.member = true;
  out.representation.assign(gens.size(), 0);
  for (std::size_t v = size - 1; v > 0;) {
    const auto k = static_cast<std::size_t>(via[v]);
    out.representation[k] += 1;
    v -= small[k];
  }
  return out;
}

/// One row of a plane-branch semigroup validation.
struct ConditionResult {
  std::string name;
  std::size_t index = 0;
  bool passed = false;
  std::string detail;
  std::vector<Integer> witness;
};

struct ValidationReport {
  std::vector<Integer> gens;
  std::vector<ConditionResult> conditions;

  bool ok() const {
    return std::all_of(conditions.begin(), conditions.end(), [](const auto& c) { return c.passed; });
  }

  const ConditionResult* first_failure() const {
    for (const auto& c : conditions)
      if (!c.passed) return &c;
    return nullptr;
  }
};

/// Checks the three conditions characterizing plane-branch semigroups
/// (gcd one, n_i betabar_i in the previous subsemigroup, n_i betabar_i <
/// betabar_{i+1}) plus the structural preconditions they rely on.
inline ValidationReport validate_plane_semigroup(const std::vector<Integer>& gens) {
  ValidationReport report;
  report.gens = gens;

  bool shape_ok = gens.size() >= 2;
  std::string shape_detail = shape_ok ? "" : "need at least two generators (g >= 1)";
  for (std::size_t i = 0; shape_ok && i < gens.size(); ++i) {
    if (gens[i] < 2) {
      shape_ok = false;
      shape_detail = "generator " + gens[i].str() + " is smaller than 2";
    } else if (i > 0 && gens[i] <= gens[i - 1]) {
      shape_ok = false;
      shape_detail = "generators must be strictly increasing";
    }
  }
  report.conditions.push_back({"increasing", 0, shape_ok, shape_ok ? "generators strictly increasing, all >= 2" : shape_detail, {}});
  if (!shape_ok) return report;

  const std::size_t g = gens.size() - 1;
  std::vector<Integer> e(g + 1), n(g + 1, 0);
  e[0] = gens[0];
  bool chain_ok = true;
  std::size_t chain_bad = 0;
  for (std::size_t i = 1; i <= g; ++i) {
    e[i] = gcd(e[i - 1], gens[i]);
    n[i] = e[i - 1] / e[i];
    if (n[i] == 1 && chain_ok) {
      chain_ok = false;
      chain_bad = i;
    }
  }

  const bool gcd_ok = e[g] == 1;
  report.conditions.push_back({"gcd", 0, gcd_ok, "gcd of generators is " + e[g].str(), {}});
  report.conditions.push_back({"strict_gcd_chain", chain_bad, chain_ok,
                               chain_ok ? "e_{i-1} does not divide betabar_i for all i"
                                        : "e" + std::to_string(chain_bad - 1) + " divides betabar" +
                                              std::to_string(chain_bad) + " (generator not minimal)",
                               {}});

  for (std::size_t i = 1; i <= g; ++i) {
    const Integer target = n[i] * gens[i];
    std::vector<Integer> prior(gens.begin(), gens.begin() + static_cast<std::ptrdiff_t>(i));
    auto mem = membership(prior, target);
    std::string detail = "n" + std::to_string(i) + "*betabar" + std::to_string(i) + " = " + target.str();
    if (mem.member) {
      detail += " =";
      for (std::size_t l = 0; l < i; ++l) {
        detail += (l ? " + " : " ") + mem.representation[l].str() + "*" + gens[l].str();
      }
    } else {
      detail += " is not in the subsemigroup of the previous generators";
    }
    report.conditions.push_back({"membership", i, mem.member, detail, mem.representation});
  }

  for (std::size_t i = 1; i < g; ++i) {
    const Integer lhs = n[i] * gens[i];
    const bool ok = lhs < gens[i + 1];
    report.conditions.push_back({"inequality", i, ok,
                                 "n" + std::to_string(i) + "*betabar" + std::to_string(i) + " = " + lhs.str() +
                                     (ok ? " < " : " >= ") + "betabar" + std::to_string(i + 1) + " = " +
                                     gens[i + 1].str(),
                                 {}});
  }
  return report;
}

/// Inverts the generator recursion: beta_1 = betabar_1 and
/// beta_i = betabar_i - n_{i-1} betabar_{i-1} + beta_{i-1}.
inline CharSeq charseq_from_semigroup(const PlaneSemigroup& sg) {
  auto report = validate_plane_semigroup(sg.gens);
  if (const auto* bad = report.first_failure())
    throw Error(ErrorKind::NotPlaneBranchSemigroup, bad->name + ": " + bad->detail);

  const std::size_t g = sg.g();
  CharSeq cs;
  cs.n = sg.gens[0];
  Integer e_prev = sg.gens[0], e_cur;
  Integer n_prev = 0, beta_prev = 0;
  for (std::size_t i = 1; i <= g; ++i) {
    e_cur = gcd(e_prev, sg.gens[i]);
    const Integer beta = (i == 1) ? sg.gens[1] : sg.gens[i] - n_prev * sg.gens[i - 1] + beta_prev;
    cs.betas.push_back(beta);
    n_prev = e_prev / e_cur;
    beta_prev = beta;
    e_prev = e_cur;
  }
  return cs;
}

namespace detail {

/// Fills k_1..k_g of the canonical representation and returns what is left
/// for k_0 * betabar_0 (negative exactly when s is a gap).
inline Integer canonical_tail(const BranchNumerics& bn, const Integer& s, std::vector<Integer>& k) {
  Integer rest = s;
  for (std::size_t l = bn.g(); l >= 1; --l) {
    // rest is divisible by e_l; choose k_l so that it becomes divisible by e_{l-1}.
    k[l] = mod((rest / bn.e[l]) * mod_inverse(bn.mbar[l], bn.n[l]), bn.n[l]);
    rest -= k[l] * bn.betabar[l];
  }
  return rest;
}

}  // namespace detail

/// Unique representation s = sum k_l betabar_l with k_0 >= 0 and
/// 0 <= k_l < n_l for l >= 1. Throws Error{NotInSemigroup}.
inline std::vector<Integer> canonical_representation(const BranchNumerics& bn, const Integer& s) {
  if (s < 0) throw Error(ErrorKind::NotInSemigroup, s.str() + " is negative");
  std::vector<Integer> k(bn.g() + 1, 0);
  const Integer rest = detail::canonical_tail(bn, s, k);
  if (rest < 0) throw Error(ErrorKind::NotInSemigroup, s.str() + " is a gap of the semigroup");
  k[0] = rest / bn.betabar[0];
  return k;
}

inline bool in_semigroup(const BranchNumerics& bn, const Integer& s) {
  if (s < 0) return false;
  std::vector<Integer> k(bn.g() + 1, 0);
  return detail::canonical_tail(bn, s, k) >= 0;
}

/// Number of gaps of the semigroup (integers in [0, c) outside it).
inline Integer gap_count(const BranchNumerics& bn) {
  Integer gaps = 0;
  for (Integer s = 0; s < bn.conductor; ++s)
    if (!in_semigroup(bn, s)) ++gaps;
  return gaps;
}

/// Parses "n,b1,...,bg" (commas or whitespace).
inline CharSeq parse_charseq(std::string_view text) {
  std::vector<Integer> values;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) values.push_back(parse_integer(token));
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ' || ch == ';' || ch == '\t') flush();
    else token.push_back(ch);
  }
  flush();
  if (values.empty()) throw Error(ErrorKind::Parse, "empty characteristic sequence");
  CharSeq cs;
  cs.n = values.front();
  cs.betas.assign(values.begin() + 1, values.end());
  return cs;
}

}  // namespace planebranch
