#pragma once

// Aggregated analysis of one plane branch.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "planebranch/arith.hpp"
#include "planebranch/errors.hpp"
#include "planebranch/poles.hpp"
#include "planebranch/resolution.hpp"
#include "planebranch/semigroup.hpp"

namespace planebranch {

enum class InputKind { CharSeq, Semigroup };

struct BranchInput {
  InputKind kind = InputKind::CharSeq;
  std::string text;
  std::vector<Integer> values;
};

/// "n,b1,...,bg" or "semigroup:g0,g1,...,gg". Throws Error{Parse} on bad syntax only.
inline BranchInput parse_input(std::string_view text) {
  BranchInput in;
  in.text = std::string(text);
  constexpr std::string_view prefix = "semigroup:";
  std::string_view body = text;
  if (body.substr(0, prefix.size()) == prefix) {
    in.kind = InputKind::Semigroup;
    body.remove_prefix(prefix.size());
  }
  const CharSeq raw = parse_charseq(body);
  in.values.push_back(raw.n);
  in.values.insert(in.values.end(), raw.betas.begin(), raw.betas.end());
  return in;
}

/// Resolves an input to its numerics. A semigroup that fails validation
/// throws Error{NotPlaneBranchSemigroup}; use validate_plane_semigroup for details.
inline BranchNumerics resolve_input(const BranchInput& in) {
  if (in.kind == InputKind::Semigroup) return derive_numerics(charseq_from_semigroup(PlaneSemigroup{in.values}));
  CharSeq cs;
  cs.n = in.values.front();
  cs.betas.assign(in.values.begin() + 1, in.values.end());
  return derive_numerics(cs);
}

struct Resonance {
  Rational sigma;
  std::vector<std::pair<std::size_t, unsigned long>> members;  // (i, nu)
};

struct ReportOptions {
  std::optional<unsigned long> nu_max;  // overrides [0, n_i betabar_i)
};

struct BranchReport {
  BranchNumerics numerics;
  Integer gaps;
  std::vector<ToricStep> toric_steps;
  std::vector<DivisorNumerics> divisors;
  Rational lct;
  std::vector<CandidatePole> candidates;
  PiSets pi;
  ExponentMultiset yano;
  EigenvalueAnalysis eigenvalues;
  std::vector<Resonance> resonances;
  std::string verdict;
};

inline std::vector<Resonance> find_resonances(const std::vector<CandidatePole>& candidates) {
  std::map<Rational, Resonance> by_sigma;
  for (const auto& c : candidates) {
    if (c.status != PoleStatus::PoleCandidate) continue;
    auto& r = by_sigma[c.sigma];
    r.sigma = c.sigma;
    r.members.emplace_back(c.i, c.nu);
  }
  std::vector<Resonance> out;
  for (auto& [sigma, r] : by_sigma) {
    bool cross = false;
    for (const auto& mem : r.members) cross = cross || mem.first != r.members.front().first;
    if (cross) out.push_back(std::move(r));
  }
  return out;
}

inline BranchReport branch_report(const BranchNumerics& bn, const ReportOptions& opts = {}) {
  BranchReport rep;
  rep.numerics = bn;
  rep.gaps = gap_count(bn);
  rep.toric_steps = toric_steps(bn);
  rep.divisors = divisor_numerics(bn);
  rep.lct = log_canonical_threshold(bn);
  for (const auto& step : rep.toric_steps) {
    const unsigned long limit =
        opts.nu_max ? *opts.nu_max : narrow<unsigned long>(bn.n[step.i] * bn.betabar[step.i], "n_i betabar_i");
    for (unsigned long nu = 0; nu < limit; ++nu) rep.candidates.push_back(candidate_pole(bn, step, nu));
  }
  rep.pi = pi_multisets(bn);
  rep.yano = yano_multiset(bn);
  rep.eigenvalues = eigenvalue_analysis(rep.pi.merged);
  rep.resonances = find_resonances(rep.candidates);
  rep.verdict = rep.eigenvalues.distinct ? "proved-distinct" : "conjectural-generic";
  return rep;
}

inline BranchReport branch_report(std::string_view input, const ReportOptions& opts = {}) {
  return branch_report(resolve_input(parse_input(input)), opts);
}

}  // namespace planebranch
