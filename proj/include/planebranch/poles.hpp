#pragma once

// Candidate poles attached to the rupture divisors, their residue numbers,
// the filtered b-exponent sets and Yano's generating series.

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "planebranch/arith.hpp"
#include "planebranch/errors.hpp"
#include "planebranch/resolution.hpp"
#include "planebranch/semigroup.hpp"

namespace planebranch {

enum class PoleStatus { PoleCandidate, ExcludedDeadEnd, ExcludedPrevious, ExcludedBoth };

inline std::string_view to_string(PoleStatus s) {
  switch (s) {
    case PoleStatus::PoleCandidate: return "PoleCandidate";
    case PoleStatus::ExcludedDeadEnd: return "ExcludedDeadEnd";
    case PoleStatus::ExcludedPrevious: return "ExcludedPrevious";
    case PoleStatus::ExcludedBoth: return "ExcludedBoth";
  }
  return "?";
}

struct ResidueNumbers {
  Rational eps1, eps2;
};

struct CandidatePole {
  std::size_t i = 0;
  unsigned long nu = 0;
  Rational sigma;
  Rational eps1, eps2, eps3;
  PoleStatus status = PoleStatus::PoleCandidate;
};

namespace detail {

inline void check_rupture_index(const BranchNumerics& bn, std::size_t i) {
  if (i < 1 || i > bn.g()) throw Error(ErrorKind::IndexOutOfRange, "rupture index must lie in 1..g");
}

}  // namespace detail

/// sigma_{i,nu} = -(m_i + n_1...n_i + nu) / (n_i betabar_i).
inline Rational candidate_sigma(const BranchNumerics& bn, std::size_t i, const Integer& nu) {
  detail::check_rupture_index(bn, i);
  return Rational(-(bn.m[i] + bn.nprod(1, i) + nu), bn.n[i] * bn.betabar[i]);
}

/// Residue numbers along the i-th rupture divisor:
///   eps1 + 1 = (1 - a_i nu) / n_i
///   eps2 + 1 = (m_{i-1} - n_{i-1} mbar_{i-1} + n_1...n_{i-1} - (c_i n_{i-1} mbar_{i-1} + d_i) nu) / mbar_i
inline ResidueNumbers residue_numbers(const BranchNumerics& bn, const ToricStep& step, const Integer& nu) {
  const std::size_t i = step.i;
  detail::check_rupture_index(bn, i);
  ResidueNumbers r;
  r.eps1 = Rational(1 - step.a * nu, step.n) - 1;
  const Integer slope = step.c * bn.n[i - 1] * bn.mbar[i - 1] + step.d;
  const Integer offset = bn.m[i - 1] - bn.n[i - 1] * bn.mbar[i - 1] + bn.nprod(1, i - 1);
  r.eps2 = Rational(offset - slope * nu, bn.mbar[i]) - 1;
  return r;
}

inline ResidueNumbers residue_numbers(const BranchNumerics& bn, std::size_t i, const Integer& nu) {
  detail::check_rupture_index(bn, i);
  return residue_numbers(bn, toric_step(bn, i), nu);
}

inline PoleStatus classify(const BranchNumerics& bn, std::size_t i, const Rational& sigma) {
  const bool dead_end = is_integer(sigma * bn.betabar[i]);
  const bool previous = is_integer(sigma * bn.e[i - 1]);
  if (dead_end && previous) return PoleStatus::ExcludedBoth;
  if (dead_end) return PoleStatus::ExcludedDeadEnd;
  if (previous) return PoleStatus::ExcludedPrevious;
  return PoleStatus::PoleCandidate;
}

inline CandidatePole candidate_pole(const BranchNumerics& bn, const ToricStep& step, unsigned long nu) {
  CandidatePole p;
  p.i = step.i;
  p.nu = nu;
  p.sigma = candidate_sigma(bn, step.i, nu);
  const auto eps = residue_numbers(bn, step, nu);
  p.eps1 = eps.eps1;
  p.eps2 = eps.eps2;
  p.eps3 = p.sigma * bn.e[step.i];
  p.status = classify(bn, step.i, p.sigma);
  return p;
}

inline CandidatePole candidate_pole(const BranchNumerics& bn, std::size_t i, unsigned long nu) {
  detail::check_rupture_index(bn, i);
  return candidate_pole(bn, toric_step(bn, i), nu);
}

/// Rational exponents with integer multiplicities. Counts may be negative
/// while a signed series is being assembled; `finalize` enforces positivity.
class ExponentMultiset {
 public:
  using Map = std::map<Rational, Integer>;

  void add(const Rational& exponent, const Integer& count = 1) {
    auto [it, inserted] = entries_.try_emplace(exponent, 0);
    it->second += count;
    if (it->second == 0) entries_.erase(it);
  }

  void merge(const ExponentMultiset& other) {
    for (const auto& [x, c] : other.entries_) add(x, c);
  }

  const Map& entries() const { return entries_; }

  Integer total() const {
    Integer t = 0;
    for (const auto& [x, c] : entries_) t += c;
    return t;
  }

  Integer count(const Rational& exponent) const {
    auto it = entries_.find(exponent);
    return it == entries_.end() ? Integer(0) : it->second;
  }

  bool contains(const Rational& exponent) const { return count(exponent) > 0; }
  std::size_t distinct_size() const { return entries_.size(); }

  /// First exponent with a negative multiplicity, if any.
  const Rational* first_negative() const {
    for (const auto& [x, c] : entries_)
      if (c < 0) return &x;
    return nullptr;
  }

  /// Exponents in increasing order, repeated according to multiplicity.
  std::vector<Rational> expanded() const {
    std::vector<Rational> out;
    for (const auto& [x, c] : entries_)
      for (Integer r = 0; r < c; ++r) out.push_back(x);
    return out;
  }

  friend bool operator==(const ExponentMultiset&, const ExponentMultiset&) = default;

 private:
  Map entries_;
};

struct PiSets {
  std::vector<ExponentMultiset> per_rupture;  // index 0 holds Pi_1
  ExponentMultiset merged;
};

/// Expected size n_i betabar_i - betabar_i - n_i e_i + e_i of Pi_i.
inline Integer pi_expected_size(const BranchNumerics& bn, std::size_t i) {
  return bn.n[i] * bn.betabar[i] - bn.betabar[i] - bn.n[i] * bn.e[i] + bn.e[i];
}

/// Pi_i = { -sigma_{i,nu} : 0 <= nu < n_i betabar_i, betabar_i sigma, e_{i-1} sigma not integers },
/// stored as positive b-exponents.
inline PiSets pi_multisets(const BranchNumerics& bn) {
  PiSets out;
  for (std::size_t i = 1; i <= bn.g(); ++i) {
    ExponentMultiset pi;
    const auto period = narrow<unsigned long>(bn.n[i] * bn.betabar[i], "n_i betabar_i");
    for (unsigned long nu = 0; nu < period; ++nu) {
      const Rational sigma = candidate_sigma(bn, i, nu);
      if (classify(bn, i, sigma) == PoleStatus::PoleCandidate) pi.add(-sigma);
    }
    out.merged.merge(pi);
    out.per_rupture.push_back(std::move(pi));
  }
  return out;
}

/// Yano's integers (r_i, R_i) for i = 1..g and (r'_i, R'_i) for i = 0..g,
/// computed from the characteristic sequence. Index 0 of r and R is unused.
struct YanoData {
  std::vector<Integer> r, R, r_prime, R_prime;
};

inline YanoData yano_data(const BranchNumerics& bn) {
  const std::size_t g = bn.g();
  YanoData y;
  y.r.assign(g + 1, 0);
  y.R.assign(g + 1, 0);
  y.r_prime.assign(g + 1, 0);
  y.R_prime.assign(g + 1, 0);
  const Integer& n = bn.multiplicity();
  y.r_prime[0] = 2;
  y.R_prime[0] = n;
  for (std::size_t i = 1; i <= g; ++i) {
    y.r[i] = (bn.beta[i] + n) / bn.e[i];
    Integer num = bn.beta[i] * bn.e[i - 1];
    for (std::size_t l = 1; l < i; ++l) num += bn.beta[l] * (bn.e[l - 1] - bn.e[l]);
    y.R[i] = num / bn.e[i];
    y.r_prime[i] = floor_div(y.r[i] * bn.e[i], bn.e[i - 1]) + 1;
    y.R_prime[i] = y.R[i] * bn.e[i] / bn.e[i - 1];
  }
  return y;
}

/// Expands Yano's series with (1 - t)/(1 - t^{1/R}) = sum_{j<R} t^{j/R}.
/// Throws Error{NegativeCoefficient} if any final multiplicity is negative.
inline ExponentMultiset yano_multiset(const BranchNumerics& bn) {
  const auto y = yano_data(bn);
  ExponentMultiset series;
  for (std::size_t i = 1; i <= bn.g(); ++i) {
    const auto R = narrow<unsigned long>(y.R[i], "R_i");
    for (unsigned long j = 0; j < R; ++j) series.add(Rational(y.r[i] + j, y.R[i]), 1);
  }
  for (std::size_t i = 0; i <= bn.g(); ++i) {
    const auto R = narrow<unsigned long>(y.R_prime[i], "R'_i");
    for (unsigned long j = 0; j < R; ++j) series.add(Rational(y.r_prime[i] + j, y.R_prime[i]), -1);
  }
  series.add(Rational(1), 1);
  if (const Rational* bad = series.first_negative())
    throw Error(ErrorKind::NegativeCoefficient, "coefficient of t^" + to_string(*bad) + " is negative");
  return series;
}

struct EigenvalueClass {
  Rational residue;  // exponent mod 1
  std::vector<std::pair<Rational, Integer>> members;
};

struct EigenvalueAnalysis {
  bool distinct = true;
  std::vector<EigenvalueClass> classes;
};

/// Groups exponents by their class mod 1, i.e. by the monodromy eigenvalue exp(-2 pi i alpha).
inline EigenvalueAnalysis eigenvalue_analysis(const ExponentMultiset& pi) {
  std::map<Rational, EigenvalueClass> by_class;
  for (const auto& [x, c] : pi.entries()) {
    auto& cls = by_class[frac(x)];
    cls.residue = frac(x);
    cls.members.emplace_back(x, c);
  }
  EigenvalueAnalysis out;
  for (auto& [key, cls] : by_class) {
    if (cls.members.size() != 1 || cls.members.front().second != 1) out.distinct = false;
    out.classes.push_back(std::move(cls));
  }
  return out;
}

/// Log canonical threshold (m_1 + n_1) / (n_1 betabar_1) = -sigma_{1,0}.
inline Rational log_canonical_threshold(const BranchNumerics& bn) {
  return Rational(bn.m[1] + bn.n[1], bn.n[1] * bn.betabar[1]);
}

}  // namespace planebranch
