#pragma once

// Seeded random characteristic sequences for property checks.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "planebranch/arith.hpp"
#include "planebranch/semigroup.hpp"

namespace planebranch {

struct CorpusLimits {
  unsigned max_g = 4;
  unsigned max_n = 12;
  unsigned max_beta = 400;
};

inline std::vector<CharSeq> fixed_corpus() {
  auto cs = [](long n, std::vector<long> b) {
    CharSeq c;
    c.n = n;
    for (long v : b) c.betas.push_back(v);
    return c;
  };
  return {cs(2, {3}), cs(4, {9}), cs(4, {6, 7}), cs(6, {9, 22})};
}

/// Draws a strictly decreasing divisor chain n = e_0 > ... > e_g = 1, then
/// beta_i in (beta_{i-1}, max_beta] with gcd(e_{i-1}, beta_i) = e_i.
inline CharSeq random_charseq(std::mt19937_64& rng, const CorpusLimits& lim = {}) {
  auto uniform = [&](unsigned lo, unsigned hi) { return lo + static_cast<unsigned>(rng() % (hi - lo + 1)); };
  while (true) {
    const unsigned n = uniform(2, lim.max_n);
    std::vector<unsigned> e = {n};
    while (e.back() > 1 && e.size() <= lim.max_g) {
      std::vector<unsigned> divisors;
      for (unsigned d = 1; d < e.back(); ++d)
        if (e.back() % d == 0) divisors.push_back(d);
      e.push_back(divisors[rng() % divisors.size()]);
    }
    if (e.back() != 1) continue;

    CharSeq cs;
    cs.n = n;
    unsigned prev = n;
    bool ok = true;
    for (std::size_t i = 1; ok && i < e.size(); ++i) {
      // smallest admissible multiple of e_i above prev, plus a random number of steps
      std::vector<unsigned> options;
      for (unsigned b = (prev / e[i] + 1) * e[i]; b <= lim.max_beta && options.size() < 12; b += e[i])
        if (std::gcd(b, e[i - 1]) == e[i]) options.push_back(b);
      if (options.empty()) {
        ok = false;
        break;
      }
      // leave room for the remaining exponents
      const std::size_t span = std::max<std::size_t>(1, options.size() / (e.size() - i));
      prev = options[rng() % span];
      cs.betas.push_back(prev);
    }
    if (ok) return cs;
  }
}

inline std::vector<CharSeq> random_corpus(std::size_t count, std::uint64_t seed, const CorpusLimits& lim = {}) {
  std::mt19937_64 rng(seed);
  std::vector<CharSeq> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_charseq(rng, lim));
  return out;
}

}  // namespace planebranch
