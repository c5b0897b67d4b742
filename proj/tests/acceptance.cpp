// Acceptance criteria, one PASS/FAIL line each.
//
//   acceptance        run all seven
//   acceptance N      run criterion N only
//
// Exit status is 1 if any selected criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "planebranch/planebranch.hpp"

namespace pb = planebranch;
using pb::Rational;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail = what;
      pass = false;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

pb::BranchNumerics numerics_of(long n, std::vector<long> betas) {
  pb::CharSeq cs;
  cs.n = n;
  for (long b : betas) cs.betas.push_back(b);
  return pb::derive_numerics(cs);
}

Outcome example_four_nine() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto bn = numerics_of(4, {9});
  for (unsigned long nu = 0; nu < 200; ++nu)
    o.require(pb::candidate_sigma(bn, 1, nu) == Rational(-(13 + long(nu)), 36), "sigma_{1," + std::to_string(nu) + "}");
  const auto p = pb::candidate_pole(bn, 1, 2);
  o.require(p.sigma == Rational(-5, 12), "sigma = " + pb::to_string(p.sigma));
  o.require(p.eps1 == Rational(-9, 4), "eps1 = " + pb::to_string(p.eps1));
  o.require(p.eps2 == Rational(-4, 3), "eps2 = " + pb::to_string(p.eps2));
  const auto v = pb::gamma_ratio_product({{p.eps1 + 3, -p.eps1 - 2}, {p.sigma, 1 - p.sigma}, {p.eps2 + 2, -p.eps2 - 1}});
  o.require(v.order == 0 && v.value && std::abs(*v.value) > 0, "gamma ratio order " + std::to_string(v.order));
  const double t = seconds_since(t0);
  o.require(t < 1.0, "runtime " + std::to_string(t) + " s");
  if (o.pass)
    o.detail = "sigma=-5/12 eps1=-9/4 eps2=-4/3, gamma ratio order 0 value " + pb::format_complex(*v.value) + ", " +
               std::to_string(t) + " s";
  return o;
}

Outcome corpus_identities() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto rows = pb::verify_combinatorics(pb::acceptance_corpus());
  long cases = 0;
  for (const auto& r : rows) {
    o.require(r.pass, r.name + ": " + r.got);
    cases += std::atol(r.expected.c_str());
  }
  const double t = seconds_since(t0);
  o.require(t < 120.0, "runtime " + std::to_string(t) + " s");
  if (o.pass) o.detail = std::to_string(cases) + " exact checks on 204 branches, " + std::to_string(t) + " s";
  return o;
}

Outcome cusp() {
  Outcome o;
  const auto bn = numerics_of(2, {3});
  const auto pi = pb::pi_multisets(bn).merged;
  o.require(pi.expanded() == std::vector<Rational>{Rational(5, 6), Rational(7, 6)}, "Pi = " + pb::multiset_text(pi));
  o.require(pb::log_canonical_threshold(bn) == Rational(5, 6), "lct");
  o.require(bn.milnor == 2, "mu");
  if (o.pass) o.detail = "Pi = {5/6, 7/6}, lct = 5/6, mu = 2";
  return o;
}

Outcome quadrature() {
  Outcome o;
  double worst = 0.0, slowest = 0.0;
  std::size_t count = 0;
  for (const auto& c : pb::rnm_quadrature_cases()) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto closed = pb::rnm_closed_form(c.params());
    const auto quad = pb::rnm_quadrature(c.params());
    const double t = seconds_since(t0);
    const double err = std::abs(quad.value - *closed.value) / std::abs(*closed.value);
    o.require(err <= 1e-4, c.name() + " relerr " + std::to_string(err));
    o.require(t <= 60.0, c.name() + " took " + std::to_string(t) + " s");
    worst = std::max(worst, err);
    slowest = std::max(slowest, t);
    ++count;
  }
  std::size_t sym = 0;
  for (const auto& r : pb::verify_symmetry(1e-10)) {
    o.require(r.pass, "symmetry " + r.name);
    ++sym;
  }
  if (o.pass) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu quadrature cases, max relerr %.2e, slowest %.2f s; %zu symmetry cases", count,
                  worst, slowest, sym);
    o.detail = buf;
  }
  return o;
}

Outcome hypergeometric() {
  Outcome o;
  std::string summary;
  for (const auto& hc : pb::hypergeom_cases()) {
    const auto r = pb::hypergeom_sum_at_1(hc.a, hc.b, hc.c, 10000);
    char buf[200];
    std::snprintf(buf, sizeof buf, "(%s,%s,%s) partial relerr %.3e (need %.0e), extrapolated %.1e",
                  pb::to_string(hc.a).c_str(), pb::to_string(hc.b).c_str(), pb::to_string(hc.c).c_str(), r.relerr,
                  hc.tol, r.extrapolated_relerr);
    o.require(r.relerr <= hc.tol, buf);
    summary += (summary.empty() ? "" : "; ") + std::string(buf);
  }
  if (o.pass) o.detail = summary;
  return o;
}

Outcome vanishing() {
  Outcome o;
  double worst = 0.0;
  for (const auto& r : pb::verify_vanishing()) {
    o.require(r.pass, r.name + " got " + r.got);
    worst = std::max(worst, r.relerr);
  }
  if (o.pass) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "max residual/mass %.2e, n = 0 cancels exactly", worst);
    o.detail = buf;
  }
  return o;
}

Outcome curves() {
  Outcome o;
  for (const auto& r : pb::verify_curves()) o.require(r.pass, r.name + ": got " + r.got);
  long equations = 0;
  for (const auto& cs : pb::acceptance_corpus()) {
    const auto c = pb::check_parametric_annihilation(pb::derive_numerics(cs));
    o.require(c.ok, c.detail);
    equations += c.cases;
  }
  if (o.pass) o.detail = "plane equations, deformations {x^7*y, x^5*y^2}, " + std::to_string(equations) + " monomial-curve equations vanish";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"four-nine example", example_four_nine}, {"corpus identities", corpus_identities},
      {"cusp golden values", cusp},             {"quadrature vs closed form", quadrature},
      {"hypergeometric sum", hypergeometric},   {"vanishing integral", vanishing},
      {"curve generation", curves}};
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  if (argc > 2 || only < 0 || only > int(criteria.size())) {
    std::fprintf(stderr, "usage: acceptance [1-%zu]\n", criteria.size());
    return 2;
  }
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    if (only && int(k) + 1 != only) continue;
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = e.what();
    }
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), o.detail.c_str());
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
