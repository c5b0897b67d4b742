#pragma once

// Verification suites: exact identities over a corpus of branches and
// numerical cross-checks of the residue kernel.

#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "planebranch/arith.hpp"
#include "planebranch/corpus.hpp"
#include "planebranch/curves.hpp"
#include "planebranch/errors.hpp"
#include "planebranch/poles.hpp"
#include "planebranch/quadrature.hpp"
#include "planebranch/resolution.hpp"
#include "planebranch/residue.hpp"
#include "planebranch/semigroup.hpp"

namespace planebranch {

inline constexpr std::uint64_t kCorpusSeed = 1729;

struct CheckResult {
  std::string name;
  bool ok = true;
  long cases = 0;
  std::string detail;  // first failure

  CheckResult(std::string n = {}) : name(std::move(n)) {}

  void fail(const std::string& d) {
    if (ok) detail = d;
    ok = false;
  }
};

inline std::string describe(const BranchNumerics& bn) {
  std::string s = "(" + bn.multiplicity().str() + ";";
  for (std::size_t i = 1; i <= bn.g(); ++i) s += (i > 1 ? "," : "") + bn.beta[i].str();
  return s + ")";
}

/// eps1 + eps2 + e_i sigma + nu + 2 = 0 for 0 <= nu < nu_limit.
inline CheckResult check_residue_relation(const BranchNumerics& bn, unsigned long nu_limit) {
  CheckResult r{"residue_relation"};
  for (const auto& step : toric_steps(bn))
    for (unsigned long nu = 0; nu < nu_limit; ++nu) {
      const auto p = candidate_pole(bn, step, nu);
      ++r.cases;
      if (p.eps1 + p.eps2 + p.eps3 + nu + 2 != 0)
        r.fail(describe(bn) + " i=" + std::to_string(step.i) + " nu=" + std::to_string(nu));
    }
  return r;
}

/// betabar_i sigma in Z <=> eps1 in Z and e_{i-1} sigma in Z <=> eps2 in Z.
inline CheckResult check_integrality(const BranchNumerics& bn, unsigned long nu_limit) {
  CheckResult r{"integrality"};
  for (const auto& step : toric_steps(bn))
    for (unsigned long nu = 0; nu < nu_limit; ++nu) {
      const auto p = candidate_pole(bn, step, nu);
      ++r.cases;
      const bool dead = is_integer(p.sigma * bn.betabar[step.i]);
      const bool prev = is_integer(p.sigma * bn.e[step.i - 1]);
      if (dead != is_integer(p.eps1) || prev != is_integer(p.eps2))
        r.fail(describe(bn) + " i=" + std::to_string(step.i) + " nu=" + std::to_string(nu));
    }
  return r;
}

/// |Pi_i| matches its closed size and sum |Pi_i| = mu = conductor.
inline CheckResult check_pi_cardinality(const BranchNumerics& bn) {
  CheckResult r{"pi_cardinality"};
  const auto pi = pi_multisets(bn);
  Integer total = 0;
  for (std::size_t i = 1; i <= bn.g(); ++i) {
    ++r.cases;
    const Integer size = pi.per_rupture[i - 1].total();
    total += size;
    if (size != pi_expected_size(bn, i)) r.fail(describe(bn) + " |Pi_" + std::to_string(i) + "| = " + size.str());
  }
  ++r.cases;
  if (total != bn.milnor || total != bn.conductor) r.fail(describe(bn) + " total " + total.str());
  return r;
}

inline CheckResult check_pi_equals_yano(const BranchNumerics& bn) {
  CheckResult r{"pi_equals_yano"};
  ++r.cases;
  try {
    if (!(yano_multiset(bn) == pi_multisets(bn).merged)) r.fail(describe(bn) + " multisets differ");
  } catch (const Error& e) {
    r.fail(describe(bn) + " " + e.what());
  }
  return r;
}

/// Exhaustive check over k with entries in [0, max_entry] of the A + C
/// identity, the closed forms of A and C on rho = nu, and the four bounds
/// for 0 <= rho <= nu_max.
inline CheckResult check_strict_transform(const BranchNumerics& bn, unsigned max_entry, unsigned long nu_max) {
  CheckResult r{"strict_transform"};
  for (std::size_t i = 1; i <= bn.g(); ++i) {
    const auto step = toric_step(bn, i);
    const Integer K = step.c * bn.n[i - 1] * bn.mbar[i - 1] + step.d;
    const Integer Aslope = step.a * bn.n[i - 1] * bn.mbar[i - 1] + step.b;
    for (std::size_t j = i; j <= bn.g(); ++j) {
      const auto forms = strict_transform_forms(bn, step, j);
      const Integer top = bn.nprod(i + 1, j);
      std::vector<Integer> k(j + 1, 0);
      while (true) {
        ++r.cases;
        const Integer rho = forms.rho(k), A = forms.A(k), C = forms.C(k);
        auto where = [&] {
          std::string s = describe(bn) + " i=" + std::to_string(i) + " j=" + std::to_string(j) + " k=(";
          for (std::size_t l = 0; l <= j; ++l) s += (l ? "," : "") + k[l].str();
          return s + ")";
        };
        Integer extra = 0;
        for (std::size_t l = i + 1; l <= j; ++l) extra += bn.nprod(i + 1, l - 1) * k[l];
        if (A + C + extra != rho + top) r.fail("A+C identity " + where());
        if (bn.n[i] * A != step.a * rho + k[i]) r.fail("A closed form " + where());
        Integer low = 0;
        for (std::size_t l = 0; l < i; ++l) low += bn.nprod(l + 1, i - 1) * bn.mbar[l] * k[l];
        if (bn.mbar[i] * C != K * rho + low) r.fail("C closed form " + where());
        if (rho >= 0 && rho <= nu_max) {
          if (bn.n[i] * A < step.a * rho) r.fail("min A " + where());
          if (bn.mbar[i] * C < K * rho) r.fail("min C " + where());
          if (bn.mbar[i] * A > Aslope * rho + bn.mbar[i] * top) r.fail("max A " + where());
          if (bn.n[i] * C > step.c * rho + bn.n[i] * top) r.fail("max C " + where());
        }
        std::size_t l = 0;
        while (l <= j && ++k[l] > max_entry) k[l++] = 0;
        if (l > j) break;
      }
    }
  }
  return r;
}

/// h_i(t^{betabar_0}, ..., t^{betabar_g}) = 0 for every monomial-curve equation.
inline CheckResult check_parametric_annihilation(const BranchNumerics& bn) {
  CheckResult r{"parametric_annihilation"};
  for (const auto& h : monomial_curve_equations(bn)) {
    ++r.cases;
    if (!substitute_weights(h, bn.betabar).empty()) r.fail(describe(bn) + " " + h.to_string());
  }
  return r;
}

inline std::vector<CharSeq> acceptance_corpus() {
  auto all = fixed_corpus();
  for (auto& cs : random_corpus(200, kCorpusSeed)) all.push_back(std::move(cs));
  return all;
}

struct VerifyRow {
  std::string suite, name, expected, got;
  double relerr = 0.0;
  bool pass = false;
};

inline std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline std::string format_complex(Complex z) {
  return format_double(z.real()) + (z.imag() < 0 || std::signbit(z.imag()) ? "-" : "+") +
         format_double(std::abs(z.imag())) + "i";
}

struct RnmCase {
  Rational alpha, beta;
  long long n = 0, m = 0;
  double lambda = 1.0;

  RnmParams params() const { return RnmParams{alpha, n, beta, m, Complex(lambda, 0.0)}; }
  std::string name() const {
    return "alpha=" + to_string(alpha) + " n=" + std::to_string(n) + " beta=" + to_string(beta) +
           " m=" + std::to_string(m) + " lambda=" + format_double(lambda);
  }
};

inline bool in_convergence_region(const RnmParams& p) {
  const Rational a = 2 * p.alpha + p.n, b = 2 * p.beta + p.m;
  return a > -2 && b > -2 && a + b < -2;
}

/// The full grid n, m in -2..2, three (alpha, beta) pairs, lambda in {1, 2}.
inline std::vector<RnmCase> rnm_grid() {
  const std::vector<std::pair<Rational, Rational>> pairs = {
      {Rational(-3, 5), Rational(-7, 10)}, {Rational(-2, 3), Rational(-2, 3)}, {Rational(-11, 20), Rational(-19, 20)}};
  std::vector<RnmCase> out;
  for (const auto& [a, b] : pairs)
    for (long long n = -2; n <= 2; ++n)
      for (long long m = -2; m <= 2; ++m)
        for (double lam : {1.0, 2.0}) out.push_back({a, b, n, m, lam});
  return out;
}

/// Convergent cases: the grid restricted to the convergence region, plus
/// cases with nonzero n, m (the grid only keeps n = m = 0).
inline std::vector<RnmCase> rnm_quadrature_cases() {
  std::vector<RnmCase> out;
  for (const auto& c : rnm_grid())
    if (in_convergence_region(c.params())) out.push_back(c);
  out.push_back({Rational(-3, 5), Rational(-3, 5), 0, 0, 1.0});
  out.push_back({Rational(-9, 10), Rational(-9, 10), 1, 0, 1.0});
  out.push_back({Rational(-3, 10), Rational(-4, 5), -1, 1, 1.0});
  out.push_back({Rational(-6, 5), Rational(-2, 5), 2, -1, 2.0});
  out.push_back({Rational(-11, 10), Rational(-11, 10), 1, 1, 0.5});
  return out;
}

inline std::vector<VerifyRow> verify_rnm(double tol, const QuadConfig& cfg = {}) {
  std::vector<VerifyRow> rows;
  for (const auto& c : rnm_quadrature_cases()) {
    VerifyRow row{"rnm", c.name(), "", ""};
    const auto closed = rnm_closed_form(c.params());
    const auto quad = rnm_quadrature(c.params(), cfg);
    row.expected = closed.value ? format_complex(*closed.value) : "order " + std::to_string(closed.order);
    row.got = format_complex(quad.value);
    if (closed.value) {
      row.relerr = std::abs(quad.value - *closed.value) / std::abs(*closed.value);
      row.pass = row.relerr <= tol;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::vector<VerifyRow> verify_symmetry(double tol = 1e-10) {
  std::vector<RnmCase> cases = rnm_grid();
  cases.push_back({Rational(-3, 5), Rational(-7, 10), 1, 0, 1.0});
  cases.push_back({Rational(-1, 3), Rational(-5, 4), -2, 1, 2.0});
  cases.push_back({Rational(0), Rational(-1, 2), -2, 0, 1.0});
  std::vector<VerifyRow> rows;
  for (const auto& c : cases) {
    VerifyRow row{"symmetry", c.name(), "", ""};
    const auto s = symmetry_check(c.params(), tol);
    auto show = [](const MeromorphicValue& v) {
      return v.value ? format_complex(*v.value) : "order " + std::to_string(v.order);
    };
    row.expected = show(s.lhs);
    row.got = show(s.rhs);
    row.relerr = s.relerr;
    row.pass = s.holds;
    rows.push_back(std::move(row));
  }
  // complex lambda compares against the conjugate
  for (Complex lam : {Complex(1.0, 1.0), Complex(-0.5, 2.0)}) {
    RnmParams p{Rational(-3, 5), 1, Rational(-7, 10), -2, lam};
    VerifyRow row{"symmetry", "alpha=-3/5 n=1 beta=-7/10 m=-2 lambda=" + format_complex(lam), "", ""};
    const auto s = symmetry_check(p, tol);
    row.expected = format_complex(*s.lhs.value);
    row.got = format_complex(*s.rhs.value);
    row.relerr = s.relerr;
    row.pass = s.holds;
    rows.push_back(std::move(row));
  }
  return rows;
}

struct HypergeomCase {
  Rational a, b, c;
  double tol;
};

inline std::vector<HypergeomCase> hypergeom_cases() {
  return {{1, 1, 3, 1e-6}, {Rational(1, 2), Rational(1, 2), 2, 1e-3}, {Rational(1, 3), Rational(1, 6), 2, 1e-3}};
}

inline std::vector<VerifyRow> verify_hypergeometric(unsigned long K = 10000) {
  std::vector<VerifyRow> rows;
  for (const auto& hc : hypergeom_cases()) {
    const auto r = hypergeom_sum_at_1(hc.a, hc.b, hc.c, K);
    const std::string name = "a=" + to_string(hc.a) + " b=" + to_string(hc.b) + " c=" + to_string(hc.c) +
                             " K=" + std::to_string(K);
    rows.push_back({"hypergeometric", name + " partial", format_complex(r.closed), format_complex(r.partial), r.relerr,
                    r.relerr <= hc.tol});
    rows.push_back({"hypergeometric", name + " extrapolated", format_complex(r.closed), format_complex(r.extrapolated),
                    r.extrapolated_relerr, r.extrapolated_relerr <= hc.tol});
  }
  return rows;
}

inline std::vector<VerifyRow> verify_vanishing(const QuadConfig& cfg = {}) {
  std::vector<VerifyRow> rows;
  struct Case {
    long long n;
    Rational alpha;
    double R;
  };
  for (const auto& c : {Case{1, Rational(-1, 4), 1.0}, Case{3, Rational(-3, 4), 2.0}, Case{1, Rational(-1, 3), 3.0},
                        Case{-2, Rational(1, 2), 1.5}}) {
    const auto v = vanishing_integral_check(c.n, c.alpha, c.R, cfg);
    rows.push_back({"vanishing",
                    "n=" + std::to_string(c.n) + " alpha=" + to_string(c.alpha) + " R=" + format_double(c.R), "0",
                    format_complex(v.value), v.ratio, v.ratio <= 1e-8});
  }
  for (const Rational& a : {Rational(-1, 2), Rational(-3, 5), Rational(2, 7)}) {
    const auto s = vanishing_integral_symbolic(a);
    rows.push_back({"vanishing", "n=0 alpha=" + to_string(a) + " symbolic", "0",
                    to_string(s.inner) + " + " + to_string(s.outer) + " = " + to_string(s.sum), 0.0, s.sum == 0});
  }
  return rows;
}

inline std::vector<VerifyRow> verify_combinatorics(const std::vector<CharSeq>& corpus = acceptance_corpus()) {
  std::vector<CheckResult> totals = {{"residue_relation"}, {"integrality"},          {"pi_cardinality"},
                                     {"pi_equals_yano"},   {"strict_transform"},     {"parametric_annihilation"}};
  for (const auto& cs : corpus) {
    const auto bn = derive_numerics(cs);
    const CheckResult parts[] = {check_residue_relation(bn, 1000), check_integrality(bn, 1000),
                                 check_pi_cardinality(bn),         check_pi_equals_yano(bn),
                                 check_strict_transform(bn, 3, 40), check_parametric_annihilation(bn)};
    for (std::size_t k = 0; k < totals.size(); ++k) {
      totals[k].cases += parts[k].cases;
      if (!parts[k].ok) totals[k].fail(parts[k].detail);
    }
  }
  std::vector<VerifyRow> rows;
  for (const auto& t : totals)
    rows.push_back({"combinatorics", t.name + " (" + std::to_string(corpus.size()) + " branches)",
                    std::to_string(t.cases) + " ok", t.ok ? std::to_string(t.cases) + " ok" : t.detail, 0.0, t.ok});
  return rows;
}

inline std::vector<VerifyRow> verify_curves() {
  std::vector<VerifyRow> rows;
  auto add = [&](const std::string& name, const std::string& expected, const std::string& got) {
    rows.push_back({"curves", name, expected, got, 0.0, expected == got});
  };
  const auto b49 = derive_numerics(CharSeq{4, {9}});
  const auto b467 = derive_numerics(CharSeq{4, {6, 7}});
  add("plane <4,9>", "y^4 - x^9", plane_equation(b49).to_string());
  add("plane <4,6,13> nested", "(y^2 - x^3)^2 - x^5*y", nested_plane_equation(b467));
  add("plane <4,6,13>", "y^4 - 2*x^3*y^2 + x^6 - x^5*y", plane_equation(b467).to_string());
  std::string terms;
  for (const auto& t : deformation_family(b49, Integer(38)).terms) terms += (terms.empty() ? "" : ", ") + t.monomial.to_string();
  add("deformations <4,9> cutoff 38", "x^7*y, x^5*y^2", terms);
  const auto fam = deformation_family(b49, Integer(38), {}, CoefficientSource::explicit_values({{"t1_5_2", Rational(1)}}));
  add("instantiate t1_5_2 = 1", "y^4 + x^5*y^2 - x^9", instantiate(b49, fam).to_string());
  return rows;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"rnm",      "symmetry",      "hypergeometric",
                                                 "vanishing", "combinatorics", "curves"};
  return names;
}

inline std::vector<VerifyRow> run_suite(const std::string& suite, double tol, const QuadConfig& cfg = {}) {
  if (suite == "rnm") return verify_rnm(tol, cfg);
  if (suite == "symmetry") return verify_symmetry();
  if (suite == "hypergeometric") return verify_hypergeometric();
  if (suite == "vanishing") return verify_vanishing(cfg);
  if (suite == "combinatorics") return verify_combinatorics();
  if (suite == "curves") return verify_curves();
  throw Error(ErrorKind::Parse, "unknown suite " + suite);
}

}  // namespace planebranch
