#pragma once

// JSON, TSV and plain-text renderings. JSON objects use sorted keys,
// rationals are "p/q" strings and complex numbers are {"im", "re"}.

#include <cstdio>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "planebranch/arith.hpp"
#include "planebranch/curves.hpp"
#include "planebranch/polynomial.hpp"
#include "planebranch/report.hpp"
#include "planebranch/residue.hpp"
#include "planebranch/semigroup.hpp"
#include "planebranch/verify.hpp"

namespace planebranch {

using Json = nlohmann::json;

inline Json to_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return Json(v.convert_to<long long>());
  return Json(v.str());
}

inline Json to_json(const Rational& r) { return Json(to_string(r)); }

inline Json to_json(const Complex& z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

template <class T>
Json to_json_array(const std::vector<T>& xs, std::size_t from = 0) {
  Json a = Json::array();
  for (std::size_t k = from; k < xs.size(); ++k) a.push_back(to_json(xs[k]));
  return a;
}

inline Json to_json(const ExponentMultiset& ms) {
  Json a = Json::array();
  for (const auto& x : ms.expanded()) a.push_back(to_json(x));
  return a;
}

inline Json to_json(const ValidationReport& rep) {
  Json conds = Json::array();
  for (const auto& c : rep.conditions)
    conds.push_back({{"name", c.name},
                     {"index", c.index},
                     {"passed", c.passed},
                     {"detail", c.detail},
                     {"witness", to_json_array(c.witness)}});
  return Json{{"generators", to_json_array(rep.gens)}, {"conditions", conds}, {"ok", rep.ok()}};
}

inline Json numerics_json(const BranchNumerics& bn, const Integer& gaps) {
  return Json{{"g", bn.g()},
              {"n", to_json(bn.multiplicity())},
              {"beta", to_json_array(bn.beta, 1)},
              {"betabar", to_json_array(bn.betabar)},
              {"e", to_json_array(bn.e)},
              {"n_i", to_json_array(bn.n, 1)},
              {"m", to_json_array(bn.m, 1)},
              {"mbar", to_json_array(bn.mbar)},
              {"q", to_json_array(bn.q, 1)},
              {"conductor", to_json(bn.conductor)},
              {"mu", to_json(bn.milnor)},
              {"gaps", to_json(gaps)},
              {"tau", to_json(Integer(2 * gaps))}};
}

inline Json to_json(const CandidatePole& p) {
  return Json{{"i", p.i},
              {"nu", p.nu},
              {"sigma", to_json(p.sigma)},
              {"eps1", to_json(p.eps1)},
              {"eps2", to_json(p.eps2)},
              {"eps3", to_json(p.eps3)},
              {"status", std::string(to_string(p.status))}};
}

inline Json to_json(const BranchInput& in) {
  return Json{{"kind", in.kind == InputKind::Semigroup ? "semigroup" : "charseq"},
              {"text", in.text},
              {"values", to_json_array(in.values)}};
}

inline Json to_json(const BranchReport& rep, const BranchInput& in) {
  const auto& bn = rep.numerics;
  Json steps = Json::array();
  for (const auto& s : rep.toric_steps)
    steps.push_back({{"i", s.i},
                     {"n", to_json(s.n)},
                     {"q", to_json(s.q)},
                     {"a", to_json(s.a)},
                     {"b", to_json(s.b)},
                     {"c", to_json(s.c)},
                     {"d", to_json(s.d)}});
  Json divisors = Json::array();
  for (const auto& d : rep.divisors)
    divisors.push_back({{"i", d.i},
                        {"rupture", {{"N", to_json(d.N_rupture)}, {"k_plus_1", to_json(d.k_rupture_plus1)}}},
                        {"dead_end", {{"N", to_json(d.N_deadend)}, {"k_plus_1", to_json(d.k_deadend_plus1)}}}});
  Json candidates = Json::array();
  for (const auto& c : rep.candidates) candidates.push_back(to_json(c));
  Json per_rupture = Json::array();
  for (const auto& p : rep.pi.per_rupture) per_rupture.push_back(to_json(p));
  Json classes = Json::array();
  for (const auto& cls : rep.eigenvalues.classes) {
    Json members = Json::array();
    for (const auto& [x, c] : cls.members) members.push_back({{"exponent", to_json(x)}, {"multiplicity", to_json(c)}});
    classes.push_back({{"residue", to_json(cls.residue)}, {"members", members}});
  }
  Json resonances = Json::array();
  for (const auto& r : rep.resonances) {
    Json members = Json::array();
    for (const auto& [i, nu] : r.members) members.push_back({{"i", i}, {"nu", nu}});
    resonances.push_back({{"sigma", to_json(r.sigma)}, {"members", members}});
  }
  const auto y = yano_data(bn);
  return Json{{"input", to_json(in)},
              {"numerics", numerics_json(bn, rep.gaps)},
              {"mu", to_json(bn.milnor)},
              {"toric_steps", steps},
              {"divisors", divisors},
              {"lct", to_json(rep.lct)},
              {"candidates", candidates},
              {"pi", to_json(rep.pi.merged)},
              {"pi_by_rupture", per_rupture},
              {"yano", to_json(rep.yano)},
              {"yano_data",
               {{"r", to_json_array(y.r, 1)},
                {"R", to_json_array(y.R, 1)},
                {"r_prime", to_json_array(y.r_prime)},
                {"R_prime", to_json_array(y.R_prime)}}},
              {"eigenvalues", {{"distinct", rep.eigenvalues.distinct}, {"classes", classes}}},
              {"resonances", resonances},
              {"strict_transform_poles", "all negative integers"},
              {"verdict", rep.verdict}};
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? sep : "") + parts[k];
  return out;
}

inline std::string multiset_text(const ExponentMultiset& ms) {
  std::vector<std::string> parts;
  for (const auto& [x, c] : ms.entries()) parts.push_back(c == 1 ? to_string(x) : to_string(x) + "^" + c.str());
  return "{" + join(parts, ", ") + "}";
}

template <class T>
std::string list_text(const std::vector<T>& xs, std::size_t from = 0) {
  std::vector<std::string> parts;
  for (std::size_t k = from; k < xs.size(); ++k) parts.push_back(to_string(xs[k]));
  return join(parts, ",");
}

inline std::string report_text(const BranchReport& rep) {
  const auto& bn = rep.numerics;
  std::ostringstream os;
  os << "charseq      (" << bn.multiplicity() << ";" << list_text(bn.beta, 1) << ")\n";
  os << "semigroup    <" << list_text(bn.betabar) << ">\n";
  os << "e            " << list_text(bn.e) << "\n";
  os << "n_i          " << list_text(bn.n, 1) << "\n";
  os << "m_i          " << list_text(bn.m, 1) << "\n";
  os << "mbar_i       " << list_text(bn.mbar) << "\n";
  os << "conductor    " << bn.conductor << "\n";
  os << "mu           " << bn.milnor << "\n";
  os << "tau          " << 2 * rep.gaps << "\n";
  os << "lct          " << to_string(rep.lct) << "\n";
  for (const auto& s : rep.toric_steps)
    os << "toric " << s.i << "      n=" << s.n << " q=" << s.q << " a=" << s.a << " b=" << s.b << " c=" << s.c
       << " d=" << s.d << "\n";
  for (const auto& d : rep.divisors)
    os << "divisor " << d.i << "    rupture N=" << d.N_rupture << " k+1=" << d.k_rupture_plus1
       << "  dead-end N=" << d.N_deadend << " k+1=" << d.k_deadend_plus1 << "\n";
  for (std::size_t i = 0; i < rep.pi.per_rupture.size(); ++i)
    os << "Pi_" << i + 1 << "         " << multiset_text(rep.pi.per_rupture[i]) << "\n";
  os << "Pi           " << multiset_text(rep.pi.merged) << "\n";
  os << "yano         " << multiset_text(rep.yano) << "\n";
  os << "resonances   " << rep.resonances.size() << "\n";
  os << "distinct     " << (rep.eigenvalues.distinct ? "yes" : "no") << "\n";
  os << "verdict      " << rep.verdict << "\n";
  return os.str();
}

inline std::string report_tsv(const BranchReport& rep) {
  std::string out = "i\tnu\tsigma\teps1\teps2\teps3\tstatus\n";
  for (const auto& c : rep.candidates)
    out += std::to_string(c.i) + "\t" + std::to_string(c.nu) + "\t" + to_string(c.sigma) + "\t" + to_string(c.eps1) +
           "\t" + to_string(c.eps2) + "\t" + to_string(c.eps3) + "\t" + std::string(to_string(c.status)) + "\n";
  return out;
}

inline Json to_json(const MeromorphicValue& v) {
  Json reason = Json::array();
  for (const auto& t : v.reason)
    reason.push_back({{"label", t.label},
                      {"u", to_json(t.u)},
                      {"v", to_json(t.v)},
                      {"order", t.order},
                      {"value", t.value ? to_json(*t.value) : Json(nullptr)}});
  const auto shown = v.reported();
  return Json{{"order", v.order},
              {"value", shown ? to_json(*shown) : Json(nullptr)},
              {"indeterminate", v.indeterminate},
              {"reason", reason}};
}

inline std::string meromorphic_text(const MeromorphicValue& v) {
  std::ostringstream os;
  os << "order  " << v.order << "\n";
  const auto shown = v.reported();
  os << "value  " << (shown ? format_complex(*shown) : v.indeterminate ? "indeterminate" : "pole") << "\n";
  for (const auto& t : v.reason)
    os << "pair   " << t.label << " Gamma(" << to_string(t.u) << ")/Gamma(" << to_string(t.v) << ") order " << t.order
       << (t.value ? " value " + format_complex(*t.value) : "") << "\n";
  return os.str();
}

inline Json to_json(const SparsePoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exponent", e}, {"coefficient", to_json(c)}});
  return Json{{"variables", p.variables()}, {"terms", terms}, {"text", p.to_string()}};
}

inline Json to_json(const DeformationFamily& fam) {
  Json terms = Json::array();
  for (std::size_t k = 0; k < fam.terms.size(); ++k) {
    const auto& t = fam.terms[k];
    Json coeff = fam.coefficients.empty() ? Json(t.id) : to_json(*fam.coefficients[k]);
    terms.push_back({{"id", t.id},
                     {"level", t.level},
                     {"k", to_json_array(t.k)},
                     {"weight", to_json(t.weight)},
                     {"monomial", t.monomial.to_string()},
                     {"coefficient", coeff}});
  }
  return Json{{"base", to_json(fam.base)},
              {"cutoff", to_json(fam.cutoff)},
              {"lambdas", to_json_array(fam.lambdas)},
              {"terms", terms}};
}

inline std::string rows_tsv(const std::vector<VerifyRow>& rows) {
  std::string out = "suite\tcase\texpected\tgot\trelerr\tstatus\n";
  for (const auto& r : rows) {
    char err[32];
    std::snprintf(err, sizeof err, "%.3e", r.relerr);
    out += r.suite + "\t" + r.name + "\t" + r.expected + "\t" + r.got + "\t" + err + "\t" + (r.pass ? "pass" : "FAIL") +
           "\n";
  }
  return out;
}

inline Json to_json(const std::vector<VerifyRow>& rows) {
  Json a = Json::array();
  for (const auto& r : rows)
    a.push_back({{"suite", r.suite},
                 {"case", r.name},
                 {"expected", r.expected},
                 {"got", r.got},
                 {"relerr", r.relerr},
                 {"pass", r.pass}});
  return a;
}

}  // namespace planebranch
