// planebranch: invariants, candidate poles and b-exponents of plane branches.
//
// Exit codes: 0 ok, 1 syntax error, 2 validation/domain failure, 3 failed verification.

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "planebranch/planebranch.hpp"

namespace pb = planebranch;

namespace {

enum Exit { kOk = 0, kSyntax = 1, kValidation = 2, kVerification = 3 };

int report_error(const pb::Error& e, const std::string& format) {
  const int code = e.kind() == pb::ErrorKind::Parse ? kSyntax : kValidation;
  if (format == "json")
    std::cout << pb::Json{{"error", {{"kind", std::string(pb::to_string(e.kind()))}, {"reason", e.reason()}}}}.dump(2)
              << "\n";
  std::cerr << "planebranch: " << e.what() << "\n";
  return code;
}

pb::Complex parse_lambda(const std::string& text) {
  // "re" or "re,im"
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {pb::to_double(pb::parse_rational(text)), 0.0};
  return {pb::to_double(pb::parse_rational(text.substr(0, comma))), pb::to_double(pb::parse_rational(text.substr(comma + 1)))};
}

int cmd_analyze(const std::string& input, const std::string& format, std::optional<unsigned long> nu_max) {
  pb::BranchInput in;
  try {
    in = pb::parse_input(input);
  } catch (const pb::Error& e) {
    return report_error(e, format);
  }
  if (in.kind == pb::InputKind::Semigroup) {
    const auto validation = pb::validate_plane_semigroup(in.values);
    if (!validation.ok()) {
      const auto* bad = validation.first_failure();
      if (format == "json")
        std::cout << pb::Json{{"error", {{"kind", "NotPlaneBranchSemigroup"}, {"reason", bad->name + ": " + bad->detail}}},
                              {"validation", pb::to_json(validation)}}
                         .dump(2)
                  << "\n";
      std::cerr << "planebranch: NotPlaneBranchSemigroup: " << bad->name << ": " << bad->detail << "\n";
      return kValidation;
    }
  }
  try {
    const auto rep = pb::branch_report(pb::resolve_input(in), pb::ReportOptions{nu_max});
    if (format == "json") std::cout << pb::to_json(rep, in).dump(2) << "\n";
    else if (format == "tsv") std::cout << pb::report_tsv(rep);
    else std::cout << pb::report_text(rep);
  } catch (const pb::Error& e) {
    return report_error(e, format);
  }
  return kOk;
}

int cmd_residue(const std::string& alpha, long long n, const std::string& beta, long long m, const std::string& lambda,
                const std::string& format) {
  try {
    const pb::RnmParams p{pb::parse_rational(alpha), n, pb::parse_rational(beta), m, parse_lambda(lambda)};
    const auto v = pb::rnm_closed_form(p);
    if (format == "json") std::cout << pb::to_json(v).dump(2) << "\n";
    else std::cout << pb::meromorphic_text(v);
  } catch (const pb::Error& e) {
    return report_error(e, format);
  }
  return kOk;
}

int cmd_verify(const std::string& suite, double tol, const std::string& format) {
  std::vector<pb::VerifyRow> rows;
  try {
    pb::QuadConfig cfg;
    cfg.rel_tol = std::min(cfg.rel_tol, tol / 10);
    const auto& names = pb::suite_names();
    if (suite == "all") {
      for (const auto& s : names)
        for (auto& r : pb::run_suite(s, tol, cfg)) rows.push_back(std::move(r));
    } else {
      rows = pb::run_suite(suite, tol, cfg);
    }
  } catch (const pb::Error& e) {
    return report_error(e, format);
  }
  if (format == "json") std::cout << pb::to_json(rows).dump(2) << "\n";
  else std::cout << pb::rows_tsv(rows);
  for (const auto& r : rows)
    if (!r.pass) return kVerification;
  return kOk;
}

int cmd_generate(const std::string& input, bool deform, std::optional<std::string> cutoff, std::optional<std::uint64_t> seed,
                 const std::vector<std::string>& lambdas, const std::vector<std::string>& assignments,
                 const std::string& format) {
  pb::BranchNumerics bn;
  std::vector<pb::Rational> lam;
  std::optional<pb::Integer> cut;
  std::map<std::string, pb::Rational> values;
  try {
    const auto in = pb::parse_input(input);
    for (const auto& l : lambdas) lam.push_back(pb::parse_rational(l));
    if (cutoff) cut = pb::parse_integer(*cutoff);
    for (const auto& a : assignments) {
      const auto eq = a.find('=');
      if (eq == std::string::npos) throw pb::Error(pb::ErrorKind::Parse, "expected id=value, got " + a);
      values[a.substr(0, eq)] = pb::parse_rational(a.substr(eq + 1));
    }
    bn = pb::resolve_input(in);
  } catch (const pb::Error& e) {
    return report_error(e, format);
  }
  try {
    const auto f = pb::plane_equation(bn, lam);
    const auto h = pb::monomial_curve_equations(bn);
    std::optional<pb::DeformationFamily> fam;
    std::optional<pb::SparsePoly> instance;
    if (deform) {
      auto source = pb::CoefficientSource::symbolic();
      if (!values.empty()) source = pb::CoefficientSource::explicit_values(values);
      else if (seed) source = pb::CoefficientSource::seeded(*seed);
      fam = pb::deformation_family(bn, cut, lam, source);
      if (!fam->coefficients.empty()) instance = pb::instantiate(bn, *fam);
    }
    if (format == "json") {
      pb::Json out{{"plane_equation", pb::to_json(f)},
                   {"nested", pb::nested_plane_equation(bn)},
                   {"monomial_curve", pb::Json::array()},
                   {"tau", pb::to_json(pb::tau_from_gaps(bn))}};
      for (const auto& hi : h) out["monomial_curve"].push_back(pb::to_json(hi));
      if (fam) out["deformation"] = pb::to_json(*fam);
      if (instance) out["instance"] = pb::to_json(*instance);
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << f.to_string() << "\n";
      if (format == "text") {
        if (bn.g() > 1) std::cout << "nested     " << pb::nested_plane_equation(bn) << "\n";
        for (std::size_t i = 0; i < h.size(); ++i) std::cout << "h" << i + 1 << "         " << h[i].to_string() << "\n";
        std::cout << "tau        " << pb::tau_from_gaps(bn) << "\n";
      }
      if (fam) {
        std::cout << "cutoff     " << fam->cutoff << "\n";
        for (std::size_t k = 0; k < fam->terms.size(); ++k) {
          const auto& t = fam->terms[k];
          const std::string coeff = fam->coefficients.empty() ? t.id : pb::to_string(*fam->coefficients[k]);
          std::cout << "term       " << t.id << "\t" << t.weight << "\t" << coeff << "\t" << t.monomial.to_string() << "\n";
        }
        if (instance) std::cout << "instance   " << instance->to_string() << "\n";
      }
    }
  } catch (const pb::Error& e) {
    return report_error(e, format);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants, candidate poles and b-exponents of plane branches"};
  app.require_subcommand(1);
  std::string format = "text";
  const std::vector<std::string> formats = {"json", "tsv", "text"};

  auto* analyze = app.add_subcommand("analyze", "full report for a characteristic sequence or semigroup");
  std::string input;
  std::optional<unsigned long> nu_max;
  analyze->add_option("input", input, "n,b1,...,bg or semigroup:g0,...,gg")->required();
  analyze->add_option("--format", format)->check(CLI::IsMember(formats));
  analyze->add_option("--nu-max", nu_max, "candidate range 0 <= nu < N for every rupture divisor");

  auto* residue = app.add_subcommand("residue", "closed form of the residue kernel R_{n,m}");
  std::string alpha, beta, lambda = "1";
  long long n = 0, m = 0;
  residue->add_option("--alpha", alpha)->required();
  residue->add_option("--beta", beta)->required();
  residue->add_option("--n", n);
  residue->add_option("--m", m);
  residue->add_option("--lambda", lambda, "re or re,im");
  residue->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::string suite = "all";
  double tol = 1e-4;
  std::vector<std::string> suites = pb::suite_names();
  suites.push_back("all");
  verify->add_option("--suite", suite)->check(CLI::IsMember(suites));
  verify->add_option("--tol", tol)->check(CLI::PositiveNumber);
  verify->add_option("--format", format)->check(CLI::IsMember(std::vector<std::string>{"json", "tsv"}));

  auto* generate = app.add_subcommand("generate", "plane equation, monomial curve and deformations");
  bool deform = false;
  std::optional<std::string> cutoff;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> lambdas, assignments;
  generate->add_option("input", input, "n,b1,...,bg or semigroup:g0,...,gg")->required();
  generate->add_flag("--deform", deform, "enumerate deformation terms");
  generate->add_option("--cutoff", cutoff, "weight cutoff (default n_g betabar_g + conductor)");
  generate->add_option("--seed", seed, "instantiate coefficients with seeded random rationals");
  generate->add_option("--lambda", lambdas, "lambda_2 .. lambda_g")->delimiter(',');
  generate->add_option("--set", assignments, "explicit coefficient id=value");
  generate->add_option("--format", format)->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kSyntax;
  }

  if (*analyze) return cmd_analyze(input, format, nu_max);
  if (*residue) return cmd_residue(alpha, n, beta, m, lambda, format);
  if (*verify) return cmd_verify(suite, tol, format == "text" ? "tsv" : format);
  return cmd_generate(input, deform, cutoff, seed, lambdas, assignments, format);
}
