#include "sharpbound/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sharpbound/bounds.hpp"
#include "sharpbound/json_io.hpp"

namespace sharpbound::cli {

namespace {

struct CommonOpts {
  std::string input_path;  // empty means standard input
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::optional<double> tol;
  bool pretty = false;
};

void emit(const Json& j, const CommonOpts& opts, std::ostream& out) {
  out << (opts.pretty ? j.dump(2) : j.dump()) << "\n";
}

Json load_job(const CommonOpts& opts, std::istream& in) {
  std::string text;
  if (opts.input_path.empty()) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream file(opts.input_path);
    if (!file) {
      throw ParseError("cannot open input file \"" + opts.input_path + "\"");
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    text = buffer.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::exception& ex) {
    throw ParseError(std::string("invalid JSON: ") + ex.what());
  }
}

std::vector<Complex> widen(const std::vector<double>& v) {
  return std::vector<Complex>(v.begin(), v.end());
}

CaseLabel parse_case_name(const std::string& name) {
  if (name == "i") return CaseLabel::CaseI;
  if (name == "ii") return CaseLabel::CaseII;
  if (name == "iii") return CaseLabel::CaseIII;
  throw ParseError("unknown case \"" + name + "\"; expected i, ii, or iii");
}

int exit_code_for(const CampaignReport& report) {
  const bool guaranteed_violation =
      std::any_of(report.violations.begin(), report.violations.end(),
                  [](const Violation& v) { return v.guaranteed; });
  return guaranteed_violation ? 1 : 0;
}

std::uint64_t get_positive_count(const Json& obj, const char* key) {
  const Json& v = obj.at(key);
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0) {
    throw ParseError(std::string("\"") + key +
                     "\" must be a positive integer");
  }
  return v.get<std::uint64_t>();
}

SearchConfig resolve_search(const Json& job, const CommonOpts& opts,
                            SearchConfig base) {
  SearchConfig cfg = job.contains("search")
                         ? search_config_from(job.at("search"), base)
                         : base;
  if (opts.seed) cfg.seed = *opts.seed;
  if (opts.trials) cfg.trials = *opts.trials;
  return cfg;
}

int cmd_lambda(const Json& job, const CommonOpts& opts, std::ostream& out) {
  require_keys(job, {"p", "mu", "a"}, {}, "lambda");
  const Exponent exp(get_number(job, "p"));
  const BoundCertificate cert =
      certificate(get_real_vector(job, "mu"), get_complex_vector(job, "a"),
                  exp);
  emit(to_json(cert), opts, out);
  return 0;
}

int cmd_check(const Json& job, const CommonOpts& opts,
              const std::string& forced_case, std::ostream& out) {
  require_keys(job, {"p", "mu", "a", "x", "lambda"}, {"case"}, "check");
  const Exponent exp(get_number(job, "p"));
  const std::vector<double> mu = get_real_vector(job, "mu");
  const std::vector<Complex> a = get_complex_vector(job, "a");
  const std::vector<Complex> x = get_complex_vector(job, "x");
  const double lambda = get_number(job, "lambda");

  std::string case_name = forced_case;
  if (case_name.empty() && job.contains("case")) {
    const Json& c = job.at("case");
    if (!c.is_string()) throw ParseError("\"case\" must be a string");
    case_name = c.get<std::string>();
  }

  CaseLabel label;
  if (case_name.empty()) {
    label = classify_case(mu, lambda);
    if (label == CaseLabel::Unclassified) {
      throw DomainError(
          "sign pattern fits no supported case; pass --case to force one");
    }
  } else {
    label = parse_case_name(case_name);
  }

  const WeightedSystem sys(exp, a, mu, x);
  const double tol = opts.tol.value_or(kVerdictTol);
  InequalityReport report;
  switch (label) {
    case CaseLabel::CaseI:
      report = check_case_i(sys, lambda, tol);
      break;
    case CaseLabel::CaseII:
      report = check_case_ii(sys, lambda, tol);
      break;
    default:
      report = check_case_iii(sys, lambda, tol);
      break;
  }

  Json result = to_json(report);
  result["case"] = to_string(label);
  result["admissible"] = report.guaranteed;
  emit(result, opts, out);
  return 0;
}

int cmd_refine(const Json& job, const CommonOpts& opts, std::ostream& out) {
  require_keys(job, {"p", "mu", "a", "x"}, {}, "refine");
  const double p = get_number(job, "p");
  const Exponent exp(p);
  const std::vector<double> mu = get_real_vector(job, "mu");
  const std::vector<double> a = get_real_vector(job, "a");
  const std::vector<double> x = get_real_vector(job, "x");

  const WeightedSystem sys(exp, widen(a), mu, widen(x));
  Json result = to_json(refined_bound(sys));
  result["lhs"] = weighted_power_sum(x, mu, p);
  if (p <= 2.0) {
    const GapBound gb = corollary3_gap(sys);
    result["gap"] = gb.gap;
    result["upper"] = gb.upper;
  }
  emit(result, opts, out);
  return 0;
}

int cmd_identity(const Json& job, const CommonOpts& opts, std::ostream& out) {
  require_keys(job, {"x", "y", "a", "b", "mu", "nu"}, {}, "identity");
  const IdentitySides sides = euler_lagrange_identity(
      get_number(job, "x"), get_number(job, "y"), get_number(job, "a"),
      get_number(job, "b"), get_number(job, "mu"), get_number(job, "nu"));
  emit(Json{{"lhs", sides.lhs},
            {"rhs", sides.rhs},
            {"agree", rel_close(sides.lhs, sides.rhs, kIdentityTol)}},
       opts, out);
  return 0;
}

int cmd_bohr(const Json& job, const CommonOpts& opts, std::ostream& out) {
  require_keys(job, {"s", "p"}, {"x", "y"}, "bohr");
  const double s = get_number(job, "s");
  const double p = get_number(job, "p");
  const BohrParams params = bohr_params(s, p);

  // The closed form must reproduce the sharp constant of the two-term
  // system it abbreviates.
  const double lam = sharp_lambda({params.mu, params.nu},
                                  {Complex(params.a), Complex(params.b)},
                                  Exponent(p));
  Json result{{"a", params.a},
              {"b", params.b},
              {"mu", params.mu},
              {"nu", params.nu},
              {"lambda", params.lambda},
              {"matches_sharp", rel_close(lam, params.lambda, kIdentityTol)}};

  if (job.contains("x") != job.contains("y")) {
    throw ParseError("bohr needs x and y together or neither");
  }
  if (job.contains("x")) {
    const auto [first, second] =
        bohr_chain_check(s, p, get_number(job, "x"), get_number(job, "y"),
                         opts.tol.value_or(kVerdictTol));
    result["chain"] = Json{{"first", to_json(first)},
                           {"second", to_json(second)}};
  }
  emit(result, opts, out);
  return 0;
}

int cmd_fuzz(const Json& job, const CommonOpts& opts, std::ostream& out) {
  require_keys(job, {"case", "n", "p"}, {"lambda_scale", "search"}, "fuzz");
  const Json& case_value = job.at("case");
  if (!case_value.is_string()) throw ParseError("\"case\" must be a string");
  const std::string case_name = case_value.get<std::string>();
  const std::size_t n = get_positive_count(job, "n");
  const double p = get_number(job, "p");

  // Fuzzing spends its refinement budget hunting for violations on every
  // trial, so the default is far smaller than for a sharpness search.
  SearchConfig base;
  base.local_steps = 12;
  const SearchConfig cfg = resolve_search(job, opts, base);

  CampaignReport report;
  if (case_name == "refinement") {
    if (job.contains("lambda_scale")) {
      throw ParseError("\"lambda_scale\" does not apply to refinement fuzzing");
    }
    report = fuzz_refinement(n, p, cfg);
  } else {
    const double lambda_scale =
        job.contains("lambda_scale") ? get_number(job, "lambda_scale") : 1.0;
    report = fuzz_case(parse_case_name(case_name), n, Exponent(p), cfg,
                       lambda_scale);
  }
  emit(to_json(report), opts, out);
  return exit_code_for(report);
}

int cmd_sharpness(const Json& job, const CommonOpts& opts, std::ostream& out) {
  require_keys(job, {"p", "mu", "a"}, {"search"}, "sharpness");
  const Exponent exp(get_number(job, "p"));
  const std::vector<double> mu = get_real_vector(job, "mu");
  const std::vector<Complex> a = get_complex_vector(job, "a");
  const SearchConfig cfg = resolve_search(job, opts, SearchConfig{});

  const CampaignReport report = sharpness_campaign(mu, a, exp, cfg);
  Json result = to_json(report);
  result["lambda_bar"] = sharp_lambda(mu, a, exp);
  emit(result, opts, out);
  return exit_code_for(report);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{
      "sharp constants, refined bounds, and identities for weighted power "
      "sum inequalities"};
  app.require_subcommand(1);
  app.fallthrough();

  CommonOpts opts;
  app.add_option("--input", opts.input_path,
                 "read the job JSON from FILE instead of standard input");
  app.add_option("--seed", opts.seed, "override the search seed");
  app.add_option("--trials", opts.trials, "override the trial count");
  app.add_option("--tol", opts.tol, "override the verdict tolerance");
  app.add_flag("--pretty", opts.pretty, "indent the output JSON");

  app.add_subcommand("lambda",
                     "sharp constant with weights and extremal point");
  CLI::App* check = app.add_subcommand(
      "check", "evaluate one inequality case at supplied points");
  std::string forced_case;
  check->add_option("--case", forced_case,
                    "force case i, ii, or iii instead of classifying");
  app.add_subcommand("refine", "refined lower bound with correction term");
  app.add_subcommand("identity", "two-term quadratic identity");
  app.add_subcommand("bohr", "Bohr specialization parameters and chain");
  app.add_subcommand("fuzz",
                     "randomized campaign over one case or the refinement");
  app.add_subcommand("sharpness",
                     "ratio maximization against the sharp constant");

  // CLI11 consumes the vector back to front.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    emit(Json{{"error", {{"kind", "parse"}, {"detail", e.what()}}}}, opts,
         out);
    return 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const Json job = load_job(opts, in);
    if (command == "lambda") return cmd_lambda(job, opts, out);
    if (command == "check") return cmd_check(job, opts, forced_case, out);
    if (command == "refine") return cmd_refine(job, opts, out);
    if (command == "identity") return cmd_identity(job, opts, out);
    if (command == "bohr") return cmd_bohr(job, opts, out);
    if (command == "fuzz") return cmd_fuzz(job, opts, out);
    return cmd_sharpness(job, opts, out);
  } catch (const ParseError& e) {
    emit(Json{{"error", {{"kind", "parse"}, {"detail", e.what()}}}}, opts,
         out);
  } catch (const DegenerateError& e) {
    emit(Json{{"error", {{"kind", "degenerate"}, {"detail", e.what()}}}},
         opts, out);
  } catch (const ConvergenceError& e) {
    emit(Json{{"error", {{"kind", "convergence"}, {"detail", e.what()}}}},
         opts, out);
  } catch (const DomainError& e) {
    emit(Json{{"error", {{"kind", "domain"}, {"detail", e.what()}}}}, opts,
         out);
  } catch (const Json::exception& e) {
    emit(Json{{"error", {{"kind", "parse"}, {"detail", e.what()}}}}, opts,
         out);
  } catch (const std::exception& e) {
    emit(Json{{"error", {{"kind", "internal"}, {"detail", e.what()}}}}, opts,
         out);
  }
  return 2;
}

}  // namespace sharpbound::cli
