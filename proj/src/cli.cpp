#include "symdec/cli.hpp"

#include "symdec/dispersion.hpp"
#include "symdec/error.hpp"
#include "symdec/io.hpp"
#include "symdec/random.hpp"
#include "symdec/rearrange.hpp"

#include "CLI11.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace symdec {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

IntDist load_distribution(const std::string& path, const char* flag) {
  if (path.empty()) throw Error(ErrorCode::kInvalidArgument, std::string(flag) + " is required");
  return parse_distribution(read_file(path));
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

SignMode parse_sign_mode(const std::string& s) {
  if (s == "search") return SignMode::kSearch;
  if (s == "all-plus") return SignMode::kAllPlus;
  throw Error(ErrorCode::kParseError, "--signs must be search or all-plus, got \"" + s + "\"");
}

bool exact_mode(const std::string& s) {
  if (s == "exact") return true;
  if (s == "float") return false;
  throw Error(ErrorCode::kParseError, "--mode must be exact or float, got \"" + s + "\"");
}

std::optional<double> parse_decimal(const std::string& s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string proof_chain_report(const IntDist& d, const DispersionFunction& f,
                               const std::optional<std::string>& a_text) {
  if (!a_text) {
    const DispersionResult r = dispersion(d, f);
    if (const auto* a = std::get_if<Rational>(&r.minimizer_lo))
      return dump(to_json(proof_chain(d, f, *a)));
    return dump(to_json(proof_chain(d, f, std::get<double>(r.minimizer_lo))));
  }
  if (f.is_exact()) {
    try {
      return dump(to_json(proof_chain(d, f, parse_rational(*a_text))));
    } catch (const Error&) {
      // Not a fraction; fall through to the decimal path.
    }
  }
  const auto a = parse_decimal(*a_text);
  if (!a) throw Error(ErrorCode::kParseError, "--a must be a fraction or a decimal, got \"" + *a_text + "\"");
  return dump(to_json(proof_chain(d, f, *a)));
}

std::string sweep_report(const RunConfig& config) {
  const DispersionFunction f = DispersionFunction::parse(config.f_name);
  std::mt19937_64 rng(config.seed);
  const RandomDistConfig shape;
  const Window oracle_window{-4, 4};
  std::uint64_t passed = 0;
  Json failures = Json::array();
  for (std::uint64_t i = 0; i < config.count; ++i) {
    const IntDist d = random_distribution(rng, shape);
    const MainInequalityReport check = check_main_inequality(d, f);
    std::string reason;
    if (!check.holds) reason = "inequality fails";
    else if (f.strictness_eligible() && check.equality != check.equivalence_explains_equality)
      reason = "equality not explained by translation/reflection";
    if (reason.empty() && f.is_exact()) {
      const auto probs = sorted_probabilities(d);
      const OracleReport oracle = verify_theorem(probs, oracle_window, f, config.budgets.enumeration);
      if (!oracle.theorem_holds) reason = "oracle minimum below D_f(X+)";
      else if (f.strictness_eligible() && !oracle.equality_cases_all_equivalent)
        reason = "oracle found a non-equivalent minimizer";
    }
    if (reason.empty()) {
      ++passed;
    } else {
      failures.push_back(Json{{"index", i},
                              {"reason", reason},
                              {"distribution", to_json(d)},
                              {"check", to_json(check)}});
    }
  }
  return dump(Json{{"subcommand", "sweep"},
                   {"seed", config.seed},
                   {"count", config.count},
                   {"f", f.name()},
                   {"passed", passed},
                   {"failed", config.count - passed},
                   {"failures", std::move(failures)}});
}

std::string dispatch(const RunConfig& config) {
  switch (config.subcommand) {
    case Subcommand::kRearrange:
      return dump(to_json(plus_rearrangement(load_distribution(config.input_path, "--in"))));
    case Subcommand::kDispersion: {
      const IntDist d = load_distribution(config.input_path, "--in");
      return dump(to_json(dispersion(d, DispersionFunction::parse(config.f_name))));
    }
    case Subcommand::kCheck: {
      const IntDist d = load_distribution(config.input_path, "--in");
      const DispersionFunction f = DispersionFunction::parse(config.f_name);
      Json j = to_json(check_main_inequality(d, f));
      j["f"] = f.name();
      j["plus_rearrangement"] = to_json(plus_rearrangement(d));
      return dump(j);
    }
    case Subcommand::kProofChain: {
      const IntDist d = load_distribution(config.input_path, "--in");
      return proof_chain_report(d, DispersionFunction::parse(config.f_name), config.a);
    }
    case Subcommand::kOracle: {
      if (config.probs.empty() || config.window.empty())
        throw Error(ErrorCode::kInvalidArgument, "oracle needs --probs and --window");
      const auto probs = parse_probability_list(config.probs);
      const Window window = parse_window(config.window);
      const DispersionFunction f = DispersionFunction::parse(config.f_name);
      Json j = to_json(verify_theorem(probs, window, f, config.budgets.enumeration));
      j["f"] = f.name();
      j["window"] = config.window;
      return dump(j);
    }
    case Subcommand::kConvolve: {
      const IntDist d = load_distribution(config.input_path, "--in");
      if (!config.with_path.empty())
        return dump(to_json(convolve(d, load_distribution(config.with_path, "--with"))));
      if (exact_mode(config.mode))
        return dump(to_json(self_convolve_exact(d, config.copies, config.budgets.exact_bits)));
      return dump(to_json(self_convolve_float(d, config.copies)));
    }
    case Subcommand::kConcentration: {
      const IntDist d = load_distribution(config.input_path, "--in");
      if (exact_mode(config.mode))
        return dump(to_json(
            concentration(self_convolve_exact(d, config.copies, config.budgets.exact_bits))));
      return dump(to_json(concentration(self_convolve_float(d, config.copies))));
    }
    case Subcommand::kCompare: {
      const IntDist d = load_distribution(config.input_path, "--in");
      if (config.copies == 0)
        throw Error(ErrorCode::kInvalidArgument, "--n must be positive");
      const std::vector<IntDist> copies(config.copies, d);
      Json j = to_json(compare_concentration(copies, parse_sign_mode(config.signs),
                                             config.budgets.sign_patterns));
      j["n"] = config.copies;
      return dump(j);
    }
    case Subcommand::kLltScan: {
      const IntDist d = load_distribution(config.input_path, "--in");
      return llt_csv(llt_scan(d, config.ns));
    }
    case Subcommand::kSweep:
      return sweep_report(config);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown subcommand");
}

void report_error(std::ostream& err, std::string_view code, const std::string& message) {
  err << Json{{"error", code}, {"message", message}}.dump() << "\n";
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const std::string text = dispatch(config);
    if (config.output_path.empty()) {
      out << text;
    } else {
      std::ofstream file(config.output_path, std::ios::binary);
      if (!file) throw Error(ErrorCode::kIoError, "cannot write " + config.output_path);
      file << text;
    }
    return 0;
  } catch (const Error& e) {
    report_error(err, code_name(e.code()), e.what());
    return exit_status(e.code());
  }
}

int run_command_line(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Integer symmetric-decreasing rearrangement and dispersion toolkit", "symdec"};
  app.require_subcommand(1);

  app.add_option("--in", config.input_path, "Distribution JSON file");
  app.add_option("--with", config.with_path, "Second distribution for convolve");
  app.add_option("--out", config.output_path, "Write the report here instead of stdout");
  app.add_option("--f", config.f_name, "identity | square | power:<p>");
  app.add_option("--seed", config.seed, "Seed for sweep");
  app.add_option("--count", config.count, "Number of sweep instances");
  app.add_option("--probs", config.probs, "JSON list of fraction strings");
  app.add_option("--window", config.window, "Enumeration window lo:hi");
  app.add_option("--n", config.copies, "Number of i.i.d. copies");
  app.add_option("--signs", config.signs, "search | all-plus");
  app.add_option("--mode", config.mode, "exact | float");
  app.add_option("--ns", config.ns, "Comma-separated n values for llt-scan")->delimiter(',');
  app.add_option("--a", config.a, "Centering value for proof-chain");
  app.add_option("--budget,--budget-enum", config.budgets.enumeration, "Oracle assignment budget");
  app.add_option("--budget-signs", config.budgets.sign_patterns, "Sign pattern budget");
  app.add_option("--budget-bits", config.budgets.exact_bits, "Exact convolution bit budget");

  const std::pair<const char*, Subcommand> commands[] = {
      {"rearrange", Subcommand::kRearrange},
      {"dispersion", Subcommand::kDispersion},
      {"check", Subcommand::kCheck},
      {"proof-chain", Subcommand::kProofChain},
      {"oracle", Subcommand::kOracle},
      {"convolve", Subcommand::kConvolve},
      {"concentration", Subcommand::kConcentration},
      {"compare", Subcommand::kCompare},
      {"llt-scan", Subcommand::kLltScan},
      {"sweep", Subcommand::kSweep},
  };
  for (const auto& [name, sub] : commands) {
    app.add_subcommand(name)->fallthrough()->callback([&config, sub = sub] {
      config.subcommand = sub;
    });
  }

  std::vector<const char*> argv{"symdec"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    report_error(err, code_name(ErrorCode::kParseError), e.what());
    return 1;
  }
  if (config.budgets.enumeration == 0 || config.budgets.sign_patterns == 0 ||
      config.budgets.exact_bits == 0) {
    report_error(err, code_name(ErrorCode::kInvalidArgument), "budgets must be positive");
    return 1;
  }
  return run(config, out, err);
}

}  // namespace symdec
