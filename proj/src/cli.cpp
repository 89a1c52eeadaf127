#include "banach_ortho/cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <chrono>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>

#include "banach_ortho/fixtures.hpp"
#include "banach_ortho/json_io.hpp"
#include "banach_ortho/suites.hpp"

namespace banach_ortho {

namespace {

// Default seed is 42; BANACH_ORTHO_SEED overrides it; an explicit --seed
// flag wins over both.
uint64_t seed_from_env_or_default() {
  const char* env = std::getenv("BANACH_ORTHO_SEED");
  if (env == nullptr || *env == '\0') return 42;
  if (!std::isdigit(static_cast<unsigned char>(env[0])))
    throw std::invalid_argument(
        "BANACH_ORTHO_SEED must be an unsigned integer");
  std::size_t consumed = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(env, &consumed);
  } catch (const std::exception&) {
    throw std::invalid_argument(
        "BANACH_ORTHO_SEED must be an unsigned integer");
  }
  if (env[consumed] != '\0')
    throw std::invalid_argument(
        "BANACH_ORTHO_SEED must be an unsigned integer");
  return static_cast<uint64_t>(value);
}

void require_field_fits(ScalarField context, const LoadedVector& v,
                        const char* what) {
  if (context == ScalarField::Real && v.field == ScalarField::Complex)
    throw std::invalid_argument(std::string(what) +
                                ": complex vector in a real-field context");
}

void require_dim(Eigen::Index n, const LoadedVector& v, const char* what) {
  if (v.entries.size() != n)
    throw std::invalid_argument(std::string(what) + ": expected dimension " +
                                std::to_string(n) + ", got " +
                                std::to_string(v.entries.size()));
}

json fixture_result_to_json(const FixtureResult& r) {
  json claims = json::array();
  for (const auto& c : r.claims) {
    json e;
    e["description"] = c.description;
    e["error"] = c.error;
    e["pass"] = c.pass;
    claims.push_back(std::move(e));
  }
  json j;
  j["name"] = r.name;
  j["claims"] = std::move(claims);
  j["pass"] = r.pass;
  return j;
}

struct CliOptions {
  std::string relation;
  std::string operator_file;
  std::string endo_file;
  std::string space_file;
  std::string x_file;
  std::string y_file;
  std::string suite;
  std::string name;
  double theta = 0.0;
  double tol = 1e-8;
  uint64_t seed = 42;
  int trials = 500;
};

int run_check(const CliOptions& opt, bool theta_given, std::ostream& out) {
  const LoadedVector xv = vector_from_json(load_json_file(opt.x_file));
  const LoadedVector yv = vector_from_json(load_json_file(opt.y_file));
  OrthResult result;
  ScalarField field = ScalarField::Real;
  if (opt.relation == "t" || opt.relation == "t-theta") {
    if (opt.operator_file.empty())
      throw std::invalid_argument("relation " + opt.relation +
                                  " requires --operator");
    const PairingOperator T =
        operator_from_json(load_json_file(opt.operator_file));
    require_field_fits(T.field, xv, "--x");
    require_field_fits(T.field, yv, "--y");
    require_dim(T.M.rows(), xv, "--x");
    require_dim(T.M.rows(), yv, "--y");
    field = T.field;
    if (opt.relation == "t") {
      result = is_T_orthogonal(T, xv.entries, yv.entries, opt.tol);
    } else {
      if (!theta_given)
        throw std::invalid_argument("relation t-theta requires --theta");
      result = is_T_theta_orthogonal(T, opt.theta, xv.entries, yv.entries,
                                     opt.tol);
    }
  } else {
    if (opt.space_file.empty())
      throw std::invalid_argument("relation " + opt.relation +
                                  " requires --space");
    const PNormSpace space = space_from_json(load_json_file(opt.space_file));
    require_field_fits(space.field, xv, "--x");
    require_field_fits(space.field, yv, "--y");
    require_dim(space.n, xv, "--x");
    require_dim(space.n, yv, "--y");
    field = space.field;
    result = opt.relation == "bj"
                 ? is_bj_orthogonal(space, xv.entries, yv.entries, opt.tol)
                 : is_isosceles_orthogonal(space, xv.entries, yv.entries,
                                           opt.tol);
  }
  out << orth_result_to_json(result, field).dump() << "\n";
  return result.verdict ? 0 : 1;
}

int run_symmetry(const CliOptions& opt, bool theta_given, std::ostream& out) {
  const PairingOperator T =
      operator_from_json(load_json_file(opt.operator_file));
  const LoadedVector xv = vector_from_json(load_json_file(opt.x_file));
  require_field_fits(T.field, xv, "--x");
  require_dim(T.M.rows(), xv, "--x");
  json j = symmetry_verdict_to_json(analyze_symmetry(T, xv.entries, opt.tol));
  if (theta_given)
    j["theta_left"] =
        is_theta_left_symmetric_at(T, opt.theta, xv.entries, opt.tol);
  out << j.dump() << "\n";
  return 0;
}

int run_isometry(const CliOptions& opt, std::ostream& out) {
  const PairingOperator T =
      operator_from_json(load_json_file(opt.operator_file));
  const EndoOperator A = endo_from_json(load_json_file(opt.endo_file));
  json j;
  j["defect"] = isometry_defect(T, A);
  j["isometry"] = is_T_isometry(T, A, opt.tol);
  const auto beta = preserver_scalar(T, A, opt.tol);
  j["scalar"] = beta ? scalar_to_json(*beta, T.field) : json(nullptr);
  out << j.dump() << "\n";
  return 0;
}

int run_preserve(const CliOptions& opt, std::ostream& out) {
  const PairingOperator T =
      operator_from_json(load_json_file(opt.operator_file));
  const EndoOperator A = endo_from_json(load_json_file(opt.endo_file));
  const PreserveReport report =
      preserves_T_orthogonality_sampled(T, A, opt.trials, opt.seed, opt.tol);
  out << preserve_report_to_json(report, T.field).dump() << "\n";
  return 0;
}

int run_hilbert_fit(const CliOptions& opt, std::ostream& out) {
  const PNormSpace space = space_from_json(load_json_file(opt.space_file));
  const FitReport report = hilbert_fit(space, opt.trials, opt.seed);
  out << fit_report_to_json(report).dump() << "\n";
  return 0;
}

int run_verify(const CliOptions& opt, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const SuiteReport report = run_suite(opt.suite, opt.seed, opt.trials);
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  out << suite_report_to_json(report).dump() << "\n";
  err << "suite " << report.suite << ": " << report.total_failures
      << " failure(s) across " << report.properties.size()
      << " properties in " << elapsed << " ms\n";
  return report.total_failures == 0 ? 0 : 1;
}

int run_fixtures(const CliOptions& opt, std::ostream& out) {
  if (!opt.name.empty()) {
    const FixtureResult result = run_fixture(opt.name);
    out << fixture_result_to_json(result).dump() << "\n";
    return result.pass ? 0 : 1;
  }
  bool all_pass = true;
  json arr = json::array();
  for (const FixtureResult& result : run_all_fixtures()) {
    all_pass = all_pass && result.pass;
    arr.push_back(fixture_result_to_json(result));
  }
  out << arr.dump() << "\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"T-orthogonality toolkit: pairing decisions, symmetry "
               "analysis, preserver checks and verification suites"};
  app.name("banach-ortho");
  app.require_subcommand(1);

  CliOptions opt;
  try {
    opt.seed = seed_from_env_or_default();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App* check = app.add_subcommand(
      "check", "Decide one orthogonality relation for a pair of vectors");
  check->add_option("--relation", opt.relation, "t, t-theta, bj or isosceles")
      ->required()
      ->check(CLI::IsMember({"t", "t-theta", "bj", "isosceles"}));
  check->add_option("--operator", opt.operator_file,
                    "operator JSON file (relations t, t-theta)");
  check->add_option("--space", opt.space_file,
                    "space JSON file (relations bj, isosceles)");
  check->add_option("--x", opt.x_file, "left vector JSON file")->required();
  check->add_option("--y", opt.y_file, "right vector JSON file")->required();
  CLI::Option* check_theta =
      check->add_option("--theta", opt.theta, "angle in radians");
  check->add_option("--tol", opt.tol, "decision tolerance");

  CLI::App* symmetry = app.add_subcommand(
      "symmetry", "Analyze left/right symmetry of the relation at a point");
  symmetry->add_option("--operator", opt.operator_file, "operator JSON file")
      ->required();
  symmetry->add_option("--x", opt.x_file, "point JSON file")->required();
  CLI::Option* symmetry_theta = symmetry->add_option(
      "--theta", opt.theta, "also test direction left symmetry at this angle");
  symmetry->add_option("--tol", opt.tol, "decision tolerance");

  CLI::App* isometry = app.add_subcommand(
      "isometry", "Test an endomorphism for pairing preservation");
  isometry->add_option("--operator", opt.operator_file, "operator JSON file")
      ->required();
  isometry->add_option("--endo", opt.endo_file, "endomorphism JSON file")
      ->required();
  isometry->add_option("--tol", opt.tol, "decision tolerance");

  CLI::App* preserve = app.add_subcommand(
      "preserve", "Sampled orthogonality-preservation check");
  preserve->add_option("--operator", opt.operator_file, "operator JSON file")
      ->required();
  preserve->add_option("--endo", opt.endo_file, "endomorphism JSON file")
      ->required();
  preserve->add_option("--trials", opt.trials, "sample count")
      ->check(CLI::PositiveNumber);
  preserve->add_option("--seed", opt.seed, "random seed");
  preserve->add_option("--tol", opt.tol, "decision tolerance");

  CLI::App* hilbert = app.add_subcommand(
      "hilbert-fit", "Fit a bilinear pairing to norm-orthogonal samples");
  hilbert->add_option("--space", opt.space_file, "space JSON file")
      ->required();
  hilbert->add_option("--trials", opt.trials, "sample count")
      ->check(CLI::PositiveNumber);
  hilbert->add_option("--seed", opt.seed, "random seed");

  CLI::App* verify =
      app.add_subcommand("verify", "Run a property-verification suite");
  verify->add_option("--suite", opt.suite, "suite name")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--trials", opt.trials, "per-property trial count")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", opt.seed, "random seed");

  CLI::App* fixtures = app.add_subcommand(
      "fixtures", "Replay the bundled example operators and their claims");
  fixtures->add_option("--name", opt.name, "single fixture name")
      ->check(CLI::IsMember(fixture_names()));

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("banach-ortho");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(argv_storage.size());
  for (const std::string& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    err << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed()) return run_check(opt, check_theta->count() > 0, out);
    if (symmetry->parsed())
      return run_symmetry(opt, symmetry_theta->count() > 0, out);
    if (isometry->parsed()) return run_isometry(opt, out);
    if (preserve->parsed()) return run_preserve(opt, out);
    if (hilbert->parsed()) return run_hilbert_fit(opt, out);
    if (verify->parsed()) return run_verify(opt, out, err);
    if (fixtures->parsed()) return run_fixtures(opt, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command selected\n";
  return 2;
}

}  // namespace banach_ortho
