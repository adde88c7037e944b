#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fglschur/dual.hpp"
#include "fglschur/error.hpp"
#include "fglschur/report.hpp"
#include "fglschur/schur.hpp"
#include "fglschur/suites.hpp"
#include "fglschur/weyl.hpp"

using namespace fglschur;

namespace {

struct Options {
  std::string kind;
  std::vector<std::string> fgls;
  std::string beta = "symbolic";
  std::optional<int> degree;
  std::optional<int> n;
  int n_y = 4;
  std::string lambda;
  std::string mu;
  std::string factorial;
  std::string out = "text";
  bool json = false;
  int jobs = 1;
  std::uint64_t seed = 1;
  bool allow_large = false;
  std::string via = "kernel";
  std::optional<int> max_size;
  bool list = false;

  bool as_json() const { return json || out == "json"; }
};

void add_common(CLI::App* app, Options& o) {
  app->add_option("--fgl", o.fgls, "additive, k-theory or universal (comma separated for suites)")
      ->delimiter(',')
      ->check(CLI::IsMember({"additive", "k-theory", "universal"}));
  app->add_option("--beta", o.beta, "rational value of beta, or symbolic");
  app->add_option("--degree", o.degree, "truncation cutoff D")->check(CLI::NonNegativeNumber);
  app->add_option("--n", o.n, "number of x-variables")->check(CLI::PositiveNumber);
  app->add_option("--ny", o.n_y, "number of y-variables")->check(CLI::PositiveNumber);
  app->add_option("--factorial", o.factorial, "on or off")->check(CLI::IsMember({"on", "off"}));
  app->add_option("--out", o.out, "text or json")->check(CLI::IsMember({"text", "json"}));
  app->add_flag("--json", o.json, "same as --out json");
  app->add_option("--jobs", o.jobs, "worker threads for suites")->check(CLI::PositiveNumber);
  app->add_option("--seed", o.seed, "seed for randomized checks");
  app->add_flag("--allow-large", o.allow_large, "permit cutoffs above 12");
  app->add_option("--max-size", o.max_size, "largest |lambda| scanned")->check(CLI::NonNegativeNumber);
}

Json echo(const Options& o, int degree) {
  Json j{{"fgl", o.fgls}, {"beta", o.beta}, {"degree", degree}, {"ny", o.n_y}};
  if (o.n) j["n"] = *o.n;
  if (!o.factorial.empty()) j["factorial"] = o.factorial;
  return j;
}

std::string single_fgl(const Options& o, const std::string& fallback) {
  if (o.fgls.size() > 1) throw ConfigurationError("this command takes a single --fgl");
  return o.fgls.empty() ? fallback : o.fgls[0];
}

int emit_series(const Options& o, Json cfg, const std::string& what, const Partition& lambda, const Series& s) {
  if (o.as_json()) {
    Json j{{"command", what}, {"lambda", lambda.parts()}, {"config", cfg}, {"series", series_to_json(s)}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << s.to_string() << '\n';
  }
  return 0;
}

int run_compute(const Options& o) {
  const int D = o.degree.value_or(kDefaultCutoff);
  check_cutoff(D, o.allow_large);
  if (o.lambda.empty()) throw ConfigurationError("compute needs --lambda");
  if (o.kind == "phatK") {
    if (!o.mu.empty()) throw ConfigurationError("--mu does not apply to phatK");
    if (!o.fgls.empty() && single_fgl(o, "k-theory") != "k-theory")
      throw ConfigurationError("phatK is defined for the k-theory law");
    const Partition lambda = parse_partition(o.lambda, true);
    const bool fact = o.factorial != "off";
    auto K = make_fgl("k-theory", o.beta);
    const Truncation t{D, Grading::xb()};
    const Alphabet y{o.n_y, 0};
    Series out(t);
    if (o.via == "word") {
      if (!fact) throw ConfigurationError("the word formula is a factorial statement; drop --factorial off");
      const DividedDifference dd(K, RootSystem::C, y);
      out = dd.hat_psi_word(raising_word(RootSystem::C, lambda, true), Series::constant(1, t));
    } else {
      SchurEngine engine(K);
      const int nx = o.n.value_or(required_nx(SchurKind::Q, D));
      const auto duals = extract_duals(engine, DualKind::Phat, nx, y, fact, t);
      auto it = duals.find(lambda);
      if (it == duals.end()) throw ConfigurationError("lambda is beyond the cutoff");
      out = it->second;
    }
    Json cfg = echo(o, D);
    cfg["fgl"] = {"k-theory"};
    cfg["factorial"] = fact ? "on" : "off";
    cfg["via"] = o.via;
    return emit_series(o, cfg, "compute phatK", lambda, out);
  }
  const SchurKind kind = parse_schur_kind(o.kind);
  const Partition lambda = parse_partition(o.lambda, kind == SchurKind::P || kind == SchurKind::Q);
  SchurEngine engine(make_fgl(single_fgl(o, "universal"), o.beta));
  const bool fact = o.factorial == "on";
  int n = o.n.value_or(std::max(lambda.length(), 1));
  if (!o.n && kind == SchurKind::P && n % 2) ++n;
  const Truncation t{D, Grading::xyb()};
  Series out(t);
  if (!o.mu.empty()) {
    if (kind == SchurKind::S) throw ConfigurationError("--mu evaluation is defined for P, Q and s-double");
    const Partition mu = parse_partition(o.mu, kind != SchurKind::SDouble);
    out = kind == SchurKind::SDouble ? evaluate_vanishing_double(engine, lambda, mu, n, t)
                                     : evaluate_vanishing(engine, lambda, mu, kind, t);
  } else {
    out = engine.function(kind, lambda, n, fact, t);
  }
  Json cfg = echo(o, D);
  cfg["n"] = n;
  if (!o.mu.empty()) cfg["mu"] = parse_partition(o.mu, false).parts();
  return emit_series(o, cfg, "compute " + o.kind, lambda, out);
}

int run_dual(const Options& o) {
  const int D = o.degree.value_or(kDefaultCutoff);
  check_cutoff(D, o.allow_large);
  SchurEngine engine(make_fgl(single_fgl(o, "universal"), o.beta));
  const bool fact = o.factorial == "on";
  const Truncation t{D, Grading::xb()};
  const Alphabet y{o.n_y, 0};
  BasisExpansion duals;
  int nx = 0;
  if (o.kind == "shat") {
    nx = o.n.value_or(std::max(D, 1));
    duals = shat_dual(engine, nx, y, t);
  } else {
    const DualKind kind = parse_dual_kind(o.kind);
    nx = o.n.value_or(required_nx(paired_basis(kind), D));
    duals = extract_duals(engine, kind, nx, y, fact, t);
  }
  Json cfg = echo(o, D);
  cfg["n"] = nx;
  if (!o.lambda.empty()) {
    const Partition lambda = parse_partition(o.lambda, o.kind != "shat");
    auto it = duals.find(lambda);
    if (it == duals.end()) throw ConfigurationError("lambda " + lambda.label() + " is beyond the cutoff or n");
    return emit_series(o, cfg, "dual " + o.kind, lambda, it->second);
  }
  if (o.as_json()) {
    Json all = Json::array();
    for (const auto& [l, s] : duals) all.push_back({{"lambda", l.parts()}, {"series", series_to_json(s)}});
    std::cout << Json{{"command", "dual " + o.kind}, {"config", cfg}, {"duals", all}}.dump(2) << '\n';
  } else {
    for (const auto& [l, s] : duals) std::cout << o.kind << l.label() << " = " << s.to_string() << '\n';
  }
  return 0;
}

RunConfig run_config(const Options& o) {
  RunConfig cfg;
  cfg.fgls = o.fgls;
  cfg.beta = o.beta;
  if (o.degree) check_cutoff(*o.degree, o.allow_large);
  cfg.degree = o.degree;
  cfg.n = o.n;
  cfg.n_y = o.n_y;
  cfg.max_size = o.max_size;
  if (!o.factorial.empty()) cfg.factorial = o.factorial == "on";
  cfg.jobs = o.jobs;
  cfg.seed = o.seed;
  return cfg;
}

int emit_report(const Options& o, const SuiteReport& r) {
  if (o.as_json()) std::cout << r.to_json().dump(2) << '\n';
  else std::cout << r.to_text();
  return r.pass() ? 0 : 1;
}

int run_verify(const Options& o) {
  if (o.list) {
    for (const auto& s : suite_list()) std::cout << s.name << "  " << s.description << '\n';
    return 0;
  }
  if (o.kind.empty()) throw ConfigurationError("verify needs a suite name (see verify --list)");
  return emit_report(o, run_suite(o.kind, run_config(o)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Universal factorial Schur P/Q-functions over formal group laws"};
  app.require_subcommand(1);
  Options o;

  auto* compute = app.add_subcommand("compute", "compute P, Q, s, s-double or phatK for one partition");
  compute->add_option("kind", o.kind)->required()->check(CLI::IsMember({"P", "Q", "s", "s-double", "phatK"}));
  compute->add_option("--lambda", o.lambda, "partition, e.g. 3,1");
  compute->add_option("--mu", o.mu, "evaluate at the vanishing point of mu");
  compute->add_option("--via", o.via, "phatK: kernel or word")->check(CLI::IsMember({"kernel", "word"}));
  add_common(compute, o);

  auto* dual = app.add_subcommand("dual", "dual functions from the Cauchy kernel");
  dual->add_option("kind", o.kind)->required()->check(CLI::IsMember({"phat", "qhat", "shat"}));
  dual->add_option("--lambda", o.lambda, "partition; all partitions when omitted");
  add_common(dual, o);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::vector<std::string> names;
  for (const auto& s : suite_list()) names.push_back(s.name);
  verify->add_option("suite", o.kind)->check(CLI::IsMember(names));
  verify->add_flag("--list", o.list, "list the suites");
  add_common(verify, o);

  auto* conjecture = app.add_subcommand("conjecture", "scan gp, gq or staircase against the K-theoretic duals");
  conjecture->add_option("kind", o.kind)->required()->check(CLI::IsMember({"gp", "gq", "staircase"}));
  add_common(conjecture, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*compute) return run_compute(o);
    if (*dual) return run_dual(o);
    if (*verify) return run_verify(o);
    return emit_report(o, run_conjecture(o.kind, run_config(o)));
  } catch (const ConfigurationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
