#pragma once

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "dsl/expr.hpp"
#include "dsl/verify.hpp"

namespace dsl {

enum ExitCode : int { kExitOk = 0, kExitMath = 1, kExitUsage = 2, kExitResource = 3 };

struct CliConfig {
  std::string gamma = "cyclic:1";
  std::optional<int> max_degree;
  std::optional<int> trunc;
  std::string source_bound = "auto";
  std::uint64_t seed = 1;
  std::string format = "text";
  std::size_t basis_cap = 2'000'000;
};

// Desk-scale defaults: 8, 6, 5 and 4 for |Γ| = 1, 2, 3 and larger groups.
inline int default_degree(const GroupSpec& G) {
  switch (G.order()) {
    case 1:
      return 8;
    case 2:
      return 6;
    case 3:
      return 5;
    default:
      return 4;
  }
}

struct ResolvedConfig {
  GroupSpec gamma;
  int max_degree = 0;
  int trunc = 0;
  SolverOptions solver;
  std::uint64_t seed = 1;
  std::string format;
};

inline ResolvedConfig resolve(const CliConfig& c) {
  ResolvedConfig r;
  r.gamma = GroupSpec::parse(c.gamma);
  r.max_degree = c.max_degree.value_or(default_degree(r.gamma));
  r.trunc = c.trunc.value_or(default_degree(r.gamma));
  if (r.max_degree < 1) throw ParseError("--max-degree must be positive");
  if (r.trunc < 1) throw ParseError("--trunc must be positive");
  if (c.basis_cap < 1) throw ParseError("--basis-cap must be positive");
  r.solver.basis_cap = c.basis_cap;
  if (c.source_bound != "auto") {
    const Rational m = parse_rational(c.source_bound);
    if (m.get_den() != 1 || m < 1 || m > 64) throw ParseError("--source-bound must be 'auto' or a positive integer");
    r.solver.source_bound_cap = static_cast<int>(m.get_num().get_si());
  }
  r.seed = c.seed;
  r.format = c.format;
  return r;
}

inline int cmd_dims(const ResolvedConfig& cfg, std::ostream& out) {
  if (cfg.format == "csv") out << csv_header() << '\n';
  Json all = Json::array();
  for (int n = 1; n <= cfg.max_degree; ++n) {
    const DegreeReport rep = verify_main_theorem(n, cfg.gamma, cfg.solver);
    if (cfg.format == "json") {
      all.push_back(to_json(rep));
    } else if (cfg.format == "csv") {
      out << to_csv(rep) << std::endl;
    } else {
      out << to_text(rep) << std::endl;
    }
  }
  if (cfg.format == "json") out << all.dump(2) << '\n';
  return kExitOk;
}

inline int cmd_verify(const ResolvedConfig& cfg, const std::string& suite, std::ostream& out) {
  SuiteOptions opts;
  opts.gamma = cfg.gamma;
  opts.trunc = cfg.trunc;
  opts.lie_degree = std::min(cfg.max_degree, 6);
  opts.seed = cfg.seed;
  opts.solver = cfg.solver;
  const std::vector<CheckReport> reports = run_suite(suite, opts);
  bool passed = true;
  for (const auto& r : reports) passed = passed && r.passed;
  if (cfg.format == "json") {
    Json j;
    j["suite"] = suite;
    j["gamma"] = cfg.gamma.name();
    j["trunc"] = cfg.trunc;
    j["seed"] = cfg.seed;
    j["passed"] = passed;
    j["checks"] = Json::array();
    for (const auto& r : reports) j["checks"].push_back(to_json(r));
    out << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "check,passed\n";
    for (const auto& r : reports) out << r.check << ',' << (r.passed ? "true" : "false") << '\n';
  } else {
    std::size_t failed = 0;
    for (const auto& r : reports) {
      out << (r.passed ? "PASS " : "FAIL ") << r.check;
      if (!r.passed) {
        ++failed;
        out << ": " << r.first_failure.dump();
      }
      out << '\n';
    }
    out << suite << " on " << cfg.gamma.name() << ": " << reports.size() - failed << "/" << reports.size()
        << " checks passed\n";
  }
  return passed ? kExitOk : kExitMath;
}

inline int cmd_eval(const ResolvedConfig& cfg, const std::string& expression, std::ostream& out, std::ostream& err) {
  EvalContext ctx{cfg.gamma, cfg.trunc, {}};
  const Value v = evaluate(ctx, expression);
  for (const auto& w : ctx.warnings) err << "warning: " << w << '\n';
  if (cfg.format == "json") {
    out << value_to_json(cfg.gamma, v).dump() << '\n';
  } else {
    out << value_to_text(cfg.gamma, v) << '\n';
  }
  return kExitOk;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Exact double shuffle and harmonic-coproduct stabilizer computations", "dsl"};
  app.require_subcommand(1);
  app.fallthrough();
  CliConfig cfg;
  app.add_option("--gamma", cfg.gamma, "finite abelian group, cyclic:N or product:N1xN2...");
  app.add_option("--max-degree", cfg.max_degree, "largest degree for dims");
  app.add_option("--trunc", cfg.trunc, "truncation order for series");
  app.add_option("--source-bound", cfg.source_bound, "largest source degree for the stabilizer system, or auto");
  app.add_option("--seed", cfg.seed, "seed for randomized suites");
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--basis-cap", cfg.basis_cap, "largest Y-word basis a degree may use");

  auto* dims = app.add_subcommand("dims", "dimension table and certification per degree");
  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "paper-deg1, paper-deg2, lie-laws, group-laws, theta or all")->required();
  std::string expression;
  auto* eval = app.add_subcommand("eval", "evaluate a prefix expression");
  eval->add_option("expression", expression, "expression, e.g. \"star_additive (bracket x0 x1)\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const ResolvedConfig rc = resolve(cfg);
    if (dims->parsed()) return cmd_dims(rc, out);
    if (verify->parsed()) return cmd_verify(rc, suite, out);
    if (eval->parsed()) return cmd_eval(rc, expression, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitMath;
  } catch (const std::bad_alloc&) {
    err << "resource limit: out of memory\n";
    return kExitResource;
  }
  return kExitUsage;
}

}  // namespace dsl
