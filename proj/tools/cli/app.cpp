#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "config.hpp"
#include "polyana/finlog.hpp"
#include "polyana/parse.hpp"

namespace polyana::cli {

namespace {

void add_shared(CLI::App* sub, Options& o, bool weak_opts) {
  sub->add_option("--out", o.out, "Write the report to this file instead of stdout");
  sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"auto", "json", "csv"}));
  sub->add_flag("--timing", o.timing, "Include wall-clock timings (breaks byte-identical reports)");
  sub->add_flag("--quiet", o.quiet, "No progress lines on stderr");
  sub->add_option("--config", "Key-value config file; flags override it");
  if (weak_opts) {
    sub->add_option("--budget", o.budget, "Enumeration budget")->envname("POLYANA_BUDGET");
    sub->add_option("--samples", o.samples, "Sampled points when over budget");
    sub->add_option("--seed", o.seed, "Seed for sampled checks");
    sub->add_flag("--no-sampling", o.no_sampling, "Fail with BudgetExceeded instead of sampling");
  }
}

// Index of the subcommand name in args (args[0] is the program), or 0.
std::size_t subcommand_index(const std::vector<std::string>& args) {
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config") {
      ++i;
      continue;
    }
    if (!args[i].empty() && args[i][0] != '-') return i;
  }
  return 0;
}

std::string config_path(const std::vector<std::string>& args) {
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) return args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
  }
  return "";
}

}  // namespace

int run(const std::vector<std::string>& args_in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite and infinitesimal polylogarithm toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());

  auto* verify = app.add_subcommand("verify", "Strong/weak verification of catalog equations");
  add_shared(verify, o, true);
  verify->add_option("--eq", o.eq, "Equation ids (comma list), all-finite")->required();
  verify->add_option("--p", o.primes, "Primes: list and/or a..b ranges")->required();
  verify->add_option("--ext", o.ext, "Extension degrees for weak checks");
  verify->add_option("--mode", o.mode, "strong, weak or both")->check(CLI::IsMember({"strong", "weak", "both"}));
  verify->add_option("--n", o.n, "Weight for entries that take one");
  verify->add_option("--m", o.m, "Distribution order");

  auto* solve = app.add_subcommand("solve", "Kernel characterizations");
  add_shared(solve, o, true);
  solve->add_option("--preset", o.preset, "Preset ids (comma list) or all");
  solve->add_option("--p", o.primes, "Primes")->required();

  auto* derive = app.add_subcommand("derive", "Derivation map on classical equations");
  add_shared(derive, o, true);
  derive->add_option("--eq", o.eq, "Classical equation ids or all-classical")->required();
  derive->add_option("--derivation", o.derivation, "var:expr;var:expr (default sum t(1-t) d/dt)");
  derive->add_option("--p,--verify", o.primes, "Primes for weak verification")->required();
  derive->add_option("--ext", o.ext, "Extension degrees");
  derive->add_option("--compare", o.compare, "Finite id the derived sum should match up to a scalar");

  auto* padic = app.add_subcommand("padic", "Symbolic p-adic polylogarithm checks");
  add_shared(padic, o, false);
  padic->add_option("--recursion", o.recursion, "Levels for the DF_n recursion");
  padic->add_option("--phi", o.phi, "Levels for the Phi_n form of the recursion");
  padic->add_option("--clean", o.clean, "Levels for the clean condition");
  padic->add_option("--family", o.family, "lambda3=...,lambda4=... choices");
  padic->add_option("--nmax", o.nmax, "Top level for --family");
  padic->add_option("--depth", o.depth, "Number of Li generators")->check(CLI::Range(1, 64));

  auto* entropy = app.add_subcommand("entropy", "Entropy of rational distributions mod p");
  add_shared(entropy, o, false);
  entropy->add_option("--p", o.primes, "Primes")->required();
  entropy->add_option("--probs", o.probs, "Probabilities, e.g. 1/4,1/4,1/2");
  entropy->add_option("--refine", o.refine, "Refinement groups separated by |, e.g. 1/8,1/8|1/4|1/2");
  entropy->add_option("--perm-budget", o.perm_budget, "Maximum orderings tried");

  auto* cocycle = app.add_subcommand("cocycle", "Cocycle, coboundary and group checks");
  add_shared(cocycle, o, true);
  cocycle->add_option("--p", o.primes, "Primes")->required();
  cocycle->add_option("--check", o.check, "Checks (comma list) or all");

  auto* tables = app.add_subcommand("tables", "Special values of finite polylogarithms");
  add_shared(tables, o, false);
  tables->add_option("--p", o.primes, "Primes")->required();

  auto* list = app.add_subcommand("list", "Catalog ids and solver presets");
  add_shared(list, o, false);

  std::vector<std::string> args = args_in;
  try {
    const std::string cfg_path = config_path(args);
    const std::size_t sub_at = subcommand_index(args);
    if (!cfg_path.empty()) {
      if (sub_at == 0) throw Error(ErrorCode::ParseError, "--config needs a subcommand");
      CLI::App* sub = app.get_subcommand(args[sub_at]);
      std::vector<std::string> injected;
      for (const ConfigEntry& e : load_config(cfg_path)) {
        if (e.key == "config")
          throw Error(ErrorCode::ParseError, cfg_path + ":" + std::to_string(e.line) + ":1: nested config");
        if (sub->get_option_no_throw("--" + e.key) == nullptr)
          throw Error(ErrorCode::ParseError, cfg_path + ":" + std::to_string(e.line) + ":1: unknown key '" + e.key +
                                                 "' for '" + args[sub_at] + "'");
        if (has_flag(args, e.key)) continue;
        injected.push_back("--" + e.key + "=" + e.value);
      }
      args.insert(args.begin() + static_cast<std::ptrdiff_t>(sub_at) + 1, injected.begin(), injected.end());
    }
    std::vector<std::string> rev(args.rbegin(), args.rend() - 1);
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream os, es;
    const int code = app.exit(e, os, es);
    out << os.str();
    err << es.str();
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  std::string text;
  int status = 0;
  try {
    if (list->parsed()) {
      text = cmd_list().dump(2) + "\n";
    } else {
      Report rep = [&]() {
        if (verify->parsed()) return cmd_verify(o, err);
        if (solve->parsed()) return cmd_solve(o, err);
        if (derive->parsed()) return cmd_derive(o, err);
        if (padic->parsed()) return cmd_padic(o);
        if (entropy->parsed()) return cmd_entropy(o);
        if (cocycle->parsed()) return cmd_cocycle(o, err);
        return cmd_tables(o);
      }();
      const bool csv = o.format == "csv" || (o.format == "auto" && tables->parsed());
      if (csv && tables->parsed()) {
        std::vector<SpecialValueRow> rows;
        for (std::uint32_t p : parse_prime_list(o.primes)) {
          auto r = special_values(p);
          rows.insert(rows.end(), r.begin(), r.end());
        }
        text = special_values_csv(rows);
      } else if (csv) {
        text = rep.to_csv();
      } else {
        text = rep.to_json().dump(2) + "\n";
      }
      status = rep.ok() ? 0 : 1;
      for (const Json& r : rep.records())
        if (r.value("expected", false) && r["verdict"] != kPass)
          err << r["verdict"].get<std::string>() << ": " << r["repro"].get<std::string>() << "\n";
    }
  } catch (const Error& e) {
    // Bad option values (not prime, unknown id, ...) are configuration errors.
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << o.out << "\n";
      return 2;
    }
    f << text;
  }
  return status;
}

}  // namespace polyana::cli
