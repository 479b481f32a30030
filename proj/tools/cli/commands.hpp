#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "report.hpp"

namespace polyana::cli {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct Options {
  // shared
  std::string out;
  std::string format = "auto";  // auto, json, csv
  bool timing = false;
  bool quiet = false;
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t samples = 200'000;
  std::uint64_t seed = 1;
  bool no_sampling = false;
  std::string primes;

  // verify
  std::string eq;
  std::string ext = "1";
  std::string mode = "strong";
  int n = 0;
  long long m = 2;

  // solve
  std::string preset = "all";

  // derive
  std::string derivation;
  std::string compare;

  // padic
  std::string recursion;
  std::string phi;
  std::string clean;
  std::string family;
  int nmax = 0;
  int depth = 12;

  // entropy
  std::string probs;
  std::string refine;
  std::uint64_t perm_budget = 40'320;

  // cocycle
  std::string check = "all";
};

Report cmd_verify(const Options& o, std::ostream& progress);
Report cmd_solve(const Options& o, std::ostream& progress);
Report cmd_derive(const Options& o, std::ostream& progress);
Report cmd_padic(const Options& o);
Report cmd_entropy(const Options& o);
Report cmd_cocycle(const Options& o, std::ostream& progress);
Report cmd_tables(const Options& o);
Json cmd_list();

// Full entry point; returns the process exit status.
// 0: every expectation-tagged check passed; 1: some did not; 2: usage or config error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyana::cli
