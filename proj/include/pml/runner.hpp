#pragma once

#include <map>
#include <string>
#include <vector>

#include "pml/schemes.hpp"

namespace pml {

struct RunConfig {
  std::string subcommand;  // bound | simulate | verify-lemma | dispersion
  std::string instance_path;
  // parameter name -> value list; the run is the cross product
  std::vector<std::pair<std::string, std::vector<double>>> sweeps;
  long long trials = 100000;
  uint64_t seed = 1;
  int workers = 1;
  int trace = 0;
  long long phi_terms = 1024;
  std::string out_dir = ".";
  long long sweep_cap = 10000;
};

// Executes the configured run: one JSON report per sweep point plus an
// aggregate CSV (results.csv) with a stable column order. Returns 0 iff
// every dominance / verification assertion passed.
int run(const RunConfig& cfg);

}  // namespace pml
