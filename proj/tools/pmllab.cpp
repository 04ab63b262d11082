// Experiment runner: evaluates one-shot bounds, runs coupled-race simulators,
// verifies the exact matching-rank laws, and computes second-order reports.

#include <cstdio>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pml/errors.hpp"
#include "pml/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"pmllab: exponential-race coding experiments"};
  app.require_subcommand(1);

  pml::RunConfig cfg;
  std::vector<std::string> sweep_specs;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--instance", cfg.instance_path, "instance JSON file")
        ->required();
    sub->add_option("--sweep", sweep_specs,
                    "parameter sweep, e.g. --sweep L=2,4,8 (repeatable)");
    sub->add_option("--trials", cfg.trials, "Monte Carlo trials per point");
    sub->add_option("--seed", cfg.seed, "master seed");
    sub->add_option("--workers", cfg.workers, "worker threads");
    sub->add_option("--trace", cfg.trace, "trace the first N race points");
    sub->add_option("--phi-terms", cfg.phi_terms,
                    "phi mixture truncation length");
    sub->add_option("--out", cfg.out_dir, "output directory");
  };
  add_common(app.add_subcommand("bound", "evaluate analytic bounds"));
  add_common(app.add_subcommand("simulate", "run the coupled-race simulator"));
  add_common(app.add_subcommand("verify-lemma",
                                "exact matching law vs Monte Carlo"));
  add_common(app.add_subcommand("dispersion", "second-order reports"));

  CLI11_PARSE(app, argc, argv);
  cfg.subcommand = app.get_subcommands().front()->get_name();

  try {
    for (const auto& spec : sweep_specs) {
      auto eq = spec.find('=');
      if (eq == std::string::npos)
        throw pml::ValidationError("sweep spec must look like name=v1,v2");
      std::string key = spec.substr(0, eq);
      std::vector<double> vals;
      std::string rest = spec.substr(eq + 1);
      size_t pos = 0;
      while (pos < rest.size()) {
        size_t comma = rest.find(',', pos);
        if (comma == std::string::npos) comma = rest.size();
        vals.push_back(std::stod(rest.substr(pos, comma - pos)));
        pos = comma + 1;
      }
      if (vals.empty()) throw pml::ValidationError("empty sweep list");
      cfg.sweeps.emplace_back(key, std::move(vals));
    }
    return pml::run(cfg);
  } catch (const pml::Error& e) {
    nlohmann::json err{{"error", e.kind()}, {"message", e.what()}};
    std::fprintf(stderr, "%s\n", err.dump().c_str());
    return 2;
  } catch (const std::exception& e) {
    nlohmann::json err{{"error", "internal"}, {"message", e.what()}};
    std::fprintf(stderr, "%s\n", err.dump().c_str());
    return 2;
  }
}
