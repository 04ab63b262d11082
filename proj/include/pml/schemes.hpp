#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "pml/instances.hpp"

namespace pml {

struct RunOptions {
  long long trials = 100000;
  uint64_t seed = 1;
  int workers = 1;
  // dump the first trace_points race points of the decoding view for the
  // first few trials into EmpiricalResult::trace
  int trace_points = 0;
  // truncation length of the phi-weighted decoder mixtures (renormalized)
  long long phi_terms = 1024;
  // channel_rank: transmit this fixed message instead of a uniform draw
  long long fixed_message = 0;
};

struct EmpiricalResult {
  std::string setting;
  long long trials = 0;
  long long failures = 0;
  double estimate = 0;  // failure rate (or mean exact TV for resolvability)
  double ci_lo = 0, ci_hi = 0;
  // wiretap only: mean exact secrecy TV across realizations
  double secondary = 0;
  // the value compared against the analytic bound (estimate, or
  // P_e + nu * secondary for the wiretap setting) and its CI half-width
  double metric = 0;
  double metric_ci_half = 0;
  double bound = 0;
  std::string bound_name;
  bool dominated = false;  // metric <= bound + 3 * metric_ci_half
  nlohmann::json trace;
};

EmpiricalResult simulate_channel(const ChannelInstance&, const RunOptions&);
EmpiricalResult simulate_channel_rank(const ChannelInstance&, const RunOptions&);
EmpiricalResult simulate_channel_list(const ChannelInstance&, long long J,
                                      const RunOptions&);
EmpiricalResult simulate_gp(const GpInstance&, const RunOptions&);
EmpiricalResult simulate_wz(const WzInstance&, const RunOptions&);
EmpiricalResult simulate_jscc(const JsccInstance&, const RunOptions&);
EmpiricalResult simulate_bc_marton(const BcInstance&, const RunOptions&);
EmpiricalResult simulate_bc_common(const BcInstance&, const RunOptions&);
EmpiricalResult simulate_dlsc(const DlscInstance&, const RunOptions&);
EmpiricalResult simulate_mac(const MacInstance&, const RunOptions&);
EmpiricalResult simulate_resolvability(const ResolvabilityInstance&,
                                       const RunOptions&);
EmpiricalResult simulate_wiretap(const WiretapInstance&, const RunOptions&);

// Per-trial seed derivation shared by all simulators; exposed so tests can
// replay a single trial's realization.
uint64_t trial_seed(uint64_t master_seed, long long trial_index);

}  // namespace pml
