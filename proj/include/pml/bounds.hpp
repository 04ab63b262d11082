#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pml/instances.hpp"

namespace pml {

// Scheme joints used by both bound evaluation and the simulators.
JointPmf channel_joint(const ChannelInstance&);    // (X, Y)
JointPmf gp_joint(const GpInstance&);              // (S, U, Y)
JointPmf wz_joint(const WzInstance&);              // (X, Y, U)
JointPmf bc_joint(const BcInstance&);              // (U..., Y1, Y2)
JointPmf dlsc_joint(const DlscInstance&);          // (X1, X2, U1, U2)
JointPmf mac_joint(const MacInstance&);            // (X1, X2, Y)
JointPmf wiretap_joint(const WiretapInstance&);    // (U, X, Y, Z)

// Evaluated bound values for one setting. Exact summation over the joint
// support when it fits the configured threshold, Monte Carlo otherwise (mode
// and sample count recorded).
struct BoundReport {
  std::string setting;
  std::vector<std::pair<std::string, double>> values;
  std::vector<std::pair<std::string, double>> params;
  bool exact = true;
  double weight_consumed = 1.0;  // exact mode: total probability iterated
  long long mc_samples = 0;

  double value(const std::string& name) const;
  bool has(const std::string& name) const;
  void set(const std::string& name, double v);
};

// Support-size threshold above which bound evaluation switches to Monte
// Carlo over the joint (default 1e7 atoms).
int64_t bounds_exact_threshold();
void set_bounds_exact_threshold(int64_t atoms);

BoundReport channel_bounds(const ChannelInstance& inst);
// List-decoding bound E[(1 - (1 + L 2^-iota)^-1)^J].
double channel_list_bound(const ChannelInstance& inst, long long J);
// Per-message rank-decoder bound E[1 - (1 - min{2^-iota, 1})^m].
double channel_rank_message_bound(const ChannelInstance& inst, long long m);

BoundReport gp_bounds(const GpInstance& inst, double gamma, long long J);
BoundReport wz_bounds(const WzInstance& inst, double gamma_p, double gamma_c,
                      long long J);
BoundReport jscc_bounds(const JsccInstance& inst, long long J);
BoundReport bc_bounds(const BcInstance& inst, double gamma);
BoundReport dlsc_bounds(const DlscInstance& inst, double gamma, long long J);
BoundReport mac_bounds(const MacInstance& inst, double gamma, long long J);
BoundReport resolvability_bounds(const ResolvabilityInstance& inst,
                                 double gamma, double alpha);
BoundReport wiretap_bounds(const WiretapInstance& inst);

// Monte Carlo over i.i.d. information-density sums: evaluates the n-fold
// extension of a single-letter instance without materializing products.
double channel_prop1_product_mc(const ChannelInstance& single, int n,
                                long long L, long long samples, uint64_t seed);
double gp_thm3_product_mc(const GpInstance& single, int n, double log2_L,
                          long long samples, uint64_t seed);

}  // namespace pml
