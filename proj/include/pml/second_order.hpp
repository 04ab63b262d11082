#pragma once

#include <vector>

#include "pml/joint.hpp"
#include "pml/kernel.hpp"
#include "pml/measure.hpp"

namespace pml {

// Standard normal tail probability and its inverse.
double qfunc(double x);
double qinv(double eps);  // eps in (0,1)

// Second-order message size for coding with encoder state information on n
// uses: n C - sqrt(n V) Qinv(eps - alpha/sqrt(n)) - log2(n)/2, with
// C = I(U;Y) - I(U;S) and V = Var[iota_{U;S} - iota_{U;Y}] taken from a
// (S, U, Y) joint. Returns log2 of the message count.
double gp_rate_log_l(const JointPmf& suy, double n, double eps, double alpha);

// Rate-distortion solution from alternating minimization with a Lagrange
// bisection on the slope to meet the distortion target.
struct RdSolution {
  double D;             // attained distortion
  double rate_bits;     // R(D)
  double nu_star;       // -R'(D) in bits; +inf at the zero-distortion corner
  Kernel q_zw;          // reproduction kernel
  Pmf pz;               // output marginal
  double dual_gap;      // primal - dual at the returned point
  int outer_iterations;
};

RdSolution ba_rd(const Pmf& pw, const std::vector<double>& d, int z_size,
                 double D);

// D-tilted information j_W(w, D) = -log2 E_Z[2^{nu* (D - d(w,Z))}] in bits.
double d_tilted(const RdSolution& rd, const std::vector<double>& d, int z_size,
                int w, double D);

struct DispersionInputs {
  double C = 0;    // channel capacity-like mean, bits/use
  double V = 0;    // channel dispersion, bits^2/use
  double RD = 0;   // source rate-distortion function, bits/symbol
  double VD = 0;   // source dispersion Var[j_W], bits^2/symbol
  double eps = 0.05;
  double n = 0;    // channel uses
  double k = 0;    // source symbols; 0 = source-free limit
  double alpha = 1, beta = 0, eta = 1, k0 = 1;  // user-supplied constants
};

struct BlocklengthCheck {
  double lhs;  // n C - k R(D)
  double rhs;  // sqrt(n V + k V(D)) Qinv(eps - eta/sqrt(min{n,k})) + ...
  bool satisfied;
};

BlocklengthCheck jscc_blocklength_check(const DispersionInputs& in);

}  // namespace pml
