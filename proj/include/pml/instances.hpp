#pragma once

#include <vector>

#include "pml/joint.hpp"
#include "pml/kernel.hpp"
#include "pml/measure.hpp"

namespace pml {

// Problem instances, already extended to their n-fold product form where
// applicable. Deterministic maps are flat lookup tables over the relevant
// product alphabet (row-major in the listed argument order), distortion
// matrices likewise.

struct ChannelInstance {
  Pmf px;
  Kernel ch;  // X -> Y
  long long L = 2;
};

struct GpInstance {
  Pmf ps;
  Kernel pu_given_s;        // S -> U
  std::vector<int> x_map;   // [u][s] -> x
  int x_size = 0;
  Kernel ch;                // input (X x S) mixed-radix x*|S|+s -> Y
  long long L = 2;
};

struct WzInstance {
  Pmf px;
  Kernel side;             // X -> Y
  Kernel pu_given_x;       // X -> U
  std::vector<int> z_map;  // [u][y] -> z
  int z_size = 0;
  std::vector<double> d;   // [x][z]
  double D = 0;
  long long L = 2;
};

struct JsccInstance {
  Pmf pw;
  Pmf px;
  Kernel ch;              // X -> Y
  Pmf pz;
  std::vector<double> d;  // [w][z]
  double D = 0;
};

struct BcInstance {
  // common = true: aux is a 3-factor joint over (U0, U1, U2); otherwise a
  // 2-factor joint over (U1, U2) and L0 is ignored.
  JointPmf aux;
  bool common = false;
  std::vector<int> x_map;  // [u0][u1][u2] or [u1][u2] -> x
  int x_size = 0;
  Kernel ch2;              // X -> (Y1 x Y2) 2-factor output
  long long L0 = 1, L1 = 2, L2 = 2, J = 1, K1 = 1, K2 = 1;
};

struct DlscInstance {
  JointPmf px12;            // (X1, X2)
  Kernel k1, k2;            // Xj -> Uj
  std::vector<int> z1_map;  // [u1][u2] -> z1
  std::vector<int> z2_map;  // [u1][u2] -> z2
  int z1_size = 0, z2_size = 0;
  std::vector<double> d1;   // [x1][z1]
  std::vector<double> d2;   // [x2][z2]
  double D1 = 0, D2 = 0;
  long long L1 = 2, L2 = 2;
};

struct MacInstance {
  Pmf px1, px2;
  Kernel ch;  // input (X1 x X2) mixed-radix x1*|X2|+x2 -> Y
  long long L1 = 2, L2 = 2;
};

struct ResolvabilityInstance {
  Pmf px;
  Kernel ch;  // X -> Y
  long long L = 2, J = 1;
};

struct WiretapInstance {
  JointPmf pux;  // (U, X)
  Kernel ch2;    // X -> (Y x Z) 2-factor output
  long long L = 2, K = 1, J = 1;
  double nu = 1.0;
};

// Mean separable distortion over n-fold products: entries are averages of
// the per-coordinate single-letter values.
std::vector<double> power_distortion(const std::vector<double>& d, int nx,
                                     int nz, int n);

// Deterministic map applied coordinate-wise over n-fold products.
std::vector<int> power_map(const std::vector<int>& m, std::vector<int> arg_sizes,
                           int out_size, int n);

// Kernel powers whose product inputs/outputs are regrouped per variable
// ((a^n, b^n) ordering rather than per-use interleaving).
Kernel power_grouped_input2(const Kernel& k, int a_size, int b_size, int n);
Kernel power_grouped_output2(const Kernel& k, int n);

}  // namespace pml
