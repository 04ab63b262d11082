#pragma once

#include <vector>

#include "pml/measure.hpp"

namespace pml {

// Conditional pmf: one row per input atom, each a valid Pmf over the output
// alphabet.
class Kernel {
 public:
  Kernel(Alphabet input, Alphabet output, std::vector<std::vector<double>> rows);
  Kernel(Alphabet input, std::vector<Pmf> rows);

  const Alphabet& input() const { return in_; }
  const Alphabet& output() const { return rows_.front().alphabet(); }
  const Pmf& row(int x) const { return rows_[x]; }
  double prob(int x, int y) const { return rows_[x].prob(y); }

 private:
  Alphabet in_;
  std::vector<Pmf> rows_;
};

// Memoryless n-fold extension: row(x^n) = row(x_1) x ... x row(x_n).
Kernel power(const Kernel& k, int n);

// Joint weights p(x) * k(y|x) over input x output (input atoms most
// significant). Factor structure is the concatenation of both alphabets'.
std::vector<double> joint_weights(const Pmf& p, const Kernel& k);

}  // namespace pml
