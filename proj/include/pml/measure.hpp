#pragma once

#include <limits>
#include <vector>

#include "pml/alphabet.hpp"

namespace pml {

// Extended nonnegative ratio with the 0/0 -> 0 and (>0)/0 -> inf conventions.
struct ExtRatio {
  double value;      // +infinity when infinite
  bool is_infinite;  // true iff num > 0 and den == 0

  static ExtRatio finite(double v) { return {v, false}; }
  static ExtRatio infinite() {
    return {std::numeric_limits<double>::infinity(), true};
  }
};

ExtRatio rn_ratio(double num, double den);

// Nonnegative measure with finite support over an indexed alphabet.
class FiniteMeasure {
 public:
  FiniteMeasure(Alphabet alphabet, std::vector<double> weights);

  const Alphabet& alphabet() const { return alph_; }
  int size() const { return alph_.size(); }
  double weight(int atom) const { return w_[atom]; }
  const std::vector<double>& weights() const { return w_; }
  const std::vector<int>& support() const { return support_; }
  double total() const { return total_; }

 protected:
  Alphabet alph_;
  std::vector<double> w_;
  std::vector<int> support_;
  double total_;
};

// Probability mass function. Construction renormalizes inputs whose total is
// within 1e-12 of 1 and rejects anything further off; internal constructions
// (products, marginals) renormalize their mathematically-normalized weights.
class Pmf {
 public:
  Pmf(Alphabet alphabet, std::vector<double> weights);

  // For weights that are normalized by construction (products, marginals);
  // tolerance 1e-9 guards against logic errors only.
  static Pmf renormalized(Alphabet alphabet, std::vector<double> weights);

  static Pmf uniform(Alphabet alphabet);
  static Pmf delta(Alphabet alphabet, int atom);

  const Alphabet& alphabet() const { return m_.alphabet(); }
  int size() const { return m_.size(); }
  double prob(int atom) const { return m_.weight(atom); }
  const std::vector<double>& weights() const { return m_.weights(); }
  const std::vector<int>& support() const { return m_.support(); }
  const FiniteMeasure& measure() const { return m_; }

 private:
  struct Renorm {};
  Pmf(Renorm, Alphabet alphabet, std::vector<double> weights, double tol);
  FiniteMeasure m_;
};

// n-fold i.i.d. product; weight(x^n) = prod_i p(x_i). Guards the atom budget.
Pmf power(const Pmf& p, int n);

// Product of two independent pmfs over the concatenated factor structure
// (atoms of `a` are the most significant digits).
Pmf product(const Pmf& a, const Pmf& b);

// p extended with an independent uniform message coordinate of size L
// (message is the least significant digit).
FiniteMeasure with_uniform_tail(const Pmf& p, int tail);

struct Divergences {
  double kl_bits;
  double renyi_bits;
  double tv;
};

// KL, order-`order` Renyi divergence (order > 1), and total variation.
// Support violations report +infinity rather than throwing.
Divergences divergences(const Pmf& p, const Pmf& q, double order);

// Inverse-CDF sample of a pmf given a uniform in (0,1).
int sample(const Pmf& p, double u);

}  // namespace pml
