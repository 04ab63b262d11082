#pragma once

#include <vector>

#include "pml/measure.hpp"

namespace pml {

// Mismatch-law parameters at an atom u: the rank overshoot of the first view
// against the second is NegBin(j, 1/(1+alpha)) + Bin(j-1, beta).
struct AlphaBeta {
  double alpha;        // >= 0; infinite when q(u) == 0
  double beta;         // in [0, 1]
  bool alpha_infinite;
  int atom;
};

AlphaBeta alpha_beta(const FiniteMeasure& mu, const Pmf& p, const Pmf& q, int u);

// Exact conditional law of the matching rank minus one, given the selected
// atom. pmf[m] = P{rank - 1 = m}; truncated once the tail drops below
// tail_tol (tail reported).
struct RankLaw {
  int j;
  AlphaBeta ab;
  std::vector<double> pmf;
  double tail;

  double mean() const;  // j*alpha + (j-1)*beta
  // P{rank > k}; exact closed form for j == 1, truncated sum otherwise.
  double prob_exceeds(long long k) const;
};

RankLaw rank_law(const FiniteMeasure& mu, const Pmf& p, const Pmf& q, int u,
                 int j, double tail_tol = 1e-12);

enum class PmlBoundForm {
  Basic,   // 1 - (1+r)^-1          (j = k = 1)
  Mean,    // j*r + 1               (bound on E[rank])
  Tail,    // min{(j/k) r, 1}
  K1,      // 1 - (1 - min{r,1})^j
  J1,      // (1 - (1+r)^-1)^k
  J1Weak,  // 1 - (1 + r/k)^-1
};

double pml_bound(ExtRatio r, int j, long long k, PmlBoundForm form);

struct MomentBounds {
  double log_bound_bits;  // on E[log2 rank]
  double power_bound;     // on E[rank^gamma]
};

// Second-order domination bounds: D(P||Q) + log2 j + log2(e)/j and
// j^gamma 2^{gamma D_{gamma+1}} + gamma j^{gamma-1}. Support violation
// reports +infinity.
MomentBounds moment_bounds(const Pmf& p, const Pmf& q, int j, double gamma);

// phi(t) = c t^-1 (log2(t+2))^-2, the slowly-converging mixing distribution
// used by the simultaneous decoders. The normalizing constant is certified
// by partial summation plus a monotone integral bracket.
class PhiDist {
 public:
  static const PhiDist& instance();

  double c() const { return c_; }
  double c_lo() const { return c_lo_; }
  double c_hi() const { return c_hi_; }
  double bracket_width() const { return c_hi_ - c_lo_; }

  double operator()(double t) const;
  // Total phi mass beyond the first k terms (bracket midpoint).
  double tail_mass(long long k) const;
  // Renormalized weights of the first k terms.
  std::vector<double> truncated(long long k) const;

 private:
  PhiDist();
  double c_, c_lo_, c_hi_;
  double unnorm_sum_lo_, unnorm_sum_hi_;
};

struct PhiIneqReport {
  double lhs;  // min{ s / phi(t), 1 }
  double mid;  // min{ s t (log2(1/s + 1) + 1)^2, 1 }
  double rhs;  // 2^-alpha (2(atilde+beta)^2 + 2 atilde^2 + 14)
  bool preconditions_ok;
  bool holds;
};

PhiIneqReport phi_inequality(double s, double t, double alpha, double beta,
                             double alpha_tilde);

}  // namespace pml
