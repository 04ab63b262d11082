#pragma once

#include <cmath>
#include <cstdint>
#include <span>

namespace pml::stats {

// Neumaier compensated summation; keeps pmf totals and bound accumulators
// accurate over millions of terms.
class NeumaierSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline double sum(std::span<const double> xs) {
  NeumaierSum s;
  for (double x : xs) s.add(x);
  return s.value();
}

struct Interval {
  double lo;
  double hi;
  double half() const { return (hi - lo) / 2; }
};

// Wilson 95% score interval for a binomial proportion. Always contains the
// point estimate k/n.
inline Interval wilson95(int64_t successes, int64_t n) {
  const double z = 1.959963984540054;
  if (n <= 0) return {0.0, 1.0};
  double p = static_cast<double>(successes) / static_cast<double>(n);
  double z2n = z * z / static_cast<double>(n);
  double center = (p + z2n / 2) / (1 + z2n);
  double half = z *
                std::sqrt(p * (1 - p) / static_cast<double>(n) + z2n * z2n / (4 * z * z)) /
                (1 + z2n);
  double lo = center - half, hi = center + half;
  if (lo < 0) lo = 0;
  if (hi > 1) hi = 1;
  return {lo, hi};
}

// Mean +/- 1.96 sd/sqrt(n) interval for bounded per-trial values (exact-TV
// metrics); clamped to [lo_cap, hi_cap].
inline Interval normal95(double mean, double var, int64_t n, double lo_cap = 0.0,
                         double hi_cap = 1.0) {
  const double z = 1.959963984540054;
  double half = n > 1 ? z * std::sqrt(std::max(var, 0.0) / static_cast<double>(n)) : 0.0;
  double lo = mean - half, hi = mean + half;
  if (lo < lo_cap) lo = lo_cap;
  if (hi > hi_cap) hi = hi_cap;
  return {lo, hi};
}

}  // namespace pml::stats
