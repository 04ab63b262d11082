#include "pml/measure.hpp"

#include <cmath>
#include <cstdint>

#include "pml/config.hpp"
#include "pml/errors.hpp"
#include "pml/stats.hpp"

namespace pml {

ExtRatio rn_ratio(double num, double den) {
  if (num < 0 || den < 0) throw ValidationError("rn_ratio needs nonnegative inputs");
  if (num == 0) return ExtRatio::finite(0.0);
  if (den == 0) return ExtRatio::infinite();
  return ExtRatio::finite(num / den);
}

FiniteMeasure::FiniteMeasure(Alphabet alphabet, std::vector<double> weights)
    : alph_(std::move(alphabet)), w_(std::move(weights)) {
  if (static_cast<int>(w_.size()) != alph_.size())
    throw ValidationError("weight count does not match alphabet size");
  stats::NeumaierSum total;
  for (int i = 0; i < alph_.size(); ++i) {
    double w = w_[i];
    if (!(w >= 0) || !std::isfinite(w))
      throw ValidationError("weights must be finite and nonnegative");
    if (w > 0) support_.push_back(i);
    total.add(w);
  }
  total_ = total.value();
  if (support_.empty()) throw ValidationError("measure has no positive weight");
}

Pmf::Pmf(Renorm, Alphabet alphabet, std::vector<double> weights, double tol)
    : m_(std::move(alphabet), std::move(weights)) {
  double total = m_.total();
  if (std::abs(total - 1.0) > tol)
    throw ValidationError("pmf weights sum to " + std::to_string(total) +
                          ", outside tolerance");
  if (total != 1.0) {
    std::vector<double> w = m_.weights();
    for (double& x : w) x /= total;
    m_ = FiniteMeasure(m_.alphabet(), std::move(w));
  }
}

Pmf::Pmf(Alphabet alphabet, std::vector<double> weights)
    : Pmf(Renorm{}, std::move(alphabet), std::move(weights), 1e-12) {}

Pmf Pmf::renormalized(Alphabet alphabet, std::vector<double> weights) {
  return Pmf(Renorm{}, std::move(alphabet), std::move(weights), 1e-9);
}

Pmf Pmf::uniform(Alphabet alphabet) {
  int n = alphabet.size();
  return Pmf::renormalized(std::move(alphabet),
                           std::vector<double>(n, 1.0 / n));
}

Pmf Pmf::delta(Alphabet alphabet, int atom) {
  std::vector<double> w(alphabet.size(), 0.0);
  w.at(atom) = 1.0;
  return Pmf::renormalized(std::move(alphabet), std::move(w));
}

Pmf power(const Pmf& p, int n) {
  const Alphabet& a = p.alphabet();
  double bits = n * std::log2(static_cast<double>(a.size()));
  if (bits > std::log2(static_cast<double>(atom_budget())) + 1e-9)
    throw CapacityError("n-fold power exceeds atom budget");
  Alphabet pa = Alphabet::power(a, n);
  std::vector<double> w(pa.size());
  // digits cycle fastest over the last use
  for (int idx = 0; idx < pa.size(); ++idx) {
    double prod = 1.0;
    int rem = idx;
    for (int use = n - 1; use >= 0; --use) {
      int digit = rem % a.size();
      rem /= a.size();
      prod *= p.prob(digit);
      (void)use;
    }
    w[idx] = prod;
  }
  return Pmf::renormalized(std::move(pa), std::move(w));
}

Pmf product(const Pmf& a, const Pmf& b) {
  std::vector<int> sizes = a.alphabet().factor_sizes();
  for (int s : b.alphabet().factor_sizes()) sizes.push_back(s);
  Alphabet pa = Alphabet::product(std::move(sizes));
  std::vector<double> w(static_cast<size_t>(a.size()) * b.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j)
      w[static_cast<size_t>(i) * b.size() + j] = a.prob(i) * b.prob(j);
  return Pmf::renormalized(std::move(pa), std::move(w));
}

FiniteMeasure with_uniform_tail(const Pmf& p, int tail) {
  if (tail < 1) throw ValidationError("tail size must be >= 1");
  std::vector<int> sizes = p.alphabet().factor_sizes();
  sizes.push_back(tail);
  Alphabet pa = Alphabet::product(std::move(sizes));
  std::vector<double> w(static_cast<size_t>(p.size()) * tail);
  for (int i = 0; i < p.size(); ++i)
    for (int m = 0; m < tail; ++m)
      w[static_cast<size_t>(i) * tail + m] = p.prob(i) / tail;
  return FiniteMeasure(std::move(pa), std::move(w));
}

Divergences divergences(const Pmf& p, const Pmf& q, double order) {
  if (!(order > 1))
    throw ValidationError("Renyi order must exceed 1 in this form");
  const double inf = std::numeric_limits<double>::infinity();
  bool dominated = true;
  stats::NeumaierSum kl, renyi_e, l1;
  for (int a = 0; a < p.size(); ++a) {
    double pa = p.prob(a), qa = q.prob(a);
    l1.add(std::abs(pa - qa));
    if (pa > 0) {
      if (qa == 0) {
        dominated = false;
        continue;
      }
      double r = pa / qa;
      kl.add(pa * std::log2(r));
      renyi_e.add(pa * std::pow(r, order - 1));
    }
  }
  Divergences d;
  d.tv = l1.value() / 2;
  if (!dominated) {
    d.kl_bits = inf;
    d.renyi_bits = inf;
  } else {
    d.kl_bits = kl.value();
    d.renyi_bits = std::log2(renyi_e.value()) / (order - 1);
  }
  return d;
}

int sample(const Pmf& p, double u) {
  double acc = 0.0;
  const auto& sup = p.support();
  for (int a : sup) {
    acc += p.prob(a);
    if (u < acc) return a;
  }
  return sup.back();
}

}  // namespace pml
