#include "pml/analytics.hpp"

#include <algorithm>
#include <cmath>

#include "pml/errors.hpp"
#include "pml/stats.hpp"

namespace pml {

namespace {
const double kInf = std::numeric_limits<double>::infinity();
}

AlphaBeta alpha_beta(const FiniteMeasure& mu, const Pmf& p, const Pmf& q,
                     int u) {
  if (!(p.alphabet() == mu.alphabet()) || !(q.alphabet() == mu.alphabet()))
    throw ValidationError("alpha_beta inputs disagree on alphabet");
  for (int a : p.support())
    if (mu.weight(a) == 0)
      throw AbsContinuityError("p is not absolutely continuous w.r.t. mu");
  for (int a : q.support())
    if (mu.weight(a) == 0)
      throw AbsContinuityError("q is not absolutely continuous w.r.t. mu");
  if (p.prob(u) == 0)
    throw ValidationError("conditioning atom lies outside support of p");
  double fu = p.prob(u) / mu.weight(u);
  if (q.prob(u) == 0) return {kInf, 0.0, true, u};
  double gu = q.prob(u) / mu.weight(u);
  stats::NeumaierSum alpha, beta;
  for (int v : mu.support()) {
    double fv = p.prob(v) / mu.weight(v);
    double gv = q.prob(v) / mu.weight(v);
    alpha.add(std::max(gv / gu - fv / fu, 0.0) * mu.weight(v));
    beta.add(std::min(gv / gu, fv / fu) * mu.weight(v));
  }
  double a = fu * alpha.value();
  double b = fu * beta.value();
  return {std::max(a, 0.0), std::clamp(b, 0.0, 1.0), false, u};
}

double RankLaw::mean() const {
  if (ab.alpha_infinite) return kInf;
  return j * ab.alpha + (j - 1) * ab.beta;
}

double RankLaw::prob_exceeds(long long k) const {
  if (ab.alpha_infinite) return 1.0;
  if (k < 0) return 1.0;
  if (j == 1) {
    // geometric tail (1 - 1/(1+alpha))^k, exact
    return std::pow(ab.alpha / (1 + ab.alpha), static_cast<double>(k));
  }
  // rank > k  <=>  rank-1 > k-1
  double acc = 0.0;
  for (long long m = 0; m < k && m < static_cast<long long>(pmf.size()); ++m)
    acc += pmf[m];
  return std::max(1.0 - acc, 0.0);
}

RankLaw rank_law(const FiniteMeasure& mu, const Pmf& p, const Pmf& q, int u,
                 int j, double tail_tol) {
  if (j < 1) throw ValidationError("rank law needs j >= 1");
  AlphaBeta ab = alpha_beta(mu, p, q, u);
  RankLaw law;
  law.j = j;
  law.ab = ab;
  if (ab.alpha_infinite) {
    law.tail = 1.0;
    return law;
  }
  // NegBin(j, succ = 1/(1+alpha)): failures before the j-th success
  double succ = 1.0 / (1.0 + ab.alpha);
  double fail = 1.0 - succ;
  std::vector<double> nb;
  nb.push_back(std::pow(succ, j));
  double cum = nb[0];
  while (cum < 1.0 - tail_tol * 0.5) {
    size_t m = nb.size() - 1;
    double next = nb[m] * fail * (static_cast<double>(m) + j) / (m + 1.0);
    if (next <= 0) break;
    nb.push_back(next);
    cum += next;
    if (nb.size() > 100000000) throw NotConvergedError("rank law tail too heavy");
  }
  // Bin(j-1, beta)
  std::vector<double> bin(j, 0.0);
  for (int m = 0; m < j; ++m) {
    double b = 1.0;
    for (int i = 0; i < m; ++i) b *= static_cast<double>(j - 1 - i) / (i + 1);
    bin[m] = b * std::pow(ab.beta, m) * std::pow(1 - ab.beta, j - 1 - m);
  }
  law.pmf.assign(nb.size() + j - 1, 0.0);
  for (size_t a = 0; a < nb.size(); ++a)
    for (int b = 0; b < j; ++b) law.pmf[a + b] += nb[a] * bin[b];
  // trim where cumulative mass reaches 1 - tail_tol
  double acc = 0.0;
  size_t keep = law.pmf.size();
  for (size_t m = 0; m < law.pmf.size(); ++m) {
    acc += law.pmf[m];
    if (1.0 - acc < tail_tol) {
      keep = m + 1;
      break;
    }
  }
  law.pmf.resize(keep);
  law.tail = std::max(0.0, 1.0 - stats::sum(law.pmf));
  return law;
}

double pml_bound(ExtRatio r, int j, long long k, PmlBoundForm form) {
  if (j < 1 || k < 1) throw ValidationError("pml_bound needs j, k >= 1");
  if (r.is_infinite) {
    switch (form) {
      case PmlBoundForm::Mean:
        return kInf;
      default:
        return 1.0;  // probability-valued forms cap at 1
    }
  }
  double v = r.value;
  switch (form) {
    case PmlBoundForm::Basic:
      return 1.0 - 1.0 / (1.0 + v);
    case PmlBoundForm::Mean:
      return j * v + 1.0;
    case PmlBoundForm::Tail:
      return std::min(static_cast<double>(j) / k * v, 1.0);
    case PmlBoundForm::K1:
      return 1.0 - std::pow(1.0 - std::min(v, 1.0), j);
    case PmlBoundForm::J1:
      return std::pow(1.0 - 1.0 / (1.0 + v), static_cast<double>(k));
    case PmlBoundForm::J1Weak:
      return 1.0 - 1.0 / (1.0 + v / k);
  }
  throw ValidationError("unknown bound form");
}

MomentBounds moment_bounds(const Pmf& p, const Pmf& q, int j, double gamma) {
  if (!(gamma > 0 && gamma < 1))
    throw ValidationError("gamma must lie in (0,1)");
  if (j < 1) throw ValidationError("moment bounds need j >= 1");
  Divergences d = divergences(p, q, gamma + 1);
  MomentBounds out;
  if (std::isinf(d.kl_bits)) {
    out.log_bound_bits = kInf;
    out.power_bound = kInf;
    return out;
  }
  const double log2e = 1.4426950408889634;
  out.log_bound_bits = d.kl_bits + std::log2(static_cast<double>(j)) + log2e / j;
  out.power_bound = std::pow(j, gamma) * std::exp2(gamma * d.renyi_bits) +
                    gamma * std::pow(j, gamma - 1.0);
  return out;
}

namespace {

double phi_unnorm(double t) {
  double l = std::log2(t + 2);
  return 1.0 / (t * l * l);
}

// Bracket of Psi(y) = int_y^inf e^-v v^-2 dv via the enveloping asymptotic
// series e^-y (y^-2 - 2 y^-3 + 6 y^-4 - ...): consecutive partial sums
// enclose the integral.
void psi_bracket(double y, double* lo, double* hi) {
  double term = std::exp(-y) / (y * y);
  double partial = 0.0;
  double prev_partial = 0.0;
  int sign = 1;
  for (int m = 0;; ++m) {
    prev_partial = partial;
    partial += sign * term;
    double next = term * (m + 2) / y;
    // the remainder is enveloped by the next term, so consecutive partial
    // sums bracket the integral; stop once the series turns or vanishes
    if (next >= term || next < 1e-300 || m > 40) {
      if (sign > 0) {
        *lo = prev_partial;
        *hi = partial;
      } else {
        *lo = partial;
        *hi = prev_partial;
      }
      return;
    }
    term = next;
    sign = -sign;
  }
}

// Bracket of F(a) = int_a^inf dt / (t ln^2(t+2)) using the expansion
// 1/t = sum_i 2^i/(t+2)^{i+1}, whose i-th term integrates to i Psi(i x)
// with x = ln(a+2) (and 1/x for i = 0).
void bigF_bracket(double a, double* lo, double* hi) {
  double x = std::log(a + 2);
  double flo = 1.0 / x, fhi = 1.0 / x;
  for (int i = 1; i <= 3; ++i) {
    double plo, phi_;
    psi_bracket(i * x, &plo, &phi_);
    double w = std::ldexp(static_cast<double>(i), i);  // 2^i * i
    flo += w * plo;
    fhi += w * phi_;
  }
  // remaining terms: sum_{i>=4} 2^i i Psi(ix) <= (1/x^2) sum (2e^-x)^i i
  double q = 2 * std::exp(-x);
  double rem = 0.0;
  if (q < 0.5) rem = std::pow(q, 4) * 8.0 / (x * x);
  *lo = flo;
  *hi = fhi + rem;
}

}  // namespace

PhiDist::PhiDist() {
  const long long K = 10'000'000;
  stats::NeumaierSum s;
  for (long long k = 1; k <= K; ++k) s.add(phi_unnorm(static_cast<double>(k)));
  double head = s.value();
  const double ln2sq = std::log(2.0) * std::log(2.0);
  // remainder R = sum_{k>K} phi_unnorm(k); phi_unnorm is convex decreasing,
  // so trapezoid / midpoint rules bracket it between integrals.
  double ilo, ihi, half_lo, half_hi;
  bigF_bracket(static_cast<double>(K) + 1.0, &ilo, &ihi);
  bigF_bracket(static_cast<double>(K) + 0.5, &half_lo, &half_hi);
  double r_lo = ln2sq * ilo + phi_unnorm(static_cast<double>(K) + 1.0) / 2;
  double r_hi = ln2sq * half_hi;
  const double fp_slop = 1e-13;  // compensated-summation slack
  unnorm_sum_lo_ = head + r_lo - fp_slop;
  unnorm_sum_hi_ = head + r_hi + fp_slop;
  c_lo_ = 1.0 / unnorm_sum_hi_;
  c_hi_ = 1.0 / unnorm_sum_lo_;
  c_ = (c_lo_ + c_hi_) / 2;
}

const PhiDist& PhiDist::instance() {
  static PhiDist d;
  return d;
}

double PhiDist::operator()(double t) const {
  if (!(t > 0)) throw ValidationError("phi is defined for t > 0");
  return c_ * phi_unnorm(t);
}

double PhiDist::tail_mass(long long k) const {
  stats::NeumaierSum s;
  for (long long i = 1; i <= k; ++i) s.add((*this)(static_cast<double>(i)));
  return std::max(0.0, 1.0 - s.value());
}

std::vector<double> PhiDist::truncated(long long k) const {
  std::vector<double> w(k);
  for (long long i = 0; i < k; ++i) w[i] = (*this)(static_cast<double>(i + 1));
  double total = stats::sum(w);
  for (double& x : w) x /= total;
  return w;
}

PhiIneqReport phi_inequality(double s, double t, double alpha, double beta,
                             double alpha_tilde) {
  if (!(s > 0) || !(t >= 1))
    throw ValidationError("phi inequality needs s > 0, t >= 1");
  const PhiDist& phi = PhiDist::instance();
  PhiIneqReport r;
  r.lhs = std::min(s / phi(t), 1.0);
  double l = std::log2(1.0 / s + 1.0) + 1.0;
  r.mid = std::min(s * t * l * l, 1.0);
  r.rhs = std::exp2(-alpha) * (2 * (alpha_tilde + beta) * (alpha_tilde + beta) +
                               2 * alpha_tilde * alpha_tilde + 14);
  const double rel = 1.0 + 1e-12;
  r.preconditions_ok = s * t <= std::exp2(-alpha) * rel &&
                       t - 1 <= std::exp2(beta) * rel + 1e-15 &&
                       alpha_tilde >= std::max(alpha, 0.0) - 1e-12;
  r.holds = r.lhs <= r.mid * rel + 1e-15 &&
            (!r.preconditions_ok || r.mid <= r.rhs * rel + 1e-15);
  return r;
}

}  // namespace pml
