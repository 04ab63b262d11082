#include "pml/second_order.hpp"

#include <algorithm>
#include <cmath>

#include "pml/errors.hpp"
#include "pml/stats.hpp"

namespace pml {

double qfunc(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

double qinv(double eps) {
  if (!(eps > 0 && eps < 1)) throw ValidationError("qinv needs eps in (0,1)");
  // reduce to the small-tail half; 1 - eps is exact for eps >= 0.5
  if (eps > 0.5) return -qinv(1.0 - eps);
  // bisection on the monotone tail, then two Newton polish steps
  double lo = 0, hi = 40;
  for (int i = 0; i < 200; ++i) {
    double mid = (lo + hi) / 2;
    if (qfunc(mid) > eps)
      lo = mid;
    else
      hi = mid;
  }
  double x = (lo + hi) / 2;
  for (int i = 0; i < 2; ++i) {
    double pdf = std::exp(-x * x / 2) / std::sqrt(2 * M_PI);
    if (pdf < 1e-300) break;
    x -= (eps - qfunc(x)) / pdf;
  }
  return x;
}

double gp_rate_log_l(const JointPmf& suy, double n, double eps, double alpha) {
  if (suy.factors() != 3)
    throw ValidationError("gp rate needs a (S, U, Y) joint");
  if (!(n > alpha * alpha / (eps * eps)))
    throw ValidationError("blocklength too small for the chosen constant");
  // factors S=1, U=2, Y=4
  stats::NeumaierSum mean, meansq;
  for (int atom : suy.pmf().support()) {
    double diff = suy.info_density(2, 1, 0, atom) - suy.info_density(2, 4, 0, atom);
    double w = suy.pmf().prob(atom);
    mean.add(w * diff);
    meansq.add(w * diff * diff);
  }
  double C = -mean.value();  // I(U;Y) - I(U;S)
  double V = std::max(meansq.value() - mean.value() * mean.value(), 0.0);
  double log_l = n * C - 0.5 * std::log2(n);
  if (V > 0) log_l -= std::sqrt(n * V) * qinv(eps - alpha / std::sqrt(n));
  return log_l;
}

namespace {

// One Blahut iteration pass for fixed slope nu (bits per distortion unit);
// returns the converged kernel/output pair and diagnostics.
struct BaPoint {
  std::vector<double> qz;
  std::vector<std::vector<double>> rows;
  double distortion;
  double rate_bits;
  double dual_gap;
};

BaPoint ba_fixed_slope(const Pmf& pw, const std::vector<double>& d, int nz,
                       double nu, double tol, int max_iter) {
  int nw = pw.size();
  BaPoint pt;
  pt.qz.assign(nz, 1.0 / nz);
  pt.rows.assign(nw, std::vector<double>(nz, 0.0));
  double prev_gap = std::numeric_limits<double>::infinity();
  for (int it = 0; it < max_iter; ++it) {
    // rows: q(z|w) ~ qz(z) 2^{-nu d(w,z)}
    for (int w = 0; w < nw; ++w) {
      double norm = 0;
      for (int z = 0; z < nz; ++z) {
        double v = pt.qz[z] * std::exp2(-nu * d[w * nz + z]);
        pt.rows[w][z] = v;
        norm += v;
      }
      for (int z = 0; z < nz; ++z) pt.rows[w][z] /= norm;
    }
    // output marginal
    std::vector<double> nq(nz, 0.0);
    for (int w = 0; w < nw; ++w)
      for (int z = 0; z < nz; ++z) nq[z] += pw.prob(w) * pt.rows[w][z];
    pt.qz.swap(nq);
    // diagnostics: primal I and the slope-nu dual with the current output
    stats::NeumaierSum rate, dist, dual;
    for (int w = 0; w < nw; ++w) {
      stats::NeumaierSum row_mass;
      for (int z = 0; z < nz; ++z)
        row_mass.add(pt.qz[z] * std::exp2(-nu * d[w * nz + z]));
      dual.add(-pw.prob(w) * std::log2(row_mass.value()));
      for (int z = 0; z < nz; ++z) {
        double pz = pt.rows[w][z];
        if (pz > 0 && pt.qz[z] > 0)
          rate.add(pw.prob(w) * pz * std::log2(pz / pt.qz[z]));
        dist.add(pw.prob(w) * pz * d[w * nz + z]);
      }
    }
    pt.distortion = dist.value();
    pt.rate_bits = rate.value();
    double dual_at_point = dual.value() - nu * pt.distortion;
    pt.dual_gap = pt.rate_bits - dual_at_point;
    if (std::abs(pt.dual_gap) < tol && std::abs(prev_gap - pt.dual_gap) < tol)
      break;
    prev_gap = pt.dual_gap;
  }
  return pt;
}

}  // namespace

RdSolution ba_rd(const Pmf& pw, const std::vector<double>& d, int nz,
                 double D) {
  int nw = pw.size();
  if (static_cast<int>(d.size()) != nw * nz)
    throw ValidationError("distortion matrix size mismatch");
  // feasibility endpoints
  stats::NeumaierSum dmin_acc;
  for (int w = 0; w < nw; ++w) {
    double m = d[w * nz];
    for (int z = 1; z < nz; ++z) m = std::min(m, d[w * nz + z]);
    dmin_acc.add(pw.prob(w) * m);
  }
  double d_min = dmin_acc.value();
  double d_max = std::numeric_limits<double>::infinity();
  int best_z = 0;
  for (int z = 0; z < nz; ++z) {
    stats::NeumaierSum e;
    for (int w = 0; w < nw; ++w) e.add(pw.prob(w) * d[w * nz + z]);
    if (e.value() < d_max) {
      d_max = e.value();
      best_z = z;
    }
  }
  if (D < d_min - 1e-12)
    throw ValidationError(
        "distortion target below the minimum achievable distortion");
  if (D >= d_max) {
    // R = 0: constant reproduction at the best single letter
    std::vector<std::vector<double>> rows(nw, std::vector<double>(nz, 0.0));
    for (int w = 0; w < nw; ++w) rows[w][best_z] = 1.0;
    std::vector<double> qz(nz, 0.0);
    qz[best_z] = 1.0;
    return {d_max, 0.0, 0.0, Kernel(pw.alphabet(), Alphabet(nz), rows),
            Pmf::renormalized(Alphabet(nz), qz), 0.0, 0};
  }
  if (D <= d_min + 1e-12) {
    // zero-slack corner: deterministic argmin reproduction
    std::vector<std::vector<double>> rows(nw, std::vector<double>(nz, 0.0));
    std::vector<double> qz(nz, 0.0);
    for (int w = 0; w < nw; ++w) {
      int zbest = 0;
      for (int z = 1; z < nz; ++z)
        if (d[w * nz + z] < d[w * nz + zbest]) zbest = z;
      rows[w][zbest] = 1.0;
      qz[zbest] += pw.prob(w);
    }
    Kernel k(pw.alphabet(), Alphabet(nz), rows);
    Pmf pz = Pmf::renormalized(Alphabet(nz), qz);
    JointPmf joint(pw, k);
    double rate = joint.mutual_information(1, 2);
    return {d_min, rate, std::numeric_limits<double>::infinity(), std::move(k),
            std::move(pz), 0.0, 0};
  }
  // bisection on the slope: distortion decreases as nu grows
  double lo = 0.0, hi = 1.0;
  const double tol = 1e-12;
  const int max_iter = 10000;
  while (ba_fixed_slope(pw, d, nz, hi, tol, max_iter).distortion > D) {
    hi *= 2;
    if (hi > 1e6) throw NotConvergedError("slope bisection diverged");
  }
  BaPoint pt;
  int outer = 0;
  double nu = hi;
  for (; outer < 200; ++outer) {
    nu = (lo + hi) / 2;
    pt = ba_fixed_slope(pw, d, nz, nu, tol, max_iter);
    if (pt.distortion > D)
      lo = nu;
    else
      hi = nu;
    if (std::abs(pt.distortion - D) < 1e-11 && std::abs(pt.dual_gap) < 1e-9)
      break;
  }
  std::vector<std::vector<double>> rows = pt.rows;
  Kernel k(pw.alphabet(), Alphabet(nz), std::move(rows));
  Pmf pz = Pmf::renormalized(Alphabet(nz), pt.qz);
  return {pt.distortion, pt.rate_bits, nu,     std::move(k),
          std::move(pz), pt.dual_gap,  outer + 1};
}

double d_tilted(const RdSolution& rd, const std::vector<double>& d, int nz,
                int w, double D) {
  if (std::isinf(rd.nu_star)) {
    // zero-slack corner: 2^{nu (D - d)} -> 1{d <= D}
    stats::NeumaierSum s;
    for (int z = 0; z < nz; ++z)
      if (d[w * nz + z] <= D) s.add(rd.pz.prob(z));
    return -std::log2(s.value());
  }
  stats::NeumaierSum s;
  for (int z = 0; z < nz; ++z)
    s.add(rd.pz.prob(z) * std::exp2(rd.nu_star * (D - d[w * nz + z])));
  return -std::log2(s.value());
}

BlocklengthCheck jscc_blocklength_check(const DispersionInputs& in) {
  if (!(in.eps > 0 && in.eps < 1))
    throw ValidationError("eps must lie in (0,1)");
  double lhs = in.n * in.C - in.k * in.RD;
  double effective = in.k > 0 ? std::min(in.n, in.k) : in.n;
  double arg = in.eps - in.eta / std::sqrt(effective);
  if (!(arg > 0))
    throw ValidationError("eps - eta/sqrt(min{n,k}) must be positive");
  double rhs = std::sqrt(in.n * in.V + in.k * in.VD) * qinv(arg) +
               0.5 * std::log2(in.n);
  if (in.k > 0) rhs += in.alpha * std::log2(in.k);
  rhs += in.beta;
  return {lhs, rhs, lhs >= rhs};
}

}  // namespace pml
