#include "pml/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

#include "pml/config.hpp"
#include "pml/errors.hpp"
#include "pml/rng.hpp"
#include "pml/stats.hpp"

namespace pml {

namespace {

std::atomic<int64_t> g_exact_threshold{10'000'000};

// 1 - (1 + 2^e)^-1 evaluated stably from the exponent.
double one_minus_inv1p_exp2(double e) {
  if (e > 52) return 1.0;
  if (e < -52) return std::exp2(e);
  double t = std::exp2(e);
  return t / (1.0 + t);
}

double inv1p_exp2(double e) { return 1.0 - one_minus_inv1p_exp2(e); }

// Iterate (atom, weight) pairs of a joint: the full support in exact mode,
// Monte Carlo draws with weight 1/N otherwise.
template <class F>
void for_each_weighted(const JointPmf& j, uint64_t seed, BoundReport* rep,
                       F&& fn) {
  const auto& sup = j.pmf().support();
  if (static_cast<int64_t>(sup.size()) <= bounds_exact_threshold()) {
    rep->exact = true;
    stats::NeumaierSum w;
    for (int a : sup) {
      double p = j.pmf().prob(a);
      w.add(p);
      fn(a, p);
    }
    rep->weight_consumed = w.value();
    return;
  }
  rep->exact = false;
  long long n = 200'000;
  rep->mc_samples = n;
  rep->weight_consumed = 1.0;
  std::vector<double> cdf(sup.size());
  double acc = 0;
  for (size_t i = 0; i < sup.size(); ++i) {
    acc += j.pmf().prob(sup[i]);
    cdf[i] = acc;
  }
  rng::Stream st(rng::derive(seed, 0xB07ull));
  double w = 1.0 / static_cast<double>(n);
  for (long long i = 0; i < n; ++i) {
    double u = st.u01() * acc;
    size_t k = std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin();
    fn(sup[std::min(k, sup.size() - 1)], w);
  }
}

}  // namespace

int64_t bounds_exact_threshold() { return g_exact_threshold.load(); }
void set_bounds_exact_threshold(int64_t atoms) { g_exact_threshold.store(atoms); }

double BoundReport::value(const std::string& name) const {
  for (const auto& [k, v] : values)
    if (k == name) return v;
  throw ValidationError("bound report has no value named " + name);
}

bool BoundReport::has(const std::string& name) const {
  for (const auto& [k, v] : values)
    if (k == name) return true;
  return false;
}

void BoundReport::set(const std::string& name, double v) {
  for (auto& [k, old] : values)
    if (k == name) {
      old = v;
      return;
    }
  values.emplace_back(name, v);
}

JointPmf channel_joint(const ChannelInstance& inst) {
  // one flat factor per variable, regardless of inner product structure
  Alphabet a =
      Alphabet::product({inst.px.size(), inst.ch.output().size()});
  return JointPmf(
      Pmf::renormalized(std::move(a), joint_weights(inst.px, inst.ch)));
}

JointPmf gp_joint(const GpInstance& inst) {
  int ns = inst.ps.size(), nu = inst.pu_given_s.output().size();
  int ny = inst.ch.output().size();
  Alphabet a = Alphabet::product({ns, nu, ny});
  std::vector<double> w(a.size(), 0.0);
  for (int s = 0; s < ns; ++s)
    for (int u = 0; u < nu; ++u) {
      double pus = inst.ps.prob(s) * inst.pu_given_s.prob(s, u);
      if (pus == 0) continue;
      int x = inst.x_map[u * ns + s];
      for (int y = 0; y < ny; ++y)
        w[(static_cast<size_t>(s) * nu + u) * ny + y] =
            pus * inst.ch.prob(x * ns + s, y);
    }
  return JointPmf(Pmf::renormalized(std::move(a), std::move(w)));
}

JointPmf wz_joint(const WzInstance& inst) {
  int nx = inst.px.size(), ny = inst.side.output().size();
  int nu = inst.pu_given_x.output().size();
  Alphabet a = Alphabet::product({nx, ny, nu});
  std::vector<double> w(a.size(), 0.0);
  for (int x = 0; x < nx; ++x) {
    if (inst.px.prob(x) == 0) continue;
    for (int y = 0; y < ny; ++y) {
      double pxy = inst.px.prob(x) * inst.side.prob(x, y);
      if (pxy == 0) continue;
      for (int u = 0; u < nu; ++u)
        w[(static_cast<size_t>(x) * ny + y) * nu + u] =
            pxy * inst.pu_given_x.prob(x, u);
    }
  }
  return JointPmf(Pmf::renormalized(std::move(a), std::move(w)));
}

JointPmf bc_joint(const BcInstance& inst) {
  const Alphabet& ua = inst.aux.alphabet();
  int ny1 = inst.ch2.output().factor_size(0);
  int ny2 = inst.ch2.output().factor_size(1);
  std::vector<int> sizes = ua.factor_sizes();
  sizes.push_back(ny1);
  sizes.push_back(ny2);
  Alphabet a = Alphabet::product(std::move(sizes));
  std::vector<double> w(a.size(), 0.0);
  int nyy = ny1 * ny2;
  for (int u : inst.aux.pmf().support()) {
    int x = inst.x_map[u];
    double pu = inst.aux.pmf().prob(u);
    for (int yy = 0; yy < nyy; ++yy)
      w[static_cast<size_t>(u) * nyy + yy] = pu * inst.ch2.prob(x, yy);
  }
  return JointPmf(Pmf::renormalized(std::move(a), std::move(w)));
}

JointPmf dlsc_joint(const DlscInstance& inst) {
  int n1 = inst.px12.alphabet().factor_size(0);
  int n2 = inst.px12.alphabet().factor_size(1);
  int m1 = inst.k1.output().size(), m2 = inst.k2.output().size();
  Alphabet a = Alphabet::product({n1, n2, m1, m2});
  std::vector<double> w(a.size(), 0.0);
  for (int xx : inst.px12.pmf().support()) {
    int x1 = xx / n2, x2 = xx % n2;
    double p = inst.px12.pmf().prob(xx);
    for (int u1 = 0; u1 < m1; ++u1) {
      double p1 = p * inst.k1.prob(x1, u1);
      if (p1 == 0) continue;
      for (int u2 = 0; u2 < m2; ++u2)
        w[((static_cast<size_t>(x1) * n2 + x2) * m1 + u1) * m2 + u2] =
            p1 * inst.k2.prob(x2, u2);
    }
  }
  return JointPmf(Pmf::renormalized(std::move(a), std::move(w)));
}

JointPmf mac_joint(const MacInstance& inst) {
  int n1 = inst.px1.size(), n2 = inst.px2.size();
  int ny = inst.ch.output().size();
  Alphabet a = Alphabet::product({n1, n2, ny});
  std::vector<double> w(a.size(), 0.0);
  for (int x1 = 0; x1 < n1; ++x1)
    for (int x2 = 0; x2 < n2; ++x2) {
      double p = inst.px1.prob(x1) * inst.px2.prob(x2);
      if (p == 0) continue;
      for (int y = 0; y < ny; ++y)
        w[(static_cast<size_t>(x1) * n2 + x2) * ny + y] =
            p * inst.ch.prob(x1 * n2 + x2, y);
    }
  return JointPmf(Pmf::renormalized(std::move(a), std::move(w)));
}

JointPmf wiretap_joint(const WiretapInstance& inst) {
  int nu = inst.pux.alphabet().factor_size(0);
  int nx = inst.pux.alphabet().factor_size(1);
  int ny = inst.ch2.output().factor_size(0);
  int nz = inst.ch2.output().factor_size(1);
  Alphabet a = Alphabet::product({nu, nx, ny, nz});
  std::vector<double> w(a.size(), 0.0);
  int nyz = ny * nz;
  for (int ux : inst.pux.pmf().support()) {
    int x = ux % nx;
    double p = inst.pux.pmf().prob(ux);
    for (int yz = 0; yz < nyz; ++yz)
      w[static_cast<size_t>(ux) * nyz + yz] = p * inst.ch2.prob(x, yz);
  }
  return JointPmf(Pmf::renormalized(std::move(a), std::move(w)));
}

BoundReport channel_bounds(const ChannelInstance& inst) {
  JointPmf j = channel_joint(inst);
  double L = static_cast<double>(inst.L);
  BoundReport rep;
  rep.setting = "channel";
  rep.params = {{"L", L}};
  stats::NeumaierSum prop1, thm2, dt, chain;
  for_each_weighted(j, 0, &rep, [&](int atom, double w) {
    double iota = j.info_density(1, 2, 0, atom);
    prop1.add(w * one_minus_inv1p_exp2(std::log2(L) - iota));
    double m = std::min(std::exp2(-iota), 1.0);
    thm2.add(w * (1.0 - std::pow(1.0 - m, (L + 1) / 2)));
    dt.add(w * std::min((L - 1) / 2 * std::exp2(-iota), 1.0));
    chain.add(w * std::min((L + 1) / 2 * std::exp2(-iota), 1.0));
  });
  rep.values = {{"prop1", prop1.value()},
                {"thm2", thm2.value()},
                {"dt", dt.value()},
                {"dt_chain", chain.value()}};
  return rep;
}

double channel_list_bound(const ChannelInstance& inst, long long J) {
  JointPmf j = channel_joint(inst);
  double L = static_cast<double>(inst.L);
  BoundReport rep;
  stats::NeumaierSum acc;
  for_each_weighted(j, 0, &rep, [&](int atom, double w) {
    double iota = j.info_density(1, 2, 0, atom);
    double match = inv1p_exp2(std::log2(L) - iota);
    acc.add(w * std::pow(1.0 - match, static_cast<double>(J)));
  });
  return acc.value();
}

double channel_rank_message_bound(const ChannelInstance& inst, long long m) {
  JointPmf j = channel_joint(inst);
  BoundReport rep;
  stats::NeumaierSum acc;
  for_each_weighted(j, 0, &rep, [&](int atom, double w) {
    double iota = j.info_density(1, 2, 0, atom);
    double r = std::min(std::exp2(-iota), 1.0);
    acc.add(w * (1.0 - std::pow(1.0 - r, static_cast<double>(m))));
  });
  return acc.value();
}

BoundReport gp_bounds(const GpInstance& inst, double gamma, long long J) {
  JointPmf j = gp_joint(inst);  // (S, U, Y)
  double L = static_cast<double>(inst.L);
  BoundReport rep;
  rep.setting = "gp";
  rep.params = {{"L", L}, {"gamma", gamma}, {"J", static_cast<double>(J)}};
  stats::NeumaierSum thm3, p_cov, p_pack;
  for_each_weighted(j, 0, &rep, [&](int atom, double w) {
    double ius = j.info_density(2, 1, 0, atom);
    double iuy = j.info_density(2, 4, 0, atom);
    thm3.add(w * one_minus_inv1p_exp2(std::log2(L) + ius - iuy));
    if (ius > std::log2(static_cast<double>(J)) - gamma) p_cov.add(w);
    if (iuy <= std::log2(L * J) + gamma) p_pack.add(w);
  });
  double verdu = p_cov.value() + p_pack.value() + std::exp2(-gamma) +
                 std::exp(-std::exp2(gamma));
  rep.values = {{"thm3", thm3.value()}, {"verdu", verdu}};
  return rep;
}

BoundReport wz_bounds(const WzInstance& inst, double gamma_p, double gamma_c,
                      long long J) {
  JointPmf j = wz_joint(inst);  // (X, Y, U)
  int ny = inst.side.output().size();
  int nu = inst.pu_given_x.output().size();
  int nz = inst.z_size;
  double L = static_cast<double>(inst.L);
  BoundReport rep;
  rep.setting = "wz";
  rep.params = {{"L", L},
                {"D", inst.D},
                {"gamma_p", gamma_p},
                {"gamma_c", gamma_c},
                {"J", static_cast<double>(J)}};
  stats::NeumaierSum thm4, wat_p;
  for_each_weighted(j, 0, &rep, [&](int atom, double w) {
    int u = atom % nu, y = (atom / nu) % ny, x = atom / (nu * ny);
    double iux = j.info_density(4, 1, 0, atom);
    double iuy = j.info_density(4, 2, 0, atom);
    int z = inst.z_map[u * ny + y];
    bool ok = inst.d[x * nz + z] <= inst.D;
    double match = inv1p_exp2(-std::log2(L) + iux - iuy);
    thm4.add(w * (1.0 - (ok ? match : 0.0)));
    if (iux > gamma_c || iuy < gamma_p || !ok) wat_p.add(w);
  });
  double watanabe = wat_p.value() + static_cast<double>(J) / (std::exp2(gamma_p) * L) +
                    0.5 * std::sqrt(std::exp2(gamma_c) / static_cast<double>(J));
  rep.values = {{"thm4", thm4.value()}, {"watanabe", watanabe}};
  return rep;
}

BoundReport jscc_bounds(const JsccInstance& inst, long long J) {
  JointPmf j = channel_joint({inst.px, inst.ch, 1});
  int nz = inst.pz.size();
  BoundReport rep;
  rep.setting = "jscc";
  rep.params = {{"D", inst.D}, {"J", static_cast<double>(J)}};
  // rho(w) = P_Z(ball of radius D around w)
  std::vector<double> rho(inst.pw.size(), 0.0);
  for (int w = 0; w < inst.pw.size(); ++w) {
    stats::NeumaierSum s;
    for (int z = 0; z < nz; ++z)
      if (inst.d[w * nz + z] <= inst.D) s.add(inst.pz.prob(z));
    rho[w] = s.value();
  }
  stats::NeumaierSum thm5, kost_ch;
  for_each_weighted(j, 0, &rep, [&](int atom, double w) {
    double iota = j.info_density(1, 2, 0, atom);
    stats::NeumaierSum inner;
    for (int s = 0; s < inst.pw.size(); ++s) {
      double pw = inst.pw.prob(s);
      if (pw == 0) continue;
      if (rho[s] == 0)
        inner.add(pw);
      else
        inner.add(pw * inv1p_exp2(std::log2(rho[s]) + iota));
    }
    thm5.add(w * inner.value());
    kost_ch.add(w * std::min(static_cast<double>(J) * std::exp2(-iota), 1.0));
  });
  stats::NeumaierSum kost_cov;
  for (int s = 0; s < inst.pw.size(); ++s)
    kost_cov.add(inst.pw.prob(s) *
                 std::pow(1.0 - rho[s], static_cast<double>(J)));
  rep.values = {{"thm5", thm5.value()},
                {"kostina", kost_ch.value() + kost_cov.value()}};
  return rep;
}

BoundReport bc_bounds(const BcInstance& inst, double gamma) {
  JointPmf j = bc_joint(inst);
  BoundReport rep;
  rep.setting = inst.common ? "bc_common" : "bc_marton";
  double J = static_cast<double>(inst.J);
  if (!inst.common) {
    // factors U1=1, U2=2, Y1=4, Y2=8
    double L1 = static_cast<double>(inst.L1), L2 = static_cast<double>(inst.L2);
    rep.params = {{"L1", L1}, {"L2", L2}, {"J", J}};
    stats::NeumaierSum thm8;
    for_each_weighted(j, 0, &rep, [&](int atom, double w) {
      double i11 = j.info_density(1, 4, 0, atom);
      double i22 = j.info_density(2, 8, 0, atom);
      double i12 = j.info_density(1, 2, 0, atom);
      double t = L1 * J * std::exp2(-i11) +
                 L2 * (1.0 - 1.0 / J) * std::exp2(-i22) +
                 L2 / J * std::exp2(i12 - i22);
      thm8.add(w * std::min(t, 1.0));
    });
    rep.values = {{"thm8", thm8.value()}};
    return rep;
  }
  // factors U0=1, U1=2, U2=4, Y1=8, Y2=16
  double Lt0 = static_cast<double>(inst.L0 * inst.K1 * inst.K2);
  double Lt1 = std::ceil(static_cast<double>(inst.L1) / inst.K1);
  double Lt2 = std::ceil(static_cast<double>(inst.L2) / inst.K2);
  rep.params = {{"L0", static_cast<double>(inst.L0)},
                {"L1", static_cast<double>(inst.L1)},
                {"L2", static_cast<double>(inst.L2)},
                {"J", J},
                {"K1", static_cast<double>(inst.K1)},
                {"K2", static_cast<double>(inst.K2)},
                {"gamma", gamma}};
  stats::NeumaierSum thm7, p_union, sq;
  for_each_weighted(j, 0, &rep, [&](int atom, double w) {
    double i01_y1 = j.info_density(3, 8, 0, atom);    // (U0,U1); Y1
    double i1_y1 = j.info_density(2, 8, 1, atom);     // U1; Y1 | U0
    double i12 = j.info_density(2, 4, 1, atom);       // U1; U2 | U0
    double i02_y2 = j.info_density(5, 16, 0, atom);   // (U0,U2); Y2
    double i2_y2 = j.info_density(4, 16, 1, atom);    // U2; Y2 | U0
    double la = std::log2(1.0 / (Lt1 * J) * 1.0) + i1_y1;  // log2 of Lt1^-1 J^-1 2^i
    double A = std::log2(std::exp2(la) + 1.0) + 1.0;
    A *= A;
    double b_inner = Lt2 / J * std::exp2(i12 - i2_y2) +
                     Lt2 * (1.0 - 1.0 / J) * std::exp2(-i2_y2);
    double B = std::log2(1.0 / b_inner + 1.0) + 1.0;
    B *= B;
    double t = Lt0 * Lt1 * J * A * std::exp2(-i01_y1) +
               Lt1 * J * A * std::exp2(-i1_y1) +
               Lt0 * Lt2 / J * B * std::exp2(i12 - i02_y2) +
               Lt0 * Lt2 * (1.0 - 1.0 / J) * B * std::exp2(-i02_y2) +
               Lt2 / J * B * std::exp2(i12 - i2_y2) +
               Lt2 * (1.0 - 1.0 / J) * B * std::exp2(-i2_y2);
    thm7.add(w * std::min(t, 1.0));
    bool bad = std::log2(Lt1 * J) > i1_y1 - gamma ||
               std::log2(Lt2) > i2_y2 - gamma ||
               std::log2(Lt2 / J) > i2_y2 - i12 - gamma ||
               std::log2(Lt0 * Lt1 * J) > i01_y1 - gamma ||
               std::log2(Lt0 * Lt2) > i02_y2 - gamma ||
               std::log2(Lt0 * Lt2 / J) > i02_y2 - i12 - gamma;
    if (bad) p_union.add(w);
    sq.add(w * (i1_y1 * i1_y1 + i2_y2 * i2_y2));
  });
  double pe2 = p_union.value() +
               std::exp2(-gamma) * (8 * sq.value() + 12 * gamma * gamma + 84);
  rep.values = {{"thm7", thm7.value()}, {"thm7_pe2", pe2}};
  return rep;
}

BoundReport dlsc_bounds(const DlscInstance& inst, double gamma, long long J) {
  JointPmf j = dlsc_joint(inst);  // X1=1, X2=2, U1=4, U2=8
  int n2 = inst.px12.alphabet().factor_size(1);
  int m1 = inst.k1.output().size(), m2 = inst.k2.output().size();
  double L1 = static_cast<double>(inst.L1), L2 = static_cast<double>(inst.L2);
  double dJ = static_cast<double>(J);
  BoundReport rep;
  rep.setting = "dlsc";
  rep.params = {{"L1", L1},
                {"L2", L2},
                {"D1", inst.D1},
                {"D2", inst.D2},
                {"gamma", gamma},
                {"J", dJ}};
  stats::NeumaierSum phi_form, trunc, harmonic, p_union, sq;
  for_each_weighted(j, 0, &rep, [&](int atom, double w) {
    int u2 = atom % m2;
    int u1 = (atom / m2) % m1;
    int x2 = (atom / (m1 * m2)) % n2;
    int x1 = atom / (m1 * m2 * n2);
    int z1 = inst.z1_map[u1 * m2 + u2], z2 = inst.z2_map[u1 * m2 + u2];
    bool excess = inst.d1[x1 * inst.z1_size + z1] > inst.D1 ||
                  inst.d2[x2 * inst.z2_size + z2] > inst.D2;
    double i1c = j.info_density(4, 1, 8, atom);   // U1; X1 | U2
    double i2c = j.info_density(8, 2, 4, atom);   // U2; X2 | U1
    double i12x = j.info_density(12, 3, 0, atom); // U1,U2; X1,X2
    double iu12 = j.info_density(4, 8, 0, atom);  // U1; U2
    double i1 = j.info_density(4, 1, 0, atom);    // U1; X1
    double lg = std::log2(L2 * std::exp2(-i2c) + 1.0) + 1.0;
    double t = (excess ? 1.0 : 0.0) + std::exp2(i1c) / L1 +
               (std::exp2(i12x) / (L1 * L2) + std::exp2(i2c) / L2) * lg * lg;
    phi_form.add(w * std::min(t, 1.0));
    double tt = (excess ? 1.0 : 0.0) + std::exp2(i1) / (L1 * dJ) +
                dJ * std::exp2(i2c) / L2 + std::exp2(i1c) / L1;
    trunc.add(w * std::min(tt, 1.0));
    double lnJ1 = std::log(dJ) + 1.0;
    double th = (excess ? 1.0 : 0.0) + std::exp2(i1) / (L1 * dJ) +
                lnJ1 * std::exp2(i12x) / (L1 * L2) + lnJ1 * std::exp2(i2c) / L2 +
                std::exp2(i1c) / L1;
    harmonic.add(w * std::min(th, 1.0));
    if (excess || std::log2(L1) < i1c + gamma || std::log2(L2) < i2c + gamma ||
        std::log2(L1 * L2) < i12x + gamma)
      p_union.add(w);
    sq.add(w * iu12 * iu12);
  });
  double pe2 = p_union.value() +
               std::exp2(-gamma) * (4 * sq.value() + 4 * gamma * gamma + 29);
  rep.values = {{"phi", phi_form.value()},
                {"pe2", pe2},
                {"trunc", trunc.value()},
                {"harmonic", harmonic.value()}};
  return rep;
}

BoundReport mac_bounds(const MacInstance& inst, double gamma, long long J) {
  JointPmf j = mac_joint(inst);  // X1=1, X2=2, Y=4
  double L1 = static_cast<double>(inst.L1), L2 = static_cast<double>(inst.L2);
  double dJ = static_cast<double>(J);
  BoundReport rep;
  rep.setting = "mac";
  rep.params = {{"L1", L1}, {"L2", L2}, {"gamma", gamma}, {"J", dJ}};
  stats::NeumaierSum phi_form, trunc, harmonic, p_union, sq;
  for_each_weighted(j, 0, &rep, [&](int atom, double w) {
    double i12y = j.info_density(3, 4, 0, atom);  // X1,X2; Y
    double i2 = j.info_density(2, 5, 0, atom);    // X2; X1,Y
    double i1 = j.info_density(1, 6, 0, atom);    // X1; X2,Y
    double i1y = j.info_density(1, 4, 0, atom);   // X1; Y
    double icond = j.info_density(1, 2, 4, atom); // X1; X2 | Y
    double lg = std::log2(std::exp2(i2) / L2 + 1.0) + 1.0;
    double t = (L1 * L2 * std::exp2(-i12y) + L2 * std::exp2(-i2)) * lg * lg +
               L1 * std::exp2(-i1);
    phi_form.add(w * std::min(t, 1.0));
    double tt = L1 / dJ * std::exp2(-i1y) + L2 * dJ * std::exp2(-i2) +
                L1 * std::exp2(-i1);
    trunc.add(w * std::min(tt, 1.0));
    double lnJ1 = std::log(dJ) + 1.0;
    double th = L1 * L2 * lnJ1 * std::exp2(-i12y) + L2 * lnJ1 * std::exp2(-i2) +
                L1 * std::exp2(-i1) + L1 / dJ * std::exp2(-i1y);
    harmonic.add(w * std::min(th, 1.0));
    if (std::log2(L1) > i1 - gamma || std::log2(L2) > i2 - gamma ||
        std::log2(L1 * L2) > i12y - gamma)
      p_union.add(w);
    sq.add(w * icond * icond);
  });
  double pe2 = p_union.value() +
               std::exp2(-gamma) * (4 * sq.value() + 4 * gamma * gamma + 29);
  rep.values = {{"phi", phi_form.value()},
                {"pe2", pe2},
                {"trunc", trunc.value()},
                {"harmonic", harmonic.value()}};
  return rep;
}

BoundReport resolvability_bounds(const ResolvabilityInstance& inst,
                                 double gamma, double alpha) {
  JointPmf j = channel_joint({inst.px, inst.ch, 1});
  double L = static_cast<double>(inst.L), J = static_cast<double>(inst.J);
  BoundReport rep;
  rep.setting = "resolvability";
  rep.params = {{"L", L}, {"J", J}, {"gamma", gamma}, {"alpha", alpha}};
  if (!(gamma > 0) || gamma > std::log2(L) + 1e-12)
    throw ValidationError("resolvability pe2 needs 0 < gamma <= log2 L");
  stats::NeumaierSum e_pow, p_gamma, p_alpha;
  for_each_weighted(j, 0, &rep, [&](int atom, double w) {
    double iota = j.info_density(1, 2, 0, atom);
    e_pow.add(w * std::pow(inv1p_exp2(iota), J));
    if (iota > std::log2(L) - gamma) p_gamma.add(w);
    if (iota > std::log2(alpha)) p_alpha.add(w);
  });
  double pe1 = e_pow.value() + 0.5 * std::sqrt(J / L);
  double pe2 = p_gamma.value() +
               std::exp2(-gamma / 2) * (1.0 + 0.5 * std::sqrt(gamma)) +
               0.5 * std::sqrt(1.0 / L);
  double hayashi = p_alpha.value() + 0.5 * std::sqrt(alpha / L);
  rep.values = {{"pe1", pe1}, {"pe2", pe2}, {"hayashi", hayashi}};
  return rep;
}

BoundReport wiretap_bounds(const WiretapInstance& inst) {
  JointPmf j = wiretap_joint(inst);  // U=1, X=2, Y=4, Z=8
  double L = static_cast<double>(inst.L), K = static_cast<double>(inst.K);
  double J = static_cast<double>(inst.J);
  BoundReport rep;
  rep.setting = "wiretap";
  rep.params = {{"L", L}, {"K", K}, {"J", J}, {"nu", inst.nu}};
  stats::NeumaierSum pe_part, sec_pow;
  for_each_weighted(j, 0, &rep, [&](int atom, double w) {
    double iuy = j.info_density(1, 4, 0, atom);
    double iuz = j.info_density(1, 8, 0, atom);
    pe_part.add(w * std::min(L * K * std::exp2(-iuy), 1.0));
    sec_pow.add(w * std::pow(inv1p_exp2(iuz), J));
  });
  double secrecy = 2 * sec_pow.value() + std::sqrt(J / K);
  rep.values = {{"total", pe_part.value() + inst.nu * secrecy},
                {"pe_part", pe_part.value()},
                {"secrecy_part", secrecy}};
  return rep;
}

double channel_prop1_product_mc(const ChannelInstance& single, int n,
                                long long L, long long samples, uint64_t seed) {
  JointPmf j = channel_joint(single);
  const auto& sup = j.pmf().support();
  std::vector<double> cdf(sup.size()), iota(sup.size());
  double acc = 0;
  for (size_t i = 0; i < sup.size(); ++i) {
    acc += j.pmf().prob(sup[i]);
    cdf[i] = acc;
    iota[i] = j.info_density(1, 2, 0, sup[i]);
  }
  rng::Stream st(rng::derive(seed, 0x9D0Dull));
  stats::NeumaierSum mean;
  for (long long s = 0; s < samples; ++s) {
    double isum = 0;
    for (int u = 0; u < n; ++u) {
      double v = st.u01() * acc;
      size_t k = std::lower_bound(cdf.begin(), cdf.end(), v) - cdf.begin();
      isum += iota[std::min(k, sup.size() - 1)];
    }
    mean.add(one_minus_inv1p_exp2(std::log2(static_cast<double>(L)) - isum));
  }
  return mean.value() / static_cast<double>(samples);
}

double gp_thm3_product_mc(const GpInstance& single, int n, double log2_L,
                          long long samples, uint64_t seed) {
  JointPmf j = gp_joint(single);
  const auto& sup = j.pmf().support();
  std::vector<double> cdf(sup.size()), diff(sup.size());
  double acc = 0;
  for (size_t i = 0; i < sup.size(); ++i) {
    acc += j.pmf().prob(sup[i]);
    cdf[i] = acc;
    diff[i] = j.info_density(2, 1, 0, sup[i]) - j.info_density(2, 4, 0, sup[i]);
  }
  rng::Stream st(rng::derive(seed, 0x96D0ull));
  stats::NeumaierSum mean;
  for (long long s = 0; s < samples; ++s) {
    double dsum = 0;
    for (int u = 0; u < n; ++u) {
      double v = st.u01() * acc;
      size_t k = std::lower_bound(cdf.begin(), cdf.end(), v) - cdf.begin();
      dsum += diff[std::min(k, sup.size() - 1)];
    }
    mean.add(one_minus_inv1p_exp2(log2_L + dsum));
  }
  return mean.value() / static_cast<double>(samples);
}

}  // namespace pml
