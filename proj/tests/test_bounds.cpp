#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "common/desk_instances.hpp"
#include "common/test_util.hpp"
#include "pml/bounds.hpp"
#include "pml/errors.hpp"
#include "pml/json_io.hpp"
#include "pml/stats.hpp"

using namespace pml;

namespace {

Kernel bsc(double p) {
  return Kernel(Alphabet(2), Alphabet(2), {{1 - p, p}, {p, 1 - p}});
}

Pmf fair2() { return Pmf(Alphabet(2), {0.5, 0.5}); }

ChannelInstance noiseless(long long L) { return {fair2(), bsc(0.0), L}; }

// random channel instance over small alphabets
ChannelInstance random_channel(rng::Stream* st, long long L) {
  int nx = 2 + st->uniform_int(2), ny = 2 + st->uniform_int(2);
  Pmf px = testutil::random_pmf(st, nx, 0.05);
  std::vector<Pmf> rows;
  for (int x = 0; x < nx; ++x) rows.push_back(testutil::random_pmf(st, ny, 0.02));
  return {std::move(px), Kernel(Alphabet(nx), std::move(rows)), L};
}

GpInstance random_gp(rng::Stream* st, long long L) {
  int ns = 2, nu = 2 + st->uniform_int(2), nx = 2, ny = 2 + st->uniform_int(2);
  Pmf ps = testutil::random_pmf(st, ns, 0.1);
  std::vector<Pmf> urows;
  for (int s = 0; s < ns; ++s) urows.push_back(testutil::random_pmf(st, nu, 0.05));
  std::vector<int> x_map(nu * ns);
  for (auto& v : x_map) v = st->uniform_int(nx);
  std::vector<Pmf> chrows;
  for (int i = 0; i < nx * ns; ++i)
    chrows.push_back(testutil::random_pmf(st, ny, 0.02));
  return {std::move(ps), Kernel(Alphabet(ns), std::move(urows)),
          std::move(x_map), nx,
          Kernel(Alphabet::product({nx, ns}), std::move(chrows)), L};
}

}  // namespace

TEST_CASE("channel bounds on the noiseless binary channel") {
  BoundReport rep = channel_bounds(noiseless(2));
  CHECK(rep.value("prop1") == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rep.value("dt") == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(rep.value("thm2") ==
        doctest::Approx(0.6464466094067263).epsilon(1e-12));
  CHECK(rep.exact);
  CHECK(rep.weight_consumed == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("thm2 is at most the (L+1)/2 dependence-testing form") {
  rng::Stream st(101);
  for (int rep = 0; rep < 25; ++rep) {
    ChannelInstance inst = random_channel(&st, 1 + st.uniform_int(16));
    BoundReport r = channel_bounds(inst);
    CHECK(r.value("thm2") <= r.value("dt_chain") + 1e-12);
  }
}

TEST_CASE("channel bounds grow with the message count") {
  ChannelInstance base{fair2(), bsc(0.11), 2};
  double last_p = 0, last_t = 0, last_d = 0;
  for (long long L : {2, 4, 8, 16}) {
    ChannelInstance inst{base.px, base.ch, L};
    BoundReport r = channel_bounds(inst);
    CHECK(r.value("prop1") >= last_p - 1e-12);
    CHECK(r.value("thm2") >= last_t - 1e-12);
    CHECK(r.value("dt") >= last_d - 1e-12);
    last_p = r.value("prop1");
    last_t = r.value("thm2");
    last_d = r.value("dt");
  }
}

TEST_CASE("error bounds rise with L, resolvability falls") {
  double last_gp = 0, last_wz = 0, last_res = 2;
  for (long long L : {2, 8, 32}) {
    GpInstance gp = desk::gp_toy(2, L);
    double g = gp_bounds(gp, 1.0, 1).value("thm3");
    CHECK(g >= last_gp - 1e-12);
    last_gp = g;
    WzInstance wz = desk::wz_dsbs(2, L, 0.25);
    // lossy source coding error FALLS with more messages
    double wv = wz_bounds(wz, 1, 1, 1).value("thm4");
    CHECK((L == 2 || wv <= last_wz + 1e-12));
    last_wz = wv;
    ResolvabilityInstance res{fair2(), bsc(0.11), L, 2};
    double rv = resolvability_bounds(res, 0.5, 2.0).value("pe1");
    CHECK(rv <= last_res + 1e-12);
    last_res = rv;
  }
}

TEST_CASE("list bound: J = 1 reduces to prop1") {
  ChannelInstance inst{fair2(), bsc(0.11), 4};
  CHECK(channel_list_bound(inst, 1) ==
        doctest::Approx(channel_bounds(inst).value("prop1")).epsilon(1e-12));
  CHECK(channel_list_bound(inst, 2) <= channel_list_bound(inst, 1));
}

TEST_CASE("product consistency: exact product bound matches iota-sum MC") {
  ChannelInstance single{fair2(), bsc(0.11), 4};
  ChannelInstance prod{power(single.px, 4), power(single.ch, 4), 4};
  double exact = channel_bounds(prod).value("prop1");
  double mc = channel_prop1_product_mc(single, 4, 4, 200000, 99);
  CHECK(std::abs(exact - mc) < 0.01);
}

TEST_CASE("gp: degenerate state reduces to the channel bound") {
  // single state, U = X, channel rows depend on x only
  Pmf ps(Alphabet(1), {1.0});
  Kernel pus(Alphabet(1), Alphabet(2), {{0.5, 0.5}});
  std::vector<int> x_map = {0, 1};  // x(u, s) = u
  Kernel ch(Alphabet::product({2, 1}), Alphabet(2), {{0.89, 0.11}, {0.11, 0.89}});
  GpInstance gp{ps, pus, x_map, 2, ch, 4};
  double thm3 = gp_bounds(gp, 1.0, 1).value("thm3");
  double prop1 = channel_bounds({fair2(), bsc(0.11), 4}).value("prop1");
  CHECK(thm3 == doctest::Approx(prop1).epsilon(1e-12));
}

TEST_CASE("gp: thm3 never exceeds the four-term comparison") {
  rng::Stream st(211);
  for (int rep = 0; rep < 20; ++rep) {
    GpInstance gp = random_gp(&st, 1 + st.uniform_int(8));
    double gamma = 0.1 + 7.9 * st.u01();
    long long J = 1 + st.uniform_int(64);
    BoundReport r = gp_bounds(gp, gamma, J);
    CHECK(r.value("thm3") <= r.value("verdu") + 1e-12);
  }
}

TEST_CASE("gp: exact summation agrees with independent joint sampling") {
  rng::Stream gen(6021);
  GpInstance gp = random_gp(&gen, 6);
  double exact = gp_bounds(gp, 1.0, 1).value("thm3");
  // sample the (S, U, Y) joint directly and average the integrand
  JointPmf j = gp_joint(gp);
  const auto& sup = j.pmf().support();
  std::vector<double> cdf(sup.size());
  double acc = 0;
  for (size_t i = 0; i < sup.size(); ++i) {
    acc += j.pmf().prob(sup[i]);
    cdf[i] = acc;
  }
  rng::Stream st(7777);
  const long long n = 200000;
  stats::NeumaierSum mean;
  for (long long s = 0; s < n; ++s) {
    double u = st.u01() * acc;
    size_t k = std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin();
    int atom = sup[std::min(k, sup.size() - 1)];
    double e = std::log2(static_cast<double>(gp.L)) +
               j.info_density(2, 1, 0, atom) - j.info_density(2, 4, 0, atom);
    double t = std::exp2(e);
    mean.add(t / (1.0 + t));
  }
  CHECK(std::abs(mean.value() / n - exact) < 0.01);
}

TEST_CASE("wz: exact summation agrees with independent joint sampling") {
  WzInstance wz = desk::wz_dsbs(3, 8, 0.25);
  double exact = wz_bounds(wz, 1, 1, 1).value("thm4");
  JointPmf j = wz_joint(wz);
  const auto& sup = j.pmf().support();
  std::vector<double> cdf(sup.size());
  double acc = 0;
  for (size_t i = 0; i < sup.size(); ++i) {
    acc += j.pmf().prob(sup[i]);
    cdf[i] = acc;
  }
  int ny = wz.side.output().size(), nu = wz.pu_given_x.output().size();
  rng::Stream st(80486);
  const long long n = 200000;
  stats::NeumaierSum mean;
  for (long long s = 0; s < n; ++s) {
    double u = st.u01() * acc;
    size_t k = std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin();
    int atom = sup[std::min(k, sup.size() - 1)];
    int uu = atom % nu, yy = (atom / nu) % ny, xx = atom / (nu * ny);
    int z = wz.z_map[uu * ny + yy];
    bool ok = wz.d[xx * wz.z_size + z] <= wz.D;
    double e = -std::log2(8.0) + j.info_density(4, 1, 0, atom) -
               j.info_density(4, 2, 0, atom);
    mean.add(1.0 - (ok ? 1.0 / (1.0 + std::exp2(e)) : 0.0));
  }
  CHECK(std::abs(mean.value() / n - exact) < 0.01);
}

TEST_CASE("dlsc: vanishing distortion indicator leaves the density terms") {
  JointPmf px12(Pmf(Alphabet::product({2, 2}), {0.25, 0.25, 0.25, 0.25}));
  Kernel ident(Alphabet(2), Alphabet(2), {{1.0, 0.0}, {0.0, 1.0}});
  std::vector<int> z1 = {0, 0, 1, 1}, z2 = {0, 1, 0, 1};
  std::vector<double> d = {0, 1, 1, 0};
  // D above the worst distortion: the indicator never fires
  DlscInstance inst{px12, ident, ident, z1, z2, 2, 2, d, d, 2.0, 2.0, 4, 4};
  BoundReport r = dlsc_bounds(inst, 1.0, 4);
  JointPmf j = dlsc_joint(inst);
  stats::NeumaierSum expect, p_union;
  for (int atom : j.pmf().support()) {
    double i1c = j.info_density(4, 1, 8, atom);
    double i2c = j.info_density(8, 2, 4, atom);
    double i12x = j.info_density(12, 3, 0, atom);
    double lg = std::log2(4 * std::exp2(-i2c) + 1.0) + 1.0;
    double t = std::exp2(i1c) / 4 +
               (std::exp2(i12x) / 16 + std::exp2(i2c) / 4) * lg * lg;
    expect.add(j.pmf().prob(atom) * std::min(t, 1.0));
    if (std::log2(4.0) < i1c + 1.0 || std::log2(4.0) < i2c + 1.0 ||
        std::log2(16.0) < i12x + 1.0)
      p_union.add(j.pmf().prob(atom));
  }
  CHECK(r.value("phi") == doctest::Approx(expect.value()).epsilon(1e-12));
  CHECK(r.value("pe2") >= p_union.value());
}

TEST_CASE("wz: perfect side information cancels the densities") {
  // Y = X, U = X, z(u, y) = u, D = 0, Hamming
  Pmf px = fair2();
  Kernel ident(Alphabet(2), Alphabet(2), {{1.0, 0.0}, {0.0, 1.0}});
  std::vector<int> z_map = {0, 0, 1, 1};  // z(u, y) = u
  std::vector<double> d = {0, 1, 1, 0};
  for (long long L : {2, 8}) {
    WzInstance wz{px, ident, ident, z_map, 2, d, 0.0, L};
    double thm4 = wz_bounds(wz, 1, 1, 1).value("thm4");
    CHECK(thm4 ==
          doctest::Approx(1.0 / (static_cast<double>(L) + 1)).epsilon(1e-12));
  }
}

TEST_CASE("wz: thm4 never exceeds the watanabe comparison when meaningful") {
  // an instance with real rate slack so the comparison bound dips below 1:
  // a nearly-clean description of X with strong side information
  const int n = 2;
  Pmf px = power(fair2(), n);
  Kernel side = power(bsc(0.05), n);
  Kernel pux = power(bsc(0.02), n);
  std::vector<int> z_single = {0, 0, 1, 1};  // z(u, y) = u
  std::vector<double> d_single = {0, 1, 1, 0};
  WzInstance wz{px,
                side,
                pux,
                power_map(z_single, {2, 2}, 2, n),
                1 << n,
                power_distortion(d_single, 2, 2, n),
                0.5,
                64};
  rng::Stream st(311);
  int checked = 0;
  for (int rep = 0; rep < 20; ++rep) {
    double gc = n + 0.5 + 2 * st.u01();
    double gp_ = 0.5 + 1.5 * st.u01();
    long long J = 4 << st.uniform_int(4);
    BoundReport r = wz_bounds(wz, gp_, gc, J);
    if (r.value("watanabe") <= 1.0) {
      CHECK(r.value("thm4") <= r.value("watanabe") + 1e-12);
      ++checked;
    }
  }
  CHECK(checked >= 5);
}

TEST_CASE("jscc corner cases and the factor-2 chain") {
  Pmf pw = fair2();
  Pmf pz = fair2();
  std::vector<double> d = {0, 1, 1, 0};
  JsccInstance big_ball{pw, fair2(), bsc(0.11), pz, d, 1.0};
  JointPmf j = channel_joint({big_ball.px, big_ball.ch, 1});
  stats::NeumaierSum expect;
  for (int atom : j.pmf().support())
    expect.add(j.pmf().prob(atom) /
               (1.0 + std::exp2(j.info_density(1, 2, 0, atom))));
  CHECK(jscc_bounds(big_ball, 2).value("thm5") ==
        doctest::Approx(expect.value()).epsilon(1e-12));

  JsccInstance empty_ball{pw, fair2(), bsc(0.11), pz, d, -0.5};
  CHECK(jscc_bounds(empty_ball, 2).value("thm5") == doctest::Approx(1.0));

  rng::Stream st(401);
  for (int rep = 0; rep < 10; ++rep) {
    JsccInstance inst{testutil::random_pmf(&st, 3, 0.05),
                      testutil::random_pmf(&st, 2, 0.1),
                      bsc(0.05 + 0.2 * st.u01()),
                      testutil::random_pmf(&st, 3, 0.05),
                      {},
                      0.45};
    inst.d.resize(9);
    for (auto& v : inst.d) v = st.u01();
    for (long long J : {1, 2, 4, 8}) {
      BoundReport r = jscc_bounds(inst, J);
      CHECK(r.value("thm5") <= 2 * r.value("kostina") + 1e-12);
    }
  }
}

TEST_CASE("bc marton: independent auxiliaries at J = 1 merge the terms") {
  // (U1, U2) independent fair bits, X = (U1, U2), clean product channel
  std::vector<double> w = {0.25, 0.25, 0.25, 0.25};
  JointPmf aux(Pmf(Alphabet::product({2, 2}), w));
  std::vector<int> x_map = {0, 1, 2, 3};
  std::vector<std::vector<double>> rows;
  for (int x = 0; x < 4; ++x) {
    std::vector<double> r(4, 0.0);
    // Y1 = first bit with flips 0.05, Y2 = second bit with flips 0.1
    int b1 = x / 2, b2 = x % 2;
    for (int y1 = 0; y1 < 2; ++y1)
      for (int y2 = 0; y2 < 2; ++y2)
        r[y1 * 2 + y2] = (y1 == b1 ? 0.95 : 0.05) * (y2 == b2 ? 0.9 : 0.1);
    rows.push_back(std::move(r));
  }
  Kernel ch2(Alphabet(4), Alphabet::product({2, 2}), rows);
  BcInstance inst{aux, false, x_map, 4, ch2, 1, 2, 2, 1, 1, 1};
  double thm8 = bc_bounds(inst, 1.0).value("thm8");
  // with independent (U1, U2) and J = 1 the cross term has iota == 0
  JointPmf j = bc_joint(inst);
  stats::NeumaierSum expect;
  for (int atom : j.pmf().support()) {
    double i1 = j.info_density(1, 4, 0, atom);
    double i2 = j.info_density(2, 8, 0, atom);
    expect.add(j.pmf().prob(atom) *
               std::min(2 * std::exp2(-i1) + 2 * std::exp2(-i2), 1.0));
  }
  CHECK(thm8 == doctest::Approx(expect.value()).epsilon(1e-12));
}

TEST_CASE("bc common: degenerate common layer reduces to a thm8 shape") {
  // U0 constant; (U1, U2) correlated pair
  std::vector<double> w = {0.4, 0.1, 0.1, 0.4};
  JointPmf aux12(Pmf(Alphabet::product({2, 2}), w));
  std::vector<double> w3(1 * 4);
  for (int i = 0; i < 4; ++i) w3[i] = w[i];
  JointPmf aux012(Pmf(Alphabet::product({1, 2, 2}), w3));
  std::vector<int> x_map = {0, 1, 2, 3};
  std::vector<std::vector<double>> rows;
  for (int x = 0; x < 4; ++x) {
    std::vector<double> r(4, 0.0);
    int b1 = x / 2, b2 = x % 2;
    for (int y1 = 0; y1 < 2; ++y1)
      for (int y2 = 0; y2 < 2; ++y2)
        r[y1 * 2 + y2] = (y1 == b1 ? 0.92 : 0.08) * (y2 == b2 ? 0.93 : 0.07);
    rows.push_back(std::move(r));
  }
  Kernel ch2(Alphabet(4), Alphabet::product({2, 2}), rows);
  long long J = 2;
  BcInstance common{aux012, true, x_map, 4, ch2, 1, 2, 2, J, 1, 1};
  double thm7 = bc_bounds(common, 1.0).value("thm7");
  // hand-assembled thm8-with-log-factors expression over the 2-factor joint
  BcInstance priv{aux12, false, x_map, 4, ch2, 1, 2, 2, J, 1, 1};
  JointPmf j = bc_joint(priv);
  stats::NeumaierSum expect;
  double dJ = static_cast<double>(J);
  for (int atom : j.pmf().support()) {
    double i11 = j.info_density(1, 4, 0, atom);
    double i22 = j.info_density(2, 8, 0, atom);
    double i12 = j.info_density(1, 2, 0, atom);
    double A = std::log2(std::exp2(i11) / (2 * dJ) + 1.0) + 1.0;
    A *= A;
    double binner =
        2 / dJ * std::exp2(i12 - i22) + 2 * (1 - 1 / dJ) * std::exp2(-i22);
    double B = std::log2(1.0 / binner + 1.0) + 1.0;
    B *= B;
    double t = 2 * (2 * dJ * A * std::exp2(-i11)) +
               2 * (binner * B);
    expect.add(j.pmf().prob(atom) * std::min(t, 1.0));
  }
  CHECK(thm7 == doctest::Approx(expect.value()).epsilon(1e-12));
}

TEST_CASE("mac: deterministic adder evaluates in closed form") {
  Pmf p1 = fair2(), p2 = fair2();
  std::vector<std::vector<double>> rows = {
      {1, 0, 0}, {0, 1, 0}, {0, 1, 0}, {0, 0, 1}};
  Kernel add(Alphabet::product({2, 2}), Alphabet(3), rows);
  MacInstance inst{p1, p2, add, 4, 4};
  BoundReport r = mac_bounds(inst, 1.0, 2);
  // iota terms: X1 determined by (X2, Y): iota_{X1;X2,Y} = 1 bit;
  // iota_{X1,X2;Y} = log2(1/p(y))
  JointPmf j = mac_joint(inst);
  stats::NeumaierSum expect;
  for (int atom : j.pmf().support()) {
    double i12y = j.info_density(3, 4, 0, atom);
    double i2 = j.info_density(2, 5, 0, atom);
    double i1 = j.info_density(1, 6, 0, atom);
    double lg = std::log2(std::exp2(i2) / 4 + 1.0) + 1.0;
    double t = (16 * std::exp2(-i12y) + 4 * std::exp2(-i2)) * lg * lg +
               4 * std::exp2(-i1);
    expect.add(j.pmf().prob(atom) * std::min(t, 1.0));
  }
  CHECK(r.value("phi") == doctest::Approx(expect.value()).epsilon(1e-12));
  // additive union form dominates the union probability alone
  JointPmf jm = mac_joint(inst);
  stats::NeumaierSum pu;
  for (int atom : jm.pmf().support()) {
    double i12y = jm.info_density(3, 4, 0, atom);
    double i2 = jm.info_density(2, 5, 0, atom);
    double i1 = jm.info_density(1, 6, 0, atom);
    if (std::log2(4.0) > i1 - 1.0 || std::log2(4.0) > i2 - 1.0 ||
        std::log2(16.0) > i12y - 1.0)
      pu.add(jm.pmf().prob(atom));
  }
  CHECK(r.value("pe2") >= pu.value());
}

TEST_CASE("resolvability closed forms and the substitution chain") {
  // X independent of Y
  Kernel constant(Alphabet(2), Alphabet(2), {{0.3, 0.7}, {0.3, 0.7}});
  ResolvabilityInstance indep{fair2(), constant, 64, 4};
  BoundReport r = resolvability_bounds(indep, 3.0, 8.0);
  double expect = std::exp2(-4.0) + 0.5 * std::sqrt(4.0 / 64.0);
  CHECK(r.value("pe1") == doctest::Approx(expect).epsilon(1e-12));

  ResolvabilityInstance noisy{fair2(), bsc(0.11), 256, 16};
  double gamma = std::log2(256.0);
  long long jstar = static_cast<long long>(
      std::ceil(gamma * std::exp2(-gamma) * 256.0));
  ResolvabilityInstance at_jstar{fair2(), bsc(0.11), 256, jstar};
  double pe1_jstar = resolvability_bounds(at_jstar, gamma, 8).value("pe1");
  double pe2 = resolvability_bounds(noisy, gamma, 8).value("pe2");
  CHECK(pe1_jstar <= pe2 + 1e-12);
  CHECK_THROWS_AS(resolvability_bounds(noisy, 9.5, 8), ValidationError);
}

TEST_CASE("wiretap: independent eavesdropper secrecy in closed form") {
  // Z carries nothing about U: the secrecy part is nu(2 * 2^-J + sqrt(J/K))
  std::vector<double> w = {0.5, 0, 0, 0.5};
  JointPmf pux(Pmf(Alphabet::product({2, 2}), w));
  std::vector<std::vector<double>> rows;
  for (int x = 0; x < 2; ++x) {
    std::vector<double> r(4, 0.0);
    r[x * 2 + 0] = 0.5;
    r[x * 2 + 1] = 0.5;
    rows.push_back(std::move(r));
  }
  Kernel ch2(Alphabet(2), Alphabet::product({2, 2}), rows);
  WiretapInstance inst{std::move(pux), std::move(ch2), 2, 8, 3, 2.0};
  BoundReport r = wiretap_bounds(inst);
  double expect = 2 * std::exp2(-3.0) + std::sqrt(3.0 / 8.0);
  CHECK(r.value("secrecy_part") == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("wiretap bound terms and monotonicity in K") {
  // U = X fair bit, Y = X, Z = X through a very noisy channel
  std::vector<double> w = {0.5, 0, 0, 0.5};
  JointPmf pux(Pmf(Alphabet::product({2, 2}), w));
  std::vector<std::vector<double>> rows;
  for (int x = 0; x < 2; ++x) {
    std::vector<double> r(4, 0.0);
    for (int z = 0; z < 2; ++z)
      r[x * 2 + z] = (z == x ? 0.65 : 0.35);
    rows.push_back(std::move(r));
  }
  Kernel ch2(Alphabet(2), Alphabet::product({2, 2}), rows);
  double last_first = 0, last_third = 1e9;
  for (long long K : {4, 16, 64}) {
    WiretapInstance inst{pux, ch2, 2, K, 4, 1.0};
    BoundReport r = wiretap_bounds(inst);
    double first = r.value("pe_part");
    double third = std::sqrt(4.0 / static_cast<double>(K));
    CHECK(first >= last_first - 1e-12);
    CHECK(third <= last_third + 1e-12);
    CHECK(r.value("total") ==
          doctest::Approx(r.value("pe_part") + r.value("secrecy_part"))
              .epsilon(1e-12));
    last_first = first;
    last_third = third;
  }
}

TEST_CASE("monte carlo fallback engages beyond the exact threshold") {
  int64_t saved = bounds_exact_threshold();
  set_bounds_exact_threshold(2);
  ChannelInstance inst{fair2(), bsc(0.11), 4};
  BoundReport mc = channel_bounds(inst);
  CHECK_FALSE(mc.exact);
  CHECK(mc.mc_samples > 0);
  set_bounds_exact_threshold(saved);
  BoundReport exact = channel_bounds(inst);
  CHECK(exact.exact);
  CHECK(std::abs(mc.value("prop1") - exact.value("prop1")) < 0.02);
}
