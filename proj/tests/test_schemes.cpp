#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "common/desk_instances.hpp"
#include "common/test_util.hpp"
#include "pml/analytics.hpp"
#include "pml/bounds.hpp"
#include "pml/race.hpp"
#include "pml/rng.hpp"
#include "pml/schemes.hpp"
#include "pml/stats.hpp"

using namespace pml;

namespace {
RunOptions quick(long long trials, uint64_t seed = 11) {
  RunOptions o;
  o.trials = trials;
  o.seed = seed;
  return o;
}
}  // namespace

TEST_CASE("channel: a single message never errs") {
  ChannelInstance inst{desk::fair2(), desk::bsc(0.3), 1};
  EmpiricalResult r = simulate_channel(inst, quick(2000));
  CHECK(r.failures == 0);
}

TEST_CASE("channel: noiseless binary error is one third") {
  EmpiricalResult r = simulate_channel(desk::channel_noiseless2(), quick(60000));
  CHECK(r.bound == doctest::Approx(0.5).epsilon(1e-12));
  // exact scheme error = 1/3 (geometric mismatch at matched density ratio)
  CHECK(r.ci_lo <= 1.0 / 3);
  CHECK(r.ci_hi >= 1.0 / 3);
  CHECK(r.dominated);
}

TEST_CASE("channel: BSC(0.11)^4 stays under prop1") {
  ChannelInstance inst{power(desk::fair2(), 4), power(desk::bsc(0.11), 4), 4};
  EmpiricalResult r = simulate_channel(inst, quick(20000));
  CHECK(r.dominated);
  CHECK(r.estimate > 0);
}

TEST_CASE("results are reproducible and worker-count independent") {
  ChannelInstance inst{power(desk::fair2(), 3), power(desk::bsc(0.11), 3), 4};
  RunOptions a = quick(8192, 99);
  RunOptions b = a;
  b.workers = 3;
  EmpiricalResult ra = simulate_channel(inst, a);
  EmpiricalResult rb = simulate_channel(inst, b);
  EmpiricalResult rc = simulate_channel(inst, a);
  CHECK(ra.failures == rb.failures);
  CHECK(ra.failures == rc.failures);
  EmpiricalResult wa = simulate_wiretap(desk::wiretap_toy(4, 2, 8, 2), a);
  EmpiricalResult wb = simulate_wiretap(desk::wiretap_toy(4, 2, 8, 2), b);
  CHECK(wa.failures == wb.failures);
  CHECK(wa.secondary == wb.secondary);
}

TEST_CASE("common randomness: encoder and decoder replay identically") {
  ChannelInstance inst{power(desk::fair2(), 3), power(desk::bsc(0.11), 3), 4};
  JointPmf joint = channel_joint(inst);
  Kernel x_given_y = joint.conditional(1, 2);
  FiniteMeasure base = with_uniform_tail(inst.px, 4);
  uint64_t ts = trial_seed(123, 77);
  uint64_t race_key = rng::derive(ts, 0x1Au);
  // encoder's own process
  RaceProcess enc_proc(base, race_key);
  RacePoint x_enc = enc_proc.select(RaceView{&inst.px, 4, 2});
  // an independent decoder re-derives the same realization from the seed,
  // touching atoms in a different order
  RaceProcess dec_proc(base, race_key);
  RacePoint dec_first = dec_proc.select(RaceView{&x_given_y.row(5), 4, -1});
  RacePoint x_enc2 = dec_proc.select(RaceView{&inst.px, 4, 2});
  CHECK(x_enc.atom == x_enc2.atom);
  CHECK(x_enc.time == x_enc2.time);
  RacePoint dec_second = enc_proc.select(RaceView{&x_given_y.row(5), 4, -1});
  CHECK(dec_first.atom == dec_second.atom);
  CHECK(dec_first.time == dec_second.time);
}

TEST_CASE("channel trials induce the product law on (M, X, Y)") {
  ChannelInstance inst{desk::fair2(), desk::bsc(0.11), 2};
  FiniteMeasure base = with_uniform_tail(inst.px, 2);
  const long long n = 30000;
  long long counts[8] = {};
  for (long long t = 0; t < n; ++t) {
    uint64_t ts = trial_seed(404, t);
    rng::Stream aux(rng::derive(ts, 0xAu));
    RaceProcess proc(base, rng::derive(ts, 0x1Au));
    int m = aux.uniform_int(2);
    RacePoint cx = proc.select(RaceView{&inst.px, 2, m});
    int x = cx.atom / 2;
    int y = sample(inst.ch.row(x), aux.u01());
    counts[(m * 2 + x) * 2 + y]++;
  }
  double probs[8];
  for (int m = 0; m < 2; ++m)
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        probs[(m * 2 + x) * 2 + y] = 0.5 * 0.5 * inst.ch.prob(x, y);
  CHECK(testutil::chi2_pvalue(std::span<const long long>(counts, 8),
                              std::span<const double>(probs, 8)) > 0.001);
}

TEST_CASE("rank decoder: message-agnostic code and per-message ordering") {
  ChannelInstance inst{power(desk::fair2(), 3), power(desk::bsc(0.11), 3), 4};
  double last = -1;
  for (long long m : {1, 4, 16}) {
    RunOptions o = quick(20000, 31);
    o.fixed_message = m;
    EmpiricalResult r = simulate_channel_rank(inst, o);
    CHECK(r.dominated);  // per-message bound
    // ordering with generous monte carlo slack
    CHECK(r.estimate >= last - 0.02);
    last = r.estimate;
  }
  EmpiricalResult noisy = simulate_channel_rank(desk::channel_noiseless2(),
                                                quick(40000));
  CHECK(noisy.bound == doctest::Approx(0.6464466094067263).epsilon(1e-12));
  CHECK(noisy.dominated);
}

TEST_CASE("list decoder: J = 1 shares the prop1 bound and majorizes") {
  // the list failure is the joint codeword-message event from the analysis;
  // at J = 1 it contains the plain decoder's message-error event and the
  // two share the same bound
  ChannelInstance inst{power(desk::fair2(), 3), power(desk::bsc(0.11), 3), 4};
  EmpiricalResult plain = simulate_channel(inst, quick(10000, 47));
  EmpiricalResult list1 = simulate_channel_list(inst, 1, quick(10000, 47));
  CHECK(list1.failures >= plain.failures);
  CHECK(list1.bound == doctest::Approx(plain.bound).epsilon(1e-12));
  CHECK(list1.dominated);
}

TEST_CASE("list decoder: noiseless pair tail is one ninth") {
  EmpiricalResult r =
      simulate_channel_list(desk::channel_noiseless2(), 2, quick(60000));
  CHECK(r.ci_lo <= 1.0 / 9);
  CHECK(r.ci_hi >= 1.0 / 9);
  CHECK(r.dominated);
}

TEST_CASE("gp: degenerate state matches the channel scheme in law") {
  Pmf ps(Alphabet(1), {1.0});
  Kernel pus(Alphabet(1), Alphabet(2), {{0.5, 0.5}});
  std::vector<int> x_map = {0, 1};
  Kernel ch(Alphabet::product({2, 1}), Alphabet(2),
            {{0.89, 0.11}, {0.11, 0.89}});
  GpInstance gp{ps, pus, x_map, 2, ch, 4};
  EmpiricalResult rg = simulate_gp(gp, quick(30000, 3));
  ChannelInstance cinst{desk::fair2(), desk::bsc(0.11), 4};
  EmpiricalResult rc = simulate_channel(cinst, quick(30000, 4));
  CHECK(rg.dominated);
  double slack = 3 * std::sqrt(rg.metric_ci_half * rg.metric_ci_half +
                               rc.metric_ci_half * rc.metric_ci_half);
  CHECK(std::abs(rg.estimate - rc.estimate) <= slack + 0.01);
}

TEST_CASE("gp: uninformative auxiliary still obeys its (vacuous) bound") {
  // U independent of (S, Y): the decoder learns nothing
  Pmf ps = desk::fair2();
  Kernel pus(Alphabet(2), Alphabet(2), {{0.5, 0.5}, {0.5, 0.5}});
  std::vector<int> x_map = {0, 0, 0, 0};  // x constant
  Kernel ch(Alphabet::product({2, 2}), Alphabet(2),
            {{0.7, 0.3}, {0.3, 0.7}, {0.7, 0.3}, {0.3, 0.7}});
  GpInstance gp{ps, pus, x_map, 2, ch, 16};
  EmpiricalResult r = simulate_gp(gp, quick(8000));
  CHECK(r.bound > 0.8);
  CHECK(r.dominated);
  CHECK(r.estimate > 0.5);
}

TEST_CASE("gp toy instance stays under thm3") {
  EmpiricalResult r = simulate_gp(desk::gp_toy(4, 4), quick(20000));
  CHECK(r.dominated);
}

TEST_CASE("wz: perfect side information leaves only mismatch errors") {
  Pmf px = desk::fair2();
  Kernel ident(Alphabet(2), Alphabet(2), {{1.0, 0.0}, {0.0, 1.0}});
  std::vector<int> z_map = {0, 0, 1, 1};
  std::vector<double> d = {0, 1, 1, 0};
  WzInstance wz{px, ident, ident, z_map, 2, d, 0.0, 8};
  EmpiricalResult r = simulate_wz(wz, quick(40000));
  CHECK(r.bound == doctest::Approx(1.0 / 9).epsilon(1e-12));
  CHECK(r.ci_lo <= r.bound + 0.01);
  CHECK(r.dominated);
}

TEST_CASE("wz: an always-satisfiable target never fails") {
  WzInstance wz = desk::wz_dsbs(3, 8, 1.0);  // D >= max distortion
  EmpiricalResult r = simulate_wz(wz, quick(4000));
  CHECK(r.failures == 0);
  CHECK(r.dominated);
}

TEST_CASE("wz toy stays under thm4") {
  EmpiricalResult r = simulate_wz(desk::wz_dsbs(), quick(20000));
  CHECK(r.dominated);
}

TEST_CASE("wz: degenerate side information is plain lossy coding") {
  // |Y| = 1: the decoder sees only the message
  Pmf px = power(desk::fair2(), 3);
  Kernel side(px.alphabet(), Alphabet(1),
              std::vector<std::vector<double>>(8, {1.0}));
  Kernel pux = power(desk::bsc(0.1), 3);
  std::vector<int> z_map(8 * 1);
  for (int u = 0; u < 8; ++u) z_map[u] = u;  // z(u, y) = u
  std::vector<double> d_single = {0, 1, 1, 0};
  WzInstance wz{px, side, pux, z_map, 8,
                power_distortion(d_single, 2, 2, 3), 1.0 / 3, 8};
  EmpiricalResult r = simulate_wz(wz, quick(20000));
  CHECK(r.dominated);
  CHECK(r.estimate > 0);
}

TEST_CASE("jscc: full reproduction ball leaves only the matching term") {
  JsccInstance inst = desk::jscc_toy(4, 2, 1.0);  // every z within distortion
  EmpiricalResult r = simulate_jscc(inst, quick(20000));
  // nothing can exceed the distortion target, and the bound collapses to
  // the pure matching expression E[(1 + 2^iota)^-1]
  CHECK(r.failures == 0);
  JointPmf j = channel_joint({inst.px, inst.ch, 1});
  stats::NeumaierSum match_err;
  for (int atom : j.pmf().support())
    match_err.add(j.pmf().prob(atom) /
                  (1.0 + std::exp2(j.info_density(1, 2, 0, atom))));
  CHECK(r.bound == doctest::Approx(match_err.value()).epsilon(1e-12));
}

TEST_CASE("jscc: unreachable sources count toward the bound") {
  // one source symbol has an empty reproduction ball
  Pmf pw(Alphabet(2), {0.7, 0.3});
  std::vector<double> d = {0.0, 0.0, 1.0, 1.0};  // w=1 unreachable at D=0.5
  JsccInstance inst{pw, desk::fair2(), desk::bsc(0.11), desk::fair2(), d, 0.5};
  EmpiricalResult r = simulate_jscc(inst, quick(20000));
  CHECK(r.bound >= 0.3);  // at least the unreachable mass
  CHECK(r.dominated);
}

TEST_CASE("jscc toy stays under thm5") {
  EmpiricalResult r = simulate_jscc(desk::jscc_toy(), quick(20000));
  CHECK(r.dominated);
}

TEST_CASE("bc marton: J = 1 and independent auxiliaries") {
  BcInstance inst = desk::bc_marton_toy(2, 2, 2, 1);
  EmpiricalResult r = simulate_bc_marton(inst, quick(15000));
  CHECK(r.dominated);
  // independent pair: the resampling weights are uniform
  BcInstance indep = desk::bc_marton_toy(2, 2, 2, 4);
  indep.aux = JointPmf(
      Pmf(Alphabet::product({4, 4}),
          power(Pmf(Alphabet::product({2, 2}), {0.25, 0.25, 0.25, 0.25}), 2)
              .weights()));
  EmpiricalResult r2 = simulate_bc_marton(indep, quick(15000));
  CHECK(r2.dominated);
}

TEST_CASE("bc marton toy stays under thm8") {
  EmpiricalResult r = simulate_bc_marton(desk::bc_marton_toy(), quick(20000));
  CHECK(r.dominated);
}

TEST_CASE("bc common: degenerate common layer approaches marton behavior") {
  // L0 = 1 with a constant U0 factor
  BcInstance marton = desk::bc_marton_toy(2, 2, 2, 2);
  std::vector<double> w3(1 * marton.aux.alphabet().factor_size(0) *
                         marton.aux.alphabet().factor_size(1));
  for (size_t i = 0; i < w3.size(); ++i) w3[i] = marton.aux.pmf().weights()[i];
  BcInstance common{JointPmf(Pmf(Alphabet::product(
                        {1, marton.aux.alphabet().factor_size(0),
                         marton.aux.alphabet().factor_size(1)}),
                        w3)),
                    true,
                    marton.x_map,
                    marton.x_size,
                    marton.ch2,
                    1,
                    2,
                    2,
                    2,
                    1,
                    1};
  RunOptions o = quick(10000);
  o.phi_terms = 512;
  EmpiricalResult rc = simulate_bc_common(common, o);
  EmpiricalResult rm = simulate_bc_marton(marton, quick(10000, 12));
  CHECK(rc.dominated);
  CHECK(std::abs(rc.estimate - rm.estimate) <= 0.06);
}

TEST_CASE("bc common toy stays under thm7") {
  RunOptions o = quick(6000);
  o.phi_terms = 512;
  EmpiricalResult r = simulate_bc_common(desk::bc_common_toy(3), o);
  CHECK(r.dominated);
}

TEST_CASE("dlsc: independent descriptions with zero-distortion targets") {
  // U_j = X_j, D = 0: failures are pure mismatch unions
  JointPmf px12(Pmf(Alphabet::product({2, 2}), {0.25, 0.25, 0.25, 0.25}));
  Kernel ident(Alphabet(2), Alphabet(2), {{1.0, 0.0}, {0.0, 1.0}});
  std::vector<int> z1 = {0, 0, 1, 1}, z2 = {0, 1, 0, 1};
  std::vector<double> d = {0, 1, 1, 0};
  DlscInstance inst{px12, ident, ident, z1, z2, 2, 2, d, d, 0.0, 0.0, 4, 4};
  RunOptions o = quick(10000);
  o.phi_terms = 256;
  EmpiricalResult r = simulate_dlsc(inst, o);
  CHECK(r.dominated);
  CHECK(r.estimate > 0);
}

TEST_CASE("dlsc: degenerate second source behaves like one-source coding") {
  JointPmf px12(Pmf(Alphabet::product({2, 1}), {0.5, 0.5}));
  Kernel k2(Alphabet(1), Alphabet(1), {{1.0}});
  Kernel k1 = desk::bsc(0.1);
  std::vector<int> z1 = {0, 1}, z2 = {0, 0};
  std::vector<double> d1 = {0, 1, 1, 0}, d2 = {0.0};
  DlscInstance inst{px12, k1, k2, z1, z2, 2, 1, d1, d2, 0.3, 1.0, 8, 1};
  RunOptions o = quick(10000);
  o.phi_terms = 256;
  EmpiricalResult r = simulate_dlsc(inst, o);
  CHECK(r.dominated);
}

TEST_CASE("dlsc toy stays under the phi-form bound") {
  RunOptions o = quick(10000);
  o.phi_terms = 512;
  EmpiricalResult r = simulate_dlsc(desk::dlsc_toy(3), o);
  CHECK(r.dominated);
}

TEST_CASE("dlsc bound variants all dominate the simulated scheme") {
  rng::Stream st(2718);
  for (int rep = 0; rep < 10; ++rep) {
    double corr = 0.3 + 0.15 * st.u01();
    std::vector<double> w = {corr, 0.5 - corr, 0.5 - corr, corr};
    JointPmf px12(Pmf(Alphabet::product({2, 2}), w));
    std::vector<int> z1 = {0, 0, 1, 1}, z2 = {0, 1, 0, 1};
    std::vector<double> d = {0, 1, 1, 0};
    int n = 2 + st.uniform_int(2);
    double eps = 0.05 + 0.1 * st.u01();
    DlscInstance inst{JointPmf::power(px12, n),
                      power(desk::bsc(eps), n),
                      power(desk::bsc(eps), n),
                      power_map(z1, {2, 2}, 2, n),
                      power_map(z2, {2, 2}, 2, n),
                      1 << n,
                      1 << n,
                      power_distortion(d, 2, 2, n),
                      power_distortion(d, 2, 2, n),
                      0.3,
                      0.3,
                      16,
                      16};
    BoundReport b = dlsc_bounds(inst, 1.0, 1024);
    RunOptions o = quick(3000, 1000 + rep);
    o.phi_terms = 256;
    EmpiricalResult r = simulate_dlsc(inst, o);
    for (const char* name : {"phi", "trunc", "harmonic"})
      CHECK(r.estimate <= b.value(name) + 3 * r.metric_ci_half + 0.01);
  }
}

TEST_CASE("mac: single messages never err and the adder stays bounded") {
  MacInstance tiny = desk::mac_adder(2, 1, 1);
  RunOptions o = quick(3000);
  o.phi_terms = 128;
  EmpiricalResult r = simulate_mac(tiny, o);
  CHECK(r.failures == 0);
  RunOptions o2 = quick(8000);
  o2.phi_terms = 512;
  EmpiricalResult r2 = simulate_mac(desk::mac_adder(4), o2);
  CHECK(r2.dominated);
}

TEST_CASE("mac: orthogonal legs decouple") {
  // Y = (Y1, Y2) with user-separated noise
  std::vector<std::vector<double>> rows;
  for (int x1 = 0; x1 < 2; ++x1)
    for (int x2 = 0; x2 < 2; ++x2) {
      std::vector<double> r(4);
      for (int y1 = 0; y1 < 2; ++y1)
        for (int y2 = 0; y2 < 2; ++y2)
          r[y1 * 2 + y2] =
              (y1 == x1 ? 0.9 : 0.1) * (y2 == x2 ? 0.9 : 0.1);
      rows.push_back(std::move(r));
    }
  Kernel ch(Alphabet::product({2, 2}), Alphabet(4), rows);
  MacInstance single{desk::fair2(), desk::fair2(), ch, 2, 2};
  MacInstance inst{power(desk::fair2(), 4), power(desk::fair2(), 4),
                   power_grouped_input2(ch, 2, 2, 4), 2, 2};
  (void)single;
  RunOptions o = quick(8000);
  o.phi_terms = 256;
  EmpiricalResult r = simulate_mac(inst, o);
  CHECK(r.dominated);
}

TEST_CASE("resolvability: independent output gives exactly zero TV") {
  EmpiricalResult r =
      simulate_resolvability(desk::resolvability_indep(), quick(500));
  CHECK(r.estimate == 0.0);
  CHECK(r.dominated);
}

TEST_CASE("resolvability: BSC instance stays under pe1") {
  EmpiricalResult r =
      simulate_resolvability(desk::resolvability_bsc(), quick(400));
  CHECK(r.dominated);
  CHECK(r.estimate > 0);
}

TEST_CASE("wiretap: independent eavesdropper sees exactly nothing") {
  // Z independent of U: per-realization TV is identically zero
  int nx = 4;
  std::vector<double> w(static_cast<size_t>(nx) * nx, 0.0);
  for (int x = 0; x < nx; ++x) w[static_cast<size_t>(x) * nx + x] = 1.0 / nx;
  JointPmf pux(Pmf(Alphabet::product({nx, nx}), w));
  std::vector<std::vector<double>> rows;
  for (int x = 0; x < nx; ++x) {
    std::vector<double> r(static_cast<size_t>(nx) * 2, 0.0);
    r[static_cast<size_t>(x) * 2 + 0] = 0.5;
    r[static_cast<size_t>(x) * 2 + 1] = 0.5;
    rows.push_back(std::move(r));
  }
  Kernel ch2(Alphabet(nx), Alphabet::product({nx, 2}), rows);
  WiretapInstance inst{std::move(pux), std::move(ch2), 2, 4, 2, 1.0};
  EmpiricalResult r = simulate_wiretap(inst, quick(3000));
  CHECK(r.secondary == 0.0);
  CHECK(r.dominated);
}

TEST_CASE("wiretap toy stays under the combined bound") {
  EmpiricalResult r = simulate_wiretap(desk::wiretap_toy(5, 2, 8, 2),
                                       quick(10000));
  CHECK(r.dominated);
}

TEST_CASE("phi mixture truncation does not move the decoder") {
  // one dlsc-style mixture selection, three truncation horizons, matched
  // realizations: the selection almost never changes once the tail weight
  // is spread over already-seen candidates
  JointPmf px12(Pmf(Alphabet::product({2, 2}), {0.4, 0.1, 0.1, 0.4}));
  Kernel k1 = desk::bsc(0.1);
  JointPmf joint(
      Pmf(Alphabet::product({2, 2, 2, 2}),
          [&] {
            std::vector<double> w(16, 0.0);
            for (int x1 = 0; x1 < 2; ++x1)
              for (int x2 = 0; x2 < 2; ++x2)
                for (int u1 = 0; u1 < 2; ++u1)
                  for (int u2 = 0; u2 < 2; ++u2)
                    w[((x1 * 2 + x2) * 2 + u1) * 2 + u2] =
                        px12.pmf().prob(x1 * 2 + x2) * k1.prob(x1, u1) *
                        k1.prob(x2, u2);
            return w;
          }()));
  Pmf pu1 = joint.marginal(4);
  Pmf pu2 = joint.marginal(8);
  Kernel u2_given_u1 = joint.conditional(8, 4);
  const int L1 = 8, L2 = 8;
  FiniteMeasure base1 = with_uniform_tail(pu1, L1);
  FiniteMeasure base2 = with_uniform_tail(pu2, L2);
  const long long trials = 2000;
  int flips_small = 0, flips_mid = 0;
  auto phi1 = PhiDist::instance().truncated(128);
  auto phi2 = PhiDist::instance().truncated(512);
  auto phi3 = PhiDist::instance().truncated(2048);
  for (long long t = 0; t < trials; ++t) {
    uint64_t ts = trial_seed(31337, t);
    RaceProcess proc1(base1, rng::derive(ts, 1));
    RaceProcess proc2(base2, rng::derive(ts, 2));
    auto cands = proc1.list(RaceView{&pu1, L1, 0}, 2048);
    int sel[3];
    int vi = 0;
    for (const auto& phiw : {phi1, phi2, phi3}) {
      std::vector<double> mixw(2, 0.0);
      for (size_t k = 0; k < phiw.size(); ++k) {
        const Pmf& row = u2_given_u1.row(cands[k].atom / L1);
        for (int u2 = 0; u2 < 2; ++u2) mixw[u2] += phiw[k] * row.prob(u2);
      }
      Pmf mix = Pmf::renormalized(Alphabet(2), std::move(mixw));
      sel[vi++] = proc2.select(RaceView{&mix, L2, 0}).atom;
    }
    if (sel[0] != sel[2]) ++flips_small;
    if (sel[1] != sel[2]) ++flips_mid;
  }
  CHECK(flips_mid <= flips_small);
  CHECK(static_cast<double>(flips_mid) / trials <= 0.02);
}

TEST_CASE("trace capture records race points with both keys") {
  ChannelInstance inst{desk::fair2(), desk::bsc(0.11), 2};
  RunOptions o = quick(100);
  o.trace_points = 5;
  EmpiricalResult r = simulate_channel(inst, o);
  REQUIRE(!r.trace.empty());
  const auto& first = r.trace.at(0);
  CHECK(first.at("points").size() == 5);
  const auto& pt = first.at("points").at(0);
  CHECK(pt.contains("atom"));
  CHECK(pt.contains("arrival_index"));
  CHECK(pt.contains("time"));
  CHECK(pt.contains("q_key"));
  CHECK(pt.contains("p_key"));
}
