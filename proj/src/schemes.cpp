#include "pml/schemes.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "pml/analytics.hpp"
#include "pml/bounds.hpp"
#include "pml/errors.hpp"
#include "pml/race.hpp"
#include "pml/rng.hpp"
#include "pml/stats.hpp"

namespace pml {

namespace {

constexpr uint64_t kAuxTag = 0xAu;
constexpr uint64_t kRaceTag = 0x1Au;  // + process index

struct TrialOut {
  bool failed = false;
  double aux = 0.0;  // exact TV for resolvability / wiretap trials
};

// Deterministic chunked reduction: chunk boundaries are fixed, workers claim
// chunks dynamically, partials are combined in chunk order. Results are
// identical for any worker count.
struct ChunkAccum {
  long long fails = 0;
  double sum_aux = 0, sum_aux2 = 0, sum_fail_aux = 0;
};

template <class TrialFn>
std::vector<ChunkAccum> run_chunks(const RunOptions& opt, TrialFn&& fn) {
  const long long chunk = 4096;
  const long long n_chunks = (opt.trials + chunk - 1) / chunk;
  std::vector<ChunkAccum> acc(n_chunks);
  std::atomic<long long> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  auto work = [&] {
    try {
      while (true) {
        long long c = next.fetch_add(1);
        if (c >= n_chunks) return;
        long long lo = c * chunk, hi = std::min(opt.trials, lo + chunk);
        ChunkAccum a;
        stats::NeumaierSum s1, s2, sf;
        for (long long t = lo; t < hi; ++t) {
          TrialOut out = fn(t, trial_seed(opt.seed, t));
          if (out.failed) ++a.fails;
          s1.add(out.aux);
          s2.add(out.aux * out.aux);
          if (out.failed) sf.add(out.aux);
        }
        a.sum_aux = s1.value();
        a.sum_aux2 = s2.value();
        a.sum_fail_aux = sf.value();
        acc[c] = a;
      }
    } catch (...) {
      std::scoped_lock lock(err_mu);
      if (!err) err = std::current_exception();
    }
  };
  int workers = std::max(1, opt.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (err) std::rethrow_exception(err);
  return acc;
}

EmpiricalResult reduce_failures(const std::string& setting,
                                const RunOptions& opt,
                                const std::vector<ChunkAccum>& chunks,
                                double bound, const std::string& bound_name) {
  EmpiricalResult r;
  r.setting = setting;
  r.trials = opt.trials;
  for (const auto& c : chunks) r.failures += c.fails;
  r.estimate = static_cast<double>(r.failures) / static_cast<double>(r.trials);
  auto ci = stats::wilson95(r.failures, r.trials);
  r.ci_lo = ci.lo;
  r.ci_hi = ci.hi;
  r.metric = r.estimate;
  r.metric_ci_half = ci.half();
  r.bound = bound;
  r.bound_name = bound_name;
  r.dominated = r.metric <= r.bound + 3 * r.metric_ci_half;
  return r;
}

double total_variation(std::span<const double> a, std::span<const double> b) {
  stats::NeumaierSum l1;
  for (size_t i = 0; i < a.size(); ++i) l1.add(std::abs(a[i] - b[i]));
  return l1.value() / 2;
}

int head_of(const RacePoint& pt, int tail) { return pt.atom / tail; }
int tail_of(const RacePoint& pt, int tail) { return pt.atom % tail; }

nlohmann::json trace_points(RaceProcess& proc, const RaceView& decode,
                            const RaceView& encode, int n) {
  nlohmann::json arr = nlohmann::json::array();
  auto pts = proc.list(decode, n);
  for (const auto& pt : pts) {
    double mu = proc.base().weight(pt.atom);
    double pf = encode.prob(pt.atom) / mu;
    nlohmann::json rec;
    rec["atom"] = pt.atom;
    rec["arrival_index"] = pt.arrival;
    rec["time"] = pt.time;
    rec["q_key"] = pt.key;
    if (pf > 0)
      rec["p_key"] = pt.time / pf;
    else
      rec["p_key"] = nullptr;
    arr.push_back(rec);
  }
  return arr;
}

}  // namespace

uint64_t trial_seed(uint64_t master_seed, long long trial_index) {
  return rng::derive(master_seed, 0x7714A1ull + static_cast<uint64_t>(trial_index));
}

EmpiricalResult simulate_channel(const ChannelInstance& inst,
                                 const RunOptions& opt) {
  const int L = static_cast<int>(inst.L);
  JointPmf joint = channel_joint(inst);
  Kernel x_given_y = joint.conditional(1, 2);
  FiniteMeasure base = with_uniform_tail(inst.px, L);
  double bound = channel_bounds(inst).value("prop1");
  nlohmann::json trace = nlohmann::json::array();
  std::mutex trace_mu;
  auto chunks = run_chunks(opt, [&](long long t, uint64_t ts) {
    rng::Stream aux(rng::derive(ts, kAuxTag));
    RaceProcess proc(base, rng::derive(ts, kRaceTag));
    int m = aux.uniform_int(L);
    RaceView enc{&inst.px, L, m};
    RacePoint cx = proc.select(enc);
    int x = head_of(cx, L);
    int y = sample(inst.ch.row(x), aux.u01());
    RaceView dec{&x_given_y.row(y), L, -1};
    int m_hat = tail_of(proc.select(dec), L);
    if (opt.trace_points > 0 && t < 4) {
      auto pts = trace_points(proc, dec, enc, opt.trace_points);
      std::scoped_lock lock(trace_mu);
      trace.push_back({{"trial", t}, {"points", pts}});
    }
    return TrialOut{m_hat != m, 0.0};
  });
  EmpiricalResult r = reduce_failures("channel", opt, chunks, bound, "prop1");
  r.trace = std::move(trace);
  return r;
}

EmpiricalResult simulate_channel_rank(const ChannelInstance& inst,
                                      const RunOptions& opt) {
  const int L = static_cast<int>(inst.L);
  JointPmf joint = channel_joint(inst);
  Kernel x_given_y = joint.conditional(1, 2);
  FiniteMeasure base(inst.px.alphabet(), inst.px.weights());
  double bound = opt.fixed_message > 0
                     ? channel_rank_message_bound(inst, opt.fixed_message)
                     : channel_bounds(inst).value("thm2");
  auto chunks = run_chunks(opt, [&](long long, uint64_t ts) {
    rng::Stream aux(rng::derive(ts, kAuxTag));
    RaceProcess proc(base, rng::derive(ts, kRaceTag));
    long long m = opt.fixed_message > 0 ? opt.fixed_message
                                        : aux.uniform_int(L) + 1;
    RaceView px_view{&inst.px, 1, -1};
    RacePoint cx = proc.nth(px_view, static_cast<int>(m));
    int y = sample(inst.ch.row(cx.atom), aux.u01());
    RaceView dec{&x_given_y.row(y), 1, -1};
    Rank rank = proc.match_rank(dec, px_view, 1);
    bool ok = !rank.is_infinite && rank.value == m;
    return TrialOut{!ok, 0.0};
  });
  return reduce_failures("channel_rank", opt, chunks, bound,
                         opt.fixed_message > 0 ? "rank_message" : "thm2");
}

EmpiricalResult simulate_channel_list(const ChannelInstance& inst, long long J,
                                      const RunOptions& opt) {
  const int L = static_cast<int>(inst.L);
  JointPmf joint = channel_joint(inst);
  Kernel x_given_y = joint.conditional(1, 2);
  FiniteMeasure base = with_uniform_tail(inst.px, L);
  double bound = channel_list_bound(inst, J);
  auto chunks = run_chunks(opt, [&](long long, uint64_t ts) {
    rng::Stream aux(rng::derive(ts, kAuxTag));
    RaceProcess proc(base, rng::derive(ts, kRaceTag));
    int m = aux.uniform_int(L);
    RacePoint cx = proc.select(RaceView{&inst.px, L, m});
    int x = head_of(cx, L);
    int y = sample(inst.ch.row(x), aux.u01());
    auto pts = proc.list(RaceView{&x_given_y.row(y), L, -1},
                         static_cast<int>(J));
    bool hit = false;
    for (const auto& pt : pts) hit = hit || pt.atom == cx.atom;
    return TrialOut{!hit, 0.0};
  });
  return reduce_failures("channel_list", opt, chunks, bound, "list_j");
}

EmpiricalResult simulate_gp(const GpInstance& inst, const RunOptions& opt) {
  const int L = static_cast<int>(inst.L);
  const int ns = inst.ps.size();
  JointPmf joint = gp_joint(inst);  // S=1, U=2, Y=4
  Pmf pu = joint.marginal(2);
  Kernel u_given_y = joint.conditional(2, 4);
  FiniteMeasure base = with_uniform_tail(pu, L);
  double bound = gp_bounds(inst, 1.0, 1).value("thm3");
  nlohmann::json trace = nlohmann::json::array();
  std::mutex trace_mu;
  auto chunks = run_chunks(opt, [&](long long t, uint64_t ts) {
    rng::Stream aux(rng::derive(ts, kAuxTag));
    RaceProcess proc(base, rng::derive(ts, kRaceTag));
    int m = aux.uniform_int(L);
    int s = sample(inst.ps, aux.u01());
    RaceView enc{&inst.pu_given_s.row(s), L, m};
    RacePoint cu = proc.select(enc);
    int u = head_of(cu, L);
    int x = inst.x_map[u * ns + s];
    int y = sample(inst.ch.row(x * ns + s), aux.u01());
    RaceView dec{&u_given_y.row(y), L, -1};
    int m_hat = tail_of(proc.select(dec), L);
    if (opt.trace_points > 0 && t < 4) {
      auto pts = trace_points(proc, dec, enc, opt.trace_points);
      std::scoped_lock lock(trace_mu);
      trace.push_back({{"trial", t}, {"points", pts}});
    }
    return TrialOut{m_hat != m, 0.0};
  });
  EmpiricalResult r = reduce_failures("gp", opt, chunks, bound, "thm3");
  r.trace = std::move(trace);
  return r;
}

EmpiricalResult simulate_wz(const WzInstance& inst, const RunOptions& opt) {
  const int L = static_cast<int>(inst.L);
  const int ny = inst.side.output().size();
  const int nz = inst.z_size;
  JointPmf joint = wz_joint(inst);  // X=1, Y=2, U=4
  Pmf pu = joint.marginal(4);
  Kernel u_given_y = joint.conditional(4, 2);
  FiniteMeasure base = with_uniform_tail(pu, L);
  double bound = wz_bounds(inst, 1.0, 1.0, 1).value("thm4");
  nlohmann::json trace = nlohmann::json::array();
  std::mutex trace_mu;
  auto chunks = run_chunks(opt, [&](long long t, uint64_t ts) {
    rng::Stream aux(rng::derive(ts, kAuxTag));
    RaceProcess proc(base, rng::derive(ts, kRaceTag));
    int x = sample(inst.px, aux.u01());
    int y = sample(inst.side.row(x), aux.u01());
    RaceView enc{&inst.pu_given_x.row(x), L, -1};
    RacePoint cu = proc.select(enc);
    int m = tail_of(cu, L);
    RaceView dec{&u_given_y.row(y), L, m};
    RacePoint du = proc.select(dec);
    int u_hat = head_of(du, L);
    int z = inst.z_map[u_hat * ny + y];
    if (opt.trace_points > 0 && t < 4) {
      auto pts = trace_points(proc, dec, enc, opt.trace_points);
      std::scoped_lock lock(trace_mu);
      trace.push_back({{"trial", t}, {"points", pts}});
    }
    return TrialOut{inst.d[x * nz + z] > inst.D, 0.0};
  });
  EmpiricalResult r = reduce_failures("wz", opt, chunks, bound, "thm4");
  r.trace = std::move(trace);
  return r;
}

EmpiricalResult simulate_jscc(const JsccInstance& inst, const RunOptions& opt) {
  const int nz = inst.pz.size();
  const int nw = inst.pw.size();
  JointPmf joint = channel_joint({inst.px, inst.ch, 1});
  Kernel x_given_y = joint.conditional(1, 2);
  // encoder heads: P_X x P_{Z|W} with the ball-restricted reproduction law
  std::vector<Pmf> enc_head;
  enc_head.reserve(nw);
  for (int w = 0; w < nw; ++w) {
    std::vector<double> zw(nz, 0.0);
    double rho = 0;
    for (int z = 0; z < nz; ++z)
      if (inst.d[w * nz + z] <= inst.D) {
        zw[z] = inst.pz.prob(z);
        rho += zw[z];
      }
    if (rho == 0) {
      for (int z = 0; z < nz; ++z) zw[z] = inst.pz.prob(z);
      rho = 1.0;
    }
    for (double& v : zw) v /= rho;
    enc_head.push_back(product(inst.px, Pmf::renormalized(Alphabet(nz), zw)));
  }
  std::vector<Pmf> dec_head;
  int ny = inst.ch.output().size();
  dec_head.reserve(ny);
  for (int y = 0; y < ny; ++y) dec_head.push_back(product(x_given_y.row(y), inst.pz));
  Pmf base_pmf = product(inst.px, inst.pz);
  FiniteMeasure base(base_pmf.alphabet(), base_pmf.weights());
  double bound = jscc_bounds(inst, 1).value("thm5");
  auto chunks = run_chunks(opt, [&](long long, uint64_t ts) {
    rng::Stream aux(rng::derive(ts, kAuxTag));
    RaceProcess proc(base, rng::derive(ts, kRaceTag));
    int w = sample(inst.pw, aux.u01());
    RacePoint cx = proc.select(RaceView{&enc_head[w], 1, -1});
    int x = cx.atom / nz;
    int y = sample(inst.ch.row(x), aux.u01());
    RacePoint cz = proc.select(RaceView{&dec_head[y], 1, -1});
    int z_hat = cz.atom % nz;
    return TrialOut{inst.d[w * nz + z_hat] > inst.D, 0.0};
  });
  return reduce_failures("jscc", opt, chunks, bound, "thm5");
}

EmpiricalResult simulate_bc_marton(const BcInstance& inst,
                                   const RunOptions& opt) {
  if (inst.common)
    throw ValidationError("marton simulator needs a two-factor auxiliary");
  const int L1 = static_cast<int>(inst.L1), L2 = static_cast<int>(inst.L2);
  const int J = static_cast<int>(inst.J);
  const int nu2 = inst.aux.alphabet().factor_size(1);
  JointPmf joint = bc_joint(inst);  // U1=1, U2=2, Y1=4, Y2=8
  Pmf pu1 = inst.aux.marginal(1);
  Pmf pu2 = inst.aux.marginal(2);
  Kernel u2_given_u1 = inst.aux.conditional(2, 1);
  Kernel u1_given_y1 = joint.conditional(1, 4);
  Kernel u2_given_y2 = joint.conditional(2, 8);
  int ny2 = inst.ch2.output().factor_size(1);
  FiniteMeasure base1 = with_uniform_tail(pu1, L1);
  FiniteMeasure base2 = with_uniform_tail(pu2, L2);
  double bound = bc_bounds(inst, 1.0).value("thm8");
  auto chunks = run_chunks(opt, [&](long long, uint64_t ts) {
    rng::Stream aux(rng::derive(ts, kAuxTag));
    RaceProcess proc1(base1, rng::derive(ts, kRaceTag));
    RaceProcess proc2(base2, rng::derive(ts, kRaceTag + 1));
    int m1 = aux.uniform_int(L1), m2 = aux.uniform_int(L2);
    auto cands = proc1.list(RaceView{&pu1, L1, m1}, J);
    // J-mixture view over U2 conditioned on the candidate list
    std::vector<double> mixw(nu2, 0.0);
    for (const auto& pt : cands) {
      const Pmf& row = u2_given_u1.row(head_of(pt, L1));
      for (int u2 = 0; u2 < nu2; ++u2) mixw[u2] += row.prob(u2) / J;
    }
    Pmf mix = Pmf::renormalized(Alphabet(nu2), std::move(mixw));
    int u2 = head_of(proc2.select(RaceView{&mix, L2, m2}), L2);
    // resample which candidate realized U1 (a.k.a. the sub-codeword index)
    double tot = 0;
    for (const auto& pt : cands) tot += u2_given_u1.row(head_of(pt, L1)).prob(u2);
    double draw = aux.u01() * tot, accw = 0;
    int u1 = head_of(cands.back(), L1);
    for (const auto& pt : cands) {
      accw += u2_given_u1.row(head_of(pt, L1)).prob(u2);
      if (draw < accw) {
        u1 = head_of(pt, L1);
        break;
      }
    }
    int x = inst.x_map[u1 * nu2 + u2];
    int yy = sample(inst.ch2.row(x), aux.u01());
    int y1 = yy / ny2, y2 = yy % ny2;
    int m1_hat = tail_of(proc1.select(RaceView{&u1_given_y1.row(y1), L1, -1}), L1);
    int m2_hat = tail_of(proc2.select(RaceView{&u2_given_y2.row(y2), L2, -1}), L2);
    return TrialOut{m1_hat != m1 || m2_hat != m2, 0.0};
  });
  return reduce_failures("bc_marton", opt, chunks, bound, "thm8");
}

EmpiricalResult simulate_bc_common(const BcInstance& inst,
                                   const RunOptions& opt) {
  if (!inst.common)
    throw ValidationError("common-message simulator needs a three-factor auxiliary");
  const int L0 = static_cast<int>(inst.L0), L1 = static_cast<int>(inst.L1),
            L2 = static_cast<int>(inst.L2), J = static_cast<int>(inst.J);
  const int nu1 = inst.aux.alphabet().factor_size(1);
  const int nu2 = inst.aux.alphabet().factor_size(2);
  JointPmf joint = bc_joint(inst);  // U0=1, U1=2, U2=4, Y1=8, Y2=16
  Pmf pu0 = inst.aux.marginal(1);
  Pmf pu1 = inst.aux.marginal(2);
  Pmf pu2 = inst.aux.marginal(4);
  Kernel u1_given_u0 = inst.aux.conditional(2, 1);
  Kernel u2_given_u01 = inst.aux.conditional(4, 3);
  Kernel u0_given_y1 = joint.conditional(1, 8);
  Kernel u0_given_y2 = joint.conditional(1, 16);
  Kernel u1_given_u0y1 = joint.conditional(2, 9);
  Kernel u2_given_u0y2 = joint.conditional(4, 17);
  int ny1 = inst.ch2.output().factor_size(0);
  int ny2 = inst.ch2.output().factor_size(1);
  FiniteMeasure base0 = with_uniform_tail(pu0, L0);
  FiniteMeasure base1 = with_uniform_tail(product(pu1, Pmf::uniform(Alphabet(L0))), L1);
  FiniteMeasure base2 = with_uniform_tail(product(pu2, Pmf::uniform(Alphabet(L0))), L2);
  // simulator runs the rate-splitting-free construction
  BcInstance flat = inst;
  flat.K1 = flat.K2 = 1;
  double bound = bc_bounds(flat, 1.0).value("thm7");
  std::vector<double> phiw = PhiDist::instance().truncated(opt.phi_terms);
  const int n_cand = static_cast<int>(phiw.size());
  auto decode_side = [&](RaceProcess& proc0, RaceProcess& proc_a,
                         const Kernel& u0_given_ya, const Kernel& ua_given_u0ya,
                         int nua, int La, int nya, int ya, int* m0_hat,
                         int* ma_hat) {
    auto cands = proc0.list(RaceView{&u0_given_ya.row(ya), L0, -1}, n_cand);
    std::vector<double> mixw(static_cast<size_t>(nua) * L0, 0.0);
    for (int jj = 0; jj < n_cand; ++jj) {
      int u0c = head_of(cands[jj], L0);
      int m0c = tail_of(cands[jj], L0);
      const Pmf& row = ua_given_u0ya.row(u0c * nya + ya);
      for (int ua = 0; ua < nua; ++ua)
        mixw[static_cast<size_t>(ua) * L0 + m0c] += phiw[jj] * row.prob(ua);
    }
    Pmf mix = Pmf::renormalized(Alphabet::product({nua, L0}), std::move(mixw));
    RacePoint sel = proc_a.select(RaceView{&mix, La, -1});
    int headp = head_of(sel, La);
    *ma_hat = tail_of(sel, La);
    *m0_hat = headp % L0;
    return headp / L0;
  };
  auto chunks = run_chunks(opt, [&](long long, uint64_t ts) {
    rng::Stream aux(rng::derive(ts, kAuxTag));
    RaceProcess proc0(base0, rng::derive(ts, kRaceTag));
    RaceProcess proc1(base1, rng::derive(ts, kRaceTag + 1));
    RaceProcess proc2(base2, rng::derive(ts, kRaceTag + 2));
    int m0 = aux.uniform_int(L0), m1 = aux.uniform_int(L1),
        m2 = aux.uniform_int(L2);
    int u0 = head_of(proc0.select(RaceView{&pu0, L0, m0}), L0);
    // candidate sub-codewords for U1, pinned to (m0, m1)
    std::vector<double> sl(static_cast<size_t>(nu1) * L0, 0.0);
    for (int u1c = 0; u1c < nu1; ++u1c)
      sl[static_cast<size_t>(u1c) * L0 + m0] = u1_given_u0.row(u0).prob(u1c);
    Pmf enc1_head = Pmf::renormalized(Alphabet::product({nu1, L0}), std::move(sl));
    auto cands = proc1.list(RaceView{&enc1_head, L1, m1}, J);
    std::vector<double> mixw(static_cast<size_t>(nu2) * L0, 0.0);
    for (const auto& pt : cands) {
      int u1c = head_of(pt, L1) / L0;
      const Pmf& row = u2_given_u01.row(u0 * nu1 + u1c);
      for (int u2c = 0; u2c < nu2; ++u2c)
        mixw[static_cast<size_t>(u2c) * L0 + m0] += row.prob(u2c) / J;
    }
    Pmf enc2_head = Pmf::renormalized(Alphabet::product({nu2, L0}), std::move(mixw));
    int u2 = head_of(proc2.select(RaceView{&enc2_head, L2, m2}), L2) / L0;
    // resample the realized candidate index
    double tot = 0;
    for (const auto& pt : cands)
      tot += u2_given_u01.row(u0 * nu1 + head_of(pt, L1) / L0).prob(u2);
    double draw = aux.u01() * tot, accw = 0;
    int u1 = head_of(cands.back(), L1) / L0;
    for (const auto& pt : cands) {
      int u1c = head_of(pt, L1) / L0;
      accw += u2_given_u01.row(u0 * nu1 + u1c).prob(u2);
      if (draw < accw) {
        u1 = u1c;
        break;
      }
    }
    int x = inst.x_map[(u0 * nu1 + u1) * nu2 + u2];
    int yy = sample(inst.ch2.row(x), aux.u01());
    int y1 = yy / ny2, y2 = yy % ny2;
    int m01_hat, m1_hat, m02_hat, m2_hat;
    decode_side(proc0, proc1, u0_given_y1, u1_given_u0y1, nu1, L1, ny1, y1,
                &m01_hat, &m1_hat);
    decode_side(proc0, proc2, u0_given_y2, u2_given_u0y2, nu2, L2, ny2, y2,
                &m02_hat, &m2_hat);
    bool fail = m01_hat != m0 || m02_hat != m0 || m1_hat != m1 || m2_hat != m2;
    return TrialOut{fail, 0.0};
  });
  return reduce_failures("bc_common", opt, chunks, bound, "thm7");
}

EmpiricalResult simulate_dlsc(const DlscInstance& inst, const RunOptions& opt) {
  const int L1 = static_cast<int>(inst.L1), L2 = static_cast<int>(inst.L2);
  const int n2 = inst.px12.alphabet().factor_size(1);
  const int m2sz = inst.k2.output().size();
  JointPmf joint = dlsc_joint(inst);  // X1=1, X2=2, U1=4, U2=8
  Pmf pu1 = joint.marginal(4);
  Pmf pu2 = joint.marginal(8);
  Kernel u2_given_u1 = joint.conditional(8, 4);
  Kernel u1_given_u2 = joint.conditional(4, 8);
  FiniteMeasure base1 = with_uniform_tail(pu1, L1);
  FiniteMeasure base2 = with_uniform_tail(pu2, L2);
  double bound = dlsc_bounds(inst, 1.0, 1).value("phi");
  std::vector<double> phiw = PhiDist::instance().truncated(opt.phi_terms);
  const int n_cand = static_cast<int>(phiw.size());
  auto chunks = run_chunks(opt, [&](long long, uint64_t ts) {
    rng::Stream aux(rng::derive(ts, kAuxTag));
    RaceProcess proc1(base1, rng::derive(ts, kRaceTag));
    RaceProcess proc2(base2, rng::derive(ts, kRaceTag + 1));
    int xx = sample(inst.px12.pmf(), aux.u01());
    int x1 = xx / n2, x2 = xx % n2;
    RacePoint c1 = proc1.select(RaceView{&inst.k1.row(x1), L1, -1});
    RacePoint c2 = proc2.select(RaceView{&inst.k2.row(x2), L2, -1});
    int msg1 = tail_of(c1, L1), msg2 = tail_of(c2, L2);
    auto cands = proc1.list(RaceView{&pu1, L1, msg1}, n_cand);
    std::vector<double> mixw(m2sz, 0.0);
    for (int k = 0; k < n_cand; ++k) {
      const Pmf& row = u2_given_u1.row(head_of(cands[k], L1));
      for (int u2 = 0; u2 < m2sz; ++u2) mixw[u2] += phiw[k] * row.prob(u2);
    }
    Pmf mix = Pmf::renormalized(Alphabet(m2sz), std::move(mixw));
    int u2_hat = head_of(proc2.select(RaceView{&mix, L2, msg2}), L2);
    int u1_hat =
        head_of(proc1.select(RaceView{&u1_given_u2.row(u2_hat), L1, msg1}), L1);
    int z1 = inst.z1_map[u1_hat * m2sz + u2_hat];
    int z2 = inst.z2_map[u1_hat * m2sz + u2_hat];
    bool fail = inst.d1[x1 * inst.z1_size + z1] > inst.D1 ||
                inst.d2[x2 * inst.z2_size + z2] > inst.D2;
    return TrialOut{fail, 0.0};
  });
  return reduce_failures("dlsc", opt, chunks, bound, "phi");
}

EmpiricalResult simulate_mac(const MacInstance& inst, const RunOptions& opt) {
  const int L1 = static_cast<int>(inst.L1), L2 = static_cast<int>(inst.L2);
  const int nx2 = inst.px2.size();
  const int ny = inst.ch.output().size();
  JointPmf joint = mac_joint(inst);  // X1=1, X2=2, Y=4
  Kernel x1_given_y = joint.conditional(1, 4);
  Kernel x2_given_x1y = joint.conditional(2, 5);
  Kernel x1_given_x2y = joint.conditional(1, 6);
  FiniteMeasure base1 = with_uniform_tail(inst.px1, L1);
  FiniteMeasure base2 = with_uniform_tail(inst.px2, L2);
  double bound = mac_bounds(inst, 1.0, 1).value("phi");
  std::vector<double> phiw = PhiDist::instance().truncated(opt.phi_terms);
  const int n_cand = static_cast<int>(phiw.size());
  auto chunks = run_chunks(opt, [&](long long, uint64_t ts) {
    rng::Stream aux(rng::derive(ts, kAuxTag));
    RaceProcess proc1(base1, rng::derive(ts, kRaceTag));
    RaceProcess proc2(base2, rng::derive(ts, kRaceTag + 1));
    int m1 = aux.uniform_int(L1), m2 = aux.uniform_int(L2);
    int x1 = head_of(proc1.select(RaceView{&inst.px1, L1, m1}), L1);
    int x2 = head_of(proc2.select(RaceView{&inst.px2, L2, m2}), L2);
    int y = sample(inst.ch.row(x1 * nx2 + x2), aux.u01());
    auto cands = proc1.list(RaceView{&x1_given_y.row(y), L1, -1}, n_cand);
    std::vector<double> mixw(nx2, 0.0);
    for (int k = 0; k < n_cand; ++k) {
      const Pmf& row = x2_given_x1y.row(head_of(cands[k], L1) * ny + y);
      for (int v = 0; v < nx2; ++v) mixw[v] += phiw[k] * row.prob(v);
    }
    Pmf mix = Pmf::renormalized(Alphabet(nx2), std::move(mixw));
    RacePoint s2 = proc2.select(RaceView{&mix, L2, -1});
    int x2_hat = head_of(s2, L2), m2_hat = tail_of(s2, L2);
    int m1_hat = tail_of(
        proc1.select(RaceView{&x1_given_x2y.row(x2_hat * ny + y), L1, -1}), L1);
    return TrialOut{m1_hat != m1 || m2_hat != m2, 0.0};
  });
  return reduce_failures("mac", opt, chunks, bound, "phi");
}

EmpiricalResult simulate_resolvability(const ResolvabilityInstance& inst,
                                       const RunOptions& opt) {
  const int L = static_cast<int>(inst.L);
  const int ny = inst.ch.output().size();
  JointPmf joint = channel_joint({inst.px, inst.ch, 1});
  Pmf py = joint.marginal(2);
  // when the output ignores the input, every codebook mixture IS the output
  // law and the distance is identically zero
  bool constant_rows = true;
  const auto& sup = inst.px.support();
  for (size_t i = 1; i < sup.size() && constant_rows; ++i)
    constant_rows = inst.ch.row(sup[i]).weights() ==
                    inst.ch.row(sup[0]).weights();
  double gamma = std::max(std::min(1.0, std::log2(static_cast<double>(inst.L))),
                          0.5 * std::log2(static_cast<double>(inst.L)));
  double bound =
      resolvability_bounds(inst, gamma, static_cast<double>(inst.L) / 2)
          .value("pe1");
  auto chunks = run_chunks(opt, [&](long long, uint64_t ts) {
    rng::Stream aux(rng::derive(ts, kAuxTag));
    if (constant_rows) {
      for (int m = 0; m < L; ++m) aux.u01();  // keep the draw stream aligned
      return TrialOut{false, 0.0};
    }
    std::vector<double> mix(ny, 0.0);
    for (int m = 0; m < L; ++m) {
      int x = sample(inst.px, aux.u01());
      const Pmf& row = inst.ch.row(x);
      for (int y = 0; y < ny; ++y) mix[y] += row.prob(y) / L;
    }
    double tv = total_variation(mix, py.weights());
    return TrialOut{false, tv};
  });
  EmpiricalResult r;
  r.setting = "resolvability";
  r.trials = opt.trials;
  stats::NeumaierSum s1, s2;
  for (const auto& c : chunks) {
    s1.add(c.sum_aux);
    s2.add(c.sum_aux2);
  }
  double n = static_cast<double>(opt.trials);
  r.estimate = s1.value() / n;
  double var = std::max(s2.value() / n - r.estimate * r.estimate, 0.0);
  auto ci = stats::normal95(r.estimate, var, opt.trials);
  r.ci_lo = ci.lo;
  r.ci_hi = ci.hi;
  r.metric = r.estimate;
  r.metric_ci_half = ci.half();
  r.bound = bound;
  r.bound_name = "pe1";
  r.dominated = r.metric <= r.bound + 3 * r.metric_ci_half;
  return r;
}

EmpiricalResult simulate_wiretap(const WiretapInstance& inst,
                                 const RunOptions& opt) {
  const int L = static_cast<int>(inst.L), K = static_cast<int>(inst.K);
  const int nz = inst.ch2.output().factor_size(1);
  JointPmf joint = wiretap_joint(inst);  // U=1, X=2, Y=4, Z=8
  Pmf pu = joint.marginal(1);
  Kernel x_given_u = joint.conditional(2, 1);
  Kernel u_given_y = joint.conditional(1, 4);
  Kernel z_given_u = joint.conditional(8, 1);
  FiniteMeasure base = with_uniform_tail(pu, L);
  double bound = wiretap_bounds(inst).value("total");
  auto chunks = run_chunks(opt, [&](long long, uint64_t ts) {
    rng::Stream aux(rng::derive(ts, kAuxTag));
    RaceProcess proc(base, rng::derive(ts, kRaceTag));
    int m = aux.uniform_int(L);
    int kidx = aux.uniform_int(K) + 1;
    RacePoint cu = proc.nth(RaceView{&pu, L, m}, kidx);
    int u = head_of(cu, L);
    int x = sample(x_given_u.row(u), aux.u01());
    int yz = sample(inst.ch2.row(x), aux.u01());
    int y = yz / nz;
    int m_hat = tail_of(proc.select(RaceView{&u_given_y.row(y), L, -1}), L);
    // exact eavesdropper statistics of this realization
    std::vector<std::vector<double>> pz_m(L, std::vector<double>(nz, 0.0));
    std::vector<double> pz_bar(nz, 0.0);
    for (int mm = 0; mm < L; ++mm) {
      auto pts = proc.list(RaceView{&pu, L, mm}, K);
      for (const auto& pt : pts) {
        const Pmf& row = z_given_u.row(head_of(pt, L));
        for (int z = 0; z < nz; ++z) pz_m[mm][z] += row.prob(z) / K;
      }
      for (int z = 0; z < nz; ++z) pz_bar[z] += pz_m[mm][z] / L;
    }
    double eps = 0;
    for (int mm = 0; mm < L; ++mm)
      eps += total_variation(pz_m[mm], pz_bar) / L;
    return TrialOut{m_hat != m, eps};
  });
  EmpiricalResult r =
      reduce_failures("wiretap", opt, chunks, bound, "total");
  double n = static_cast<double>(opt.trials);
  stats::NeumaierSum sa, sa2, sfa;
  for (const auto& c : chunks) {
    sa.add(c.sum_aux);
    sa2.add(c.sum_aux2);
    sfa.add(c.sum_fail_aux);
  }
  r.secondary = sa.value() / n;
  r.metric = r.estimate + inst.nu * r.secondary;
  double mean_f = r.estimate;
  double e_sq = mean_f + 2 * inst.nu * sfa.value() / n +
                inst.nu * inst.nu * sa2.value() / n;
  double var = std::max(e_sq - r.metric * r.metric, 0.0);
  r.metric_ci_half = 1.959963984540054 * std::sqrt(var / n);
  r.dominated = r.metric <= r.bound + 3 * r.metric_ci_half;
  return r;
}

}  // namespace pml
