#include "pml/runner.hpp"

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>

#include "pml/analytics.hpp"
#include "pml/bounds.hpp"
#include "pml/errors.hpp"
#include "pml/json_io.hpp"
#include "pml/race.hpp"
#include "pml/rng.hpp"
#include "pml/second_order.hpp"
#include "pml/stats.hpp"

namespace pml {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_ll(long long v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%lld", v);
  return buf;
}

using Row = std::vector<std::pair<std::string, std::string>>;

// Aggregate CSV with the union of all row keys: setting first, then the
// sorted parameter/value columns. Missing cells stay empty.
void write_csv(const std::string& path, const std::vector<Row>& rows) {
  std::vector<std::string> cols;
  for (const auto& row : rows)
    for (const auto& [k, v] : row)
      if (k != "setting" && std::find(cols.begin(), cols.end(), k) == cols.end())
        cols.push_back(k);
  std::sort(cols.begin(), cols.end());
  std::ofstream out(path);
  out << "setting";
  for (const auto& c : cols) out << "," << c;
  out << "\n";
  for (const auto& row : rows) {
    std::map<std::string, std::string> m(row.begin(), row.end());
    out << m["setting"];
    for (const auto& c : cols) {
      out << ",";
      auto it = m.find(c);
      if (it != m.end()) out << it->second;
    }
    out << "\n";
  }
}

nlohmann::json result_json(const EmpiricalResult& r) {
  nlohmann::json j;
  j["setting"] = r.setting;
  j["trials"] = r.trials;
  j["failures"] = r.failures;
  j["estimate"] = r.estimate;
  j["ci_lo"] = r.ci_lo;
  j["ci_hi"] = r.ci_hi;
  j["metric"] = r.metric;
  j["metric_ci_half"] = r.metric_ci_half;
  j["bound"] = r.bound;
  j["bound_name"] = r.bound_name;
  j["dominated"] = r.dominated;
  if (r.setting == "wiretap") j["secrecy_tv"] = r.secondary;
  if (!r.trace.empty()) j["trace"] = r.trace;
  return j;
}

struct PointOutcome {
  nlohmann::json report;
  std::vector<Row> rows;
  bool ok = true;
};

PointOutcome run_bound_point(const nlohmann::json& inst) {
  std::string setting = inst.at("setting").get<std::string>();
  double gamma = inst.contains("gamma") ? inst.at("gamma").get<double>() : 1.0;
  long long J = inst.contains("J") ? inst.at("J").get<long long>() : 1;
  BoundReport rep;
  if (setting == "channel" || setting == "channel_rank" ||
      setting == "channel_list") {
    nlohmann::json base = inst;
    base["setting"] = "channel";
    ChannelInstance ci = channel_instance_from_json(base);
    rep = channel_bounds(ci);
    if (inst.contains("list_J"))
      rep.set("list_j",
              channel_list_bound(ci, inst.at("list_J").get<long long>()));
    if (inst.contains("fixed_message"))
      rep.set("rank_message",
              channel_rank_message_bound(
                  ci, inst.at("fixed_message").get<long long>()));
    rep.setting = setting;
  } else if (setting == "gp") {
    rep = gp_bounds(gp_instance_from_json(inst), gamma, J);
  } else if (setting == "wz") {
    rep = wz_bounds(wz_instance_from_json(inst),
                    inst.contains("gamma_p") ? inst.at("gamma_p").get<double>() : 1.0,
                    inst.contains("gamma_c") ? inst.at("gamma_c").get<double>() : 1.0,
                    J);
  } else if (setting == "jscc") {
    rep = jscc_bounds(jscc_instance_from_json(inst), J);
  } else if (setting == "bc_marton" || setting == "bc_common") {
    rep = bc_bounds(bc_instance_from_json(inst), gamma);
  } else if (setting == "dlsc") {
    rep = dlsc_bounds(dlsc_instance_from_json(inst), gamma, std::max<long long>(J, 2));
  } else if (setting == "mac") {
    rep = mac_bounds(mac_instance_from_json(inst), gamma, std::max<long long>(J, 2));
  } else if (setting == "resolvability") {
    auto ri = resolvability_instance_from_json(inst);
    double g = inst.contains("gamma") ? gamma
                                      : 0.5 * std::log2(static_cast<double>(ri.L));
    double alpha = inst.contains("alpha") ? inst.at("alpha").get<double>()
                                          : static_cast<double>(ri.L) / 2;
    rep = resolvability_bounds(ri, g, alpha);
  } else if (setting == "wiretap") {
    rep = wiretap_bounds(wiretap_instance_from_json(inst));
  } else {
    throw ValidationError("unknown setting: " + setting);
  }
  PointOutcome out;
  out.report["setting"] = rep.setting;
  out.report["exact"] = rep.exact;
  out.report["weight_consumed"] = rep.weight_consumed;
  for (const auto& [k, v] : rep.params) out.report["params"][k] = v;
  for (const auto& [k, v] : rep.values) out.report["bounds"][k] = v;
  for (const auto& [name, value] : rep.values) {
    Row row;
    row.emplace_back("setting", rep.setting);
    for (const auto& [k, v] : rep.params) row.emplace_back(k, fmt(v));
    row.emplace_back("bound", name);
    row.emplace_back("value", fmt(value));
    out.rows.push_back(std::move(row));
  }
  return out;
}

PointOutcome run_simulate_point(const nlohmann::json& inst,
                                const RunConfig& cfg, uint64_t point_seed) {
  std::string setting = inst.at("setting").get<std::string>();
  RunOptions opt;
  opt.trials = cfg.trials;
  opt.seed = point_seed;
  opt.workers = cfg.workers;
  opt.trace_points = cfg.trace;
  opt.phi_terms = cfg.phi_terms;
  EmpiricalResult r;
  if (setting == "channel") {
    r = simulate_channel(channel_instance_from_json(inst), opt);
  } else if (setting == "channel_rank") {
    nlohmann::json base = inst;
    base["setting"] = "channel";
    if (inst.contains("fixed_message"))
      opt.fixed_message = inst.at("fixed_message").get<long long>();
    r = simulate_channel_rank(channel_instance_from_json(base), opt);
  } else if (setting == "channel_list") {
    nlohmann::json base = inst;
    base["setting"] = "channel";
    r = simulate_channel_list(channel_instance_from_json(base),
                              inst.at("list_J").get<long long>(), opt);
  } else if (setting == "gp") {
    r = simulate_gp(gp_instance_from_json(inst), opt);
  } else if (setting == "wz") {
    r = simulate_wz(wz_instance_from_json(inst), opt);
  } else if (setting == "jscc") {
    r = simulate_jscc(jscc_instance_from_json(inst), opt);
  } else if (setting == "bc_marton") {
    r = simulate_bc_marton(bc_instance_from_json(inst), opt);
  } else if (setting == "bc_common") {
    r = simulate_bc_common(bc_instance_from_json(inst), opt);
  } else if (setting == "dlsc") {
    r = simulate_dlsc(dlsc_instance_from_json(inst), opt);
  } else if (setting == "mac") {
    r = simulate_mac(mac_instance_from_json(inst), opt);
  } else if (setting == "resolvability") {
    r = simulate_resolvability(resolvability_instance_from_json(inst), opt);
  } else if (setting == "wiretap") {
    r = simulate_wiretap(wiretap_instance_from_json(inst), opt);
  } else {
    throw ValidationError("unknown setting: " + setting);
  }
  PointOutcome out;
  out.report = result_json(r);
  out.ok = r.dominated;
  Row row;
  row.emplace_back("setting", r.setting);
  for (const char* key : {"L", "L0", "L1", "L2", "J", "K", "K1", "K2", "n",
                          "k", "D", "D1", "D2", "nu", "list_J"})
    if (inst.contains(key)) row.emplace_back(key, fmt(inst.at(key).get<double>()));
  row.emplace_back("empirical", fmt(r.metric));
  row.emplace_back("ci_lo", fmt(r.ci_lo));
  row.emplace_back("ci_hi", fmt(r.ci_hi));
  row.emplace_back("bound", fmt(r.bound));
  row.emplace_back("trials", fmt_ll(r.trials));
  row.emplace_back("seed", fmt_ll(static_cast<long long>(point_seed)));
  out.rows.push_back(std::move(row));
  return out;
}

PointOutcome run_verify_lemma_point(const nlohmann::json& inst,
                                    const RunConfig& cfg, uint64_t point_seed) {
  FiniteMeasure mu(Alphabet(static_cast<int>(inst.at("mu").size())),
                   [&] {
                     std::vector<double> w;
                     for (const auto& v : inst.at("mu")) w.push_back(v.get<double>());
                     return w;
                   }());
  Pmf p = pmf_from_json(inst.at("p"));
  Pmf q = pmf_from_json(inst.at("q"));
  int j = inst.contains("j") ? inst.at("j").get<int>() : 1;
  PointOutcome out;
  out.report["setting"] = "verify-lemma";
  out.report["j"] = j;
  // Monte Carlo law of the matching rank, conditioned on the selected atom
  std::vector<long long> count(mu.size(), 0);
  std::vector<long long> exceed1(mu.size(), 0);
  std::vector<std::map<long long, long long>> hist(mu.size());
  RaceView pv{&p, 1, -1}, qv{&q, 1, -1};
  for (long long t = 0; t < cfg.trials; ++t) {
    RaceProcess proc(mu, trial_seed(point_seed, t));
    RacePoint sel = proc.nth(pv, j);
    Rank rank = proc.match_rank(pv, qv, j);
    count[sel.atom]++;
    if (rank.is_infinite || rank.value > 1) exceed1[sel.atom]++;
    hist[sel.atom][rank.is_infinite ? -1 : rank.value - 1]++;
  }
  bool all_ok = true;
  for (int u : p.support()) {
    AlphaBeta ab = alpha_beta(mu, p, q, u);
    RankLaw law = rank_law(mu, p, q, u, j);
    nlohmann::json atom_rep;
    atom_rep["atom"] = u;
    atom_rep["alpha"] = ab.alpha;
    atom_rep["beta"] = ab.beta;
    atom_rep["exact_exceed_1"] = law.prob_exceeds(1);
    double fu = p.prob(u) / mu.weight(u);
    double gu = q.prob(u) == 0 ? 0.0 : q.prob(u) / mu.weight(u);
    ExtRatio dpdq = rn_ratio(fu, gu);
    double lemma1 = pml_bound(dpdq, 1, 1, PmlBoundForm::Basic);
    atom_rep["lemma1_bound"] = lemma1;
    atom_rep["matched_trials"] = count[u];
    Row row;
    row.emplace_back("setting", "verify-lemma");
    row.emplace_back("atom", fmt_ll(u));
    row.emplace_back("alpha", fmt(ab.alpha));
    row.emplace_back("beta", fmt(ab.beta));
    row.emplace_back("exact_exceed_1", fmt(law.prob_exceeds(1)));
    row.emplace_back("lemma1_bound", fmt(lemma1));
    if (count[u] > 0) {
      double est = static_cast<double>(exceed1[u]) / count[u];
      auto ci = stats::wilson95(exceed1[u], count[u]);
      atom_rep["mc_exceed_1"] = est;
      atom_rep["ci_lo"] = ci.lo;
      atom_rep["ci_hi"] = ci.hi;
      bool ok = law.prob_exceeds(1) >= ci.lo - 1e-12 &&
                law.prob_exceeds(1) <= ci.hi + 1e-12;
      atom_rep["exact_within_ci"] = ok;
      all_ok = all_ok && ok;
      // empirical TV against the exact law
      double tv = 0;
      for (const auto& [val, cnt] : hist[u]) {
        double emp = static_cast<double>(cnt) / count[u];
        double exact = (val >= 0 && val < static_cast<long long>(law.pmf.size()))
                           ? law.pmf[val]
                           : 0.0;
        tv += std::abs(emp - exact);
      }
      tv = tv / 2 + law.tail / 2;
      atom_rep["mc_law_tv"] = tv;
      row.emplace_back("estimate", fmt(est));
      row.emplace_back("ci_lo", fmt(ci.lo));
      row.emplace_back("ci_hi", fmt(ci.hi));
      row.emplace_back("law_tv", fmt(tv));
    }
    row.emplace_back("trials", fmt_ll(cfg.trials));
    row.emplace_back("seed", fmt_ll(static_cast<long long>(point_seed)));
    out.rows.push_back(std::move(row));
    out.report["atoms"].push_back(atom_rep);
  }
  out.ok = all_ok;
  return out;
}

PointOutcome run_dispersion_point(const nlohmann::json& inst) {
  PointOutcome out;
  std::string mode =
      inst.contains("mode") ? inst.at("mode").get<std::string>() : "jscc";
  if (mode == "gp_rate") {
    JointPmf usy = joint_from_json(inst.at("joint_usy"));
    double n = inst.at("n").get<double>();
    double eps = inst.at("eps").get<double>();
    double alpha = inst.contains("alpha") ? inst.at("alpha").get<double>() : 1.0;
    double log_l = gp_rate_log_l(usy, n, eps, alpha);
    out.report["setting"] = "dispersion";
    out.report["mode"] = "gp_rate";
    out.report["log2_L"] = log_l;
    Row row;
    row.emplace_back("setting", "dispersion");
    row.emplace_back("n", fmt(n));
    row.emplace_back("eps", fmt(eps));
    row.emplace_back("log2_L", fmt(log_l));
    out.rows.push_back(std::move(row));
    return out;
  }
  // JSCC blocklength check: channel side from (p_x, channel), source side
  // from (p_w, d, D) through the rate-distortion solver
  Pmf pw = pmf_from_json(inst.at("p_w"));
  std::vector<double> d;
  {
    std::function<void(const nlohmann::json&)> flat = [&](const nlohmann::json& v) {
      if (v.is_array() && !v.empty() && v.front().is_array())
        for (const auto& r : v) flat(r);
      else
        for (const auto& x : v) d.push_back(x.get<double>());
    };
    flat(inst.at("d"));
  }
  int z_size = inst.at("z_size").get<int>();
  double D = inst.at("D").get<double>();
  // n and k are analysis blocklengths here, not powering instructions; the
  // (C, V) pair always comes from the single-letter channel
  ChannelInstance ch{pmf_from_json(inst.at("p_x")),
                     kernel_from_json(inst.at("channel")), 1};
  JointPmf jxy = channel_joint(ch);
  DispersionInputs in;
  in.C = jxy.mutual_information(1, 2);
  stats::NeumaierSum sq;
  for (int atom : jxy.pmf().support()) {
    double i = jxy.info_density(1, 2, 0, atom);
    sq.add(jxy.pmf().prob(atom) * i * i);
  }
  in.V = std::max(sq.value() - in.C * in.C, 0.0);
  RdSolution rd = ba_rd(pw, d, z_size, D);
  in.RD = rd.rate_bits;
  stats::NeumaierSum jm, jsq;
  for (int w = 0; w < pw.size(); ++w) {
    double jv = d_tilted(rd, d, z_size, w, D);
    jm.add(pw.prob(w) * jv);
    jsq.add(pw.prob(w) * jv * jv);
  }
  in.VD = std::max(jsq.value() - jm.value() * jm.value(), 0.0);
  in.eps = inst.at("eps").get<double>();
  in.n = inst.at("n").get<double>();
  in.k = inst.at("k").get<double>();
  if (inst.contains("constants")) {
    const auto& c = inst.at("constants");
    if (c.contains("alpha")) in.alpha = c.at("alpha").get<double>();
    if (c.contains("beta")) in.beta = c.at("beta").get<double>();
    if (c.contains("eta")) in.eta = c.at("eta").get<double>();
    if (c.contains("k0")) in.k0 = c.at("k0").get<double>();
  }
  BlocklengthCheck chk = jscc_blocklength_check(in);
  out.report["setting"] = "dispersion";
  out.report["mode"] = "jscc";
  out.report["C"] = in.C;
  out.report["V"] = in.V;
  out.report["RD"] = in.RD;
  out.report["VD"] = in.VD;
  out.report["lhs"] = chk.lhs;
  out.report["rhs"] = chk.rhs;
  out.report["satisfied"] = chk.satisfied;
  Row row;
  row.emplace_back("setting", "dispersion");
  row.emplace_back("n", fmt(in.n));
  row.emplace_back("k", fmt(in.k));
  row.emplace_back("eps", fmt(in.eps));
  row.emplace_back("lhs", fmt(chk.lhs));
  row.emplace_back("rhs", fmt(chk.rhs));
  row.emplace_back("satisfied", chk.satisfied ? "1" : "0");
  out.rows.push_back(std::move(row));
  return out;
}

void apply_override(nlohmann::json* inst, const std::string& key, double v) {
  // integral parameters stay integral in the instance document
  double r = std::round(v);
  if (std::abs(v - r) < 1e-9 && key != "D" && key != "D1" && key != "D2" &&
      key != "nu" && key != "gamma" && key != "eps")
    (*inst)[key] = static_cast<long long>(r);
  else
    (*inst)[key] = v;
}

}  // namespace

int run(const RunConfig& cfg) {
  namespace fs = std::filesystem;
  nlohmann::json inst = load_json_file(cfg.instance_path);
  // sweep cross product
  std::vector<std::map<std::string, double>> points{{}};
  for (const auto& [key, vals] : cfg.sweeps) {
    std::vector<std::map<std::string, double>> next;
    for (const auto& pt : points)
      for (double v : vals) {
        auto p2 = pt;
        p2[key] = v;
        next.push_back(std::move(p2));
      }
    points = std::move(next);
    if (static_cast<long long>(points.size()) > cfg.sweep_cap)
      throw ValidationError("sweep cross product exceeds the configured cap");
  }
  fs::create_directories(cfg.out_dir);
  std::vector<Row> rows;
  bool all_ok = true;
  for (size_t i = 0; i < points.size(); ++i) {
    nlohmann::json pt_inst = inst;
    for (const auto& [k, v] : points[i]) apply_override(&pt_inst, k, v);
    uint64_t point_seed = points.size() == 1
                              ? cfg.seed
                              : rng::derive(cfg.seed, 0x9021ull + i);
    auto t0 = std::chrono::steady_clock::now();
    PointOutcome out;
    if (cfg.subcommand == "bound") {
      out = run_bound_point(pt_inst);
    } else if (cfg.subcommand == "simulate") {
      out = run_simulate_point(pt_inst, cfg, point_seed);
    } else if (cfg.subcommand == "verify-lemma") {
      out = run_verify_lemma_point(pt_inst, cfg, point_seed);
    } else if (cfg.subcommand == "dispersion") {
      out = run_dispersion_point(pt_inst);
    } else {
      throw ValidationError("unknown subcommand: " + cfg.subcommand);
    }
    auto t1 = std::chrono::steady_clock::now();
    out.report["wall_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    out.report["seed"] = point_seed;
    for (const auto& [k, v] : points[i]) out.report["sweep"][k] = v;
    std::ofstream rep(fs::path(cfg.out_dir) /
                      ("report_" + std::to_string(i) + ".json"));
    rep << out.report.dump(2) << "\n";
    for (auto& row : out.rows) {
      for (const auto& [k, v] : points[i]) {
        bool present = false;
        for (auto& [rk, rv] : row) present = present || rk == k;
        if (!present) row.emplace_back(k, fmt(v));
      }
      rows.push_back(std::move(row));
    }
    all_ok = all_ok && out.ok;
  }
  write_csv((fs::path(cfg.out_dir) / "results.csv").string(), rows);
  return all_ok ? 0 : 1;
}

}  // namespace pml
