#include "pml/json_io.hpp"

#include <fstream>

#include "pml/errors.hpp"

namespace pml {

namespace {

std::vector<double> doubles(const nlohmann::json& j) {
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(v.get<double>());
  return out;
}

// flattens nested numeric arrays row-major
void flatten_ints(const nlohmann::json& j, std::vector<int>* out) {
  if (j.is_array() && !j.empty() && j.front().is_array()) {
    for (const auto& row : j) flatten_ints(row, out);
  } else {
    for (const auto& v : j) out->push_back(v.get<int>());
  }
}

void flatten_doubles(const nlohmann::json& j, std::vector<double>* out) {
  if (j.is_array() && !j.empty() && j.front().is_array()) {
    for (const auto& row : j) flatten_doubles(row, out);
  } else {
    for (const auto& v : j) out->push_back(v.get<double>());
  }
}

int json_int(const nlohmann::json& j, const char* key, int fallback) {
  return j.contains(key) ? j.at(key).get<int>() : fallback;
}

double json_double(const nlohmann::json& j, const char* key, double fallback) {
  return j.contains(key) ? j.at(key).get<double>() : fallback;
}

}  // namespace

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

Pmf pmf_from_json(const nlohmann::json& j) {
  std::vector<double> w = doubles(j.at("weights"));
  if (j.contains("factors")) {
    std::vector<int> f;
    for (const auto& v : j.at("factors")) f.push_back(v.get<int>());
    return Pmf(Alphabet::product(std::move(f)), std::move(w));
  }
  std::vector<std::string> labels;
  if (j.contains("alphabet"))
    for (const auto& v : j.at("alphabet")) labels.push_back(v.get<std::string>());
  int size = static_cast<int>(w.size());
  return Pmf(Alphabet(size, std::move(labels)), std::move(w));
}

Kernel kernel_from_json(const nlohmann::json& j) {
  std::vector<std::vector<double>> rows;
  for (const auto& r : j.at("rows")) rows.push_back(doubles(r));
  if (rows.empty()) throw ValidationError("kernel needs at least one row");
  Alphabet out = [&] {
    if (j.contains("output_factors")) {
      std::vector<int> f;
      for (const auto& v : j.at("output_factors")) f.push_back(v.get<int>());
      return Alphabet::product(std::move(f));
    }
    return Alphabet(static_cast<int>(rows.front().size()));
  }();
  int nin = static_cast<int>(rows.size());
  return Kernel(Alphabet(nin), std::move(out), std::move(rows));
}

JointPmf joint_from_json(const nlohmann::json& j) {
  return JointPmf(pmf_from_json(j));
}

ChannelInstance channel_instance_from_json(const nlohmann::json& j) {
  Pmf px = pmf_from_json(j.at("p_x"));
  Kernel ch = kernel_from_json(j.at("channel"));
  int n = json_int(j, "n", 1);
  if (n > 1) {
    px = power(px, n);
    ch = power(ch, n);
  }
  return {std::move(px), std::move(ch), j.at("L").get<long long>()};
}

GpInstance gp_instance_from_json(const nlohmann::json& j) {
  Pmf ps = pmf_from_json(j.at("p_s"));
  Kernel pus = kernel_from_json(j.at("p_u_given_s"));
  Kernel ch = kernel_from_json(j.at("channel"));
  std::vector<int> x_map;
  flatten_ints(j.at("x_map"), &x_map);
  int x_size = j.at("x_size").get<int>();
  int ns = ps.size(), nu = pus.output().size();
  int n = json_int(j, "n", 1);
  if (n > 1) {
    ch = power_grouped_input2(ch, x_size, ns, n);
    x_map = power_map(x_map, {nu, ns}, x_size, n);
    ps = power(ps, n);
    pus = power(pus, n);
    int xs = 1;
    for (int i = 0; i < n; ++i) xs *= x_size;
    x_size = xs;
  }
  return {std::move(ps), std::move(pus), std::move(x_map), x_size,
          std::move(ch), j.at("L").get<long long>()};
}

WzInstance wz_instance_from_json(const nlohmann::json& j) {
  Pmf px = pmf_from_json(j.at("p_x"));
  Kernel side = kernel_from_json(j.at("side"));
  Kernel pux = kernel_from_json(j.at("p_u_given_x"));
  std::vector<int> z_map;
  flatten_ints(j.at("z_map"), &z_map);
  std::vector<double> d;
  flatten_doubles(j.at("d"), &d);
  int z_size = j.at("z_size").get<int>();
  int nx = px.size(), ny = side.output().size(), nu = pux.output().size();
  int n = json_int(j, "n", 1);
  if (n > 1) {
    z_map = power_map(z_map, {nu, ny}, z_size, n);
    d = power_distortion(d, nx, z_size, n);
    px = power(px, n);
    side = power(side, n);
    pux = power(pux, n);
    int zs = 1;
    for (int i = 0; i < n; ++i) zs *= z_size;
    z_size = zs;
  }
  return {std::move(px), std::move(side), std::move(pux), std::move(z_map),
          z_size,         std::move(d),   j.at("D").get<double>(),
          j.at("L").get<long long>()};
}

JsccInstance jscc_instance_from_json(const nlohmann::json& j) {
  Pmf pw = pmf_from_json(j.at("p_w"));
  Pmf px = pmf_from_json(j.at("p_x"));
  Kernel ch = kernel_from_json(j.at("channel"));
  Pmf pz = pmf_from_json(j.at("p_z"));
  std::vector<double> d;
  flatten_doubles(j.at("d"), &d);
  int nw = pw.size(), nz = pz.size();
  int n = json_int(j, "n", 1);
  int k = json_int(j, "k", 1);
  if (k > 1) {
    d = power_distortion(d, nw, nz, k);
    pw = power(pw, k);
    pz = power(pz, k);
  }
  if (n > 1) {
    px = power(px, n);
    ch = power(ch, n);
  }
  return {std::move(pw), std::move(px), std::move(ch),
          std::move(pz), std::move(d),  j.at("D").get<double>()};
}

BcInstance bc_instance_from_json(const nlohmann::json& j) {
  bool common = j.contains("p_u012");
  JointPmf aux = joint_from_json(j.at(common ? "p_u012" : "p_u12"));
  Kernel ch2 = kernel_from_json(j.at("channel2"));
  std::vector<int> x_map;
  flatten_ints(j.at("x_map"), &x_map);
  int x_size = j.at("x_size").get<int>();
  std::vector<int> factor_sizes = aux.alphabet().factor_sizes();
  int n = json_int(j, "n", 1);
  if (n > 1) {
    x_map = power_map(x_map, factor_sizes, x_size, n);
    aux = JointPmf::power(aux, n);
    ch2 = power_grouped_output2(ch2, n);
    int xs = 1;
    for (int i = 0; i < n; ++i) xs *= x_size;
    x_size = xs;
  }
  BcInstance inst{std::move(aux),
                  common,
                  std::move(x_map),
                  x_size,
                  std::move(ch2),
                  j.contains("L0") ? j.at("L0").get<long long>() : 1,
                  j.at("L1").get<long long>(),
                  j.at("L2").get<long long>(),
                  j.contains("J") ? j.at("J").get<long long>() : 1,
                  json_int(j, "K1", 1),
                  json_int(j, "K2", 1)};
  return inst;
}

DlscInstance dlsc_instance_from_json(const nlohmann::json& j) {
  JointPmf px12 = joint_from_json(j.at("p_x12"));
  Kernel k1 = kernel_from_json(j.at("k1"));
  Kernel k2 = kernel_from_json(j.at("k2"));
  std::vector<int> z1_map, z2_map;
  flatten_ints(j.at("z1_map"), &z1_map);
  flatten_ints(j.at("z2_map"), &z2_map);
  std::vector<double> d1, d2;
  flatten_doubles(j.at("d1"), &d1);
  flatten_doubles(j.at("d2"), &d2);
  int z1_size = j.at("z1_size").get<int>();
  int z2_size = j.at("z2_size").get<int>();
  int n1 = px12.alphabet().factor_size(0), n2 = px12.alphabet().factor_size(1);
  int m1 = k1.output().size(), m2 = k2.output().size();
  int n = json_int(j, "n", 1);
  if (n > 1) {
    z1_map = power_map(z1_map, {m1, m2}, z1_size, n);
    z2_map = power_map(z2_map, {m1, m2}, z2_size, n);
    d1 = power_distortion(d1, n1, z1_size, n);
    d2 = power_distortion(d2, n2, z2_size, n);
    px12 = JointPmf::power(px12, n);
    k1 = power(k1, n);
    k2 = power(k2, n);
    int zs1 = 1, zs2 = 1;
    for (int i = 0; i < n; ++i) {
      zs1 *= z1_size;
      zs2 *= z2_size;
    }
    z1_size = zs1;
    z2_size = zs2;
  }
  return {std::move(px12), std::move(k1), std::move(k2),
          std::move(z1_map), std::move(z2_map), z1_size, z2_size,
          std::move(d1), std::move(d2),
          j.at("D1").get<double>(), j.at("D2").get<double>(),
          j.at("L1").get<long long>(), j.at("L2").get<long long>()};
}

MacInstance mac_instance_from_json(const nlohmann::json& j) {
  Pmf px1 = pmf_from_json(j.at("p_x1"));
  Pmf px2 = pmf_from_json(j.at("p_x2"));
  Kernel ch = kernel_from_json(j.at("channel"));
  int n1 = px1.size(), n2 = px2.size();
  int n = json_int(j, "n", 1);
  if (n > 1) {
    ch = power_grouped_input2(ch, n1, n2, n);
    px1 = power(px1, n);
    px2 = power(px2, n);
  }
  return {std::move(px1), std::move(px2), std::move(ch),
          j.at("L1").get<long long>(), j.at("L2").get<long long>()};
}

ResolvabilityInstance resolvability_instance_from_json(const nlohmann::json& j) {
  Pmf px = pmf_from_json(j.at("p_x"));
  Kernel ch = kernel_from_json(j.at("channel"));
  int n = json_int(j, "n", 1);
  if (n > 1) {
    px = power(px, n);
    ch = power(ch, n);
  }
  return {std::move(px), std::move(ch), j.at("L").get<long long>(),
          j.at("J").get<long long>()};
}

WiretapInstance wiretap_instance_from_json(const nlohmann::json& j) {
  JointPmf pux = joint_from_json(j.at("p_ux"));
  Kernel ch2 = kernel_from_json(j.at("channel2"));
  int n = json_int(j, "n", 1);
  if (n > 1) {
    pux = JointPmf::power(pux, n);
    ch2 = power_grouped_output2(ch2, n);
  }
  return {std::move(pux), std::move(ch2), j.at("L").get<long long>(),
          j.at("K").get<long long>(), j.at("J").get<long long>(),
          json_double(j, "nu", 1.0)};
}

}  // namespace pml
