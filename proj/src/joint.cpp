#include "pml/joint.hpp"

#include <cmath>

#include "pml/config.hpp"
#include "pml/errors.hpp"
#include "pml/stats.hpp"

namespace pml {

JointPmf::JointPmf(Pmf p) : p_(std::move(p)) {
  if (p_.alphabet().factors() < 2)
    throw ValidationError("joint pmf needs a product alphabet");
  if (p_.alphabet().factors() > 32)
    throw ValidationError("joint pmf supports at most 32 factors");
}

JointPmf::JointPmf(const Pmf& input, const Kernel& k)
    : JointPmf([&] {
        std::vector<int> sizes = input.alphabet().factor_sizes();
        for (int s : k.output().factor_sizes()) sizes.push_back(s);
        return Pmf::renormalized(Alphabet::product(std::move(sizes)),
                                 joint_weights(input, k));
      }()) {}

Alphabet JointPmf::masked_alphabet(FactorMask mask) const {
  std::vector<int> sizes;
  for (int f = 0; f < factors(); ++f)
    if (mask & (1u << f)) sizes.push_back(alphabet().factor_size(f));
  if (sizes.empty()) throw ValidationError("empty factor mask");
  return Alphabet::product(std::move(sizes));
}

int JointPmf::project(int atom, FactorMask mask) const {
  const Alphabet& a = alphabet();
  int digits[32];
  a.decode(atom, std::span<int>(digits, factors()));
  int64_t idx = 0;
  for (int f = 0; f < factors(); ++f)
    if (mask & (1u << f)) idx = idx * a.factor_size(f) + digits[f];
  return static_cast<int>(idx);
}

const Pmf& JointPmf::marginal(FactorMask mask) const {
  std::scoped_lock lock(cache_mu_);
  auto it = marginal_cache_.find(mask);
  if (it != marginal_cache_.end()) return *it->second;
  Alphabet ma = masked_alphabet(mask);
  std::vector<double> w(ma.size(), 0.0);
  std::vector<stats::NeumaierSum> acc(ma.size());
  for (int atom : p_.support()) acc[project(atom, mask)].add(p_.prob(atom));
  for (int i = 0; i < ma.size(); ++i) w[i] = acc[i].value();
  auto pmf = std::make_shared<Pmf>(Pmf::renormalized(std::move(ma), std::move(w)));
  return *marginal_cache_.emplace(mask, std::move(pmf)).first->second;
}

double JointPmf::info_density(FactorMask a, FactorMask b, FactorMask c,
                              int atom) const {
  if ((a & b) || (a & c) || (b & c))
    throw ValidationError("info density masks must be disjoint");
  const double inf = std::numeric_limits<double>::infinity();
  double pabc = marginal(a | b | c).prob(project(atom, a | b | c));
  double pac = marginal(a | c).prob(project(atom, a | c));
  double pbc = marginal(b | c).prob(project(atom, b | c));
  if (c == 0) {
    if (pabc == 0) return -inf;
    if (pac == 0 || pbc == 0)
      throw AbsContinuityError("joint mass without marginal mass");
    return std::log2(pabc) - std::log2(pac) - std::log2(pbc);
  }
  double pc = marginal(c).prob(project(atom, c));
  if (pabc == 0) return -inf;
  if (pac == 0 || pbc == 0 || pc == 0)
    throw AbsContinuityError("joint mass without marginal mass");
  return std::log2(pabc) + std::log2(pc) - std::log2(pac) - std::log2(pbc);
}

double JointPmf::mutual_information(FactorMask a, FactorMask b,
                                    FactorMask c) const {
  stats::NeumaierSum s;
  for (int atom : p_.support())
    s.add(p_.prob(atom) * info_density(a, b, c, atom));
  return s.value();
}

Kernel JointPmf::conditional(FactorMask a, FactorMask b) const {
  if (a & b) throw ValidationError("conditional masks must be disjoint");
  Alphabet in = masked_alphabet(b);
  Alphabet out = masked_alphabet(a);
  const Pmf& pb = marginal(b);
  std::vector<std::vector<double>> rows(in.size(),
                                        std::vector<double>(out.size(), 0.0));
  for (int atom : p_.support()) {
    int ib = project(atom, b);
    rows[ib][project(atom, a)] += p_.prob(atom) / pb.prob(ib);
  }
  for (int ib = 0; ib < in.size(); ++ib) {
    if (pb.prob(ib) == 0)
      for (double& w : rows[ib]) w = 1.0 / out.size();
  }
  return Kernel(std::move(in), std::move(out), std::move(rows));
}

JointPmf JointPmf::power(const JointPmf& j, int n) {
  const Alphabet& a = j.alphabet();
  int f = j.factors();
  double bits = n * std::log2(static_cast<double>(a.size()));
  if (bits > std::log2(static_cast<double>(atom_budget())) + 1e-9)
    throw CapacityError("joint power exceeds atom budget");
  // regrouped alphabet: factor i holds all n copies of original factor i
  std::vector<int> sizes(f);
  for (int i = 0; i < f; ++i) {
    int64_t s = 1;
    for (int u = 0; u < n; ++u) s *= a.factor_size(i);
    sizes[i] = static_cast<int>(s);
  }
  Alphabet ra = Alphabet::product(sizes);
  std::vector<double> w(ra.size(), 0.0);
  std::vector<int> digits(f);
  std::vector<int64_t> grouped(f);
  // enumerate use-tuples (atom per use), accumulate into the regrouped index
  std::vector<int> use_atoms(n, 0);
  while (true) {
    double prod = 1.0;
    std::fill(grouped.begin(), grouped.end(), 0);
    for (int u = 0; u < n; ++u) {
      prod *= j.pmf().prob(use_atoms[u]);
      a.decode(use_atoms[u], digits);
      for (int i = 0; i < f; ++i)
        grouped[i] = grouped[i] * a.factor_size(i) + digits[i];
    }
    if (prod > 0) {
      int64_t idx = 0;
      for (int i = 0; i < f; ++i) idx = idx * sizes[i] + grouped[i];
      w[idx] += prod;
    }
    int u = n - 1;
    while (u >= 0 && ++use_atoms[u] == a.size()) use_atoms[u--] = 0;
    if (u < 0) break;
  }
  return JointPmf(Pmf::renormalized(std::move(ra), std::move(w)));
}

}  // namespace pml
