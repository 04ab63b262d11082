#include "pml/kernel.hpp"

#include <cmath>

#include "pml/config.hpp"
#include "pml/errors.hpp"

namespace pml {

Kernel::Kernel(Alphabet input, Alphabet output,
               std::vector<std::vector<double>> rows)
    : in_(std::move(input)) {
  if (static_cast<int>(rows.size()) != in_.size())
    throw ValidationError("kernel row count does not match input alphabet");
  rows_.reserve(rows.size());
  for (auto& r : rows) rows_.emplace_back(output, std::move(r));
}

Kernel::Kernel(Alphabet input, std::vector<Pmf> rows)
    : in_(std::move(input)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != in_.size())
    throw ValidationError("kernel row count does not match input alphabet");
  for (const auto& r : rows_)
    if (!(r.alphabet() == rows_.front().alphabet()))
      throw ValidationError("kernel rows disagree on output alphabet");
}

Kernel power(const Kernel& k, int n) {
  const Alphabet& in = k.input();
  const Alphabet& out = k.output();
  double bits = n * (std::log2(static_cast<double>(in.size())) +
                     std::log2(static_cast<double>(out.size())));
  if (bits > std::log2(static_cast<double>(atom_budget())) + 1e-9)
    throw CapacityError("kernel power exceeds atom budget");
  Alphabet pin = Alphabet::power(in, n);
  Alphabet pout = Alphabet::power(out, n);
  std::vector<Pmf> rows;
  rows.reserve(pin.size());
  std::vector<int> xs(n);
  for (int x = 0; x < pin.size(); ++x) {
    {
      int rem = x;
      for (int u = n - 1; u >= 0; --u) {
        xs[u] = rem % in.size();
        rem /= in.size();
      }
    }
    std::vector<double> w(pout.size());
    for (int y = 0; y < pout.size(); ++y) {
      double prod = 1.0;
      int rem = y;
      for (int u = n - 1; u >= 0; --u) {
        int digit = rem % out.size();
        rem /= out.size();
        prod *= k.prob(xs[u], digit);
      }
      w[y] = prod;
    }
    rows.push_back(Pmf::renormalized(pout, std::move(w)));
  }
  return Kernel(std::move(pin), std::move(rows));
}

std::vector<double> joint_weights(const Pmf& p, const Kernel& k) {
  if (!(p.alphabet() == k.input()))
    throw ValidationError("pmf alphabet does not match kernel input");
  int ny = k.output().size();
  std::vector<double> w(static_cast<size_t>(p.size()) * ny);
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < ny; ++y)
      w[static_cast<size_t>(x) * ny + y] = p.prob(x) * k.prob(x, y);
  return w;
}

}  // namespace pml
