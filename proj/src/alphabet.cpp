#include "pml/alphabet.hpp"

#include <cstdint>

#include "pml/config.hpp"
#include "pml/errors.hpp"

namespace pml {

Alphabet::Alphabet(int size, std::vector<std::string> labels)
    : size_(size), factor_sizes_{size}, labels_(std::move(labels)) {
  if (size < 1) throw ValidationError("alphabet size must be >= 1");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != size)
    throw ValidationError("label count does not match alphabet size");
}

Alphabet Alphabet::product(std::vector<int> factor_sizes) {
  if (factor_sizes.empty()) throw ValidationError("empty factor list");
  int64_t total = 1;
  for (int s : factor_sizes) {
    if (s < 1) throw ValidationError("factor size must be >= 1");
    total *= s;
    if (total > atom_budget())
      throw CapacityError("product alphabet exceeds atom budget");
  }
  Alphabet a(static_cast<int>(total));
  a.factor_sizes_ = std::move(factor_sizes);
  return a;
}

Alphabet Alphabet::power(const Alphabet& a, int n) {
  if (n < 1) throw ValidationError("power requires n >= 1");
  std::vector<int> sizes;
  sizes.reserve(static_cast<size_t>(a.factors()) * n);
  for (int i = 0; i < n; ++i)
    for (int f = 0; f < a.factors(); ++f) sizes.push_back(a.factor_size(f));
  return product(std::move(sizes));
}

void Alphabet::decode(int index, std::span<int> out) const {
  for (int i = factors() - 1; i >= 0; --i) {
    out[i] = index % factor_sizes_[i];
    index /= factor_sizes_[i];
  }
}

int Alphabet::encode(std::span<const int> tuple) const {
  int64_t idx = 0;
  for (int i = 0; i < factors(); ++i) {
    if (tuple[i] < 0 || tuple[i] >= factor_sizes_[i])
      throw ValidationError("tuple coordinate out of range");
    idx = idx * factor_sizes_[i] + tuple[i];
  }
  return static_cast<int>(idx);
}

}  // namespace pml
