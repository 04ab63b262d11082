#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "pml/kernel.hpp"
#include "pml/measure.hpp"

namespace pml {

// Factor subsets are bitmasks over the joint's factor indices.
using FactorMask = uint32_t;

// Joint pmf over a product alphabet with cached marginals and atomwise
// information densities.
class JointPmf {
 public:
  explicit JointPmf(Pmf p);
  JointPmf(const Pmf& input, const Kernel& k);  // p(x) k(y|x)

  // copies and moves drop the marginal cache; it is rebuilt on demand
  JointPmf(const JointPmf& o) : p_(o.p_) {}
  JointPmf(JointPmf&& o) noexcept : p_(std::move(o.p_)) {}
  JointPmf& operator=(const JointPmf& o) {
    if (this != &o) {
      p_ = o.p_;
      std::scoped_lock lock(cache_mu_);
      marginal_cache_.clear();
    }
    return *this;
  }
  JointPmf& operator=(JointPmf&& o) noexcept {
    if (this != &o) {
      p_ = std::move(o.p_);
      std::scoped_lock lock(cache_mu_);
      marginal_cache_.clear();
    }
    return *this;
  }

  const Pmf& pmf() const { return p_; }
  const Alphabet& alphabet() const { return p_.alphabet(); }
  int factors() const { return p_.alphabet().factors(); }

  // Marginal over the masked factors (kept in ascending factor order).
  const Pmf& marginal(FactorMask mask) const;

  // Index of `atom`'s projection within the masked factor product.
  int project(int atom, FactorMask mask) const;

  // Conditional information density iota_{A;B|C} in bits at a flat atom of
  // the full joint; C may be empty. May be -infinity off the joint support.
  double info_density(FactorMask a, FactorMask b, FactorMask c, int atom) const;

  // E[iota_{A;B|C}] in bits (mutual information when A,B,C partition usage).
  double mutual_information(FactorMask a, FactorMask b, FactorMask c = 0) const;

  // Conditional kernel rows P_{A|B}: input = masked-B product, output =
  // masked-A product. Rows for zero-probability conditions are uniform.
  Kernel conditional(FactorMask a, FactorMask b) const;

  // n-fold i.i.d. extension; factors are regrouped so that all copies of an
  // original factor are contiguous: factor i of the result covers the n
  // copies of original factor i (alphabet size = size_i^n).
  static JointPmf power(const JointPmf& j, int n);

 private:
  Pmf p_;
  Alphabet masked_alphabet(FactorMask mask) const;
  mutable std::mutex cache_mu_;
  mutable std::map<FactorMask, std::shared_ptr<Pmf>> marginal_cache_;
};

}  // namespace pml
