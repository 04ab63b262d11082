#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pml {

// Finite indexed alphabet. Product alphabets keep their factor sizes so that
// an atom index maps to a mixed-radix tuple (first factor is most
// significant).
class Alphabet {
 public:
  explicit Alphabet(int size, std::vector<std::string> labels = {});
  static Alphabet product(std::vector<int> factor_sizes);
  static Alphabet power(const Alphabet& a, int n);

  int size() const { return size_; }
  int factors() const { return static_cast<int>(factor_sizes_.size()); }
  int factor_size(int i) const { return factor_sizes_[i]; }
  const std::vector<int>& factor_sizes() const { return factor_sizes_; }
  const std::vector<std::string>& labels() const { return labels_; }

  void decode(int index, std::span<int> out) const;
  int encode(std::span<const int> tuple) const;

  bool operator==(const Alphabet& o) const {
    return size_ == o.size_ && factor_sizes_ == o.factor_sizes_;
  }

 private:
  int size_;
  std::vector<int> factor_sizes_;  // single entry for an atomic alphabet
  std::vector<std::string> labels_;
};

}  // namespace pml
