#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace pml::rng {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Derive an independent stream key from (seed, tag). Used for per-trial seeds
// and for separating race streams from auxiliary sampling streams.
inline uint64_t derive(uint64_t seed, uint64_t tag) {
  return splitmix64(splitmix64(seed) ^ splitmix64(tag ^ 0xA5A5A5A5DEADBEEFull));
}

// Philox4x32-10 counter-based generator. A block is a pure function of
// (key, counter), so any stream element can be generated in any order.
inline std::array<uint32_t, 4> philox4x32(uint64_t key, uint64_t ctr_hi,
                                          uint64_t ctr_lo) {
  constexpr uint32_t kM0 = 0xD2511F53u, kM1 = 0xCD9E8D57u;
  constexpr uint32_t kW0 = 0x9E3779B9u, kW1 = 0xBB67AE85u;
  uint32_t c0 = static_cast<uint32_t>(ctr_lo);
  uint32_t c1 = static_cast<uint32_t>(ctr_lo >> 32);
  uint32_t c2 = static_cast<uint32_t>(ctr_hi);
  uint32_t c3 = static_cast<uint32_t>(ctr_hi >> 32);
  uint32_t k0 = static_cast<uint32_t>(key);
  uint32_t k1 = static_cast<uint32_t>(key >> 32);
  for (int round = 0; round < 10; ++round) {
    uint64_t p0 = static_cast<uint64_t>(kM0) * c0;
    uint64_t p1 = static_cast<uint64_t>(kM1) * c2;
    uint32_t hi0 = static_cast<uint32_t>(p0 >> 32), lo0 = static_cast<uint32_t>(p0);
    uint32_t hi1 = static_cast<uint32_t>(p1 >> 32), lo1 = static_cast<uint32_t>(p1);
    uint32_t n0 = hi1 ^ c1 ^ k0;
    uint32_t n1 = lo1;
    uint32_t n2 = hi0 ^ c3 ^ k1;
    uint32_t n3 = lo0;
    c0 = n0; c1 = n1; c2 = n2; c3 = n3;
    k0 += kW0; k1 += kW1;
  }
  return {c0, c1, c2, c3};
}

// Uniform in the open interval (0, 1); safe as input to -log(u).
inline double u01(uint64_t key, uint64_t ctr_hi, uint64_t ctr_lo) {
  auto b = philox4x32(key, ctr_hi, ctr_lo);
  uint64_t bits = (static_cast<uint64_t>(b[0]) << 32) | b[1];
  return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

// Exponential(rate) gap for position `index` of atom `atom`'s stream.
inline double exp_gap(uint64_t key, uint64_t atom, uint64_t index, double rate) {
  return -std::log(u01(key, atom, index)) / rate;
}

// Sequential counter stream for auxiliary draws (messages, channel noise,
// resampling). Still counter-based: state is just the next counter value.
class Stream {
 public:
  explicit Stream(uint64_t key) : key_(key) {}
  double u01() { return pml::rng::u01(key_, 0, ctr_++); }
  double exponential(double rate) { return -std::log(u01()) / rate; }
  // Uniform integer in [0, n)
  int uniform_int(int n) {
    return static_cast<int>(std::min<double>(n - 1, std::floor(u01() * n)));
  }

 private:
  uint64_t key_;
  uint64_t ctr_ = 0;
};

}  // namespace pml::rng
