#include "pml/config.hpp"

#include <atomic>
#include <cstring>

namespace pml {

namespace {

int64_t initial_budget() {
  if (const char* env = std::getenv("PMLLAB_ATOM_BUDGET")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return int64_t{1} << 24;
}

std::atomic<int64_t>& budget() {
  static std::atomic<int64_t> b{initial_budget()};
  return b;
}

}  // namespace

int64_t atom_budget() { return budget().load(); }
void set_atom_budget(int64_t atoms) { budget().store(atoms); }

}  // namespace pml
