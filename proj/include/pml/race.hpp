#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "pml/measure.hpp"

namespace pml {

// One point of the race: an atom of the base alphabet, which arrival at that
// atom, its raw arrival time, and the tilted key time/(dP/dmu)(atom) under
// the view that produced it.
struct RacePoint {
  int atom;
  int arrival;  // 1-based arrival index within the atom's stream
  double time;
  double key;
};

// Matching rank; INFINITE when the selected atom carries no mass under the
// second view.
struct Rank {
  long long value;
  bool is_infinite;
  static Rank finite(long long v) { return {v, false}; }
  static Rank infinite() { return {-1, true}; }
};

// A tilted view of the race: a pmf over the leading factor block, optionally
// extended by one trailing uniform "message" coordinate of size tail_count
// (fixed to tail_fixed, or uniform when tail_fixed < 0). Atom layout is
// head_atom * tail_count + tail.
struct RaceView {
  const Pmf* head;
  int tail_count = 1;
  int tail_fixed = -1;

  double prob(int atom) const {
    int h = atom / tail_count, m = atom % tail_count;
    double hp = head->prob(h);
    if (tail_fixed >= 0) return m == tail_fixed ? hp : 0.0;
    return hp / tail_count;
  }
  int support_size() const {
    int s = static_cast<int>(head->support().size());
    return tail_fixed >= 0 ? s : s * tail_count;
  }
};

// One realization of a Poisson process with intensity base x Lebesgue on
// atoms x [0,inf). Arrival streams are materialized lazily per atom; for a
// fixed (seed, atom) the stream is identical regardless of query order, so
// every view reads the same realization.
class RaceProcess {
 public:
  RaceProcess(const FiniteMeasure& base, uint64_t seed);

  const FiniteMeasure& base() const { return *base_; }

  // argmin of time/(dP/dmu) over the view's support: the first mapped point.
  RacePoint select(const RaceView& view);
  // j-th point of the mapped sequence (ascending key order), j >= 1.
  RacePoint nth(const RaceView& view, int j);
  // First k mapped points, ascending keys.
  std::vector<RacePoint> list(const RaceView& view, int k);
  // Rank of the j-th P-point within the Q-ordered sequence.
  Rank match_rank(const RaceView& p, const RaceView& q, int j);

  // k-th arrival time at an atom (1-based), extending the stream as needed.
  double arrival_time(int atom, int k);
  int materialized(int atom) const { return count_[atom]; }

  // Opt-in superposition shortcut for a single select() on this process; any
  // further query throws. Forbidden whenever a second view or match_rank
  // will touch the same realization.
  void enable_select_fast_path() { fast_path_ = true; }

 private:
  void check_view(const RaceView& view) const;
  double density(const RaceView& view, int atom) const;

  const FiniteMeasure* base_;
  uint64_t seed_;
  std::vector<double> first_;
  std::vector<int> count_;
  std::unordered_map<int, std::vector<double>> extra_;
  bool fast_path_ = false;
  bool tainted_ = false;
  uint64_t fast_ctr_ = 0;
};

}  // namespace pml
