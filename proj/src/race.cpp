#include "pml/race.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "pml/errors.hpp"
#include "pml/rng.hpp"

namespace pml {

namespace {

// Strict total order on race points within one view: key, then (atom,
// arrival) as the deterministic measure-zero tie-break.
struct KeyLess {
  bool operator()(const RacePoint& a, const RacePoint& b) const {
    if (a.key != b.key) return a.key < b.key;
    if (a.atom != b.atom) return a.atom < b.atom;
    return a.arrival < b.arrival;
  }
};

constexpr uint64_t kFastPathTag = 0xFA57;

}  // namespace

RaceProcess::RaceProcess(const FiniteMeasure& base, uint64_t seed)
    : base_(&base),
      seed_(seed),
      first_(base.size(), 0.0),
      count_(base.size(), 0) {}

double RaceProcess::arrival_time(int atom, int k) {
  if (tainted_)
    throw UsageError("process consumed by the fast-path select");
  if (base_->weight(atom) <= 0)
    throw UsageError("arrival stream queried at a zero-weight atom");
  double rate = base_->weight(atom);
  while (count_[atom] < k) {
    double gap =
        rng::exp_gap(seed_, static_cast<uint64_t>(atom),
                     static_cast<uint64_t>(count_[atom]), rate);
    if (count_[atom] == 0) {
      first_[atom] = gap;
    } else {
      double prev = count_[atom] == 1 ? first_[atom]
                                      : extra_[atom][count_[atom] - 2];
      extra_[atom].push_back(prev + gap);
    }
    ++count_[atom];
  }
  return k == 1 ? first_[atom] : extra_[atom][k - 2];
}

void RaceProcess::check_view(const RaceView& view) const {
  if (view.head->size() * view.tail_count != base_->size())
    throw ValidationError("view alphabet does not match the process base");
  if (view.tail_fixed >= view.tail_count)
    throw ValidationError("fixed tail coordinate out of range");
}

double RaceProcess::density(const RaceView& view, int atom) const {
  double p = view.prob(atom);
  if (p == 0) return 0.0;
  double mu = base_->weight(atom);
  if (mu == 0)
    throw AbsContinuityError("view mass at atom outside base support");
  return p / mu;
}

// Iterate the view's support atoms (head support x tail coordinates).
template <typename F>
static void for_each_view_atom(const RaceView& view, F&& fn) {
  for (int h : view.head->support()) {
    if (view.tail_fixed >= 0) {
      fn(h * view.tail_count + view.tail_fixed);
    } else {
      for (int m = 0; m < view.tail_count; ++m) fn(h * view.tail_count + m);
    }
  }
}

RacePoint RaceProcess::select(const RaceView& view) {
  check_view(view);
  if (tainted_) throw UsageError("process consumed by the fast-path select");
  if (fast_path_) {
    // Superposition shortcut: the first mapped key is Exp(1) and the atom is
    // view-distributed, independent of it. Taints the realization.
    tainted_ = true;
    uint64_t key = rng::derive(seed_, kFastPathTag);
    double u_atom = rng::u01(key, 1, fast_ctr_++);
    double u_key = rng::u01(key, 2, fast_ctr_++);
    int h = sample(*view.head, u_atom);
    int m = view.tail_fixed >= 0
                ? view.tail_fixed
                : static_cast<int>(std::min<double>(
                      view.tail_count - 1,
                      std::floor(rng::u01(key, 3, fast_ctr_++) * view.tail_count)));
    int atom = h * view.tail_count + m;
    double k = -std::log(u_key);
    return {atom, 1, k * density(view, atom), k};
  }
  bool found = false;
  RacePoint best{0, 0, 0.0, 0.0};
  KeyLess less;
  for_each_view_atom(view, [&](int atom) {
    double f = density(view, atom);
    if (f == 0) return;
    double t = arrival_time(atom, 1);
    RacePoint cand{atom, 1, t, t / f};
    if (!found || less(cand, best)) {
      best = cand;
      found = true;
    }
  });
  if (!found) throw ValidationError("view has empty support");
  return best;
}

RacePoint RaceProcess::nth(const RaceView& view, int j) {
  if (j < 1) throw ValidationError("mapped index must be >= 1");
  if (j == 1) return select(view);
  auto pts = list(view, j);
  return pts.back();
}

std::vector<RacePoint> RaceProcess::list(const RaceView& view, int k) {
  check_view(view);
  if (fast_path_ || tainted_)
    throw UsageError("mapped-sequence queries need the fully coupled process");
  if (k < 1) throw ValidationError("list size must be >= 1");
  KeyLess less;
  auto greater = [&](const RacePoint& a, const RacePoint& b) {
    return less(b, a);
  };
  std::priority_queue<RacePoint, std::vector<RacePoint>, decltype(greater)> heap(
      greater);
  for_each_view_atom(view, [&](int atom) {
    double f = density(view, atom);
    if (f == 0) return;
    double t = arrival_time(atom, 1);
    heap.push({atom, 1, t, t / f});
  });
  if (heap.empty()) throw ValidationError("view has empty support");
  std::vector<RacePoint> out;
  out.reserve(k);
  while (static_cast<int>(out.size()) < k) {
    RacePoint p = heap.top();
    heap.pop();
    out.push_back(p);
    double f = density(view, p.atom);
    double t = arrival_time(p.atom, p.arrival + 1);
    heap.push({p.atom, p.arrival + 1, t, t / f});
  }
  return out;
}

Rank RaceProcess::match_rank(const RaceView& p, const RaceView& q, int j) {
  check_view(q);
  if (fast_path_ || tainted_)
    throw UsageError("match_rank needs the fully coupled process");
  RacePoint sel = nth(p, j);
  double g = density(q, sel.atom);
  if (g == 0) return Rank::infinite();
  // the selected point's key under q
  double kappa = sel.time / g;
  long long before = 0;
  for_each_view_atom(q, [&](int atom) {
    double f = density(q, atom);
    if (f == 0) return;
    // count arrivals of this atom whose q-key orders before (kappa, sel);
    // each stream is extended only until its next key passes the horizon,
    // which keeps the count finite (time < kappa * f a.s. finitely often).
    int k = 1;
    while (true) {
      double key = arrival_time(atom, k) / f;
      if (key > kappa) break;
      if (key == kappa) {
        if (atom == sel.atom && k == sel.arrival) break;  // the point itself
        if (atom > sel.atom || (atom == sel.atom && k > sel.arrival)) break;
      }
      if (!(atom == sel.atom && k == sel.arrival)) ++before;
      ++k;
    }
  });
  return Rank::finite(before + 1);
}

}  // namespace pml
