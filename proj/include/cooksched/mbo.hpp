#pragma once

// Migrating Birds Optimization. Solutions fly in a V: a leader and two tails.
// The leader evaluates k neighbors; every follower evaluates k - x of its own
// and borrows x unused neighbors from the bird in front of it. The variants
// differ in how borrowed neighbors are used:
//   IC (immediate consideration): own and borrowed neighbors compete together.
//   DC (delayed consideration): borrowed ones count only if no own neighbor improves.
// and in whether they flow further down the tail:
//   M (multi-step sharing): borrowed neighbors may be passed on again.
//   S (single-step sharing): only a bird's own neighbors are passed on.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <deque>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "cooksched/error.hpp"
#include "cooksched/instance.hpp"
#include "cooksched/neighborhood.hpp"
#include "cooksched/rng.hpp"
#include "cooksched/run.hpp"

namespace cooksched {

enum class Consideration { Immediate, Delayed };
enum class Sharing { Multi, Single };

struct Bird {
  Tour tour;
  double cost = 0.0;
  int id = 0;
};

/// A neighbor solution; `source` is the id of the bird that generated it.
struct Candidate {
  Tour tour;
  double cost = 0.0;
  int source = 0;
};

struct MboParams {
  std::size_t n_birds = 21;
  std::size_t k = 7;
  std::size_t x = 1;
  std::size_t m = 1;  // flock tours per leader
  std::uint64_t K = 40'000;
  Consideration consideration = Consideration::Delayed;
  Sharing sharing = Sharing::Single;
  Scheme scheme = Scheme::Insertion;
};

inline std::string variant_name(Consideration c, Sharing s) {
  return std::string("MBO-") + (c == Consideration::Immediate ? "IC" : "DC") + "-" +
         (s == Sharing::Multi ? "M" : "S");
}

/// Evaluations consumed by one pass over the leader and both tails.
inline std::uint64_t evaluations_per_flock_tour(const MboParams& p) {
  return p.k + (p.n_birds - 1) * (p.k - p.x);
}

inline void validate(const MboParams& p) {
  if (p.n_birds < 3 || p.n_birds % 2 == 0) throw ConfigError("MBO: n_birds must be odd and >= 3");
  if (p.x < 1) throw ConfigError("MBO: x must be at least 1");
  if (p.k <= p.x) throw ConfigError("MBO: k must exceed x");
  if (p.k < 2 * p.x + 1) throw ConfigError("MBO: the leader needs k >= 2x + 1 to feed both tails");
  if (p.sharing == Sharing::Single && p.x > 1) {
    throw ConfigError("MBO: single-step sharing only supports x = 1");
  }
  if (p.m < 1) throw ConfigError("MBO: m must be at least 1");
  if (p.K < evaluations_per_flock_tour(p)) {
    throw ConfigError("MBO: K = " + std::to_string(p.K) + " is below one flock tour (" +
                      std::to_string(evaluations_per_flock_tour(p)) + " evaluations)");
  }
}

enum class Side { Left, Right };

struct Flock {
  Bird leader;
  std::deque<Bird> left;
  std::deque<Bird> right;
  Side rotation_side = Side::Left;

  std::size_t size() const { return 1 + left.size() + right.size(); }

  template <typename F>
  void for_each(F&& f) const {
    f(leader);
    for (const auto& b : left) f(b);
    for (const auto& b : right) f(b);
  }
};

/// The leader moves to the back of one tail and that tail's head takes over;
/// the side alternates on every call.
inline Flock rotate_leader(Flock flock) {
  auto& tail = flock.rotation_side == Side::Left ? flock.left : flock.right;
  if (tail.empty()) throw ValidationError("rotate_leader: empty tail");
  Bird next = std::move(tail.front());
  tail.pop_front();
  tail.push_back(std::move(flock.leader));
  flock.leader = std::move(next);
  flock.rotation_side = flock.rotation_side == Side::Left ? Side::Right : Side::Left;
  return flock;
}

struct FollowerOutcome {
  Bird bird;
  std::vector<Candidate> share_out;
  bool improved = false;
  bool adopted_borrowed = false;
};

namespace detail {

inline std::size_t argmin(std::span<const Candidate> c) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i].cost < c[best].cost) best = i;
  }
  return best;
}

/// Up to `count` cheapest entries of `pool` other than index `skip`, ascending
/// by cost (stable on ties).
inline std::vector<Candidate> best_unused(std::vector<Candidate>& pool, std::size_t skip,
                                          std::size_t count) {
  std::vector<std::size_t> idx;
  idx.reserve(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (i != skip) idx.push_back(i);
  }
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return pool[a].cost < pool[b].cost; });
  std::vector<Candidate> out;
  for (std::size_t i = 0; i < idx.size() && out.size() < count; ++i) out.push_back(std::move(pool[idx[i]]));
  return out;
}

inline constexpr std::size_t kNone = static_cast<std::size_t>(-1);

}  // namespace detail

/// One follower update. `own` holds the k - x neighbors the bird generated,
/// `borrowed` the x neighbors handed down from the bird in front. Returns the
/// (possibly replaced) bird and the x best unused neighbors it passes on.
inline FollowerOutcome follower_step(Bird current, std::vector<Candidate> own,
                                     std::vector<Candidate> borrowed, Consideration consideration,
                                     Sharing sharing, std::size_t x) {
  if (own.empty()) throw ValidationError("follower_step: no own neighbors");
  if (borrowed.size() > x) {
    throw ValidationError("follower_step: " + std::to_string(borrowed.size()) +
                          " borrowed neighbors but x = " + std::to_string(x));
  }
  const std::size_t own_count = own.size();
  std::vector<Candidate> pool = std::move(own);
  for (auto& b : borrowed) pool.push_back(std::move(b));
  const std::span<const Candidate> own_view(pool.data(), own_count);
  const std::span<const Candidate> borrowed_view(pool.data() + own_count, pool.size() - own_count);

  std::size_t adopted = detail::kNone;
  if (consideration == Consideration::Immediate) {
    const std::size_t best = detail::argmin(pool);
    if (pool[best].cost < current.cost) adopted = best;
  } else {
    const std::size_t best_own = detail::argmin(own_view);
    if (own_view[best_own].cost < current.cost) {
      adopted = best_own;
    } else if (!borrowed_view.empty()) {
      const std::size_t best_borrowed = own_count + detail::argmin(borrowed_view);
      if (pool[best_borrowed].cost < current.cost) adopted = best_borrowed;
    }
  }

  FollowerOutcome out;
  out.improved = adopted != detail::kNone;
  out.adopted_borrowed = out.improved && adopted >= own_count;
  if (out.improved) {
    current.tour = pool[adopted].tour;
    current.cost = pool[adopted].cost;
  }
  out.bird = std::move(current);

  if (sharing == Sharing::Single) {
    pool.resize(own_count);
    out.share_out = detail::best_unused(pool, adopted < own_count ? adopted : detail::kNone, x);
  } else {
    out.share_out = detail::best_unused(pool, adopted, x);
  }
  return out;
}

namespace detail {

inline std::vector<Candidate> neighbors_of(const Bird& bird, std::size_t count, Scheme scheme,
                                           const CostMatrix& m, Rng& rng) {
  std::vector<Candidate> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Candidate c{bird.tour, 0.0, bird.id};
    apply_move_in_place(c.tour, sample_move(bird.tour, scheme, rng));
    c.cost = tour_cost_unchecked(c.tour, m);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace detail

/// Called with the id of the giving bird and what it hands to the next bird.
using ShareHook = std::function<void(int giver, std::span<const Candidate> shared)>;

/// One pass over the leader and both tails; returns evaluations consumed.
inline std::uint64_t flock_tour(Flock& flock, const CostMatrix& m, const MboParams& p, Rng& rng,
                                const ShareHook& hook = {}) {
  std::vector<Candidate> leader_nb = detail::neighbors_of(flock.leader, p.k, p.scheme, m, rng);
  const std::size_t best = detail::argmin(leader_nb);
  std::size_t adopted = detail::kNone;
  if (leader_nb[best].cost < flock.leader.cost) {
    flock.leader.tour = leader_nb[best].tour;
    flock.leader.cost = leader_nb[best].cost;
    adopted = best;
  }
  // Ranks 1..x go to the left head, x+1..2x to the right head.
  std::vector<Candidate> ranked = detail::best_unused(leader_nb, adopted, 2 * p.x);
  std::vector<Candidate> to_left(std::make_move_iterator(ranked.begin()),
                                 std::make_move_iterator(ranked.begin() + static_cast<std::ptrdiff_t>(p.x)));
  std::vector<Candidate> to_right(std::make_move_iterator(ranked.begin() + static_cast<std::ptrdiff_t>(p.x)),
                                  std::make_move_iterator(ranked.end()));
  if (hook) {
    hook(flock.leader.id, to_left);
    hook(flock.leader.id, to_right);
  }

  auto run_tail = [&](std::deque<Bird>& tail, std::vector<Candidate> borrowed) {
    for (auto& bird : tail) {
      std::vector<Candidate> own = detail::neighbors_of(bird, p.k - p.x, p.scheme, m, rng);
      FollowerOutcome out =
          follower_step(std::move(bird), std::move(own), std::move(borrowed), p.consideration, p.sharing, p.x);
      bird = std::move(out.bird);
      borrowed = std::move(out.share_out);
      if (hook) hook(bird.id, borrowed);
    }
  };
  run_tail(flock.left, std::move(to_left));
  run_tail(flock.right, std::move(to_right));
  return evaluations_per_flock_tour(p);
}

inline Flock initial_flock(const CostMatrix& m, const MboParams& p, Rng& rng) {
  Flock flock;
  const std::size_t half = (p.n_birds - 1) / 2;
  auto make = [&](int id) {
    Tour t = random_tour(m.size(), rng);
    const double c = tour_cost_unchecked(t, m);
    return Bird{std::move(t), c, id};
  };
  flock.leader = make(0);
  for (std::size_t i = 0; i < half; ++i) flock.left.push_back(make(static_cast<int>(1 + i)));
  for (std::size_t i = 0; i < half; ++i) flock.right.push_back(make(static_cast<int>(1 + half + i)));
  return flock;
}

inline const Bird& best_bird(const Flock& flock) {
  const Bird* best = &flock.leader;
  flock.for_each([&](const Bird& b) {
    if (b.cost < best->cost) best = &b;
  });
  return *best;
}

/// Observer called after every flock tour with the running evaluation count.
using FlockObserver = std::function<void(const Flock&, std::uint64_t evaluations)>;

/// Full MBO run from a random flock until K evaluations are spent. The budget
/// is checked before each flock tour, so the total overshoots K by less than
/// one flock tour.
inline RunResult run_mbo(const CostMatrix& m, const MboParams& p, Rng& rng,
                         const FlockObserver& observer = {}, const ShareHook& hook = {}) {
  validate(p);
  if (m.size() < min_size(p.scheme)) {
    throw SizeError("MBO: scheme " + std::string(to_string(p.scheme)) + " needs at least " +
                    std::to_string(min_size(p.scheme)) + " cities");
  }
  const auto started = std::chrono::steady_clock::now();
  Flock flock = initial_flock(m, p, rng);
  std::uint64_t evaluations = 0;
  while (evaluations < p.K) {
    for (std::size_t j = 0; j < p.m && evaluations < p.K; ++j) {
      evaluations += flock_tour(flock, m, p, rng, hook);
      if (observer) observer(flock, evaluations);
    }
    flock = rotate_leader(std::move(flock));
  }
  const Bird& best = best_bird(flock);
  RunResult r;
  r.best_tour = best.tour;
  r.best_cost = best.cost;
  r.evaluations_used = evaluations;
  r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return r;
}

}  // namespace cooksched
