#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>

#include "cooksched/error.hpp"
#include "cooksched/instance.hpp"
#include "cooksched/rng.hpp"

namespace cooksched {

enum class MoveKind { TwoOpt, Insertion };

enum class Scheme { TwoOpt, Insertion, Mixed };

inline std::string_view to_string(Scheme s) {
  switch (s) {
    case Scheme::TwoOpt: return "2opt";
    case Scheme::Insertion: return "insertion";
    case Scheme::Mixed: return "mixed";
  }
  return "?";
}

inline Scheme parse_scheme(std::string_view text) {
  if (text == "2opt" || text == "2-opt" || text == "twoopt") return Scheme::TwoOpt;
  if (text == "insertion") return Scheme::Insertion;
  if (text == "mixed") return Scheme::Mixed;
  throw ConfigError("unknown neighborhood scheme '" + std::string(text) + "'");
}

/// A tour modification, addressed by positions in the stored sequence.
///
/// TwoOpt(a, b): reverse positions a+1..b, i.e. arcs (tour[a], tour[a+1]) and
/// (tour[b], tour[b+1 mod n]) are replaced and the enclosed segment flips.
/// Insertion(a, b): remove the city at position a and reinsert it so that it
/// ends up at position b of the result.
struct Move {
  MoveKind kind = MoveKind::TwoOpt;
  std::size_t a = 0;
  std::size_t b = 0;

  static constexpr Move two_opt(std::size_t a, std::size_t b) { return {MoveKind::TwoOpt, a, b}; }
  static constexpr Move insertion(std::size_t from, std::size_t to) {
    return {MoveKind::Insertion, from, to};
  }

  friend bool operator==(const Move&, const Move&) = default;
};

inline constexpr std::size_t kMinTwoOptSize = 4;
inline constexpr std::size_t kMinInsertionSize = 3;

/// b - a == 1 reverses a single city and b - a == n - 1 reverses the whole
/// cycle; neither is an edge exchange.
inline bool is_valid_move(const Move& mv, std::size_t n) {
  if (mv.kind == MoveKind::TwoOpt) {
    if (n < kMinTwoOptSize || mv.a >= mv.b || mv.b >= n) return false;
    const std::size_t gap = mv.b - mv.a;
    return gap >= 2 && gap <= n - 2;
  }
  if (n < kMinInsertionSize || mv.a >= n || mv.b >= n || mv.a == mv.b) return false;
  // Moving the first city to the back (or the reverse) is only a rotation.
  return !((mv.a == 0 && mv.b == n - 1) || (mv.a == n - 1 && mv.b == 0));
}

inline void check_move(const Move& mv, std::size_t n) {
  if (!is_valid_move(mv, n)) {
    throw ValidationError(std::string(mv.kind == MoveKind::TwoOpt ? "2-opt" : "insertion") +
                          " move (" + std::to_string(mv.a) + ", " + std::to_string(mv.b) +
                          ") is invalid for a tour of " + std::to_string(n) + " cities");
  }
}

inline void apply_move_in_place(Tour& tour, const Move& mv) {
  auto& v = tour.order;
  if (mv.kind == MoveKind::TwoOpt) {
    std::reverse(v.begin() + static_cast<std::ptrdiff_t>(mv.a + 1),
                 v.begin() + static_cast<std::ptrdiff_t>(mv.b + 1));
    return;
  }
  const auto from = v.begin() + static_cast<std::ptrdiff_t>(mv.a);
  const auto to = v.begin() + static_cast<std::ptrdiff_t>(mv.b);
  if (mv.a < mv.b) {
    std::rotate(from, from + 1, to + 1);
  } else {
    std::rotate(to, from, from + 1);
  }
}

inline Tour apply_move(Tour tour, const Move& mv) {
  check_move(mv, tour.size());
  apply_move_in_place(tour, mv);
  return tour;
}

namespace detail {

inline double arc(const CostMatrix& m, int from, int to) noexcept {
  return m(static_cast<std::size_t>(from), static_cast<std::size_t>(to));
}

inline double two_opt_delta(const Tour& t, std::size_t a, std::size_t b, const CostMatrix& m) {
  const std::size_t n = t.size();
  const int before = t[a];
  const int first = t[a + 1];
  const int last = t[b];
  const int after = t[(b + 1) % n];
  double delta = arc(m, before, last) + arc(m, first, after) - arc(m, before, first) -
                 arc(m, last, after);
  // Under asymmetry every arc inside the reversed segment changes direction.
  for (std::size_t pos = a + 1; pos < b; ++pos) {
    delta += arc(m, t[pos + 1], t[pos]) - arc(m, t[pos], t[pos + 1]);
  }
  return delta;
}

inline double insertion_delta(const Tour& t, std::size_t from, std::size_t to, const CostMatrix& m) {
  const std::size_t n = t.size();
  const int city = t[from];
  const int prev = t[(from + n - 1) % n];
  const int next = t[(from + 1) % n];
  double delta = arc(m, prev, next) - arc(m, prev, city) - arc(m, city, next);

  // Neighbors of slot `to` in the sequence with `city` removed.
  const std::size_t rest = n - 1;
  auto reduced = [&](std::size_t k) { return t[k < from ? k : k + 1]; };
  const int left = reduced((to + rest - 1) % rest);
  const int right = reduced(to % rest);
  delta += arc(m, left, city) + arc(m, city, right) - arc(m, left, right);
  return delta;
}

}  // namespace detail

/// tour_cost(apply_move(tour, mv)) - tour_cost(tour), computed incrementally.
inline double move_delta(const Tour& tour, const Move& mv, const CostMatrix& m) {
  check_move(mv, tour.size());
  return mv.kind == MoveKind::TwoOpt ? detail::two_opt_delta(tour, mv.a, mv.b, m)
                                     : detail::insertion_delta(tour, mv.a, mv.b, m);
}

inline Move sample_two_opt(std::size_t n, Rng& rng) {
  if (n < kMinTwoOptSize) {
    throw SizeError("2-opt moves need at least " + std::to_string(kMinTwoOptSize) + " cities, got " +
                    std::to_string(n));
  }
  for (;;) {
    std::size_t a = uniform_index(rng, n);
    std::size_t b = uniform_index(rng, n);
    if (a > b) std::swap(a, b);
    const Move mv = Move::two_opt(a, b);
    if (is_valid_move(mv, n)) return mv;
  }
}

inline Move sample_insertion(std::size_t n, Rng& rng) {
  if (n < kMinInsertionSize) {
    throw SizeError("insertion moves need at least " + std::to_string(kMinInsertionSize) +
                    " cities, got " + std::to_string(n));
  }
  for (;;) {
    const Move mv = Move::insertion(uniform_index(rng, n), uniform_index(rng, n));
    if (is_valid_move(mv, n)) return mv;
  }
}

/// Uniform non-degenerate move of the requested family; Mixed flips a fair coin first.
inline Move sample_move(const Tour& tour, Scheme scheme, Rng& rng) {
  const std::size_t n = tour.size();
  switch (scheme) {
    case Scheme::TwoOpt: return sample_two_opt(n, rng);
    case Scheme::Insertion: return sample_insertion(n, rng);
    case Scheme::Mixed:
      if (n < kMinTwoOptSize) {
        throw SizeError("mixed moves need at least " + std::to_string(kMinTwoOptSize) +
                        " cities, got " + std::to_string(n));
      }
      return coin_flip(rng) ? sample_two_opt(n, rng) : sample_insertion(n, rng);
  }
  throw ConfigError("unknown scheme");
}

inline std::size_t min_size(Scheme scheme) {
  return scheme == Scheme::Insertion ? kMinInsertionSize : kMinTwoOptSize;
}

}  // namespace cooksched
