#pragma once
// Brute-force references shared by the test binaries. Nothing here uses the
// library's graph machinery.

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "limitsets/symbolic.hpp"

namespace oracle {

using limitsets::Word;

inline bool contains_factor(const Word& w, const Word& f) {
  if (f.size() > w.size()) return false;
  for (std::size_t i = 0; i + f.size() <= w.size(); ++i) {
    if (std::equal(f.begin(), f.end(), w.begin() + static_cast<std::ptrdiff_t>(i))) return true;
  }
  return false;
}

inline bool admissible(const Word& w, const std::vector<Word>& forbidden) {
  for (const Word& f : forbidden) {
    if (contains_factor(w, f)) return false;
  }
  return true;
}

inline void all_words(std::size_t q, std::size_t L, const std::function<void(const Word&)>& f) {
  Word w(L, 0);
  while (true) {
    f(w);
    std::size_t pos = L;
    while (pos > 0 && w[pos - 1] + 1u == q) w[--pos] = 0;
    if (pos == 0) return;
    ++w[pos - 1];
  }
}

// w occurs in a bi-infinite admissible point iff it extends admissibly by
// `pad` symbols on both sides, where pad exceeds the number of memory-length
// contexts (pigeonhole then yields a cycle each way).
inline std::set<Word> language(std::size_t q, const std::vector<Word>& forbidden, std::size_t L) {
  std::size_t m = 0;
  for (const Word& f : forbidden) m = std::max(m, f.size() - 1);
  std::size_t contexts = 1;
  for (std::size_t i = 0; i < std::max<std::size_t>(m, 1); ++i) contexts *= q;
  const std::size_t pad = contexts + 1;
  std::set<Word> out;
  std::function<bool(Word&, std::size_t, bool)> extend = [&](Word& w, std::size_t left,
                                                             bool to_right) -> bool {
    if (left == 0) return true;
    for (std::size_t s = 0; s < q; ++s) {
      Word next = w;
      if (to_right) {
        next.push_back(static_cast<limitsets::Symbol>(s));
      } else {
        next.insert(next.begin(), static_cast<limitsets::Symbol>(s));
      }
      // Only the new boundary can create a forbidden factor.
      Word edge = to_right ? Word(next.end() - std::min(next.size(), m + 1), next.end())
                           : Word(next.begin(), next.begin() + std::min(next.size(), m + 1));
      if (!admissible(edge, forbidden)) continue;
      if (extend(next, left - 1, to_right)) return true;
    }
    return false;
  };
  all_words(q, L, [&](const Word& w) {
    if (!admissible(w, forbidden)) return;
    Word right = w;
    if (!extend(right, pad, true)) return;
    Word left = w;
    if (!extend(left, pad, false)) return;
    out.insert(w);
  });
  return out;
}

// Random forbidden sets over a small alphabet; words of length 1..max_len.
inline std::vector<Word> random_forbidden(std::mt19937& rng, std::size_t q, std::size_t max_len,
                                          std::size_t count) {
  std::vector<Word> out;
  std::uniform_int_distribution<std::size_t> len_dist(1, max_len), sym(0, q - 1);
  for (std::size_t i = 0; i < count; ++i) {
    Word w(len_dist(rng));
    for (auto& s : w) s = static_cast<limitsets::Symbol>(sym(rng));
    out.push_back(w);
  }
  return out;
}

inline std::string repeat(const std::string& s, std::size_t n) {
  std::string out;
  for (std::size_t i = 0; i < n; ++i) out += s;
  return out;
}

}  // namespace oracle

namespace oracle {

// Periodic point given by its period; symbol at index i ≥ 0.
struct PeriodicPoint {
  Word period;
  limitsets::Symbol at(std::size_t i) const { return period[i % period.size()]; }
};

// 2^-k chain search: x → y when σ(x) and y agree on indices 0..k. Returns
// true iff every representative reaches every representative (itself
// included) in at least one step.
inline bool chains_connect_all(const std::vector<PeriodicPoint>& reps, std::size_t k) {
  const std::size_t n = reps.size();
  if (n == 0) return false;
  std::vector<std::vector<bool>> step(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      bool close = true;
      for (std::size_t i = 0; i <= k && close; ++i) close = reps[a].at(i + 1) == reps[b].at(i);
      step[a][b] = close;
    }
  }
  // Transitive closure of the one-step relation.
  auto reach = step;
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t a = 0; a < n; ++a) {
      if (!reach[a][m]) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (reach[m][b]) reach[a][b] = true;
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!reach[a][b]) return false;
    }
  }
  return true;
}

// Periodic points of period ≤ max_period whose every window avoids the
// forbidden words (checked cyclically).
inline std::vector<PeriodicPoint> periodic_points(std::size_t q, const std::vector<Word>& forbidden,
                                                  std::size_t max_period) {
  std::vector<PeriodicPoint> out;
  for (std::size_t p = 1; p <= max_period; ++p) {
    all_words(q, p, [&](const Word& w) {
      Word unrolled;
      for (std::size_t r = 0; r < 4 + 8 / p; ++r) unrolled.insert(unrolled.end(), w.begin(), w.end());
      if (admissible(unrolled, forbidden)) out.push_back({w});
    });
  }
  return out;
}

}  // namespace oracle

namespace oracle {

// Random golden-mean (no "11") pseudo-orbits. Each hop keeps exactly the
// agreement δ = 2^-j demands and randomizes everything beyond it.
class GoldenPseudoOrbits {
 public:
  explicit GoldenPseudoOrbits(std::uint64_t seed) : rng_(seed) {}

  // Appends `count` random admissible symbols continuing w to the right.
  void extend_right(Word& w, std::size_t count) {
    for (std::size_t t = 0; t < count; ++t) {
      bool after_one = !w.empty() && w.back() == 1;
      w.push_back(after_one ? 0 : static_cast<limitsets::Symbol>(coin()));
    }
  }
  void extend_left(Word& w, std::size_t count) {
    for (std::size_t t = 0; t < count; ++t) {
      bool before_one = !w.empty() && w.front() == 1;
      w.insert(w.begin(), before_one ? 0 : static_cast<limitsets::Symbol>(coin()));
    }
  }

  // One-sided entries: x_{i+1}[0..j] = x_i[1..j+1], then free symbols, then 0^∞.
  std::vector<limitsets::Point> one_sided(std::size_t n, std::size_t j) {
    std::vector<limitsets::Point> out;
    Word w;
    extend_right(w, j + 2 + free_len());
    for (std::size_t i = 0; i < n; ++i) {
      out.emplace_back(limitsets::ScheduledPoint::periodic({0}, w));
      Word next(w.begin() + 1, w.begin() + static_cast<std::ptrdiff_t>(j + 2));
      extend_right(next, free_len() + 1);
      w = next;
    }
    return out;
  }

  // Two-sided entries: x_{i+1}[t] = x_i[t+1] for |t| ≤ j.
  std::vector<limitsets::Point> two_sided(std::size_t n, std::size_t j) {
    std::vector<limitsets::Point> out;
    Word w;  // window of x_i over [-(j+1), j+1]
    extend_right(w, 2 * j + 3);
    for (std::size_t i = 0; i < n; ++i) {
      Word full = w;
      std::size_t left = free_len();
      extend_left(full, left);
      extend_right(full, free_len());
      out.emplace_back(limitsets::TwoSidedPoint::from_window({0}, full, left + j + 1, {0}));
      // σ x_i over [-j, j] is w[2 .. 2j+2]; it becomes x_{i+1} over [-j, j].
      Word next(w.begin() + 2, w.begin() + static_cast<std::ptrdiff_t>(2 * j + 3));
      extend_left(next, 1);
      extend_right(next, 1);
      w = next;
    }
    return out;
  }

 private:
  int coin() { return std::uniform_int_distribution<int>(0, 1)(rng_); }
  std::size_t free_len() { return std::uniform_int_distribution<std::size_t>(0, 6)(rng_); }
  std::mt19937_64 rng_;
};

inline bool has_factor_11(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == 1 && w[i + 1] == 1) return true;
  }
  return false;
}

}  // namespace oracle
