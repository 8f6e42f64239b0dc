#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "limitsets/symbolic.hpp"

namespace limitsets {

/// Doubling policy for window sets read off finite prefixes: the set of
/// L-windows in the second half of a prefix of length N must agree with the
/// one for 2N. N starts at `initial` and may not exceed `budget`.
struct StabilizationPolicy {
  std::size_t initial = 256;
  std::size_t budget = std::size_t{1} << 22;
};

struct Provenance {
  enum class Kind { exact, empirical };
  Kind kind = Kind::exact;
  std::size_t cutoff = 0;  // prefix length at which an empirical set stabilized

  static Provenance exact() { return {}; }
  static Provenance empirical(std::size_t cutoff) { return {Kind::empirical, cutoff}; }
  bool is_exact() const noexcept { return kind == Kind::exact; }
  std::string str() const;
};

/// 2^-k or 0.
class Dyadic {
 public:
  static Dyadic zero() { return Dyadic(); }
  static Dyadic pow2_neg(std::size_t k) {
    Dyadic d;
    d.k_ = k;
    return d;
  }

  bool is_zero() const noexcept { return !k_.has_value(); }
  /// Exponent k of 2^-k; std::nullopt for 0.
  std::optional<std::size_t> exponent() const noexcept { return k_; }
  double value() const;
  std::string str() const;

  bool operator==(const Dyadic& o) const { return k_ == o.k_; }
  bool operator!=(const Dyadic& o) const { return k_ != o.k_; }
  bool operator<(const Dyadic& o) const;
  bool operator<=(const Dyadic& o) const { return !(o < *this); }

 private:
  std::optional<std::size_t> k_;
};

struct LimitWindows {
  WindowSet windows;
  Provenance provenance;
};

/// L-windows occurring infinitely often in the right tail of p. Exact for
/// every point description (template analysis); never empty.
LimitWindows omega_windows(const Point& p, std::size_t L);
/// L-windows occurring infinitely often in a left tail, in reading order.
/// Accepts a TwoSidedPoint or a left-side ScheduledPoint.
LimitWindows alpha_windows(const Point& p, std::size_t L);
/// α ∩ ω of a two-sided point; may be empty.
LimitWindows gamma_windows(const TwoSidedPoint& p, std::size_t L);

/// Empirical ω-windows of a finite forward prefix under the doubling policy.
/// Throws Error(non_stabilized) when the prefix or budget runs out first.
LimitWindows omega_windows_of_prefix(const Word& prefix, std::size_t L,
                                     const StabilizationPolicy& policy = {});
/// Empirical α-windows of a finite left tail given in reading order (the
/// last symbol is closest to the origin).
LimitWindows alpha_windows_of_prefix(const Word& left_tail, std::size_t L,
                                     const StabilizationPolicy& policy = {});
/// Empirical scan of a point description, used to cross-check the exact
/// analysis.
LimitWindows omega_windows_empirical(const Point& p, std::size_t L,
                                     const StabilizationPolicy& policy = {});

/// All L-windows of the orbit closure of a point: windows at every index,
/// both tails included for two-sided points.
WindowSet orbit_windows(const Point& p, std::size_t L);

/// Closed shift-invariant set given by its window projections.
class ClosedSetSpec {
 public:
  enum class Indexing { one_sided, two_sided };
  using Generator = std::function<WindowSet(std::size_t L)>;

  ClosedSetSpec(Alphabet alphabet, Generator generator, Provenance provenance,
                Indexing indexing = Indexing::one_sided, std::string label = {});

  /// Language of the SFT.
  static ClosedSetSpec from_sft(const SubshiftSFT& sft, Indexing indexing = Indexing::one_sided);
  /// Closure of the orbits of the points.
  static ClosedSetSpec from_points(Alphabet alphabet, std::vector<Point> points,
                                   Indexing indexing = Indexing::one_sided, std::string label = {});
  /// Explicit family of window sets for lengths 1..size(); longer queries
  /// throw Error(budget).
  static ClosedSetSpec from_family(Alphabet alphabet, std::vector<WindowSet> family,
                                   Provenance provenance, Indexing indexing = Indexing::one_sided,
                                   std::string label = {});
  static ClosedSetSpec omega_of(Alphabet alphabet, Point p,
                                Indexing indexing = Indexing::one_sided);
  static ClosedSetSpec alpha_of(Alphabet alphabet, Point p,
                                Indexing indexing = Indexing::one_sided);
  /// Empirical ω-set of a finite prefix.
  static ClosedSetSpec omega_of_prefix(Alphabet alphabet, Word prefix,
                                       StabilizationPolicy policy = {});

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const Provenance& provenance() const noexcept { return provenance_; }
  Indexing indexing() const noexcept { return indexing_; }
  const std::string& label() const noexcept { return label_; }

  /// Memoized; safe to call from several threads.
  const WindowSet& windows(std::size_t L) const;
  /// Window length that decides agreement at resolution k: k+1 one-sided,
  /// 2k+1 two-sided.
  std::size_t resolution_length(std::size_t k) const noexcept;
  /// Factors of the L-set of length L-1 are the (L-1)-set.
  bool factorial_consistent(std::size_t L) const;

  /// Tag line, then every length 1..L_max as a window-set block.
  std::string serialize(std::size_t L_max) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::size_t, std::unique_ptr<WindowSet>> sets;
  };

  Alphabet alphabet_;
  Generator generator_;
  Provenance provenance_;
  Indexing indexing_;
  std::string label_;
  std::shared_ptr<Cache> cache_;
};

/// Block graph of the (k+1)-windows of the spec with edges checked against
/// its (k+2)-windows.
BlockGraph resolution_graph(const ClosedSetSpec& spec, std::size_t k);

/// 2^-k internal chain transitivity: the resolution graph is strongly
/// connected and has at least one edge.
bool is_ict(const ClosedSetSpec& spec, std::size_t k);

/// Nontrivial strongly connected components of the (k+1)-block graph of the
/// SFT, as (k+1)-window sets, ordered by their least word.
std::vector<WindowSet> enumerate_maximal_ict(const SubshiftSFT& sft, std::size_t k);

/// All words of w ((k+1)-words) lie in one nontrivial strongly connected
/// component of the ambient (k+1)-block graph.
bool chain_component_check(const WindowSet& w, const SubshiftSFT& ambient, std::size_t k);

/// 0 when the window sets agree at every resolution k ≤ k_max, else 2^-k*
/// with k* the largest agreeing resolution (2^0 when none agrees).
Dyadic window_hausdorff(const ClosedSetSpec& a, const ClosedSetSpec& b, std::size_t k_max);

/// SFT whose forbidden words are the L-words missing from the spec. For a
/// closed shift-invariant set its (L-1)- and L-languages are the spec's.
SubshiftSFT window_cover(const ClosedSetSpec& spec, std::size_t L);

}  // namespace limitsets
