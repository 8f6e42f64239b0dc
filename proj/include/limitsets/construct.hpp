#pragma once
// Realizing internally chain transitive window specs as limit sets of points.

#include <string>
#include <vector>

#include "limitsets/limits.hpp"
#include "limitsets/symbolic.hpp"

namespace limitsets {

/// Closed walk from base to base in the resolution-k block graph of the spec
/// visiting every vertex. Vertices are taken in sorted order; each unvisited
/// one is reached by a BFS-shortest path, then a shortest path returns to
/// base. Throws Error(not_chain_transitive) unless is_ict(spec, k), and
/// Error(precondition) when base is not a (k+1)-window of the spec.
std::vector<Word> dense_chain(const ClosedSetSpec& spec, std::size_t k, const Word& base);

/// One stage of a chain schedule: a connecting path from the incoming
/// context to the stage base, then the dense closed walk at the base.
struct ChainStage {
  std::size_t resolution = 0;    // k_j; a 2^-k_j chain
  std::size_t eta_exponent = 0;  // η_j = 2^-eta_exponent
  Word base;
  std::vector<Word> approach;    // context ... base; just [base] when already there
  std::vector<Word> walk;        // base ... base
  std::size_t stream_begin = 0;  // first stream position this stage emits
};

/// Stages in time order and the symbols they spell. Each vertex after the
/// first contributes its last symbol.
struct ChainSchedule {
  std::vector<ChainStage> stages;
  Word stream;
};

/// Per-resolution evidence for a constructed point.
struct ConstructionCertificate {
  std::size_t max_resolution = 0;
  /// omega_match[k]: ω windows of length k+1 equal the spec's.
  std::vector<bool> omega_match;
  /// alpha_match[k]: same for α windows (full trajectories only).
  std::vector<bool> alpha_match;
  /// coverage[j][k]: stage j visits every (k+1)-window of the spec, k ≤ j.
  std::vector<std::vector<bool>> coverage;
  /// Largest L ≤ K+2 such that every limit L-window (ω, and α for full
  /// trajectories) is a spec window.
  std::size_t tail_admissible_length = 0;
  /// Every (k_j+2)-window ending inside stage j, junctions included, is a
  /// spec window.
  bool stages_admissible = false;

  bool ok() const;
};

struct LimitPoint {
  ScheduledPoint point;
  ChainSchedule schedule;
  ConstructionCertificate certificate;

  /// First n symbols of the point.
  Word prefix(std::size_t n) const { return point.window(0, n); }
};

struct FullTrajectory {
  TwoSidedPoint point;
  /// Stages in reading order: W_K, W_{K-1}, ..., W_1, W_0, W_1, ..., W_K.
  ChainSchedule schedule;
  /// Index in schedule.stream that sits at coordinate 0 (start of W_0).
  std::size_t origin = 0;
  ConstructionCertificate certificate;
};

/// Stages k_j = min(j, K) for j = 0..K starting from the least 1-window,
/// bases the least (k_j+1)-windows; stage K then repeats forever, so the
/// point is eventually periodic and its ω windows are exact. Requires
/// is_ict(spec, k) for k ≤ K (else Error(not_chain_transitive)); throws
/// Error(budget) when transient plus period exceed n_max symbols.
LimitPoint build_limit_point(const ClosedSetSpec& spec, std::size_t K, std::size_t n_max);

/// ^∞W_K W_{K-1} ... W_1 · W_0 W_1 ... W_K^∞ with connecting paths between
/// stages. Both limit window sets are exact. Same errors as above, n_max
/// bounding the finite middle part.
FullTrajectory build_full_trajectory(const ClosedSetSpec& spec, std::size_t K, std::size_t n_max);

/// JSON record: resolutions, per-stage bases and walk lengths, coverage and
/// limit-window matches.
std::string construction_json(const ChainSchedule& schedule, const ConstructionCertificate& cert,
                              const Alphabet& alphabet);

}  // namespace limitsets
