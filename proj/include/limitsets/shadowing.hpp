#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "limitsets/limits.hpp"
#include "limitsets/symbolic.hpp"

namespace limitsets {

/// Under the dyadic metric, d(σ^a p, σ^b q) < 2^-j iff these windows agree:
/// indices 0..j for one-sided points, -j..j for two-sided points.
enum class MetricSide { one_sided, two_sided };

Word decisive_window(const Point& p, std::int64_t shift, std::size_t j, MetricSide side);
/// d(σ^a p, σ^b q) < 2^-j.
bool within(const Point& p, std::int64_t a, const Point& q, std::int64_t b, std::size_t j,
            MetricSide side);
/// Largest j ≤ cap with d(σ^a p, σ^b q) < 2^-j; nullopt when even j = 0 fails.
std::optional<std::size_t> agreement_depth(const Point& p, std::int64_t a, const Point& q,
                                           std::int64_t b, std::size_t cap, MetricSide side);

enum class Direction { forward, backward, two_sided };

/// Entries x_i for i = first_index, ..., first_index + size - 1. Forward
/// pseudo-orbits start at 0, backward ones end at 0, two-sided ones contain 0.
/// δ = 2^-delta_exponent. All entries are one-sided (right-side
/// ScheduledPoint) or all are TwoSidedPoint; that fixes the metric.
struct PseudoOrbitSym {
  Direction direction = Direction::forward;
  std::vector<Point> entries;
  std::int64_t first_index = 0;
  std::size_t delta_exponent = 0;

  std::int64_t last_index() const { return first_index + static_cast<std::int64_t>(entries.size()) - 1; }
  const Point& at(std::int64_t i) const { return entries.at(static_cast<std::size_t>(i - first_index)); }
  MetricSide metric() const;
};

struct PseudoOrbitCheck {
  bool ok = true;
  std::optional<std::int64_t> first_failure;  // i with d(σ x_i, x_{i+1}) ≥ δ
};

PseudoOrbitCheck verify_pseudo_orbit(const PseudoOrbitSym& po);

struct ShadowCertificate {
  /// ScheduledPoint z for forward one-sided shadows (z_i = σ^i z); otherwise a
  /// TwoSidedPoint Z with z_i = σ^i Z, i in the pseudo-orbit range.
  Point shadow = ScheduledPoint::periodic({0});
  std::size_t epsilon_exponent = 0;
  std::int64_t first_index = 0;
  /// depths[i - first_index] = agreement depth of z_i with x_i.
  std::vector<std::size_t> depths;
  /// Index range [from, to) of the shadow whose windows were checked for
  /// admissibility; covers the diagonal part and two periods of each tail.
  std::int64_t checked_from = 0;
  std::int64_t checked_to = 0;
};

/// Diagonal construction. Requires δ ≤ 2^-(k+m) with ε = 2^-k and m the SFT
/// memory, else Error(delta_too_large). Throws Error(precondition) when an
/// entry is not in the SFT.
ShadowCertificate shadow_forward(const SubshiftSFT& sft, const PseudoOrbitSym& po,
                                 std::size_t epsilon_exponent);
ShadowCertificate shadow_backward(const SubshiftSFT& sft, const PseudoOrbitSym& po,
                                  std::size_t epsilon_exponent);
ShadowCertificate shadow_two_sided(const SubshiftSFT& sft, const PseudoOrbitSym& po,
                                   std::size_t epsilon_exponent);

/// Recomputes admissibility over the checked span and ε-agreement at every
/// index against the pseudo-orbit, for ε = 2^-epsilon_exponent.
bool recheck_certificate(const SubshiftSFT& sft, const PseudoOrbitSym& po,
                         const ShadowCertificate& cert, std::size_t epsilon_exponent);

/// JSON record of a certificate: shadow description and verified depths.
std::string certificate_json(const ShadowCertificate& cert, const Alphabet& alphabet);

/// A backward sequence of one-sided points: tail(j, len) = x_j[0..len) for
/// j ≤ 0.
using BackwardTail = std::function<Word(std::int64_t j, std::size_t len)>;

/// Backward trajectory ⟨σ^j Z⟩_{j ≤ 0} of a point as a tail (one-sided
/// coordinates).
BackwardTail trajectory_tail(const Point& z);
/// Entry-wise tail of a finite backward pseudo-orbit extended to the left by
/// `before` (called for j < po.first_index).
BackwardTail pseudo_orbit_tail(const PseudoOrbitSym& po, BackwardTail before);

/// d(σ x_j, x_{j+1}) < 2^-delta(j) for j in [-horizon, -1], with delta
/// nonincreasing in j (tolerances shrink towards -∞).
bool verify_backward_asymptotic(const BackwardTail& tail, std::int64_t horizon,
                                const std::function<std::size_t(std::int64_t)>& delta);

/// Least N in [K, horizon] such that the sets {x_j} and {z_j},
/// j in [-(N + horizon), -N], are within ε = 2^-e in the Hausdorff metric,
/// decided on windows of length k_res + 1 (k_res ≥ e). Finite-horizon
/// semi-decision: nullopt is not a refutation.
std::optional<std::int64_t> check_cofinal_orbital_witness(const BackwardTail& po,
                                                          const BackwardTail& traj,
                                                          std::size_t epsilon_exponent,
                                                          std::int64_t K, std::int64_t horizon,
                                                          std::size_t k_res);
/// Least K in [0, horizon] such that every N in [K, horizon] passes the
/// comparison above.
std::optional<std::int64_t> check_eventual_strong_orbital_witness(const BackwardTail& po,
                                                                  const BackwardTail& traj,
                                                                  std::size_t epsilon_exponent,
                                                                  std::int64_t horizon,
                                                                  std::size_t k_res);
/// α-windows of length L of both tails (windows x_j[0..L) recurring as
/// j → -∞, doubling policy) agree. Throws Error(non_stabilized).
bool check_backward_orbital_limit_witness(const BackwardTail& po, const BackwardTail& traj,
                                          std::size_t L, const StabilizationPolicy& policy = {});

/// Empirical α-windows of a backward tail.
LimitWindows tail_alpha_windows(const BackwardTail& tail, std::size_t L,
                                const StabilizationPolicy& policy = {});

}  // namespace limitsets
