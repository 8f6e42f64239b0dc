#pragma once
// Exact piecewise-polynomial interval maps over the rationals.

#include <gmpxx.h>

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "limitsets/graph.hpp"
#include "limitsets/limits.hpp"

namespace limitsets {

/// Exact rational; always kept canonical.
using Rat = mpq_class;

/// "p/q" or an integer, optionally signed. Throws Error(parse).
Rat parse_rat(std::string_view text);
std::string rat_str(const Rat& r);
mpz_class floor_of(const Rat& r);
mpz_class ceil_of(const Rat& r);

struct RatInterval {
  Rat lo, hi;
  bool lo_closed = true, hi_closed = true;

  bool contains(const Rat& x) const;
  bool empty() const;
};

/// c0 + c1 x + c2 x² on an interval.
struct Piece {
  RatInterval domain;
  Rat c0, c1, c2;

  Rat value(const Rat& x) const { return Rat(c0 + c1 * x + c2 * x * x); }
  int degree() const { return c2 != 0 ? 2 : (c1 != 0 ? 1 : 0); }
  /// Exact [min, max] of the polynomial on the closed interval [lo, hi].
  std::pair<Rat, Rat> range(const Rat& lo, const Rat& hi) const;
};

/// Solutions of f(x) = y: isolated points plus whole intervals coming from
/// constant pieces.
struct Preimages {
  std::vector<Rat> points;
  std::vector<RatInterval> intervals;
};

class PiecewiseMap {
 public:
  /// Pieces must partition [a, b] in order, map [a, b] into itself and, with
  /// require_continuous, agree at every joint. Throws Error(parse).
  static PiecewiseMap from_pieces(std::vector<Piece> pieces, bool require_continuous = true);
  /// One piece per line: lo,hi,loClosed,hiClosed,c0,c1,c2 ('#' comments).
  static PiecewiseMap parse(std::string_view text, bool require_continuous = true);
  std::string serialize() const;

  const Rat& lo() const noexcept { return pieces_.front().domain.lo; }
  const Rat& hi() const noexcept { return pieces_.back().domain.hi; }
  const std::vector<Piece>& pieces() const noexcept { return pieces_; }
  bool continuous() const;

  /// Throws Error(domain) outside [a, b].
  Rat eval(const Rat& x) const;
  /// Exact hull of f over the closed interval [lo, hi] ∩ [a, b], taken over
  /// the closures of the pieces it meets.
  std::pair<Rat, Rat> image(const Rat& lo, const Rat& hi) const;
  /// Throws Error(unsupported_piece) if any piece is quadratic.
  Preimages preimages(const Rat& y) const;

 private:
  explicit PiecewiseMap(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {}
  const Piece& piece_at(const Rat& x) const;

  std::vector<Piece> pieces_;
};

/// The three example maps: a plateau in the middle with expanding sides, a
/// tent on [0, 2] with a left branch over [-1, 0), and two parabolas.
PiecewiseMap plateau_map();
PiecewiseMap folded_tent_map();
PiecewiseMap parabola_pair_map();

struct PseudoOrbitNum {
  std::vector<Rat> entries;
  Rat delta;
};

struct PseudoOrbitNumCheck {
  bool ok = true;
  std::optional<std::size_t> first_failure;  // i with |f(x_i) - x_{i+1}| ≥ δ
};

PseudoOrbitNumCheck verify_pseudo_orbit_num(const PiecewiseMap& f, const PseudoOrbitNum& po);

/// Half-open grid [a + i·res, a + (i+1)·res), the last box closed.
struct BoxGrid {
  Rat a, b, res;
  std::size_t count = 0;

  BoxGrid(Rat a, Rat b, Rat res);
  std::size_t box_of(const Rat& x) const;
  Rat box_lo(std::size_t i) const { return Rat(a + res * static_cast<unsigned long>(i)); }
  Rat box_hi(std::size_t i) const { return Rat(a + res * static_cast<unsigned long>(i + 1)); }
};

struct BoxSet {
  BoxGrid grid;
  std::set<std::size_t> boxes;
  Provenance provenance;
  std::size_t depth = 0;

  /// "box,lo,hi" lines after a header line.
  std::string csv() const;
};

/// Boxes hit by f^-k({x}) for some k in [D/2, D]. Constant-piece interval
/// preimages are sampled at the res-grid points they contain.
BoxSet neg_limit_A1(const PiecewiseMap& f, const Rat& x, std::size_t D, const Rat& res);

enum class NegLimitMode { A2, A3 };
/// A2: boxes visited at two distinct depths in [D/2, D] by one branch of the
/// preimage tree that survives to depth D. A3: boxes met by tree nodes at two
/// distinct depths in [D/2, D], branches need not survive.
BoxSet neg_limit_trajectories(const PiecewiseMap& f, const Rat& x, NegLimitMode mode,
                              std::size_t D, const Rat& res);

/// Closed boxes [a + ih, a + (i+1)h]; B → B' iff the exact image of B
/// fattened by `fatten` meets B'.
struct BoxGraph {
  Rat a, b, h, fatten;
  std::size_t count = 0;
  Adjacency successors;

  Rat box_lo(std::size_t i) const { return Rat(a + h * static_cast<unsigned long>(i)); }
  Rat box_hi(std::size_t i) const { return Rat(a + h * static_cast<unsigned long>(i + 1)); }
  std::size_t edge_count() const;
  /// Closed boxes containing x.
  std::vector<std::size_t> boxes_containing(const Rat& x) const;
};

/// Requires h to divide b - a; throws Error(precondition) otherwise.
BoxGraph box_graph(const PiecewiseMap& f, const Rat& h, const Rat& fatten);

/// Union of the cyclic strongly connected components.
std::set<std::size_t> chain_recurrent_outer(const BoxGraph& g);
std::set<std::size_t> chain_recurrent_outer(const PiecewiseMap& f, const Rat& h, const Rat& fatten);

/// The boxes induce a strongly connected subgraph with at least one edge.
bool box_ict(const BoxGraph& g, const std::set<std::size_t>& boxes);

/// Pseudo-orbit of the parabola pair that no point ε-shadows, with the
/// obligations that prove it.
struct FalsificationCertificate {
  Rat epsilon, delta, z0, jump;
  PseudoOrbitNum orbit;
  std::size_t squaring_steps = 0;  // z0, f(z0), ... until below δ
  std::size_t left_steps = 0;      // iterates of -jump until below -3/4
  bool pseudo_orbit_ok = false;    // exact δ-pseudo-orbit
  bool invariant_ok = false;       // f([0, 1]) ⊆ [0, 1]
  bool ball_inside_ok = false;     // (z0 - ε, z0 + ε) ∩ domain ⊆ [0, 1]
  bool separation_ok = false;      // last entry < -3/4 and farther than ε from [0, 1]

  bool no_shadow() const { return pseudo_orbit_ok && invariant_ok && ball_inside_ok && separation_ok; }
};

/// z0 = 3/4 and jump δ/2. Requires 0 < δ < 1/4 and ε > 0
/// (Error(precondition)). The left iterates square their denominators, so a
/// bit budget on the entries bounds the work: Error(budget) when exceeded.
/// The default budget covers every δ ≥ 2^-16.
FalsificationCertificate falsify_shadowing_ex44(const Rat& epsilon, const Rat& delta,
                                                std::size_t bit_budget = std::size_t{1} << 24);

/// Recomputes the four obligations from the certificate's orbit, ε and z0.
bool recheck_falsification(const PiecewiseMap& f, const FalsificationCertificate& cert);

std::string falsification_json(const FalsificationCertificate& cert);

}  // namespace limitsets
