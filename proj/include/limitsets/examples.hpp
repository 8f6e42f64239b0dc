#pragma once
// Built-in shift-space example points and sets.

#include <string>
#include <vector>

#include "limitsets/limits.hpp"
#include "limitsets/symbolic.hpp"

namespace limitsets::examples {

/// 1 0 1 0^2 1 0^3 1 ... (spike symbol s separated by growing zero runs).
ScheduledPoint spike_point(Symbol s);

/// Left tail ... 3 0^3 3 0^2 3 0 of 0-th coordinates of a backward
/// trajectory through the points 3 0^n 3 0^{n-1} ... 3 0 x.
ScheduledPoint three_spike_backward();

/// Alphabet {0,1,2,3} and the two spike points x (symbol 1) and y (symbol 2).
Alphabet four_symbols();

/// {0^∞} ∪ {σ^n of a single spike s} for every s in `spikes`.
ClosedSetSpec spike_family(const Alphabet& alphabet, const std::vector<Symbol>& spikes);

/// The closure of the forward orbits of x and of 0^n x, n ≥ 0 (x = 1010^210^3...).
ClosedSetSpec growing_gaps_space();
/// Forward point x of that space.
ScheduledPoint growing_gaps_forward();

/// The closure of the orbits of 1 0^n 1 0^{n-1} ... 1 0^2 1 0^∞.
ClosedSetSpec shrinking_gaps_space();
/// Left tail ... 1 0^4 1 0^3 1 0^2 of 0-th coordinates of the backward trajectory
/// of 1 0^∞ inside that space.
ScheduledPoint shrinking_gaps_backward();

/// ... 0^n 1^n ... 0^2 1^2 0 1 · 0^2 2 1^2 2 0^3 2 1^3 2 ... over {0,1,2}.
TwoSidedPoint gamma_example_point();

/// Period-2 orbit (01)^∞ as a set.
ClosedSetSpec period_two(const Alphabet& alphabet);
/// {0^∞}.
ClosedSetSpec fixed_zero(const Alphabet& alphabet);
ClosedSetSpec golden_mean_spec();
SubshiftSFT golden_mean();

}  // namespace limitsets::examples
