#include "limitsets/examples.hpp"

namespace limitsets::examples {

ScheduledPoint spike_point(Symbol s) { return ScheduledPoint({}, {Block::power({s}, 0, 1, 0)}); }

ScheduledPoint three_spike_backward() {
  return ScheduledPoint({}, {Block::power({3}, 0, 1, 0)}, Side::left);
}

Alphabet four_symbols() { return Alphabet::digits(4); }

ClosedSetSpec spike_family(const Alphabet& alphabet, const std::vector<Symbol>& spikes) {
  std::vector<Point> points{ScheduledPoint::periodic({0})};
  for (Symbol s : spikes) points.emplace_back(TwoSidedPoint::from_window({0}, {s}, 0, {0}));
  std::string label = "spikes";
  for (Symbol s : spikes) label += ":" + alphabet.name(s);
  return ClosedSetSpec::from_points(alphabet, std::move(points),
                                    ClosedSetSpec::Indexing::one_sided, label);
}

ScheduledPoint growing_gaps_forward() { return spike_point(1); }

ClosedSetSpec growing_gaps_space() {
  // Windows of 0^n x for all n are the windows of ^∞0 · x.
  TwoSidedPoint padded(ScheduledPoint::periodic({0}, {}, Side::left), {}, growing_gaps_forward());
  return ClosedSetSpec::from_points(Alphabet::digits(2), {padded},
                                    ClosedSetSpec::Indexing::one_sided, "growing-gaps");
}

ScheduledPoint shrinking_gaps_backward() {
  return ScheduledPoint({}, {Block::power({1}, 0, 1, 1)}, Side::left);
}

ClosedSetSpec shrinking_gaps_space() {
  // Every window of some 1 0^n ... 1 0^2 1 0^∞ is a window of
  // ... 1 0^3 1 0^2 · 1 0^∞, and conversely.
  TwoSidedPoint limit(shrinking_gaps_backward(), {1}, ScheduledPoint::periodic({0}));
  return ClosedSetSpec::from_points(Alphabet::digits(2), {limit},
                                    ClosedSetSpec::Indexing::one_sided, "shrinking-gaps");
}

TwoSidedPoint gamma_example_point() {
  ScheduledPoint left({}, {Block::power({}, 0, 1, 0), Block::power({}, 1, 1, 0)}, Side::left);
  ScheduledPoint right({}, {Block::power({}, 0, 1, 1, {2}), Block::power({}, 1, 1, 1, {2})});
  return TwoSidedPoint(std::move(left), {}, std::move(right));
}

ClosedSetSpec period_two(const Alphabet& alphabet) {
  return ClosedSetSpec::from_points(alphabet, {ScheduledPoint::periodic({0, 1})},
                                    ClosedSetSpec::Indexing::one_sided, "period-2");
}

ClosedSetSpec fixed_zero(const Alphabet& alphabet) {
  return ClosedSetSpec::from_points(alphabet, {ScheduledPoint::periodic({0})},
                                    ClosedSetSpec::Indexing::one_sided, "fixed-0");
}

SubshiftSFT golden_mean() { return sft_from_forbidden(Alphabet::digits(2), {Word{1, 1}}); }

ClosedSetSpec golden_mean_spec() { return ClosedSetSpec::from_sft(golden_mean()); }

}  // namespace limitsets::examples
