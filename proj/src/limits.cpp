#include "limitsets/limits.hpp"

#include <algorithm>
#include <cmath>

#include "limitsets/error.hpp"

namespace limitsets {

std::string Provenance::str() const {
  if (is_exact()) return "exact";
  return "empirical(" + std::to_string(cutoff) + ")";
}

double Dyadic::value() const { return k_ ? std::ldexp(1.0, -static_cast<int>(*k_)) : 0.0; }

std::string Dyadic::str() const { return k_ ? "2^-" + std::to_string(*k_) : "0"; }

bool Dyadic::operator<(const Dyadic& o) const {
  if (is_zero()) return !o.is_zero();
  if (o.is_zero()) return false;
  return *k_ > *o.k_;
}

namespace {

// Outward position from which the stream shows every window it will ever
// show again, and the length of the stretch that exhibits them all.
std::pair<std::uint64_t, std::uint64_t> recurrent_stretch(const ScheduledPoint& s, std::size_t L) {
  if (L == 0) fail(Error::Kind::precondition, "window length must be >= 1");
  if (auto period = s.eventual_period()) return {period->first, period->second + L - 1};
  // From n0 on every growing run is at least L long, so no window spans a
  // whole run and every segment shows the same windows.
  std::uint64_t n0 = 1;
  for (const Block& b : s.schedule()) {
    if (!b.growing() || b.offset >= L) continue;
    std::uint64_t need = (L - b.offset + b.slope - 1) / b.slope;
    n0 = std::max(n0, need);
  }
  std::uint64_t start = s.transient().size();
  for (std::uint64_t n = 1; n < n0; ++n) start += s.segment_length(n);
  return {start, s.segment_length(n0) + L - 1};
}

// Windows occurring infinitely often in the outward stream of s.
WindowSet outward_recurrent_windows(const ScheduledPoint& s, std::size_t L) {
  auto [start, len] = recurrent_stretch(s, L);
  return windows_of(s.outward(start, len), L);
}

// Outward length after which no new window appears.
std::int64_t settled_length(const ScheduledPoint& s, std::size_t L) {
  auto [start, len] = recurrent_stretch(s, L);
  return static_cast<std::int64_t>(start + len);
}

const ScheduledPoint& right_tail(const Point& p) {
  if (const auto* s = std::get_if<ScheduledPoint>(&p)) {
    if (s->side() != Side::right) {
      fail(Error::Kind::out_of_side, "left tail has no forward limit windows");
    }
    return *s;
  }
  return std::get<TwoSidedPoint>(p).right();
}

const ScheduledPoint& left_tail(const Point& p) {
  if (const auto* s = std::get_if<ScheduledPoint>(&p)) {
    if (s->side() != Side::left) {
      fail(Error::Kind::out_of_side, "one-sided forward point has no left tail");
    }
    return *s;
  }
  return std::get<TwoSidedPoint>(p).left();
}

// Doubling scan over windows starting in [N/2, N) of a stream.
template <typename Stream>
LimitWindows stabilize(Stream&& stream, std::size_t available, std::size_t L,
                       const StabilizationPolicy& policy) {
  if (L == 0) fail(Error::Kind::precondition, "window length must be >= 1");
  auto half_windows = [&](std::size_t n) {
    return windows_of(stream(n / 2, n - n / 2 + L - 1), L);
  };
  std::size_t n = std::max<std::size_t>(policy.initial, 2);
  if (n + L - 1 > available || n > policy.budget) {
    fail(Error::Kind::non_stabilized, "prefix shorter than the initial cutoff");
  }
  WindowSet previous = half_windows(n);
  while (2 * n <= policy.budget && 2 * n + L - 1 <= available) {
    WindowSet next = half_windows(2 * n);
    if (next == previous) return {std::move(next), Provenance::empirical(2 * n)};
    previous = std::move(next);
    n *= 2;
  }
  fail(Error::Kind::non_stabilized,
       "window set still changing at cutoff " + std::to_string(n) + " for length " +
           std::to_string(L));
}

}  // namespace

LimitWindows omega_windows(const Point& p, std::size_t L) {
  return {outward_recurrent_windows(right_tail(p), L), Provenance::exact()};
}

LimitWindows alpha_windows(const Point& p, std::size_t L) {
  return {outward_recurrent_windows(left_tail(p), L).reversed_words(), Provenance::exact()};
}

LimitWindows gamma_windows(const TwoSidedPoint& p, std::size_t L) {
  Point point = p;
  return {alpha_windows(point, L).windows.intersect(omega_windows(point, L).windows),
          Provenance::exact()};
}

LimitWindows omega_windows_of_prefix(const Word& prefix, std::size_t L,
                                     const StabilizationPolicy& policy) {
  auto stream = [&](std::size_t start, std::size_t len) {
    return Word(prefix.begin() + static_cast<std::ptrdiff_t>(start),
                prefix.begin() + static_cast<std::ptrdiff_t>(start + len));
  };
  return stabilize(stream, prefix.size(), L, policy);
}

LimitWindows alpha_windows_of_prefix(const Word& left_tail, std::size_t L,
                                     const StabilizationPolicy& policy) {
  LimitWindows out = omega_windows_of_prefix(reversed(left_tail), L, policy);
  out.windows = out.windows.reversed_words();
  return out;
}

LimitWindows omega_windows_empirical(const Point& p, std::size_t L,
                                     const StabilizationPolicy& policy) {
  const ScheduledPoint& tail = right_tail(p);
  auto stream = [&](std::size_t start, std::size_t len) { return tail.outward(start, len); };
  return stabilize(stream, policy.budget + L, L, policy);
}

WindowSet orbit_windows(const Point& p, std::size_t L) {
  if (const auto* s = std::get_if<ScheduledPoint>(&p)) {
    auto len = static_cast<std::size_t>(settled_length(*s, L));
    if (s->side() == Side::right) return windows_of(s->window(0, len), L);
    return windows_of(s->window(-static_cast<std::int64_t>(len), len), L);
  }
  const auto& t = std::get<TwoSidedPoint>(p);
  std::int64_t from = -settled_length(t.left(), L) - static_cast<std::int64_t>(L);
  std::int64_t to = static_cast<std::int64_t>(t.center().size()) + settled_length(t.right(), L);
  return windows_of(t.window(from, static_cast<std::size_t>(to - from)), L);
}

// ------------------------------------------------------------------ specs

ClosedSetSpec::ClosedSetSpec(Alphabet alphabet, Generator generator, Provenance provenance,
                             Indexing indexing, std::string label)
    : alphabet_(std::move(alphabet)),
      generator_(std::move(generator)),
      provenance_(provenance),
      indexing_(indexing),
      label_(std::move(label)),
      cache_(std::make_shared<Cache>()) {}

ClosedSetSpec ClosedSetSpec::from_sft(const SubshiftSFT& sft, Indexing indexing) {
  return ClosedSetSpec(
      sft.alphabet(), [sft](std::size_t L) { return sft.language(L); }, Provenance::exact(),
      indexing, "sft");
}

ClosedSetSpec ClosedSetSpec::from_points(Alphabet alphabet, std::vector<Point> points,
                                         Indexing indexing, std::string label) {
  if (points.empty()) fail(Error::Kind::precondition, "need at least one point");
  auto generator = [points = std::move(points)](std::size_t L) {
    std::set<Word> words;
    for (const Point& p : points) {
      WindowSet w = orbit_windows(p, L);
      words.insert(w.begin(), w.end());
    }
    return WindowSet(L, std::move(words));
  };
  return ClosedSetSpec(std::move(alphabet), std::move(generator), Provenance::exact(), indexing,
                       std::move(label));
}

ClosedSetSpec ClosedSetSpec::from_family(Alphabet alphabet, std::vector<WindowSet> family,
                                         Provenance provenance, Indexing indexing,
                                         std::string label) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].length() != i + 1) {
      fail(Error::Kind::precondition, "family entry " + std::to_string(i) + " has wrong length");
    }
  }
  auto generator = [family = std::move(family)](std::size_t L) {
    if (L == 0 || L > family.size()) {
      fail(Error::Kind::budget, "window family stops at length " + std::to_string(family.size()));
    }
    return family[L - 1];
  };
  return ClosedSetSpec(std::move(alphabet), std::move(generator), provenance, indexing,
                       std::move(label));
}

ClosedSetSpec ClosedSetSpec::omega_of(Alphabet alphabet, Point p, Indexing indexing) {
  return ClosedSetSpec(
      std::move(alphabet), [p = std::move(p)](std::size_t L) { return omega_windows(p, L).windows; },
      Provenance::exact(), indexing, "omega");
}

ClosedSetSpec ClosedSetSpec::alpha_of(Alphabet alphabet, Point p, Indexing indexing) {
  return ClosedSetSpec(
      std::move(alphabet), [p = std::move(p)](std::size_t L) { return alpha_windows(p, L).windows; },
      Provenance::exact(), indexing, "alpha");
}

ClosedSetSpec ClosedSetSpec::omega_of_prefix(Alphabet alphabet, Word prefix,
                                             StabilizationPolicy policy) {
  // The provenance records the cutoff for the first length only; each
  // length stabilizes on its own.
  std::size_t cutoff = omega_windows_of_prefix(prefix, 1, policy).provenance.cutoff;
  auto generator = [prefix = std::move(prefix), policy](std::size_t L) {
    return omega_windows_of_prefix(prefix, L, policy).windows;
  };
  return ClosedSetSpec(std::move(alphabet), std::move(generator), Provenance::empirical(cutoff),
                       Indexing::one_sided, "omega(prefix)");
}

const WindowSet& ClosedSetSpec::windows(std::size_t L) const {
  if (L == 0) fail(Error::Kind::precondition, "window length must be >= 1");
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto it = cache_->sets.find(L);
  if (it == cache_->sets.end()) {
    auto computed = std::make_unique<WindowSet>(generator_(L));
    if (computed->length() != L) fail(Error::Kind::inconsistency, "generator returned wrong length");
    it = cache_->sets.emplace(L, std::move(computed)).first;
  }
  return *it->second;
}

std::size_t ClosedSetSpec::resolution_length(std::size_t k) const noexcept {
  return indexing_ == Indexing::one_sided ? k + 1 : 2 * k + 1;
}

bool ClosedSetSpec::factorial_consistent(std::size_t L) const {
  if (L < 2) return true;
  return windows(L).factors(L - 1) == windows(L - 1);
}

std::string ClosedSetSpec::serialize(std::size_t L_max) const {
  std::string out = "spec " + (label_.empty() ? std::string("-") : label_) + " " +
                    provenance_.str() + " " +
                    (indexing_ == Indexing::one_sided ? "one-sided" : "two-sided") + "\n";
  for (std::size_t L = 1; L <= L_max; ++L) out += windows(L).serialize(alphabet_);
  return out;
}

// -------------------------------------------------------------------- ICT

BlockGraph resolution_graph(const ClosedSetSpec& spec, std::size_t k) {
  return block_graph(spec.windows(k + 1), &spec.windows(k + 2));
}

namespace {
bool strongly_connected_with_edge(const BlockGraph& g) {
  if (g.vertices.empty()) return false;
  auto comps = strongly_connected_components(g.successors);
  return comps.size() == 1 && has_cycle(g.successors, comps.front());
}

BlockGraph sft_graph(const SubshiftSFT& sft, std::size_t k) {
  WindowSet vertices = sft.language(k + 1);
  WindowSet edges = sft.language(k + 2);
  return block_graph(vertices, &edges);
}
}  // namespace

bool is_ict(const ClosedSetSpec& spec, std::size_t k) {
  return strongly_connected_with_edge(resolution_graph(spec, k));
}

std::vector<WindowSet> enumerate_maximal_ict(const SubshiftSFT& sft, std::size_t k) {
  BlockGraph g = sft_graph(sft, k);
  std::vector<WindowSet> out;
  for (const auto& comp : strongly_connected_components(g.successors)) {
    if (!has_cycle(g.successors, comp)) continue;
    std::set<Word> words;
    for (std::size_t v : comp) words.insert(g.vertices[v]);
    out.emplace_back(k + 1, std::move(words));
  }
  std::sort(out.begin(), out.end(), [](const WindowSet& a, const WindowSet& b) {
    return *a.begin() < *b.begin();
  });
  return out;
}

bool chain_component_check(const WindowSet& w, const SubshiftSFT& ambient, std::size_t k) {
  if (w.length() != k + 1) fail(Error::Kind::precondition, "window set must have length k+1");
  if (w.empty()) return false;
  BlockGraph g = sft_graph(ambient, k);
  auto comps = strongly_connected_components(g.successors);
  auto ids = component_ids(g.successors, comps);
  std::optional<std::size_t> id;
  for (const Word& word : w) {
    auto v = g.index_of(word);
    if (!v) fail(Error::Kind::precondition, "window outside the ambient language");
    if (id && *id != ids[*v]) return false;
    id = ids[*v];
  }
  return has_cycle(g.successors, comps[*id]);
}

Dyadic window_hausdorff(const ClosedSetSpec& a, const ClosedSetSpec& b, std::size_t k_max) {
  if (a.indexing() != b.indexing()) {
    fail(Error::Kind::precondition, "comparing specs with different indexing");
  }
  for (std::size_t k = 0; k <= k_max; ++k) {
    std::size_t L = a.resolution_length(k);
    if (a.windows(L) != b.windows(L)) return Dyadic::pow2_neg(k == 0 ? 0 : k - 1);
  }
  return Dyadic::zero();
}

SubshiftSFT window_cover(const ClosedSetSpec& spec, std::size_t L) {
  const WindowSet& allowed = spec.windows(L);
  std::vector<Word> forbidden;
  const std::size_t q = spec.alphabet().size();
  Word w(L, 0);
  while (true) {
    if (!allowed.contains(w)) forbidden.push_back(w);
    std::size_t pos = L;
    while (pos > 0 && w[pos - 1] + 1u == q) w[--pos] = 0;
    if (pos == 0) break;
    ++w[pos - 1];
  }
  return SubshiftSFT::from_forbidden(spec.alphabet(), std::move(forbidden));
}

}  // namespace limitsets
