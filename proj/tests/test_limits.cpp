#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <thread>

#include "limitsets/error.hpp"
#include "limitsets/examples.hpp"
#include "limitsets/limits.hpp"
#include "oracles.hpp"

using namespace limitsets;
namespace ex = limitsets::examples;

namespace {
std::set<Word> words(std::initializer_list<const char*> list) {
  std::set<Word> out;
  for (const char* w : list) out.insert(digits_word(w));
  return out;
}

// Windows of a long explicit string that start at or after `from`.
std::set<Word> tail_windows(const std::string& s, std::size_t from, std::size_t L) {
  std::set<Word> out;
  for (std::size_t i = from; i + L <= s.size(); ++i) out.insert(digits_word(s.substr(i, L)));
  return out;
}

// Words of length L over {0..q-1} with at most one nonzero symbol, that
// symbol drawn from `spikes`.
std::set<Word> single_spike_words(std::size_t q, std::size_t L, std::set<Symbol> spikes) {
  std::set<Word> out;
  oracle::all_words(q, L, [&](const Word& w) {
    std::size_t nonzero = 0;
    bool ok = true;
    for (Symbol s : w) {
      if (s == 0) continue;
      ++nonzero;
      ok = ok && spikes.count(s);
    }
    if (ok && nonzero <= 1) out.insert(w);
  });
  return out;
}

std::string spike_string(char spike, std::size_t segments) {
  std::string s;
  for (std::size_t n = 1; n <= segments; ++n) s += spike + std::string(n, '0');
  return s;
}

// Right tail of the γ example: 0^2 2 1^2 2 0^3 2 1^3 2 ...
std::string gamma_right_string(std::size_t segments) {
  std::string s;
  for (std::size_t n = 2; n <= segments + 1; ++n) {
    s += std::string(n, '0') + "2" + std::string(n, '1') + "2";
  }
  return s;
}

// Left tail in reading order: ... 0^3 1^3 0^2 1^2 0 1.
std::string gamma_left_string(std::size_t segments) {
  std::string s;
  for (std::size_t n = segments; n >= 1; --n) s += std::string(n, '0') + std::string(n, '1');
  return s;
}
}  // namespace

TEST_CASE("omega windows of example points") {
  CHECK(omega_windows(ex::spike_point(1), 2).windows.words() == words({"00", "01", "10"}));
  CHECK(omega_windows(ScheduledPoint::periodic({0}), 3).windows.words() == words({"000"}));
  for (std::size_t L = 1; L <= 4; ++L) {
    CHECK(omega_windows(ex::spike_point(1), L).windows.words() ==
          single_spike_words(2, L, {1}));
    CHECK(omega_windows(ex::spike_point(2), L).windows.words() ==
          single_spike_words(3, L, {2}));
  }
  CHECK(omega_windows(ex::spike_point(1), 2).provenance.is_exact());
}

TEST_CASE("omega windows of the gamma example match a long tail scan") {
  Point p = ex::gamma_example_point();
  std::string right = gamma_right_string(80);
  for (std::size_t L = 1; L <= 6; ++L) {
    CHECK(omega_windows(p, L).windows.words() == tail_windows(right, right.size() / 2, L));
  }
  CHECK(omega_windows(p, 3).windows.words() ==
        words({"000", "002", "021", "111", "112", "120", "200", "211"}));
}

TEST_CASE("alpha windows of example tails") {
  CHECK(alpha_windows(ex::shrinking_gaps_backward(), 2).windows.words() ==
        words({"00", "01", "10"}));
  CHECK(alpha_windows(ScheduledPoint::periodic({0}, {}, Side::left), 1).windows.words() ==
        words({"0"}));
  CHECK(alpha_windows(ex::three_spike_backward(), 2).windows.words() ==
        words({"00", "03", "30"}));
  std::string left = gamma_left_string(80);
  for (std::size_t L = 1; L <= 6; ++L) {
    CHECK(alpha_windows(ex::gamma_example_point(), L).windows.words() ==
          tail_windows(left.substr(0, left.size() / 2), 0, L));
  }
  CHECK_THROWS_AS(alpha_windows(ex::spike_point(1), 2), Error);
  CHECK_THROWS_AS(omega_windows(ex::three_spike_backward(), 2), Error);
}

TEST_CASE("gamma windows") {
  TwoSidedPoint x = ex::gamma_example_point();
  CHECK(gamma_windows(x, 1).windows.words() == words({"0", "1"}));
  CHECK(gamma_windows(x, 2).windows.words() == words({"00", "11"}));
  TwoSidedPoint zero(ScheduledPoint::periodic({0}, {}, Side::left), {},
                     ScheduledPoint::periodic({0}));
  for (std::size_t L = 1; L <= 5; ++L) {
    CHECK(gamma_windows(zero, L).windows.words() == std::set<Word>{Word(L, 0)});
  }
  // Disjoint tails give an empty γ set.
  TwoSidedPoint split(ScheduledPoint::periodic({0}, {}, Side::left), {},
                      ScheduledPoint::periodic({1}));
  CHECK(gamma_windows(split, 1).windows.empty());
}

TEST_CASE("exact omega windows agree with the empirical scan") {
  std::vector<Point> corpus{ex::spike_point(1), ex::spike_point(2), ex::gamma_example_point(),
                            ScheduledPoint::periodic(digits_word("011"), digits_word("2")),
                            ScheduledPoint(digits_word("1"), {Block::power({2}, 1, 2, 1, {0})})};
  for (const Point& p : corpus) {
    for (std::size_t L = 1; L <= 4; ++L) {
      LimitWindows empirical = omega_windows_empirical(p, L, {1 << 12, 1 << 20});
      CHECK_FALSE(empirical.provenance.is_exact());
      CHECK(empirical.windows == omega_windows(p, L).windows);
    }
  }
}

TEST_CASE("empirical windows of prefixes") {
  std::string s = spike_string('1', 300);
  Word prefix = digits_word(s);
  LimitWindows w = omega_windows_of_prefix(prefix, 2, {512, 1 << 20});
  CHECK(w.windows.words() == words({"00", "01", "10"}));
  CHECK(w.provenance.cutoff >= 1024);
  Word tiny = digits_word("0101");
  try {
    omega_windows_of_prefix(tiny, 2, {256, 1024});
    FAIL("expected non-stabilized");
  } catch (const Error& e) {
    CHECK(e.kind() == Error::Kind::non_stabilized);
  }
  // Reading-order left tail ...0^2 1 0 1: reversed scan.
  std::string left;
  for (std::size_t n = 300; n >= 1; --n) left += std::string(n, '0') + "1";
  CHECK(alpha_windows_of_prefix(digits_word(left), 2, {512, 1 << 20}).windows.words() ==
        words({"00", "01", "10"}));
}

TEST_CASE("is_ict examples") {
  Alphabet a4 = ex::four_symbols();
  CHECK(is_ict(ex::spike_family(a4, {1, 2}), 2));
  Alphabet a2 = Alphabet::digits(2);
  ClosedSetSpec two_fixed = ClosedSetSpec::from_points(
      a2, {ScheduledPoint::periodic({0}), ScheduledPoint::periodic({1})});
  CHECK_FALSE(is_ict(two_fixed, 1));
  CHECK(is_ict(ex::fixed_zero(a2), 3));
  CHECK(is_ict(ex::period_two(a2), 3));
  // A single non-fixed 2-window class without a cycle is not ICT.
  ClosedSetSpec empty = ClosedSetSpec::from_family(a2, {WindowSet(1, {}), WindowSet(2, {})},
                                                   Provenance::exact());
  CHECK_FALSE(is_ict(empty, 0));
}

TEST_CASE("is_ict on the golden mean shift matches a chain search") {
  std::vector<Word> forbidden{digits_word("11")};
  auto reps = oracle::periodic_points(2, forbidden, 9);
  ClosedSetSpec gm = ex::golden_mean_spec();
  for (std::size_t k = 0; k <= 4; ++k) {
    // The representatives cover every (k+2)-cylinder.
    std::set<Word> covered;
    for (const auto& r : reps) {
      Word w;
      for (std::size_t i = 0; i < k + 2; ++i) w.push_back(r.at(i));
      covered.insert(w);
    }
    REQUIRE(covered == gm.windows(k + 2).words());
    CHECK(is_ict(gm, k) == oracle::chains_connect_all(reps, k));
    CHECK(is_ict(gm, k));
  }
  // Two fixed points: chain search and graph test both refuse.
  std::vector<Word> split{digits_word("01"), digits_word("10")};
  auto split_reps = oracle::periodic_points(2, split, 4);
  ClosedSetSpec s = ClosedSetSpec::from_sft(sft_from_forbidden(Alphabet::digits(2), split));
  for (std::size_t k = 0; k <= 3; ++k) {
    CHECK_FALSE(oracle::chains_connect_all(split_reps, k));
    CHECK_FALSE(is_ict(s, k));
  }
}

TEST_CASE("enumerate maximal ICT classes") {
  auto gm = enumerate_maximal_ict(ex::golden_mean(), 1);
  REQUIRE(gm.size() == 1);
  CHECK(gm[0].words() == words({"00", "01", "10"}));

  auto split = enumerate_maximal_ict(
      sft_from_forbidden(Alphabet::digits(2), {digits_word("01"), digits_word("10")}), 1);
  REQUIRE(split.size() == 2);
  CHECK(split[0].words() == words({"00"}));
  CHECK(split[1].words() == words({"11"}));

  SubshiftSFT cover = window_cover(ex::shrinking_gaps_space(), 4);
  auto spikes = enumerate_maximal_ict(cover, 2);
  REQUIRE(spikes.size() == 1);
  CHECK(spikes[0].words() == words({"000", "001", "010", "100"}));
}

TEST_CASE("chain component check") {
  SubshiftSFT full3 = sft_from_forbidden(Alphabet::digits(3), {});
  CHECK(chain_component_check(WindowSet(2, words({"00", "11"})), full3, 1));
  CHECK(chain_component_check(WindowSet(2, words({"00"})), ex::golden_mean(), 1));
  SubshiftSFT split =
      sft_from_forbidden(Alphabet::digits(2), {digits_word("01"), digits_word("10")});
  CHECK_FALSE(chain_component_check(WindowSet(2, words({"00", "11"})), split, 1));
  CHECK_THROWS_AS(chain_component_check(WindowSet(2, words({"11"})), ex::golden_mean(), 1), Error);
}

TEST_CASE("window hausdorff examples") {
  Alphabet a2 = Alphabet::digits(2);
  CHECK(window_hausdorff(ex::fixed_zero(a2), ex::fixed_zero(a2), 6).is_zero());
  ClosedSetSpec omega_x = ClosedSetSpec::omega_of(a2, ex::spike_point(1));
  CHECK(window_hausdorff(omega_x, ex::fixed_zero(a2), 4) == Dyadic::pow2_neg(0));

  // Golden mean language recomputed by brute force.
  std::vector<WindowSet> family;
  for (std::size_t L = 1; L <= 6; ++L) {
    family.emplace_back(L, oracle::language(2, {digits_word("11")}, L));
  }
  ClosedSetSpec brute = ClosedSetSpec::from_family(a2, family, Provenance::exact());
  CHECK(window_hausdorff(ex::golden_mean_spec(), brute, 5).is_zero());

  // Agreement up to resolution 1 gives the bound 2^-1.
  ClosedSetSpec p2 = ex::period_two(a2);
  std::vector<WindowSet> truncated{p2.windows(1), p2.windows(2), WindowSet(3, words({"010"}))};
  ClosedSetSpec cut = ClosedSetSpec::from_family(a2, truncated, Provenance::exact());
  CHECK(window_hausdorff(p2, cut, 2) == Dyadic::pow2_neg(1));
  CHECK(window_hausdorff(cut, p2, 2) == Dyadic::pow2_neg(1));
}

TEST_CASE("dyadic order") {
  CHECK(Dyadic::zero() < Dyadic::pow2_neg(30));
  CHECK(Dyadic::pow2_neg(3) < Dyadic::pow2_neg(2));
  CHECK(Dyadic::pow2_neg(2).value() == doctest::Approx(0.25));
  CHECK(Dyadic::pow2_neg(2).str() == "2^-2");
  CHECK(Dyadic::zero().str() == "0");
}

TEST_CASE("limit window sets of exact points are ICT and strongly invariant") {
  Alphabet a4 = ex::four_symbols();
  std::vector<ClosedSetSpec> specs{
      ClosedSetSpec::omega_of(a4, ex::spike_point(1)),
      ClosedSetSpec::omega_of(a4, ex::spike_point(2)),
      ClosedSetSpec::alpha_of(a4, ex::three_spike_backward()),
      ClosedSetSpec::alpha_of(a4, ex::shrinking_gaps_backward()),
      ClosedSetSpec::omega_of(a4, ex::gamma_example_point()),
      ClosedSetSpec::alpha_of(a4, ex::gamma_example_point()),
      ClosedSetSpec::omega_of(a4, ScheduledPoint::periodic(digits_word("0112"), digits_word("3"))),
  };
  for (const ClosedSetSpec& spec : specs) {
    for (std::size_t k = 0; k <= 4; ++k) {
      CHECK(is_ict(spec, k));
      CHECK(spec.factorial_consistent(k + 2));
      BlockGraph g = resolution_graph(spec, k);
      Adjacency preds = reversed(g.successors);
      for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        CHECK(!g.successors[v].empty());
        CHECK(!preds[v].empty());
      }
    }
  }
}

TEST_CASE("alpha sets are closed under their own follower relation") {
  // Every L-window of a forward walk in the α-graph lies in the α-set.
  Alphabet a4 = ex::four_symbols();
  for (const ScheduledPoint& tail : {ex::three_spike_backward(), ex::shrinking_gaps_backward()}) {
    ClosedSetSpec alpha = ClosedSetSpec::alpha_of(a4, tail);
    for (std::size_t L = 2; L <= 5; ++L) {
      BlockGraph g = block_graph(alpha.windows(L - 1), &alpha.windows(L));
      for (std::size_t u = 0; u < g.vertices.size(); ++u) {
        for (std::size_t v : g.successors[u]) {
          Word fused = g.vertices[u];
          fused.push_back(g.vertices[v].back());
          CHECK(alpha.windows(L).contains(fused));
        }
      }
      CHECK(alpha.windows(L).factors(L - 1) == alpha.windows(L - 1));
    }
  }
}

TEST_CASE("spec cache is shared across threads") {
  ClosedSetSpec gm = ex::golden_mean_spec();
  std::vector<std::thread> threads;
  std::vector<std::size_t> sizes(8);
  for (std::size_t t = 0; t < sizes.size(); ++t) {
    threads.emplace_back([&, t] { sizes[t] = gm.windows(10).size(); });
  }
  for (auto& th : threads) th.join();
  for (std::size_t s : sizes) CHECK(s == 144);
}

TEST_CASE("spec serialization") {
  std::string text = ex::period_two(Alphabet::digits(2)).serialize(2);
  CHECK(text == "spec period-2 exact one-sided\nL=1\n0\n1\nL=2\n01\n10\n");
}

TEST_CASE("window cover reproduces the set windows") {
  ClosedSetSpec growing = ex::growing_gaps_space();
  for (std::size_t L = 2; L <= 5; ++L) {
    SubshiftSFT cover = window_cover(growing, L);
    CHECK(cover.language(L) == growing.windows(L));
    CHECK(cover.language(L - 1) == growing.windows(L - 1));
  }
}
