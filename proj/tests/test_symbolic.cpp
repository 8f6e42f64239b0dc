#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "limitsets/error.hpp"
#include "limitsets/symbolic.hpp"
#include "oracles.hpp"

using namespace limitsets;
using oracle::repeat;

namespace {
std::set<Word> words(std::initializer_list<const char*> list) {
  std::set<Word> out;
  for (const char* w : list) out.insert(digits_word(w));
  return out;
}

SubshiftSFT golden() { return sft_from_forbidden(Alphabet::digits(2), {digits_word("11")}); }

// 1 0 1 0^2 1 0^3 ... as a string, for direct indexing.
std::string spike_string(char spike, std::size_t segments) {
  std::string s;
  for (std::size_t n = 1; n <= segments; ++n) s += spike + std::string(n, '0');
  return s;
}

Word str_word(const std::string& s) { return digits_word(s); }
}  // namespace

TEST_CASE("sft construction and memory") {
  SubshiftSFT gm = golden();
  CHECK(gm.memory() == 1);
  CHECK(gm.pruned_symbols().empty());

  SubshiftSFT one = sft_from_forbidden(Alphabet::digits(1), {});
  CHECK(one.memory() == 0);
  CHECK(one.language(3).words() == words({"000"}));

  try {
    sft_from_forbidden(Alphabet::digits(2), {digits_word("0"), digits_word("1")});
    FAIL("expected empty subshift");
  } catch (const Error& e) {
    CHECK(e.kind() == Error::Kind::empty_subshift);
  }
}

TEST_CASE("dead symbols are pruned and reported") {
  // 2 may only be followed by 2 and only be preceded by... nothing: "02","12" forbidden,
  // so 2 appears only in 2^∞ which is fine; forbid "22" too and 2 dies.
  SubshiftSFT s = sft_from_forbidden(
      Alphabet::digits(3), {digits_word("02"), digits_word("12"), digits_word("22")});
  REQUIRE(s.pruned_symbols().size() == 1);
  CHECK(s.pruned_symbols()[0] == 2);
  CHECK(s.language(1).words() == words({"0", "1"}));
}

TEST_CASE("language examples") {
  CHECK(golden().language(2).words() == words({"00", "01", "10"}));
  SubshiftSFT full = sft_from_forbidden(Alphabet::digits(2), {});
  CHECK(full.language(3).size() == 8);
  SubshiftSFT ten = sft_from_forbidden(Alphabet::digits(2), {digits_word("10")});
  CHECK(ten.language(2).words() == words({"00", "01", "11"}));
}

TEST_CASE("language matches brute-force extension search") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t q = 2 + static_cast<std::size_t>(trial % 2);
    auto forbidden = oracle::random_forbidden(rng, q, 3, 1 + static_cast<std::size_t>(trial % 4));
    std::optional<SubshiftSFT> sft;
    try {
      sft.emplace(sft_from_forbidden(Alphabet::digits(q), forbidden));
    } catch (const Error& e) {
      CHECK(e.kind() == Error::Kind::empty_subshift);
      CHECK(oracle::language(q, forbidden, 1).empty());
      continue;
    }
    for (std::size_t L = 1; L <= 4; ++L) {
      CHECK(sft->language(L).words() == oracle::language(q, forbidden, L));
    }
  }
}

TEST_CASE("language is factorial") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    auto forbidden = oracle::random_forbidden(rng, 3, 3, 3);
    try {
      SubshiftSFT sft = sft_from_forbidden(Alphabet::digits(3), forbidden);
      for (std::size_t L = 2; L <= 5; ++L) {
        for (std::size_t Lp = 1; Lp <= L; ++Lp) {
          CHECK(sft.language(L).factors(Lp) == sft.language(Lp));
        }
      }
    } catch (const Error&) {
    }
  }
}

TEST_CASE("block graph examples") {
  WindowSet ext = golden().language(2);
  BlockGraph g = block_graph(golden().language(1), &ext);
  REQUIRE(g.vertices == std::vector<Word>{digits_word("0"), digits_word("1")});
  CHECK(g.successors == Adjacency{{0, 1}, {0}});

  BlockGraph loop = block_graph(WindowSet(1, words({"0"})));
  CHECK(loop.successors == Adjacency{{0}});

  BlockGraph two = block_graph(WindowSet(2, words({"01", "10"})));
  CHECK(two.successors == Adjacency{{1}, {0}});
  CHECK(two.edge_count() == 2);
}

TEST_CASE("block graph rejects non-factorial extension sets") {
  WindowSet vertices(1, words({"0"}));
  WindowSet ext(2, words({"00", "01"}));
  try {
    block_graph(vertices, &ext);
    FAIL("expected inconsistency");
  } catch (const Error& e) {
    CHECK(e.kind() == Error::Kind::inconsistency);
  }
}

TEST_CASE("block graph equals admissible de Bruijn subgraph") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t q = 2 + static_cast<std::size_t>(trial % 2);
    auto forbidden = oracle::random_forbidden(rng, q, 3, 2);
    std::optional<SubshiftSFT> sft;
    try {
      sft.emplace(sft_from_forbidden(Alphabet::digits(q), forbidden));
    } catch (const Error&) {
      continue;
    }
    for (std::size_t k = 1; k <= 4; ++k) {
      auto verts = oracle::language(q, forbidden, k);
      auto fused = oracle::language(q, forbidden, k + 1);
      WindowSet ext = sft->language(k + 1);
      BlockGraph g = block_graph(sft->language(k), &ext);
      REQUIRE(g.vertices == std::vector<Word>(verts.begin(), verts.end()));
      std::set<std::pair<Word, Word>> expected, actual;
      for (const Word& u : verts) {
        for (const Word& v : verts) {
          Word f = u;
          f.push_back(v.back());
          if (std::equal(u.begin() + 1, u.end(), v.begin()) && fused.count(f)) {
            expected.emplace(u, v);
          }
        }
      }
      for (std::size_t u = 0; u < g.vertices.size(); ++u) {
        for (std::size_t v : g.successors[u]) actual.emplace(g.vertices[u], g.vertices[v]);
      }
      CHECK(actual == expected);
    }
  }
}

TEST_CASE("window_at on example points") {
  ScheduledPoint x({}, {Block::power({1}, 0, 1, 0)});
  CHECK(window_at(x, 0, 5) == digits_word("10100"));

  TwoSidedPoint p(ScheduledPoint::periodic({0}, {}, Side::left), {}, ScheduledPoint::periodic({1}));
  CHECK(window_at(p, -2, 4) == digits_word("0011"));

  // y = 2 0 2 0^2 2 0^3 ...: positions 3..6 read 0,0,2,0.
  ScheduledPoint y({}, {Block::power({2}, 0, 1, 0)});
  std::string ys = spike_string('2', 10);
  CHECK(window_at(y, 3, 4) == str_word(ys.substr(3, 4)));
  CHECK(window_at(y, 3, 4) == digits_word("0020"));
}

TEST_CASE("scheduled points agree with their expanded strings") {
  ScheduledPoint x({}, {Block::power({1}, 0, 1, 0)});
  std::string xs = spike_string('1', 60);
  for (std::size_t i = 0; i < 500; i += 7) {
    for (std::size_t L : {1u, 4u, 13u}) {
      CHECK(x.window(static_cast<std::int64_t>(i), L) == str_word(xs.substr(i, L)));
    }
  }
  // Left tail ... 0^3 1 0^2 1 0 1 ending at index -1.
  ScheduledPoint left({}, {Block::power({}, 0, 1, 0, {1})}, Side::left);
  std::string reading;
  for (std::size_t n = 60; n >= 1; --n) reading += std::string(n, '0') + "1";
  const auto total = static_cast<std::int64_t>(reading.size());
  for (std::int64_t i = -1; i > -400; i -= 5) {
    std::size_t L = 3;
    if (i + static_cast<std::int64_t>(L) > 0) continue;
    CHECK(left.window(i, L) == str_word(reading.substr(static_cast<std::size_t>(total + i), L)));
  }
  CHECK(left.window(-3, 3) == digits_word("101"));
}

TEST_CASE("window extraction is shift consistent") {
  TwoSidedPoint p(ScheduledPoint({}, {Block::power({3}, 0, 1, 0)}, Side::left),
                  digits_word("1201"), ScheduledPoint({}, {Block::power({2}, 1, 2, 1)}));
  for (std::int64_t i = -60; i < 60; ++i) {
    for (std::size_t L = 2; L < 9; ++L) {
      Word w = p.window(i, L);
      CHECK(p.window(i + 1, L - 1) == Word(w.begin() + 1, w.end()));
      CHECK(w[0] == p.at(i));
    }
  }
}

TEST_CASE("one-sided points refuse negative indices") {
  ScheduledPoint x = ScheduledPoint::periodic({0});
  CHECK_THROWS_AS(x.window(-1, 2), Error);
  ScheduledPoint left = ScheduledPoint::periodic({0}, {}, Side::left);
  CHECK_THROWS_AS(left.window(-1, 2), Error);
  CHECK(left.window(-2, 2) == digits_word("00"));
}

TEST_CASE("mirroring keeps the outward stream") {
  ScheduledPoint x(digits_word("21"), {Block::power({1}, 0, 1, 0, {2}), Block::literal({3})});
  ScheduledPoint m = x.mirrored();
  CHECK(m.side() == Side::left);
  CHECK(m.outward(0, 80) == x.outward(0, 80));
  Word head = x.outward(0, 57);
  CHECK(x.outward(17, 40) == Word(head.begin() + 17, head.end()));
}

TEST_CASE("eventually periodic points") {
  ScheduledPoint x = ScheduledPoint::periodic(digits_word("01"), digits_word("222"));
  REQUIRE(x.eventual_period());
  CHECK(x.eventual_period()->first == 3);
  CHECK(x.eventual_period()->second == 2);
  CHECK(x.window(1000001, 3) == digits_word("010"));
  TwoSidedPoint t = TwoSidedPoint::from_window({0}, digits_word("0110"), 1, {1});
  CHECK(t.window(-3, 8) == digits_word("00011011"));
}

TEST_CASE("alphabet formats") {
  Alphabet a = Alphabet::digits(3);
  CHECK(a.format(a.parse("0120")) == "0120");
  CHECK_THROWS_AS(a.parse("013"), Error);
  Alphabet named({"a", "bb", "c"});
  CHECK_FALSE(named.single_char());
  CHECK(named.parse("bb,a,c") == Word{1, 0, 2});
  CHECK(named.format(Word{1, 0}) == "bb,a");
  CHECK_THROWS_AS(Alphabet({"a", "a"}), Error);
}

TEST_CASE("sft text format round trip") {
  SubshiftSFT s = SubshiftSFT::parse("# golden mean\n0 1\n11   # no two ones\n");
  CHECK(s.memory() == 1);
  CHECK(s.language(2).words() == words({"00", "01", "10"}));
  SubshiftSFT back = SubshiftSFT::parse(s.serialize());
  CHECK(back.forbidden() == s.forbidden());
  try {
    SubshiftSFT::parse("0 1\n12\n");
    FAIL("expected parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == Error::Kind::parse);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(SubshiftSFT::parse("# nothing\n"), Error);
}

TEST_CASE("window set serialization round trip") {
  Alphabet a = Alphabet::digits(2);
  WindowSet w(3, words({"001", "010", "100"}));
  std::string text = w.serialize(a);
  CHECK(text == "L=3\n001\n010\n100\n");
  CHECK(WindowSet::parse(a, text) == w);
  CHECK(WindowSet::parse(a, "L=2\n") == WindowSet(2, {}));
  CHECK_THROWS_AS(WindowSet::parse(a, "L=2\n001\n"), Error);
}

TEST_CASE("least extension symbols stay continuable") {
  // 0 may be followed by 0 or 1, 1 by 2 only, 2 by 0; forbid 12 -> 1 has no future
  // except via... nothing: 1 is dead forward, so after 0 the least continuable is 0.
  SubshiftSFT s = sft_from_forbidden(
      Alphabet::digits(3), {digits_word("10"), digits_word("11"), digits_word("12")});
  CHECK(s.least_forward_symbol(digits_word("0")) == Symbol{0});
  CHECK(golden().least_forward_symbol(digits_word("1")) == Symbol{0});
  CHECK(golden().least_backward_symbol(digits_word("1")) == Symbol{0});
  CHECK(repeat("ab", 3) == "ababab");
}
