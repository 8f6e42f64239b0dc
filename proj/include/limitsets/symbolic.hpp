#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "limitsets/graph.hpp"

namespace limitsets {

/// Index of a symbol in its Alphabet. Symbol order is alphabet order.
using Symbol = std::uint8_t;
using Word = std::vector<Symbol>;

/// Ordered finite set of distinct symbol names.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  /// Alphabet {"0", "1", ..., "n-1"}.
  static Alphabet digits(std::size_t n);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Symbol s) const { return names_.at(s); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Symbol> find(std::string_view name) const;

  /// Every symbol name is a single character, so words serialize juxtaposed.
  bool single_char() const noexcept { return single_char_; }

  /// Juxtaposed symbols for single-character alphabets, comma-separated
  /// symbol names otherwise. Throws Error(parse) on unknown symbols.
  Word parse(std::string_view text) const;
  std::string format(const Word& word) const;

  bool operator==(const Alphabet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  bool single_char_ = true;
};

/// Word over the digit alphabet, e.g. digits_word("0102"). For tests and
/// built-in examples.
Word digits_word(std::string_view digits);

Word reversed(Word word);

/// u · s^{slope·n + offset} · v. A literal block has slope = offset = 0 and
/// contributes u·v for every n.
struct Block {
  Word prefix;
  Symbol symbol = 0;
  std::uint64_t slope = 0;
  std::uint64_t offset = 0;
  Word suffix;

  static Block literal(Word word) { return Block{std::move(word), 0, 0, 0, {}}; }
  static Block power(Word prefix, Symbol symbol, std::uint64_t slope, std::uint64_t offset,
                     Word suffix = {}) {
    return Block{std::move(prefix), symbol, slope, offset, std::move(suffix)};
  }

  bool growing() const noexcept { return slope > 0; }
  std::uint64_t exponent(std::uint64_t n) const noexcept { return slope * n + offset; }
  std::uint64_t length(std::uint64_t n) const noexcept {
    return prefix.size() + exponent(n) + suffix.size();
  }
  void append_to(std::uint64_t n, Word& out) const;
};

enum class Side { right, left };

/// One-sided sequence transient · w_1 · w_2 · … with w_n the concatenation
/// of the schedule blocks evaluated at n. A left-side point denotes the
/// leftward tail … w_2 · w_1 · transient (words in reading order, transient
/// adjacent to the origin).
///
/// The "outward" index counts away from the origin: for a right-side point it
/// is the ordinary position, for a left-side point outward index t is
/// position -1-t.
class ScheduledPoint {
 public:
  ScheduledPoint(Word transient, std::vector<Block> schedule, Side side = Side::right);

  /// transient · period^∞ (or ^∞period · transient on the left).
  static ScheduledPoint periodic(Word period, Word transient = {}, Side side = Side::right);

  Side side() const noexcept { return side_; }
  const Word& transient() const noexcept { return transient_; }
  const std::vector<Block>& schedule() const noexcept { return schedule_; }
  bool growing() const noexcept;
  /// Segment w_n in reading order.
  Word segment(std::uint64_t n) const;
  std::uint64_t segment_length(std::uint64_t n) const;

  Symbol outward_at(std::uint64_t t) const;
  /// Outward symbols t, t+1, …, t+len-1.
  Word outward(std::uint64_t start, std::size_t len) const;

  /// Symbols at positions i..i+L-1 of the denoted sequence. Right points
  /// cover i >= 0, left points cover i + L <= 0; otherwise Error(out_of_side).
  Word window(std::int64_t i, std::size_t L) const;

  /// For schedules made of literal blocks only: (transient outward length,
  /// period length) of the outward stream.
  std::optional<std::pair<std::size_t, std::size_t>> eventual_period() const;

  /// Mirror to the other side; the outward stream is unchanged.
  ScheduledPoint mirrored() const;

 private:
  Word transient_;
  std::vector<Block> schedule_;
  Side side_;
};

/// Bi-infinite sequence: left occupies i < 0, center starts at i = 0, right
/// follows the center.
class TwoSidedPoint {
 public:
  TwoSidedPoint(ScheduledPoint left, Word center, ScheduledPoint right);

  /// word[origin] sits at index 0; ^∞left_period · word · right_period^∞.
  static TwoSidedPoint from_window(const Word& left_period, const Word& word, std::size_t origin,
                                   const Word& right_period);

  const ScheduledPoint& left() const noexcept { return left_; }
  const Word& center() const noexcept { return center_; }
  const ScheduledPoint& right() const noexcept { return right_; }

  Symbol at(std::int64_t i) const;
  Word window(std::int64_t i, std::size_t L) const;

 private:
  ScheduledPoint left_;
  Word center_;
  ScheduledPoint right_;
};

using Point = std::variant<ScheduledPoint, TwoSidedPoint>;

Word window_at(const Point& p, std::int64_t i, std::size_t L);
bool is_two_sided(const Point& p);

/// Finite set of equal-length words. May be empty (e.g. a γ-limit window set).
class WindowSet {
 public:
  WindowSet() = default;
  WindowSet(std::size_t length, std::set<Word> words);

  std::size_t length() const noexcept { return length_; }
  const std::set<Word>& words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  bool contains(const Word& w) const { return words_.count(w) != 0; }
  auto begin() const { return words_.begin(); }
  auto end() const { return words_.end(); }

  /// All length-L factors of the words.
  WindowSet factors(std::size_t L) const;
  WindowSet intersect(const WindowSet& other) const;
  WindowSet reversed_words() const;
  bool subset_of(const WindowSet& other) const;

  /// "L=<n>" header, then the sorted words one per line.
  std::string serialize(const Alphabet& alphabet) const;
  static WindowSet parse(const Alphabet& alphabet, std::string_view text);

  bool operator==(const WindowSet& other) const {
    return length_ == other.length_ && words_ == other.words_;
  }
  bool operator!=(const WindowSet& other) const { return !(*this == other); }

 private:
  std::size_t length_ = 0;
  std::set<Word> words_;
};

/// L-windows of the word (all factors of length L).
WindowSet windows_of(const Word& word, std::size_t L);

/// Higher-block presentation: vertices are k-words (sorted), u → v when they
/// overlap in k-1 symbols and, if an extension set was supplied, the fused
/// (k+1)-word belongs to it.
struct BlockGraph {
  std::size_t k = 0;
  std::vector<Word> vertices;
  Adjacency successors;

  std::optional<std::size_t> index_of(const Word& w) const;
  std::size_t edge_count() const;
  std::string to_dot(const Alphabet& alphabet, std::string_view name = "block_graph") const;
};

/// Builds the block graph of k-words. With `extensions` (a (k+1)-window set)
/// every (k+1)-word's two k-factors must be vertices, else Error(inconsistency).
BlockGraph block_graph(const WindowSet& windows, const WindowSet* extensions = nullptr);

/// Shift of finite type given by forbidden words, pruned to the symbols that
/// occur in some bi-infinite admissible sequence.
class SubshiftSFT {
 public:
  /// Throws Error(empty_subshift) when no bi-infinite admissible point exists.
  static SubshiftSFT from_forbidden(Alphabet alphabet, std::vector<Word> forbidden);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::set<Word>& forbidden() const noexcept { return forbidden_; }
  std::size_t memory() const noexcept { return memory_; }
  /// Symbols that occur in no bi-infinite admissible sequence.
  const std::vector<Symbol>& pruned_symbols() const noexcept { return pruned_; }

  /// Contains no forbidden factor.
  bool admissible(const Word& w) const;

  /// Admissible L-words occurring in some bi-infinite admissible point.
  WindowSet language(std::size_t L) const;

  /// Least symbol s keeping `context · s` admissible and continuable forever
  /// (context trimmed to the last vertex_length() symbols).
  std::optional<Symbol> least_forward_symbol(const Word& context) const;
  /// Same to the left: least s with s · context admissible and continuable.
  std::optional<Symbol> least_backward_symbol(const Word& context) const;

  /// Length of the vertex words of the internal presentation, max(memory, 1).
  std::size_t vertex_length() const noexcept { return vertex_length_; }

  /// Text format: first line the alphabet symbols separated by spaces,
  /// then one forbidden word per line ('#' starts a comment).
  static SubshiftSFT parse(std::string_view text);
  std::string serialize() const;

 private:
  SubshiftSFT(Alphabet alphabet, std::set<Word> forbidden);

  std::optional<std::size_t> vertex_index(const Word& w) const;

  Alphabet alphabet_;
  std::set<Word> forbidden_;
  std::size_t memory_ = 0;
  std::size_t vertex_length_ = 1;
  std::vector<Symbol> pruned_;
  // Presentation on all admissible vertex-length words.
  std::vector<Word> vertices_;
  Adjacency graph_;
  std::vector<bool> core_;      // bi-essential
  std::vector<bool> forward_;   // infinite forward continuation
  std::vector<bool> backward_;  // infinite backward continuation
};

/// sft_from_forbidden: alias kept for readability at call sites.
inline SubshiftSFT sft_from_forbidden(Alphabet alphabet, std::vector<Word> forbidden) {
  return SubshiftSFT::from_forbidden(std::move(alphabet), std::move(forbidden));
}

}  // namespace limitsets
