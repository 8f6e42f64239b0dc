#include "limitsets/symbolic.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <sstream>

#include "limitsets/error.hpp"

namespace limitsets {

// ---------------------------------------------------------------- alphabet

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) fail(Error::Kind::precondition, "alphabet must be nonempty");
  if (names_.size() > 256) fail(Error::Kind::precondition, "alphabet larger than 256 symbols");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) fail(Error::Kind::precondition, "empty symbol name");
    if (names_[i].find_first_of(", \t\r\n") != std::string::npos) {
      fail(Error::Kind::precondition, "symbol name '" + names_[i] + "' contains a separator");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) {
        fail(Error::Kind::precondition, "duplicate symbol '" + names_[i] + "'");
      }
    }
    if (names_[i].size() != 1) single_char_ = false;
  }
}

Alphabet Alphabet::digits(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return Alphabet(std::move(names));
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<Symbol>(i);
  }
  return std::nullopt;
}

Word Alphabet::parse(std::string_view text) const {
  Word out;
  auto push = [&](std::string_view token) {
    auto s = find(token);
    if (!s) fail(Error::Kind::parse, "unknown symbol '" + std::string(token) + "'");
    out.push_back(*s);
  };
  if (single_char_) {
    for (char c : text) push(std::string_view(&c, 1));
    return out;
  }
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    push(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string Alphabet::format(const Word& word) const {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!single_char_ && i > 0) out += ',';
    out += name(word[i]);
  }
  return out;
}

Word digits_word(std::string_view digits) {
  Word out;
  out.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9') fail(Error::Kind::parse, std::string("not a digit: ") + c);
    out.push_back(static_cast<Symbol>(c - '0'));
  }
  return out;
}

Word reversed(Word word) {
  std::reverse(word.begin(), word.end());
  return word;
}

// ------------------------------------------------------------------ points

void Block::append_to(std::uint64_t n, Word& out) const {
  out.insert(out.end(), prefix.begin(), prefix.end());
  out.insert(out.end(), exponent(n), symbol);
  out.insert(out.end(), suffix.begin(), suffix.end());
}

ScheduledPoint::ScheduledPoint(Word transient, std::vector<Block> schedule, Side side)
    : transient_(std::move(transient)), schedule_(std::move(schedule)), side_(side) {
  if (schedule_.empty()) fail(Error::Kind::precondition, "schedule must have at least one block");
  // Lengths are nondecreasing in n, so a nonempty first segment suffices.
  if (segment_length(1) == 0) fail(Error::Kind::precondition, "schedule produces empty segments");
}

ScheduledPoint ScheduledPoint::periodic(Word period, Word transient, Side side) {
  return ScheduledPoint(std::move(transient), {Block::literal(std::move(period))}, side);
}

bool ScheduledPoint::growing() const noexcept {
  return std::any_of(schedule_.begin(), schedule_.end(), [](const Block& b) { return b.growing(); });
}

Word ScheduledPoint::segment(std::uint64_t n) const {
  Word out;
  for (const Block& b : schedule_) b.append_to(n, out);
  return out;
}

std::uint64_t ScheduledPoint::segment_length(std::uint64_t n) const {
  std::uint64_t total = 0;
  for (const Block& b : schedule_) total += b.length(n);
  return total;
}

Word ScheduledPoint::outward(std::uint64_t start, std::size_t len) const {
  Word out;
  out.reserve(len);
  if (len == 0) return out;
  const Word head = side_ == Side::right ? transient_ : reversed(transient_);
  std::uint64_t pos = 0;
  auto take = [&](const Word& piece) {
    // Appends the part of `piece` (occupying [pos, pos+size)) that falls in
    // the requested range.
    std::uint64_t end = pos + piece.size();
    if (end > start && out.size() < len) {
      std::uint64_t from = start > pos ? start - pos : 0;
      for (std::uint64_t t = from; t < piece.size() && out.size() < len; ++t) {
        out.push_back(piece[t]);
      }
    }
    pos = end;
  };
  take(head);
  if (out.size() == len) return out;

  if (auto period = eventual_period()) {
    // Jump straight to the period containing `start`.
    const Word seg = side_ == Side::right ? segment(1) : reversed(segment(1));
    if (start > pos) {
      std::uint64_t skip = (start - pos) / seg.size();
      pos += skip * seg.size();
    }
    while (out.size() < len) take(seg);
    return out;
  }
  for (std::uint64_t n = 1; out.size() < len; ++n) {
    std::uint64_t seg_len = segment_length(n);
    if (pos + seg_len <= start) {
      pos += seg_len;
      continue;
    }
    Word seg = segment(n);
    if (side_ == Side::left) std::reverse(seg.begin(), seg.end());
    take(seg);
  }
  return out;
}

Symbol ScheduledPoint::outward_at(std::uint64_t t) const { return outward(t, 1).front(); }

Word ScheduledPoint::window(std::int64_t i, std::size_t L) const {
  const auto len = static_cast<std::int64_t>(L);
  if (side_ == Side::right) {
    if (i < 0) fail(Error::Kind::out_of_side, "right-side point has no index " + std::to_string(i));
    return outward(static_cast<std::uint64_t>(i), L);
  }
  if (i + len > 0) {
    fail(Error::Kind::out_of_side,
         "left-side point window [" + std::to_string(i) + ", " + std::to_string(i + len) +
             ") reaches index >= 0");
  }
  Word w = outward(static_cast<std::uint64_t>(-i - len), L);
  std::reverse(w.begin(), w.end());
  return w;
}

std::optional<std::pair<std::size_t, std::size_t>> ScheduledPoint::eventual_period() const {
  if (growing()) return std::nullopt;
  return std::make_pair(transient_.size(), static_cast<std::size_t>(segment_length(1)));
}

ScheduledPoint ScheduledPoint::mirrored() const {
  std::vector<Block> blocks;
  for (auto it = schedule_.rbegin(); it != schedule_.rend(); ++it) {
    blocks.push_back(Block{reversed(it->suffix), it->symbol, it->slope, it->offset,
                           reversed(it->prefix)});
  }
  return ScheduledPoint(reversed(transient_), std::move(blocks),
                        side_ == Side::right ? Side::left : Side::right);
}

TwoSidedPoint::TwoSidedPoint(ScheduledPoint left, Word center, ScheduledPoint right)
    : left_(std::move(left)), center_(std::move(center)), right_(std::move(right)) {
  if (left_.side() != Side::left || right_.side() != Side::right) {
    fail(Error::Kind::precondition, "two-sided point needs a left tail and a right tail");
  }
}

TwoSidedPoint TwoSidedPoint::from_window(const Word& left_period, const Word& word,
                                         std::size_t origin, const Word& right_period) {
  if (origin > word.size()) fail(Error::Kind::precondition, "origin outside the word");
  Word left_part(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(origin));
  Word center(word.begin() + static_cast<std::ptrdiff_t>(origin), word.end());
  return TwoSidedPoint(ScheduledPoint::periodic(left_period, std::move(left_part), Side::left),
                       std::move(center), ScheduledPoint::periodic(right_period));
}

Symbol TwoSidedPoint::at(std::int64_t i) const {
  if (i < 0) return left_.outward_at(static_cast<std::uint64_t>(-1 - i));
  auto u = static_cast<std::uint64_t>(i);
  if (u < center_.size()) return center_[u];
  return right_.outward_at(u - center_.size());
}

Word TwoSidedPoint::window(std::int64_t i, std::size_t L) const {
  Word out;
  out.reserve(L);
  const auto len = static_cast<std::int64_t>(L);
  const auto csize = static_cast<std::int64_t>(center_.size());
  std::int64_t end = i + len;
  if (i < 0) {
    std::int64_t left_end = std::min<std::int64_t>(end, 0);
    Word part = left_.window(i, static_cast<std::size_t>(left_end - i));
    out.insert(out.end(), part.begin(), part.end());
  }
  for (std::int64_t p = std::max<std::int64_t>(i, 0); p < std::min(end, csize); ++p) {
    out.push_back(center_[static_cast<std::size_t>(p)]);
  }
  if (end > csize) {
    std::int64_t from = std::max(i, csize);
    Word part = right_.outward(static_cast<std::uint64_t>(from - csize),
                               static_cast<std::size_t>(end - from));
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Word window_at(const Point& p, std::int64_t i, std::size_t L) {
  return std::visit([&](const auto& point) { return point.window(i, L); }, p);
}

bool is_two_sided(const Point& p) { return std::holds_alternative<TwoSidedPoint>(p); }

// -------------------------------------------------------------- windowsets

WindowSet::WindowSet(std::size_t length, std::set<Word> words)
    : length_(length), words_(std::move(words)) {
  for (const Word& w : words_) {
    if (w.size() != length_) {
      fail(Error::Kind::precondition, "window of length " + std::to_string(w.size()) +
                                          " in a set of length " + std::to_string(length_));
    }
  }
}

WindowSet WindowSet::factors(std::size_t L) const {
  if (L > length_) fail(Error::Kind::precondition, "factor length exceeds window length");
  std::set<Word> out;
  for (const Word& w : words_) {
    for (std::size_t i = 0; i + L <= w.size(); ++i) {
      out.emplace(w.begin() + static_cast<std::ptrdiff_t>(i),
                  w.begin() + static_cast<std::ptrdiff_t>(i + L));
    }
  }
  return WindowSet(L, std::move(out));
}

WindowSet WindowSet::intersect(const WindowSet& other) const {
  if (other.length_ != length_) fail(Error::Kind::precondition, "intersecting different lengths");
  std::set<Word> out;
  std::set_intersection(words_.begin(), words_.end(), other.words_.begin(), other.words_.end(),
                        std::inserter(out, out.end()));
  return WindowSet(length_, std::move(out));
}

WindowSet WindowSet::reversed_words() const {
  std::set<Word> out;
  for (const Word& w : words_) out.insert(reversed(w));
  return WindowSet(length_, std::move(out));
}

bool WindowSet::subset_of(const WindowSet& other) const {
  return length_ == other.length_ &&
         std::includes(other.words_.begin(), other.words_.end(), words_.begin(), words_.end());
}

std::string WindowSet::serialize(const Alphabet& alphabet) const {
  std::string out = "L=" + std::to_string(length_) + "\n";
  for (const Word& w : words_) out += alphabet.format(w) + "\n";
  return out;
}

WindowSet WindowSet::parse(const Alphabet& alphabet, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line.rfind("L=", 0) != 0) {
    fail(Error::Kind::parse, "window set must start with 'L=<n>'");
  }
  std::size_t L = 0;
  try {
    L = std::stoul(line.substr(2));
  } catch (const std::exception&) {
    fail(Error::Kind::parse, "bad window length in '" + line + "'");
  }
  std::set<Word> words;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    Word w = alphabet.parse(line);
    if (w.size() != L) {
      fail(Error::Kind::parse, "line " + std::to_string(line_no) + ": word of wrong length");
    }
    words.insert(std::move(w));
  }
  return WindowSet(L, std::move(words));
}

WindowSet windows_of(const Word& word, std::size_t L) {
  std::set<Word> out;
  for (std::size_t i = 0; i + L <= word.size(); ++i) {
    out.emplace(word.begin() + static_cast<std::ptrdiff_t>(i),
                word.begin() + static_cast<std::ptrdiff_t>(i + L));
  }
  return WindowSet(L, std::move(out));
}

// ------------------------------------------------------------ block graphs

std::optional<std::size_t> BlockGraph::index_of(const Word& w) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), w);
  if (it == vertices.end() || *it != w) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

std::size_t BlockGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& s : successors) total += s.size();
  return total;
}

std::string BlockGraph::to_dot(const Alphabet& alphabet, std::string_view name) const {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (const Word& v : vertices) out << "  \"" << alphabet.format(v) << "\";\n";
  for (std::size_t u = 0; u < vertices.size(); ++u) {
    for (std::size_t v : successors[u]) {
      out << "  \"" << alphabet.format(vertices[u]) << "\" -> \"" << alphabet.format(vertices[v])
          << "\";\n";
    }
  }
  out << "}\n";
  return out.str();
}

BlockGraph block_graph(const WindowSet& windows, const WindowSet* extensions) {
  BlockGraph g;
  g.k = windows.length();
  if (g.k == 0) fail(Error::Kind::precondition, "block graph needs k >= 1");
  g.vertices.assign(windows.begin(), windows.end());
  g.successors.assign(g.vertices.size(), {});
  if (extensions != nullptr) {
    if (extensions->length() != g.k + 1) {
      fail(Error::Kind::inconsistency, "extension set must have length k+1");
    }
    for (const Word& fused : *extensions) {
      Word head(fused.begin(), fused.end() - 1);
      Word tail(fused.begin() + 1, fused.end());
      auto u = g.index_of(head);
      auto v = g.index_of(tail);
      if (!u || !v) {
        fail(Error::Kind::inconsistency,
             "window family is not factorial: a (k+1)-window has a k-factor outside the k-windows");
      }
      g.successors[*u].push_back(*v);
    }
  } else {
    for (std::size_t u = 0; u < g.vertices.size(); ++u) {
      for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        if (std::equal(g.vertices[u].begin() + 1, g.vertices[u].end(), g.vertices[v].begin())) {
          g.successors[u].push_back(v);
        }
      }
    }
  }
  for (auto& s : g.successors) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return g;
}

// ------------------------------------------------------------------- SFTs

SubshiftSFT::SubshiftSFT(Alphabet alphabet, std::set<Word> forbidden)
    : alphabet_(std::move(alphabet)), forbidden_(std::move(forbidden)) {
  std::size_t longest = 0;
  for (const Word& w : forbidden_) {
    if (w.empty()) fail(Error::Kind::precondition, "forbidden words must be nonempty");
    for (Symbol s : w) {
      if (s >= alphabet_.size()) fail(Error::Kind::precondition, "forbidden word outside alphabet");
    }
    longest = std::max(longest, w.size());
  }
  memory_ = longest == 0 ? 0 : longest - 1;
  vertex_length_ = std::max<std::size_t>(memory_, 1);

  // All admissible vertex-length words, in lexicographic order.
  Word current(vertex_length_, 0);
  const std::size_t q = alphabet_.size();
  while (true) {
    if (admissible(current)) vertices_.push_back(current);
    std::size_t pos = vertex_length_;
    while (pos > 0 && current[pos - 1] + 1u == q) current[--pos] = 0;
    if (pos == 0) break;
    ++current[pos - 1];
  }
  graph_.assign(vertices_.size(), {});
  for (std::size_t u = 0; u < vertices_.size(); ++u) {
    Word fused = vertices_[u];
    fused.push_back(0);
    for (std::size_t s = 0; s < q; ++s) {
      fused.back() = static_cast<Symbol>(s);
      if (!admissible(fused)) continue;
      Word tail(fused.begin() + 1, fused.end());
      if (auto v = vertex_index(tail)) graph_[u].push_back(*v);
    }
    std::sort(graph_[u].begin(), graph_[u].end());
  }
  core_ = bi_essential(graph_);
  forward_ = forward_essential(graph_);
  backward_ = forward_essential(reversed(graph_));

  std::vector<bool> used(q, false);
  bool any = false;
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (!core_[v]) continue;
    any = true;
    for (Symbol s : vertices_[v]) used[s] = true;
  }
  if (!any) fail(Error::Kind::empty_subshift, "no bi-infinite admissible sequence exists");
  for (std::size_t s = 0; s < q; ++s) {
    if (!used[s]) pruned_.push_back(static_cast<Symbol>(s));
  }
}

SubshiftSFT SubshiftSFT::from_forbidden(Alphabet alphabet, std::vector<Word> forbidden) {
  return SubshiftSFT(std::move(alphabet), std::set<Word>(forbidden.begin(), forbidden.end()));
}

std::optional<std::size_t> SubshiftSFT::vertex_index(const Word& w) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), w);
  if (it == vertices_.end() || *it != w) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool SubshiftSFT::admissible(const Word& w) const {
  for (const Word& f : forbidden_) {
    if (f.size() <= w.size() && std::search(w.begin(), w.end(), f.begin(), f.end()) != w.end()) {
      return false;
    }
  }
  return true;
}

WindowSet SubshiftSFT::language(std::size_t L) const {
  if (L == 0) fail(Error::Kind::precondition, "language length must be >= 1");
  std::set<Word> out;
  if (L <= vertex_length_) {
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      if (!core_[v]) continue;
      for (std::size_t i = 0; i + L <= vertex_length_; ++i) {
        out.emplace(vertices_[v].begin() + static_cast<std::ptrdiff_t>(i),
                    vertices_[v].begin() + static_cast<std::ptrdiff_t>(i + L));
      }
    }
    return WindowSet(L, std::move(out));
  }
  // Paths of L - vertex_length edges inside the core.
  const std::size_t steps = L - vertex_length_;
  std::vector<std::pair<std::size_t, Word>> frontier;
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (core_[v]) frontier.emplace_back(v, vertices_[v]);
  }
  for (std::size_t step = 0; step < steps; ++step) {
    std::vector<std::pair<std::size_t, Word>> next;
    for (auto& [v, word] : frontier) {
      for (std::size_t w : graph_[v]) {
        if (!core_[w]) continue;
        Word longer = word;
        longer.push_back(vertices_[w].back());
        next.emplace_back(w, std::move(longer));
      }
    }
    frontier = std::move(next);
  }
  for (auto& entry : frontier) out.insert(std::move(entry.second));
  return WindowSet(L, std::move(out));
}

std::optional<Symbol> SubshiftSFT::least_forward_symbol(const Word& context) const {
  if (context.size() < vertex_length_) return std::nullopt;
  Word tail(context.end() - static_cast<std::ptrdiff_t>(vertex_length_), context.end());
  auto u = vertex_index(tail);
  if (!u) return std::nullopt;
  for (std::size_t v : graph_[*u]) {  // sorted, so symbols ascend
    if (forward_[v]) return vertices_[v].back();
  }
  return std::nullopt;
}

std::optional<Symbol> SubshiftSFT::least_backward_symbol(const Word& context) const {
  if (context.size() < vertex_length_) return std::nullopt;
  Word head(context.begin(), context.begin() + static_cast<std::ptrdiff_t>(vertex_length_));
  auto v = vertex_index(head);
  if (!v) return std::nullopt;
  std::optional<Symbol> best;
  for (std::size_t u = 0; u < vertices_.size(); ++u) {
    if (!backward_[u]) continue;
    if (std::binary_search(graph_[u].begin(), graph_[u].end(), *v)) {
      Symbol s = vertices_[u].front();
      if (!best || s < *best) best = s;
    }
  }
  return best;
}

SubshiftSFT SubshiftSFT::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<Alphabet> alphabet;
  std::vector<Word> forbidden;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    line.erase(0, first);
    try {
      if (!alphabet) {
        std::istringstream names_in(line);
        std::vector<std::string> names;
        for (std::string name; names_in >> name;) names.push_back(name);
        alphabet.emplace(std::move(names));
      } else {
        Word w = alphabet->parse(line);
        if (w.empty()) fail(Error::Kind::parse, "empty forbidden word");
        forbidden.push_back(std::move(w));
      }
    } catch (const Error& e) {
      fail(Error::Kind::parse, "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!alphabet) fail(Error::Kind::parse, "missing alphabet line");
  return from_forbidden(std::move(*alphabet), std::move(forbidden));
}

std::string SubshiftSFT::serialize() const {
  std::string out;
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    if (i > 0) out += ' ';
    out += alphabet_.name(static_cast<Symbol>(i));
  }
  out += '\n';
  for (const Word& w : forbidden_) out += alphabet_.format(w) + '\n';
  return out;
}

}  // namespace limitsets
