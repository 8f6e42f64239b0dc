#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "limitsets/error.hpp"
#include "limitsets/interval.hpp"

namespace limitsets {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool parse_flag(const std::string& s) {
  if (s == "1" || s == "true") return true;
  if (s == "0" || s == "false") return false;
  fail(Error::Kind::parse, "closedness flag must be 0/1 or true/false, got '" + s + "'");
}

std::string piece_where(const Piece& p) {
  return (p.domain.lo_closed ? "[" : "(") + rat_str(p.domain.lo) + "," + rat_str(p.domain.hi) +
         (p.domain.hi_closed ? "]" : ")");
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string s = trim(text);
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  bool slash = false, digit = false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] == '/' && !slash && digit) {
      slash = true;
      digit = false;
    } else if (std::isdigit(static_cast<unsigned char>(s[j]))) {
      digit = true;
    } else {
      digit = false;
      break;
    }
  }
  if (!digit) fail(Error::Kind::parse, "not a rational literal: '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  Rat r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0) fail(Error::Kind::parse, "not a rational literal: '" + s + "'");
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) { return r.get_str(10); }

mpz_class floor_of(const Rat& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

mpz_class ceil_of(const Rat& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

bool RatInterval::contains(const Rat& x) const {
  bool above = lo_closed ? x >= lo : x > lo;
  bool below = hi_closed ? x <= hi : x < hi;
  return above && below;
}

bool RatInterval::empty() const { return lo > hi || (lo == hi && !(lo_closed && hi_closed)); }

std::pair<Rat, Rat> Piece::range(const Rat& lo, const Rat& hi) const {
  Rat a = value(lo), b = value(hi);
  Rat mn = std::min(a, b), mx = std::max(a, b);
  if (c2 != 0) {
    Rat v = -c1 / (2 * c2);
    if (v > lo && v < hi) {
      Rat fv = value(v);
      mn = std::min(mn, fv);
      mx = std::max(mx, fv);
    }
  }
  return {mn, mx};
}

PiecewiseMap PiecewiseMap::from_pieces(std::vector<Piece> pieces, bool require_continuous) {
  if (pieces.empty()) fail(Error::Kind::parse, "map needs at least one piece");
  for (Piece& p : pieces) {
    for (Rat* r : {&p.domain.lo, &p.domain.hi, &p.c0, &p.c1, &p.c2}) r->canonicalize();
    if (p.domain.empty()) fail(Error::Kind::parse, "empty piece " + piece_where(p));
  }
  if (!pieces.front().domain.lo_closed || !pieces.back().domain.hi_closed) {
    fail(Error::Kind::parse, "the domain ends must be closed");
  }
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
    const RatInterval& u = pieces[i].domain;
    const RatInterval& v = pieces[i + 1].domain;
    if (u.hi != v.lo || u.hi_closed == v.lo_closed) {
      fail(Error::Kind::parse, "pieces " + piece_where(pieces[i]) + " and " + piece_where(pieces[i + 1]) +
                                   " do not partition the domain");
    }
  }
  PiecewiseMap f(std::move(pieces));
  for (const Piece& p : f.pieces_) {
    auto [mn, mx] = p.range(p.domain.lo, p.domain.hi);
    if (mn < f.lo() || mx > f.hi()) {
      fail(Error::Kind::parse, "piece " + piece_where(p) + " leaves the domain");
    }
  }
  if (require_continuous && !f.continuous()) fail(Error::Kind::parse, "map is not continuous");
  return f;
}

bool PiecewiseMap::continuous() const {
  for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
    const Rat& x = pieces_[i].domain.hi;
    if (pieces_[i].value(x) != pieces_[i + 1].value(x)) return false;
  }
  return true;
}

PiecewiseMap PiecewiseMap::parse(std::string_view text, bool require_continuous) {
  std::vector<Piece> pieces;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(trim(field));
    try {
      if (fields.size() != 7) fail(Error::Kind::parse, "expected 7 comma-separated fields");
      Piece p;
      p.domain = {parse_rat(fields[0]), parse_rat(fields[1]), parse_flag(fields[2]), parse_flag(fields[3])};
      p.c0 = parse_rat(fields[4]);
      p.c1 = parse_rat(fields[5]);
      p.c2 = parse_rat(fields[6]);
      pieces.push_back(std::move(p));
    } catch (const Error& e) {
      fail(Error::Kind::parse, "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return from_pieces(std::move(pieces), require_continuous);
}

std::string PiecewiseMap::serialize() const {
  std::string out = "# lo,hi,loClosed,hiClosed,c0,c1,c2\n";
  for (const Piece& p : pieces_) {
    out += rat_str(p.domain.lo) + "," + rat_str(p.domain.hi) + "," + (p.domain.lo_closed ? "1" : "0") +
           "," + (p.domain.hi_closed ? "1" : "0") + "," + rat_str(p.c0) + "," + rat_str(p.c1) + "," +
           rat_str(p.c2) + "\n";
  }
  return out;
}

const Piece& PiecewiseMap::piece_at(const Rat& x) const {
  for (const Piece& p : pieces_) {
    if (p.domain.contains(x)) return p;
  }
  fail(Error::Kind::domain, rat_str(x) + " is outside [" + rat_str(lo()) + "," + rat_str(hi()) + "]");
}

Rat PiecewiseMap::eval(const Rat& x) const { return piece_at(x).value(x); }

std::pair<Rat, Rat> PiecewiseMap::image(const Rat& l, const Rat& h) const {
  Rat a = std::max(l, lo()), b = std::min(h, hi());
  if (a > b) fail(Error::Kind::domain, "interval misses the domain");
  std::optional<std::pair<Rat, Rat>> hull;
  for (const Piece& p : pieces_) {
    RatInterval meet{std::max(a, p.domain.lo), std::min(b, p.domain.hi),
                     a > p.domain.lo || p.domain.lo_closed, b < p.domain.hi || p.domain.hi_closed};
    if (meet.empty()) continue;
    auto r = p.range(meet.lo, meet.hi);
    if (!hull) {
      hull = r;
    } else {
      hull->first = std::min(hull->first, r.first);
      hull->second = std::max(hull->second, r.second);
    }
  }
  return *hull;
}

Preimages PiecewiseMap::preimages(const Rat& y) const {
  Preimages out;
  for (const Piece& p : pieces_) {
    switch (p.degree()) {
      case 2:
        fail(Error::Kind::unsupported_piece, "preimages need affine pieces; " + piece_where(p) + " is quadratic");
      case 1: {
        Rat x = (y - p.c0) / p.c1;
        if (p.domain.contains(x)) out.points.push_back(x);
        break;
      }
      default:
        if (p.c0 == y) out.intervals.push_back(p.domain);
    }
  }
  std::sort(out.points.begin(), out.points.end());
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  return out;
}

namespace {

Piece affine(Rat lo, Rat hi, bool lo_closed, bool hi_closed, Rat c0, Rat c1, Rat c2 = 0) {
  return {{std::move(lo), std::move(hi), lo_closed, hi_closed}, std::move(c0), std::move(c1), std::move(c2)};
}

}  // namespace

PiecewiseMap plateau_map() {
  return PiecewiseMap::from_pieces({affine(-1, Rat(-1, 2), true, false, 1, 2),
                                    affine(Rat(-1, 2), Rat(1, 2), true, false, 0, 0),
                                    affine(Rat(1, 2), 1, true, true, -1, 2)});
}

PiecewiseMap folded_tent_map() {
  return PiecewiseMap::from_pieces({affine(-1, 0, true, false, 2, 2), affine(0, 1, true, false, 2, -2),
                                    affine(1, 2, true, true, -2, 2)});
}

PiecewiseMap parabola_pair_map() {
  // (x+1)^2 - 1 = x^2 + 2x on [-1, 0), x^2 on [0, 1].
  return PiecewiseMap::from_pieces({affine(-1, 0, true, false, 0, 2, 1), affine(0, 1, true, true, 0, 0, 1)});
}

PseudoOrbitNumCheck verify_pseudo_orbit_num(const PiecewiseMap& f, const PseudoOrbitNum& po) {
  for (std::size_t i = 0; i + 1 < po.entries.size(); ++i) {
    Rat jump = abs(f.eval(po.entries[i]) - po.entries[i + 1]);
    if (jump >= po.delta) return {false, i};
  }
  if (po.entries.size() == 1) f.eval(po.entries[0]);
  return {};
}

BoxGrid::BoxGrid(Rat a_, Rat b_, Rat res_) : a(std::move(a_)), b(std::move(b_)), res(std::move(res_)) {
  if (res <= 0 || b <= a) fail(Error::Kind::precondition, "grid needs res > 0 and a < b");
  count = ceil_of(Rat((b - a) / res)).get_ui();
}

std::size_t BoxGrid::box_of(const Rat& x) const {
  if (x < a || x > b) fail(Error::Kind::domain, rat_str(x) + " is outside the grid");
  std::size_t i = floor_of(Rat((x - a) / res)).get_ui();
  return std::min(i, count - 1);
}

std::string BoxSet::csv() const {
  std::string out = "# " + provenance.str() + " depth=" + std::to_string(depth) + " res=" + rat_str(grid.res) +
                    "\nbox,lo,hi\n";
  for (std::size_t i : boxes) {
    out += std::to_string(i) + "," + rat_str(grid.box_lo(i)) + "," + rat_str(std::min(grid.box_hi(i), grid.b)) + "\n";
  }
  return out;
}

namespace {

// Layered preimage tree with values deduplicated per depth.
struct PreimageTree {
  std::vector<std::vector<Rat>> layers;
  std::vector<std::vector<std::vector<std::size_t>>> children;  // children[d][i] in layers[d+1]
};

void add_sample_points(const RatInterval& iv, const BoxGrid& grid, std::vector<Rat>& out) {
  mpz_class first = ceil_of(Rat((iv.lo - grid.a) / grid.res));
  for (mpz_class i = first > 0 ? first : mpz_class(0);; ++i) {
    Rat x = grid.a + grid.res * Rat(i);
    if (x > iv.hi || x > grid.b) break;
    if (iv.contains(x)) out.push_back(x);
  }
}

PreimageTree expand(const PiecewiseMap& f, const Rat& x, std::size_t D, const BoxGrid& grid) {
  PreimageTree t;
  t.layers.push_back({x});
  for (std::size_t d = 0; d < D; ++d) {
    std::map<Rat, std::size_t> index;
    std::vector<std::vector<std::size_t>> kids(t.layers[d].size());
    for (std::size_t i = 0; i < t.layers[d].size(); ++i) {
      Preimages pre = f.preimages(t.layers[d][i]);
      std::vector<Rat> pts = pre.points;
      for (const RatInterval& iv : pre.intervals) add_sample_points(iv, grid, pts);
      for (const Rat& p : pts) {
        auto [it, fresh] = index.emplace(p, index.size());
        kids[i].push_back(it->second);
      }
      std::sort(kids[i].begin(), kids[i].end());
      kids[i].erase(std::unique(kids[i].begin(), kids[i].end()), kids[i].end());
    }
    std::vector<Rat> next(index.size());
    for (const auto& [v, i] : index) next[i] = v;
    t.layers.push_back(std::move(next));
    t.children.push_back(std::move(kids));
  }
  return t;
}

}  // namespace

BoxSet neg_limit_A1(const PiecewiseMap& f, const Rat& x, std::size_t D, const Rat& res) {
  BoxGrid grid(f.lo(), f.hi(), res);
  PreimageTree t = expand(f, x, D, grid);
  BoxSet out{grid, {}, Provenance::empirical(D), D};
  for (std::size_t d = (D + 1) / 2; d <= D; ++d) {
    for (const Rat& y : t.layers[d]) out.boxes.insert(grid.box_of(y));
  }
  return out;
}

BoxSet neg_limit_trajectories(const PiecewiseMap& f, const Rat& x, NegLimitMode mode, std::size_t D,
                              const Rat& res) {
  BoxGrid grid(f.lo(), f.hi(), res);
  PreimageTree t = expand(f, x, D, grid);
  BoxSet out{grid, {}, Provenance::empirical(D), D};
  const std::size_t from = (D + 1) / 2;
  if (mode == NegLimitMode::A3) {
    std::map<std::size_t, std::set<std::size_t>> depths;
    for (std::size_t d = from; d <= D; ++d) {
      for (const Rat& y : t.layers[d]) depths[grid.box_of(y)].insert(d);
    }
    for (const auto& [box, ds] : depths) {
      if (ds.size() >= 2) out.boxes.insert(box);
    }
    return out;
  }
  // Nodes with a descendant at depth D.
  std::vector<std::vector<bool>> alive(D + 1);
  alive[D].assign(t.layers[D].size(), true);
  for (std::size_t d = D; d-- > 0;) {
    alive[d].assign(t.layers[d].size(), false);
    for (std::size_t i = 0; i < t.layers[d].size(); ++i) {
      for (std::size_t c : t.children[d][i]) {
        if (alive[d + 1][c]) alive[d][i] = true;
      }
    }
  }
  for (std::size_t d = from; d < D; ++d) {
    for (std::size_t i = 0; i < t.layers[d].size(); ++i) {
      if (!alive[d][i]) continue;
      std::size_t box = grid.box_of(t.layers[d][i]);
      if (out.boxes.count(box)) continue;
      // Surviving descendants of this node at later depths.
      std::set<std::size_t> frontier{i};
      for (std::size_t e = d; e < D && !out.boxes.count(box); ++e) {
        std::set<std::size_t> next;
        for (std::size_t u : frontier) {
          for (std::size_t c : t.children[e][u]) {
            if (!alive[e + 1][c]) continue;
            next.insert(c);
            if (grid.box_of(t.layers[e + 1][c]) == box) out.boxes.insert(box);
          }
        }
        frontier = std::move(next);
      }
    }
  }
  return out;
}

}  // namespace limitsets
