#include <algorithm>

#include "json.hpp"
#include "limitsets/error.hpp"
#include "limitsets/interval.hpp"

namespace limitsets {

std::size_t BoxGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& s : successors) n += s.size();
  return n;
}

std::vector<std::size_t> BoxGraph::boxes_containing(const Rat& x) const {
  std::vector<std::size_t> out;
  if (x < a || x > b) return out;
  mpz_class i = floor_of(Rat((x - a) / h));
  std::size_t j = std::min<std::size_t>(i.get_ui(), count - 1);
  if (j > 0 && box_lo(j) == x) out.push_back(j - 1);
  out.push_back(j);
  return out;
}

BoxGraph box_graph(const PiecewiseMap& f, const Rat& h, const Rat& fatten) {
  if (h <= 0 || fatten < 0) fail(Error::Kind::precondition, "box graph needs h > 0 and fatten ≥ 0");
  Rat cells = (f.hi() - f.lo()) / h;
  if (cells.get_den() != 1) fail(Error::Kind::precondition, "h must divide the domain length");
  BoxGraph g{f.lo(), f.hi(), h, fatten, cells.get_num().get_ui(), {}};
  g.successors.resize(g.count);
  for (std::size_t i = 0; i < g.count; ++i) {
    auto [lo, hi] = f.image(g.box_lo(i), g.box_hi(i));
    Rat L = lo - fatten, U = hi + fatten;
    // Box j meets [L, U] iff a + jh ≤ U and a + (j+1)h ≥ L.
    mpz_class j_min = ceil_of(Rat((L - g.a) / h - 1));
    mpz_class j_max = floor_of(Rat((U - g.a) / h));
    if (j_min < 0) j_min = 0;
    if (j_max > static_cast<long>(g.count - 1)) j_max = static_cast<long>(g.count - 1);
    for (mpz_class j = j_min; j <= j_max; ++j) g.successors[i].push_back(j.get_ui());
  }
  return g;
}

std::set<std::size_t> chain_recurrent_outer(const BoxGraph& g) {
  std::set<std::size_t> out;
  for (const auto& comp : strongly_connected_components(g.successors)) {
    if (has_cycle(g.successors, comp)) out.insert(comp.begin(), comp.end());
  }
  return out;
}

std::set<std::size_t> chain_recurrent_outer(const PiecewiseMap& f, const Rat& h, const Rat& fatten) {
  return chain_recurrent_outer(box_graph(f, h, fatten));
}

bool box_ict(const BoxGraph& g, const std::set<std::size_t>& boxes) {
  if (boxes.empty()) return false;
  std::vector<std::size_t> ids(boxes.begin(), boxes.end());
  Adjacency sub(ids.size());
  for (std::size_t u = 0; u < ids.size(); ++u) {
    for (std::size_t v : g.successors.at(ids[u])) {
      auto it = std::lower_bound(ids.begin(), ids.end(), v);
      if (it != ids.end() && *it == v) sub[u].push_back(static_cast<std::size_t>(it - ids.begin()));
    }
  }
  auto comps = strongly_connected_components(sub);
  return comps.size() == 1 && has_cycle(sub, comps.front());
}

namespace {

std::size_t bits(const Rat& r) {
  return std::max(mpz_sizeinbase(r.get_num_mpz_t(), 2), mpz_sizeinbase(r.get_den_mpz_t(), 2));
}

void push_checked(std::vector<Rat>& v, Rat x, std::size_t budget) {
  if (bits(x) > budget) {
    fail(Error::Kind::budget, "pseudo-orbit entry needs more than " + std::to_string(budget) + " bits");
  }
  if (v.size() > 4096) fail(Error::Kind::budget, "pseudo-orbit longer than 4096 entries");
  v.push_back(std::move(x));
}

void check_obligations(const PiecewiseMap& f, FalsificationCertificate& c) {
  const std::vector<Rat>& e = c.orbit.entries;
  c.pseudo_orbit_ok = !e.empty() && e.front() == c.z0 && verify_pseudo_orbit_num(f, c.orbit).ok;
  auto [mn, mx] = f.image(0, 1);
  c.invariant_ok = mn >= 0 && mx <= 1;
  Rat ball_lo = c.z0 - c.epsilon, ball_hi = c.z0 + c.epsilon;
  c.ball_inside_ok = c.epsilon > 0 && ball_lo >= 0 && std::min(ball_hi, f.hi()) <= 1;
  c.separation_ok = !e.empty() && e.back() < Rat(-3, 4) && -e.back() > c.epsilon;
}

}  // namespace

FalsificationCertificate falsify_shadowing_ex44(const Rat& epsilon, const Rat& delta, std::size_t bit_budget) {
  if (!(delta > 0 && delta < Rat(1, 4))) fail(Error::Kind::precondition, "falsification needs 0 < δ < 1/4");
  if (epsilon <= 0) fail(Error::Kind::precondition, "falsification needs ε > 0");
  PiecewiseMap f = parabola_pair_map();
  FalsificationCertificate c;
  c.epsilon = epsilon;
  c.delta = delta;
  c.z0 = Rat(3, 4);
  c.jump = delta / 2;
  std::vector<Rat>& e = c.orbit.entries;
  c.orbit.delta = delta;
  Rat z = c.z0;
  push_checked(e, z, bit_budget);
  while (z >= delta) {
    z = f.eval(z);
    push_checked(e, z, bit_budget);
  }
  c.squaring_steps = e.size();
  push_checked(e, Rat(0), bit_budget);
  Rat w = -c.jump;
  push_checked(e, w, bit_budget);
  while (w >= Rat(-3, 4)) {
    w = f.eval(w);
    push_checked(e, w, bit_budget);
  }
  c.left_steps = e.size() - c.squaring_steps - 1;
  check_obligations(f, c);
  return c;
}

bool recheck_falsification(const PiecewiseMap& f, const FalsificationCertificate& cert) {
  FalsificationCertificate c = cert;
  check_obligations(f, c);
  return c.no_shadow();
}

std::string falsification_json(const FalsificationCertificate& c) {
  nlohmann::json j;
  j["epsilon"] = rat_str(c.epsilon);
  j["delta"] = rat_str(c.delta);
  j["z0"] = rat_str(c.z0);
  j["jump"] = rat_str(c.jump);
  j["length"] = c.orbit.entries.size();
  j["squaring_steps"] = c.squaring_steps;
  j["left_steps"] = c.left_steps;
  std::vector<std::string> entries;
  for (const Rat& r : c.orbit.entries) entries.push_back(rat_str(r));
  j["entries"] = entries;
  j["obligations"] = {{"pseudo_orbit", c.pseudo_orbit_ok},
                      {"invariant", c.invariant_ok},
                      {"ball_inside", c.ball_inside_ok},
                      {"separation", c.separation_ok}};
  j["no_shadow"] = c.no_shadow();
  return j.dump(2);
}

}  // namespace limitsets
