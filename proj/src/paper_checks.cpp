#include "limitsets/paper_checks.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "limitsets/construct.hpp"
#include "limitsets/error.hpp"
#include "limitsets/examples.hpp"
#include "limitsets/interval.hpp"
#include "limitsets/io.hpp"

namespace limitsets {

namespace ex = examples;

namespace {

struct Corpus {
  std::string dir;

  template <class F>
  auto load(const std::string& file, F parse) const {
    std::string path = dir + "/" + file;
    try {
      return parse(read_file(path));
    } catch (const Error& e) {
      throw Error(e.kind(), path + ": " + e.what());
    }
  }
  PointLibrary points() const { return load("points.json", parse_point_library); }
  SubshiftSFT sft(const std::string& name) const {
    return load(name + ".sft", [](const std::string& t) { return SubshiftSFT::parse(t); });
  }
  PiecewiseMap map(const std::string& name) const {
    return load(name + ".map", [](const std::string& t) { return PiecewiseMap::parse(t); });
  }
};

using Results = std::vector<CheckResult>;

void add(Results& out, const std::string& id, std::string claim, std::string expectation, std::string computed,
         std::string provenance, bool pass) {
  out.push_back({id, std::move(claim), std::move(expectation), std::move(computed), std::move(provenance), pass});
}

// First L ≤ L_max where the window sets differ, 0 when all agree.
std::size_t first_difference(const ClosedSetSpec& a, const ClosedSetSpec& b, std::size_t L_max) {
  for (std::size_t L = 1; L <= L_max; ++L) {
    if (a.windows(L) != b.windows(L)) return L;
  }
  return 0;
}

std::string agreement_text(std::size_t diff, std::size_t L_max) {
  if (diff == 0) return "equal for L <= " + std::to_string(L_max);
  return "differ at L = " + std::to_string(diff);
}

std::string words_text(const WindowSet& w, const Alphabet& a) {
  std::string out = "{";
  for (const Word& word : w) out += (out.size() > 1 ? "," : "") + a.format(word);
  return out + "}";
}

ScheduledPoint zero_left() { return ScheduledPoint::periodic({0}, {}, Side::left); }
ScheduledPoint zero_right() { return ScheduledPoint::periodic({0}); }

Results check_spikes(const Corpus& c) {
  const std::string id = "spikes";
  Results out;
  PointLibrary lib = c.points();
  const Alphabet& a = lib.alphabet;
  struct Limit {
    std::string name;
    ClosedSetSpec computed;
    ClosedSetSpec claimed;
  };
  std::vector<Limit> limits{
      {"omega(x) = {0^inf, 0^n 1 0^inf}", ClosedSetSpec::omega_of(a, lib.get("spike1")), ex::spike_family(a, {1})},
      {"omega(y) = {0^inf, 0^n 2 0^inf}", ClosedSetSpec::omega_of(a, lib.get("spike2")), ex::spike_family(a, {2})},
      {"alpha(z) = {0^inf, 0^n 3 0^inf}", ClosedSetSpec::alpha_of(a, lib.get("spike3_tail")),
       ex::spike_family(a, {3})},
  };
  for (const Limit& l : limits) {
    std::size_t diff = first_difference(l.computed, l.claimed, 4);
    add(out, id, l.name + " (windows, L <= 4)", "stated", agreement_text(diff, 4), "exact", diff == 0);
  }
  std::vector<ClosedSetSpec> computed{limits[0].computed, limits[1].computed, limits[2].computed,
                                      ex::fixed_zero(a)};
  for (const std::vector<Symbol>& spikes :
       std::vector<std::vector<Symbol>>{{1, 2}, {1, 3}, {2, 3}, {1, 2, 3}}) {
    ClosedSetSpec extra = ex::spike_family(a, spikes);
    bool ict = true;
    for (std::size_t k = 0; k <= 3; ++k) ict = ict && is_ict(extra, k);
    add(out, id, "extra set " + extra.label() + " is ICT (k <= 3)", "stated", ict ? "ICT" : "not ICT", "exact", ict);
    bool apart = true;
    std::string dists;
    for (const ClosedSetSpec& s : computed) {
      Dyadic d = window_hausdorff(extra, s, 1);
      apart = apart && !d.is_zero();
      dists += (dists.empty() ? "" : ",") + d.str();
    }
    add(out, id, "extra set " + extra.label() + " is no computed alpha/omega set (d_H at k = 1 > 0)", "stated",
        "d_H = " + dists, "exact", apart);
  }
  return out;
}

bool box_set_equals(const BoxSet& s, std::initializer_list<Rat> points, std::string& text) {
  std::set<std::size_t> want;
  for (const Rat& p : points) want.insert(s.grid.box_of(p));
  text = std::to_string(s.boxes.size()) + " boxes";
  if (s.boxes.size() <= 8) {
    text += ":";
    for (std::size_t b : s.boxes) text += " [" + rat_str(s.grid.box_lo(b)) + "," + rat_str(s.grid.box_hi(b)) + ")";
  }
  return s.boxes == want;
}

Results check_plateau(const Corpus& c) {
  const std::string id = "plateau";
  Results out;
  PiecewiseMap f = c.map("plateau");
  Rat res(1, 32);
  BoxSet a1 = neg_limit_A1(f, 0, 12, res);
  add(out, id, "A1 negative limit set of 0 is [-1,1] (D = 12, res = 1/32)", "stated",
      std::to_string(a1.boxes.size()) + " of " + std::to_string(a1.grid.count) + " boxes", a1.provenance.str(),
      a1.boxes.size() == a1.grid.count);
  BoxSet a2 = neg_limit_trajectories(f, 0, NegLimitMode::A2, 12, res);
  std::string text;
  bool ok = box_set_equals(a2, {-1, 0, 1}, text);
  add(out, id, "A2 negative limit set of 0 is {-1,0,1} (D = 12, res = 1/32)", "stated", text, a2.provenance.str(), ok);
  return out;
}

Results check_folded_tent(const Corpus& c) {
  const std::string id = "folded-tent";
  Results out;
  PiecewiseMap f = c.map("folded_tent");
  Rat res(1, 32);
  std::string text;
  BoxSet a2 = neg_limit_trajectories(f, 0, NegLimitMode::A2, 12, res);
  bool ok2 = box_set_equals(a2, {Rat(2, 3), 2}, text);
  add(out, id, "A2 negative limit set of 0 is {2/3,2} (D = 12, res = 1/32)", "stated", text, a2.provenance.str(), ok2);
  BoxSet a3 = neg_limit_trajectories(f, 0, NegLimitMode::A3, 12, res);
  bool ok3 = box_set_equals(a3, {0, Rat(2, 3), 2}, text);
  add(out, id, "A3 negative limit set of 0 is {0,2/3,2} (D = 12, res = 1/32)", "stated", text, a3.provenance.str(),
      ok3);
  return out;
}

Results check_parabolas(const Corpus& c) {
  const std::string id = "parabolas";
  Results out;
  PiecewiseMap f = c.map("parabola_pair");
  FalsificationCertificate cert = falsify_shadowing_ex44(Rat(1, 3), Rat(1, 64));
  bool rechecked = recheck_falsification(f, cert);
  add(out, id, "no shadowing: a 1/64-pseudo-orbit no point 1/3-shadows", "stated",
      "length " + std::to_string(cert.orbit.entries.size()) + ", obligations " + (rechecked ? "re-verified" : "FAILED"),
      "exact", rechecked);
  Rat h(1, 128), two_h(1, 64);
  BoxGraph g = box_graph(f, h, Rat(1, 256));
  auto cr = chain_recurrent_outer(g);
  bool near = true;
  for (std::size_t b : cr) {
    bool any = false;
    for (int q : {-1, 0, 1}) any = any || (g.box_lo(b) <= q + two_h && g.box_hi(b) >= q - two_h);
    near = near && any;
  }
  add(out, id, "ICT sets lie in {-1,0,1} (chain recurrent boxes within 2h, h = 1/128)", "derived",
      std::to_string(cr.size()) + " chain recurrent boxes", "exact", near);
  bool singletons = true;
  for (int q : {-1, 0, 1}) {
    auto boxes = g.boxes_containing(q);
    singletons = singletons && box_ict(g, std::set<std::size_t>(boxes.begin(), boxes.end()));
  }
  add(out, id, "{-1}, {0}, {1} are ICT (box level)", "stated", singletons ? "all three" : "not all", "exact",
      singletons);
  return out;
}

Results check_gamma(const Corpus& c) {
  const std::string id = "gamma";
  Results out;
  PointLibrary lib = c.points();
  const auto* x = std::get_if<TwoSidedPoint>(&lib.get("gamma"));
  if (!x) fail(Error::Kind::parse, "corpus point 'gamma' must be two-sided");
  bool equal = true;
  std::vector<WindowSet> family;
  for (std::size_t L = 1; L <= 4; ++L) {
    family.push_back(gamma_windows(*x, L).windows);
    equal = equal && family.back().words() == std::set<Word>{Word(L, 0), Word(L, 1)};
  }
  add(out, id, "gamma(x) = {0^inf, 1^inf} (windows, L <= 4)", "stated",
      "L=2: " + words_text(family[1], lib.alphabet), "exact", equal);
  ClosedSetSpec spec = ClosedSetSpec::from_family(lib.alphabet, family, Provenance::exact());
  bool ict = is_ict(spec, 1);
  add(out, id, "gamma(x) is not ICT (k = 1)", "stated", ict ? "ICT" : "not ICT", "exact", !ict);
  bool one = chain_component_check(family[1], c.sft("full3"), 1);
  add(out, id, "gamma(x) lies in one chain component of the full 3-shift (k = 1)", "stated",
      one ? "one component" : "split", "exact", one);
  return out;
}

// ICT classes of the space versus the α and ω sides at resolutions k ≤ 3.
Results compare_sides(const std::string& id, const ClosedSetSpec& space, const ClosedSetSpec& equal_side,
                      const std::string& equal_name, const std::string& other_name) {
  Results out;
  const Alphabet& a = space.alphabet();
  ClosedSetSpec zero = ex::fixed_zero(a);
  bool same = true, differs = true;
  std::string same_text, diff_text;
  for (std::size_t k = 0; k <= 3; ++k) {
    auto classes = enumerate_maximal_ict(window_cover(space, k + 2), k);
    const WindowSet& top = equal_side.windows(k + 1);
    bool eq = classes.size() == 1 && classes[0] == top && is_ict(zero, k);
    if (!eq && same) {
      same_text = "k = " + std::to_string(k) + ": " + std::to_string(classes.size()) + " maximal class(es), ";
      for (const WindowSet& w : classes) {
        for (const Word& word : w) {
          if (!top.contains(word)) {
            same_text += "extra window " + a.format(word);
            break;
          }
        }
      }
    }
    same = same && eq;
    bool some_other = false;
    for (const WindowSet& w : classes) some_other = some_other || w != zero.windows(k + 1);
    if (!some_other && differs) diff_text = "k = " + std::to_string(k) + ": classes equal {0^inf}";
    differs = differs && some_other;
  }
  add(out, id, "ICT = " + equal_name + " (maximal classes and {0^inf}, k <= 3)", "stated",
      same ? "equal for k <= 3" : same_text, "exact", same);
  add(out, id, "ICT differs from " + other_name + " (k <= 3)", "stated", differs ? "differs for k <= 3" : diff_text,
      "exact", differs);
  return out;
}

Results check_growing_gaps(const Corpus& c) {
  PointLibrary lib = c.points();
  const Point& x = lib.get("growing_gaps");
  if (!std::holds_alternative<ScheduledPoint>(x)) fail(Error::Kind::parse, "corpus point 'growing_gaps' must be one-sided");
  TwoSidedPoint full(zero_left(), {}, std::get<ScheduledPoint>(x));
  ClosedSetSpec space = ClosedSetSpec::from_points(lib.alphabet, {full}, ClosedSetSpec::Indexing::one_sided, "X");
  ClosedSetSpec omega = ClosedSetSpec::omega_of(lib.alphabet, x);
  Results out = compare_sides("growing-gaps", space, omega, "omega side", "closure of the alpha side");
  ClosedSetSpec alpha = ClosedSetSpec::alpha_of(lib.alphabet, full);
  std::size_t diff = first_difference(alpha, ex::fixed_zero(lib.alphabet), 4);
  add(out, "growing-gaps", "alpha side = {0^inf} (windows, L <= 4)", "stated", agreement_text(diff, 4), "exact",
      diff == 0);
  return out;
}

Results check_shrinking_gaps(const Corpus& c) {
  PointLibrary lib = c.points();
  const Point& tail = lib.get("shrinking_gaps_tail");
  if (!std::holds_alternative<ScheduledPoint>(tail)) {
    fail(Error::Kind::parse, "corpus point 'shrinking_gaps_tail' must be one-sided");
  }
  TwoSidedPoint full(std::get<ScheduledPoint>(tail), {1}, zero_right());
  ClosedSetSpec space = ClosedSetSpec::from_points(lib.alphabet, {full}, ClosedSetSpec::Indexing::one_sided, "X");
  ClosedSetSpec alpha = ClosedSetSpec::alpha_of(lib.alphabet, full);
  Results out = compare_sides("shrinking-gaps", space, alpha, "alpha side", "closure of the omega side");
  ClosedSetSpec omega = ClosedSetSpec::omega_of(lib.alphabet, full);
  std::size_t diff = first_difference(omega, ex::fixed_zero(lib.alphabet), 4);
  add(out, "shrinking-gaps", "omega side = {0^inf} (windows, L <= 4)", "stated", agreement_text(diff, 4), "exact",
      diff == 0);
  return out;
}

Results check_realization(const Corpus& c) {
  const std::string id = "realization";
  Results out;
  SubshiftSFT gm = c.sft("golden_mean");
  Alphabet a2 = Alphabet::digits(2);
  std::vector<ClosedSetSpec> specs{ex::fixed_zero(a2), ex::period_two(a2), ClosedSetSpec::from_sft(gm),
                                   ex::spike_family(Alphabet::digits(3), {1, 2})};
  for (const ClosedSetSpec& spec : specs) {
    FullTrajectory t = build_full_trajectory(spec, 4, std::size_t{1} << 20);
    Dyadic da = window_hausdorff(ClosedSetSpec::alpha_of(spec.alphabet(), t.point), spec, 4);
    Dyadic dw = window_hausdorff(ClosedSetSpec::omega_of(spec.alphabet(), t.point), spec, 4);
    add(out, id, "ICT set " + spec.label() + " is the alpha and omega set of one full trajectory (k <= 4)", "derived",
        "d_H(alpha) = " + da.str() + ", d_H(omega) = " + dw.str(), "exact", da.is_zero() && dw.is_zero());
  }
  bool whole = true;
  for (std::size_t k = 0; k <= 4; ++k) {
    auto classes = enumerate_maximal_ict(gm, k);
    whole = whole && classes.size() == 1 && classes[0] == gm.language(k + 1);
  }
  add(out, id, "golden mean shift: alpha = omega = ICT at the top class (k <= 4)", "stated",
      whole ? "one maximal class, the whole language" : "several classes", "exact", whole);
  return out;
}

using CheckFn = std::function<Results(const Corpus&)>;

const std::map<std::string, CheckFn>& registry() {
  static const std::map<std::string, CheckFn> r{
      {"spikes", check_spikes},
      {"plateau", check_plateau},
      {"folded-tent", check_folded_tent},
      {"parabolas", check_parabolas},
      {"gamma", check_gamma},
      {"growing-gaps", check_growing_gaps},
      {"shrinking-gaps", check_shrinking_gaps},
      {"realization", check_realization},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& paper_check_ids() {
  static const std::vector<std::string> ids{"spikes",       "plateau",        "folded-tent",    "parabolas",
                                            "gamma",        "growing-gaps",   "shrinking-gaps", "realization"};
  return ids;
}

std::string default_data_dir() { return LIMITSETS_DATA_DIR; }

std::vector<CheckResult> run_paper_check(const std::string& id, const std::string& data_dir) {
  auto it = registry().find(id);
  if (it == registry().end()) fail(Error::Kind::parse, "unknown example id '" + id + "'");
  try {
    return it->second(Corpus{data_dir});
  } catch (const Error& e) {
    return {{id, "example runs on the corpus in " + data_dir, "derived", e.what(), "-", false}};
  }
}

std::vector<CheckResult> run_paper_checks(const std::string& data_dir, const std::string& only) {
  std::vector<CheckResult> out;
  for (const std::string& id : paper_check_ids()) {
    if (!only.empty() && id != only) continue;
    auto r = run_paper_check(id, data_dir);
    out.insert(out.end(), r.begin(), r.end());
  }
  if (!only.empty() && out.empty()) fail(Error::Kind::parse, "unknown example id '" + only + "'");
  return out;
}

}  // namespace limitsets
