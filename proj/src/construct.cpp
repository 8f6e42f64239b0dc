#include "limitsets/construct.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"
#include "limitsets/error.hpp"
#include "limitsets/graph.hpp"

namespace limitsets {

namespace {

Word spell(const std::vector<Word>& path) {
  Word out;
  for (std::size_t i = 1; i < path.size(); ++i) out.push_back(path[i].back());
  return out;
}

void append(Word& w, const Word& tail) { w.insert(w.end(), tail.begin(), tail.end()); }

std::vector<Word> vertices_of(const BlockGraph& g, const std::vector<std::size_t>& ids) {
  std::vector<Word> out;
  out.reserve(ids.size());
  for (std::size_t i : ids) out.push_back(g.vertices[i]);
  return out;
}

void require_ict(const ClosedSetSpec& spec, std::size_t k) {
  if (!is_ict(spec, k)) {
    fail(Error::Kind::not_chain_transitive,
         "spec '" + spec.label() + "' is not chain transitive at resolution " + std::to_string(k));
  }
}

std::vector<Word> dense_walk(const BlockGraph& g, std::size_t base) {
  std::vector<bool> seen(g.vertices.size(), false);
  seen[base] = true;
  std::vector<std::size_t> walk{base};
  std::size_t cur = base;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (seen[v]) continue;
    auto path = shortest_path(g.successors, cur, v);
    if (path.empty()) fail(Error::Kind::not_chain_transitive, "block graph vertex unreachable");
    for (std::size_t i = 1; i < path.size(); ++i) {
      seen[path[i]] = true;
      walk.push_back(path[i]);
    }
    cur = v;
  }
  auto back = shortest_path(g.successors, cur, base);
  if (back.empty()) fail(Error::Kind::not_chain_transitive, "no return path to the base window");
  walk.insert(walk.end(), back.begin() + 1, back.end());
  return vertices_of(g, walk);
}

// Appends stages to a stream; each stage starts from the current context.
class Builder {
 public:
  explicit Builder(const ClosedSetSpec& spec) : spec_(spec) {}

  void stage(std::size_t k) {
    const BlockGraph& g = graph(k);
    const Word& base = g.vertices.front();
    ChainStage st;
    st.resolution = k;
    st.eta_exponent = k;
    st.base = base;
    st.stream_begin = schedule_.stream.size();
    if (schedule_.stream.empty()) {
      schedule_.stream = base;
      st.approach = {base};
    } else {
      if (schedule_.stream.size() < k + 1) {
        fail(Error::Kind::inconsistency, "stream shorter than the stage context");
      }
      Word ctx(schedule_.stream.end() - static_cast<std::ptrdiff_t>(k + 1), schedule_.stream.end());
      auto from = g.index_of(ctx);
      if (!from) fail(Error::Kind::inconsistency, "stage context is not a window of the spec");
      if (*from == 0) {
        st.approach = {base};
      } else {
        auto path = shortest_path(g.successors, *from, 0);
        if (path.empty()) fail(Error::Kind::not_chain_transitive, "stage base unreachable");
        st.approach = vertices_of(g, path);
      }
      append(schedule_.stream, spell(st.approach));
    }
    st.walk = dense_walk(g, 0);
    append(schedule_.stream, spell(st.walk));
    schedule_.stages.push_back(std::move(st));
  }

  ChainSchedule& schedule() { return schedule_; }

 private:
  const BlockGraph& graph(std::size_t k) {
    auto it = graphs_.find(k);
    if (it != graphs_.end()) return it->second;
    require_ict(spec_, k);
    return graphs_.emplace(k, resolution_graph(spec_, k)).first->second;
  }

  const ClosedSetSpec& spec_;
  std::map<std::size_t, BlockGraph> graphs_;
  ChainSchedule schedule_;
};

std::vector<std::vector<bool>> stage_coverage(const ClosedSetSpec& spec, const ChainSchedule& s) {
  std::vector<std::vector<bool>> out;
  for (const ChainStage& st : s.stages) {
    Word w = st.base;
    append(w, spell(st.walk));
    std::vector<bool> row;
    for (std::size_t k = 0; k <= st.resolution; ++k) {
      row.push_back(spec.windows(k + 1).subset_of(windows_of(w, k + 1)));
    }
    out.push_back(std::move(row));
  }
  return out;
}

bool stages_admissible(const ClosedSetSpec& spec, const ChainSchedule& s) {
  for (std::size_t j = 0; j < s.stages.size(); ++j) {
    std::size_t L = s.stages[j].resolution + 2;
    std::size_t end = j + 1 < s.stages.size() ? s.stages[j + 1].stream_begin : s.stream.size();
    for (std::size_t p = std::max(s.stages[j].stream_begin, L - 1); p < end; ++p) {
      Word w(s.stream.begin() + static_cast<std::ptrdiff_t>(p + 1 - L),
             s.stream.begin() + static_cast<std::ptrdiff_t>(p + 1));
      if (!spec.windows(L).contains(w)) return false;
    }
  }
  return true;
}

std::size_t tail_admissible_length(const ClosedSetSpec& spec, const Point& p, std::size_t L_max,
                                   bool with_alpha) {
  std::size_t L = 0;
  while (L < L_max) {
    const WindowSet& allowed = spec.windows(L + 1);
    if (!omega_windows(p, L + 1).windows.subset_of(allowed)) break;
    if (with_alpha && !alpha_windows(p, L + 1).windows.subset_of(allowed)) break;
    ++L;
  }
  return L;
}

void check_budget(std::size_t used, std::size_t n_max) {
  if (used > n_max) {
    fail(Error::Kind::budget, "construction needs " + std::to_string(used) +
                                  " symbols, budget is " + std::to_string(n_max));
  }
}

}  // namespace

std::vector<Word> dense_chain(const ClosedSetSpec& spec, std::size_t k, const Word& base) {
  require_ict(spec, k);
  BlockGraph g = resolution_graph(spec, k);
  auto b = g.index_of(base);
  if (!b) fail(Error::Kind::precondition, "base is not a window of the spec at resolution " + std::to_string(k));
  return dense_walk(g, *b);
}

bool ConstructionCertificate::ok() const {
  for (bool b : omega_match) {
    if (!b) return false;
  }
  for (bool b : alpha_match) {
    if (!b) return false;
  }
  for (const auto& row : coverage) {
    for (bool b : row) {
      if (!b) return false;
    }
  }
  return stages_admissible && tail_admissible_length >= max_resolution + 1;
}

LimitPoint build_limit_point(const ClosedSetSpec& spec, std::size_t K, std::size_t n_max) {
  Builder b(spec);
  for (std::size_t j = 0; j <= K; ++j) b.stage(j);
  ChainSchedule schedule = std::move(b.schedule());
  Word period = spell(schedule.stages.back().walk);
  check_budget(schedule.stream.size() + period.size(), n_max);
  ScheduledPoint point = ScheduledPoint::periodic(period, schedule.stream);

  ConstructionCertificate cert;
  cert.max_resolution = K;
  for (std::size_t k = 0; k <= K; ++k) {
    cert.omega_match.push_back(omega_windows(point, k + 1).windows == spec.windows(k + 1));
  }
  cert.coverage = stage_coverage(spec, schedule);
  cert.tail_admissible_length = tail_admissible_length(spec, point, K + 2, false);
  cert.stages_admissible = stages_admissible(spec, schedule);
  return {std::move(point), std::move(schedule), std::move(cert)};
}

FullTrajectory build_full_trajectory(const ClosedSetSpec& spec, std::size_t K, std::size_t n_max) {
  Builder b(spec);
  for (std::size_t j = K + 1; j-- > 0;) b.stage(j);
  // W_0 begins where its base sits.
  std::size_t origin = b.schedule().stream.size() - spell(b.schedule().stages.back().walk).size() - 1;
  for (std::size_t j = 1; j <= K; ++j) b.stage(j);
  ChainSchedule schedule = std::move(b.schedule());
  Word period = spell(schedule.stages.back().walk);
  // The leading base of W_K is the tail end of ^∞period already.
  Word middle(schedule.stream.begin() + static_cast<std::ptrdiff_t>(K + 1), schedule.stream.end());
  check_budget(middle.size(), n_max);
  TwoSidedPoint point = TwoSidedPoint::from_window(period, middle, origin - (K + 1), period);

  ConstructionCertificate cert;
  cert.max_resolution = K;
  for (std::size_t k = 0; k <= K; ++k) {
    cert.omega_match.push_back(omega_windows(point, k + 1).windows == spec.windows(k + 1));
    cert.alpha_match.push_back(alpha_windows(point, k + 1).windows == spec.windows(k + 1));
  }
  cert.coverage = stage_coverage(spec, schedule);
  cert.tail_admissible_length = tail_admissible_length(spec, point, K + 2, true);
  cert.stages_admissible = stages_admissible(spec, schedule);
  return {std::move(point), std::move(schedule), origin, std::move(cert)};
}

std::string construction_json(const ChainSchedule& schedule, const ConstructionCertificate& cert,
                              const Alphabet& alphabet) {
  nlohmann::json j;
  j["max_resolution"] = cert.max_resolution;
  j["ok"] = cert.ok();
  j["tail_admissible_length"] = cert.tail_admissible_length;
  j["stages_admissible"] = cert.stages_admissible;
  j["omega_match"] = cert.omega_match;
  if (!cert.alpha_match.empty()) j["alpha_match"] = cert.alpha_match;
  nlohmann::json stages = nlohmann::json::array();
  for (std::size_t i = 0; i < schedule.stages.size(); ++i) {
    const ChainStage& st = schedule.stages[i];
    stages.push_back({{"resolution", st.resolution},
                      {"eta_exponent", st.eta_exponent},
                      {"base", alphabet.format(st.base)},
                      {"approach_length", st.approach.size() - 1},
                      {"walk_length", st.walk.size() - 1},
                      {"coverage", cert.coverage.at(i)}});
  }
  j["stages"] = stages;
  j["stream_length"] = schedule.stream.size();
  return j.dump(2);
}

}  // namespace limitsets
