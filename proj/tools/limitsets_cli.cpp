// limitsets: command-line front end.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "limitsets/construct.hpp"
#include "limitsets/error.hpp"
#include "limitsets/interval.hpp"
#include "limitsets/io.hpp"
#include "limitsets/limits.hpp"
#include "limitsets/paper_checks.hpp"
#include "limitsets/shadowing.hpp"

using namespace limitsets;

namespace {

constexpr int exit_ok = 0, exit_config = 2, exit_analysis = 3, exit_check = 4;

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> inputs;
  std::size_t res = 3;
  std::size_t horizon = 0;
  std::string grid = "1/64";
  std::string fatten;
  std::uint64_t seed = 0;
  std::string out;
  std::string format;  // per-subcommand default when empty
  std::string only;
  std::string data = default_data_dir();
  std::string mode;
  std::string point = "0";
  std::string epsilon = "1/3";
  std::string delta = "1/64";

  std::string header_fields() const {
    std::ostringstream s;
    s << "limitsets " << subcommand;
    for (const std::string& in : inputs) s << " input=" << in;
    s << " res=" << res << " horizon=" << horizon << " grid=" << grid << " seed=" << seed << " format=" << format;
    if (!mode.empty()) s << " mode=" << mode;
    if (!fatten.empty()) s << " fatten=" << fatten;
    if (!only.empty()) s << " only=" << only;
    return s.str();
  }

  std::string header() const {
    return (format == "dot" ? "// " : "# ") + header_fields() + "\n";
  }

  nlohmann::json header_json() const {
    return {{"subcommand", subcommand}, {"inputs", inputs}, {"res", res},       {"horizon", horizon},
            {"grid", grid},             {"seed", seed},     {"format", format}, {"mode", mode}};
  }

  const std::string& input(std::size_t i) const {
    if (i >= inputs.size()) fail(Error::Kind::parse, subcommand + ": missing input file");
    return inputs[i];
  }
};

// Writes the artifact to stdout and, with --out, to a file there.
void emit(const RunConfig& cfg, const std::string& name, const std::string& body) {
  std::cout << body;
  if (cfg.out.empty()) return;
  std::filesystem::create_directories(cfg.out);
  std::ofstream f(std::filesystem::path(cfg.out) / name, std::ios::binary);
  if (!f) fail(Error::Kind::parse, "cannot write into " + cfg.out);
  f << body;
}

std::string with_json_header(const RunConfig& cfg, const std::string& record) {
  nlohmann::json j;
  j["config"] = cfg.header_json();
  j["result"] = nlohmann::json::parse(record);
  return j.dump(2) + "\n";
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (cfg.format == f) return;
  }
  fail(Error::Kind::parse, cfg.subcommand + " does not emit format '" + cfg.format + "'");
}

void words_json(const WindowSet& w, const Alphabet& a, nlohmann::json& arr) {
  arr = nlohmann::json::array();
  for (const Word& word : w) arr.push_back(a.format(word));
}

int cmd_sft(const RunConfig& cfg) {
  require_format(cfg, {"csv", "json", "dot"});
  SubshiftSFT sft = SubshiftSFT::parse(read_file(cfg.input(0)));
  const Alphabet& a = sft.alphabet();
  if (cfg.format == "dot") {
    WindowSet ext = sft.language(cfg.res + 2);
    BlockGraph g = block_graph(sft.language(cfg.res + 1), &ext);
    emit(cfg, "block_graph.dot", cfg.header() + g.to_dot(a));
  } else if (cfg.format == "json") {
    nlohmann::json j;
    j["memory"] = sft.memory();
    for (std::size_t L = 1; L <= cfg.res + 1; ++L) {
      nlohmann::json words;
      words_json(sft.language(L), a, words);
      j["languages"].push_back({{"L", L}, {"size", sft.language(L).size()}, {"words", words}});
    }
    emit(cfg, "language.json", with_json_header(cfg, j.dump()));
  } else {
    std::string body = cfg.header() + "L,size\n";
    for (std::size_t L = 1; L <= cfg.res + 1; ++L) {
      body += std::to_string(L) + "," + std::to_string(sft.language(L).size()) + "\n";
    }
    emit(cfg, "language.csv", body);
  }
  return exit_ok;
}

int cmd_limits(const RunConfig& cfg) {
  require_format(cfg, {"csv", "json"});
  PointLibrary lib = parse_point_library(read_file(cfg.input(0)));
  const Point& p = lib.get(cfg.input(1));
  const Alphabet& a = lib.alphabet;
  bool two = is_two_sided(p);
  bool right = two || std::get<ScheduledPoint>(p).side() == Side::right;
  bool left = two || !right;
  std::vector<std::pair<std::string, LimitWindows>> rows;
  for (std::size_t L = 1; L <= cfg.res + 1; ++L) {
    if (right) rows.emplace_back("omega", omega_windows(p, L));
    if (left) rows.emplace_back("alpha", alpha_windows(p, L));
    if (two) rows.emplace_back("gamma", gamma_windows(std::get<TwoSidedPoint>(p), L));
  }
  if (cfg.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [kind, lw] : rows) {
      nlohmann::json words;
      words_json(lw.windows, a, words);
      j.push_back({{"kind", kind},
                   {"L", lw.windows.length()},
                   {"size", lw.windows.size()},
                   {"provenance", lw.provenance.str()},
                   {"windows", words}});
    }
    emit(cfg, "limits.json", with_json_header(cfg, j.dump()));
    return exit_ok;
  }
  std::string body = cfg.header() + "kind,L,size,provenance,windows\n";
  for (const auto& [kind, lw] : rows) {
    std::string ws;
    for (const Word& w : lw.windows) ws += (ws.empty() ? "" : " ") + a.format(w);
    body += kind + "," + std::to_string(lw.windows.length()) + "," + std::to_string(lw.windows.size()) + "," +
            lw.provenance.str() + "," + ws + "\n";
  }
  emit(cfg, "limits.csv", body);
  return exit_ok;
}

int cmd_ict(const RunConfig& cfg) {
  require_format(cfg, {"csv", "json", "dot"});
  SubshiftSFT sft = SubshiftSFT::parse(read_file(cfg.input(0)));
  const Alphabet& a = sft.alphabet();
  auto classes = enumerate_maximal_ict(sft, cfg.res);
  if (cfg.format == "dot") {
    std::string body = cfg.header();
    for (std::size_t c = 0; c < classes.size(); ++c) {
      WindowSet ext = sft.language(cfg.res + 2);
      body += block_graph(classes[c], &ext).to_dot(a, "class_" + std::to_string(c));
    }
    emit(cfg, "ict_classes.dot", body);
  } else if (cfg.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const WindowSet& w : classes) {
      nlohmann::json words;
      words_json(w, a, words);
      j.push_back({{"size", w.size()}, {"windows", words}});
    }
    emit(cfg, "ict_classes.json", with_json_header(cfg, j.dump()));
  } else {
    std::string body = cfg.header() + "class,size,windows\n";
    for (std::size_t c = 0; c < classes.size(); ++c) {
      std::string ws;
      for (const Word& w : classes[c]) ws += (ws.empty() ? "" : " ") + a.format(w);
      body += std::to_string(c) + "," + std::to_string(classes[c].size()) + "," + ws + "\n";
    }
    emit(cfg, "ict_classes.csv", body);
  }
  return exit_ok;
}

int cmd_shadow(const RunConfig& cfg) {
  require_format(cfg, {"json", "csv"});
  SubshiftSFT sft = SubshiftSFT::parse(read_file(cfg.input(0)));
  PointLibrary lib = parse_point_library(read_file(cfg.input(1)));
  if (!(lib.alphabet == sft.alphabet())) fail(Error::Kind::parse, "library and SFT alphabets differ");
  PseudoOrbitSym po = parse_pseudo_orbit(nlohmann::json::parse(read_file(cfg.input(2))), lib);
  ShadowCertificate cert = po.direction == Direction::forward    ? shadow_forward(sft, po, cfg.res)
                           : po.direction == Direction::backward ? shadow_backward(sft, po, cfg.res)
                                                                 : shadow_two_sided(sft, po, cfg.res);
  bool ok = recheck_certificate(sft, po, cert, cfg.res);
  if (cfg.format == "json") {
    nlohmann::json j = nlohmann::json::parse(certificate_json(cert, lib.alphabet));
    j["rechecked"] = ok;
    emit(cfg, "shadow.json", with_json_header(cfg, j.dump()));
  } else {
    std::string body = cfg.header() + "index,agreement_depth\n";
    for (std::size_t t = 0; t < cert.depths.size(); ++t) {
      body += std::to_string(cert.first_index + static_cast<std::int64_t>(t)) + "," +
              std::to_string(cert.depths[t]) + "\n";
    }
    body += "# rechecked=" + std::string(ok ? "true" : "false") + "\n";
    emit(cfg, "shadow.csv", body);
  }
  return ok ? exit_ok : exit_analysis;
}

int cmd_construct(const RunConfig& cfg) {
  require_format(cfg, {"json", "csv"});
  SubshiftSFT sft = SubshiftSFT::parse(read_file(cfg.input(0)));
  ClosedSetSpec spec = ClosedSetSpec::from_sft(sft);
  std::size_t n_max = cfg.horizon ? cfg.horizon : std::size_t{1} << 20;
  const Alphabet& a = sft.alphabet();
  bool full = cfg.mode.empty() || cfg.mode == "full";
  if (!full && cfg.mode != "limit") fail(Error::Kind::parse, "construct mode must be full or limit");
  ChainSchedule schedule;
  ConstructionCertificate cert;
  std::string stream;
  if (full) {
    FullTrajectory t = build_full_trajectory(spec, cfg.res, n_max);
    schedule = t.schedule;
    cert = t.certificate;
    std::int64_t lo = -static_cast<std::int64_t>(t.origin);
    std::size_t len = t.schedule.stream.size();
    stream = "# indices " + std::to_string(lo) + ".." + std::to_string(lo + static_cast<std::int64_t>(len) - 1) +
             "\n" + a.format(t.point.window(lo, len)) + "\n";
  } else {
    LimitPoint p = build_limit_point(spec, cfg.res, n_max);
    schedule = p.schedule;
    cert = p.certificate;
    stream = "# indices 0.." + std::to_string(p.schedule.stream.size() - 1) + "\n" +
             a.format(p.prefix(p.schedule.stream.size())) + "\n";
  }
  if (cfg.format == "json") {
    emit(cfg, "construction.json", with_json_header(cfg, construction_json(schedule, cert, a)));
  } else {
    std::string body = cfg.header() + "stage,resolution,eta_exponent,base,approach,walk,stream_begin\n";
    for (std::size_t s = 0; s < schedule.stages.size(); ++s) {
      const ChainStage& st = schedule.stages[s];
      body += std::to_string(s) + "," + std::to_string(st.resolution) + "," + std::to_string(st.eta_exponent) +
              "," + a.format(st.base) + "," + std::to_string(st.approach.size()) + "," +
              std::to_string(st.walk.size()) + "," + std::to_string(st.stream_begin) + "\n";
    }
    emit(cfg, "stages.csv", body);
    emit(cfg, "stream.txt", cfg.header() + stream);
  }
  return cert.ok() ? exit_ok : exit_analysis;
}

int cmd_interval(const RunConfig& cfg) {
  PiecewiseMap f = PiecewiseMap::parse(read_file(cfg.input(0)));
  std::string mode = cfg.mode.empty() ? "cr" : cfg.mode;
  Rat h = parse_rat(cfg.grid);
  if (mode == "falsify") {
    require_format(cfg, {"json"});
    FalsificationCertificate c = falsify_shadowing_ex44(parse_rat(cfg.epsilon), parse_rat(cfg.delta));
    bool ok = recheck_falsification(f, c);
    nlohmann::json j = nlohmann::json::parse(falsification_json(c));
    j["rechecked_on_input"] = ok;
    emit(cfg, "falsification.json", with_json_header(cfg, j.dump()));
    return ok ? exit_ok : exit_analysis;
  }
  if (mode == "a1" || mode == "a2" || mode == "a3") {
    require_format(cfg, {"csv"});
    std::size_t D = cfg.horizon ? cfg.horizon : 12;
    Rat x = parse_rat(cfg.point);
    BoxSet s = mode == "a1"   ? neg_limit_A1(f, x, D, h)
               : mode == "a2" ? neg_limit_trajectories(f, x, NegLimitMode::A2, D, h)
                              : neg_limit_trajectories(f, x, NegLimitMode::A3, D, h);
    emit(cfg, "negative_limit_" + mode + ".csv",
         cfg.header() + "# point=" + rat_str(x) + " provenance=" + s.provenance.str() + "\n" + s.csv());
    return exit_ok;
  }
  if (mode != "cr") fail(Error::Kind::parse, "interval mode must be cr, a1, a2, a3 or falsify");
  require_format(cfg, {"csv", "dot"});
  Rat fatten = cfg.fatten.empty() ? Rat(h / 2) : parse_rat(cfg.fatten);
  BoxGraph g = box_graph(f, h, fatten);
  auto cr = chain_recurrent_outer(g);
  if (cfg.format == "dot") {
    std::string body = cfg.header() + "digraph box_graph {\n";
    for (std::size_t i = 0; i < g.count; ++i) {
      body += "  b" + std::to_string(i) + " [label=\"[" + rat_str(g.box_lo(i)) + "," + rat_str(g.box_hi(i)) + "]\"" +
              (cr.count(i) ? ", style=filled" : "") + "];\n";
    }
    for (std::size_t i = 0; i < g.count; ++i) {
      for (std::size_t j : g.successors[i]) body += "  b" + std::to_string(i) + " -> b" + std::to_string(j) + ";\n";
    }
    emit(cfg, "box_graph.dot", body + "}\n");
  } else {
    std::string body = cfg.header() + "box,lo,hi\n";
    for (std::size_t i : cr) body += std::to_string(i) + "," + rat_str(g.box_lo(i)) + "," + rat_str(g.box_hi(i)) + "\n";
    emit(cfg, "chain_recurrent.csv", body);
  }
  return exit_ok;
}

std::string csv_field(const std::string& s) {
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

int cmd_verify_paper(const RunConfig& cfg) {
  require_format(cfg, {"csv", "json"});
  std::vector<std::string> ids;
  if (cfg.only.empty()) {
    ids = paper_check_ids();
  } else {
    const auto& known = paper_check_ids();
    if (std::find(known.begin(), known.end(), cfg.only) == known.end()) {
      fail(Error::Kind::parse, "unknown example id '" + cfg.only + "'");
    }
    ids = {cfg.only};
  }
  std::vector<CheckResult> results;
  for (const std::string& id : ids) {
    auto r = run_paper_check(id, cfg.data);
    results.insert(results.end(), r.begin(), r.end());
  }
  std::size_t failed = 0;
  for (const CheckResult& r : results) failed += !r.pass;
  if (cfg.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const CheckResult& r : results) {
      j.push_back({{"id", r.id},
                   {"claim", r.claim},
                   {"expectation", r.expectation},
                   {"computed", r.computed},
                   {"provenance", r.provenance},
                   {"pass", r.pass}});
    }
    emit(cfg, "verify_paper.json", with_json_header(cfg, j.dump()));
  } else {
    std::string body = cfg.header() + "id,claim,expectation,computed,provenance,result\n";
    for (const CheckResult& r : results) {
      body += r.id + "," + csv_field(r.claim) + "," + r.expectation + "," + csv_field(r.computed) + "," +
              r.provenance + "," + (r.pass ? "PASS" : "FAIL") + "\n";
    }
    body += "# " + std::to_string(results.size() - failed) + " of " + std::to_string(results.size()) + " passed\n";
    emit(cfg, "verify_paper.csv", body);
  }
  return failed ? exit_check : exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"limit sets, shadowing and chain transitivity toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto common = [&](CLI::App* sub, bool takes_inputs) {
    if (takes_inputs) sub->add_option("inputs", cfg.inputs, "input files")->required();
    sub->add_option("--res", cfg.res, "resolution k");
    sub->add_option("--horizon", cfg.horizon, "depth or length bound");
    sub->add_option("--grid", cfg.grid, "grid size h (rational)");
    sub->add_option("--seed", cfg.seed, "seed, recorded in headers");
    sub->add_option("--out", cfg.out, "directory for emitted files");
    sub->add_option("--format", cfg.format, "csv, json or dot");
  };
  auto* sft = app.add_subcommand("sft", "language sizes and block graph of an SFT file");
  common(sft, true);
  auto* limits = app.add_subcommand("limits", "alpha/omega/gamma windows: <library.json> <point name>");
  common(limits, true);
  auto* shadow = app.add_subcommand("shadow", "shadow a pseudo-orbit: <sft> <library.json> <orbit.json>");
  common(shadow, true);
  auto* ict = app.add_subcommand("ict", "maximal internally chain transitive classes of an SFT");
  common(ict, true);
  auto* construct = app.add_subcommand("construct", "trajectory realising an SFT as its limit set");
  common(construct, true);
  construct->add_option("--mode", cfg.mode, "full or limit");
  auto* interval = app.add_subcommand("interval", "box graphs and negative limit sets of a map file");
  common(interval, true);
  interval->add_option("--mode", cfg.mode, "cr, a1, a2, a3 or falsify");
  interval->add_option("--fatten", cfg.fatten, "image fattening (default h/2)");
  interval->add_option("--point", cfg.point, "point for negative limit sets");
  interval->add_option("--epsilon", cfg.epsilon, "falsification epsilon");
  interval->add_option("--delta", cfg.delta, "falsification delta");
  auto* verify = app.add_subcommand("verify-paper", "reproduce the worked examples");
  common(verify, false);
  verify->add_option("--only", cfg.only, "run one example id");
  verify->add_option("--data", cfg.data, "corpus directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_config;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  if (cfg.format.empty()) cfg.format = cfg.subcommand == "interval" && cfg.mode == "falsify" ? "json" : "csv";
  try {
    if (cfg.subcommand == "sft") return cmd_sft(cfg);
    if (cfg.subcommand == "limits") return cmd_limits(cfg);
    if (cfg.subcommand == "shadow") return cmd_shadow(cfg);
    if (cfg.subcommand == "ict") return cmd_ict(cfg);
    if (cfg.subcommand == "construct") return cmd_construct(cfg);
    if (cfg.subcommand == "interval") return cmd_interval(cfg);
    return cmd_verify_paper(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == Error::Kind::parse || e.kind() == Error::Kind::precondition ? exit_config : exit_analysis;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error (parse): " << e.what() << "\n";
    return exit_config;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_config;
  }
}
