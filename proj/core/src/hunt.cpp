#include "domhad/hunt.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <thread>

#include "domhad/error.hpp"
#include "domhad/extraction.hpp"
#include "domhad/graph_io.hpp"
#include "domhad/patterns.hpp"

namespace domhad {

using nlohmann::json;

namespace {

constexpr std::string_view kCheckNames[] = {"dominating-hadwiger", "theorem-1.3", "micu", "t3-equivalence"};
constexpr std::string_view kVerdictNames[] = {"holds",   "counterexample", "skipped-filter", "timeout",
                                              "capacity", "parse-error",    "check-failed"};

json model_json(const MinorModel& m) { return m.to_lists(); }

}  // namespace

std::string_view check_name(Check c) { return kCheckNames[static_cast<int>(c)]; }

Check parse_check(std::string_view name) {
  for (int i = 0; i < 4; ++i)
    if (kCheckNames[i] == name) return static_cast<Check>(i);
  throw ArgumentError("unknown check '" + std::string(name) + "'");
}

std::string_view filter_name(Filter f) { return f == Filter::kNone ? "none" : "2k2-free"; }

Filter parse_filter(std::string_view name) {
  if (name == "none") return Filter::kNone;
  if (name == "2k2-free") return Filter::kTwoK2Free;
  throw ArgumentError("unknown filter '" + std::string(name) + "'");
}

std::string_view verdict_name(Verdict v) { return kVerdictNames[static_cast<int>(v)]; }

Verdict parse_verdict(std::string_view name) {
  for (int i = 0; i < 7; ++i)
    if (kVerdictNames[i] == name) return static_cast<Verdict>(i);
  throw ArgumentError("unknown verdict '" + std::string(name) + "'");
}

std::string to_json_line(const HuntRecord& r) {
  json j;
  j["line"] = r.line;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["chi"] = r.chi;
  j["verdict"] = verdict_name(r.verdict);
  j["detail"] = json::parse(r.detail);
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump();
}

HuntRecord hunt_record_from_json(std::string_view line) {
  try {
    json j = json::parse(line);
    HuntRecord r;
    r.line = j.at("line").get<std::size_t>();
    r.graph6 = j.at("graph6").get<std::string>();
    r.n = j.at("n").get<int>();
    r.chi = j.at("chi").get<int>();
    r.verdict = parse_verdict(j.at("verdict").get<std::string>());
    r.detail = j.at("detail").dump();
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    return r;
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("malformed hunt record: ") + e.what());
  }
}

namespace {

// Runs one check, filling `out`; returns a verdict other than kHolds to stop.
Verdict run_check(const Graph& g, Check c, int chi, const SearchLimits& limits, bool two_k2_free, json& out) {
  switch (c) {
    case Check::kDominatingHadwiger: {
      if (chi == 0) {
        out["model"] = json::array();
        return Verdict::kHolds;
      }
      if (auto m = has_dominating_kt(g, chi, limits)) {
        out["model"] = model_json(*m);
        return Verdict::kHolds;
      }
      // Re-check without the budget so a timeout can never pose as a counterexample.
      const SearchLimits unbounded{limits.max_vertices, Deadline{}};
      if (auto m = has_dominating_kt(g, chi, unbounded)) {
        out["model"] = model_json(*m);
        out["recheck"] = "model found on unbounded re-run";
        return Verdict::kHolds;
      }
      if (chi > 1 && k_coloring(g, chi - 1)) {
        out["error"] = "chromatic number not confirmed on re-run";
        return Verdict::kCheckFailed;
      }
      json cert;
      cert["chi"] = chi;
      cert["coloring"] = chromatic_number(g).coloring.color;
      cert["no_coloring_with"] = chi - 1;
      cert["no_dominating_model_with"] = chi;
      cert["search"] = "exhaustive";
      out["certificate"] = cert;
      return Verdict::kCounterexample;
    }
    case Check::kTheorem13:
    case Check::kMicu: {
      if (!two_k2_free) {
        out["skipped"] = "not 2K2-free";
        return Verdict::kHolds;
      }
      try {
        const bool dom = c == Check::kTheorem13;
        MinorModel m = dom ? extract_dominating(g) : extract_micu_minor(g);
        ModelReport rep = dom ? verify_dominating_model(g, m) : verify_ordinary_model(g, m);
        out["model"] = model_json(m);
        if (!rep.valid() || static_cast<int>(m.size()) != chi) {
          out["error"] = rep.valid() ? "model size differs from chi" : rep.describe();
          return Verdict::kCheckFailed;
        }
        return Verdict::kHolds;
      } catch (const ExtractionError& e) {
        out["error"] = e.what();
        out["claim"] = e.claim();
        out["witness"] = e.witness();
        return Verdict::kCheckFailed;
      }
    }
    case Check::kT3Equivalence: {
      json per_t = json::array();
      for (int t = 1; t <= 3; ++t) {
        const bool dom = has_dominating_kt(g, t, limits).has_value();
        const bool ord = has_kt_minor(g, t, limits);
        per_t.push_back({{"t", t}, {"dominating", dom}, {"ordinary", ord}});
        if (dom != ord) {
          out["t"] = per_t;
          out["error"] = "deciders disagree at t=" + std::to_string(t);
          return Verdict::kCheckFailed;
        }
      }
      out["t"] = per_t;
      return Verdict::kHolds;
    }
  }
  return Verdict::kHolds;
}

}  // namespace

HuntRecord check_graph(const Graph& g, const CheckOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  HuntRecord rec;
  rec.n = g.order();
  rec.graph6 = emit_graph6(g);
  json detail = json::object();
  const std::optional<Embedding> two_k2 = find_2k2(g);
  if (options.filter == Filter::kTwoK2Free && two_k2) {
    rec.verdict = Verdict::kSkippedFilter;
    detail["witness"] = two_k2->image;
  } else {
    const SearchLimits limits{options.max_vertices, Deadline::after(options.budget)};
    try {
      rec.chi = chromatic_number(g, limits.deadline).chi;
      for (Check c : options.checks) {
        json& out = detail[std::string(check_name(c))];
        out = json::object();
        rec.verdict = run_check(g, c, rec.chi, limits, !two_k2, out);
        if (rec.verdict != Verdict::kHolds) break;
      }
    } catch (const TimeoutError& e) {
      rec.verdict = Verdict::kTimeout;
      detail["error"] = e.what();
    } catch (const CapacityError& e) {
      rec.verdict = Verdict::kCapacity;
      detail["error"] = e.what();
    }
  }
  rec.detail = detail.dump();
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

void HuntConfig::validate() const {
  if (workers < 1) throw ArgumentError("worker count must be at least 1");
  if (check.budget.count() <= 0) throw ArgumentError("time budget must be positive");
  if (check.checks.empty()) throw ArgumentError("no checks requested");
  if (chunk_lines == 0) throw ArgumentError("chunk size must be positive");
  if (!checkpoint.empty() && output.empty()) throw ArgumentError("a checkpoint requires an output file");
}

int HuntSummary::exit_code() const {
  auto count = [&](Verdict v) {
    auto it = verdicts.find(std::string(verdict_name(v)));
    return it == verdicts.end() ? std::size_t{0} : it->second;
  };
  if (count(Verdict::kCounterexample) > 0) return 2;
  if (count(Verdict::kCheckFailed) > 0) return 1;
  return 0;
}

std::string HuntSummary::to_json() const {
  json j;
  j["schema"] = "domhad.hunt.summary/1";
  j["records"] = records;
  j["verdicts"] = verdicts;
  j["counterexamples"] = counterexamples;
  j["resumed_from_line"] = resumed_from_line;
  j["elapsed_ms"] = elapsed_ms;
  j["graphs_per_second"] = elapsed_ms > 0 ? 1000.0 * static_cast<double>(records) / elapsed_ms : 0.0;
  return j.dump();
}

namespace {

struct Checkpoint {
  std::uintmax_t input_offset = 0;
  std::uintmax_t output_size = 0;
  std::size_t line = 0;
};

std::optional<Checkpoint> load_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    json j = json::parse(in);
    return Checkpoint{j.at("input_offset").get<std::uintmax_t>(), j.at("output_size").get<std::uintmax_t>(),
                      j.at("line").get<std::size_t>()};
  } catch (const json::exception& e) {
    throw Error("unreadable checkpoint " + path + ": " + e.what());
  }
}

void save_checkpoint(const std::string& path, const Checkpoint& c) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot write checkpoint " + tmp);
    out << json{{"input_offset", c.input_offset}, {"output_size", c.output_size}, {"line", c.line}}.dump() << '\n';
  }
  std::filesystem::rename(tmp, path);
}

struct Pending {
  std::size_t line;
  std::string text;
};

HuntRecord process_line(const Pending& p, const CheckOptions& options) {
  try {
    HuntRecord r = check_graph(parse_graph6(p.text), options);
    r.line = p.line;
    r.graph6 = p.text;
    return r;
  } catch (const ParseError& e) {
    HuntRecord r;
    r.line = p.line;
    r.graph6 = p.text;
    r.verdict = Verdict::kParseError;
    r.detail = json{{"error", e.what()}}.dump();
    return r;
  }
}

void tally(HuntSummary& s, const HuntRecord& r) {
  ++s.records;
  ++s.verdicts[std::string(verdict_name(r.verdict))];
  if (r.verdict == Verdict::kCounterexample) s.counterexamples.push_back(r.graph6);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

HuntSummary run_hunt(const HuntConfig& cfg, std::ostream& records_out) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  HuntSummary summary;

  Checkpoint cp;
  if (!cfg.checkpoint.empty()) {
    if (auto loaded = load_checkpoint(cfg.checkpoint)) cp = *loaded;
  }
  summary.resumed_from_line = cp.line;

  std::ofstream file_out;
  if (!cfg.output.empty()) {
    namespace fs = std::filesystem;
    if (cp.line > 0) {
      if (!fs::exists(cfg.output) || fs::file_size(cfg.output) < cp.output_size)
        throw Error("output " + cfg.output + " is shorter than the checkpoint records");
      fs::resize_file(cfg.output, cp.output_size);
      std::ifstream prev(cfg.output);
      for (std::string l; std::getline(prev, l);)
        if (!l.empty()) tally(summary, hunt_record_from_json(l));
      file_out.open(cfg.output, std::ios::app);
    } else {
      file_out.open(cfg.output, std::ios::trunc);
    }
    if (!file_out) throw Error("cannot open output " + cfg.output);
  }
  std::ostream& out = cfg.output.empty() ? records_out : file_out;

  std::ifstream file_in;
  const bool use_stdin = cfg.input.empty() || cfg.input == "-";
  if (!use_stdin) {
    file_in.open(cfg.input, std::ios::binary);
    if (!file_in) throw Error("cannot open input " + cfg.input);
  }
  std::istream& in = use_stdin ? std::cin : file_in;
  if (cp.input_offset > 0) {
    if (use_stdin)
      in.ignore(static_cast<std::streamsize>(cp.input_offset));
    else
      in.seekg(static_cast<std::streamoff>(cp.input_offset));
    if (!in) throw Error("input is shorter than the checkpoint offset");
  }

  const std::size_t round = cfg.chunk_lines * static_cast<std::size_t>(cfg.workers);
  std::uintmax_t offset = cp.input_offset;
  std::uintmax_t written = cp.output_size;
  std::size_t line_no = cp.line;
  bool eof = false;
  while (!eof) {
    std::vector<Pending> batch;
    std::string raw;
    while (batch.size() < round) {
      if (!std::getline(in, raw)) {
        eof = true;
        break;
      }
      offset += raw.size() + (in.eof() ? 0 : 1);
      ++line_no;
      std::string t = trim(raw);
      if (t.empty() || t.front() == '#') continue;
      batch.push_back({line_no, std::move(t)});
    }

    std::vector<HuntRecord> results(batch.size());
    if (cfg.workers == 1 || batch.size() <= 1) {
      for (std::size_t i = 0; i < batch.size(); ++i) results[i] = process_line(batch[i], cfg.check);
    } else {
      std::vector<std::jthread> pool;
      for (int w = 0; w < cfg.workers; ++w)
        pool.emplace_back([&, w] {
          const std::size_t lo = std::min(batch.size(), w * cfg.chunk_lines);
          const std::size_t hi = std::min(batch.size(), lo + cfg.chunk_lines);
          for (std::size_t i = lo; i < hi; ++i) results[i] = process_line(batch[i], cfg.check);
        });
    }

    for (const auto& r : results) {
      const std::string l = to_json_line(r) + '\n';
      out << l;
      written += l.size();
      tally(summary, r);
    }
    out.flush();
    if (!out) throw Error("write failed");
    if (!cfg.checkpoint.empty()) save_checkpoint(cfg.checkpoint, {offset, written, line_no});
  }

  summary.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

}  // namespace domhad
