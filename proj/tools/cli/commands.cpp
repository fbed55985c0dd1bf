#include "commands.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "domhad/error.hpp"
#include "domhad/exact.hpp"
#include "domhad/extraction.hpp"
#include "domhad/generators.hpp"
#include "domhad/graph_io.hpp"
#include "domhad/hunt.hpp"
#include "domhad/minor_model.hpp"
#include "domhad/patterns.hpp"

namespace domhad::cli {

using nlohmann::json;

namespace {

struct GraphInput {
  std::string inline_text;
  std::string file;
  std::string format = "auto";

  void attach(CLI::App* cmd) {
    cmd->add_option("graph", inline_text, "graph6 string");
    cmd->add_option("--file", file, "read the graph from a file");
    cmd->add_option("--format", format, "input format")->check(CLI::IsMember({"auto", "g6", "edges"}));
  }

  Graph load() const {
    if (inline_text.empty() == file.empty()) throw ArgumentError("give exactly one of a graph6 string or --file");
    std::string text = inline_text;
    if (!file.empty()) {
      std::ifstream in(file, std::ios::binary);
      if (!in) throw Error("cannot open " + file);
      std::ostringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
    GraphFormat f = GraphFormat::kAuto;
    if (format == "g6") f = GraphFormat::kGraph6;
    if (format == "edges") f = GraphFormat::kEdgeList;
    if (f == GraphFormat::kGraph6 || (f == GraphFormat::kAuto && detect_format(text) == GraphFormat::kGraph6)) {
      // Files may carry a trailing newline; only the first line is read.
      text = text.substr(0, text.find('\n'));
    }
    return parse_graph(text, f);
  }
};

json error_json(std::string_view kind, const std::string& message) {
  return {{"schema", "domhad.error/1"}, {"error", kind}, {"message", message}};
}

std::string violation_name(ModelReport::Violation v) {
  switch (v) {
    case ModelReport::Violation::kNone: return "none";
    case ModelReport::Violation::kOutOfRange: return "out-of-range";
    case ModelReport::Violation::kEmptySet: return "empty-set";
    case ModelReport::Violation::kOverlap: return "disjointness";
    case ModelReport::Violation::kDisconnected: return "connectivity";
    case ModelReport::Violation::kNotDominated: return "domination";
    case ModelReport::Violation::kNotAdjacent: return "adjacency";
  }
  return "unknown";
}

json pattern_json(const std::optional<Embedding>& e) { return e ? json(e->image) : json(nullptr); }

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args) {
    CLI::App app{"Dominating clique minors in 2K2-free graphs", "domhad"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--plain", plain_, "plain text instead of JSON");

    GraphInput analyze_in, extract_in, verify_in, hd_in, convert_in;
    auto* analyze = app.add_subcommand("analyze", "exact invariants and forbidden patterns");
    analyze_in.attach(analyze);

    auto* extract = app.add_subcommand("extract", "clique minor model with chi(G) sets for a 2K2-free graph");
    extract_in.attach(extract);
    std::string mode = "dominating", trace_path;
    extract->add_option("--mode", mode, "dominating or micu")->check(CLI::IsMember({"dominating", "micu"}));
    extract->add_option("--trace", trace_path, "write the construction trace as JSONL");

    auto* verify = app.add_subcommand("verify", "check a model against a graph");
    verify_in.attach(verify);
    std::string model_text, model_file;
    bool ordinary = false;
    verify->add_option("--model", model_text, "model JSON, e.g. [[0,1,2],[3],[4]]");
    verify->add_option("--model-file", model_file, "read the model JSON from a file");
    verify->add_flag("--ordinary", ordinary, "ordinary instead of dominating minor");

    auto* hd = app.add_subcommand("hd", "dominating Hadwiger number by exhaustive search");
    hd_in.attach(hd);
    int cap = kDefaultExactCap;
    bool hd_ordinary = false;
    hd->add_option("--cap", cap, "largest vertex count accepted")->check(CLI::PositiveNumber);
    hd->add_flag("--ordinary", hd_ordinary, "ordinary Hadwiger number instead");

    auto* gen = app.add_subcommand("gen", "generate a graph");
    std::string family;
    std::vector<double> params;
    std::optional<std::uint64_t> seed;
    gen->add_option("family", family, "family name, or gnp / random-2k2-free / random-structured-2k2-free")
        ->required();
    gen->add_option("params", params, "family parameters");
    gen->add_option("--seed", seed, "seed for random families");

    auto* convert = app.add_subcommand("convert", "re-encode a graph");
    convert_in.attach(convert);
    std::string to = "g6";
    convert->add_option("--to", to, "output format")->check(CLI::IsMember({"g6", "edges", "dot"}));

    auto* hunt = app.add_subcommand("hunt", "check a graph6 corpus");
    HuntConfig cfg;
    std::vector<std::string> checks{"dominating-hadwiger"};
    std::string filter = "none";
    long budget_ms = 10'000;
    hunt->add_option("--input", cfg.input, "graph6 file, one graph per line (default: standard input)");
    hunt->add_option("--output", cfg.output, "JSONL record file (default: standard output)");
    hunt->add_option("--checkpoint", cfg.checkpoint, "resume file");
    hunt->add_option("--checks", checks, "dominating-hadwiger, theorem-1.3, micu, t3-equivalence")->delimiter(',');
    hunt->add_option("--filter", filter, "2k2-free or none")->check(CLI::IsMember({"none", "2k2-free"}));
    hunt->add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
    hunt->add_option("--budget-ms", budget_ms, "time budget per graph")->check(CLI::PositiveNumber);
    hunt->add_option("--cap", cfg.check.max_vertices, "vertex cap for exhaustive searches")
        ->check(CLI::PositiveNumber);

    std::vector<std::string> argv_store{"domhad"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
      out_ << app.help();
      return 0;
    } catch (const CLI::CallForAllHelp&) {
      out_ << app.help("", CLI::AppFormatMode::All);
      return 0;
    } catch (const CLI::ParseError& e) {
      return fail("usage", e.what());
    }

    try {
      if (*analyze) return do_analyze(analyze_in.load());
      if (*extract) return do_extract(extract_in.load(), mode, trace_path);
      if (*verify) return do_verify(verify_in.load(), model_text, model_file, ordinary);
      if (*hd) return do_hd(hd_in.load(), cap, hd_ordinary);
      if (*gen) return do_gen(family, params, seed);
      if (*convert) return do_convert(convert_in.load(), to);
      cfg.check.checks.clear();
      for (const auto& c : checks) cfg.check.checks.push_back(parse_check(c));
      cfg.check.filter = parse_filter(filter);
      cfg.check.budget = std::chrono::milliseconds(budget_ms);
      return do_hunt(cfg);
    } catch (const ParseError& e) {
      return fail("parse", e.what(), {{"offset", e.offset()}});
    } catch (const NotTwoK2FreeError& e) {
      return fail("not-2k2-free", e.what(), {{"witness", e.witness()}});
    } catch (const CapacityError& e) {
      return fail("capacity", e.what());
    } catch (const TimeoutError& e) {
      return fail("timeout", e.what());
    } catch (const ArgumentError& e) {
      return fail("argument", e.what());
    } catch (const ExtractionError& e) {
      return fail("extraction", e.what(), {{"claim", e.claim()}, {"witness", e.witness()}});
    } catch (const std::exception& e) {
      return fail("error", e.what());
    }
  }

 private:
  int fail(std::string_view kind, const std::string& message, const json& extra = json::object()) {
    if (plain_) {
      err_ << "error: " << message << '\n';
    } else {
      json j = error_json(kind, message);
      j.update(extra);
      out_ << j.dump() << '\n';
    }
    return 1;
  }

  void emit(const json& j, const std::string& plain_text) {
    if (plain_)
      out_ << plain_text << '\n';
    else
      out_ << j.dump() << '\n';
  }

  int do_analyze(const Graph& g) {
    const ChromaticResult chi = chromatic_number(g);
    const CliqueResult omega = clique_number(g);
    const CliqueResult alpha = independence_number(g);
    const auto two_k2 = find_2k2(g);
    json patterns;
    patterns["2k2"] = pattern_json(two_k2);
    patterns["c4"] = pattern_json(find_induced_cycle(g, 4));
    patterns["c5"] = pattern_json(find_induced_cycle(g, 5));
    patterns["banner"] = pattern_json(find_banner(g));
    patterns["p4"] = pattern_json(find_induced(g, Pattern::path(4)));
    json j{{"schema", "domhad.analyze/1"},
           {"n", g.order()},
           {"m", g.num_edges()},
           {"chi", chi.chi},
           {"omega", omega.size},
           {"alpha", alpha.size},
           {"is_2k2_free", !two_k2},
           {"is_split", is_split_graph(g)},
           {"coloring", chi.coloring.color},
           {"max_clique", omega.vertices.to_vector()},
           {"found_patterns", patterns}};
    std::ostringstream ss;
    ss << "n " << g.order() << "\nm " << g.num_edges() << "\nchi " << chi.chi << "\nomega " << omega.size
       << "\nalpha " << alpha.size << "\n2k2-free " << (two_k2 ? "no" : "yes") << "\nsplit "
       << (is_split_graph(g) ? "yes" : "no");
    emit(j, ss.str());
    return 0;
  }

  int do_extract(const Graph& g, const std::string& mode, const std::string& trace_path) {
    ExtractOptions opts;
    std::ofstream trace;
    if (!trace_path.empty()) {
      trace.open(trace_path, std::ios::trunc);
      if (!trace) throw Error("cannot open trace file " + trace_path);
      opts.trace = [&trace](const TraceEvent& e) { trace << to_json_line(e) << '\n'; };
    }
    const bool dom = mode == "dominating";
    const MinorModel m = dom ? extract_dominating(g, opts) : extract_micu_minor(g, opts);
    const ModelReport r = dom ? verify_dominating_model(g, m) : verify_ordinary_model(g, m);
    json j{{"schema", "domhad.extract/1"},
           {"mode", mode},
           {"chi", chromatic_number(g).chi},
           {"model", m.to_lists()},
           {"verifier", dom ? "dominating" : "ordinary"},
           {"valid", r.valid()}};
    emit(j, to_json(m));
    return r.valid() ? 0 : 1;
  }

  int do_verify(const Graph& g, const std::string& text, const std::string& file, bool ordinary) {
    if (text.empty() == file.empty()) throw ArgumentError("give exactly one of --model or --model-file");
    std::string model_json = text;
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw Error("cannot open " + file);
      std::ostringstream ss;
      ss << in.rdbuf();
      model_json = ss.str();
    }
    const MinorModel m = model_from_json(model_json);
    const ModelReport r = ordinary ? verify_ordinary_model(g, m) : verify_dominating_model(g, m);
    json j{{"schema", "domhad.verify/1"},
           {"kind", ordinary ? "ordinary" : "dominating"},
           {"valid", r.valid()},
           {"sets", m.size()}};
    if (!r.valid()) {
      j["violation"] = violation_name(r.violation);
      j["i"] = r.i;
      j["j"] = r.j;
      j["witness"] = r.witness;
      j["message"] = r.describe();
    }
    emit(j, r.valid() ? "valid" : "invalid: " + r.describe());
    return r.valid() ? 0 : 2;
  }

  int do_hd(const Graph& g, int cap, bool ordinary) {
    const SearchLimits limits{cap, Deadline{}};
    if (g.order() > cap)
      throw CapacityError("graph has " + std::to_string(g.order()) + " vertices; the exhaustive cap is " +
                          std::to_string(cap));
    const HadwigerResult r = ordinary ? hadwiger_number(g, limits) : dominating_hadwiger_number(g, limits);
    json j{{"schema", "domhad.hd/1"},
           {"kind", ordinary ? "ordinary" : "dominating"},
           {ordinary ? "h" : "hd", r.value},
           {"witness", r.witness.to_lists()}};
    emit(j, std::to_string(r.value));
    return 0;
  }

  int do_gen(const std::string& family, const std::vector<double>& params, std::optional<std::uint64_t> seed) {
    auto need_seed = [&] {
      if (!seed) throw ArgumentError("random family " + family + " needs --seed");
      return *seed;
    };
    auto as_int = [&](std::size_t i) {
      const double v = params.at(i);
      if (v != static_cast<double>(static_cast<int>(v))) throw ArgumentError("parameter must be an integer");
      return static_cast<int>(v);
    };
    Graph g;
    if (family == "gnp" || family == "random-2k2-free") {
      if (params.size() != 2) throw ArgumentError(family + " takes n and p");
      g = family == "gnp" ? gen::random_gnp(as_int(0), params[1], need_seed())
                          : gen::random_2k2_free(as_int(0), params[1], need_seed());
    } else if (family == "random-structured-2k2-free") {
      if (params.size() > 1) throw ArgumentError(family + " takes an optional n_max");
      g = gen::random_structured_2k2_free(need_seed(), params.empty() ? 30 : as_int(0));
    } else {
      std::vector<int> ints;
      for (std::size_t i = 0; i < params.size(); ++i) ints.push_back(as_int(i));
      g = gen::family(family, ints);
    }
    const std::string g6 = emit_graph6(g);
    json j{{"schema", "domhad.gen/1"}, {"family", family}, {"graph6", g6}, {"n", g.order()}, {"m", g.num_edges()}};
    if (seed) j["seed"] = *seed;
    emit(j, g6);
    return 0;
  }

  int do_convert(const Graph& g, const std::string& to) {
    std::string text = to == "g6" ? emit_graph6(g) : to == "edges" ? emit_edge_list(g) : emit_dot(g);
    json j{{"schema", "domhad.convert/1"}, {"format", to}, {"text", text}};
    if (!text.empty() && text.back() == '\n') text.pop_back();
    emit(j, text);
    return 0;
  }

  int do_hunt(const HuntConfig& cfg) {
    const HuntSummary s = run_hunt(cfg, out_);
    out_ << s.to_json() << '\n';
    return s.exit_code();
  }

  std::ostream& out_;
  std::ostream& err_;
  bool plain_ = false;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return Runner(out, err).run(args);
}

}  // namespace domhad::cli
