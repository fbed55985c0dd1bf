#pragma once

#include <chrono>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "domhad/exact.hpp"
#include "domhad/graph.hpp"

namespace domhad {

enum class Check { kDominatingHadwiger, kTheorem13, kMicu, kT3Equivalence };

std::string_view check_name(Check c);
/// "dominating-hadwiger", "theorem-1.3", "micu", "t3-equivalence"; ArgumentError otherwise.
Check parse_check(std::string_view name);

enum class Filter { kNone, kTwoK2Free };

std::string_view filter_name(Filter f);
Filter parse_filter(std::string_view name);

enum class Verdict { kHolds, kCounterexample, kSkippedFilter, kTimeout, kCapacity, kParseError, kCheckFailed };

std::string_view verdict_name(Verdict v);
Verdict parse_verdict(std::string_view name);

struct CheckOptions {
  std::vector<Check> checks{Check::kDominatingHadwiger};
  Filter filter = Filter::kNone;
  std::chrono::milliseconds budget{10'000};
  int max_vertices = kDefaultExactCap;
};

struct HuntRecord {
  std::size_t line = 0;  // 1-based input line; the sort key
  std::string graph6;
  int n = -1;
  int chi = -1;
  Verdict verdict = Verdict::kHolds;
  std::string detail = "{}";  // JSON object text
  double elapsed_ms = 0;
};

std::string to_json_line(const HuntRecord& r);
HuntRecord hunt_record_from_json(std::string_view line);

/// Runs the requested checks on one graph. Timeouts and cap overruns become
/// verdicts; a counterexample is re-checked without a budget before it is reported.
HuntRecord check_graph(const Graph& g, const CheckOptions& options);

struct HuntConfig {
  std::string input;  // path, or empty / "-" for standard input
  std::string output;  // JSONL path, or empty for standard output
  std::string checkpoint;  // empty disables resumption
  CheckOptions check;
  int workers = 1;
  std::size_t chunk_lines = 64;  // lines handed to each worker per round

  /// ArgumentError on workers < 1, non-positive budget, or a checkpoint without an output file.
  void validate() const;
};

struct HuntSummary {
  std::size_t records = 0;
  std::map<std::string, std::size_t> verdicts;
  std::vector<std::string> counterexamples;  // graph6 strings in input order
  std::size_t resumed_from_line = 0;
  double elapsed_ms = 0;

  /// 0 when nothing went wrong, 2 on a counterexample, 1 when a check failed internally.
  int exit_code() const;
  std::string to_json() const;
};

/// Streams the input, writing one record per graph line ('#' comments and
/// blank lines are skipped). With a checkpoint, a restart continues after the
/// last completed round and truncates any partially written output.
/// Throws Error when the input, output or checkpoint cannot be opened.
HuntSummary run_hunt(const HuntConfig& cfg, std::ostream& records_out);

}  // namespace domhad
