#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dla/catalog.hpp"
#include "dla/fixtures.hpp"
#include "dla/llm.hpp"
#include "dla/solvers.hpp"

namespace dla {

class BenchError : public std::runtime_error {
 public:
  explicit BenchError(const std::string& msg) : std::runtime_error(msg) {}
};

enum class Graded { correct, incorrect, no_answer };

std::string graded_name(Graded g);
std::optional<Graded> graded_from_name(const std::string& name);

/// True when the query constrains the order of its result rows: an ORDER BY
/// at the top level, outside parentheses and string literals.
bool gold_orders_rows(const std::string& gold_sql);

/// Result-set equality after scalar canonicalization: ordered comparison when
/// the gold query fixes row order, multiset comparison otherwise. Column
/// names are ignored; row width differences always compare unequal.
bool results_equivalent(const QueryResult& gold, const QueryResult& candidate,
                        bool ordered);

/// Execution accuracy for one submission. No query means no_answer; a query
/// that fails to run, targets the wrong kind of database, or returns a
/// different result set is incorrect.
Graded grade(const Catalog& catalog, const TaskSpec& task,
             const std::optional<std::string>& sql,
             const std::optional<std::string>& target_db);

/// One benchmark measurement, serialized as a single JSONL line. Everything
/// except wall_time_ms is deterministic for scripted runs.
struct RunRecord {
  std::string task_id;
  std::string method;       // "agent" | "direct"
  std::string setting;      // "small" | "medium" | "large"
  std::string difficulty;   // "simple" | "complex"
  std::string termination;
  std::string graded;
  std::int64_t input_tokens = 0;
  std::int64_t output_tokens = 0;
  int turns = 0;
  std::string usage_source;  // "estimated" | "api_reported"
  std::int64_t wall_time_ms = 0;
  std::string model;
};

std::string record_to_json(const RunRecord& record);
RunRecord record_from_json(const std::string& line);

/// Reads a JSONL record file. A truncated final line (a run killed mid-write)
/// is dropped; corruption anywhere else is an error.
std::vector<RunRecord> load_records(const std::filesystem::path& file);

struct BenchOptions {
  std::vector<std::string> settings;  // empty = all settings
  std::vector<std::string> methods;   // empty = agent and direct
  int parallelism = 1;
  SolverLimits limits;
};

/// Runs the (settings x methods x tasks) matrix against generated fixtures,
/// appending one record per cell to `out_file` as it completes. Cells already
/// present in the file are skipped, so an interrupted run resumes cleanly.
/// Returns all records, previously existing ones included.
std::vector<RunRecord> run_benchmark(const std::filesystem::path& fixtures_dir,
                                     const BenchOptions& options,
                                     const ModelConfig& model,
                                     const std::filesystem::path& out_file);

/// Replies that walk one task flawlessly: request the database list, the
/// target's tables, the columns of every table the gold query needs, then
/// submit the gold query. Benchmark runs with endpoint "scripted" and no
/// script file play these.
std::vector<std::string> make_replay_script(const TaskSpec& task,
                                            const Manifest& manifest,
                                            const std::string& method);

/// Dollars per million input tokens, by model name.
using PriceSheet = std::map<std::string, double>;

PriceSheet load_price_sheet(const std::filesystem::path& file);

struct ReportCell {
  int n = 0;
  double accuracy = 0.0;
  double mean_input_tokens = 0.0;
  double mean_output_tokens = 0.0;
  double mean_turns = 0.0;
};

struct Report {
  // method -> setting -> difficulty bucket ("simple" | "complex" | "all").
  std::map<std::string, std::map<std::string, std::map<std::string, ReportCell>>>
      cells;
  // Per setting, 1 - agent_mean_input / direct_mean_input; present when both
  // methods were measured.
  std::map<std::string, double> input_token_reduction;
  // method -> setting -> input-token dollars per 1000 tasks; needs a price.
  std::map<std::string, std::map<std::string, double>> cost_per_1000;
  // Per setting, direct cost minus agent cost per 1000 tasks.
  std::map<std::string, double> cost_delta_per_1000;
  std::vector<std::string> warnings;
};

Report build_report(const std::vector<RunRecord>& records,
                    const PriceSheet& prices);

std::string render_report(const Report& report);
std::string report_json(const Report& report);

}  // namespace dla
