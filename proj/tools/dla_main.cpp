// Command-line front end: fixture generation, single-question runs, the
// benchmark loop, and report rendering over a records file.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dla/bench.hpp"
#include "dla/catalog.hpp"
#include "dla/fixtures.hpp"
#include "dla/llm.hpp"
#include "dla/solvers.hpp"
#include "dla/sqlite_util.hpp"

namespace {

namespace fs = std::filesystem;

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      if (!cur.empty()) parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) parts.push_back(cur);
  return parts;
}

const char* source_name(dla::UsageSource source) {
  return source == dla::UsageSource::estimated ? "estimated" : "api_reported";
}

int run_fixtures(const fs::path& out_dir, std::uint64_t seed) {
  dla::FixtureOptions options;
  options.seed = seed;
  dla::generate_fixtures(out_dir, options);
  const auto manifest = dla::load_manifest(out_dir / "manifest.json");
  std::cout << "fixtures written to " << out_dir.string() << "\n";
  for (const auto& setting : dla::setting_names()) {
    const auto it = manifest.settings.find(setting);
    if (it == manifest.settings.end()) continue;
    std::size_t tables = 0;
    for (const auto& db : manifest.databases) {
      for (const auto& id : it->second) {
        if (db.id == id) tables += db.tables.size();
      }
    }
    std::cout << "  " << setting << ": " << it->second.size()
              << " databases, " << tables << " tables\n";
  }
  return 0;
}

struct AskArgs {
  fs::path fixtures_dir;
  std::string setting = "small";
  std::string method = "agent";
  std::string task_id;
  std::string question;
  fs::path prompt_dir;
  dla::ModelConfig model;
  dla::SolverLimits limits;
  bool show_transcript = false;
};

int run_ask(const AskArgs& args) {
  const dla::Catalog catalog =
      dla::load_catalog(dla::catalog_config_path(args.fixtures_dir, args.setting));
  const dla::PromptSet prompts = args.prompt_dir.empty()
                                     ? dla::load_default_prompt_set()
                                     : dla::load_prompt_set(args.prompt_dir);

  std::optional<dla::TaskSpec> task;
  if (!args.task_id.empty()) {
    for (auto& t : dla::load_tasks(args.fixtures_dir / "tasks.json")) {
      if (t.id == args.task_id) task = std::move(t);
    }
    if (!task) {
      std::cerr << "error: no task named '" << args.task_id << "'\n";
      return 1;
    }
  }
  const std::string question = task ? task->question : args.question;

  std::unique_ptr<dla::ChatClient> client;
  if (args.model.endpoint == "scripted" && args.model.script_path.empty()) {
    if (!task) {
      std::cerr << "error: the scripted endpoint needs --task or --script\n";
      return 1;
    }
    const auto manifest = dla::load_manifest(args.fixtures_dir / "manifest.json");
    client = std::make_unique<dla::ScriptedModel>(
        dla::make_replay_script(*task, manifest, args.method));
  } else {
    const std::string key = args.method + ":" + (task ? task->id : "adhoc");
    client = dla::make_chat_client(args.model, key);
  }

  const dla::SolverOutcome outcome =
      args.method == "agent"
          ? dla::solve_agent(catalog, question, *client, prompts, args.limits)
          : dla::solve_direct(catalog, question, *client, prompts, args.limits);

  if (args.show_transcript) {
    for (const auto& message : outcome.transcript) {
      std::cout << "--- " << dla::role_name(message.role) << " ---\n"
                << message.content << "\n";
    }
    std::cout << "---\n";
  }

  std::cout << "termination: " << dla::termination_name(outcome.termination)
            << "\nturns: " << outcome.turns
            << "\ntokens: " << outcome.usage.input << " in, "
            << outcome.usage.output << " out ("
            << source_name(outcome.usage.source) << ")\n";
  if (outcome.target_db) std::cout << "database: " << *outcome.target_db << "\n";
  if (outcome.final_sql) std::cout << "sql: " << *outcome.final_sql << "\n";

  if (outcome.final_sql && outcome.target_db &&
      catalog.is_materialized(*outcome.target_db)) {
    try {
      const dla::QueryResult result =
          catalog.execute_sql(*outcome.target_db, *outcome.final_sql);
      std::cout << "rows: " << result.rows.size() << "\n";
      const std::size_t shown = std::min<std::size_t>(result.rows.size(), 10);
      for (std::size_t i = 0; i < shown; ++i) {
        std::string line;
        for (const auto& value : result.rows[i]) {
          if (!line.empty()) line += " | ";
          line += dla::canonical_scalar(value);
        }
        std::cout << "  " << line << "\n";
      }
      if (shown < result.rows.size()) std::cout << "  ...\n";
    } catch (const std::exception& e) {
      std::cout << "execution failed: " << e.what() << "\n";
    }
  }

  if (task) {
    const dla::Graded graded =
        dla::grade(catalog, *task, outcome.final_sql, outcome.target_db);
    std::cout << "graded: " << dla::graded_name(graded) << "\n";
  }
  return 0;
}

struct BenchArgs {
  fs::path fixtures_dir;
  fs::path out_file;
  std::string settings_csv;
  std::string methods_csv;
  dla::ModelConfig model;
  dla::BenchOptions options;
};

int run_bench(const BenchArgs& args) {
  dla::BenchOptions options = args.options;
  if (!args.settings_csv.empty()) options.settings = split_csv(args.settings_csv);
  if (!args.methods_csv.empty()) options.methods = split_csv(args.methods_csv);
  const auto records =
      dla::run_benchmark(args.fixtures_dir, options, args.model, args.out_file);
  std::map<std::string, int> by_graded;
  for (const auto& record : records) ++by_graded[record.graded];
  std::cout << records.size() << " records in " << args.out_file.string() << "\n";
  for (const auto& [name, count] : by_graded) {
    std::cout << "  " << name << ": " << count << "\n";
  }
  return 0;
}

int run_report(const fs::path& records_file, const fs::path& prices_file,
               bool as_json) {
  const auto records = dla::load_records(records_file);
  dla::PriceSheet prices;
  if (!prices_file.empty()) prices = dla::load_price_sheet(prices_file);
  const dla::Report report = dla::build_report(records, prices);
  std::cout << (as_json ? dla::report_json(report) : dla::render_report(report));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Datalake agent: metadata-frugal NL2SQL over growing database collections"};
  app.require_subcommand(1);

  auto* fixtures_cmd =
      app.add_subcommand("fixtures", "Generate the database corpus and task set");
  fs::path fixtures_out = "fixtures";
  std::uint64_t fixtures_seed = 1;
  fixtures_cmd->add_option("--out", fixtures_out, "Output directory");
  fixtures_cmd->add_option("--seed", fixtures_seed, "Generation seed");

  auto* ask_cmd = app.add_subcommand("ask", "Answer one question with one method");
  AskArgs ask;
  ask_cmd->add_option("--fixtures", ask.fixtures_dir, "Fixture directory")
      ->required();
  ask_cmd->add_option("--setting", ask.setting, "Collection size")
      ->check(CLI::IsMember(dla::setting_names()));
  ask_cmd->add_option("--method", ask.method, "Solver method")
      ->check(CLI::IsMember({"agent", "direct"}));
  ask_cmd->add_option("--task", ask.task_id, "Benchmark task id (grades the answer)");
  ask_cmd->add_option("--question", ask.question, "Free-form question");
  ask_cmd->add_option("--prompts", ask.prompt_dir, "Prompt template directory");
  ask_cmd->add_option("--model", ask.model.model_name, "Model name");
  ask_cmd->add_option("--endpoint", ask.model.endpoint,
                      "'scripted' or an OpenAI-compatible base URL");
  ask_cmd->add_option("--script", ask.model.script_path, "Scripted reply file");
  ask_cmd->add_option("--max-turns", ask.limits.max_turns, "Turn budget")
      ->check(CLI::PositiveNumber);
  ask_cmd->add_option("--repeat-threshold", ask.limits.repeat_threshold,
                      "Repeated requests before the final answer is forced")
      ->check(CLI::PositiveNumber);
  ask_cmd->add_flag("--transcript", ask.show_transcript, "Print the conversation");

  auto* bench_cmd = app.add_subcommand("bench", "Run the benchmark grid");
  BenchArgs bench;
  bench_cmd->add_option("--fixtures", bench.fixtures_dir, "Fixture directory")
      ->required();
  bench_cmd->add_option("--out", bench.out_file, "JSONL records file (appended)")
      ->required();
  bench_cmd->add_option("--settings", bench.settings_csv,
                        "Comma-separated settings (default: all)");
  bench_cmd->add_option("--methods", bench.methods_csv,
                        "Comma-separated methods (default: agent,direct)");
  bench_cmd->add_option("--model", bench.model.model_name, "Model name");
  bench_cmd->add_option("--endpoint", bench.model.endpoint,
                        "'scripted' or an OpenAI-compatible base URL");
  bench_cmd->add_option("--script", bench.model.script_path, "Scripted reply file");
  bench_cmd->add_option("--parallelism", bench.options.parallelism,
                        "Concurrent tasks")
      ->check(CLI::Range(1, 64));
  bench_cmd->add_option("--max-turns", bench.options.limits.max_turns, "Turn budget")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--repeat-threshold", bench.options.limits.repeat_threshold,
                        "Repeated requests before the final answer is forced")
      ->check(CLI::PositiveNumber);

  auto* report_cmd = app.add_subcommand("report", "Summarize a records file");
  fs::path records_file;
  fs::path prices_file;
  bool report_as_json = false;
  report_cmd->add_option("--records", records_file, "JSONL records file")
      ->required();
  report_cmd->add_option("--prices", prices_file,
                         "JSON map of model name to dollars per 1M input tokens");
  report_cmd->add_flag("--json", report_as_json, "Emit the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (fixtures_cmd->parsed()) return run_fixtures(fixtures_out, fixtures_seed);
    if (ask_cmd->parsed()) {
      if (ask.task_id.empty() == ask.question.empty()) {
        std::cerr << "error: give exactly one of --task and --question\n";
        return 2;
      }
      return run_ask(ask);
    }
    if (bench_cmd->parsed()) return run_bench(bench);
    if (report_cmd->parsed())
      return run_report(records_file, prices_file, report_as_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
