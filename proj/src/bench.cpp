#include "dla/bench.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstring>
#include <fstream>
#include <future>
#include <set>
#include <tuple>

#include <nlohmann/json.hpp>

namespace dla {

namespace fs = std::filesystem;
using nlohmann::json;

std::string graded_name(Graded g) {
  switch (g) {
    case Graded::correct: return "correct";
    case Graded::incorrect: return "incorrect";
    case Graded::no_answer: return "no_answer";
  }
  return "incorrect";
}

std::optional<Graded> graded_from_name(const std::string& name) {
  if (name == "correct") return Graded::correct;
  if (name == "incorrect") return Graded::incorrect;
  if (name == "no_answer") return Graded::no_answer;
  return std::nullopt;
}

namespace {

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool word_at(const std::string& s, std::size_t pos, const char* word) {
  const std::size_t n = std::strlen(word);
  if (pos + n > s.size()) return false;
  for (std::size_t k = 0; k < n; ++k) {
    if (std::tolower(static_cast<unsigned char>(s[pos + k])) != word[k]) {
      return false;
    }
  }
  const bool left_ok = pos == 0 || !ident_char(s[pos - 1]);
  const bool right_ok = pos + n == s.size() || !ident_char(s[pos + n]);
  return left_ok && right_ok;
}

}  // namespace

bool gold_orders_rows(const std::string& gold_sql) {
  bool in_string = false;
  int depth = 0;
  for (std::size_t i = 0; i < gold_sql.size(); ++i) {
    const char c = gold_sql[i];
    if (in_string) {
      if (c == '\'') in_string = false;
      continue;
    }
    if (c == '\'') {
      in_string = true;
    } else if (c == '(') {
      ++depth;
    } else if (c == ')') {
      --depth;
    } else if (depth == 0 && word_at(gold_sql, i, "order")) {
      std::size_t j = i + 5;
      while (j < gold_sql.size() &&
             std::isspace(static_cast<unsigned char>(gold_sql[j]))) {
        ++j;
      }
      if (word_at(gold_sql, j, "by")) return true;
    }
  }
  return false;
}

bool results_equivalent(const QueryResult& gold, const QueryResult& candidate,
                        bool ordered) {
  auto canon = [](const QueryResult& r) {
    std::vector<std::vector<std::string>> rows;
    rows.reserve(r.rows.size());
    for (const auto& row : r.rows) {
      std::vector<std::string> out;
      out.reserve(row.size());
      for (const Value& v : row) out.push_back(canonical_scalar(v));
      rows.push_back(std::move(out));
    }
    return rows;
  };
  std::vector<std::vector<std::string>> g = canon(gold);
  std::vector<std::vector<std::string>> c = canon(candidate);
  if (!ordered) {
    std::sort(g.begin(), g.end());
    std::sort(c.begin(), c.end());
  }
  return g == c;
}

Graded grade(const Catalog& catalog, const TaskSpec& task,
             const std::optional<std::string>& sql,
             const std::optional<std::string>& target_db) {
  if (!sql || !target_db) return Graded::no_answer;
  QueryResult gold;
  try {
    gold = catalog.execute_sql(task.target_db, task.gold_sql);
  } catch (const std::exception& e) {
    throw BenchError("gold query of " + task.id + " failed: " + e.what());
  }
  QueryResult candidate;
  try {
    candidate = catalog.execute_sql(*target_db, *sql);
  } catch (const CatalogError&) {
    return Graded::incorrect;
  } catch (const SqliteError&) {
    return Graded::incorrect;
  }
  const bool ordered = gold_orders_rows(task.gold_sql);
  return results_equivalent(gold, candidate, ordered) ? Graded::correct
                                                      : Graded::incorrect;
}

std::string record_to_json(const RunRecord& record) {
  return json{{"task_id", record.task_id},
              {"method", record.method},
              {"setting", record.setting},
              {"difficulty", record.difficulty},
              {"termination", record.termination},
              {"graded", record.graded},
              {"input_tokens", record.input_tokens},
              {"output_tokens", record.output_tokens},
              {"turns", record.turns},
              {"usage_source", record.usage_source},
              {"wall_time_ms", record.wall_time_ms},
              {"model", record.model}}
      .dump();
}

RunRecord record_from_json(const std::string& line) {
  try {
    const json j = json::parse(line);
    RunRecord r;
    r.task_id = j.at("task_id").get<std::string>();
    r.method = j.at("method").get<std::string>();
    r.setting = j.at("setting").get<std::string>();
    r.difficulty = j.at("difficulty").get<std::string>();
    r.termination = j.at("termination").get<std::string>();
    r.graded = j.at("graded").get<std::string>();
    r.input_tokens = j.at("input_tokens").get<std::int64_t>();
    r.output_tokens = j.at("output_tokens").get<std::int64_t>();
    r.turns = j.at("turns").get<int>();
    r.usage_source = j.at("usage_source").get<std::string>();
    r.wall_time_ms = j.at("wall_time_ms").get<std::int64_t>();
    r.model = j.at("model").get<std::string>();
    return r;
  } catch (const json::exception& e) {
    throw BenchError(std::string("bad record line: ") + e.what());
  }
}

std::vector<RunRecord> load_records(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    throw BenchError("cannot read " + file.string());
  }
  std::vector<RunRecord> records;
  std::string line;
  bool pending_error = false;
  std::string pending_detail;
  while (std::getline(in, line)) {
    if (pending_error) {
      throw BenchError(pending_detail);
    }
    if (line.empty()) continue;
    try {
      records.push_back(record_from_json(line));
    } catch (const BenchError& e) {
      // Only a torn final line (killed mid-append) is forgivable.
      pending_error = true;
      pending_detail = file.string() + ": " + e.what();
    }
  }
  return records;
}

std::vector<std::string> make_replay_script(const TaskSpec& task,
                                            const Manifest& manifest,
                                            const std::string& method) {
  const AgentCommand final_cmd = DbQueryFinalSql{task.target_db, task.gold_sql};
  if (method == "direct") {
    return {render_command(final_cmd)};
  }
  if (method != "agent") {
    throw BenchError("unknown method '" + method + "'");
  }
  std::vector<std::string> replies;
  replies.push_back(render_command(GetDbDescription{}));
  replies.push_back(render_command(GetTables{task.target_db}));
  for (const std::string& table :
       referenced_tables(manifest, task.target_db, task.gold_sql)) {
    replies.push_back(render_command(GetColumns{task.target_db, table}));
  }
  replies.push_back(render_command(final_cmd));
  return replies;
}

namespace {

RunRecord run_one(const Catalog& catalog, const Manifest& manifest,
                  const PromptSet& prompts, const ModelConfig& model,
                  const SolverLimits& limits, const TaskSpec& task,
                  const std::string& method, const std::string& setting) {
  const auto start = std::chrono::steady_clock::now();
  std::unique_ptr<ChatClient> client;
  if (model.endpoint == "scripted" && model.script_path.empty()) {
    client = std::make_unique<ScriptedModel>(
        make_replay_script(task, manifest, method));
  } else {
    client = make_chat_client(model, method + ":" + task.id);
  }
  const SolverOutcome outcome =
      method == "agent"
          ? solve_agent(catalog, task.question, *client, prompts, limits)
          : solve_direct(catalog, task.question, *client, prompts, limits);

  RunRecord r;
  r.task_id = task.id;
  r.method = method;
  r.setting = setting;
  r.difficulty = difficulty_name(task.difficulty);
  r.termination = termination_name(outcome.termination);
  r.graded = graded_name(grade(catalog, task, outcome.final_sql, outcome.target_db));
  r.input_tokens = outcome.usage.input;
  r.output_tokens = outcome.usage.output;
  r.turns = outcome.turns;
  r.usage_source = outcome.usage.source == UsageSource::api_reported
                       ? "api_reported"
                       : "estimated";
  r.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  r.model = model.model_name;
  return r;
}

}  // namespace

std::vector<RunRecord> run_benchmark(const fs::path& fixtures_dir,
                                     const BenchOptions& options,
                                     const ModelConfig& model,
                                     const fs::path& out_file) {
  BenchOptions opt = options;
  if (opt.settings.empty()) opt.settings = setting_names();
  if (opt.methods.empty()) opt.methods = {"agent", "direct"};
  for (const std::string& s : opt.settings) {
    if (std::find(setting_names().begin(), setting_names().end(), s) ==
        setting_names().end()) {
      throw BenchError("unknown setting '" + s + "'");
    }
  }
  for (const std::string& m : opt.methods) {
    if (m != "agent" && m != "direct") {
      throw BenchError("unknown method '" + m + "'");
    }
  }

  const Manifest manifest = load_manifest(fixtures_dir / "manifest.json");
  const std::vector<TaskSpec> tasks = load_tasks(fixtures_dir / "tasks.json");
  const PromptSet prompts = load_default_prompt_set();

  std::map<std::string, Catalog> catalogs;
  for (const std::string& setting : opt.settings) {
    catalogs.emplace(setting,
                     load_catalog(catalog_config_path(fixtures_dir, setting)));
  }

  std::vector<RunRecord> records;
  std::set<std::tuple<std::string, std::string, std::string>> done;
  if (fs::exists(out_file)) {
    records = load_records(out_file);
    for (const RunRecord& r : records) {
      done.insert({r.task_id, r.method, r.setting});
    }
    // A kill mid-append can leave a torn final line; rewrite the surviving
    // records so the next append starts on a fresh line.
    const fs::path tmp = out_file.string() + ".tmp";
    {
      std::ofstream rewrite(tmp, std::ios::binary | std::ios::trunc);
      if (!rewrite) {
        throw BenchError("cannot rewrite " + out_file.string());
      }
      for (const RunRecord& r : records) {
        rewrite << record_to_json(r) << "\n";
      }
    }
    fs::rename(tmp, out_file);
  }

  struct Job {
    const std::string* setting;
    const std::string* method;
    const TaskSpec* task;
  };
  std::vector<Job> jobs;
  for (const std::string& setting : opt.settings) {
    for (const std::string& method : opt.methods) {
      for (const TaskSpec& task : tasks) {
        if (done.count({task.id, method, setting}) == 0) {
          jobs.push_back({&setting, &method, &task});
        }
      }
    }
  }

  std::ofstream out(out_file, std::ios::binary | std::ios::app);
  if (!out) {
    throw BenchError("cannot open " + out_file.string() + " for append");
  }

  // Runs are independent; batches of `parallelism` keep the append order (and
  // therefore the record file) deterministic.
  const std::size_t batch = static_cast<std::size_t>(std::max(1, opt.parallelism));
  for (std::size_t base = 0; base < jobs.size(); base += batch) {
    const std::size_t end = std::min(jobs.size(), base + batch);
    std::vector<std::future<RunRecord>> running;
    for (std::size_t i = base; i < end; ++i) {
      const Job job = jobs[i];
      const Catalog* catalog = &catalogs.at(*job.setting);
      running.push_back(std::async(
          std::launch::async, [catalog, job, &manifest, &prompts, &model, &opt]() {
            return run_one(*catalog, manifest, prompts, model, opt.limits,
                           *job.task, *job.method, *job.setting);
          }));
    }
    for (std::future<RunRecord>& f : running) {
      RunRecord r = f.get();
      out << record_to_json(r) << "\n";
      out.flush();
      records.push_back(std::move(r));
    }
  }
  return records;
}

}  // namespace dla
