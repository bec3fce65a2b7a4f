#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "dla/bench.hpp"
#include "dla/catalog.hpp"
#include "dla/fixtures.hpp"
#include "support.hpp"

using namespace dla;
namespace fs = std::filesystem;

namespace {

const Catalog& small_catalog() {
  static const Catalog catalog = load_catalog(
      catalog_config_path(test_support::fixtures_dir(), "small"));
  return catalog;
}

std::vector<TaskSpec> all_tasks() {
  return load_tasks(test_support::fixtures_dir() / "tasks.json");
}

TaskSpec task_by_id(const std::string& id) {
  for (auto& t : all_tasks()) {
    if (t.id == id) return t;
  }
  FAIL("no task " << id);
  return {};
}

std::string slurp(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunRecord sample_record() {
  RunRecord r;
  r.task_id = "t001";
  r.method = "agent";
  r.setting = "small";
  r.difficulty = "simple";
  r.termination = "answered";
  r.graded = "correct";
  r.input_tokens = 4264;
  r.output_tokens = 120;
  r.turns = 4;
  r.usage_source = "estimated";
  r.wall_time_ms = 7;
  r.model = "o1";
  return r;
}

}  // namespace

TEST_CASE("scalars canonicalize to comparable text") {
  CHECK(canonical_scalar(Value{std::int64_t{5}}) == "5");
  CHECK(canonical_scalar(Value{std::int64_t{-42}}) == "-42");
  CHECK(canonical_scalar(Value{2.0}) == "2");
  CHECK(canonical_scalar(Value{1.5}) == "1.5");
  CHECK(canonical_scalar(Value{0.0004}) == "0.0004");
  CHECK(canonical_scalar(Value{std::monostate{}}) == "NULL");
  CHECK(canonical_scalar(Value{std::nan("")}) == "NaN");
  CHECK(canonical_scalar(Value{std::string("Monza")}) == "Monza");
}

TEST_CASE("order sensitivity follows the gold query's top-level ORDER BY") {
  CHECK(gold_orders_rows("SELECT a FROM t ORDER BY a"));
  CHECK(gold_orders_rows("select a from t order   by a desc"));
  CHECK(gold_orders_rows("SELECT a FROM t ORDER\nBY a"));
  CHECK(!gold_orders_rows("SELECT a FROM t"));
  CHECK(!gold_orders_rows("SELECT * FROM (SELECT a FROM t ORDER BY a)"));
  CHECK(!gold_orders_rows("SELECT a FROM t WHERE b = 'order by'"));
  CHECK(!gold_orders_rows("SELECT reorder FROM t WHERE by = 1"));
  CHECK(gold_orders_rows(
      "SELECT a, COUNT(*) FROM t GROUP BY a ORDER BY COUNT(*) DESC LIMIT 1"));
}

TEST_CASE("result comparison is multiset by default, sequence when ordered") {
  QueryResult gold;
  gold.columns = {"a"};
  gold.rows = {{std::int64_t{1}}, {std::int64_t{2}}, {std::int64_t{2}}};

  QueryResult permuted;
  permuted.columns = {"x"};  // column names never matter, values do
  permuted.rows = {{std::int64_t{2}}, {std::int64_t{1}}, {std::int64_t{2}}};

  CHECK(results_equivalent(gold, permuted, false));
  CHECK(!results_equivalent(gold, permuted, true));

  QueryResult wrong_multiplicity;
  wrong_multiplicity.rows = {{std::int64_t{1}}, {std::int64_t{1}}, {std::int64_t{2}}};
  CHECK(!results_equivalent(gold, wrong_multiplicity, false));

  QueryResult as_reals;
  as_reals.rows = {{1.0}, {2.0}, {2.0}};
  CHECK(results_equivalent(gold, as_reals, false));

  QueryResult wider;
  wider.rows = {{std::int64_t{1}, std::int64_t{1}},
                {std::int64_t{2}, std::int64_t{2}},
                {std::int64_t{2}, std::int64_t{2}}};
  CHECK(!results_equivalent(gold, wider, false));
}

TEST_CASE("grading separates correct, incorrect, and no answer") {
  TaskSpec task = task_by_id("t001");
  const Catalog& catalog = small_catalog();

  CHECK(grade(catalog, task, task.gold_sql, task.target_db) == Graded::correct);
  CHECK(grade(catalog, task, std::nullopt, std::nullopt) == Graded::no_answer);
  CHECK(grade(catalog, task, task.gold_sql, std::nullopt) == Graded::no_answer);
  CHECK(grade(catalog, task, "SELECT 99", task.target_db) == Graded::incorrect);
  CHECK(grade(catalog, task, "SELECT FROM nonsense(", task.target_db) ==
        Graded::incorrect);
  CHECK(grade(catalog, task, task.gold_sql, "avito") == Graded::incorrect);
  CHECK(grade(catalog, task, task.gold_sql, "no_such_db") == Graded::incorrect);
}

TEST_CASE("records serialize to stable single-line json") {
  RunRecord r = sample_record();
  std::string line = record_to_json(r);
  CHECK(line ==
        R"({"difficulty":"simple","graded":"correct","input_tokens":4264,)"
        R"("method":"agent","model":"o1","output_tokens":120,"setting":"small",)"
        R"("task_id":"t001","termination":"answered","turns":4,)"
        R"("usage_source":"estimated","wall_time_ms":7})");

  RunRecord back = record_from_json(line);
  CHECK(record_to_json(back) == line);
  CHECK_THROWS_AS(record_from_json("{\"task_id\":"), BenchError);
  CHECK_THROWS_AS(record_from_json("{\"task_id\":\"x\"}"), BenchError);
}

TEST_CASE("record files shrug off a torn final line only") {
  fs::path file = fs::current_path() / "dla_records_test.jsonl";
  std::string line = record_to_json(sample_record());
  {
    std::ofstream out(file, std::ios::binary);
    out << line << "\n" << line << "\n" << line.substr(0, 40);
  }
  auto records = load_records(file);
  CHECK(records.size() == 2);

  {
    std::ofstream out(file, std::ios::binary);
    out << line.substr(0, 40) << "\n" << line << "\n";
  }
  CHECK_THROWS_AS(load_records(file), BenchError);

  {
    std::ofstream out(file, std::ios::binary);
  }
  CHECK(load_records(file).empty());
  fs::remove(file);
  CHECK_THROWS_AS(load_records(file), BenchError);
}

TEST_CASE("replay scripts walk the gold path") {
  Manifest manifest = load_manifest(test_support::fixtures_dir() / "manifest.json");

  TaskSpec simple = task_by_id("t001");
  auto agent_script = make_replay_script(simple, manifest, "agent");
  REQUIRE(agent_script.size() == 4);  // descriptions + tables + one column listing + final
  CHECK(agent_script[0].find("GetDBDescription") != std::string::npos);
  CHECK(agent_script[3].find("DBQueryFinalSQL") != std::string::npos);

  TaskSpec complex = task_by_id("t019");
  auto refs = referenced_tables(manifest, complex.target_db, complex.gold_sql);
  auto complex_script = make_replay_script(complex, manifest, "agent");
  CHECK(complex_script.size() == 3 + refs.size());

  auto direct_script = make_replay_script(simple, manifest, "direct");
  REQUIRE(direct_script.size() == 1);
  CHECK(direct_script[0].find("DBQueryFinalSQL") != std::string::npos);

  CHECK_THROWS_AS(make_replay_script(simple, manifest, "psychic"), BenchError);
}

TEST_CASE("the benchmark writes, resumes, and never duplicates cells") {
  fs::path out = fs::current_path() / "dla_bench_test.jsonl";
  fs::remove(out);

  BenchOptions options;
  options.settings = {"small"};
  options.methods = {"agent"};
  auto records = run_benchmark(test_support::fixtures_dir(), options,
                               ModelConfig{}, out);
  REQUIRE(records.size() == 100);
  for (const auto& r : records) {
    CHECK(r.termination == "answered");
    CHECK(r.graded == "correct");
    CHECK(r.method == "agent");
    CHECK(r.setting == "small");
    CHECK(r.usage_source == "estimated");
    CHECK(r.turns >= 4);
  }

  // A second run over a complete file is a no-op.
  std::string before = slurp(out);
  auto again = run_benchmark(test_support::fixtures_dir(), options,
                             ModelConfig{}, out);
  CHECK(again.size() == 100);
  CHECK(slurp(out) == before);

  // Adding a method fills only the missing cells.
  options.methods = {"agent", "direct"};
  auto both = run_benchmark(test_support::fixtures_dir(), options,
                            ModelConfig{}, out);
  CHECK(both.size() == 200);
  std::set<std::tuple<std::string, std::string, std::string>> cells;
  for (const auto& r : both) {
    CHECK(cells.insert({r.task_id, r.method, r.setting}).second);
  }
  fs::remove(out);

  BenchOptions bad;
  bad.settings = {"tiny"};
  CHECK_THROWS_AS(
      run_benchmark(test_support::fixtures_dir(), bad, ModelConfig{}, out),
      BenchError);
}

TEST_CASE("report arithmetic: accuracy, reduction, and cost delta") {
  std::vector<RunRecord> records;
  for (int i = 0; i < 4; ++i) {
    RunRecord r = sample_record();
    r.task_id = "t00" + std::to_string(i + 1);
    r.difficulty = i % 2 ? "complex" : "simple";
    r.method = "agent";
    r.input_tokens = 1000;
    r.graded = i == 0 ? "incorrect" : "correct";
    records.push_back(r);
    r.method = "direct";
    r.input_tokens = 2000;
    r.turns = 1;
    r.graded = "correct";
    records.push_back(r);
  }

  PriceSheet prices{{"o1", 15.0}};
  Report report = build_report(records, prices);

  const ReportCell& agent_all = report.cells.at("agent").at("small").at("all");
  CHECK(agent_all.n == 4);
  CHECK(agent_all.accuracy == doctest::Approx(0.75));
  CHECK(agent_all.mean_input_tokens == doctest::Approx(1000.0));
  CHECK(report.cells.at("agent").at("small").at("simple").n == 2);
  CHECK(report.cells.at("direct").at("small").at("all").accuracy ==
        doctest::Approx(1.0));

  CHECK(report.input_token_reduction.at("small") == doctest::Approx(0.5));
  // 1000 tasks at (2000 - 1000) extra input tokens, at $15 per million.
  CHECK(report.cost_delta_per_1000.at("small") == doctest::Approx(15.0));
  CHECK(report.warnings.empty());

  std::string rendered = render_report(report);
  CHECK(rendered.find("agent") != std::string::npos);
  CHECK(rendered.find("saved per 1000 tasks") != std::string::npos);

  std::string as_json = report_json(report);
  CHECK(as_json.find("\"input_token_reduction\"") != std::string::npos);

  CHECK_THROWS_AS(build_report({}, prices), BenchError);

  // Mixed models suppress cost math but keep the cells.
  records[1].model = "other-model";
  Report mixed = build_report(records, prices);
  CHECK(mixed.cost_delta_per_1000.empty());
  CHECK(!mixed.warnings.empty());
}
