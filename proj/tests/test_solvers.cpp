#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "dla/bench.hpp"
#include "dla/catalog.hpp"
#include "dla/fixtures.hpp"
#include "dla/llm.hpp"
#include "dla/solvers.hpp"
#include "support.hpp"

using namespace dla;
namespace fs = std::filesystem;

namespace {

const Catalog& small_catalog() {
  static const Catalog catalog = load_catalog(
      catalog_config_path(test_support::fixtures_dir(), "small"));
  return catalog;
}

const PromptSet& prompts() {
  static const PromptSet set = load_default_prompt_set();
  return set;
}

struct FailingClient : ChatClient {
  ChatReply chat(const std::vector<ChatMessage>&) override {
    throw LlmError("model unreachable");
  }
};

const std::string kGetTablesF1 = "ACTION: GetTables\nARG: database=f1\n";
const std::string kFinalF1 =
    "ACTION: DBQueryFinalSQL\nARG: database=f1\n"
    "ARG: sql=SELECT COUNT(*) FROM races WHERE year = 2015\n";

}  // namespace

TEST_CASE("prompt templates load and differ only by the metadata section") {
  const PromptSet& set = prompts();
  CHECK(set.agent_system_template.find("{{COMMANDS}}") != std::string::npos);
  CHECK(set.agent_system_template.find("{{TASK}}") != std::string::npos);
  CHECK(!set.force_final.empty());

  std::string stripped = set.direct_system_template;
  const std::string marker = "\n# Database metadata\n\n{{DATABASES}}\n";
  auto pos = stripped.find(marker);
  REQUIRE(pos != std::string::npos);
  stripped.erase(pos, marker.size());
  CHECK(stripped == set.agent_system_template);
}

TEST_CASE("prompt loading rejects missing files and placeholders") {
  fs::path dir = fs::current_path() / "dla_bad_prompts";
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto write = [&](const char* name, const std::string& text) {
    std::ofstream out(dir / name);
    out << text;
  };
  write("agent_system.txt", "{{COMMANDS}} only");
  write("direct_system.txt", "{{COMMANDS}} {{TASK}} {{DATABASES}}");
  write("force_final.txt", "answer now");
  CHECK_THROWS_AS(load_prompt_set(dir), PromptError);  // agent lacks {{TASK}}

  write("agent_system.txt", "{{COMMANDS}} {{TASK}}");
  CHECK_NOTHROW(load_prompt_set(dir));

  write("force_final.txt", "");
  CHECK_THROWS_AS(load_prompt_set(dir), PromptError);

  fs::remove_all(dir);
  CHECK_THROWS_AS(load_prompt_set(dir), PromptError);
}

TEST_CASE("system prompts substitute every placeholder") {
  std::string agent = make_agent_system_prompt(prompts(), "How many rounds?");
  CHECK(agent.find("How many rounds?") != std::string::npos);
  CHECK(agent.find("GetTables") != std::string::npos);
  CHECK(agent.find("{{") == std::string::npos);

  std::string direct =
      make_direct_system_prompt(prompts(), small_catalog(), "How many rounds?");
  CHECK(direct.find("How many rounds?") != std::string::npos);
  CHECK(direct.find("races") != std::string::npos);
  CHECK(direct.find("GetTables") == std::string::npos);
  CHECK(direct.find("{{") == std::string::npos);
}

TEST_CASE("catalog metadata serialization covers every database and table") {
  std::string metadata = serialize_catalog_metadata(small_catalog());
  for (const char* name : {"f1", "avito", "trial", "stack", "hm", "races",
                           "article", "user_info", "badges"}) {
    CHECK(metadata.find(name) != std::string::npos);
  }
}

TEST_CASE("agent solves a scripted four-turn conversation") {
  ScriptedModel model({
      "ACTION: GetDBDescription\n",
      kGetTablesF1,
      "ACTION: GetColumns\nARG: database=f1\nARG: table=races\n",
      kFinalF1,
  });
  SolverOutcome out =
      solve_agent(small_catalog(), "How many events in 2015?", model, prompts());

  CHECK(out.termination == Termination::answered);
  CHECK(out.turns == 4);
  CHECK(out.repeat_count == 0);
  CHECK(!out.forced_at_turn.has_value());
  REQUIRE(out.final_sql.has_value());
  CHECK(*out.final_sql == "SELECT COUNT(*) FROM races WHERE year = 2015");
  CHECK(out.target_db == "f1");
  CHECK(out.usage.source == UsageSource::estimated);
  CHECK(out.usage.input > 0);

  REQUIRE(out.transcript.size() == 8);
  CHECK(out.transcript[0].role == Role::system);
  CHECK(out.transcript[2].content.rfind("Databases (5):", 0) == 0);
  CHECK(out.transcript[4].content.rfind("Tables of f1", 0) == 0);
  CHECK(out.transcript[6].content.rfind("Columns of f1.races:", 0) == 0);
}

TEST_CASE("protocol slips and bad ids come back as correctable errors") {
  ScriptedModel model({
      "let me think about this first",
      "ACTION: GetTables\nARG: database=copper\n",
      kFinalF1,
  });
  SolverOutcome out = solve_agent(small_catalog(), "q", model, prompts());
  CHECK(out.termination == Termination::answered);
  CHECK(out.turns == 3);
  CHECK(out.transcript[2].content.rfind("Error:", 0) == 0);   // no command block
  CHECK(out.transcript[4].content.rfind("Error:", 0) == 0);   // unknown database
  CHECK(out.transcript[4].content.find("f1") != std::string::npos);
}

TEST_CASE("nine repeats stay under the threshold") {
  std::vector<std::string> replies(10, kGetTablesF1);  // 1 first + 9 repeats
  replies.push_back(kFinalF1);
  ScriptedModel model(replies);
  SolverOutcome out = solve_agent(small_catalog(), "q", model, prompts());
  CHECK(out.termination == Termination::answered);
  CHECK(out.repeat_count == 9);
  CHECK(!out.forced_at_turn.has_value());
  CHECK(out.turns == 11);
}

TEST_CASE("the tenth repeat forces the final answer") {
  std::vector<std::string> replies(11, kGetTablesF1);  // 1 first + 10 repeats
  replies.push_back(kFinalF1);
  ScriptedModel model(replies);
  SolverOutcome out = solve_agent(small_catalog(), "q", model, prompts());

  CHECK(out.termination == Termination::forced_answered);
  CHECK(out.repeat_count == 10);
  REQUIRE(out.forced_at_turn.has_value());
  CHECK(*out.forced_at_turn == 11);
  CHECK(out.turns == 12);
  REQUIRE(out.final_sql.has_value());
  // The cutoff message still carries the requested listing plus the warning.
  const std::string& cutoff = out.transcript[2 * 11].content;
  CHECK(cutoff.rfind("Tables of f1", 0) == 0);
  CHECK(cutoff.find(prompts().force_final) != std::string::npos);
}

TEST_CASE("a forced turn without a final query ends without sql") {
  std::vector<std::string> replies(11, kGetTablesF1);
  replies.push_back("I am not sure which database to use.");
  ScriptedModel model(replies);
  SolverOutcome out = solve_agent(small_catalog(), "q", model, prompts());
  CHECK(out.termination == Termination::forced_no_sql);
  CHECK(out.turns == 12);
  CHECK(!out.final_sql.has_value());

  // An acquisition command on the forced turn is just as final a refusal.
  std::vector<std::string> replies2(11, kGetTablesF1);
  replies2.push_back("ACTION: GetColumns\nARG: database=f1\nARG: table=races\n");
  ScriptedModel model2(replies2);
  SolverOutcome out2 = solve_agent(small_catalog(), "q", model2, prompts());
  CHECK(out2.termination == Termination::forced_no_sql);
}

TEST_CASE("the turn budget stops a model that never converges") {
  std::vector<std::string> replies(30, "no block here");
  ScriptedModel model(replies);
  SolverOutcome out = solve_agent(small_catalog(), "q", model, prompts());
  CHECK(out.termination == Termination::max_turns);
  CHECK(out.turns == 25);
  CHECK(model.replies_consumed() == 25);
}

TEST_CASE("transport failure surfaces as protocol_failure, not a crash") {
  FailingClient failing;
  SolverOutcome out = solve_agent(small_catalog(), "q", failing, prompts());
  CHECK(out.termination == Termination::protocol_failure);
  CHECK(out.turns == 0);

  SolverOutcome direct_out = solve_direct(small_catalog(), "q", failing, prompts());
  CHECK(direct_out.termination == Termination::protocol_failure);
}

TEST_CASE("direct solving accepts only an immediate final query") {
  ScriptedModel good({kFinalF1});
  SolverOutcome out = solve_direct(small_catalog(), "q", good, prompts());
  CHECK(out.termination == Termination::answered);
  CHECK(out.turns == 1);
  CHECK(out.target_db == "f1");
  REQUIRE(out.final_sql.has_value());

  ScriptedModel prose({"the answer is 18"});
  CHECK(solve_direct(small_catalog(), "q", prose, prompts()).termination ==
        Termination::protocol_failure);

  ScriptedModel acquiring({kGetTablesF1});
  CHECK(solve_direct(small_catalog(), "q", acquiring, prompts()).termination ==
        Termination::protocol_failure);
}

TEST_CASE("replayed agent transcripts only name schema the commands returned") {
  Manifest manifest = load_manifest(test_support::fixtures_dir() / "manifest.json");
  auto tasks = load_tasks(test_support::fixtures_dir() / "tasks.json");
  auto names = all_schema_names(manifest);

  // One simple and one complex task; the acceptance checks sweep all 100.
  int done = 0;
  for (const auto& task : tasks) {
    if (task.id != "t001" && task.id != "t019") continue;
    ScriptedModel model(make_replay_script(task, manifest, "agent"));
    SolverOutcome out =
        solve_agent(small_catalog(), task.question, model, prompts());
    CHECK(out.termination == Termination::answered);

    std::string shown;
    std::string everything;
    for (const auto& m : out.transcript) {
      everything += m.content;
      everything.push_back('\n');
      if (m.role == Role::user) {
        shown += m.content;
        shown.push_back('\n');
      }
    }
    std::set<std::string> allowed;
    for (const auto& name : names_found(names, shown)) allowed.insert(name);
    for (const auto& name : names_found(names, everything)) {
      INFO(task.id, " transcript names '", name, "'");
      CHECK(allowed.count(name) == 1);
    }
    ++done;
  }
  CHECK(done == 2);
}
