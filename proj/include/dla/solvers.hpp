#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dla/catalog.hpp"
#include "dla/llm.hpp"
#include "dla/protocol.hpp"

namespace dla {

/// The three system-prompt templates. The agent and direct templates share
/// their wording except for the command reference and the direct template's
/// inline metadata section.
struct PromptSet {
  std::string agent_system_template;   // placeholders: {{COMMANDS}}, {{TASK}}
  std::string direct_system_template;  // + {{DATABASES}}
  std::string force_final;             // appended verbatim when the loop is cut
};

class PromptError : public std::runtime_error {
 public:
  explicit PromptError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Loads the three templates from a directory and checks their placeholders.
PromptSet load_prompt_set(const std::filesystem::path& dir);
PromptSet load_default_prompt_set();

/// Full metadata dump for the direct prompt: every database, table, column.
std::string serialize_catalog_metadata(const Catalog& catalog);

std::string make_agent_system_prompt(const PromptSet& prompts,
                                     const std::string& question);
std::string make_direct_system_prompt(const PromptSet& prompts,
                                      const Catalog& catalog,
                                      const std::string& question);

struct SolverLimits {
  int max_turns = 25;
  int repeat_threshold = 10;
};

enum class Termination {
  answered,          // model issued DBQueryFinalSQL on its own
  forced_answered,   // issued it on the forced final turn
  forced_no_sql,     // forced final turn produced no final query
  max_turns,         // turn budget exhausted
  protocol_failure,  // unrecoverable: direct reply invalid, or transport died
};

std::string termination_name(Termination t);
std::optional<Termination> termination_from_name(const std::string& name);

struct SolverOutcome {
  std::optional<std::string> final_sql;
  std::optional<std::string> target_db;
  Termination termination = Termination::protocol_failure;
  int turns = 0;            // model calls made
  int repeat_count = 0;     // turns whose command fingerprint was already seen
  std::optional<int> forced_at_turn;  // turn whose response carried the cutoff
  TokenUsage usage;         // summed over calls
  std::vector<ChatMessage> transcript;
};

/// Runs the iterative metadata-acquisition loop until the model submits a
/// final query or a safeguard fires.
SolverOutcome solve_agent(const Catalog& catalog, const std::string& question,
                          ChatClient& client, const PromptSet& prompts,
                          const SolverLimits& limits = {});

/// Single-shot baseline: full metadata in the prompt, one model call, the
/// reply must be a DBQueryFinalSQL command.
SolverOutcome solve_direct(const Catalog& catalog, const std::string& question,
                           ChatClient& client, const PromptSet& prompts,
                           const SolverLimits& limits = {});

}  // namespace dla
