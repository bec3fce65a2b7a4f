#include "dla/solvers.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace dla {

namespace {

std::string read_text_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw PromptError("cannot open prompt file " + file.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void require_placeholder(const std::string& text, const std::string& name,
                         const std::string& file) {
  if (text.find("{{" + name + "}}") == std::string::npos) {
    throw PromptError(file + " is missing the {{" + name + "}} placeholder");
  }
}

std::string substitute(std::string text, const std::string& name,
                       const std::string& value) {
  std::string needle = "{{" + name + "}}";
  std::size_t pos;
  while ((pos = text.find(needle)) != std::string::npos) {
    text.replace(pos, needle.size(), value);
  }
  return text;
}

/// Executes one acquisition command, turning catalog errors into the
/// model-facing message they carry.
std::string dispatch_command(const Catalog& catalog, const AgentCommand& cmd) {
  try {
    if (std::holds_alternative<GetDbDescription>(cmd)) {
      return render_db_descriptions(catalog.get_db_descriptions());
    }
    if (const auto* t = std::get_if<GetTables>(&cmd)) {
      std::string id = catalog.resolve_db_id(t->database);
      return render_tables(id, catalog.get_tables(t->database));
    }
    const auto& c = std::get<GetColumns>(cmd);
    std::string id = catalog.resolve_db_id(c.database);
    return render_columns(id, c.table, catalog.get_columns(c.database, c.table));
  } catch (const CatalogError& e) {
    return std::string("Error: ") + e.what();
  }
}

}  // namespace

PromptSet load_prompt_set(const std::filesystem::path& dir) {
  PromptSet set;
  set.agent_system_template = read_text_file(dir / "agent_system.txt");
  set.direct_system_template = read_text_file(dir / "direct_system.txt");
  set.force_final = read_text_file(dir / "force_final.txt");

  require_placeholder(set.agent_system_template, "COMMANDS", "agent_system.txt");
  require_placeholder(set.agent_system_template, "TASK", "agent_system.txt");
  require_placeholder(set.direct_system_template, "COMMANDS", "direct_system.txt");
  require_placeholder(set.direct_system_template, "TASK", "direct_system.txt");
  require_placeholder(set.direct_system_template, "DATABASES", "direct_system.txt");
  if (set.force_final.empty()) {
    throw PromptError("force_final.txt is empty");
  }
  return set;
}

PromptSet load_default_prompt_set() {
  return load_prompt_set(DLA_DEFAULT_PROMPT_DIR);
}

std::string serialize_catalog_metadata(const Catalog& catalog) {
  std::ostringstream out;
  out << render_db_descriptions(catalog.get_db_descriptions());
  for (const auto& db : catalog.get_db_descriptions()) {
    out << "\n" << render_tables(db.id, catalog.get_tables(db.id));
    for (const auto& t : catalog.get_tables(db.id)) {
      out << render_columns(db.id, t.name, catalog.get_columns(db.id, t.name));
    }
  }
  return out.str();
}

std::string make_agent_system_prompt(const PromptSet& prompts,
                                     const std::string& question) {
  std::string text = substitute(prompts.agent_system_template, "COMMANDS",
                                command_grammar_doc(/*include_acquisition=*/true));
  return substitute(std::move(text), "TASK", question);
}

std::string make_direct_system_prompt(const PromptSet& prompts,
                                      const Catalog& catalog,
                                      const std::string& question) {
  std::string text = substitute(prompts.direct_system_template, "COMMANDS",
                                command_grammar_doc(/*include_acquisition=*/false));
  text = substitute(std::move(text), "DATABASES", serialize_catalog_metadata(catalog));
  return substitute(std::move(text), "TASK", question);
}

std::string termination_name(Termination t) {
  switch (t) {
    case Termination::answered:
      return "answered";
    case Termination::forced_answered:
      return "forced_answered";
    case Termination::forced_no_sql:
      return "forced_no_sql";
    case Termination::max_turns:
      return "max_turns";
    case Termination::protocol_failure:
      return "protocol_failure";
  }
  return "protocol_failure";
}

std::optional<Termination> termination_from_name(const std::string& name) {
  for (Termination t :
       {Termination::answered, Termination::forced_answered,
        Termination::forced_no_sql, Termination::max_turns,
        Termination::protocol_failure}) {
    if (termination_name(t) == name) return t;
  }
  return std::nullopt;
}

namespace {

void accumulate(TokenUsage& total, const TokenUsage& step) {
  total.input += step.input;
  total.output += step.output;
  // A single estimated call taints the sum; totals never silently mix a
  // measured figure with a guessed one.
  if (step.source == UsageSource::estimated) {
    total.source = UsageSource::estimated;
  }
}

}  // namespace

SolverOutcome solve_agent(const Catalog& catalog, const std::string& question,
                          ChatClient& client, const PromptSet& prompts,
                          const SolverLimits& limits) {
  SolverOutcome out;
  out.usage.source = UsageSource::api_reported;
  out.transcript.push_back(
      {Role::system, make_agent_system_prompt(prompts, question)});

  std::vector<CommandFingerprint> seen;
  bool forced = false;

  while (true) {
    if (out.turns >= limits.max_turns) {
      out.termination = Termination::max_turns;
      return out;
    }

    ChatReply reply;
    try {
      reply = client.chat(out.transcript);
    } catch (const LlmError& e) {
      out.transcript.push_back({Role::user, std::string("Error: ") + e.what()});
      out.termination = Termination::protocol_failure;
      return out;
    }
    ++out.turns;
    accumulate(out.usage, reply.usage);
    out.transcript.push_back({Role::assistant, reply.content});

    ParseResult parsed = parse_model_reply(reply.content);
    if (const auto* err = std::get_if<ProtocolError>(&parsed)) {
      if (forced) {
        out.termination = Termination::forced_no_sql;
        return out;
      }
      out.transcript.push_back({Role::user, "Error: " + err->detail});
      continue;
    }

    const AgentCommand& cmd = std::get<AgentCommand>(parsed);
    if (const auto* fin = std::get_if<DbQueryFinalSql>(&cmd)) {
      out.final_sql = fin->sql;
      out.target_db = catalog.resolve_db_id(fin->database);
      out.termination =
          forced ? Termination::forced_answered : Termination::answered;
      return out;
    }
    if (forced) {
      // The cutoff turn allowed exactly one more reply and it was not final.
      out.termination = Termination::forced_no_sql;
      return out;
    }

    std::string response = dispatch_command(catalog, cmd);

    std::optional<CommandFingerprint> fp = fingerprint(cmd);
    if (fp) {
      if (std::find(seen.begin(), seen.end(), *fp) != seen.end()) {
        ++out.repeat_count;
      } else {
        seen.push_back(*fp);
      }
    }

    if (out.repeat_count >= limits.repeat_threshold) {
      forced = true;
      out.forced_at_turn = out.turns;
      out.transcript.push_back(
          {Role::user, response + "\n\n" + prompts.force_final});
    } else {
      out.transcript.push_back({Role::user, response});
    }
  }
}

SolverOutcome solve_direct(const Catalog& catalog, const std::string& question,
                           ChatClient& client, const PromptSet& prompts,
                           const SolverLimits&) {
  SolverOutcome out;
  out.usage.source = UsageSource::api_reported;
  out.transcript.push_back(
      {Role::system, make_direct_system_prompt(prompts, catalog, question)});

  ChatReply reply;
  try {
    reply = client.chat(out.transcript);
  } catch (const LlmError& e) {
    out.transcript.push_back({Role::user, std::string("Error: ") + e.what()});
    out.termination = Termination::protocol_failure;
    return out;
  }
  out.turns = 1;
  accumulate(out.usage, reply.usage);
  out.transcript.push_back({Role::assistant, reply.content});

  ParseResult parsed = parse_model_reply(reply.content);
  if (const auto* cmd = std::get_if<AgentCommand>(&parsed)) {
    if (const auto* fin = std::get_if<DbQueryFinalSql>(cmd)) {
      out.final_sql = fin->sql;
      out.target_db = catalog.resolve_db_id(fin->database);
      out.termination = Termination::answered;
      return out;
    }
  }
  // Anything but a final query is unrecoverable here: there is no second call.
  out.termination = Termination::protocol_failure;
  return out;
}

}  // namespace dla
