#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dla/catalog.hpp"

namespace dla {

// The four commands a model reply may carry. DBQueryFinalSQL is terminal:
// issuing it ends the conversation.
struct GetDbDescription {};
struct GetTables {
  std::string database;
};
struct GetColumns {
  std::string database;
  std::string table;
};
struct DbQueryFinalSql {
  std::string database;
  std::string sql;
};

using AgentCommand =
    std::variant<GetDbDescription, GetTables, GetColumns, DbQueryFinalSql>;

enum class ProtocolErrorKind {
  no_command,
  multiple_commands,
  unknown_action,
  malformed_arguments,
};

/// A reply that fails to parse. `detail` is written for the model: it names
/// what was wrong and is sent back verbatim as the next user turn.
struct ProtocolError {
  ProtocolErrorKind kind;
  std::string detail;
};

using ParseResult = std::variant<AgentCommand, ProtocolError>;

/// Extracts the single command block from a model reply. Free-form prose
/// around the block is permitted and ignored; code fences are stripped.
ParseResult parse_model_reply(const std::string& reply);

/// Canonical text form of a command, exactly as a well-behaved model would
/// write it. parse_model_reply(render_command(c)) round-trips.
std::string render_command(const AgentCommand& cmd);

/// Identity of a command for repeat detection. DBQueryFinalSQL never repeats
/// (it is terminal), so it has no fingerprint.
using CommandFingerprint = std::string;
std::optional<CommandFingerprint> fingerprint(const AgentCommand& cmd);

std::string action_name(const AgentCommand& cmd);

/// Text the model sees in response to each metadata command.
std::string render_db_descriptions(const std::vector<DbDescription>& dbs);
std::string render_tables(const std::string& db_id,
                          const std::vector<TableInfo>& tables);
std::string render_columns(const std::string& db_id, const std::string& table,
                           const std::vector<ColumnInfo>& columns);
std::string render_query_result(const QueryResult& result);

/// Grammar reference embedded in system prompts. With acquisition commands
/// for the agent; final-query-only for the direct baseline.
std::string command_grammar_doc(bool include_acquisition);

}  // namespace dla
