#include "dla/protocol.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace dla {

namespace {

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool istarts_with(std::string_view line, std::string_view prefix) {
  if (line.size() < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(line[i])) !=
        std::tolower(static_cast<unsigned char>(prefix[i]))) {
      return false;
    }
  }
  return true;
}

struct ActionSpec {
  std::string canonical;
  std::vector<std::string> required_args;
};

const std::vector<ActionSpec>& action_specs() {
  static const std::vector<ActionSpec> specs = {
      {"GetDBDescription", {}},
      {"GetTables", {"database"}},
      {"GetColumns", {"database", "table"}},
      {"DBQueryFinalSQL", {"database", "sql"}},
  };
  return specs;
}

const ActionSpec* find_action(const std::string& name) {
  std::string lowered = to_lower(name);
  for (const auto& spec : action_specs()) {
    if (to_lower(spec.canonical) == lowered) return &spec;
  }
  return nullptr;
}

AgentCommand build_command(const ActionSpec& spec,
                           const std::map<std::string, std::string>& args) {
  if (spec.canonical == "GetDBDescription") return GetDbDescription{};
  if (spec.canonical == "GetTables") return GetTables{args.at("database")};
  if (spec.canonical == "GetColumns") {
    return GetColumns{args.at("database"), args.at("table")};
  }
  return DbQueryFinalSql{args.at("database"), args.at("sql")};
}

}  // namespace

ParseResult parse_model_reply(const std::string& reply) {
  std::istringstream in(reply);
  std::string line;

  bool seen_action = false;
  const ActionSpec* spec = nullptr;
  std::string unknown_name;
  std::map<std::string, std::string> args;
  std::optional<ProtocolError> arg_error;

  while (std::getline(in, line)) {
    std::string stripped = trim(line);
    // Code fences around or inside the block are tolerated.
    if (stripped.rfind("```", 0) == 0) continue;
    if (stripped.empty()) continue;

    if (istarts_with(stripped, "ACTION:")) {
      if (seen_action) {
        return ProtocolError{
            ProtocolErrorKind::multiple_commands,
            "the reply contains more than one ACTION line; send exactly one "
            "command per reply"};
      }
      seen_action = true;
      std::string name = trim(stripped.substr(7));
      if (name.empty()) {
        return ProtocolError{ProtocolErrorKind::unknown_action,
                             "the ACTION line names no command"};
      }
      spec = find_action(name);
      if (!spec) unknown_name = name;
      continue;
    }

    if (istarts_with(stripped, "ARG:") && seen_action) {
      std::string rest = trim(stripped.substr(4));
      std::size_t eq = rest.find('=');
      if (eq == std::string::npos) {
        if (!arg_error) {
          arg_error = ProtocolError{
              ProtocolErrorKind::malformed_arguments,
              "ARG line '" + stripped + "' is missing '='; write ARG: key=value"};
        }
        continue;
      }
      std::string key = to_lower(trim(rest.substr(0, eq)));
      std::string value = trim(rest.substr(eq + 1));
      if (key.empty()) {
        if (!arg_error) {
          arg_error = ProtocolError{ProtocolErrorKind::malformed_arguments,
                                    "ARG line has an empty key"};
        }
        continue;
      }
      if (args.count(key)) {
        if (!arg_error) {
          arg_error = ProtocolError{
              ProtocolErrorKind::malformed_arguments,
              "argument '" + key + "' appears more than once"};
        }
        continue;
      }
      args.emplace(std::move(key), std::move(value));
      continue;
    }
    // Anything else is reasoning prose; ignored.
  }

  if (!seen_action) {
    return ProtocolError{
        ProtocolErrorKind::no_command,
        "no command found; reply with an ACTION: line followed by its ARG: "
        "lines"};
  }
  if (!spec) {
    std::string valid;
    for (const auto& s : action_specs()) {
      if (!valid.empty()) valid += ", ";
      valid += s.canonical;
    }
    return ProtocolError{ProtocolErrorKind::unknown_action,
                         "unknown action '" + unknown_name +
                             "'; valid actions are: " + valid};
  }
  if (arg_error) return *arg_error;

  for (const auto& req : spec->required_args) {
    auto it = args.find(req);
    if (it == args.end()) {
      return ProtocolError{ProtocolErrorKind::malformed_arguments,
                           spec->canonical + " requires argument '" + req + "'"};
    }
    if (it->second.empty()) {
      return ProtocolError{ProtocolErrorKind::malformed_arguments,
                           "argument '" + req + "' must not be empty"};
    }
  }
  for (const auto& [key, value] : args) {
    if (std::find(spec->required_args.begin(), spec->required_args.end(), key) ==
        spec->required_args.end()) {
      return ProtocolError{ProtocolErrorKind::malformed_arguments,
                           spec->canonical + " does not take argument '" + key + "'"};
    }
  }
  return build_command(*spec, args);
}

namespace {

std::string one_line(std::string s) {
  for (char& c : s) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

}  // namespace

std::string render_command(const AgentCommand& cmd) {
  struct Renderer {
    std::string operator()(const GetDbDescription&) const {
      return "ACTION: GetDBDescription\n";
    }
    std::string operator()(const GetTables& c) const {
      return "ACTION: GetTables\nARG: database=" + one_line(c.database) + "\n";
    }
    std::string operator()(const GetColumns& c) const {
      return "ACTION: GetColumns\nARG: database=" + one_line(c.database) +
             "\nARG: table=" + one_line(c.table) + "\n";
    }
    std::string operator()(const DbQueryFinalSql& c) const {
      return "ACTION: DBQueryFinalSQL\nARG: database=" + one_line(c.database) +
             "\nARG: sql=" + one_line(c.sql) + "\n";
    }
  };
  return std::visit(Renderer{}, cmd);
}

std::optional<CommandFingerprint> fingerprint(const AgentCommand& cmd) {
  struct Fp {
    std::optional<CommandFingerprint> operator()(const GetDbDescription&) const {
      return "(GetDBDescription)";
    }
    std::optional<CommandFingerprint> operator()(const GetTables& c) const {
      return "(GetTables|database=" + to_lower(trim(c.database)) + ")";
    }
    std::optional<CommandFingerprint> operator()(const GetColumns& c) const {
      return "(GetColumns|database=" + to_lower(trim(c.database)) +
             "|table=" + to_lower(trim(c.table)) + ")";
    }
    std::optional<CommandFingerprint> operator()(const DbQueryFinalSql&) const {
      return std::nullopt;
    }
  };
  return std::visit(Fp{}, cmd);
}

std::string action_name(const AgentCommand& cmd) {
  struct Name {
    std::string operator()(const GetDbDescription&) const { return "GetDBDescription"; }
    std::string operator()(const GetTables&) const { return "GetTables"; }
    std::string operator()(const GetColumns&) const { return "GetColumns"; }
    std::string operator()(const DbQueryFinalSql&) const { return "DBQueryFinalSQL"; }
  };
  return std::visit(Name{}, cmd);
}

std::string render_db_descriptions(const std::vector<DbDescription>& dbs) {
  std::ostringstream out;
  out << "Databases (" << dbs.size() << "):\n";
  for (const auto& db : dbs) {
    out << db.id << " - " << db.description << "\n";
  }
  return out.str();
}

std::string render_tables(const std::string& db_id,
                          const std::vector<TableInfo>& tables) {
  std::ostringstream out;
  out << "Tables of " << db_id << " (" << tables.size() << "):\n";
  for (const auto& t : tables) {
    out << t.name;
    if (t.row_count) out << " (" << *t.row_count << " rows)";
    out << "\n";
  }
  return out.str();
}

std::string render_columns(const std::string& db_id, const std::string& table,
                           const std::vector<ColumnInfo>& columns) {
  std::ostringstream out;
  out << "Columns of " << db_id << "." << table << ":\n";
  for (const auto& c : columns) {
    out << c.name << ": " << c.type;
    if (c.primary_key) out << " [PK]";
    if (c.foreign_key) {
      out << " [FK -> " << c.foreign_key->table << "." << c.foreign_key->column
          << "]";
    }
    out << "\n";
  }
  return out.str();
}

std::string render_query_result(const QueryResult& result) {
  std::ostringstream out;
  out << "Result (" << result.rows.size() << " rows):\n";
  for (const auto& row : result.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << " | ";
      out << canonical_scalar(row[i]);
    }
    out << "\n";
  }
  return out.str();
}

std::string command_grammar_doc(bool include_acquisition) {
  std::ostringstream out;
  out << "Commands are written as a block of lines: one ACTION line naming the\n"
         "command, then one ARG line per argument in the form ARG: key=value.\n"
         "Each argument value must fit on a single line. Send exactly one\n"
         "command per reply. You may explain your reasoning in prose before or\n"
         "after the block; only the block is executed.\n\n";
  if (include_acquisition) {
    out << "Available commands:\n\n"
           "ACTION: GetDBDescription\n"
           "  Lists every database with a one-line description. Takes no\n"
           "  arguments. Start here.\n\n"
           "ACTION: GetTables\n"
           "ARG: database=<id>\n"
           "  Lists the tables of one database, with row counts when the\n"
           "  database has data attached.\n\n"
           "ACTION: GetColumns\n"
           "ARG: database=<id>\n"
           "ARG: table=<name>\n"
           "  Lists the columns of one table: name, type, primary key and\n"
           "  foreign key markers.\n\n"
           "ACTION: DBQueryFinalSQL\n"
           "ARG: database=<id>\n"
           "ARG: sql=<one SELECT statement on a single line>\n"
           "  Submits your final answer. The query runs against the named\n"
           "  database and the conversation ends. Use it exactly once, when\n"
           "  you are confident in the query.\n\n"
           "A typical conversation: GetDBDescription, then GetTables on the\n"
           "one database whose description fits the question, then GetColumns\n"
           "for each table the query will touch (usually one to four), then\n"
           "DBQueryFinalSQL. Every listing stays visible above; never repeat\n"
           "a request you have already made, and do not explore databases the\n"
           "question clearly is not about.\n";
  } else {
    out << "Available commands:\n\n"
           "ACTION: DBQueryFinalSQL\n"
           "ARG: database=<id>\n"
           "ARG: sql=<one SELECT statement on a single line>\n"
           "  Submits your final answer. The query runs against the named\n"
           "  database and the conversation ends. This is the only command.\n\n"
           "All schema metadata is already included below; reply with the\n"
           "single final command immediately, in your first message.\n";
  }
  return out.str();
}

}  // namespace dla
