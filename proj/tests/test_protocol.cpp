#include <doctest.h>

#include <random>
#include <string>
#include <variant>

#include "dla/protocol.hpp"
#include "support.hpp"

using namespace dla;

namespace {

const ProtocolError& expect_error(const ParseResult& r) {
  REQUIRE(std::holds_alternative<ProtocolError>(r));
  return std::get<ProtocolError>(r);
}

const AgentCommand& expect_command(const ParseResult& r) {
  if (const auto* err = std::get_if<ProtocolError>(&r)) {
    FAIL("unexpected protocol error: " << err->detail);
  }
  return std::get<AgentCommand>(r);
}

}  // namespace

TEST_CASE("parse accepts each command form") {
  auto r1 = parse_model_reply("ACTION: GetDBDescription\n");
  CHECK(std::holds_alternative<GetDbDescription>(expect_command(r1)));

  auto r2 = parse_model_reply("ACTION: GetTables\nARG: database=f1\n");
  CHECK(std::get<GetTables>(expect_command(r2)).database == "f1");

  auto r3 = parse_model_reply(
      "ACTION: GetColumns\nARG: database=f1\nARG: table=races\n");
  const auto& c3 = std::get<GetColumns>(expect_command(r3));
  CHECK(c3.database == "f1");
  CHECK(c3.table == "races");

  auto r4 = parse_model_reply(
      "ACTION: DBQueryFinalSQL\nARG: database=f1\n"
      "ARG: sql=SELECT COUNT(*) FROM races WHERE year = 2015\n");
  const auto& c4 = std::get<DbQueryFinalSql>(expect_command(r4));
  CHECK(c4.database == "f1");
  CHECK(c4.sql == "SELECT COUNT(*) FROM races WHERE year = 2015");
}

TEST_CASE("parse tolerates prose, fences, case, and argument order") {
  auto r = parse_model_reply(
      "I will start by listing the tables.\n\n"
      "```\n"
      "action: gettables\n"
      "arg: DATABASE=f1\n"
      "```\n"
      "That should show what is available.\n");
  CHECK(std::get<GetTables>(expect_command(r)).database == "f1");

  auto r2 = parse_model_reply(
      "ACTION: GetColumns\nARG: table=races\nARG: database=f1\n");
  const auto& c = std::get<GetColumns>(expect_command(r2));
  CHECK(c.database == "f1");
  CHECK(c.table == "races");
}

TEST_CASE("sql values keep '=' and spaces intact") {
  auto r = parse_model_reply(
      "ACTION: DBQueryFinalSQL\nARG: database=stack\n"
      "ARG: sql=SELECT display_name FROM users WHERE reputation = 10000\n");
  CHECK(std::get<DbQueryFinalSql>(expect_command(r)).sql ==
        "SELECT display_name FROM users WHERE reputation = 10000");
}

TEST_CASE("malformed replies map to one specific error each") {
  CHECK(expect_error(parse_model_reply("")).kind == ProtocolErrorKind::no_command);
  CHECK(expect_error(parse_model_reply("just some prose, no block")).kind ==
        ProtocolErrorKind::no_command);
  CHECK(expect_error(parse_model_reply("ACTION: FetchEverything\n")).kind ==
        ProtocolErrorKind::unknown_action);
  CHECK(expect_error(parse_model_reply("ACTION: GetTables\nARG: database=a\n"
                                       "ACTION: GetTables\nARG: database=b\n"))
            .kind == ProtocolErrorKind::multiple_commands);
  CHECK(expect_error(parse_model_reply("ACTION: GetTables\n")).kind ==
        ProtocolErrorKind::malformed_arguments);
  CHECK(expect_error(parse_model_reply("ACTION: GetTables\nARG: database=\n"))
            .kind == ProtocolErrorKind::malformed_arguments);
  CHECK(expect_error(parse_model_reply("ACTION: GetTables\nARG: database\n"))
            .kind == ProtocolErrorKind::malformed_arguments);
  CHECK(expect_error(parse_model_reply(
            "ACTION: GetTables\nARG: database=f1\nARG: database=f1\n"))
            .kind == ProtocolErrorKind::malformed_arguments);
  CHECK(expect_error(parse_model_reply(
            "ACTION: GetTables\nARG: database=f1\nARG: bogus=1\n"))
            .kind == ProtocolErrorKind::malformed_arguments);
  CHECK(expect_error(parse_model_reply("ACTION: GetDBDescription\nARG: x=1\n"))
            .kind == ProtocolErrorKind::malformed_arguments);
}

TEST_CASE("unknown-action errors name the valid actions") {
  ParseResult r = parse_model_reply("ACTION: ShowSchema\n");
  const auto& err = expect_error(r);
  CHECK(err.detail.find("GetDBDescription") != std::string::npos);
  CHECK(err.detail.find("DBQueryFinalSQL") != std::string::npos);
}

TEST_CASE("render and parse round-trip randomly generated commands") {
  std::mt19937_64 rng(20240817);
  for (int i = 0; i < 300; ++i) {
    AgentCommand cmd = test_support::random_command(rng);
    ParseResult back = parse_model_reply(render_command(cmd));
    CHECK(test_support::command_equal(cmd, expect_command(back)));
  }
}

TEST_CASE("fingerprints identify acquisition commands, never the final one") {
  auto fp1 = fingerprint(GetTables{"f1"});
  auto fp2 = fingerprint(GetTables{"F1 "});
  auto fp3 = fingerprint(GetTables{"avito"});
  REQUIRE(fp1.has_value());
  CHECK(*fp1 == *fp2);  // repeats are matched case- and space-insensitively
  CHECK(*fp1 != *fp3);
  CHECK(fingerprint(GetDbDescription{}).has_value());
  CHECK(*fingerprint(GetColumns{"f1", "races"}) !=
        *fingerprint(GetColumns{"f1", "results"}));
  CHECK(!fingerprint(DbQueryFinalSql{"f1", "SELECT 1"}).has_value());
}

TEST_CASE("renderers produce the documented listing shapes") {
  std::string dbs = render_db_descriptions(
      {{"f1", DbKind::materialized, "Motor racing data", "sports"}});
  CHECK(dbs == "Databases (1):\nf1 - Motor racing data\n");

  std::string tables = render_tables(
      "f1", {{"races", 362}, {"seasons", std::nullopt}});
  CHECK(tables == "Tables of f1 (2):\nraces (362 rows)\nseasons\n");

  ColumnInfo pk{"race_id", "INTEGER", true, std::nullopt};
  ColumnInfo fk{"circuit_id", "INTEGER", false,
                ForeignKeyRef{"circuits", "circuit_id"}};
  std::string cols = render_columns("f1", "races", {pk, fk});
  CHECK(cols ==
        "Columns of f1.races:\n"
        "race_id: INTEGER [PK]\n"
        "circuit_id: INTEGER [FK -> circuits.circuit_id]\n");

  QueryResult result;
  result.columns = {"name", "n"};
  result.rows = {{std::string("Monza"), std::int64_t{12}},
                 {std::monostate{}, 2.5}};
  CHECK(render_query_result(result) ==
        "Result (2 rows):\nMonza | 12\nNULL | 2.5\n");
}

TEST_CASE("grammar doc variants expose the right command set") {
  std::string full = command_grammar_doc(true);
  for (const char* name :
       {"GetDBDescription", "GetTables", "GetColumns", "DBQueryFinalSQL"}) {
    CHECK(full.find(name) != std::string::npos);
  }
  std::string final_only = command_grammar_doc(false);
  CHECK(final_only.find("DBQueryFinalSQL") != std::string::npos);
  CHECK(final_only.find("GetTables") == std::string::npos);
  CHECK(final_only.find("GetColumns") == std::string::npos);
}
