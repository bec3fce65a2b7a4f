#pragma once

// Test-only helpers shared by the unit suites and the acceptance checks:
// the lazily generated fixture workspace and random-input generators.

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "dla/fixtures.hpp"
#include "dla/protocol.hpp"

namespace test_support {

// Fixture tree under the working directory, generated once per process and
// rebuilt from scratch so it always matches the current code. The tag of the
// first call names the directory; later calls reuse it.
inline const std::filesystem::path& fixtures_dir(const char* tag = "unit") {
  static const std::filesystem::path dir = [tag] {
    std::filesystem::path d =
        std::filesystem::current_path() / (std::string("dla_fixtures_") + tag);
    std::filesystem::remove_all(d);
    dla::generate_fixtures(d, {});
    return d;
  }();
  return dir;
}

// Single-line value with no surrounding whitespace: the exact shape that is
// expected to survive a render/parse round trip.
inline std::string random_value(std::mt19937_64& rng) {
  static const std::string inner =
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789"
      "_.,;()*<>='\" -+/%";
  static const std::string edge =
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_";
  std::size_t len = 1 + rng() % 40;
  std::string s;
  s.push_back(edge[rng() % edge.size()]);
  while (s.size() + 1 < len) s.push_back(inner[rng() % inner.size()]);
  if (len > 1) s.push_back(edge[rng() % edge.size()]);
  return s;
}

inline std::string random_sql(std::mt19937_64& rng) {
  return "SELECT " + random_value(rng) + " FROM " + random_value(rng) +
         " WHERE " + random_value(rng) + " = '" + random_value(rng) + "'";
}

inline dla::AgentCommand random_command(std::mt19937_64& rng) {
  switch (rng() % 4) {
    case 0:
      return dla::GetDbDescription{};
    case 1:
      return dla::GetTables{random_value(rng)};
    case 2:
      return dla::GetColumns{random_value(rng), random_value(rng)};
    default:
      return dla::DbQueryFinalSql{random_value(rng), random_sql(rng)};
  }
}

inline bool command_equal(const dla::AgentCommand& a, const dla::AgentCommand& b) {
  if (a.index() != b.index()) return false;
  if (std::holds_alternative<dla::GetDbDescription>(a)) return true;
  if (const auto* t = std::get_if<dla::GetTables>(&a)) {
    return t->database == std::get<dla::GetTables>(b).database;
  }
  if (const auto* c = std::get_if<dla::GetColumns>(&a)) {
    const auto& o = std::get<dla::GetColumns>(b);
    return c->database == o.database && c->table == o.table;
  }
  const auto& f = std::get<dla::DbQueryFinalSql>(a);
  const auto& o = std::get<dla::DbQueryFinalSql>(b);
  return f.database == o.database && f.sql == o.sql;
}

}  // namespace test_support
