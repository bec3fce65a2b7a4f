#include "fixture_schemas.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstring>
#include <map>
#include <random>

#include "dla/fixtures.hpp"

namespace dla::fixture_detail {

namespace {

using Row = std::vector<Value>;
using Rows = std::vector<Row>;

Value iv(std::int64_t v) { return Value(v); }
Value dv(double v) { return Value(v); }
Value sv(std::string v) { return Value(std::move(v)); }
Value nv() { return Value(std::monostate{}); }

std::mt19937_64 table_rng(std::uint64_t seed, const char* db, const char* table) {
  return std::mt19937_64(seed * 0x9E3779B97F4A7C15ULL ^
                         fnv1a(std::string(db) + "/" + table));
}

int pick(std::mt19937_64& rng, int n) { return static_cast<int>(rng() % n); }

std::string ymd(int y, int m, int d) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", y, m, d);
  return buf;
}

void require(bool cond, const std::string& what) {
  if (!cond) {
    throw FixtureError("fixture invariant violated: " + what);
  }
}

/// Asserts that the grouped count query (which must return key, count ordered
/// by count descending) has a strict, unique winner equal to `want`.
void require_argmax(SqliteDb& db, const std::string& sql, const Value& want,
                    const std::string& what) {
  QueryResult r = db.query(sql);
  require(r.rows.size() >= 2, what + ": fewer than two groups");
  require(canonical_scalar(r.rows[0][0]) == canonical_scalar(want),
          what + ": winner is " + canonical_scalar(r.rows[0][0]));
  require(std::get<std::int64_t>(r.rows[0][1]) >
              std::get<std::int64_t>(r.rows[1][1]),
          what + ": winner is not unique");
}

// ---------------------------------------------------------------------------
// f1: motor racing. 9 tables, seasons 2000-2023 with 12 + (year % 7) rounds,
// so 362 races in total and 18 in 2015.

void build_f1(SqliteDb& db, std::uint64_t seed) {
  db.exec(R"sql(
CREATE TABLE circuits (
  circuit_id INTEGER PRIMARY KEY,
  circuit_name TEXT NOT NULL,
  circuit_city TEXT NOT NULL,
  circuit_country TEXT NOT NULL
);
CREATE TABLE constructors (
  constructor_id INTEGER PRIMARY KEY,
  constructor_name TEXT NOT NULL,
  constructor_nationality TEXT NOT NULL
);
CREATE TABLE drivers (
  driver_id INTEGER PRIMARY KEY,
  driver_code TEXT NOT NULL,
  first_name TEXT NOT NULL,
  last_name TEXT NOT NULL,
  birth_date TEXT NOT NULL,
  driver_nationality TEXT NOT NULL
);
CREATE TABLE races (
  race_id INTEGER PRIMARY KEY,
  season_year INTEGER NOT NULL,
  round_number INTEGER NOT NULL,
  circuit_id INTEGER NOT NULL REFERENCES circuits(circuit_id),
  race_name TEXT NOT NULL,
  race_date TEXT NOT NULL
);
CREATE TABLE results (
  result_id INTEGER PRIMARY KEY,
  race_id INTEGER NOT NULL REFERENCES races(race_id),
  driver_id INTEGER NOT NULL REFERENCES drivers(driver_id),
  constructor_id INTEGER NOT NULL REFERENCES constructors(constructor_id),
  grid_position INTEGER NOT NULL,
  finish_position INTEGER NOT NULL,
  points_scored INTEGER NOT NULL
);
CREATE TABLE standings (
  standing_id INTEGER PRIMARY KEY,
  race_id INTEGER NOT NULL REFERENCES races(race_id),
  driver_id INTEGER NOT NULL REFERENCES drivers(driver_id),
  season_points INTEGER NOT NULL,
  season_wins INTEGER NOT NULL,
  season_rank INTEGER NOT NULL
);
CREATE TABLE constructor_results (
  constructor_result_id INTEGER PRIMARY KEY,
  race_id INTEGER NOT NULL REFERENCES races(race_id),
  constructor_id INTEGER NOT NULL REFERENCES constructors(constructor_id),
  points_scored INTEGER NOT NULL
);
CREATE TABLE constructor_standings (
  constructor_standing_id INTEGER PRIMARY KEY,
  race_id INTEGER NOT NULL REFERENCES races(race_id),
  constructor_id INTEGER NOT NULL REFERENCES constructors(constructor_id),
  season_points INTEGER NOT NULL,
  season_wins INTEGER NOT NULL,
  season_rank INTEGER NOT NULL
);
CREATE TABLE qualifying (
  qualifying_id INTEGER PRIMARY KEY,
  race_id INTEGER NOT NULL REFERENCES races(race_id),
  driver_id INTEGER NOT NULL REFERENCES drivers(driver_id),
  constructor_id INTEGER NOT NULL REFERENCES constructors(constructor_id),
  qualifying_rank INTEGER NOT NULL,
  q1_time_ms INTEGER NOT NULL,
  q2_time_ms INTEGER,
  q3_time_ms INTEGER
);
)sql");

  struct Circuit { const char* name; const char* city; const char* country; };
  static const Circuit kCircuits[12] = {
      {"Monza", "Monza", "Italy"},
      {"Silverstone", "Towcester", "United Kingdom"},
      {"Spa-Francorchamps", "Stavelot", "Belgium"},
      {"Suzuka", "Suzuka", "Japan"},
      {"Interlagos", "Sao Paulo", "Brazil"},
      {"Monte Carlo", "Monaco", "Monaco"},
      {"Zandvoort", "Zandvoort", "Netherlands"},
      {"Hungaroring", "Mogyorod", "Hungary"},
      {"Catalunya", "Montmelo", "Spain"},
      {"Red Bull Ring", "Spielberg", "Austria"},
      {"Hockenheimring", "Hockenheim", "Germany"},
      {"Paul Ricard", "Le Castellet", "France"},
  };
  struct Constructor { const char* name; const char* nat; };
  static const Constructor kConstructors[10] = {
      {"Ferrari", "Italian"},   {"McLaren", "British"},
      {"Williams", "British"},  {"Mercedes", "German"},
      {"Red Bull", "Austrian"}, {"Renault", "French"},
      {"Sauber", "Swiss"},      {"Jordan", "Irish"},
      {"Toyota", "Japanese"},   {"Lotus", "British"},
  };
  struct Driver { const char* first; const char* last; const char* nat; };
  static const Driver kDrivers[24] = {
      {"James", "Hartley", "British"},    {"Oliver", "Renwick", "British"},
      {"Thomas", "Ashworth", "British"},  {"Daniel", "Pemberton", "British"},
      {"George", "Callis", "British"},    {"Stefan", "Vogel", "German"},
      {"Lukas", "Brandt", "German"},      {"Max", "Keller", "German"},
      {"Jonas", "Richter", "German"},     {"Rafael", "Moraes", "Brazilian"},
      {"Thiago", "Alves", "Brazilian"},   {"Bruno", "Castilho", "Brazilian"},
      {"Antoine", "Lefevre", "French"},   {"Julien", "Moreau", "French"},
      {"Pierre", "Chastain", "French"},   {"Marco", "Bellandi", "Italian"},
      {"Luca", "Ferretti", "Italian"},    {"Mika", "Salonen", "Finnish"},
      {"Aleksi", "Jarvinen", "Finnish"},  {"Carlos", "Urbina", "Spanish"},
      {"Javier", "Montoya", "Spanish"},   {"Nathan", "Cole", "Australian"},
      {"Hiroshi", "Tanaka", "Japanese"},  {"Marc", "Beaulieu", "Canadian"},
  };

  db.begin_transaction();

  Rows rows;
  for (int i = 0; i < 12; ++i) {
    rows.push_back({iv(i + 1), sv(kCircuits[i].name), sv(kCircuits[i].city),
                    sv(kCircuits[i].country)});
  }
  db.insert_rows("INSERT INTO circuits VALUES (?,?,?,?)", rows);

  rows.clear();
  for (int i = 0; i < 10; ++i) {
    rows.push_back(
        {iv(i + 1), sv(kConstructors[i].name), sv(kConstructors[i].nat)});
  }
  db.insert_rows("INSERT INTO constructors VALUES (?,?,?)", rows);

  rows.clear();
  for (int i = 0; i < 24; ++i) {
    std::string code(kDrivers[i].last, 3);
    for (char& c : code) c = static_cast<char>(std::toupper(c));
    rows.push_back({iv(i + 1), sv(code), sv(kDrivers[i].first),
                    sv(kDrivers[i].last),
                    sv(ymd(1970 + i % 22, 1 + (i * 5) % 12, 1 + (i * 9) % 28)),
                    sv(kDrivers[i].nat)});
  }
  db.insert_rows("INSERT INTO drivers VALUES (?,?,?,?,?,?)", rows);

  struct Race { int id, year, round, circuit; };
  std::vector<Race> races;
  std::map<int, int> last_race_of_season;
  int next_race = 1;
  for (int y = 2000; y <= 2023; ++y) {
    int rounds = 12 + y % 7;
    for (int r = 1; r <= rounds; ++r) {
      // Round 1 always opens at circuit 1 so one venue clearly hosts the most.
      int c = r == 1 ? 1 : 1 + (r + y) % 12;
      races.push_back({next_race, y, r, c});
      last_race_of_season[y] = next_race;
      ++next_race;
    }
  }
  rows.clear();
  for (const Race& rc : races) {
    int rounds = 12 + rc.year % 7;
    int month = 3 + ((rc.round - 1) * 9) / rounds;
    int day = 1 + (rc.round * 7 + rc.year) % 27;
    rows.push_back({iv(rc.id), iv(rc.year), iv(rc.round), iv(rc.circuit),
                    sv(std::string(kCircuits[rc.circuit - 1].name) + " Grand Prix"),
                    sv(ymd(rc.year, month, day))});
  }
  db.insert_rows("INSERT INTO races VALUES (?,?,?,?,?,?)", rows);

  // Results: ten scorers per race. Driver 1 wins every third round and a
  // random slice of the rest, which keeps every season's champion unambiguous.
  auto rng = table_rng(seed, "f1", "results");
  static const int kPoints[10] = {25, 18, 15, 12, 10, 8, 6, 4, 2, 1};
  static const int kStrides[5] = {1, 5, 7, 11, 13};
  std::map<int, std::map<int, int>> season_pts, season_wins;     // year -> driver
  std::map<int, std::map<int, int>> season_cpts, season_cwins;   // year -> constructor
  Rows result_rows, cresult_rows;
  int next_result = 1, next_cresult = 1;
  for (const Race& rc : races) {
    int start = pick(rng, 24);
    int stride = kStrides[pick(rng, 5)];
    bool forced = rc.round % 3 == 1 || pick(rng, 10) < 3;
    int ids[10];
    for (int k = 0; k < 10; ++k) ids[k] = 1 + (start + k * stride) % 24;
    if (forced) {
      int at = -1;
      for (int k = 0; k < 10; ++k) {
        if (ids[k] == 1) at = k;
      }
      if (at >= 0) {
        std::swap(ids[0], ids[at]);
      } else {
        ids[0] = 1;
      }
    }
    int rot = pick(rng, 10);
    std::map<int, int> race_cpts;
    for (int k = 0; k < 10; ++k) {
      int driver = ids[k];
      int cons = 1 + (driver - 1) % 10;
      result_rows.push_back({iv(next_result++), iv(rc.id), iv(driver), iv(cons),
                             iv(1 + (k + rot) % 10), iv(k + 1), iv(kPoints[k])});
      season_pts[rc.year][driver] += kPoints[k];
      season_cpts[rc.year][cons] += kPoints[k];
      race_cpts[cons] += kPoints[k];
      if (k == 0) {
        season_wins[rc.year][driver] += 1;
        season_cwins[rc.year][cons] += 1;
      }
    }
    for (int cons = 1; cons <= 10; ++cons) {
      cresult_rows.push_back(
          {iv(next_cresult++), iv(rc.id), iv(cons), iv(race_cpts[cons])});
    }
  }
  db.insert_rows("INSERT INTO results VALUES (?,?,?,?,?,?,?)", result_rows);
  db.insert_rows("INSERT INTO constructor_results VALUES (?,?,?,?)",
                 cresult_rows);

  rows.clear();
  int next_standing = 1;
  for (int y = 2000; y <= 2023; ++y) {
    std::vector<std::pair<int, int>> order;  // (points, driver)
    for (int d = 1; d <= 24; ++d) order.push_back({season_pts[y][d], d});
    std::sort(order.begin(), order.end(), [](auto& a, auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    require(order[0].second == 1 && order[0].first > order[1].first,
            "season " + std::to_string(y) + " champion");
    for (std::size_t k = 0; k < order.size(); ++k) {
      int d = order[k].second;
      rows.push_back({iv(next_standing++), iv(last_race_of_season[y]), iv(d),
                      iv(order[k].first), iv(season_wins[y][d]),
                      iv(static_cast<int>(k) + 1)});
    }
  }
  db.insert_rows("INSERT INTO standings VALUES (?,?,?,?,?,?)", rows);

  rows.clear();
  int next_cstanding = 1;
  for (int y = 2000; y <= 2023; ++y) {
    std::vector<std::pair<int, int>> order;
    for (int c = 1; c <= 10; ++c) order.push_back({season_cpts[y][c], c});
    std::sort(order.begin(), order.end(), [](auto& a, auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    for (std::size_t k = 0; k < order.size(); ++k) {
      int c = order[k].second;
      rows.push_back({iv(next_cstanding++), iv(last_race_of_season[y]), iv(c),
                      iv(order[k].first), iv(season_cwins[y][c]),
                      iv(static_cast<int>(k) + 1)});
    }
  }
  db.insert_rows("INSERT INTO constructor_standings VALUES (?,?,?,?,?,?)", rows);

  // Qualifying: all 24 drivers take part; driver 1 gets a quarter of poles.
  auto qrng = table_rng(seed, "f1", "qualifying");
  rows.clear();
  int next_qual = 1;
  for (const Race& rc : races) {
    int rot = pick(qrng, 24);
    bool forced = pick(qrng, 4) == 0;
    int order[24];
    for (int k = 0; k < 24; ++k) order[k] = 1 + (k + rot) % 24;
    if (forced) {
      for (int k = 0; k < 24; ++k) {
        if (order[k] == 1) {
          std::swap(order[0], order[k]);
          break;
        }
      }
    }
    for (int k = 0; k < 24; ++k) {
      int driver = order[k];
      int rank = k + 1;
      std::int64_t q1 = 78000 + pick(qrng, 12000);
      Value q2 = rank <= 15 ? iv(q1 - 300 - pick(qrng, 700)) : nv();
      Value q3 = rank <= 10 ? iv(std::get<std::int64_t>(q2) - 200 - pick(qrng, 500))
                            : nv();
      rows.push_back({iv(next_qual++), iv(rc.id), iv(driver),
                      iv(1 + (driver - 1) % 10), iv(rank), iv(q1), q2, q3});
    }
  }
  db.insert_rows("INSERT INTO qualifying VALUES (?,?,?,?,?,?,?,?)", rows);

  db.commit();

  require(db.query_int("SELECT COUNT(*) FROM races") == 362, "race count");
  require(db.query_int("SELECT COUNT(*) FROM races WHERE season_year = 2015") == 18,
          "2015 race count");
  require_argmax(db,
                 "SELECT driver_id, COUNT(*) AS n FROM results WHERE "
                 "finish_position = 1 GROUP BY driver_id ORDER BY n DESC, "
                 "driver_id LIMIT 2",
                 iv(1), "race wins leader");
  require_argmax(db,
                 "SELECT driver_id, COUNT(*) AS n FROM qualifying WHERE "
                 "qualifying_rank = 1 GROUP BY driver_id ORDER BY n DESC, "
                 "driver_id LIMIT 2",
                 iv(1), "pole leader");
  require_argmax(db,
                 "SELECT circuit_id, COUNT(*) AS n FROM races GROUP BY "
                 "circuit_id ORDER BY n DESC, circuit_id LIMIT 2",
                 iv(1), "busiest circuit");
  require(db.query_int(
              "SELECT COUNT(DISTINCT driver_id) FROM results WHERE "
              "constructor_id = 1") == 3,
          "Ferrari driver roster");
  require_argmax(db,
                 "SELECT cr.constructor_id, SUM(cr.points_scored) AS n FROM "
                 "constructor_results cr JOIN races r ON r.race_id = "
                 "cr.race_id WHERE r.season_year = 2010 GROUP BY "
                 "cr.constructor_id ORDER BY n DESC, cr.constructor_id LIMIT 2",
                 iv(1), "2010 constructor leader");
}

// ---------------------------------------------------------------------------
// avito: classified-ads marketplace. 8 tables.

void build_avito(SqliteDb& db, std::uint64_t seed) {
  db.exec(R"sql(
CREATE TABLE user_info (
  user_id INTEGER PRIMARY KEY,
  user_agent_family TEXT NOT NULL,
  user_device TEXT NOT NULL,
  registration_date TEXT NOT NULL
);
CREATE TABLE category (
  category_id INTEGER PRIMARY KEY,
  category_name TEXT NOT NULL,
  category_level INTEGER NOT NULL
);
CREATE TABLE location (
  location_id INTEGER PRIMARY KEY,
  location_city TEXT NOT NULL,
  location_region TEXT NOT NULL
);
CREATE TABLE ads_info (
  ad_id INTEGER PRIMARY KEY,
  category_id INTEGER NOT NULL REFERENCES category(category_id),
  location_id INTEGER NOT NULL REFERENCES location(location_id),
  ad_title TEXT NOT NULL,
  ad_price INTEGER NOT NULL,
  is_context_ad INTEGER NOT NULL
);
CREATE TABLE search_info (
  search_id INTEGER PRIMARY KEY,
  user_id INTEGER NOT NULL REFERENCES user_info(user_id),
  location_id INTEGER NOT NULL REFERENCES location(location_id),
  search_date TEXT NOT NULL,
  search_query_text TEXT NOT NULL
);
CREATE TABLE search_stream (
  search_stream_id INTEGER PRIMARY KEY,
  search_id INTEGER NOT NULL REFERENCES search_info(search_id),
  ad_id INTEGER NOT NULL REFERENCES ads_info(ad_id),
  display_position INTEGER NOT NULL,
  hist_ctr REAL NOT NULL
);
CREATE TABLE visits_stream (
  visit_id INTEGER PRIMARY KEY,
  user_id INTEGER NOT NULL REFERENCES user_info(user_id),
  ad_id INTEGER NOT NULL REFERENCES ads_info(ad_id),
  visit_date TEXT NOT NULL
);
CREATE TABLE phone_requests_stream (
  phone_request_id INTEGER PRIMARY KEY,
  user_id INTEGER NOT NULL REFERENCES user_info(user_id),
  ad_id INTEGER NOT NULL REFERENCES ads_info(ad_id),
  request_date TEXT NOT NULL
);
)sql");

  static const char* kCategories[12] = {
      "Phones",      "Auto",     "Real Estate", "Jobs",
      "Services",    "Furniture", "Electronics", "Clothing",
      "Pets",        "Sporting Goods", "Books",  "Toys"};
  struct Loc { const char* city; const char* region; };
  static const Loc kLocations[10] = {
      {"Moscow", "Moscow Region"},
      {"Saint Petersburg", "Leningrad Region"},
      {"Novosibirsk", "Novosibirsk Region"},
      {"Yekaterinburg", "Sverdlovsk Region"},
      {"Kazan", "Tatarstan"},
      {"Samara", "Samara Region"},
      {"Omsk", "Omsk Region"},
      {"Rostov-on-Don", "Rostov Region"},
      {"Ufa", "Bashkortostan"},
      {"Perm", "Perm Region"},
  };
  static const char* kAgents[5] = {"Chrome", "Firefox", "Safari", "Opera", "Edge"};
  static const char* kAdTitles[10] = {
      "Winter tires",     "Family sedan",   "Two-room flat",
      "Kids bicycle",     "Leather sofa",   "Smartphone bundle",
      "Garden tools",     "Laptop computer", "Concert tickets",
      "Vintage camera"};
  static const char* kQueries[8] = {
      "used car",     "city apartment", "winter tires", "mobile phone",
      "sofa bed",     "mountain bike",  "summer house", "office chair"};

  db.begin_transaction();

  Rows rows;
  for (int i = 0; i < 12; ++i) {
    rows.push_back({iv(i + 1), sv(kCategories[i]), iv(i < 6 ? 1 : 2)});
  }
  db.insert_rows("INSERT INTO category VALUES (?,?,?)", rows);

  rows.clear();
  for (int i = 0; i < 10; ++i) {
    rows.push_back({iv(i + 1), sv(kLocations[i].city), sv(kLocations[i].region)});
  }
  db.insert_rows("INSERT INTO location VALUES (?,?,?)", rows);

  auto urng = table_rng(seed, "avito", "user_info");
  rows.clear();
  for (int i = 0; i < 80; ++i) {
    const char* device = i % 2 == 0 ? "desktop" : (i % 4 == 1 ? "mobile" : "tablet");
    rows.push_back({iv(i + 1), sv(kAgents[i % 5]), sv(device),
                    sv(ymd(2013 + pick(urng, 3), 1 + pick(urng, 12),
                           1 + pick(urng, 28)))});
  }
  db.insert_rows("INSERT INTO user_info VALUES (?,?,?,?)", rows);

  auto arng = table_rng(seed, "avito", "ads_info");
  rows.clear();
  for (int i = 0; i < 150; ++i) {
    int cat = pick(arng, 4) == 0 ? 1 : 1 + pick(arng, 12);
    int loc = pick(arng, 10) < 3 ? 1 : 1 + pick(arng, 10);
    rows.push_back({iv(i + 1), iv(cat), iv(loc),
                    sv(std::string(kAdTitles[i % 10]) + " #" + std::to_string(i + 1)),
                    iv(500 + i * 137 + pick(arng, 100)), iv(pick(arng, 5) == 0 ? 1 : 0)});
  }
  db.insert_rows("INSERT INTO ads_info VALUES (?,?,?,?,?,?)", rows);

  auto srng = table_rng(seed, "avito", "search_info");
  rows.clear();
  for (int i = 0; i < 120; ++i) {
    // Searches span 2015-04-25 through 2015-05-20; the window edges are pinned.
    int offset = i == 0 ? 0 : (i == 1 ? 25 : pick(srng, 26));
    std::string date = offset <= 5 ? ymd(2015, 4, 25 + offset)
                                   : ymd(2015, 5, offset - 5);
    int loc = pick(srng, 10) < 3 ? 1 : 1 + pick(srng, 10);
    rows.push_back({iv(i + 1), iv(1 + pick(srng, 80)), iv(loc), sv(date),
                    sv(kQueries[i % 8])});
  }
  db.insert_rows("INSERT INTO search_info VALUES (?,?,?,?,?)", rows);

  auto strng = table_rng(seed, "avito", "search_stream");
  rows.clear();
  int next_ss = 1;
  for (int s = 1; s <= 120; ++s) {
    for (int k = 0; k < 3; ++k) {
      rows.push_back({iv(next_ss++), iv(s), iv(1 + pick(strng, 150)), iv(k + 1),
                      dv((1 + pick(strng, 2000)) / 10000.0)});
    }
  }
  db.insert_rows("INSERT INTO search_stream VALUES (?,?,?,?,?)", rows);

  auto vrng = table_rng(seed, "avito", "visits_stream");
  rows.clear();
  for (int i = 0; i < 200; ++i) {
    int ad = pick(vrng, 4) == 0 ? 1 : 1 + pick(vrng, 150);
    int offset = pick(vrng, 45);
    std::string date = offset <= 5 ? ymd(2015, 4, 25 + offset)
                                   : ymd(2015, 5, std::min(offset - 5, 28));
    rows.push_back({iv(i + 1), iv(1 + pick(vrng, 80)), iv(ad), sv(date)});
  }
  db.insert_rows("INSERT INTO visits_stream VALUES (?,?,?,?)", rows);

  auto prng = table_rng(seed, "avito", "phone_requests_stream");
  rows.clear();
  for (int i = 0; i < 90; ++i) {
    int offset = pick(prng, 45);
    std::string date = offset <= 5 ? ymd(2015, 4, 25 + offset)
                                   : ymd(2015, 5, std::min(offset - 5, 28));
    rows.push_back(
        {iv(i + 1), iv(1 + pick(prng, 80)), iv(1 + pick(prng, 150)), sv(date)});
  }
  db.insert_rows("INSERT INTO phone_requests_stream VALUES (?,?,?,?)", rows);

  db.commit();

  require(db.query_int("SELECT COUNT(DISTINCT ad_price) FROM ads_info") == 150,
          "distinct ad prices");
  require(db.query("SELECT MIN(search_date) FROM search_info").rows[0][0] ==
              Value(std::string("2015-04-25")),
          "search window start");
  require(db.query("SELECT MAX(search_date) FROM search_info").rows[0][0] ==
              Value(std::string("2015-05-20")),
          "search window end");
  require_argmax(db,
                 "SELECT category_id, COUNT(*) AS n FROM ads_info GROUP BY "
                 "category_id ORDER BY n DESC, category_id LIMIT 2",
                 iv(1), "top ad category");
  require_argmax(db,
                 "SELECT location_id, COUNT(*) AS n FROM ads_info GROUP BY "
                 "location_id ORDER BY n DESC, location_id LIMIT 2",
                 iv(1), "top ad location");
  require_argmax(db,
                 "SELECT ad_id, COUNT(*) AS n FROM visits_stream GROUP BY "
                 "ad_id ORDER BY n DESC, ad_id LIMIT 2",
                 iv(1), "most visited ad");
  require_argmax(db,
                 "SELECT u.user_device, COUNT(*) AS n FROM search_info s JOIN "
                 "user_info u ON u.user_id = s.user_id GROUP BY u.user_device "
                 "ORDER BY n DESC, u.user_device LIMIT 2",
                 sv("desktop"), "top search device");
}

// ---------------------------------------------------------------------------
// trial: clinical research registry. 15 tables.

void build_trial(SqliteDb& db, std::uint64_t seed) {
  db.exec(R"sql(
CREATE TABLE studies (
  study_id INTEGER PRIMARY KEY,
  nct_number TEXT NOT NULL,
  study_title TEXT NOT NULL,
  study_phase TEXT NOT NULL,
  overall_status TEXT NOT NULL,
  enrollment_count INTEGER NOT NULL,
  start_date TEXT NOT NULL
);
CREATE TABLE outcomes (
  outcome_id INTEGER PRIMARY KEY,
  study_id INTEGER NOT NULL REFERENCES studies(study_id),
  outcome_title TEXT NOT NULL,
  outcome_time_frame TEXT NOT NULL
);
CREATE TABLE outcome_analyses (
  outcome_analysis_id INTEGER PRIMARY KEY,
  outcome_id INTEGER NOT NULL REFERENCES outcomes(outcome_id),
  p_value REAL NOT NULL,
  analysis_method TEXT NOT NULL
);
CREATE TABLE drop_withdrawals (
  drop_withdrawal_id INTEGER PRIMARY KEY,
  study_id INTEGER NOT NULL REFERENCES studies(study_id),
  drop_reason TEXT NOT NULL,
  drop_count INTEGER NOT NULL
);
CREATE TABLE reported_event_totals (
  event_total_id INTEGER PRIMARY KEY,
  study_id INTEGER NOT NULL REFERENCES studies(study_id),
  event_classification TEXT NOT NULL,
  subjects_affected INTEGER NOT NULL,
  subjects_at_risk INTEGER NOT NULL
);
CREATE TABLE designs (
  design_id INTEGER PRIMARY KEY,
  study_id INTEGER NOT NULL REFERENCES studies(study_id),
  allocation_model TEXT NOT NULL,
  masking_level TEXT NOT NULL,
  primary_purpose TEXT NOT NULL
);
CREATE TABLE eligibilities (
  eligibility_id INTEGER PRIMARY KEY,
  study_id INTEGER NOT NULL REFERENCES studies(study_id),
  minimum_age_years INTEGER NOT NULL,
  maximum_age_years INTEGER NOT NULL,
  gender_eligibility TEXT NOT NULL
);
CREATE TABLE interventions (
  intervention_id INTEGER PRIMARY KEY,
  intervention_name TEXT NOT NULL,
  intervention_kind TEXT NOT NULL
);
CREATE TABLE conditions (
  condition_id INTEGER PRIMARY KEY,
  condition_name TEXT NOT NULL
);
CREATE TABLE facilities (
  facility_id INTEGER PRIMARY KEY,
  facility_name TEXT NOT NULL,
  facility_city TEXT NOT NULL,
  facility_country TEXT NOT NULL
);
CREATE TABLE sponsors (
  sponsor_id INTEGER PRIMARY KEY,
  sponsor_name TEXT NOT NULL,
  agency_class TEXT NOT NULL
);
CREATE TABLE interventions_studies (
  intervention_study_id INTEGER PRIMARY KEY,
  intervention_id INTEGER NOT NULL REFERENCES interventions(intervention_id),
  study_id INTEGER NOT NULL REFERENCES studies(study_id)
);
CREATE TABLE conditions_studies (
  condition_study_id INTEGER PRIMARY KEY,
  condition_id INTEGER NOT NULL REFERENCES conditions(condition_id),
  study_id INTEGER NOT NULL REFERENCES studies(study_id)
);
CREATE TABLE facilities_studies (
  facility_study_id INTEGER PRIMARY KEY,
  facility_id INTEGER NOT NULL REFERENCES facilities(facility_id),
  study_id INTEGER NOT NULL REFERENCES studies(study_id)
);
CREATE TABLE sponsors_studies (
  sponsor_study_id INTEGER PRIMARY KEY,
  sponsor_id INTEGER NOT NULL REFERENCES sponsors(sponsor_id),
  study_id INTEGER NOT NULL REFERENCES studies(study_id)
);
)sql");

  static const char* kPhases[4] = {"Phase 2", "Phase 3", "Phase 1", "Phase 4"};
  static const char* kStatuses[3] = {"Completed", "Recruiting", "Terminated"};
  static const char* kInterventions[25] = {
      "Metformin",          "Telemonitoring Device",  "Cognitive Therapy",
      "Stent Placement",    "Atorvastatin",           "Insulin Pump",
      "Exercise Program",   "Knee Arthroscopy",       "Lisinopril",
      "Glucose Monitor",    "Dietary Counseling",     "Cardiac Ablation",
      "Semaglutide",        "Hearing Implant",        "Mindfulness Training",
      "Cataract Surgery",   "Warfarin",               "Portable Ventilator",
      "Sleep Coaching",     "Hip Replacement",        "Sertraline",
      "Wearable Sensor",    "Smoking Cessation Aid",  "Spinal Fusion",
      "Prednisone"};
  static const char* kKinds[4] = {"Drug", "Device", "Behavioral", "Procedure"};
  static const char* kConditions[20] = {
      "Diabetes",        "Hypertension",        "Asthma",
      "Chronic Kidney Disease", "Heart Failure", "Depression",
      "Obesity",         "Breast Cancer",       "Alzheimer Disease",
      "Rheumatoid Arthritis", "Stroke",          "Osteoporosis",
      "Migraine",        "Epilepsy",            "Psoriasis",
      "Hepatitis C",     "Anemia",              "Glaucoma",
      "Insomnia",        "Chronic Pain"};
  struct City { const char* city; const char* country; };
  static const City kCities[12] = {
      {"Boston", "United States"}, {"Munich", "Germany"},
      {"Toronto", "Canada"},       {"Lyon", "France"},
      {"Osaka", "Japan"},          {"Denver", "United States"},
      {"Madrid", "Spain"},         {"Vienna", "Austria"},
      {"Warsaw", "Poland"},        {"Leeds", "United Kingdom"},
      {"Hamburg", "Germany"},      {"Geneva", "Switzerland"}};
  static const char* kFacilityKinds[6] = {
      "General Hospital", "Medical Center",  "Research Institute",
      "University Clinic", "Regional Hospital", "Health Campus"};
  static const char* kSponsors[15] = {
      "Orion Health Group",   "Helix Biosciences",  "Cobalt Pharma",
      "National Heart Institute", "Atlas Therapeutics", "Blue Ridge Medical",
      "Quantum Biotech",      "Pacific Research Foundation", "Sterling Labs",
      "Novara Clinical",      "Crestview Pharma",   "Institute of Aging",
      "Meridian Biologics",   "Harbor Medical Trust", "Aurora Life Sciences"};
  static const char* kMethods[4] = {"ANCOVA", "Log-rank", "Mixed model", "t-test"};
  static const char* kReasons[4] = {"Adverse Event", "Lost to Follow-up",
                                    "Protocol Violation", "Withdrawal by Subject"};
  static const char* kOutcomeTitles[6] = {
      "Change in systolic blood pressure", "Overall survival",
      "Six-minute walk distance",          "HbA1c reduction",
      "Symptom-free days",                 "Hospital readmission rate"};
  static const char* kTimeFrames[4] = {"12 weeks", "6 months", "1 year", "24 weeks"};

  db.begin_transaction();

  auto strng = table_rng(seed, "trial", "studies");
  Rows rows;
  for (int i = 0; i < 60; ++i) {
    char nct[16];
    std::snprintf(nct, sizeof(nct), "NCT%07d", 1000 + i * 13);
    std::string title = std::string("Trial of ") + kInterventions[i % 25] +
                        " for " + kConditions[i % 20];
    const char* phase = i % 10 < 4 ? kPhases[0]
                        : i % 10 < 7 ? kPhases[1]
                        : i % 10 < 9 ? kPhases[2]
                                     : kPhases[3];
    rows.push_back({iv(i + 1), sv(nct), sv(title), sv(phase),
                    sv(kStatuses[i % 5 < 3 ? 0 : (i % 5 == 3 ? 1 : 2)]),
                    iv(20 + i * 17 + pick(strng, 13)),
                    sv(ymd(2005 + i % 16, 1 + pick(strng, 12), 1 + pick(strng, 28)))});
  }
  db.insert_rows("INSERT INTO studies VALUES (?,?,?,?,?,?,?)", rows);

  rows.clear();
  for (int i = 0; i < 120; ++i) {
    rows.push_back({iv(i + 1), iv(i % 60 + 1), sv(kOutcomeTitles[i % 6]),
                    sv(kTimeFrames[i % 4])});
  }
  db.insert_rows("INSERT INTO outcomes VALUES (?,?,?,?)", rows);

  auto orng = table_rng(seed, "trial", "outcome_analyses");
  rows.clear();
  for (int i = 0; i < 100; ++i) {
    double p = i == 0 ? 0.0004 : (10 + pick(orng, 1990)) / 10000.0;
    rows.push_back({iv(i + 1), iv(1 + pick(orng, 120)), dv(p), sv(kMethods[i % 4])});
  }
  db.insert_rows("INSERT INTO outcome_analyses VALUES (?,?,?,?)", rows);

  auto drng = table_rng(seed, "trial", "drop_withdrawals");
  rows.clear();
  for (int i = 0; i < 80; ++i) {
    rows.push_back({iv(i + 1), iv(1 + pick(drng, 60)), sv(kReasons[pick(drng, 4)]),
                    iv(1 + pick(drng, 30))});
  }
  db.insert_rows("INSERT INTO drop_withdrawals VALUES (?,?,?,?)", rows);

  auto erng = table_rng(seed, "trial", "reported_event_totals");
  rows.clear();
  for (int i = 0; i < 120; ++i) {
    int at_risk = 50 + pick(erng, 200);
    rows.push_back({iv(i + 1), iv(i % 60 + 1),
                    sv(i % 2 == 0 ? "serious" : "other"),
                    iv(pick(erng, at_risk + 1)), iv(at_risk)});
  }
  db.insert_rows("INSERT INTO reported_event_totals VALUES (?,?,?,?,?)", rows);

  rows.clear();
  for (int i = 0; i < 60; ++i) {
    rows.push_back({iv(i + 1), iv(i + 1),
                    sv(i % 3 < 2 ? "Randomized" : "Non-Randomized"),
                    sv(i % 4 == 0 ? "None"
                       : i % 4 == 1 ? "Single"
                       : i % 4 == 2 ? "Double"
                                    : "Quadruple"),
                    sv(i % 3 == 0 ? "Treatment"
                       : i % 3 == 1 ? "Prevention"
                                    : "Diagnostic")});
  }
  db.insert_rows("INSERT INTO designs VALUES (?,?,?,?,?)", rows);

  auto grng = table_rng(seed, "trial", "eligibilities");
  rows.clear();
  for (int i = 0; i < 60; ++i) {
    int min_age = 18 + pick(grng, 30);
    rows.push_back({iv(i + 1), iv(i + 1), iv(min_age),
                    iv(min_age + 20 + pick(grng, 20)),
                    sv(i % 4 < 2 ? "All" : (i % 4 == 2 ? "Female" : "Male"))});
  }
  db.insert_rows("INSERT INTO eligibilities VALUES (?,?,?,?,?)", rows);

  rows.clear();
  for (int i = 0; i < 25; ++i) {
    rows.push_back({iv(i + 1), sv(kInterventions[i]), sv(kKinds[i % 4])});
  }
  db.insert_rows("INSERT INTO interventions VALUES (?,?,?)", rows);

  rows.clear();
  for (int i = 0; i < 20; ++i) {
    rows.push_back({iv(i + 1), sv(kConditions[i])});
  }
  db.insert_rows("INSERT INTO conditions VALUES (?,?)", rows);

  rows.clear();
  for (int i = 0; i < 30; ++i) {
    if (i == 0) {
      rows.push_back({iv(1), sv("University Hospital Berlin"), sv("Berlin"),
                      sv("Germany")});
      continue;
    }
    const City& c = kCities[(i * 7) % 12];
    rows.push_back({iv(i + 1), sv(std::string(c.city) + " " + kFacilityKinds[i % 6]),
                    sv(c.city), sv(c.country)});
  }
  db.insert_rows("INSERT INTO facilities VALUES (?,?,?,?)", rows);

  rows.clear();
  for (int i = 0; i < 15; ++i) {
    rows.push_back({iv(i + 1), sv(kSponsors[i]),
                    sv(i % 3 == 0 ? "Industry" : (i % 3 == 1 ? "Other" : "NIH"))});
  }
  db.insert_rows("INSERT INTO sponsors VALUES (?,?,?)", rows);

  rows.clear();
  for (int i = 0; i < 90; ++i) {
    int intervention = i % 6 == 0 ? 1 : 1 + (i * 7) % 25;
    rows.push_back({iv(i + 1), iv(intervention), iv(i % 60 + 1)});
  }
  db.insert_rows("INSERT INTO interventions_studies VALUES (?,?,?)", rows);

  rows.clear();
  int next_cs = 1;
  for (int i = 0; i < 60; ++i) {
    int first = i % 4 == 0 ? 1 : 1 + (i * 13) % 20;
    rows.push_back({iv(next_cs++), iv(first), iv(i + 1)});
    rows.push_back({iv(next_cs++), iv(1 + (i * 7 + 3) % 20), iv(i + 1)});
  }
  db.insert_rows("INSERT INTO conditions_studies VALUES (?,?,?)", rows);

  rows.clear();
  for (int i = 0; i < 90; ++i) {
    int facility = i % 5 == 0 ? 1 : 1 + (i * 11) % 30;
    rows.push_back({iv(i + 1), iv(facility), iv(i % 60 + 1)});
  }
  db.insert_rows("INSERT INTO facilities_studies VALUES (?,?,?)", rows);

  rows.clear();
  for (int i = 0; i < 60; ++i) {
    int sponsor = i % 4 == 0 ? 1 : 1 + (i * 7) % 15;
    rows.push_back({iv(i + 1), iv(sponsor), iv(i + 1)});
  }
  db.insert_rows("INSERT INTO sponsors_studies VALUES (?,?,?)", rows);

  db.commit();

  require(db.query_int(
              "SELECT COUNT(*) FROM studies WHERE study_phase = 'Phase 2'") == 24,
          "Phase 2 count");
  require(db.query_int(
              "SELECT COUNT(*) FROM studies WHERE study_phase = 'Phase 3'") == 18,
          "Phase 3 count");
  require(db.query_int("SELECT COUNT(DISTINCT enrollment_count) FROM studies") ==
              60,
          "distinct enrollment");
  require(canonical_scalar(
              db.query("SELECT MIN(p_value) FROM outcome_analyses").rows[0][0]) ==
              "0.0004",
          "smallest p-value");
  require(db.query_int(
              "SELECT COUNT(*) FROM facilities WHERE facility_country = "
              "'Germany'") == 5,
          "German facilities");
  require_argmax(db,
                 "SELECT c.condition_name, COUNT(DISTINCT cs.study_id) AS n "
                 "FROM conditions_studies cs JOIN conditions c ON "
                 "c.condition_id = cs.condition_id GROUP BY c.condition_name "
                 "ORDER BY n DESC, c.condition_name LIMIT 2",
                 sv("Diabetes"), "top condition");
  require_argmax(db,
                 "SELECT sponsor_id, COUNT(DISTINCT study_id) AS n FROM "
                 "sponsors_studies GROUP BY sponsor_id ORDER BY n DESC, "
                 "sponsor_id LIMIT 2",
                 iv(1), "top sponsor");
  require_argmax(db,
                 "SELECT f.facility_city, COUNT(*) AS n FROM facilities_studies "
                 "fs JOIN facilities f ON f.facility_id = fs.facility_id GROUP "
                 "BY f.facility_city ORDER BY n DESC, f.facility_city LIMIT 2",
                 sv("Berlin"), "top facility city");
}

// ---------------------------------------------------------------------------
// stack: community Q&A forum. 7 tables.

void build_stack(SqliteDb& db, std::uint64_t seed) {
  db.exec(R"sql(
CREATE TABLE users (
  user_id INTEGER PRIMARY KEY,
  display_name TEXT NOT NULL,
  reputation_score INTEGER NOT NULL,
  account_creation_date TEXT NOT NULL,
  user_location TEXT NOT NULL
);
CREATE TABLE posts (
  post_id INTEGER PRIMARY KEY,
  owner_user_id INTEGER NOT NULL REFERENCES users(user_id),
  post_kind TEXT NOT NULL,
  post_title TEXT,
  post_score INTEGER NOT NULL,
  view_count INTEGER NOT NULL,
  answer_count INTEGER NOT NULL,
  creation_date TEXT NOT NULL
);
CREATE TABLE comments (
  comment_id INTEGER PRIMARY KEY,
  post_id INTEGER NOT NULL REFERENCES posts(post_id),
  commenter_user_id INTEGER NOT NULL REFERENCES users(user_id),
  comment_score INTEGER NOT NULL,
  comment_date TEXT NOT NULL
);
CREATE TABLE votes (
  vote_id INTEGER PRIMARY KEY,
  post_id INTEGER NOT NULL REFERENCES posts(post_id),
  vote_kind TEXT NOT NULL,
  vote_date TEXT NOT NULL
);
CREATE TABLE badges (
  badge_id INTEGER PRIMARY KEY,
  recipient_user_id INTEGER NOT NULL REFERENCES users(user_id),
  badge_name TEXT NOT NULL,
  badge_class INTEGER NOT NULL,
  badge_date TEXT NOT NULL
);
CREATE TABLE post_history (
  post_history_id INTEGER PRIMARY KEY,
  post_id INTEGER NOT NULL REFERENCES posts(post_id),
  editor_user_id INTEGER NOT NULL REFERENCES users(user_id),
  change_kind TEXT NOT NULL,
  change_date TEXT NOT NULL
);
CREATE TABLE post_links (
  post_link_id INTEGER PRIMARY KEY,
  source_post_id INTEGER NOT NULL REFERENCES posts(post_id),
  related_post_id INTEGER NOT NULL REFERENCES posts(post_id),
  link_kind TEXT NOT NULL
);
)sql");

  static const char* kAdjectives[10] = {"Blue",  "Crimson", "Silent", "Golden",
                                        "Rapid", "Misty",   "Iron",   "Violet",
                                        "Lunar", "Amber"};
  static const char* kNouns[5] = {"Harbor", "Falcon", "Maple", "Comet", "Willow"};
  static const char* kPlaces[8] = {"London", "Berlin", "New York", "Sydney",
                                   "Toronto", "Austin", "Oslo",    "Madrid"};
  static const char* kTopics[10] = {
      "parse JSON in Python",    "center a layout",
      "merge git branches",      "profile memory usage",
      "read a CSV file",         "handle missing values",
      "speed up joins",          "configure logging",
      "mock an HTTP call",       "schedule a cron job"};
  static const char* kBadgePool[7] = {"Student",     "Editor",     "Supporter",
                                      "Commentator", "Nice Answer", "Good Answer",
                                      "Curious"};

  db.begin_transaction();

  auto urng = table_rng(seed, "stack", "users");
  Rows rows;
  for (int i = 0; i < 50; ++i) {
    std::string name = std::string(kAdjectives[i % 10]) + kNouns[i / 10];
    std::string date = i == 0 ? ymd(2015, 1, 4)
                              : ymd(2015 + pick(urng, 5), 2 + pick(urng, 11),
                                    1 + pick(urng, 28));
    rows.push_back({iv(i + 1), sv(name), iv(10000 - 7 * i), sv(date),
                    sv(kPlaces[i % 8])});
  }
  db.insert_rows("INSERT INTO users VALUES (?,?,?,?,?)", rows);

  auto prng = table_rng(seed, "stack", "posts");
  rows.clear();
  for (int i = 0; i < 200; ++i) {
    bool question = i % 5 < 3;
    int owner = pick(prng, 4) == 0 ? 2 : 1 + pick(prng, 50);
    Value title = question
                      ? sv(std::string("How to ") + kTopics[i % 10] + "?")
                      : nv();
    rows.push_back({iv(i + 1), iv(owner), sv(question ? "question" : "answer"),
                    title, iv(pick(prng, 100)), iv(100 + i * 23 + pick(prng, 19)),
                    iv(question ? pick(prng, 5) : 0),
                    sv(ymd(2018 + pick(prng, 4), 1 + pick(prng, 12),
                           1 + pick(prng, 28)))});
  }
  db.insert_rows("INSERT INTO posts VALUES (?,?,?,?,?,?,?,?)", rows);

  auto crng = table_rng(seed, "stack", "comments");
  rows.clear();
  for (int i = 0; i < 150; ++i) {
    rows.push_back({iv(i + 1), iv(1 + pick(crng, 200)), iv(1 + pick(crng, 50)),
                    iv(pick(crng, 10)),
                    sv(ymd(2019 + pick(crng, 3), 1 + pick(crng, 12),
                           1 + pick(crng, 28)))});
  }
  db.insert_rows("INSERT INTO comments VALUES (?,?,?,?,?)", rows);

  auto vrng = table_rng(seed, "stack", "votes");
  rows.clear();
  for (int i = 0; i < 300; ++i) {
    int post = pick(vrng, 5) == 0 ? 1 : 1 + pick(vrng, 200);
    const char* kind = i % 6 < 4 ? "up" : (i % 6 == 4 ? "down" : "favorite");
    rows.push_back({iv(i + 1), iv(post), sv(kind),
                    sv(ymd(2019 + pick(vrng, 3), 1 + pick(vrng, 12),
                           1 + pick(vrng, 28)))});
  }
  db.insert_rows("INSERT INTO votes VALUES (?,?,?,?)", rows);

  auto brng = table_rng(seed, "stack", "badges");
  rows.clear();
  for (int i = 0; i < 100; ++i) {
    int recipient = i % 4 == 0 ? 3 : 1 + pick(brng, 50);
    const char* name = i % 5 == 0 ? "Teacher" : kBadgePool[i % 7];
    int cls = i % 6 == 0 ? 1 : (i % 6 < 3 ? 2 : 3);
    rows.push_back({iv(i + 1), iv(recipient), sv(name), iv(cls),
                    sv(ymd(2019 + pick(brng, 3), 1 + pick(brng, 12),
                           1 + pick(brng, 28)))});
  }
  db.insert_rows("INSERT INTO badges VALUES (?,?,?,?,?)", rows);

  auto hrng = table_rng(seed, "stack", "post_history");
  rows.clear();
  for (int i = 0; i < 120; ++i) {
    const char* kind = i % 4 < 2 ? "edit" : (i % 4 == 2 ? "rollback" : "close");
    rows.push_back({iv(i + 1), iv(1 + pick(hrng, 200)), iv(1 + pick(hrng, 50)),
                    sv(kind),
                    sv(ymd(2019 + pick(hrng, 3), 1 + pick(hrng, 12),
                           1 + pick(hrng, 28)))});
  }
  db.insert_rows("INSERT INTO post_history VALUES (?,?,?,?,?)", rows);

  auto lrng = table_rng(seed, "stack", "post_links");
  rows.clear();
  for (int i = 0; i < 60; ++i) {
    int source = 1 + pick(lrng, 200);
    int related = 1 + pick(lrng, 200);
    if (related == source) related = 1 + related % 200;
    rows.push_back({iv(i + 1), iv(source), iv(related),
                    sv(i % 3 == 0 ? "duplicate" : "related")});
  }
  db.insert_rows("INSERT INTO post_links VALUES (?,?,?,?)", rows);

  db.commit();

  require(db.query_int("SELECT MAX(reputation_score) FROM users") == 10000,
          "max reputation");
  require(db.query("SELECT MIN(account_creation_date) FROM users").rows[0][0] ==
              Value(std::string("2015-01-04")),
          "earliest account");
  require_argmax(db,
                 "SELECT badge_name, COUNT(*) AS n FROM badges GROUP BY "
                 "badge_name ORDER BY n DESC, badge_name LIMIT 2",
                 sv("Teacher"), "top badge");
  require_argmax(db,
                 "SELECT recipient_user_id, COUNT(*) AS n FROM badges GROUP BY "
                 "recipient_user_id ORDER BY n DESC, recipient_user_id LIMIT 2",
                 iv(3), "top badge recipient");
  require_argmax(db,
                 "SELECT owner_user_id, SUM(post_score) AS n FROM posts GROUP "
                 "BY owner_user_id ORDER BY n DESC, owner_user_id LIMIT 2",
                 iv(2), "top post scorer");
  require_argmax(db,
                 "SELECT post_id, COUNT(*) AS n FROM votes WHERE vote_kind = "
                 "'up' GROUP BY post_id ORDER BY n DESC, post_id LIMIT 2",
                 iv(1), "most upvoted post");
  require(db.query("SELECT post_kind, post_title FROM posts WHERE post_id = 1")
                  .rows[0][0] == Value(std::string("question")),
          "post 1 is a question");
}

// ---------------------------------------------------------------------------
// hm: fashion retail. 3 tables.

void build_hm(SqliteDb& db, std::uint64_t seed) {
  db.exec(R"sql(
CREATE TABLE article (
  article_id INTEGER PRIMARY KEY,
  product_name TEXT NOT NULL,
  product_kind TEXT NOT NULL,
  product_group_name TEXT NOT NULL,
  colour_group_name TEXT NOT NULL,
  list_price REAL NOT NULL
);
CREATE TABLE customer (
  customer_id INTEGER PRIMARY KEY,
  club_member_status TEXT NOT NULL,
  fashion_news_frequency TEXT NOT NULL,
  customer_age INTEGER NOT NULL,
  postal_code TEXT NOT NULL
);
CREATE TABLE transactions (
  transaction_id INTEGER PRIMARY KEY,
  transaction_date TEXT NOT NULL,
  customer_id INTEGER NOT NULL REFERENCES customer(customer_id),
  article_id INTEGER NOT NULL REFERENCES article(article_id),
  paid_price REAL NOT NULL,
  sales_channel_id INTEGER NOT NULL
);
)sql");

  static const char* kBases[20] = {
      "Slim Jeans",     "Crew Sweater",  "Rain Parka",     "Canvas Sneaker",
      "Silk Scarf",     "Linen Shirt",   "Puffer Vest",    "Wrap Skirt",
      "Wool Coat",      "Cargo Pant",    "Floral Top",     "Denim Jacket",
      "Knit Beanie",    "Ribbed Tank",   "Pleated Trouser", "Quilted Bag",
      "Fleece Hoodie",  "Satin Blouse",  "Cotton Sock",    "Maxi Gown"};
  static const char* kSeries[5] = {"I", "II", "III", "IV", "V"};
  static const char* kKindPool[7] = {"Trousers", "Sweater", "T-shirt", "Shoes",
                                     "Jacket",   "Underwear", "Accessories"};
  static const char* kGroups[5] = {"Menswear", "Ladieswear", "Sportswear",
                                   "Divided", "Baby"};
  static const char* kColours[6] = {"Black", "White", "Blue", "Red", "Green",
                                    "Grey"};
  static const char* kStatuses[3] = {"ACTIVE", "PRE-CREATE", "LEFT CLUB"};
  static const char* kNews[3] = {"NONE", "Regularly", "Monthly"};

  db.begin_transaction();

  Rows rows;
  std::vector<double> list_prices(101, 0.0);
  for (int i = 0; i < 100; ++i) {
    double price = (999 + 7 * i) / 100.0;
    list_prices[i + 1] = price;
    rows.push_back({iv(i + 1),
                    sv(std::string(kBases[i % 20]) + " " + kSeries[i / 20]),
                    sv(i % 4 == 0 ? "Dress" : kKindPool[i % 7]),
                    sv(kGroups[i % 5]), sv(kColours[i % 6]), dv(price)});
  }
  db.insert_rows("INSERT INTO article VALUES (?,?,?,?,?,?)", rows);

  auto curng = table_rng(seed, "hm", "customer");
  rows.clear();
  for (int i = 0; i < 70; ++i) {
    int age = i == 0 ? 75 : 16 + pick(curng, 59);
    char postal[8];
    std::snprintf(postal, sizeof(postal), "%05d", 10000 + pick(curng, 90000));
    rows.push_back({iv(i + 1), sv(kStatuses[i % 3]), sv(kNews[pick(curng, 3)]),
                    iv(age), sv(postal)});
  }
  db.insert_rows("INSERT INTO customer VALUES (?,?,?,?,?)", rows);

  auto trng = table_rng(seed, "hm", "transactions");
  rows.clear();
  for (int i = 0; i < 400; ++i) {
    // The first eighty sales cover every sellable article once; articles 81-100
    // are deliberately never sold.
    int article = i < 80 ? i + 1 : (i % 5 == 0 ? 1 : 1 + pick(trng, 80));
    int customer = i >= 80 && i % 7 == 0 ? 2 : 1 + pick(trng, 70);
    double factor = (70 + pick(trng, 31)) / 100.0;
    double paid = static_cast<int>(list_prices[article] * factor * 100 + 0.5) / 100.0;
    rows.push_back({iv(i + 1),
                    sv(ymd(2019 + pick(trng, 2), 1 + pick(trng, 12),
                           1 + pick(trng, 28))),
                    iv(customer), iv(article), dv(paid),
                    iv(i % 5 < 2 ? 1 : 2)});
  }
  db.insert_rows("INSERT INTO transactions VALUES (?,?,?,?,?,?)", rows);

  db.commit();

  require(db.query_int("SELECT COUNT(DISTINCT club_member_status) FROM customer") ==
              3,
          "status variety");
  require(db.query_int("SELECT COUNT(DISTINCT article_id) FROM transactions") ==
              80,
          "sold article coverage");
  require(db.query_int("SELECT COUNT(*) FROM transactions WHERE article_id > 80") ==
              0,
          "unsold tail");
  require(db.query_int(
              "SELECT COUNT(*) FROM customer WHERE customer_age = 75") == 1,
          "unique oldest shopper");
  require_argmax(db,
                 "SELECT product_kind, COUNT(*) AS n FROM article GROUP BY "
                 "product_kind ORDER BY n DESC, product_kind LIMIT 2",
                 sv("Dress"), "top product kind");
  require_argmax(db,
                 "SELECT a.product_group_name, COUNT(*) AS n FROM transactions "
                 "t JOIN article a ON a.article_id = t.article_id GROUP BY "
                 "a.product_group_name ORDER BY n DESC, a.product_group_name "
                 "LIMIT 2",
                 sv("Menswear"), "top selling group");
  require_argmax(db,
                 "SELECT article_id, COUNT(*) AS n FROM transactions GROUP BY "
                 "article_id ORDER BY n DESC, article_id LIMIT 2",
                 iv(1), "best selling article");
  {
    QueryResult r = db.query(
        "SELECT customer_id, SUM(paid_price) AS n FROM transactions GROUP BY "
        "customer_id ORDER BY n DESC LIMIT 2");
    require(r.rows[0][0] == Value(std::int64_t(2)), "top spender");
    require(std::get<double>(r.rows[0][1]) > std::get<double>(r.rows[1][1]),
            "top spender margin");
  }
}

}  // namespace

const std::vector<MaterializedDbSpec>& materialized_dbs() {
  static const std::vector<MaterializedDbSpec> specs = {
      {"f1", "Motor racing seasons, finishing orders, and championship tallies",
       "sports", &build_f1},
      {"avito",
       "Classified ad marketplace with browsing, contact, and sale activity",
       "marketplace", &build_avito},
      {"trial", "Clinical research registry with protocols, sites, and enrollment",
       "medicine", &build_trial},
      {"stack", "Community forum with threads, scoring, and achievement awards",
       "community", &build_stack},
      {"hm", "Fashion retail goods, shoppers, and purchase history", "retail",
       &build_hm},
  };
  return specs;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

const std::vector<SchemaOnlyDbSpec>& schema_only_dbs() {
  static const std::vector<SchemaOnlyDbSpec> specs = {
      {"football_league",
       "Domestic football competition fixtures and league records", "sports",
       "medium",
       {"league_teams", "match_fixtures", "results", "standings",
        "player_roster", "stadium_sites", "season_calendar", "goal_events",
        "booking_cards", "transfer_deals", "coach_assignments", "referee_panel",
        "attendance_logs"},
       {"team_name", "match_day", "home_goals", "away_goals", "stadium_capacity",
        "league_rank", "player_height_cm", "shirt_number", "coach_name",
        "season_label", "attendance_total", "transfer_fee", "contract_years",
        "goal_minute", "card_shade", "referee_name"}},
      {"cycling_tour",
       "Professional cycling stages, riders, and classification jerseys",
       "sports", "medium",
       {"races", "results", "rider_profiles", "team_sponsors", "stage_routes",
        "climb_segments", "sprint_zones", "jersey_awards", "time_trials",
        "peloton_groups", "support_cars", "finish_records"},
       {"rider_name", "stage_km", "climb_grade", "summit_elevation",
        "sprint_bonus", "jersey_color", "team_title", "stage_kind",
        "finish_gap_seconds", "bike_model", "cadence_avg", "wind_speed_kph",
        "road_surface", "feed_zone_km"}},
      {"parliament", "National assembly sessions, bills, and voting procedures",
       "government", "medium",
       {"assembly_members", "party_groups", "committee_rooms", "bill_drafts",
        "debate_sessions", "voting_records", "amendment_texts",
        "session_minutes", "constituency_map", "speaker_rotations",
        "motion_queue", "quorum_checks", "gallery_passes", "recess_calendar"},
       {"member_name", "party_label", "seat_region", "term_start_year",
        "bill_reference", "reading_stage", "ayes_total", "noes_total",
        "chamber_wing", "session_hour", "motion_text", "quorum_size",
        "clerk_name", "hansard_page"}},
      {"elections", "Electoral cycles with ballots, precincts, and tallies",
       "government", "medium",
       {"votes", "candidate_slates", "polling_stations", "ballot_designs",
        "voter_rolls", "precinct_maps", "campaign_budgets", "debate_schedule",
        "exit_surveys", "recount_requests", "registration_drives",
        "turnout_figures", "absentee_requests", "poll_workers",
        "certification_logs"},
       {"candidate_name", "party_slate", "precinct_code", "ballot_style",
        "registered_total", "turnout_pct", "spend_amount", "ad_channel",
        "survey_sample", "recount_margin", "drive_city", "shift_hours",
        "certify_date", "machine_serial"}},
      {"city_council", "Municipal governance agendas, permits, and hearings",
       "government", "medium",
       {"council_wards", "agenda_items", "public_hearings", "zoning_cases",
        "permit_queue", "budget_lines", "meeting_minutes", "resolution_texts",
        "appointee_roster", "ordinance_drafts", "citizen_petitions"},
       {"ward_name", "item_order", "hearing_room", "parcel_code", "permit_kind",
        "line_amount", "minute_text", "resolution_no", "appointee_name",
        "draft_stage", "signature_total", "fiscal_year_label"}},
      {"retail_chain", "Multi-store retail operations, stock, and loyalty programs",
       "retail", "medium",
       {"transactions", "store_branches", "product_shelves",
        "supplier_contracts", "price_changes", "loyalty_accounts",
        "warehouse_bins", "shipment_batches", "staff_schedules",
        "return_claims", "promo_campaigns", "inventory_tallies",
        "register_tills", "franchise_deals", "audit_visits", "gift_cards"},
       {"branch_city", "shelf_aisle", "supplier_name", "old_amount",
        "new_amount", "loyalty_tier", "bin_slot", "batch_weight_kg",
        "shift_label", "claim_reason", "promo_code", "stock_level",
        "till_serial", "royalty_pct", "visit_grade", "card_balance"}},
      {"logistics_network", "Freight movement across depots, fleets, and lanes",
       "industry", "medium",
       {"freight_routes", "depot_yards", "truck_fleet", "shift_rosters",
        "cargo_manifests", "delivery_windows", "fuel_logs", "route_tolls",
        "package_scans", "hub_transfers", "customs_forms", "damage_reports"},
       {"lane_origin", "lane_destination", "yard_gate", "plate_number",
        "shift_window", "cargo_weight_kg", "window_start_hour", "litres_filled",
        "toll_amount", "scan_point", "transfer_hub", "hs_code",
        "damage_grade", "pallet_total"}},
      {"world_atlas", "Geographic reference for countries, terrain, and trade",
       "reference", "medium",
       {"country_profiles", "river_basins", "mountain_ranges", "climate_zones",
        "border_crossings", "capital_sites", "language_regions",
        "census_records", "trade_ports", "island_groups", "desert_areas",
        "forest_reserves", "volcano_sites"},
       {"iso_code", "basin_area_km2", "peak_elevation_m", "koppen_class",
        "crossing_kind", "capital_name", "language_name", "census_year",
        "port_tonnage", "island_total", "annual_rain_mm", "canopy_pct",
        "last_eruption_year", "population_total"}},
      {"film_archive", "Historic cinema holdings, credits, and releases", "media",
       "medium",
       {"feature_films", "director_credits", "actor_castings", "studio_lots",
        "release_windows", "box_office_takes", "award_nominations",
        "script_drafts", "location_scouts", "restoration_jobs",
        "screening_rooms"},
       {"film_title", "runtime_minutes", "director_name", "actor_name",
        "lot_acreage", "window_territory", "gross_amount", "award_body",
        "draft_revision", "scout_site", "reel_condition", "seat_total",
        "aspect_ratio", "premiere_year"}},
      {"basketball_league", "Professional basketball clubs, games, and statistics",
       "sports", "large",
       {"franchise_clubs", "arena_venues", "player_contracts", "game_fixtures",
        "quarter_scores", "shot_charts", "rebound_stats", "assist_logs",
        "turnover_events", "foul_records", "timeout_usage", "draft_picks",
        "trade_windows", "injury_lists", "coaching_staff", "practice_sessions",
        "ticket_sales", "broadcast_rights", "mascot_profiles",
        "season_schedules"},
       {"club_name", "arena_capacity", "salary_amount", "tipoff_hour",
        "quarter_no", "shot_zone", "board_total", "dime_total", "giveaway_kind",
        "whistle_kind", "timeout_left", "pick_round", "window_close_day",
        "injury_kind", "staff_role", "drill_focus", "seat_tier",
        "rights_holder", "mascot_name", "week_no"}},
      {"tennis_tour", "Tennis circuit draws, matches, and rankings", "sports",
       "large",
       {"tournament_draws", "court_surfaces", "match_scores", "set_tallies",
        "serve_stats", "rally_lengths", "umpire_panel", "seed_rankings",
        "wildcard_entries", "prize_purses", "doubles_pairs", "qualifier_rounds",
        "injury_timeouts", "racquet_specs", "sponsor_patches", "travel_plans",
        "practice_courts", "trophy_cabinet"},
       {"draw_size", "surface_kind", "set_no", "game_total", "ace_total",
        "fault_total", "rally_stroke_total", "umpire_name", "seed_no",
        "purse_amount", "pair_handedness", "round_label", "timeout_minute",
        "string_tension", "patch_sponsor", "flight_leg", "court_no",
        "trophy_year"}},
      {"insurance_company", "Insurance policies, claims, and risk assessment",
       "finance", "large",
       {"policy_contracts", "claim_files", "premium_schedules", "risk_scores",
        "underwriting_notes", "adjuster_visits", "payout_ledgers",
        "fraud_flags", "renewal_offers", "coverage_tiers", "deductible_plans",
        "agent_branches", "actuarial_tables", "reinsurance_treaties",
        "policyholder_accounts", "incident_reports", "settlement_terms"},
       {"policy_no", "claim_amount", "premium_amount", "risk_band",
        "note_text", "visit_day", "ledger_entry_amount", "flag_reason",
        "offer_discount_pct", "tier_label", "deductible_amount", "branch_city",
        "mortality_rate", "treaty_share_pct", "holder_name", "incident_kind",
        "term_months"}},
      {"merchant_bank", "Banking ledgers, lending, and branch operations",
       "finance", "large",
       {"deposit_accounts", "loan_books", "branch_offices", "teller_windows",
        "card_issuances", "wire_transfers", "exchange_rates", "vault_holdings",
        "credit_lines", "mortgage_files", "overdraft_events", "statement_cycles",
        "compliance_audits", "treasury_desks", "client_portfolios",
        "collateral_registry", "interest_schedules", "fee_waivers",
        "atm_sites"},
       {"account_no", "principal_amount", "branch_city", "window_no",
        "card_scheme", "wire_amount", "currency_pair", "vault_bar_total",
        "line_limit", "property_value", "overdraft_fee", "cycle_day",
        "audit_grade", "desk_book", "portfolio_value", "collateral_kind",
        "rate_pct", "waiver_reason", "atm_street"}},
      {"weather_stations", "Meteorological observation network and measurements",
       "science", "large",
       {"station_sites", "sensor_arrays", "temperature_readings",
        "rainfall_gauges", "wind_vectors", "humidity_samples", "pressure_logs",
        "storm_alerts", "forecast_models", "calibration_visits",
        "maintenance_tickets", "data_uplinks", "snow_depths", "uv_readings",
        "lightning_strikes", "fog_reports"},
       {"site_elevation_m", "array_serial", "celsius_value", "gauge_mm",
        "bearing_deg", "humidity_pct", "hpa_value", "alert_level",
        "model_name", "visit_day", "ticket_status", "uplink_rate_kbps",
        "depth_cm", "uv_index_value", "strike_amperage", "visibility_m"}},
      {"transit_network", "Urban public transport lines, fares, and operations",
       "infrastructure", "large",
       {"metro_lines", "station_platforms", "train_sets", "bus_fleets",
        "route_maps", "fare_zones", "ticket_gates", "ride_tallies",
        "depot_sheds", "signal_blocks", "track_segments", "timetable_slots",
        "transfer_hubs", "accessibility_ramps", "escalator_units",
        "cleaning_rosters", "incident_logs", "crew_rotations",
        "smartcard_taps", "night_services"},
       {"line_color", "platform_no", "carriage_total", "fleet_depot",
        "map_revision", "zone_ring", "gate_lane", "tally_day", "shed_bay",
        "block_signal_state", "segment_km", "slot_minute", "hub_exit_total",
        "ramp_grade_pct", "unit_serial", "roster_week", "incident_kind",
        "crew_badge_no", "tap_hour", "owl_headway_min"}},
      {"music_label", "Record label catalog, royalties, and touring", "media",
       "large",
       {"artist_rosters", "album_releases", "studio_bookings", "track_masters",
        "royalty_splits", "tour_legs", "merch_lines", "playlist_pitches",
        "radio_spins", "chart_entries", "producer_credits",
        "sample_clearances", "vinyl_pressings", "streaming_payouts",
        "fan_clubs", "press_kits", "demo_submissions"},
       {"artist_name", "release_day", "booking_hours", "master_bpm",
        "split_pct", "leg_city", "merch_sku", "pitch_curator", "spin_total",
        "chart_peak", "producer_name", "clearance_fee", "pressing_total",
        "payout_amount", "club_member_total", "kit_format", "demo_genre"}},
      {"tv_guide", "Television scheduling, programming, and audience figures",
       "media", "large",
       {"channel_lineups", "program_slots", "episode_listings", "season_arcs",
        "rerun_blocks", "ad_breaks", "ratings_curves", "presenter_roster",
        "studio_audiences", "broadcast_regions", "subtitle_tracks",
        "guide_revisions", "premiere_dates", "syndication_deals",
        "viewer_panels"},
       {"channel_no", "slot_start_hour", "episode_no", "arc_label",
        "block_length_min", "break_seconds", "share_pct", "presenter_name",
        "audience_total", "region_band", "subtitle_language", "revision_no",
        "premiere_day", "deal_territory", "panel_size"}},
      {"board_games", "Tabletop publishing catalog, components, and reviews",
       "hobby", "large",
       {"game_titles", "publisher_houses", "designer_credits",
        "component_lists", "rulebook_editions", "expansion_packs",
        "player_counts", "playtime_ranges", "mechanic_tags", "theme_labels",
        "review_scores", "convention_demos", "print_runs", "localization_jobs",
        "tournament_brackets", "collector_editions", "errata_notes",
        "fan_rankings"},
       {"title_text", "publisher_name", "designer_name", "piece_total",
        "edition_no", "pack_theme", "player_min", "player_max",
        "playtime_minutes", "mechanic_name", "review_stars", "demo_table_no",
        "run_copies", "target_language", "bracket_round", "foil_stamp",
        "errata_page", "rank_position"}},
  };
  return specs;
}

namespace {

bool is_int_column(const std::string& name) {
  static const char* kSuffixes[] = {"_id",     "_no",      "_total", "_year",
                                    "_km",     "_kg",      "_cm",    "_mm",
                                    "_m",      "_km2",     "_deg",   "_minute",
                                    "_minutes", "_seconds", "_hour",  "_hours",
                                    "_day",    "_week",    "_size",  "_count",
                                    "_number", "_serial",  "_min",   "_max",
                                    "_level",  "_capacity", "_kbps", "_stage"};
  for (const char* s : kSuffixes) {
    std::size_t n = std::strlen(s);
    if (name.size() >= n && name.compare(name.size() - n, n, s) == 0) return true;
  }
  return false;
}

bool is_real_column(const std::string& name) {
  static const char* kSuffixes[] = {"_amount", "_pct", "_fee",  "_rate",
                                    "_value",  "_kph", "_avg",  "_balance",
                                    "_share"};
  for (const char* s : kSuffixes) {
    std::size_t n = std::strlen(s);
    if (name.size() >= n && name.compare(name.size() - n, n, s) == 0) return true;
  }
  return false;
}

std::string singular_pk(const std::string& table) {
  std::string base = table;
  if (base.size() > 3 && base.back() == 's') base.pop_back();
  return base + "_id";
}

}  // namespace

std::string schema_only_ddl(const SchemaOnlyDbSpec& spec) {
  std::string out;
  for (std::size_t ti = 0; ti < spec.tables.size(); ++ti) {
    const std::string table = spec.tables[ti];
    std::uint64_t h = fnv1a(std::string(spec.id) + "." + table);
    out += "CREATE TABLE " + table + " (\n";
    out += "  " + singular_pk(table) + " INTEGER PRIMARY KEY";

    int ncols = 4 + static_cast<int>(h % 4);
    std::size_t start = (h >> 8) % spec.column_pool.size();
    for (int c = 0; c < ncols; ++c) {
      std::string col = spec.column_pool[(start + c) % spec.column_pool.size()];
      const char* type = is_int_column(col)    ? "INTEGER"
                         : is_real_column(col) ? "REAL"
                                               : "TEXT";
      out += ",\n  " + col + " " + type;
    }
    if (ti > 0 && (h >> 16) % 2 == 0) {
      std::string ref = spec.tables[(h >> 24) % ti];
      std::string ref_pk = singular_pk(ref);
      out += ",\n  " + ref_pk + " INTEGER REFERENCES " + ref + "(" + ref_pk + ")";
    }
    out += "\n);\n";
  }
  return out;
}

}  // namespace dla::fixture_detail
