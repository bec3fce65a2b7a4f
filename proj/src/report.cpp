#include <cstdio>
#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "dla/bench.hpp"

namespace dla {

using nlohmann::json;

PriceSheet load_price_sheet(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    throw BenchError("cannot read " + file.string());
  }
  try {
    const json j = json::parse(in);
    PriceSheet prices;
    for (const auto& [model, price] : j.items()) {
      if (!price.is_number()) {
        throw BenchError("price of '" + model + "' is not a number");
      }
      prices[model] = price.get<double>();
    }
    return prices;
  } catch (const json::exception& e) {
    throw BenchError("prices " + file.string() + ": " + e.what());
  }
}

namespace {

struct Acc {
  int n = 0;
  int correct = 0;
  std::int64_t input = 0;
  std::int64_t output = 0;
  std::int64_t turns = 0;
};

ReportCell to_cell(const Acc& a) {
  ReportCell c;
  c.n = a.n;
  c.accuracy = a.n ? static_cast<double>(a.correct) / a.n : 0.0;
  c.mean_input_tokens = a.n ? static_cast<double>(a.input) / a.n : 0.0;
  c.mean_output_tokens = a.n ? static_cast<double>(a.output) / a.n : 0.0;
  c.mean_turns = a.n ? static_cast<double>(a.turns) / a.n : 0.0;
  return c;
}

std::string fmt(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

}  // namespace

Report build_report(const std::vector<RunRecord>& records,
                    const PriceSheet& prices) {
  if (records.empty()) {
    throw BenchError("no records to report on");
  }
  std::map<std::string, std::map<std::string, std::map<std::string, Acc>>> accs;
  std::set<std::string> models;
  std::set<std::string> sources;
  for (const RunRecord& r : records) {
    for (const std::string bucket : {r.difficulty, std::string("all")}) {
      Acc& a = accs[r.method][r.setting][bucket];
      a.n += 1;
      a.correct += r.graded == "correct" ? 1 : 0;
      a.input += r.input_tokens;
      a.output += r.output_tokens;
      a.turns += r.turns;
    }
    models.insert(r.model);
    sources.insert(r.usage_source);
  }

  Report report;
  for (const auto& [method, by_setting] : accs) {
    for (const auto& [setting, by_bucket] : by_setting) {
      for (const auto& [bucket, acc] : by_bucket) {
        report.cells[method][setting][bucket] = to_cell(acc);
      }
    }
  }
  if (sources.size() > 1) {
    report.warnings.push_back(
        "token counts mix estimated and api_reported usage");
  }
  if (models.size() > 1) {
    report.warnings.push_back("records span more than one model; costs omitted");
  }

  const bool have_both = accs.count("agent") && accs.count("direct");
  if (have_both) {
    for (const auto& [setting, by_bucket] : accs.at("agent")) {
      const auto& direct_settings = accs.at("direct");
      auto it = direct_settings.find(setting);
      if (it == direct_settings.end()) continue;
      const double agent_mean = to_cell(by_bucket.at("all")).mean_input_tokens;
      const double direct_mean = to_cell(it->second.at("all")).mean_input_tokens;
      if (direct_mean > 0) {
        report.input_token_reduction[setting] = 1.0 - agent_mean / direct_mean;
      }
    }
  }

  if (models.size() == 1) {
    const std::string& model = *models.begin();
    const auto price_it = prices.find(model);
    if (price_it == prices.end()) {
      report.warnings.push_back("no input-token price for model '" + model +
                                "'; costs omitted");
    } else {
      const double per_token = price_it->second / 1e6;
      for (const auto& [method, by_setting] : accs) {
        for (const auto& [setting, by_bucket] : by_setting) {
          const double mean_input = to_cell(by_bucket.at("all")).mean_input_tokens;
          report.cost_per_1000[method][setting] = mean_input * 1000.0 * per_token;
        }
      }
      if (have_both) {
        for (const auto& [setting, agent_cost] : report.cost_per_1000["agent"]) {
          const auto& direct_costs = report.cost_per_1000["direct"];
          auto it = direct_costs.find(setting);
          if (it != direct_costs.end()) {
            report.cost_delta_per_1000[setting] = it->second - agent_cost;
          }
        }
      }
    }
  }
  return report;
}

std::string render_report(const Report& report) {
  std::string out;
  for (const auto& [method, by_setting] : report.cells) {
    out += "== " + method + " ==\n";
    out += "setting   bucket    n    accuracy  in-tokens  out-tokens  turns\n";
    for (const auto& [setting, by_bucket] : by_setting) {
      for (const char* bucket : {"simple", "complex", "all"}) {
        auto it = by_bucket.find(bucket);
        if (it == by_bucket.end()) continue;
        const ReportCell& c = it->second;
        char line[160];
        std::snprintf(line, sizeof(line), "%-9s %-8s %4d  %7.1f%%  %9.1f  %10.1f  %5.2f\n",
                      setting.c_str(), bucket, c.n, c.accuracy * 100.0,
                      c.mean_input_tokens, c.mean_output_tokens, c.mean_turns);
        out += line;
      }
    }
    out += "\n";
  }
  if (!report.input_token_reduction.empty()) {
    out += "Input-token reduction (agent vs direct):\n";
    for (const auto& [setting, reduction] : report.input_token_reduction) {
      out += "  " + setting + ": " + fmt(reduction * 100.0, 1) + "%\n";
    }
    out += "\n";
  }
  if (!report.cost_per_1000.empty()) {
    out += "Input-token cost per 1000 tasks:\n";
    for (const auto& [method, by_setting] : report.cost_per_1000) {
      for (const auto& [setting, cost] : by_setting) {
        out += "  " + method + " " + setting + ": $" + fmt(cost, 2) + "\n";
      }
    }
    for (const auto& [setting, delta] : report.cost_delta_per_1000) {
      out += "  saved per 1000 tasks (" + setting + "): $" + fmt(delta, 2) + "\n";
    }
    out += "\n";
  }
  for (const std::string& w : report.warnings) {
    out += "warning: " + w + "\n";
  }
  return out;
}

std::string report_json(const Report& report) {
  json jcells = json::object();
  for (const auto& [method, by_setting] : report.cells) {
    for (const auto& [setting, by_bucket] : by_setting) {
      for (const auto& [bucket, c] : by_bucket) {
        jcells[method][setting][bucket] = json{{"n", c.n},
                                               {"accuracy", c.accuracy},
                                               {"mean_input_tokens", c.mean_input_tokens},
                                               {"mean_output_tokens", c.mean_output_tokens},
                                               {"mean_turns", c.mean_turns}};
      }
    }
  }
  return json{{"cells", jcells},
              {"input_token_reduction", report.input_token_reduction},
              {"cost_per_1000", report.cost_per_1000},
              {"cost_delta_per_1000", report.cost_delta_per_1000},
              {"warnings", report.warnings}}
      .dump(2);
}

}  // namespace dla
