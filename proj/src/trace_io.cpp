#include "ufp/trace_io.hpp"

#include <fstream>
#include <sstream>

namespace ufp {

namespace {

[[noreturn]] void bad_trace(const std::string& what) { throw ProtocolError(ErrorCode::MalformedTrace, what); }

std::optional<Round> optional_round(const Json& value) {
  if (value.is_null()) return std::nullopt;
  return value.get<Round>();
}

Json optional_round_json(const std::optional<Round>& value) { return value ? Json(*value) : Json(nullptr); }

}  // namespace

Json scalar_to_json(const Scalar& value) {
  if (value.is_exact() || !value.is_finite()) return value.to_string();
  return value.to_double();
}

Scalar scalar_from_json(const Json& value) {
  if (value.is_number()) return Scalar::real(value.get<double>());
  if (!value.is_string()) bad_trace("scalar must be a string or a number");
  const auto& text = value.get_ref<const std::string&>();
  try {
    if (text == "inf" || text == "-inf" || text == "nan") return Scalar::parse(text, NumericMode::Float);
    return Scalar::parse(text, NumericMode::ExactRational);
  } catch (const std::invalid_argument& e) {
    bad_trace(e.what());
  }
}

std::string status_to_string(const GameStatus& status) {
  return status.running() ? "running" : "bankrupt:" + std::to_string(*status.bankrupt_since);
}

GameStatus status_from_string(const std::string& text) {
  if (text == "running") return {};
  constexpr std::string_view prefix = "bankrupt:";
  if (text.starts_with(prefix)) {
    try {
      std::size_t used = 0;
      const std::string digits = text.substr(prefix.size());
      const Round round = std::stoll(digits, &used);
      if (used == digits.size() && round >= 1) return {round};
    } catch (const std::exception&) {
    }
  }
  bad_trace("unrecognized status '" + text + "'");
}

Json record_to_json(const RoundRecord& r) {
  Json j;
  j["n"] = r.n;
  j["v"] = scalar_to_json(r.variance);
  j["M"] = scalar_to_json(r.stake_linear);
  j["V"] = scalar_to_json(r.stake_quadratic);
  j["x"] = scalar_to_json(r.outcome);
  j["payoff"] = scalar_to_json(r.payoff);
  j["K"] = scalar_to_json(r.capital_after);
  j["S"] = scalar_to_json(r.outcome_sum_after);
  j["triggered"] = r.triggered;
  j["status"] = status_to_string(r.status);
  return j;
}

RoundRecord record_from_json(const Json& j) {
  try {
    RoundRecord r;
    r.n = j.at("n").get<Round>();
    r.variance = scalar_from_json(j.at("v"));
    r.stake_linear = scalar_from_json(j.at("M"));
    r.stake_quadratic = scalar_from_json(j.at("V"));
    r.outcome = scalar_from_json(j.at("x"));
    r.payoff = scalar_from_json(j.at("payoff"));
    r.capital_after = scalar_from_json(j.at("K"));
    r.outcome_sum_after = scalar_from_json(j.at("S"));
    r.triggered = j.at("triggered").get<bool>();
    r.status = status_from_string(j.at("status").get<std::string>());
    return r;
  } catch (const Json::exception& e) {
    bad_trace(e.what());
  }
}

std::string trace_to_jsonl(std::span<const RoundRecord> trace) {
  std::string out;
  for (const auto& r : trace) {
    out += record_to_json(r).dump();
    out += '\n';
  }
  return out;
}

Trace trace_from_jsonl(const std::string& text) {
  Trace trace;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      trace.push_back(record_from_json(Json::parse(line)));
    } catch (const Json::exception& e) {
      bad_trace("line " + std::to_string(line_no) + ": " + e.what());
    } catch (const ProtocolError& e) {
      bad_trace("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return trace;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ProtocolError(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
  out << content;
  out.close();
  if (!out) throw ProtocolError(ErrorCode::IoError, "failed writing " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ProtocolError(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_trace(const std::filesystem::path& path, std::span<const RoundRecord> trace) {
  write_text_file(path, trace_to_jsonl(trace));
}

Trace read_trace(const std::filesystem::path& path) { return trace_from_jsonl(read_text_file(path)); }

Json verdict_to_json(const Verdict& v, const PropertyReport& report) {
  Json j;
  j["horizon"] = v.horizon;
  j["max_capital"] = scalar_to_json(v.max_capital);
  j["final_capital"] = scalar_to_json(v.final_capital);
  j["bankrupt_at"] = optional_round_json(v.bankrupt_at);
  j["trigger_rounds"] = v.trigger_rounds;
  j["kolmogorov_sum_at_horizon"] = scalar_to_json(v.kolmogorov_sum_at_horizon);
  j["min_trigger_jump_ratio"] = v.min_trigger_jump_ratio ? scalar_to_json(*v.min_trigger_jump_ratio) : Json(nullptr);
  j["final_mean_outcome"] = scalar_to_json(v.final_mean_outcome);
  j["post_last_trigger_monotone"] = v.post_last_trigger_monotone;

  Json properties = Json::object();
  for (const auto& r : report.results) {
    Json entry;
    entry["outcome"] = to_string(r.outcome);
    if (r.round) entry["round"] = *r.round;
    if (!r.detail.empty()) entry["detail"] = r.detail;
    properties[std::string(to_string(r.property))] = std::move(entry);
  }
  j["properties"] = std::move(properties);
  return j;
}

std::pair<Verdict, PropertyReport> verdict_from_json(const Json& j) {
  try {
    Verdict v;
    v.horizon = j.at("horizon").get<Round>();
    v.max_capital = scalar_from_json(j.at("max_capital"));
    v.final_capital = scalar_from_json(j.at("final_capital"));
    v.bankrupt_at = optional_round(j.at("bankrupt_at"));
    v.trigger_rounds = j.at("trigger_rounds").get<std::vector<Round>>();
    v.kolmogorov_sum_at_horizon = scalar_from_json(j.at("kolmogorov_sum_at_horizon"));
    if (!j.at("min_trigger_jump_ratio").is_null()) {
      v.min_trigger_jump_ratio = scalar_from_json(j.at("min_trigger_jump_ratio"));
    }
    v.final_mean_outcome = scalar_from_json(j.at("final_mean_outcome"));
    v.post_last_trigger_monotone = j.at("post_last_trigger_monotone").get<bool>();

    PropertyReport report;
    const Json& properties = j.at("properties");
    for (Property p : kAllProperties) {
      const Json& entry = properties.at(std::string(to_string(p)));
      PropertyResult r{p, PropertyOutcome::Pass, std::nullopt, {}};
      const auto outcome = entry.at("outcome").get<std::string>();
      if (outcome == "pass") {
        r.outcome = PropertyOutcome::Pass;
      } else if (outcome == "fail") {
        r.outcome = PropertyOutcome::Fail;
      } else if (outcome == "not_applicable") {
        r.outcome = PropertyOutcome::NotApplicable;
      } else {
        bad_trace("unknown property outcome '" + outcome + "'");
      }
      if (entry.contains("round")) r.round = entry.at("round").get<Round>();
      if (entry.contains("detail")) r.detail = entry.at("detail").get<std::string>();
      report.results.push_back(std::move(r));
    }
    return {std::move(v), std::move(report)};
  } catch (const Json::exception& e) {
    bad_trace(std::string("verdict document: ") + e.what());
  }
}

std::string verdict_document(const Verdict& verdict, const PropertyReport& report) {
  return verdict_to_json(verdict, report).dump(2) + "\n";
}

}  // namespace ufp
