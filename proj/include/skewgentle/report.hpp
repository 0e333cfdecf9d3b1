#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "skewgentle/field.hpp"
#include "skewgentle/quiver.hpp"

namespace skewgentle {

inline constexpr int kReportSchemaVersion = 1;

enum class Level { structural, homological, full };
Level parse_level(std::string_view text);
std::string level_name(Level level);

/// "pass", "fail", "vacuous", "skipped" or "cap_exceeded".
struct VerdictBlock {
  std::string name;
  std::string status;
  std::string reason;
  nlohmann::json detail = nlohmann::json::object();
  nlohmann::json signature = nlohmann::json::object();  // field-independent content compared across fields
  double ms = 0;
};

struct FieldRun {
  std::string field;
  std::vector<VerdictBlock> blocks;
};

struct VerifyOptions {
  Level level = Level::full;
  std::vector<FieldSpec> fields{FieldSpec::rationals()};
  int id_cap = 20;
  int tor_max = 4;
  int bimodule_cap = 4;
  int bimodule_max_dim = 30;

  nlohmann::json to_json() const;
};

struct RunReport {
  std::string instance;
  Level level = Level::full;
  VerdictBlock gentle;
  std::vector<FieldRun> fields;
  nlohmann::json agreement = nlohmann::json::object();  // block -> all fields agree
  nlohmann::json hashes = nlohmann::json::object();     // artifact -> FNV-1a hex
  double total_ms = 0;

  nlohmann::json to_json() const;
  int exit_code() const;
};

/// Runs the pipeline on one DSL source. Never throws on verdict or cap
/// problems; they are recorded in the blocks.
RunReport verify_instance(const std::string& instance, const QuiverSpec& spec, const VerifyOptions& options);

/// verify_instance(...).to_json(), memoized in $SKEWGENTLE_CACHE_DIR when set.
nlohmann::json verify_cached(const std::string& instance, const std::string& dsl, const VerifyOptions& options);

/// 0 all expected verdicts hold, 1 some verdict failed or fields disagree,
/// 3 nothing failed but some check hit a cap.
int exit_code_of(const nlohmann::json& report);

/// Human-readable rendering of a report JSON.
std::string render_text(const nlohmann::json& report);

/// Aggregates many reports: status counts per block, failing instances.
nlohmann::json summarize(const std::vector<nlohmann::json>& reports);
std::string render_summary_text(const nlohmann::json& summary);

}  // namespace skewgentle
