#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "kcover/catalog.hpp"
#include "kcover/coset_graph.hpp"
#include "kcover/graph.hpp"
#include "kcover/group.hpp"

namespace kcover {

inline constexpr std::string_view kVersion = "1.0.0";

/// |Y| up to this bound is enumerated for cross-checks and centralizers.
inline constexpr std::uint64_t kSmallYCap = 100'000;

struct Caps {
  std::size_t enumeration = kDefaultEnumerationCap;
  std::size_t vertices = kDefaultVertexCap;
  std::optional<std::uint64_t> stage_ms;  // per-stage wall-clock cap
};

enum class ExitStatus : int { pass = 0, fail = 1, invalid = 2, capacity = 3 };

std::string_view status_name(ExitStatus s);

/// One cover-construction job. Either `group_name` names a catalog entry or
/// `group` lists generators directly.
struct JobSpec {
  std::string id;
  std::size_t n = 4;
  std::string group_name;
  std::optional<GroupEntry> group;
  std::string x, y;
  std::vector<std::string> checks;  // empty: every applicable check
  Caps caps;
  std::uint64_t seed = 1;
  bool timings = false;
  nlohmann::ordered_json expected = nlohmann::ordered_json::object();  // frozen regression values
  std::optional<std::string> graph_out;
  ExportFormat graph_format = ExportFormat::edge_list;
  std::optional<std::string> structure_out;
};

/// Throws std::invalid_argument on malformed input.
JobSpec job_from_json(nlohmann::json const &doc);
nlohmann::ordered_json job_to_json(JobSpec const &spec);

/// Check identifiers in pipeline order.
std::vector<std::string> const &check_ids();

struct JobResult {
  nlohmann::ordered_json certificate;
  ExitStatus status = ExitStatus::pass;
  std::string structure_text;  // decomposition export, when computed
  std::string graph_text;      // graph export, when requested
};

/// Runs the requested checks in pipeline order. Failures are recorded, not
/// thrown; the status is invalid for a rejected job, otherwise fail if any
/// check failed, otherwise capacity if any stage hit a cap.
JobResult run_job(JobSpec const &spec, GroupCatalog const &catalog);

std::vector<std::string> suite_names();
/// Throws std::invalid_argument for an unknown suite.
std::vector<JobSpec> suite_jobs(std::string_view name);

struct SuiteResult {
  std::vector<JobResult> jobs;
  ExitStatus status = ExitStatus::pass;
};

SuiteResult run_suite(std::string_view name, GroupCatalog const &catalog, bool timings = false,
                      bool parallel = false);

/// One line per job and check: job, check, status, key values.
std::string summary_table(std::vector<JobResult> const &jobs);

/// Combined status: invalid beats fail beats capacity beats pass.
ExitStatus combine(ExitStatus a, ExitStatus b);

}  // namespace kcover
