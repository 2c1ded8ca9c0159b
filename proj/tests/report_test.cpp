#include <gtest/gtest.h>

#include "kcover/report.hpp"

using namespace kcover;

namespace {

JobSpec a5_spec(std::vector<std::string> checks, char const *y = "(1,2,3,4,5)") {
  JobSpec s;
  s.id = "t";
  s.group_name = "A5";
  s.x = "(1,2)(3,4)";
  s.y = y;
  s.checks = std::move(checks);
  return s;
}

nlohmann::ordered_json const *find_check(nlohmann::ordered_json const &cert, std::string const &id) {
  for (auto const &c : cert.at("checks"))
    if (c.at("id") == id) return &c;
  return nullptr;
}

}  // namespace

TEST(Report, JobJsonRoundTrip) {
  auto spec = a5_spec({"kernel", "decomposition"});
  spec.caps.stage_ms = 500;
  spec.expected["d"] = 1;
  spec.graph_format = ExportFormat::adjacency_text;
  auto const doc = nlohmann::json::parse(job_to_json(spec).dump());
  auto const again = job_from_json(doc);
  EXPECT_EQ(job_to_json(again).dump(), job_to_json(spec).dump());
  EXPECT_THROW(job_from_json(nlohmann::json::parse(R"({"n": 4})")), std::invalid_argument);
  EXPECT_THROW(job_from_json(nlohmann::json::array()), std::invalid_argument);
}

TEST(Report, StatusCombination) {
  EXPECT_EQ(combine(ExitStatus::pass, ExitStatus::capacity), ExitStatus::capacity);
  EXPECT_EQ(combine(ExitStatus::fail, ExitStatus::capacity), ExitStatus::fail);
  EXPECT_EQ(combine(ExitStatus::fail, ExitStatus::invalid), ExitStatus::invalid);
  EXPECT_EQ(status_name(ExitStatus::capacity), "capacity");
}

TEST(Report, InvalidInputExitsWithTwo) {
  auto const cat = GroupCatalog::builtin();
  auto spec = a5_spec({}, "(1,2)(3,4)");
  EXPECT_EQ(run_job(spec, cat).status, ExitStatus::invalid);
  spec = a5_spec({});
  spec.n = 9;
  EXPECT_EQ(run_job(spec, cat).status, ExitStatus::invalid);
  spec = a5_spec({"no-such-check"});
  EXPECT_EQ(run_job(spec, cat).status, ExitStatus::invalid);
  spec = a5_spec({});
  spec.group_name = "M24";
  EXPECT_EQ(run_job(spec, cat).status, ExitStatus::invalid);
}

TEST(Report, CertificateShape) {
  auto const r = run_job(a5_spec({"validation", "kernel", "decomposition", "y-order", "k4-criterion"}),
                         GroupCatalog::builtin());
  ASSERT_EQ(r.status, ExitStatus::pass) << r.certificate.dump(2);
  auto const &cert = r.certificate;
  EXPECT_EQ(cert.at("environment").at("version"), std::string(kVersion));
  EXPECT_EQ(cert.at("exit_code"), 0);
  auto const *dec = find_check(cert, "decomposition");
  ASSERT_TRUE(dec);
  EXPECT_EQ(dec->at("values").at("d"), 1);
  EXPECT_FALSE(dec->contains("runtime_ms"));
  auto const *yo = find_check(cert, "y-order");
  ASSERT_TRUE(yo);
  EXPECT_EQ(yo->at("values").at("y_order"), "1440");
  for (auto const &c : cert.at("checks")) EXPECT_FALSE(c.at("claim").get<std::string>().empty());
  EXPECT_FALSE(r.structure_text.empty());
}

TEST(Report, ByteDeterministicWithoutTimings) {
  auto const cat = GroupCatalog::builtin();
  auto const spec = a5_spec({"validation", "cycle-classes", "g-identities", "s-element", "kernel",
                             "decomposition", "y-order", "k4-criterion", "k4-cayley", "two-arc"},
                            "(1,5,3)");
  auto const a = run_job(spec, cat).certificate.dump(2);
  auto const b = run_job(spec, cat).certificate.dump(2);
  EXPECT_EQ(a, b);
}

TEST(Report, TimingsAreOptIn) {
  auto spec = a5_spec({"validation"});
  spec.timings = true;
  auto const r = run_job(spec, GroupCatalog::builtin());
  EXPECT_TRUE(find_check(r.certificate, "validation")->contains("runtime_ms"));
}

TEST(Report, RegressionMismatchFails) {
  auto spec = a5_spec({"kernel", "decomposition", "regression"});
  spec.expected["d"] = 3;
  auto const r = run_job(spec, GroupCatalog::builtin());
  EXPECT_EQ(r.status, ExitStatus::fail);
  spec.expected["d"] = 1;
  EXPECT_EQ(run_job(spec, GroupCatalog::builtin()).status, ExitStatus::pass);
}

TEST(Report, OversizedGraphIsCapacity) {
  auto spec = a5_spec({"coset-graph"}, "(1,5,3)");
  spec.caps.vertices = 1000;
  EXPECT_EQ(run_job(spec, GroupCatalog::builtin()).status, ExitStatus::capacity);
}

TEST(Report, WorkedExamplesSuitePasses) {
  auto const r = run_suite("paper-examples", GroupCatalog::builtin());
  EXPECT_EQ(r.status, ExitStatus::pass);
  EXPECT_EQ(r.jobs.size(), suite_jobs("paper-examples").size());
  auto const table = summary_table(r.jobs);
  EXPECT_NE(table.find("A5-d1"), std::string::npos);
  EXPECT_THROW(suite_jobs("nope"), std::invalid_argument);
}
