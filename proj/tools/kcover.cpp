// kcover: build and certify 2-arc-transitive T^d-covers of K_n.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kcover/catalog.hpp"
#include "kcover/report.hpp"

namespace {

using namespace kcover;

struct JobFlags {
  std::string job_file;
  std::size_t n = 4;
  std::string group = "A5";
  std::string x = "(1,2)(3,4)";
  std::string y = "(1,2,3,4,5)";
  std::size_t vertex_cap = kDefaultVertexCap;
  std::size_t enum_cap = kDefaultEnumerationCap;
  std::optional<std::uint64_t> time_cap_ms;
  std::uint64_t seed = 1;
  std::vector<std::string> checks;
  std::string format = "edge-list";
  std::string graph_out;
  std::string structure_out;
};

void add_job_flags(CLI::App *cmd, JobFlags &f) {
  cmd->add_option("--job", f.job_file, "JSON job file; other job flags override its fields");
  cmd->add_option("--n", f.n, "n of K_n");
  cmd->add_option("--group", f.group, "catalog name of T");
  cmd->add_option("--x", f.x, "involution x in cycle notation");
  cmd->add_option("--y", f.y, "element y of odd prime order");
  cmd->add_option("--vertex-cap", f.vertex_cap, "largest coset graph to build");
  cmd->add_option("--enum-cap", f.enum_cap, "largest T to enumerate");
  cmd->add_option("--time-cap-ms", f.time_cap_ms, "wall-clock cap per stage");
  cmd->add_option("--seed", f.seed, "seed for sampled property checks");
  cmd->add_option("--checks", f.checks, "run only these checks")->delimiter(',');
  cmd->add_option("--format", f.format, "graph export format")
      ->check(CLI::IsMember({"edge-list", "adjacency-text"}));
  cmd->add_option("--graph-out", f.graph_out, "write the coset graph here");
  cmd->add_option("--structure-out", f.structure_out, "write the block decomposition here");
}

JobSpec make_spec(CLI::App const *cmd, JobFlags const &f, std::vector<std::string> default_checks) {
  JobSpec spec;
  if (!f.job_file.empty()) {
    std::ifstream in(f.job_file);
    if (!in) throw std::invalid_argument("cannot open job file " + f.job_file);
    spec = job_from_json(nlohmann::json::parse(in));
  } else {
    spec.id = "cli";
    spec.checks = std::move(default_checks);
  }
  auto given = [&](char const *name) { return cmd->count(name) > 0 || f.job_file.empty(); };
  if (given("--n")) spec.n = f.n;
  if (given("--group")) {
    spec.group_name = f.group;
    spec.group.reset();
  }
  if (given("--x")) spec.x = f.x;
  if (given("--y")) spec.y = f.y;
  if (given("--vertex-cap")) spec.caps.vertices = f.vertex_cap;
  if (given("--enum-cap")) spec.caps.enumeration = f.enum_cap;
  if (f.time_cap_ms) spec.caps.stage_ms = f.time_cap_ms;
  if (given("--seed")) spec.seed = f.seed;
  if (!f.checks.empty()) spec.checks = f.checks;
  spec.graph_format = parse_export_format(f.format);
  if (!f.graph_out.empty()) spec.graph_out = f.graph_out;
  if (!f.structure_out.empty()) spec.structure_out = f.structure_out;
  return spec;
}

void write_file(std::string const &path, std::string const &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int emit(JobResult const &result, JobSpec const &spec, std::string const &out_path) {
  auto const text = result.certificate.dump(2) + "\n";
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
  if (spec.graph_out && !result.graph_text.empty()) write_file(*spec.graph_out, result.graph_text);
  if (spec.structure_out && !result.structure_text.empty())
    write_file(*spec.structure_out, result.structure_text);
  std::cerr << summary_table({result});
  return static_cast<int>(result.status);
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Build and certify 2-arc-transitive covers of complete graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string catalog_file;
  std::string out_path;
  bool timings = false;
  app.add_option("--catalog", catalog_file, "extra group catalog (JSON)");
  app.add_option("--out", out_path, "certificate file, or directory for suite");
  app.add_flag("--timings", timings, "record stage runtimes (reports are then not byte-stable)");

  JobFlags flags;
  struct Verb {
    char const *name;
    char const *help;
    std::vector<std::string> checks;
  };
  std::vector<Verb> const verbs{
      {"validate", "check a job without computing", {"validation"}},
      {"construct", "construction identities",
       {"validation", "cycle-classes", "g-identities", "s-element", "kernel", "two-arc"}},
      {"decompose", "kernel decomposition and d",
       {"validation", "kernel", "decomposition", "y-order", "k4-criterion", "k4-cayley"}},
      {"graph", "build the coset graph",
       {"validation", "kernel", "decomposition", "y-order", "coset-graph", "two-arc"}},
      {"quotient", "cover certification",
       {"validation", "kernel", "decomposition", "y-order", "coset-graph", "two-arc", "cover",
        "centralizer"}},
  };
  std::vector<CLI::App *> verb_cmds;
  for (auto const &v : verbs) {
    auto *cmd = app.add_subcommand(v.name, v.help);
    add_job_flags(cmd, flags);
    verb_cmds.push_back(cmd);
  }
  auto *suite_cmd = app.add_subcommand("suite", "run a named suite of jobs");
  std::string suite_name;
  bool parallel = false;
  suite_cmd->add_option("name", suite_name, "paper-examples, lemmas-small-n or extended")->required();
  suite_cmd->add_flag("--parallel", parallel, "run the suite's jobs concurrently");

  CLI11_PARSE(app, argc, argv);

  try {
    auto catalog = GroupCatalog::builtin();
    if (!catalog_file.empty()) catalog.merge(GroupCatalog::from_file(catalog_file));

    if (suite_cmd->parsed()) {
      auto const result = run_suite(suite_name, catalog, timings, parallel);
      auto const table = summary_table(result.jobs);
      if (!out_path.empty()) {
        std::filesystem::create_directories(out_path);
        for (auto const &job : result.jobs)
          write_file(out_path + "/" + job.certificate["job"]["id"].get<std::string>() + ".json",
                     job.certificate.dump(2) + "\n");
        write_file(out_path + "/summary.txt", table);
      }
      std::cout << table << "suite " << suite_name << ": " << status_name(result.status) << "\n";
      return static_cast<int>(result.status);
    }

    for (std::size_t i = 0; i < verbs.size(); ++i) {
      if (!verb_cmds[i]->parsed()) continue;
      auto spec = make_spec(verb_cmds[i], flags, verbs[i].checks);
      spec.timings = timings;
      return emit(run_job(spec, catalog), spec, out_path);
    }
  } catch (std::invalid_argument const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(ExitStatus::invalid);
  } catch (std::exception const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(ExitStatus::fail);
  }
  return 0;
}
