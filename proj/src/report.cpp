#include "kcover/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <future>
#include <iomanip>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "kcover/construction.hpp"
#include "kcover/k4_criteria.hpp"
#include "kcover/n_cycles.hpp"
#include "kcover/schreier.hpp"
#include "kcover/structure_checks.hpp"
#include "kcover/subdirect.hpp"

namespace kcover {

using nlohmann::ordered_json;
using BigInt = boost::multiprecision::cpp_int;

std::string_view status_name(ExitStatus s) {
  switch (s) {
    case ExitStatus::pass: return "pass";
    case ExitStatus::fail: return "fail";
    case ExitStatus::invalid: return "invalid";
    case ExitStatus::capacity: return "capacity";
  }
  return "unknown";
}

ExitStatus combine(ExitStatus a, ExitStatus b) {
  auto rank = [](ExitStatus s) {
    switch (s) {
      case ExitStatus::invalid: return 3;
      case ExitStatus::fail: return 2;
      case ExitStatus::capacity: return 1;
      case ExitStatus::pass: return 0;
    }
    return 0;
  };
  return rank(a) >= rank(b) ? a : b;
}

std::vector<std::string> const &check_ids() {
  static std::vector<std::string> const ids{
      "validation", "cycle-classes", "g-identities", "s-element", "kernel",
      "decomposition", "y-order", "k4-criterion", "k4-cayley", "coset-graph",
      "two-arc", "cover", "centralizer", "regression"};
  return ids;
}

namespace {

std::map<std::string_view, std::string_view> const kClaims{
    {"validation", "T = <x, y> with |x| = 2, |y| an odd prime and 4 <= n <= 8"},
    {"cycle-classes",
     "the n-cycles split into O_1..O_{n-1} of size (n-2)!, Sym{3..n} is regular on each O_k "
     "and (1,2) maps O_k onto O_{n-k}"},
    {"g-identities", "g^2 = 1, g commutes with every element of L = Sym{3..n}, and H cap H^g = L "
                     "of order (n-2)!"},
    {"s-element", "s = (g(2,3))^3 lies in the base group with s(alpha) = y^2 x and "
                  "s(alpha^-1) = y^-2 x generating T, and s(beta) = 1 for n >= 7"},
    {"kernel", "M = Y cap T^A is generated by the Schreier generators of Y -> S_n"},
    {"decomposition", "M = T^d for an S_n-invariant block partition of A, d divides (n-1)!, and "
                      "d >= ceil(C(n, n/2) / 2) for n >= 7"},
    {"y-order", "|M| = |T|^d and |Y| = |T|^d n!"},
    {"k4-criterion", "for n = 4, d = 1 iff Phi1 and Phi2 are non-empty, d = 3 iff only Phi2 is "
                     "empty, d = 6 iff Phi1 is empty"},
    {"k4-cayley", "for n = 4, s1 = g h2, s2 = h2 h1 g h1, s3 = h2 h1^-1 g h1^-1 and "
                  "t1, t2, t3 match the stated tuples, and <t1, t2, t3> = M"},
    {"coset-graph", "Cos(Y, H, HgH) has |Y : H| vertices, valency n-1 and is connected"},
    {"two-arc", "H is 2-transitive on [H : H cap H^g], so the graph is 2-arc-transitive"},
    {"cover", "the normal quotient by M is K_n and every vertex sees its neighbors in distinct "
              "M-orbits"},
    {"centralizer", "C_Y(M) meets M trivially, and the quotient by C_Y(M) is recorded with its "
                    "invariants"},
    {"regression", "computed values equal the frozen regression values"},
};

ordered_json caps_json(Caps const &caps) {
  ordered_json j;
  j["enumeration"] = caps.enumeration;
  j["vertices"] = caps.vertices;
  j["stage_ms"] = caps.stage_ms ? ordered_json(*caps.stage_ms) : ordered_json(nullptr);
  return j;
}

std::string big(BigInt const &v) { return v.str(); }

ordered_json blocks_json(SubdirectStructure const &s, bool k4_listing) {
  ordered_json out = ordered_json::array();
  std::vector<std::vector<std::size_t>> blocks;
  for (auto const &block : s.blocks) {
    std::vector<std::size_t> b;
    for (auto i : block) {
      if (k4_listing) {
        auto const pos = std::find(kK4ListingOrder.begin(), kK4ListingOrder.end(), i) -
                         kK4ListingOrder.begin();
        b.push_back(static_cast<std::size_t>(pos) + 1);
      } else {
        b.push_back(i + 1);
      }
    }
    std::sort(b.begin(), b.end());
    blocks.push_back(std::move(b));
  }
  std::sort(blocks.begin(), blocks.end());
  for (auto const &b : blocks) out.push_back(b);
  return out;
}

class Pipeline {
 public:
  Pipeline(JobSpec const &spec, GroupCatalog const &catalog) : spec_(spec), catalog_(catalog) {}

  JobResult run();

 private:
  struct Record {
    std::string id;
    ordered_json inputs = ordered_json::object();
    ordered_json values = ordered_json::object();
    std::string status = "pass";
    std::string note;
    double ms = 0;
  };

  bool requested(std::string const &id) const {
    return spec_.checks.empty() ||
           std::find(spec_.checks.begin(), spec_.checks.end(), id) != spec_.checks.end();
  }
  bool explicitly_requested(std::string const &id) const {
    return std::find(spec_.checks.begin(), spec_.checks.end(), id) != spec_.checks.end();
  }

  Deadline stage_deadline() const {
    return spec_.caps.stage_ms ? Deadline::after(std::chrono::milliseconds(*spec_.caps.stage_ms))
                               : Deadline();
  }

  /// Runs `body` as one certificate record; exceptions become failed records.
  void stage(std::string const &id, std::function<void(Record &)> const &body);
  void skip(std::string const &id, std::string note);

  bool validate();
  void ensure_kernel();
  void ensure_structure();
  void ensure_graph(Record &r);

  JobSpec const &spec_;
  GroupCatalog const &catalog_;
  std::vector<Record> records_;
  bool truncated_ = false;
  ordered_json observed_ = ordered_json::object();

  std::optional<ConstructionJob> job_;
  std::optional<Construction> c_;
  std::optional<std::vector<WreathElement>> kernel_;
  std::optional<SubdirectStructure> structure_;
  std::vector<Tuple> tuples_;
  std::optional<BigInt> y_order_;
  std::optional<CosetGraph> graph_;
  std::string structure_text_;
  std::string graph_text_;
};

void Pipeline::skip(std::string const &id, std::string note) {
  Record r;
  r.id = id;
  r.status = "skipped";
  r.note = std::move(note);
  records_.push_back(std::move(r));
}

void Pipeline::stage(std::string const &id, std::function<void(Record &)> const &body) {
  if (!requested(id)) return;
  if (truncated_) {
    skip(id, "truncated after an earlier stage hit a cap");
    return;
  }
  Record r;
  r.id = id;
  auto const start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (PartialBuild const &e) {
    r.status = "capacity";
    r.note = e.what();
    r.values["discovered"] = e.stats.discovered;
    r.values["expanded"] = e.stats.expanded;
    r.values["frontier"] = e.stats.frontier;
  } catch (CapacityExceeded const &e) {
    r.status = "capacity";
    r.note = e.what();
  } catch (std::exception const &e) {
    r.status = "fail";
    r.note = e.what();
  }
  r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (spec_.caps.stage_ms && r.ms > static_cast<double>(*spec_.caps.stage_ms) && r.status != "fail") {
    r.status = "capacity";
    r.note = "stage exceeded the time cap of " + std::to_string(*spec_.caps.stage_ms) + " ms";
  }
  if (r.status == "capacity") truncated_ = true;
  records_.push_back(std::move(r));
}

bool Pipeline::validate() {
  Record r;
  r.id = "validation";
  r.inputs["n"] = spec_.n;
  r.inputs["group"] = spec_.group ? ordered_json("explicit") : ordered_json(spec_.group_name);
  r.inputs["x"] = spec_.x;
  r.inputs["y"] = spec_.y;
  std::vector<std::string> problems;
  try {
    GroupHandle group = spec_.group ? make_group(*spec_.group, spec_.id)
                                    : catalog_.group(spec_.group_name);
    auto const x = parse_cycles(spec_.x, group.degree());
    auto const y = parse_cycles(spec_.y, group.degree());
    ConstructionJob job{spec_.n, group, x, y};
    auto report = validate_job(job);
    problems = report.problems;
    r.values["group_order"] = group.order();
    r.values["order_x"] = order_of(x);
    r.values["order_y"] = order_of(y);
    if (problems.empty()) job_ = std::move(job);
  } catch (std::exception const &e) {
    problems.push_back(e.what());
  }
  r.values["problems"] = problems;
  r.status = problems.empty() ? "pass" : "invalid";
  if (!problems.empty()) r.note = problems.front();
  records_.push_back(std::move(r));
  return problems.empty();
}

void Pipeline::ensure_kernel() {
  if (kernel_) return;
  auto const &ctx = c_->wreath();
  kernel_ = schreier_kernel_generators(
      ctx, std::span<WreathElement const>(c_->y_generators),
      [](WreathElement const &e) { return e.sigma; }, ctx.n(), factorial(ctx.n()));
  for (auto const &z : *kernel_) tuples_.push_back(z.base);
}

void Pipeline::ensure_structure() {
  if (structure_) return;
  ensure_kernel();
  structure_ = subdirect_decompose(c_->wreath().pool(), tuples_);
  structure_text_ = export_structure(*structure_);
  BigInt t_order = job_->group.order();
  y_order_ = boost::multiprecision::pow(t_order, static_cast<unsigned>(structure_->d())) *
             BigInt(factorial(spec_.n));
}

void Pipeline::ensure_graph(Record &r) {
  if (graph_) return;
  ensure_structure();
  BigInt const h_order = factorial(spec_.n - 1);
  BigInt const predicted = *y_order_ / h_order;
  r.values["predicted_vertices"] = big(predicted);
  if (predicted > BigInt(spec_.caps.vertices))
    throw CapacityExceeded("predicted " + big(predicted) + " vertices exceed the vertex cap " +
                           std::to_string(spec_.caps.vertices));
  auto const h = c_->h_wreath_elements();
  BuildOptions options;
  options.vertex_cap = spec_.caps.vertices;
  options.predicted_vertices = static_cast<std::uint64_t>(predicted);
  options.deadline = stage_deadline();
  options.provenance = spec_.id;
  graph_ = build_coset_graph(c_->wreath(), std::span<WreathElement const>(h), c_->g, options);
}

/// Whether the graph fits, without building it.
bool graph_within_caps(BigInt const &y_order, std::size_t n, std::size_t cap) {
  return y_order / BigInt(factorial(n - 1)) <= BigInt(cap);
}

JobResult Pipeline::run() {
  JobResult result;
  bool const valid = validate();
  if (valid) {
    try {
      c_ = build_construction(*job_, spec_.caps.enumeration);
    } catch (std::exception const &e) {
      records_.back().status = "invalid";
      records_.back().note = e.what();
    }
  }
  if (!valid || !c_) {
    result.status = ExitStatus::invalid;
  } else {
    auto const n = spec_.n;
    auto const &ctx = c_->wreath();
    auto const &pool = ctx.pool();

    stage("cycle-classes", [&](Record &r) {
      auto const rep = cycle_class_check(n);
      r.values["class_sizes"] = rep.class_sizes;
      r.values["partition"] = rep.partition;
      r.values["sizes_equal"] = rep.sizes_equal;
      r.values["l_regular"] = rep.l_regular;
      r.values["delta_swaps"] = rep.delta_swaps;
      if (!rep.ok()) r.status = "fail";
    });

    stage("g-identities", [&](Record &r) {
      auto const rep = g_identity_check(*c_);
      r.values["g_squared_trivial"] = rep.g_squared_trivial;
      r.values["l_commutes"] = rep.l_commutes;
      r.values["intersection_is_l"] = rep.intersection_is_l;
      r.values["intersection_order"] = rep.intersection_order;
      r.values["expected_order"] = rep.expected_order;
      if (!rep.ok()) r.status = "fail";
    });

    stage("s-element", [&](Record &r) {
      auto const rep = s_element_check(*c_);
      r.values["in_base"] = rep.in_base;
      r.values["s_alpha"] = rep.s_alpha;
      r.values["s_alpha_inv"] = rep.s_alpha_inv;
      r.values["s_alpha_is_y2x"] = rep.s_alpha_ok;
      r.values["s_alpha_inv_is_ym2x"] = rep.s_alpha_inv_ok;
      r.values["generated_order"] = rep.generated_order;
      if (rep.beta_checked) r.values["s_beta_trivial"] = rep.s_beta_trivial;
      if (!rep.ok()) r.status = "fail";
    });

    stage("kernel", [&](Record &r) {
      ensure_kernel();
      r.values["schreier_generators"] = kernel_->size();
      bool all_base = std::all_of(kernel_->begin(), kernel_->end(),
                                  [](WreathElement const &z) { return z.in_base(); });
      r.values["all_in_base"] = all_base;
      if (!all_base) r.status = "fail";
    });

    stage("decomposition", [&](Record &r) {
      ensure_structure();
      auto const &s = *structure_;
      auto const rep = d_report(s, n);
      r.values["d"] = rep.d;
      observed_["d"] = rep.d;
      r.values["arity"] = rep.arity;
      r.values["block_size"] = s.blocks.front().size();
      r.values["divides_arity"] = rep.divides_arity;
      r.values["quotient"] = rep.quotient;
      if (rep.bound_applicable) {
        r.values["bound"] = rep.bound;
        r.values["bound_ok"] = rep.bound_ok;
      }
      bool invariant = true;
      for (auto const &t : c_->y_generators) {
        auto const row = ctx.induced(t.sigma);
        if (!blocks_invariant_under(s, row)) invariant = false;
      }
      r.values["sn_invariant"] = invariant;
      if (n == 4) {
        r.values["blocks_listing"] = blocks_json(s, true);
        observed_["blocks_listing"] = r.values["blocks_listing"];
      } else if (s.d() <= 64) {
        r.values["blocks"] = blocks_json(s, false);
      }

      // Multiplicativity of every linking map on sampled pairs.
      std::mt19937_64 rng(spec_.seed);
      std::size_t samples = 0;
      bool multiplicative = true;
      if (pool.enumerated()) {
        std::uniform_int_distribution<ElemId> pick(0, static_cast<ElemId>(pool.group().order() - 1));
        for (auto const &link : s.links) {
          if (!link) continue;
          for (int i = 0; i < 32; ++i, ++samples) {
            auto const a = pick(rng), b = pick(rng);
            if (apply(*link, pool, pool.multiply(a, b)) !=
                pool.multiply(apply(*link, pool, a), apply(*link, pool, b)))
              multiplicative = false;
          }
        }
      }
      r.inputs["seed"] = spec_.seed;
      r.values["multiplicativity_samples"] = samples;
      r.values["multiplicative"] = multiplicative;

      auto const kept = prune_generators(pool, tuples_, s);
      r.values["pruned_generators"] = kept.size();
      if (!rep.ok() || !invariant || !multiplicative) r.status = "fail";
    });

    stage("y-order", [&](Record &r) {
      ensure_structure();
      BigInt const m = boost::multiprecision::pow(BigInt(job_->group.order()),
                                                  static_cast<unsigned>(structure_->d()));
      r.values["t_order"] = job_->group.order();
      r.values["m_order"] = big(m);
      r.values["y_order"] = big(*y_order_);
      r.values["y_order_digits"] = big(*y_order_).size();
      observed_["m_order"] = big(m);
      observed_["y_order"] = big(*y_order_);
      if (*y_order_ <= BigInt(kSmallYCap)) {
        auto const y = closure(ctx, std::span<WreathElement const>(c_->y_generators), kSmallYCap + 1);
        r.values["enumerated_order"] = y ? y->size() : 0;
        if (!y || BigInt(y->size()) != *y_order_) r.status = "fail";
      }
    });

    if (n == 4) {
      stage("k4-criterion", [&](Record &r) {
        ensure_structure();
        auto const crit = k4_d_criterion(job_->group, job_->x, job_->y);
        auto phi_json = [](PhiCheck const &p) {
          ordered_json j;
          j["empty"] = p.empty();
          j["route"] = p.route;
          j["cross_checked"] = p.cross_checked;
          if (p.witness) {
            std::vector<std::string> images;
            for (auto const &img : p.witness->generator_images()) images.push_back(img.to_cycles());
            j["generator_images"] = images;
            if (p.witness->conjugator()) j["conjugator"] = p.witness->conjugator()->to_cycles();
          }
          return j;
        };
        r.values["phi1"] = phi_json(crit.phi1);
        observed_["phi1_empty"] = crit.phi1.empty();
        if (crit.phi2) {
          r.values["phi2"] = phi_json(*crit.phi2);
          observed_["phi2_empty"] = crit.phi2->empty();
        }
        r.values["criterion_d"] = crit.d;
        r.values["decomposition_d"] = structure_->d();
        if (crit.d != structure_->d()) r.status = "fail";
      });

      stage("k4-cayley", [&](Record &r) {
        ensure_structure();
        auto const lit = k4_literal_check(*c_, *job_);
        r.values["literal_mismatches"] = lit.mismatches;
        auto const k = k4_cayley_generators(*c_);
        std::vector<Tuple> t_tuples{k.t1.base, k.t2.base, k.t3.base};
        auto const t_structure = subdirect_decompose(pool, t_tuples);
        bool const equal = structures_equal(*structure_, t_structure, tuples_, t_tuples, pool);
        r.values["structures_equal"] = equal;
        r.values["t_d"] = t_structure.d();
        if (!lit.ok() || !equal) r.status = "fail";
      });
    }

    bool graph_fits = false;
    if (c_ && (requested("coset-graph") || requested("cover") || requested("centralizer"))) {
      try {
        ensure_structure();
        graph_fits = graph_within_caps(*y_order_, n, spec_.caps.vertices);
      } catch (std::exception const &) {
        graph_fits = true;  // let the stage report the failure
      }
    }
    auto graph_stage = [&](std::string const &id, std::function<void(Record &)> const &body) {
      if (!requested(id)) return;
      if (!graph_fits && !explicitly_requested(id)) {
        skip(id, "predicted vertex count exceeds the vertex cap of " +
                     std::to_string(spec_.caps.vertices));
        return;
      }
      stage(id, body);
    };

    graph_stage("coset-graph", [&](Record &r) {
      ensure_graph(r);
      auto const &g = *graph_;
      auto const inv = graph_invariants(g.graph, true);
      BigInt const index = *y_order_ / BigInt(factorial(n - 1));
      auto const conn = verify_connected(g, static_cast<std::uint64_t>(index));
      r.values["vertices"] = g.order();
      r.values["valency"] = inv.valency ? ordered_json(*inv.valency) : ordered_json(nullptr);
      r.values["expected_valency"] = n - 1;
      r.values["edges"] = inv.edges;
      r.values["arcs"] = 2 * inv.edges;
      r.values["graph_side"] = conn.graph_side;
      r.values["order_side"] = conn.order_side;
      r.values["connected"] = conn.connected;
      r.values["components"] = inv.components;
      r.values["girth"] = inv.girth ? ordered_json(*inv.girth) : ordered_json(nullptr);
      observed_["vertices"] = g.order();
      observed_["valency"] = r.values["valency"];
      observed_["girth"] = r.values["girth"];
      if (spec_.graph_out) graph_text_ = export_graph(g.graph, spec_.graph_format);
      if (!conn.connected || inv.valency != n - 1 || BigInt(g.order()) * BigInt(factorial(n - 1)) != *y_order_)
        r.status = "fail";
    });

    stage("two-arc", [&](Record &r) {
      auto const h = c_->h_wreath_elements();
      auto const rep = verify_2at(ctx, std::span<WreathElement const>(h), c_->g);
      r.values["h_order"] = rep.h_order;
      r.values["intersection_order"] = rep.intersection_order;
      r.values["valency"] = rep.valency;
      r.values["two_transitive"] = rep.two_transitive;
      if (!rep.two_transitive || rep.valency != n - 1 || rep.intersection_order != factorial(n - 2))
        r.status = "fail";
    });

    graph_stage("cover", [&](Record &r) {
      ensure_graph(r);
      auto const h = c_->h_wreath_elements();
      auto const cert = quotient_graph(ctx, std::span<WreathElement const>(h), *graph_,
                                       std::span<WreathElement const>(*kernel_));
      bool const complete = cert.quotient == complete_graph(n);
      r.values["quotient_vertices"] = cert.quotient_order();
      r.values["quotient_is_complete"] = complete;
      r.values["local_bijective"] = cert.local_bijective;
      r.values["orbit_size"] = cert.orbit_size;
      BigInt const m = boost::multiprecision::pow(BigInt(job_->group.order()),
                                                  static_cast<unsigned>(structure_->d()));
      r.values["transformation_group_order"] = big(m);
      auto const qv = cert.quotient.valency();
      r.values["quotient_valency"] = qv ? ordered_json(*qv) : ordered_json(nullptr);
      if (!complete || !cert.local_bijective || BigInt(cert.orbit_size) != m ||
          qv != std::optional<std::size_t>(cert.cover_valency))
        r.status = "fail";
    });

    bool const y_small = y_order_ && *y_order_ <= BigInt(kSmallYCap);
    if (requested("centralizer") && !y_small && !explicitly_requested("centralizer")) {
      skip("centralizer", "|Y| exceeds the enumeration bound " + std::to_string(kSmallYCap));
    } else {
      graph_stage("centralizer", [&](Record &r) {
        ensure_graph(r);
        if (!y_small) throw CapacityExceeded("|Y| exceeds the enumeration bound " + std::to_string(kSmallYCap));
        auto const y = closure(ctx, std::span<WreathElement const>(c_->y_generators), kSmallYCap + 1);
        if (!y) throw CapacityExceeded("Y does not fit the enumeration bound");
        auto const cent = centralizer_in_small_Y(ctx, std::span<WreathElement const>(*y),
                                                 std::span<WreathElement const>(*kernel_));
        auto const meet = std::count_if(cent.begin(), cent.end(),
                                        [](WreathElement const &u) { return u.in_base(); });
        r.values["centralizer_order"] = cent.size();
        r.values["meets_m_trivially"] = meet == 1;
        observed_["centralizer_order"] = cent.size();
        auto const h = c_->h_wreath_elements();
        auto const cert = quotient_graph(ctx, std::span<WreathElement const>(h), *graph_,
                                         std::span<WreathElement const>(cent));
        auto const inv = graph_invariants(cert.quotient);
        ordered_json q;
        q["vertices"] = inv.order;
        q["valency"] = inv.valency ? ordered_json(*inv.valency) : ordered_json(nullptr);
        q["girth"] = inv.girth ? ordered_json(*inv.girth) : ordered_json(nullptr);
        q["local_bijective"] = cert.local_bijective;
        // The Petersen graph is the only cubic graph of girth 5 on 10 vertices.
        q["petersen"] = inv.order == 10 && inv.valency == 3u && inv.girth == 5u;
        r.values["quotient"] = q;
        observed_["centralizer_quotient"] = q;
        if (meet != 1 || !cert.local_bijective) r.status = "fail";
      });
    }

    if (!spec_.expected.empty()) {
      stage("regression", [&](Record &r) {
        r.inputs["expected"] = spec_.expected;
        ordered_json mismatches = ordered_json::array();
        for (auto const &[key, want] : spec_.expected.items()) {
          auto const found = observed_.find(key);
          if (found == observed_.end()) {
            mismatches.push_back(key + ": not computed");
          } else if (*found != want) {
            mismatches.push_back(key + ": expected " + want.dump() + ", got " + found->dump());
          }
        }
        r.values["mismatches"] = mismatches;
        if (!mismatches.empty()) r.status = "fail";
      });
    }

    for (auto const &rec : records_) {
      if (rec.status == "fail")
        result.status = combine(result.status, ExitStatus::fail);
      else if (rec.status == "capacity")
        result.status = combine(result.status, ExitStatus::capacity);
    }
  }

  ordered_json cert;
  cert["job"] = job_to_json(spec_);
  ordered_json env;
  env["version"] = kVersion;
  env["seed"] = spec_.seed;
  env["caps"] = caps_json(spec_.caps);
  cert["environment"] = env;
  ordered_json checks = ordered_json::array();
  for (auto const &rec : records_) {
    ordered_json j;
    j["id"] = rec.id;
    j["claim"] = kClaims.at(rec.id);
    j["inputs"] = rec.inputs;
    j["values"] = rec.values;
    j["status"] = rec.status;
    if (!rec.note.empty()) j["note"] = rec.note;
    if (spec_.timings) j["runtime_ms"] = std::round(rec.ms * 1000) / 1000;
    checks.push_back(std::move(j));
  }
  cert["checks"] = std::move(checks);
  cert["unverified"] = {
      "full isomorphism type of Y; only |Y|, |M|, d, |C_Y(M)| and quotient invariants are "
      "certified"};
  cert["status"] = status_name(result.status);
  cert["exit_code"] = static_cast<int>(result.status);
  result.certificate = std::move(cert);
  result.structure_text = std::move(structure_text_);
  result.graph_text = std::move(graph_text_);
  return result;
}

}  // namespace

JobResult run_job(JobSpec const &spec, GroupCatalog const &catalog) {
  for (auto const &id : spec.checks)
    if (std::find(check_ids().begin(), check_ids().end(), id) == check_ids().end()) {
      JobResult r;
      r.status = ExitStatus::invalid;
      ordered_json cert;
      cert["job"] = job_to_json(spec);
      cert["status"] = status_name(r.status);
      cert["error"] = "unknown check '" + id + "'";
      cert["exit_code"] = static_cast<int>(r.status);
      r.certificate = std::move(cert);
      return r;
    }
  return Pipeline(spec, catalog).run();
}

JobSpec job_from_json(nlohmann::json const &doc) {
  if (!doc.is_object()) throw std::invalid_argument("job must be a JSON object");
  JobSpec s;
  try {
    s.id = doc.value("id", std::string("job"));
    s.n = doc.at("n").get<std::size_t>();
    auto const &g = doc.at("group");
    if (g.is_string()) {
      s.group_name = g.get<std::string>();
    } else {
      GroupEntry e;
      e.degree = g.at("degree").get<std::size_t>();
      e.generators = g.at("generators").get<std::vector<std::string>>();
      s.group = std::move(e);
    }
    s.x = doc.at("x").get<std::string>();
    s.y = doc.at("y").get<std::string>();
    if (doc.contains("checks")) s.checks = doc.at("checks").get<std::vector<std::string>>();
    if (doc.contains("caps")) {
      auto const &c = doc.at("caps");
      s.caps.enumeration = c.value("enumeration", s.caps.enumeration);
      s.caps.vertices = c.value("vertices", s.caps.vertices);
      if (c.contains("stage_ms") && !c.at("stage_ms").is_null())
        s.caps.stage_ms = c.at("stage_ms").get<std::uint64_t>();
    }
    s.seed = doc.value("seed", s.seed);
    s.timings = doc.value("timings", false);
    if (doc.contains("expected")) s.expected = ordered_json::parse(doc.at("expected").dump());
    if (doc.contains("graph_out")) s.graph_out = doc.at("graph_out").get<std::string>();
    if (doc.contains("graph_format"))
      s.graph_format = parse_export_format(doc.at("graph_format").get<std::string>());
    if (doc.contains("structure_out")) s.structure_out = doc.at("structure_out").get<std::string>();
  } catch (nlohmann::json::exception const &e) {
    throw std::invalid_argument(std::string("malformed job: ") + e.what());
  }
  return s;
}

ordered_json job_to_json(JobSpec const &s) {
  ordered_json j;
  j["id"] = s.id;
  j["n"] = s.n;
  if (s.group) {
    ordered_json g;
    g["degree"] = s.group->degree;
    g["generators"] = s.group->generators;
    j["group"] = g;
  } else {
    j["group"] = s.group_name;
  }
  j["x"] = s.x;
  j["y"] = s.y;
  j["checks"] = s.checks;
  j["caps"] = caps_json(s.caps);
  j["seed"] = s.seed;
  if (!s.expected.empty()) j["expected"] = s.expected;
  return j;
}

namespace {

JobSpec make_job(std::string id, std::size_t n, std::string group, std::string x, std::string y,
                 std::vector<std::string> checks = {}) {
  JobSpec s;
  s.id = std::move(id);
  s.n = n;
  s.group_name = std::move(group);
  s.x = std::move(x);
  s.y = std::move(y);
  s.checks = std::move(checks);
  return s;
}

std::vector<std::string> structural_checks() {
  return {"validation", "cycle-classes", "g-identities", "s-element", "kernel", "decomposition",
          "y-order", "k4-criterion", "k4-cayley", "two-arc", "regression"};
}

std::vector<JobSpec> worked_example_jobs() {
  std::vector<JobSpec> jobs;
  auto a = make_job("A5-d1", 4, "A5", "(1,2)(3,4)", "(1,2,3,4,5)");
  a.expected = {{"d", 1},
                {"phi1_empty", false},
                {"phi2_empty", false},
                {"m_order", "60"},
                {"y_order", "1440"},
                {"vertices", 240},
                {"valency", 3},
                {"girth", 9},
                {"centralizer_order", 24}};
  jobs.push_back(std::move(a));

  auto b = make_job("A5-d3", 4, "A5", "(1,2)(3,4)", "(1,5,3)", structural_checks());
  b.expected = {{"d", 3},
                {"phi1_empty", false},
                {"phi2_empty", true},
                {"blocks_listing", ordered_json::array({{1, 2}, {3, 4}, {5, 6}})},
                {"y_order", "5184000"}};
  jobs.push_back(std::move(b));

  auto c = make_job("A11-d6", 4, "A11", "(1,2)(3,6)", "(1,2,3,4,5,6,7,8,9,10,11)",
                    structural_checks());
  c.expected = {{"d", 6}, {"phi1_empty", true}};
  jobs.push_back(std::move(c));
  return jobs;
}

std::vector<JobSpec> small_n_jobs() {
  std::vector<JobSpec> jobs;
  for (std::size_t n = 4; n <= 7; ++n) {
    std::vector<std::string> checks{"validation", "cycle-classes", "g-identities", "s-element",
                                    "two-arc"};
    if (n <= 6) {
      checks.push_back("kernel");
      checks.push_back("decomposition");
      checks.push_back("y-order");
    }
    jobs.push_back(make_job("A5-n" + std::to_string(n), n, "A5", "(1,2)(3,4)", "(1,2,3,4,5)",
                            std::move(checks)));
  }
  return jobs;
}

}  // namespace

std::vector<std::string> suite_names() { return {"paper-examples", "lemmas-small-n", "extended"}; }

std::vector<JobSpec> suite_jobs(std::string_view name) {
  if (name == "paper-examples") return worked_example_jobs();
  if (name == "lemmas-small-n") return small_n_jobs();
  if (name == "extended") {
    auto jobs = worked_example_jobs();
    for (auto &j : small_n_jobs()) jobs.push_back(std::move(j));
    auto big_graph = make_job("A5-d3-graph", 4, "A5", "(1,2)(3,4)", "(1,5,3)",
                              {"validation", "kernel", "decomposition", "y-order", "coset-graph",
                               "two-arc", "cover", "regression"});
    big_graph.expected = {{"d", 3}, {"vertices", 864000}, {"valency", 3}};
    jobs.push_back(std::move(big_graph));
    auto n7 = make_job("A5-n7-d", 7, "A5", "(1,2)(3,4)", "(1,2,3,4,5)",
                       {"validation", "s-element", "kernel", "decomposition", "y-order", "regression"});
    n7.expected = {{"d", 360}};
    jobs.push_back(std::move(n7));
    return jobs;
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) +
                              "' (expected paper-examples, lemmas-small-n or extended)");
}

SuiteResult run_suite(std::string_view name, GroupCatalog const &catalog, bool timings,
                      bool parallel) {
  auto jobs = suite_jobs(name);
  for (auto &j : jobs) j.timings = timings;
  SuiteResult out;
  if (parallel) {
    std::vector<std::future<JobResult>> futures;
    for (auto const &j : jobs)
      futures.push_back(std::async(std::launch::async, [&catalog, &j] { return run_job(j, catalog); }));
    for (auto &f : futures) out.jobs.push_back(f.get());
  } else {
    for (auto const &j : jobs) out.jobs.push_back(run_job(j, catalog));
  }
  for (auto const &r : out.jobs) out.status = combine(out.status, r.status);
  return out;
}

std::string summary_table(std::vector<JobResult> const &jobs) {
  std::ostringstream out;
  out << std::left << std::setw(14) << "job" << std::setw(16) << "check" << std::setw(10) << "status"
      << "note\n";
  for (auto const &r : jobs) {
    auto const &cert = r.certificate;
    auto const id = cert["job"]["id"].get<std::string>();
    if (!cert.contains("checks")) {
      out << std::setw(14) << id << std::setw(16) << "-" << std::setw(10)
          << cert["status"].get<std::string>() << cert.value("error", "") << '\n';
      continue;
    }
    for (auto const &c : cert["checks"]) {
      out << std::setw(14) << id << std::setw(16) << c["id"].get<std::string>() << std::setw(10)
          << c["status"].get<std::string>();
      if (c.contains("note")) out << c["note"].get<std::string>();
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace kcover
