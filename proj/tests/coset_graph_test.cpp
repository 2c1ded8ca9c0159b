#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "fixtures.hpp"
#include "kcover/coset_graph.hpp"
#include "kcover/graph.hpp"

using namespace kcover;

namespace {

std::vector<Permutation> stabilizer_of_one(std::size_t n) {
  std::vector<Permutation> gens;
  if (n >= 3) gens.push_back(parse_cycles("(2,3)", n));
  if (n >= 4) {
    std::string cycle = "(";
    for (std::size_t i = 2; i <= n; ++i) cycle += std::to_string(i) + (i < n ? "," : ")");
    gens.push_back(parse_cycles(cycle, n));
  }
  auto elements = *closure(std::span<Permutation const>(gens), n, 100000);
  std::sort(elements.begin(), elements.end());
  return elements;
}

std::size_t line_count(std::string const &text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace

TEST(Graph, ValidatesAdjacency) {
  EXPECT_THROW(Graph::from_adjacency({{1}, {}}), std::logic_error);
  EXPECT_THROW(Graph::from_adjacency({{0}}), std::logic_error);
  EXPECT_THROW(Graph::from_adjacency({{1, 1}, {0, 0}}), std::logic_error);
  EXPECT_THROW(Graph::from_adjacency({{2}, {}}), std::logic_error);
  auto const g = Graph::from_adjacency({{1}, {0}, {}});
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_FALSE(g.valency());
  EXPECT_EQ(component_count(g), 2u);
  EXPECT_FALSE(girth(g));
}

TEST(Graph, CompleteGraphInvariants) {
  auto const inv = graph_invariants(complete_graph(5));
  EXPECT_EQ(inv.order, 5u);
  EXPECT_EQ(inv.valency, 4u);
  EXPECT_EQ(inv.girth, 3u);
  EXPECT_EQ(inv.edges, 10u);
  EXPECT_EQ(inv.components, 1u);
}

TEST(Graph, ExportFormats) {
  auto const k4 = complete_graph(4);
  auto const edges = export_graph(k4, ExportFormat::edge_list);
  EXPECT_EQ(line_count(edges), 6u);
  EXPECT_EQ(edges.substr(0, 4), "0 1\n");
  auto const adj = export_graph(k4, ExportFormat::adjacency_text);
  EXPECT_EQ(adj.substr(0, 9), "0: 1 2 3\n");
  EXPECT_EQ(parse_export_format("adjacency-text"), ExportFormat::adjacency_text);
  EXPECT_EQ(format_name(ExportFormat::edge_list), "edge-list");
  EXPECT_THROW(parse_export_format("dot"), std::invalid_argument);
}

TEST(CosetGraph, CompleteGraphOnFourVertices) {
  PermutationArithmetic arith(4);
  auto const h = stabilizer_of_one(4);
  ASSERT_EQ(h.size(), 6u);
  auto const g = parse_cycles("(1,2)", 4);
  auto const cg = build_coset_graph(arith, std::span<Permutation const>(h), g);
  EXPECT_EQ(cg.graph, complete_graph(4));
  EXPECT_EQ(cg.valency, 3u);
  EXPECT_TRUE(arith.deserialize(cg.key(0)).is_identity());
  auto const conn = verify_connected(cg, 4);
  EXPECT_TRUE(conn.connected);
  auto const two = verify_2at(arith, std::span<Permutation const>(h), g);
  EXPECT_EQ(two.intersection_order, 2u);
  EXPECT_EQ(two.valency, 3u);
  EXPECT_TRUE(two.two_transitive);
}

TEST(CosetGraph, DisconnectedWhenYIsNotGenerated) {
  // Y = S4 with H = Sym{2,3} and g = (1,4): <H, g> has order 4, not 24.
  PermutationArithmetic arith(4);
  std::vector<Permutation> h{Permutation(4), parse_cycles("(2,3)", 4)};
  auto const cg = build_coset_graph(arith, std::span<Permutation const>(h), parse_cycles("(1,4)", 4));
  auto const conn = verify_connected(cg, 12);
  EXPECT_EQ(conn.graph_side, 2u);
  EXPECT_EQ(conn.order_side, 12u);
  EXPECT_FALSE(conn.connected);
}

TEST(CosetGraph, RejectsBadSwaps) {
  PermutationArithmetic arith(4);
  auto const h = stabilizer_of_one(4);
  EXPECT_THROW(build_coset_graph(arith, std::span<Permutation const>(h), parse_cycles("(2,3)", 4)),
               std::invalid_argument);
  EXPECT_THROW(build_coset_graph(arith, std::span<Permutation const>(h), parse_cycles("(1,2,3)", 4)),
               std::invalid_argument);
}

TEST(CosetGraph, CapsStopTheSearch) {
  PermutationArithmetic arith(6);
  auto const h = stabilizer_of_one(6);
  BuildOptions options;
  options.vertex_cap = 3;
  EXPECT_THROW(build_coset_graph(arith, std::span<Permutation const>(h), parse_cycles("(1,2)", 6), options),
               PartialBuild);
  options.vertex_cap = 100;
  options.predicted_vertices = 1000;
  EXPECT_THROW(build_coset_graph(arith, std::span<Permutation const>(h), parse_cycles("(1,2)", 6), options),
               CapacityExceeded);
}

TEST(CosetGraph, NotTwoArcTransitiveForACyclicStabilizer) {
  // Y = S4, H = <(2,3,4)>, g = (1,2): H acts regularly on three cosets.
  PermutationArithmetic arith(4);
  std::vector<Permutation> h{Permutation(4), parse_cycles("(2,3,4)", 4), parse_cycles("(2,4,3)", 4)};
  auto const r = verify_2at(arith, std::span<Permutation const>(h), parse_cycles("(1,2)", 4));
  EXPECT_EQ(r.valency, 3u);
  EXPECT_FALSE(r.two_transitive);
}

TEST(Quotient, TrivialNormalSubgroupKeepsTheGraph) {
  PermutationArithmetic arith(4);
  auto const h = stabilizer_of_one(4);
  auto const cg = build_coset_graph(arith, std::span<Permutation const>(h), parse_cycles("(1,2)", 4));
  std::vector<Permutation> none;
  auto const q = quotient_graph(arith, std::span<Permutation const>(h), cg, std::span<Permutation const>(none));
  EXPECT_EQ(q.quotient, cg.graph);
  EXPECT_EQ(q.orbit_size, 1u);
  EXPECT_TRUE(q.local_bijective);
}

TEST(Quotient, KleinFourFoldsK4IntoAnEdge) {
  // V4 is normal in S4 and acts regularly on the four cosets, so the
  // quotient collapses everything to one vertex and is not a cover.
  PermutationArithmetic arith(4);
  auto const h = stabilizer_of_one(4);
  auto const cg = build_coset_graph(arith, std::span<Permutation const>(h), parse_cycles("(1,2)", 4));
  std::vector<Permutation> v4{parse_cycles("(1,2)(3,4)", 4), parse_cycles("(1,3)(2,4)", 4)};
  auto const q = quotient_graph(arith, std::span<Permutation const>(h), cg, std::span<Permutation const>(v4));
  EXPECT_EQ(q.quotient_order(), 1u);
  EXPECT_FALSE(q.local_bijective);
}

TEST(Quotient, IncompatibleOrbitsAreRejected) {
  // A path 0-1-2-3 with orbits {0, 3}, {1}, {2}: vertex 0 sees {1} but
  // vertex 3 sees {2}.
  auto const path = Graph::from_adjacency({{1}, {0, 2}, {1, 3}, {2}});
  EXPECT_THROW(quotient_from_orbits(path, {0, 1, 2, 0}), NotNormal);
  auto const q = quotient_from_orbits(path, {0, 1, 1, 0});
  EXPECT_EQ(q.quotient_order(), 2u);
  EXPECT_FALSE(q.local_bijective);
}

class CoverA5 : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    c = new Construction(build_construction(fixture::a5_job(4)));
    h = new std::vector<WreathElement>(c->h_wreath_elements());
    cg = new CosetGraph(build_coset_graph(c->wreath(), std::span<WreathElement const>(*h), c->g));
    m = new std::vector<WreathElement>(fixture::kernel_generators(*c));
  }
  static void TearDownTestSuite() {
    delete m;
    delete cg;
    delete h;
    delete c;
  }
  static Construction *c;
  static std::vector<WreathElement> *h;
  static CosetGraph *cg;
  static std::vector<WreathElement> *m;
};

Construction *CoverA5::c = nullptr;
std::vector<WreathElement> *CoverA5::h = nullptr;
CosetGraph *CoverA5::cg = nullptr;
std::vector<WreathElement> *CoverA5::m = nullptr;

TEST_F(CoverA5, Invariants) {
  auto const inv = graph_invariants(cg->graph, true);
  EXPECT_EQ(inv.order, 240u);
  EXPECT_EQ(inv.valency, 3u);
  EXPECT_EQ(inv.girth, 9u);
  EXPECT_EQ(inv.components, 1u);
  EXPECT_EQ(girth(cg->graph), 9u);
  EXPECT_EQ(line_count(export_graph(cg->graph, ExportFormat::edge_list)), 360u);
  EXPECT_EQ(line_count(export_graph(cg->graph, ExportFormat::adjacency_text)), 240u);
}

TEST_F(CoverA5, GraphIsSymmetricAndLoopless) {
  for (std::size_t v = 0; v < cg->order(); ++v)
    for (auto w : cg->graph.neighbors(v)) {
      EXPECT_NE(w, v);
      EXPECT_TRUE(cg->graph.adjacent(w, v));
    }
}

TEST_F(CoverA5, VerticesAreCanonicalCosets) {
  CosetSpace<WreathContext> space(c->wreath(), std::span<WreathElement const>(*h));
  for (std::size_t v = 0; v < cg->order(); v += 17) {
    auto const x = cg->representative(c->wreath(), v);
    Key k;
    space.canonical(x, k);
    EXPECT_TRUE(std::equal(k.begin(), k.end(), cg->key(v).begin()));
    EXPECT_EQ(cg->find(k), v);
  }
}

TEST_F(CoverA5, ConnectedAndTwoArcTransitive) {
  auto const y = closure(c->wreath(), std::span<WreathElement const>(c->y_generators), 100000);
  ASSERT_TRUE(y);
  EXPECT_EQ(y->size(), 1440u);
  EXPECT_TRUE(verify_connected(*cg, y->size() / h->size()).connected);
  auto const two = verify_2at(c->wreath(), std::span<WreathElement const>(*h), c->g);
  EXPECT_TRUE(two.two_transitive);
  EXPECT_EQ(two.valency, 3u);
}

TEST_F(CoverA5, QuotientByTheKernelIsK4) {
  auto const q = quotient_graph(c->wreath(), std::span<WreathElement const>(*h), *cg,
                                std::span<WreathElement const>(*m));
  EXPECT_EQ(q.quotient, complete_graph(4));
  EXPECT_EQ(q.orbit_size, 60u);
  EXPECT_TRUE(q.local_bijective);
}

TEST_F(CoverA5, CentralizerGivesThePetersenGraph) {
  auto const y = closure(c->wreath(), std::span<WreathElement const>(c->y_generators), 100000);
  ASSERT_TRUE(y);
  auto const cent = centralizer_in_small_Y(c->wreath(), std::span<WreathElement const>(*y),
                                           std::span<WreathElement const>(*m));
  EXPECT_EQ(cent.size(), 24u);
  // C meets the base group trivially.
  std::size_t in_base = 0;
  for (auto const &u : cent)
    if (u.sigma.is_identity()) ++in_base;
  EXPECT_EQ(in_base, 1u);
  auto const q = quotient_graph(c->wreath(), std::span<WreathElement const>(*h), *cg,
                                std::span<WreathElement const>(cent));
  auto const inv = graph_invariants(q.quotient);
  EXPECT_EQ(inv.order, 10u);
  EXPECT_EQ(inv.valency, 3u);
  EXPECT_EQ(inv.girth, 5u);
  EXPECT_TRUE(q.local_bijective);
}
