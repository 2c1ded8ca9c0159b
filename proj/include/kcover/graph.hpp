#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kcover {

/// Simple undirected graph on vertices 0..order-1 in compressed form.
/// Neighbor lists are sorted.
class Graph {
 public:
  Graph() = default;

  /// Throws std::logic_error unless the lists describe a simple undirected
  /// graph: symmetric, no loops, no repeated neighbors.
  static Graph from_adjacency(std::vector<std::vector<std::uint32_t>> const &lists);

  std::size_t order() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::span<std::uint32_t const> neighbors(std::size_t v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(std::size_t v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t edge_count() const { return targets_.size() / 2; }
  bool adjacent(std::size_t u, std::size_t v) const;

  /// The common degree, or nothing for an irregular or empty graph.
  std::optional<std::size_t> valency() const;

  friend bool operator==(Graph const &, Graph const &) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> targets_;
};

/// The complete graph K_m.
Graph complete_graph(std::size_t m);

struct GraphInvariants {
  std::size_t order = 0;
  std::optional<std::size_t> valency;
  std::optional<std::size_t> girth;  // nothing for a forest
  std::size_t components = 0;
  std::size_t edges = 0;
};

/// Exact invariants. With `vertex_transitive` the girth search runs from
/// vertex 0 only, which is exact when every vertex lies on a shortest cycle.
GraphInvariants graph_invariants(Graph const &graph, bool vertex_transitive = false);

/// Length of a shortest cycle, by breadth-first search from every vertex
/// truncated at the best length found so far.
std::optional<std::size_t> girth(Graph const &graph, bool vertex_transitive = false);

std::size_t component_count(Graph const &graph);
/// Vertices reachable from `start`.
std::size_t component_size(Graph const &graph, std::size_t start);

enum class ExportFormat { edge_list, adjacency_text };

/// "edge-list" or "adjacency-text"; throws std::invalid_argument otherwise.
ExportFormat parse_export_format(std::string_view name);
std::string_view format_name(ExportFormat format);

/// edge-list: "u v" per edge with u < v, sorted, 0-based.
/// adjacency-text: "v: n1 n2 ..." per vertex.
std::string export_graph(Graph const &graph, ExportFormat format);

}  // namespace kcover
