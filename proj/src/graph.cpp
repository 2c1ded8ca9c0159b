#include "kcover/graph.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace kcover {

Graph Graph::from_adjacency(std::vector<std::vector<std::uint32_t>> const &lists) {
  Graph g;
  auto const n = lists.size();
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + lists[v].size();
  g.targets_.reserve(g.offsets_[n]);
  for (std::size_t v = 0; v < n; ++v) {
    auto row = lists[v];
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end())
      throw std::logic_error("vertex " + std::to_string(v) + " has a repeated neighbor");
    for (auto w : row) {
      if (w >= n) throw std::logic_error("neighbor index out of range");
      if (w == v) throw std::logic_error("vertex " + std::to_string(v) + " has a loop");
    }
    g.targets_.insert(g.targets_.end(), row.begin(), row.end());
  }
  for (std::size_t v = 0; v < n; ++v)
    for (auto w : g.neighbors(v))
      if (!g.adjacent(w, v))
        throw std::logic_error("adjacency is not symmetric at " + std::to_string(v) + " -> " +
                               std::to_string(w));
  return g;
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
  auto const row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), static_cast<std::uint32_t>(v));
}

std::optional<std::size_t> Graph::valency() const {
  if (order() == 0) return std::nullopt;
  auto const k = degree(0);
  for (std::size_t v = 1; v < order(); ++v)
    if (degree(v) != k) return std::nullopt;
  return k;
}

Graph complete_graph(std::size_t m) {
  std::vector<std::vector<std::uint32_t>> lists(m);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v)
      if (u != v) lists[u].push_back(static_cast<std::uint32_t>(v));
  return Graph::from_adjacency(lists);
}

std::size_t component_size(Graph const &graph, std::size_t start) {
  std::vector<bool> seen(graph.order(), false);
  std::vector<std::uint32_t> queue{static_cast<std::uint32_t>(start)};
  seen[start] = true;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (auto w : graph.neighbors(queue[head]))
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
  return queue.size();
}

std::size_t component_count(Graph const &graph) {
  std::vector<bool> seen(graph.order(), false);
  std::vector<std::uint32_t> queue;
  std::size_t count = 0;
  for (std::size_t s = 0; s < graph.order(); ++s) {
    if (seen[s]) continue;
    ++count;
    seen[s] = true;
    queue.assign(1, static_cast<std::uint32_t>(s));
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (auto w : graph.neighbors(queue[head]))
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
  }
  return count;
}

std::optional<std::size_t> girth(Graph const &graph, bool vertex_transitive) {
  constexpr auto kUnseen = std::numeric_limits<std::uint32_t>::max();
  auto const n = graph.order();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<std::uint32_t> dist(n, kUnseen), parent(n, kUnseen);
  std::vector<std::uint32_t> queue;
  auto const roots = vertex_transitive ? std::min<std::size_t>(n, 1) : n;
  for (std::size_t root = 0; root < roots; ++root) {
    queue.assign(1, static_cast<std::uint32_t>(root));
    dist[root] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto const u = queue[head];
      // Any cycle closed beyond this depth is no shorter than the best.
      if (2 * static_cast<std::size_t>(dist[u]) + 1 >= best) break;
      for (auto w : graph.neighbors(u)) {
        if (dist[w] == kUnseen) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min<std::size_t>(best, std::size_t{dist[u]} + dist[w] + 1);
        }
      }
    }
    for (auto v : queue) dist[v] = parent[v] = kUnseen;
  }
  if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return best;
}

GraphInvariants graph_invariants(Graph const &graph, bool vertex_transitive) {
  GraphInvariants inv;
  inv.order = graph.order();
  inv.valency = graph.valency();
  inv.girth = girth(graph, vertex_transitive);
  inv.components = component_count(graph);
  inv.edges = graph.edge_count();
  return inv;
}

ExportFormat parse_export_format(std::string_view name) {
  if (name == "edge-list") return ExportFormat::edge_list;
  if (name == "adjacency-text") return ExportFormat::adjacency_text;
  throw std::invalid_argument("unknown export format '" + std::string(name) +
                              "' (expected edge-list or adjacency-text)");
}

std::string_view format_name(ExportFormat format) {
  return format == ExportFormat::edge_list ? "edge-list" : "adjacency-text";
}

std::string export_graph(Graph const &graph, ExportFormat format) {
  std::ostringstream out;
  for (std::size_t v = 0; v < graph.order(); ++v) {
    if (format == ExportFormat::edge_list) {
      for (auto w : graph.neighbors(v))
        if (v < w) out << v << ' ' << w << '\n';
    } else {
      out << v << ':';
      for (auto w : graph.neighbors(v)) out << ' ' << w;
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace kcover
