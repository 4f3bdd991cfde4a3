#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace chadd {

/// Undirected qubit connectivity graph. Edges are stored canonically as
/// (u, v) with u < v, deduplicated and sorted. Immutable after construction.
class ConnectivityGraph {
 public:
  using Edge = std::pair<int, int>;

  ConnectivityGraph() = default;

  ConnectivityGraph(int vertex_count, std::vector<Edge> edge_list)
      : n_(vertex_count) {
    if (vertex_count < 0)
      throw std::invalid_argument("graph: negative vertex count");
    std::set<Edge> canon;
    for (auto [u, v] : edge_list) {
      if (u == v) throw std::invalid_argument("graph: self-loop on vertex " +
                                              std::to_string(u));
      if (u > v) std::swap(u, v);
      if (u < 0 || v >= n_)
        throw std::invalid_argument("graph: edge (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") out of range");
      canon.emplace(u, v);
    }
    edges_.assign(canon.begin(), canon.end());
    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
  }

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

  int max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  bool has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
  }

  /// Connected components as vertex lists (sorted within each component).
  std::vector<std::vector<int>> components() const {
    std::vector<int> comp(n_, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n_; ++s) {
      if (comp[s] >= 0) continue;
      int id = static_cast<int>(out.size());
      out.push_back({});
      std::vector<int> stack{s};
      comp[s] = id;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        out[id].push_back(v);
        for (int w : adj_[v])
          if (comp[w] < 0) {
            comp[w] = id;
            stack.push_back(w);
          }
      }
      std::sort(out[id].begin(), out[id].end());
    }
    return out;
  }

  bool is_connected() const { return n_ <= 1 || components().size() == 1; }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["n"] = n_;
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : edges_) j["edges"].push_back({u, v});
    return j;
  }

  static ConnectivityGraph from_json(const nlohmann::json& j) {
    if (!j.contains("n") || !j.contains("edges"))
      throw std::invalid_argument("graph json: expected {\"n\", \"edges\"}");
    std::vector<Edge> es;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument("graph json: edge must be a pair");
      es.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    return ConnectivityGraph(j.at("n").get<int>(), std::move(es));
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

// ---- stock graphs used across tests, demos, and benchmarks ----

inline ConnectivityGraph complete_graph(int n) {
  std::vector<ConnectivityGraph::Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return ConnectivityGraph(n, std::move(es));
}

inline ConnectivityGraph cycle_graph(int n) {
  std::vector<ConnectivityGraph::Edge> es;
  for (int v = 0; v < n; ++v) es.emplace_back(v, (v + 1) % n);
  return ConnectivityGraph(n, std::move(es));
}

inline ConnectivityGraph path_graph(int n) {
  std::vector<ConnectivityGraph::Edge> es;
  for (int v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
  return ConnectivityGraph(n, std::move(es));
}

/// One heavy-hexagon cell: a 12-qubit ring (corner qubits plus the qubits
/// sitting on the hexagon edges). Bipartite, so 2-colorable.
inline ConnectivityGraph heavy_hex_ring12() { return cycle_graph(12); }

/// rows x cols grid with one diagonal per cell, i.e. a triangular lattice
/// patch. Chromatic number 3 for rows, cols >= 2.
inline ConnectivityGraph triangular_grid(int rows, int cols) {
  auto id = [cols](int r, int c) { return r * cols + c; };
  std::vector<ConnectivityGraph::Edge> es;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) es.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) es.emplace_back(id(r, c), id(r + 1, c));
      if (r + 1 < rows && c > 0) es.emplace_back(id(r, c), id(r + 1, c - 1));
    }
  return ConnectivityGraph(rows * cols, std::move(es));
}

/// Random connected graph: a random spanning tree plus extra edges with
/// probability p.
template <typename Rng>
ConnectivityGraph random_connected_graph(int n, double p, Rng& rng) {
  std::vector<ConnectivityGraph::Edge> es;
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    es.emplace_back(order[pick(rng)], order[i]);
  }
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < p) es.emplace_back(u, v);
  return ConnectivityGraph(n, std::move(es));
}

/// Random bipartite graph on parts of size a and b; guarantees at least one
/// edge when both parts are nonempty.
template <typename Rng>
ConnectivityGraph random_bipartite_graph(int a, int b, double p, Rng& rng) {
  std::vector<ConnectivityGraph::Edge> es;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v)
      if (coin(rng) < p) es.emplace_back(u, a + v);
  if (es.empty() && a > 0 && b > 0) es.emplace_back(0, a);
  return ConnectivityGraph(a + b, std::move(es));
}

}  // namespace chadd
