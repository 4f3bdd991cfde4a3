#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "chadd/graph.hpp"

namespace chadd {

/// Proper vertex coloring with colors 1..k, every color used at least once.
struct Coloring {
  std::vector<int> assignment;  // assignment[v] in 1..k
  int color_count = 0;

  int color_of(int v) const { return assignment.at(v); }

  /// Vertices of each color; index 0 unused.
  std::vector<std::vector<int>> color_classes() const {
    std::vector<std::vector<int>> cls(color_count + 1);
    for (int v = 0; v < static_cast<int>(assignment.size()); ++v)
      cls[assignment[v]].push_back(v);
    return cls;
  }

  nlohmann::json to_json() const {
    return nlohmann::json{{"k", color_count}, {"colors", assignment}};
  }

  static Coloring from_json(const nlohmann::json& j) {
    Coloring c;
    c.color_count = j.at("k").get<int>();
    c.assignment = j.at("colors").get<std::vector<int>>();
    return c;
  }
};

/// True iff the coloring covers every vertex with a color in 1..k and no
/// edge is monochromatic.
inline bool validate_coloring(const ConnectivityGraph& g, const Coloring& c) {
  if (static_cast<int>(c.assignment.size()) != g.vertex_count())
    throw std::invalid_argument("coloring: size mismatch with graph");
  for (int v = 0; v < g.vertex_count(); ++v)
    if (c.assignment[v] < 1 || c.assignment[v] > c.color_count) return false;
  for (auto [u, v] : g.edges())
    if (c.assignment[u] == c.assignment[v]) return false;
  return true;
}

namespace detail {

/// Greedy coloring over a fixed vertex order; smallest available color.
inline Coloring greedy_in_order(const ConnectivityGraph& g,
                                const std::vector<int>& order) {
  const int n = g.vertex_count();
  Coloring c;
  c.assignment.assign(n, 0);
  for (int v : order) {
    std::set<int> used;
    for (int w : g.neighbors(v))
      if (c.assignment[w] > 0) used.insert(c.assignment[w]);
    int col = 1;
    while (used.count(col)) ++col;
    c.assignment[v] = col;
    c.color_count = std::max(c.color_count, col);
  }
  if (n > 0 && c.color_count == 0) c.color_count = 0;
  return c;
}

}  // namespace detail

/// DSATUR greedy coloring. Picks the uncolored vertex with the largest
/// saturation degree, ties broken by lowest index, and assigns the smallest
/// color unused in its neighborhood. Never uses more than max_degree + 1
/// colors and is exact on bipartite graphs.
inline Coloring color_greedy(const ConnectivityGraph& g) {
  const int n = g.vertex_count();
  Coloring c;
  c.assignment.assign(n, 0);
  c.color_count = 0;
  if (n == 0) return c;

  std::vector<std::set<int>> neighbor_colors(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    std::size_t best_sat = 0;
    for (int v = 0; v < n; ++v) {
      if (c.assignment[v] != 0) continue;
      std::size_t sat = neighbor_colors[v].size();
      if (best < 0 || sat > best_sat) {
        best = v;
        best_sat = sat;
      }
    }
    int col = 1;
    while (neighbor_colors[best].count(col)) ++col;
    c.assignment[best] = col;
    c.color_count = std::max(c.color_count, col);
    for (int w : g.neighbors(best)) neighbor_colors[w].insert(col);
  }
  return c;
}

/// A uniformly shuffled greedy coloring; proper by construction. Used to
/// exercise the synthesis and oracle paths over many distinct colorings.
template <typename Rng>
Coloring random_proper_coloring(const ConnectivityGraph& g, Rng& rng) {
  std::vector<int> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return detail::greedy_in_order(g, order);
}

/// Chromatic bounds.
///
/// lower: max over v of (max degree of the subgraph induced on v and its
/// neighborhood) + 1. upper: per connected component, Brooks' bound (the
/// maximum degree, or degree + 1 for complete graphs and odd cycles),
/// combined by taking the max. Empty graph yields (0, 0).
///
/// The lower value is the neighborhood-degree heuristic; it matches the
/// chromatic number on cliques and odd cycles but is not a valid bound for
/// arbitrary graphs (see the notes in tests/test_graph.cpp).
inline std::pair<int, int> chromatic_bounds(const ConnectivityGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return {0, 0};

  int lower = 0;
  for (int v = 0; v < n; ++v) {
    std::vector<int> hood = g.neighbors(v);
    hood.push_back(v);
    int local_max = 0;
    for (int a : hood) {
      int deg = 0;
      for (int b : hood)
        if (a != b && g.has_edge(a, b)) ++deg;
      local_max = std::max(local_max, deg);
    }
    lower = std::max(lower, local_max + 1);
  }

  int upper = 0;
  for (const auto& comp : g.components()) {
    const int k = static_cast<int>(comp.size());
    int delta = 0;
    long long edge_count = 0;
    bool all_degree_two = true;
    for (int v : comp) {
      delta = std::max(delta, g.degree(v));
      edge_count += g.degree(v);
      if (g.degree(v) != 2) all_degree_two = false;
    }
    edge_count /= 2;
    bool complete = edge_count == static_cast<long long>(k) * (k - 1) / 2;
    bool odd_cycle = all_degree_two && k >= 3 && k % 2 == 1 &&
                     edge_count == static_cast<long long>(k);
    int comp_upper = (complete || odd_cycle) ? delta + 1 : delta;
    upper = std::max(upper, comp_upper);
  }
  return {lower, upper};
}

}  // namespace chadd
