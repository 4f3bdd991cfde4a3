#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "chadd/coloring.hpp"

namespace chadd {

/// Entry (i, j) of the 2^nu Walsh-Hadamard sign matrix: (-1)^(i . j) with
/// the bitwise dot product mod 2. Never materialized; pure bit arithmetic.
inline int walsh_sign(std::uint64_t i, std::uint64_t j) {
  return (std::popcount(i & j) & 1) ? -1 : 1;
}

/// Scheduling predicate: 1 when the qubits of a color mapped to this row
/// sit inside the conjugation frame at time step j.
inline int schedule_bit(std::uint64_t row, std::uint64_t j) {
  return std::popcount(row & j) & 1;
}

struct WalshMatrix {
  int nu = 0;
  std::uint64_t size() const { return std::uint64_t{1} << nu; }
  int sign(std::uint64_t i, std::uint64_t j) const { return walsh_sign(i, j); }
};

inline int nu_single_axis(std::uint64_t chi) {
  if (chi == 0) throw std::invalid_argument("depth: chi must be >= 1");
  return std::bit_width(chi);  // floor(log2 chi) + 1
}

/// Single-axis cycle depth N = 2^(floor(log2 chi) + 1); chi <= N <= 2 chi.
inline std::uint64_t depth_single_axis(std::uint64_t chi) {
  return std::uint64_t{1} << nu_single_axis(chi);
}

/// Physical pulses per cycle for a color scheduled on this row: the number
/// of cyclic sign changes along the row (terminal frame closure included).
inline int row_transition_count(std::uint64_t row, int nu) {
  const std::uint64_t n = std::uint64_t{1} << nu;
  int count = 0;
  for (std::uint64_t j = 0; j < n; ++j)
    count += schedule_bit(row, j) != schedule_bit(row, (j + 1) % n);
  return count;
}

/// Map from colors to Hadamard rows. System colors map injectively into
/// {1..N-1}; spectator colors map to row 0 (never pulsed, crosstalk to
/// system qubits still suppressed).
struct ColorRowMap {
  int nu = 0;
  std::map<int, int> rows;  // color -> row index

  std::uint64_t depth() const { return std::uint64_t{1} << nu; }

  int row_of(int color) const {
    auto it = rows.find(color);
    if (it == rows.end())
      throw std::invalid_argument("row map: no row for color " +
                                  std::to_string(color));
    return it->second;
  }

  bool is_spectator(int color) const { return row_of(color) == 0; }

  void validate() const {
    std::set<int> seen;
    for (auto [color, row] : rows) {
      if (color < 1) throw std::invalid_argument("row map: bad color");
      if (row < 0 || static_cast<std::uint64_t>(row) >= depth())
        throw std::invalid_argument("row map: row out of range");
      if (row > 0 && !seen.insert(row).second)
        throw std::invalid_argument("row map: duplicate row " +
                                    std::to_string(row));
    }
  }

  nlohmann::json to_json() const {
    nlohmann::json r = nlohmann::json::object();
    for (auto [color, row] : rows) r[std::to_string(color)] = row;
    return nlohmann::json{{"nu", nu}, {"rows", r}};
  }

  static ColorRowMap from_json(const nlohmann::json& j) {
    ColorRowMap m;
    m.nu = j.at("nu").get<int>();
    for (auto& [key, value] : j.at("rows").items())
      m.rows[std::stoi(key)] = value.get<int>();
    m.validate();
    return m;
  }
};

namespace detail {

// Lexicographically smallest injective assignment of rows to the given
// colors minimizing the total transition count. The objective is separable,
// so the optimum equals the sum of the k smallest row costs; depth-first
// search with that bound finds the lexicographic minimizer directly.
inline std::map<int, int> min_pulse_assignment(const std::vector<int>& colors,
                                               int nu) {
  const int n = 1 << nu;
  const int k = static_cast<int>(colors.size());
  std::vector<int> cost(n, 0);
  for (int r = 1; r < n; ++r) cost[r] = row_transition_count(r, nu);

  std::vector<int> sorted_costs;
  for (int r = 1; r < n; ++r) sorted_costs.push_back(cost[r]);
  std::sort(sorted_costs.begin(), sorted_costs.end());
  long target = 0;
  for (int i = 0; i < k; ++i) target += sorted_costs[i];

  std::vector<int> chosen;
  std::vector<bool> used(n, false);

  // Cheapest completion with `remaining` rows still to pick.
  auto best_remaining = [&](int remaining) {
    std::vector<int> avail;
    for (int r = 1; r < n; ++r)
      if (!used[r]) avail.push_back(cost[r]);
    std::sort(avail.begin(), avail.end());
    long sum = 0;
    for (int i = 0; i < remaining; ++i) sum += avail[i];
    return sum;
  };

  std::function<bool(int, long)> dfs = [&](int idx, long acc) {
    if (idx == k) return acc == target;
    for (int r = 1; r < n; ++r) {
      if (used[r]) continue;
      used[r] = true;
      long now = acc + cost[r];
      if (now <= target && now + best_remaining(k - idx - 1) <= target) {
        chosen.push_back(r);
        if (dfs(idx + 1, now)) return true;
        chosen.pop_back();
      }
      used[r] = false;
    }
    return false;
  };
  if (!dfs(0, 0))
    throw std::logic_error("row map search failed");  // unreachable

  std::map<int, int> out;
  for (int i = 0; i < k; ++i) out[colors[i]] = chosen[i];
  return out;
}

}  // namespace detail

/// Default color-to-row map. Among injective maps into rows {1..N-1} the
/// one with the fewest physical pulses per cycle is chosen, ties broken
/// lexicographically; for chi = 2, nu = 2 this yields the balanced map
/// {1->2, 2->3}. Above 8 system colors the search is skipped in favor of
/// the shifted identity (row c+1) when it fits, else the identity.
/// Spectator colors are pinned to row 0.
inline ColorRowMap default_row_map(const Coloring& coloring, int nu,
                                   const std::set<int>& spectator_colors = {}) {
  ColorRowMap m;
  m.nu = nu;
  const std::uint64_t n = m.depth();

  std::vector<int> system_colors;
  for (int c = 1; c <= coloring.color_count; ++c) {
    if (spectator_colors.count(c))
      m.rows[c] = 0;
    else
      system_colors.push_back(c);
  }
  if (system_colors.size() > n - 1)
    throw std::invalid_argument("row map: too many colors for nu=" +
                                std::to_string(nu));

  if (system_colors.size() <= 8) {
    auto best = detail::min_pulse_assignment(system_colors, nu);
    m.rows.insert(best.begin(), best.end());
  } else {
    const bool shifted = system_colors.size() <= n - 2;
    for (std::size_t i = 0; i < system_colors.size(); ++i)
      m.rows[system_colors[i]] = static_cast<int>(i + (shifted ? 2 : 1));
  }
  m.validate();
  return m;
}

}  // namespace chadd
