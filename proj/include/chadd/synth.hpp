#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "chadd/coloring.hpp"
#include "chadd/graph.hpp"
#include "chadd/pauli.hpp"
#include "chadd/schedule.hpp"
#include "chadd/schur.hpp"
#include "chadd/walsh.hpp"

namespace chadd {

inline int ceil_log2(std::uint64_t m) {
  int k = 0;
  while ((std::uint64_t{1} << k) < m) ++k;
  return k;
}

/// Multi-axis cycle depth: the cheaper of the even and odd constructions,
/// N = min{2^(2 ceil(log2(3chi+1)/2)), 2^(2 ceil((log2(3chi+5)-1)/2)+1)}.
/// Satisfies 3chi+1 <= N <= 2(3chi+5).
inline int nu_multi_axis(std::uint64_t chi) {
  if (chi == 0) throw std::invalid_argument("depth: chi must be >= 1");
  const int ke = (ceil_log2(3 * chi + 1) + 1) / 2;
  const int ko = ceil_log2(3 * chi + 5) / 2;  // ceil((k-1)/2)
  const int nu_e = 2 * ke;
  const int nu_o = 2 * ko + 1;
  return nu_e <= nu_o ? nu_e : nu_o;
}

inline std::uint64_t depth_multi_axis(std::uint64_t chi) {
  return std::uint64_t{1} << nu_multi_axis(chi);
}

/// Concatenated (two-axis) cycle depth 4^(floor(log2 chi) + 1) <= 4 chi^2.
inline std::uint64_t depth_concatenated(std::uint64_t chi) {
  const std::uint64_t n = depth_single_axis(chi);
  return n * n;
}

namespace detail {

// Colors with an edge inside a non-spectator class make the schedule
// invalid; spectator classes may keep internal edges (their crosstalk is
// deliberately left alone).
inline void check_coloring_for_synthesis(const ConnectivityGraph& g,
                                         const Coloring& c,
                                         const std::set<int>& spectators) {
  if (static_cast<int>(c.assignment.size()) != g.vertex_count())
    throw std::invalid_argument("synth: coloring does not cover the graph");
  for (auto [u, v] : g.edges()) {
    const int cu = c.color_of(u), cv = c.color_of(v);
    if (cu == cv && !spectators.count(cu))
      throw std::invalid_argument("synth: coloring not proper on edge (" +
                                  std::to_string(u) + "," + std::to_string(v) +
                                  ")");
  }
}

// Turns per-slot frames into boundary pulses: grid[0] opens from the
// identity frame, later slots carry the frame difference, and the terminal
// entry closes the last frame.
inline PulseSchedule frames_to_schedule(
    const std::vector<std::vector<Pauli>>& frames, int qubit_count) {
  PulseSchedule s;
  s.qubit_count = qubit_count;
  const int slots = static_cast<int>(frames.size());
  s.grid.assign(slots, std::vector<PulseLabel>(qubit_count));
  s.terminal_frame.assign(qubit_count, PulseLabel{});
  for (int q = 0; q < qubit_count; ++q) {
    Pauli prev = Pauli::I;
    for (int j = 0; j < slots; ++j) {
      s.grid[j][q] = PulseLabel{pauli_product(frames[j][q], prev), false};
      prev = frames[j][q];
    }
    s.terminal_frame[q] = PulseLabel{prev, false};
  }
  return s;
}

}  // namespace detail

/// Single-axis CHaDD. Each color is scheduled by its Hadamard row: at step
/// j the qubits of color c sit inside the conjugation frame iff
/// g(c) . j = 1 mod 2, and the stored pulses are the consecutive-frame
/// differences. Cancels all non-pure-`axis` one- and two-body terms to
/// first order.
inline PulseSchedule synth_single_axis(const ConnectivityGraph& graph,
                                       const Coloring& coloring,
                                       const ColorRowMap& row_map,
                                       Pauli axis = Pauli::X) {
  if (axis == Pauli::I)
    throw std::invalid_argument("synth: axis must be X, Y, or Z");
  row_map.validate();
  std::set<int> spectators;
  for (int c = 1; c <= coloring.color_count; ++c)
    if (row_map.is_spectator(c)) spectators.insert(c);
  detail::check_coloring_for_synthesis(graph, coloring, spectators);

  const int n = graph.vertex_count();
  const std::uint64_t slots = row_map.depth();
  std::vector<std::vector<Pauli>> frames(slots, std::vector<Pauli>(n, Pauli::I));
  for (std::uint64_t j = 0; j < slots; ++j)
    for (int q = 0; q < n; ++q) {
      const int row = row_map.row_of(coloring.color_of(q));
      if (schedule_bit(row, j)) frames[j][q] = axis;
    }

  PulseSchedule s = detail::frames_to_schedule(frames, n);
  s.variant = "chadd";
  s.coloring = coloring;
  s.spectator_colors = spectators;
  return s;
}

/// Assignment of colors to triples of a Schur partition; value -1 marks a
/// spectator color (no pulses).
using TripleMap = std::map<int, int>;

inline TripleMap default_triple_map(const Coloring& coloring,
                                    const SchurPartition& partition,
                                    const std::set<int>& spectators = {}) {
  TripleMap m;
  int next = 0;
  for (int c = 1; c <= coloring.color_count; ++c) {
    if (spectators.count(c)) {
      m[c] = -1;
      continue;
    }
    if (next >= static_cast<int>(partition.triples.size()))
      throw std::invalid_argument("triple map: not enough triples");
    m[c] = next++;
  }
  return m;
}

/// Multi-axis CHaDD. Each color owns a Schur triple; its three rows,
/// assigned to x, y, z in ascending index order, form sign matrices whose
/// columns can only be (+,+,+), (+,-,-), (-,+,-), (-,-,+) -- the frame at
/// step j is I, X, Y, or Z accordingly. Cancels every one- and two-body
/// term to first order.
inline PulseSchedule synth_multi_axis(const ConnectivityGraph& graph,
                                      const Coloring& coloring,
                                      const SchurPartition& partition,
                                      const TripleMap& triple_map) {
  std::set<int> spectators;
  std::set<int> used;
  for (int c = 1; c <= coloring.color_count; ++c) {
    auto it = triple_map.find(c);
    if (it == triple_map.end())
      throw std::invalid_argument("triple map: no entry for color " +
                                  std::to_string(c));
    if (it->second < 0) {
      spectators.insert(c);
      continue;
    }
    if (it->second >= static_cast<int>(partition.triples.size()))
      throw std::invalid_argument("triple map: triple index out of range");
    if (!used.insert(it->second).second)
      throw std::invalid_argument("triple map: triple used twice");
  }
  detail::check_coloring_for_synthesis(graph, coloring, spectators);

  const int n = graph.vertex_count();
  const std::uint64_t slots = std::uint64_t{1} << partition.nu;

  // Frame letter per color per slot from the triple's sign tuple.
  auto frame_of = [&](int color, std::uint64_t j) {
    const int t = triple_map.at(color);
    if (t < 0) return Pauli::I;
    const auto& rows = partition.triples[t];
    const bool sx = walsh_sign(rows[0], j) > 0;
    const bool sy = walsh_sign(rows[1], j) > 0;
    const bool sz = walsh_sign(rows[2], j) > 0;
    if (sx && sy && sz) return Pauli::I;
    if (sx) return Pauli::X;
    if (sy) return Pauli::Y;
    if (sz) return Pauli::Z;
    throw std::logic_error("sign tuple outside the Schur-closed set");
  };

  std::vector<std::vector<Pauli>> frames(slots, std::vector<Pauli>(n, Pauli::I));
  for (std::uint64_t j = 0; j < slots; ++j)
    for (int q = 0; q < n; ++q) frames[j][q] = frame_of(coloring.color_of(q), j);

  PulseSchedule s = detail::frames_to_schedule(frames, n);
  s.variant = "chadd-multi";
  s.coloring = coloring;
  s.spectator_colors = spectators;
  return s;
}

/// Robust CHaDD (the UR4 promotion). The single-axis schedule is doubled to
/// 2N slots and every color's non-identity pulses, in order, get the UR4
/// sign pattern +,-,-,+ repeated. Per cycle each color's pulse count is a
/// multiple of 4, so the blocks always complete.
inline PulseSchedule synth_robust(const ConnectivityGraph& graph,
                                  const Coloring& coloring,
                                  const ColorRowMap& row_map) {
  PulseSchedule base = synth_single_axis(graph, coloring, row_map, Pauli::X);
  const int nslots = base.slot_count();
  PulseSchedule s = base;
  s.variant = "chadd-r";
  // Double: the base terminal pulse becomes the boundary into slot N.
  s.grid.push_back(base.terminal_frame);
  for (int j = 1; j < nslots; ++j) s.grid.push_back(base.grid[j]);
  // terminal stays base.terminal_frame (the frame pattern repeats).

  static constexpr bool kUr4Negative[4] = {false, true, true, false};
  for (int q = 0; q < s.qubit_count; ++q) {
    int k = 0;
    for (int j = 1; j < s.slot_count(); ++j)
      if (!s.grid[j][q].is_identity()) s.grid[j][q].negative = kUr4Negative[k++ % 4];
    if (!s.terminal_frame[q].is_identity())
      s.terminal_frame[q].negative = kUr4Negative[k++ % 4];
  }
  return s;
}

/// Concatenated two-axis CHaDD: every slot of the outer x-type sequence is
/// replaced by a full inner z-type sequence, N^2 slots total. Frames are
/// the products X^(g.j) Z^(g.k); adjacent pulses collapse into single Pauli
/// labels.
inline PulseSchedule synth_concatenated(const ConnectivityGraph& graph,
                                        const Coloring& coloring,
                                        const ColorRowMap& row_map) {
  row_map.validate();
  std::set<int> spectators;
  for (int c = 1; c <= coloring.color_count; ++c)
    if (row_map.is_spectator(c)) spectators.insert(c);
  detail::check_coloring_for_synthesis(graph, coloring, spectators);

  const int n = graph.vertex_count();
  const std::uint64_t inner = row_map.depth();
  const std::uint64_t slots = inner * inner;
  std::vector<std::vector<Pauli>> frames(slots, std::vector<Pauli>(n, Pauli::I));
  for (std::uint64_t t = 0; t < slots; ++t) {
    const std::uint64_t j = t / inner;  // outer, x-type
    const std::uint64_t k = t % inner;  // inner, z-type
    for (int q = 0; q < n; ++q) {
      const int row = row_map.row_of(coloring.color_of(q));
      const bool xb = schedule_bit(row, j);
      const bool zb = schedule_bit(row, k);
      frames[t][q] = xb ? (zb ? Pauli::Y : Pauli::X) : (zb ? Pauli::Z : Pauli::I);
    }
  }
  PulseSchedule s = detail::frames_to_schedule(frames, n);
  s.variant = "chadd-cat";
  s.coloring = coloring;
  s.spectator_colors = spectators;
  return s;
}

enum class AchromaticKind { XX, XY4, UR4 };

inline AchromaticKind achromatic_kind_from_string(const std::string& k) {
  if (k == "xx") return AchromaticKind::XX;
  if (k == "xy4") return AchromaticKind::XY4;
  if (k == "ur4") return AchromaticKind::UR4;
  throw std::invalid_argument("unknown achromatic sequence '" + k + "'");
}

/// Achromatic baselines applied synchronously to a qubit subset; all
/// targeted qubits carry identical pulses in every slot, untargeted qubits
/// idle. One cycle is 4 slots: XX pulses at every boundary, XY4 alternates
/// X and Y, UR4 is the sign-patterned X X- X- X.
inline PulseSchedule synth_achromatic(AchromaticKind kind, int qubit_count,
                                      const std::vector<int>& subset,
                                      int cycles = 1) {
  if (subset.empty())
    throw std::invalid_argument("achromatic: empty qubit subset");
  if (cycles < 1) throw std::invalid_argument("achromatic: cycles must be >= 1");
  for (int q : subset)
    if (q < 0 || q >= qubit_count)
      throw std::invalid_argument("achromatic: qubit out of range");

  std::vector<PulseLabel> pattern;
  std::string name;
  switch (kind) {
    case AchromaticKind::XX:
      pattern = {{Pauli::X, false}, {Pauli::X, false},
                 {Pauli::X, false}, {Pauli::X, false}};
      name = "xx";
      break;
    case AchromaticKind::XY4:
      pattern = {{Pauli::X, false}, {Pauli::Y, false},
                 {Pauli::X, false}, {Pauli::Y, false}};
      name = "xy4";
      break;
    case AchromaticKind::UR4:
      pattern = {{Pauli::X, false}, {Pauli::X, true},
                 {Pauli::X, true}, {Pauli::X, false}};
      name = "ur4";
      break;
  }

  const int slots = 4 * cycles;
  PulseSchedule s;
  s.variant = name;
  s.qubit_count = qubit_count;
  s.grid.assign(slots, std::vector<PulseLabel>(qubit_count));
  s.terminal_frame.assign(qubit_count, PulseLabel{});
  // Pulse-string position p (1-based, boundary after interval p-1) carries
  // pattern[(p-1) % 4]; position `slots` is the terminal entry.
  for (int q : subset) {
    for (int j = 1; j < slots; ++j) s.grid[j][q] = pattern[(j - 1) % 4];
    s.terminal_frame[q] = pattern[(slots - 1) % 4];
  }
  return s;
}

/// Free evolution for the given number of slots; the bench baseline.
inline PulseSchedule synth_idle(int qubit_count, int slots) {
  PulseSchedule s;
  s.variant = "idle";
  s.qubit_count = qubit_count;
  s.grid.assign(slots, std::vector<PulseLabel>(qubit_count));
  s.terminal_frame.assign(qubit_count, PulseLabel{});
  return s;
}

/// Convenience constructors picking default maps/partitions.

inline int system_color_count(const Coloring& coloring,
                              const std::set<int>& spectators) {
  int k = 0;
  for (int c = 1; c <= coloring.color_count; ++c)
    if (!spectators.count(c)) ++k;
  return k;
}

inline PulseSchedule synth_chadd_default(const ConnectivityGraph& graph,
                                         const Coloring& coloring,
                                         Pauli axis = Pauli::X,
                                         const std::set<int>& spectators = {}) {
  const int chi = system_color_count(coloring, spectators);
  const auto map = default_row_map(coloring, nu_single_axis(chi), spectators);
  return synth_single_axis(graph, coloring, map, axis);
}

inline PulseSchedule synth_multi_axis_default(
    const ConnectivityGraph& graph, const Coloring& coloring,
    const std::set<int>& spectators = {}) {
  const int chi = system_color_count(coloring, spectators);
  const SchurPartition partition = schur_partition(nu_multi_axis(chi));
  return synth_multi_axis(graph, coloring, partition,
                          default_triple_map(coloring, partition, spectators));
}

inline PulseSchedule synth_robust_default(const ConnectivityGraph& graph,
                                          const Coloring& coloring,
                                          const std::set<int>& spectators = {}) {
  const int chi = system_color_count(coloring, spectators);
  const auto map = default_row_map(coloring, nu_single_axis(chi), spectators);
  return synth_robust(graph, coloring, map);
}

inline PulseSchedule synth_concatenated_default(
    const ConnectivityGraph& graph, const Coloring& coloring,
    const std::set<int>& spectators = {}) {
  const int chi = system_color_count(coloring, spectators);
  const auto map = default_row_map(coloring, nu_single_axis(chi), spectators);
  return synth_concatenated(graph, coloring, map);
}

}  // namespace chadd
