#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "chadd/coloring.hpp"
#include "chadd/pauli.hpp"

namespace chadd {

/// Time-slotted pulse schedule. grid[j][q] is the pulse applied to qubit q
/// at the boundary entering slot j (grid[0] is referenced to the identity
/// frame), followed by free evolution for tau. terminal_frame holds the
/// closing pulse applied after the last slot, so that composing all pulses
/// yields the identity frame again.
struct PulseSchedule {
  std::string variant;
  double tau = 1.0;
  int qubit_count = 0;
  std::vector<std::vector<PulseLabel>> grid;  // slot_count x qubit_count
  std::vector<PulseLabel> terminal_frame;     // qubit_count

  // Synthesis metadata; not part of the wire format.
  std::optional<Coloring> coloring;
  std::set<int> spectator_colors;

  int slot_count() const { return static_cast<int>(grid.size()); }

  /// Conjugation frame per slot per qubit: the cumulative axis product of
  /// all pulses applied up to and including the boundary entering the slot.
  std::vector<std::vector<Pauli>> frames() const {
    std::vector<std::vector<Pauli>> f(slot_count(),
                                      std::vector<Pauli>(qubit_count, Pauli::I));
    std::vector<Pauli> cur(qubit_count, Pauli::I);
    for (int j = 0; j < slot_count(); ++j) {
      for (int q = 0; q < qubit_count; ++q)
        cur[q] = pauli_product(grid[j][q].axis, cur[q]);
      f[j] = cur;
    }
    return f;
  }

  /// Per-qubit pulse string read as boundaries after each interval, i.e.
  /// grid[1..T-1] followed by the terminal pulse. This is the reading in
  /// which a length-4 cycle prints like "XXXX" or "IXIX".
  std::vector<PulseLabel> pulse_string(int qubit) const {
    std::vector<PulseLabel> s;
    for (int j = 1; j < slot_count(); ++j) s.push_back(grid[j][qubit]);
    s.push_back(terminal_frame[qubit]);
    return s;
  }

  std::string pulse_string_text(int qubit) const {
    std::string out;
    for (const auto& p : pulse_string(qubit)) {
      if (!out.empty()) out += ' ';
      out += p.str();
    }
    return out;
  }

  void validate() const {
    if (static_cast<int>(terminal_frame.size()) != qubit_count)
      throw std::invalid_argument("schedule: terminal frame size mismatch");
    for (const auto& row : grid)
      if (static_cast<int>(row.size()) != qubit_count)
        throw std::invalid_argument("schedule: grid row size mismatch");
  }

  nlohmann::json to_json() const {
    nlohmann::json g = nlohmann::json::array();
    for (const auto& row : grid) {
      nlohmann::json r = nlohmann::json::array();
      for (const auto& p : row) r.push_back(p.str());
      g.push_back(r);
    }
    nlohmann::json t = nlohmann::json::array();
    for (const auto& p : terminal_frame) t.push_back(p.str());
    return nlohmann::json{{"variant", variant}, {"tau", tau},
                          {"slots", slot_count()}, {"qubits", qubit_count},
                          {"grid", g},           {"terminal_frame", t}};
  }

  static PulseSchedule from_json(const nlohmann::json& j) {
    PulseSchedule s;
    s.variant = j.at("variant").get<std::string>();
    s.tau = j.at("tau").get<double>();
    s.qubit_count = j.at("qubits").get<int>();
    for (const auto& row : j.at("grid")) {
      std::vector<PulseLabel> r;
      for (const auto& p : row) r.push_back(PulseLabel::parse(p.get<std::string>()));
      s.grid.push_back(std::move(r));
    }
    for (const auto& p : j.at("terminal_frame"))
      s.terminal_frame.push_back(PulseLabel::parse(p.get<std::string>()));
    if (s.slot_count() != j.at("slots").get<int>())
      throw std::invalid_argument("schedule json: slot count mismatch");
    s.validate();
    return s;
  }
};

/// Pulse accounting for a schedule cycle. prr is pulses per qubit per unit
/// time; the per-color split requires coloring metadata.
struct ScheduleMetrics {
  int depth = 0;
  long long total_pulses = 0;
  double prr = 0.0;
  std::map<int, long long> per_color_pulses;
  long long spectator_pulses = 0;
};

inline ScheduleMetrics compute_metrics(const PulseSchedule& s) {
  ScheduleMetrics m;
  m.depth = s.slot_count();
  auto count_qubit = [&](int q) {
    long long c = 0;
    for (int j = 0; j < s.slot_count(); ++j)
      if (!s.grid[j][q].is_identity()) ++c;
    if (!s.terminal_frame[q].is_identity()) ++c;
    return c;
  };
  for (int q = 0; q < s.qubit_count; ++q) {
    long long c = count_qubit(q);
    m.total_pulses += c;
    if (s.coloring) {
      int color = s.coloring->color_of(q);
      m.per_color_pulses[color] += c;
      if (s.spectator_colors.count(color)) m.spectator_pulses += c;
    }
  }
  const double denom =
      static_cast<double>(s.qubit_count) * s.slot_count() * s.tau;
  m.prr = denom > 0 ? static_cast<double>(m.total_pulses) / denom : 0.0;
  return m;
}

}  // namespace chadd
