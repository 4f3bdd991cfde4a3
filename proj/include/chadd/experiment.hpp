#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <Eigen/Dense>

#include "chadd/rng.hpp"
#include "chadd/schedule.hpp"
#include "chadd/simulate.hpp"

namespace chadd {

// State-preservation protocol: prepare every system qubit in one of the six
// Pauli eigenstates and every spectator ("gray") qubit in |0>, |+>, or |1>,
// run the schedule, undo the preparation, and read the fraction of |0>
// outcomes on the system qubits.

enum class GrayPrep { Zero, Plus, One };
enum class SystemPrep { ZPlus, ZMinus, XPlus, XMinus, YPlus, YMinus };

struct PrepSetting {
  GrayPrep gray;
  SystemPrep system;
};

/// The 18-setting grid: 3 gray states x 6 system eigenstates.
inline std::vector<PrepSetting> full_prep_grid() {
  std::vector<PrepSetting> grid;
  for (GrayPrep g : {GrayPrep::Zero, GrayPrep::Plus, GrayPrep::One})
    for (SystemPrep s :
         {SystemPrep::ZPlus, SystemPrep::ZMinus, SystemPrep::XPlus,
          SystemPrep::XMinus, SystemPrep::YPlus, SystemPrep::YMinus})
      grid.push_back({g, s});
  return grid;
}

namespace detail {

inline Eigen::Matrix2cd hadamard_gate() {
  Eigen::Matrix2cd h;
  const double r = 1.0 / std::sqrt(2.0);
  h << r, r, r, -r;
  return h;
}

inline Eigen::Matrix2cd prep_gate_system(SystemPrep p) {
  Eigen::Matrix2cd g = Eigen::Matrix2cd::Identity();
  const Eigen::Matrix2cd h = hadamard_gate();
  Eigen::Matrix2cd z = Eigen::Matrix2cd::Identity();
  z(1, 1) = -1;
  Eigen::Matrix2cd s = Eigen::Matrix2cd::Identity();
  s(1, 1) = Cplx(0, 1);
  Eigen::Matrix2cd x;
  x << 0, 1, 1, 0;
  switch (p) {
    case SystemPrep::ZPlus: return g;
    case SystemPrep::ZMinus: return x;
    case SystemPrep::XPlus: return h;
    case SystemPrep::XMinus: return z * h;
    case SystemPrep::YPlus: return s * h;
    case SystemPrep::YMinus: return s.adjoint() * h;
  }
  return g;
}

inline Eigen::Matrix2cd prep_gate_gray(GrayPrep p) {
  switch (p) {
    case GrayPrep::Zero: return Eigen::Matrix2cd::Identity();
    case GrayPrep::Plus: return hadamard_gate();
    case GrayPrep::One: {
      Eigen::Matrix2cd x;
      x << 0, 1, 1, 0;
      return x;
    }
  }
  return Eigen::Matrix2cd::Identity();
}

}  // namespace detail

/// Which qubits count as system (measured) and which are spectators.
struct ExperimentDesign {
  std::vector<int> system_qubits;
  std::vector<int> gray_qubits;

  static ExperimentDesign from_schedule(const PulseSchedule& s) {
    ExperimentDesign d;
    if (!s.coloring) {
      for (int q = 0; q < s.qubit_count; ++q) d.system_qubits.push_back(q);
      return d;
    }
    for (int q = 0; q < s.qubit_count; ++q) {
      if (s.spectator_colors.count(s.coloring->color_of(q)))
        d.gray_qubits.push_back(q);
      else
        d.system_qubits.push_back(q);
    }
    return d;
  }
};

/// Exact per-system-qubit |0> probabilities for one prepared setting after
/// `repeats` cycles (with optional pulse over-rotation epsilon).
inline std::vector<double> setting_probabilities(
    const Evolver& ev, const PulseSchedule& s, double tau,
    const ExperimentDesign& design, const PrepSetting& setting, int repeats,
    double epsilon = 0.0) {
  const int n = s.qubit_count;
  const int d = static_cast<int>(ev.dimension() >> n);
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(ev.dimension());
  psi(0) = 1.0;

  Eigen::MatrixXcd m = psi;
  const Eigen::Matrix2cd gs = detail::prep_gate_system(setting.system);
  const Eigen::Matrix2cd gg = detail::prep_gate_gray(setting.gray);
  for (int q : design.system_qubits) detail::apply_single_qubit(m, q, n, d, gs);
  for (int q : design.gray_qubits) detail::apply_single_qubit(m, q, n, d, gg);

  if (repeats > 0) {
    Eigen::VectorXcd v = ev.evolve_state(s, tau, m.col(0), repeats, epsilon);
    m = v;
  }

  const Eigen::Matrix2cd gs_dag = gs.adjoint();
  const Eigen::Matrix2cd gg_dag = gg.adjoint();
  for (int q : design.system_qubits)
    detail::apply_single_qubit(m, q, n, d, gs_dag);
  for (int q : design.gray_qubits) detail::apply_single_qubit(m, q, n, d, gg_dag);

  std::vector<double> probs;
  probs.reserve(design.system_qubits.size());
  for (int q : design.system_qubits) {
    double p0 = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const Eigen::Index sys = i / d;
      if (((sys >> (n - 1 - q)) & 1) == 0) p0 += std::norm(m(i, 0));
    }
    probs.push_back(std::min(1.0, std::max(0.0, p0)));
  }
  return probs;
}

/// Fraction of |0> outcomes over all system qubits. shots = 0 returns the
/// exact expectation; otherwise each qubit's count is drawn binomially from
/// its exact probability.
inline double sample_fidelity(const std::vector<double>& probs, int shots,
                              std::mt19937_64& rng) {
  if (probs.empty()) return 1.0;
  if (shots <= 0) {
    double sum = 0;
    for (double p : probs) sum += p;
    return sum / static_cast<double>(probs.size());
  }
  long long zeros = 0;
  for (double p : probs) {
    std::binomial_distribution<long long> bin(shots, p);
    zeros += bin(rng);
  }
  return static_cast<double>(zeros) /
         (static_cast<double>(shots) * static_cast<double>(probs.size()));
}

struct FidelityRow {
  std::string schedule;
  int repeats = 0;
  double duration = 0.0;  // repeats x slots x tau
  double mean_fidelity = 0.0;
  double sigma = 0.0;  // sample std over the preparation settings
};

/// Runs one schedule at one repeat count over the full setting grid.
/// Sampling noise is seeded per (schedule, repeats, setting) so results are
/// independent of evaluation order.
inline FidelityRow fidelity_experiment_row(
    const Evolver& ev, const PulseSchedule& s, double tau,
    const ExperimentDesign& design, const std::vector<PrepSetting>& settings,
    int repeats, int shots, std::uint64_t seed, double epsilon = 0.0) {
  FidelityRow row;
  row.schedule = s.variant;
  row.repeats = repeats;
  row.duration = static_cast<double>(repeats) * s.slot_count() * tau;

  std::vector<double> fids;
  fids.reserve(settings.size());
  for (std::size_t i = 0; i < settings.size(); ++i) {
    auto probs =
        setting_probabilities(ev, s, tau, design, settings[i], repeats, epsilon);
    auto rng = derive_rng(seed, s.variant + "/" + std::to_string(repeats), i);
    fids.push_back(sample_fidelity(probs, shots, rng));
  }
  double mean = 0;
  for (double f : fids) mean += f;
  mean /= static_cast<double>(fids.size());
  double var = 0;
  for (double f : fids) var += (f - mean) * (f - mean);
  row.mean_fidelity = mean;
  row.sigma = fids.size() > 1 ? std::sqrt(var / (fids.size() - 1.0)) : 0.0;
  return row;
}

inline std::string fidelity_csv(const std::vector<FidelityRow>& rows) {
  std::string out = "schedule,repeats,duration,mean_fidelity,sigma\n";
  char buf[160];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%s,%d,%.12g,%.12g,%.12g\n",
                  r.schedule.c_str(), r.repeats, r.duration, r.mean_fidelity,
                  r.sigma);
    out += buf;
  }
  return out;
}

}  // namespace chadd
