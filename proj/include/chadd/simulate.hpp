#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "chadd/hamiltonian.hpp"
#include "chadd/pauli.hpp"
#include "chadd/schedule.hpp"

namespace chadd {

using Cplx = std::complex<double>;

/// Dense dimension guard: 2^n * bath_dim capped at 2^14.
inline Eigen::Index dense_dimension(const ErrorHamiltonian& h) {
  const int n = h.graph.vertex_count();
  if (n > 14)
    throw std::length_error("dense: too many qubits for a dense build");
  const Eigen::Index dim = (Eigen::Index{1} << n) * h.bath_dim;
  if (dim > (Eigen::Index{1} << 14))
    throw std::length_error("dense: system x bath dimension too large");
  return dim;
}

/// Kronecker assembly of the error Hamiltonian. Qubit 0 owns the most
/// significant system bit; the bath factor is the least significant block.
inline Eigen::MatrixXcd build_dense(const ErrorHamiltonian& h) {
  h.validate();
  const int n = h.graph.vertex_count();
  const int d = h.bath_dim;
  const Eigen::Index dim = dense_dimension(h);
  const Eigen::Index sys = Eigen::Index{1} << n;

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::MatrixXcd bath_id = Eigen::MatrixXcd::Identity(d, d);

  // One Pauli string: |s> -> amp(s) |s ^ flip>.
  auto add_term = [&](const std::vector<std::pair<int, Pauli>>& sites,
                      double coeff, const Eigen::MatrixXcd& bath) {
    Eigen::Index flip = 0;
    for (auto [q, p] : sites)
      if (p == Pauli::X || p == Pauli::Y) flip |= Eigen::Index{1} << (n - 1 - q);
    const Eigen::MatrixXcd& b = bath.size() ? bath : bath_id;
    for (Eigen::Index s = 0; s < sys; ++s) {
      Cplx amp = coeff;
      for (auto [q, p] : sites) {
        const int bit = (s >> (n - 1 - q)) & 1;
        switch (p) {
          case Pauli::X: break;
          case Pauli::Y: amp *= bit ? Cplx(0, -1) : Cplx(0, 1); break;
          case Pauli::Z: amp *= bit ? -1.0 : 1.0; break;
          case Pauli::I: break;
        }
      }
      out.block((s ^ flip) * d, s * d, d, d) += amp * b;
    }
  };

  for (const auto& t : h.singles) add_term({{t.v, t.axis}}, t.coeff, t.bath);
  for (const auto& t : h.pairs)
    add_term({{t.u, t.axis_u}, {t.v, t.axis_v}}, t.coeff, t.bath);

  if ((out - out.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::runtime_error("dense: assembled Hamiltonian not Hermitian");
  return out;
}

namespace detail {

/// 2x2 pi rotation about the label's axis with over-rotation fraction
/// epsilon; a negative label rotates by -pi(1+epsilon).
inline Eigen::Matrix2cd pulse_gate(const PulseLabel& p, double epsilon) {
  const double theta = (p.negative ? -1.0 : 1.0) * M_PI * (1.0 + epsilon);
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const Cplx is(0.0, s);
  Eigen::Matrix2cd g;
  switch (p.axis) {
    case Pauli::X: g << Cplx(c), -is, -is, Cplx(c); break;
    case Pauli::Y: g << Cplx(c), Cplx(-s), Cplx(s), Cplx(c); break;
    case Pauli::Z: g << Cplx(c) - is, Cplx(0), Cplx(0), Cplx(c) + is; break;
    default: g.setIdentity(); break;
  }
  return g;
}

/// Left-multiplies a single-qubit gate into every column of `m` (states are
/// 1-column matrices). Index layout: i = s * bath_dim + b.
inline void apply_single_qubit(Eigen::MatrixXcd& m, int q, int n, int bath_dim,
                               const Eigen::Matrix2cd& g) {
  const Eigen::Index stride = (Eigen::Index{1} << (n - 1 - q)) * bath_dim;
  const Eigen::Index sys = Eigen::Index{1} << n;
  for (Eigen::Index col = 0; col < m.cols(); ++col) {
    for (Eigen::Index s = 0; s < sys; ++s) {
      if ((s >> (n - 1 - q)) & 1) continue;
      const Eigen::Index base = s * bath_dim;
      for (int b = 0; b < bath_dim; ++b) {
        const Eigen::Index i0 = base + b;
        const Eigen::Index i1 = i0 + stride;
        const Cplx a0 = m(i0, col), a1 = m(i1, col);
        m(i0, col) = g(0, 0) * a0 + g(0, 1) * a1;
        m(i1, col) = g(1, 0) * a0 + g(1, 1) * a1;
      }
    }
  }
}

inline void apply_pulse_row(Eigen::MatrixXcd& m,
                            const std::vector<PulseLabel>& row, int n,
                            int bath_dim, double epsilon) {
  for (int q = 0; q < n; ++q)
    if (!row[q].is_identity())
      apply_single_qubit(m, q, n, bath_dim, pulse_gate(row[q], epsilon));
}

}  // namespace detail

/// Bang-bang evolution engine: one eigendecomposition of H, reused for all
/// slot intervals and tau values.
class Evolver {
 public:
  explicit Evolver(const ErrorHamiltonian& h)
      : n_(h.graph.vertex_count()), bath_dim_(h.bath_dim) {
    Eigen::MatrixXcd hm = build_dense(h);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hm);
    if (es.info() != Eigen::Success)
      throw std::runtime_error("dense: eigendecomposition failed");
    vecs_ = es.eigenvectors();
    vals_ = es.eigenvalues();
  }

  Eigen::Index dimension() const { return vecs_.rows(); }

  /// exp(-i t H)
  Eigen::MatrixXcd propagator(double t) const {
    Eigen::VectorXcd phases(vals_.size());
    for (Eigen::Index i = 0; i < vals_.size(); ++i)
      phases(i) = std::exp(Cplx(0, -t * vals_(i)));
    return vecs_ * phases.asDiagonal() * vecs_.adjoint();
  }

  /// Total unitary of `repeats` cycles of the schedule with interval tau:
  /// per slot the boundary pulse then the free evolution, and the terminal
  /// frame pulse at the end of each cycle.
  Eigen::MatrixXcd evolve_unitary(const PulseSchedule& s, double tau,
                                  int repeats = 1, double epsilon = 0.0) const {
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dimension(), dimension());
    evolve_in_place(u, s, tau, repeats, epsilon);
    return u;
  }

  Eigen::VectorXcd evolve_state(const PulseSchedule& s, double tau,
                                const Eigen::VectorXcd& psi, int repeats = 1,
                                double epsilon = 0.0) const {
    Eigen::MatrixXcd m = psi;
    evolve_in_place(m, s, tau, repeats, epsilon);
    return m.col(0);
  }

 private:
  void evolve_in_place(Eigen::MatrixXcd& m, const PulseSchedule& s, double tau,
                       int repeats, double epsilon) const {
    const Eigen::MatrixXcd f = propagator(tau);
    for (int r = 0; r < repeats; ++r) {
      for (int j = 0; j < s.slot_count(); ++j) {
        detail::apply_pulse_row(m, s.grid[j], n_, bath_dim_, epsilon);
        m = f * m;
      }
      detail::apply_pulse_row(m, s.terminal_frame, n_, bath_dim_, epsilon);
    }
  }

  int n_;
  int bath_dim_;
  Eigen::MatrixXcd vecs_;
  Eigen::VectorXd vals_;
};

inline double operator_norm(const Eigen::MatrixXcd& m) {
  return Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues()(0);
}

inline bool is_unitary(const Eigen::MatrixXcd& u, double tol = 1e-10) {
  const Eigen::MatrixXcd g = u.adjoint() * u;
  return (g - Eigen::MatrixXcd::Identity(u.rows(), u.cols()))
             .cwiseAbs()
             .maxCoeff() < tol;
}

/// Distance up to global phase: min over phi of |U - e^{i phi} V|_op,
/// realized by aligning the trace phase. Pulse operators carry physical
/// -i factors that are unobservable, so comparisons discard them.
inline double phase_aligned_distance(const Eigen::MatrixXcd& u,
                                     const Eigen::MatrixXcd& v) {
  Cplx tr = (v.adjoint() * u).trace();
  Cplx phase = std::abs(tr) > 1e-300 ? tr / std::abs(tr) : Cplx(1, 0);
  return operator_norm(u - phase * v);
}

struct ResidualPoint {
  double tau;
  double residual;
  bool underflow;  // below the 1e-13 floor
};

struct ResidualScan {
  std::vector<ResidualPoint> points;
  double slope;  // log-log least-squares slope of residual vs tau
};

/// Residual against the first-order surviving evolution. For single-axis
/// CHaDD the target is exp(-i T (pure-axis terms)); for the multi-axis and
/// concatenated variants the target axis is I, meaning the identity. The
/// log-log slope is 2 when only the second-order term remains.
inline ResidualScan residual_scaling(const PulseSchedule& schedule,
                                     const ErrorHamiltonian& h,
                                     const std::vector<double>& taus,
                                     Pauli target_axis) {
  if (taus.size() < 3)
    throw std::invalid_argument("residual: need at least 3 tau values");
  const Evolver ev(h);

  ResidualScan scan;
  for (double tau : taus) {
    const Eigen::MatrixXcd u = ev.evolve_unitary(schedule, tau);
    if (!is_unitary(u))
      throw std::runtime_error("residual: evolution lost unitarity");
    Eigen::MatrixXcd target;
    if (target_axis == Pauli::I) {
      target = Eigen::MatrixXcd::Identity(u.rows(), u.cols());
    } else {
      const ErrorHamiltonian surv = h.surviving_single_axis(target_axis);
      const double total_time = tau * schedule.slot_count();
      if (surv.singles.empty() && surv.pairs.empty()) {
        target = Eigen::MatrixXcd::Identity(u.rows(), u.cols());
      } else {
        target = Evolver(surv).propagator(total_time);
      }
    }
    const double r = phase_aligned_distance(u, target);
    scan.points.push_back({tau, r, r < 1e-13});
  }

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& p : scan.points) {
    const double lx = std::log(p.tau), ly = std::log(std::max(p.residual, 1e-300));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double m = static_cast<double>(scan.points.size());
  scan.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return scan;
}

}  // namespace chadd
