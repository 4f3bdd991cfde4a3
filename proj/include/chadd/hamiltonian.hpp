#pragma once

#include <complex>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "chadd/graph.hpp"
#include "chadd/pauli.hpp"
#include "chadd/pauli_poly.hpp"

namespace chadd {

inline std::string axis_name(Pauli p) {
  switch (p) {
    case Pauli::X: return "x";
    case Pauli::Y: return "y";
    case Pauli::Z: return "z";
    default: throw std::invalid_argument("axis must be x, y, or z");
  }
}

inline Pauli axis_from_name(const std::string& s) {
  if (s == "x") return Pauli::X;
  if (s == "y") return Pauli::Y;
  if (s == "z") return Pauli::Z;
  throw std::invalid_argument("unknown axis '" + s + "'");
}

/// Error Hamiltonian H = H1 + H2: single-qubit terms w_v^a sigma_v^a and
/// coupling terms J_uv^{ab} sigma_u^a sigma_v^b on graph edges, each
/// optionally tensored with a Hermitian bath operator. bath_dim = 1 means a
/// closed system with coherent errors.
struct ErrorHamiltonian {
  struct Single {
    int v;
    Pauli axis;
    double coeff;
    Eigen::MatrixXcd bath;  // empty = identity on the bath
  };
  struct Pair {
    int u, v;  // u < v, an edge of the graph
    Pauli axis_u, axis_v;
    double coeff;
    Eigen::MatrixXcd bath;
  };

  ConnectivityGraph graph;
  std::vector<Single> singles;
  std::vector<Pair> pairs;
  int bath_dim = 1;

  void validate() const {
    if (bath_dim < 1) throw std::invalid_argument("hamiltonian: bath_dim < 1");
    auto check_bath = [&](const Eigen::MatrixXcd& b, const char* what) {
      if (b.size() == 0) return;
      if (b.rows() != bath_dim || b.cols() != bath_dim)
        throw std::invalid_argument(std::string("hamiltonian: ") + what +
                                    " bath dimension mismatch");
      if ((b - b.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument(std::string("hamiltonian: ") + what +
                                    " bath operator not Hermitian");
    };
    for (const auto& s : singles) {
      if (s.v < 0 || s.v >= graph.vertex_count())
        throw std::invalid_argument("hamiltonian: single term vertex range");
      if (s.axis == Pauli::I)
        throw std::invalid_argument("hamiltonian: identity axis in term");
      check_bath(s.bath, "single");
    }
    for (const auto& p : pairs) {
      if (!(p.u < p.v))
        throw std::invalid_argument("hamiltonian: pair keys must have u < v");
      if (!graph.has_edge(p.u, p.v))
        throw std::invalid_argument("hamiltonian: pair term off-edge");
      if (p.axis_u == Pauli::I || p.axis_v == Pauli::I)
        throw std::invalid_argument("hamiltonian: identity axis in term");
      check_bath(p.bath, "pair");
    }
  }

  HamiltonianShape shape() const {
    HamiltonianShape s;
    s.qubit_count = graph.vertex_count();
    for (const auto& t : singles)
      s.terms.push_back(single_site_term(s.qubit_count, t.v, t.axis));
    for (const auto& t : pairs)
      s.terms.push_back(
          two_site_term(s.qubit_count, t.u, t.axis_u, t.v, t.axis_v));
    return s;
  }

  /// Terms surviving a single-axis sequence about `axis`: the pure-axis
  /// singles and pure axis-axis pairs.
  ErrorHamiltonian surviving_single_axis(Pauli axis) const {
    ErrorHamiltonian out;
    out.graph = graph;
    out.bath_dim = bath_dim;
    for (const auto& s : singles)
      if (s.axis == axis) out.singles.push_back(s);
    for (const auto& p : pairs)
      if (p.axis_u == axis && p.axis_v == axis) out.pairs.push_back(p);
    return out;
  }

  nlohmann::json to_json() const {
    nlohmann::json singles_j = nlohmann::json::array();
    for (const auto& s : singles)
      singles_j.push_back({s.v, axis_name(s.axis), s.coeff});
    nlohmann::json pairs_j = nlohmann::json::array();
    for (const auto& p : pairs)
      pairs_j.push_back(
          {p.u, p.v, axis_name(p.axis_u), axis_name(p.axis_v), p.coeff});
    return nlohmann::json{{"graph", graph.to_json()},
                          {"singles", singles_j},
                          {"pairs", pairs_j},
                          {"bath_dim", bath_dim}};
  }

  static ErrorHamiltonian from_json(const nlohmann::json& j) {
    ErrorHamiltonian h;
    h.graph = ConnectivityGraph::from_json(j.at("graph"));
    h.bath_dim = j.value("bath_dim", 1);
    for (const auto& s : j.value("singles", nlohmann::json::array()))
      h.singles.push_back({s.at(0).get<int>(),
                           axis_from_name(s.at(1).get<std::string>()),
                           s.at(2).get<double>(),
                           {}});
    for (const auto& p : j.value("pairs", nlohmann::json::array())) {
      int u = p.at(0).get<int>(), v = p.at(1).get<int>();
      Pauli au = axis_from_name(p.at(2).get<std::string>());
      Pauli av = axis_from_name(p.at(3).get<std::string>());
      if (u > v) {
        std::swap(u, v);
        std::swap(au, av);
      }
      h.pairs.push_back({u, v, au, av, p.at(4).get<double>(), {}});
    }
    h.validate();
    return h;
  }
};

/// Random Hermitian bath operator with entries of order one.
template <typename Rng>
Eigen::MatrixXcd random_bath_operator(int dim, Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::MatrixXcd m(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c)
      m(r, c) = std::complex<double>(u(rng), u(rng));
  return 0.5 * (m + m.adjoint().eval());
}

struct RandomHamiltonianOptions {
  double coeff_lo = -1.0;
  double coeff_hi = 1.0;
  int bath_dim = 1;
  bool random_baths = false;  // otherwise identity bath factors
};

/// Dense random instance: all three axes on every vertex and all nine axis
/// pairs on every edge, coefficients uniform in [coeff_lo, coeff_hi].
template <typename Rng>
ErrorHamiltonian random_error_hamiltonian(const ConnectivityGraph& g, Rng& rng,
                                          const RandomHamiltonianOptions& opt = {}) {
  std::uniform_real_distribution<double> u(opt.coeff_lo, opt.coeff_hi);
  static constexpr Pauli axes[3] = {Pauli::X, Pauli::Y, Pauli::Z};
  ErrorHamiltonian h;
  h.graph = g;
  h.bath_dim = opt.bath_dim;
  for (int v = 0; v < g.vertex_count(); ++v)
    for (Pauli a : axes) {
      Eigen::MatrixXcd bath;
      if (opt.random_baths && opt.bath_dim > 1)
        bath = random_bath_operator(opt.bath_dim, rng);
      h.singles.push_back({v, a, u(rng), bath});
    }
  for (auto [eu, ev] : g.edges())
    for (Pauli a : axes)
      for (Pauli b : axes) {
        Eigen::MatrixXcd bath;
        if (opt.random_baths && opt.bath_dim > 1)
          bath = random_bath_operator(opt.bath_dim, rng);
        h.pairs.push_back({eu, ev, a, b, u(rng), bath});
      }
  return h;
}

}  // namespace chadd
