#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "chadd/pauli.hpp"
#include "chadd/schedule.hpp"

namespace chadd {

/// n-qubit Pauli string; ops[q] is the letter on qubit q.
using PauliString = std::vector<Pauli>;

inline PauliString single_site_term(int n, int v, Pauli axis) {
  PauliString s(n, Pauli::I);
  s.at(v) = axis;
  return s;
}

inline PauliString two_site_term(int n, int u, Pauli au, int v, Pauli av) {
  PauliString s(n, Pauli::I);
  s.at(u) = au;
  s.at(v) = av;
  return s;
}

inline std::string pauli_string_text(const PauliString& s) {
  std::string out;
  for (Pauli p : s) out += pauli_char(p);
  return out;
}

/// Sign picked up by a Pauli string under conjugation by a frame of Pauli
/// letters: F P F^dag = sign * P. Exact integer arithmetic.
inline int frame_conjugation_sign(const std::vector<Pauli>& frame,
                                  const PauliString& term) {
  int sign = 1;
  for (std::size_t q = 0; q < term.size(); ++q)
    if (anticommutes(frame[q], term[q])) sign = -sign;
  return sign;
}

/// Integer-coefficient polynomial over Pauli strings. Conjugation by Pauli
/// frames maps each string to +/- itself, so coefficients stay integers;
/// zero coefficients are never stored.
class PauliPolynomial {
 public:
  void add(const PauliString& term, long long coeff) {
    if (coeff == 0) return;
    auto it = coeffs_.find(term);
    if (it == coeffs_.end()) {
      coeffs_.emplace(term, coeff);
    } else {
      it->second += coeff;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  long long coefficient(const PauliString& term) const {
    auto it = coeffs_.find(term);
    return it == coeffs_.end() ? 0 : it->second;
  }

  std::size_t term_count() const { return coeffs_.size(); }
  const std::map<PauliString, long long>& terms() const { return coeffs_; }

  bool operator==(const PauliPolynomial& o) const {
    return coeffs_ == o.coeffs_;
  }

 private:
  std::map<PauliString, long long> coeffs_;
};

/// The symbolic footprint of an error Hamiltonian: which one- and two-body
/// Pauli strings appear (coefficients and bath factors are irrelevant for
/// the first-order cancellation pattern).
struct HamiltonianShape {
  int qubit_count = 0;
  std::vector<PauliString> terms;

  /// All 3n single-site and all 9|E| two-site strings of a graph.
  template <typename EdgeRange>
  static HamiltonianShape full(int n, const EdgeRange& edges) {
    HamiltonianShape shape;
    shape.qubit_count = n;
    static constexpr Pauli axes[3] = {Pauli::X, Pauli::Y, Pauli::Z};
    for (int v = 0; v < n; ++v)
      for (Pauli a : axes) shape.terms.push_back(single_site_term(n, v, a));
    for (const auto& [u, v] : edges)
      for (Pauli a : axes)
        for (Pauli b : axes)
          shape.terms.push_back(two_site_term(n, u, a, v, b));
    return shape;
  }
};

/// First-order average Hamiltonian over one schedule cycle: the exact sum
/// over slots of frame_j . H . frame_j^dag, term by term. Every input term
/// comes back as itself with an integer coefficient in [-N, N]; for CHaDD
/// schedules the surviving coefficients are exactly 0 or exactly N.
inline PauliPolynomial first_order_average(const PulseSchedule& schedule,
                                           const HamiltonianShape& shape) {
  if (shape.qubit_count != schedule.qubit_count)
    throw std::invalid_argument("oracle: shape/schedule qubit mismatch");
  const auto frames = schedule.frames();

  // Precompute supports once; almost all string entries are identity.
  struct Support {
    std::vector<std::pair<int, Pauli>> sites;
  };
  std::vector<Support> supports(shape.terms.size());
  for (std::size_t t = 0; t < shape.terms.size(); ++t)
    for (int q = 0; q < shape.qubit_count; ++q)
      if (shape.terms[t][q] != Pauli::I)
        supports[t].sites.emplace_back(q, shape.terms[t][q]);

  PauliPolynomial out;
  for (std::size_t t = 0; t < shape.terms.size(); ++t) {
    long long total = 0;
    for (const auto& frame : frames) {
      int sign = 1;
      for (auto [q, p] : supports[t].sites)
        if (anticommutes(frame[q], p)) sign = -sign;
      total += sign;
    }
    out.add(shape.terms[t], total);
  }
  return out;
}

}  // namespace chadd
