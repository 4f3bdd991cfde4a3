#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace chadd {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// Axis product with the phase discarded: X*Y = Z and so on. The Pauli
/// labels form the Klein group under this product.
inline Pauli pauli_product(Pauli a, Pauli b) {
  return static_cast<Pauli>(static_cast<std::uint8_t>(a) ^
                            static_cast<std::uint8_t>(b));
}

inline bool anticommutes(Pauli a, Pauli b) {
  return a != Pauli::I && b != Pauli::I && a != b;
}

/// Sign of P under conjugation by a frame axis F: F P F^dag = +/- P.
inline int conjugation_sign(Pauli frame, Pauli p) {
  return anticommutes(frame, p) ? -1 : 1;
}

inline char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

inline Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
  }
  throw std::invalid_argument(std::string("unknown Pauli '") + c + "'");
}

/// A grid entry: a pi rotation about `axis`, negative sign meaning the
/// -pi rotation (the barred pulse of robust sequences). Identity carries
/// no sign.
struct PulseLabel {
  Pauli axis = Pauli::I;
  bool negative = false;

  bool is_identity() const { return axis == Pauli::I; }

  bool operator==(const PulseLabel& o) const {
    return axis == o.axis && (is_identity() || negative == o.negative);
  }

  std::string str() const {
    if (axis == Pauli::I) return "I";
    std::string s(1, pauli_char(axis));
    if (negative) s += '-';
    return s;
  }

  static PulseLabel parse(const std::string& s) {
    if (s.empty() || s.size() > 2)
      throw std::invalid_argument("bad pulse label '" + s + "'");
    PulseLabel p;
    p.axis = pauli_from_char(s[0]);
    if (s.size() == 2) {
      if (s[1] != '-') throw std::invalid_argument("bad pulse label '" + s + "'");
      p.negative = true;
    }
    if (p.axis == Pauli::I && p.negative)
      throw std::invalid_argument("identity pulse cannot carry a sign");
    return p;
  }
};

}  // namespace chadd
