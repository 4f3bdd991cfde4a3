#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace chadd {

/// Disjoint triples of nonzero Hadamard row indices, each XOR-ing to zero
/// (equivalently: rows whose entrywise product is the all-plus row). These
/// are lines through the origin of the binary projective space on nu bits.
struct SchurPartition {
  int nu = 0;
  std::vector<std::array<std::uint32_t, 3>> triples;

  std::size_t expected_count() const {
    const std::uint64_t n = std::uint64_t{1} << nu;
    return (nu % 2 == 0) ? (n - 1) / 3 : (n - 5) / 3;
  }

  nlohmann::json to_json() const {
    nlohmann::json t = nlohmann::json::array();
    for (const auto& tr : triples) t.push_back({tr[0], tr[1], tr[2]});
    return nlohmann::json{{"nu", nu}, {"triples", t}};
  }

  static SchurPartition from_json(const nlohmann::json& j) {
    SchurPartition p;
    p.nu = j.at("nu").get<int>();
    for (const auto& t : j.at("triples"))
      p.triples.push_back({t.at(0).get<std::uint32_t>(),
                           t.at(1).get<std::uint32_t>(),
                           t.at(2).get<std::uint32_t>()});
    return p;
  }
};

/// Checks the XOR condition on every triple, pairwise disjointness, index
/// ranges, and the parity-dependent count formula.
inline bool verify_partition(const SchurPartition& p) {
  if (p.nu < 2) return false;
  const std::uint32_t n = std::uint32_t{1} << p.nu;
  std::vector<bool> seen(n, false);
  for (const auto& t : p.triples) {
    if ((t[0] ^ t[1] ^ t[2]) != 0) return false;
    for (std::uint32_t x : t) {
      if (x == 0 || x >= n) return false;
      if (seen[x]) return false;
      seen[x] = true;
    }
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) return false;
  }
  return p.triples.size() == p.expected_count();
}

namespace detail {

// GF(4) on 2-bit codes {0, 1, w, w^2} = {0b00, 0b01, 0b10, 0b11}.
inline std::uint32_t gf4_mul(std::uint32_t a, std::uint32_t b) {
  static constexpr std::uint32_t table[4][4] = {
      {0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  return table[a][b];
}

// Componentwise scalar multiple of an index viewed as a GF(4)^(nu/2)
// vector through its bit pairs.
inline std::uint32_t gf4_scale(std::uint32_t v, std::uint32_t scalar,
                               int pairs) {
  std::uint32_t out = 0;
  for (int p = 0; p < pairs; ++p)
    out |= gf4_mul((v >> (2 * p)) & 3, scalar) << (2 * p);
  return out;
}

}  // namespace detail

/// Even nu: identify bit pairs with GF(4); the nonzero scalar multiples
/// {x, wx, w^2x} of each projective point XOR to zero since 1 + w + w^2 = 0,
/// and the scalar orbits partition all 2^nu - 1 nonzero indices into
/// (2^nu - 1)/3 triples.
inline SchurPartition partition_even(int nu) {
  if (nu < 2 || nu % 2 != 0)
    throw std::invalid_argument("partition_even: nu must be even and >= 2");
  const std::uint32_t n = std::uint32_t{1} << nu;
  const int pairs = nu / 2;
  SchurPartition p;
  p.nu = nu;
  std::vector<bool> covered(n, false);
  for (std::uint32_t x = 1; x < n; ++x) {
    if (covered[x]) continue;
    std::array<std::uint32_t, 3> t = {x, detail::gf4_scale(x, 2, pairs),
                                      detail::gf4_scale(x, 3, pairs)};
    std::sort(t.begin(), t.end());
    for (std::uint32_t e : t) covered[e] = true;
    p.triples.push_back(t);
  }
  return p;
}

/// Odd nu: no full partition exists; the maximum is (2^nu - 5)/3 disjoint
/// triples with 4 indices left uncovered. Backtracking over the smallest
/// uncovered index, pairing it or spending one of the 4 leftover slots.
inline SchurPartition partition_odd(int nu) {
  if (nu < 3 || nu % 2 == 0)
    throw std::invalid_argument("partition_odd: nu must be odd and >= 3");
  const std::uint32_t n = std::uint32_t{1} << nu;
  const std::size_t target = (static_cast<std::size_t>(n) - 5) / 3;

  std::vector<bool> covered(n, false);
  covered[0] = true;
  std::vector<std::array<std::uint32_t, 3>> triples;

  std::function<bool(std::uint32_t, int)> search = [&](std::uint32_t from,
                                                       int leftovers) {
    if (triples.size() == target) return true;
    std::uint32_t a = from;
    while (a < n && covered[a]) ++a;
    if (a == n) return false;
    covered[a] = true;
    for (std::uint32_t b = a + 1; b < n; ++b) {
      if (covered[b]) continue;
      const std::uint32_t c = a ^ b;
      if (c <= b || covered[c]) continue;
      covered[b] = covered[c] = true;
      triples.push_back({a, b, c});
      if (search(a + 1, leftovers)) return true;
      triples.pop_back();
      covered[b] = covered[c] = false;
    }
    if (leftovers > 0 && search(a + 1, leftovers - 1)) return true;
    covered[a] = false;
    return false;
  };

  if (!search(1, 4))
    throw std::runtime_error("partition_odd: search failed");  // cannot happen
  SchurPartition p;
  p.nu = nu;
  p.triples = std::move(triples);
  return p;
}

/// Partition for either parity.
inline SchurPartition schur_partition(int nu) {
  return (nu % 2 == 0) ? partition_even(nu) : partition_odd(nu);
}

/// Alternative full partition for nu = 4 whose first three triples carry
/// 16, 8, and 14 boundary pulses per 16-step cycle. Used for the reference
/// pulse-rate comparison against XY4 (38 pulses vs 48 on three colors).
inline SchurPartition reference_partition_nu4() {
  SchurPartition p;
  p.nu = 4;
  p.triples = {{1, 8, 9}, {2, 4, 6}, {3, 13, 14}, {5, 10, 15}, {7, 11, 12}};
  return p;
}

}  // namespace chadd
