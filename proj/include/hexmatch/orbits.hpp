#pragma once

// The Klein four-group {id, comp, rev, comp∘rev} acting on the hypercube:
// group elements, orbits, orbit classes and the orbit census.

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hexmatch/bitcore.hpp"

namespace hexmatch {

// Encoded so that composition is XOR of the tags.
enum class K4Element : std::uint8_t { Id = 0, Comp = 1, Rev = 2, CompRev = 3 };

constexpr K4Element compose(K4Element a, K4Element b) {
  return static_cast<K4Element>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

inline constexpr std::array<K4Element, 4> k4_elements = {K4Element::Id, K4Element::Comp,
                                                         K4Element::Rev, K4Element::CompRev};

inline BitVector apply(K4Element g, BitVector h) {
  switch (g) {
    case K4Element::Id:
      return h;
    case K4Element::Comp:
      return complement(h);
    case K4Element::Rev:
      return reverse(h);
    case K4Element::CompRev:
      return comp_rev(h);
  }
  return h;
}

/// The non-identity group element relating the two ends of a matched pair.
enum class PairingKind : std::uint8_t { Comp = 1, Rev = 2, CompRev = 3 };

inline constexpr std::array<PairingKind, 3> pairing_kinds = {PairingKind::Comp, PairingKind::Rev,
                                                             PairingKind::CompRev};

constexpr K4Element as_element(PairingKind k) { return static_cast<K4Element>(k); }

inline BitVector apply(PairingKind k, BitVector h) { return apply(as_element(k), h); }

constexpr std::string_view to_string(PairingKind k) {
  switch (k) {
    case PairingKind::Comp:
      return "comp";
    case PairingKind::Rev:
      return "rev";
    case PairingKind::CompRev:
      return "comprev";
  }
  return "?";
}

inline std::optional<PairingKind> parse_kind(std::string_view s) {
  for (auto k : pairing_kinds) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

/// A subset of {Comp, Rev, CompRev}. Iterates in the fixed order Comp, Rev, CompRev.
class KindSet {
 public:
  constexpr KindSet() = default;
  constexpr KindSet(std::initializer_list<PairingKind> kinds) {
    for (auto k : kinds) insert(k);
  }

  static constexpr KindSet all() { return {PairingKind::Comp, PairingKind::Rev, PairingKind::CompRev}; }

  constexpr void insert(PairingKind k) { bits_ |= bit(k); }
  constexpr bool contains(PairingKind k) const { return (bits_ & bit(k)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool is_subset_of(KindSet other) const { return (bits_ & ~other.bits_) == 0; }

  std::vector<PairingKind> members() const {
    std::vector<PairingKind> out;
    for (auto k : pairing_kinds) {
      if (contains(k)) out.push_back(k);
    }
    return out;
  }

  /// Comma-joined names, e.g. "comp,rev".
  std::string to_string() const {
    std::string out;
    for (auto k : members()) {
      if (!out.empty()) out += ',';
      out += hexmatch::to_string(k);
    }
    return out;
  }

  friend constexpr bool operator==(KindSet, KindSet) = default;

 private:
  static constexpr std::uint8_t bit(PairingKind k) {
    return static_cast<std::uint8_t>(1U << static_cast<unsigned>(k));
  }
  std::uint8_t bits_ = 0;
};

enum class OrbitClass : std::uint8_t { Generic, Palindrome, AntiSymmetric };

constexpr std::string_view to_string(OrbitClass c) {
  switch (c) {
    case OrbitClass::Generic:
      return "generic";
    case OrbitClass::Palindrome:
      return "palindrome";
    case OrbitClass::AntiSymmetric:
      return "antisymmetric";
  }
  return "?";
}

inline OrbitClass classify(BitVector h) {
  if (is_palindrome(h)) return OrbitClass::Palindrome;
  if (is_antisymmetric(h)) return OrbitClass::AntiSymmetric;
  return OrbitClass::Generic;
}

/// One orbit of the K4 action.
///
/// pairing_costs holds the total cost of each nontrivial pairing restricted to
/// the orbit. Size-2 orbits list their single pairing under Comp only: on a
/// palindrome orbit CompRev coincides with Comp, on an anti-symmetric orbit
/// Rev coincides with Comp.
struct OrbitRecord {
  BitVector representative;
  std::vector<BitVector> elements;  // ascending by value
  OrbitClass cls;
  unsigned rev_distance;
  std::map<PairingKind, std::uint64_t> pairing_costs;

  std::size_t size() const { return elements.size(); }

  bool contains(BitVector h) const {
    return std::binary_search(elements.begin(), elements.end(), h);
  }

  /// Kinds that realise this orbit's pairing under the given label. For a
  /// Generic orbit that is just {kind}; for size-2 orbits it includes the
  /// coinciding kind.
  KindSet coinciding(PairingKind kind) const {
    if (cls == OrbitClass::Palindrome && kind == PairingKind::Comp)
      return {PairingKind::Comp, PairingKind::CompRev};
    if (cls == OrbitClass::AntiSymmetric && kind == PairingKind::Comp)
      return {PairingKind::Comp, PairingKind::Rev};
    return {kind};
  }
};

namespace detail {

inline BitVector orbit_min(BitVector h) {
  return std::min({h, complement(h), reverse(h), comp_rev(h)});
}

}  // namespace detail

inline OrbitRecord orbit_of(BitVector h) {
  std::vector<BitVector> elements{h, complement(h), reverse(h), comp_rev(h)};
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

  const BitVector rep = elements.front();
  const unsigned n = rep.width();
  const unsigned d = hamming(rep, reverse(rep));

  OrbitRecord rec{rep, std::move(elements), classify(rep), d, {}};
  switch (rec.cls) {
    case OrbitClass::Generic:
      rec.pairing_costs[PairingKind::Comp] = 2ULL * n;
      rec.pairing_costs[PairingKind::Rev] = 2ULL * d;
      rec.pairing_costs[PairingKind::CompRev] = 2ULL * (n - d);
      break;
    case OrbitClass::Palindrome:
    case OrbitClass::AntiSymmetric:
      rec.pairing_costs[PairingKind::Comp] = n;
      break;
  }
  return rec;
}

struct OrbitCensus {
  unsigned width = 0;
  std::uint64_t generic_orbits = 0;
  std::uint64_t palindrome_orbits = 0;
  std::uint64_t antisymmetric_orbits = 0;
  std::uint64_t generic_elements = 0;
  std::uint64_t palindrome_elements = 0;
  std::uint64_t antisymmetric_elements = 0;

  std::uint64_t total_orbits() const {
    return generic_orbits + palindrome_orbits + antisymmetric_orbits;
  }
  std::uint64_t total_elements() const {
    return generic_elements + palindrome_elements + antisymmetric_elements;
  }
};

inline OrbitCensus orbit_census(unsigned width) {
  OrbitCensus c;
  c.width = width;
  for (BitVector h : all_values(width)) {
    const OrbitClass cls = classify(h);
    const bool is_rep = detail::orbit_min(h) == h;
    switch (cls) {
      case OrbitClass::Generic:
        ++c.generic_elements;
        c.generic_orbits += is_rep;
        break;
      case OrbitClass::Palindrome:
        ++c.palindrome_elements;
        c.palindrome_orbits += is_rep;
        break;
      case OrbitClass::AntiSymmetric:
        ++c.antisymmetric_elements;
        c.antisymmetric_orbits += is_rep;
        break;
    }
  }
  return c;
}

/// Every orbit once, sorted by representative (the orbit minimum).
inline std::vector<OrbitRecord> canonical_orbits(unsigned width) {
  std::vector<OrbitRecord> out;
  for (BitVector h : all_values(width)) {
    if (detail::orbit_min(h) == h) out.push_back(orbit_of(h));
  }
  return out;
}

}  // namespace hexmatch
