#pragma once

// Perfect matchings on the hypercube stored as dense partner maps, the three
// named constructions, validation and cost accounting.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hexmatch/bitcore.hpp"
#include "hexmatch/orbits.hpp"

namespace hexmatch {

/// Two distinct vertices, stored with first < second by value.
struct UnorderedPair {
  BitVector first;
  BitVector second;

  UnorderedPair(BitVector a, BitVector b) : first(std::min(a, b)), second(std::max(a, b)) {}

  friend bool operator==(const UnorderedPair&, const UnorderedPair&) = default;
  friend auto operator<=>(const UnorderedPair&, const UnorderedPair&) = default;
};

/// A total map value -> partner over all 2^width vertices. Construction only
/// checks shape; use validate() for the matching laws.
class Matching {
 public:
  using value_type = BitVector::value_type;

  Matching(unsigned width, std::vector<value_type> partner)
      : width_(width), partner_(std::move(partner)) {
    check_width(width);
    if (partner_.size() != vertex_count(width)) {
      throw RangeError("partner map has " + std::to_string(partner_.size()) +
                       " entries, expected " + std::to_string(vertex_count(width)));
    }
    for (std::size_t i = 0; i < partner_.size(); ++i) {
      if (partner_[i] >= vertex_count(width)) {
        throw RangeError("partner of " + std::to_string(i) + " is " +
                         std::to_string(partner_[i]) + ", outside width " + std::to_string(width));
      }
    }
  }

  unsigned width() const noexcept { return width_; }
  std::span<const value_type> partners() const noexcept { return partner_; }

  BitVector partner(BitVector h) const {
    if (h.width() != width_) throw WidthMismatch(h.width(), width_);
    return BitVector(partner_[h.value()], width_);
  }

  /// Pairs {h, partner(h)} with h < partner(h), ascending. For a valid
  /// matching this is the full pair set.
  std::vector<UnorderedPair> pairs() const {
    std::vector<UnorderedPair> out;
    out.reserve(partner_.size() / 2);
    for (std::size_t v = 0; v < partner_.size(); ++v) {
      if (v < partner_[v]) out.emplace_back(BitVector(v, width_), BitVector(partner_[v], width_));
    }
    return out;
  }

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  unsigned width_;
  std::vector<value_type> partner_;
};

struct PairClassification {
  UnorderedPair pair;
  KindSet kinds;
  unsigned distance;

  bool equivariant() const { return !kinds.empty(); }
};

inline PairClassification classify_pair(BitVector h1, BitVector h2) {
  if (h1.width() != h2.width()) throw WidthMismatch(h1.width(), h2.width());
  if (h1 == h2) {
    throw Error("a pair needs two distinct elements, got " + std::to_string(h1.value()) +
                " twice");
  }
  KindSet kinds;
  for (auto k : pairing_kinds) {
    if (apply(k, h1) == h2) kinds.insert(k);
  }
  return {UnorderedPair(h1, h2), kinds, hamming(h1, h2)};
}

enum class ViolationKind : std::uint8_t { FixedPoint, NotInvolution, NotEquivariant };

constexpr std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::FixedPoint:
      return "fixed_point";
    case ViolationKind::NotInvolution:
      return "not_involution";
    case ViolationKind::NotEquivariant:
      return "not_equivariant";
  }
  return "?";
}

struct Violation {
  Matching::value_type element;
  Matching::value_type partner;
  ViolationKind kind;

  std::string describe() const {
    return std::string(to_string(kind)) + " at " + std::to_string(element) + " (partner " +
           std::to_string(partner) + ")";
  }
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

inline ValidationReport validate(const Matching& m) {
  ValidationReport report;
  const auto p = m.partners();
  for (std::size_t v = 0; v < p.size(); ++v) {
    const auto e = static_cast<Matching::value_type>(v);
    if (p[v] == e) {
      report.violations.push_back({e, p[v], ViolationKind::FixedPoint});
      continue;
    }
    if (p[p[v]] != e) {
      report.violations.push_back({e, p[v], ViolationKind::NotInvolution});
      continue;
    }
    if (!classify_pair(BitVector(e, m.width()), BitVector(p[v], m.width())).equivariant()) {
      report.violations.push_back({e, p[v], ViolationKind::NotEquivariant});
    }
  }
  report.ok = report.violations.empty();
  return report;
}

class InvalidMatching : public Error {
 public:
  explicit InvalidMatching(ValidationReport report)
      : Error(message(report)), report_(std::move(report)) {}

  const ValidationReport& report() const noexcept { return report_; }

 private:
  static std::string message(const ValidationReport& r) {
    std::string msg = "invalid matching: " + std::to_string(r.violations.size()) + " violation(s)";
    if (!r.violations.empty()) msg += ", first: " + r.violations.front().describe();
    return msg;
  }
  ValidationReport report_;
};

/// Sum of Hamming distances over all pairs. Throws InvalidMatching unless
/// validate(m).ok.
inline std::uint64_t total_cost(const Matching& m) {
  if (auto r = validate(m); !r.ok) throw InvalidMatching(std::move(r));
  std::uint64_t twice = 0;
  const auto p = m.partners();
  for (std::size_t v = 0; v < p.size(); ++v) twice += std::popcount(static_cast<std::uint32_t>(v ^ p[v]));
  return twice / 2;
}

/// Total cost split by the orbit class of each pair, with a per-distance
/// histogram of the generic pairs.
struct CostBreakdown {
  std::uint64_t total = 0;
  std::uint64_t palindrome = 0;
  std::uint64_t antisymmetric = 0;
  std::uint64_t generic = 0;
  std::uint64_t palindrome_pairs = 0;
  std::uint64_t antisymmetric_pairs = 0;
  std::uint64_t generic_pairs = 0;
  std::map<unsigned, std::uint64_t> generic_histogram;
};

inline CostBreakdown cost_breakdown(const Matching& m) {
  CostBreakdown b;
  b.total = total_cost(m);
  for (const auto& pair : m.pairs()) {
    const unsigned d = hamming(pair.first, pair.second);
    switch (classify(pair.first)) {
      case OrbitClass::Palindrome:
        b.palindrome += d;
        ++b.palindrome_pairs;
        break;
      case OrbitClass::AntiSymmetric:
        b.antisymmetric += d;
        ++b.antisymmetric_pairs;
        break;
      case OrbitClass::Generic:
        b.generic += d;
        ++b.generic_pairs;
        ++b.generic_histogram[d];
        break;
    }
  }
  return b;
}

inline BitVector reverse_priority_partner(BitVector h) {
  return is_palindrome(h) ? complement(h) : reverse(h);
}

/// Preference among equal-cost pairings: Rev, then CompRev, then Comp.
constexpr int tie_break_rank(PairingKind k) {
  switch (k) {
    case PairingKind::Rev:
      return 0;
    case PairingKind::CompRev:
      return 1;
    case PairingKind::Comp:
      return 2;
  }
  return 3;
}

/// Writes the pairing `kind` of one orbit into a dense partner map.
inline void assign_pairing(std::vector<Matching::value_type>& partner, const OrbitRecord& orbit,
                           PairingKind kind) {
  for (BitVector e : orbit.elements) partner[e.value()] = apply(kind, e).value();
}

namespace detail {

template <typename PartnerFn>
Matching build_pointwise(unsigned width, PartnerFn fn) {
  check_width(width);
  std::vector<Matching::value_type> partner(vertex_count(width));
  for (BitVector h : all_values(width)) partner[h.value()] = fn(h).value();
  return Matching(width, std::move(partner));
}

}  // namespace detail

inline Matching build_reverse_priority(unsigned width) {
  return detail::build_pointwise(width, reverse_priority_partner);
}

inline Matching build_complement_only(unsigned width) {
  return detail::build_pointwise(width, [](BitVector h) { return complement(h); });
}

/// Per orbit, the cheapest available pairing (ties by tie_break_rank).
inline Matching build_mixed_optimal(unsigned width) {
  check_width(width);
  std::vector<Matching::value_type> partner(vertex_count(width));
  for (const auto& orbit : canonical_orbits(width)) {
    auto best = orbit.pairing_costs.begin();
    for (auto it = orbit.pairing_costs.begin(); it != orbit.pairing_costs.end(); ++it) {
      if (it->second < best->second ||
          (it->second == best->second && tie_break_rank(it->first) < tie_break_rank(best->first))) {
        best = it;
      }
    }
    assign_pairing(partner, orbit, best->first);
  }
  return Matching(width, std::move(partner));
}

}  // namespace hexmatch
