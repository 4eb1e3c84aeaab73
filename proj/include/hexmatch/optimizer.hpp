#pragma once

// Exhaustive minimisation over K4-equivariant matchings.
//
// An equivariant matching picks one pairing per orbit, and its cost is the sum
// of the chosen orbit costs. So the global minimum, its minimiser count and the
// size of the search space all factor over orbits.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "hexmatch/bitcore.hpp"
#include "hexmatch/matching.hpp"
#include "hexmatch/orbits.hpp"

namespace hexmatch {

/// Exact natural number; space sizes reach 3^(orbit count).
using Count = boost::multiprecision::cpp_int;

inline constexpr unsigned max_exhaustive_width = 16;

struct PairingChoice {
  PairingKind kind;
  std::uint64_t cost;
};

struct OrbitChoices {
  OrbitRecord orbit;
  std::vector<PairingChoice> choices;
};

struct SearchSpace {
  unsigned width;
  KindSet allowed;
  std::vector<OrbitChoices> orbits;

  Count space_size() const {
    Count n = 1;
    for (const auto& o : orbits) n *= o.choices.size();
    return n;
  }
};

/// Some orbit has no allowed nontrivial pairing.
class InfeasibleSpace : public Error {
 public:
  InfeasibleSpace(const OrbitRecord& orbit, KindSet allowed)
      : Error(message(orbit, allowed)), representative_(orbit.representative), cls_(orbit.cls) {}

  BitVector representative() const noexcept { return representative_; }
  OrbitClass orbit_class() const noexcept { return cls_; }

 private:
  static std::string message(const OrbitRecord& orbit, KindSet allowed) {
    std::string elems;
    for (auto e : orbit.elements) {
      if (!elems.empty()) elems += ',';
      elems += std::to_string(e.value());
    }
    std::string msg = "infeasible: " + std::string(to_string(orbit.cls)) + " orbit {" + elems +
                      "} (representative " + std::to_string(orbit.representative.value()) +
                      ") has no nontrivial pairing among kinds {" + allowed.to_string() + "}";
    if (orbit.cls == OrbitClass::Palindrome)
      msg += "; palindromes are fixed by rev and cannot pair with their own reversal";
    else if (orbit.cls == OrbitClass::AntiSymmetric)
      msg += "; comprev fixes anti-symmetric elements";
    return msg;
  }

  BitVector representative_;
  OrbitClass cls_;
};

inline SearchSpace enumerate_space(unsigned width, KindSet allowed) {
  check_width(width, max_exhaustive_width);
  if (allowed.empty()) throw RangeError("allowed pairing kinds must be nonempty");

  SearchSpace space{width, allowed, {}};
  for (auto& orbit : canonical_orbits(width)) {
    OrbitChoices oc{std::move(orbit), {}};
    for (const auto& [kind, cost] : oc.orbit.pairing_costs) {
      if (oc.orbit.cls == OrbitClass::Generic) {
        if (allowed.contains(kind)) oc.choices.push_back({kind, cost});
        continue;
      }
      // Size-2 orbit: one pairing, reachable through any coinciding kind.
      // Label it with the recorded kind when allowed, else the first allowed
      // coinciding kind.
      if (allowed.contains(kind)) {
        oc.choices.push_back({kind, cost});
      } else {
        for (auto alt : oc.orbit.coinciding(kind).members()) {
          if (allowed.contains(alt)) {
            oc.choices.push_back({alt, cost});
            break;
          }
        }
      }
    }
    if (oc.choices.empty()) throw InfeasibleSpace(oc.orbit, allowed);
    space.orbits.push_back(std::move(oc));
  }
  return space;
}

struct OrbitDecision {
  BitVector representative;
  OrbitClass cls;
  PairingKind kind;
  std::uint64_t cost;
  std::uint64_t minimizers;  // choices attaining the orbit minimum
  bool tie_broken() const { return minimizers > 1; }
};

struct OptimizationResult {
  unsigned width;
  KindSet allowed;
  std::uint64_t min_cost;
  Count minimizer_count;
  Matching witness;
  std::vector<OrbitDecision> per_orbit;
  Count space_size;

  bool unique() const { return minimizer_count == 1; }
  bool any_tie_broken() const {
    for (const auto& d : per_orbit) {
      if (d.tie_broken()) return true;
    }
    return false;
  }
};

inline OptimizationResult minimize(const SearchSpace& space) {
  std::vector<Matching::value_type> partner(vertex_count(space.width));
  std::vector<OrbitDecision> decisions;
  decisions.reserve(space.orbits.size());
  std::uint64_t min_cost = 0;
  Count minimizer_count = 1;

  const bool comp_and_rev =
      space.allowed.contains(PairingKind::Comp) && space.allowed.contains(PairingKind::Rev);

  for (const auto& oc : space.orbits) {
    const PairingChoice* best = &oc.choices.front();
    std::uint64_t ties = 0;
    for (const auto& c : oc.choices) {
      if (c.cost < best->cost ||
          (c.cost == best->cost && tie_break_rank(c.kind) < tie_break_rank(best->kind))) {
        best = &c;
      }
    }
    for (const auto& c : oc.choices) ties += (c.cost == best->cost);

    // Rev never ties Comp on a generic orbit: equal distance would make the
    // orbit anti-symmetric.
    if (comp_and_rev && oc.orbit.cls == OrbitClass::Generic &&
        !(oc.orbit.pairing_costs.at(PairingKind::Rev) <
          oc.orbit.pairing_costs.at(PairingKind::Comp))) {
      throw std::logic_error("rev pairing not strictly cheaper than comp on generic orbit " +
                             std::to_string(oc.orbit.representative.value()));
    }

    assign_pairing(partner, oc.orbit, best->kind);
    decisions.push_back({oc.orbit.representative, oc.orbit.cls, best->kind, best->cost, ties});
    min_cost += best->cost;
    minimizer_count *= ties;
  }

  return {space.width,     space.allowed,
          min_cost,        std::move(minimizer_count),
          Matching(space.width, std::move(partner)),
          std::move(decisions), space.space_size()};
}

/// Case counts of the comp/rev trichotomy over all vertices of one width.
struct NoConflictReport {
  unsigned width = 0;
  bool ok = true;
  std::uint64_t strictly_cheaper = 0;  // rev distinct from h and comp(h), and closer
  std::uint64_t coincide = 0;          // rev(h) == comp(h)
  std::uint64_t palindrome = 0;        // rev(h) == h
  std::vector<BitVector::value_type> counterexamples;
};

inline NoConflictReport verify_no_conflict(unsigned width) {
  check_width(width, max_exhaustive_width);
  NoConflictReport r;
  r.width = width;
  for (BitVector h : all_values(width)) {
    const BitVector rv = reverse(h);
    const BitVector cp = complement(h);
    const unsigned d_rev = hamming(h, rv);
    const unsigned d_comp = hamming(h, cp);

    const bool pal = rv == h;
    const bool same = rv == cp;
    const bool cheaper = d_rev < width && rv != h && rv != cp;
    const int holds = int(pal) + int(same) + int(cheaper);

    // When rev and comp are both nontrivial and distinct, rev must be closer.
    const bool summary = pal || same || d_rev < d_comp;

    if (holds != 1 || d_comp != width || !summary) {
      r.counterexamples.push_back(h.value());
      continue;
    }
    r.palindrome += pal;
    r.coincide += same;
    r.strictly_cheaper += cheaper;
  }
  r.ok = r.counterexamples.empty();
  return r;
}

struct SweepRow {
  unsigned width;
  bool optimal_matches_reverse_priority;
  std::uint64_t min_cost_comp_rev;
  std::uint64_t cost_reverse_priority;
  bool unique;
};

inline std::vector<SweepRow> conjecture_sweep(unsigned width_min, unsigned width_max) {
  check_width(width_min, max_exhaustive_width);
  check_width(width_max, max_exhaustive_width);
  if (width_min > width_max) {
    throw RangeError("empty width range [" + std::to_string(width_min) + ", " +
                     std::to_string(width_max) + "]");
  }
  std::vector<SweepRow> rows;
  for (unsigned w = width_min; w <= width_max; ++w) {
    const auto result = minimize(enumerate_space(w, {PairingKind::Comp, PairingKind::Rev}));
    const Matching rp = build_reverse_priority(w);
    rows.push_back({w, result.witness == rp, result.min_cost, total_cost(rp), result.unique()});
  }
  return rows;
}

}  // namespace hexmatch
