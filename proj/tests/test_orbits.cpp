#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "hexmatch/orbits.hpp"
#include "oracle.hpp"

using namespace hexmatch;

namespace {

std::vector<BitVector::value_type> values_of(const OrbitRecord& o) {
  std::vector<BitVector::value_type> out;
  for (auto e : o.elements) out.push_back(e.value());
  return out;
}

}  // namespace

TEST_CASE("K4 composition table", "[orbits]") {
  CHECK(compose(K4Element::Comp, K4Element::Rev) == K4Element::CompRev);
  CHECK(compose(K4Element::Rev, K4Element::Comp) == K4Element::CompRev);
  CHECK(compose(K4Element::CompRev, K4Element::Rev) == K4Element::Comp);
  for (auto g : k4_elements) {
    CHECK(compose(g, g) == K4Element::Id);
    CHECK(compose(g, K4Element::Id) == g);
  }
}

TEST_CASE("apply", "[orbits]") {
  const auto h = make(17, 6);
  CHECK(apply(K4Element::Id, h) == h);
  CHECK(apply(K4Element::Comp, make(0, 6)) == make(63, 6));
  CHECK(apply(K4Element::CompRev, h) == make(29, 6));
  CHECK(apply(K4Element::CompRev, h).value() == oracle::comp(oracle::rev(17, 6), 6));
}

TEST_CASE("group action law", "[orbits][property]") {
  for (unsigned n = 1; n <= 10; ++n) {
    for (auto h : all_values(n)) {
      for (auto g : k4_elements) {
        for (auto g2 : k4_elements) {
          REQUIRE(apply(g, apply(g2, h)) == apply(compose(g, g2), h));
        }
      }
    }
  }
}

TEST_CASE("orbit_of classifies the three orbit types", "[orbits]") {
  const auto pal = orbit_of(make(33, 6));
  CHECK(pal.cls == OrbitClass::Palindrome);
  CHECK(values_of(pal) == std::vector<BitVector::value_type>{30, 33});
  CHECK(pal.representative == make(30, 6));
  CHECK(pal.rev_distance == 0);
  CHECK(pal.pairing_costs == std::map<PairingKind, std::uint64_t>{{PairingKind::Comp, 6}});

  const auto anti = orbit_of(make(7, 6));
  CHECK(anti.cls == OrbitClass::AntiSymmetric);
  CHECK(values_of(anti) == std::vector<BitVector::value_type>{7, 56});
  CHECK(anti.rev_distance == 6);
  CHECK(anti.pairing_costs == std::map<PairingKind, std::uint64_t>{{PairingKind::Comp, 6}});

  const auto gen = orbit_of(make(17, 6));
  CHECK(gen.cls == OrbitClass::Generic);
  CHECK(values_of(gen) == std::vector<BitVector::value_type>{17, 29, 34, 46});
  CHECK(gen.rev_distance == 4);
  CHECK(gen.pairing_costs.at(PairingKind::Comp) == 12);
  CHECK(gen.pairing_costs.at(PairingKind::Rev) == 8);
  CHECK(gen.pairing_costs.at(PairingKind::CompRev) == 4);

  // Any element gives the same record.
  for (auto e : gen.elements) CHECK(values_of(orbit_of(e)) == values_of(gen));
}

TEST_CASE("orbit census", "[orbits]") {
  const auto c6 = orbit_census(6);
  CHECK(c6.generic_orbits == 12);
  CHECK(c6.palindrome_orbits == 4);
  CHECK(c6.antisymmetric_orbits == 4);
  CHECK(c6.generic_elements == 48);
  CHECK(c6.palindrome_elements == 8);
  CHECK(c6.antisymmetric_elements == 8);
  // Size-2 orbits hold 8 palindromes and 8 anti-symmetric elements, not 16
  // palindromes.
  CHECK(c6.palindrome_orbits + c6.antisymmetric_orbits == 8);

  const auto c1 = orbit_census(1);
  CHECK(c1.generic_orbits == 0);
  CHECK(c1.palindrome_orbits == 1);
  CHECK(c1.antisymmetric_orbits == 0);

  // Brute force over the 16 four-bit values: 4 palindromes, 4 anti-symmetric,
  // 8 generic elements in 2 orbits.
  const auto c4 = orbit_census(4);
  CHECK(c4.generic_orbits == 2);
  CHECK(c4.palindrome_orbits == 2);
  CHECK(c4.antisymmetric_orbits == 2);
  CHECK(c4.generic_orbits == (oracle::orbits(4).size() - 4));
}

TEST_CASE("census matches closed forms and the set oracle", "[orbits][property]") {
  for (unsigned n = 1; n <= 14; ++n) {
    const auto c = orbit_census(n);
    if (n % 2 == 0) {
      CHECK(c.palindrome_elements == (1ULL << (n / 2)));
      CHECK(c.antisymmetric_elements == (1ULL << (n / 2)));
    } else {
      CHECK(c.palindrome_elements == (1ULL << ((n + 1) / 2)));
      CHECK(c.antisymmetric_elements == 0);
    }
    CHECK(c.total_elements() == vertex_count(n));
    CHECK(c.generic_elements == 4 * c.generic_orbits);
    CHECK(c.palindrome_elements == 2 * c.palindrome_orbits);
    CHECK(c.antisymmetric_elements == 2 * c.antisymmetric_orbits);
    if (n <= 10) CHECK(c.total_orbits() == oracle::orbits(n).size());
  }
}

TEST_CASE("canonical_orbits partitions the cube", "[orbits][property]") {
  const auto orbits6 = canonical_orbits(6);
  CHECK(orbits6.size() == 20);
  CHECK(orbits6.front().representative == make(0, 6));
  CHECK(values_of(orbits6.front()) == std::vector<BitVector::value_type>{0, 63});

  for (unsigned n = 1; n <= 12; ++n) {
    const auto orbits = canonical_orbits(n);
    std::vector<int> seen(vertex_count(n), 0);
    std::uint64_t total = 0;
    BitVector::value_type prev_rep = 0;
    for (std::size_t i = 0; i < orbits.size(); ++i) {
      const auto& o = orbits[i];
      if (i > 0) REQUIRE(o.representative.value() > prev_rep);
      prev_rep = o.representative.value();
      REQUIRE(o.representative == o.elements.front());
      REQUIRE(o.rev_distance == hamming(o.representative, reverse(o.representative)));
      switch (o.cls) {
        case OrbitClass::Generic:
          REQUIRE(o.size() == 4);
          REQUIRE(o.rev_distance > 0);
          REQUIRE(o.rev_distance < n);
          break;
        case OrbitClass::Palindrome:
          REQUIRE(o.size() == 2);
          REQUIRE(o.rev_distance == 0);
          break;
        case OrbitClass::AntiSymmetric:
          REQUIRE(o.size() == 2);
          REQUIRE(o.rev_distance == n);
          break;
      }
      for (auto e : o.elements) {
        ++seen[e.value()];
        REQUIRE(o.contains(e));
        // every element of an orbit shares its rev distance
        REQUIRE(hamming(e, reverse(e)) == o.rev_distance);
      }
      total += o.size();
    }
    REQUIRE(total == vertex_count(n));
    for (int s : seen) REQUIRE(s == 1);
  }

  for (const auto& o : orbits6) {
    if (o.cls == OrbitClass::Generic) CHECK((o.rev_distance == 2 || o.rev_distance == 4));
  }
}

TEST_CASE("KindSet", "[orbits]") {
  KindSet s{PairingKind::Rev, PairingKind::Comp};
  CHECK(s.size() == 2);
  CHECK(s.to_string() == "comp,rev");
  CHECK(s.is_subset_of(KindSet::all()));
  CHECK_FALSE(KindSet::all().is_subset_of(s));
  CHECK(KindSet{}.empty());
  CHECK(parse_kind("comprev") == PairingKind::CompRev);
  CHECK_FALSE(parse_kind("id").has_value());
}
