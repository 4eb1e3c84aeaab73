#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "hexmatch/bitcore.hpp"
#include "oracle.hpp"

using namespace hexmatch;

TEST_CASE("make validates value and width", "[bitcore]") {
  CHECK(make(63, 6).value() == 63);
  CHECK(make(0, 6).value() == 0);
  CHECK(make(0, 6).width() == 6);

  CHECK_THROWS_AS(make(64, 6), RangeError);
  CHECK_THROWS_AS(make(0, 0), RangeError);
  CHECK_THROWS_AS(make(0, 31), RangeError);
  CHECK_NOTHROW(make((1ULL << 30) - 1, 30));
  CHECK_THROWS_AS(make(1ULL << 30, 30), RangeError);

  try {
    make(64, 6);
    FAIL("expected throw");
  } catch (const RangeError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("64") != std::string::npos);
    CHECK(msg.find("width 6") != std::string::npos);
  }
}

TEST_CASE("complement, reverse and comp_rev on named values", "[bitcore]") {
  CHECK(complement(make(0, 6)) == make(63, 6));
  CHECK(complement(make(17, 6)) == make(46, 6));

  CHECK(reverse(make(17, 6)) == make(34, 6));
  CHECK(reverse(make(33, 6)) == make(33, 6));
  CHECK(reverse(make(1, 3)) == make(4, 3));
  CHECK(reverse(make(1, 30)) == make(1U << 29, 30));

  CHECK(comp_rev(make(63, 6)) == make(0, 6));
  CHECK(comp_rev(make(17, 6)) == make(29, 6));
}

TEST_CASE("hamming distance", "[bitcore]") {
  CHECK(hamming(make(63, 6), make(0, 6)) == 6);
  CHECK(hamming(make(17, 6), make(34, 6)) == 4);
  CHECK(hamming(make(17, 6), make(34, 6)) == oracle::distance(17, 34, 6));
  CHECK(hamming(make(5, 6), make(5, 6)) == 0);

  CHECK_THROWS_AS(hamming(make(1, 6), make(1, 7)), WidthMismatch);
  try {
    hamming(make(1, 6), make(1, 7));
  } catch (const WidthMismatch& e) {
    CHECK(e.lhs() == 6);
    CHECK(e.rhs() == 7);
  }
}

TEST_CASE("palindrome and anti-symmetric predicates", "[bitcore]") {
  CHECK(is_palindrome(make(33, 6)));
  CHECK_FALSE(is_palindrome(make(17, 6)));
  CHECK(is_antisymmetric(make(7, 6)));
  CHECK_FALSE(is_antisymmetric(make(33, 6)));

  int pal = 0;
  int anti = 0;
  for (auto h : all_values(6)) {
    pal += is_palindrome(h);
    anti += is_antisymmetric(h);
  }
  CHECK(pal == 8);
  CHECK(anti == 8);

  for (unsigned n : {1U, 3U, 5U, 7U, 9U}) {
    for (auto h : all_values(n)) CHECK_FALSE(is_antisymmetric(h));
  }
}

TEST_CASE("operations agree with the string-based oracle", "[bitcore][oracle]") {
  for (unsigned n = 1; n <= 10; ++n) {
    for (auto h : all_values(n)) {
      REQUIRE(reverse(h).value() == oracle::rev(h.value(), n));
      REQUIRE(complement(h).value() == oracle::comp(h.value(), n));
      REQUIRE(comp_rev(h).value() == oracle::comprev(h.value(), n));
    }
  }
}

TEST_CASE("hamming is a metric on random triples", "[bitcore][property]") {
  std::mt19937_64 rng(0x6b34);
  for (unsigned n : {1U, 6U, 13U, 16U, 30U}) {
    std::uniform_int_distribution<std::uint64_t> pick(0, vertex_count(n) - 1);
    for (int i = 0; i < 500; ++i) {
      const auto a = make(pick(rng), n);
      const auto b = make(pick(rng), n);
      const auto c = make(pick(rng), n);
      REQUIRE(hamming(a, b) == hamming(b, a));
      REQUIRE(hamming(a, c) <= hamming(a, b) + hamming(b, c));
      REQUIRE((hamming(a, b) == 0) == (a == b));
      REQUIRE(hamming(a, b) <= n);
    }
  }
}
