#include <cstdint>
#include <random>

#include <doctest.h>

#include "niven/bigint.hpp"
#include "niven/errors.hpp"
#include "niven/numtheory.hpp"
#include "niven/oracle.hpp"

using niven::BigInt;

namespace {

// Trial-division gcd oracle: largest d dividing both.
std::uint64_t gcd_oracle(std::uint64_t a, std::uint64_t b) {
  std::uint64_t best = 0;
  std::uint64_t hi = std::max(a, b);
  for (std::uint64_t d = 1; d <= hi; ++d) {
    if ((a % d == 0 || a == 0) && (b % d == 0 || b == 0)) best = d;
  }
  return best;
}

// Trial-division radical oracle.
std::uint64_t radical_oracle(std::uint64_t c) {
  std::uint64_t rad = 1;
  for (std::uint64_t p = 2; p <= c; ++p) {
    if (c % p == 0) {
      bool prime = true;
      for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) prime = false;
      if (prime) rad *= p;
    }
  }
  return rad;
}

}  // namespace

TEST_CASE("gcd basics") {
  CHECK(niven::gcd<BigInt>(5, 0) == 5);
  CHECK(niven::gcd<BigInt>(0, 5) == 5);
  CHECK(niven::gcd<BigInt>(12, 18) == 6);
  CHECK(niven::gcd<BigInt>(15, 8) == 1);
  CHECK_THROWS_AS(niven::gcd<BigInt>(0, 0), niven::DomainError);
  CHECK_THROWS_AS(niven::gcd<BigInt>(-3, 6), niven::DomainError);
}

TEST_CASE("gcd matches trial-division oracle") {
  for (std::uint64_t a = 0; a <= 60; ++a)
    for (std::uint64_t b = 0; b <= 60; ++b) {
      if (a == 0 && b == 0) continue;
      CHECK(niven::gcd(a, b) == gcd_oracle(a, b));
    }
}

TEST_CASE("radical basics") {
  CHECK(niven::radical<BigInt>(1) == 1);
  CHECK(niven::radical<BigInt>(8) == 2);
  CHECK(niven::radical<BigInt>(12) == 6);
  CHECK_THROWS_AS(niven::radical<BigInt>(0), niven::DomainError);
}

TEST_CASE("radical oracle and structural properties") {
  for (std::uint64_t c = 1; c <= 500; ++c) {
    std::uint64_t rad = niven::radical(c);
    CHECK(rad == radical_oracle(c));
    CHECK(c % rad == 0);
    // squarefree: no p^2 divides rad
    for (std::uint64_t p = 2; p * p <= rad; ++p)
      CHECK(rad % (p * p) != 0);
    CHECK(niven::radical(rad) == rad);
  }
}

TEST_CASE("mod_pow worked values") {
  CHECK(niven::mod_pow<BigInt>(8, 2, 15) == 4);
  CHECK(niven::mod_pow<BigInt>(8, 4, 15) == 1);
  CHECK(niven::mod_pow<BigInt>(123, 0, 7) == 1);
  CHECK(niven::mod_pow<BigInt>(5, 100, 1) == 0);
  CHECK(niven::mod_pow<BigInt>(-3, 3, 7) == 1);  // (-3)^3 = -27 == 1 mod 7
}

TEST_CASE("mod_pow agrees with repeated multiplication up to 200") {
  for (std::uint64_t n = 1; n <= 200; ++n) {
    for (std::uint64_t a = 0; a <= 200; ++a) {
      std::uint64_t cur = n == 1 ? 0 : 1;  // a^0 mod n
      for (std::uint64_t e = 0; e <= 200; ++e) {
        CAPTURE(a);
        CAPTURE(e);
        CAPTURE(n);
        REQUIRE(niven::mod_pow(a, e, n) == cur);
        if (n > 1) cur = cur * (a % n) % n;
      }
    }
  }
}

TEST_CASE("multiplicative_order worked values") {
  CHECK(niven::multiplicative_order<BigInt>(8, 15) == 4);
  CHECK(niven::multiplicative_order<BigInt>(8, 7) == 1);
  CHECK(niven::multiplicative_order<BigInt>(17, 1) == 1);
  CHECK_THROWS_AS(niven::multiplicative_order<BigInt>(6, 9),
                  niven::NotInvertibleError);
}

TEST_CASE("multiplicative_order iteration cap is a reported error") {
  // ord_101(2) = 100 > 3
  CHECK_THROWS_AS(niven::multiplicative_order<BigInt>(2, 101, 3),
                  niven::ResourceError);
}

TEST_CASE("multiplicative_order is minimal and matches brute force, N <= 200") {
  for (std::uint64_t n = 1; n <= 200; ++n) {
    for (std::uint64_t a = 1; a < std::max<std::uint64_t>(n, 2); ++a) {
      if (n > 1 && std::gcd(a, n) != 1) continue;
      std::uint64_t omega = niven::multiplicative_order(a, n);
      CHECK(omega == niven::oracle::brute_force_order(a, n));
      if (n > 1) {
        CHECK(niven::mod_pow(a, omega, n) == 1);
        std::uint64_t power = a % n;
        for (std::uint64_t j = 1; j < omega; ++j) {
          CHECK(power != 1);
          power = power * (a % n) % n;
        }
      }
    }
  }
}

TEST_CASE("crt_pair worked values") {
  auto x = niven::crt_pair(niven::ResidueClass<BigInt>(3, 5),
                           niven::ResidueClass<BigInt>(1, 2));
  CHECK(x.residue == 3);
  CHECK(x.modulus.value() == 10);

  auto y = niven::crt_pair(niven::ResidueClass<BigInt>(4, 9),
                           niven::ResidueClass<BigInt>(0, 1));
  CHECK(y.residue == 4);
  CHECK(y.modulus.value() == 9);

  CHECK_THROWS_AS(niven::crt_pair(niven::ResidueClass<BigInt>(1, 6),
                                  niven::ResidueClass<BigInt>(1, 4)),
                  niven::DomainError);
}

TEST_CASE("crt_pair is correct and unique (exhaustive scan)") {
  std::mt19937_64 rng(20240824);
  for (std::uint64_t m1 = 1; m1 <= 30; ++m1) {
    for (std::uint64_t m2 = 1; m2 <= 30; ++m2) {
      if (std::gcd(m1, m2) != 1) continue;
      std::uint64_t r1 = rng() % m1;
      std::uint64_t r2 = rng() % m2;
      auto x = niven::crt_pair(niven::ResidueClass<std::uint64_t>(r1, m1),
                               niven::ResidueClass<std::uint64_t>(r2, m2));
      CHECK(x.modulus.value() == m1 * m2);
      CHECK(x.residue % m1 == r1);
      CHECK(x.residue % m2 == r2);
      std::uint64_t matches = 0;
      for (std::uint64_t v = 0; v < m1 * m2; ++v)
        if (v % m1 == r1 && v % m2 == r2) {
          ++matches;
          CHECK(v == x.residue);
        }
      CHECK(matches == 1);
    }
  }
}

TEST_CASE("gcd(m,b)=1 implies gcd(m,rad(b))=1") {
  for (std::uint64_t m = 1; m <= 200; ++m)
    for (std::uint64_t b = 2; b <= 200; ++b)
      if (std::gcd(m, b) == 1) CHECK(std::gcd(m, niven::radical(b)) == 1);
}

TEST_CASE("ResidueClass and Modulus invariants") {
  CHECK_THROWS_AS(niven::Modulus<BigInt>(0), niven::DomainError);
  CHECK_THROWS_AS(niven::ResidueClass<BigInt>(5, 5), niven::DomainError);
  CHECK_THROWS_AS(niven::ResidueClass<BigInt>(-1, 5), niven::DomainError);
  niven::ResidueClass<BigInt> trivial(0, 1);
  CHECK(trivial.residue == 0);
}
