#include <cstdint>
#include <random>
#include <vector>

#include <doctest.h>

#include "niven/bigint.hpp"
#include "niven/digits.hpp"
#include "niven/errors.hpp"

using niven::BigInt;

namespace {

BigInt random_bigint(std::mt19937_64& rng, unsigned max_bits) {
  std::uniform_int_distribution<unsigned> bits_dist(0, max_bits);
  unsigned bits = bits_dist(rng);
  BigInt n = 0;
  for (unsigned produced = 0; produced < bits; produced += 64) {
    n <<= 64;
    n += rng();
  }
  if (bits > 0) n >>= (64 - bits % 64) % 64;
  return n;
}

}  // namespace

TEST_CASE("to_base worked values") {
  auto e = niven::to_base<BigInt>(16781313, 8);
  CHECK(e.digits == std::vector<BigInt>{1, 0, 0, 0, 1, 0, 0, 0, 1});
  CHECK(e.length() == 9);

  CHECK(niven::to_base<BigInt>(0, 7).digits.empty());

  auto f = niven::to_base<BigInt>(299593, 4);
  CHECK(f.digits == std::vector<BigInt>{1, 0, 2, 1, 0, 2, 1, 0, 2, 1});

  CHECK_THROWS_AS(niven::to_base<BigInt>(5, 1), niven::DomainError);
  CHECK_THROWS_AS(niven::to_base<BigInt>(-1, 10), niven::DomainError);
}

TEST_CASE("digit_sum worked values") {
  CHECK(niven::digit_sum<BigInt>(16781313, 2) == 3);
  CHECK(niven::digit_sum<BigInt>(299593, 4) == 10);
  CHECK(niven::digit_sum<BigInt>(299593, 8) == 7);
  CHECK(niven::digit_sum<BigInt>(0, 10) == 0);
}

TEST_CASE("is_niven worked values") {
  CHECK(niven::is_niven<BigInt>(16781313, 8));
  CHECK(niven::is_niven<BigInt>(16781313, 2));
  CHECK_FALSE(niven::is_niven<BigInt>(299593, 4));
  for (int g = 2; g <= 12; ++g) CHECK(niven::is_niven<BigInt>(1, g));
  CHECK_THROWS_AS(niven::is_niven<BigInt>(0, 10), niven::DomainError);
}

TEST_CASE("render") {
  CHECK(niven::render(niven::to_base<BigInt>(16781313, 2)) ==
        "1000000000001000000000001");
  CHECK(niven::render(niven::to_base<BigInt>(16781313, 4)) == "1000001000001");
  CHECK(niven::render(niven::to_base<BigInt>(16781313, 8)) == "100010001");
  CHECK(niven::render(niven::to_base<BigInt>(0, 10)) == "0");
  CHECK(niven::render(niven::to_base<BigInt>(255, 16)) == "ff");
  CHECK(niven::render(niven::to_base<BigInt>(35, 36)) == "z");
  // Bases above 36: bracketed decimal digit values, most-significant first.
  CHECK(niven::render(niven::to_base<BigInt>(10203, 100)) == "[1,2,3]");
  CHECK(niven::render(niven::to_base<BigInt>(0, 100)) == "0");
}

TEST_CASE("block_digit_sum_check") {
  CHECK(niven::block_digit_sum_check<BigInt>(299593, 2, 3));
  CHECK(niven::block_digit_sum_check<BigInt>(0, 2, 3));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    BigInt n = random_bigint(rng, 128);
    CHECK(niven::block_digit_sum_check(n, BigInt(2 + rng() % 9), 1u));
  }
}

TEST_CASE("round trip up to 10^300") {
  std::mt19937_64 rng(20240824);
  for (int i = 0; i < 10'000; ++i) {
    BigInt n = random_bigint(rng, 1000);  // up to ~10^301
    BigInt g = 2 + rng() % 999;
    auto e = niven::to_base(n, g);
    CHECK(e.value() == n);
    if (!e.digits.empty()) CHECK(e.digits.front() != 0);
    for (const auto& d : e.digits) {
      REQUIRE(d >= 0);
      REQUIRE(d < g);
    }
    CHECK(e.digit_sum() == niven::digit_sum(n, g));
  }
}

TEST_CASE("digit sums survive base-b^k block structure") {
  // Any digit list with entries below b gives equal digit sums in bases
  // b and b^k, both equal to the plain sum of the entries.
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    BigInt b = 2 + rng() % 15;
    unsigned k = 1 + rng() % 5;
    BigInt big_base = niven::integer_pow(b, k);
    std::size_t len = 1 + rng() % 50;
    BigInt n = 0;
    BigInt expected_sum = 0;
    for (std::size_t i = 0; i < len; ++i) {
      BigInt d = BigInt(rng()) % b;
      n = n * big_base + d;
      expected_sum += d;
    }
    CHECK(niven::digit_sum(n, b) == expected_sum);
    CHECK(niven::digit_sum(n, big_base) == expected_sum);
    CHECK(niven::block_digit_sum_check(n, b, k));
  }
}

TEST_CASE("block identity holds for arbitrary n, b, k") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    BigInt n = random_bigint(rng, 256);
    BigInt b = 2 + rng() % 30;
    unsigned k = 1 + rng() % 6;
    CHECK(niven::block_digit_sum_check(n, b, k));
  }
}

TEST_CASE("casting-out congruence and Niven equivalence") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 2000; ++i) {
    BigInt n = random_bigint(rng, 200);
    BigInt g = 2 + rng() % 60;
    BigInt ds = niven::digit_sum(n, g);
    CHECK(ds % (g - 1) == n % (g - 1));
    if (n >= 1) CHECK(niven::is_niven(n, g) == (n % ds == 0));
  }
}
