#pragma once

// Exact integer number theory over any exact integer type: gcd, radical,
// modular exponentiation, multiplicative order, and two-modulus CRT.
// `Int` may be a builtin integer or an arbitrary-precision type such as
// boost::multiprecision::cpp_int; all arithmetic stays exact.

#include <cstdint>
#include <sstream>
#include <utility>

#include "niven/errors.hpp"

namespace niven {

inline constexpr std::uint64_t kDefaultOrderIterationCap = 10'000'000;

template <typename Int>
Int gcd(Int a, Int b) {
  if (a < 0 || b < 0) throw DomainError("gcd: arguments must be nonnegative");
  if (a == 0 && b == 0) throw DomainError("gcd(0, 0) is undefined");
  while (b != 0) {
    Int t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

// Product of the distinct prime divisors of c; radical(1) == 1.
template <typename Int>
Int radical(Int c) {
  if (c < 1) throw DomainError("radical: argument must be positive");
  Int rad = 1;
  Int p = 2;
  while (p * p <= c) {
    if (c % p == 0) {
      rad *= p;
      while (c % p == 0) c /= p;
    }
    ++p;
  }
  if (c > 1) rad *= c;
  return rad;
}

// A validated modulus N >= 1.
template <typename Int>
class Modulus {
 public:
  explicit Modulus(Int value) : value_(std::move(value)) {
    if (value_ < 1) throw DomainError("Modulus: value must be >= 1");
  }
  const Int& value() const { return value_; }

 private:
  Int value_;
};

// a^e mod N by square-and-multiply; a may be negative, result is canonical
// in [0, N). N == 1 always yields 0.
template <typename Int>
Int mod_pow(Int a, Int e, const Modulus<Int>& n) {
  if (e < 0) throw DomainError("mod_pow: exponent must be nonnegative");
  const Int& mod = n.value();
  if (mod == 1) return 0;
  a %= mod;
  if (a < 0) a += mod;
  Int result = 1;
  while (e > 0) {
    if (e % 2 != 0) result = result * a % mod;
    a = a * a % mod;
    e /= 2;
  }
  return result;
}

template <typename Int>
Int mod_pow(Int a, Int e, Int n) {
  return mod_pow(std::move(a), std::move(e), Modulus<Int>(std::move(n)));
}

// Least omega >= 1 with a^omega == 1 (mod N); ord_1(a) == 1. Iterates
// successive powers, so the caller pays O(order) multiplications; the cap
// turns a runaway loop into a reported error.
template <typename Int>
Int multiplicative_order(Int a, const Modulus<Int>& n,
                         std::uint64_t iteration_cap = kDefaultOrderIterationCap) {
  const Int& mod = n.value();
  if (mod == 1) return 1;
  Int base = a % mod;
  if (base < 0) base += mod;
  if (gcd(base, mod) != 1) {
    std::ostringstream msg;
    msg << "multiplicative_order: " << a << " is not invertible mod " << mod;
    throw NotInvertibleError(msg.str());
  }
  Int power = base;
  Int omega = 1;
  std::uint64_t steps = 0;
  while (power != 1) {
    if (++steps >= iteration_cap) {
      std::ostringstream msg;
      msg << "multiplicative_order: iteration cap " << iteration_cap
          << " exceeded for a=" << a << ", N=" << mod;
      throw ResourceError(msg.str());
    }
    power = power * base % mod;
    ++omega;
  }
  return omega;
}

template <typename Int>
Int multiplicative_order(Int a, Int n,
                         std::uint64_t iteration_cap = kDefaultOrderIterationCap) {
  return multiplicative_order(std::move(a), Modulus<Int>(std::move(n)),
                              iteration_cap);
}

// A residue class r mod N with 0 <= r < N (r == 0 when N == 1).
template <typename Int>
struct ResidueClass {
  Int residue;
  Modulus<Int> modulus;

  ResidueClass(Int r, Modulus<Int> m)
      : residue(std::move(r)), modulus(std::move(m)) {
    if (residue < 0 || residue >= modulus.value())
      throw DomainError("ResidueClass: residue out of range [0, modulus)");
  }
  ResidueClass(Int r, Int m) : ResidueClass(std::move(r), Modulus<Int>(std::move(m))) {}
};

namespace detail {

// Inverse of a mod n, in [0, n); coefficients are tracked mod n so the
// routine is safe for unsigned Int. Requires gcd(a, n) = 1.
template <typename Int>
Int inverse_mod(Int a, const Int& n) {
  if (n == 1) return 0;
  Int r0 = n, r1 = a % n;
  Int x0 = 0, x1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int x2 = (x0 + n - q * x1 % n) % n;
    r0 = std::move(r1);
    r1 = std::move(r2);
    x0 = std::move(x1);
    x1 = std::move(x2);
  }
  return x0;
}

}  // namespace detail

// Unique class mod (M1*M2) congruent to each input; canonical representative
// in [0, M1*M2). Moduli must be coprime.
template <typename Int>
ResidueClass<Int> crt_pair(const ResidueClass<Int>& x1,
                           const ResidueClass<Int>& x2) {
  const Int& m1 = x1.modulus.value();
  const Int& m2 = x2.modulus.value();
  if (gcd(m1, m2) != 1) {
    std::ostringstream msg;
    msg << "crt_pair: moduli " << m1 << " and " << m2 << " are not coprime";
    throw DomainError(msg.str());
  }
  Int combined = m1 * m2;
  // x = x1 + m1 * ((x2 - x1) * m1^{-1} mod m2); all terms kept nonnegative.
  Int inv = detail::inverse_mod(Int(m1 % m2), m2);
  Int diff = (x2.residue % m2 + m2 - x1.residue % m2) % m2;
  Int x = x1.residue + m1 * (diff * inv % m2);
  return ResidueClass<Int>(std::move(x), Modulus<Int>(std::move(combined)));
}

template <typename Int>
Int integer_pow(Int base, unsigned exponent) {
  Int result = 1;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

template <typename Int>
Int lcm_up_to(unsigned k) {
  Int result = 1;
  for (unsigned i = 2; i <= k; ++i) {
    Int n = i;
    result = result / gcd(result, n) * n;
  }
  return result;
}

}  // namespace niven
