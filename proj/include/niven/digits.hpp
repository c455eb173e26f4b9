#pragma once

// Base expansions, digit sums, Niven predicates, and rendering for
// arbitrary bases >= 2. Digits are stored most-significant first, matching
// the usual written form; zero is the empty digit list and renders as "0".

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "niven/errors.hpp"
#include "niven/numtheory.hpp"

namespace niven {

template <typename Int>
struct BaseExpansion {
  Int base;
  std::vector<Int> digits;  // most-significant first; empty encodes 0

  std::size_t length() const { return digits.size(); }

  Int value() const {
    Int n = 0;
    for (const Int& d : digits) n = n * base + d;
    return n;
  }

  Int digit_sum() const {
    Int s = 0;
    for (const Int& d : digits) s += d;
    return s;
  }
};

template <typename Int>
BaseExpansion<Int> to_base(Int n, Int base) {
  if (base < 2) throw DomainError("to_base: base must be >= 2");
  if (n < 0) throw DomainError("to_base: argument must be nonnegative");
  BaseExpansion<Int> expansion{std::move(base), {}};
  while (n > 0) {
    expansion.digits.push_back(n % expansion.base);
    n /= expansion.base;
  }
  std::reverse(expansion.digits.begin(), expansion.digits.end());
  return expansion;
}

template <typename Int>
Int digit_sum(Int n, Int base) {
  if (base < 2) throw DomainError("digit_sum: base must be >= 2");
  if (n < 0) throw DomainError("digit_sum: argument must be nonnegative");
  Int sum = 0;
  while (n > 0) {
    sum += n % base;
    n /= base;
  }
  return sum;
}

// n is base-g Niven iff its base-g digit sum divides it. Defined for n >= 1.
template <typename Int>
bool is_niven(const Int& n, Int base) {
  if (n < 1) throw DomainError("is_niven: argument must be positive");
  Int s = digit_sum(n, std::move(base));
  return n % s == 0;
}

// Base <= 36 renders as a contiguous 0-9a-z string; larger bases as
// bracketed comma-separated decimal digit values, most-significant first.
template <typename Int>
std::string render(const BaseExpansion<Int>& expansion) {
  if (expansion.digits.empty()) return "0";
  std::string out;
  if (expansion.base <= 36) {
    static const char* alphabet = "0123456789abcdefghijklmnopqrstuvwxyz";
    for (const Int& d : expansion.digits)
      out += alphabet[static_cast<unsigned>(d)];
  } else {
    std::ostringstream oss;
    oss << '[';
    bool first = true;
    for (const Int& d : expansion.digits) {
      if (!first) oss << ',';
      first = false;
      oss << d;
    }
    oss << ']';
    out = oss.str();
  }
  return out;
}

// Executable witness of the block digit-sum identity: the base-b digit sum
// of n equals the sum of base-b digit sums of n's base-b^k digits, because
// the length-k digit blocks never carry into each other.
template <typename Int>
bool block_digit_sum_check(const Int& n, Int b, unsigned k) {
  if (b < 2) throw DomainError("block_digit_sum_check: base must be >= 2");
  if (k < 1) throw DomainError("block_digit_sum_check: k must be >= 1");
  Int block_base = integer_pow(b, k);
  Int lhs = digit_sum(n, b);
  Int rhs = 0;
  for (const Int& d : to_base(n, block_base).digits) rhs += digit_sum(d, b);
  return lhs == rhs;
}

}  // namespace niven
