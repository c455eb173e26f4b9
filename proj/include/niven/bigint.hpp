#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace niven {

// Exact arbitrary-precision integer used throughout the construction layer.
using BigInt = boost::multiprecision::cpp_int;

inline std::size_t bit_length(const BigInt& n) {
  return n == 0 ? 0 : boost::multiprecision::msb(n) + 1;
}

}  // namespace niven
