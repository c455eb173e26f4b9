#pragma once

// Independent brute-force verification: reference order computation by
// successive multiplication, exhaustive progression scans, and certificate
// re-checking that trusts nothing but base expansions and exact remainders.

#include <algorithm>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "niven/bigint.hpp"
#include "niven/construction.hpp"
#include "niven/digits.hpp"
#include "niven/errors.hpp"
#include "niven/numtheory.hpp"

namespace niven::oracle {

// Reference multiplicative order: multiply one step at a time until the
// power returns to 1. No squaring shortcuts.
template <typename Int>
Int brute_force_order(Int a, const Modulus<Int>& n) {
  const Int& mod = n.value();
  if (mod == 1) return 1;
  Int base = a % mod;
  if (base < 0) base += mod;
  if (gcd(base, mod) != 1) {
    std::ostringstream msg;
    msg << "brute_force_order: " << a << " is not invertible mod " << mod;
    throw NotInvertibleError(msg.str());
  }
  Int power = base;
  Int omega = 1;
  while (power != 1) {
    power = power * base % mod;
    ++omega;
  }
  return omega;
}

template <typename Int>
Int brute_force_order(Int a, Int n) {
  return brute_force_order(std::move(a), Modulus<Int>(std::move(n)));
}

struct ScanReport {
  ConstructionParams params;
  BigInt limit;
  std::vector<BigInt> hits;  // strictly increasing

  std::size_t count() const { return hits.size(); }
};

namespace detail {

inline bool is_simultaneous_hit(const BigInt& n, const BigInt& b,
                                const BigInt& big_base) {
  return is_niven(n, b) && is_niven(n, big_base);
}

}  // namespace detail

// Every n <= limit with n == r (mod m) that is both b-Niven and b^k-Niven,
// in increasing order. Candidates step through the progression directly;
// the work may be split across `shards` threads (disjoint candidate
// stripes, merged in order — output is independent of shard count).
inline ScanReport scan_simultaneous(const ConstructionParams& params,
                                    const BigInt& limit, unsigned shards = 1) {
  if (limit < 1) throw DomainError("scan_simultaneous: limit must be >= 1");
  if (shards < 1) shards = 1;
  BigInt big_base = params.power_base();

  // Candidates are first + t*m for t = 0, 1, ...; first is the least
  // positive member of the progression.
  BigInt first = params.r == 0 ? params.m : params.r;
  if (first > limit) return ScanReport{params, limit, {}};
  BigInt t_count = (limit - first) / params.m + 1;

  std::vector<std::vector<BigInt>> partial(shards);
  auto worker = [&](unsigned shard) {
    // Stripe t = shard, shard + shards, ... keeps stripes balanced.
    for (BigInt t = shard; t < t_count; t += shards) {
      BigInt n = first + t * params.m;
      if (detail::is_simultaneous_hit(n, params.b, big_base))
        partial[shard].push_back(std::move(n));
    }
  };
  if (shards == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(shards);
    for (unsigned i = 0; i < shards; ++i) threads.emplace_back(worker, i);
    for (auto& th : threads) th.join();
  }

  std::vector<BigInt> hits;
  for (auto& p : partial)
    hits.insert(hits.end(), std::make_move_iterator(p.begin()),
                std::make_move_iterator(p.end()));
  std::sort(hits.begin(), hits.end());
  return ScanReport{params, limit, std::move(hits)};
}

struct ClaimVerdict {
  std::string name;
  BigInt expected;
  BigInt recomputed;
  bool pass = false;
};

struct VerificationVerdict {
  std::vector<ClaimVerdict> claims;
  bool all_pass = true;
};

// Recomputes every certificate claim from the result's final integer using
// only base expansions and exact remainders. The construction's algebraic
// shortcuts (geometric sums, order congruences) are deliberately not on
// this code path.
inline VerificationVerdict verify_certificate(const ConstructionResult& result) {
  VerificationVerdict verdict;
  for (const CertificateClaim& claim : result.certificate.claims) {
    ClaimVerdict v;
    v.name = claim.name();
    v.expected = claim.expected;
    switch (claim.kind) {
      case ClaimKind::kMembership:
        v.recomputed = result.value % result.params.m;
        break;
      case ClaimKind::kDigitSumEqualsS:
        v.recomputed = to_base(result.value, claim.base).digit_sum();
        break;
      case ClaimKind::kDigitSumDivides: {
        BigInt ds = to_base(result.value, claim.base).digit_sum();
        v.recomputed = result.value % ds;
        break;
      }
      case ClaimKind::kSDividesValue:
        v.recomputed = result.value % result.s.s;
        break;
    }
    v.pass = v.recomputed == v.expected;
    verdict.all_pass = verdict.all_pass && v.pass;
    verdict.claims.push_back(std::move(v));
  }
  return verdict;
}

}  // namespace niven::oracle
