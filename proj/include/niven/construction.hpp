#pragma once

// Constructive core: admissible digit sums s, the spacing parameter
// omega_s = ord_{ms}(B), sparse repunits in base B = b^k, the lcm-exponent
// tower variant, and self-describing certificates recomputed from the
// final integer.

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "niven/bigint.hpp"
#include "niven/digits.hpp"
#include "niven/errors.hpp"
#include "niven/numtheory.hpp"

namespace niven {

inline constexpr std::uint64_t kDefaultSizeCapBits = 1'000'000;

// Input tuple (b, k, m, r); B = b^k is derived. gcd(m, b) = 1 is a hard
// hypothesis: a shared prime p would give B^omega == 0 (mod p) for every
// omega, so no spacing can exist.
struct ConstructionParams {
  BigInt b;
  unsigned k = 1;
  BigInt m = 1;
  BigInt r = 0;

  BigInt power_base() const { return integer_pow(b, k); }
};

inline ConstructionParams validate(ConstructionParams params) {
  if (params.b < 2)
    throw ValidationError("base_too_small", "base b must be >= 2");
  if (params.k < 1) throw ValidationError("k_too_small", "exponent k must be >= 1");
  if (params.m < 1)
    throw ValidationError("modulus_too_small", "progression modulus m must be >= 1");
  if (params.r < 0 || params.r >= params.m)
    throw ValidationError("residue_out_of_range",
                          "progression residue r must satisfy 0 <= r < m");
  BigInt g = gcd(params.m, params.b);
  if (g != 1) {
    std::ostringstream msg;
    msg << "gcd(m, b) = " << g << " != 1; the construction requires m coprime "
        << "to b (the hypothesis gcd(m,b)=1 is essential, not technical: a "
        << "shared prime makes B^omega == 1 (mod m) unattainable)";
    throw ValidationError("m_b_not_coprime", msg.str());
  }
  return params;
}

// An admissible digit sum: s == r (mod m) and gcd(s, b) = 1. Carries
// q = rad(b) and the least positive solution of {s == r (mod m),
// s == 1 (mod q)} for provenance of the CRT existence argument.
struct AdmissibleS {
  BigInt s;
  BigInt q;          // rad(b)
  BigInt crt_least;  // least positive s with s == r (mod m), s == 1 (mod q)
};

// Names the first violated admissibility condition, or nullopt if s is
// admissible for params.
inline std::optional<std::string> admissibility_violation(
    const ConstructionParams& params, const BigInt& s) {
  if (s < 1) return "s_not_positive";
  if (s % params.m != params.r) return "s_not_congruent_r_mod_m";
  if (gcd(s, params.b) != 1) return "s_not_coprime_to_b";
  return std::nullopt;
}

namespace detail {

inline BigInt crt_least_admissible(const ConstructionParams& params,
                                   const BigInt& q) {
  ResidueClass<BigInt> combined =
      crt_pair(ResidueClass<BigInt>(params.r, params.m),
               ResidueClass<BigInt>(BigInt(1) % q, q));
  return combined.residue == 0 ? combined.modulus.value() : combined.residue;
}

}  // namespace detail

inline AdmissibleS make_admissible(const ConstructionParams& params, BigInt s) {
  if (auto violation = admissibility_violation(params, s)) {
    std::ostringstream msg;
    msg << "s = " << s << " is not admissible: " << *violation;
    throw InadmissibleError(*violation, msg.str());
  }
  BigInt q = radical(params.b);
  BigInt crt_least = detail::crt_least_admissible(params, q);
  return AdmissibleS{std::move(s), std::move(q), std::move(crt_least)};
}

// Yields every admissible s >= s_min in increasing order. The stream is
// infinite (for each t >= 0 the value s* + t*m*rad(b) is admissible), so
// next() always returns; callers take finitely many.
//
// In crt_family_only mode the stream is restricted to that CRT family
// s == s* (mod m*rad(b)), a sparse subset that needs no gcd filtering.
class AdmissibleStream {
 public:
  explicit AdmissibleStream(ConstructionParams params, BigInt s_min = 1,
                            bool crt_family_only = false)
      : params_(validate(std::move(params))),
        q_(radical(params_.b)),
        crt_least_(detail::crt_least_admissible(params_, q_)),
        crt_family_only_(crt_family_only) {
    if (s_min < 1) s_min = 1;
    if (crt_family_only_) {
      step_ = params_.m * q_;
      cursor_ = crt_least_;
    } else {
      step_ = params_.m;
      cursor_ = s_min + (params_.r - s_min) % params_.m;
    }
    while (cursor_ < s_min) cursor_ += step_;
  }

  AdmissibleS next() {
    for (;;) {
      BigInt s = cursor_;
      cursor_ += step_;
      if (crt_family_only_ || gcd(s, params_.b) == 1)
        return AdmissibleS{std::move(s), q_, crt_least_};
    }
  }

  // Convenience: the next `count` admissible values.
  std::vector<AdmissibleS> take(std::size_t count) {
    std::vector<AdmissibleS> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(next());
    return out;
  }

  const ConstructionParams& params() const { return params_; }

 private:
  ConstructionParams params_;
  BigInt q_;
  BigInt crt_least_;
  bool crt_family_only_;
  BigInt step_;
  BigInt cursor_;
};

// omega_s = ord_{ms}(B), the minimal spacing. Any multiple would satisfy
// the two congruences, but the minimum keeps outputs deterministic and
// smallest.
inline BigInt spacing(const ConstructionParams& params, const AdmissibleS& s,
                      std::uint64_t order_cap = kDefaultOrderIterationCap) {
  return multiplicative_order(params.power_base(), BigInt(params.m * s.s),
                              order_cap);
}

// Sum_{j=0}^{s-1} base^{j*omega}, evaluated both as the explicit sum and as
// the geometric closed form (base^{s*omega}-1)/(base^omega-1); the two
// routes are cross-checked on every call.
inline BigInt sparse_repunit(const BigInt& base, const BigInt& omega,
                             const BigInt& s,
                             std::uint64_t size_cap_bits = kDefaultSizeCapBits) {
  if (base < 2) throw DomainError("sparse_repunit: base must be >= 2");
  if (omega < 1) throw DomainError("sparse_repunit: omega must be >= 1");
  if (s < 1) throw DomainError("sparse_repunit: s must be >= 1");

  BigInt predicted_bits = (s - 1) * omega * BigInt(bit_length(base)) + 1;
  if (predicted_bits > size_cap_bits) {
    std::ostringstream msg;
    msg << "sparse_repunit: predicted size " << predicted_bits
        << " bits exceeds cap of " << size_cap_bits << " bits";
    throw SizeCapError(msg.str());
  }

  BigInt step = 1;
  {
    BigInt e = omega;
    BigInt b = base;
    while (e > 0) {
      if (e % 2 != 0) step *= b;
      b *= b;
      e /= 2;
    }
  }
  BigInt sum = 0;
  BigInt term = 1;
  BigInt big_power = 1;  // step^s, for the closed form
  for (BigInt j = 0; j < s; ++j) {
    sum += term;
    term *= step;
  }
  big_power = term;  // after s multiplications term == step^s
  BigInt geometric = (big_power - 1) / (step - 1);
  if (sum != geometric)
    throw Error("sparse_repunit: summation and geometric forms disagree");
  return sum;
}

// Witno's generalized repunit R_{n,b,k} = (b^{nk}-1)/(b^k-1): n ones
// separated by k-1 zeros in base b.
inline BigInt witno_repunit(const BigInt& n, const BigInt& b, const BigInt& k,
                            std::uint64_t size_cap_bits = kDefaultSizeCapBits) {
  if (n < 1) throw DomainError("witno_repunit: n must be >= 1");
  if (b < 2) throw DomainError("witno_repunit: base must be >= 2");
  if (k < 1) throw DomainError("witno_repunit: k must be >= 1");
  return sparse_repunit(b, k, n, size_cap_bits);
}

enum class ClaimKind {
  kMembership,      // value == r (mod m)
  kDigitSumEqualsS, // digit sum in the claim's base equals s
  kDigitSumDivides, // digit sum in the claim's base divides value
  kSDividesValue,   // s | value
};

struct CertificateClaim {
  ClaimKind kind;
  BigInt base;  // 0 for base-independent claims
  BigInt expected;
  BigInt actual;
  bool pass = false;

  std::string name() const {
    std::ostringstream oss;
    switch (kind) {
      case ClaimKind::kMembership:
        oss << "residue_mod_m";
        break;
      case ClaimKind::kDigitSumEqualsS:
        oss << "digit_sum_base_" << base;
        break;
      case ClaimKind::kDigitSumDivides:
        oss << "niven_base_" << base;
        break;
      case ClaimKind::kSDividesValue:
        oss << "s_divides_value";
        break;
    }
    return oss.str();
  }
};

struct NivenCertificate {
  std::vector<CertificateClaim> claims;

  bool all_pass() const {
    for (const auto& c : claims)
      if (!c.pass) return false;
    return true;
  }
};

struct ConstructionResult {
  ConstructionParams params;
  AdmissibleS s;
  BigInt omega;
  std::optional<BigInt> tower_exponent;  // K = lcm(1..k), tower variant only
  BigInt value;
  std::vector<BigInt> certificate_bases;  // increasing
  NivenCertificate certificate;
};

namespace detail {

// Claims are always recomputed from the final integer; the construction's
// algebra is never trusted as proof.
inline NivenCertificate make_certificate(const BigInt& value,
                                         const ConstructionParams& params,
                                         const BigInt& s,
                                         const std::vector<BigInt>& bases) {
  NivenCertificate cert;
  {
    CertificateClaim c{ClaimKind::kMembership, 0, params.r, value % params.m};
    c.pass = c.actual == c.expected;
    cert.claims.push_back(std::move(c));
  }
  for (const BigInt& g : bases) {
    BigInt ds = digit_sum(value, g);
    CertificateClaim eq{ClaimKind::kDigitSumEqualsS, g, s, ds};
    eq.pass = eq.actual == eq.expected;
    cert.claims.push_back(std::move(eq));
    CertificateClaim div{ClaimKind::kDigitSumDivides, g, 0, value % ds};
    div.pass = div.actual == div.expected;
    cert.claims.push_back(std::move(div));
  }
  {
    CertificateClaim c{ClaimKind::kSDividesValue, 0, 0, value % s};
    c.pass = c.actual == c.expected;
    cert.claims.push_back(std::move(c));
  }
  return cert;
}

inline std::vector<BigInt> divisor_bases(const BigInt& b, unsigned k) {
  std::vector<BigInt> bases;
  for (unsigned ell = 1; ell <= k; ++ell)
    if (k % ell == 0) bases.push_back(integer_pow(b, ell));
  return bases;
}

inline std::vector<BigInt> tower_bases(const BigInt& b, unsigned k) {
  std::vector<BigInt> bases;
  for (unsigned ell = 1; ell <= k; ++ell) bases.push_back(integer_pow(b, ell));
  return bases;
}

}  // namespace detail

// n_s = sum_{j<s} B^{j*omega_s} with a certificate covering base b^ell for
// every divisor ell of k (each such base sees the same sparse 0/1 digit
// pattern, so digit sum s and s | n_s transfer).
inline ConstructionResult construct(
    const ConstructionParams& params, const AdmissibleS& s,
    std::uint64_t size_cap_bits = kDefaultSizeCapBits,
    std::uint64_t order_cap = kDefaultOrderIterationCap) {
  BigInt omega = spacing(params, s, order_cap);
  // Predicted bit length k*(s-1)*omega*log2(b) + 1; refuse before building.
  BigInt predicted_bits =
      BigInt(params.k) * (s.s - 1) * omega * BigInt(bit_length(params.b)) + 1;
  if (predicted_bits > size_cap_bits) {
    std::ostringstream msg;
    msg << "construct: predicted size " << predicted_bits
        << " bits exceeds cap of " << size_cap_bits << " bits";
    throw SizeCapError(msg.str());
  }
  BigInt value = sparse_repunit(params.power_base(), omega, s.s, size_cap_bits);
  std::vector<BigInt> bases = detail::divisor_bases(params.b, params.k);
  NivenCertificate cert = detail::make_certificate(value, params, s.s, bases);
  return ConstructionResult{params,     s,
                            std::move(omega), std::nullopt,
                            std::move(value), std::move(bases),
                            std::move(cert)};
}

inline ConstructionResult construct(
    const ConstructionParams& params, const BigInt& s,
    std::uint64_t size_cap_bits = kDefaultSizeCapBits,
    std::uint64_t order_cap = kDefaultOrderIterationCap) {
  return construct(params, make_admissible(params, s), size_cap_bits, order_cap);
}

// Tower variant: with K = lcm(1,...,k) and Omega_s = ord_{ms}(b^K), the
// integer N_s = sum_{j<s} (b^K)^{j*Omega_s} is b^ell-Niven for every
// ell in 1..k, with digit sum exactly s in each of those bases.
inline ConstructionResult construct_tower(
    const ConstructionParams& params, const AdmissibleS& s,
    std::uint64_t size_cap_bits = kDefaultSizeCapBits,
    std::uint64_t order_cap = kDefaultOrderIterationCap) {
  BigInt tower_k = lcm_up_to<BigInt>(params.k);
  unsigned k_exp = static_cast<unsigned>(tower_k);
  BigInt tower_base = integer_pow(params.b, k_exp);
  BigInt omega =
      multiplicative_order(tower_base, BigInt(params.m * s.s), order_cap);
  BigInt predicted_bits =
      tower_k * (s.s - 1) * omega * BigInt(bit_length(params.b)) + 1;
  if (predicted_bits > size_cap_bits) {
    std::ostringstream msg;
    msg << "construct_tower: predicted size " << predicted_bits
        << " bits exceeds cap of " << size_cap_bits << " bits";
    throw SizeCapError(msg.str());
  }
  BigInt value = sparse_repunit(tower_base, omega, s.s, size_cap_bits);
  std::vector<BigInt> bases = detail::tower_bases(params.b, params.k);
  NivenCertificate cert = detail::make_certificate(value, params, s.s, bases);
  return ConstructionResult{params,
                            s,
                            std::move(omega),
                            std::move(tower_k),
                            std::move(value),
                            std::move(bases),
                            std::move(cert)};
}

inline ConstructionResult construct_tower(
    const ConstructionParams& params, const BigInt& s,
    std::uint64_t size_cap_bits = kDefaultSizeCapBits,
    std::uint64_t order_cap = kDefaultOrderIterationCap) {
  return construct_tower(params, make_admissible(params, s), size_cap_bits,
                         order_cap);
}

// Single-base entry point: the k = 1 specialization with
// omega = ord_{ms}(b) and n_s a sparse repunit in base b itself.
inline ConstructionResult construct_coprime_single_base(
    const BigInt& b, const BigInt& m, const BigInt& r, const BigInt& s,
    std::uint64_t size_cap_bits = kDefaultSizeCapBits,
    std::uint64_t order_cap = kDefaultOrderIterationCap) {
  ConstructionParams params{b, 1, m, r};
  return construct(validate(params), s, size_cap_bits, order_cap);
}

}  // namespace niven
