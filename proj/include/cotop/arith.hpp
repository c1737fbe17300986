#pragma once

// Exact 64-bit number theory for the coprimality engine.
//
// Every value handled here is a positive integer in [1, 2^63 - 1]. Zero is
// rejected with ErrorKind::Precondition, and any product that would leave
// the 64-bit range is reported with ErrorKind::Range instead of wrapping.

#include <cstdint>
#include <span>
#include <vector>

namespace cotop::arith {

using u64 = std::uint64_t;

inline constexpr u64 kMaxPosInt = (u64{1} << 63) - 1;

/// Upper end of the smallest-prime-factor table built on first use.
inline constexpr u64 kSieveLimit = 1'000'000;

struct PrimePower {
    u64 prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Strictly increasing primes with exponents >= 1. Empty encodes 1.
using Factorization = std::vector<PrimePower>;

/// Throws Precondition unless 1 <= n <= kMaxPosInt.
u64 require_pos(u64 n, const char* what = "argument");

u64 gcd(u64 a, u64 b);
u64 checked_mul(u64 a, u64 b);
u64 checked_lcm(u64 a, u64 b);

/// Smallest-prime-factor sieve up to kSieveLimit, then trial division by
/// the sieved primes. A cofactor left after passing its square root is
/// prime; a composite cofactor with both factors above kSieveLimit falls
/// back to odd trial division up to sqrt(n), which is exact but slow for
/// adversarial semiprimes.
Factorization factorize(u64 n);

/// Product of the distinct primes dividing n; radical(1) = 1.
u64 radical(u64 n);

std::vector<u64> prime_divisors(u64 n);

/// All positive divisors of n in increasing order.
std::vector<u64> divisors(u64 n);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n);

/// Smallest prime factor of n >= 2.
u64 smallest_prime_factor(u64 n);

/// Primes <= limit, increasing. Served from the shared sieve when
/// limit <= kSieveLimit.
std::vector<u64> primes_up_to(u64 limit);

/// Smallest prime strictly greater than n.
u64 next_prime_after(u64 n);

}  // namespace cotop::arith
