#include "cotop/arith.hpp"

#include "cotop/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace cotop::arith {

namespace {

struct Sieve {
    std::vector<std::uint32_t> spf;  // spf[i] = smallest prime factor of i, i >= 2
    std::vector<u64> primes;

    Sieve() : spf(kSieveLimit + 1, 0) {
        for (u64 i = 2; i <= kSieveLimit; ++i) {
            if (spf[i] == 0) {
                spf[i] = static_cast<std::uint32_t>(i);
                primes.push_back(i);
            }
            for (u64 p : primes) {
                if (p > spf[i] || i * p > kSieveLimit) break;
                spf[i * p] = static_cast<std::uint32_t>(p);
            }
        }
    }
};

const Sieve& sieve() {
    static const Sieve s;
    return s;
}

u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// n odd, n > 3; d * 2^s = n - 1 with d odd.
bool strong_probable_prime(u64 n, u64 d, unsigned s, u64 witness) {
    u64 x = pow_mod(witness, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

void push_factor(Factorization& f, u64 p) {
    if (!f.empty() && f.back().prime == p) {
        ++f.back().exponent;
    } else {
        f.push_back({p, 1});
    }
}

}  // namespace

u64 require_pos(u64 n, const char* what) {
    if (n == 0 || n > kMaxPosInt) {
        fail(ErrorKind::Precondition,
             std::string(what) + " must be a positive integer below 2^63, got " +
                 std::to_string(n));
    }
    return n;
}

u64 gcd(u64 a, u64 b) {
    require_pos(a, "gcd operand");
    require_pos(b, "gcd operand");
    return std::gcd(a, b);
}

u64 checked_mul(u64 a, u64 b) {
    u64 out = 0;
    if (__builtin_mul_overflow(a, b, &out) || out > kMaxPosInt) {
        fail(ErrorKind::Range, "product " + std::to_string(a) + " * " + std::to_string(b) +
                                   " exceeds the 64-bit range");
    }
    return out;
}

u64 checked_lcm(u64 a, u64 b) {
    require_pos(a, "lcm operand");
    require_pos(b, "lcm operand");
    return checked_mul(a / std::gcd(a, b), b);
}

Factorization factorize(u64 n) {
    require_pos(n, "factorize input");
    Factorization f;
    const Sieve& s = sieve();
    if (n <= kSieveLimit) {
        while (n > 1) {
            push_factor(f, s.spf[n]);
            n /= s.spf[n];
        }
        return f;
    }
    for (u64 p : s.primes) {
        if (p * p > n) break;
        while (n % p == 0) {
            push_factor(f, p);
            n /= p;
        }
    }
    if (n > 1 && n <= kSieveLimit) {
        push_factor(f, n);
        return f;
    }
    if (n > 1 && !is_prime(n)) {
        // Both remaining factors exceed the sieve.
        for (u64 p = kSieveLimit + 1; p <= n / p; p += 2) {
            while (n % p == 0) {
                push_factor(f, p);
                n /= p;
            }
        }
    }
    if (n > 1) push_factor(f, n);
    return f;
}

u64 radical(u64 n) {
    u64 r = 1;
    for (const auto& pp : factorize(n)) r *= pp.prime;
    return r;
}

std::vector<u64> prime_divisors(u64 n) {
    std::vector<u64> out;
    for (const auto& pp : factorize(n)) out.push_back(pp.prime);
    return out;
}

std::vector<u64> divisors(u64 n) {
    std::vector<u64> out{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t base = out.size();
        u64 pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_prime(u64 n) {
    require_pos(n, "is_prime input");
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    if (n < 37 * 37) return true;
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is deterministic below 3.3 * 10^24.
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (!strong_probable_prime(n, d, s, a)) return false;
    }
    return true;
}

u64 smallest_prime_factor(u64 n) {
    require_pos(n, "smallest_prime_factor input");
    if (n < 2) fail(ErrorKind::Precondition, "1 has no prime factor");
    if (n <= kSieveLimit) return sieve().spf[n];
    return factorize(n).front().prime;
}

std::vector<u64> primes_up_to(u64 limit) {
    const auto& all = sieve().primes;
    if (limit <= kSieveLimit) {
        return {all.begin(), std::upper_bound(all.begin(), all.end(), limit)};
    }
    std::vector<u64> out = all;
    for (u64 n = kSieveLimit + 1; n <= limit; ++n) {
        if (is_prime(n)) out.push_back(n);
    }
    return out;
}

u64 next_prime_after(u64 n) {
    for (u64 c = n + 1;; ++c) {
        if (c > kMaxPosInt) fail(ErrorKind::Range, "no prime below 2^63 after " + std::to_string(n));
        if (is_prime(c)) return c;
    }
}

}  // namespace cotop::arith
