#pragma once

// Brute-force cross-checks for the engine's derived decision procedures.
//
// The oracle only uses gcd, EPSet membership and exhaustive scans over one
// full period of the sets involved. It never calls the closure formula, the
// cover characterization or the Golomb coset criterion except to obtain the
// engine answer it compares against. Keep it that way.
//
// Period-scan exactness: S & sigma(n) (and sigma(n) \ S) agree with a
// periodic set of period lcm(m_S, n) beyond max exception, so scanning
// [1, lcm(m_S, n) + max exception] decides emptiness exactly.

#include "cotop/perset.hpp"

#include <string>
#include <vector>

namespace cotop::oracle {

enum class Answer { No, Yes, Inconclusive };

struct Discrepancy {
    u64 x;
    bool engine_says;
    Answer oracle_says;
};

struct OracleVerdict {
    std::string check;  // "closure", "open" or "golomb"
    std::string set;    // canonical rendering of the input
    u64 checked_window = 0;
    u64 cover_prime_bound = 0;
    std::size_t points_checked = 0;
    /// Sampled points the bounded search could not witness (open/golomb).
    std::vector<u64> unwitnessed;
    std::vector<Discrepancy> discrepancies;

    bool agrees() const { return discrepancies.empty(); }
    std::size_t inconclusive() const;
};

/// Squarefree products of at most `subset_size` primes <= prime_bound,
/// including 1, in order of subset size.
std::vector<u64> cover_candidates(u64 prime_bound, std::size_t subset_size);

/// Points x <= n_window for which no candidate sigma(n) separates x from s.
std::vector<u64> oracle_closure_window(const EPSet& s, u64 n_window, u64 prime_bound,
                                       std::size_t subset_size);

OracleVerdict oracle_closure_check(const EPSet& s, u64 n_window, u64 prime_bound,
                                   std::size_t subset_size);

/// For the first `sample` elements x of s, searches n <= n_bound with
/// gcd(n, x) = 1 and sigma(n) inside s; compared with x in interior(s).
OracleVerdict oracle_open_check(const EPSet& s, std::size_t sample, u64 n_bound);

/// For the first `sample` elements x of s, searches steps b <= b_bound with
/// gcd(b, x) = 1 whose progression from x stays inside s.
OracleVerdict oracle_golomb_check(const EPSet& s, std::size_t sample, u64 b_bound);

struct CuratedCase {
    std::string name;
    std::string expression;
    EPSet set;
};

/// The fixed 50-case suite used by the acceptance tests, golden files and
/// `verify`.
const std::vector<CuratedCase>& curated_suite();

// Bounds at which the curated suite must be conclusive.
inline constexpr u64 kCuratedWindow = 200;
inline constexpr u64 kCuratedPrimeBound = 31;
inline constexpr std::size_t kCuratedSubsetSize = 5;
inline constexpr std::size_t kCuratedSample = 20;
inline constexpr u64 kCuratedSigmaBound = 10'000;
inline constexpr u64 kCuratedStepBound = 5'000;

struct CuratedResult {
    const CuratedCase* source;
    OracleVerdict closure;
    OracleVerdict open;
    OracleVerdict golomb;

    bool clean() const;
};

CuratedResult run_curated_case(const CuratedCase& c);

}  // namespace cotop::oracle
