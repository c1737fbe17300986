#include "cotop/oracle.hpp"

#include "cotop/error.hpp"
#include "cotop/expr.hpp"
#include "cotop/golomb.hpp"
#include "cotop/topology.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

namespace cotop::oracle {

namespace {

u64 scan_window(const EPSet& s, u64 n) {
    const u64 period = arith::checked_lcm(s.modulus(), n);
    if (period > arith::kMaxPosInt - s.max_exception()) {
        fail(ErrorKind::Range, "period scan window exceeds the 64-bit range");
    }
    return period + s.max_exception();
}

// Whether some element x <= hi of s satisfies pred. Walks the members of s
// directly so sparse sets cost little.
template <class Pred>
bool any_member(const EPSet& s, u64 hi, Pred pred) {
    for (u64 a : s.added()) {
        if (a <= hi && pred(a)) return true;
    }
    if (s.residues().empty()) return false;
    const u64 m = s.modulus();
    for (u64 base = 0; base <= hi; base += m) {
        for (u64 r : s.residues()) {
            const u64 x = base + r;
            if (x == 0 || x > hi) continue;
            if (std::binary_search(s.removed().begin(), s.removed().end(), x)) continue;
            if (pred(x)) return true;
        }
        if (hi - base < m) break;
    }
    return false;
}

// S & sigma(n) is empty, decided over one full period.
bool misses(const EPSet& s, u64 n) {
    return !any_member(s, scan_window(s, n), [n](u64 x) { return std::gcd(x, n) == 1; });
}

// sigma(n) is a subset of S, decided over one full period.
bool sigma_inside(const EPSet& s, u64 n) {
    const u64 hi = scan_window(s, n);
    for (u64 y = 1; y <= hi; ++y) {
        if (std::gcd(y, n) == 1 && !s.contains(y)) return false;
    }
    return true;
}

// The progression x, x+b, x+2b, ... stays in s. Past the last exception its
// residues mod m repeat with period m / gcd(b, m) <= m.
bool progression_inside(const EPSet& s, u64 x, u64 b) {
    const u64 steps = s.max_exception() / b + 1 + s.modulus();
    for (u64 k = 0; k <= steps; ++k) {
        if (!s.contains(x + k * b)) return false;
    }
    return true;
}

struct Candidate {
    u64 n;
    std::uint64_t mask;
};

std::vector<Candidate> candidates_with_masks(u64 prime_bound, std::size_t subset_size) {
    if (prime_bound < 2) fail(ErrorKind::Precondition, "prime bound must be >= 2");
    const auto primes = arith::primes_up_to(prime_bound);
    if (primes.size() > 64) fail(ErrorKind::Range, "cover search supports at most 64 primes");
    std::vector<Candidate> out{{1, 0}};
    std::vector<Candidate> frontier{{1, 0}};
    // Level k extends level k-1 subsets by primes above their largest index.
    std::vector<std::size_t> next_index{0};
    for (std::size_t size = 1; size <= subset_size; ++size) {
        std::vector<Candidate> level;
        std::vector<std::size_t> level_next;
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            for (std::size_t j = next_index[i]; j < primes.size(); ++j) {
                level.push_back({arith::checked_mul(frontier[i].n, primes[j]),
                                 frontier[i].mask | (std::uint64_t{1} << j)});
                level_next.push_back(j + 1);
            }
        }
        out.insert(out.end(), level.begin(), level.end());
        frontier = std::move(level);
        next_index = std::move(level_next);
    }
    return out;
}

// Candidates n with S & sigma(n) empty. sigma(n') is inside sigma(n) when
// n | n', so supersets of a known separator are separators without a scan.
std::vector<u64> separators(const EPSet& s, u64 prime_bound, std::size_t subset_size) {
    std::vector<std::uint64_t> empty_masks;
    std::vector<u64> out;
    for (const auto& c : candidates_with_masks(prime_bound, subset_size)) {
        const bool implied = std::any_of(empty_masks.begin(), empty_masks.end(),
                                         [&](std::uint64_t m) { return (c.mask & m) == m; });
        if (implied || misses(s, c.n)) {
            if (!implied) empty_masks.push_back(c.mask);
            out.push_back(c.n);
        }
    }
    return out;
}

bool separated(const std::vector<u64>& seps, u64 x) {
    return std::any_of(seps.begin(), seps.end(), [x](u64 n) { return std::gcd(n, x) == 1; });
}

}  // namespace

std::size_t OracleVerdict::inconclusive() const {
    return static_cast<std::size_t>(std::count_if(discrepancies.begin(), discrepancies.end(),
                                                  [](const Discrepancy& d) {
                                                      return d.oracle_says == Answer::Inconclusive;
                                                  }));
}

std::vector<u64> cover_candidates(u64 prime_bound, std::size_t subset_size) {
    std::vector<u64> out;
    for (const auto& c : candidates_with_masks(prime_bound, subset_size)) out.push_back(c.n);
    return out;
}

std::vector<u64> oracle_closure_window(const EPSet& s, u64 n_window, u64 prime_bound,
                                       std::size_t subset_size) {
    const auto seps = separators(s, prime_bound, subset_size);
    std::vector<u64> out;
    for (u64 x = 1; x <= n_window; ++x) {
        if (!separated(seps, x)) out.push_back(x);
    }
    return out;
}

OracleVerdict oracle_closure_check(const EPSet& s, u64 n_window, u64 prime_bound,
                                   std::size_t subset_size) {
    arith::require_pos(n_window, "oracle window");
    if (subset_size == 0) fail(ErrorKind::Precondition, "subset size must be >= 1");
    OracleVerdict v;
    v.check = "closure";
    v.set = s.to_string();
    v.checked_window = n_window;
    v.cover_prime_bound = prime_bound;
    const auto seps = separators(s, prime_bound, subset_size);
    const EPSet engine = topo::closure(s);
    for (u64 x = 1; x <= n_window; ++x) {
        ++v.points_checked;
        const bool in_engine = engine.contains(x);
        const bool sep = separated(seps, x);
        if (in_engine && sep) v.discrepancies.push_back({x, true, Answer::No});
        // No separator below the bound cannot prove membership.
        if (!in_engine && !sep) v.discrepancies.push_back({x, false, Answer::Inconclusive});
    }
    return v;
}

OracleVerdict oracle_open_check(const EPSet& s, std::size_t sample, u64 n_bound) {
    arith::require_pos(n_bound, "n bound");
    OracleVerdict v;
    v.check = "open";
    v.set = s.to_string();
    v.cover_prime_bound = n_bound;
    const EPSet engine = topo::interior(s);
    for (u64 x : s.enumerate(sample)) {
        ++v.points_checked;
        v.checked_window = x;
        bool witnessed = false;
        for (u64 n = 1; n <= n_bound && !witnessed; ++n) {
            witnessed = std::gcd(n, x) == 1 && sigma_inside(s, n);
        }
        const bool in_engine = engine.contains(x);
        if (!witnessed) v.unwitnessed.push_back(x);
        if (witnessed && !in_engine) v.discrepancies.push_back({x, false, Answer::Yes});
        if (!witnessed && in_engine) v.discrepancies.push_back({x, true, Answer::Inconclusive});
    }
    return v;
}

OracleVerdict oracle_golomb_check(const EPSet& s, std::size_t sample, u64 b_bound) {
    arith::require_pos(b_bound, "step bound");
    OracleVerdict v;
    v.check = "golomb";
    v.set = s.to_string();
    v.cover_prime_bound = b_bound;
    for (u64 x : s.enumerate(sample)) {
        ++v.points_checked;
        v.checked_window = x;
        bool witnessed = false;
        for (u64 b = 1; b <= b_bound && !witnessed; ++b) {
            witnessed = std::gcd(b, x) == 1 && progression_inside(s, x, b);
        }
        const bool in_engine = golomb::is_golomb_interior_point(s, x);
        if (!witnessed) v.unwitnessed.push_back(x);
        if (witnessed && !in_engine) v.discrepancies.push_back({x, false, Answer::Yes});
        if (!witnessed && in_engine) v.discrepancies.push_back({x, true, Answer::Inconclusive});
    }
    return v;
}

bool CuratedResult::clean() const {
    return closure.agrees() && open.agrees() && golomb.agrees();
}

CuratedResult run_curated_case(const CuratedCase& c) {
    return {&c, oracle_closure_check(c.set, kCuratedWindow, kCuratedPrimeBound, kCuratedSubsetSize),
            oracle_open_check(c.set, kCuratedSample, kCuratedSigmaBound),
            oracle_golomb_check(c.set, kCuratedSample, kCuratedStepBound)};
}

const std::vector<CuratedCase>& curated_suite() {
    static const std::vector<CuratedCase> suite = [] {
        const char* expressions[] = {
            "N",
            "N1",
            "M(2) & ~M(2)",
            "{1}",
            "{12}",
            "{4,9}",
            "{6,10,15}",
            "{2,3,5,7,11}",
            "M(2)",
            "M(3)",
            "M(4)",
            "M(6)",
            "M(12)",
            "M(30)",
            "M(210)",
            "sigma(2)",
            "sigma(6)",
            "sigma(12)",
            "sigma(30)",
            "sigma(210)",
            "class(1,4)",
            "class(3,4)",
            "class(2,4)",
            "class(0,9)",
            "class(3,9)",
            "class(5,6)",
            "ap(1,4)",
            "ap(7,3)",
            "ap(5,6)",
            "ap(11,10)",
            "M(2) | M(3)",
            "M(6) | M(35)",
            "M(2) | M(3) | M(5)",
            "M(7) | M(11) | M(13)",
            "M(29) | M(31)",
            "~M(2) \\ {1}",
            "~M(6)",
            "~(M(2) | M(3))",
            "~{4,9}",
            "M(2) \\ {2,4}",
            "M(3) | {1}",
            "M(10) | {21}",
            "M(15) | {14,22}",
            "sigma(2) & M(3)",
            "sigma(6) | M(6)",
            "sigma(6) \\ {1}",
            "sigma(6) \\ {5,7}",
            "N \\ {1,2,3}",
            "class(2,6) | class(3,6) | class(4,6)",
            "class(6,10) | class(3,10)",
        };
        std::vector<CuratedCase> out;
        int i = 1;
        for (const char* e : expressions) {
            char name[16];
            std::snprintf(name, sizeof name, "case-%02d", i++);
            out.push_back({name, e, expr::evaluate(expr::parse_expr(e))});
        }
        return out;
    }();
    return suite;
}

}  // namespace cotop::oracle
