#pragma once

// Families of primes and bounded density probes.
//
// A family A of primes is dense in the coprimality topology iff it meets
// every sigma(n), and for A inside the primes that happens iff A is
// infinite. Neither side is decidable for opaque families, so a probe only
// records, per n, the least member coprime to n found below a search bound,
// or "unresolved". Unresolved is a value, never a claim of non-density.

#include "cotop/arith.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace cotop::primefam {

using arith::u64;

inline constexpr u64 kDefaultProbeBound = 1'000'000;

class Family {
public:
    enum class Kind { AllPrimes, Progression, Mersenne, Fermat, Twin, Custom };

    static Family all_primes();
    /// Primes in { a + k*b : k >= 0 }; requires gcd(a, b) = 1.
    static Family progression(u64 a, u64 b);
    /// Primes 2^p - 1 with p <= 61.
    static Family mersenne();
    /// The five known Fermat primes.
    static Family fermat();
    /// Smaller member of each twin-prime pair.
    static Family twin();
    /// Throws Precondition on an empty list or a non-prime entry.
    static Family custom(std::vector<u64> primes);
    /// Newline-separated decimal primes; `#` starts a comment. Errors carry
    /// the 1-based line number.
    static Family load_custom(const std::filesystem::path& path);
    static Family parse_custom(const std::string& text);

    /// `primes`, `mersenne`, `fermat`, `twin`, `progression(a,b)` or
    /// `ap(a,b)`. `custom` is only reachable through load_custom.
    static Family from_name(const std::string& name);

    Kind kind() const { return kind_; }
    std::string name() const;

    /// Whether x belongs to the family, derived from the definition.
    bool contains(u64 x) const;

private:
    friend class Cursor;
    Kind kind_ = Kind::AllPrimes;
    u64 a_ = 0;
    u64 b_ = 0;
    std::vector<u64> list_;  // Mersenne, Fermat and custom members
};

/// Ascending, restartable enumeration of a family.
class Cursor {
public:
    explicit Cursor(const Family& f);

    /// Next member not exceeding `limit`, or nullopt once the next member
    /// would exceed it or the family is exhausted.
    std::optional<u64> next(u64 limit = arith::kMaxPosInt);
    bool exhausted() const { return exhausted_; }

private:
    const Family* family_;
    u64 last_ = 0;
    std::size_t index_ = 0;
    std::optional<u64> pending_;
    bool exhausted_ = false;

    std::optional<u64> compute_next();
};

struct Enumeration {
    std::vector<u64> members;
    bool exhausted = false;  // fewer than requested because the family ran out
};

Enumeration family_enumerate(const Family& f, std::size_t count);

struct WitnessRow {
    u64 n;
    std::optional<u64> witness;
    u64 search_bound;
};

struct WitnessTable {
    std::string family;
    std::vector<WitnessRow> rows;

    bool all_resolved() const;
};

/// For each n in [2, n_max], the least member w <= search_bound with
/// gcd(n, w) = 1.
WitnessTable density_probe(const Family& f, u64 n_max, u64 search_bound = kDefaultProbeBound);

/// Least prime coprime to the product of `known` (all entries prime).
u64 next_new_prime(const std::vector<u64>& known);

/// Every x in [2, big_n] is a multiple of some prime.
bool partition_check(u64 big_n);

enum class Level { Quick, Full };

struct ChainEntry {
    std::string item;
    std::string statement;
    bool passed = false;
    std::string detail;
};

struct ChainReport {
    Level level = Level::Quick;
    u64 window = 0;
    std::vector<ChainEntry> entries;

    bool all_pass() const;
};

/// Runs the identities behind the density proof of the infinitude of the
/// primes on a finite window (10^3 quick, 10^5 full).
ChainReport verify_density_chain(Level level);

}  // namespace cotop::primefam
