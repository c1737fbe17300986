#pragma once

// Eventually periodic subsets of the positive integers.
//
// An EPSet denotes S = (Periodic(m, R) u A) \ B with
//   Periodic(m, R) = { x >= 1 : x mod m in R }.
// Values are always held in canonical form:
//   - A is disjoint from Periodic(m, R) and B is contained in it;
//   - m is the least period of the eventual pattern.
// The canonical form is unique, so operator== is set equality.

#include "cotop/arith.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cotop {

using arith::u64;

/// Largest modulus the engine will materialize as a residue table.
inline constexpr u64 kMaxModulus = u64{1} << 26;

struct Fraction {
    u64 numerator = 0;
    u64 denominator = 1;

    friend bool operator==(const Fraction&, const Fraction&) = default;
};

class EPSet {
public:
    /// The empty set.
    EPSet();

    /// { x >= 1 : x mod m in residues }. Residues must lie in [0, m).
    static EPSet periodic(u64 m, std::span<const u64> residues);
    static EPSet explicit_set(std::span<const u64> elems);
    static EPSet naturals();
    /// N \ {1}
    static EPSet naturals_from_two();
    /// Positive multiples of n.
    static EPSet multiples(u64 n);

    /// Builds the canonical form of (Periodic(m, R) u added) \ removed from
    /// arbitrary (possibly redundant) data. `in_residues` has size m.
    static EPSet canonical(u64 m, std::vector<char> in_residues, std::vector<u64> added,
                           std::vector<u64> removed);

    u64 modulus() const { return modulus_; }
    const std::vector<u64>& residues() const { return residues_; }
    const std::vector<u64>& added() const { return added_; }
    const std::vector<u64>& removed() const { return removed_; }

    bool contains(u64 x) const;
    bool periodic_contains(u64 x) const;
    bool empty() const { return residues_.empty() && added_.empty(); }
    bool finite() const { return residues_.empty(); }
    /// Largest added or removed point, 0 when there are none.
    u64 max_exception() const;

    /// The k smallest elements, ascending.
    std::vector<u64> enumerate(std::size_t k) const;
    Fraction natural_density() const;

    /// `Periodic(m; r1,r2) + {a1,a2} - {b1}`; each exception part only when
    /// nonempty.
    std::string to_string() const;

    friend bool operator==(const EPSet&, const EPSet&) = default;

private:
    u64 modulus_ = 1;
    std::vector<u64> residues_;
    std::vector<u64> added_;
    std::vector<u64> removed_;
};

EPSet complement(const EPSet& s);
EPSet intersect(const EPSet& s, const EPSet& t);
EPSet unite(const EPSet& s, const EPSet& t);
EPSet difference(const EPSet& s, const EPSet& t);
bool is_subset(const EPSet& s, const EPSet& t);

/// Same set re-expressed over modulus k * m before canonicalization.
/// Exposed for representation tests.
std::vector<char> lifted_residues(const EPSet& s, u64 new_modulus);

}  // namespace cotop
