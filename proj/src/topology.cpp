#include "cotop/topology.hpp"

#include "cotop/error.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace cotop::topo {

namespace {

// Radicals r such that cl(S) = U M_r, or {1} when S is dense.
std::vector<u64> closure_radicals(const EPSet& s) {
    if (s.contains(1)) return {1};
    std::vector<u64> rads;
    for (u64 a : s.residues()) {
        const u64 g = std::gcd(a, s.modulus());
        if (g == 1) return {1};
        rads.push_back(arith::radical(g));
    }
    for (u64 x : s.added()) rads.push_back(arith::radical(x));
    std::sort(rads.begin(), rads.end());
    rads.erase(std::unique(rads.begin(), rads.end()), rads.end());

    // M_r is contained in M_r' when r' | r.
    std::vector<u64> minimal;
    for (u64 r : rads) {
        const bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                           [r](u64 q) { return r % q == 0; });
        if (!redundant) minimal.push_back(r);
    }
    return minimal;
}

bool has_unit_class(const EPSet& s) {
    return std::any_of(s.residues().begin(), s.residues().end(),
                       [&](u64 a) { return std::gcd(a, s.modulus()) == 1; });
}

}  // namespace

EPSet sigma(u64 n) {
    arith::require_pos(n, "sigma index");
    if (n == 1) return EPSet::naturals();
    // sigma(n) = sigma(rad(n)); residue 0 is never coprime for n > 1.
    const u64 r = arith::radical(n);
    if (r > kMaxModulus) {
        fail(ErrorKind::Range, "sigma(" + std::to_string(n) + ") needs modulus " +
                                   std::to_string(r) + ", above the supported maximum");
    }
    std::vector<u64> units;
    for (u64 a = 1; a < r; ++a) {
        if (std::gcd(a, r) == 1) units.push_back(a);
    }
    return EPSet::periodic(r, units);
}

SigmaDecomposition sigma_decomposition(u64 n) {
    arith::require_pos(n, "sigma index");
    SigmaDecomposition out;
    if (n == 1) {
        out.whole_space = true;
        return out;
    }
    if (n > kMaxModulus) {
        fail(ErrorKind::Range, "decomposition of sigma(" + std::to_string(n) + ") is too large to list");
    }
    for (u64 m = 1; m < n; ++m) {
        if (std::gcd(m, n) == 1) out.progressions.push_back({m, n});
    }
    return out;
}

EPSet closure_singleton(u64 n) {
    arith::require_pos(n, "point");
    if (n == 1) return EPSet::naturals();
    return EPSet::multiples(arith::radical(n));
}

EPSet closure(const EPSet& s) {
    if (s.empty()) return s;
    const auto rads = closure_radicals(s);
    if (rads.size() == 1 && rads.front() == 1) return EPSet::naturals();
    EPSet out;
    for (u64 r : rads) out = unite(out, EPSet::multiples(r));
    return out;
}

EPSet interior(const EPSet& s) { return complement(closure(complement(s))); }

EPSet boundary(const EPSet& s) { return difference(closure(s), interior(s)); }

bool is_open(const EPSet& s) { return interior(s) == s; }

bool is_closed(const EPSet& s) { return closure(s) == s; }

bool is_dense(const EPSet& s) {
    const bool dense = s.contains(1) || has_unit_class(s);
    assert(dense == (closure(s) == EPSet::naturals()));
    return dense;
}

bool is_nowhere_dense(const EPSet& s) { return interior(closure(s)).empty(); }

ClassifyReport classify(const EPSet& s) {
    ClassifyReport r;
    r.closure = closure(s);
    r.interior = interior(s);
    r.boundary = difference(r.closure, r.interior);
    r.is_open = r.interior == s;
    r.is_closed = r.closure == s;
    r.is_dense = is_dense(s);
    r.is_nowhere_dense = interior(r.closure).empty();
    return r;
}

}  // namespace cotop::topo
