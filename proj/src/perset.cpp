#include "cotop/perset.hpp"

#include "cotop/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace cotop {

namespace {

void require_materializable(u64 m) {
    if (m > kMaxModulus) {
        fail(ErrorKind::Range, "modulus " + std::to_string(m) + " exceeds the supported maximum " +
                                   std::to_string(kMaxModulus));
    }
}

void sort_unique(std::vector<u64>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::string join(const std::vector<u64>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

// Folding mod m/p is consistent iff every residue class mod m/p is either
// entirely inside or entirely outside the table.
bool foldable(const std::vector<char>& table, u64 m, u64 p) {
    const u64 d = m / p;
    for (u64 r = 0; r < d; ++r) {
        const char first = table[r];
        for (u64 k = 1; k < p; ++k) {
            if (table[r + k * d] != first) return false;
        }
    }
    return true;
}

using BinaryOp = std::function<bool(bool, bool)>;

EPSet combine(const EPSet& s, const EPSet& t, const BinaryOp& op) {
    const u64 m = arith::checked_lcm(s.modulus(), t.modulus());
    require_materializable(m);
    const auto ls = lifted_residues(s, m);
    const auto lt = lifted_residues(t, m);
    std::vector<char> table(m);
    for (u64 r = 0; r < m; ++r) table[r] = op(ls[r] != 0, lt[r] != 0);

    std::vector<u64> candidates;
    for (const auto* v : {&s.added(), &s.removed(), &t.added(), &t.removed()}) {
        candidates.insert(candidates.end(), v->begin(), v->end());
    }
    sort_unique(candidates);
    std::vector<u64> added;
    std::vector<u64> removed;
    for (u64 c : candidates) {
        const bool actual = op(s.contains(c), t.contains(c));
        const bool periodic = table[c % m] != 0;
        if (actual && !periodic) added.push_back(c);
        if (!actual && periodic) removed.push_back(c);
    }
    return EPSet::canonical(m, std::move(table), std::move(added), std::move(removed));
}

}  // namespace

EPSet::EPSet() = default;

EPSet EPSet::canonical(u64 m, std::vector<char> table, std::vector<u64> added,
                       std::vector<u64> removed) {
    arith::require_pos(m, "modulus");
    if (table.size() != m) fail(ErrorKind::Precondition, "residue table size must equal the modulus");
    for (u64 x : added) arith::require_pos(x, "set element");
    for (u64 x : removed) arith::require_pos(x, "set element");
    sort_unique(added);
    sort_unique(removed);

    for (u64 p : arith::prime_divisors(m)) {
        while (m % p == 0 && foldable(table, m, p)) {
            m /= p;
            table.resize(m);
        }
    }

    EPSet out;
    out.modulus_ = m;
    for (u64 r = 0; r < m; ++r) {
        if (table[r]) out.residues_.push_back(r);
    }
    for (u64 a : added) {
        if (!std::binary_search(removed.begin(), removed.end(), a) && !table[a % m]) {
            out.added_.push_back(a);
        }
    }
    for (u64 b : removed) {
        if (table[b % m]) out.removed_.push_back(b);
    }
    return out;
}

EPSet EPSet::periodic(u64 m, std::span<const u64> residues) {
    arith::require_pos(m, "modulus");
    require_materializable(m);
    std::vector<char> table(m, 0);
    for (u64 r : residues) {
        if (r >= m) {
            fail(ErrorKind::Range, "residue " + std::to_string(r) + " out of range for modulus " +
                                       std::to_string(m));
        }
        table[r] = 1;
    }
    return canonical(m, std::move(table), {}, {});
}

EPSet EPSet::explicit_set(std::span<const u64> elems) {
    return canonical(1, {0}, {elems.begin(), elems.end()}, {});
}

EPSet EPSet::naturals() { return canonical(1, {1}, {}, {}); }

EPSet EPSet::naturals_from_two() { return canonical(1, {1}, {}, {1}); }

EPSet EPSet::multiples(u64 n) {
    const u64 zero = 0;
    return periodic(n, std::span<const u64>(&zero, 1));
}

bool EPSet::periodic_contains(u64 x) const {
    return std::binary_search(residues_.begin(), residues_.end(), x % modulus_);
}

bool EPSet::contains(u64 x) const {
    if (x == 0) return false;
    if (std::binary_search(added_.begin(), added_.end(), x)) return true;
    if (std::binary_search(removed_.begin(), removed_.end(), x)) return false;
    return periodic_contains(x);
}

u64 EPSet::max_exception() const {
    u64 hi = 0;
    if (!added_.empty()) hi = std::max(hi, added_.back());
    if (!removed_.empty()) hi = std::max(hi, removed_.back());
    return hi;
}

std::vector<u64> EPSet::enumerate(std::size_t k) const {
    std::vector<u64> out;
    if (k == 0 || empty()) return out;
    if (finite()) {
        out.assign(added_.begin(), added_.begin() + std::min(k, added_.size()));
        return out;
    }
    out.reserve(k);
    for (u64 x = 1; out.size() < k; ++x) {
        if (contains(x)) out.push_back(x);
    }
    return out;
}

Fraction EPSet::natural_density() const {
    const u64 num = residues_.size();
    if (num == 0) return {0, 1};
    const u64 g = std::gcd(num, modulus_);
    return {num / g, modulus_ / g};
}

std::string EPSet::to_string() const {
    std::string out = "Periodic(" + std::to_string(modulus_) + "; " + join(residues_) + ")";
    if (!added_.empty()) out += " + {" + join(added_) + "}";
    if (!removed_.empty()) out += " - {" + join(removed_) + "}";
    return out;
}

std::vector<char> lifted_residues(const EPSet& s, u64 new_modulus) {
    if (new_modulus % s.modulus() != 0) {
        fail(ErrorKind::Precondition, "lift target must be a multiple of the modulus");
    }
    require_materializable(new_modulus);
    std::vector<char> table(new_modulus, 0);
    for (u64 base = 0; base < new_modulus; base += s.modulus()) {
        for (u64 r : s.residues()) table[base + r] = 1;
    }
    return table;
}

EPSet complement(const EPSet& s) {
    const u64 m = s.modulus();
    std::vector<char> table(m, 1);
    for (u64 r : s.residues()) table[r] = 0;
    // Added points are outside the periodic part, so they leave; removed
    // points are inside it, so they come back.
    return EPSet::canonical(m, std::move(table), s.removed(), s.added());
}

EPSet intersect(const EPSet& s, const EPSet& t) {
    return combine(s, t, [](bool a, bool b) { return a && b; });
}

EPSet unite(const EPSet& s, const EPSet& t) {
    return combine(s, t, [](bool a, bool b) { return a || b; });
}

EPSet difference(const EPSet& s, const EPSet& t) {
    return combine(s, t, [](bool a, bool b) { return a && !b; });
}

bool is_subset(const EPSet& s, const EPSet& t) { return difference(s, t).empty(); }

}  // namespace cotop
