#include "cotop/golomb.hpp"

#include "cotop/error.hpp"
#include "cotop/topology.hpp"

#include <numeric>

namespace cotop::golomb {

namespace {

// For each divisor d of m, marks the residues c mod d whose full coset
// c + dZ/mZ lies in the periodic part of s.
class CosetTable {
public:
    explicit CosetTable(const EPSet& s) : m_(s.modulus()) {
        std::vector<char> in(m_, 0);
        for (u64 r : s.residues()) in[r] = 1;
        for (u64 d : arith::divisors(m_)) {
            std::vector<char> good(d, 1);
            for (u64 r = 0; r < m_; ++r) {
                if (!in[r]) good[r % d] = 0;
            }
            entries_.push_back({d, std::move(good)});
        }
    }

    bool class_passes(u64 c) const {
        for (const auto& [d, good] : entries_) {
            if (std::gcd(d, c) == 1 && good[c % d]) return true;
        }
        return false;
    }

private:
    struct Entry {
        u64 d;
        std::vector<char> good;
    };
    u64 m_;
    std::vector<Entry> entries_;
};

}  // namespace

EPSet golomb_basic(u64 a, u64 b) {
    arith::require_pos(a, "progression start");
    arith::require_pos(b, "progression step");
    if (std::gcd(a, b) != 1) {
        fail(ErrorKind::Precondition, "not a Golomb basic: gcd(" + std::to_string(a) + "," +
                                          std::to_string(b) + ")=" + std::to_string(std::gcd(a, b)));
    }
    if (b > kMaxModulus) fail(ErrorKind::Range, "progression step exceeds the supported modulus");
    std::vector<char> table(b, 0);
    table[a % b] = 1;
    std::vector<u64> below;
    for (u64 x = a % b == 0 ? b : a % b; x < a; x += b) below.push_back(x);
    return EPSet::canonical(b, std::move(table), {}, std::move(below));
}

bool is_golomb_interior_point(const EPSet& s, u64 x) {
    if (!s.contains(x)) return false;
    return CosetTable(s).class_passes(x % s.modulus());
}

bool is_golomb_open(const EPSet& s) {
    const CosetTable table(s);
    for (u64 a : s.residues()) {
        if (!table.class_passes(a)) return false;
    }
    for (u64 x : s.added()) {
        if (!table.class_passes(x % s.modulus())) return false;
    }
    return true;
}

CoarsenessReport coarseness_demo(u64 n_max) {
    if (n_max < 4) fail(ErrorKind::Precondition, "coarseness demo needs n_max >= 4");
    CoarsenessReport r;
    r.checked_sigma_max = n_max;
    r.all_sigma_golomb_open = true;
    for (u64 n = 1; n <= n_max; ++n) {
        if (!is_golomb_open(topo::sigma(n))) {
            r.all_sigma_golomb_open = false;
            break;
        }
    }
    // Class 1 mod 4: its complement contains the unit class 3 mod 4, so the
    // complement is dense and the interior is empty.
    r.witness = golomb_basic(1, 4);
    r.witness_is_golomb_open = is_golomb_open(r.witness);
    r.witness_is_tau_open = topo::is_open(r.witness);
    return r;
}

}  // namespace cotop::golomb
