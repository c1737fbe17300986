#include "cotop/primefam.hpp"
#include "cotop/topology.hpp"

#include <numeric>
#include <set>

namespace cotop::primefam {

namespace {

ChainEntry entry(std::string item, std::string statement) {
    return {std::move(item), std::move(statement), true, {}};
}

void refute(ChainEntry& e, const std::string& why) {
    if (e.passed) e.detail = why;
    e.passed = false;
}

ChainEntry prime_closures() {
    auto e = entry("prime-point closure", "cl({p}) = M_p and M_p is closed, for primes p < 100");
    for (u64 p : arith::primes_up_to(99)) {
        const EPSet mp = EPSet::multiples(p);
        const u64 pt[] = {p};
        if (topo::closure(EPSet::explicit_set(pt)) != mp) refute(e, "cl({" + std::to_string(p) + "}) != M_p");
        if (!topo::is_closed(mp)) refute(e, "M_" + std::to_string(p) + " not closed");
    }
    if (e.passed) e.detail = "25 primes";
    return e;
}

ChainEntry point_closures(u64 n_hi) {
    auto e = entry("point closure", "cl({n}) = intersection of M_p over primes p | n, n in [2, " +
                                        std::to_string(n_hi) + "]; cl({1}) = N");
    const u64 one[] = {1};
    if (topo::closure(EPSet::explicit_set(one)) != EPSet::naturals()) refute(e, "cl({1}) != N");
    for (u64 n = 2; n <= n_hi; ++n) {
        EPSet expected = EPSet::naturals();
        for (const auto& pp : arith::factorize(n)) expected = intersect(expected, EPSet::multiples(pp.prime));
        const u64 pt[] = {n};
        if (topo::closure(EPSet::explicit_set(pt)) != expected) {
            refute(e, "mismatch at n=" + std::to_string(n));
        }
    }
    if (e.passed) e.detail = std::to_string(n_hi - 1) + " points";
    return e;
}

ChainEntry base_law() {
    auto e = entry("base law", "sigma(n*m) = sigma(n) & sigma(m) for n, m <= 60");
    for (u64 n = 1; n <= 60; ++n) {
        for (u64 m = 1; m <= 60; ++m) {
            if (topo::sigma(n * m) != intersect(topo::sigma(n), topo::sigma(m))) {
                refute(e, "fails at n=" + std::to_string(n) + ", m=" + std::to_string(m));
            }
        }
    }
    if (e.passed) e.detail = "3600 pairs";
    return e;
}

ChainEntry subspace_prime_closures(u64 window) {
    auto e = entry("subspace closure of primes",
                   "cl_X1({p}) = cl({p}) & N1 = M_p, and the union over p equals their X-closures");
    const EPSet n1 = EPSet::naturals_from_two();
    const u64 p_hi = std::min<u64>(window, 1000);
    for (u64 p : arith::primes_up_to(p_hi)) {
        const u64 pt[] = {p};
        const EPSet sub = intersect(topo::closure(EPSet::explicit_set(pt)), n1);
        if (sub != EPSet::multiples(p)) refute(e, "p=" + std::to_string(p));
        for (u64 x = 1; x <= std::min<u64>(window, 2000); ++x) {
            if (sub.contains(x) != (x % p == 0)) refute(e, "window mismatch p=" + std::to_string(p));
        }
    }
    if (e.passed) e.detail = "primes <= " + std::to_string(p_hi);
    return e;
}

ChainEntry prime_cover(u64 window) {
    auto e = entry("multiples of primes cover N1", "union of M_p over primes p = N1 on [2, " +
                                                       std::to_string(window) + "]");
    if (!partition_check(window)) refute(e, "some x in the window has no prime factor");
    return e;
}

ChainEntry subspace_density(u64 window) {
    auto e = entry("subspace density transfer",
                   "S inside N1 is dense in X1 iff S is dense in X, on sigma/multiple unions");
    const EPSet n1 = EPSet::naturals_from_two();
    const u64 hi = window >= 100'000 ? 40 : 20;
    u64 count = 0;
    for (u64 a = 1; a <= hi; ++a) {
        for (u64 b = 2; b <= hi; ++b) {
            for (const EPSet& cand : {unite(topo::sigma(a), EPSet::multiples(b)),
                                      difference(EPSet::multiples(b), topo::sigma(a))}) {
                const EPSet sub = intersect(cand, n1);
                // cl_X1(S) = cl(S) & N1, so density in X1 means N1 inside cl(S).
                const bool dense_x1 = is_subset(n1, topo::closure(sub));
                if (dense_x1 != topo::is_dense(sub)) refute(e, "disagreement on " + sub.to_string());
                ++count;
            }
        }
    }
    if (e.passed) e.detail = std::to_string(count) + " sets";
    return e;
}

ChainEntry prime_density_probe(u64 window) {
    auto e = entry("primes meet every sigma(n)", "density probe of all primes, n in [2, " +
                                                     std::to_string(window) + "]");
    const auto table = density_probe(Family::all_primes(), window);
    u64 worst = 0;
    for (const auto& row : table.rows) {
        if (!row.witness) {
            refute(e, "unresolved at n=" + std::to_string(row.n));
            continue;
        }
        if (std::gcd(row.n, *row.witness) != 1 || !arith::is_prime(*row.witness)) {
            refute(e, "bad witness at n=" + std::to_string(row.n));
        }
        worst = std::max(worst, *row.witness);
    }
    if (e.passed) e.detail = "largest witness " + std::to_string(worst);
    return e;
}

ChainEntry iterated_new_primes() {
    auto e = entry("no finite set of primes is complete",
                   "ten iterations of next_new_prime from {2} give ten new distinct primes");
    std::vector<u64> known{2};
    std::set<u64> seen;
    for (int i = 0; i < 10; ++i) {
        const u64 q = next_new_prime(known);
        u64 product = 1;
        for (u64 p : known) product *= p;
        if (!arith::is_prime(q) || product % q == 0 || !seen.insert(q).second) {
            refute(e, "iteration " + std::to_string(i + 1) + " produced " + std::to_string(q));
        }
        known.push_back(q);
    }
    if (e.passed) e.detail = "last prime " + std::to_string(known.back());
    return e;
}

}  // namespace

ChainReport verify_density_chain(Level level) {
    ChainReport r;
    r.level = level;
    r.window = level == Level::Full ? 100'000 : 1'000;
    r.entries.push_back(prime_closures());
    r.entries.push_back(point_closures(level == Level::Full ? 2000 : 500));
    r.entries.push_back(base_law());
    r.entries.push_back(subspace_prime_closures(r.window));
    r.entries.push_back(prime_cover(r.window));
    r.entries.push_back(subspace_density(r.window));
    r.entries.push_back(prime_density_probe(r.window));
    r.entries.push_back(iterated_new_primes());
    return r;
}

}  // namespace cotop::primefam
