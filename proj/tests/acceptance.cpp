// Acceptance gate: one line per criterion with its timing budget.
// Exits nonzero if any criterion fails or overruns its budget.

#include "cotop/golomb.hpp"
#include "cotop/oracle.hpp"
#include "cotop/primefam.hpp"
#include "cotop/topology.hpp"
#include "support/brute.hpp"
#include "support/random_sets.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <string>

using namespace cotop;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

// Intersection of M_p over the distinct trial-division factors of n.
EPSet multiples_of_factors(u64 n) {
    EPSet out = EPSet::naturals();
    std::set<u64> primes;
    for (u64 p : test::trial_factor(n)) primes.insert(p);
    for (u64 p : primes) out = intersect(out, EPSet::multiples(p));
    return out;
}

Outcome point_closures() {
    Outcome o;
    for (u64 n = 2; n <= 500; ++n) {
        o.require(topo::closure_singleton(n) == multiples_of_factors(n), "closure({" + std::to_string(n) + "})");
    }
    return o;
}

Outcome prime_point_closures() {
    Outcome o;
    for (u64 p = 2; p < 100; ++p) {
        if (!test::trial_prime(p)) continue;
        const EPSet mp = EPSet::multiples(p);
        o.require(topo::closure_singleton(p) == mp, "closure({" + std::to_string(p) + "})");
        o.require(topo::is_closed(mp), "M(" + std::to_string(p) + ") closed");
    }
    return o;
}

Outcome base_law() {
    Outcome o;
    for (u64 n = 1; n <= 60; ++n) {
        for (u64 m = 1; m <= 60; ++m) {
            const EPSet lhs = topo::sigma(n * m);
            o.require(lhs == intersect(topo::sigma(n), topo::sigma(m)),
                      "sigma(" + std::to_string(n) + "*" + std::to_string(m) + ")");
            // Pointwise against gcd over one joint period of both sides.
            u64 rad = 1;
            for (u64 p : test::trial_factor(n * m)) rad = rad % p == 0 ? rad : rad * p;
            const u64 window = std::lcm(lhs.modulus(), rad) + lhs.max_exception();
            for (u64 x = 1; x <= window && o.pass; ++x) {
                o.require(lhs.contains(x) == (std::gcd(x, n * m) == 1), "gcd scan");
            }
        }
    }
    return o;
}

Outcome kuratowski() {
    Outcome o;
    std::mt19937_64 rng(4'000'001);
    EPSet prev = test::random_set(rng);
    for (int i = 0; i < 500 && o.pass; ++i) {
        const EPSet s = test::random_set(rng);
        const EPSet cs = topo::closure(s);
        const EPSet cp = topo::closure(prev);
        o.require(test::window_subset(s, cs), "extensive");
        o.require(topo::closure(cs) == cs, "idempotent");
        o.require(topo::closure(unite(s, prev)) == unite(cs, cp), "finitely additive");
        const EPSet small = intersect(s, prev);
        o.require(test::window_subset(topo::closure(small), cs), "monotone");
        o.require(topo::interior(s) == complement(topo::closure(complement(s))), "interior duality");
        o.require(topo::closure(s) == complement(topo::interior(complement(s))), "closure duality");
        prev = s;
    }
    o.require(topo::closure(EPSet{}).empty(), "closure of empty set");
    return o;
}

Outcome curated_oracle() {
    Outcome o;
    const auto& suite = oracle::curated_suite();
    o.require(suite.size() == 50, "suite size");
    for (const auto& c : suite) {
        const auto r = oracle::run_curated_case(c);
        const std::size_t inconclusive =
            r.closure.inconclusive() + r.open.inconclusive() + r.golomb.inconclusive();
        o.require(r.clean(), c.name + " has discrepancies");
        o.require(inconclusive == 0, c.name + " has inconclusive rows");
    }
    return o;
}

Outcome dichotomy() {
    Outcome o;
    std::mt19937_64 rng(6'000'006);
    std::vector<EPSet> sets;
    for (int i = 0; i < 200; ++i) sets.push_back(test::random_nonempty_set(rng));
    std::vector<EPSet> closures;
    for (const auto& s : sets) {
        o.require(topo::is_dense(s) != topo::is_nowhere_dense(s), s.to_string() + " dichotomy");
        closures.push_back(topo::closure(s));
    }
    // Closures of two nonempty sets share a point. Where the joint period
    // fits, intersect exactly; otherwise exhibit a common member.
    for (std::size_t i = 0; i < closures.size(); ++i) {
        for (std::size_t j = i; j < closures.size(); ++j) {
            if (std::lcm(closures[i].modulus(), closures[j].modulus()) <= kMaxModulus) {
                o.require(!intersect(closures[i], closures[j]).empty(), "closures intersect");
                continue;
            }
            const u64 x = sets[i].enumerate(1).front() * sets[j].enumerate(1).front();
            o.require(closures[i].contains(x) && closures[j].contains(x), "closures share a point");
        }
    }
    // Unions of one to three sigma(n), n <= 100.
    for (u64 a = 1; a <= 100; ++a) {
        o.require(topo::is_dense(topo::sigma(a)), "sigma dense");
        for (u64 b = a; b <= 100; b += 7) {
            const EPSet ab = unite(topo::sigma(a), topo::sigma(b));
            o.require(topo::is_dense(ab), "union dense");
            o.require(topo::is_dense(unite(ab, topo::sigma(101 - a))), "triple union dense");
        }
    }
    return o;
}

Outcome primes_dense() {
    Outcome o;
    const auto t = primefam::density_probe(primefam::Family::all_primes(), 10'000);
    o.require(t.rows.size() == 9'999, "row count");
    for (const auto& row : t.rows) {
        o.require(row.witness.has_value() && *row.witness <= 37 && std::gcd(*row.witness, row.n) == 1 &&
                      test::trial_prime(*row.witness),
                  "row " + std::to_string(row.n));
    }
    std::vector<u64> known{2};
    for (int i = 0; i < 10; ++i) known.push_back(primefam::next_new_prime(known));
    std::set<u64> distinct;
    for (std::size_t i = 1; i < known.size(); ++i) {
        o.require(test::trial_prime(known[i]), "iterate is prime");
        distinct.insert(known[i]);
    }
    o.require(distinct.size() == 10 && !distinct.count(2), "ten new primes");
    return o;
}

Outcome partition() {
    Outcome o;
    o.require(primefam::partition_check(100'000), "partition_check(1e5)");
    return o;
}

Outcome strict_coarseness() {
    Outcome o;
    const auto r = golomb::coarseness_demo(200);
    o.require(r.all_sigma_golomb_open, "sigma(n) Golomb-open");
    o.require(r.witness_is_golomb_open, "witness Golomb-open");
    o.require(!r.witness_is_tau_open, "witness not open");
    o.require(r.witness == golomb::golomb_basic(1, 4), "witness is ap(1,4)");
    const auto v = oracle::oracle_open_check(r.witness, 1, 10'000);
    o.require(v.unwitnessed == std::vector<u64>{1}, "no sigma(n) through 1 inside the witness");
    o.require(v.agrees(), "oracle agrees");
    return o;
}

Outcome named_families() {
    Outcome o;
    const std::set<u64> mersenne{3, 7, 31, 127, 8191, 131071, 524287, 2147483647};
    const std::set<u64> fermat{3, 5, 17, 257, 65537};
    for (u64 x : mersenne) o.require(test::trial_prime(x), "mersenne member prime");
    for (u64 x : fermat) o.require(test::trial_prime(x), "fermat member prime");
    const auto check = [&](const primefam::Family& f, const std::set<u64>& allowed) {
        const auto t = primefam::density_probe(f, 200);
        o.require(t.all_resolved(), t.family + " unresolved row");
        for (const auto& row : t.rows) {
            o.require(row.witness && allowed.count(*row.witness) && std::gcd(*row.witness, row.n) == 1,
                      t.family + " row " + std::to_string(row.n));
        }
    };
    check(primefam::Family::mersenne(), mersenne);
    check(primefam::Family::fermat(), fermat);
    return o;
}

struct Criterion {
    const char* id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {"AC1", "point closures equal intersections of M_p, n in [2,500]", 1, point_closures},
        {"AC2", "closure({p}) = M_p and M_p closed, p < 100", 1, prime_point_closures},
        {"AC3", "sigma(nm) = sigma(n) & sigma(m), n,m <= 60", 1, base_law},
        {"AC4", "Kuratowski axioms and duality on 500 random sets", 30, kuratowski},
        {"AC5", "curated suite: zero discrepancies, zero inconclusive", 60, curated_oracle},
        {"AC6", "dense/nowhere-dense dichotomy and hyperconnectedness", 10, dichotomy},
        {"AC7", "primes meet every sigma(n), n <= 1e4; ten new primes", 5, primes_dense},
        {"AC8", "multiples of primes cover [2, 1e5]", 1, partition},
        {"AC9", "strictly coarser than the Golomb topology", 30, strict_coarseness},
        {"AC10", "Mersenne and Fermat probes resolve n <= 200", 5, named_families},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.budget_seconds;
        const bool ok = o.pass && in_time;
        failures += ok ? 0 : 1;
        std::printf("[%s] %-4s %-58s %8.3fs (limit %gs)", ok ? "PASS" : "FAIL", c.id, c.name, secs,
                    c.budget_seconds);
        if (!o.pass) std::printf("  first failure: %s", o.detail.c_str());
        if (o.pass && !in_time) std::printf("  over time budget");
        std::printf("\n");
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
    return failures == 0 ? 0 : 1;
}
