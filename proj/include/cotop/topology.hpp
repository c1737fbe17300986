#pragma once

// The coprimality topology on the positive integers: the topology generated
// by the basic opens sigma(n) = { m : gcd(n, m) = 1 }.
//
// Closure of an arbitrary EPSet. A point x lies outside cl(S) exactly when
// some sigma(n) contains x and misses S, i.e. when a finite prime set Q
// avoiding the primes of x covers S (every element of S has a prime in Q).
// A residue class a mod m is covered by Q iff some q in Q divides
// gcd(a, m): otherwise the class keeps elements coprime to all of Q (by
// CRT there are infinitely many), so no finite cover exists. An added point
// s is covered iff Q contains a prime of s. Finitely many removed points
// cannot affect coverability. Therefore
//
//   cl(S) = N                                  if 1 in S or some gcd(a, m) = 1
//   cl(S) = U_a M_rad(gcd(a, m)) u U_s M_rad(s)  otherwise,
//
// which reduces to cl({n}) = M_rad(n) for singletons. The derivation is an
// extension beyond singletons; the oracle module checks it against the raw
// definition.

#include "cotop/perset.hpp"

#include <vector>

namespace cotop::topo {

struct ClassifyReport {
    bool is_open = false;
    bool is_closed = false;
    bool is_dense = false;
    bool is_nowhere_dense = false;
    EPSet closure;
    EPSet interior;
    EPSet boundary;
};

struct Progression {
    u64 first;
    u64 step;

    friend bool operator==(const Progression&, const Progression&) = default;
};

/// sigma(1) is the whole space; callers see it as `whole_space` with no
/// progressions.
struct SigmaDecomposition {
    bool whole_space = false;
    std::vector<Progression> progressions;
};

EPSet sigma(u64 n);
SigmaDecomposition sigma_decomposition(u64 n);

EPSet closure_singleton(u64 n);
EPSet closure(const EPSet& s);
EPSet interior(const EPSet& s);
EPSet boundary(const EPSet& s);

bool is_open(const EPSet& s);
bool is_closed(const EPSet& s);
bool is_dense(const EPSet& s);
bool is_nowhere_dense(const EPSet& s);

ClassifyReport classify(const EPSet& s);

}  // namespace cotop::topo
