#pragma once

// Golomb's topology on the positive integers, generated by the progressions
// a + bN0 with gcd(a, b) = 1, used as a comparison basis.
//
// Openness criterion for an EPSet S with canonical modulus m and residue
// set R. A progression x + bN0 eventually cycles through the coset
// x + <b mod m>, and <b mod m> = dZ/mZ for d = gcd(b, m). Every residue of
// that coset recurs infinitely often, so the progression stays in S only if
// the whole coset lies in R. Conversely, for x in class a with some d | m,
// gcd(d, a) = 1 and a + dZ/mZ inside R, the step b = d*t with t a large
// prime has gcd(b, m) = d, is coprime to x (gcd(d, x) = gcd(d, a) since
// d | m) and jumps past every exception. Hence x is a Golomb-interior point
// iff x in S and the class of x passes this test. Added points never do:
// their own residue is outside R and belongs to the coset.

#include "cotop/perset.hpp"

namespace cotop::golomb {

struct CoarsenessReport {
    u64 checked_sigma_max = 0;
    bool all_sigma_golomb_open = false;
    EPSet witness;
    bool witness_is_golomb_open = false;
    bool witness_is_tau_open = false;

    bool demonstrates_strictness() const {
        return all_sigma_golomb_open && witness_is_golomb_open && !witness_is_tau_open;
    }
};

/// { a + k*b : k >= 0 }; requires gcd(a, b) = 1.
EPSet golomb_basic(u64 a, u64 b);

/// Whether some Golomb basic through x lies inside s.
bool is_golomb_interior_point(const EPSet& s, u64 x);

bool is_golomb_open(const EPSet& s);

CoarsenessReport coarseness_demo(u64 n_max);

}  // namespace cotop::golomb
