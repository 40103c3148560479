#pragma once

#include "singord/scheme.hpp"

namespace singord {

struct Cohomology {
    long h0 = 0, h1 = 0, rank = 0;
};

// exact h^0/h^1 of the twisted ideal sheaf J_Z(n) on the plane, via the
// condition matrix of the scheme on curves of degree n
Cohomology cohomology(const ZeroDimScheme& z, int n);

int ord0(const ZeroDimScheme& z); // min n with h^0 > 0
int ord1(const ZeroDimScheme& z); // min n with h^1 = 0

struct CastelnuovoProfile {
    long deg = 0;
    int ord0 = 0, ord1 = 0;
    std::vector<long> c; // C(n), n = 0..ord1+1
    std::string to_json() const;
};

// profile with the four Castelnuovo properties asserted
CastelnuovoProfile castelnuovo(const ZeroDimScheme& z);

struct OrdersResult {
    int ord0_an = 0, ord1_an = 0;
    struct Trial {
        int ord0 = 0, ord1 = 0;
    };
    std::vector<Trial> trials;
    bool stable0 = true, stable1 = true;
    long deg = 0;
    std::string mode;
    std::string to_json() const;
};

// Monte-Carlo generic orders over Iso(Z) or Def(Z): max of ord0 and min of
// ord1 across seeded representatives, with a stability flag
OrdersResult generic_orders(const ZeroDimScheme& z, SampleMode mode, int trials, std::uint64_t seed);

// basis of H^0(J_Z(n)): curves of degree <= n through the scheme
std::vector<MultiPoly> curves_through(const ZeroDimScheme& z, int n);

} // namespace singord
