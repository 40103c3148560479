#pragma once

#include "singord/bounds.hpp"

namespace singord {

struct VerificationRecord {
    long mu = -1, tau = -1, delta = -1, branches = -1;
    int mt = -1;
    int corank = -1;        // of the Hessian at the point, for A-type certification
    bool type_certified = false;   // A-type via mu + corank, or simple via tree
    bool tree_match = false;
    bool extra_sing_clean = false;
    bool t_smooth = false;
    bool irreducible_by_count = false;
};

struct RealizationResult {
    MultiPoly poly;
    long degree = 0;
    std::vector<std::string> targets;
    VerificationRecord checks;
    long degree_bound = -1; // the Theorem 5 / Theorem 3 budget when applicable
    bool verified = false;
    std::string note;

    std::string to_json() const;
};

// Theorem 5: a polynomial of small degree right equivalent to the critical
// point of f. Pipeline: iso-twist f, find the minimal degree with
// p - g in I(g) solvable in the certified jet model, verify; falls back to
// the normal form itself when it already meets the budget.
RealizationResult realize_critical_point(const MultiPoly& f_normal, std::uint64_t seed);

// the explicit family (y - x^m)^2 + y^(2m) with an A_{2m^2-1} point
RealizationResult ak_family(int m);

// Theorem 1: an irreducible plane curve of degree d with exactly the
// prescribed singularities (topological flavor via Z^s, analytic via Z^a)
RealizationResult realize_plane_curve(const std::vector<MultiPoly>& target_germs, int d, bool analytic,
                                      std::uint64_t seed);

// Theorem 6 at n = 3: a polynomial in three variables with an A_k critical
// point, built from a two-variable A_{2m0-1} germ and a series square root
RealizationResult construct_ak_3d(int k, std::uint64_t seed);

// minimal degree passing (e39)/(e43) for the given targets
int minimal_existence_degree(const std::vector<MultiPoly>& target_germs, bool analytic);

} // namespace singord
