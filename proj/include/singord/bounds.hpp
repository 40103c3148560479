#pragma once

#include "singord/cohomology.hpp"

namespace singord {

// One evaluated inequality, compared exactly (square roots live in a real
// quadratic extension, so lhs/rhs/slack are exact scalars).
struct BoundReport {
    std::string id;       // e3, e7, e22, e24, e38, e40, e41, e42, e44, e45, e50, e57, e71, e73, t3-3, t5
    std::string note;
    ExactScalar lhs, rhs;
    std::string relation; // "<=", "<", "==", ">="
    std::string verdict;  // PASS / FAIL / INCONCLUSIVE
    ExactScalar slack;    // rhs - lhs oriented so that PASS means slack >= 0

    std::string to_json() const;
};

std::string reports_to_json(const std::vector<BoundReport>& reports);
bool all_pass(const std::vector<BoundReport>& reports);

// evaluate lhs REL rhs exactly and fill verdict/slack
BoundReport make_report(const std::string& id, const std::string& note, const ExactScalar& lhs,
                        const std::string& relation, const ExactScalar& rhs);

// Lemma 10: (e41) equalities for A_k (and the simple D/E values), else
// (e40)/(e42)/(e71) for germs of multiplicity >= 3
std::vector<BoundReport> check_degree_bounds(const MultiPoly& f_local);

// Propositions 1 and 3 via Monte-Carlo generic orders: (e3) with its
// weakened form, then (e7)+(e24) for singular or the equality (e22) for
// nonsingular cluster schemes
std::vector<BoundReport> check_order_bounds(const ZeroDimScheme& z, int trials, std::uint64_t seed);

// Theorems 1 and 3: existence conditions (e39)/(e43) and (e50)/(e57) for a
// list of target germs on curves of degree d
std::vector<BoundReport> existence_condition(const std::vector<MultiPoly>& targets, int d);

enum class OrderFlavor { TOP, AN, CRIT };

// Theorem 2 ((e45)/(e44)), Theorem 3(3) and Theorem 5 target bounds for the
// realizer; the rhs carries the numeric bound
std::vector<BoundReport> singularity_order_bounds(const MultiPoly& f_local, OrderFlavor flavor);

// the integer Theorem-5 degree budget for a classified critical point
long theorem5_degree_bound(const MultiPoly& f_local);

} // namespace singord
