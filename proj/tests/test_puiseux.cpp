#include "doctest.h"

#include <algorithm>

#include "singord/puiseux.hpp"

using namespace singord;

namespace {

const std::vector<ExactScalar> O2{ExactScalar(0), ExactScalar(0)};

MultiPoly ak(int k) { return parse_poly("y^2 - x^" + std::to_string(k + 1)); }
MultiPoly dk(int k) { return parse_poly("x^2*y + y^" + std::to_string(k - 1)); }

std::vector<long> essential_mults(const Resolution& r) {
    std::vector<long> out;
    for (const auto& v : r.tree.verts)
        if (v.essential)
            for (long c = 0; c < v.weight; ++c) out.push_back(v.m);
    std::sort(out.rbegin(), out.rend());
    return out;
}

} // namespace

TEST_CASE("cusp: essential tree {2,1,1} and branch data") {
    Resolution r = resolve(parse_poly("y^2 - x^3"));
    CHECK(essential_mults(r) == std::vector<long>{2, 1, 1});
    CHECK(r.mt() == 2);
    CHECK(r.delta() == 1);
    CHECK(r.branch_count() == 1);
    REQUIRE(r.branches.size() == 1);
    CHECK(r.branches[0].mult_sequence == std::vector<long>{2, 1, 1, 1});
    auto ch = r.branches[0].characteristic();
    REQUIRE(ch.size() == 1);
    CHECK(ch[0].first == 3);
    CHECK(ch[0].second == 1);
    CHECK(r.tree.essential_subtree().sum_deg() == 5);
    CHECK(r.tree.essential_subtree().sum_m2() == 6);
}

TEST_CASE("node: two transverse smooth branches, tree {2}") {
    Resolution r = resolve(parse_poly("y^2 - x^2"));
    CHECK(essential_mults(r) == std::vector<long>{2});
    CHECK(r.branch_count() == 2);
    CHECK(r.delta() == 1);
    CHECK(r.tree.essential_subtree().sum_deg() == 3);
}

TEST_CASE("A4: tree {2,2,1,1} and characteristic (2;5)") {
    Resolution r = resolve(ak(4));
    CHECK(essential_mults(r) == std::vector<long>{2, 2, 1, 1});
    CHECK(r.tree.essential_subtree().sum_deg() == 8); // [(3*4+4)/2]
    CHECK(r.delta() == 2);
    CHECK(r.branch_count() == 1);
    auto ch = r.branches[0].characteristic();
    REQUIRE(ch.size() == 1);
    CHECK(ch[0].first == 5);
}

TEST_CASE("A_k essential trees realize the Lemma 10 value [(3k+4)/2]") {
    for (int k = 1; k <= 9; ++k) {
        Resolution r = resolve(ak(k));
        CHECK(r.tree.essential_subtree().sum_deg() == (3 * k + 4) / 2);
        CHECK(r.tree.proximity_ok());
        CHECK(r.branch_count() == (k % 2 == 1 ? 2 : 1));
        CHECK(r.delta() == (k + 1) / 2);
    }
}

TEST_CASE("D_k and E_k essential trees: [(3k+1)/2] and k+3") {
    for (int k = 4; k <= 10; ++k) {
        Resolution r = resolve(dk(k));
        CHECK(r.tree.essential_subtree().sum_deg() == (3 * k + 1) / 2);
    }
    CHECK(resolve(parse_poly("x^3 + y^4")).tree.essential_subtree().sum_deg() == 9);
    CHECK(resolve(parse_poly("x^3 + x*y^3")).tree.essential_subtree().sum_deg() == 10);
    CHECK(resolve(parse_poly("x^3 + y^5")).tree.essential_subtree().sum_deg() == 11);
}

TEST_CASE("ordinary triple point with conjugate directions") {
    // x^3 - y^3 has one rational and two conjugate directions
    Resolution r = resolve(parse_poly("x^3 - y^3"));
    CHECK(essential_mults(r) == std::vector<long>{3});
    CHECK(r.branch_count() == 3);
    CHECK(r.delta() == 3);
    CHECK(r.mt() == 3);
    // packets: weights must sum to 3 with a rational leaf split off
    CHECK(r.tree.essential_subtree().sum_deg() == 6);
    CHECK(r.tree.essential_subtree().sum_m2() == 9);
}

TEST_CASE("non-simple germ x^4 + x^2 y^3 + y^5") {
    MultiPoly f = parse_poly("x^4 + x^2*y^3 + y^5");
    Resolution r = resolve(f);
    CHECK(r.mt() == 4);
    // one branch of characteristic (4;5): proximity equality at the root
    // forces four unit satellites/tangent points in T*
    CHECK(essential_mults(r) == std::vector<long>{4, 1, 1, 1, 1});
    CHECK(r.tree.essential_subtree().sum_deg() == 14);
    long mu = milnor_number(f);
    CHECK(mu == 12);
    CHECK(mu == 2 * r.delta() - r.branch_count() + 1);
}

TEST_CASE("algebraic essential vertices: (y^2 - 2x^2)^2 + x^5") {
    MultiPoly f = parse_poly("y^2 - 2*x^2").pow(2) + parse_poly("x^5");
    Resolution r = resolve(f);
    CHECK(r.mt() == 4);
    long mu = milnor_number(f);
    CHECK(mu == 2 * r.delta() - r.branch_count() + 1);
    CHECK(r.tree.proximity_ok());
    // two conjugate tacnodal directions: a weight-2 essential vertex exists
    bool weight2 = false;
    for (const auto& v : r.tree.verts)
        if (v.weight == 2 && v.essential && v.parent >= 0) weight2 = true;
    CHECK(weight2);
}

TEST_CASE("Milnor formula mu = 2 delta - r + 1 across a corpus") {
    for (const char* text :
         {"y^2 - x^3", "x*y", "y^2 - x^5", "x^3 - y^3", "x^2*y - y^3", "x^2*y + y^5",
          "x^3 + y^4", "x^3 + x*y^3", "x^3 + y^5", "x^4 + y^5", "x^4 + y^4", "x^3*y - x*y^3",
          "x^4 + x^2*y^3 + y^5", "x^3 + y^6", "y^3 - y*x^4"}) {
        MultiPoly f = parse_poly(text);
        Resolution r = resolve(f);
        CHECK_MESSAGE(milnor_number(f) == 2 * r.delta() - r.branch_count() + 1, text);
    }
}

TEST_CASE("branch multiplicity invariants") {
    for (const char* text : {"y^2 - x^7", "x^3 + y^5", "x^4 + x^2*y^3 + y^5", "x^3*y - x*y^3"}) {
        Resolution r = resolve(parse_poly(text));
        long mt = 0;
        for (const auto& b : r.branches) {
            mt += b.packet_size * b.ramification();
            // non-increasing, ends at 1
            for (std::size_t i = 1; i < b.mult_sequence.size(); ++i)
                CHECK(b.mult_sequence[i] <= b.mult_sequence[i - 1]);
            CHECK(b.mult_sequence.back() == 1);
        }
        CHECK(mt == r.mt());
    }
}

TEST_CASE("characteristic parser on reference sequences") {
    BranchClass b;
    b.mult_sequence = {4, 2, 2, 1, 1};
    auto ch = b.characteristic(); // (4; 6, 7)
    REQUIRE(ch.size() == 2);
    CHECK(ch[0] == std::pair<long, long>{6, 2});
    CHECK(ch[1] == std::pair<long, long>{7, 1});
    b.mult_sequence = {6, 2, 2, 2, 1, 1};
    ch = b.characteristic(); // (6; 8, 9)
    REQUIRE(ch.size() == 2);
    CHECK(ch[0] == std::pair<long, long>{8, 2});
    CHECK(ch[1] == std::pair<long, long>{9, 1});
    b.mult_sequence = {4, 2, 2, 2, 2, 1, 1};
    ch = b.characteristic(); // (4; 6, 11)
    REQUIRE(ch.size() == 2);
    CHECK(ch[0].first == 6);
    CHECK(ch[1].first == 11);
}

TEST_CASE("intersection multiplicities with the eliminant cross-check") {
    CHECK(intersection_multiplicity(parse_poly("y"), parse_poly("x"), O2) == 1);
    CHECK(intersection_multiplicity(parse_poly("y^2 - x^3"), parse_poly("y"), O2) == 3);
    CHECK(intersection_multiplicity(parse_poly("y^2 - x^3"), parse_poly("y^2 + x^3"), O2) == 6);
    CHECK(intersection_multiplicity(parse_poly("y - x^2"), parse_poly("y + x^2"), O2) == 2);
    // symmetric
    CHECK(intersection_multiplicity(parse_poly("y^2 - x^3"), parse_poly("x^2 - y^3"), O2) ==
          intersection_multiplicity(parse_poly("x^2 - y^3"), parse_poly("y^2 - x^3"), O2));
    CHECK_THROWS_AS(intersection_multiplicity(parse_poly("x*y"), parse_poly("x"), O2), CommonComponent);
    // conjugate shared tangent directions
    MultiPoly f = parse_poly("y^2 - 2*x^2");
    MultiPoly g = parse_poly("y^2 - 2*x^2 + x^3");
    CHECK(intersection_multiplicity(f, g, O2) == 6);
}

TEST_CASE("delta invariants: classical values") {
    CHECK(delta_invariant(parse_poly("x*y")) == 1);
    CHECK(delta_invariant(parse_poly("y^2 - x^3")) == 1);
    CHECK(delta_invariant(parse_poly("y^2 - x^5")) == 2);
    CHECK(delta_invariant(parse_poly("x^3 - y^3")) == 3);
}

TEST_CASE("common points tree of smooth tangent germs") {
    // two smooth germs with contact exactly 3 share a chain of 3 points
    MultiPoly g1 = parse_poly("y - x^3");
    MultiPoly g2 = parse_poly("y + x^3");
    ClusterTree t = common_points_tree({g1, g2});
    CHECK(t.verts.size() == 3);
    for (const auto& v : t.verts) CHECK(v.m == 1);
    CHECK(t.sum_deg() == 3);
}

TEST_CASE("cluster_of_ideal examples") {
    // fat point m = 3
    JetIdeal fat = close_ideal({parse_poly("x^3"), parse_poly("x^2*y"), parse_poly("x*y^2"), parse_poly("y^3")}, O2);
    ClusterTree t = cluster_of_ideal(fat, 5);
    REQUIRE(t.verts.size() == 1);
    CHECK(t.verts[0].m == 3);
    // Tjurina ideal of the node: a generic element is a smooth germ
    JetIdeal tj = tjurina_ideal(parse_poly("x*y"), O2);
    ClusterTree tn = cluster_of_ideal(tj, 7);
    REQUIRE(tn.verts.size() == 1);
    CHECK(tn.verts[0].m == 1);
    // cluster ideal of Z^s(cusp): tree {2,1,1}, M2 = 6, deg 5, (e38) sandwich
    Resolution cusp = resolve(parse_poly("y^2 - x^3"));
    JetIdeal zs = cluster_ideal(cusp.tree.essential_subtree(), VarSet::plane(), O2);
    CHECK(zs.colength() == 5);
    ClusterTree cl = cluster_of_ideal(zs, 3);
    CHECK(cl.sum_m2() == 6);
    CHECK(zs.colength() <= cl.sum_m2());
    CHECK(cl.sum_m2() < 2 * zs.colength());
}

TEST_CASE("cluster ideal colengths match the tree degree") {
    for (const char* text : {"x*y", "y^2 - x^3", "y^2 - x^5", "x^2*y - y^3", "x^3 + y^4"}) {
        Resolution r = resolve(parse_poly(text));
        ClusterTree ess = r.tree.essential_subtree();
        JetIdeal ideal = cluster_ideal(ess, VarSet::plane(), O2);
        CHECK_MESSAGE(ideal.colength() == ess.sum_deg(), text);
    }
}

TEST_CASE("cluster ideal with algebraic vertices") {
    MultiPoly f = parse_poly("y^2 - 2*x^2").pow(2) + parse_poly("x^5");
    Resolution r = resolve(f);
    ClusterTree ess = r.tree.essential_subtree();
    JetIdeal ideal = cluster_ideal(ess, VarSet::plane(), O2);
    CHECK(ideal.colength() == ess.sum_deg());
    // the germ itself satisfies its own cluster conditions
    CHECK(ideal.contains_jet(f.truncated(ideal.jet_order)));
}

TEST_CASE("re-realized trees preserve the cluster type") {
    Rng rng(11);
    Resolution r = resolve(parse_poly("y^2 - x^5"));
    ClusterTree ess = r.tree.essential_subtree();
    ClusterTree fresh = ess.re_realized(rng);
    CHECK(fresh.sum_deg() == ess.sum_deg());
    CHECK(fresh.sum_m2() == ess.sum_m2());
    CHECK(fresh.signature() == ess.signature());
    // a cluster ideal built from the re-realized tree has the same colength
    JetIdeal ideal = cluster_ideal(fresh, VarSet::plane(), O2);
    CHECK(ideal.colength() == ess.sum_deg());
}

TEST_CASE("equisingularity ideal: tau for quasi-homogeneous simple germs") {
    // for simple singularities I^es has the Tjurina colength
    struct Case {
        const char* f;
        long want;
    } cases[] = {
        {"x*y", 1}, {"y^2 - x^3", 2}, {"y^2 - x^4", 3}, {"y^2 - x^5", 4}, {"x^2*y - y^3", 4},
        {"x^2*y + y^4", 5}, {"x^3 + y^4", 6}, {"x^3 + x*y^3", 7}, {"x^3 + y^5", 8},
        // unimodal germs: the equisingular stratum gains one modulus, so
        // the colength drops to tau - 1
        {"x^4 + y^4", 8}, {"x^4 + y^5", 11}, {"x^3 + y^6", 9},
    };
    for (const auto& c : cases) {
        MultiPoly f = parse_poly(c.f);
        Resolution r = resolve(f);
        JetIdeal es = equisingularity_ideal(r.tree.essential_subtree(), f, VarSet::plane(), O2);
        CHECK_MESSAGE(es.colength() == c.want, c.f);
    }
}

TEST_CASE("resolve input validation") {
    CHECK_THROWS_AS(resolve(parse_poly("x^2*y^2")), NotReduced);
    CHECK_THROWS_AS(resolve(parse_poly("x + 1")), InputError);
    CHECK_THROWS_AS(resolve(MultiPoly(VarSet::plane())), ZeroInput);
    // smooth germ: a single root vertex, one branch
    Resolution r = resolve(parse_poly("y - x^2"));
    CHECK(r.tree.verts.size() == 1);
    CHECK(r.branch_count() == 1);
}
