#include "doctest.h"

#include "singord/scheme.hpp"

using namespace singord;

namespace {
const std::vector<ExactScalar> O2{ExactScalar(0), ExactScalar(0)};
std::vector<ExactScalar> at(long x, long y) { return {ExactScalar(x), ExactScalar(y)}; }
} // namespace

TEST_CASE("germ classification") {
    CHECK(classify_germ(parse_poly("x*y")).name() == "A1");
    CHECK(classify_germ(parse_poly("y^2 - x^3")).name() == "A2");
    CHECK(classify_germ(parse_poly("y^2 - x^8")).name() == "A7");
    CHECK(classify_germ(parse_poly("x^2*y - y^3")).name() == "D4");
    CHECK(classify_germ(parse_poly("x^2*y + y^5")).name() == "D6");
    CHECK(classify_germ(parse_poly("x^3 + y^4")).name() == "E6");
    CHECK(classify_germ(parse_poly("x^3 + x*y^3")).name() == "E7");
    CHECK(classify_germ(parse_poly("x^3 + y^5")).name() == "E8");
    CHECK(classify_germ(parse_poly("x^3 + y^6")).name() == "non-simple"); // J10
    CHECK(classify_germ(parse_poly("x^4 + y^4")).name() == "non-simple");
    CHECK(classify_germ(parse_poly("y - x^2")).name() == "smooth");
}

TEST_CASE("build_scheme: degrees of the paper examples") {
    // node, kind S: deg 3, single cluster vertex m=2
    ZeroDimScheme node_s = build_scheme(parse_poly("x*y"), SchemeKind::S, O2);
    CHECK(node_s.degree() == 3);
    REQUIRE(node_s.points[0].cluster.has_value());
    CHECK(node_s.points[0].cluster->verts.size() == 1);
    CHECK(node_s.points[0].cluster->verts[0].m == 2);
    // ordinary triple point, kind S: deg 6, M2 9
    ZeroDimScheme triple = build_scheme(parse_poly("x^3 - y^3"), SchemeKind::S, O2);
    CHECK(triple.degree() == 6);
    CHECK(triple.m2() == 9);
    // A_k, kind CRIT0 has the corrected colength 2k+1 (see ledger); the
    // cluster schemes carry the Lemma 10 value
    for (int k = 1; k <= 6; ++k) {
        MultiPoly f = parse_poly("y^2 - x^" + std::to_string(k + 1));
        CHECK(build_scheme(f, SchemeKind::S, O2).degree() == (3 * k + 4) / 2);
        CHECK(build_scheme(f, SchemeKind::A, O2).degree() == (3 * k + 4) / 2);
    }
    // Z^s(cusp): deg 5, M2 6, sandwich 5 <= 6 < 10
    ZeroDimScheme zs = build_scheme(parse_poly("y^2 - x^3"), SchemeKind::S, O2);
    CHECK(zs.degree() == 5);
    CHECK(zs.m2() == 6);
    // Z^s(D4) = deg [(3*4+1)/2] = 6
    CHECK(build_scheme(parse_poly("x^2*y - y^3"), SchemeKind::S, O2).degree() == 6);
}

TEST_CASE("fat points") {
    ZeroDimScheme fat = build_fat_point(3, at(1, 2));
    CHECK(fat.degree() == 6);
    CHECK(fat.m2() == 9);
    // jets are read in local coordinates at the center
    CHECK(fat.points[0].ideal.contains_jet(parse_poly("x^3")));
    CHECK(!fat.points[0].ideal.contains_jet(parse_poly("x^2")));
}

TEST_CASE("scheme containment chains (section 1.2/1.3)") {
    for (const char* text : {"x*y", "y^2 - x^3", "y^2 - x^5", "x^2*y - y^3", "x^3 + y^4",
                             "x^4 + y^5", "x^4 + x^2*y^3 + y^5"}) {
        MultiPoly f = parse_poly(text);
        JetIdeal es = build_scheme(f, SchemeKind::ES, O2).points[0].ideal;
        JetIdeal ea = build_scheme(f, SchemeKind::EA, O2).points[0].ideal;
        JetIdeal a = build_scheme(f, SchemeKind::A, O2).points[0].ideal;
        JetIdeal a1 = build_scheme(f, SchemeKind::A1, O2).points[0].ideal;
        JetIdeal s = build_scheme(f, SchemeKind::S, O2).points[0].ideal;
        // Z^es subset Z^ea subset Z^a subset Z^a1, and Z^es subset Z^s:
        // containment of schemes reverses to containment of ideals
        CHECK_MESSAGE(ideal_contains(es, ea), text);
        CHECK_MESSAGE(ideal_contains(ea, a), text);
        CHECK_MESSAGE(ideal_contains(a, a1), text);
        CHECK_MESSAGE(ideal_contains(es, s), text);
        CHECK(es.colength() <= ea.colength());
        CHECK(ea.colength() <= a.colength());
        CHECK(a.colength() <= a1.colength());
        CHECK(es.colength() <= s.colength());
    }
}

TEST_CASE("for simple germs deg Z^a = deg Z^s") {
    for (const char* text : {"x*y", "y^2 - x^5", "x^2*y - y^3", "x^3 + y^4", "x^3 + y^5"}) {
        MultiPoly f = parse_poly(text);
        CHECK(build_scheme(f, SchemeKind::A, O2).degree() == build_scheme(f, SchemeKind::S, O2).degree());
    }
}

TEST_CASE("residue: fat point by a line through it") {
    MultiPoly line = parse_poly("y - x"); // passes through the origin
    ZeroDimScheme fat = build_fat_point(4, O2);
    ResidueResult r = residue(fat, line);
    CHECK(r.deg_on_line == 4);
    CHECK(r.quotient.degree() == 6); // fat point of multiplicity 3
    CHECK(r.quotient.points[0].ideal.contains_jet(parse_poly("x^3")));
    // a point off the line is unchanged
    ZeroDimScheme off = build_fat_point(2, at(3, 0));
    ResidueResult r2 = residue(off, line);
    CHECK(r2.deg_on_line == 0);
    CHECK(r2.quotient.degree() == 3);
    // deg(Z:L) + deg(Z cap L) = deg Z
    CHECK(r.quotient.degree() + r.deg_on_line == fat.degree());
}

TEST_CASE("residue: Z^s1(A2) : L = Z^s(A2)") {
    MultiPoly cusp = parse_poly("y^2 - x^3");
    ZeroDimScheme zs1 = build_scheme(cusp, SchemeKind::S1, O2, 7);
    ZeroDimScheme zs = build_scheme(cusp, SchemeKind::S, O2);
    // recover the line used by the S1 construction: it is the extra branch
    // of the attached cluster... the residue by any transverse line through
    // the origin of the product germ gives back Z^s
    // The S1 tree has root multiplicity 3 = mt(L*C)
    CHECK(zs1.points[0].cluster->root_mult() == 3);
    long deg1 = zs1.degree();
    CHECK(deg1 > zs.degree());
    // test the relation with the same seeded line
    Rng rng(Rng::derive(7, 0x51));
    long c = rng.range(-9, 9);
    MultiPoly line = parse_poly("y - (" + std::to_string(c) + ")*x");
    ResidueResult r = residue(zs1, line);
    CHECK(r.quotient.degree() == zs.degree());
    // same subspace: the quotient ideal equals the Z^s cluster ideal
    CHECK(ideal_contains(r.quotient.points[0].ideal, zs.points[0].ideal));
    CHECK(ideal_contains(zs.points[0].ideal, r.quotient.points[0].ideal));
    CHECK(r.deg_on_line == deg1 - zs.degree());
}

TEST_CASE("apply_automorphism") {
    // psi_m = (x, y + eps x^m) fixes fat points
    ZeroDimScheme fat = build_fat_point(3, O2);
    std::vector<MultiPoly> psi2{parse_poly("x"), parse_poly("y + 2*x^2")};
    ZeroDimScheme moved = apply_automorphism(fat, psi2);
    CHECK(moved.points[0].ideal.subspace == fat.points[0].ideal.subspace);
    // degree invariance on Z^s(cusp) under psi_1
    ZeroDimScheme zs = build_scheme(parse_poly("y^2 - x^3"), SchemeKind::S, O2);
    std::vector<MultiPoly> psi1{parse_poly("x"), parse_poly("y + x")};
    ZeroDimScheme zs2 = apply_automorphism(zs, psi1);
    CHECK(zs2.degree() == 5);
    // rotation then inverse rotation is the identity on subspaces
    std::vector<MultiPoly> rot{parse_poly("y"), parse_poly("-x")};
    std::vector<MultiPoly> rot_inv{parse_poly("-y"), parse_poly("x")};
    ZeroDimScheme back = apply_automorphism(apply_automorphism(zs, rot), rot_inv);
    CHECK(back.points[0].ideal.subspace == zs.points[0].ideal.subspace);
    std::vector<MultiPoly> bad{parse_poly("x + y"), parse_poly("x + y")};
    CHECK_THROWS_AS(apply_automorphism(zs, bad), NonInvertible);
}

TEST_CASE("sampling representatives") {
    ZeroDimScheme fat = build_fat_point(2, O2);
    ZeroDimScheme s1 = sample_representative(fat, SampleMode::ISO, 5);
    CHECK(s1.degree() == 3);
    // determinism
    ZeroDimScheme s2 = sample_representative(fat, SampleMode::ISO, 5);
    CHECK(scheme_to_json(s1) == scheme_to_json(s2));
    // DEF sample of the cusp Z^s tree: the fresh cluster has the same type
    ZeroDimScheme zs = build_scheme(parse_poly("y^2 - x^3"), SchemeKind::S, O2);
    ZeroDimScheme d = sample_representative(zs, SampleMode::DEF, 9);
    CHECK(d.degree() == 5);
    CHECK(d.points[0].cluster->signature() == zs.points[0].cluster->signature());
    // a generic element of the sampled cluster ideal resolves to the tree
    MultiPoly g = sample_ideal_element_such_that(d.points[0].ideal, 3, [&](const MultiPoly& p) {
        return p.order() == 2; // ideal elements are local germs at the center
    });
    Resolution rg = resolve(g);
    CHECK(rg.tree.essential_subtree().signature() == zs.points[0].cluster->signature());
    // ISO on schemes without cluster works, DEF does not
    ZeroDimScheme crit = build_scheme(parse_poly("x^3 + y^4"), SchemeKind::CRIT0, O2);
    CHECK_THROWS_AS(sample_representative(crit, SampleMode::DEF, 1), ModeUnsupported);
}

TEST_CASE("union") {
    ZeroDimScheme a = build_scheme(parse_poly("x*y"), SchemeKind::S, at(0, 0));
    ZeroDimScheme b = build_scheme(parse_poly("y^2 - x^3"), SchemeKind::S, at(1, 1));
    ZeroDimScheme u = scheme_union(a, b);
    CHECK(u.degree() == 8);
    CHECK_THROWS_AS(scheme_union(a, a), OverlappingSupport);
    ZeroDimScheme three = scheme_union(scheme_union(build_fat_point(1, at(0, 0)), build_fat_point(1, at(1, 0))),
                                       build_fat_point(1, at(0, 1)));
    CHECK(three.degree() == 3);
}

TEST_CASE("scheme JSON round-trip is canonical") {
    ZeroDimScheme zs = build_scheme(parse_poly("y^2 - x^3"), SchemeKind::S, at(2, -1));
    std::string j = scheme_to_json(zs);
    ZeroDimScheme back = scheme_from_json(j);
    CHECK(scheme_to_json(back) == j);
    CHECK(back.degree() == 5);
    CHECK(back.points[0].cluster->sum_m2() == 6);
}

TEST_CASE("Lemma 10 degree inequalities on mt >= 3 germs") {
    for (const char* text : {"x^2*y - y^3", "x^3 + y^4", "x^3 + y^5", "x^4 + y^5", "x^3 + y^6",
                             "x^4 + x^2*y^3 + y^5", "x^3*y - x*y^3"}) {
        MultiPoly f = parse_poly(text);
        long mu = milnor_number(f);
        long delta = delta_invariant(f);
        long mt = f.order();
        CHECK_MESSAGE(build_scheme(f, SchemeKind::S, O2).degree() <= 3 * delta, text);
        CHECK_MESSAGE(build_scheme(f, SchemeKind::A, O2).degree() <= 2 * mu, text);
        CHECK_MESSAGE(build_scheme(f, SchemeKind::CRIT0, O2).degree() <= 3 * mu - 2 * mt + 2, text);
    }
}
