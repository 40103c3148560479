#include "doctest.h"

#include "singord/jet.hpp"

using namespace singord;

namespace {

const std::vector<ExactScalar> O2{ExactScalar(0), ExactScalar(0)};

// Independent oracle: dim O^/(gens) computed by one dense elimination at a
// FIXED jet order, no certificates, no echelon incrementality. Valid when
// the fixed order is visibly beyond the ideal's top quotient degree.
long brute_force_colength(const std::vector<MultiPoly>& gens, int N) {
    const VarSet& vars = gens[0].vars();
    auto basis = monomials_up_to(N, vars.size());
    std::map<Mono, int, GrlexLess> idx;
    for (std::size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = static_cast<int>(i);
    std::vector<std::vector<ExactScalar>> rows;
    for (const auto& g : gens)
        for (const auto& m : basis) {
            MultiPoly p = (MultiPoly::term(m, ExactScalar(1), vars) * g).truncated(N);
            if (p.is_zero()) continue;
            std::vector<ExactScalar> row(basis.size(), ExactScalar(0));
            for (const auto& [mm, c] : p.terms()) row[static_cast<std::size_t>(idx.at(mm))] = c;
            rows.push_back(std::move(row));
        }
    // plain gaussian elimination
    std::size_t rank = 0;
    for (std::size_t col = 0; col < basis.size() && rank < rows.size(); ++col) {
        std::size_t sel = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r)
            if (!rows[r][col].is_zero()) {
                sel = r;
                break;
            }
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            ExactScalar f = rows[r][col] / rows[rank][col];
            for (std::size_t j = col; j < basis.size(); ++j) rows[r][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return static_cast<long>(basis.size()) - static_cast<long>(rank);
}

MultiPoly ak(int k) { return parse_poly("x^" + std::to_string(k + 1) + " + y^2"); }
MultiPoly dk(int k) { return parse_poly("x^2*y + y^" + std::to_string(k - 1)); }

} // namespace

TEST_CASE("close_ideal basics") {
    CHECK(close_ideal({parse_poly("x"), parse_poly("y")}, O2).colength() == 1);
    CHECK(close_ideal({parse_poly("x^2"), parse_poly("y^2")}, O2).colength() == 4);
    // Jacobian ideal of the cusp x^3 + y^2
    CHECK(close_ideal({parse_poly("3*x^2"), parse_poly("2*y")}, O2).colength() == 2);
    CHECK_THROWS_AS(close_ideal({MultiPoly(VarSet::plane())}, O2), InputError);
    // non-isolated: f = x^2 has Jacobian <x>, infinite colength
    CertifyOptions small;
    small.ceiling = 16;
    CHECK_THROWS_AS(close_ideal({parse_poly("x")}, O2, small), NonFiniteColength);
}

TEST_CASE("certification stability: colength unchanged two orders above") {
    for (const char* text : {"x^3 + y^2", "x^2*y + y^3", "x^3 + y^4", "x^4 + x^2*y^3 + y^5"}) {
        MultiPoly f = parse_poly(text);
        std::vector<MultiPoly> jac{f.derivative(0), f.derivative(1)};
        JetIdeal ideal = close_ideal(jac, O2);
        long again = brute_force_colength(jac, ideal.jet_order + 2);
        CHECK(ideal.colength() == again);
    }
}

TEST_CASE("milnor numbers of ADE normal forms, k <= 12") {
    for (int k = 1; k <= 12; ++k) CHECK(milnor_number(ak(k)) == k);
    for (int k = 4; k <= 12; ++k) CHECK(milnor_number(dk(k)) == k);
    CHECK(milnor_number(parse_poly("x^3 + y^4")) == 6);
    CHECK(milnor_number(parse_poly("x^3 + x*y^3")) == 7);
    CHECK(milnor_number(parse_poly("x^3 + y^5")) == 8);
}

TEST_CASE("milnor: hand-derived D4 and E6 values") {
    // D4 = x^2 y - y^3: Jacobian <2xy, x^2 - 3y^2>; reducing by hand leaves
    // the monomial basis {1, x, y, y^2}
    MultiPoly d4 = parse_poly("x^2*y - y^3");
    CHECK(milnor_number(d4) == 4);
    CHECK(brute_force_colength({d4.derivative(0), d4.derivative(1)}, 8) == 4);
    // E6 = x^3 + y^4: complement of <3x^2, 4y^3> is {1,x,y,xy,y^2,xy^2}
    MultiPoly e6 = parse_poly("x^3 + y^4");
    CHECK(brute_force_colength({e6.derivative(0), e6.derivative(1)}, 8) == 6);
}

TEST_CASE("milnor in three variables") {
    CHECK(milnor_number(parse_poly("x1^3 + x2^2 + x3^2")) == 2);
    CHECK(milnor_number(parse_poly("x1^4 + x2^2 + x3^2")) == 3);
    CHECK(milnor_number(parse_poly("x1^2 + x2^2 + x3^2")) == 1);
}

TEST_CASE("tjurina: quasi-homogeneous germs have tau = mu") {
    CHECK(tjurina_number(parse_poly("x^3 + y^2")) == 2);
    for (int k = 1; k <= 8; ++k) CHECK(tjurina_number(ak(k)) == k);
    CHECK(tjurina_number(parse_poly("x^3 + y^4")) == 6);
    // out of quasi-homogeneous range: tau <= mu, both via independent ranks
    MultiPoly f = parse_poly("x^4 + y^5 + x^2*y^3");
    long tau = tjurina_number(f);
    long mu = milnor_number(f);
    CHECK(tau <= mu);
    CHECK(mu == 12);
    CHECK(brute_force_colength({f, f.derivative(0), f.derivative(1)}, 12) == tau);
}

TEST_CASE("derived ideals: CRIT0 examples") {
    // f = x^2 + y^2: I0 = m^2, quotient basis {1, x, y}
    JetIdeal i0 = derived_ideal(parse_poly("x^2 + y^2"), DerivedKind::CRIT0);
    CHECK(i0.colength() == 3);
    // For A_k the quotient of I0 restricted to {y = 0} is cut out by the
    // 2k+1 conditions ord g, ord g_x, ord g_y >= k along the x-axis, so
    // colength I0(A_k) = 2k+1; cross-checked against the fixed-order oracle.
    for (int k = 1; k <= 8; ++k) {
        long got = derived_ideal(ak(k), DerivedKind::CRIT0).colength();
        CHECK(got == 2 * k + 1);
    }
    MultiPoly f3 = ak(3);
    // quotient basis of I0(A_3) is {1,x,x^2,x^3,y,xy,x^2y}: 7 monomials
    JetIdeal i3 = derived_ideal(f3, DerivedKind::CRIT0);
    CHECK(i3.colength() == 7);
    CHECK(!i3.contains_jet(parse_poly("x^2*y")));
    CHECK(i3.contains_jet(parse_poly("y^2")));
    CHECK(i3.contains_jet(parse_poly("x^4")));
}

TEST_CASE("derived ideals: A-chain colengths") {
    for (int k = 1; k <= 5; ++k) {
        MultiPoly f = ak(k);
        long ea = derived_ideal(f, DerivedKind::EA).colength();
        long a = derived_ideal(f, DerivedKind::A).colength();
        long a1 = derived_ideal(f, DerivedKind::A1).colength();
        CHECK(ea <= a);
        CHECK(a <= a1);
        // colength(m*I) - colength(I) = dim I/mI = #minimal generators,
        // which is 3 for I^a of an A_k normal form (y^2, x^{k+1}, x^k y)
        CHECK(a1 == a + 3);
    }
    CHECK_THROWS_AS(derived_ideal(parse_poly("x^2*y^2"), DerivedKind::A), NotReduced);
}

TEST_CASE("sample_ideal_element membership and determinism") {
    JetIdeal m = close_ideal({parse_poly("x"), parse_poly("y")}, O2);
    MultiPoly s = sample_ideal_element(m, 7);
    CHECK(s.eval(O2).is_zero());
    CHECK(sample_ideal_element(m, 7) == s);
    MultiPoly s2 = sample_ideal_element(m, 8);
    CHECK(m.contains_jet(s - s2));
    // Tjurina ideal of the cusp: every element has multiplicity >= 2 wait --
    // <f, f_x, f_y> = <x^2, y>, order >= 1; the derived A ideal keeps mt >= 2
    JetIdeal tj = tjurina_ideal(parse_poly("y^2 - x^3"), O2);
    MultiPoly g = sample_ideal_element(tj, 3);
    CHECK(g.order() >= 1);
    CHECK(tj.contains_jet(g));
}

TEST_CASE("Lemma 11(2) spot check: f + t*g keeps mu and mt for g in I(f)") {
    for (const char* text : {"y^2 - x^3", "x^3 + y^4"}) {
        MultiPoly f = parse_poly(text);
        JetIdeal crit = derived_ideal(f, DerivedKind::CRIT);
        long mu = milnor_number(f);
        int mt = f.order();
        for (int s = 0; s < 2; ++s) {
            MultiPoly g = sample_ideal_element(crit, static_cast<std::uint64_t>(s + 1)).truncated(crit.jet_order);
            for (const ExactScalar& t :
                 {ExactScalar(1), ExactScalar(-1), ExactScalar(Rational(1, 2))}) {
                MultiPoly moved = f + g.scaled(t);
                CHECK(milnor_number(moved) == mu);
                CHECK(moved.order() == mt);
            }
        }
    }
}

TEST_CASE("implicit series root solves h(t, y(t)) = 0") {
    // h = y - t^2 - t*y: y(t) = t^2/(1-t) = t^2 + t^3 + t^4 + ...
    MultiPoly h = parse_poly("y - x^2 - x*y"); // x plays the role of t
    auto y = implicit_series_root(h, 0, 1, 6);
    CHECK(y[2] == ExactScalar(1));
    CHECK(y[3] == ExactScalar(1));
    CHECK(y[6] == ExactScalar(1));
    CHECK(y[0].is_zero());
    CHECK(y[1].is_zero());
}
