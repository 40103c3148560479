#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "singord/linalg.hpp"
#include "singord/poly.hpp"
#include "singord/rng.hpp"

namespace singord {

// Finite-dimensional model of O^/m^(N+1): all monomials of total degree <= N,
// grlex ascending, with an index table.
class JetSpace {
public:
    JetSpace(int order, int nvars);

    int order() const { return order_; }
    int nvars() const { return nvars_; }
    long dim() const { return static_cast<long>(basis_.size()); }
    const std::vector<Mono>& basis() const { return basis_; }
    int index(const Mono& m) const;

    Vec jet_of(const MultiPoly& p) const; // p truncated at the jet order
    MultiPoly poly_of(const Vec& v, const VarSet& vars) const;

private:
    int order_, nvars_;
    std::vector<Mono> basis_;
    std::map<Mono, int, GrlexLess> index_;
};

// Certified finite-colength ideal in the local ring at `center`: a
// row-reduced subspace of JetSpace(jet_order) together with the smallest N0
// such that every monomial of total degree in [N0, jet_order] reduces into
// the subspace. By Nakayama this pins m^N0 inside the ideal, so the
// colength is exact and stable under raising the jet order.
struct JetIdeal {
    VarSet vars;
    std::vector<ExactScalar> center;
    int jet_order = 0;
    int certificate = 0;
    EchelonBasis subspace;

    long colength() const { return jet_dim(jet_order, vars.size()) - subspace.rank(); }
    std::vector<MultiPoly> spanning_polys() const;
    bool contains_jet(const MultiPoly& p) const;
};

int jet_ceiling(); // default 64, override with SINGORD_JET_CEILING

// smallest D such that every monomial of degree in [D, order] reduces into
// the subspace; order+1 when even the top degree fails
int monomial_certificate(const EchelonBasis& basis, const JetSpace& space);

struct CertifyOptions {
    int start_order = 4;
    int ceiling = -1; // -1: use jet_ceiling()
};

// Generic stabilization loop: `build` produces the subspace of ideal jets at
// a given order; doubles the order until the colength repeats across two
// consecutive attempts and the top two degrees of monomials reduce into the
// subspace. Throws NonFiniteColength at the ceiling.
JetIdeal certify_colength(const VarSet& vars, const std::vector<ExactScalar>& center,
                          const std::function<EchelonBasis(const JetSpace&)>& build,
                          const CertifyOptions& opts = {});

// ideal generated by `generators` as a germ at `center`
JetIdeal close_ideal(const std::vector<MultiPoly>& generators, const std::vector<ExactScalar>& center,
                     const CertifyOptions& opts = {});

long milnor_number(const MultiPoly& f, const std::vector<ExactScalar>& center);
long milnor_number(const MultiPoly& f);

JetIdeal tjurina_ideal(const MultiPoly& f, const std::vector<ExactScalar>& center);
long tjurina_number(const MultiPoly& f, const std::vector<ExactScalar>& center);
long tjurina_number(const MultiPoly& f);

enum class DerivedKind { EA, A, A1, CRIT0, CRIT };

// The derived ideals of section 1: EA = <f, f_x, f_y>; A = {g : <g,g_x,g_y>
// inside <f,f_x,f_y>}; A1 = m*A; CRIT0 = {g : g,g_x,g_y in <f_x,f_y>};
// CRIT = m*CRIT0. Membership is solved linearly inside a certified jet model
// of the reference ideal, one order above its certificate.
JetIdeal derived_ideal(const MultiPoly& f, DerivedKind kind, const std::vector<ExactScalar>& center);
JetIdeal derived_ideal(const MultiPoly& f, DerivedKind kind);

// product with the maximal ideal at the same center
JetIdeal maximal_ideal_times(const JetIdeal& ideal);

// random bounded-height combination of a spanning set; never zero
MultiPoly sample_ideal_element(const JetIdeal& ideal, std::uint64_t seed);

// resample until `good` holds (at most 100 tries, then GenericityFailure)
MultiPoly sample_ideal_element_such_that(const JetIdeal& ideal, std::uint64_t seed,
                                         const std::function<bool(const MultiPoly&)>& good);

// --------------------------------------------------------------- series

// square root of a univariate polynomial/series u of even order 2*m0,
// truncated at degree N - m0 + 1 (one guard coefficient); adjoins sqrt of
// the leading coefficient to the scalar field when needed
MultiPoly series_sqrt(const MultiPoly& u, int jet_order);

// solve h(t, y(t)) = 0 for y(t) with h_y a unit, to t-precision `prec`
std::vector<ExactScalar> implicit_series_root(const MultiPoly& h, int tvar, int yvar, int prec);

// substitute a series for one variable: p(t, y(t)) truncated at `prec`
std::vector<ExactScalar> eval_with_series(const MultiPoly& p, int tvar, int yvar,
                                          const std::vector<ExactScalar>& yseries, int prec);

} // namespace singord
