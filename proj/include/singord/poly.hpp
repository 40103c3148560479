#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "singord/scalar.hpp"

namespace singord {

// Monomial exponent vector; unused variable slots stay zero.
struct Mono {
    std::array<std::uint16_t, 3> e{0, 0, 0};

    Mono() = default;
    Mono(int a, int b, int c = 0) {
        e[0] = static_cast<std::uint16_t>(a);
        e[1] = static_cast<std::uint16_t>(b);
        e[2] = static_cast<std::uint16_t>(c);
    }
    int deg() const { return e[0] + e[1] + e[2]; }
    Mono operator*(const Mono& o) const {
        return Mono(e[0] + o.e[0], e[1] + o.e[1], e[2] + o.e[2]);
    }
    bool divides(const Mono& o) const {
        return e[0] <= o.e[0] && e[1] <= o.e[1] && e[2] <= o.e[2];
    }
    bool operator==(const Mono& o) const { return e == o.e; }
};

// graded lexicographic, x > y > z for the declared variable order
struct GrlexLess {
    bool operator()(const Mono& a, const Mono& b) const {
        if (a.deg() != b.deg()) return a.deg() < b.deg();
        // within a degree, lexicographically larger first coordinates are "bigger"
        for (int i = 0; i < 3; ++i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
        return false;
    }
};

// Declared variable list: {"x","y"}, {"x1","x2","x3"}, or a single series variable.
class VarSet {
public:
    VarSet() = default;
    explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {}
    static VarSet plane() { return VarSet({"x", "y"}); }
    static VarSet space() { return VarSet({"x1", "x2", "x3"}); }
    static VarSet uni(const std::string& name = "t") { return VarSet({name}); }

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
    int index_of(const std::string& n) const;
    bool operator==(const VarSet& o) const { return names_ == o.names_; }
    bool operator!=(const VarSet& o) const { return !(*this == o); }

private:
    std::vector<std::string> names_;
};

// Sparse multivariate polynomial over ExactScalar in at most 3 variables.
// Doubles as a truncated power series: jet truncation is the finiteness
// device everywhere, there is no lazy series type.
class MultiPoly {
public:
    MultiPoly() : vars_(VarSet::plane()) {}
    explicit MultiPoly(VarSet vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(const ExactScalar& c, const VarSet& vars);
    static MultiPoly variable(int i, const VarSet& vars);
    static MultiPoly term(const Mono& m, const ExactScalar& c, const VarSet& vars);

    const VarSet& vars() const { return vars_; }
    int nvars() const { return vars_.size(); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Mono, ExactScalar, GrlexLess>& terms() const { return terms_; }

    int degree() const;          // -1 for the zero polynomial
    int order() const;           // minimal total degree of a term; -1 for zero
    int degree_in(int var) const;
    ExactScalar coeff(const Mono& m) const;
    void set_coeff(const Mono& m, const ExactScalar& c);
    bool rational_coeffs() const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly scaled(const ExactScalar& c) const;
    MultiPoly pow(int k) const;

    MultiPoly derivative(int var) const;
    MultiPoly truncated(int jet_order) const;   // drop terms of total degree > N
    MultiPoly truncated_in(int var, int max_deg) const;
    ExactScalar eval(const std::vector<ExactScalar>& point) const;
    // full substitution: variable i is replaced by images[i]
    MultiPoly subst(const std::vector<MultiPoly>& images, int truncate_at = -1) const;
    // germ read at `center`: returns f(x + center)
    MultiPoly shifted(const std::vector<ExactScalar>& center) const;

    // dense coefficients as a univariate polynomial in `var`; other
    // variables must not occur
    std::vector<ExactScalar> uni_coeffs(int var) const;
    static MultiPoly from_uni_coeffs(const std::vector<ExactScalar>& c, int var, const VarSet& vars);

    // leading term in grlex
    std::pair<Mono, ExactScalar> leading() const;
    // exact division; throws InvariantBreach if not divisible
    MultiPoly exact_div(const MultiPoly& d) const;
    MultiPoly exact_div_mono(const Mono& m) const;

    bool operator==(const MultiPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

    std::string str() const;

private:
    void prune();
    VarSet vars_;
    std::map<Mono, ExactScalar, GrlexLess> terms_;
};

// shared text grammar: `3/2*x^2*y - y^3 + x`, `sqrt(2)*x1*x3^2 - 1/2`
MultiPoly parse_poly(const std::string& text, const VarSet& vars);
MultiPoly parse_poly(const std::string& text); // variable set inferred

// resultant of p and q with respect to `var`, exact Sylvester determinant
MultiPoly eliminant(const MultiPoly& p, const MultiPoly& q, int var);

// multivariate gcd (primitive PRS), rational coefficients only; result is
// primitive with positive leading coefficient
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

// square-free part of a univariate polynomial over Q
MultiPoly squarefree_part(const MultiPoly& p, int var);

// true when the germ of f at `center` is reduced (no repeated local factor):
// gcd(f, f_x, f_y) is a unit germ there
bool is_reduced_germ(const MultiPoly& f, const std::vector<ExactScalar>& center);

// all monomials of total degree exactly d / at most d, grlex ascending
std::vector<Mono> monomials_of_degree(int d, int nvars);
std::vector<Mono> monomials_up_to(int d, int nvars);
long jet_dim(int jet_order, int nvars); // binom(N + n, n)

} // namespace singord
