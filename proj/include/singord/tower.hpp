#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "singord/scalar.hpp"

namespace singord {

// Dynamic-evaluation number fields ("D5"): a level is Q[theta]/(q) over a
// base level, with q square-free but not necessarily irreducible. Whenever
// an inversion or zero test meets a zero divisor, a TowerSplit escapes with
// a proper factor of the modulus; the owner of that level re-runs the
// computation in both factor rings. Every branch decision made through
// checked operations is therefore uniform over each surviving modulus.
struct TowerLevel;
using TowerPtr = std::shared_ptr<const TowerLevel>;

class TElem {
public:
    TElem() : rat_(0) {}
    TElem(long v) : rat_(v) {}
    TElem(const Rational& r) : rat_(r) {}
    TElem(TowerPtr level, std::vector<TElem> coeffs);

    bool in_base_field() const { return level_ == nullptr; }
    const TowerPtr& level() const { return level_; }
    const Rational& rat() const { return rat_; }
    const std::vector<TElem>& coeffs() const { return coeffs_; }

    // raw structural zero test (element kept reduced mod modulus)
    bool raw_zero() const;

    TElem operator-() const;
    TElem operator+(const TElem& o) const;
    TElem operator-(const TElem& o) const;
    TElem operator*(const TElem& o) const;
    TElem& operator+=(const TElem& o) { return *this = *this + o; }
    TElem& operator-=(const TElem& o) { return *this = *this - o; }
    TElem& operator*=(const TElem& o) { return *this = *this * o; }
    bool operator==(const TElem& o) const { return (*this - o).raw_zero(); }

    // inversion; throws TowerSplit on zero divisors
    TElem inverse() const;
    TElem operator/(const TElem& o) const { return *this * o.inverse(); }

    // lift into a (possibly deeper) field whose chain contains this one
    TElem lifted_to(const TowerPtr& target) const;

    // rational coordinates in the product basis of the tower
    void flatten(std::vector<Rational>& out) const;

    std::string str() const;

private:
    TowerPtr level_;            // nullptr: plain rational
    Rational rat_;              // valid when level_ == nullptr
    std::vector<TElem> coeffs_; // dense, deg < level_->degree(), over level_->base
};

struct TowerLevel {
    TowerPtr base;               // nullptr = Q
    std::vector<TElem> modulus;  // monic, coefficients in `base`, degree >= 2
    int var_tag;                 // for printing: theta_<tag>

    int degree() const { return static_cast<int>(modulus.size()) - 1; }
    long total_degree() const { return (base ? base->total_degree() : 1) * degree(); }
    int depth() const { return base ? base->depth() + 1 : 1; }
    bool chain_contains(const TowerLevel* other) const;
};

// escape carrying a proper monic factor of `level`'s modulus
struct TowerSplit {
    const TowerLevel* level;
    std::vector<TElem> factor;
};

TowerPtr make_level(TowerPtr base, std::vector<TElem> modulus);

// checked zero test: certifies the element is zero or a unit first
bool checked_zero(const TElem& e);

// --------------------------------------------------- dense polys over TElem

using TPoly1 = std::vector<TElem>; // dense univariate, index = exponent

int tp1_degree(const TPoly1& p);                 // checked; -1 for zero
TPoly1 tp1_trim(TPoly1 p);
TPoly1 tp1_add(const TPoly1& a, const TPoly1& b);
TPoly1 tp1_mul(const TPoly1& a, const TPoly1& b);
TPoly1 tp1_derivative(const TPoly1& a);
TPoly1 tp1_monic(const TPoly1& a);               // may split
// euclidean division by a monic divisor
std::pair<TPoly1, TPoly1> tp1_divmod(const TPoly1& a, const TPoly1& monic_b);
TPoly1 tp1_gcd(const TPoly1& a, const TPoly1& b); // monic gcd, may split
TElem tp1_eval(const TPoly1& a, const TElem& x);
// square-free decomposition (Yun): list of (factor, multiplicity)
std::vector<std::pair<TPoly1, int>> tp1_squarefree(const TPoly1& a);

// bivariate germs over a tower field
class TPoly2 {
public:
    TPoly2() = default;

    bool is_zero() const { return t_.empty(); }
    int order() const; // min total degree, -1 when zero
    const std::map<std::pair<int, int>, TElem>& terms() const { return t_; }
    void set(int i, int j, const TElem& c);
    TElem coeff(int i, int j) const;

    TPoly2 operator+(const TPoly2& o) const;
    TPoly2 operator*(const TPoly2& o) const;
    TPoly2 scaled(const TElem& c) const;

    // tangent cone as a univariate polynomial tc(1, t) plus the multiplicity
    // of the direction u = 0 (the [0:1] corner)
    std::pair<TPoly1, int> tangent_cone_poly() const;

    // substitution (u,v) -> (s, s*(t+r)) followed by exact division by s^m
    TPoly2 blowup_translate(const TElem& r, int m) const;
    // substitution (u,v) -> (s*t, t) followed by exact division by t^m
    TPoly2 blowup_corner(int m) const;

    // order of the restriction to the axis u = 0 (contact with that axis)
    int contact_with_u_axis() const;

    std::string str() const;

private:
    std::map<std::pair<int, int>, TElem> t_;
};

// rational coordinate dimension of a field chain
long tower_dimension(const TowerPtr& level);

} // namespace singord
