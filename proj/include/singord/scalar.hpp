#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "singord/error.hpp"

namespace singord {

using Rational = mpq_class;

std::string rational_str(const Rational& q);

// Exact scalar: a rational number, or an element a + b*sqrt(d) of a real
// quadratic extension Q(sqrt(d)) with d a square-free integer > 1.
// Values with b == 0 normalize back to plain rationals, so extension
// elements whose irrational part cancels compare equal to rationals.
class ExactScalar {
public:
    ExactScalar() : a_(0), b_(0), d_(0) {}
    ExactScalar(long v) : a_(v), b_(0), d_(0) {}
    ExactScalar(const Rational& v) : a_(v), b_(0), d_(0) { a_.canonicalize(); }
    ExactScalar(Rational a, Rational b, long d);

    static ExactScalar ratio(long num, long den) { return ExactScalar(Rational(num, den)); }

    // sqrt of a nonnegative rational, adjoining sqrt(d) when r is not a square
    static ExactScalar sqrt_of(const Rational& r);

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return d_ == 0; }
    const Rational& rat_part() const { return a_; }
    const Rational& irr_part() const { return b_; }
    long radicand() const { return d_; }

    // exact rational value; throws if the value is irrational
    const Rational& as_rational() const;

    ExactScalar operator-() const;
    ExactScalar operator+(const ExactScalar& o) const;
    ExactScalar operator-(const ExactScalar& o) const;
    ExactScalar operator*(const ExactScalar& o) const;
    ExactScalar operator/(const ExactScalar& o) const;
    ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
    ExactScalar& operator-=(const ExactScalar& o) { return *this = *this - o; }
    ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }
    ExactScalar& operator/=(const ExactScalar& o) { return *this = *this / o; }

    ExactScalar inverse() const;

    bool operator==(const ExactScalar& o) const { return a_ == o.a_ && b_ == o.b_ && d_ == o.d_; }
    bool operator!=(const ExactScalar& o) const { return !(*this == o); }

    // sign of the real value (+1, 0, -1)
    int sign() const;
    bool operator<(const ExactScalar& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const ExactScalar& o) const { return (*this - o).sign() <= 0; }
    bool operator>(const ExactScalar& o) const { return (*this - o).sign() > 0; }
    bool operator>=(const ExactScalar& o) const { return (*this - o).sign() >= 0; }

    // integer part, the paper's [.] bracket
    mpz_class floor() const;

    // "p/q", "sqrt(2)", "-3/2*sqrt(5)", "1/2+3*sqrt(2)"
    std::string str() const;

private:
    void normalize();
    static long merge_radicand(const ExactScalar& x, const ExactScalar& y);

    Rational a_, b_;
    long d_; // 0 for rationals, else square-free integer > 1
};

// n = s^2 * d with d square-free; returns (s, d). n must be positive.
std::pair<mpz_class, mpz_class> squarefree_decompose(const mpz_class& n);

} // namespace singord
