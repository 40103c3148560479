#include "singord/scalar.hpp"

namespace singord {

std::string rational_str(const Rational& q) {
    return q.get_str();
}

ExactScalar::ExactScalar(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    a_.canonicalize();
    b_.canonicalize();
    normalize();
}

void ExactScalar::normalize() {
    if (b_ == 0) {
        d_ = 0;
        return;
    }
    if (d_ == 0 || d_ == 1) {
        // sqrt(0) and sqrt(1) are rational
        a_ += b_ * (d_ == 1 ? 1 : 0);
        b_ = 0;
        d_ = 0;
    }
}

std::pair<mpz_class, mpz_class> squarefree_decompose(const mpz_class& n) {
    if (n <= 0) throw Error("squarefree_decompose requires a positive integer");
    mpz_class rem = n, s = 1, d = 1;
    for (mpz_class p = 2; p * p * p <= rem && p < 1000000; ++p) {
        if (rem % p != 0) continue;
        int e = 0;
        while (rem % p == 0) {
            rem /= p;
            ++e;
        }
        for (int i = 0; i + 1 < e; i += 2) s *= p;
        if (e % 2 == 1) d *= p;
    }
    // rem now has no prime factor below min(cbrt, 1e6): it is p, p^2 or p*q
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), rem.get_mpz_t());
    if (root * root == rem) {
        s *= root;
    } else {
        d *= rem;
    }
    return {s, d};
}

ExactScalar ExactScalar::sqrt_of(const Rational& r) {
    if (r < 0) throw Error("sqrt of a negative rational is not supported");
    if (r == 0) return ExactScalar(0);
    // sqrt(p/q) = sqrt(p*q)/q
    mpz_class pq = r.get_num() * r.get_den();
    auto [s, d] = squarefree_decompose(pq);
    Rational coef(s, r.get_den());
    coef.canonicalize();
    if (d == 1) return ExactScalar(coef);
    if (!d.fits_slong_p()) throw Error("radicand too large for quadratic extension bookkeeping");
    return ExactScalar(Rational(0), coef, d.get_si());
}

const Rational& ExactScalar::as_rational() const {
    if (!is_rational()) throw Error("value " + str() + " is irrational");
    return a_;
}

long ExactScalar::merge_radicand(const ExactScalar& x, const ExactScalar& y) {
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
    throw ExtensionDepth("cannot mix sqrt(" + std::to_string(x.d_) + ") and sqrt(" + std::to_string(y.d_) + ")");
}

ExactScalar ExactScalar::operator-() const {
    ExactScalar r;
    r.a_ = -a_;
    r.b_ = -b_;
    r.d_ = d_;
    return r;
}

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
    long d = merge_radicand(*this, o);
    return ExactScalar(a_ + o.a_, b_ + o.b_, d);
}

ExactScalar ExactScalar::operator-(const ExactScalar& o) const {
    long d = merge_radicand(*this, o);
    return ExactScalar(a_ - o.a_, b_ - o.b_, d);
}

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
    if (d_ != 0 && o.d_ != 0 && d_ != o.d_) {
        // products of pure square roots stay quadratic: b1 sqrt(d1) * b2
        // sqrt(d2) = b1 b2 sqrt(d1 d2)
        if (a_ == 0 && o.a_ == 0) {
            ExactScalar root = sqrt_of(Rational(mpz_class(d_) * mpz_class(o.d_)));
            return root * ExactScalar(b_ * o.b_);
        }
        (void)merge_radicand(*this, o); // raises ExtensionDepth
    }
    long d = merge_radicand(*this, o);
    // (a1 + b1 s)(a2 + b2 s) = a1 a2 + b1 b2 d + (a1 b2 + a2 b1) s
    return ExactScalar(a_ * o.a_ + b_ * o.b_ * d, a_ * o.b_ + o.a_ * b_, d);
}

ExactScalar ExactScalar::inverse() const {
    if (is_zero()) throw Error("division by zero");
    if (is_rational()) return ExactScalar(Rational(1) / a_);
    // 1/(a + b s) = (a - b s)/(a^2 - b^2 d); the norm is nonzero since
    // sqrt(d) is irrational
    Rational norm = a_ * a_ - b_ * b_ * d_;
    return ExactScalar(a_ / norm, -b_ / norm, d_);
}

ExactScalar ExactScalar::operator/(const ExactScalar& o) const {
    return *this * o.inverse();
}

int ExactScalar::sign() const {
    if (b_ == 0) return sgn(a_);
    if (a_ == 0) return sgn(b_);
    int sa = sgn(a_), sb = sgn(b_);
    if (sa == sb) return sa;
    // opposite signs: compare a^2 against b^2 d
    Rational lhs = a_ * a_, rhs = b_ * b_ * d_;
    if (lhs == rhs) return 0; // cannot happen for square-free d>1, kept for safety
    return lhs > rhs ? sa : sb;
}

mpz_class ExactScalar::floor() const {
    if (is_rational()) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a_.get_num_mpz_t(), a_.get_den_mpz_t());
        return q;
    }
    // bracket b*sqrt(d) between consecutive integers, then adjust
    // floor(a + b sqrt(d)): binary-search-free approach via integer sqrt
    // of (b^2 d) scaled by denominators.
    // Start from a coarse estimate and fix up exactly.
    Rational babs = b_ > 0 ? b_ : -b_;
    mpz_class num2 = babs.get_num() * babs.get_num() * d_;
    mpz_class den2 = babs.get_den() * babs.get_den();
    mpz_class q2 = num2 / den2;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), q2.get_mpz_t());
    // |b| sqrt(d) is within [root, root+2]
    mpz_class est;
    {
        mpz_class fa;
        mpz_fdiv_q(fa.get_mpz_t(), a_.get_num_mpz_t(), a_.get_den_mpz_t());
        est = fa + (b_ > 0 ? root : -(root + 2)) - 2;
    }
    while (ExactScalar(Rational(est + 1)) <= *this) ++est;
    return est;
}

std::string ExactScalar::str() const {
    if (is_rational()) return rational_str(a_);
    std::string root = "sqrt(" + std::to_string(d_) + ")";
    std::string irr;
    if (b_ == 1)
        irr = root;
    else if (b_ == -1)
        irr = "-" + root;
    else
        irr = rational_str(b_) + "*" + root;
    if (a_ == 0) return irr;
    if (b_ > 0) return rational_str(a_) + "+" + irr;
    return rational_str(a_) + irr;
}

} // namespace singord
