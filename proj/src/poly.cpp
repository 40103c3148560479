#include "singord/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace singord {

int VarSet::index_of(const std::string& n) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == n) return static_cast<int>(i);
    return -1;
}

MultiPoly MultiPoly::constant(const ExactScalar& c, const VarSet& vars) {
    MultiPoly p(vars);
    if (!c.is_zero()) p.terms_[Mono()] = c;
    return p;
}

MultiPoly MultiPoly::variable(int i, const VarSet& vars) {
    MultiPoly p(vars);
    Mono m;
    m.e[static_cast<std::size_t>(i)] = 1;
    p.terms_[m] = ExactScalar(1);
    return p;
}

MultiPoly MultiPoly::term(const Mono& m, const ExactScalar& c, const VarSet& vars) {
    MultiPoly p(vars);
    if (!c.is_zero()) p.terms_[m] = c;
    return p;
}

void MultiPoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

int MultiPoly::degree() const {
    return terms_.empty() ? -1 : terms_.rbegin()->first.deg();
}

int MultiPoly::order() const {
    return terms_.empty() ? -1 : terms_.begin()->first.deg();
}

int MultiPoly::degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.e[static_cast<std::size_t>(var)]));
    return terms_.empty() ? -1 : d;
}

ExactScalar MultiPoly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ExactScalar(0) : it->second;
}

void MultiPoly::set_coeff(const Mono& m, const ExactScalar& c) {
    if (c.is_zero())
        terms_.erase(m);
    else
        terms_[m] = c;
}

bool MultiPoly::rational_coeffs() const {
    for (const auto& [m, c] : terms_)
        if (!c.is_rational()) return false;
    return true;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) {
        auto it = r.terms_.find(m);
        if (it == r.terms_.end())
            r.terms_[m] = c;
        else {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r(vars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Mono m = ma * mb;
            auto it = r.terms_.find(m);
            if (it == r.terms_.end())
                r.terms_[m] = ca * cb;
            else
                it->second += ca * cb;
        }
    r.prune();
    return r;
}

MultiPoly MultiPoly::scaled(const ExactScalar& c) const {
    MultiPoly r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
    return r;
}

MultiPoly MultiPoly::pow(int k) const {
    MultiPoly r = constant(ExactScalar(1), vars_);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly r(vars_);
    auto v = static_cast<std::size_t>(var);
    for (const auto& [m, c] : terms_) {
        if (m.e[v] == 0) continue;
        Mono n = m;
        n.e[v] -= 1;
        r.terms_[n] = c * ExactScalar(static_cast<long>(m.e[v]));
    }
    return r;
}

MultiPoly MultiPoly::truncated(int jet_order) const {
    MultiPoly r(vars_);
    for (const auto& [m, c] : terms_)
        if (m.deg() <= jet_order) r.terms_[m] = c;
    return r;
}

MultiPoly MultiPoly::truncated_in(int var, int max_deg) const {
    MultiPoly r(vars_);
    for (const auto& [m, c] : terms_)
        if (m.e[static_cast<std::size_t>(var)] <= max_deg) r.terms_[m] = c;
    return r;
}

ExactScalar MultiPoly::eval(const std::vector<ExactScalar>& point) const {
    ExactScalar acc(0);
    for (const auto& [m, c] : terms_) {
        ExactScalar t = c;
        for (int i = 0; i < nvars(); ++i)
            for (int k = 0; k < m.e[static_cast<std::size_t>(i)]; ++k) t *= point[static_cast<std::size_t>(i)];
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::subst(const std::vector<MultiPoly>& images, int truncate_at) const {
    const VarSet& out_vars = images.empty() ? vars_ : images[0].vars();
    MultiPoly acc(out_vars);
    // cache powers of each image
    std::vector<std::vector<MultiPoly>> pows(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) pows[i].push_back(MultiPoly::constant(ExactScalar(1), out_vars));
    auto power = [&](std::size_t i, int k) -> const MultiPoly& {
        while (static_cast<int>(pows[i].size()) <= k) {
            MultiPoly next = pows[i].back() * images[i];
            if (truncate_at >= 0) next = next.truncated(truncate_at);
            pows[i].push_back(next);
        }
        return pows[i][static_cast<std::size_t>(k)];
    };
    for (const auto& [m, c] : terms_) {
        MultiPoly t = MultiPoly::constant(c, out_vars);
        for (std::size_t i = 0; i < images.size(); ++i)
            if (m.e[i] > 0) {
                t = t * power(i, m.e[i]);
                if (truncate_at >= 0) t = t.truncated(truncate_at);
            }
        acc += t;
    }
    if (truncate_at >= 0) acc = acc.truncated(truncate_at);
    return acc;
}

MultiPoly MultiPoly::shifted(const std::vector<ExactScalar>& center) const {
    bool all_zero = true;
    for (const auto& c : center)
        if (!c.is_zero()) all_zero = false;
    if (all_zero) return *this;
    std::vector<MultiPoly> images;
    for (int i = 0; i < nvars(); ++i)
        images.push_back(MultiPoly::variable(i, vars_) +
                         MultiPoly::constant(center[static_cast<std::size_t>(i)], vars_));
    return subst(images);
}

std::vector<ExactScalar> MultiPoly::uni_coeffs(int var) const {
    std::vector<ExactScalar> out(static_cast<std::size_t>(std::max(0, degree_in(var)) + 1), ExactScalar(0));
    for (const auto& [m, c] : terms_) {
        for (int i = 0; i < nvars(); ++i)
            if (i != var && m.e[static_cast<std::size_t>(i)] != 0)
                throw Error("uni_coeffs: polynomial is not univariate in " + vars_.name(var));
        out[m.e[static_cast<std::size_t>(var)]] = c;
    }
    if (is_zero()) out.assign(1, ExactScalar(0));
    return out;
}

MultiPoly MultiPoly::from_uni_coeffs(const std::vector<ExactScalar>& c, int var, const VarSet& vars) {
    MultiPoly p(vars);
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k].is_zero()) continue;
        Mono m;
        m.e[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(k);
        p.terms_[m] = c[k];
    }
    return p;
}

std::pair<Mono, ExactScalar> MultiPoly::leading() const {
    if (is_zero()) throw Error("leading term of zero polynomial");
    auto it = terms_.rbegin();
    return {it->first, it->second};
}

MultiPoly MultiPoly::exact_div_mono(const Mono& d) const {
    MultiPoly r(vars_);
    for (const auto& [m, c] : terms_) {
        if (!d.divides(m)) throw InvariantBreach("monomial division is not exact");
        r.terms_[Mono(m.e[0] - d.e[0], m.e[1] - d.e[1], m.e[2] - d.e[2])] = c;
    }
    return r;
}

MultiPoly MultiPoly::exact_div(const MultiPoly& d) const {
    if (d.is_zero()) throw Error("division by zero polynomial");
    MultiPoly rem = *this, quot(vars_);
    auto [dm, dc] = d.leading();
    while (!rem.is_zero()) {
        auto [rm, rc] = rem.leading();
        if (!dm.divides(rm)) throw InvariantBreach("polynomial division is not exact");
        Mono qm(rm.e[0] - dm.e[0], rm.e[1] - dm.e[1], rm.e[2] - dm.e[2]);
        ExactScalar qc = rc / dc;
        MultiPoly t = MultiPoly::term(qm, qc, vars_);
        quot += t;
        rem -= t * d;
    }
    return quot;
}

std::string MultiPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Mono& m = it->first;
        ExactScalar c = it->second;
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg && cs.find('+') == std::string::npos && cs.find("-", 1) == std::string::npos) {
            cs = cs.substr(1);
        } else if (!c.is_rational() && (cs.find('+') != std::string::npos || cs.find('-', 1) != std::string::npos)) {
            cs = "(" + cs + ")";
            neg = false;
        } else {
            neg = false;
            cs = c.str();
        }
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        std::vector<std::string> factors;
        if (m.deg() == 0 || cs != "1") factors.push_back(cs);
        for (int i = 0; i < nvars(); ++i) {
            int e = m.e[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            factors.push_back(e == 1 ? vars_.name(i) : vars_.name(i) + "^" + std::to_string(e));
        }
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) out << "*";
            out << factors[i];
        }
    }
    return out.str();
}

// ---------------------------------------------------------------- parsing

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    const VarSet& vars;

    explicit Parser(const std::string& text, const VarSet& v) : s(text), vars(v) {}

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw InputError("parse error at position " + std::to_string(pos) + ": " + what);
    }

    mpz_class integer() {
        skip();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected integer");
        return mpz_class(s.substr(start, pos - start));
    }

    std::string ident() {
        skip();
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }

    // factor := integer [/ integer] | sqrt ( integer ) | var [^ integer] | ( expr )
    MultiPoly factor() {
        skip();
        if (pos >= s.size()) fail("unexpected end");
        if (s[pos] == '(') {
            ++pos;
            MultiPoly e = expr();
            if (!eat(')')) fail("expected )");
            return maybe_power(e);
        }
        if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
            mpz_class num = integer();
            if (eat('/')) {
                mpz_class den = integer();
                if (den == 0) fail("zero denominator");
                Rational q(num, den);
                q.canonicalize();
                return MultiPoly::constant(ExactScalar(q), vars);
            }
            return MultiPoly::constant(ExactScalar(Rational(num)), vars);
        }
        std::string id = ident();
        if (id.empty()) fail("expected factor");
        if (id == "sqrt") {
            if (!eat('(')) fail("expected ( after sqrt");
            mpz_class num = integer();
            mpz_class den = 1;
            if (eat('/')) den = integer();
            if (!eat(')')) fail("expected )");
            Rational q(num, den);
            q.canonicalize();
            return MultiPoly::constant(ExactScalar::sqrt_of(q), vars);
        }
        int vi = vars.index_of(id);
        if (vi < 0) fail("unknown variable '" + id + "'");
        return maybe_power(MultiPoly::variable(vi, vars));
    }

    MultiPoly maybe_power(MultiPoly base) {
        if (eat('^')) {
            mpz_class k = integer();
            if (k < 0 || k > 4096) fail("exponent out of range");
            return base.pow(static_cast<int>(k.get_si()));
        }
        return base;
    }

    // product := factor (* factor)*
    MultiPoly product() {
        MultiPoly p = factor();
        while (true) {
            skip();
            if (eat('*')) {
                p = p * factor();
            } else {
                break;
            }
        }
        return p;
    }

    MultiPoly expr() {
        skip();
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        MultiPoly acc = product();
        if (neg) acc = -acc;
        while (true) {
            skip();
            if (eat('+'))
                acc += product();
            else if (eat('-'))
                acc -= product();
            else
                break;
        }
        return acc;
    }
};

} // namespace

MultiPoly parse_poly(const std::string& text, const VarSet& vars) {
    Parser p(text, vars);
    MultiPoly r = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

MultiPoly parse_poly(const std::string& text) {
    // infer the variable set from identifiers present
    bool has_space = text.find("x1") != std::string::npos || text.find("x2") != std::string::npos ||
                     text.find("x3") != std::string::npos;
    if (has_space) return parse_poly(text, VarSet::space());
    bool has_t = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == 't' && (i + 1 >= text.size() || !std::isalnum(static_cast<unsigned char>(text[i + 1])))) {
            // not part of "sqrt"
            if (i >= 3 && text.substr(i - 3, 4) == "sqrt") continue;
            has_t = true;
        }
    }
    bool has_xy = text.find('x') != std::string::npos || text.find('y') != std::string::npos;
    if (has_t && !has_xy) return parse_poly(text, VarSet::uni());
    return parse_poly(text, VarSet::plane());
}

// ------------------------------------------------------------- eliminant

MultiPoly eliminant(const MultiPoly& p, const MultiPoly& q, int var) {
    if (p.is_zero() || q.is_zero()) throw ZeroInput();
    int dp = p.degree_in(var), dq = q.degree_in(var);
    if (dp <= 0 || dq <= 0) throw InputError("eliminant: both inputs must have positive degree in the variable");
    const VarSet& vars = p.vars();
    // rows of the Sylvester matrix, entries are polynomials in the other vars
    auto coeff_of = [&](const MultiPoly& f, int k) {
        MultiPoly c(vars);
        for (const auto& [m, v] : f.terms()) {
            if (m.e[static_cast<std::size_t>(var)] != static_cast<std::uint16_t>(k)) continue;
            Mono n = m;
            n.e[static_cast<std::size_t>(var)] = 0;
            c.set_coeff(n, v);
        }
        return c;
    };
    int n = dp + dq;
    std::vector<std::vector<MultiPoly>> M(static_cast<std::size_t>(n),
                                          std::vector<MultiPoly>(static_cast<std::size_t>(n), MultiPoly(vars)));
    for (int r = 0; r < dq; ++r)
        for (int k = 0; k <= dp; ++k) M[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + dp - k)] = coeff_of(p, k);
    for (int r = 0; r < dp; ++r)
        for (int k = 0; k <= dq; ++k)
            M[static_cast<std::size_t>(dq + r)][static_cast<std::size_t>(r + dq - k)] = coeff_of(q, k);

    // Bareiss fraction-free elimination over the polynomial ring
    MultiPoly prev = MultiPoly::constant(ExactScalar(1), vars);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        auto kk = static_cast<std::size_t>(k);
        if (M[kk][kk].is_zero()) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (!M[static_cast<std::size_t>(r)][kk].is_zero()) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return MultiPoly(vars); // determinant is zero
            std::swap(M[kk], M[static_cast<std::size_t>(swap_row)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            auto ii = static_cast<std::size_t>(i);
            for (int j = k + 1; j < n; ++j) {
                auto jj = static_cast<std::size_t>(j);
                MultiPoly num = M[ii][jj] * M[kk][kk] - M[ii][kk] * M[kk][jj];
                M[ii][jj] = num.is_zero() ? num : num.exact_div(prev);
            }
            M[ii][kk] = MultiPoly(vars);
        }
        prev = M[kk][kk];
    }
    MultiPoly det = M[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
    return sign < 0 ? -det : det;
}

// ------------------------------------------------------------------ gcd

namespace {

// write f as dense univariate in `var` with MultiPoly coefficients
std::vector<MultiPoly> var_coeffs(const MultiPoly& f, int var) {
    int d = std::max(0, f.degree_in(var));
    std::vector<MultiPoly> out(static_cast<std::size_t>(d + 1), MultiPoly(f.vars()));
    for (const auto& [m, c] : f.terms()) {
        Mono n = m;
        int k = n.e[static_cast<std::size_t>(var)];
        n.e[static_cast<std::size_t>(var)] = 0;
        out[static_cast<std::size_t>(k)].set_coeff(n, c);
    }
    return out;
}

MultiPoly from_var_coeffs(const std::vector<MultiPoly>& c, int var, const VarSet& vars) {
    MultiPoly f(vars);
    for (std::size_t k = 0; k < c.size(); ++k) {
        Mono shift;
        shift.e[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(k);
        f += MultiPoly::term(shift, ExactScalar(1), vars) * c[k];
    }
    return f;
}

int true_deg(const std::vector<MultiPoly>& c) {
    for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k)
        if (!c[static_cast<std::size_t>(k)].is_zero()) return k;
    return -1;
}

// normalize: divide by rational content and make the grlex-leading
// coefficient positive
MultiPoly normalize_primitive(const MultiPoly& f) {
    if (f.is_zero()) return f;
    Rational content(0);
    for (const auto& [m, c] : f.terms()) {
        const Rational& q = c.as_rational();
        Rational aq = q < 0 ? Rational(-q) : q;
        if (content == 0)
            content = aq;
        else {
            // gcd of rationals: gcd of numerators / lcm of denominators
            mpz_class gn, gl;
            mpz_gcd(gn.get_mpz_t(), content.get_num_mpz_t(), aq.get_num_mpz_t());
            mpz_lcm(gl.get_mpz_t(), content.get_den_mpz_t(), aq.get_den_mpz_t());
            content = Rational(gn, gl);
            content.canonicalize();
        }
    }
    MultiPoly r = f.scaled(ExactScalar(Rational(1) / content));
    if (r.leading().second.sign() < 0) r = -r;
    return r;
}

MultiPoly gcd_impl(MultiPoly a, MultiPoly b);

MultiPoly content_of(const std::vector<MultiPoly>& coeffs) {
    MultiPoly g(coeffs.empty() ? VarSet::plane() : coeffs[0].vars());
    for (const auto& c : coeffs) g = gcd_impl(g, c);
    return g;
}

// pseudo-remainder of a by b as univariate polynomials in `var`
std::vector<MultiPoly> prem(std::vector<MultiPoly> a, const std::vector<MultiPoly>& b, const VarSet& vars) {
    int da = true_deg(a), db = true_deg(b);
    const MultiPoly& lb = b[static_cast<std::size_t>(db)];
    while (da >= db) {
        MultiPoly la = a[static_cast<std::size_t>(da)];
        // a = a*lb - la * x^(da-db) * b
        for (auto& c : a) c = c * lb;
        for (int k = 0; k <= db; ++k) {
            auto idx = static_cast<std::size_t>(da - db + k);
            a[idx] -= la * b[static_cast<std::size_t>(k)];
        }
        a[static_cast<std::size_t>(da)] = MultiPoly(vars);
        int nda = true_deg(a);
        if (nda == da) throw InvariantBreach("prem did not reduce degree");
        da = nda;
    }
    a.resize(static_cast<std::size_t>(std::max(0, da) + 1), MultiPoly(vars));
    return a;
}

MultiPoly gcd_impl(MultiPoly a, MultiPoly b) {
    if (a.is_zero()) return b.is_zero() ? b : normalize_primitive(b);
    if (b.is_zero()) return normalize_primitive(a);
    if (!a.rational_coeffs() || !b.rational_coeffs())
        throw Error("poly_gcd supports rational coefficients only");
    if (a.degree() == 0 || b.degree() == 0) return MultiPoly::constant(ExactScalar(1), a.vars());
    // main variable: first index used by either
    int var = -1;
    for (int i = 0; i < a.nvars() && var < 0; ++i)
        if (a.degree_in(i) > 0 || b.degree_in(i) > 0) var = i;
    if (a.degree_in(var) == 0 || b.degree_in(var) == 0) {
        // one side is free of the main variable: gcd divides its content
        const MultiPoly& flat = a.degree_in(var) == 0 ? a : b;
        const MultiPoly& other = a.degree_in(var) == 0 ? b : a;
        return gcd_impl(flat, content_of(var_coeffs(other, var)));
    }
    auto ca = content_of(var_coeffs(a, var));
    auto cb = content_of(var_coeffs(b, var));
    MultiPoly pa = a.exact_div(ca), pb = b.exact_div(cb);
    std::vector<MultiPoly> u = var_coeffs(pa, var), v = var_coeffs(pb, var);
    if (true_deg(u) < true_deg(v)) std::swap(u, v);
    while (true) {
        std::vector<MultiPoly> r = prem(u, v, a.vars());
        if (true_deg(r) < 0) break;
        MultiPoly pr = from_var_coeffs(r, var, a.vars());
        pr = pr.exact_div(content_of(var_coeffs(pr, var)));
        u = v;
        v = var_coeffs(normalize_primitive(pr), var);
    }
    MultiPoly g = from_var_coeffs(v, var, a.vars());
    return normalize_primitive(g * gcd_impl(ca, cb));
}

} // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) { return gcd_impl(a, b); }

MultiPoly squarefree_part(const MultiPoly& p, int var) {
    if (p.is_zero()) return p;
    MultiPoly g = poly_gcd(p, p.derivative(var));
    if (g.degree() == 0) return normalize_primitive(p);
    return normalize_primitive(p.exact_div(g));
}

bool is_reduced_germ(const MultiPoly& f, const std::vector<ExactScalar>& center) {
    if (f.is_zero()) return false;
    MultiPoly g = poly_gcd(f, poly_gcd(f.derivative(0), f.derivative(1)));
    return !g.eval(center).is_zero();
}

// ------------------------------------------------------- monomial tables

std::vector<Mono> monomials_of_degree(int d, int nvars) {
    std::vector<Mono> out;
    if (nvars == 1) {
        out.emplace_back(d, 0, 0);
    } else if (nvars == 2) {
        for (int i = 0; i <= d; ++i) out.emplace_back(i, d - i, 0);
    } else {
        for (int i = 0; i <= d; ++i)
            for (int j = 0; i + j <= d; ++j) out.emplace_back(i, j, d - i - j);
    }
    std::sort(out.begin(), out.end(), [](const Mono& a, const Mono& b) { return GrlexLess()(a, b); });
    return out;
}

std::vector<Mono> monomials_up_to(int d, int nvars) {
    std::vector<Mono> out;
    for (int k = 0; k <= d; ++k) {
        auto level = monomials_of_degree(k, nvars);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

long jet_dim(int jet_order, int nvars) {
    long n = jet_order;
    if (nvars == 1) return n + 1;
    if (nvars == 2) return (n + 1) * (n + 2) / 2;
    return (n + 1) * (n + 2) * (n + 3) / 6;
}

} // namespace singord
