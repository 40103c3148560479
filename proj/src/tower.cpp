#include "singord/tower.hpp"

#include <atomic>
#include <sstream>

namespace singord {

namespace {
std::atomic<int> tower_tag_counter{0};

// promote e into `target` (target's chain must contain e's level)
TElem promote(const TElem& e, const TowerPtr& target) {
    if (!target) {
        if (!e.in_base_field()) throw InvariantBreach("cannot demote a tower element to Q");
        return e;
    }
    if (e.level().get() == target.get()) return e;
    std::vector<TElem> c(static_cast<std::size_t>(target->degree()));
    c[0] = promote(e, target->base);
    for (std::size_t i = 1; i < c.size(); ++i) c[i] = promote(TElem(0), target->base);
    return TElem(target, std::move(c));
}

// align two elements to a common level (the deeper of the two chains)
void align(TElem& a, TElem& b) {
    if (a.level().get() == b.level().get()) return;
    if (!a.level()) {
        a = promote(a, b.level());
        return;
    }
    if (!b.level()) {
        b = promote(b, a.level());
        return;
    }
    if (a.level()->chain_contains(b.level().get())) {
        b = promote(b, a.level());
    } else if (b.level()->chain_contains(a.level().get())) {
        a = promote(a, b.level());
    } else {
        throw InvariantBreach("tower elements from incompatible chains");
    }
}

} // namespace

bool TowerLevel::chain_contains(const TowerLevel* other) const {
    if (this == other) return true;
    return base ? base->chain_contains(other) : other == nullptr;
}

TowerPtr make_level(TowerPtr base, std::vector<TElem> modulus) {
    // normalize to a monic modulus
    int d = tp1_degree(modulus);
    if (d < 2) throw InvariantBreach("tower modulus must have degree >= 2");
    modulus = tp1_monic(tp1_trim(std::move(modulus)));
    auto lvl = std::make_shared<TowerLevel>();
    lvl->base = std::move(base);
    lvl->modulus = std::move(modulus);
    lvl->var_tag = ++tower_tag_counter;
    return lvl;
}

TElem::TElem(TowerPtr level, std::vector<TElem> coeffs) : level_(std::move(level)) {
    auto deg = static_cast<std::size_t>(level_->degree());
    // reduce mod modulus if needed
    if (coeffs.size() > deg) {
        TPoly1 rem = tp1_divmod(tp1_trim(std::move(coeffs)), level_->modulus).second;
        coeffs = std::move(rem);
    }
    coeffs.resize(deg, TElem(0));
    for (auto& c : coeffs) c = promote(c, level_->base);
    coeffs_ = std::move(coeffs);
}

bool TElem::raw_zero() const {
    if (!level_) return rat_ == 0;
    for (const auto& c : coeffs_)
        if (!c.raw_zero()) return false;
    return true;
}

TElem TElem::operator-() const {
    if (!level_) return TElem(Rational(-rat_));
    std::vector<TElem> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(-x);
    return TElem(level_, std::move(c));
}

TElem TElem::operator+(const TElem& o) const {
    TElem a = *this, b = o;
    align(a, b);
    if (!a.level_) return TElem(Rational(a.rat_ + b.rat_));
    std::vector<TElem> c(a.coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
    return TElem(a.level_, std::move(c));
}

TElem TElem::operator-(const TElem& o) const { return *this + (-o); }

TElem TElem::operator*(const TElem& o) const {
    TElem a = *this, b = o;
    align(a, b);
    if (!a.level_) return TElem(Rational(a.rat_ * b.rat_));
    std::vector<TElem> prod(a.coeffs_.size() * 2, TElem(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].raw_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].raw_zero()) continue;
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return TElem(a.level_, std::move(prod));
}

TElem TElem::inverse() const {
    if (!level_) {
        if (rat_ == 0) throw Error("tower: division by zero");
        return TElem(Rational(1 / rat_));
    }
    // extended euclid against the modulus, over the base field; maintains
    // s_i * this == r_i (mod modulus)
    TPoly1 r0 = level_->modulus, r1 = tp1_trim(coeffs_);
    if (tp1_degree(r1) < 0) throw Error("tower: division by zero");
    TPoly1 s0{TElem(0)}, s1{TElem(1)};
    while (true) {
        int d1 = tp1_degree(r1);
        if (d1 < 0) {
            // gcd = r0 is a proper factor of the modulus: zero divisor
            throw TowerSplit{level_.get(), tp1_monic(r0)};
        }
        if (d1 == 0) {
            TElem inv = r1[0].inverse();
            std::vector<TElem> out;
            for (auto& c : s1) out.push_back(c * inv);
            return TElem(level_, std::move(out));
        }
        TElem lc_inv = r1[static_cast<std::size_t>(d1)].inverse();
        TPoly1 r1m(r1.size());
        for (std::size_t i = 0; i < r1.size(); ++i) r1m[i] = r1[i] * lc_inv;
        auto [q, rem] = tp1_divmod(r0, r1m);
        // r0 = (q * lc_inv) * r1 + rem
        TPoly1 qe(q.size());
        for (std::size_t i = 0; i < q.size(); ++i) qe[i] = q[i] * lc_inv;
        TPoly1 neg;
        for (const auto& c : tp1_mul(qe, s1)) neg.push_back(-c);
        TPoly1 s2 = tp1_trim(tp1_add(s0, neg));
        r0 = std::move(r1);
        r1 = tp1_trim(std::move(rem));
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
}

TElem TElem::lifted_to(const TowerPtr& target) const { return promote(*this, target); }

void TElem::flatten(std::vector<Rational>& out) const {
    if (!level_) {
        out.push_back(rat_);
        return;
    }
    for (const auto& c : coeffs_) c.flatten(out);
}

std::string TElem::str() const {
    if (!level_) return rational_str(rat_);
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ",";
        os << coeffs_[i].str();
    }
    os << "]@" << level_->var_tag;
    return os.str();
}

bool checked_zero(const TElem& e) {
    if (e.raw_zero()) return true;
    if (e.in_base_field()) return false;
    // nonzero representation: certify unit-ness, otherwise split
    TPoly1 g = tp1_gcd(tp1_trim(e.coeffs()), e.level()->modulus);
    int d = tp1_degree(g);
    if (d == 0) return false;
    if (d == e.level()->degree()) {
        // modulus divides the representative: structurally impossible for a
        // reduced element
        throw InvariantBreach("reduced tower element divisible by its modulus");
    }
    throw TowerSplit{e.level().get(), g};
}

// ----------------------------------------------------------------- TPoly1

int tp1_degree(const TPoly1& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (!checked_zero(p[static_cast<std::size_t>(i)])) return i;
    return -1;
}

TPoly1 tp1_trim(TPoly1 p) {
    int d = tp1_degree(p);
    p.resize(static_cast<std::size_t>(d + 1));
    if (p.empty()) p.push_back(TElem(0));
    return p;
}

TPoly1 tp1_add(const TPoly1& a, const TPoly1& b) {
    TPoly1 out(std::max(a.size(), b.size()), TElem(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

TPoly1 tp1_mul(const TPoly1& a, const TPoly1& b) {
    TPoly1 out(a.size() + b.size(), TElem(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].raw_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].raw_zero()) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

TPoly1 tp1_derivative(const TPoly1& a) {
    TPoly1 out;
    for (std::size_t i = 1; i < a.size(); ++i) out.push_back(a[i] * TElem(static_cast<long>(i)));
    if (out.empty()) out.push_back(TElem(0));
    return out;
}

TPoly1 tp1_monic(const TPoly1& a) {
    int d = tp1_degree(a);
    if (d < 0) throw Error("tp1_monic of zero");
    TElem inv = a[static_cast<std::size_t>(d)].inverse();
    TPoly1 out(static_cast<std::size_t>(d + 1));
    for (int i = 0; i <= d; ++i) out[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] * inv;
    return out;
}

std::pair<TPoly1, TPoly1> tp1_divmod(const TPoly1& a, const TPoly1& monic_b) {
    int db = tp1_degree(monic_b);
    TPoly1 rem = a, quot(std::max<std::size_t>(1, a.size()), TElem(0));
    int dr = tp1_degree(rem);
    while (dr >= db) {
        TElem lead = rem[static_cast<std::size_t>(dr)];
        quot[static_cast<std::size_t>(dr - db)] += lead;
        for (int i = 0; i <= db; ++i)
            rem[static_cast<std::size_t>(dr - db + i)] -= lead * monic_b[static_cast<std::size_t>(i)];
        rem[static_cast<std::size_t>(dr)] = TElem(0);
        dr = tp1_degree(rem);
    }
    return {tp1_trim(std::move(quot)), tp1_trim(std::move(rem))};
}

TPoly1 tp1_gcd(const TPoly1& a, const TPoly1& b) {
    TPoly1 u = tp1_trim(a), v = tp1_trim(b);
    while (tp1_degree(v) >= 0) {
        TPoly1 vm = tp1_monic(v);
        TPoly1 r = tp1_divmod(u, vm).second;
        u = std::move(vm);
        v = std::move(r);
    }
    if (tp1_degree(u) < 0) return u;
    return tp1_monic(u);
}

TElem tp1_eval(const TPoly1& a, const TElem& x) {
    TElem acc(0);
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) acc = acc * x + a[static_cast<std::size_t>(i)];
    return acc;
}

std::vector<std::pair<TPoly1, int>> tp1_squarefree(const TPoly1& a) {
    std::vector<std::pair<TPoly1, int>> out;
    TPoly1 f = tp1_trim(a);
    int d = tp1_degree(f);
    if (d <= 0) return out;
    f = tp1_monic(f);
    TPoly1 fp = tp1_derivative(f);
    TPoly1 g = tp1_gcd(f, fp);
    if (tp1_degree(g) == 0) {
        out.push_back({f, 1});
        return out;
    }
    // Yun's algorithm
    TPoly1 c = tp1_divmod(f, g).first;
    TPoly1 dpart = tp1_add(tp1_divmod(fp, g).first, [&] {
        TPoly1 neg;
        for (const auto& x : tp1_derivative(c)) neg.push_back(-x);
        return neg;
    }());
    dpart = tp1_trim(std::move(dpart));
    int mult = 1;
    while (tp1_degree(c) > 0) {
        TPoly1 ai = tp1_gcd(c, dpart);
        if (tp1_degree(ai) > 0) out.push_back({ai, mult});
        TPoly1 c2 = tp1_degree(ai) > 0 ? tp1_divmod(c, ai).first : c;
        TPoly1 dnext = tp1_add(tp1_degree(ai) > 0 ? tp1_divmod(dpart, ai).first : dpart, [&] {
            TPoly1 neg;
            for (const auto& x : tp1_derivative(c2)) neg.push_back(-x);
            return neg;
        }());
        c = tp1_trim(std::move(c2));
        dpart = tp1_trim(std::move(dnext));
        ++mult;
        if (mult > 200) throw InvariantBreach("squarefree decomposition did not terminate");
    }
    return out;
}

// ----------------------------------------------------------------- TPoly2

int TPoly2::order() const {
    int o = -1;
    for (const auto& [m, c] : t_) {
        int d = m.first + m.second;
        if (o < 0 || d < o) o = d;
    }
    return o;
}

void TPoly2::set(int i, int j, const TElem& c) {
    if (checked_zero(c))
        t_.erase({i, j});
    else
        t_[{i, j}] = c;
}

TElem TPoly2::coeff(int i, int j) const {
    auto it = t_.find({i, j});
    return it == t_.end() ? TElem(0) : it->second;
}

TPoly2 TPoly2::operator+(const TPoly2& o) const {
    TPoly2 out = *this;
    for (const auto& [m, c] : o.t_) {
        auto it = out.t_.find(m);
        if (it == out.t_.end()) {
            out.t_[m] = c;
        } else {
            it->second += c;
        }
    }
    // normalize with checked zero tests
    TPoly2 norm;
    for (const auto& [m, c] : out.t_) norm.set(m.first, m.second, c);
    return norm;
}

TPoly2 TPoly2::operator*(const TPoly2& o) const {
    std::map<std::pair<int, int>, TElem> acc;
    for (const auto& [ma, ca] : t_)
        for (const auto& [mb, cb] : o.t_) {
            auto key = std::make_pair(ma.first + mb.first, ma.second + mb.second);
            auto it = acc.find(key);
            if (it == acc.end())
                acc[key] = ca * cb;
            else
                it->second += ca * cb;
        }
    TPoly2 out;
    for (const auto& [m, c] : acc) out.set(m.first, m.second, c);
    return out;
}

TPoly2 TPoly2::scaled(const TElem& c) const {
    TPoly2 out;
    for (const auto& [m, v] : t_) out.set(m.first, m.second, v * c);
    return out;
}

std::pair<TPoly1, int> TPoly2::tangent_cone_poly() const {
    int m = order();
    if (m < 0) throw InvariantBreach("tangent cone of zero germ");
    TPoly1 p(static_cast<std::size_t>(m + 1), TElem(0));
    for (const auto& [mono, c] : t_)
        if (mono.first + mono.second == m) p[static_cast<std::size_t>(mono.second)] = c;
    int dt = tp1_degree(p);
    p.resize(static_cast<std::size_t>(dt + 1));
    if (p.empty()) p.push_back(TElem(0));
    return {p, m - dt};
}

TPoly2 TPoly2::blowup_translate(const TElem& r, int m) const {
    // u^i v^j -> s^(i+j-m) (t+r)^j
    std::map<std::pair<int, int>, TElem> acc;
    // cache powers of (t + r)
    std::vector<TPoly1> pw{TPoly1{TElem(1)}};
    auto power = [&](int j) -> const TPoly1& {
        while (static_cast<int>(pw.size()) <= j) {
            TPoly1 next = tp1_mul(pw.back(), TPoly1{r, TElem(1)});
            pw.push_back(std::move(next));
        }
        return pw[static_cast<std::size_t>(j)];
    };
    for (const auto& [mono, c] : t_) {
        int sdeg = mono.first + mono.second - m;
        if (sdeg < 0) throw InvariantBreach("blowup_translate: term below the multiplicity");
        const TPoly1& tp = power(mono.second);
        for (std::size_t k = 0; k < tp.size(); ++k) {
            if (tp[k].raw_zero()) continue;
            auto key = std::make_pair(sdeg, static_cast<int>(k));
            auto it = acc.find(key);
            if (it == acc.end())
                acc[key] = c * tp[k];
            else
                it->second += c * tp[k];
        }
    }
    TPoly2 out;
    for (const auto& [mono, c] : acc) out.set(mono.first, mono.second, c);
    return out;
}

TPoly2 TPoly2::blowup_corner(int m) const {
    // u^i v^j -> s^i t^(i+j-m)
    TPoly2 out;
    for (const auto& [mono, c] : t_) {
        int tdeg = mono.first + mono.second - m;
        if (tdeg < 0) throw InvariantBreach("blowup_corner: term below the multiplicity");
        out.set(mono.first, tdeg, c);
    }
    return out;
}

int TPoly2::contact_with_u_axis() const {
    int best = -1;
    for (const auto& [mono, c] : t_) {
        if (mono.first != 0) continue;
        if (best < 0 || mono.second < best) best = mono.second;
    }
    return best; // -1: the restriction to u = 0 vanishes identically
}

std::string TPoly2::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << c.str() << "*u^" << m.first << "*v^" << m.second;
    }
    return first ? "0" : os.str();
}

long tower_dimension(const TowerPtr& level) { return level ? level->total_degree() : 1; }

} // namespace singord
