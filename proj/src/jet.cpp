#include "singord/jet.hpp"

#include <cstdlib>

namespace singord {

JetSpace::JetSpace(int order, int nvars) : order_(order), nvars_(nvars) {
    basis_ = monomials_up_to(order, nvars);
    for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = static_cast<int>(i);
}

int JetSpace::index(const Mono& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
}

Vec JetSpace::jet_of(const MultiPoly& p) const {
    Vec v(basis_.size(), ExactScalar(0));
    for (const auto& [m, c] : p.terms()) {
        if (m.deg() > order_) continue;
        v[static_cast<std::size_t>(index_.at(m))] = c;
    }
    return v;
}

MultiPoly JetSpace::poly_of(const Vec& v, const VarSet& vars) const {
    MultiPoly p(vars);
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (!v[i].is_zero()) p.set_coeff(basis_[i], v[i]);
    return p;
}

std::vector<MultiPoly> JetIdeal::spanning_polys() const {
    JetSpace space(jet_order, vars.size());
    std::vector<MultiPoly> out;
    for (const auto& r : subspace.rows()) out.push_back(space.poly_of(r, vars));
    return out;
}

bool JetIdeal::contains_jet(const MultiPoly& p) const {
    JetSpace space(jet_order, vars.size());
    Vec v = space.jet_of(p.truncated(jet_order));
    return subspace.contains(std::move(v));
}

int jet_ceiling() {
    if (const char* env = std::getenv("SINGORD_JET_CEILING")) {
        int v = std::atoi(env);
        if (v >= 4) return v;
    }
    return 64;
}

// smallest D such that every monomial of total degree in [D, N] reduces into
// the subspace; returns N+1 when even the top degree does not reduce
int monomial_certificate(const EchelonBasis& basis, const JetSpace& space) {
    int D = space.order() + 1;
    for (int d = space.order(); d >= 1; --d) {
        bool all_in = true;
        for (const Mono& m : monomials_of_degree(d, space.nvars())) {
            Vec v(static_cast<std::size_t>(space.dim()), ExactScalar(0));
            v[static_cast<std::size_t>(space.index(m))] = ExactScalar(1);
            if (!basis.contains(std::move(v))) {
                all_in = false;
                break;
            }
        }
        if (!all_in) break;
        D = d;
    }
    return D;
}

JetIdeal certify_colength(const VarSet& vars, const std::vector<ExactScalar>& center,
                          const std::function<EchelonBasis(const JetSpace&)>& build,
                          const CertifyOptions& opts) {
    int ceiling = opts.ceiling > 0 ? opts.ceiling : jet_ceiling();
    long prev_colength = -1;
    for (int N = opts.start_order; N <= ceiling; N *= 2) {
        JetSpace space(N, vars.size());
        EchelonBasis basis = build(space);
        long colength = space.dim() - basis.rank();
        int cert = monomial_certificate(basis, space);
        if (colength == prev_colength && cert <= N - 1) {
            JetIdeal ideal;
            ideal.vars = vars;
            ideal.center = center;
            ideal.jet_order = N;
            ideal.certificate = cert;
            ideal.subspace = std::move(basis);
            return ideal;
        }
        prev_colength = colength;
    }
    throw NonFiniteColength();
}

JetIdeal close_ideal(const std::vector<MultiPoly>& generators, const std::vector<ExactScalar>& center,
                     const CertifyOptions& opts) {
    bool all_zero = true;
    for (const auto& g : generators)
        if (!g.is_zero()) all_zero = false;
    if (generators.empty() || all_zero) throw InputError("close_ideal: generators are all zero");
    const VarSet& vars = generators[0].vars();
    std::vector<MultiPoly> local;
    for (const auto& g : generators)
        if (!g.is_zero()) local.push_back(g.shifted(center));
    auto build = [&](const JetSpace& space) {
        EchelonBasis basis(static_cast<int>(space.dim()));
        for (const auto& g : local) {
            int o = g.order();
            if (o < 0) continue;
            for (const Mono& m : monomials_up_to(space.order() - o, vars.size())) {
                MultiPoly prod = (MultiPoly::term(m, ExactScalar(1), vars) * g).truncated(space.order());
                basis.insert(space.jet_of(prod));
            }
        }
        return basis;
    };
    return certify_colength(vars, center, build, opts);
}

long milnor_number(const MultiPoly& f, const std::vector<ExactScalar>& center) {
    std::vector<MultiPoly> partials;
    for (int i = 0; i < f.nvars(); ++i) partials.push_back(f.derivative(i));
    return close_ideal(partials, center).colength();
}

long milnor_number(const MultiPoly& f) {
    return milnor_number(f, std::vector<ExactScalar>(static_cast<std::size_t>(f.nvars()), ExactScalar(0)));
}

JetIdeal tjurina_ideal(const MultiPoly& f, const std::vector<ExactScalar>& center) {
    std::vector<MultiPoly> gens{f};
    for (int i = 0; i < f.nvars(); ++i) gens.push_back(f.derivative(i));
    return close_ideal(gens, center);
}

long tjurina_number(const MultiPoly& f, const std::vector<ExactScalar>& center) {
    return tjurina_ideal(f, center).colength();
}

long tjurina_number(const MultiPoly& f) {
    return tjurina_number(f, std::vector<ExactScalar>(static_cast<std::size_t>(f.nvars()), ExactScalar(0)));
}

namespace {

// {g : g, g_x, g_y in reference}, solved at the reference jet order
JetIdeal membership_ideal(const JetIdeal& ref) {
    const VarSet& vars = ref.vars;
    JetSpace space(ref.jet_order, vars.size());
    long dim = space.dim();
    // conditions: for each basis monomial, the residuals of (b, b_x, b_y)
    // against the reference subspace
    std::vector<Vec> residuals; // one stacked vector per unknown column
    residuals.reserve(static_cast<std::size_t>(dim));
    for (const Mono& b : space.basis()) {
        MultiPoly mono = MultiPoly::term(b, ExactScalar(1), vars);
        Vec stacked;
        for (int which = 0; which <= vars.size(); ++which) {
            MultiPoly img = which == 0 ? mono : mono.derivative(which - 1);
            Vec v = space.jet_of(img);
            ref.subspace.reduce(v);
            stacked.insert(stacked.end(), v.begin(), v.end());
        }
        residuals.push_back(std::move(stacked));
    }
    DenseMatrix conditions(static_cast<int>(residuals[0].size()), static_cast<int>(dim));
    for (int j = 0; j < static_cast<int>(dim); ++j)
        for (int i = 0; i < conditions.nrows(); ++i)
            conditions.at(i, j) = residuals[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    JetIdeal out;
    out.vars = vars;
    out.center = ref.center;
    out.jet_order = ref.jet_order;
    out.certificate = ref.certificate + 1;
    out.subspace = EchelonBasis(static_cast<int>(dim));
    for (auto& k : conditions.kernel()) out.subspace.insert(std::move(k));
    if (out.certificate > out.jet_order - 1)
        throw InvariantBreach("membership ideal lacks headroom above the reference certificate");
    return out;
}

} // namespace

JetIdeal maximal_ideal_times(const JetIdeal& ideal) {
    const VarSet& vars = ideal.vars;
    int N = ideal.jet_order + 1;
    JetSpace space(N, vars.size());
    EchelonBasis basis(static_cast<int>(space.dim()));
    for (const auto& row : ideal.spanning_polys())
        for (int i = 0; i < vars.size(); ++i) {
            MultiPoly prod = (MultiPoly::variable(i, vars) * row).truncated(N);
            basis.insert(space.jet_of(prod));
        }
    JetIdeal out;
    out.vars = vars;
    out.center = ideal.center;
    out.jet_order = N;
    out.certificate = ideal.certificate + 1;
    out.subspace = std::move(basis);
    return out;
}

JetIdeal derived_ideal(const MultiPoly& f, DerivedKind kind, const std::vector<ExactScalar>& center) {
    if (f.nvars() != 2) throw InputError("derived ideals are defined for plane germs");
    switch (kind) {
    case DerivedKind::EA:
        return tjurina_ideal(f, center);
    case DerivedKind::A: {
        if (!is_reduced_germ(f, center)) throw NotReduced();
        return membership_ideal(tjurina_ideal(f, center));
    }
    case DerivedKind::A1: {
        if (!is_reduced_germ(f, center)) throw NotReduced();
        return maximal_ideal_times(membership_ideal(tjurina_ideal(f, center)));
    }
    case DerivedKind::CRIT0: {
        std::vector<MultiPoly> partials{f.derivative(0), f.derivative(1)};
        return membership_ideal(close_ideal(partials, center));
    }
    case DerivedKind::CRIT: {
        std::vector<MultiPoly> partials{f.derivative(0), f.derivative(1)};
        return maximal_ideal_times(membership_ideal(close_ideal(partials, center)));
    }
    }
    throw Error("unreachable");
}

JetIdeal derived_ideal(const MultiPoly& f, DerivedKind kind) {
    return derived_ideal(f, kind, std::vector<ExactScalar>(static_cast<std::size_t>(f.nvars()), ExactScalar(0)));
}

MultiPoly sample_ideal_element(const JetIdeal& ideal, std::uint64_t seed) {
    Rng rng(seed);
    auto rows = ideal.spanning_polys();
    if (rows.empty()) throw Error("cannot sample from the zero ideal");
    for (int tries = 0; tries < 100; ++tries) {
        MultiPoly out(ideal.vars);
        for (const auto& r : rows) out += r.scaled(ExactScalar(rng.range(-9, 9)));
        if (!out.is_zero()) return out;
    }
    throw GenericityFailure("sampled only zero combinations");
}

MultiPoly sample_ideal_element_such_that(const JetIdeal& ideal, std::uint64_t seed,
                                         const std::function<bool(const MultiPoly&)>& good) {
    for (int tries = 0; tries < 100; ++tries) {
        MultiPoly g = sample_ideal_element(ideal, Rng::derive(seed, static_cast<std::uint64_t>(tries)));
        if (good(g)) return g;
    }
    throw GenericityFailure("no sample passed the genericity predicate");
}

// ------------------------------------------------------------------ series

MultiPoly series_sqrt(const MultiPoly& u, int jet_order) {
    if (u.is_zero()) throw ZeroInput("series_sqrt of zero");
    if (u.nvars() != 1) throw InputError("series_sqrt expects a univariate input");
    std::vector<ExactScalar> c = u.uni_coeffs(0);
    std::size_t ord = 0;
    while (ord < c.size() && c[ord].is_zero()) ++ord;
    if (ord % 2 != 0) throw OddOrder();
    int m0 = static_cast<int>(ord) / 2;
    ExactScalar alpha = c[ord];
    ExactScalar root;
    if (!alpha.is_rational()) {
        throw ExtensionDepth("leading coefficient already lives in a quadratic extension");
    }
    if (alpha.sign() < 0) throw InputError("series_sqrt: negative leading coefficient over a real field");
    root = ExactScalar::sqrt_of(alpha.as_rational());
    // w = u/(alpha t^(2 m0)) - 1, a series with w(0) = 0 over the same field
    int keep = jet_order - m0 + 1;           // degree cutoff of the result
    int rprec = std::max(0, keep - m0);      // r carries degrees 0..rprec
    std::vector<ExactScalar> w(static_cast<std::size_t>(rprec + 1), ExactScalar(0));
    for (std::size_t k = ord; k < c.size() && static_cast<int>(k - ord) <= rprec; ++k)
        w[k - ord] = c[k] / alpha;
    w[0] -= ExactScalar(1);
    // r = sqrt(1 + w): 2 r0 rk = w_k - sum_{i=1..k-1} r_i r_{k-i}
    std::vector<ExactScalar> r(static_cast<std::size_t>(rprec + 1), ExactScalar(0));
    r[0] = ExactScalar(1);
    for (int k = 1; k <= rprec; ++k) {
        ExactScalar acc = w[static_cast<std::size_t>(k)];
        for (int i = 1; i < k; ++i) acc -= r[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(k - i)];
        r[static_cast<std::size_t>(k)] = acc / ExactScalar(2);
    }
    std::vector<ExactScalar> psi(static_cast<std::size_t>(keep + 1), ExactScalar(0));
    for (int k = 0; k <= rprec; ++k)
        if (m0 + k <= keep) psi[static_cast<std::size_t>(m0 + k)] = root * r[static_cast<std::size_t>(k)];
    return MultiPoly::from_uni_coeffs(psi, 0, u.vars());
}

std::vector<ExactScalar> eval_with_series(const MultiPoly& p, int tvar, int yvar,
                                          const std::vector<ExactScalar>& y, int prec) {
    std::vector<ExactScalar> out(static_cast<std::size_t>(prec + 1), ExactScalar(0));
    for (const auto& [m, coef] : p.terms()) {
        std::vector<ExactScalar> term(static_cast<std::size_t>(prec + 1), ExactScalar(0));
        int tpow = m.e[static_cast<std::size_t>(tvar)];
        if (tpow > prec) continue;
        term[static_cast<std::size_t>(tpow)] = coef;
        for (int rep = 0; rep < m.e[static_cast<std::size_t>(yvar)]; ++rep) {
            std::vector<ExactScalar> next(static_cast<std::size_t>(prec + 1), ExactScalar(0));
            for (int i = 0; i <= prec; ++i) {
                if (term[static_cast<std::size_t>(i)].is_zero()) continue;
                for (int j = 0; i + j <= prec; ++j) {
                    if (y[static_cast<std::size_t>(j)].is_zero()) continue;
                    next[static_cast<std::size_t>(i + j)] +=
                        term[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
                }
            }
            term = std::move(next);
        }
        for (int i = 0; i <= prec; ++i) out[static_cast<std::size_t>(i)] += term[static_cast<std::size_t>(i)];
    }
    return out;
}

std::vector<ExactScalar> implicit_series_root(const MultiPoly& h, int tvar, int yvar, int prec) {
    // Newton iteration on truncated series: y <- y - h(t,y)/h_y(t,y)
    MultiPoly hy = h.derivative(yvar);
    std::vector<ExactScalar> y(static_cast<std::size_t>(prec + 1), ExactScalar(0));
    auto eval_at = [&](const MultiPoly& p) { return eval_with_series(p, tvar, yvar, y, prec); };
    for (int iter = 0; iter < prec + 2; ++iter) {
        std::vector<ExactScalar> num = eval_at(h);
        bool zero = true;
        for (const auto& v : num)
            if (!v.is_zero()) zero = false;
        if (zero) break;
        std::vector<ExactScalar> den = eval_at(hy);
        if (den[0].is_zero()) throw Error("implicit_series_root: derivative is not a unit");
        // series inverse of den
        std::vector<ExactScalar> inv(static_cast<std::size_t>(prec + 1), ExactScalar(0));
        inv[0] = den[0].inverse();
        for (int k = 1; k <= prec; ++k) {
            ExactScalar acc(0);
            for (int i = 1; i <= k; ++i) acc += den[static_cast<std::size_t>(i)] * inv[static_cast<std::size_t>(k - i)];
            inv[static_cast<std::size_t>(k)] = -acc * inv[0];
        }
        // y -= num * inv
        for (int k = prec; k >= 0; --k) {
            ExactScalar acc(0);
            for (int i = 0; i <= k; ++i) acc += num[static_cast<std::size_t>(i)] * inv[static_cast<std::size_t>(k - i)];
            y[static_cast<std::size_t>(k)] -= acc;
        }
    }
    return y;
}

} // namespace singord
