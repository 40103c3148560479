#include "singord/cohomology.hpp"

#include "json.hpp"

namespace singord {

Cohomology cohomology(const ZeroDimScheme& z, int n) {
    if (!z.explicit_positions()) throw SymbolicPosition();
    if (n < 0) {
        Cohomology out;
        out.h0 = 0;
        out.h1 = z.degree();
        out.rank = 0;
        return out;
    }
    long deg = z.degree();
    auto fmonos = monomials_up_to(n, 2);
    long cols = static_cast<long>(fmonos.size());
    std::vector<Vec> rows;
    for (const auto& p : z.points) {
        JetSpace space(p.ideal.jet_order, 2);
        auto non_piv = p.ideal.subspace.non_pivots();
        // residual coordinates of each curve monomial germ at the point
        std::vector<Vec> residuals;
        residuals.reserve(fmonos.size());
        for (const Mono& fm : fmonos) {
            MultiPoly local =
                MultiPoly::term(fm, ExactScalar(1), p.ideal.vars).shifted(p.position).truncated(p.ideal.jet_order);
            Vec v = space.jet_of(local);
            p.ideal.subspace.reduce(v);
            residuals.push_back(std::move(v));
        }
        for (int np : non_piv) {
            Vec row(static_cast<std::size_t>(cols), ExactScalar(0));
            bool nonzero = false;
            for (long j = 0; j < cols; ++j) {
                const ExactScalar& c = residuals[static_cast<std::size_t>(j)][static_cast<std::size_t>(np)];
                if (!c.is_zero()) {
                    row[static_cast<std::size_t>(j)] = c;
                    nonzero = true;
                }
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }
    DenseMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols));
    for (std::size_t i = 0; i < rows.size(); ++i) m.row(static_cast<int>(i)) = rows[i];
    Cohomology out;
    out.rank = m.rank();
    out.h0 = cols - out.rank;
    out.h1 = deg - out.rank;
    return out;
}

int ord0(const ZeroDimScheme& z) {
    for (int n = 0;; ++n) {
        if (cohomology(z, n).h0 > 0) return n;
        if (n > static_cast<int>(z.degree()) + 1) throw InvariantBreach("ord0 exceeded deg Z + 1");
    }
}

int ord1(const ZeroDimScheme& z) {
    int cap = static_cast<int>(z.degree()) + 1;
    for (int n = 0; n <= cap; ++n)
        if (cohomology(z, n).h1 == 0) return n;
    throw InvariantBreach("ord1 exceeded the classical worst case deg Z + 1");
}

CastelnuovoProfile castelnuovo(const ZeroDimScheme& z) {
    CastelnuovoProfile out;
    out.deg = z.degree();
    long prev_h1 = out.deg; // h1(J_Z(-1)) = deg Z
    std::vector<long> h1s;
    int n = 0;
    int first_h0 = -1;
    int cap = static_cast<int>(out.deg) + 2;
    for (;; ++n) {
        Cohomology c = cohomology(z, n);
        if (first_h0 < 0 && c.h0 > 0) first_h0 = n;
        out.c.push_back(prev_h1 - c.h1);
        prev_h1 = c.h1;
        if (c.h1 == 0) break;
        if (n > cap) throw InvariantBreach("castelnuovo profile did not terminate");
    }
    if (first_h0 < 0) {
        // ord0 can exceed ord1 (e.g. one fat double point); keep scanning
        for (int k = n + 1; first_h0 < 0; ++k) {
            if (cohomology(z, k).h0 > 0) first_h0 = k;
            if (k > cap) throw InvariantBreach("ord0 scan did not terminate");
        }
    }
    out.ord0 = first_h0;
    out.ord1 = n;
    out.c.push_back(0); // C(ord1 + 1)
    // the four Castelnuovo properties
    long sum = 0;
    for (std::size_t i = 0; i < out.c.size(); ++i) {
        long cn = out.c[i];
        int nn = static_cast<int>(i);
        if (nn < out.ord0 && cn != nn + 1) throw InvariantBreach("Castelnuovo staircase C(n) = n+1 fails");
        if (nn >= out.ord0 && i + 1 < out.c.size() && out.c[i + 1] > cn)
            throw InvariantBreach("Castelnuovo function increases past ord0");
        if (nn > out.ord1 && cn != 0) throw InvariantBreach("Castelnuovo function nonzero past ord1");
        sum += cn;
    }
    if (sum != out.deg) throw InvariantBreach("Castelnuovo values do not sum to deg Z");
    return out;
}

std::string CastelnuovoProfile::to_json() const {
    nlohmann::json j;
    j["deg"] = deg;
    j["ord0"] = ord0;
    j["ord1"] = ord1;
    j["castelnuovo"] = c;
    return j.dump(2);
}

OrdersResult generic_orders(const ZeroDimScheme& z, SampleMode mode, int trials, std::uint64_t seed) {
    if (trials < 1) throw InputError("generic_orders needs at least one trial");
    OrdersResult out;
    out.deg = z.degree();
    out.mode = mode == SampleMode::ISO ? "iso" : "def";
    for (int t = 0; t < trials; ++t) {
        ZeroDimScheme rep = sample_representative(z, mode, Rng::derive(seed, static_cast<std::uint64_t>(t)));
        OrdersResult::Trial trial;
        trial.ord0 = ord0(rep);
        trial.ord1 = ord1(rep);
        out.trials.push_back(trial);
    }
    out.ord0_an = out.trials[0].ord0;
    out.ord1_an = out.trials[0].ord1;
    for (const auto& t : out.trials) {
        out.ord0_an = std::max(out.ord0_an, t.ord0);
        out.ord1_an = std::min(out.ord1_an, t.ord1);
    }
    for (const auto& t : out.trials) {
        if (t.ord0 != out.ord0_an) out.stable0 = false;
        if (t.ord1 != out.ord1_an) out.stable1 = false;
    }
    return out;
}

std::vector<MultiPoly> curves_through(const ZeroDimScheme& z, int n) {
    if (!z.explicit_positions()) throw SymbolicPosition();
    auto fmonos = monomials_up_to(n, 2);
    std::vector<Vec> rows;
    for (const auto& p : z.points) {
        JetSpace space(p.ideal.jet_order, 2);
        auto non_piv = p.ideal.subspace.non_pivots();
        std::vector<Vec> residuals;
        for (const Mono& fm : fmonos) {
            MultiPoly local =
                MultiPoly::term(fm, ExactScalar(1), p.ideal.vars).shifted(p.position).truncated(p.ideal.jet_order);
            Vec v = space.jet_of(local);
            p.ideal.subspace.reduce(v);
            residuals.push_back(std::move(v));
        }
        for (int np : non_piv) {
            Vec row(fmonos.size(), ExactScalar(0));
            for (std::size_t j = 0; j < fmonos.size(); ++j) row[j] = residuals[j][static_cast<std::size_t>(np)];
            rows.push_back(std::move(row));
        }
    }
    DenseMatrix m(static_cast<int>(rows.size()), static_cast<int>(fmonos.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) m.row(static_cast<int>(i)) = rows[i];
    std::vector<MultiPoly> out;
    for (const auto& k : m.kernel()) {
        MultiPoly f(VarSet::plane());
        for (std::size_t j = 0; j < fmonos.size(); ++j)
            if (!k[j].is_zero()) f.set_coeff(fmonos[j], k[j]);
        out.push_back(std::move(f));
    }
    return out;
}

std::string OrdersResult::to_json() const {
    nlohmann::json j;
    j["deg"] = deg;
    j["mode"] = mode;
    j["ord0_an"] = ord0_an;
    j["ord1_an"] = ord1_an;
    j["stable"] = stable0 && stable1;
    nlohmann::json ts = nlohmann::json::array();
    for (const auto& t : trials) ts.push_back({{"ord0", t.ord0}, {"ord1", t.ord1}});
    j["trials"] = std::move(ts);
    return j.dump(2);
}

} // namespace singord
