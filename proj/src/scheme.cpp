#include "singord/scheme.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace singord {

using nlohmann::json;

std::string scheme_kind_name(SchemeKind k) {
    switch (k) {
    case SchemeKind::ES: return "es";
    case SchemeKind::S: return "s";
    case SchemeKind::S1: return "s1";
    case SchemeKind::EA: return "ea";
    case SchemeKind::A: return "a";
    case SchemeKind::A1: return "a1";
    case SchemeKind::CRIT0: return "crit0";
    case SchemeKind::CRIT: return "crit";
    case SchemeKind::FAT: return "fat";
    case SchemeKind::CLUSTER: return "cluster";
    }
    return "?";
}

SchemeKind scheme_kind_from_name(const std::string& name) {
    for (SchemeKind k : {SchemeKind::ES, SchemeKind::S, SchemeKind::S1, SchemeKind::EA, SchemeKind::A,
                         SchemeKind::A1, SchemeKind::CRIT0, SchemeKind::CRIT, SchemeKind::FAT,
                         SchemeKind::CLUSTER})
        if (scheme_kind_name(k) == name) return k;
    throw InputError("unknown scheme kind '" + name + "'");
}

std::string GermClass::name() const {
    switch (family) {
    case Family::A: return "A" + std::to_string(index);
    case Family::D: return "D" + std::to_string(index);
    case Family::E: return "E" + std::to_string(index);
    case Family::Smooth: return "smooth";
    case Family::NonSimple: return "non-simple";
    }
    return "?";
}

GermClass classify_germ(const MultiPoly& f_local) {
    GermClass out;
    int mt = f_local.order();
    if (mt <= 0) throw InputError("classify_germ: germ does not vanish at the origin");
    if (mt == 1) {
        out.family = GermClass::Family::Smooth;
        return out;
    }
    long mu = milnor_number(f_local); // throws NonFiniteColength when not isolated
    if (mt == 2) {
        out.family = GermClass::Family::A;
        out.index = mu;
        return out;
    }
    if (mt >= 4) return out; // non-simple
    // mt == 3: count distinct tangent directions via the resolution tree
    Resolution r = resolve(f_local);
    long directions = 0;
    for (const auto& v : r.tree.verts)
        if (v.parent == 0) directions += v.weight;
    if (directions == 3) {
        out.family = GermClass::Family::D;
        out.index = 4;
        if (mu != 4) throw InvariantBreach("ordinary triple point with mu != 4");
    } else if (directions == 2) {
        out.family = GermClass::Family::D;
        out.index = mu;
    } else if (mu >= 6 && mu <= 8) {
        out.family = GermClass::Family::E;
        out.index = mu;
    }
    return out;
}

bool ZeroDimScheme::explicit_positions() const {
    for (const auto& p : points)
        if (p.position.empty()) return false;
    return true;
}

long ZeroDimScheme::degree() const {
    long s = 0;
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& p : points) {
        long c = p.ideal.colength();
        if (c < 1) throw InvariantBreach("scheme point with colength < 1");
        if (p.cluster && p.cluster->sum_deg() != c)
            throw InvariantBreach("attached cluster degree disagrees with the ideal colength");
        if (!p.position.empty()) {
            auto key = std::make_pair(p.position[0].str(), p.position[1].str());
            if (!seen.insert(key).second) throw InvariantBreach("scheme positions are not pairwise distinct");
        }
        s += c;
    }
    if (s < 1) throw InvariantBreach("empty scheme has no degree");
    return s;
}

long ZeroDimScheme::m2(std::uint64_t seed) const {
    long total = 0, deg_total = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& p = points[i];
        long deg = p.ideal.colength();
        long m2;
        if (p.cluster) {
            m2 = p.cluster->sum_m2();
        } else {
            m2 = cluster_of_ideal(p.ideal, Rng::derive(seed, i)).sum_m2();
        }
        if (!(deg <= m2 && m2 < 2 * deg))
            throw InvariantBreach("M2 sandwich deg <= M2 < 2 deg fails at a scheme point");
        total += m2;
        deg_total += deg;
    }
    if (!(deg_total <= total && total < 2 * deg_total))
        throw InvariantBreach("M2 sandwich fails for the whole scheme");
    return total;
}

namespace {

const std::vector<ExactScalar> O2{ExactScalar(0), ExactScalar(0)};

JetIdeal planted(JetIdeal ideal, const std::vector<ExactScalar>& position) {
    ideal.center = position;
    return ideal;
}

ZeroDimScheme one_point(const std::vector<ExactScalar>& position, JetIdeal ideal,
                        std::optional<ClusterTree> cluster, const std::string& provenance) {
    ZeroDimScheme z;
    SchemePoint p;
    p.position = position;
    p.ideal = std::move(ideal);
    p.cluster = std::move(cluster);
    z.points.push_back(std::move(p));
    z.provenance = provenance;
    return z;
}

// seeded transverse line through the origin for the S1 construction
MultiPoly transverse_line(const MultiPoly& f_local, std::uint64_t seed) {
    Resolution r = resolve(f_local);
    Rng rng(seed);
    for (int tries = 0; tries < 32; ++tries) {
        long c = rng.range(-9, 9);
        MultiPoly line = parse_poly("y - (" + std::to_string(c) + ")*x");
        // transverse iff the line's direction is not a tangent direction:
        // its intersection with the germ must equal the multiplicity
        try {
            if (intersection_multiplicity(f_local, line, O2, false) == r.mt()) return line;
        } catch (const CommonComponent&) {
            // the line is a component of the germ: resample
        }
    }
    throw GenericityFailure("could not find a transverse line");
}

} // namespace

ZeroDimScheme build_scheme(const MultiPoly& f_local, SchemeKind kind,
                           const std::vector<ExactScalar>& position, std::uint64_t seed) {
    if (f_local.nvars() != 2) throw InputError("schemes are built from plane germs");
    const VarSet& vars = f_local.vars();
    std::string prov = scheme_kind_name(kind);
    switch (kind) {
    case SchemeKind::S: {
        Resolution r = resolve(f_local);
        ClusterTree ess = r.tree.essential_subtree();
        JetIdeal ideal = cluster_ideal(ess, vars, position);
        return one_point(position, std::move(ideal), std::move(ess), prov);
    }
    case SchemeKind::S1: {
        MultiPoly line = transverse_line(f_local, Rng::derive(seed, 0x51));
        Resolution r = resolve(f_local * line);
        ClusterTree ess = r.tree.essential_subtree();
        JetIdeal ideal = cluster_ideal(ess, vars, position);
        return one_point(position, std::move(ideal), std::move(ess), prov);
    }
    case SchemeKind::ES: {
        Resolution r = resolve(f_local);
        JetIdeal ideal = equisingularity_ideal(r.tree.essential_subtree(), f_local, vars, position);
        return one_point(position, std::move(ideal), std::nullopt, prov);
    }
    case SchemeKind::EA: {
        if (!is_reduced_germ(f_local, O2)) throw NotReduced();
        return one_point(position, planted(tjurina_ideal(f_local, O2), position), std::nullopt, prov);
    }
    case SchemeKind::A:
    case SchemeKind::A1: {
        GermClass cls = classify_germ(f_local);
        if (cls.simple() || cls.family == GermClass::Family::Smooth) {
            // the paper sets Z^a = Z^s and Z^a_1 = Z^s_1 for simple germs
            ZeroDimScheme z = build_scheme(f_local, kind == SchemeKind::A ? SchemeKind::S : SchemeKind::S1,
                                           position, seed);
            z.provenance = prov;
            return z;
        }
        JetIdeal ideal = derived_ideal(f_local, kind == SchemeKind::A ? DerivedKind::A : DerivedKind::A1, O2);
        return one_point(position, planted(std::move(ideal), position), std::nullopt, prov);
    }
    case SchemeKind::CRIT0:
        return one_point(position, planted(derived_ideal(f_local, DerivedKind::CRIT0, O2), position),
                         std::nullopt, prov);
    case SchemeKind::CRIT:
        return one_point(position, planted(derived_ideal(f_local, DerivedKind::CRIT, O2), position),
                         std::nullopt, prov);
    case SchemeKind::FAT:
    case SchemeKind::CLUSTER:
        throw InputError("use build_fat_point / build_cluster_scheme");
    }
    throw Error("unreachable");
}

ZeroDimScheme build_fat_point(int multiplicity, const std::vector<ExactScalar>& position) {
    if (multiplicity < 1) throw InputError("fat point multiplicity must be >= 1");
    ClusterTree t;
    TreeVertex v;
    v.m = multiplicity;
    t.verts.push_back(v);
    return build_cluster_scheme(t, position);
}

ZeroDimScheme build_cluster_scheme(const ClusterTree& tree, const std::vector<ExactScalar>& position) {
    if (!tree.proximity_ok()) throw ProximityViolation();
    JetIdeal ideal = cluster_ideal(tree, VarSet::plane(), position);
    return one_point(position, std::move(ideal), tree, tree.verts.size() == 1 ? "fat" : "cluster");
}

ZeroDimScheme scheme_of_curve_at(const MultiPoly& F, SchemeKind kind,
                                 const std::vector<ExactScalar>& point, std::uint64_t seed) {
    return build_scheme(F.shifted(point), kind, point, seed);
}

ResidueResult residue(const ZeroDimScheme& z, const MultiPoly& line) {
    if (line.degree() != 1) throw InputError("residue expects a line (degree-1 polynomial)");
    ResidueResult out;
    out.quotient.provenance = z.provenance + ":L";
    for (const auto& p : z.points) {
        if (p.position.empty()) throw SymbolicPosition();
        MultiPoly l = line.shifted(p.position);
        if (!l.eval(O2).is_zero()) {
            out.quotient.points.push_back(p);
            continue;
        }
        const JetIdeal& ideal = p.ideal;
        int N = ideal.jet_order;
        JetSpace big(N, 2), small(N - 1, 2);
        // jets g of order N-1 with l*g inside the ideal subspace
        std::vector<Vec> residuals;
        for (const Mono& b : small.basis()) {
            MultiPoly prod = (l * MultiPoly::term(b, ExactScalar(1), l.vars())).truncated(N);
            Vec v = big.jet_of(prod);
            ideal.subspace.reduce(v);
            residuals.push_back(std::move(v));
        }
        DenseMatrix cm(static_cast<int>(big.dim()), static_cast<int>(small.dim()));
        for (int j = 0; j < static_cast<int>(small.dim()); ++j)
            for (int i = 0; i < cm.nrows(); ++i)
                cm.at(i, j) = residuals[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        SchemePoint q;
        q.position = p.position;
        q.ideal.vars = ideal.vars;
        q.ideal.center = p.position;
        q.ideal.jet_order = N - 1;
        q.ideal.subspace = EchelonBasis(static_cast<int>(small.dim()));
        for (auto& k : cm.kernel()) q.ideal.subspace.insert(std::move(k));
        q.ideal.certificate = monomial_certificate(q.ideal.subspace, small);
        if (q.ideal.certificate > q.ideal.jet_order - 1)
            throw InvariantBreach("residue ideal lost its certificate headroom");
        long drop = p.ideal.colength() - q.ideal.colength();
        out.deg_on_line += drop;
        if (q.ideal.colength() > 0) out.quotient.points.push_back(std::move(q));
    }
    return out;
}

ZeroDimScheme apply_automorphism(const ZeroDimScheme& z, const std::vector<MultiPoly>& phi) {
    if (phi.size() != 2) throw InputError("automorphism needs two coordinate images");
    for (const auto& c : phi)
        if (!c.coeff(Mono(0, 0)).is_zero()) throw NonInvertible("automorphism must fix the point");
    ExactScalar det = phi[0].coeff(Mono(1, 0)) * phi[1].coeff(Mono(0, 1)) -
                      phi[0].coeff(Mono(0, 1)) * phi[1].coeff(Mono(1, 0));
    if (det.is_zero()) throw NonInvertible();
    ZeroDimScheme out = z;
    for (auto& p : out.points) {
        int N = p.ideal.jet_order;
        JetSpace space(N, 2);
        EchelonBasis basis(static_cast<int>(space.dim()));
        for (const auto& row : p.ideal.spanning_polys())
            basis.insert(space.jet_of(row.subst(phi, N)));
        if (basis.rank() != p.ideal.subspace.rank())
            throw InvariantBreach("automorphism changed the colength");
        p.ideal.subspace = std::move(basis);
        p.ideal.certificate = monomial_certificate(p.ideal.subspace, space);
    }
    out.provenance = z.provenance;
    return out;
}

namespace {

std::vector<ExactScalar> random_position(Rng& rng) {
    Rational a(rng.range(-24, 24), rng.range(1, 3));
    Rational b(rng.range(-24, 24), rng.range(1, 3));
    a.canonicalize();
    b.canonicalize();
    return {ExactScalar(a), ExactScalar(b)};
}

std::vector<MultiPoly> random_automorphism_jet(Rng& rng, int order, const VarSet& vars) {
    while (true) {
        long a = rng.range(-5, 5), b = rng.range(-5, 5), c = rng.range(-5, 5), d = rng.range(-5, 5);
        if (a * d - b * c == 0) continue;
        std::vector<MultiPoly> phi;
        for (int which = 0; which < 2; ++which) {
            MultiPoly img(vars);
            img.set_coeff(Mono(1, 0), ExactScalar(which == 0 ? a : c));
            img.set_coeff(Mono(0, 1), ExactScalar(which == 0 ? b : d));
            for (int deg = 2; deg <= std::max(2, order - 1); ++deg)
                for (const Mono& m : monomials_of_degree(deg, 2))
                    img.set_coeff(m, ExactScalar(rng.range(-4, 4)));
            phi.push_back(std::move(img));
        }
        return phi;
    }
}

} // namespace

ZeroDimScheme sample_representative(const ZeroDimScheme& z, SampleMode mode, std::uint64_t seed) {
    ZeroDimScheme out;
    out.provenance = z.provenance + (mode == SampleMode::ISO ? ":iso" : ":def");
    std::set<std::pair<std::string, std::string>> used;
    for (std::size_t i = 0; i < z.points.size(); ++i) {
        Rng rng(Rng::derive(seed, i));
        std::vector<ExactScalar> pos;
        for (int tries = 0;; ++tries) {
            pos = random_position(rng);
            auto key = std::make_pair(pos[0].str(), pos[1].str());
            if (used.insert(key).second) break;
            if (tries > 64) throw GenericityFailure("could not place distinct positions");
        }
        const SchemePoint& p = z.points[i];
        if (mode == SampleMode::ISO) {
            SchemePoint q = p;
            q.position = pos;
            q.ideal.center = pos;
            ZeroDimScheme tmp;
            tmp.points.push_back(std::move(q));
            tmp = apply_automorphism(tmp, random_automorphism_jet(rng, p.ideal.jet_order, p.ideal.vars));
            out.points.push_back(std::move(tmp.points[0]));
        } else {
            if (!p.cluster) throw ModeUnsupported("DEF sampling needs a cluster presentation");
            ClusterTree fresh = p.cluster->re_realized(rng);
            JetIdeal ideal = cluster_ideal(fresh, p.ideal.vars, pos);
            SchemePoint q;
            q.position = pos;
            q.ideal = std::move(ideal);
            q.cluster = std::move(fresh);
            out.points.push_back(std::move(q));
        }
    }
    return out;
}

ZeroDimScheme scheme_union(const ZeroDimScheme& a, const ZeroDimScheme& b) {
    ZeroDimScheme out = a;
    std::set<std::pair<std::string, std::string>> used;
    for (const auto& p : a.points)
        if (!p.position.empty()) used.insert({p.position[0].str(), p.position[1].str()});
    for (const auto& p : b.points) {
        if (!p.position.empty() && !used.insert({p.position[0].str(), p.position[1].str()}).second)
            throw OverlappingSupport();
        out.points.push_back(p);
    }
    out.provenance = a.provenance + "+" + b.provenance;
    return out;
}

bool ideal_contains(const JetIdeal& big, const JetIdeal& small) {
    if (small.jet_order + 1 < big.certificate)
        throw InputError("ideal_contains: jet orders lack common headroom");
    for (const auto& row : small.spanning_polys())
        if (!big.contains_jet(row.truncated(big.jet_order))) return false;
    return true;
}

// -------------------------------------------------------------------- JSON

namespace {

json cluster_to_json(const ClusterTree& t) {
    json verts = json::array();
    for (const auto& v : t.verts) {
        json jv;
        jv["parent"] = v.parent;
        jv["m"] = v.m;
        jv["weight"] = v.weight;
        jv["prox"] = v.prox;
        jv["satellite"] = v.satellite;
        jv["essential"] = v.essential;
        switch (v.chart) {
        case TreeVertex::Chart::Root: jv["chart"] = "root"; break;
        case TreeVertex::Chart::Corner: jv["chart"] = "corner"; break;
        case TreeVertex::Chart::Translate: jv["chart"] = "translate"; break;
        }
        if (v.chart == TreeVertex::Chart::Translate && v.realized && !v.field)
            jv["direction"] = rational_str(v.direction.rat());
        verts.push_back(std::move(jv));
    }
    return json{{"vertices", std::move(verts)}};
}

ClusterTree cluster_from_json(const json& j) {
    ClusterTree t;
    for (const auto& jv : j.at("vertices")) {
        TreeVertex v;
        v.parent = jv.at("parent").get<int>();
        v.m = jv.at("m").get<long>();
        v.weight = jv.at("weight").get<long>();
        v.prox = jv.at("prox").get<std::vector<int>>();
        v.satellite = jv.at("satellite").get<bool>();
        v.essential = jv.at("essential").get<bool>();
        std::string chart = jv.at("chart").get<std::string>();
        if (chart == "root")
            v.chart = TreeVertex::Chart::Root;
        else if (chart == "corner")
            v.chart = TreeVertex::Chart::Corner;
        else
            v.chart = TreeVertex::Chart::Translate;
        if (jv.contains("direction")) {
            Rational r(jv.at("direction").get<std::string>());
            r.canonicalize();
            v.direction = TElem(r);
            v.realized = true;
        } else {
            v.realized = v.chart != TreeVertex::Chart::Translate;
        }
        t.verts.push_back(std::move(v));
    }
    return t;
}

} // namespace

std::string scheme_to_json(const ZeroDimScheme& z) {
    json out;
    out["provenance"] = z.provenance;
    json pts = json::array();
    for (const auto& p : z.points) {
        json jp;
        json pos = json::array();
        for (const auto& c : p.position) pos.push_back(c.str());
        jp["position"] = std::move(pos);
        jp["jet_order"] = p.ideal.jet_order;
        jp["certificate"] = p.ideal.certificate;
        jp["colength"] = p.ideal.colength();
        json rows = json::array();
        for (const auto& r : p.ideal.spanning_polys()) rows.push_back(r.str());
        jp["subspace_rows"] = std::move(rows);
        if (p.cluster) jp["cluster"] = cluster_to_json(*p.cluster);
        pts.push_back(std::move(jp));
    }
    out["points"] = std::move(pts);
    return out.dump(2);
}

ZeroDimScheme scheme_from_json(const std::string& text) {
    json j = json::parse(text);
    ZeroDimScheme z;
    z.provenance = j.value("provenance", "");
    for (const auto& jp : j.at("points")) {
        SchemePoint p;
        for (const auto& c : jp.at("position")) {
            Rational r(c.get<std::string>());
            r.canonicalize();
            p.position.push_back(ExactScalar(r));
        }
        p.ideal.vars = VarSet::plane();
        p.ideal.center = p.position;
        p.ideal.jet_order = jp.at("jet_order").get<int>();
        p.ideal.certificate = jp.at("certificate").get<int>();
        JetSpace space(p.ideal.jet_order, 2);
        p.ideal.subspace = EchelonBasis(static_cast<int>(space.dim()));
        for (const auto& row : jp.at("subspace_rows"))
            p.ideal.subspace.insert(space.jet_of(parse_poly(row.get<std::string>(), VarSet::plane())));
        if (jp.contains("cluster")) p.cluster = cluster_from_json(jp.at("cluster"));
        long col = jp.at("colength").get<long>();
        if (col != p.ideal.colength()) throw InputError("scheme file colength mismatch");
        z.points.push_back(std::move(p));
    }
    return z;
}

} // namespace singord
