#include "singord/puiseux.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace singord {

// ------------------------------------------------------------ ClusterTree

int ClusterTree::depth_of(int v) const {
    int d = 0;
    while (verts[static_cast<std::size_t>(v)].parent >= 0) {
        v = verts[static_cast<std::size_t>(v)].parent;
        ++d;
    }
    return d;
}

long ClusterTree::sum_deg() const {
    long s = 0;
    for (const auto& v : verts) s += v.weight * v.m * (v.m + 1) / 2;
    return s;
}

long ClusterTree::sum_m2() const {
    long s = 0;
    for (const auto& v : verts) s += v.weight * v.m * v.m;
    return s;
}

long ClusterTree::sum_delta() const {
    long s = 0;
    for (const auto& v : verts) s += v.weight * v.m * (v.m - 1) / 2;
    return s;
}

bool ClusterTree::proximity_ok() const {
    // per geometric copy of q: m(q) >= sum over points proximate to q,
    // i.e. w(q) m(q) >= sum of w(q') m(q')
    std::vector<long> incoming(verts.size(), 0);
    for (const auto& v : verts)
        for (int t : v.prox) incoming[static_cast<std::size_t>(t)] += v.weight * v.m;
    for (std::size_t i = 0; i < verts.size(); ++i)
        if (verts[i].weight * verts[i].m < incoming[i]) return false;
    return true;
}

int ClusterTree::needed_jet_order() const {
    // max over leaves of the path multiplicity sum
    std::vector<long> acc(verts.size(), 0);
    long best = 0;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const auto& v = verts[i];
        acc[i] = (v.parent >= 0 ? acc[static_cast<std::size_t>(v.parent)] : 0) + v.m;
        best = std::max(best, acc[i]);
    }
    return static_cast<int>(best);
}

ClusterTree ClusterTree::essential_subtree() const {
    ClusterTree out;
    std::vector<int> remap(verts.size(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (!verts[i].essential) continue;
        TreeVertex v = verts[i];
        if (v.parent >= 0) v.parent = remap[static_cast<std::size_t>(v.parent)];
        for (auto& t : v.prox) t = remap[static_cast<std::size_t>(t)];
        remap[i] = static_cast<int>(out.verts.size());
        out.verts.push_back(std::move(v));
    }
    return out;
}

ClusterTree ClusterTree::re_realized(Rng& rng) const {
    // expand conjugate packets into rational points with fresh directions
    ClusterTree out;
    // copies[i]: ids in `out` of the expanded copies of vertex i
    std::vector<std::vector<int>> copies(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const TreeVertex& v = verts[i];
        if (!v.realized) throw InputError("cannot re-realize a tree with unrealized leaves");
        if (v.parent < 0) {
            TreeVertex n = v;
            n.weight = 1;
            n.field = nullptr;
            n.direction = TElem(0);
            copies[i] = {0};
            out.verts.push_back(std::move(n));
            continue;
        }
        const auto& parents = copies[static_cast<std::size_t>(v.parent)];
        long rel = v.weight / verts[static_cast<std::size_t>(v.parent)].weight;
        for (int pid : parents) {
            for (long c = 0; c < rel; ++c) {
                TreeVertex n = v;
                n.weight = 1;
                n.field = nullptr;
                n.parent = pid;
                // proximity: parent plus, for satellites, the matching older
                // target, found by depth among ancestors of pid
                n.prox.clear();
                n.prox.push_back(pid);
                for (int t : v.prox) {
                    if (t == v.parent) continue;
                    int want_depth = depth_of(t);
                    int a = pid;
                    while (out.depth_of(a) > want_depth) a = out.verts[static_cast<std::size_t>(a)].parent;
                    n.prox.push_back(a);
                }
                if (v.chart == TreeVertex::Chart::Translate) {
                    if (v.satellite) {
                        n.direction = TElem(0);
                    } else {
                        // fresh direction, distinct from siblings already placed
                        while (true) {
                            long val = rng.range(-40, 40);
                            if (val == 0) continue;
                            bool clash = false;
                            for (const auto& w : out.verts)
                                if (w.parent == pid && w.chart == TreeVertex::Chart::Translate &&
                                    w.direction == TElem(val))
                                    clash = true;
                            if (!clash) {
                                n.direction = TElem(val);
                                break;
                            }
                        }
                    }
                }
                copies[i].push_back(static_cast<int>(out.verts.size()));
                out.verts.push_back(std::move(n));
            }
        }
    }
    return out;
}

namespace {

std::string signature_of(const ClusterTree& t, int v, const std::vector<std::vector<int>>& kids) {
    const TreeVertex& tv = t.verts[static_cast<std::size_t>(v)];
    std::ostringstream os;
    os << "m" << tv.m << (tv.satellite ? "s" : "f");
    int dv = t.depth_of(v);
    std::vector<int> offs;
    for (int p : tv.prox) offs.push_back(dv - t.depth_of(p));
    std::sort(offs.begin(), offs.end());
    os << "p";
    for (int o : offs) os << o << ".";
    // children signatures with relative weights, merged and sorted
    std::map<std::string, long> merged;
    for (int c : kids[static_cast<std::size_t>(v)]) {
        long rel = t.verts[static_cast<std::size_t>(c)].weight / tv.weight;
        merged[signature_of(t, c, kids)] += rel;
    }
    os << "[";
    for (const auto& [sig, rel] : merged) os << rel << "*" << sig << ";";
    os << "]";
    return os.str();
}

} // namespace

std::string ClusterTree::signature() const {
    if (verts.empty()) return "()";
    std::vector<std::vector<int>> kids(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i)
        if (verts[i].parent >= 0) kids[static_cast<std::size_t>(verts[i].parent)].push_back(static_cast<int>(i));
    return signature_of(*this, 0, kids);
}

// ------------------------------------------------------------ BranchClass

std::vector<std::pair<long, long>> BranchClass::characteristic() const {
    std::vector<std::pair<long, long>> out;
    const auto& M = mult_sequence;
    if (M.empty() || M[0] <= 1) return out;
    long eprev = M[0];
    long beta = 0;
    std::size_t i = 1;
    bool first = true;
    while (eprev > 1) {
        long ssum = first ? M[0] : 0;
        long prev = eprev;
        long enew = -1;
        while (true) {
            if (i >= M.size()) throw InvariantBreach("multiplicity sequence ended mid-stair");
            long v = M[i];
            if (v < prev && prev % v == 0) {
                long cnt = prev / v;
                for (long c = 0; c < cnt; ++c) {
                    if (i >= M.size() || M[i] != v) throw InvariantBreach("broken euclid run in multiplicity sequence");
                    ssum += v;
                    ++i;
                }
                enew = v;
                break;
            }
            if (v > prev) throw InvariantBreach("multiplicity sequence increased");
            while (i < M.size() && M[i] == v) {
                ssum += v;
                ++i;
            }
            prev = v;
        }
        beta = beta + ssum - eprev + enew;
        out.push_back({beta, enew});
        eprev = enew;
        first = false;
    }
    return out;
}

long Resolution::branch_count() const {
    long r = 0;
    for (const auto& b : branches) r += b.packet_size;
    return r;
}

// ------------------------------------------------------------- the walker

namespace {

enum class WalkMode { Resolve, Cluster, Intersect };

struct Axis {
    bool exc = false;
    int creator = -1;
};

TPoly2 to_tpoly2(const MultiPoly& f) {
    long rad = 0;
    for (const auto& [m, c] : f.terms())
        if (!c.is_rational()) rad = c.radicand();
    TowerPtr lvl;
    if (rad != 0) lvl = make_level(nullptr, {TElem(Rational(-rad)), TElem(0), TElem(1)});
    TPoly2 out;
    for (const auto& [m, c] : f.terms()) {
        TElem e = c.is_rational() ? TElem(c.rat_part())
                                  : TElem(lvl, {TElem(c.rat_part()), TElem(c.irr_part())});
        out.set(m.e[0], m.e[1], e);
    }
    return out;
}

struct Walker {
    WalkMode mode;
    int depth_cap = 160;
    ClusterTree tree;
    std::vector<int> leaf_ids;
    long intersect_sum = 0;

    struct Pending {
        std::vector<TPoly2> germs;
        long weight;
        int parent;
        TreeVertex::Chart chart;
        TElem direction;
        TowerPtr field;
        Axis au, av;
        int depth;
        bool satellite;
        std::vector<int> prox;
    };

    void enter(Pending p) {
        std::vector<long> mults;
        for (const auto& g : p.germs) {
            int o = g.order();
            if (o < 0) throw InvariantBreach("zero strict transform in resolution walk");
            mults.push_back(o);
        }
        long m = mode == WalkMode::Resolve ? mults[0] : *std::min_element(mults.begin(), mults.end());

        int vid = static_cast<int>(tree.verts.size());
        TreeVertex v;
        v.parent = p.parent;
        v.prox = p.prox;
        v.satellite = p.satellite;
        v.weight = p.weight;
        v.m = m;
        v.per_germ = mults;
        v.chart = p.chart;
        v.direction = p.direction;
        v.field = p.field;
        tree.verts.push_back(v);

        if (mode == WalkMode::Intersect) intersect_sum += p.weight * mults[0] * mults[1];

        if (mode == WalkMode::Resolve) {
            bool leaf;
            if (p.parent < 0) {
                leaf = (m == 1);
            } else {
                int nexc = (p.au.exc ? 1 : 0) + (p.av.exc ? 1 : 0);
                int contact = -1;
                if (nexc == 1) {
                    // contact of the germ with the single exceptional axis
                    contact = p.au.exc ? p.germs[0].contact_with_u_axis()
                                       : contact_with_v_axis(p.germs[0]);
                }
                leaf = (m == 1 && nexc == 1 && contact == 1);
                tree.verts[static_cast<std::size_t>(vid)].essential = !leaf;
            }
            if (leaf) {
                leaf_ids.push_back(vid);
                return;
            }
        }
        if (p.depth > depth_cap) {
            if (mode == WalkMode::Resolve) throw NotReduced("resolution did not terminate (non-reduced germ?)");
            throw CommonComponent("joint resolution did not terminate (common component?)");
        }
        children(vid, p, mults);
    }

    static int contact_with_v_axis(const TPoly2& g) {
        int best = -1;
        for (const auto& [mono, c] : g.terms()) {
            if (mono.second != 0) continue;
            if (best < 0 || mono.first < best) best = mono.first;
        }
        return best;
    }

    void children(int vid, const Pending& p, const std::vector<long>& mults) {
        // per-germ tangent cones
        std::vector<TPoly1> tcs;
        bool corner_all = true;
        for (const auto& g : p.germs) {
            auto [tp, nu_inf] = g.tangent_cone_poly();
            tcs.push_back(tp);
            if (nu_inf < 1) corner_all = false;
        }

        if (mode == WalkMode::Resolve) {
            const TPoly2& g = p.germs[0];
            auto [tp, nu_inf] = g.tangent_cone_poly();
            auto factors = tp1_squarefree(tp);
            for (auto& [q, nu] : factors) {
                TPoly1 qq = q;
                // the t = 0 root needs chart bookkeeping when the v-axis is
                // exceptional; peel it off
                if (p.av.exc && tp1_degree(qq) >= 1 && checked_zero(qq[0])) {
                    qq = tp1_divmod(qq, TPoly1{TElem(0), TElem(1)}).first;
                    do_translate(vid, p, mults, TElem(0), p.field, p.weight, true, nu);
                }
                int dq = tp1_degree(qq);
                if (dq < 1) continue;
                if (nu == 1) {
                    // simple roots away from the axes: smooth, transverse,
                    // free -> materialize the leaf, no recursion needed
                    record_shortcut_leaf(vid, p.weight * dq);
                } else {
                    dispatch_factor(vid, p, mults, qq, p.weight, nu);
                }
            }
            if (nu_inf >= 1) {
                if (nu_inf == 1 && !p.au.exc) {
                    record_shortcut_leaf(vid, p.weight);
                } else {
                    do_corner(vid, p, mults);
                }
            }
        } else {
            // joint modes: recurse at common directions only
            TPoly1 common = tcs[0];
            for (std::size_t i = 1; i < tcs.size(); ++i) common = tp1_gcd(common, tcs[i]);
            if (tp1_degree(common) >= 1) {
                for (auto& [q, nu] : tp1_squarefree(common)) {
                    TPoly1 qq = q;
                    if (tp1_degree(qq) >= 1 && checked_zero(qq[0])) {
                        qq = tp1_divmod(qq, TPoly1{TElem(0), TElem(1)}).first;
                        do_translate(vid, p, mults, TElem(0), p.field, p.weight, p.av.exc, 0);
                    }
                    if (tp1_degree(qq) >= 1) dispatch_factor(vid, p, mults, qq, p.weight, 0);
                }
            }
            if (corner_all) do_corner(vid, p, mults);
        }
    }

    void record_shortcut_leaf(int vid, long weight) {
        TreeVertex v;
        v.parent = vid;
        v.prox = {vid};
        v.weight = weight;
        v.m = 1;
        v.per_germ = {1};
        v.essential = false;
        v.chart = TreeVertex::Chart::Translate;
        v.realized = false;
        int id = static_cast<int>(tree.verts.size());
        tree.verts.push_back(std::move(v));
        leaf_ids.push_back(id);
    }

    // recurse into the translated chart v = u (t + r)
    void do_translate(int vid, const Pending& p, const std::vector<long>& mults, const TElem& r,
                      const TowerPtr& fld, long weight, bool r_is_zero_on_exc_v, int /*nu*/) {
        Pending c;
        for (std::size_t i = 0; i < p.germs.size(); ++i)
            c.germs.push_back(p.germs[i].blowup_translate(r, static_cast<int>(mults[i])));
        c.weight = weight;
        c.parent = vid;
        c.chart = TreeVertex::Chart::Translate;
        c.direction = r;
        c.field = fld;
        c.au = Axis{true, vid};
        c.prox = {vid};
        if (r_is_zero_on_exc_v && p.av.exc) {
            c.av = p.av;
            c.prox.push_back(p.av.creator);
            c.satellite = true;
        } else {
            c.av = Axis{};
            c.satellite = false;
        }
        c.depth = p.depth + 1;
        enter(std::move(c));
    }

    void do_corner(int vid, const Pending& p, const std::vector<long>& mults) {
        Pending c;
        for (std::size_t i = 0; i < p.germs.size(); ++i)
            c.germs.push_back(p.germs[i].blowup_corner(static_cast<int>(mults[i])));
        c.weight = p.weight;
        c.parent = vid;
        c.chart = TreeVertex::Chart::Corner;
        c.field = p.field;
        c.av = Axis{true, vid};
        c.au = p.au;
        c.prox = {vid};
        if (p.au.exc) {
            c.prox.push_back(p.au.creator);
            c.satellite = true;
        } else {
            c.satellite = false;
        }
        c.depth = p.depth + 1;
        enter(std::move(c));
    }

    // enter a direction packet given by a square-free monic factor
    void dispatch_factor(int vid, const Pending& p, const std::vector<long>& mults, const TPoly1& factor,
                         long weight, int /*nu*/) {
        std::vector<TPoly1> queue{factor};
        while (!queue.empty()) {
            TPoly1 q = std::move(queue.back());
            queue.pop_back();
            int dq = tp1_degree(q);
            if (dq < 1) continue;
            if (dq == 1) {
                TElem r = -(q[0] / q[1]);
                do_translate(vid, p, mults, r, p.field, weight, false, 0);
                continue;
            }
            TowerPtr lvl = make_level(p.field, q);
            std::size_t save_verts = tree.verts.size();
            std::size_t save_leaves = leaf_ids.size();
            long save_sum = intersect_sum;
            try {
                std::vector<TElem> theta(static_cast<std::size_t>(lvl->degree()), TElem(0));
                theta[1] = TElem(1);
                TElem r = TElem(lvl, std::move(theta));
                do_translate(vid, p, mults, r, lvl, weight * dq, false, 0);
            } catch (const TowerSplit& s) {
                if (s.level != lvl.get()) throw;
                // roll back the aborted subtree and redo in both factor rings
                tree.verts.resize(save_verts);
                leaf_ids.resize(save_leaves);
                while (!leaf_ids.empty() && leaf_ids.back() >= static_cast<int>(save_verts)) leaf_ids.pop_back();
                intersect_sum = save_sum;
                TPoly1 f1 = s.factor;
                TPoly1 f2 = tp1_divmod(lvl->modulus, f1).first;
                queue.push_back(std::move(f1));
                queue.push_back(std::move(f2));
            }
        }
    }

    void run(std::vector<TPoly2> germs) {
        Pending root;
        root.germs = std::move(germs);
        root.weight = 1;
        root.parent = -1;
        root.chart = TreeVertex::Chart::Root;
        root.depth = 0;
        root.satellite = false;
        enter(std::move(root));
    }
};

} // namespace

// -------------------------------------------------------------- frontends

Resolution resolve(const MultiPoly& f, const std::vector<ExactScalar>& center) {
    if (f.nvars() != 2) throw InputError("resolve expects a plane germ");
    if (f.is_zero()) throw ZeroInput();
    MultiPoly local = f.shifted(center);
    if (!local.eval({ExactScalar(0), ExactScalar(0)}).is_zero())
        throw InputError("germ does not vanish at the center");
    if (local.rational_coeffs() && !is_reduced_germ(local, {ExactScalar(0), ExactScalar(0)}))
        throw NotReduced();
    Walker w;
    w.mode = WalkMode::Resolve;
    w.run({to_tpoly2(local)});

    Resolution res;
    res.tree = std::move(w.tree);
    // branch multiplicity sequences via proximity equalities along each
    // leaf path, seeded with 1 at the leaf
    for (int leaf : w.leaf_ids) {
        std::vector<int> path;
        for (int v = leaf; v >= 0; v = res.tree.verts[static_cast<std::size_t>(v)].parent) path.push_back(v);
        std::reverse(path.begin(), path.end());
        std::map<int, long> bm;
        bm[leaf] = 1;
        for (int i = static_cast<int>(path.size()) - 2; i >= 0; --i) {
            long s = 0;
            for (int j = i + 1; j < static_cast<int>(path.size()); ++j) {
                const auto& pv = res.tree.verts[static_cast<std::size_t>(path[static_cast<std::size_t>(j)])];
                for (int t : pv.prox)
                    if (t == path[static_cast<std::size_t>(i)]) s += bm[path[static_cast<std::size_t>(j)]];
            }
            bm[path[static_cast<std::size_t>(i)]] = std::max<long>(s, 1);
        }
        BranchClass bc;
        bc.packet_size = res.tree.verts[static_cast<std::size_t>(leaf)].weight;
        for (int v : path) bc.mult_sequence.push_back(bm[v]);
        res.branches.push_back(std::move(bc));
    }
    // mt(f) = sum of packet * first multiplicity over the branch classes
    long mt_check = 0;
    for (const auto& b : res.branches) mt_check += b.packet_size * b.ramification();
    if (mt_check != res.tree.root_mult())
        throw InvariantBreach("branch multiplicities do not add up to the germ multiplicity");
    return res;
}

Resolution resolve(const MultiPoly& f) {
    return resolve(f, std::vector<ExactScalar>(static_cast<std::size_t>(f.nvars()), ExactScalar(0)));
}

long delta_invariant(const MultiPoly& f, const std::vector<ExactScalar>& center) {
    return resolve(f, center).delta();
}

long delta_invariant(const MultiPoly& f) { return resolve(f).delta(); }

ClusterTree common_points_tree(const std::vector<MultiPoly>& local_germs) {
    Walker w;
    w.mode = WalkMode::Cluster;
    std::vector<TPoly2> germs;
    for (const auto& g : local_germs) germs.push_back(to_tpoly2(g));
    w.run(std::move(germs));
    // in joint mode the vertex multiplicity is the minimum across germs
    for (auto& v : w.tree.verts) v.essential = true;
    return w.tree;
}

long intersection_multiplicity(const MultiPoly& f, const MultiPoly& g,
                               const std::vector<ExactScalar>& center, bool cross_check) {
    if (f.is_zero() || g.is_zero()) throw ZeroInput();
    MultiPoly lf = f.shifted(center), lg = g.shifted(center);
    std::vector<ExactScalar> origin{ExactScalar(0), ExactScalar(0)};
    if (lf.rational_coeffs() && lg.rational_coeffs()) {
        MultiPoly common = poly_gcd(lf, lg);
        if (common.degree() > 0 && common.eval(origin).is_zero())
            throw CommonComponent();
    }
    if (!lf.eval(origin).is_zero() || !lg.eval(origin).is_zero()) return 0;
    Walker w;
    w.mode = WalkMode::Intersect;
    w.run({to_tpoly2(lf), to_tpoly2(lg)});
    long noether = w.intersect_sum;

    if (cross_check && lf.rational_coeffs() && lg.rational_coeffs()) {
        // eliminant oracle: min over seeded shears of ord_x Res_y
        Rng rng(0x5eedULL);
        long best = -1;
        for (int trial = 0; trial < 5; ++trial) {
            long lam = rng.range(-9, 9);
            std::vector<MultiPoly> shear{
                parse_poly("x + (" + std::to_string(lam) + ")*y"),
                parse_poly("y")};
            MultiPoly sf = lf.subst(shear), sg = lg.subst(shear);
            if (sf.degree_in(1) < 1 || sg.degree_in(1) < 1) continue;
            MultiPoly r = eliminant(sf, sg, 1);
            if (r.is_zero()) continue;
            long ord = 0;
            auto coeffs = r.uni_coeffs(0);
            while (ord < static_cast<long>(coeffs.size()) && coeffs[static_cast<std::size_t>(ord)].is_zero()) ++ord;
            if (best < 0 || ord < best) best = ord;
        }
        if (best >= 0 && best != noether)
            throw InvariantBreach("intersection multiplicity disagrees with the eliminant oracle: " +
                                  std::to_string(noether) + " vs " + std::to_string(best));
    }
    return noether;
}

ClusterTree cluster_of_ideal(const JetIdeal& ideal, std::uint64_t seed) {
    if (ideal.colength() < 1) throw InputError("cluster of the unit ideal");
    auto rows = ideal.spanning_polys();
    int minord = -1;
    for (const auto& r : rows) {
        int o = r.order();
        if (o >= 0 && (minord < 0 || o < minord)) minord = o;
    }
    auto generic = [&](const MultiPoly& g) { return g.order() == minord; };
    MultiPoly g1 = sample_ideal_element_such_that(ideal, Rng::derive(seed, 1), generic);
    MultiPoly g2 = sample_ideal_element_such_that(ideal, Rng::derive(seed, 2), generic);
    MultiPoly g3 = sample_ideal_element_such_that(ideal, Rng::derive(seed, 3), generic);
    ClusterTree t12 = common_points_tree({g1, g2});
    ClusterTree t13 = common_points_tree({g1, g3});
    // vertex multiplicity: minimum across the two samples (generic value)
    for (auto& v : t12.verts) v.m = *std::min_element(v.per_germ.begin(), v.per_germ.end());
    for (auto& v : t13.verts) v.m = *std::min_element(v.per_germ.begin(), v.per_germ.end());
    if (t12.signature() != t13.signature())
        throw GenericityFailure("sampled elements disagree on the maximal cluster subscheme");
    if (!t12.proximity_ok()) throw InvariantBreach("cluster of ideal violates proximity");
    return t12;
}

// --------------------------------------------- cluster conditions machinery

namespace {

// bivariate polynomial whose coefficients are K-valued linear forms in U
// formal unknowns (jet coefficients, the tracked germ, movement parameters)
struct LinForm {
    std::vector<TElem> c;
    explicit LinForm(std::size_t u = 0) : c(u, TElem(0)) {}
    bool raw_zero() const {
        for (const auto& x : c)
            if (!x.raw_zero()) return false;
        return true;
    }
    LinForm& operator+=(const LinForm& o) {
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
        return *this;
    }
    LinForm scaled(const TElem& s) const {
        LinForm out(c.size());
        for (std::size_t i = 0; i < c.size(); ++i)
            if (!c[i].raw_zero()) out.c[i] = c[i] * s;
        return out;
    }
};

using Lin2 = std::map<std::pair<int, int>, LinForm>;

Lin2 lin2_translate(const Lin2& g, const TElem& r, int m, int truncate_at) {
    Lin2 acc;
    std::vector<TPoly1> pw{TPoly1{TElem(1)}};
    auto power = [&](int j) -> const TPoly1& {
        while (static_cast<int>(pw.size()) <= j) pw.push_back(tp1_mul(pw.back(), TPoly1{r, TElem(1)}));
        return pw[static_cast<std::size_t>(j)];
    };
    for (const auto& [mono, lf] : g) {
        int sdeg = mono.first + mono.second - m;
        if (sdeg < 0) throw InvariantBreach("lin2_translate: term below multiplicity");
        const TPoly1& tp = power(mono.second);
        for (std::size_t k = 0; k < tp.size(); ++k) {
            if (tp[k].raw_zero()) continue;
            if (sdeg + static_cast<int>(k) > truncate_at) continue;
            auto key = std::make_pair(sdeg, static_cast<int>(k));
            auto it = acc.find(key);
            if (it == acc.end())
                acc.emplace(key, lf.scaled(tp[k]));
            else
                it->second += lf.scaled(tp[k]);
        }
    }
    return acc;
}

Lin2 lin2_corner(const Lin2& g, int m, int truncate_at) {
    Lin2 acc;
    for (const auto& [mono, lf] : g) {
        int tdeg = mono.first + mono.second - m;
        if (tdeg < 0) throw InvariantBreach("lin2_corner: term below multiplicity");
        if (mono.first + tdeg > truncate_at) continue;
        acc[{mono.first, tdeg}] = lf;
    }
    return acc;
}

// derivative with respect to v
Lin2 lin2_dv(const Lin2& g) {
    Lin2 out;
    for (const auto& [mono, lf] : g) {
        if (mono.second == 0) continue;
        out[{mono.first, mono.second - 1}] = lf.scaled(TElem(static_cast<long>(mono.second)));
    }
    return out;
}

// derivative with respect to u
Lin2 lin2_du(const Lin2& g) {
    Lin2 out;
    for (const auto& [mono, lf] : g) {
        if (mono.first == 0) continue;
        out[{mono.first - 1, mono.second}] = lf.scaled(TElem(static_cast<long>(mono.first)));
    }
    return out;
}

struct ConditionsWalk {
    const ClusterTree& tree;
    std::vector<std::vector<int>> kids;
    std::size_t ucols;              // unknown jet columns
    std::size_t fcol = 0;           // column of the tracked germ (if any)
    bool with_movement = false;
    std::vector<std::size_t> param_base; // first parameter column per vertex
    std::size_t total_cols = 0;
    std::vector<Vec> rows;          // emitted rational rows (length total_cols)
    int trunc;

    explicit ConditionsWalk(const ClusterTree& t) : tree(t), kids(t.verts.size()) {
        for (std::size_t i = 0; i < t.verts.size(); ++i)
            if (t.verts[i].parent >= 0) kids[static_cast<std::size_t>(t.verts[i].parent)].push_back(static_cast<int>(i));
    }

    void emit(int vid, const Lin2& g) {
        const TreeVertex& v = tree.verts[static_cast<std::size_t>(vid)];
        long field_dim = tower_dimension(v.field);
        for (int d = 0; d < v.m; ++d) {
            for (int i = 0; i <= d; ++i) {
                int j = d - i;
                auto it = g.find({i, j});
                LinForm lf = it == g.end() ? LinForm(total_cols) : it->second;
                // expand each K-valued entry into field_dim rational rows
                std::vector<std::vector<Rational>> flat(lf.c.size());
                for (std::size_t u = 0; u < lf.c.size(); ++u) {
                    TElem e = lf.c[u];
                    if (v.field) e = e.lifted_to(v.field);
                    e.flatten(flat[u]);
                    if (static_cast<long>(flat[u].size()) != field_dim)
                        throw InvariantBreach("flatten dimension mismatch");
                }
                for (long k = 0; k < field_dim; ++k) {
                    Vec row(total_cols, ExactScalar(0));
                    bool nonzero = false;
                    for (std::size_t u = 0; u < lf.c.size(); ++u) {
                        if (flat[u][static_cast<std::size_t>(k)] != 0) {
                            row[u] = ExactScalar(flat[u][static_cast<std::size_t>(k)]);
                            nonzero = true;
                        }
                    }
                    if (nonzero) rows.push_back(std::move(row));
                }
            }
        }
    }

    void walk(int vid, Lin2 g) {
        const TreeVertex& v = tree.verts[static_cast<std::size_t>(vid)];
        emit(vid, g);
        // strip conditions (their vanishing is imposed) for the virtual
        // transform of the children
        Lin2 s;
        for (const auto& [mono, lf] : g)
            if (mono.first + mono.second >= v.m) s.emplace(mono, lf);
        for (int c : kids[static_cast<std::size_t>(vid)]) {
            const TreeVertex& cv = tree.verts[static_cast<std::size_t>(c)];
            bool corner = cv.chart == TreeVertex::Chart::Corner;
            Lin2 h = corner ? lin2_corner(s, static_cast<int>(v.m), trunc)
                            : lin2_translate(s, cv.direction, static_cast<int>(v.m), trunc);
            if (with_movement && !cv.satellite) {
                // a free point slides along its parent's exceptional divisor;
                // in the child chart that divisor is an axis, so the movement
                // derivative of the tracked germ is the along-axis derivative
                // of its transform
                Lin2 der = corner ? lin2_du(only_col(h, fcol)) : lin2_dv(only_col(h, fcol));
                long fdim = tower_dimension(cv.field);
                for (long k = 0; k < fdim; ++k) {
                    TElem theta_pow = theta_power(cv.field, k);
                    for (const auto& [mono, lf] : der) {
                        auto it = h.find(mono);
                        if (it == h.end()) it = h.emplace(mono, LinForm(total_cols)).first;
                        it->second.c[param_base[static_cast<std::size_t>(c)] + static_cast<std::size_t>(k)] +=
                            lf.c[fcol] * theta_pow;
                    }
                }
            }
            walk(c, std::move(h));
        }
    }

    static TElem theta_power(const TowerPtr& field, long k) {
        if (!field) return TElem(1);
        // basis element index k in the product basis of the chain
        long base_dim = tower_dimension(field->base);
        long outer = k / base_dim, inner = k % base_dim;
        std::vector<TElem> coeffs(static_cast<std::size_t>(field->degree()), TElem(0));
        coeffs[static_cast<std::size_t>(outer)] = theta_power(field->base, inner);
        return TElem(field, std::move(coeffs));
    }

    static Lin2 only_col(const Lin2& g, std::size_t col) {
        Lin2 out;
        for (const auto& [mono, lf] : g) {
            if (lf.c[col].raw_zero()) continue;
            LinForm nf(lf.c.size());
            nf.c[col] = lf.c[col];
            out.emplace(mono, nf);
        }
        return out;
    }
};

} // namespace

JetIdeal cluster_ideal(const ClusterTree& tree, const VarSet& vars,
                       const std::vector<ExactScalar>& center, const CertifyOptions& opts) {
    if (tree.empty()) throw InputError("empty cluster tree");
    if (!tree.proximity_ok()) throw ProximityViolation();
    for (const auto& v : tree.verts)
        if (!v.realized) throw InputError("cluster tree has unrealized chart data");
    CertifyOptions o = opts;
    o.start_order = std::max(opts.start_order, tree.needed_jet_order());
    auto build = [&](const JetSpace& space) {
        ConditionsWalk cw(tree);
        cw.ucols = static_cast<std::size_t>(space.dim());
        cw.total_cols = cw.ucols;
        cw.trunc = space.order();
        Lin2 root;
        for (long u = 0; u < space.dim(); ++u) {
            const Mono& m = space.basis()[static_cast<std::size_t>(u)];
            LinForm lf(cw.total_cols);
            lf.c[static_cast<std::size_t>(u)] = TElem(1);
            root[{m.e[0], m.e[1]}] = std::move(lf);
        }
        cw.walk(0, std::move(root));
        DenseMatrix cm(static_cast<int>(cw.rows.size()), static_cast<int>(space.dim()));
        for (std::size_t i = 0; i < cw.rows.size(); ++i) cm.row(static_cast<int>(i)) = cw.rows[i];
        EchelonBasis basis(static_cast<int>(space.dim()));
        for (auto& k : cm.kernel()) basis.insert(std::move(k));
        return basis;
    };
    return certify_colength(vars, center, build, o);
}

JetIdeal equisingularity_ideal(const ClusterTree& tree, const MultiPoly& f_local, const VarSet& vars,
                               const std::vector<ExactScalar>& center, const CertifyOptions& opts) {
    if (tree.empty()) throw InputError("empty cluster tree");
    // parameter layout: two root translations, then one block per free
    // translate vertex (dimension of its chart field)
    std::vector<std::size_t> param_base(tree.verts.size(), 0);
    std::size_t nparams = 2;
    for (std::size_t i = 1; i < tree.verts.size(); ++i) {
        const auto& v = tree.verts[i];
        if (!v.satellite) { // every free point moves along its divisor
            param_base[i] = nparams;
            nparams += static_cast<std::size_t>(tower_dimension(v.field));
        }
    }
    CertifyOptions o = opts;
    o.start_order = std::max(opts.start_order, tree.needed_jet_order());
    MultiPoly f0 = f_local;
    auto build = [&, f0](const JetSpace& space) {
        ConditionsWalk cw(tree);
        cw.ucols = static_cast<std::size_t>(space.dim());
        cw.fcol = cw.ucols;
        cw.with_movement = true;
        cw.total_cols = cw.ucols + 1 + nparams;
        cw.param_base.assign(param_base.size(), 0);
        for (std::size_t i = 0; i < param_base.size(); ++i)
            cw.param_base[i] = cw.ucols + 1 + param_base[i];
        cw.trunc = space.order();
        Lin2 root;
        auto add_numeric = [&](const MultiPoly& p, std::size_t col) {
            TPoly2 tp = to_tpoly2(p.truncated(space.order()));
            for (const auto& [mono, c] : tp.terms()) {
                auto key = std::make_pair(mono.first, mono.second);
                auto it = root.find(key);
                if (it == root.end()) it = root.emplace(key, LinForm(cw.total_cols)).first;
                it->second.c[col] += c;
            }
        };
        for (long u = 0; u < space.dim(); ++u) {
            const Mono& m = space.basis()[static_cast<std::size_t>(u)];
            auto key = std::make_pair(static_cast<int>(m.e[0]), static_cast<int>(m.e[1]));
            LinForm lf(cw.total_cols);
            lf.c[static_cast<std::size_t>(u)] = TElem(1);
            root.emplace(key, std::move(lf));
        }
        add_numeric(f0, cw.fcol);
        add_numeric(f0.derivative(0), cw.ucols + 1);
        add_numeric(f0.derivative(1), cw.ucols + 2);
        cw.walk(0, std::move(root));
        // split rows into [unknown | f-check | params]
        std::size_t nr = cw.rows.size();
        DenseMatrix L(static_cast<int>(nr), static_cast<int>(cw.ucols));
        DenseMatrix B(static_cast<int>(nr), static_cast<int>(nparams));
        for (std::size_t i = 0; i < nr; ++i) {
            const Vec& r = cw.rows[i];
            if (!r[cw.fcol].is_zero())
                throw InvariantBreach("germ does not satisfy its own cluster conditions");
            for (std::size_t j = 0; j < cw.ucols; ++j) L.at(static_cast<int>(i), static_cast<int>(j)) = r[j];
            for (std::size_t j = 0; j < nparams; ++j)
                B.at(static_cast<int>(i), static_cast<int>(j)) = r[cw.ucols + 1 + j];
        }
        // g is equisingular to first order iff L g lies in the column space
        // of B: contract with the left kernel of B
        auto lam = B.left_kernel();
        DenseMatrix C(static_cast<int>(lam.size()), static_cast<int>(cw.ucols));
        for (std::size_t i = 0; i < lam.size(); ++i)
            for (std::size_t j = 0; j < cw.ucols; ++j) {
                ExactScalar acc(0);
                for (std::size_t r = 0; r < nr; ++r)
                    if (!lam[i][r].is_zero() && !L.at(static_cast<int>(r), static_cast<int>(j)).is_zero())
                        acc += lam[i][r] * L.at(static_cast<int>(r), static_cast<int>(j));
                C.at(static_cast<int>(i), static_cast<int>(j)) = acc;
            }
        EchelonBasis basis(static_cast<int>(space.dim()));
        for (auto& k : C.kernel()) basis.insert(std::move(k));
        return basis;
    };
    return certify_colength(vars, center, build, o);
}

} // namespace singord
