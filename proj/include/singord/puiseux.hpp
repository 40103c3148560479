#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "singord/jet.hpp"
#include "singord/poly.hpp"
#include "singord/rng.hpp"
#include "singord/tower.hpp"

namespace singord {

// One infinitely near point (or a packet of conjugate ones, `weight` many).
// Chart data is kept so that cluster conditions can be regenerated by
// blow-up substitution along the tree.
struct TreeVertex {
    enum class Chart { Root, Translate, Corner };

    int parent = -1;
    std::vector<int> prox;   // vertex ids this point is proximate to
    bool satellite = false;
    bool essential = true;
    long weight = 1;         // number of conjugate geometric points
    long m = 0;              // multiplicity (of the tracked germ / cluster)
    std::vector<long> per_germ; // per-germ multiplicities in joint walks

    Chart chart = Chart::Root;
    TElem direction;         // Translate charts: v = u*(t + direction)
    TowerPtr field;          // chart field; nullptr means Q
    bool realized = true;    // false for shortcut leaves without chart data
};

class ClusterTree {
public:
    std::vector<TreeVertex> verts;

    bool empty() const { return verts.empty(); }
    int depth_of(int v) const;
    long sum_deg() const;    // sum of w * m(m+1)/2
    long sum_m2() const;     // sum of w * m^2
    long sum_delta() const;  // sum of w * m(m-1)/2
    long root_mult() const { return verts.empty() ? 0 : verts[0].m; }
    // per-point proximity inequality  m(q) >= sum over q' proximate to q
    bool proximity_ok() const;
    // largest jet degree the cluster conditions can reference
    int needed_jet_order() const;

    // subtree of essential vertices (non-essential ones are always leaves)
    ClusterTree essential_subtree() const;
    // same combinatorics with fresh rational directions, packets expanded
    ClusterTree re_realized(Rng& rng) const;
    // canonical combinatorial signature; equal signatures = same cluster type
    std::string signature() const;
};

struct BranchClass {
    long packet_size = 1;
    std::vector<long> mult_sequence; // non-increasing, ends at 1
    long ramification() const { return mult_sequence.empty() ? 1 : mult_sequence[0]; }
    // Puiseux characteristic: (beta_j, e_j) with e_j = gcd so far;
    // empty for smooth branches
    std::vector<std::pair<long, long>> characteristic() const;
};

struct Resolution {
    ClusterTree tree; // full materialized tree (essential flags set)
    std::vector<BranchClass> branches;

    long mt() const { return tree.root_mult(); }
    long branch_count() const;
    long delta() const { return tree.sum_delta(); }
};

// Embedded resolution of the germ of f at `center` by conjugacy classes.
Resolution resolve(const MultiPoly& f, const std::vector<ExactScalar>& center);
Resolution resolve(const MultiPoly& f);

// Local intersection number of two germs without common component, computed
// over the common infinitely near points (Noether), cross-checked against
// the eliminant oracle after seeded shears.
long intersection_multiplicity(const MultiPoly& f, const MultiPoly& g,
                               const std::vector<ExactScalar>& center, bool cross_check = true);

long delta_invariant(const MultiPoly& f, const std::vector<ExactScalar>& center);
long delta_invariant(const MultiPoly& f);

// Tree of common infinitely near points of the germs with vertex-wise
// minimal multiplicities (the base-point tree of their pencil).
ClusterTree common_points_tree(const std::vector<MultiPoly>& local_germs);

// Maximal cluster subscheme tree of a certified ideal: resolves two sampled
// generic elements, takes the common tree, and validates against a third
// sample (GenericityFailure on disagreement).
ClusterTree cluster_of_ideal(const JetIdeal& ideal, std::uint64_t seed);

// Ideal of the cluster (virtual multiplicity conditions along the tree),
// certified in the jet model. The tree must be realized (chart data).
JetIdeal cluster_ideal(const ClusterTree& tree, const VarSet& vars,
                       const std::vector<ExactScalar>& center, const CertifyOptions& opts = {});

// Equisingularity ideal at fixed topological type with moving cluster
// points: conditions of the tree on f + eps*g, first order in eps, with the
// tree points free to move (root in the plane, free points along their
// exceptional divisor). f_local is the germ at the origin.
JetIdeal equisingularity_ideal(const ClusterTree& essential_tree, const MultiPoly& f_local,
                               const VarSet& vars, const std::vector<ExactScalar>& center,
                               const CertifyOptions& opts = {});

} // namespace singord
