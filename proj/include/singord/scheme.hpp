#pragma once

#include <optional>
#include <string>
#include <vector>

#include "singord/puiseux.hpp"

namespace singord {

enum class SchemeKind { ES, S, S1, EA, A, A1, CRIT0, CRIT, FAT, CLUSTER };

std::string scheme_kind_name(SchemeKind k);
SchemeKind scheme_kind_from_name(const std::string& name);

// ADE classification of a reduced plane germ (NonSimple otherwise).
struct GermClass {
    enum class Family { A, D, E, NonSimple, Smooth } family = Family::NonSimple;
    long index = 0; // the k of A_k/D_k/E_k
    bool simple() const { return family == Family::A || family == Family::D || family == Family::E; }
    std::string name() const;
};
GermClass classify_germ(const MultiPoly& f_local);

struct SchemePoint {
    std::vector<ExactScalar> position; // empty: symbolic GENERIC tag
    JetIdeal ideal;
    std::optional<ClusterTree> cluster; // attached presentation when available
};

class ZeroDimScheme {
public:
    std::vector<SchemePoint> points;
    std::string provenance;

    bool empty() const { return points.empty(); }
    bool explicit_positions() const;
    long degree() const; // sum of colengths, with well-formedness checks
    // M2 = sum of squared multiplicities over the maximal cluster subscheme;
    // computes (and caches nothing) via cluster_of_ideal where no cluster is
    // attached; enforces deg Z <= M2 < 2 deg Z
    long m2(std::uint64_t seed = 0) const;
};

// Build the scheme of the germ `f_local` (read at the origin) planted at
// `position`. Curve kinds require a reduced germ; critical-point kinds a
// finite Milnor number. For simple germs the analytic kinds A/A1 coincide
// with S/S1 by definition.
ZeroDimScheme build_scheme(const MultiPoly& f_local, SchemeKind kind,
                           const std::vector<ExactScalar>& position, std::uint64_t seed = 0);

ZeroDimScheme build_fat_point(int multiplicity, const std::vector<ExactScalar>& position);
ZeroDimScheme build_cluster_scheme(const ClusterTree& tree, const std::vector<ExactScalar>& position);

// scheme of the germ of a global curve F at one of its points
ZeroDimScheme scheme_of_curve_at(const MultiPoly& F, SchemeKind kind,
                                 const std::vector<ExactScalar>& point, std::uint64_t seed = 0);

struct ResidueResult {
    ZeroDimScheme quotient; // Z : L
    long deg_on_line = 0;   // deg(Z cap L) = deg Z - deg(Z : L)
};
// residue of the scheme by a line (degree-1 polynomial)
ResidueResult residue(const ZeroDimScheme& z, const MultiPoly& line);

// local coordinate change (origin-fixing jet with invertible linear part)
// applied at every point of the scheme
ZeroDimScheme apply_automorphism(const ZeroDimScheme& z, const std::vector<MultiPoly>& phi);

enum class SampleMode { ISO, DEF };
ZeroDimScheme sample_representative(const ZeroDimScheme& z, SampleMode mode, std::uint64_t seed);

ZeroDimScheme scheme_union(const ZeroDimScheme& a, const ZeroDimScheme& b);

// ideal containment I(b) inside I(a) at a common point (per-point check)
bool ideal_contains(const JetIdeal& big, const JetIdeal& small);

// canonical JSON serialization (bit-stable)
std::string scheme_to_json(const ZeroDimScheme& z);
ZeroDimScheme scheme_from_json(const std::string& text);

} // namespace singord
