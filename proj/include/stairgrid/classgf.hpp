#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stairgrid/gf.hpp"
#include "stairgrid/perm.hpp"
#include "stairgrid/series.hpp"

namespace stairgrid {

/// Tuning knobs for theorem detection and recursive enumeration.
struct ClassGfOptions {
    /// Largest order the brute-force fallback may be asked for; beyond it
    /// class_gf raises resource_limit_error naming the subclass.
    int oracle_ceiling = 11;

    /// Side conditions of the rd_2134 / ru_2143 rows include the avoidance
    /// of a size-2 mesh pattern whose shading we cannot reproduce here, so
    /// the check is pluggable.  Null predicate = conservative default:
    /// only P = {} passes those rows.  Installing a predicate asserts, on
    /// the operator's authority, which patterns satisfy the mesh condition.
    std::function<bool(const Perm&)> rd_2134_mesh_ok;
    std::function<bool(const Perm&)> ru_2143_mesh_ok;
};

/// One way a basis matches a theorem row: under symmetry `symmetry` the
/// image basis equals {required patterns} ∪ {1⊕π : π ∈ P} (after redundancy
/// stripping) and every π ∈ P passes the row's side conditions.
struct TheoremMatch {
    std::string theorem;
    int symmetry = 0;
    Basis image{std::vector<Perm>{}};
    std::vector<Perm> P;
    std::vector<std::string> conditions; // side conditions verified, per row
};

/// All theorem rows matching the basis, across all eight symmetries, in row
/// priority order (base_123, base_132, gf_upcore, gf_downcore, gf_rdcdrucu,
/// gf_rucupi, gf_rdcdpi, gf_rdcu, rd_2134, ru_2143) and symmetry order
/// within a row; duplicates (same row, image and P) are dropped.
std::vector<TheoremMatch> detect(const Basis& basis);
std::vector<TheoremMatch> detect(const Basis& basis, const ClassGfOptions& opts);

/// The fixed patterns of a theorem row (invalid_input for unknown ids).
const std::vector<Perm>& row_required_patterns(const std::string& row_id);

/// Splits `basis` (no symmetry applied) as {row required} ∪ {1⊕π : π ∈ P}
/// and returns the π's; nullopt when the basis is not of that shape.  Side
/// conditions are not checked here.
std::optional<std::vector<Perm>> split_row_parameters(const std::string& row_id,
                                                      const Basis& basis);

/// Provenance of a computed class gf: which theorem produced each node and
/// which subtrees had to fall back to brute force.
struct GfTrace {
    std::string theorem;  // row id, or "oracle"
    std::string symmetry; // symmetry name used by the match ("" for oracle)
    std::string basis;    // the class this node enumerates
    std::vector<std::string> P;
    bool self_reference = false; // solved as a fixed point of its own gf
    bool oracle_backed = false;  // true if this node or any child is oracle
    std::vector<GfTrace> children;

    std::string json() const;
};

struct ClassGf {
    Series series;
    GfTrace trace;
};

/// The class generating function of Av(basis) to the given order, computed
/// by the first matching theorem (recursively, memoised per canonical
/// basis) or by the brute-force oracle when nothing matches.  c_0 = 1.
ClassGf class_gf(const Basis& basis, int order);
ClassGf class_gf(const Basis& basis, int order, const ClassGfOptions& opts);

/// Coefficientwise comparison of two class gfs.
struct WilfReport {
    bool equal = false;
    int first_difference = -1; // least n with differing c_n; -1 when equal
    int order = 0;
    Series gf1{0}, gf2{0};

    std::string str() const; // "equal up to x^N" / "differ first at x^k ..."
};

WilfReport wilf_check(const Basis& b1, const Basis& b2, int order);
WilfReport wilf_check(const Basis& b1, const Basis& b2, int order,
                      const ClassGfOptions& opts);

} // namespace stairgrid
