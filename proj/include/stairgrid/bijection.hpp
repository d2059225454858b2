#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stairgrid/core_graphs.hpp"
#include "stairgrid/perm.hpp"
#include "stairgrid/staircase.hpp"

namespace stairgrid {

/// One weighted vertex of a labelled independent set.  `adjusted` marks the
/// z-cells of the merged-core theorems, whose weight w is realized as w
/// with its maximum deleted (the deleted point is re-derivable from the
/// split position, so the realized permutation is one shorter than w).
struct WeightedCell {
    Cell cell;
    CellLabel label = CellLabel::t;
    Perm weight;
    bool adjusted = false;

    int realized_size() const { return weight.size() - (adjusted ? 1 : 0); }
};

/// A weighted labelled independent set on B_n.  `total()` is the size of
/// the permutation it realizes: n minima plus the realized cell sizes.
struct WeightedSet {
    int n = 0;
    std::vector<WeightedCell> cells; // row-major cell order

    int total() const;
    std::string str() const;
};

/// How each bijection theorem materializes: which core graph and labelling
/// it uses, which weight class each label draws from, and the row/column
/// interleavings its realization map imposes.
struct BijectionScheme {
    std::string id;       // canonical bijection id, e.g. "inf_downcore"
    std::string gf_row;   // matching enumeration row, e.g. "gf_downcore"
    CoreKind kind;
    LabelScheme labels = LabelScheme::rl;
    Direction rows = Direction::decreasing;
    Direction cols = Direction::decreasing;
    bool merged = false;  // merged cores: columns exclude the diagonal and
                          // z-cells split around their column's points
};

/// All supported bijection theorem ids, in enumeration-row order.
std::vector<std::string> bijection_theorem_ids();

/// Scheme lookup; accepts the enumeration-row id as an alias.  Throws
/// invalid_input for unknown ids.
const BijectionScheme& bijection_scheme(const std::string& theorem_id);

/// The weight class a label draws from, for the theorem applied to
/// Av(basis).  The basis must match the theorem's template at the identity
/// symmetry (the bijection is a statement about that concrete class).
Basis bijection_weight_class(const std::string& theorem_id, const Basis& basis,
                             CellLabel label);

/// Every weighted labelled independent set of the theorem's graph on B_n
/// with the given realized total, each exactly once, in a deterministic
/// order.
std::vector<WeightedSet> weighted_sets(const std::string& theorem_id,
                                       const Basis& basis, int n, int total);

/// The permutation realizing W: minima on the diagonal, each cell's points
/// interleaved per the theorem's directions; merged-core z-cells place the
/// weight as α…β around the column's off-diagonal points with the weight's
/// maximum deleted.  Labels are recomputed and must match W's.
Perm realize(const std::string& theorem_id, const WeightedSet& w);

/// Inverts realize on a class member: staircase-encode, relabel, recover
/// weights (reinserting the deleted maximum of each z-cell).  Returns
/// nullopt, with a reason, when sigma is not in the theorem's image form.
std::optional<WeightedSet> encode_side(const std::string& theorem_id,
                                       const Basis& basis, const Perm& sigma,
                                       std::string* reason = nullptr);

/// One (n, total) stratum of the bijection check.
struct PairCheck {
    int n = 0;
    int total = 0;
    long long weighted_count = 0;
    long long class_count = 0;
    bool injective = true;
    bool image_match = true;
    std::string detail; // first mismatch, empty when the stratum passes

    bool pass() const { return injective && image_match; }
};

struct BijectionReport {
    std::string theorem;
    std::string basis;
    int max_total = 0;
    bool pass = false;
    std::vector<PairCheck> pairs;

    std::string summary() const;
    std::string json() const;
};

/// Verifies, for every n and every total <= max_total, that realize is
/// injective on weighted_sets(n, total) and that its image is exactly the
/// set of class members of size `total` with n left-to-right minima.
BijectionReport verify_bijection(const std::string& theorem_id,
                                 const Basis& basis, int max_total);

} // namespace stairgrid
