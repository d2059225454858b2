#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <random>
#include <string>
#include <vector>

#include "stairgrid/classgf.hpp"
#include "stairgrid/core_graphs.hpp"
#include "stairgrid/numeric.hpp"
#include "stairgrid/perm.hpp"

namespace stairgrid {

/// Exact uniform sampler over Av_n(basis), for bases matched (possibly
/// under a symmetry) by one of the single-core bijection rows: base_123,
/// base_132, gf_upcore, gf_downcore.  Sampling walks the staircase
/// decomposition of the class — choose a grid size and an independent set
/// of the core, compose the remaining letters into cell weights, realize —
/// so every draw is uniform by construction, with no rejection on the
/// class side.
///
/// Construction builds exact BigInt tables and cross-checks them two ways:
///  - set_count(g, k) — size-k independent sets of the core on B_g — is
///    computed from the enumeration formula by evaluating its marker slot
///    on integer nodes and interpolating, then verified against a direct
///    DFS count of the actual graph for g <= 8 (independent code paths);
///  - count(n) = sum_{g,k} set_count(g,k) * comp(n-g,k), where comp is the
///    weighted-composition table, is verified against class_gf.
/// Any disagreement raises internal_consistency_error.
///
/// Weights are drawn from the row's weight class: recursively (the class
/// itself, for the parameterless up/down-core rows) or by indexing an
/// exhaustive member list (all other cases).  Member lists and per-(g,k)
/// independent-set lists are materialized lazily.
///
/// Tables are immutable after construction.  sample() is const and guarded
/// internally; concurrent callers need independent RNG streams.
class Sampler {
public:
    /// Builds tables for sampling sizes 0..max_n.  Throws invalid_input
    /// when no supported theorem row matches the basis.
    Sampler(const Basis& basis, int max_n);

    const Basis& basis() const { return basis_; }
    /// The symmetry image actually decomposed (== basis() when the match
    /// is at the identity).
    const Basis& image_basis() const { return image_; }
    const std::string& theorem() const { return theorem_; }
    const char* symmetry() const;
    int max_size() const { return max_n_; }

    /// |Av_n(basis)| from the verified decomposition tables, n <= max_n.
    const BigInt& count(int n) const;

    /// Number of size-k independent sets of the core on B_g (0 for k out
    /// of range).
    BigInt set_count(int g, int k) const;

    /// One uniform member of Av_n(basis); deterministic in the seed.
    Perm sample(int n, std::uint64_t seed) const;

    /// Draw with a caller-held generator — the way to take many samples
    /// from one seeded stream.
    Perm sample_with_rng(int n, std::mt19937_64& rng) const;

private:
    Sampler(const Basis& basis, int max_n, const TheoremMatch& match);

    Basis basis_;
    Basis image_;
    Basis weight_basis_;
    std::string theorem_;
    int sym_ = 0;     // basis.image(sym_) == image_
    int inv_sym_ = 0; // apply_symmetry(inv_sym_, apply_symmetry(sym_, p)) == p
    int max_n_ = 0;
    CoreKind kind_ = CoreKind::U();
    Direction rows_ = Direction::decreasing;
    Direction cols_ = Direction::decreasing;
    bool self_recursive_ = false; // weight class == image class: recurse

    std::vector<std::vector<BigInt>> m_;   // m_[g][k], g <= max_n, k <= 2g-1
    std::vector<std::vector<BigInt>> comp_; // comp_[r][k], r <= max_n-1
    std::vector<BigInt> weight_counts_;    // B_j = |Av_j(weight class)|
    std::vector<BigInt> counts_;           // c_n, n <= max_n

    mutable std::mutex mu_;
    mutable std::map<std::pair<int, int>, std::vector<std::vector<Cell>>> set_lists_;
    mutable std::map<int, std::vector<Perm>> weight_lists_;

    Perm sample_image(int n, std::mt19937_64& rng) const;
    const std::vector<std::vector<Cell>>& set_list(int g, int k) const;
    const std::vector<Perm>& weight_list(int j) const;
};

} // namespace stairgrid
