#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "stairgrid/errors.hpp"

namespace stairgrid {

/// A permutation of {1, ..., n} in one-line notation.  Immutable after
/// construction; values are 1-based, positions are 1-based in the API.
class Perm {
public:
    Perm() = default; // the empty permutation

    explicit Perm(std::vector<int> one_line);

    /// Pattern of an arbitrary word of distinct integers: the unique
    /// permutation whose letters compare the same way.  standardize({9,5,3,8})
    /// = 4213 as a Perm.
    static Perm standardize(const std::vector<int>& word);

    /// Parses "2314" (single digits) or "10.2.1.9.3.4.5.6.7.8" (dot-joined).
    static Perm parse(const std::string& text);

    int size() const { return static_cast<int>(v_.size()); }
    bool empty() const { return v_.empty(); }

    /// Value at 1-based position.
    int at(int pos) const { return v_[static_cast<size_t>(pos - 1)]; }

    const std::vector<int>& values() const { return v_; }

    /// 1-based position of value `val`.
    int position_of(int val) const;

    std::string str() const;

    bool operator==(const Perm& o) const { return v_ == o.v_; }
    bool operator!=(const Perm& o) const { return v_ != o.v_; }
    /// Orders by size, then lexicographically; used for canonical listings.
    bool operator<(const Perm& o) const;

    /// Classical pattern containment.
    bool contains(const Perm& pattern) const;
    bool avoids(const Perm& pattern) const { return !contains(pattern); }

    /// Containment restricted to occurrences that use position `pos` of
    /// *this for the pattern's maximum letter.  When the value at `pos` is
    /// the global maximum this decides whether inserting that maximum
    /// created a new occurrence — the workhorse of the insertion oracle.
    bool contains_with_max_at(const Perm& pattern, int pos) const;

    /// 1-based positions of the left-to-right minima, in reading order.
    std::vector<int> left_to_right_minima() const;

    Perm reversed() const;
    Perm complemented() const;
    Perm inverted() const;

private:
    std::vector<int> v_;
};

std::ostream& operator<<(std::ostream& os, const Perm& p);

/// sigma ⊕ tau: tau shifted above and after sigma.
Perm direct_sum(const Perm& a, const Perm& b);
/// sigma ⊖ tau: sigma shifted above, tau after and below.
Perm skew_sum(const Perm& a, const Perm& b);

/// Maximal decomposition sigma = c_1 ⊕ c_2 ⊕ ... (or ⊖) into
/// indecomposable components, left to right.
std::vector<Perm> sum_components(const Perm& p);
std::vector<Perm> skew_components(const Perm& p);

bool sum_indecomposable(const Perm& p);
bool skew_indecomposable(const Perm& p);

/// Removes the trailing maximum if there is one: alpha when p = alpha ⊕ 1,
/// otherwise p itself.  bstrip(1) is the empty permutation.
Perm bstrip(const Perm& p);

/// The eight symmetries of the square, indexed 0..7:
/// identity, reverse, complement, reverse-complement, inverse,
/// inverse∘reverse, inverse∘complement, inverse∘reverse∘complement.
inline constexpr int kNumSymmetries = 8;
Perm apply_symmetry(int sym, const Perm& p);
const char* symmetry_name(int sym);

/// A pattern-avoidance basis: a finite antichain of nonempty permutations.
/// Construction sorts, deduplicates and strips redundant patterns (one that
/// contains another member can never bite first); strips are recorded.
class Basis {
public:
    explicit Basis(std::vector<Perm> patterns);

    /// Parses a comma-joined list, e.g. "2314,3124".
    static Basis parse(const std::string& text);

    const std::vector<Perm>& patterns() const { return pats_; }
    /// Patterns removed as redundant during construction (diagnostic).
    const std::vector<Perm>& stripped() const { return stripped_; }

    std::string str() const;

    bool operator==(const Basis& o) const { return pats_ == o.pats_; }
    bool operator!=(const Basis& o) const { return pats_ != o.pats_; }
    bool operator<(const Basis& o) const;

    bool avoided_by(const Perm& p) const;
    bool contains_pattern(const Perm& p) const; // exact membership in the list

    Basis image(int sym) const;

    /// Distinct symmetry images, each tagged with the first symmetry index
    /// producing it; entry 0 is always (identity image, 0).
    std::vector<std::pair<Basis, int>> symmetry_orbit() const;

    /// Least image across the symmetry orbit — a canonical representative
    /// for memoisation keys.
    Basis canonical() const;

private:
    std::vector<Perm> pats_;
    std::vector<Perm> stripped_;
};

std::ostream& operator<<(std::ostream& os, const Basis& b);

/// All permutations of size n avoiding every basis pattern, in
/// lexicographic order.  Exhaustive and oracle-grade: built size by size by
/// inserting a new maximum everywhere and testing only occurrences pinned
/// at it.  enumerate_class(b, 0) = { empty }.
std::vector<Perm> enumerate_class(const Basis& b, int n);

/// Levels 0..n of the same construction in one pass (cheaper than n calls).
std::vector<std::vector<Perm>> enumerate_class_levels(const Basis& b, int n);

} // namespace stairgrid
