#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "stairgrid/perm.hpp"

namespace stairgrid {

/// A cell of the staircase grid B_n: row i (1 = topmost value band), column j
/// (n = rightmost position band), with 1 <= i <= j <= n.
struct Cell {
    int i = 0;
    int j = 0;
    auto operator<=>(const Cell&) const = default; // row-major order
};

std::string cell_str(const Cell& c);

/// Grid size n plus a map from active cells to nonempty permutations.
class StaircaseEncoding {
public:
    StaircaseEncoding(int n, std::map<Cell, Perm> cells);

    int grid_size() const { return n_; }
    const std::map<Cell, Perm>& cells() const { return cells_; }

    /// n plus the sum of all cell sizes — the size of any realization.
    int weight() const;

    /// Debug format "n; (i,j)=perm; ..." with cells in row-major order.
    std::string str() const;

    bool operator==(const StaircaseEncoding& o) const {
        return n_ == o.n_ && cells_ == o.cells_;
    }

private:
    int n_;
    std::map<Cell, Perm> cells_;
};

/// The full plot of a permutation on its staircase grid: minima in reading
/// order plus each active cell's points as (position, value) pairs in
/// position order.  Both the encoding and the structural lemma checks are
/// projections of this.
struct StaircasePlot {
    std::vector<int> minima_pos; // positions of left-to-right minima
    std::vector<int> minima_val; // their values (strictly decreasing)
    std::map<Cell, std::vector<std::pair<int, int>>> points;
};

StaircasePlot staircase_plot(const Perm& sigma);

/// SE(sigma): left-to-right minima on the diagonal, every other point binned
/// by value band (row) and position band (column), each bin standardized.
StaircaseEncoding staircase_encode(const Perm& sigma);

enum class Direction { increasing, decreasing };

/// The unique permutation with encoding `enc` whose row interleavings all
/// follow `rows` and column interleavings all follow `cols`.  Decreasing
/// rows and columns inverts SE on up-core images; increasing on down-core
/// images; the mixed combinations serve the merged-core bijections.
Perm grid_realize(const StaircaseEncoding& enc, Direction rows, Direction cols);

enum class Interleave {
    both_compatible, // at most one active cell: vacuously increasing and decreasing
    increasing,
    decreasing,
    neither
};

struct RowColumnProfile {
    std::vector<Interleave> rows;    // entry i-1 describes grid row i
    std::vector<Interleave> columns; // entry j-1 describes grid column j
};

/// Classifies every row and column interleaving of sigma's staircase plot.
RowColumnProfile row_column_profile(const Perm& sigma);

} // namespace stairgrid
