#include "stairgrid/staircase.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <tuple>

namespace stairgrid {

std::string cell_str(const Cell& c) {
    std::ostringstream os;
    os << '(' << c.i << ',' << c.j << ')';
    return os.str();
}

StaircaseEncoding::StaircaseEncoding(int n, std::map<Cell, Perm> cells)
    : n_(n), cells_(std::move(cells)) {
    if (n < 0) throw invalid_encoding("grid size must be >= 0");
    for (const auto& [c, p] : cells_) {
        if (c.i < 1 || c.j < c.i || c.j > n)
            throw invalid_encoding("cell " + cell_str(c) + " outside the staircase grid B_" +
                                   std::to_string(n));
        if (p.empty()) throw invalid_encoding("cell " + cell_str(c) + " holds the empty permutation");
    }
}

int StaircaseEncoding::weight() const {
    int w = n_;
    for (const auto& [c, p] : cells_) w += p.size();
    return w;
}

std::string StaircaseEncoding::str() const {
    std::ostringstream os;
    os << n_ << ';';
    for (const auto& [c, p] : cells_) os << ' ' << cell_str(c) << '=' << p.str() << ';';
    return os.str();
}

StaircasePlot staircase_plot(const Perm& sigma) {
    StaircasePlot plot;
    for (int pos : sigma.left_to_right_minima()) {
        plot.minima_pos.push_back(pos);
        plot.minima_val.push_back(sigma.at(pos));
    }
    const int n = static_cast<int>(plot.minima_pos.size());
    for (int pos = 1; pos <= sigma.size(); ++pos) {
        int val = sigma.at(pos);
        // Skip the minima themselves; they live on the diagonal.
        if (!plot.minima_pos.empty() &&
            std::binary_search(plot.minima_pos.begin(), plot.minima_pos.end(), pos))
            continue;
        // Row band: strictly between the i-th and (i-1)-st minima values.
        int above = 0; // how many minima values exceed val
        for (int v : plot.minima_val)
            if (v > val) ++above;
        int i = above + 1;
        // Column band: after the j-th minimum and before the (j+1)-st.
        int j = 0;
        for (int q : plot.minima_pos)
            if (q < pos) ++j;
        if (i > j || j > n)
            throw invalid_encoding("internal: point fell outside B_n"); // unreachable
        plot.points[Cell{i, j}].emplace_back(pos, val);
    }
    return plot;
}

StaircaseEncoding staircase_encode(const Perm& sigma) {
    StaircasePlot plot = staircase_plot(sigma);
    std::map<Cell, Perm> cells;
    for (const auto& [c, pts] : plot.points) {
        std::vector<int> vals;
        vals.reserve(pts.size());
        for (auto [pos, val] : pts) vals.push_back(val);
        cells.emplace(c, Perm::standardize(vals));
    }
    return StaircaseEncoding(static_cast<int>(plot.minima_pos.size()), std::move(cells));
}

namespace {

// Every point gets a position key and a value key; sorting by the keys
// produces the realized permutation.  Keys are lexicographic triples.
using Key = std::tuple<int, int, int>;

struct RealizedPoint {
    Key pos_key;
    Key val_key;
};

} // namespace

Perm grid_realize(const StaircaseEncoding& enc, Direction rows, Direction cols) {
    const int n = enc.grid_size();
    std::vector<RealizedPoint> pts;
    // Minima: position band j opens with the j-th minimum; their values
    // descend from band 1 to band n.
    for (int j = 1; j <= n; ++j)
        pts.push_back({Key{j, -1, 0}, Key{2 * (n - j), 0, 0}});
    for (const auto& [c, p] : enc.cells()) {
        // Cells of a column appear as blocks; the column direction orders the
        // blocks (decreasing: top cell first, increasing: bottom cell first).
        int col_group = (cols == Direction::decreasing) ? c.i : c.j - c.i;
        // The row direction orders the value blocks of a row (decreasing:
        // left cell on top, increasing: left cell at the bottom).
        int row_group = (rows == Direction::decreasing) ? n - c.j : c.j;
        for (int t = 1; t <= p.size(); ++t)
            pts.push_back({Key{c.j, col_group, t}, Key{2 * (n - c.i) + 1, row_group, p.at(t)}});
    }
    std::vector<int> by_pos(pts.size()), by_val(pts.size());
    for (size_t k = 0; k < pts.size(); ++k) by_pos[k] = by_val[k] = static_cast<int>(k);
    std::sort(by_pos.begin(), by_pos.end(),
              [&](int a, int b) { return pts[static_cast<size_t>(a)].pos_key < pts[static_cast<size_t>(b)].pos_key; });
    std::sort(by_val.begin(), by_val.end(),
              [&](int a, int b) { return pts[static_cast<size_t>(a)].val_key < pts[static_cast<size_t>(b)].val_key; });
    std::vector<int> value_of(pts.size());
    for (size_t r = 0; r < pts.size(); ++r) value_of[static_cast<size_t>(by_val[r])] = static_cast<int>(r) + 1;
    std::vector<int> out;
    out.reserve(pts.size());
    for (int idx : by_pos) out.push_back(value_of[static_cast<size_t>(idx)]);
    return Perm(std::move(out));
}

namespace {

Interleave classify(const std::vector<std::vector<int>>& blocks) {
    // blocks: per active cell, the coordinates (values for rows, positions
    // for columns) of its points, cells already in the reference order where
    // "increasing" means later blocks are entirely larger.
    size_t active = 0;
    for (const auto& b : blocks)
        if (!b.empty()) ++active;
    if (active <= 1) return Interleave::both_compatible;
    bool inc = true, dec = true;
    for (size_t a = 0; a < blocks.size(); ++a) {
        if (blocks[a].empty()) continue;
        for (size_t b = a + 1; b < blocks.size(); ++b) {
            if (blocks[b].empty()) continue;
            int amin = *std::min_element(blocks[a].begin(), blocks[a].end());
            int amax = *std::max_element(blocks[a].begin(), blocks[a].end());
            int bmin = *std::min_element(blocks[b].begin(), blocks[b].end());
            int bmax = *std::max_element(blocks[b].begin(), blocks[b].end());
            if (!(amax < bmin)) inc = false;
            if (!(bmax < amin)) dec = false;
        }
    }
    if (inc) return Interleave::increasing;
    if (dec) return Interleave::decreasing;
    return Interleave::neither;
}

} // namespace

RowColumnProfile row_column_profile(const Perm& sigma) {
    StaircasePlot plot = staircase_plot(sigma);
    const int n = static_cast<int>(plot.minima_pos.size());
    RowColumnProfile prof;
    prof.rows.reserve(static_cast<size_t>(n));
    prof.columns.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        // Row i increasing: cells left to right carry increasing value blocks.
        std::vector<std::vector<int>> blocks;
        for (int j = i; j <= n; ++j) {
            auto it = plot.points.find(Cell{i, j});
            std::vector<int> vals;
            if (it != plot.points.end())
                for (auto [pos, val] : it->second) vals.push_back(val);
            blocks.push_back(std::move(vals));
        }
        prof.rows.push_back(classify(blocks));
    }
    for (int j = 1; j <= n; ++j) {
        // Column j increasing: cells bottom to top carry increasing position
        // blocks (the lower cell's points come first).
        std::vector<std::vector<int>> blocks;
        for (int i = j; i >= 1; --i) {
            auto it = plot.points.find(Cell{i, j});
            std::vector<int> ps;
            if (it != plot.points.end())
                for (auto [pos, val] : it->second) ps.push_back(pos);
            blocks.push_back(std::move(ps));
        }
        prof.columns.push_back(classify(blocks));
    }
    return prof;
}

} // namespace stairgrid
