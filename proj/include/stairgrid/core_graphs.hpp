#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "stairgrid/staircase.hpp"

namespace stairgrid {

/// Which edge families a core graph carries.  Atomic kinds U, D, R, C may be
/// unioned; the merged kinds overlay a second graph on the off-diagonal
/// cells (inner cells translated through (i,j) -> (i,j-1)):
///   DmUR = D(B_n) joined with U(B_{n-1}) and R(B_{n-1}),
///   UmDR = U(B_n) joined with D(B_{n-1}) and R(B_{n-1}).
class CoreKind {
public:
    static CoreKind atoms(bool u, bool d, bool r, bool c);
    static CoreKind parse(const std::string& text); // "U","UD","UDRC","DmUR",...

    static CoreKind U() { return atoms(true, false, false, false); }
    static CoreKind D() { return atoms(false, true, false, false); }
    static CoreKind R() { return atoms(false, false, true, false); }
    static CoreKind C() { return atoms(false, false, false, true); }
    static CoreKind UD() { return atoms(true, true, false, false); }
    static CoreKind UDC() { return atoms(true, true, false, true); }
    static CoreKind UDRC() { return atoms(true, true, true, true); }
    static CoreKind DmUR();
    static CoreKind UmDR();

    bool has_u() const { return u_; }
    bool has_d() const { return d_; }
    bool has_r() const { return r_; }
    bool has_c() const { return c_; }
    bool merged() const { return merged_ != 0; }
    bool is_dmur() const { return merged_ == 1; }
    bool is_umdr() const { return merged_ == 2; }

    std::string str() const;
    bool operator==(const CoreKind& o) const = default;

private:
    bool u_ = false, d_ = false, r_ = false, c_ = false;
    int merged_ = 0; // 0 none, 1 DmUR, 2 UmDR
};

class CoreGraph {
public:
    /// Builds the graph of `kind` on B_n.
    static CoreGraph build(CoreKind kind, int n);

    CoreKind kind() const { return kind_; }
    int grid_size() const { return n_; }
    const std::vector<Cell>& vertices() const { return vertices_; } // row-major
    const std::set<std::pair<Cell, Cell>>& edges() const { return edges_; }

    bool adjacent(const Cell& a, const Cell& b) const;
    bool independent(const std::vector<Cell>& cells) const;

    /// Every independent set exactly once (including the empty set), as
    /// sorted cell lists in lexicographic order.
    void for_each_independent_set(const std::function<void(const std::vector<Cell>&)>& fn) const;

    /// Same, visiting only sets of at most `max_size` members (pruned during
    /// the search, not filtered afterwards).
    void for_each_independent_set(
        int max_size, const std::function<void(const std::vector<Cell>&)>& fn) const;
    std::vector<std::vector<Cell>> independent_sets() const;

    /// count[k] = number of independent sets of size k.
    std::vector<long long> independent_set_counts() const;

    /// Debug dump "kind n; edges: (i,j)-(k,l), ..." with each edge oriented
    /// column-major ascending and the list sorted.
    std::string dump() const;

private:
    CoreKind kind_;
    int n_ = 0;
    std::vector<Cell> vertices_;
    std::set<std::pair<Cell, Cell>> edges_; // normalized: first < second row-major
    std::vector<std::vector<char>> adj_;    // vertex-index adjacency matrix
    int index_of(const Cell& c) const;
};

enum class LabelScheme { rl, phi, psi };
enum class CellLabel { y, z, s, t };

char label_char(CellLabel l);

/// Labels every member of the independent set I:
///  rl : y when another member lies strictly right in the same row, else z.
///  phi: first match of — y (off-diagonal); z (another member shares the
///       column); s (another member north-east: row <=, column >=); t.
///  psi: y (off-diagonal); z (another member shares the column); s.
std::map<Cell, CellLabel> label(const std::vector<Cell>& I, LabelScheme scheme,
                                const CoreGraph& graph);

} // namespace stairgrid
