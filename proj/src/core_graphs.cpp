#include "stairgrid/core_graphs.hpp"

#include <algorithm>
#include <sstream>

namespace stairgrid {

CoreKind CoreKind::atoms(bool u, bool d, bool r, bool c) {
    if (!(u || d || r || c)) throw invalid_input("core kind needs at least one atom");
    CoreKind k;
    k.u_ = u;
    k.d_ = d;
    k.r_ = r;
    k.c_ = c;
    return k;
}

CoreKind CoreKind::DmUR() {
    CoreKind k = atoms(false, true, false, false);
    k.merged_ = 1;
    return k;
}

CoreKind CoreKind::UmDR() {
    CoreKind k = atoms(true, false, false, false);
    k.merged_ = 2;
    return k;
}

CoreKind CoreKind::parse(const std::string& text) {
    if (text == "DmUR") return DmUR();
    if (text == "UmDR") return UmDR();
    bool u = false, d = false, r = false, c = false;
    for (char ch : text) {
        switch (ch) {
            case 'U': u = true; break;
            case 'D': d = true; break;
            case 'R': r = true; break;
            case 'C': c = true; break;
            default: throw invalid_input("unknown core kind: " + text);
        }
    }
    if (text.empty()) throw invalid_input("empty core kind");
    return atoms(u, d, r, c);
}

std::string CoreKind::str() const {
    if (is_dmur()) return "DmUR";
    if (is_umdr()) return "UmDR";
    std::string s;
    if (u_) s += 'U';
    if (d_) s += 'D';
    if (r_) s += 'R';
    if (c_) s += 'C';
    return s;
}

namespace {

bool u_edge(const Cell& a, const Cell& b) {
    return (a.i > b.i && a.j < b.j) || (b.i > a.i && b.j < a.j);
}

// The D rule asks for the full rectangle between the cells to fit in the
// grid, which on a staircase means the lower-left corner is on or above the
// diagonal: i < k <= j < l.
bool d_edge(const Cell& a, const Cell& b) {
    auto rule = [](const Cell& p, const Cell& q) { return p.i < q.i && q.i <= p.j && p.j < q.j; };
    return rule(a, b) || rule(b, a);
}

bool r_edge(const Cell& a, const Cell& b) { return a.i == b.i && a.j != b.j; }

bool c_edge(const Cell& a, const Cell& b) { return a.j == b.j && a.i != b.i; }

} // namespace

CoreGraph CoreGraph::build(CoreKind kind, int n) {
    if (n < 0) throw invalid_input("grid size must be >= 0");
    CoreGraph g;
    g.kind_ = kind;
    g.n_ = n;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) g.vertices_.push_back(Cell{i, j});
    const size_t m = g.vertices_.size();
    g.adj_.assign(m, std::vector<char>(m, 0));
    for (size_t a = 0; a < m; ++a) {
        for (size_t b = a + 1; b < m; ++b) {
            const Cell& ca = g.vertices_[a];
            const Cell& cb = g.vertices_[b];
            bool e = false;
            if (kind.has_u() && u_edge(ca, cb)) e = true;
            if (!e && kind.has_d() && d_edge(ca, cb)) e = true;
            if (!e && kind.has_r() && r_edge(ca, cb)) e = true;
            if (!e && kind.has_c() && c_edge(ca, cb)) e = true;
            if (!e && kind.merged() && ca.i != ca.j && cb.i != cb.j) {
                // Overlay of the inner grid on the off-diagonal cells.
                Cell ia{ca.i, ca.j - 1};
                Cell ib{cb.i, cb.j - 1};
                if (kind.is_dmur()) e = u_edge(ia, ib) || r_edge(ia, ib);
                else e = d_edge(ia, ib) || r_edge(ia, ib);
            }
            if (e) {
                g.adj_[a][b] = g.adj_[b][a] = 1;
                g.edges_.insert({ca, cb});
            }
        }
    }
    return g;
}

int CoreGraph::index_of(const Cell& c) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), c);
    if (it == vertices_.end() || !(*it == c))
        throw invalid_input("cell " + cell_str(c) + " is not a vertex of B_" + std::to_string(n_));
    return static_cast<int>(it - vertices_.begin());
}

bool CoreGraph::adjacent(const Cell& a, const Cell& b) const {
    return adj_[static_cast<size_t>(index_of(a))][static_cast<size_t>(index_of(b))] != 0;
}

bool CoreGraph::independent(const std::vector<Cell>& cells) const {
    for (size_t a = 0; a < cells.size(); ++a)
        for (size_t b = a + 1; b < cells.size(); ++b)
            if (adjacent(cells[a], cells[b])) return false;
    return true;
}

void CoreGraph::for_each_independent_set(
    const std::function<void(const std::vector<Cell>&)>& fn) const {
    for_each_independent_set(static_cast<int>(vertices_.size()), fn);
}

void CoreGraph::for_each_independent_set(
    int max_size, const std::function<void(const std::vector<Cell>&)>& fn) const {
    const int m = static_cast<int>(vertices_.size());
    std::vector<int> chosen;
    std::vector<Cell> cells;
    // Include-first depth-first search over row-major vertices emits the
    // sets as sorted cell lists in lexicographic order, empty set first.
    std::function<void(int)> rec = [&](int start) {
        fn(cells);
        if (static_cast<int>(cells.size()) >= max_size) return;
        for (int v = start; v < m; ++v) {
            bool ok = true;
            for (int u : chosen)
                if (adj_[static_cast<size_t>(u)][static_cast<size_t>(v)]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(v);
            cells.push_back(vertices_[static_cast<size_t>(v)]);
            rec(v + 1);
            chosen.pop_back();
            cells.pop_back();
        }
    };
    if (max_size < 0) return;
    rec(0);
}

std::vector<std::vector<Cell>> CoreGraph::independent_sets() const {
    std::vector<std::vector<Cell>> out;
    for_each_independent_set([&](const std::vector<Cell>& s) { out.push_back(s); });
    return out;
}

std::vector<long long> CoreGraph::independent_set_counts() const {
    std::vector<long long> counts(vertices_.size() + 1, 0);
    size_t max_seen = 0;
    for_each_independent_set([&](const std::vector<Cell>& s) {
        ++counts[s.size()];
        max_seen = std::max(max_seen, s.size());
    });
    counts.resize(max_seen + 1);
    return counts;
}

std::string CoreGraph::dump() const {
    std::ostringstream os;
    os << kind_.str() << ' ' << n_ << "; edges:";
    // Orient each edge column-major ascending, sort the list row-major.
    std::vector<std::pair<Cell, Cell>> es;
    for (const auto& [a, b] : edges_) {
        auto colmajor = [](const Cell& x) { return std::pair<int, int>(x.j, x.i); };
        es.push_back(colmajor(a) <= colmajor(b) ? std::pair(a, b) : std::pair(b, a));
    }
    std::sort(es.begin(), es.end());
    for (size_t k = 0; k < es.size(); ++k) {
        os << (k ? ", " : " ") << cell_str(es[k].first) << '-' << cell_str(es[k].second);
    }
    return os.str();
}

char label_char(CellLabel l) {
    switch (l) {
        case CellLabel::y: return 'y';
        case CellLabel::z: return 'z';
        case CellLabel::s: return 's';
        case CellLabel::t: return 't';
    }
    return '?';
}

std::map<Cell, CellLabel> label(const std::vector<Cell>& I, LabelScheme scheme,
                                const CoreGraph& graph) {
    if (!graph.independent(I))
        throw invalid_input("label: the given cells are not independent in " + graph.kind().str());
    std::map<Cell, CellLabel> out;
    for (const Cell& v : I) {
        CellLabel l;
        switch (scheme) {
            case LabelScheme::rl: {
                bool right = false;
                for (const Cell& w : I)
                    if (w.i == v.i && w.j > v.j) right = true;
                l = right ? CellLabel::y : CellLabel::z;
                break;
            }
            case LabelScheme::phi: {
                bool same_col = false, north_east = false;
                for (const Cell& w : I) {
                    if (w == v) continue;
                    if (w.j == v.j) same_col = true;
                    if (w.i <= v.i && w.j >= v.j) north_east = true;
                }
                if (v.i != v.j) l = CellLabel::y;
                else if (same_col) l = CellLabel::z;
                else if (north_east) l = CellLabel::s;
                else l = CellLabel::t;
                break;
            }
            case LabelScheme::psi: {
                bool same_col = false;
                for (const Cell& w : I)
                    if (!(w == v) && w.j == v.j) same_col = true;
                if (v.i != v.j) l = CellLabel::y;
                else if (same_col) l = CellLabel::z;
                else l = CellLabel::s;
                break;
            }
            default: throw invalid_input("unknown label scheme");
        }
        out.emplace(v, l);
    }
    return out;
}

} // namespace stairgrid
