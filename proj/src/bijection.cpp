#include "stairgrid/bijection.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <sstream>
#include <tuple>

#include "json.hpp"

#include "stairgrid/classgf.hpp"

namespace stairgrid {

namespace {

const std::vector<BijectionScheme>& schemes() {
    using D = Direction;
    static const std::vector<BijectionScheme> table = {
        {"thm_123", "base_123", CoreKind::U(), LabelScheme::rl, D::decreasing,
         D::decreasing, false},
        {"thm_132", "base_132", CoreKind::D(), LabelScheme::rl, D::increasing,
         D::increasing, false},
        {"inf_upcore", "gf_upcore", CoreKind::U(), LabelScheme::rl,
         D::decreasing, D::decreasing, false},
        {"inf_downcore", "gf_downcore", CoreKind::D(), LabelScheme::rl,
         D::increasing, D::increasing, false},
        {"inf_udrc", "gf_rdcdrucu", CoreKind::UDRC(), LabelScheme::rl,
         D::decreasing, D::decreasing, false},
        {"inf_cu_cd_ru", "gf_rucupi", CoreKind::UDC(), LabelScheme::rl,
         D::decreasing, D::decreasing, false},
        {"inf_rd_cd_cu", "gf_rdcdpi", CoreKind::UDC(), LabelScheme::rl,
         D::increasing, D::increasing, false},
        {"inf_rd_cu", "gf_rdcu", CoreKind::UD(), LabelScheme::rl,
         D::increasing, D::decreasing, false},
        {"inf_rd_2134", "rd_2134", CoreKind::DmUR(), LabelScheme::phi,
         D::increasing, D::decreasing, true},
        {"inf_ru_2143", "ru_2143", CoreKind::UmDR(), LabelScheme::psi,
         D::decreasing, D::increasing, true},
    };
    return table;
}

std::vector<Perm> parse_all(std::initializer_list<const char*> texts) {
    std::vector<Perm> out;
    for (const char* t : texts) out.push_back(Perm::parse(t));
    return out;
}

Basis join(std::initializer_list<const char*> req, const std::vector<Perm>& extra) {
    std::vector<Perm> ps = parse_all(req);
    ps.insert(ps.end(), extra.begin(), extra.end());
    return Basis(std::move(ps));
}

std::vector<Perm> bstrip_all(const std::vector<Perm>& P) {
    std::vector<Perm> out;
    out.reserve(P.size());
    for (const Perm& p : P) out.push_back(bstrip(p));
    return out;
}

/// Per-label weight classes for a scheme applied with parameter set P.
/// Labels the scheme never produces are absent from the map.
std::map<CellLabel, Basis> weight_classes(const BijectionScheme& sch,
                                          const std::vector<Perm>& P) {
    using L = CellLabel;
    std::map<CellLabel, Basis> m;
    if (sch.id == "thm_123") {
        m.emplace(L::y, join({"12"}, {}));
        m.emplace(L::z, join({"12"}, {}));
    } else if (sch.id == "thm_132") {
        m.emplace(L::y, join({"21"}, {}));
        m.emplace(L::z, join({"21"}, {}));
    } else if (sch.id == "inf_upcore") {
        const Basis b = join({"2314", "3124"}, P);
        m.emplace(L::y, b);
        m.emplace(L::z, b);
    } else if (sch.id == "inf_downcore") {
        const Basis b = join({"2413", "3142"}, P);
        m.emplace(L::y, b);
        m.emplace(L::z, b);
    } else if (sch.id == "inf_udrc") {
        const Basis b = join({"2413", "3142", "2314", "3124"}, P);
        m.emplace(L::y, b);
        m.emplace(L::z, b);
    } else if (sch.id == "inf_cu_cd_ru") {
        const Basis b = join({"2314", "3124", "3142"}, P);
        m.emplace(L::y, b);
        m.emplace(L::z, b);
    } else if (sch.id == "inf_rd_cd_cu") {
        m.emplace(L::y, join({"312"}, bstrip_all(P)));
        m.emplace(L::z, join({"2413", "3142", "3124"}, P));
    } else if (sch.id == "inf_rd_cu") {
        m.emplace(L::y, join({"312"}, bstrip_all(P)));
        m.emplace(L::z, join({"2413", "3124"}, P));
    } else if (sch.id == "inf_rd_2134") {
        m.emplace(L::y, join({"12"}, {}));
        m.emplace(L::z, join({"2413", "2134"}, P));
        m.emplace(L::s, join({"213"}, bstrip_all(P)));
        m.emplace(L::t, join({"2413", "2134"}, P));
    } else if (sch.id == "inf_ru_2143") {
        m.emplace(L::y, join({"21"}, {}));
        m.emplace(L::z, join({"2314", "2143"}, P));
        m.emplace(L::s, join({"2314", "2143"}, P));
    } else {
        throw invalid_input("unknown bijection theorem: " + sch.id);
    }
    return m;
}

std::vector<Perm> theorem_parameters(const BijectionScheme& sch,
                                     const Basis& basis) {
    auto P = split_row_parameters(sch.gf_row, basis);
    if (!P)
        throw invalid_input("Av(" + basis.str() + ") does not match theorem " +
                            sch.id + " at the identity symmetry");
    return *P;
}

/// The weight w = α·max·β with the maximum removed, and the split position
/// |α| (only meaningful for adjusted cells).
std::pair<std::vector<int>, int> realized_pattern(const WeightedCell& wc) {
    if (!wc.adjusted) return {wc.weight.values(), -1};
    const int maxpos = wc.weight.position_of(wc.weight.size());
    std::vector<int> rho;
    rho.reserve(static_cast<size_t>(wc.weight.size()) - 1);
    for (int p = 1; p <= wc.weight.size(); ++p)
        if (p != maxpos) rho.push_back(wc.weight.at(p));
    return {rho, maxpos - 1};
}

/// rho with a fresh maximum inserted after its first `alpha` letters.
Perm insert_max(const Perm& rho, int alpha) {
    std::vector<int> vals = rho.values();
    vals.insert(vals.begin() + alpha, rho.size() + 1);
    return Perm(vals);
}

constexpr long kAlphaGroup = -2;
constexpr long kMinimaGroup = -3;
constexpr long kBetaGroup = std::numeric_limits<int>::max();

Perm realize_impl(const BijectionScheme& sch, const WeightedSet& W) {
    const int n = W.n;
    std::vector<Cell> I;
    I.reserve(W.cells.size());
    for (const WeightedCell& wc : W.cells) I.push_back(wc.cell);
    const CoreGraph g = CoreGraph::build(sch.kind, n);
    if (!g.independent(I))
        throw invalid_input("realize: cells are not independent in " +
                            sch.kind.str() + "(B_" + std::to_string(n) + ")");
    const auto labs = label(I, sch.labels, g);
    for (const WeightedCell& wc : W.cells) {
        if (wc.weight.empty())
            throw invalid_input("realize: empty weight at " + cell_str(wc.cell));
        if (labs.at(wc.cell) != wc.label)
            throw invalid_input("realize: label mismatch at " + cell_str(wc.cell));
        const bool want_adjusted =
            sch.merged && labs.at(wc.cell) == CellLabel::z;
        if (wc.adjusted != want_adjusted)
            throw invalid_input("realize: wrong adjusted flag at " +
                                cell_str(wc.cell));
        if (wc.adjusted && wc.weight.size() < 2)
            throw invalid_input("realize: z-cell weight must have size >= 2");
    }

    struct Pt {
        std::array<long, 3> pos, val;
    };
    std::vector<Pt> pts;
    for (int j = 1; j <= n; ++j)
        pts.push_back({{j, kMinimaGroup, 0}, {2L * (n - j), 0, 0}});
    for (const WeightedCell& wc : W.cells) {
        const auto [rho, split] = realized_pattern(wc);
        const int i = wc.cell.i;
        const int j = wc.cell.j;
        for (int t = 1; t <= static_cast<int>(rho.size()); ++t) {
            long colgroup;
            if (sch.merged && i == j) {
                // Diagonal cells of merged cores sit outside the column
                // direction: a z-cell splits α before / β after the column's
                // off-diagonal points; other diagonal cells have no column
                // mates, so the α slot is as good as any.
                colgroup = (wc.adjusted && t > split) ? kBetaGroup : kAlphaGroup;
            } else {
                colgroup = (sch.cols == Direction::decreasing) ? i : (j - i);
            }
            const long rowgroup =
                (sch.rows == Direction::decreasing) ? (n - j) : j;
            pts.push_back({{j, colgroup, t},
                           {2L * (n - i) + 1, rowgroup, rho[static_cast<size_t>(t) - 1]}});
        }
    }

    const size_t m = pts.size();
    std::vector<size_t> by_pos(m), by_val(m);
    for (size_t k = 0; k < m; ++k) by_pos[k] = by_val[k] = k;
    std::sort(by_pos.begin(), by_pos.end(),
              [&](size_t a, size_t b) { return pts[a].pos < pts[b].pos; });
    std::sort(by_val.begin(), by_val.end(),
              [&](size_t a, size_t b) { return pts[a].val < pts[b].val; });
    std::vector<int> value_of(m);
    for (size_t r = 0; r < m; ++r) value_of[by_val[r]] = static_cast<int>(r) + 1;
    std::vector<int> one_line;
    one_line.reserve(m);
    for (size_t k = 0; k < m; ++k) one_line.push_back(value_of[by_pos[k]]);
    return Perm(std::move(one_line));
}

std::optional<WeightedSet> encode_side_impl(const BijectionScheme& sch,
                                            const std::map<CellLabel, Basis>& classes,
                                            const Perm& sigma,
                                            std::string* reason) {
    auto fail = [&](const std::string& why) -> std::optional<WeightedSet> {
        if (reason) *reason = why;
        return std::nullopt;
    };
    const StaircasePlot plot = staircase_plot(sigma);
    const StaircaseEncoding enc = staircase_encode(sigma);
    const int n = static_cast<int>(plot.minima_pos.size());
    std::vector<Cell> I;
    for (const auto& [cell, pat] : enc.cells()) I.push_back(cell);
    const CoreGraph g = CoreGraph::build(sch.kind, n);
    if (!g.independent(I))
        return fail("active cells are not independent in " + sch.kind.str() +
                    "(B_" + std::to_string(n) + ")");
    const auto labs = label(I, sch.labels, g);

    WeightedSet W;
    W.n = n;
    for (const Cell& cell : I) {
        const CellLabel lab = labs.at(cell);
        const bool adjusted = sch.merged && lab == CellLabel::z;
        Perm w;
        if (!adjusted) {
            w = enc.cells().at(cell);
        } else {
            // Recover the deleted maximum's insertion point from the plot:
            // α is left of, β right of the column's off-diagonal points.
            int lo = std::numeric_limits<int>::max();
            int hi = std::numeric_limits<int>::min();
            for (const auto& [c2, cpts] : plot.points) {
                if (c2.j != cell.j || c2.i >= cell.i) continue;
                for (const auto& pv : cpts) {
                    lo = std::min(lo, pv.first);
                    hi = std::max(hi, pv.first);
                }
            }
            if (lo > hi)
                return fail("z-labelled cell " + cell_str(cell) +
                            " has no off-diagonal column points");
            int alpha = 0;
            for (const auto& pv : plot.points.at(cell)) {
                if (pv.first < lo) ++alpha;
                else if (pv.first <= hi)
                    return fail("diagonal points of " + cell_str(cell) +
                                " interleave the column's off-diagonal points");
            }
            w = insert_max(enc.cells().at(cell), alpha);
        }
        const auto cls = classes.find(lab);
        if (cls == classes.end())
            return fail(std::string("label ") + label_char(lab) +
                        " is impossible under theorem " + sch.id);
        if (!cls->second.avoided_by(w))
            return fail("weight " + w.str() + " at " + cell_str(cell) +
                        " is outside Av(" + cls->second.str() + ")");
        W.cells.push_back({cell, lab, w, adjusted});
    }
    return W;
}

} // namespace

int WeightedSet::total() const {
    int t = n;
    for (const WeightedCell& wc : cells) t += wc.realized_size();
    return t;
}

std::string WeightedSet::str() const {
    std::ostringstream os;
    os << 'B' << n << " {";
    for (size_t k = 0; k < cells.size(); ++k) {
        const WeightedCell& wc = cells[k];
        os << (k ? "; " : "") << cell_str(wc.cell) << ':'
           << label_char(wc.label) << '=' << wc.weight.str();
        if (wc.adjusted) os << '*';
    }
    os << '}';
    return os.str();
}

std::vector<std::string> bijection_theorem_ids() {
    std::vector<std::string> out;
    for (const BijectionScheme& s : schemes()) out.push_back(s.id);
    return out;
}

const BijectionScheme& bijection_scheme(const std::string& theorem_id) {
    for (const BijectionScheme& s : schemes())
        if (s.id == theorem_id || s.gf_row == theorem_id) return s;
    throw invalid_input("unknown bijection theorem: " + theorem_id);
}

Basis bijection_weight_class(const std::string& theorem_id, const Basis& basis,
                             CellLabel label) {
    const BijectionScheme& sch = bijection_scheme(theorem_id);
    const auto classes = weight_classes(sch, theorem_parameters(sch, basis));
    const auto it = classes.find(label);
    if (it == classes.end())
        throw invalid_input(std::string("label ") + label_char(label) +
                            " never occurs under theorem " + sch.id);
    return it->second;
}

std::vector<WeightedSet> weighted_sets(const std::string& theorem_id,
                                       const Basis& basis, int n, int total) {
    if (n < 0 || total < n)
        throw invalid_input("weighted_sets: need 0 <= n <= total");
    const BijectionScheme& sch = bijection_scheme(theorem_id);
    const auto classes = weight_classes(sch, theorem_parameters(sch, basis));

    // Weight-class members by exact size, computed once per class.
    std::map<std::string, std::vector<std::vector<Perm>>> members;
    for (const auto& [lab, cls] : classes) {
        auto& lv = members[cls.str()];
        if (lv.empty()) lv = enumerate_class_levels(cls, total - n + 1);
    }

    std::vector<WeightedSet> out;
    const CoreGraph g = CoreGraph::build(sch.kind, n);
    const int budget = total - n;
    g.for_each_independent_set(budget, [&](const std::vector<Cell>& I) {
        const auto labs = label(I, sch.labels, g);
        std::vector<WeightedCell> cur;
        cur.reserve(I.size());
        std::function<void(size_t, int)> rec = [&](size_t idx, int left) {
            if (idx == I.size()) {
                if (left == 0) out.push_back(WeightedSet{n, cur});
                return;
            }
            const Cell cell = I[idx];
            const CellLabel lab = labs.at(cell);
            const bool adjusted = sch.merged && lab == CellLabel::z;
            const auto& levels = members.at(classes.at(lab).str());
            const int spare = static_cast<int>(I.size() - idx - 1);
            for (int c = 1; c + spare <= left; ++c) {
                const int wsize = c + (adjusted ? 1 : 0);
                if (wsize >= static_cast<int>(levels.size())) break;
                for (const Perm& w : levels[static_cast<size_t>(wsize)]) {
                    cur.push_back({cell, lab, w, adjusted});
                    rec(idx + 1, left - c);
                    cur.pop_back();
                }
            }
        };
        rec(0, budget);
    });
    return out;
}

Perm realize(const std::string& theorem_id, const WeightedSet& w) {
    return realize_impl(bijection_scheme(theorem_id), w);
}

std::optional<WeightedSet> encode_side(const std::string& theorem_id,
                                       const Basis& basis, const Perm& sigma,
                                       std::string* reason) {
    const BijectionScheme& sch = bijection_scheme(theorem_id);
    const auto classes = weight_classes(sch, theorem_parameters(sch, basis));
    return encode_side_impl(sch, classes, sigma, reason);
}

std::string BijectionReport::summary() const {
    std::ostringstream os;
    os << theorem << " on Av(" << basis << "), totals <= " << max_total << ": "
       << (pass ? "pass" : "FAIL");
    long long sets = 0;
    for (const PairCheck& p : pairs) sets += p.weighted_count;
    os << " (" << sets << " weighted sets checked)";
    if (!pass) {
        for (const PairCheck& p : pairs) {
            if (p.pass()) continue;
            os << "\n  n=" << p.n << " total=" << p.total << ": "
               << p.weighted_count << " weighted vs " << p.class_count
               << " class members";
            if (!p.injective) os << " [not injective]";
            if (!p.image_match) os << " [image mismatch]";
            if (!p.detail.empty()) os << " — " << p.detail;
        }
    }
    return os.str();
}

std::string BijectionReport::json() const {
    nlohmann::ordered_json j;
    j["theorem"] = theorem;
    j["basis"] = basis;
    j["max_total"] = max_total;
    j["pass"] = pass;
    auto arr = nlohmann::ordered_json::array();
    for (const PairCheck& p : pairs) {
        nlohmann::ordered_json e;
        e["n"] = p.n;
        e["total"] = p.total;
        e["weighted_count"] = p.weighted_count;
        e["class_count"] = p.class_count;
        e["injective"] = p.injective;
        e["image_match"] = p.image_match;
        e["pass"] = p.pass();
        if (!p.detail.empty()) e["detail"] = p.detail;
        arr.push_back(std::move(e));
    }
    j["pairs"] = std::move(arr);
    return j.dump();
}

BijectionReport verify_bijection(const std::string& theorem_id,
                                 const Basis& basis, int max_total) {
    const BijectionScheme& sch = bijection_scheme(theorem_id);
    const auto classes = weight_classes(sch, theorem_parameters(sch, basis));

    // Class side, stratified by (minima, size).
    std::map<std::pair<int, int>, std::vector<Perm>> class_side;
    {
        const auto levels = enumerate_class_levels(basis, max_total);
        for (const auto& level : levels)
            for (const Perm& p : level) {
                const int n = static_cast<int>(p.left_to_right_minima().size());
                class_side[{n, p.size()}].push_back(p);
            }
    }

    std::map<std::string, std::vector<std::vector<Perm>>> members;
    for (const auto& [lab, cls] : classes) {
        auto& lv = members[cls.str()];
        // +1: an adjusted z-weight is one longer than the points it realizes.
        if (lv.empty()) lv = enumerate_class_levels(cls, max_total + 1);
    }

    BijectionReport report;
    report.theorem = sch.id;
    report.basis = basis.str();
    report.max_total = max_total;
    report.pass = true;

    for (int n = 0; n <= max_total; ++n) {
        const CoreGraph g = CoreGraph::build(sch.kind, n);
        const int budget = max_total - n;
        // realized[total] = permutations produced, with their sources.
        std::map<int, std::vector<std::pair<Perm, std::string>>> realized;

        g.for_each_independent_set(budget, [&](const std::vector<Cell>& I) {
            const auto labs = label(I, sch.labels, g);
            std::vector<WeightedCell> cur;
            std::function<void(size_t, int)> rec = [&](size_t idx, int left) {
                if (idx == I.size()) {
                    WeightedSet W{n, cur};
                    const int total = n + (budget - left);
                    realized[total].emplace_back(realize_impl(sch, W), W.str());
                    return;
                }
                const Cell cell = I[idx];
                const CellLabel lab = labs.at(cell);
                const bool adjusted = sch.merged && lab == CellLabel::z;
                const auto& levels = members.at(classes.at(lab).str());
                const int spare = static_cast<int>(I.size() - idx - 1);
                for (int c = 1; c + spare <= left; ++c) {
                    const int wsize = c + (adjusted ? 1 : 0);
                    if (wsize >= static_cast<int>(levels.size())) break;
                    for (const Perm& w : levels[static_cast<size_t>(wsize)]) {
                        cur.push_back({cell, lab, w, adjusted});
                        rec(idx + 1, left - c);
                        cur.pop_back();
                    }
                }
            };
            rec(0, budget);
        });

        for (int total = n; total <= max_total; ++total) {
            PairCheck pc;
            pc.n = n;
            pc.total = total;
            auto& produced = realized[total];
            std::sort(produced.begin(), produced.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            pc.weighted_count = static_cast<long long>(produced.size());
            for (size_t k = 0; k + 1 < produced.size(); ++k) {
                if (produced[k].first == produced[k + 1].first) {
                    pc.injective = false;
                    pc.detail = "both " + produced[k].second + " and " +
                                produced[k + 1].second + " realize " +
                                produced[k].first.str();
                    break;
                }
            }
            auto it = class_side.find({n, total});
            static const std::vector<Perm> kNone;
            const std::vector<Perm>& expect = it == class_side.end() ? kNone : it->second;
            pc.class_count = static_cast<long long>(expect.size());
            // expect is sorted (oracle emits lexicographic, minima stratification preserves order per size)
            size_t a = 0, b = 0;
            while (pc.image_match && (a < produced.size() || b < expect.size())) {
                if (a < produced.size() && b < expect.size() &&
                    produced[a].first == expect[b]) {
                    ++a;
                    ++b;
                } else if (b >= expect.size() ||
                           (a < produced.size() && produced[a].first < expect[b])) {
                    pc.image_match = false;
                    pc.detail = "realized " + produced[a].first.str() + " (from " +
                                produced[a].second + ") is not a class member here";
                } else {
                    pc.image_match = false;
                    pc.detail = "class member " + expect[b].str() +
                                " is not realized by any weighted set";
                }
            }
            if (!pc.pass()) report.pass = false;
            report.pairs.push_back(std::move(pc));
        }
    }
    return report;
}

} // namespace stairgrid
