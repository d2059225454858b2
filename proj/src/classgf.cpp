#include "stairgrid/classgf.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "json.hpp"

namespace stairgrid {

namespace {

bool is_decreasing(const Perm& p) {
    for (int i = 1; i < p.size(); ++i)
        if (p.at(i) < p.at(i + 1)) return false;
    return true;
}

bool is_increasing(const Perm& p) {
    for (int i = 1; i < p.size(); ++i)
        if (p.at(i) > p.at(i + 1)) return false;
    return true;
}

/// pi = rho ⊕ delta with delta decreasing of size >= 2 (rho possibly empty),
/// i.e. the last sum-component of pi is a decreasing permutation of size >= 2.
bool splits_off_trailing_decreasing(const Perm& pi) {
    const auto comps = sum_components(pi);
    if (comps.empty()) return false;
    const Perm& last = comps.back();
    return last.size() >= 2 && is_decreasing(last);
}

/// pi = rho ⊖ tau with tau increasing and nonempty (rho possibly empty),
/// i.e. the last skew-component of pi is increasing.
bool splits_off_trailing_increasing(const Perm& pi) {
    const auto comps = skew_components(pi);
    if (comps.empty()) return false;
    return is_increasing(comps.back());
}

std::string check_none(const Perm&, const ClassGfOptions&) { return ""; }

std::string check_skew_indec(const Perm& pi, const ClassGfOptions&) {
    if (!skew_indecomposable(pi))
        return pi.str() + " is not skew-indecomposable";
    return "";
}

std::string check_sum_indec(const Perm& pi, const ClassGfOptions&) {
    if (!sum_indecomposable(pi))
        return pi.str() + " is not sum-indecomposable";
    return "";
}

std::string check_bstrip_sum_indec(const Perm& pi, const ClassGfOptions&) {
    const Perm b = bstrip(pi);
    if (b.size() < 2)
        return "bstrip(" + pi.str() + ") is too small to parametrise the row";
    if (!sum_indecomposable(b))
        return "bstrip(" + pi.str() + ") is not sum-indecomposable";
    return "";
}

std::string check_rdcu(const Perm& pi, const ClassGfOptions& opts) {
    std::string r = check_skew_indec(pi, opts);
    if (!r.empty()) return r;
    return check_bstrip_sum_indec(pi, opts);
}

std::string check_rd_2134(const Perm& pi, const ClassGfOptions& opts) {
    if (pi.size() < 2)
        return "parameter patterns of this row must have size >= 2";
    if (!opts.rd_2134_mesh_ok)
        return "mesh side condition not confirmed for nonempty P";
    if (!opts.rd_2134_mesh_ok(pi))
        return pi.str() + " rejected by the mesh side condition";
    if (splits_off_trailing_decreasing(pi))
        return pi.str() + " splits off a trailing decreasing run";
    return "";
}

std::string check_ru_2143(const Perm& pi, const ClassGfOptions& opts) {
    if (!opts.ru_2143_mesh_ok)
        return "mesh side condition not confirmed for nonempty P";
    if (!opts.ru_2143_mesh_ok(pi))
        return pi.str() + " rejected by the mesh side condition";
    if (splits_off_trailing_increasing(pi))
        return pi.str() + " splits off a trailing increasing run";
    return "";
}

struct Row {
    const char* id;
    std::vector<const char*> required;
    bool allow_P;
    std::string (*check)(const Perm&, const ClassGfOptions&);
    const char* cond_desc;
};

const std::vector<Row>& theorem_rows() {
    static const std::vector<Row> rows = {
        {"base_123", {"123"}, false, check_none, ""},
        {"base_132", {"132"}, false, check_none, ""},
        {"gf_upcore", {"2314", "3124"}, true, check_skew_indec,
         "skew-indecomposable"},
        {"gf_downcore", {"2413", "3142"}, true, check_sum_indec,
         "sum-indecomposable"},
        {"gf_rdcdrucu", {"2413", "3142", "2314", "3124"}, true, check_none,
         "no condition"},
        {"gf_rucupi", {"2314", "3124", "3142"}, true, check_skew_indec,
         "skew-indecomposable"},
        {"gf_rdcdpi", {"2413", "3142", "3124"}, true, check_bstrip_sum_indec,
         "bstrip sum-indecomposable"},
        {"gf_rdcu", {"2413", "3124"}, true, check_rdcu,
         "skew-indecomposable with sum-indecomposable bstrip"},
        {"rd_2134", {"2413", "2134"}, true, check_rd_2134,
         "mesh condition and no trailing decreasing split"},
        {"ru_2143", {"2314", "2143"}, true, check_ru_2143,
         "mesh condition and no trailing increasing split"},
    };
    return rows;
}

std::vector<Perm> parse_all(const std::vector<const char*>& texts) {
    std::vector<Perm> out;
    out.reserve(texts.size());
    for (const char* t : texts) out.push_back(Perm::parse(t));
    return out;
}

/// Splits the image basis into the row's required patterns plus patterns of
/// the shape 1⊕π; returns the extracted π's, or nullopt when the image is
/// not of that shape (including when rebuilding required ∪ extras does not
/// reproduce the image after redundancy stripping).
std::optional<std::vector<Perm>> split_parameters(const Basis& image,
                                                  const std::vector<Perm>& req) {
    std::vector<Perm> extras, P;
    for (const Perm& p : image.patterns()) {
        if (std::find(req.begin(), req.end(), p) != req.end()) continue;
        if (p.size() < 2 || p.at(1) != 1) return std::nullopt;
        std::vector<int> tail(p.values().begin() + 1, p.values().end());
        P.push_back(Perm::standardize(tail));
        extras.push_back(p);
    }
    std::vector<Perm> all = req;
    all.insert(all.end(), extras.begin(), extras.end());
    if (Basis(all) != image) return std::nullopt;
    return P;
}

std::string p_key(const std::vector<Perm>& P) {
    std::string k;
    for (const Perm& p : P) {
        k += p.str();
        k += ',';
    }
    return k;
}

// ---------------------------------------------------------------------------
// class_gf recursion
// ---------------------------------------------------------------------------

struct Ctx {
    int order;
    const ClassGfOptions* opts;
    std::map<std::string, ClassGf> memo; // canonical basis string -> result
    std::vector<std::string> stack;      // canonical keys being computed
};

ClassGf class_gf_rec(const Basis& basis, Ctx& ctx);

/// Computes a child class gf and appends its trace; flags the parent as
/// oracle-backed when the child subtree is.
Series child_series(const Basis& child, Ctx& ctx, GfTrace& parent) {
    ClassGf sub = class_gf_rec(child, ctx);
    parent.oracle_backed = parent.oracle_backed || sub.trace.oracle_backed;
    parent.children.push_back(std::move(sub.trace));
    return std::move(sub.series);
}

Basis make_basis(const std::vector<const char*>& req,
                 const std::vector<Perm>& extra) {
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

/// Evaluates the matched theorem's formula.  The B-series (the gf of the
/// theorem's own weight class) is either a recursive child or — when that
/// class is the one being enumerated — the unknown of a fixed-point
/// equation.  The optional C-series child is never self-referential.
Series compute_from_match(const TheoremMatch& m, const std::string& self_key,
                          Ctx& ctx, GfTrace& node) {
    const int N = ctx.order;
    const Series one = Series::constant(BigRat(1), N);
    const Series x = Series::x(N);
    const Series xover = series_div(x, one - x); // gf of Av⁺(12) / Av⁺(21)

    if (m.theorem == "base_123" || m.theorem == "base_132")
        return eval_U(xover, N);

    // The B-child: the weight class attached to the row.
    Basis b_child{std::vector<Perm>{}};
    if (m.theorem == "gf_upcore") b_child = make_basis({"2314", "3124"}, m.P);
    else if (m.theorem == "gf_downcore") b_child = make_basis({"2413", "3142"}, m.P);
    else if (m.theorem == "gf_rdcdrucu")
        b_child = make_basis({"2413", "3142", "2314", "3124"}, m.P);
    else if (m.theorem == "gf_rucupi")
        b_child = make_basis({"2314", "3124", "3142"}, m.P);
    else if (m.theorem == "gf_rdcdpi")
        b_child = make_basis({"2413", "3142", "3124"}, m.P);
    else if (m.theorem == "gf_rdcu") b_child = make_basis({"2413", "3124"}, m.P);
    else if (m.theorem == "rd_2134") b_child = make_basis({"2413", "2134"}, m.P);
    else if (m.theorem == "ru_2143") b_child = make_basis({"2314", "2143"}, m.P);
    else throw invalid_input("unknown theorem id " + m.theorem);

    // The C-child of the three rows that reparametrise by bstrip(P).
    std::optional<Series> c_series;
    if (m.theorem == "gf_rdcdpi" || m.theorem == "gf_rdcu")
        c_series = child_series(make_basis({"312"}, bstrip_all(m.P)), ctx, node);
    else if (m.theorem == "rd_2134")
        c_series = child_series(make_basis({"213"}, bstrip_all(m.P)), ctx, node);

    auto formula = [&](const Series& b) -> Series {
        if (m.theorem == "gf_upcore" || m.theorem == "gf_downcore")
            return eval_U(b - one, N);
        if (m.theorem == "gf_rdcdrucu") return eval_UDRC(b - one, N);
        if (m.theorem == "gf_rucupi") return eval_UDC(b - one, one, N);
        if (m.theorem == "gf_rdcdpi")
            return eval_UDC(*c_series - one, series_div(b - one, *c_series - one), N);
        if (m.theorem == "gf_rdcu")
            return eval_UD(*c_series - one, series_div(b - one, *c_series - one), N);
        if (m.theorem == "rd_2134")
            return eval_DmUR(xover, series_div(b - one - x, x), *c_series - one,
                             b - one, N);
        // ru_2143
        return eval_UmDR(xover, series_div(b - one - x, x), b - one, N);
    };

    if (b_child.canonical().str() == self_key) {
        node.self_reference = true;
        return solve_fixed_point(formula, N);
    }
    return formula(child_series(b_child, ctx, node));
}

ClassGf class_gf_rec(const Basis& basis, Ctx& ctx) {
    const std::string key = basis.canonical().str();
    if (auto it = ctx.memo.find(key); it != ctx.memo.end()) return it->second;
    if (std::find(ctx.stack.begin(), ctx.stack.end(), key) != ctx.stack.end())
        throw contraction_violation("circular class dependency at Av(" +
                                    basis.str() + ")");
    ctx.stack.push_back(key);

    GfTrace node;
    node.basis = basis.str();
    Series series(0);

    const std::vector<TheoremMatch> matches = detect(basis, *ctx.opts);
    if (matches.empty()) {
        if (ctx.order > ctx.opts->oracle_ceiling)
            throw resource_limit_error(
                "no theorem matches Av(" + basis.str() + ") and order " +
                std::to_string(ctx.order) + " exceeds the brute-force ceiling " +
                std::to_string(ctx.opts->oracle_ceiling));
        const auto levels = enumerate_class_levels(basis, ctx.order);
        std::vector<BigRat> coeffs;
        coeffs.reserve(levels.size());
        for (const auto& level : levels) coeffs.emplace_back(level.size());
        series = Series::from_coeffs(std::move(coeffs));
        node.theorem = "oracle";
        node.oracle_backed = true;
    } else {
        const TheoremMatch& m = matches.front();
        node.theorem = m.theorem;
        node.symmetry = symmetry_name(m.symmetry);
        for (const Perm& p : m.P) node.P.push_back(p.str());
        series = compute_from_match(m, key, ctx, node);
    }

    ctx.stack.pop_back();
    ClassGf result{std::move(series), std::move(node)};
    ctx.memo.emplace(key, result);
    return result;
}

} // namespace

const std::vector<Perm>& row_required_patterns(const std::string& row_id) {
    static std::map<std::string, std::vector<Perm>> cache = [] {
        std::map<std::string, std::vector<Perm>> m;
        for (const Row& row : theorem_rows()) m[row.id] = parse_all(row.required);
        return m;
    }();
    auto it = cache.find(row_id);
    if (it == cache.end())
        throw invalid_input("unknown theorem row id: " + row_id);
    return it->second;
}

std::optional<std::vector<Perm>> split_row_parameters(const std::string& row_id,
                                                      const Basis& basis) {
    return split_parameters(basis, row_required_patterns(row_id));
}

std::vector<TheoremMatch> detect(const Basis& basis) {
    return detect(basis, ClassGfOptions{});
}

std::vector<TheoremMatch> detect(const Basis& basis, const ClassGfOptions& opts) {
    std::vector<TheoremMatch> out;
    std::set<std::string> seen;
    for (const Row& row : theorem_rows()) {
        const std::vector<Perm> req = parse_all(row.required);
        for (int sym = 0; sym < kNumSymmetries; ++sym) {
            const Basis img = basis.image(sym);
            auto P = split_parameters(img, req);
            if (!P) continue;
            if (!row.allow_P && !P->empty()) continue;
            std::vector<std::string> conds;
            bool ok = true;
            for (const Perm& pi : *P) {
                const std::string fail = row.check(pi, opts);
                if (!fail.empty()) {
                    ok = false;
                    break;
                }
                conds.push_back(pi.str() + ": " + row.cond_desc);
            }
            if (!ok) continue;
            if (P->empty()) conds.emplace_back("P = ∅");
            const std::string key =
                std::string(row.id) + '|' + img.str() + '|' + p_key(*P);
            if (!seen.insert(key).second) continue;
            TheoremMatch match;
            match.theorem = row.id;
            match.symmetry = sym;
            match.image = img;
            match.P = *P;
            match.conditions = std::move(conds);
            out.push_back(std::move(match));
        }
    }
    return out;
}

ClassGf class_gf(const Basis& basis, int order) {
    return class_gf(basis, order, ClassGfOptions{});
}

ClassGf class_gf(const Basis& basis, int order, const ClassGfOptions& opts) {
    if (order < 0) throw invalid_input("class_gf: negative order");
    Ctx ctx{order, &opts, {}, {}};
    return class_gf_rec(basis, ctx);
}

namespace {

nlohmann::ordered_json trace_to_json(const GfTrace& t) {
    nlohmann::ordered_json j;
    j["theorem"] = t.theorem;
    j["symmetry"] = t.symmetry;
    j["basis"] = t.basis;
    j["P"] = t.P;
    j["self_reference"] = t.self_reference;
    j["oracle_backed"] = t.oracle_backed;
    auto arr = nlohmann::ordered_json::array();
    for (const GfTrace& c : t.children) arr.push_back(trace_to_json(c));
    j["children"] = std::move(arr);
    return j;
}

} // namespace

std::string GfTrace::json() const { return trace_to_json(*this).dump(); }

std::string WilfReport::str() const {
    if (equal) return "equal up to x^" + std::to_string(order);
    std::ostringstream os;
    os << "differ first at x^" << first_difference << ": "
       << gf1.coeff(first_difference) << " vs " << gf2.coeff(first_difference);
    return os.str();
}

WilfReport wilf_check(const Basis& b1, const Basis& b2, int order) {
    return wilf_check(b1, b2, order, ClassGfOptions{});
}

WilfReport wilf_check(const Basis& b1, const Basis& b2, int order,
                      const ClassGfOptions& opts) {
    const ClassGf g1 = class_gf(b1, order, opts);
    const ClassGf g2 = class_gf(b2, order, opts);
    WilfReport report;
    report.order = order;
    report.gf1 = g1.series;
    report.gf2 = g2.series;
    report.equal = true;
    for (int n = 0; n <= order; ++n) {
        if (g1.series.coeff(n) != g2.series.coeff(n)) {
            report.equal = false;
            report.first_difference = n;
            break;
        }
    }
    return report;
}

} // namespace stairgrid
