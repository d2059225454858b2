#include <array>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "stairgrid/core_graphs.hpp"
#include "stairgrid/gf.hpp"
#include "stairgrid/perm.hpp"

using namespace stairgrid;

namespace {

const std::vector<long long> kCatalan{1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
const std::vector<long long> kSchroeder{1, 1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098};

Series xover(int N) { // x/(1-x): one weight of every positive size
    return series_div(Series::x(N), Series::constant(BigRat(1), N) - Series::x(N));
}

/// Extracts [x^g] of `f` as a polynomial in its markers: evaluates on the
/// integer grid {0..dims[a]-1} per axis (row-major, last axis fastest) and
/// interpolates.  dims[a] must exceed the marker-a degree.
std::vector<BigRat> marker_coeffs(
    int g, const std::vector<int>& dims,
    const std::function<Series(const std::vector<BigRat>&, int)>& f) {
    std::vector<BigRat> vals;
    std::vector<int> idx(dims.size(), 0);
    for (;;) {
        std::vector<BigRat> nodes;
        for (int v : idx) nodes.emplace_back(v);
        vals.push_back(f(nodes, g).coeff(g));
        int a = static_cast<int>(dims.size()) - 1;
        while (a >= 0 && ++idx[static_cast<size_t>(a)] == dims[static_cast<size_t>(a)]) {
            idx[static_cast<size_t>(a)] = 0;
            --a;
        }
        if (a < 0) break;
    }
    return tensor_interpolate_on_integer_grid(std::move(vals), dims);
}

size_t flat_index(const std::vector<int>& dims, const std::vector<int>& at) {
    size_t f = 0;
    for (size_t a = 0; a < dims.size(); ++a)
        f = f * static_cast<size_t>(dims[a]) + static_cast<size_t>(at[a]);
    return f;
}

int occupied_rows(const std::vector<Cell>& I) {
    std::set<int> rows;
    for (const Cell& c : I) rows.insert(c.i);
    return static_cast<int>(rows.size());
}

} // namespace

TEST_CASE("interpolation on integer nodes") {
    // p(t) = t^3 - 2t + 1
    const std::vector<BigRat> coeffs = interpolate_on_integer_nodes(
        {BigRat(1), BigRat(0), BigRat(5), BigRat(22)});
    CHECK(coeffs == std::vector<BigRat>{1, -2, 0, 1});
    CHECK(interpolate_on_integer_nodes({BigRat(7)}) == std::vector<BigRat>{7});
}

TEST_CASE("tensor interpolation recovers bivariate coefficients") {
    // p(u, v) = (1 + 2u)(3 + v^2), degrees 1 and 2: dims {2, 3}.
    const std::vector<int> dims{2, 3};
    std::vector<BigRat> vals;
    for (int u = 0; u <= 1; ++u)
        for (int v = 0; v <= 2; ++v) vals.emplace_back((1 + 2 * u) * (3 + v * v));
    const auto coeffs = tensor_interpolate_on_integer_grid(std::move(vals), dims);
    CHECK(coeffs == std::vector<BigRat>{3, 0, 1, 6, 0, 2});
    CHECK_THROWS_AS(
        tensor_interpolate_on_integer_grid({BigRat(1)}, std::vector<int>{2}),
        invalid_input);
}

TEST_CASE("all families collapse to the geometric series at zero markers") {
    const int N = 9;
    const Series zero(N);
    for (const Series& f :
         {eval_U(zero, N), eval_UDRC(zero, N), eval_UDC(zero, zero, N),
          eval_UD(zero, zero, N), eval_DmUR(zero, zero, zero, zero, N),
          eval_UmDR(zero, zero, zero, N)}) {
        for (int k = 0; k <= N; ++k) CHECK(f.coeff(k) == 1);
    }
}

TEST_CASE("up-core family with one weight per size gives Catalan") {
    const Series f = eval_U(xover(10), 10);
    for (int k = 0; k <= 10; ++k)
        CHECK(f.coeff(k) == kCatalan[static_cast<size_t>(k)]);
}

TEST_CASE("up-core family counts independent sets by size") {
    // Pinned: [x^2 y^1] = 3.
    const auto b2 = marker_coeffs(2, {4}, [](const std::vector<BigRat>& t, int N) {
        return eval_U(Series::constant(t[0], N), N);
    });
    CHECK(b2 == std::vector<BigRat>{1, 3, 3, 1});
    // Against the graph DFS for g <= 5 (the y marker counts all cells).
    for (int g = 1; g <= 5; ++g) {
        const auto coeffs =
            marker_coeffs(g, {2 * g}, [](const std::vector<BigRat>& t, int N) {
                return eval_U(Series::constant(t[0], N), N);
            });
        const auto dfs = CoreGraph::build(CoreKind::U(), g).independent_set_counts();
        for (int k = 0; k < 2 * g; ++k) {
            const long long want =
                k < static_cast<int>(dfs.size()) ? dfs[static_cast<size_t>(k)] : 0;
            CHECK(coeffs[static_cast<size_t>(k)] == want);
        }
    }
    // Evaluated at y = 1 the family totals the independent sets.
    const Series tot = eval_U(Series::constant(BigRat(1), 5), 5);
    const std::vector<long long> totals{1, 2, 8, 48, 352, 2880};
    for (int g = 0; g <= 5; ++g) CHECK(tot.coeff(g) == totals[static_cast<size_t>(g)]);
}

TEST_CASE("up-core family agrees with its quadratic closed form") {
    // yF^2 - ((1-x)(1+y)+y)F + (1+y) = 0, root regular at y = 0.
    const int N = 11;
    const Series y = xover(N);
    const Series one = Series::constant(BigRat(1), N);
    const Series b = (one - Series::x(N)) * (y + BigRat(1)) + y;
    const Series disc = b * b - y * (y + BigRat(1)) * BigRat(4);
    const Series root = (b - series_sqrt(disc));
    const Series closed = series_div(root, y * BigRat(2)); // order drops by val(y)
    const Series fixed = eval_U(y, N);
    CHECK(closed.order() == N - 1);
    CHECK(closed.agrees_with(fixed, N - 1));
}

TEST_CASE("Schroeder closed form is a fixed point of the up-core family") {
    const int N = 10;
    const Series one = Series::constant(BigRat(1), N);
    const Series x = Series::x(N);
    const Series disc = one - x * BigRat(6) + x * x;
    const Series schroeder = (one * BigRat(3) - x - series_sqrt(disc)) * BigRat(1, 2);
    for (int k = 0; k <= N; ++k)
        CHECK(schroeder.coeff(k) == kSchroeder[static_cast<size_t>(k)]);
    // Self-consistency: weights drawn from the class itself reproduce it.
    CHECK(eval_U(schroeder - BigRat(1), N) == schroeder);
}

TEST_CASE("Catalan radical form matches the fixed-point route") {
    const int N = 10;
    const Series one = Series::constant(BigRat(1), N);
    const Series x = Series::x(N);
    const Series cat = series_div(one - series_sqrt(one - x * BigRat(4)), x * BigRat(2));
    for (int k = 0; k <= N - 1; ++k)
        CHECK(cat.coeff(k) == kCatalan[static_cast<size_t>(k)]);
}

TEST_CASE("four-core family: pinned coefficients and graph agreement") {
    const auto b2 = marker_coeffs(2, {4}, [](const std::vector<BigRat>& t, int N) {
        return eval_UDRC(Series::constant(t[0], N), N);
    });
    CHECK(b2[1] == 3); // [x^2 y^1]
    CHECK(b2[2] == 1); // [x^2 y^2]
    CHECK(b2[3] == 0);
    for (int g = 1; g <= 5; ++g) {
        const auto coeffs =
            marker_coeffs(g, {2 * g}, [](const std::vector<BigRat>& t, int N) {
                return eval_UDRC(Series::constant(t[0], N), N);
            });
        const auto dfs =
            CoreGraph::build(CoreKind::UDRC(), g).independent_set_counts();
        for (int k = 0; k < 2 * g; ++k) {
            const long long want =
                k < static_cast<int>(dfs.size()) ? dfs[static_cast<size_t>(k)] : 0;
            CHECK(coeffs[static_cast<size_t>(k)] == want);
        }
    }
}

TEST_CASE("two-marker families count cells and occupied rows") {
    struct Case {
        CoreKind kind;
        std::function<Series(const std::vector<BigRat>&, int)> eval;
    };
    const std::vector<Case> cases{
        {CoreKind::UDC(),
         [](const std::vector<BigRat>& t, int N) {
             return eval_UDC(Series::constant(t[0], N), Series::constant(t[1], N), N);
         }},
        {CoreKind::UD(),
         [](const std::vector<BigRat>& t, int N) {
             return eval_UD(Series::constant(t[0], N), Series::constant(t[1], N), N);
         }}};
    for (const Case& c : cases) {
        for (int g = 1; g <= 4; ++g) {
            const std::vector<int> dims{2 * g, g + 1};
            const auto coeffs = marker_coeffs(g, dims, c.eval);
            std::map<std::pair<int, int>, long long> want;
            const CoreGraph graph = CoreGraph::build(c.kind, g);
            graph.for_each_independent_set([&](const std::vector<Cell>& I) {
                ++want[{static_cast<int>(I.size()), occupied_rows(I)}];
            });
            for (int a = 0; a < dims[0]; ++a)
                for (int b = 0; b < dims[1]; ++b) {
                    const auto it = want.find({a, b});
                    const long long expect = it == want.end() ? 0 : it->second;
                    CHECK(coeffs[flat_index(dims, {a, b})] == expect);
                }
        }
    }
    // Spec pins.
    const auto udc1 = marker_coeffs(1, {2, 2}, cases[0].eval);
    CHECK(udc1[flat_index({2, 2}, {1, 1})] == 1); // [x y z]
    const auto udc2 = marker_coeffs(2, {4, 3}, cases[0].eval);
    CHECK(udc2[flat_index({4, 3}, {2, 1})] == 1); // [x^2 y^2 z]
    CHECK(udc2[flat_index({4, 3}, {2, 2})] == 1); // [x^2 y^2 z^2]
    const auto ud1 = marker_coeffs(1, {2, 2}, cases[1].eval);
    CHECK(ud1[flat_index({2, 2}, {1, 1})] == 1);
    const auto ud2 = marker_coeffs(2, {4, 3}, cases[1].eval);
    CHECK(ud2[flat_index({4, 3}, {2, 1})] == 1);
    CHECK(ud2[flat_index({4, 3}, {2, 2})] == 2);
    CHECK(ud2[flat_index({4, 3}, {3, 2})] == 1); // [x^2 y^3 z^2]
}

TEST_CASE("merged families count label multiplicities") {
    // Four-letter labelling on the down-merged core.
    for (int g = 1; g <= 3; ++g) {
        const std::vector<int> dims{std::max(1, g), g + 1, g + 1, g + 1};
        const auto coeffs =
            marker_coeffs(g, dims, [](const std::vector<BigRat>& t, int N) {
                return eval_DmUR(Series::constant(t[0], N), Series::constant(t[1], N),
                                 Series::constant(t[2], N), Series::constant(t[3], N),
                                 N);
            });
        std::map<std::array<int, 4>, long long> want;
        const CoreGraph graph = CoreGraph::build(CoreKind::DmUR(), g);
        graph.for_each_independent_set([&](const std::vector<Cell>& I) {
            const auto labs = label(I, LabelScheme::phi, graph);
            std::array<int, 4> key{0, 0, 0, 0};
            for (const auto& [cell, lab] : labs) ++key[static_cast<size_t>(lab)];
            ++want[key];
        });
        for (int a = 0; a < dims[0]; ++a)
            for (int b = 0; b < dims[1]; ++b)
                for (int c = 0; c < dims[2]; ++c)
                    for (int d = 0; d < dims[3]; ++d) {
                        const auto it = want.find(std::array<int, 4>{a, b, c, d});
                        const long long expect = it == want.end() ? 0 : it->second;
                        CHECK(coeffs[flat_index(dims, {a, b, c, d})] == expect);
                    }
    }
    // Three-letter labelling on the up-merged core.
    for (int g = 1; g <= 3; ++g) {
        const std::vector<int> dims{std::max(1, g), g + 1, g + 1};
        const auto coeffs =
            marker_coeffs(g, dims, [](const std::vector<BigRat>& t, int N) {
                return eval_UmDR(Series::constant(t[0], N), Series::constant(t[1], N),
                                 Series::constant(t[2], N), N);
            });
        std::map<std::array<int, 3>, long long> want;
        const CoreGraph graph = CoreGraph::build(CoreKind::UmDR(), g);
        graph.for_each_independent_set([&](const std::vector<Cell>& I) {
            const auto labs = label(I, LabelScheme::psi, graph);
            std::array<int, 3> key{0, 0, 0};
            for (const auto& [cell, lab] : labs) ++key[static_cast<size_t>(lab)];
            ++want[key];
        });
        for (int a = 0; a < dims[0]; ++a)
            for (int b = 0; b < dims[1]; ++b)
                for (int c = 0; c < dims[2]; ++c) {
                    const auto it = want.find(std::array<int, 3>{a, b, c});
                    const long long expect = it == want.end() ? 0 : it->second;
                    CHECK(coeffs[flat_index(dims, {a, b, c})] == expect);
                }
    }
}

TEST_CASE("merged-family spec pins") {
    const auto dm1 = marker_coeffs(1, {1, 2, 2, 2}, [](const std::vector<BigRat>& t, int N) {
        return eval_DmUR(Series::constant(t[0], N), Series::constant(t[1], N),
                         Series::constant(t[2], N), Series::constant(t[3], N), N);
    });
    CHECK(dm1[flat_index({1, 2, 2, 2}, {0, 0, 0, 1})] == 1); // [x t]
    CHECK(dm1[flat_index({1, 2, 2, 2}, {0, 0, 0, 0})] == 1); // empty set
    const auto dm2 = marker_coeffs(2, {2, 3, 3, 3}, [](const std::vector<BigRat>& t, int N) {
        return eval_DmUR(Series::constant(t[0], N), Series::constant(t[1], N),
                         Series::constant(t[2], N), Series::constant(t[3], N), N);
    });
    CHECK(dm2[flat_index({2, 3, 3, 3}, {1, 0, 0, 0})] == 1); // [x^2 y]
    CHECK(dm2[flat_index({2, 3, 3, 3}, {1, 1, 0, 0})] == 1); // [x^2 y z]

    const auto um1 = marker_coeffs(1, {1, 2, 2}, [](const std::vector<BigRat>& t, int N) {
        return eval_UmDR(Series::constant(t[0], N), Series::constant(t[1], N),
                         Series::constant(t[2], N), N);
    });
    CHECK(um1[flat_index({1, 2, 2}, {0, 0, 1})] == 1); // [x s]
    const auto um2 = marker_coeffs(2, {2, 3, 3}, [](const std::vector<BigRat>& t, int N) {
        return eval_UmDR(Series::constant(t[0], N), Series::constant(t[1], N),
                         Series::constant(t[2], N), N);
    });
    CHECK(um2[flat_index({2, 3, 3}, {1, 0, 0})] == 1); // [x^2 y]
}

TEST_CASE("four-core self-consistent class matches its radical closed form") {
    const int N = 9;
    // Fixed point A = F_UDRC(x, A - 1).
    const Series fixed = solve_fixed_point(
        [&](const Series& a) { return eval_UDRC(a - BigRat(1), a.order()); }, N);
    // (x^2 - x - sqrt(x^4 - 2x^3 + 7x^2 - 6x + 1) + 1) / (2x)
    const Series one = Series::constant(BigRat(1), N + 1);
    const Series x = Series::x(N + 1);
    const Series x2 = x * x;
    const Series disc = x2 * x2 - x2 * x * BigRat(2) + x2 * BigRat(7) - x * BigRat(6) + one;
    const Series closed = series_div(x2 - x - series_sqrt(disc) + one, x * BigRat(2));
    CHECK(closed.order() == N);
    CHECK(closed.coeff(4) == 20);
    CHECK(closed.agrees_with(fixed, N));
}

TEST_CASE("slot order minimums are enforced") {
    CHECK_THROWS_AS(eval_U(Series::constant(BigRat(0), 2), 10), invalid_input);
    CHECK_THROWS_AS(eval_UDRC(Series::constant(BigRat(0), 5), 10), invalid_input);
    // y of valuation 1 buys the z slot one order of slack, no more.
    const int N = 8;
    CHECK_NOTHROW(eval_UDC(xover(N), Series::constant(BigRat(1), N - 2), N));
    CHECK_THROWS_AS(eval_UDC(xover(N), Series::constant(BigRat(1), N - 3), N),
                    invalid_input);
    CHECK_NOTHROW(eval_DmUR(xover(N), Series::constant(BigRat(1), N - 3),
                            Series(N), Series(N), N));
    CHECK_THROWS_AS(eval_DmUR(xover(N), Series::constant(BigRat(1), N - 4),
                              Series(N), Series(N), N),
                    invalid_input);
}
