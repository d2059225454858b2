#include "stairgrid/gf.hpp"

#include <string>

namespace stairgrid {

namespace {

/// Brings a slot series to the evaluation order.  `min_order` is the least
/// order the slot must carry: the slot enters the family formula multiplied
/// by at least x^(N - min_order), so coefficients of the slot beyond
/// min_order cannot reach reported degrees and padding them with zeros is
/// sound.  A slot below the minimum is a caller bug.
Series pad_slot(const Series& s, int min_order, int N, const char* family,
                const char* slot) {
    if (min_order < 0) min_order = 0;
    if (s.order() < min_order) {
        throw invalid_input(std::string("eval_") + family + ": slot " + slot +
                            " has order " + std::to_string(s.order()) +
                            " but needs at least " + std::to_string(min_order) +
                            " for target order " + std::to_string(N));
    }
    if (s.order() >= N) return s.truncated(N);
    return s.zero_padded(N);
}

} // namespace

Series eval_U(const Series& y, int N) {
    const Series yy = pad_slot(y, N - 1, N, "U", "y");
    const Series one = Series::constant(BigRat(1), N);
    const Series x = Series::x(N);
    auto phi = [&](const Series& f) {
        return one + x * f + series_div(x * yy * f * f, one - yy * (f - one));
    };
    return solve_fixed_point(phi, N);
}

Series eval_UDRC(const Series& y, int N) {
    const Series yy = pad_slot(y, N - 1, N, "UDRC", "y");
    const Series one = Series::constant(BigRat(1), N);
    const Series x = Series::x(N);
    return series_div(one - x, x * x - x * yy - x * BigRat(2) + one);
}

Series eval_UDC(const Series& y, const Series& z, int N) {
    const Series yy = pad_slot(y, N - 1, N, "UDC", "y");
    const Series zz = pad_slot(z, N - 1 - yy.valuation(), N, "UDC", "z");
    const Series one = Series::constant(BigRat(1), N);
    const Series x = Series::x(N);
    const Series num = one - x - x * yy;
    const Series den =
        x * x * yy - x * yy * zz + x * x - x * yy - x * BigRat(2) + one;
    return series_div(num, den);
}

Series eval_UD(const Series& y, const Series& z, int N) {
    const Series yy = pad_slot(y, N - 1, N, "UD", "y");
    const Series zz = pad_slot(z, N - 1 - yy.valuation(), N, "UD", "z");
    const Series one = Series::constant(BigRat(1), N);
    const Series x = Series::x(N);
    const Series d = series_div(x * yy * zz * (x * yy * yy * zz - x + one),
                                (x * yy * zz + x - one) * (x * yy + x - one));
    return series_div(one, one - x - d);
}

Series eval_DmUR(const Series& y, const Series& z, const Series& s,
                 const Series& t, int N) {
    const Series yy = pad_slot(y, N - 1, N, "DmUR", "y");
    const Series zz = pad_slot(z, N - 2 - yy.valuation(), N, "DmUR", "z");
    const Series ss = pad_slot(s, N - 1, N, "DmUR", "s");
    const Series tt = pad_slot(t, N - 1, N, "DmUR", "t");
    const Series one = Series::constant(BigRat(1), N);
    const Series x = Series::x(N);
    const Series inner = series_div(x * x * yy * (ss + one) * (zz + one),
                                    one - x * (ss + one) * (yy + one));
    return series_div(one, one - x * (one + tt) - inner);
}

Series eval_UmDR(const Series& y, const Series& z, const Series& s, int N) {
    const Series yy = pad_slot(y, N - 1, N, "UmDR", "y");
    const Series zz = pad_slot(z, N - 1 - yy.valuation(), N, "UmDR", "z");
    const Series ss = pad_slot(s, N - 1, N, "UmDR", "s");
    const Series one = Series::constant(BigRat(1), N);
    const Series x = Series::x(N);
    const Series blk = series_div(x * yy * (zz + one), one - x * (yy + one));
    return series_div(one - blk, one - x * (ss + one) - blk);
}

std::vector<BigRat> interpolate_on_integer_nodes(const std::vector<BigRat>& values) {
    const int d = static_cast<int>(values.size()) - 1;
    if (d < 0) throw invalid_input("interpolate_on_integer_nodes: no values");

    // Newton forward differences: diff[j] = Delta^j p(0).
    std::vector<BigRat> diffs = values;
    std::vector<BigRat> newton(d + 1);
    newton[0] = diffs[0];
    for (int j = 1; j <= d; ++j) {
        for (int i = 0; i + j <= d; ++i) diffs[i] = diffs[i + 1] - diffs[i];
        newton[j] = diffs[0];
    }

    // p(t) = sum_j newton[j] * C(t, j); expand the falling factorials.
    std::vector<BigRat> mono(d + 1, BigRat(0));
    std::vector<BigRat> basis{BigRat(1)}; // C(t, 0)
    for (int j = 0; j <= d; ++j) {
        for (size_t i = 0; i < basis.size(); ++i) mono[i] += newton[j] * basis[i];
        if (j == d) break;
        // C(t, j+1) = C(t, j) * (t - j) / (j + 1)
        std::vector<BigRat> next(basis.size() + 1, BigRat(0));
        for (size_t i = 0; i < basis.size(); ++i) {
            next[i + 1] += basis[i];
            next[i] -= basis[i] * BigRat(j);
        }
        const BigRat inv = BigRat(1) / BigRat(j + 1);
        for (auto& c : next) c *= inv;
        basis = std::move(next);
    }
    return mono;
}

std::vector<BigRat> tensor_interpolate_on_integer_grid(std::vector<BigRat> values,
                                                       const std::vector<int>& dims) {
    std::size_t total = 1;
    for (int d : dims) {
        if (d < 1) throw invalid_input("tensor interpolation: empty axis");
        total *= static_cast<std::size_t>(d);
    }
    if (values.size() != total)
        throw invalid_input("tensor interpolation: values do not fill the grid");

    // Interpolate one axis at a time; after axis a every entry is already a
    // coefficient in the markers of the processed axes and still a value in
    // the remaining ones.
    for (std::size_t a = 0; a < dims.size(); ++a) {
        const std::size_t len = static_cast<std::size_t>(dims[a]);
        std::size_t stride = 1;
        for (std::size_t b = a + 1; b < dims.size(); ++b)
            stride *= static_cast<std::size_t>(dims[b]);
        std::vector<BigRat> line(len);
        for (std::size_t flat = 0; flat < total; ++flat) {
            if ((flat / stride) % len != 0) continue; // visit each line once
            for (std::size_t k = 0; k < len; ++k) line[k] = values[flat + k * stride];
            const std::vector<BigRat> mono = interpolate_on_integer_nodes(line);
            for (std::size_t k = 0; k < len; ++k) values[flat + k * stride] = mono[k];
        }
    }
    return values;
}

} // namespace stairgrid
