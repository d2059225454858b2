#include "stairgrid/series.hpp"

#include <algorithm>
#include <sstream>

namespace stairgrid {

Series::Series(int order) {
    if (order < 0) throw invalid_input("series order must be >= 0");
    c_.assign(static_cast<size_t>(order) + 1, BigRat(0));
}

Series Series::constant(const BigRat& value, int order) {
    Series s(order);
    s.c_[0] = value;
    return s;
}

Series Series::x(int order) {
    Series s(order);
    if (order >= 1) s.c_[1] = 1;
    return s;
}

Series Series::from_coeffs(std::vector<BigRat> coeffs) {
    if (coeffs.empty()) throw invalid_input("series needs at least the constant term");
    Series s(0);
    s.c_ = std::move(coeffs);
    return s;
}

const BigRat& Series::coeff(int k) const {
    if (k < 0 || k > order()) throw invalid_input("series coefficient index outside truncation window");
    return c_[static_cast<size_t>(k)];
}

void Series::set_coeff(int k, const BigRat& value) {
    if (k < 0 || k > order()) throw invalid_input("series coefficient index outside truncation window");
    c_[static_cast<size_t>(k)] = value;
}

int Series::valuation() const {
    for (int k = 0; k <= order(); ++k)
        if (c_[static_cast<size_t>(k)] != 0) return k;
    return order() + 1;
}

Series Series::truncated(int new_order) const {
    if (new_order > order()) throw invalid_input("truncated: cannot extend knowledge window");
    Series s(new_order);
    std::copy(c_.begin(), c_.begin() + new_order + 1, s.c_.begin());
    return s;
}

Series Series::zero_padded(int new_order) const {
    if (new_order < order()) throw invalid_input("zero_padded: window would shrink");
    Series s(new_order);
    std::copy(c_.begin(), c_.end(), s.c_.begin());
    return s;
}

Series Series::operator-() const {
    Series s = *this;
    for (auto& v : s.c_) v = -v;
    return s;
}

Series Series::operator+(const Series& o) const {
    Series s(std::min(order(), o.order()));
    for (int k = 0; k <= s.order(); ++k)
        s.c_[static_cast<size_t>(k)] = c_[static_cast<size_t>(k)] + o.c_[static_cast<size_t>(k)];
    return s;
}

Series Series::operator-(const Series& o) const {
    Series s(std::min(order(), o.order()));
    for (int k = 0; k <= s.order(); ++k)
        s.c_[static_cast<size_t>(k)] = c_[static_cast<size_t>(k)] - o.c_[static_cast<size_t>(k)];
    return s;
}

Series Series::operator*(const Series& o) const {
    Series s(std::min(order(), o.order()));
    for (int k = 0; k <= s.order(); ++k) {
        BigRat acc(0);
        for (int j = 0; j <= k; ++j) {
            const BigRat& a = c_[static_cast<size_t>(j)];
            if (a == 0) continue;
            acc += a * o.c_[static_cast<size_t>(k - j)];
        }
        s.c_[static_cast<size_t>(k)] = acc;
    }
    return s;
}

Series Series::operator+(const BigRat& v) const {
    Series s = *this;
    s.c_[0] += v;
    return s;
}

Series Series::operator-(const BigRat& v) const {
    Series s = *this;
    s.c_[0] -= v;
    return s;
}

Series Series::operator*(const BigRat& v) const {
    Series s = *this;
    for (auto& c : s.c_) c *= v;
    return s;
}

bool Series::agrees_with(const Series& o, int upto) const {
    int top = std::min({order(), o.order(), upto});
    for (int k = 0; k <= top; ++k)
        if (c_[static_cast<size_t>(k)] != o.c_[static_cast<size_t>(k)]) return false;
    return true;
}

std::string Series::str() const {
    std::ostringstream os;
    std::vector<BigInt> ints = integer_coeffs();
    for (size_t i = 0; i < ints.size(); ++i) {
        if (i) os << ',';
        os << ints[i];
    }
    return os.str();
}

std::vector<BigInt> Series::integer_coeffs() const {
    std::vector<BigInt> out;
    out.reserve(c_.size());
    for (int k = 0; k <= order(); ++k) {
        const BigRat& q = c_[static_cast<size_t>(k)];
        if (!is_integer(q)) {
            std::ostringstream os;
            os << "coefficient of x^" << k << " is not an integer: " << q;
            throw non_integer_coefficient_error(os.str());
        }
        out.push_back(rat_numerator(q));
    }
    return out;
}

Series series_div(const Series& a, const Series& b) {
    const int vb = b.valuation();
    if (vb > b.order()) throw division_valuation_error("series division by zero series");
    if (a.valuation() < vb) {
        std::ostringstream os;
        os << "series division needs val(numerator) >= val(denominator); got "
           << a.valuation() << " < " << vb;
        throw division_valuation_error(os.str());
    }
    const int n = std::min(a.order(), b.order()) - vb;
    // Cancel x^vb, then divide by the resulting unit series.
    Series q(n);
    const BigRat& lead = b.coeff(vb);
    for (int k = 0; k <= n; ++k) {
        BigRat acc = a.coeff(k + vb);
        for (int j = 0; j < k; ++j) {
            const BigRat& qq = q.coeff(j);
            if (qq == 0) continue;
            acc -= qq * b.coeff(k - j + vb);
        }
        q.set_coeff(k, acc / lead);
    }
    return q;
}

Series series_sqrt(const Series& a) {
    if (a.coeff(0) != 1) throw series_domain_error("series_sqrt requires constant term 1");
    Series s(a.order());
    s.set_coeff(0, 1);
    for (int n = 1; n <= a.order(); ++n) {
        BigRat acc = a.coeff(n);
        for (int k = 1; k < n; ++k) acc -= s.coeff(k) * s.coeff(n - k);
        s.set_coeff(n, acc / 2);
    }
    return s;
}

Series solve_fixed_point(const std::function<Series(const Series&)>& phi, int order) {
    Series a = Series::constant(1, order);
    for (int round = 0; round <= order; ++round) {
        Series next = phi(a);
        if (next.order() != order)
            throw contraction_violation("fixed-point map changed the truncation order");
        a = std::move(next);
    }
    Series check = phi(a);
    if (!(check == a))
        throw contraction_violation(
            "fixed-point iteration did not stabilise; the map is not an x-adic contraction");
    return a;
}

} // namespace stairgrid
