#pragma once

#include <functional>
#include <string>
#include <vector>

#include "stairgrid/errors.hpp"
#include "stairgrid/numeric.hpp"

namespace stairgrid {

/// A power series in one variable truncated at an explicit order N: exactly
/// the coefficients c_0..c_N are known.  Coefficients are exact rationals;
/// arithmetic never reads beyond the stored window, and binary operations
/// return the smaller of the two operand orders.
class Series {
public:
    /// The zero series known to order `order`.
    explicit Series(int order);

    static Series constant(const BigRat& value, int order);
    static Series x(int order);
    static Series from_coeffs(std::vector<BigRat> coeffs); // order = size-1

    int order() const { return static_cast<int>(c_.size()) - 1; }

    /// c_k for 0 <= k <= order; asking beyond the window is a bug.
    const BigRat& coeff(int k) const;
    void set_coeff(int k, const BigRat& value);

    /// Least k with c_k != 0, or order+1 when all stored coefficients vanish.
    int valuation() const;

    bool is_zero() const { return valuation() > order(); }

    /// Copy truncated to a smaller (or equal) order.
    Series truncated(int new_order) const;

    /// Copy padded with zero coefficients up to `new_order`.  The pad is a
    /// claim of knowledge, so callers own the argument for why those
    /// coefficients cannot influence anything they report; keep uses local.
    Series zero_padded(int new_order) const;

    Series operator-() const;
    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;

    Series operator+(const BigRat& s) const;
    Series operator-(const BigRat& s) const;
    Series operator*(const BigRat& s) const;

    bool operator==(const Series& o) const { return c_ == o.c_; }
    bool operator!=(const Series& o) const { return c_ != o.c_; }

    /// True when the two windows agree on 0..min(order, o.order, upto).
    bool agrees_with(const Series& o, int upto) const;

    /// Comma-separated integer coefficients "c_0,c_1,...,c_N"; throws
    /// non_integer_coefficient_error if any coefficient is fractional.
    std::string str() const;

    /// All coefficients as exact integers (same error contract as str()).
    std::vector<BigInt> integer_coeffs() const;

private:
    std::vector<BigRat> c_; // size order+1
};

/// a / b.  Requires b != 0 and val(a) >= val(b); after cancelling x^val(b)
/// the division is by a unit and the quotient is exact to order
/// min(order(a), order(b)) - val(b).  Violations raise
/// division_valuation_error (never a silent truncation).
Series series_div(const Series& a, const Series& b);

/// sqrt(a) with a_0 = 1 (series_domain_error otherwise), to order(a).
Series series_sqrt(const Series& a);

/// Solves A = phi(A) when phi is an x-adic contraction: coefficient k of
/// phi(A) may depend only on coefficients < k of A.  Iterates from the
/// constant series 1 at order N; phi must preserve the order of its input.
/// After N+1 rounds one further application must change nothing — a moving
/// coefficient means phi was not a contraction and raises
/// contraction_violation.
Series solve_fixed_point(const std::function<Series(const Series&)>& phi, int order);

} // namespace stairgrid
