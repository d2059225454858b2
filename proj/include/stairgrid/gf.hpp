#pragma once

#include <vector>

#include "stairgrid/series.hpp"

namespace stairgrid {

/// Generating-function families for weighted independent sets on staircase
/// grids.  Each family is a function of x and a handful of marker variables
/// (y, z, s, t); we never manipulate multivariate series.  Instead every
/// marker slot accepts a truncated series in x and the closed form is
/// evaluated by series arithmetic.  Marker-degree information is recovered,
/// when needed, by evaluating on integer grids and interpolating (see
/// interpolate_on_integer_nodes).
///
/// All evaluators take an explicit target order and return a series of
/// exactly that order.  A slot argument may be shorter than the target as
/// long as it meets the family's minimum: a slot that only ever enters the
/// formula multiplied by x^k cannot influence reported coefficients through
/// degrees above order-k, so shorter inputs are zero-padded past their
/// minimum.  Slots below the minimum raise invalid_input.

/// F(x,y) with [x^n y^k] = number of size-k independent sets of the up-core
/// (equivalently down-core) on the size-n staircase grid.  Defined by
/// F = 1 + xF + xyF^2 / (1 - y(F-1)) and solved as an x-adic fixed point;
/// the unknown enters only multiplied by x, so any y (constant term
/// included) is admissible.  Slot minimum: order(y) >= N-1.
Series eval_U(const Series& y, int N);

/// (1-x) / (x^2 - xy - 2x + 1): independent sets of the union of all four
/// cores (up, down, row, column).  Slot minimum: order(y) >= N-1.
Series eval_UDRC(const Series& y, int N);

/// (1-x-xy) / (x^2 y - xyz + x^2 - xy - 2x + 1): up+down+column cores with
/// z marking the number of occupied rows.  Minimums: y >= N-1,
/// z >= N-1-val(y).
Series eval_UDC(const Series& y, const Series& z, int N);

/// 1 / (1 - x - D) with D = xyz(xy^2 z - x + 1)/((xyz+x-1)(xy+x-1)):
/// up+down cores, z marking occupied rows.  Minimums: y >= N-1,
/// z >= N-1-val(y).
Series eval_UD(const Series& y, const Series& z, int N);

/// 1 / (1 - x(1+t) - x^2 y(s+1)(z+1)/(1-x(s+1)(y+1))): the down-core merged
/// with the inner up/row cores, markers per the four-letter labelling
/// (y off-diagonal, z column-mate, s dominated, t free).  Minimums:
/// y/s/t >= N-1, z >= N-2-val(y).
Series eval_DmUR(const Series& y, const Series& z, const Series& s,
                 const Series& t, int N);

/// (1 - xy(z+1)/(1-x(y+1))) / (1 - x(s+1) - xy(z+1)/(1-x(y+1))): the
/// up-core merged with the inner down/row cores, three-letter labelling.
/// Minimums: y/s >= N-1, z >= N-1-val(y).
Series eval_UmDR(const Series& y, const Series& z, const Series& s, int N);

/// Exact polynomial interpolation: given p(0), p(1), ..., p(d) for a
/// polynomial of degree <= d, returns the monomial coefficients
/// [p_0, ..., p_d] (Newton forward differences, all arithmetic exact).
std::vector<BigRat> interpolate_on_integer_nodes(const std::vector<BigRat>& values);

/// Multi-marker interpolation: `values` holds, in row-major layout over the
/// node grid {0..dims[0]-1} x ... x {0..dims[k-1]-1}, the evaluations of a
/// polynomial whose degree in marker a is < dims[a].  Returns the monomial
/// coefficients in the same layout — the way marker multidegrees are read
/// off the family evaluators above.
std::vector<BigRat> tensor_interpolate_on_integer_grid(std::vector<BigRat> values,
                                                       const std::vector<int>& dims);

} // namespace stairgrid
