#pragma once

// Gaussian elimination over the rationals.

#include <optional>
#include <vector>

#include "reglab/polynomial.hpp"

namespace reglab {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Row rank of a (possibly ragged, zero-padded) matrix.
int exact_rank(RationalMatrix rows);

/// Coefficients c with sum_i c_i rows[i] = target, if target lies in the row span.
std::optional<std::vector<Rational>> solve_in_span(const RationalMatrix& rows, const std::vector<Rational>& target);

/// Coefficient vectors (ascending powers of t, common length) of polynomials.
RationalMatrix coefficient_rows(const std::vector<Polynomial>& polys);

}  // namespace reglab
