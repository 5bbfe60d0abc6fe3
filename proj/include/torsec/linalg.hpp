#pragma once

#include <vector>

#include "torsec/rational.hpp"

namespace torsec {

// Dense row-major matrix of exact rationals.
using QMatrix = std::vector<std::vector<Rat>>;

struct LinearSolveResult {
    bool consistent = true;
    bool unique = false;
    std::vector<Rat> particular;             // one solution, when consistent
    std::vector<QMatrix::value_type> nullspace;  // basis of the solution space of Ax = 0
    std::size_t rank = 0;
};

// Gauss-Jordan elimination over Q.  Exact; no pivoting heuristics needed.
LinearSolveResult solve_linear_system(QMatrix a, std::vector<Rat> b);

// Exact determinant.  Denominators are cleared row by row, the integer part
// goes through fraction-free Bareiss elimination, and the row scales are
// divided back out at the end.
Rat determinant(const QMatrix& a);

}  // namespace torsec
