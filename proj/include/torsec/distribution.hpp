#pragma once

#include <vector>

#include "torsec/linalg.hpp"
#include "torsec/surface.hpp"

namespace torsec {

// Smallest non-negative representative of x mod Z.
Rat frac_part(const Rat& x);

// The weight x(1 - x) each fiber contributes per unit length to the
// quadratic relation; symmetric about 1/2.
Rat quad_weight(const Rat& x);

// Fractions of the total fiber mass sum m_j = 12 chi at each cycle distance.
// oriented[i]   = M'_{i,n}, i = 0..n-1   (distance i/n in the chosen orientation)
// unoriented[i] = M_{i,n},  i = 0..n/2   (either direction)
struct DistributionVector {
    long order = 1;
    std::vector<Rat> oriented;
    std::vector<Rat> unoriented;
};

// Requires a strict configuration and n k_j = 0 mod m_j for every fiber,
// where n is the claimed order of the assignment.
DistributionVector distribution_of(const FiberConfiguration& config,
                                   const ComponentAssignment& a);

// Coefficient matrix of the constraint system: size n/2, entry (alpha, i) =
// quad_weight(<alpha i / n>) for 1 <= alpha, i <= n/2.
struct DistributionMatrix {
    long order = 2;
    QMatrix entries;
};

DistributionMatrix distribution_matrix(long n);

struct DistributionSolution {
    long order = 2;
    bool consistent = true;
    bool unique = false;
    std::vector<Rat> values;  // M_1 .. M_{n/2} (a particular solution)
    Rat m0;                   // 1 - sum(values), from the normalization
    std::vector<std::vector<Rat>> nullspace;  // empty when unique
};

// Exact solution of  P_n M = (1/6) 1.  For prime n the system is
// nonsingular; for composite n the full affine solution set is reported.
DistributionSolution solve_distribution(long n);

// Row sums of the coefficient matrix for an odd prime p; every row must come
// out to (p^2 - 1)/(12 p).
std::vector<Rat> distribution_row_sums(long p);

// Exact determinant of the coefficient matrix for an odd prime p; nonzero
// certifies that the constraint system pins the distribution numbers.
Rat distribution_matrix_determinant(long p);

// Quadratic relation applied to every non-zero multiple alpha S, in two
// forms that must agree identically: the per-fiber sum
// sum_j quad_weight(<alpha f_j>) m_j and the collected form
// 12 chi sum_i quad_weight(<alpha i/n>) M_{i,n}.
struct MultiplesReport {
    struct Entry {
        long alpha;
        Rat per_fiber;   // per-fiber sum
        Rat collected;   // distribution-weighted sum
        bool holds;      // both equal 2 chi and each other
    };
    std::vector<Entry> entries;
    bool all_hold = true;
};

MultiplesReport check_multiples(const FiberConfiguration& config,
                                const ComponentAssignment& a);

}  // namespace torsec
