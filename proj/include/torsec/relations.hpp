#pragma once

#include <string_view>

#include "torsec/rational.hpp"
#include "torsec/surface.hpp"

namespace torsec {

enum class RelationId {
    quadratic,          // sum k_j (1 - k_j/m_j) = 2 chi
    sum_order2,         // sum k_j = 4 chi
    sum_order3plus,     // sum d_{m_j}(k_j) = 3 chi
    square_sum,         // sum k_j^2/m_j = chi (n >= 3) or 2 chi (n = 2)
    integrality,        // sum (m_j-1) k_j^2 / (2 m_j) integral
    fixed_point,        // sum { m_j : k_j != 0 } = 12 chi p/(p+1)
    euler_divisibility, // (p^2-1)/2 | 12 chi
    multiples,          // quadratic relation for every non-zero multiple
    distribution,       // distribution vector matches the solved system
    section_class,      // lattice-side verification
};

std::string_view relation_name(RelationId id);

struct RelationReport {
    RelationId id;
    Rat lhs;
    Rat rhs;
    bool holds = false;  // holds <=> lhs == rhs exactly
};

// Left side of the quadratic relation, sum k_j (1 - k_j/m_j).  The zero
// section is rejected: the relation carries no information there.
Rat quadratic_sum(const FiberConfiguration& config, const ComponentAssignment& a);

RelationReport check_quadratic(const FiberConfiguration& config,
                               const ComponentAssignment& a);

// Order-2 sections only: compares sum k_j with 4 chi.
RelationReport check_sum_order2(const FiberConfiguration& config,
                                const ComponentAssignment& a);

// Orders >= 3: compares sum cycle_distance(m_j, k_j) with 3 chi.  Using the
// distance makes the check orientation-free, so inputs need not be minimal.
RelationReport check_sum_order3plus(const FiberConfiguration& config,
                                    const ComponentAssignment& a);

// Minimal component numbers required: compares sum k_j^2/m_j with chi
// (order >= 3) or 2 chi (order 2).
RelationReport check_square_sum(const FiberConfiguration& config,
                                const ComponentAssignment& a);

// sum (m_j - 1) k_j^2 / (2 m_j) must be an integer.  lhs is the exact sum,
// rhs the nearest integer below it, so holds <=> the sum is integral.
RelationReport check_integrality(const FiberConfiguration& config,
                                 const ComponentAssignment& a);

// Prime exact order p: compares sum of m_j over fibers with k_j != 0 against
// 12 chi p/(p+1).
RelationReport check_fixed_point_sum(const FiberConfiguration& config,
                                     const ComponentAssignment& a, long p);

struct EulerDivisibilityReport {
    RelationReport rel;  // lhs = 12 chi mod (p^2-1)/2, rhs = 0
    long minimal_euler;  // (p^2-1)/2, the least admissible Euler number
};

// Whether a section of odd prime order p is admissible on a surface with the
// given chi: (p^2-1)/2 must divide 12 chi.
EulerDivisibilityReport check_euler_divisibility(long p, long chi);

}  // namespace torsec
