#pragma once

#include <optional>
#include <vector>

#include "torsec/relations.hpp"
#include "torsec/surface.hpp"

namespace torsec {

struct EnumerationQuery {
    FiberConfiguration config;  // must be strict
    long order = 2;             // n >= 2, exact order of the sought sections
    bool up_to_symmetry = false;
    // Extra filters; both are expected to be no-ops on genuine solutions and
    // exist as cross-checks.
    bool require_equidistribution = false;  // prime order only
    std::optional<ComponentAssignment> partner;  // joint group closure must validate
};

struct SolutionSet {
    // Canonical orbit representatives when up_to_symmetry was set, otherwise
    // every solution; lexicographic either way.
    std::vector<ComponentAssignment> assignments;
    long raw_count = 0;
    long orbit_count = 0;
};

// All component-number assignments of exact order n that satisfy the
// quadratic relation for every non-zero multiple.  These are necessary
// conditions; membership here does not claim a section exists.
SolutionSet enumerate_sections(const EnumerationQuery& q);

// Lexicographically least element of the orbit of a under per-fiber
// reorientation and permutations of equal-length fibers.  Idempotent.
ComponentAssignment canonicalize(const FiberConfiguration& config,
                                 const ComponentAssignment& a);

struct GroupClosureReport {
    bool all_valid = false;
    long group_order = 0;
    std::vector<long> invariant_factors;  // d_1 | d_2 | ... | d_r
    struct Element {
        std::vector<long> components;
        long order;
        bool quadratic_ok;
        bool sum_ok;
    };
    std::vector<Element> elements;  // non-zero elements, lexicographic
};

// Closes the given assignments under addition in the product of the Z/m_j,
// checks the quadratic and order-appropriate sum relation on every non-zero
// element, and reports the group structure.
GroupClosureReport verify_group_closure(
    const FiberConfiguration& config,
    const std::vector<ComponentAssignment>& generators);

}  // namespace torsec
