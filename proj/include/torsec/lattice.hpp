#pragma once

#include <cstddef>
#include <string>

#include "torsec/linalg.hpp"
#include "torsec/surface.hpp"

namespace torsec {

// Exact-rational coordinates in the fixed basis
//   S_0, F, C^{(1)}_1 .. C^{(1)}_{m_1-1}, C^{(2)}_1, ...
// Fibers of length 1 contribute no generators.
struct DivisorVector {
    std::vector<Rat> coefficients;

    friend bool operator==(const DivisorVector&, const DivisorVector&) = default;
};

DivisorVector operator+(const DivisorVector& v, const DivisorVector& w);
DivisorVector operator-(const DivisorVector& v, const DivisorVector& w);
DivisorVector operator*(const Rat& c, const DivisorVector& v);

// The sublattice U + sum_j A_{m_j-1} spanned by the zero section, the fiber
// class, and the non-zero fiber components.
class LatticeBasis {
public:
    explicit LatticeBasis(FiberConfiguration config);

    const FiberConfiguration& config() const noexcept { return config_; }
    std::size_t rank() const noexcept { return rank_; }  // 2 + sum (m_j - 1)

    static constexpr std::size_t zero_section_index = 0;
    static constexpr std::size_t fiber_index = 1;
    // Index of C^{(j)}_k, j 0-based, 1 <= k <= m_j - 1.
    std::size_t component_index(std::size_t j, long k) const;

    DivisorVector zero_vector() const;
    DivisorVector basis_vector(std::size_t index) const;

private:
    FiberConfiguration config_;
    std::vector<std::size_t> offsets_;  // per fiber, start of its C-block
    std::size_t rank_;
};

// Full Gram matrix in basis order: U block [[-chi, 1], [1, 0]], then one
// A_{m_j-1} chain block per fiber, off-blocks zero.
QMatrix gram_matrix(const LatticeBasis& b);

// Symmetric bilinear value v.G.w, evaluated from the block structure.
Rat intersect(const LatticeBasis& b, const DivisorVector& v, const DivisorVector& w);

// Class of the fiber component C^{(j)}_k.  For k >= 1 this is a basis vector;
// C^{(j)}_0 is expanded through the fiber relation F = sum_k C^{(j)}_k.
DivisorVector component_class(const LatticeBasis& b, std::size_t j, long k);

// The correction divisor attached to component k of fiber j: coefficients
// (m_j - k)*i on C^{(j)}_i for i <= k and k*(m_j - i) for i > k; zero for k = 0.
DivisorVector correction_divisor(const LatticeBasis& b, std::size_t j, long k);

struct CorrectionLemmaReport {
    bool passed = true;
    std::string first_failure;  // human-readable counterexample when failed
};

// Checks, over all fibers j and all 0 <= k, l < m_j, that
//   D^{(j)}_k . C^{(j)}_l = m_j  if l = 0, k != 0
//                         = -m_j if l = k != 0
//                         = 0    otherwise,
// and that every correction divisor is orthogonal to the zero section.
CorrectionLemmaReport verify_correction_intersections(const LatticeBasis& b);

// The divisor class of a non-zero torsion section with the given component
// numbers: S_0 + chi*F - sum_j (1/m_j) D^{(j)}_{k_j}.
DivisorVector section_class(const LatticeBasis& b, const ComponentAssignment& a);

struct SectionClassReport {
    bool meets_fiber_once = false;     // V.F = 1
    bool disjoint_from_zero = false;   // V.S_0 = 0
    bool component_checks = false;     // V.C^{(j)}_l = delta_{l, k_j}
    Rat self_intersection;             // V.V; equals -chi iff the quadratic relation holds
    bool self_intersection_is_minus_chi = false;
    std::string first_failure;

    bool passed() const {
        return meets_fiber_once && disjoint_from_zero && component_checks;
    }
};

SectionClassReport verify_section_class(const LatticeBasis& b,
                                        const ComponentAssignment& a);

}  // namespace torsec
