#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace torsec {

// Validation failures carry a distinct code so callers (and tests) can tell
// them apart without parsing messages.
enum class errc {
    empty_fiber_list,
    nonpositive_fiber_length,
    nonpositive_chi,
    euler_mismatch,
    length_mismatch,
    component_out_of_range,
    order_incompatible,
    bad_index,
    zero_section,
    wrong_order,
    not_minimal,
    not_prime,
    not_odd_prime,
    not_strict,
    bad_argument,
};

class InputError : public std::invalid_argument {
public:
    InputError(errc code, const std::string& what)
        : std::invalid_argument(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

// The combinatorial shadow of a semistable elliptic fibration: the cycle
// lengths m_j of its singular fibers and the holomorphic Euler characteristic
// chi.  In strict mode the Euler-number constraint sum(m_j) = 12*chi is
// enforced; non-strict configurations are allowed for desk-scale lattice
// experiments.
class FiberConfiguration {
public:
    FiberConfiguration(std::vector<long> fiber_lengths, long chi, bool strict);

    const std::vector<long>& fiber_lengths() const noexcept { return lengths_; }
    std::size_t fiber_count() const noexcept { return lengths_.size(); }
    long length(std::size_t j) const;  // 0-based fiber index
    long chi() const noexcept { return chi_; }
    bool strict() const noexcept { return strict_; }
    long euler_number() const noexcept { return 12 * chi_; }
    long total_length() const noexcept;  // sum of all m_j

    friend bool operator==(const FiberConfiguration&, const FiberConfiguration&) = default;

private:
    std::vector<long> lengths_;
    long chi_;
    bool strict_;
};

// A candidate torsion section, given by its component numbers k_j (canonical
// representatives in [0, m_j)) and a claimed order n.  The exact order of the
// vector in the product of Z/m_j always divides n; construction rejects
// anything else.
class ComponentAssignment {
public:
    ComponentAssignment(const FiberConfiguration& config,
                        std::vector<long> components, long order);

    const std::vector<long>& components() const noexcept { return components_; }
    long component(std::size_t j) const;
    long order() const noexcept { return order_; }
    bool is_zero() const noexcept;

    friend bool operator==(const ComponentAssignment&, const ComponentAssignment&) = default;

private:
    std::vector<long> components_;
    long order_;
};

// Orientation-free distance from the zero component: min(k, m-k).
long cycle_distance(long m, long k);

// Reverses the orientation of fiber j: k_j -> (m_j - k_j) mod m_j.
ComponentAssignment reorient(const FiberConfiguration& config,
                             const ComponentAssignment& a, std::size_t j);

// Replaces every component number by its cycle distance.  Idempotent.
ComponentAssignment minimal_form(const FiberConfiguration& config,
                                 const ComponentAssignment& a);

// Component numbers of the multiple alpha*S: entrywise alpha*k_j mod m_j.
// The claimed order becomes n / gcd(alpha, n).
ComponentAssignment multiple(const FiberConfiguration& config,
                             const ComponentAssignment& a, long alpha);

// Exact order in the product of the Z/m_j: lcm over j of m_j / gcd(k_j, m_j).
long order_of(const FiberConfiguration& config, const ComponentAssignment& a);

bool is_prime(long n);

}  // namespace torsec
