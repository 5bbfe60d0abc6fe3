#include "torsec/surface.hpp"

#include <numeric>

namespace torsec {

FiberConfiguration::FiberConfiguration(std::vector<long> fiber_lengths, long chi,
                                       bool strict)
    : lengths_(std::move(fiber_lengths)), chi_(chi), strict_(strict) {
    if (lengths_.empty())
        throw InputError(errc::empty_fiber_list, "fiber list must be nonempty");
    for (long m : lengths_)
        if (m < 1)
            throw InputError(errc::nonpositive_fiber_length,
                             "fiber lengths must be >= 1");
    if (chi_ < 1)
        throw InputError(errc::nonpositive_chi, "chi must be positive");
    if (strict_ && total_length() != 12 * chi_)
        throw InputError(errc::euler_mismatch,
                         "sum of fiber lengths " + std::to_string(total_length()) +
                             " != 12*chi = " + std::to_string(12 * chi_));
}

long FiberConfiguration::length(std::size_t j) const {
    if (j >= lengths_.size())
        throw InputError(errc::bad_index, "fiber index out of range");
    return lengths_[j];
}

long FiberConfiguration::total_length() const noexcept {
    return std::accumulate(lengths_.begin(), lengths_.end(), 0L);
}

ComponentAssignment::ComponentAssignment(const FiberConfiguration& config,
                                         std::vector<long> components, long order)
    : components_(std::move(components)), order_(order) {
    if (components_.size() != config.fiber_count())
        throw InputError(errc::length_mismatch,
                         "component vector length does not match fiber count");
    if (order_ < 1)
        throw InputError(errc::order_incompatible, "order must be >= 1");
    for (std::size_t j = 0; j < components_.size(); ++j) {
        long m = config.fiber_lengths()[j];
        long k = components_[j];
        if (k < 0 || k >= m)
            throw InputError(errc::component_out_of_range,
                             "component " + std::to_string(k) +
                                 " out of range [0," + std::to_string(m) + ")");
        // n*k == 0 mod m  <=>  the exact order of the vector divides n
        if ((order_ * k) % m != 0)
            throw InputError(errc::order_incompatible,
                             "order " + std::to_string(order_) +
                                 " incompatible with component " + std::to_string(k) +
                                 " mod " + std::to_string(m));
    }
}

long ComponentAssignment::component(std::size_t j) const {
    if (j >= components_.size())
        throw InputError(errc::bad_index, "fiber index out of range");
    return components_[j];
}

bool ComponentAssignment::is_zero() const noexcept {
    for (long k : components_)
        if (k != 0) return false;
    return true;
}

long cycle_distance(long m, long k) {
    if (k < 0 || k >= m)
        throw InputError(errc::component_out_of_range,
                         "component out of range [0,m)");
    return std::min(k, m - k);
}

ComponentAssignment reorient(const FiberConfiguration& config,
                             const ComponentAssignment& a, std::size_t j) {
    if (j >= config.fiber_count())
        throw InputError(errc::bad_index, "fiber index out of range");
    std::vector<long> ks = a.components();
    long m = config.fiber_lengths()[j];
    ks[j] = (m - ks[j]) % m;
    return ComponentAssignment(config, std::move(ks), a.order());
}

ComponentAssignment minimal_form(const FiberConfiguration& config,
                                 const ComponentAssignment& a) {
    std::vector<long> ks = a.components();
    for (std::size_t j = 0; j < ks.size(); ++j)
        ks[j] = cycle_distance(config.fiber_lengths()[j], ks[j]);
    return ComponentAssignment(config, std::move(ks), a.order());
}

ComponentAssignment multiple(const FiberConfiguration& config,
                             const ComponentAssignment& a, long alpha) {
    std::vector<long> ks = a.components();
    for (std::size_t j = 0; j < ks.size(); ++j) {
        long m = config.fiber_lengths()[j];
        long k = (alpha % m) * ks[j] % m;
        ks[j] = k < 0 ? k + m : k;
    }
    long n = a.order();
    long g = std::gcd(alpha, n);
    return ComponentAssignment(config, std::move(ks), n / g);
}

long order_of(const FiberConfiguration& config, const ComponentAssignment& a) {
    if (a.components().size() != config.fiber_count())
        throw InputError(errc::length_mismatch, "assignment does not match config");
    long order = 1;
    for (std::size_t j = 0; j < config.fiber_count(); ++j) {
        long m = config.fiber_lengths()[j];
        long k = a.components()[j];
        order = std::lcm(order, m / std::gcd(k, m));
    }
    return order;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace torsec
