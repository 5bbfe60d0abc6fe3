#include "torsec/distribution.hpp"

namespace torsec {

Rat frac_part(const Rat& x) { return x - Rat(rat_floor(x)); }

Rat quad_weight(const Rat& x) { return x * (1 - x); }

DistributionVector distribution_of(const FiberConfiguration& config,
                                   const ComponentAssignment& a) {
    if (a.components().size() != config.fiber_count())
        throw InputError(errc::length_mismatch, "assignment does not match config");
    if (!config.strict())
        throw InputError(errc::not_strict,
                         "distribution numbers need sum m_j = 12 chi");
    const long n = a.order();
    DistributionVector d;
    d.order = n;
    d.oriented.assign(static_cast<std::size_t>(n), Rat(0));
    const long e = config.euler_number();
    for (std::size_t j = 0; j < config.fiber_count(); ++j) {
        long m = config.fiber_lengths()[j];
        long k = a.components()[j];
        if ((n * k) % m != 0)
            throw InputError(errc::order_incompatible,
                             "fraction k/m is not a multiple of 1/n");
        long i = n * k / m;  // f_j = i/n
        d.oriented[static_cast<std::size_t>(i)] += rat(m, e);
    }
    d.unoriented.assign(static_cast<std::size_t>(n / 2) + 1, Rat(0));
    d.unoriented[0] = d.oriented[0];
    for (long i = 1; i <= n / 2; ++i) {
        Rat v = d.oriented[static_cast<std::size_t>(i)];
        if (i != n - i) v += d.oriented[static_cast<std::size_t>(n - i)];
        d.unoriented[static_cast<std::size_t>(i)] = v;
    }
    return d;
}

DistributionMatrix distribution_matrix(long n) {
    if (n < 2)
        throw InputError(errc::bad_argument, "order must be >= 2");
    const std::size_t size = static_cast<std::size_t>(n / 2);
    DistributionMatrix p;
    p.order = n;
    p.entries.assign(size, std::vector<Rat>(size, Rat(0)));
    for (long alpha = 1; alpha <= n / 2; ++alpha)
        for (long i = 1; i <= n / 2; ++i)
            p.entries[alpha - 1][i - 1] = quad_weight(frac_part(rat(alpha * i, n)));
    return p;
}

DistributionSolution solve_distribution(long n) {
    DistributionMatrix p = distribution_matrix(n);
    const std::size_t size = p.entries.size();
    std::vector<Rat> rhs(size, rat(1, 6));
    LinearSolveResult r = solve_linear_system(p.entries, std::move(rhs));

    DistributionSolution sol;
    sol.order = n;
    sol.consistent = r.consistent;
    if (!r.consistent) return sol;
    sol.unique = r.unique;
    sol.values = std::move(r.particular);
    sol.nullspace = std::move(r.nullspace);
    Rat sum(0);
    for (const Rat& v : sol.values) sum += v;
    sol.m0 = 1 - sum;
    return sol;
}

std::vector<Rat> distribution_row_sums(long p) {
    if (!is_prime(p) || p == 2)
        throw InputError(errc::not_odd_prime, "p must be an odd prime");
    DistributionMatrix m = distribution_matrix(p);
    std::vector<Rat> sums;
    sums.reserve(m.entries.size());
    for (const auto& row : m.entries) {
        Rat s(0);
        for (const Rat& v : row) s += v;
        sums.push_back(std::move(s));
    }
    return sums;
}

Rat distribution_matrix_determinant(long p) {
    if (!is_prime(p) || p == 2)
        throw InputError(errc::not_odd_prime, "p must be an odd prime");
    return determinant(distribution_matrix(p).entries);
}

MultiplesReport check_multiples(const FiberConfiguration& config,
                                const ComponentAssignment& a) {
    if (!config.strict())
        throw InputError(errc::not_strict, "multiples check needs a strict config");
    if (a.is_zero())
        throw InputError(errc::zero_section, "multiples check needs a non-zero section");
    const long n = a.order();
    const Rat target(2 * config.chi());
    const DistributionVector dist = distribution_of(config, a);
    MultiplesReport rep;
    for (long alpha = 1; alpha < n; ++alpha) {
        ComponentAssignment mult = multiple(config, a, alpha);
        if (mult.is_zero()) continue;

        Rat per_fiber(0);
        for (std::size_t j = 0; j < config.fiber_count(); ++j) {
            long m = config.fiber_lengths()[j];
            per_fiber +=
                m * quad_weight(frac_part(rat(alpha * a.components()[j], m)));
        }

        Rat collected(0);
        for (long i = 1; i <= n / 2; ++i)
            collected += quad_weight(frac_part(rat(alpha * i, n))) *
                         dist.unoriented[static_cast<std::size_t>(i)];
        collected *= 12 * config.chi();

        bool holds = per_fiber == target && collected == target &&
                     per_fiber == collected;
        rep.entries.push_back({alpha, std::move(per_fiber), std::move(collected), holds});
        rep.all_hold = rep.all_hold && holds;
    }
    return rep;
}

}  // namespace torsec
