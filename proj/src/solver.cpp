#include "torsec/solver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "torsec/distribution.hpp"

namespace torsec {

namespace {

bool quadratic_holds_for_all_multiples(const FiberConfiguration& config,
                                       const ComponentAssignment& a, long n) {
    const Rat target(2 * config.chi());
    for (long alpha = 1; alpha < n; ++alpha) {
        ComponentAssignment mult = multiple(config, a, alpha);
        if (mult.is_zero()) continue;  // cannot happen at exact order n
        if (quadratic_sum(config, mult) != target) return false;
    }
    return true;
}

bool equidistribution_matches(const FiberConfiguration& config,
                              const ComponentAssignment& a, long p) {
    DistributionVector d = distribution_of(config, a);
    if (p == 2)
        return d.unoriented[0] == rat(1, 3) && d.unoriented[1] == rat(2, 3);
    const Rat value = rat(2 * p, p * p - 1);
    if (d.unoriented[0] != rat(1, p + 1)) return false;
    for (long i = 1; i <= (p - 1) / 2; ++i)
        if (d.unoriented[static_cast<std::size_t>(i)] != value) return false;
    return true;
}

// Invariant factors d_1 | ... | d_r of a finite abelian group, recovered from
// the multiset of element orders: per prime q, the numbers of elements killed
// by q^k determine the exponent partition of the q-primary part.
std::vector<long> invariant_factors_from_orders(const std::vector<long>& orders) {
    long group_order = static_cast<long>(orders.size()) + 1;  // plus identity
    std::vector<long> primes;
    for (long q = 2, rest = group_order; rest > 1; ++q)
        if (rest % q == 0) {
            primes.push_back(q);
            while (rest % q == 0) rest /= q;
        }

    auto log_q = [](long value, long q) {
        long e = 0;
        while (value > 1) {
            value /= q;
            ++e;
        }
        return e;
    };
    auto is_power_of = [](long value, long q) {
        while (value % q == 0) value /= q;
        return value == 1;
    };

    std::vector<std::vector<long>> prime_partitions;
    for (long q : primes) {
        long primary_size = 1;
        for (long o : orders)
            if (is_power_of(o, q)) ++primary_size;
        long full = log_q(primary_size, q);

        // c_k = log_q #{h : q^k h = 0} = sum_i min(lambda_i, k)
        std::vector<long> c{0};
        long qk = 1;
        while (c.back() < full) {
            qk *= q;
            long count = 1;
            for (long o : orders)
                if (is_power_of(o, q) && qk % o == 0) ++count;
            c.push_back(log_q(count, q));
        }
        // conjugate partition lambda'_k = c_k - c_{k-1}, then transpose
        std::vector<long> conj;
        for (std::size_t k = 1; k < c.size(); ++k) conj.push_back(c[k] - c[k - 1]);
        std::vector<long> lambda;
        for (long i = 1; !conj.empty() && i <= conj[0]; ++i) {
            long parts = 0;
            for (long x : conj)
                if (x >= i) ++parts;
            lambda.push_back(parts);
        }
        prime_partitions.push_back(std::move(lambda));  // descending exponents
    }

    std::size_t factor_count = 0;
    for (const auto& lambda : prime_partitions)
        factor_count = std::max(factor_count, lambda.size());
    std::vector<long> factors(factor_count, 1);
    for (std::size_t pi = 0; pi < prime_partitions.size(); ++pi)
        for (std::size_t i = 0; i < prime_partitions[pi].size(); ++i) {
            long qe = 1;
            for (long e = 0; e < prime_partitions[pi][i]; ++e) qe *= primes[pi];
            factors[i] *= qe;  // largest aligned with largest
        }
    std::reverse(factors.begin(), factors.end());  // ascending, d_i | d_{i+1}
    return factors;
}

}  // namespace

SolutionSet enumerate_sections(const EnumerationQuery& q) {
    const FiberConfiguration& config = q.config;
    if (!config.strict())
        throw InputError(errc::not_strict, "enumeration needs a strict configuration");
    if (q.order < 2)
        throw InputError(errc::bad_argument, "order must be >= 2");
    const long n = q.order;
    const std::size_t s = config.fiber_count();

    // per-fiber candidate component numbers: n k = 0 mod m
    std::vector<std::vector<long>> candidates(s);
    for (std::size_t j = 0; j < s; ++j) {
        long m = config.fiber_lengths()[j];
        for (long k = 0; k < m; ++k)
            if ((n * k) % m == 0) candidates[j].push_back(k);
    }

    const Rat target(2 * config.chi());
    std::vector<long> current(s, 0);
    std::vector<ComponentAssignment> raw;

    // depth-first over candidate values, ascending, so output is lexicographic
    auto search = [&](auto&& self, std::size_t j, const Rat& partial) -> void {
        if (j == s) {
            if (partial != target) return;
            ComponentAssignment a(config, current, n);
            if (order_of(config, a) != n) return;
            if (!quadratic_holds_for_all_multiples(config, a, n)) return;
            if (q.require_equidistribution && is_prime(n) &&
                !equidistribution_matches(config, a, n))
                return;
            if (q.partner) {
                GroupClosureReport closure =
                    verify_group_closure(config, {a, *q.partner});
                if (!closure.all_valid) return;
            }
            raw.push_back(std::move(a));
            return;
        }
        long m = config.fiber_lengths()[j];
        for (long k : candidates[j]) {
            Rat next = partial + rat(k * (m - k), m);
            if (next > target) continue;  // terms are nonnegative
            current[j] = k;
            self(self, j + 1, next);
        }
        current[j] = 0;
    };
    search(search, 0, Rat(0));

    SolutionSet result;
    result.raw_count = static_cast<long>(raw.size());

    std::set<std::vector<long>> orbit_reps;
    for (const ComponentAssignment& a : raw)
        orbit_reps.insert(canonicalize(config, a).components());
    result.orbit_count = static_cast<long>(orbit_reps.size());

    if (q.up_to_symmetry) {
        for (const auto& components : orbit_reps)
            result.assignments.emplace_back(config, components, n);
    } else {
        result.assignments = std::move(raw);
    }
    return result;
}

ComponentAssignment canonicalize(const FiberConfiguration& config,
                                 const ComponentAssignment& a) {
    // Reorientation acts per entry, so the lexicographic minimum replaces
    // each k by its cycle distance; permutations of equal-length fibers then
    // sort each length class ascending.
    std::vector<long> ks = minimal_form(config, a).components();
    std::map<long, std::vector<std::size_t>> positions_by_length;
    for (std::size_t j = 0; j < config.fiber_count(); ++j)
        positions_by_length[config.fiber_lengths()[j]].push_back(j);
    for (auto& [m, positions] : positions_by_length) {
        std::vector<long> values;
        values.reserve(positions.size());
        for (std::size_t j : positions) values.push_back(ks[j]);
        std::sort(values.begin(), values.end());
        for (std::size_t i = 0; i < positions.size(); ++i)
            ks[positions[i]] = values[i];
    }
    return ComponentAssignment(config, std::move(ks), a.order());
}

GroupClosureReport verify_group_closure(
    const FiberConfiguration& config,
    const std::vector<ComponentAssignment>& generators) {
    const std::size_t s = config.fiber_count();
    for (const ComponentAssignment& g : generators)
        if (g.components().size() != s)
            throw InputError(errc::length_mismatch,
                             "generator does not match config");

    // close under addition
    std::set<std::vector<long>> elements;
    elements.insert(std::vector<long>(s, 0));
    bool grew = true;
    while (grew) {
        grew = false;
        std::set<std::vector<long>> next = elements;
        for (const auto& e : elements)
            for (const ComponentAssignment& g : generators) {
                std::vector<long> sum(s);
                for (std::size_t j = 0; j < s; ++j)
                    sum[j] = (e[j] + g.components()[j]) % config.fiber_lengths()[j];
                if (next.insert(std::move(sum)).second) grew = true;
            }
        elements = std::move(next);
    }

    GroupClosureReport rep;
    rep.group_order = static_cast<long>(elements.size());
    rep.all_valid = true;

    std::vector<long> element_orders;
    for (const auto& components : elements) {
        bool zero = std::all_of(components.begin(), components.end(),
                                [](long k) { return k == 0; });
        if (zero) continue;
        long order = 1;
        for (std::size_t j = 0; j < s; ++j) {
            long m = config.fiber_lengths()[j];
            order = std::lcm(order, m / std::gcd(components[j], m));
        }
        element_orders.push_back(order);

        ComponentAssignment a(config, components, order);
        bool quadratic_ok = quadratic_sum(config, a) == Rat(2 * config.chi());
        bool sum_ok = order == 2 ? check_sum_order2(config, a).holds
                                 : check_sum_order3plus(config, a).holds;
        rep.elements.push_back({components, order, quadratic_ok, sum_ok});
        rep.all_valid = rep.all_valid && quadratic_ok && sum_ok;
    }

    rep.invariant_factors = invariant_factors_from_orders(element_orders);
    return rep;
}

}  // namespace torsec
