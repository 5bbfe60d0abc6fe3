#include "torsec/relations.hpp"

namespace torsec {

std::string_view relation_name(RelationId id) {
    switch (id) {
        case RelationId::quadratic: return "quadratic";
        case RelationId::sum_order2: return "sum_order2";
        case RelationId::sum_order3plus: return "sum_order3plus";
        case RelationId::square_sum: return "square_sum";
        case RelationId::integrality: return "integrality";
        case RelationId::fixed_point: return "fixed_point";
        case RelationId::euler_divisibility: return "euler_divisibility";
        case RelationId::multiples: return "multiples";
        case RelationId::distribution: return "distribution";
        case RelationId::section_class: return "section_class";
    }
    return "unknown";
}

namespace {

void require_match(const FiberConfiguration& config, const ComponentAssignment& a) {
    if (a.components().size() != config.fiber_count())
        throw InputError(errc::length_mismatch, "assignment does not match config");
}

RelationReport make_report(RelationId id, Rat lhs, Rat rhs) {
    bool holds = lhs == rhs;
    return RelationReport{id, std::move(lhs), std::move(rhs), holds};
}

}  // namespace

Rat quadratic_sum(const FiberConfiguration& config, const ComponentAssignment& a) {
    require_match(config, a);
    if (a.is_zero())
        throw InputError(errc::zero_section,
                         "quadratic relation is vacuous for the zero section");
    Rat sum(0);
    for (std::size_t j = 0; j < config.fiber_count(); ++j) {
        long m = config.fiber_lengths()[j];
        long k = a.components()[j];
        sum += rat(k * (m - k), m);  // k (1 - k/m)
    }
    return sum;
}

RelationReport check_quadratic(const FiberConfiguration& config,
                               const ComponentAssignment& a) {
    return make_report(RelationId::quadratic, quadratic_sum(config, a),
                       Rat(2 * config.chi()));
}

RelationReport check_sum_order2(const FiberConfiguration& config,
                                const ComponentAssignment& a) {
    require_match(config, a);
    if (order_of(config, a) != 2)
        throw InputError(errc::wrong_order, "section must have exact order 2");
    long sum = 0;
    for (long k : a.components()) sum += k;
    return make_report(RelationId::sum_order2, Rat(sum), Rat(4 * config.chi()));
}

RelationReport check_sum_order3plus(const FiberConfiguration& config,
                                    const ComponentAssignment& a) {
    require_match(config, a);
    if (order_of(config, a) < 3)
        throw InputError(errc::wrong_order, "section must have exact order >= 3");
    long sum = 0;
    for (std::size_t j = 0; j < config.fiber_count(); ++j)
        sum += cycle_distance(config.fiber_lengths()[j], a.components()[j]);
    return make_report(RelationId::sum_order3plus, Rat(sum), Rat(3 * config.chi()));
}

RelationReport check_square_sum(const FiberConfiguration& config,
                                const ComponentAssignment& a) {
    require_match(config, a);
    long order = order_of(config, a);
    if (order < 2)
        throw InputError(errc::wrong_order, "section must have exact order >= 2");
    for (std::size_t j = 0; j < config.fiber_count(); ++j) {
        long m = config.fiber_lengths()[j];
        long k = a.components()[j];
        if (k != cycle_distance(m, k))
            throw InputError(errc::not_minimal,
                             "square-sum relation requires minimal component numbers");
    }
    Rat sum(0);
    for (std::size_t j = 0; j < config.fiber_count(); ++j) {
        long m = config.fiber_lengths()[j];
        long k = a.components()[j];
        sum += rat(k * k, m);
    }
    long factor = order == 2 ? 2 : 1;
    return make_report(RelationId::square_sum, sum, Rat(factor * config.chi()));
}

RelationReport check_integrality(const FiberConfiguration& config,
                                 const ComponentAssignment& a) {
    require_match(config, a);
    Rat sum(0);
    for (std::size_t j = 0; j < config.fiber_count(); ++j) {
        long m = config.fiber_lengths()[j];
        long k = a.components()[j];
        sum += rat((m - 1) * k * k, 2 * m);
    }
    Rat floor_value(rat_floor(sum));
    return make_report(RelationId::integrality, sum, floor_value);
}

RelationReport check_fixed_point_sum(const FiberConfiguration& config,
                                     const ComponentAssignment& a, long p) {
    require_match(config, a);
    if (!is_prime(p))
        throw InputError(errc::not_prime, "fixed point rule requires prime order");
    if (order_of(config, a) != p)
        throw InputError(errc::wrong_order,
                         "section order does not match the given prime");
    long sum = 0;
    for (std::size_t j = 0; j < config.fiber_count(); ++j)
        if (a.components()[j] != 0) sum += config.fiber_lengths()[j];
    return make_report(RelationId::fixed_point, Rat(sum),
                       rat(12 * config.chi() * p, p + 1));
}

EulerDivisibilityReport check_euler_divisibility(long p, long chi) {
    if (!is_prime(p) || p == 2)
        throw InputError(errc::not_odd_prime, "p must be an odd prime");
    if (chi < 1)
        throw InputError(errc::nonpositive_chi, "chi must be positive");
    long divisor = (p * p - 1) / 2;
    long remainder = (12 * chi) % divisor;
    EulerDivisibilityReport rep;
    rep.rel = make_report(RelationId::euler_divisibility, Rat(remainder), Rat(0));
    rep.minimal_euler = divisor;
    return rep;
}

}  // namespace torsec
