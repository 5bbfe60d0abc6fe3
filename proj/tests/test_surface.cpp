#include <doctest.h>

#include <random>

#include "torsec/surface.hpp"

using namespace torsec;

namespace {

FiberConfiguration k3() { return FiberConfiguration({1, 1, 1, 7, 7, 7}, 2, true); }
FiberConfiguration beauville6321() { return FiberConfiguration({6, 3, 2, 1}, 1, true); }

}  // namespace

TEST_CASE("configuration validation") {
    CHECK(k3().euler_number() == 24);
    CHECK(beauville6321().euler_number() == 12);
    CHECK(beauville6321().total_length() == 12);

    CHECK_THROWS_WITH_AS((FiberConfiguration({5, 5}, 1, true)),
                         doctest::Contains("12*chi"), InputError);
    try {
        FiberConfiguration({5, 5}, 1, true);
    } catch (const InputError& e) {
        CHECK(e.code() == errc::euler_mismatch);
    }
    try {
        FiberConfiguration({}, 1, false);
    } catch (const InputError& e) {
        CHECK(e.code() == errc::empty_fiber_list);
    }
    try {
        FiberConfiguration({3, 0}, 1, false);
    } catch (const InputError& e) {
        CHECK(e.code() == errc::nonpositive_fiber_length);
    }
    try {
        FiberConfiguration({12}, 0, false);
    } catch (const InputError& e) {
        CHECK(e.code() == errc::nonpositive_chi);
    }
    // non-strict allows the Euler mismatch
    CHECK(FiberConfiguration({5, 5}, 1, false).total_length() == 10);
}

TEST_CASE("assignment validation") {
    auto config = beauville6321();
    CHECK_NOTHROW(ComponentAssignment(config, {3, 0, 1, 0}, 2));
    CHECK_THROWS_AS(ComponentAssignment(config, {6, 0, 1, 0}, 2), InputError);
    CHECK_THROWS_AS(ComponentAssignment(config, {3, 0, 1}, 2), InputError);
    // order 2 cannot produce component 2 in a length-6 fiber
    CHECK_THROWS_AS(ComponentAssignment(config, {2, 0, 0, 0}, 2), InputError);
    // but a claimed order that is a multiple of the exact order is fine
    CHECK_NOTHROW(ComponentAssignment(config, {3, 0, 1, 0}, 6));
}

TEST_CASE("cycle distance") {
    CHECK(cycle_distance(7, 4) == 3);
    CHECK(cycle_distance(7, 0) == 0);
    CHECK(cycle_distance(6, 5) == 1);
    CHECK(cycle_distance(6, 3) == 3);
    CHECK_THROWS_AS(cycle_distance(7, 7), InputError);
    for (long m = 1; m <= 12; ++m)
        for (long k = 0; k < m; ++k) CHECK(cycle_distance(m, k) == cycle_distance(m, (m - k) % m));
}

TEST_CASE("reorient") {
    auto config = k3();
    ComponentAssignment a(config, {0, 0, 0, 1, 2, 4}, 7);
    CHECK(reorient(config, a, 5).components() == std::vector<long>{0, 0, 0, 1, 2, 3});
    CHECK(reorient(config, a, 0).components() == a.components());  // k = 0 fixed

    auto b6321 = beauville6321();
    ComponentAssignment half(b6321, {3, 0, 1, 0}, 2);
    CHECK(reorient(b6321, half, 0).components() == half.components());  // m/2 fixed

    // involution on every index
    for (std::size_t j = 0; j < config.fiber_count(); ++j)
        CHECK(reorient(config, reorient(config, a, j), j) == a);
    CHECK_THROWS_AS(reorient(config, a, 6), InputError);
}

TEST_CASE("minimal form") {
    auto b6321 = beauville6321();
    ComponentAssignment s6(b6321, {5, 1, 1, 0}, 6);
    CHECK(minimal_form(b6321, s6).components() == std::vector<long>{1, 1, 1, 0});

    auto config = k3();
    ComponentAssignment zero(config, {0, 0, 0, 0, 0, 0}, 1);
    CHECK(minimal_form(config, zero) == zero);
    ComponentAssignment a(config, {0, 0, 0, 1, 2, 4}, 7);
    CHECK(minimal_form(config, a).components() == std::vector<long>{0, 0, 0, 1, 2, 3});
    // idempotent
    CHECK(minimal_form(config, minimal_form(config, a)) == minimal_form(config, a));
}

TEST_CASE("multiples") {
    auto b6321 = beauville6321();
    ComponentAssignment s3(b6321, {2, 1, 0, 0}, 3);
    CHECK(multiple(b6321, s3, 2).components() == std::vector<long>{4, 2, 0, 0});
    CHECK(multiple(b6321, s3, 3).is_zero());
    CHECK(multiple(b6321, s3, 3).order() == 1);

    // order-2 doubling rule: k = m/2 goes to 0, k < m/2 doubles
    ComponentAssignment s6(b6321, {1, 1, 1, 0}, 6);
    auto doubled = multiple(b6321, s6, 2);
    for (std::size_t j = 0; j < 4; ++j) {
        long m = b6321.fiber_lengths()[j];
        long k = s6.components()[j];
        CHECK(doubled.components()[j] == (2 * k == m ? 0 : 2 * k));
    }
    CHECK(doubled.order() == 3);
}

TEST_CASE("multiple composes and respects order") {
    auto config = FiberConfiguration({12, 6, 4, 2}, 2, false);
    ComponentAssignment a(config, {1, 1, 1, 1}, 12);
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<long> pick(0, 25);
    for (int trial = 0; trial < 200; ++trial) {
        long alpha = pick(rng), beta = pick(rng);
        CHECK(multiple(config, multiple(config, a, alpha), beta) ==
              multiple(config, a, alpha * beta));
    }
    CHECK(multiple(config, a, 1) == a);
    for (long alpha = 0; alpha <= 12; ++alpha)
        CHECK(order_of(config, multiple(config, a, alpha)) ==
              order_of(config, a) / std::gcd(alpha, order_of(config, a)));
}

TEST_CASE("minimal form commutes with fiber permutation") {
    // permuting fibers (together with their lengths) then minimizing equals
    // minimizing then permuting
    FiberConfiguration config({6, 3, 2, 1}, 1, true);
    FiberConfiguration permuted_config({3, 6, 1, 2}, 1, true);
    ComponentAssignment a(config, {5, 2, 1, 0}, 6);
    ComponentAssignment a_permuted(permuted_config, {2, 5, 0, 1}, 6);
    ComponentAssignment min_then_permute = minimal_form(config, a);
    ComponentAssignment permute_then_min = minimal_form(permuted_config, a_permuted);
    CHECK(permute_then_min.components() ==
          std::vector<long>{min_then_permute.components()[1],
                            min_then_permute.components()[0],
                            min_then_permute.components()[3],
                            min_then_permute.components()[2]});
}

TEST_CASE("order_of") {
    auto b6321 = beauville6321();
    CHECK(order_of(b6321, ComponentAssignment(b6321, {3, 0, 1, 0}, 2)) == 2);
    CHECK(order_of(b6321, ComponentAssignment(b6321, {0, 0, 0, 0}, 1)) == 1);
    auto config = k3();
    CHECK(order_of(config, ComponentAssignment(config, {0, 0, 0, 1, 2, 3}, 7)) == 7);
}
