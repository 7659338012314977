#include <cmath>

#include "doctest.h"

#include "core/definetti.hpp"
#include "core/errors.hpp"
#include "core/hilbert.hpp"
#include "core/linalg.hpp"

#include "support.hpp"

using namespace sicq;

namespace {

DeFinettiMixture demo_mixture_d2() {
    CMat a(2, 2);
    a(0, 0) = cplx(1.0, 0.0);
    CMat b = CMat::identity(2);
    b *= cplx(0.5, 0.0);
    return DeFinettiMixture({0.6, 0.4},
                            {DensityOperator(HermOp(a)), DensityOperator(HermOp(b))});
}

DeFinettiMixture point_mass_d2() {
    return DeFinettiMixture({1.0}, {test::random_pure_state(2, 3)});
}

}  // namespace

TEST_SUITE("definetti") {

TEST_CASE("mixture validation rejects each malformed input") {
    const DensityOperator rho2 = test::random_pure_state(2, 1);
    const DensityOperator rho3 = test::random_pure_state(3, 1);

    CHECK_THROWS_AS(DeFinettiMixture({}, {}), DimensionError);
    CHECK_THROWS_AS(DeFinettiMixture({0.5, 0.5}, {rho2}), DimensionError);
    CHECK_THROWS_AS(DeFinettiMixture({0.7, 0.3}, {rho2, rho3}), DimensionError);
    CHECK_THROWS_AS(DeFinettiMixture({0.6, 0.6}, {rho2, rho2}), NormalizationError);
    CHECK_THROWS_AS(DeFinettiMixture({1.5, -0.5}, {rho2, rho2}), ValidityError);
}

TEST_CASE("build_exchangeable at n = 1 is the plain mixture average") {
    const DeFinettiMixture mix = demo_mixture_d2();
    const ExchangeableState e = build_exchangeable(mix, 1);
    CHECK(e.n == 1);
    CHECK(e.d == 2);
    CMat expect(2, 2);
    expect += mix.components()[0].mat() * cplx(0.6, 0.0);
    expect += mix.components()[1].mat() * cplx(0.4, 0.0);
    CHECK(max_abs_diff(e.state.mat(), expect) < 1e-15);
}

TEST_CASE("built states are symmetric, trace-one, and of dimension d^n") {
    const DeFinettiMixture mix = demo_mixture_d2();
    const ExchangeableState e = build_exchangeable(mix, 4);
    CHECK(e.state.dim() == 16);
    CHECK(std::abs(e.state.mat().trace() - cplx(1.0, 0.0)) < 1e-12);
    CHECK(check_symmetry(e).max_asymmetry < 1e-13);
}

TEST_CASE("check_symmetry detects an order-dependent state") {
    const DensityOperator a = test::random_pure_state(2, 10);
    const DensityOperator b = test::random_pure_state(2, 11);
    ExchangeableState e{2, 2, DensityOperator::trusted(tensor(a, b).op())};
    CHECK(check_symmetry(e).max_asymmetry > 0.1);
}

TEST_CASE("extendability holds for every mixture by construction") {
    const DeFinettiMixture mix = demo_mixture_d2();
    for (std::size_t n : {1, 2, 3, 5}) {
        CHECK(check_extendability(mix, n).max_inconsistency < 1e-13);
    }
}

TEST_CASE("point-mass mixture diagnostics are numerically zero") {
    const DeFinettiMixture mix = point_mass_d2();
    CHECK(check_symmetry(build_exchangeable(mix, 3)).max_asymmetry < 1e-12);
    CHECK(check_extendability(mix, 3).max_inconsistency < 1e-12);
}

TEST_CASE("the dense cap is enforced with an explanatory error") {
    const DeFinettiMixture mix = demo_mixture_d2();
    CHECK_THROWS_AS(build_exchangeable(mix, 13), CapError);
    CHECK_NOTHROW(build_exchangeable(mix, 12));  // 2^12 = 4096 sits on the cap
    CHECK_THROWS_AS(check_extendability(mix, 12), CapError);
}

TEST_CASE("as-if statistics match the exact joint law") {
    const SicPovm s = test::make_sic(test::bloch_fiducial_d2());
    const DeFinettiMixture mix = demo_mixture_d2();
    const AsIfReport rep = as_if_statistics(mix, s, 2, 5, 20000);
    CHECK(rep.n_requested == 2);
    CHECK(rep.n_used == 2);
    CHECK(rep.trials == 20000);
    CHECK(rep.exact_law_max_abs_diff < 1e-14);
    // Empirical TV over 16^2 = 256 outcomes at 2e4 trials.
    CHECK(rep.tv_distance < 0.1);
    CHECK(rep.tv_distance > 0.0);
}

TEST_CASE("as-if sampling reduces n to stay inside the law-table cap") {
    const SicPovm s = test::make_sic(test::hesse_fiducial_d3());
    DeFinettiMixture mix({1.0}, {test::random_pure_state(3, 6)});
    // (d^2)^n = 9^n: 9^3 = 729 fits, 9^4 = 6561 does not.
    const AsIfReport rep = as_if_statistics(mix, s, 5, 7, 1000);
    CHECK(rep.n_requested == 5);
    CHECK(rep.n_used == 3);
    CHECK(rep.exact_law_max_abs_diff < 1e-14);
}

TEST_CASE("as-if sampling is deterministic in the seed") {
    const SicPovm s = test::make_sic(test::bloch_fiducial_d2());
    const DeFinettiMixture mix = demo_mixture_d2();
    const AsIfReport a = as_if_statistics(mix, s, 2, 9, 5000);
    const AsIfReport b = as_if_statistics(mix, s, 2, 9, 5000);
    CHECK(a.tv_distance == b.tv_distance);
    const AsIfReport c = as_if_statistics(mix, s, 2, 10, 5000);
    CHECK(a.tv_distance != c.tv_distance);
}

}  // TEST_SUITE
