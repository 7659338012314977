#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "core/hilbert.hpp"
#include "core/linalg.hpp"
#include "core/qbist.hpp"
#include "core/rng.hpp"
#include "core/sic.hpp"
#include "core/weyl_heisenberg.hpp"

namespace sicq::test {

// Haar-random pure state: normalized vector of iid complex Gaussians.
inline CVec random_pure_vector(std::size_t d, std::uint64_t seed) {
    Xoshiro256pp rng(seed);
    CVec v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = rng.complex_normal();
    return v.normalized();
}

inline DensityOperator random_pure_state(std::size_t d, std::uint64_t seed) {
    return DensityOperator(projector(random_pure_vector(d, seed)));
}

// Fiducial for d = 2 at Bloch direction (1,1,1)/sqrt(3); its orbit is the
// regular tetrahedron, so every pairwise overlap-squared is exactly 1/3.
inline CVec bloch_fiducial_d2() {
    const double theta = std::acos(1.0 / std::sqrt(3.0));
    CVec v(2);
    v[0] = cplx(std::cos(theta / 2.0), 0.0);
    v[1] = std::polar(std::sin(theta / 2.0), std::numbers::pi / 4.0);
    return v;
}

// Fiducial for d = 3 from the Hesse configuration: (0, 1, -1)/sqrt(2).
inline CVec hesse_fiducial_d3() {
    CVec v(3);
    v[0] = cplx(0.0, 0.0);
    v[1] = cplx(1.0 / std::sqrt(2.0), 0.0);
    v[2] = cplx(-1.0 / std::sqrt(2.0), 0.0);
    return v;
}

inline SicPovm make_sic(const CVec& fiducial) {
    WhGroup g(fiducial.dim());
    auto outcome = verify_sic(g.orbit(fiducial));
    if (!outcome.povm) throw std::runtime_error("test fixture fiducial failed verification");
    return *std::move(outcome.povm);
}

inline SicPovm searched_sic(std::size_t d, std::uint64_t seed) {
    SearchConfig cfg;
    cfg.seed = seed;
    SearchReport rep = search_fiducial(d, cfg);
    if (!rep.converged) throw std::runtime_error("test fixture search did not converge");
    return make_sic(rep.fiducial);
}

// Mean over seeded trials of the worst gap between the deformed and the
// classical total-probability rules, for random pure states and bases.
inline double mean_max_abs_gap(const SicPovm& s, std::size_t trials, std::uint64_t seed) {
    const std::size_t d = s.dim();
    double sum = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const DensityOperator rho = random_pure_state(d, derive_seed(seed, 2 * t));
        const GroundMeasurement m = GroundMeasurement::random(d, derive_seed(seed, 2 * t + 1));
        const SicProbabilityVector p = to_probs(s, rho);
        const ConditionalMatrix r = conditional_matrix(s, m);
        sum += deviation_report(p, r).max_abs_gap;
    }
    return sum / static_cast<double>(trials);
}

}  // namespace sicq::test
