#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"

#include "sicq/sicq.h"

namespace {

struct Handle {
    sicq_sic* ptr = nullptr;
    ~Handle() { sicq_sic_free(ptr); }
};

// Searched fiducial for d, interleaved [re, im]; REQUIREs convergence.
std::vector<double> searched_fiducial(std::size_t d, std::uint64_t seed) {
    std::vector<double> fid(2 * d);
    int conv = 0;
    REQUIRE(sicq_search(d, seed, 50, 20000, 1e-16, fid.data(), nullptr, nullptr, nullptr,
                        &conv) == SICQ_OK);
    REQUIRE(conv == 1);
    return fid;
}

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("version string is present") {
    REQUIRE(sicq_version() != nullptr);
    CHECK(std::string(sicq_version()) == "0.1.0");
}

TEST_CASE("search converges and the fiducial verifies") {
    std::vector<double> fid(4);
    double objective = -1.0;
    std::size_t restarts = 0, iters = 0;
    int conv = 0;
    REQUIRE(sicq_search(2, 1, 50, 20000, 1e-16, fid.data(), &objective, &restarts, &iters,
                        &conv) == SICQ_OK);
    CHECK(conv == 1);
    CHECK(objective <= 1e-16);
    CHECK(restarts >= 1);
    CHECK(iters >= 1);

    sicq_verify_report rep{};
    Handle h;
    REQUIRE(sicq_sic_from_fiducial(2, fid.data(), 1e-10, &rep, &h.ptr) == SICQ_OK);
    REQUIRE(h.ptr != nullptr);
    CHECK(sicq_sic_dim(h.ptr) == 2);
    CHECK(rep.residual <= 1e-10);
    CHECK(rep.resolution_defect <= 1e-10);
    CHECK(rep.gram_min_singular > 1e-8);
    CHECK(rep.equiangular == 1);
    CHECK(rep.resolves_identity == 1);
    CHECK(rep.gram_nonsingular == 1);

    CHECK(sicq_sic_residual(h.ptr) == rep.residual);

    std::vector<double> vecs(2 * 4 * 2);
    REQUIRE(sicq_sic_vectors(h.ptr, vecs.data()) == SICQ_OK);
    // Vector 0 is the fiducial itself.
    for (std::size_t k = 0; k < 4; ++k) CHECK(vecs[k] == fid[k]);
    // Every orbit vector is unit norm.
    for (std::size_t i = 0; i < 4; ++i) {
        double n = 0.0;
        for (std::size_t r = 0; r < 2; ++r) {
            const double re = vecs[2 * (i * 2 + r)];
            const double im = vecs[2 * (i * 2 + r) + 1];
            n += re * re + im * im;
        }
        CHECK(std::abs(n - 1.0) < 1e-12);
    }
}

TEST_CASE("search is deterministic and reports non-convergence without error") {
    std::vector<double> a(4), b(4);
    double fa = 0.0, fb = 0.0;
    int ca = 0, cb = 0;
    REQUIRE(sicq_search(2, 33, 50, 20000, 1e-16, a.data(), &fa, nullptr, nullptr, &ca) ==
            SICQ_OK);
    REQUIRE(sicq_search(2, 33, 50, 20000, 1e-16, b.data(), &fb, nullptr, nullptr, &cb) ==
            SICQ_OK);
    CHECK(ca == 1);
    CHECK(cb == 1);
    CHECK(fa == fb);
    CHECK(std::memcmp(a.data(), b.data(), sizeof(double) * 4) == 0);

    int conv = 1;
    double objective = 0.0;
    std::vector<double> fid3(6);
    REQUIRE(sicq_search(3, 1, 0, 20000, 1e-16, fid3.data(), &objective, nullptr, nullptr,
                        &conv) == SICQ_OK);
    CHECK(conv == 0);
}

TEST_CASE("statuses map argument and domain failures distinctly") {
    std::vector<double> fid(4);
    int conv = 0;
    CHECK(sicq_search(1, 1, 1, 100, 1e-16, fid.data(), nullptr, nullptr, nullptr, &conv) ==
          SICQ_ERR_DIMENSION);
    CHECK(std::string(sicq_last_error()).size() > 0);

    Handle h;
    CHECK(sicq_sic_from_fiducial(2, nullptr, 1e-10, nullptr, &h.ptr) ==
          SICQ_ERR_INVALID_ARGUMENT);
    double fp = 0.0;
    CHECK(sicq_frame_potential(2, nullptr, &fp) == SICQ_ERR_INVALID_ARGUMENT);
}

TEST_CASE("verification failure fills the report and returns no handle") {
    std::vector<double> fid = searched_fiducial(2, 1);
    fid[0] += 1e-3;
    // Renormalize so the failure lands in equiangularity, not the norm check.
    double n = 0.0;
    for (double v : fid) n += v * v;
    for (double& v : fid) v /= std::sqrt(n);

    sicq_verify_report rep{};
    Handle h;
    CHECK(sicq_sic_from_fiducial(2, fid.data(), 1e-10, &rep, &h.ptr) == SICQ_ERR_VERIFICATION);
    CHECK(h.ptr == nullptr);
    CHECK(rep.equiangular == 0);
    CHECK(rep.residual > 1e-5);
    CHECK(rep.worst_i != rep.worst_j);
    CHECK(std::string(sicq_last_error()).size() > 0);
}

TEST_CASE("sicq_verify accepts explicit vector sets") {
    std::vector<double> fid = searched_fiducial(2, 1);
    Handle h;
    REQUIRE(sicq_sic_from_fiducial(2, fid.data(), 1e-10, nullptr, &h.ptr) == SICQ_OK);
    std::vector<double> vecs(2 * 4 * 2);
    REQUIRE(sicq_sic_vectors(h.ptr, vecs.data()) == SICQ_OK);

    sicq_verify_report rep{};
    Handle h2;
    CHECK(sicq_verify(2, vecs.data(), 1e-10, &rep, &h2.ptr) == SICQ_OK);
    CHECK(h2.ptr != nullptr);
    CHECK(rep.equiangular == 1);
}

TEST_CASE("frame potential evaluates the hand value at a basis vector") {
    double fp = 0.0;
    std::vector<double> e0 = {1.0, 0.0, 0.0, 0.0};
    REQUIRE(sicq_frame_potential(2, e0.data(), &fp) == SICQ_OK);
    CHECK(std::abs(fp - 2.0 / 3.0) < 1e-14);
}

TEST_CASE("probability round trip through the interleaved layout") {
    std::vector<double> fid = searched_fiducial(3, 1);
    Handle h;
    REQUIRE(sicq_sic_from_fiducial(3, fid.data(), 1e-10, nullptr, &h.ptr) == SICQ_OK);

    std::vector<double> rho(2 * 9);
    REQUIRE(sicq_random_density(3, 2, 77, rho.data()) == SICQ_OK);

    std::vector<double> probs(9);
    REQUIRE(sicq_to_probs(h.ptr, rho.data(), probs.data()) == SICQ_OK);
    double sum = 0.0;
    for (double p : probs) sum += p;
    CHECK(std::abs(sum - 1.0) < 1e-12);

    std::vector<double> back(2 * 9);
    double min_eig = 0.0;
    REQUIRE(sicq_from_probs(h.ptr, probs.data(), back.data(), &min_eig) == SICQ_OK);
    CHECK(min_eig > -1e-10);
    double worst = 0.0;
    for (std::size_t k = 0; k < back.size(); ++k) {
        worst = std::max(worst, std::abs(back[k] - rho[k]));
    }
    CHECK(worst < 1e-12);

    double purity = 0.0;
    REQUIRE(sicq_purity_from_probs(3, probs.data(), &purity) == SICQ_OK);
    CHECK(purity < 1.0 + 1e-12);
}

TEST_CASE("invalid probability vectors are rejected with the offending eigenvalue") {
    std::vector<double> fid = searched_fiducial(2, 1);
    Handle h;
    REQUIRE(sicq_sic_from_fiducial(2, fid.data(), 1e-10, nullptr, &h.ptr) == SICQ_OK);

    std::vector<double> point = {1.0, 0.0, 0.0, 0.0};
    std::vector<double> rho(8);
    double min_eig = 0.0;
    CHECK(sicq_from_probs(h.ptr, point.data(), rho.data(), &min_eig) == SICQ_ERR_VALIDITY);
    CHECK(min_eig < -1e-3);

    std::vector<double> off_simplex = {0.3, 0.3, 0.3, 0.3};
    CHECK(sicq_from_probs(h.ptr, off_simplex.data(), rho.data(), &min_eig) ==
          SICQ_ERR_NORMALIZATION);
}

TEST_CASE("urgleichung agrees with direct Born probabilities") {
    std::vector<double> fid = searched_fiducial(2, 1);
    Handle h;
    REQUIRE(sicq_sic_from_fiducial(2, fid.data(), 1e-10, nullptr, &h.ptr) == SICQ_OK);
    std::vector<double> rho(8);
    REQUIRE(sicq_random_density(2, 1, 5, rho.data()) == SICQ_OK);

    std::vector<double> q(2), pc(2), born(2);
    double max_born_error = 1.0, max_abs_gap = -1.0;
    REQUIRE(sicq_urgleichung(h.ptr, rho.data(), 9, q.data(), pc.data(), born.data(),
                             &max_born_error, &max_abs_gap) == SICQ_OK);
    CHECK(max_born_error < 1e-12);
    CHECK(max_abs_gap > 0.0);
    for (std::size_t j = 0; j < 2; ++j) CHECK(std::abs(q[j] - born[j]) < 1e-12);
}

TEST_CASE("de Finetti checks and as-if sampling run through the C surface") {
    // 0.6 |0><0| + 0.4 I/2 at d = 2, row-major interleaved components.
    std::vector<double> weights = {0.6, 0.4};
    std::vector<double> comps = {
        1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,  // |0><0|
        0.5, 0.0, 0.0, 0.0, 0.0, 0.0, 0.5, 0.0,  // I/2
    };
    double asym = -1.0, incons = -1.0;
    REQUIRE(sicq_definetti_check(2, 2, weights.data(), comps.data(), 3, &asym, &incons) ==
            SICQ_OK);
    CHECK(asym < 1e-12);
    CHECK(incons < 1e-12);

    std::vector<double> fid = searched_fiducial(2, 1);
    Handle h;
    REQUIRE(sicq_sic_from_fiducial(2, fid.data(), 1e-10, nullptr, &h.ptr) == SICQ_OK);
    std::size_t n_used = 0;
    double law_diff = -1.0, tv = -1.0;
    REQUIRE(sicq_definetti_as_if(h.ptr, 2, weights.data(), comps.data(), 3, 11, 20000, &n_used,
                                 &law_diff, &tv) == SICQ_OK);
    CHECK(n_used == 3);
    CHECK(law_diff < 1e-12);
    CHECK(tv < 0.2);

    CHECK(sicq_definetti_check(2, 2, weights.data(), comps.data(), 14, &asym, &incons) ==
          SICQ_ERR_CAP);
}

}  // TEST_SUITE
