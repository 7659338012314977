#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/hilbert.hpp"
#include "core/linalg.hpp"
#include "core/weyl_heisenberg.hpp"

namespace sicq {

// Equiangularity tolerance applied after polish; searches stop earlier, at
// kSearchSuccessThreshold on the squared-deviation objective.
inline constexpr double kSicVerifyTol = 1e-10;
inline constexpr double kResolutionTol = 1e-10;
inline constexpr double kGramMinSingular = 1e-8;
inline constexpr double kSearchSuccessThreshold = 1e-16;

struct SicCheckReport {
    std::size_t dim = 0;
    // max over i != j of | |<psi_i|psi_j>|^2 - 1/(d+1) |
    double residual = 0.0;
    std::size_t worst_i = 0;
    std::size_t worst_j = 0;
    double worst_overlap_sq = 0.0;
    // max-abs entry of sum_i Pi_i - d*I
    double resolution_defect = 0.0;
    // smallest singular value of the d^2 x d^2 Hilbert-Schmidt Gram matrix
    double gram_min_singular = 0.0;
    bool equiangular = false;
    bool resolves_identity = false;
    bool gram_nonsingular = false;

    bool ok() const { return equiangular && resolves_identity && gram_nonsingular; }
};

struct SicVerifyOutcome;

// d^2 rank-one projectors with all pairwise overlaps 1/(d+1). Instances only
// come out of verify_sic, so holding one certifies the invariants.
class SicPovm {
  public:
    std::size_t dim() const { return dim_; }
    const std::vector<CVec>& vectors() const { return vectors_; }
    const std::vector<HermOp>& projectors() const { return projectors_; }
    double residual() const { return residual_; }

  private:
    SicPovm(std::size_t dim, std::vector<CVec> vectors, std::vector<HermOp> projectors,
            double residual);

    friend SicVerifyOutcome verify_sic(const std::vector<CVec>& vectors, double tol);

    std::size_t dim_;
    std::vector<CVec> vectors_;
    std::vector<HermOp> projectors_;
    double residual_;
};

struct SicVerifyOutcome {
    SicCheckReport report;
    std::optional<SicPovm> povm;  // present exactly when report.ok()
};

// Checks the three defining conditions (equiangular overlaps at tol, sum to
// d*I within 1e-10, Gram min singular value above 1e-8) and reports the worst
// offending pair on failure. Malformed input (wrong count, mixed dimensions,
// unnormalized vectors) throws instead.
SicVerifyOutcome verify_sic(const std::vector<CVec>& vectors, double tol = kSicVerifyTol);

struct SicEffects {
    std::vector<HermOp> effects;  // H_i = Pi_i / d
};

SicEffects effects(const SicPovm& s);

// Entries trace(Pi_i Pi_j) = |<psi_i|psi_j>|^2; real symmetric, returned in
// complex storage so eigh applies directly.
CMat gram_matrix(const SicPovm& s);

// sum over (p,q) != (0,0) of ( |<psi|D_{p,q}|psi>|^2 - 1/(d+1) )^2.
// Zero exactly when the group orbit of the fiducial is a SIC.
double frame_potential(const WhGroup& g, const CVec& fiducial);

// Gradient of z -> frame_potential(g, z/||z||) with respect to the 2d real
// parameters [Re z_0 .. Re z_{d-1}, Im z_0 .. Im z_{d-1}]. Returns the
// objective value at z/||z||. z need not be normalized.
double frame_potential_gradient(const WhGroup& g, const std::vector<cplx>& z,
                                std::vector<double>& grad);

struct SearchConfig {
    std::size_t max_restarts = 50;
    std::size_t max_iters = 20000;  // per restart
    double success_threshold = kSearchSuccessThreshold;
    std::uint64_t seed = 0;
};

struct SearchReport {
    std::size_t dim = 0;
    CVec fiducial = CVec(1);
    double objective = 0.0;
    std::size_t restarts_used = 0;
    std::size_t iterations = 0;  // summed over restarts
    std::uint64_t seed = 0;
    bool converged = false;  // objective <= success_threshold
};

// Seeded multi-restart descent on the frame potential. Each restart draws a
// fresh fiducial from the unit sphere using a stream derived from
// (seed, restart index), so serial and parallel schedules agree. A restart
// that reaches success_threshold keeps polishing toward the numerical floor
// before the report is returned. Non-convergence is converged=false, not an
// error.
SearchReport search_fiducial(std::size_t d, const SearchConfig& config);

}  // namespace sicq
