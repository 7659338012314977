#include "sicq/sicq.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/definetti.hpp"
#include "core/errors.hpp"
#include "core/hilbert.hpp"
#include "core/qbist.hpp"
#include "core/sic.hpp"
#include "core/version.hpp"
#include "core/weyl_heisenberg.hpp"

struct sicq_sic {
    sicq::SicPovm povm;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

template <typename F>
sicq_status guarded(F&& f) {
    try {
        return f();
    } catch (const sicq::DimensionError& e) {
        set_error(e.what());
        return SICQ_ERR_DIMENSION;
    } catch (const sicq::NormalizationError& e) {
        set_error(e.what());
        return SICQ_ERR_NORMALIZATION;
    } catch (const sicq::HermiticityError& e) {
        set_error(e.what());
        return SICQ_ERR_HERMITICITY;
    } catch (const sicq::DensityError& e) {
        set_error(e.what());
        return SICQ_ERR_DENSITY;
    } catch (const sicq::ValidityError& e) {
        set_error(e.what());
        return SICQ_ERR_VALIDITY;
    } catch (const sicq::CapError& e) {
        set_error(e.what());
        return SICQ_ERR_CAP;
    } catch (const std::exception& e) {
        set_error(e.what());
        return SICQ_ERR_INTERNAL;
    }
}

sicq::CVec vec_from_interleaved(std::size_t d, const double* data) {
    sicq::CVec v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = sicq::cplx(data[2 * i], data[2 * i + 1]);
    return v;
}

void vec_to_interleaved(const sicq::CVec& v, double* out) {
    for (std::size_t i = 0; i < v.dim(); ++i) {
        out[2 * i] = v[i].real();
        out[2 * i + 1] = v[i].imag();
    }
}

sicq::CMat mat_from_interleaved(std::size_t d, const double* data) {
    sicq::CMat m(d, d);
    for (std::size_t i = 0; i < d * d; ++i) {
        m.data()[i] = sicq::cplx(data[2 * i], data[2 * i + 1]);
    }
    return m;
}

void mat_to_interleaved(const sicq::CMat& m, double* out) {
    for (std::size_t i = 0; i < m.data().size(); ++i) {
        out[2 * i] = m.data()[i].real();
        out[2 * i + 1] = m.data()[i].imag();
    }
}

void fill_report(const sicq::SicCheckReport& r, sicq_verify_report* out) {
    if (!out) return;
    out->residual = r.residual;
    out->worst_i = r.worst_i;
    out->worst_j = r.worst_j;
    out->worst_overlap_sq = r.worst_overlap_sq;
    out->resolution_defect = r.resolution_defect;
    out->gram_min_singular = r.gram_min_singular;
    out->equiangular = r.equiangular ? 1 : 0;
    out->resolves_identity = r.resolves_identity ? 1 : 0;
    out->gram_nonsingular = r.gram_nonsingular ? 1 : 0;
}

sicq_status finish_verify(sicq::SicVerifyOutcome outcome, sicq_verify_report* report,
                          sicq_sic** out) {
    fill_report(outcome.report, report);
    if (!outcome.report.ok()) {
        set_error("not a SIC: residual " + std::to_string(outcome.report.residual) +
                  " at pair (" + std::to_string(outcome.report.worst_i) + ", " +
                  std::to_string(outcome.report.worst_j) + ")");
        return SICQ_ERR_VERIFICATION;
    }
    if (out) *out = new sicq_sic{std::move(*outcome.povm)};
    return SICQ_OK;
}

sicq::DeFinettiMixture mixture_from_arrays(std::size_t d, std::size_t k, const double* weights,
                                           const double* components) {
    std::vector<double> w(weights, weights + k);
    std::vector<sicq::DensityOperator> comps;
    comps.reserve(k);
    for (std::size_t c = 0; c < k; ++c) {
        comps.emplace_back(sicq::HermOp(mat_from_interleaved(d, components + c * d * d * 2)));
    }
    return sicq::DeFinettiMixture(std::move(w), std::move(comps));
}

}  // namespace

extern "C" {

const char* sicq_version(void) { return sicq::kVersion; }

const char* sicq_last_error(void) { return g_last_error.c_str(); }

sicq_status sicq_verify(size_t d, const double* vectors, double tol, sicq_verify_report* report,
                        sicq_sic** out) {
    if (!vectors) {
        set_error("sicq_verify: vectors is NULL");
        return SICQ_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        std::vector<sicq::CVec> vs;
        vs.reserve(d * d);
        for (std::size_t i = 0; i < d * d; ++i) {
            vs.push_back(vec_from_interleaved(d, vectors + i * 2 * d));
        }
        return finish_verify(sicq::verify_sic(vs, tol), report, out);
    });
}

sicq_status sicq_sic_from_fiducial(size_t d, const double* fiducial, double tol,
                                   sicq_verify_report* report, sicq_sic** out) {
    if (!fiducial) {
        set_error("sicq_sic_from_fiducial: fiducial is NULL");
        return SICQ_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        const sicq::WhGroup g(d);
        const sicq::CVec f = vec_from_interleaved(d, fiducial);
        return finish_verify(sicq::verify_sic(g.orbit(f), tol), report, out);
    });
}

void sicq_sic_free(sicq_sic* s) { delete s; }

size_t sicq_sic_dim(const sicq_sic* s) { return s ? s->povm.dim() : 0; }

double sicq_sic_residual(const sicq_sic* s) { return s ? s->povm.residual() : 0.0; }

sicq_status sicq_sic_vectors(const sicq_sic* s, double* out) {
    if (!s || !out) {
        set_error("sicq_sic_vectors: NULL argument");
        return SICQ_ERR_INVALID_ARGUMENT;
    }
    const std::size_t d = s->povm.dim();
    for (std::size_t i = 0; i < d * d; ++i) {
        vec_to_interleaved(s->povm.vectors()[i], out + i * 2 * d);
    }
    return SICQ_OK;
}

sicq_status sicq_search(size_t d, uint64_t seed, size_t max_restarts, size_t max_iters,
                        double success_threshold, double* fiducial, double* objective,
                        size_t* restarts_used, size_t* iterations, int* converged) {
    return guarded([&] {
        sicq::SearchConfig cfg;
        cfg.max_restarts = max_restarts;
        cfg.max_iters = max_iters;
        cfg.success_threshold = success_threshold;
        cfg.seed = seed;
        const sicq::SearchReport rep = sicq::search_fiducial(d, cfg);
        if (fiducial) vec_to_interleaved(rep.fiducial, fiducial);
        if (objective) *objective = rep.objective;
        if (restarts_used) *restarts_used = rep.restarts_used;
        if (iterations) *iterations = rep.iterations;
        if (converged) *converged = rep.converged ? 1 : 0;
        return SICQ_OK;
    });
}

sicq_status sicq_frame_potential(size_t d, const double* fiducial, double* value) {
    if (!fiducial || !value) {
        set_error("sicq_frame_potential: NULL argument");
        return SICQ_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        const sicq::WhGroup g(d);
        *value = sicq::frame_potential(g, vec_from_interleaved(d, fiducial));
        return SICQ_OK;
    });
}

sicq_status sicq_to_probs(const sicq_sic* s, const double* rho, double* probs) {
    if (!s || !rho || !probs) {
        set_error("sicq_to_probs: NULL argument");
        return SICQ_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        const std::size_t d = s->povm.dim();
        const sicq::DensityOperator state(sicq::HermOp(mat_from_interleaved(d, rho)));
        const sicq::SicProbabilityVector p = sicq::to_probs(s->povm, state);
        for (std::size_t i = 0; i < d * d; ++i) probs[i] = p[i];
        return SICQ_OK;
    });
}

sicq_status sicq_from_probs(const sicq_sic* s, const double* probs, double* rho,
                            double* min_eigenvalue) {
    if (!s || !probs || !rho) {
        set_error("sicq_from_probs: NULL argument");
        return SICQ_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        const std::size_t d = s->povm.dim();
        const sicq::SicProbabilityVector p(d, std::vector<double>(probs, probs + d * d));
        const sicq::HermOp op = sicq::reconstruct_operator(s->povm, p);
        const double min_eig = sicq::min_eigenvalue(op);
        if (min_eigenvalue) *min_eigenvalue = min_eig;
        if (min_eig < sicq::kPositivityFloor) {
            set_error("from_probs: reconstruction has minimum eigenvalue " +
                      std::to_string(min_eig) + ", not a quantum state");
            return SICQ_ERR_VALIDITY;
        }
        mat_to_interleaved(op.mat(), rho);
        return SICQ_OK;
    });
}

sicq_status sicq_purity_from_probs(size_t d, const double* probs, double* purity) {
    if (!probs || !purity) {
        set_error("sicq_purity_from_probs: NULL argument");
        return SICQ_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        const sicq::SicProbabilityVector p(d, std::vector<double>(probs, probs + d * d));
        *purity = sicq::purity_from_probs(p);
        return SICQ_OK;
    });
}

sicq_status sicq_urgleichung(const sicq_sic* s, const double* rho, uint64_t basis_seed,
                             double* q, double* p_classical, double* born,
                             double* max_born_error, double* max_abs_gap) {
    if (!s || !rho) {
        set_error("sicq_urgleichung: NULL argument");
        return SICQ_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        const std::size_t d = s->povm.dim();
        const sicq::DensityOperator state(sicq::HermOp(mat_from_interleaved(d, rho)));
        const sicq::GroundMeasurement m = sicq::GroundMeasurement::random(d, basis_seed);
        const sicq::SicProbabilityVector p = sicq::to_probs(s->povm, state);
        const sicq::ConditionalMatrix r = sicq::conditional_matrix(s->povm, m);
        const std::vector<double> qv = sicq::born_urgleichung(p, r);
        const std::vector<double> cv = sicq::classical_ltp(p, r);
        const std::vector<double> bv = sicq::born_direct(state, m);
        double born_err = 0.0;
        double gap = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
            born_err = std::max(born_err, std::abs(qv[j] - bv[j]));
            gap = std::max(gap, std::abs(qv[j] - cv[j]));
            if (q) q[j] = qv[j];
            if (p_classical) p_classical[j] = cv[j];
            if (born) born[j] = bv[j];
        }
        if (max_born_error) *max_born_error = born_err;
        if (max_abs_gap) *max_abs_gap = gap;
        return SICQ_OK;
    });
}

sicq_status sicq_random_density(size_t d, size_t rank, uint64_t seed, double* rho) {
    if (!rho) {
        set_error("sicq_random_density: NULL argument");
        return SICQ_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        mat_to_interleaved(sicq::random_density(d, rank, seed).op().mat(), rho);
        return SICQ_OK;
    });
}

sicq_status sicq_definetti_check(size_t d, size_t k, const double* weights,
                                 const double* components, size_t n, double* max_asymmetry,
                                 double* max_inconsistency) {
    if (!weights || !components) {
        set_error("sicq_definetti_check: NULL argument");
        return SICQ_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        const sicq::DeFinettiMixture mix = mixture_from_arrays(d, k, weights, components);
        if (max_asymmetry) {
            *max_asymmetry = sicq::check_symmetry(sicq::build_exchangeable(mix, n)).max_asymmetry;
        }
        if (max_inconsistency) {
            *max_inconsistency = sicq::check_extendability(mix, n).max_inconsistency;
        }
        return SICQ_OK;
    });
}

sicq_status sicq_definetti_as_if(const sicq_sic* s, size_t k, const double* weights,
                                 const double* components, size_t n, uint64_t seed,
                                 size_t trials, size_t* n_used,
                                 double* exact_law_max_abs_diff, double* tv_distance) {
    if (!s || !weights || !components) {
        set_error("sicq_definetti_as_if: NULL argument");
        return SICQ_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        const std::size_t d = s->povm.dim();
        const sicq::DeFinettiMixture mix = mixture_from_arrays(d, k, weights, components);
        const sicq::AsIfReport rep = sicq::as_if_statistics(mix, s->povm, n, seed, trials);
        if (n_used) *n_used = rep.n_used;
        if (exact_law_max_abs_diff) *exact_law_max_abs_diff = rep.exact_law_max_abs_diff;
        if (tv_distance) *tv_distance = rep.tv_distance;
        return SICQ_OK;
    });
}

}  // extern "C"
