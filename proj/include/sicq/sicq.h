#ifndef SICQ_H
#define SICQ_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Shared-library interface. Complex data crosses this boundary as interleaved
 * doubles [re0, im0, re1, im1, ...]; matrices are row-major. All functions
 * return a status; on any non-OK status sicq_last_error() carries a message
 * for the calling thread. Output pointers marked nullable may be NULL when
 * the caller does not want that field. */

typedef enum sicq_status {
    SICQ_OK = 0,
    SICQ_ERR_DIMENSION = 1,      /* mismatched or unusable dimensions */
    SICQ_ERR_NORMALIZATION = 2,  /* unit-norm or sum-to-one violated */
    SICQ_ERR_HERMITICITY = 3,    /* matrix not self-adjoint */
    SICQ_ERR_DENSITY = 4,        /* not a density operator */
    SICQ_ERR_VALIDITY = 5,       /* probabilities outside the quantum set */
    SICQ_ERR_CAP = 6,            /* dense dimension cap exceeded */
    SICQ_ERR_VERIFICATION = 7,   /* well-formed input, but not a SIC */
    SICQ_ERR_INVALID_ARGUMENT = 8,
    SICQ_ERR_INTERNAL = 9
} sicq_status;

const char* sicq_version(void);

/* Message for the most recent failing call on this thread; empty string if
 * none. The pointer stays valid until the thread's next failing call. */
const char* sicq_last_error(void);

/* A verified SIC: d^2 equiangular rank-one projectors. Only produced by the
 * verification entry points below, so a non-NULL handle certifies the
 * defining conditions at the tolerance it was checked with. */
typedef struct sicq_sic sicq_sic;

typedef struct sicq_verify_report {
    double residual;           /* max | overlap^2 - 1/(d+1) | over pairs */
    size_t worst_i;
    size_t worst_j;
    double worst_overlap_sq;
    double resolution_defect;  /* max-abs entry of sum(proj) - d*I */
    double gram_min_singular;  /* smallest singular value of the Gram matrix */
    int equiangular;
    int resolves_identity;
    int gram_nonsingular;
} sicq_verify_report;

/* Checks d^2 candidate vectors (interleaved, vector i at offset i*2*d, in
 * displacement-orbit order i = p*d + q). Returns SICQ_OK and fills *out when
 * all conditions pass, SICQ_ERR_VERIFICATION (report still filled) when the
 * input is well-formed but fails them. report and out are nullable. */
sicq_status sicq_verify(size_t d, const double* vectors, double tol,
                        sicq_verify_report* report, sicq_sic** out);

/* Takes the displacement orbit of one fiducial vector (2*d doubles) and
 * verifies it as above. */
sicq_status sicq_sic_from_fiducial(size_t d, const double* fiducial, double tol,
                                   sicq_verify_report* report, sicq_sic** out);

void sicq_sic_free(sicq_sic* s);

size_t sicq_sic_dim(const sicq_sic* s);
double sicq_sic_residual(const sicq_sic* s);

/* Writes the d^2 vectors, interleaved, vector i at offset i*2*d. The buffer
 * needs d^2 * 2*d doubles. */
sicq_status sicq_sic_vectors(const sicq_sic* s, double* out);

/* Seeded multi-restart frame-potential descent. Non-convergence within the
 * budget is SICQ_OK with *converged = 0, not an error. fiducial needs 2*d
 * doubles. Every output pointer here is nullable. */
sicq_status sicq_search(size_t d, uint64_t seed, size_t max_restarts, size_t max_iters,
                        double success_threshold, double* fiducial, double* objective,
                        size_t* restarts_used, size_t* iterations, int* converged);

/* Objective sum over displacements (p,q) != (0,0) of
 * (|<psi|D_pq|psi>|^2 - 1/(d+1))^2 at the given unit fiducial. */
sicq_status sicq_frame_potential(size_t d, const double* fiducial, double* value);

/* probs_i = trace(rho * proj_i / d), the d^2 outcome probabilities that
 * represent rho. rho is d*d interleaved row-major, probs d^2 doubles. */
sicq_status sicq_to_probs(const sicq_sic* s, const double* rho, double* probs);

/* Affine reconstruction sum_i ((d+1) p_i - 1/d) proj_i. Fails with
 * SICQ_ERR_VALIDITY when the result is not positive semidefinite;
 * *min_eigenvalue (nullable) receives the smallest eigenvalue either way. */
sicq_status sicq_from_probs(const sicq_sic* s, const double* probs, double* rho,
                            double* min_eigenvalue);

/* d(d+1) sum_i p_i^2 - 1 for a d^2-outcome probability vector. */
sicq_status sicq_purity_from_probs(size_t d, const double* probs, double* purity);

/* The two total-probability rules for a measurement in a seeded random
 * orthonormal basis: q (deformed rule), p_classical (plain rule), born
 * (direct trace(rho D_j) oracle), each d doubles. max_born_error is
 * max_j |q_j - born_j|, max_abs_gap is max_j |q_j - p_classical_j|. All
 * output pointers nullable. */
sicq_status sicq_urgleichung(const sicq_sic* s, const double* rho, uint64_t basis_seed,
                             double* q, double* p_classical, double* born,
                             double* max_born_error, double* max_abs_gap);

/* Seeded random density operator of the given rank (1 <= rank <= d): G times
 * its adjoint, normalized to unit trace, with G a d-by-rank complex Gaussian.
 * rho receives d*d interleaved row-major entries. */
sicq_status sicq_random_density(size_t d, size_t rank, uint64_t seed, double* rho);

/* Exchangeable-state diagnostics for a k-component mixture over dimension d.
 * weights: k doubles summing to 1; components: k matrices, component c at
 * offset c*d*d*2, each d*d interleaved row-major. Builds the n-system state
 * (cap d^n <= 4096; extendability additionally needs d^(n+1) <= 4096) and
 * reports the worst adjacent-swap asymmetry and the trace-down mismatch.
 * Output pointers nullable. */
sicq_status sicq_definetti_check(size_t d, size_t k, const double* weights,
                                 const double* components, size_t n, double* max_asymmetry,
                                 double* max_inconsistency);

/* Compares sampling a component then n i.i.d. SIC outcomes against the exact
 * joint law of the built state. n is reduced so the joint table fits the
 * dense cap; *n_used (nullable) reports the value actually run.
 * exact_law_max_abs_diff compares the built-state law with the mixture of
 * product laws; tv_distance is empirical-vs-exact total variation. */
sicq_status sicq_definetti_as_if(const sicq_sic* s, size_t k, const double* weights,
                                 const double* components, size_t n, uint64_t seed,
                                 size_t trials, size_t* n_used,
                                 double* exact_law_max_abs_diff, double* tv_distance);

#ifdef __cplusplus
}
#endif

#endif /* SICQ_H */
