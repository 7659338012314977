#include "core/sic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "core/rng.hpp"

namespace sicq {

SicPovm::SicPovm(std::size_t dim, std::vector<CVec> vectors, std::vector<HermOp> projectors,
                 double residual)
    : dim_(dim),
      vectors_(std::move(vectors)),
      projectors_(std::move(projectors)),
      residual_(residual) {}

SicVerifyOutcome verify_sic(const std::vector<CVec>& vectors, double tol) {
    if (vectors.empty()) throw DimensionError("verify_sic: no vectors given");
    const std::size_t d = vectors[0].dim();
    if (d < 2) throw DimensionError("verify_sic: dimension must be at least 2");
    const std::size_t m = d * d;
    if (vectors.size() != m) {
        throw DimensionError("verify_sic: got " + std::to_string(vectors.size()) +
                             " vectors of dimension " + std::to_string(d) + ", need d^2 = " +
                             std::to_string(m));
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (vectors[i].dim() != d) {
            throw DimensionError("verify_sic: vector " + std::to_string(i) + " has dimension " +
                                 std::to_string(vectors[i].dim()) + ", expected " +
                                 std::to_string(d));
        }
        if (!vectors[i].is_normalized(1e-10)) {
            throw NormalizationError("verify_sic: vector " + std::to_string(i) +
                                         " is not normalized, <v|v> = " +
                                         std::to_string(vectors[i].norm_sq()),
                                     vectors[i].norm());
        }
    }

    SicCheckReport report;
    report.dim = d;
    const double target = 1.0 / static_cast<double>(d + 1);

    // Pairwise overlaps: the equiangularity residual and, reused below, the
    // Hilbert-Schmidt Gram entries trace(Pi_i Pi_j) = |<psi_i|psi_j>|^2.
    CMat gram(m, m);
    for (std::size_t i = 0; i < m; ++i) gram(i, i) = 1.0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const double ov = std::norm(inner(vectors[i], vectors[j]));
            gram(i, j) = ov;
            gram(j, i) = ov;
            const double dev = std::abs(ov - target);
            if (dev > report.residual) {
                report.residual = dev;
                report.worst_i = i;
                report.worst_j = j;
                report.worst_overlap_sq = ov;
            }
        }
    }
    report.equiangular = report.residual <= tol;

    CMat sum(d, d);
    std::vector<HermOp> projectors;
    projectors.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        // Renormalize exactly before projecting: inputs may sit anywhere
        // within the 1e-10 gate, and the rank-one projector onto span(v) is
        // |v><v| / <v|v> regardless.
        HermOp pi = projector(vectors[i].normalized());
        sum += pi.mat();
        projectors.push_back(std::move(pi));
    }
    CMat scaled_id = CMat::identity(d);
    scaled_id *= cplx(static_cast<double>(d), 0.0);
    report.resolution_defect = max_abs_diff(sum, scaled_id);
    report.resolves_identity = report.resolution_defect <= kResolutionTol;

    // Gram is real symmetric, so its singular values are |eigenvalues|.
    const Eigh gram_eig = eigh(HermOp(gram));
    double min_sv = std::abs(gram_eig.eigenvalues[0]);
    for (double ev : gram_eig.eigenvalues) min_sv = std::min(min_sv, std::abs(ev));
    report.gram_min_singular = min_sv;
    report.gram_nonsingular = min_sv > kGramMinSingular;

    SicVerifyOutcome outcome{report, std::nullopt};
    if (report.ok()) {
        outcome.povm = SicPovm(d, vectors, std::move(projectors), report.residual);
    }
    return outcome;
}

SicEffects effects(const SicPovm& s) {
    const double inv_d = 1.0 / static_cast<double>(s.dim());
    SicEffects out;
    out.effects.reserve(s.projectors().size());
    for (const HermOp& pi : s.projectors()) {
        CMat h = pi.mat();
        h *= cplx(inv_d, 0.0);
        out.effects.emplace_back(std::move(h));
    }
    return out;
}

CMat gram_matrix(const SicPovm& s) {
    const std::size_t m = s.vectors().size();
    CMat g(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        g(i, i) = 1.0;
        for (std::size_t j = i + 1; j < m; ++j) {
            const double ov = std::norm(inner(s.vectors()[i], s.vectors()[j]));
            g(i, j) = ov;
            g(j, i) = ov;
        }
    }
    return g;
}

double frame_potential(const WhGroup& g, const CVec& fiducial) {
    if (fiducial.dim() != g.dim()) {
        throw DimensionError("frame_potential: fiducial dim " + std::to_string(fiducial.dim()) +
                             " does not match group dim " + std::to_string(g.dim()));
    }
    if (!fiducial.is_normalized(1e-10)) {
        throw NormalizationError("frame_potential: fiducial is not normalized",
                                 fiducial.norm());
    }
    const std::size_t d = g.dim();
    const double target = 1.0 / static_cast<double>(d + 1);
    std::vector<cplx> moved(d);
    double f = 0.0;
    for (std::size_t p = 0; p < d; ++p) {
        for (std::size_t q = 0; q < d; ++q) {
            if (p == 0 && q == 0) continue;
            g.apply_displacement(p, q, fiducial.entries().data(), moved.data());
            cplx o = 0.0;
            for (std::size_t k = 0; k < d; ++k) o += std::conj(fiducial[k]) * moved[k];
            const double t = std::norm(o) - target;
            f += t * t;
        }
    }
    return f;
}

double frame_potential_gradient(const WhGroup& g, const std::vector<cplx>& z,
                                std::vector<double>& grad) {
    const std::size_t d = g.dim();
    if (z.size() != d) {
        throw DimensionError("frame_potential_gradient: point has dim " +
                             std::to_string(z.size()) + ", group dim " + std::to_string(d));
    }
    double nsq = 0.0;
    for (const cplx& v : z) nsq += std::norm(v);
    if (nsq <= 0.0) throw NormalizationError("frame_potential_gradient: zero vector", 0.0);
    const double s = std::sqrt(nsq);

    std::vector<cplx> phi(d);
    for (std::size_t k = 0; k < d; ++k) phi[k] = z[k] / s;

    const double target = 1.0 / static_cast<double>(d + 1);
    std::vector<cplx> moved(d), moved_adj(d);
    // A_r = sum_a 2 t_a [ conj(o_a) (D_a phi)_r + o_a (D_a^dag phi)_r ], the
    // Wirtinger derivative of the objective with respect to conj(phi_r).
    std::vector<cplx> a_vec(d, cplx(0.0, 0.0));
    double f = 0.0;
    for (std::size_t p = 0; p < d; ++p) {
        for (std::size_t q = 0; q < d; ++q) {
            if (p == 0 && q == 0) continue;
            g.apply_displacement(p, q, phi.data(), moved.data());
            g.apply_displacement_adjoint(p, q, phi.data(), moved_adj.data());
            cplx o = 0.0;
            for (std::size_t k = 0; k < d; ++k) o += std::conj(phi[k]) * moved[k];
            const double t = std::norm(o) - target;
            f += t * t;
            const cplx co = std::conj(o);
            for (std::size_t k = 0; k < d; ++k) {
                a_vec[k] += 2.0 * t * (co * moved[k] + o * moved_adj[k]);
            }
        }
    }

    // Project through the normalization z -> z/||z||:
    // dF/dconj(z_r) = (A_r - phi_r * Re<phi|A>) / ||z||.
    double phi_dot_a_re = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
        phi_dot_a_re += (std::conj(phi[k]) * a_vec[k]).real();
    }
    grad.assign(2 * d, 0.0);
    for (std::size_t k = 0; k < d; ++k) {
        const cplx gk = (a_vec[k] - phi[k] * phi_dot_a_re) / s;
        grad[k] = 2.0 * gk.real();
        grad[d + k] = 2.0 * gk.imag();
    }
    return f;
}

namespace {

// Objective floor for the polish phase: deviations per overlap around 1e-14.
constexpr double kObjectiveFloor = 1e-28;
// Descent switches from gradient steps to least-squares polish here. Plain
// descent crawls sublinearly below this in dimensions with flat directions
// (d=3 has a whole curve of solutions), while damped Gauss-Newton contracts
// quadratically.
constexpr double kPolishGate = 1e-10;

double objective_at(const WhGroup& g, const std::vector<cplx>& z) {
    double nsq = 0.0;
    for (const cplx& v : z) nsq += std::norm(v);
    const double s = std::sqrt(nsq);
    CVec phi(z.size());
    for (std::size_t k = 0; k < z.size(); ++k) phi[k] = z[k] / s;
    return frame_potential(g, phi);
}

// Residuals t_a = |<phi|D_a|phi>|^2 - 1/(d+1) over a = (p,q) != (0,0) and
// their Jacobian with respect to the 2d real coordinates of z (through the
// z -> z/||z|| projection, same chain as frame_potential_gradient). Row a of
// jac is [dt_a/dRe z_0 .. dt_a/dRe z_{d-1}, dt_a/dIm z_0 .. dt_a/dIm z_{d-1}].
// Returns the objective sum t_a^2.
double residuals_jacobian(const WhGroup& g, const std::vector<cplx>& z, std::vector<double>& t,
                          std::vector<double>& jac) {
    const std::size_t d = g.dim();
    const std::size_t rows = d * d - 1;
    const std::size_t cols = 2 * d;
    t.assign(rows, 0.0);
    jac.assign(rows * cols, 0.0);

    double nsq = 0.0;
    for (const cplx& v : z) nsq += std::norm(v);
    const double s = std::sqrt(nsq);
    std::vector<cplx> phi(d);
    for (std::size_t k = 0; k < d; ++k) phi[k] = z[k] / s;

    const double target = 1.0 / static_cast<double>(d + 1);
    std::vector<cplx> moved(d), moved_adj(d), w(d);
    double f = 0.0;
    std::size_t row = 0;
    for (std::size_t p = 0; p < d; ++p) {
        for (std::size_t q = 0; q < d; ++q) {
            if (p == 0 && q == 0) continue;
            g.apply_displacement(p, q, phi.data(), moved.data());
            g.apply_displacement_adjoint(p, q, phi.data(), moved_adj.data());
            cplx o = 0.0;
            for (std::size_t k = 0; k < d; ++k) o += std::conj(phi[k]) * moved[k];
            const double tv = std::norm(o) - target;
            t[row] = tv;
            f += tv * tv;
            const cplx co = std::conj(o);
            double wphi_re = 0.0;
            for (std::size_t k = 0; k < d; ++k) {
                w[k] = co * moved[k] + o * moved_adj[k];
                wphi_re += (std::conj(phi[k]) * w[k]).real();
            }
            for (std::size_t k = 0; k < d; ++k) {
                const cplx gk = (w[k] - phi[k] * wphi_re) / s;
                jac[row * cols + k] = 2.0 * gk.real();
                jac[row * cols + d + k] = 2.0 * gk.imag();
            }
            ++row;
        }
    }
    return f;
}

// Damped Gauss-Newton iterations on the residual system, from a point
// already inside the convergence basin. Returns the number of iterations
// spent; z and f are updated in place.
std::size_t polish_lm(const WhGroup& g, std::vector<cplx>& z, double& f,
                      std::size_t max_iters) {
    const std::size_t d = g.dim();
    const std::size_t rows = d * d - 1;
    const std::size_t cols = 2 * d;
    std::vector<double> t, jac, m(cols * cols), rhs(cols), delta(cols);
    std::vector<cplx> trial(d);
    double lambda = 1e-6;
    std::size_t iters = 0;

    for (; iters < max_iters && f > kObjectiveFloor; ++iters) {
        f = residuals_jacobian(g, z, t, jac);
        if (f <= kObjectiveFloor) break;

        for (std::size_t a = 0; a < cols; ++a) {
            rhs[a] = 0.0;
            for (std::size_t r = 0; r < rows; ++r) rhs[a] -= jac[r * cols + a] * t[r];
            for (std::size_t b = a; b < cols; ++b) {
                double acc = 0.0;
                for (std::size_t r = 0; r < rows; ++r) {
                    acc += jac[r * cols + a] * jac[r * cols + b];
                }
                m[a * cols + b] = acc;
                m[b * cols + a] = acc;
            }
        }
        CMat nm(cols, cols);
        for (std::size_t e = 0; e < m.size(); ++e) nm.data()[e] = m[e];
        const Eigh es = eigh(HermOp(std::move(nm)));

        bool accepted = false;
        for (int attempt = 0; attempt < 16; ++attempt) {
            // delta = V (L + lambda)^-1 V^T rhs using the decomposition of
            // J^T J; shifting the eigenvalues is the damping.
            for (std::size_t a = 0; a < cols; ++a) delta[a] = 0.0;
            for (std::size_t k = 0; k < cols; ++k) {
                cplx proj = 0.0;
                for (std::size_t a = 0; a < cols; ++a) {
                    proj += std::conj(es.eigenvectors(a, k)) * rhs[a];
                }
                const cplx coef = proj / (es.eigenvalues[k] + lambda);
                for (std::size_t a = 0; a < cols; ++a) {
                    delta[a] += (coef * es.eigenvectors(a, k)).real();
                }
            }
            for (std::size_t k = 0; k < d; ++k) {
                trial[k] = z[k] + cplx(delta[k], delta[d + k]);
            }
            const double f_new = objective_at(g, trial);
            if (f_new < f) {
                double tn = 0.0;
                for (const cplx& v : trial) tn += std::norm(v);
                const double tinv = 1.0 / std::sqrt(tn);
                for (std::size_t k = 0; k < d; ++k) z[k] = trial[k] * tinv;
                f = f_new;
                lambda = std::max(lambda / 3.0, 1e-14);
                accepted = true;
                break;
            }
            lambda *= 10.0;
            if (lambda > 1e12) break;
        }
        if (!accepted) {
            ++iters;
            break;
        }
    }
    return iters;
}

struct RestartResult {
    std::vector<cplx> z;
    double objective = 0.0;
    std::size_t iterations = 0;
};

RestartResult run_restart(const WhGroup& g, std::size_t d, std::size_t max_iters,
                          std::uint64_t stream_seed) {
    Xoshiro256pp rng(stream_seed);
    std::vector<cplx> z(d);
    for (std::size_t k = 0; k < d; ++k) z[k] = rng.complex_normal();
    double nsq = 0.0;
    for (const cplx& v : z) nsq += std::norm(v);
    const double inv = 1.0 / std::sqrt(nsq);
    for (cplx& v : z) v *= inv;

    const std::size_t n = 2 * d;
    std::vector<double> grad(n), prev_grad(n), prev_x(n), x(n);
    auto pack = [&](const std::vector<cplx>& v, std::vector<double>& out) {
        for (std::size_t k = 0; k < d; ++k) {
            out[k] = v[k].real();
            out[d + k] = v[k].imag();
        }
    };
    auto unpack = [&](const std::vector<double>& v, std::vector<cplx>& out) {
        for (std::size_t k = 0; k < d; ++k) out[k] = cplx(v[k], v[d + k]);
    };
    pack(z, x);

    double f = frame_potential_gradient(g, z, grad);
    double step = 0.1;
    std::size_t iters = 0;
    std::size_t stall = 0;
    std::vector<double> trial(n);
    std::vector<cplx> trial_z(d);

    for (; iters < max_iters; ++iters) {
        if (f <= kPolishGate) break;
        double gsq = 0.0;
        for (double v : grad) gsq += v * v;
        if (gsq <= 1e-30) break;

        if (iters > 0) {
            // Barzilai-Borwein trial step from the last accepted move; the
            // Armijo backtrack below restores monotone decrease.
            double sy = 0.0, ss = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                const double sk = x[k] - prev_x[k];
                const double yk = grad[k] - prev_grad[k];
                sy += sk * yk;
                ss += sk * sk;
            }
            if (sy > 1e-300 && ss > 0.0) {
                step = std::clamp(ss / sy, 1e-12, 1e3);
            } else {
                step = std::min(step * 2.0, 1e3);
            }
        }

        prev_x = x;
        prev_grad = grad;

        double t = step;
        double f_new = f;
        bool accepted = false;
        for (int bt = 0; bt < 60; ++bt) {
            for (std::size_t k = 0; k < n; ++k) trial[k] = x[k] - t * grad[k];
            unpack(trial, trial_z);
            f_new = objective_at(g, trial_z);
            if (f_new <= f - 1e-4 * t * gsq) {
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if (!accepted) break;

        // Renormalize the iterate; the objective only sees z/||z||, so this
        // changes nothing but keeps the coordinates conditioned.
        unpack(trial, trial_z);
        double tn = 0.0;
        for (const cplx& v : trial_z) tn += std::norm(v);
        const double tinv = 1.0 / std::sqrt(tn);
        for (cplx& v : trial_z) v *= tinv;
        pack(trial_z, x);
        z = trial_z;

        const double improvement = f - f_new;
        f = frame_potential_gradient(g, z, grad);
        if (improvement <= 1e-6 * std::max(f, 1e-300)) {
            // Frozen above the polish gate means a nonglobal minimum; hand
            // the budget back for the next restart.
            if (++stall >= 100) {
                ++iters;
                break;
            }
        } else {
            stall = 0;
        }
    }

    if (f <= kPolishGate && f > kObjectiveFloor && iters < max_iters) {
        iters += polish_lm(g, z, f, max_iters - iters);
    }

    return RestartResult{std::move(z), f, iters};
}

}  // namespace

SearchReport search_fiducial(std::size_t d, const SearchConfig& config) {
    if (d < 2) throw DimensionError("search_fiducial: dimension must be at least 2");
    const WhGroup g(d);

    SearchReport report;
    report.dim = d;
    report.seed = config.seed;
    report.objective = std::numeric_limits<double>::infinity();

    std::vector<cplx> best;
    for (std::size_t r = 0; r < config.max_restarts; ++r) {
        RestartResult res = run_restart(g, d, config.max_iters, derive_seed(config.seed, r));
        report.iterations += res.iterations;
        if (res.objective < report.objective) {
            report.objective = res.objective;
            best = std::move(res.z);
        }
        report.restarts_used = r + 1;
        if (report.objective <= config.success_threshold) {
            report.converged = true;
            break;
        }
    }

    if (best.empty()) {
        // Zero-restart budget: report the deterministic seed point unpolished.
        Xoshiro256pp rng(derive_seed(config.seed, 0));
        best.resize(d);
        for (std::size_t k = 0; k < d; ++k) best[k] = rng.complex_normal();
        report.objective = objective_at(g, best);
    }

    // Normalize and fix the global phase (first sizable entry made real
    // nonnegative) so repeated runs serialize identically.
    double nsq = 0.0;
    for (const cplx& v : best) nsq += std::norm(v);
    const double inv = 1.0 / std::sqrt(nsq);
    for (cplx& v : best) v *= inv;
    std::size_t anchor = 0;
    for (std::size_t k = 0; k < d; ++k) {
        if (std::abs(best[k]) > 1e-8) {
            anchor = k;
            break;
        }
    }
    const double mag = std::abs(best[anchor]);
    if (mag > 0.0) {
        const cplx rot = std::conj(best[anchor]) / mag;
        for (cplx& v : best) v *= rot;
        best[anchor] = cplx(best[anchor].real(), 0.0);
    }

    report.fiducial = CVec(std::move(best));
    return report;
}

}  // namespace sicq
