#include "core/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "core/rng.hpp"

namespace sicq {

HermOp::HermOp(CMat m, double tol) : mat_(std::move(m)) {
    if (!mat_.is_square()) {
        throw HermiticityError("HermOp: matrix is " + std::to_string(mat_.rows()) + "x" +
                               std::to_string(mat_.cols()) + ", not square");
    }
    const double defect = mat_.hermiticity_defect();
    if (defect > tol) {
        throw HermiticityError("HermOp: matrix is not Hermitian, max |a_ij - conj(a_ji)| = " +
                               std::to_string(defect));
    }
    // Pin the representation to the exactly Hermitian part so downstream
    // arithmetic sees real diagonals.
    const std::size_t n = mat_.rows();
    for (std::size_t r = 0; r < n; ++r) {
        mat_(r, r) = cplx(mat_(r, r).real(), 0.0);
        for (std::size_t c = r + 1; c < n; ++c) {
            const cplx avg = 0.5 * (mat_(r, c) + std::conj(mat_(c, r)));
            mat_(r, c) = avg;
            mat_(c, r) = std::conj(avg);
        }
    }
}

namespace {

double off_diagonal_mass(const CMat& a) {
    double s = 0.0;
    const std::size_t n = a.rows();
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r + 1; c < n; ++c) s += 2.0 * std::norm(a(r, c));
    return std::sqrt(s);
}

}  // namespace

Eigh eigh(const HermOp& m) {
    const std::size_t n = m.dim();
    CMat a = m.mat();
    CMat v = CMat::identity(n);

    const double stop = 1e-14 * std::max(1.0, a.frobenius_norm());
    constexpr int kMaxSweeps = 100;

    for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_mass(a) > stop; ++sweep) {
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag < 1e-300) continue;

                // Unitary W = [[c, -s e^{i b}], [s e^{-i b}, c]] with
                // b = arg(a_pq) zeroes the (p,q) entry; the angle comes from
                // the stable small-root formula for t = tan(theta).
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (app - aqq) / (2.0 * mag);
                const double t =
                    (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double cs = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = t * cs;
                const cplx phase = apq / mag;
                const cplx w_qp = sn * std::conj(phase);  // W(q,p)
                const cplx w_pq = -sn * phase;            // W(p,q)

                // A <- A W (columns p, q)
                for (std::size_t r = 0; r < n; ++r) {
                    const cplx arp = a(r, p);
                    const cplx arq = a(r, q);
                    a(r, p) = cs * arp + w_qp * arq;
                    a(r, q) = w_pq * arp + cs * arq;
                }
                // A <- W† A (rows p, q)
                for (std::size_t c = 0; c < n; ++c) {
                    const cplx apc = a(p, c);
                    const cplx aqc = a(q, c);
                    a(p, c) = cs * apc + std::conj(w_qp) * aqc;
                    a(q, c) = std::conj(w_pq) * apc + cs * aqc;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                // V <- V W
                for (std::size_t r = 0; r < n; ++r) {
                    const cplx vrp = v(r, p);
                    const cplx vrq = v(r, q);
                    v(r, p) = cs * vrp + w_qp * vrq;
                    v(r, q) = w_pq * vrp + cs * vrq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

    Eigh out;
    out.eigenvalues.resize(n);
    out.eigenvectors = CMat(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, k) = v(r, order[k]);
    }
    return out;
}

double min_eigenvalue(const HermOp& m) {
    const Eigh e = eigh(m);
    return e.eigenvalues.back();
}

HermOp projector(const CVec& v) {
    if (!v.is_normalized()) {
        throw NormalizationError(
            "projector: vector is not normalized, <v|v> = " + std::to_string(v.norm_sq()),
            v.norm());
    }
    return HermOp(outer(v, v));
}

HermOp tensor(const HermOp& a, const HermOp& b) { return HermOp(kron(a.mat(), b.mat())); }

HermOp partial_trace_last(const HermOp& m, std::size_t sub_dim) {
    const std::size_t total = m.dim();
    if (sub_dim == 0 || total % sub_dim != 0) {
        throw DimensionError("partial_trace_last: dim " + std::to_string(total) +
                             " is not divisible by sub_dim " + std::to_string(sub_dim));
    }
    const std::size_t lead = total / sub_dim;
    CMat out(lead, lead);
    const CMat& full = m.mat();
    for (std::size_t a = 0; a < lead; ++a) {
        for (std::size_t b = 0; b < lead; ++b) {
            cplx s = 0.0;
            for (std::size_t k = 0; k < sub_dim; ++k) s += full(a * sub_dim + k, b * sub_dim + k);
            out(a, b) = s;
        }
    }
    return HermOp(std::move(out));
}

DensityOperator::DensityOperator(HermOp op) : op_(std::move(op)) {
    const double tr = op_.mat().trace().real();
    if (std::abs(tr - 1.0) > kTraceTol) {
        throw DensityError("DensityOperator: trace = " + std::to_string(tr) + ", expected 1");
    }
    const double min_eig = min_eigenvalue(op_);
    if (min_eig < kPositivityFloor) {
        throw DensityError("DensityOperator: minimum eigenvalue " + std::to_string(min_eig) +
                           " below positivity floor");
    }
}

DensityOperator::DensityOperator(HermOp op, Trusted) : op_(std::move(op)) {
    const double tr = op_.mat().trace().real();
    if (std::abs(tr - 1.0) > kTraceTol) {
        throw DensityError("DensityOperator: trace = " + std::to_string(tr) + ", expected 1");
    }
}

DensityOperator DensityOperator::trusted(HermOp op) {
    return DensityOperator(std::move(op), Trusted{});
}

double DensityOperator::purity() const {
    // tr(rho^2) = ||rho||_F^2 for Hermitian rho
    const double f = op_.mat().frobenius_norm();
    return f * f;
}

DensityOperator tensor(const DensityOperator& a, const DensityOperator& b) {
    const std::size_t total = a.dim() * b.dim();
    if (total > kDenseDimCap) {
        throw CapError("tensor: product dimension " + std::to_string(total) + " exceeds cap " +
                       std::to_string(kDenseDimCap));
    }
    return DensityOperator::trusted(tensor(a.op(), b.op()));
}

DensityOperator random_density(std::size_t d, std::size_t rank, std::uint64_t seed) {
    if (d == 0) throw DimensionError("random_density: d must be positive");
    if (rank < 1 || rank > d) {
        throw DimensionError("random_density: rank " + std::to_string(rank) +
                             " out of range [1, " + std::to_string(d) + "]");
    }
    Xoshiro256pp rng(seed);
    CMat g(d, rank);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < rank; ++c) g(r, c) = rng.complex_normal();
    CMat m = g * g.adjoint();
    const double tr = m.trace().real();
    m *= cplx(1.0 / tr, 0.0);
    return DensityOperator(HermOp(std::move(m)));
}

CMat random_unitary(std::size_t d, std::uint64_t seed) {
    Xoshiro256pp rng(seed);
    std::vector<CVec> cols;
    cols.reserve(d);
    for (std::size_t c = 0; c < d; ++c) {
        CVec v(d);
        for (std::size_t r = 0; r < d; ++r) v[r] = rng.complex_normal();
        cols.push_back(std::move(v));
    }
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t c = 0; c < d; ++c) {
            for (std::size_t k = 0; k < c; ++k) {
                const cplx proj = inner(cols[k], cols[c]);
                for (std::size_t r = 0; r < d; ++r) cols[c][r] -= proj * cols[k][r];
            }
            cols[c] = cols[c].normalized();
        }
    }
    CMat u(d, d);
    for (std::size_t c = 0; c < d; ++c)
        for (std::size_t r = 0; r < d; ++r) u(r, c) = cols[c][r];
    return u;
}

}  // namespace sicq
