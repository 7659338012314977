#include "core/qbist.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace sicq {

SicProbabilityVector::SicProbabilityVector(std::size_t dim, std::vector<double> probs)
    : dim_(dim), probs_(std::move(probs)) {
    if (dim_ < 2) throw DimensionError("SicProbabilityVector: dimension must be at least 2");
    if (probs_.size() != dim_ * dim_) {
        throw DimensionError("SicProbabilityVector: got " + std::to_string(probs_.size()) +
                             " entries, need d^2 = " + std::to_string(dim_ * dim_));
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < probs_.size(); ++i) {
        if (probs_[i] < kProbFloor) {
            throw ValidityError("SicProbabilityVector: entry " + std::to_string(i) + " = " +
                                    std::to_string(probs_[i]) + " is negative",
                                probs_[i]);
        }
        sum += probs_[i];
    }
    if (std::abs(sum - 1.0) > kSimplexSumTol) {
        throw NormalizationError(
            "SicProbabilityVector: entries sum to " + std::to_string(sum) + ", expected 1", sum);
    }
}

SicProbabilityVector to_probs(const SicPovm& s, const DensityOperator& rho) {
    const std::size_t d = s.dim();
    if (rho.dim() != d) {
        throw DimensionError("to_probs: state dim " + std::to_string(rho.dim()) +
                             " does not match SIC dim " + std::to_string(d));
    }
    const std::size_t m = d * d;
    std::vector<double> probs(m);
    const CMat& r = rho.op().mat();
    for (std::size_t i = 0; i < m; ++i) {
        // trace(rho |psi><psi|) = <psi|rho|psi>
        const CVec& psi = s.vectors()[i];
        cplx v = 0.0;
        for (std::size_t a = 0; a < d; ++a) {
            cplx row = 0.0;
            for (std::size_t b = 0; b < d; ++b) row += r(a, b) * psi[b];
            v += std::conj(psi[a]) * row;
        }
        probs[i] = v.real() / static_cast<double>(d);
    }
    // Exact-sum cleanup is deliberately absent: sum(H_i) = I makes the sum
    // land within 1e-12 of 1 on its own, and the constructor enforces it.
    return SicProbabilityVector(d, std::move(probs));
}

HermOp reconstruct_operator(const SicPovm& s, const SicProbabilityVector& p) {
    const std::size_t d = s.dim();
    if (p.dim() != d) {
        throw DimensionError("reconstruct_operator: probability dim " + std::to_string(p.dim()) +
                             " does not match SIC dim " + std::to_string(d));
    }
    const double inv_d = 1.0 / static_cast<double>(d);
    CMat acc(d, d);
    for (std::size_t i = 0; i < d * d; ++i) {
        const double w = static_cast<double>(d + 1) * p[i] - inv_d;
        const CMat& pi = s.projectors()[i].mat();
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) acc(a, b) += w * pi(a, b);
    }
    return HermOp(std::move(acc));
}

double reconstruction_min_eigenvalue(const SicPovm& s, const SicProbabilityVector& p) {
    return min_eigenvalue(reconstruct_operator(s, p));
}

DensityOperator from_probs(const SicPovm& s, const SicProbabilityVector& p) {
    HermOp op = reconstruct_operator(s, p);
    const double min_eig = min_eigenvalue(op);
    if (min_eig < kPositivityFloor) {
        throw ValidityError("from_probs: reconstruction has minimum eigenvalue " +
                                std::to_string(min_eig) + ", not a quantum state",
                            min_eig);
    }
    return DensityOperator::trusted(std::move(op));
}

double purity_from_probs(const SicProbabilityVector& p) {
    double s2 = 0.0;
    for (double v : p.probs()) s2 += v * v;
    const double d = static_cast<double>(p.dim());
    return d * (d + 1.0) * s2 - 1.0;
}

GroundMeasurement::GroundMeasurement(std::vector<CVec> basis) : basis_(std::move(basis)) {
    const std::size_t d = basis_.size();
    if (d < 2) throw DimensionError("GroundMeasurement: need at least 2 basis vectors");
    for (std::size_t i = 0; i < d; ++i) {
        if (basis_[i].dim() != d) {
            throw DimensionError("GroundMeasurement: vector " + std::to_string(i) +
                                 " has dimension " + std::to_string(basis_[i].dim()) +
                                 ", expected " + std::to_string(d));
        }
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i; j < d; ++j) {
            const cplx ip = inner(basis_[i], basis_[j]);
            const double want = i == j ? 1.0 : 0.0;
            if (std::abs(ip - want) > 1e-10) {
                throw NormalizationError("GroundMeasurement: basis vectors " +
                                             std::to_string(i) + ", " + std::to_string(j) +
                                             " are not orthonormal",
                                         std::abs(ip));
            }
        }
    }
    projectors_.reserve(d);
    for (const CVec& b : basis_) projectors_.push_back(projector(b.normalized()));
}

GroundMeasurement GroundMeasurement::random(std::size_t d, std::uint64_t seed) {
    const CMat u = random_unitary(d, seed);
    std::vector<CVec> basis;
    basis.reserve(d);
    for (std::size_t c = 0; c < d; ++c) {
        CVec v(d);
        for (std::size_t r = 0; r < d; ++r) v[r] = u(r, c);
        basis.push_back(std::move(v));
    }
    return GroundMeasurement(std::move(basis));
}

GroundMeasurement GroundMeasurement::computational(std::size_t d) {
    std::vector<CVec> basis;
    basis.reserve(d);
    for (std::size_t k = 0; k < d; ++k) basis.push_back(CVec::basis(d, k));
    return GroundMeasurement(std::move(basis));
}

ConditionalMatrix::ConditionalMatrix(std::size_t dim, std::vector<double> entries)
    : dim_(dim), entries_(std::move(entries)) {
    const std::size_t m = dim_ * dim_;
    if (entries_.size() != dim_ * m) {
        throw DimensionError("ConditionalMatrix: got " + std::to_string(entries_.size()) +
                             " entries, need d^3 = " + std::to_string(dim_ * m));
    }
    for (std::size_t i = 0; i < m; ++i) {
        double col = 0.0;
        for (std::size_t j = 0; j < dim_; ++j) {
            const double v = entries_[j * m + i];
            if (v < -1e-12) {
                throw ValidityError("ConditionalMatrix: entry (" + std::to_string(j) + ", " +
                                        std::to_string(i) + ") = " + std::to_string(v) +
                                        " is negative",
                                    v);
            }
            col += v;
        }
        if (std::abs(col - 1.0) > 1e-10) {
            throw NormalizationError("ConditionalMatrix: column " + std::to_string(i) +
                                         " sums to " + std::to_string(col) + ", expected 1",
                                     col);
        }
    }
}

ConditionalMatrix conditional_matrix(const SicPovm& s, const GroundMeasurement& m) {
    const std::size_t d = s.dim();
    if (m.dim() != d) {
        throw DimensionError("conditional_matrix: measurement dim " + std::to_string(m.dim()) +
                             " does not match SIC dim " + std::to_string(d));
    }
    const std::size_t mm = d * d;
    std::vector<double> entries(d * mm);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < mm; ++i) {
            // trace(Pi_i D_j) = |<psi_i|b_j>|^2
            entries[j * mm + i] = std::norm(inner(s.vectors()[i], m.basis()[j]));
        }
    }
    return ConditionalMatrix(d, std::move(entries));
}

std::vector<double> born_urgleichung(const SicProbabilityVector& p, const ConditionalMatrix& r) {
    const std::size_t d = p.dim();
    if (r.dim() != d) {
        throw DimensionError("born_urgleichung: conditional dim " + std::to_string(r.dim()) +
                             " does not match probability dim " + std::to_string(d));
    }
    std::vector<double> q(d);
    for (std::size_t j = 0; j < d; ++j) {
        double acc = 0.0;
        for (std::size_t i = 0; i < d * d; ++i) acc += p[i] * r.at(j, i);
        q[j] = static_cast<double>(d + 1) * acc - 1.0;
    }
    return q;
}

std::vector<double> classical_ltp(const SicProbabilityVector& p, const ConditionalMatrix& r) {
    const std::size_t d = p.dim();
    if (r.dim() != d) {
        throw DimensionError("classical_ltp: conditional dim " + std::to_string(r.dim()) +
                             " does not match probability dim " + std::to_string(d));
    }
    std::vector<double> out(d);
    for (std::size_t j = 0; j < d; ++j) {
        double acc = 0.0;
        for (std::size_t i = 0; i < d * d; ++i) acc += p[i] * r.at(j, i);
        out[j] = acc;
    }
    return out;
}

DeviationReport deviation_report(const SicProbabilityVector& p, const ConditionalMatrix& r) {
    const std::vector<double> q = born_urgleichung(p, r);
    const std::vector<double> cl = classical_ltp(p, r);
    DeviationReport rep;
    for (std::size_t j = 0; j < q.size(); ++j) {
        const double gap = std::abs(q[j] - cl[j]);
        rep.max_abs_gap = std::max(rep.max_abs_gap, gap);
        rep.mean_abs_gap += gap;
    }
    rep.mean_abs_gap /= static_cast<double>(q.size());
    return rep;
}

std::vector<double> born_direct(const DensityOperator& rho, const GroundMeasurement& m) {
    const std::size_t d = m.dim();
    if (rho.dim() != d) {
        throw DimensionError("born_direct: state dim " + std::to_string(rho.dim()) +
                             " does not match measurement dim " + std::to_string(d));
    }
    const CMat& r = rho.op().mat();
    std::vector<double> q(d);
    for (std::size_t j = 0; j < d; ++j) {
        const CVec& b = m.basis()[j];
        cplx v = 0.0;
        for (std::size_t a = 0; a < d; ++a) {
            cplx row = 0.0;
            for (std::size_t c = 0; c < d; ++c) row += r(a, c) * b[c];
            v += std::conj(b[a]) * row;
        }
        q[j] = v.real();
    }
    return q;
}

}  // namespace sicq
