#include "core/weyl_heisenberg.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace sicq {

WhGroup::WhGroup(std::size_t dim, TauSign tau_sign) : dim_(dim), tau_sign_(tau_sign) {
    if (dim_ == 0) throw DimensionError("WhGroup: dimension must be positive");
}

cplx WhGroup::omega() const {
    return std::polar(1.0, 2.0 * std::numbers::pi / static_cast<double>(dim_));
}

cplx WhGroup::tau() const {
    const cplx root = std::polar(1.0, std::numbers::pi / static_cast<double>(dim_));
    return tau_sign_ == TauSign::Minus ? -root : root;
}

cplx WhGroup::omega_power(std::size_t exponent) const {
    // Reduce the exponent first so the angle stays in [0, 2*pi); this keeps
    // the phase accurate for any p, q rather than accumulating argument error.
    const std::size_t e = exponent % dim_;
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(e) /
                               static_cast<double>(dim_));
}

cplx WhGroup::displacement_phase(std::size_t p, std::size_t q) const {
    // tau = s * exp(i*pi/d) with s = ±1, so tau^{pq} = exp(i*pi*m/d) with
    // m = b*p*q reduced mod 2d, b = d+1 for the minus convention and 1 for plus.
    const std::size_t base = tau_sign_ == TauSign::Minus ? dim_ + 1 : 1;
    const std::size_t m = (base * p % (2 * dim_)) * q % (2 * dim_);
    return std::polar(1.0,
                      std::numbers::pi * static_cast<double>(m) / static_cast<double>(dim_));
}

CMat WhGroup::shift() const {
    CMat x(dim_, dim_);
    for (std::size_t k = 0; k < dim_; ++k) x((k + 1) % dim_, k) = 1.0;
    return x;
}

CMat WhGroup::clock() const {
    CMat z(dim_, dim_);
    for (std::size_t k = 0; k < dim_; ++k) z(k, k) = omega_power(k);
    return z;
}

CMat WhGroup::displacement(std::size_t p, std::size_t q) const {
    if (p >= dim_ || q >= dim_) {
        throw DimensionError("displacement: indices (" + std::to_string(p) + ", " +
                             std::to_string(q) + ") out of range for d = " +
                             std::to_string(dim_));
    }
    const cplx phase = displacement_phase(p, q);
    CMat d(dim_, dim_);
    for (std::size_t c = 0; c < dim_; ++c) d((c + p) % dim_, c) = phase * omega_power(q * c);
    return d;
}

void WhGroup::apply_displacement(std::size_t p, std::size_t q, const cplx* in,
                                 cplx* out) const {
    const cplx phase = displacement_phase(p, q);
    for (std::size_t c = 0; c < dim_; ++c) out[(c + p) % dim_] = phase * omega_power(q * c) * in[c];
}

void WhGroup::apply_displacement_adjoint(std::size_t p, std::size_t q, const cplx* in,
                                         cplx* out) const {
    const cplx phase = displacement_phase(p, q);
    for (std::size_t c = 0; c < dim_; ++c)
        out[c] = std::conj(phase * omega_power(q * c)) * in[(c + p) % dim_];
}

std::vector<CVec> WhGroup::orbit(const CVec& fiducial) const {
    if (fiducial.dim() != dim_) {
        throw DimensionError("orbit: fiducial has dim " + std::to_string(fiducial.dim()) +
                             " but the group acts on dim " + std::to_string(dim_));
    }
    if (!fiducial.is_normalized(1e-10)) {
        throw NormalizationError(
            "orbit: fiducial is not normalized, <v|v> = " + std::to_string(fiducial.norm_sq()),
            fiducial.norm());
    }
    std::vector<CVec> out;
    out.reserve(dim_ * dim_);
    for (std::size_t p = 0; p < dim_; ++p) {
        for (std::size_t q = 0; q < dim_; ++q) {
            CVec v(dim_);
            apply_displacement(p, q, fiducial.entries().data(), &v[0]);
            out.push_back(std::move(v));
        }
    }
    return out;
}

}  // namespace sicq
