#pragma once

#include <cstddef>
#include <vector>

#include "core/linalg.hpp"

namespace sicq {

// Sign convention for the displacement phase tau. Minus is the convention
// used throughout (tau = -exp(i*pi/d)); Plus exists so tests can confirm
// that overlap-squared values, and hence the SIC condition, do not depend on
// the choice.
enum class TauSign { Minus, Plus };

// Discrete Weyl-Heisenberg group on C^d: shift X, clock Z, and displacement
// operators D_{p,q} = tau^{pq} X^p Z^q. The orbit of a fiducial vector under
// all d^2 displacements is the candidate SIC, ordered by index i = p*d + q.
class WhGroup {
  public:
    explicit WhGroup(std::size_t dim, TauSign tau_sign = TauSign::Minus);

    std::size_t dim() const { return dim_; }
    cplx omega() const;  // exp(2*pi*i/d)
    cplx tau() const;    // -exp(i*pi/d) under the Minus convention; tau^2 = omega

    // X |k> = |k+1 mod d>
    CMat shift() const;
    // Z = diag(1, omega, ..., omega^{d-1})
    CMat clock() const;
    // Built from the explicit entry formula, not repeated multiplication:
    // D[r][c] = tau^{pq} omega^{qc} when r = (c+p) mod d, else 0.
    CMat displacement(std::size_t p, std::size_t q) const;

    // out = D_{p,q} in and out = D_{p,q}† in; O(d), used by the search loop.
    void apply_displacement(std::size_t p, std::size_t q, const cplx* in, cplx* out) const;
    void apply_displacement_adjoint(std::size_t p, std::size_t q, const cplx* in,
                                    cplx* out) const;

    // {D_{p,q} |fiducial>} in lexicographic (p,q) order; element 0 is the
    // fiducial itself. This ordering is normative for every file format
    // holding SIC-indexed data.
    std::vector<CVec> orbit(const CVec& fiducial) const;

  private:
    cplx displacement_phase(std::size_t p, std::size_t q) const;  // tau^{pq}
    cplx omega_power(std::size_t exponent) const;                 // omega^(exponent mod d)

    std::size_t dim_;
    TauSign tau_sign_;
};

}  // namespace sicq
