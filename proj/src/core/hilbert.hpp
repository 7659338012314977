#pragma once

#include <cstdint>
#include <vector>

#include "core/linalg.hpp"

namespace sicq {

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
// Search and round-trip outputs accumulate ~1e-13 of noise; -1e-10 leaves
// margin without admitting genuinely indefinite operators.
inline constexpr double kPositivityFloor = -1e-10;
// Largest dense operator dimension (n-fold tensor products stop here).
inline constexpr std::size_t kDenseDimCap = 4096;

// Square complex matrix validated to be Hermitian on construction.
class HermOp {
  public:
    explicit HermOp(CMat m, double tol = kHermitianTol);

    std::size_t dim() const { return mat_.rows(); }
    const CMat& mat() const { return mat_; }

  private:
    CMat mat_;
};

struct Eigh {
    std::vector<double> eigenvalues;  // descending
    CMat eigenvectors;                // column k pairs with eigenvalues[k]
};

// Spectral decomposition of a Hermitian matrix by cyclic Jacobi rotations.
// Accurate and simple for the dimensions this artifact needs (d <= ~256);
// converges when the off-diagonal Frobenius mass drops below
// 1e-14 * max(1, ||m||_F).
Eigh eigh(const HermOp& m);

double min_eigenvalue(const HermOp& m);

// |v><v| for unit v; idempotent and trace-one.
HermOp projector(const CVec& v);

HermOp tensor(const HermOp& a, const HermOp& b);

// Traces out the trailing sub_dim-dimensional factor of m = A⊗B-shaped space.
HermOp partial_trace_last(const HermOp& m, std::size_t sub_dim);

// Trace-one positive-semidefinite Hermitian operator. The checked
// constructor runs an eigenvalue test; trusted() skips it for operators that
// are positive by construction (tensor products and convex mixtures of
// validated states), where the eigensolver would be prohibitive at dim 4096.
class DensityOperator {
  public:
    explicit DensityOperator(HermOp op);
    static DensityOperator trusted(HermOp op);

    std::size_t dim() const { return op_.dim(); }
    const HermOp& op() const { return op_; }
    const CMat& mat() const { return op_.mat(); }
    double purity() const;  // trace(rho^2)

  private:
    struct Trusted {};
    DensityOperator(HermOp op, Trusted);

    HermOp op_;
};

DensityOperator tensor(const DensityOperator& a, const DensityOperator& b);

// Ginibre construction G G† / tr(G G†) with G of shape d x rank, entries
// complex standard normal from the seeded generator. Deterministic per seed.
DensityOperator random_density(std::size_t d, std::size_t rank, std::uint64_t seed);

// Haar-distributed unitary: Ginibre matrix followed by modified Gram-Schmidt
// (run twice for orthonormality at working precision).
CMat random_unitary(std::size_t d, std::uint64_t seed);

}  // namespace sicq
