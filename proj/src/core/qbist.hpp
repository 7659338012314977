#pragma once

#include <cstdint>
#include <vector>

#include "core/hilbert.hpp"
#include "core/linalg.hpp"
#include "core/sic.hpp"

namespace sicq {

inline constexpr double kSimplexSumTol = 1e-12;
inline constexpr double kProbFloor = -1e-10;

// A distribution over the d^2 SIC outcomes, in orbit order. Construction
// checks the simplex conditions only; whether the vector is a valid quantum
// assignment is a separate question answered by the reconstruction map.
class SicProbabilityVector {
  public:
    SicProbabilityVector(std::size_t dim, std::vector<double> probs);

    std::size_t dim() const { return dim_; }
    const std::vector<double>& probs() const { return probs_; }
    double operator[](std::size_t i) const { return probs_[i]; }

  private:
    std::size_t dim_;
    std::vector<double> probs_;
};

// probs_i = trace(rho H_i) = <psi_i|rho|psi_i> / d. The output lands on the
// simplex and inside [0, 1/d] automatically.
SicProbabilityVector to_probs(const SicPovm& s, const DensityOperator& rho);

// The affine reconstruction sum_i ((d+1) p_i - 1/d) Pi_i. Hermitian and
// unit-trace for any simplex input; positive only for quantum-valid p.
HermOp reconstruct_operator(const SicPovm& s, const SicProbabilityVector& p);

// Smallest eigenvalue of the reconstruction; >= -1e-10 means p is a valid
// quantum assignment.
double reconstruction_min_eigenvalue(const SicPovm& s, const SicProbabilityVector& p);

// Checked inverse of to_probs: throws ValidityError (carrying the offending
// eigenvalue) when the reconstruction is indefinite.
DensityOperator from_probs(const SicPovm& s, const SicProbabilityVector& p);

// d(d+1) sum_i p_i^2 - 1; equals trace(rho^2) of the reconstruction.
double purity_from_probs(const SicProbabilityVector& p);

// Von Neumann measurement in an orthonormal basis: outcome projectors
// D_j = |b_j><b_j|.
class GroundMeasurement {
  public:
    explicit GroundMeasurement(std::vector<CVec> basis);

    // Columns of a seeded Haar-distributed unitary.
    static GroundMeasurement random(std::size_t d, std::uint64_t seed);
    static GroundMeasurement computational(std::size_t d);

    std::size_t dim() const { return basis_.size(); }
    const std::vector<CVec>& basis() const { return basis_; }
    const std::vector<HermOp>& projectors() const { return projectors_; }

  private:
    std::vector<CVec> basis_;
    std::vector<HermOp> projectors_;
};

// r[j][i] = trace(Pi_i D_j): the probability of ground outcome j when the
// system, after SIC outcome i, has been updated to Pi_i. Column-stochastic.
class ConditionalMatrix {
  public:
    ConditionalMatrix(std::size_t dim, std::vector<double> entries);  // row-major d x d^2

    std::size_t dim() const { return dim_; }
    double at(std::size_t j, std::size_t i) const { return entries_[j * dim_ * dim_ + i]; }
    const std::vector<double>& entries() const { return entries_; }

  private:
    std::size_t dim_;
    std::vector<double> entries_;
};

ConditionalMatrix conditional_matrix(const SicPovm& s, const GroundMeasurement& m);

// Q_j = (d+1) sum_i p_i r[j][i] - 1. Reproduces trace(rho D_j) exactly when
// p came from rho via to_probs.
std::vector<double> born_urgleichung(const SicProbabilityVector& p, const ConditionalMatrix& r);

// P_j = sum_i p_i r[j][i]: what the Law of Total Probability would give if
// the counterfactual SIC outcome were treated as a fact.
std::vector<double> classical_ltp(const SicProbabilityVector& p, const ConditionalMatrix& r);

struct DeviationReport {
    double max_abs_gap = 0.0;
    double mean_abs_gap = 0.0;
};

// Entrywise gaps between the two rules above; zero exactly when the ground
// distribution is uniform.
DeviationReport deviation_report(const SicProbabilityVector& p, const ConditionalMatrix& r);

// Direct Born probabilities <b_j|rho|b_j>, the oracle the deformed rule is
// checked against.
std::vector<double> born_direct(const DensityOperator& rho, const GroundMeasurement& m);

}  // namespace sicq
