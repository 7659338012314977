#pragma once

#include <cstdint>
#include <vector>

#include "core/hilbert.hpp"
#include "core/qbist.hpp"
#include "core/sic.hpp"

namespace sicq {

// Finite discrete stand-in for a probability measure over single-system
// states: k positive weights summing to 1, each paired with a component.
class DeFinettiMixture {
  public:
    DeFinettiMixture(std::vector<double> weights, std::vector<DensityOperator> components);

    std::size_t dim() const { return components_[0].dim(); }
    std::size_t size() const { return weights_.size(); }
    const std::vector<double>& weights() const { return weights_; }
    const std::vector<DensityOperator>& components() const { return components_; }

  private:
    std::vector<double> weights_;
    std::vector<DensityOperator> components_;
};

struct ExchangeableState {
    std::size_t n;
    std::size_t d;            // single-system dimension
    DensityOperator state;    // dimension d^n
};

// sum_k w_k rho_k^{tensor n}, dense. Dimension d^n is capped at 4096.
ExchangeableState build_exchangeable(const DeFinettiMixture& mix, std::size_t n);

struct SymmetryReport {
    double max_asymmetry = 0.0;
};

// Applies every adjacent-pair swap of tensor factors (as an index
// permutation, no matrices) and reports the worst Frobenius change. Adjacent
// transpositions generate all permutations, so a small value certifies full
// exchange symmetry.
SymmetryReport check_symmetry(const ExchangeableState& e);

struct ExtendabilityReport {
    double max_inconsistency = 0.0;
};

// Frobenius distance between tracing the last factor out of the (n+1)-system
// build and the n-system build directly. Zero in exact arithmetic.
ExtendabilityReport check_extendability(const DeFinettiMixture& mix, std::size_t n);

struct AsIfReport {
    std::size_t n_requested = 0;
    // Joint-law tables have (d^2)^n entries, so n is reduced to keep the
    // table within the dense cap; the reduction is reported, never silent.
    std::size_t n_used = 0;
    std::size_t trials = 0;
    // max-abs difference between the joint SIC-outcome law computed from the
    // built n-system state and the weight-mixture of i.i.d. product laws
    double exact_law_max_abs_diff = 0.0;
    // total-variation distance between the draw-a-component-then-sample-iid
    // empirical law and the exact built-state law
    double tv_distance = 0.0;
};

AsIfReport as_if_statistics(const DeFinettiMixture& mix, const SicPovm& s, std::size_t n,
                            std::uint64_t seed, std::size_t trials = 100000);

}  // namespace sicq
