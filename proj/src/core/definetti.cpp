#include "core/definetti.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "core/rng.hpp"

namespace sicq {

namespace {

// d^n with the dense cap as overflow guard.
std::size_t pow_capped(std::size_t d, std::size_t n, const char* who) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > kDenseDimCap / d) {
            throw CapError(std::string(who) + ": d = " + std::to_string(d) + ", n = " +
                           std::to_string(n) + " exceeds the dense cap " +
                           std::to_string(kDenseDimCap));
        }
        total *= d;
    }
    if (total > kDenseDimCap) {
        throw CapError(std::string(who) + ": d = " + std::to_string(d) + ", n = " +
                       std::to_string(n) + " exceeds the dense cap " +
                       std::to_string(kDenseDimCap));
    }
    return total;
}

}  // namespace

DeFinettiMixture::DeFinettiMixture(std::vector<double> weights,
                                   std::vector<DensityOperator> components)
    : weights_(std::move(weights)), components_(std::move(components)) {
    if (weights_.empty()) throw DimensionError("DeFinettiMixture: empty mixture");
    if (weights_.size() != components_.size()) {
        throw DimensionError("DeFinettiMixture: " + std::to_string(weights_.size()) +
                             " weights but " + std::to_string(components_.size()) +
                             " components");
    }
    double sum = 0.0;
    for (std::size_t k = 0; k < weights_.size(); ++k) {
        if (weights_[k] <= 0.0) {
            throw ValidityError("DeFinettiMixture: weight " + std::to_string(k) + " = " +
                                    std::to_string(weights_[k]) + " is not positive",
                                weights_[k]);
        }
        sum += weights_[k];
    }
    if (std::abs(sum - 1.0) > kSimplexSumTol) {
        throw NormalizationError(
            "DeFinettiMixture: weights sum to " + std::to_string(sum) + ", expected 1", sum);
    }
    const std::size_t d = components_[0].dim();
    for (std::size_t k = 1; k < components_.size(); ++k) {
        if (components_[k].dim() != d) {
            throw DimensionError("DeFinettiMixture: component " + std::to_string(k) +
                                 " has dimension " + std::to_string(components_[k].dim()) +
                                 ", expected " + std::to_string(d));
        }
    }
}

ExchangeableState build_exchangeable(const DeFinettiMixture& mix, std::size_t n) {
    if (n == 0) throw DimensionError("build_exchangeable: n must be positive");
    const std::size_t d = mix.dim();
    const std::size_t total = pow_capped(d, n, "build_exchangeable");

    CMat acc(total, total);
    for (std::size_t k = 0; k < mix.size(); ++k) {
        CMat term = mix.components()[k].op().mat();
        for (std::size_t i = 1; i < n; ++i) term = kron(term, mix.components()[k].op().mat());
        const cplx w(mix.weights()[k], 0.0);
        for (std::size_t e = 0; e < term.data().size(); ++e) acc.data()[e] += w * term.data()[e];
    }
    return ExchangeableState{n, d, DensityOperator::trusted(HermOp(std::move(acc)))};
}

SymmetryReport check_symmetry(const ExchangeableState& e) {
    SymmetryReport rep;
    const std::size_t n = e.n;
    if (n < 2) return rep;
    const std::size_t d = e.d;
    const std::size_t total = e.state.dim();
    const CMat& m = e.state.op().mat();

    // Indices are base-d digit strings, factor 0 most significant. Swapping
    // factors (pos, pos+1) permutes indices; conjugating by that permutation
    // just relabels rows and columns.
    std::vector<std::size_t> perm(total);
    std::vector<std::size_t> stride(n);
    stride[n - 1] = 1;
    for (std::size_t i = n - 1; i > 0; --i) stride[i - 1] = stride[i] * d;

    for (std::size_t pos = 0; pos + 1 < n; ++pos) {
        for (std::size_t idx = 0; idx < total; ++idx) {
            const std::size_t hi = (idx / stride[pos]) % d;
            const std::size_t lo = (idx / stride[pos + 1]) % d;
            const std::size_t base = idx - hi * stride[pos] - lo * stride[pos + 1];
            perm[idx] = base + lo * stride[pos] + hi * stride[pos + 1];
        }
        double diff_sq = 0.0;
        for (std::size_t r = 0; r < total; ++r) {
            const std::size_t pr = perm[r];
            for (std::size_t c = 0; c < total; ++c) {
                const cplx delta = m(pr, perm[c]) - m(r, c);
                diff_sq += std::norm(delta);
            }
        }
        rep.max_asymmetry = std::max(rep.max_asymmetry, std::sqrt(diff_sq));
    }
    return rep;
}

ExtendabilityReport check_extendability(const DeFinettiMixture& mix, std::size_t n) {
    if (n == 0) throw DimensionError("check_extendability: n must be positive");
    pow_capped(mix.dim(), n + 1, "check_extendability");
    const ExchangeableState big = build_exchangeable(mix, n + 1);
    const ExchangeableState small = build_exchangeable(mix, n);
    const HermOp reduced = partial_trace_last(big.state.op(), mix.dim());
    return ExtendabilityReport{frobenius_diff(reduced.mat(), small.state.op().mat())};
}

AsIfReport as_if_statistics(const DeFinettiMixture& mix, const SicPovm& s, std::size_t n,
                            std::uint64_t seed, std::size_t trials) {
    if (n == 0) throw DimensionError("as_if_statistics: n must be positive");
    const std::size_t d = mix.dim();
    if (s.dim() != d) {
        throw DimensionError("as_if_statistics: SIC dim " + std::to_string(s.dim()) +
                             " does not match mixture dim " + std::to_string(d));
    }
    const std::size_t m = d * d;
    if (m > kDenseDimCap) {
        throw CapError("as_if_statistics: d^2 = " + std::to_string(m) +
                       " already exceeds the dense cap");
    }

    AsIfReport rep;
    rep.n_requested = n;
    std::size_t n_used = 0;
    std::size_t cells = 1;
    while (n_used < n && cells <= kDenseDimCap / m) {
        cells *= m;
        ++n_used;
    }
    rep.n_used = n_used;
    rep.trials = trials;

    // Single-system outcome law of each component, and per-component CDFs for
    // the i.i.d. sampler.
    std::vector<std::vector<double>> laws;
    std::vector<std::vector<double>> cdfs;
    laws.reserve(mix.size());
    cdfs.reserve(mix.size());
    for (std::size_t k = 0; k < mix.size(); ++k) {
        const SicProbabilityVector p = to_probs(s, mix.components()[k]);
        std::vector<double> cdf(m);
        double run = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            run += p[i];
            cdf[i] = run;
        }
        cdf[m - 1] = 1.0;
        laws.push_back(p.probs());
        cdfs.push_back(std::move(cdf));
    }
    std::vector<double> weight_cdf(mix.size());
    {
        double run = 0.0;
        for (std::size_t k = 0; k < mix.size(); ++k) {
            run += mix.weights()[k];
            weight_cdf[k] = run;
        }
        weight_cdf[mix.size() - 1] = 1.0;
    }

    // Exact law two ways. Mixture of product laws:
    std::vector<double> law_mix(cells, 0.0);
    std::vector<std::size_t> digits(n_used, 0);
    for (std::size_t cell = 0; cell < cells; ++cell) {
        std::size_t rem = cell;
        for (std::size_t pos = n_used; pos-- > 0;) {
            digits[pos] = rem % m;
            rem /= m;
        }
        double v = 0.0;
        for (std::size_t k = 0; k < mix.size(); ++k) {
            double prod = mix.weights()[k];
            for (std::size_t pos = 0; pos < n_used; ++pos) prod *= laws[k][digits[pos]];
            v += prod;
        }
        law_mix[cell] = v;
    }

    // And from the built n_used-system state: the joint probability of
    // outcome string (i_1..i_n) is <Psi|rho|Psi>/d^n with Psi the tensor
    // product of the chosen SIC vectors.
    const ExchangeableState built = build_exchangeable(mix, n_used);
    const CMat& rho = built.state.op().mat();
    const std::size_t total = rho.rows();
    const double scale = 1.0 / static_cast<double>(total);  // 1 / d^n_used
    std::vector<cplx> psi(total), tmp(total), y(total);
    std::vector<double> law_built(cells, 0.0);
    for (std::size_t cell = 0; cell < cells; ++cell) {
        std::size_t rem = cell;
        for (std::size_t pos = n_used; pos-- > 0;) {
            digits[pos] = rem % m;
            rem /= m;
        }
        std::size_t len = 1;
        psi[0] = 1.0;
        for (std::size_t pos = 0; pos < n_used; ++pos) {
            const CVec& f = s.vectors()[digits[pos]];
            for (std::size_t a = 0; a < len; ++a)
                for (std::size_t b = 0; b < d; ++b) tmp[a * d + b] = psi[a] * f[b];
            len *= d;
            std::copy(tmp.begin(), tmp.begin() + static_cast<std::ptrdiff_t>(len), psi.begin());
        }
        for (std::size_t r = 0; r < total; ++r) {
            cplx acc = 0.0;
            for (std::size_t c = 0; c < total; ++c) acc += rho(r, c) * psi[c];
            y[r] = acc;
        }
        cplx val = 0.0;
        for (std::size_t r = 0; r < total; ++r) val += std::conj(psi[r]) * y[r];
        law_built[cell] = val.real() * scale;
    }

    for (std::size_t cell = 0; cell < cells; ++cell) {
        rep.exact_law_max_abs_diff =
            std::max(rep.exact_law_max_abs_diff, std::abs(law_built[cell] - law_mix[cell]));
    }

    // Sampler: draw a component once, then n_used i.i.d. SIC outcomes from
    // its law. Per-trial derived streams keep any execution order equivalent
    // to this serial one.
    std::vector<double> counts(cells, 0.0);
    for (std::size_t t = 0; t < trials; ++t) {
        Xoshiro256pp rng(derive_seed(seed, t));
        const double uk = rng.uniform01();
        std::size_t k = 0;
        while (k + 1 < mix.size() && uk > weight_cdf[k]) ++k;
        std::size_t cell = 0;
        for (std::size_t pos = 0; pos < n_used; ++pos) {
            const double u = rng.uniform01();
            std::size_t i = 0;
            while (i + 1 < m && u > cdfs[k][i]) ++i;
            cell = cell * m + i;
        }
        counts[cell] += 1.0;
    }
    double tv = 0.0;
    const double inv_trials = 1.0 / static_cast<double>(trials);
    for (std::size_t cell = 0; cell < cells; ++cell) {
        tv += std::abs(counts[cell] * inv_trials - law_built[cell]);
    }
    rep.tv_distance = 0.5 * tv;
    return rep;
}

}  // namespace sicq
