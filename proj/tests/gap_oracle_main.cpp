#include <cstdio>

#include "core/sic.hpp"

#include "support.hpp"

// Regenerates data/gap_report_d2.json: the pinned mean deformation gap that
// the acceptance gate requires future builds to clear. Prints to stdout.

int main() {
    const std::uint64_t seed = 424242;
    const std::size_t trials = 10000;
    const sicq::SicPovm s = sicq::test::searched_sic(2, 1);
    const double mean = sicq::test::mean_max_abs_gap(s, trials, seed);
    // Pin at 90% of the observed mean: loose enough to absorb floating-point
    // reshuffling, tight enough to catch a real regression in the deformation.
    const double threshold = 0.9 * mean;
    std::printf("{\"d\": 2, \"seed\": %llu, \"trials\": %zu, "
                "\"mean_max_abs_gap\": %.17g, \"threshold\": %.17g}\n",
                static_cast<unsigned long long>(seed), trials, mean, threshold);
    return 0;
}
