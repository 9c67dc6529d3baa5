#include "fprsim/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fprsim {

Count drawBinomial(RngStream& rng, Count n, double p) {
    if (n < 0) throw std::invalid_argument("drawBinomial: n must be >= 0");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("drawBinomial: p must be in [0, 1]");
    if (n == 0 || p == 0.0) return 0;
    if (p == 1.0) return n;

    const double u = rng.nextDouble();
    const double odds = p / (1.0 - p);

    // pmf(0) = (1-p)^n by repeated multiplication; no libm calls.
    double pmf = 1.0;
    for (Count i = 0; i < n; ++i) pmf *= 1.0 - p;

    double cdf = pmf;
    Count k = 0;
    while (cdf <= u && k < n) {
        pmf *= static_cast<double>(n - k) / static_cast<double>(k + 1) * odds;
        cdf += pmf;
        ++k;
    }
    return k;
}

std::vector<Count> drawMultinomial(RngStream& rng, Count n, std::span<const double> probs) {
    if (n < 0) throw std::invalid_argument("drawMultinomial: n must be >= 0");
    double total = 0.0;
    int lastPositive = -1;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (probs[i] < 0.0) throw std::invalid_argument("drawMultinomial: negative probability");
        total += probs[i];
        if (probs[i] > 0.0) lastPositive = static_cast<int>(i);
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw std::invalid_argument("drawMultinomial: probabilities must sum to 1");

    std::vector<Count> counts(probs.size(), 0);
    Count remaining = n;
    double mass = total;
    for (std::size_t i = 0; i < probs.size() && remaining > 0; ++i) {
        if (probs[i] <= 0.0) continue;
        if (static_cast<int>(i) == lastPositive) {
            counts[i] = remaining;
            remaining = 0;
            break;
        }
        const double conditional = std::min(1.0, probs[i] / mass);
        counts[i] = drawBinomial(rng, remaining, conditional);
        remaining -= counts[i];
        mass -= probs[i];
    }
    return counts;
}

std::vector<PrintId> drawSubset(RngStream& rng, std::span<const PrintId> pool, Count k) {
    if (k < 0 || static_cast<std::size_t>(k) > pool.size())
        throw std::invalid_argument("drawSubset: k must be in [0, |pool|]");

    std::vector<PrintId> scratch(pool.begin(), pool.end());
    for (Count i = 0; i < k; ++i) {
        const std::uint64_t j =
            static_cast<std::uint64_t>(i) + rng.nextBelow(scratch.size() - static_cast<std::uint64_t>(i));
        std::swap(scratch[static_cast<std::size_t>(i)], scratch[static_cast<std::size_t>(j)]);
    }
    scratch.resize(static_cast<std::size_t>(k));
    std::sort(scratch.begin(), scratch.end());
    return scratch;
}

}  // namespace fprsim
