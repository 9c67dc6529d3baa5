#pragma once

#include <span>
#include <vector>

#include "fprsim/categories.hpp"
#include "fprsim/rng.hpp"

namespace fprsim {

/**
 * Binomial(n, p) variate by inverse-CDF walk: draw one uniform, then
 * accumulate the pmf from k = 0 via the recurrence
 *   pmf(k+1) = pmf(k) * (n-k)/(k+1) * p/(1-p)
 * until the accumulated mass exceeds the uniform. Chosen over a summed
 * Bernoulli construction because it consumes one draw per variate while
 * still using only +,-,*,/ and comparisons, which keeps the sequence
 * bit-stable across platforms. Cost is O(n), fine for the packet sizes
 * used here.
 *
 * Throws std::invalid_argument for n < 0 or p outside [0, 1].
 */
Count drawBinomial(RngStream& rng, Count n, double p);

/**
 * Multinomial(n, probs) via sequential conditional binomials: cell i gets
 * Binomial(remaining, p_i / remainingMass). Reuses drawBinomial so a single
 * sampler carries the correctness argument for both. Cells with zero
 * probability always receive zero; the returned counts sum to n exactly.
 *
 * probs must be nonnegative and sum to 1 within 1e-9.
 */
std::vector<Count> drawMultinomial(RngStream& rng, Count n, std::span<const double> probs);

/**
 * k distinct elements of pool, uniformly without replacement (partial
 * Fisher-Yates). Result is sorted ascending. Requires k <= |pool|.
 */
std::vector<PrintId> drawSubset(RngStream& rng, std::span<const PrintId> pool, Count k);

}  // namespace fprsim
