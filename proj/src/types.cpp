#include "gruss/types.hpp"

#include <cmath>
#include <numeric>

namespace gruss {

ProbabilityVector::ProbabilityVector(std::vector<double> weights, double atol)
    : weights_(std::move(weights)) {
    require(!weights_.empty(), "ProbabilityVector: needs at least one weight");
    double sum = 0.0;
    for (double w : weights_) {
        require(std::isfinite(w), "ProbabilityVector: non-finite weight");
        require(w >= 0.0, "ProbabilityVector: negative weight");
        sum += w;
    }
    require(std::abs(sum - 1.0) <= atol, "ProbabilityVector: weights do not sum to 1");
}

ProbabilityVector ProbabilityVector::uniform(std::size_t n) {
    require(n >= 1, "ProbabilityVector::uniform: n must be positive");
    return ProbabilityVector(std::vector<double>(n, 1.0 / static_cast<double>(n)),
                             1e-9);
}

}  // namespace gruss
