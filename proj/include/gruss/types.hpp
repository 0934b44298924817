// types.hpp — shared scalar/matrix aliases, tolerances, probability vectors, error types.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace gruss {

inline constexpr const char* tool_version = "0.1.0";

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

// A tuple of module elements; all entries must share one (rows, cols) shape.
using ModuleTuple = std::vector<Matrix>;

// Combined absolute/relative tolerance. An inequality with signed slack s and
// magnitude scale passes when s >= -(atol + rtol*scale).
struct Tolerance {
    double rtol = 1e-9;
    double atol = 1e-12;

    double bound(double scale) const { return atol + rtol * scale; }
};

// Thrown when the closed-form geometric kernel sum is requested too close to a
// zero of sin(omega*m). Callers fall back to direct summation or mark the
// point as skipped.
class SingularKernelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown when an instance generator cannot satisfy an inequality's hypotheses
// within its retry budget.
class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown when an operation's stated precondition fails (non-idempotent Gram
// element, radii not covering the tuple, ...). Distinct from shape errors,
// which are reported as std::invalid_argument.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Nonnegative weights summing to one.
class ProbabilityVector {
public:
    explicit ProbabilityVector(std::vector<double> weights, double atol = 1e-12);

    static ProbabilityVector uniform(std::size_t n);

    std::size_t size() const { return weights_.size(); }
    double operator[](std::size_t i) const { return weights_[i]; }
    const std::vector<double>& weights() const { return weights_; }

private:
    std::vector<double> weights_;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace gruss
