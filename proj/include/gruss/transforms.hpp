// transforms.hpp — discrete Fourier and Mellin transforms of operator tuples,
// the geometric kernel sum in closed form, exact power sums, and certified
// error bounds for rank-one surrogate approximations.

#pragma once

#include "gruss/types.hpp"

#include <gmpxx.h>

namespace gruss {

// omega in radians; m is the frequency/moment index, 1 <= m <= n.
struct TransformParams {
    double omega = 0.0;
    int m = 1;
    int n = 1;
};

void validate(const TransformParams& params);

// Kernel weights exp(2i*omega*m*k), k = 1..n. Phases are accumulated in long
// double so the closed-form comparison below is not limited by argument
// rounding at large omega*m*n.
std::vector<Complex> fourier_weights(const TransformParams& params);

// Weights k^(m-1), k = 1..n.
std::vector<double> mellin_weights(int m, int n);

// sum_k exp(2i*omega*m*k) x_k.
Matrix fourier_transform(const ModuleTuple& xs, const TransformParams& params);

// sum_k exp(2i*omega*m*k) <x_k, y_k>.
Matrix fourier_algebra(const ModuleTuple& xs, const ModuleTuple& ys,
                       const TransformParams& params);

// sum_k k^(m-1) x_k.
Matrix mellin_transform(const ModuleTuple& xs, int m);

// sum_k k^(m-1) <x_k, y_k>.
Matrix mellin_algebra(const ModuleTuple& xs, const ModuleTuple& ys, int m);

// S_p(n) = sum_{k=1}^n k^p, exact.
mpz_class power_sum(unsigned long p, unsigned long n);

// n*S_{2m-2}(n) - S_{m-1}(n)^2, exact. Nonnegative for all 1 <= m <= n.
mpz_class mellin_coefficient(int m, int n);

// sum_{k=1}^n exp(2i*omega*m*k) = sin(omega*m*n)/sin(omega*m) *
// exp(i*omega*(n+1)*m). Refuses within the guard band |sin(omega*m)| <= guard;
// callers fall back to fourier_kernel_direct.
Complex fourier_kernel_sum(const TransformParams& params, double guard = 1e-8);

// Same sum by direct accumulation.
Complex fourier_kernel_direct(const TransformParams& params);

// Result of one Loewner-checked bound evaluation. true_error_sq is the
// squared deviation |D|^2 on the left; bound_mid the first (matrix) bound
// level; bound_final the norm of the last level.
struct BoundReport {
    Matrix true_error_sq;
    Matrix bound_mid;
    double bound_final = 0.0;
    bool loewner_holds = false;
    double tightness = 0.0;  // lambda_max(true_error_sq) / bound_final
    double min_slack = 0.0;  // worst lambda_min(level - previous level)
    double lhs_norm = 0.0;
};

// Two-level covariance bound for weighted operator sums: the deviation
// |sum_k w_k A_k* B_k - (avg A)* (sum_k w_k B_k)|^2 against the
// variance-style middle level and the crude final level, both centered at
// the supplied A and B.
BoundReport fourier_chain_check(const ModuleTuple& As, const ModuleTuple& Bs,
                                const Matrix& A, const Matrix& B,
                                const TransformParams& params,
                                const Tolerance& tol = {});

BoundReport mellin_chain_check(const ModuleTuple& As, const ModuleTuple& Bs,
                               const Matrix& A, const Matrix& B, int m,
                               const Tolerance& tol = {});

// Surrogate deviation |F(A)(m) - kernel_sum * avg A|^2 against
// [n^2 - sin^2(omega*m*n)/sin^2(omega*m)] * (uniform variance of the tuple).
// Throws SingularKernelError inside the guard band.
BoundReport fourier_surrogate_check(const ModuleTuple& As,
                                    const TransformParams& params,
                                    const Tolerance& tol = {},
                                    double guard = 1e-8);

// |M(A)(m) - S_{m-1}(n) * avg A|^2 against the exact integer coefficient
// times the uniform variance of the tuple.
BoundReport mellin_surrogate_check(const ModuleTuple& As, int m,
                                   const Tolerance& tol = {});

struct TransformBounds {
    BoundReport chain;
    BoundReport surrogate;
};

TransformBounds fourier_bound_check(const ModuleTuple& As, const ModuleTuple& Bs,
                                    const Matrix& A, const Matrix& B,
                                    const TransformParams& params,
                                    const Tolerance& tol = {});

TransformBounds mellin_bound_check(const ModuleTuple& As, const ModuleTuple& Bs,
                                   const Matrix& A, const Matrix& B, int m,
                                   const Tolerance& tol = {});

// Scalar-coefficient covariance bound for square operator tuples
// (the module is the algebra over itself, so conj(alpha_k) I is an element):
// |sum p_k alpha_k A_k - (sum p_k alpha_k)(sum p_k A_k)|^2 bounded by the
// centered coefficient factor times the centered tuple factor.
BoundReport alpha_bound_check(const std::vector<Complex>& alphas,
                              const ModuleTuple& As, const Matrix& A,
                              const Matrix& B, const ProbabilityVector& p,
                              const Tolerance& tol = {});

}  // namespace gruss
