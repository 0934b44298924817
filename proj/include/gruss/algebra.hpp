// algebra.hpp — dense complex-matrix realization of the C*-algebra M_k.
//
// Elements are square complex matrices; the involution is the conjugate
// transpose, the norm is the largest singular value, positivity is the usual
// PSD cone. Every function is a pure function of its arguments.

#pragma once

#include "gruss/types.hpp"

namespace gruss {

// Conjugate transpose.
Matrix adjoint(const Matrix& a);

// (a + a*)/2.
Matrix hermitian_part(const Matrix& a);

// Largest singular value; 0 for the zero matrix.
double operator_norm(const Matrix& a);

// max |lambda| over the eigenvalues of a square matrix.
double spectral_radius(const Matrix& a);

// Smallest eigenvalue of the Hermitian part of a square matrix.
double min_eigenvalue(const Matrix& a);

// Positive square root of a Hermitian PSD matrix. Eigenvalues in
// [-tol.bound(norm), 0) are clamped to zero; anything lower, or a
// non-Hermitian input, is rejected with std::domain_error.
Matrix sqrt_psd(const Matrix& a, const Tolerance& tol = {});

// |a| = (a* a)^(1/2).
Matrix abs_element(const Matrix& a);

// Signed Loewner margin: lambda_min of the Hermitized difference b - a.
double loewner_slack(const Matrix& a, const Matrix& b);

// a <= b in the Loewner order, within tolerance scaled by ||b - a||.
bool loewner_leq(const Matrix& a, const Matrix& b, const Tolerance& tol = {});

// ||a*a - a|| <= tol.bound(||a||).
bool is_idempotent(const Matrix& a, const Tolerance& tol = {});

// The fixed positive linear functional on M_k: the trace.
Complex trace_functional(const Matrix& a);

}  // namespace gruss
