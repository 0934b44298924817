// module.hpp — the Hilbert C*-module of m-by-k complex matrices over M_k,
// with <x,y> = x*y, together with the two covariance-type functionals
// built from an idempotent Gram element and from a probability vector.

#pragma once

#include "gruss/algebra.hpp"
#include "gruss/types.hpp"

namespace gruss {

// <x,y> = x*y. Both arguments must have identical shape.
Matrix inner_product(const Matrix& x, const Matrix& y);

// x . a, the right module action of M_k.
Matrix right_action(const Matrix& x, const Matrix& a);

// ||x|| = ||<x,x>||^(1/2), the largest singular value of x.
double module_norm(const Matrix& x);

// |x| = <x,x>^(1/2), a PSD element of M_k.
Matrix module_abs(const Matrix& x);

// Shape checks for tuples: nonempty and uniform.
void require_uniform(const ModuleTuple& xs, const char* what);

// G_e(x,y) = <x,y> - <x,e><e,y>. Requires <e,e> idempotent (PreconditionError
// otherwise): then e<e,e> = e and G_e is itself a semi-inner product.
Matrix gruss_idempotent(const Matrix& x, const Matrix& y, const Matrix& e,
                        const Tolerance& tol = {});

// G_p(xs,ys) = sum_i p_i <x_i,y_i> - <sum_i p_i x_i, sum_i p_i y_i>.
Matrix gruss_weighted(const ModuleTuple& xs, const ModuleTuple& ys,
                      const ProbabilityVector& p);

// sum_i p_i a_i x_i - (sum_i p_i a_i)(sum_i p_i x_i) for scalar coefficients a_i.
Matrix weighted_alpha_combination(const std::vector<Complex>& alphas,
                                  const ModuleTuple& xs,
                                  const ProbabilityVector& p);

// Convenience: sum_i p_i x_i.
Matrix weighted_mean(const ModuleTuple& xs, const ProbabilityVector& p);

}  // namespace gruss
