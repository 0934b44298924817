// inequality.hpp — every displayed inequality as a checkable verdict with a
// signed numeric slack, plus the extremal construction and seeded fuzzing.
//
// Scalar checks report slack = rhs - lhs. Loewner checks report
// slack = lambda_min(rhs - lhs). Identity checks report the residual norm as
// lhs against rhs 0, so slack = -residual. A verdict holds when
// slack >= -(atol + rtol*scale) with scale = max of the two sides' norms + 1.

#pragma once

#include "gruss/generate.hpp"
#include "gruss/module.hpp"
#include "gruss/serialize.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gruss {

struct Verdict {
    std::string inequality_id;
    double lhs_scalar = 0.0;
    double rhs_scalar = 0.0;
    double slack = 0.0;
    bool holds = false;
    Tolerance tol_used;
};

Json verdict_to_json(const Verdict& v);

// The five Schwarz forms: the module inequality, its absolute-value variant,
// the trace-functional form, the spectral-radius form, and the seminorm form.
enum class SchwarzVariant { Module, Abs, Functional, Radius, Seminorm };

std::string to_string(SchwarzVariant v);
SchwarzVariant schwarz_variant_from_string(const std::string& name);

Verdict check_schwarz(SchwarzVariant variant, const Matrix& x, const Matrix& y,
                      const Tolerance& tol = {});

// Inputs built around an element e whose Gram <e,e> is idempotent.
struct IdempotentInstance {
    Matrix x, y, e;      // module elements, one shape
    Matrix a, b, c, d;   // algebra elements
};

// The Gram-identity bundle for G_e: the self-Gram decomposition, positivity,
// the centered upper bound, and translation invariance.
std::vector<Verdict> check_idempotent_identities(const IdempotentInstance& inst,
                                                 const Tolerance& tol = {});

// The full G_e bound chain, including the quarter bound when the Hermitian
// parts of <x - ea, eb - x> and <y - ec, ed - y> are PSD.
Verdict check_gruss_idempotent_bound(const IdempotentInstance& inst,
                                     const Tolerance& tol = {});

// Inputs for the probability-weighted functional G_p.
struct WeightedInstance {
    ModuleTuple xs, ys;
    std::vector<Complex> alphas;
    ProbabilityVector p;
    Matrix a, b;  // module elements used as centering points
};

// The weighted identity bundle: the scalar-coefficient identity, translation
// invariance of G_p, the self-decomposition, and its crude upper bound.
std::vector<Verdict> check_weighted_identities(const WeightedInstance& inst,
                                               const Tolerance& tol = {});

// The two-level chain bound on |G_p(xs,ys)|^2.
Verdict check_gruss_weighted_bound(const WeightedInstance& inst,
                                   const Tolerance& tol = {});

// Inputs whose tuples are certified to lie in balls around a and b.
struct BallInstance {
    ModuleTuple xs, ys;
    ProbabilityVector p;
    Matrix a, b;
    double r = 0.0, s = 0.0;
};

// ||G_p|| <= r*s. Radii are re-verified; PreconditionError if they fail.
Verdict check_gruss_ball_bound(const BallInstance& inst, const Tolerance& tol = {});

struct AlphaBallInstance {
    ModuleTuple xs;
    std::vector<Complex> alphas;
    ProbabilityVector p;
    Matrix a;
    double r = 0.0;
};

// || sum p a x - (sum p a)(sum p x) || <= r sum p|a_i - mean|
//                                      <= r (sum p|a_i|^2 - |mean|^2)^(1/2).
Verdict check_alpha_ball_bound(const AlphaBallInstance& inst,
                               const Tolerance& tol = {});

// The classical scalar case: real samples inside [a_lo,a_hi] x [b_lo,b_hi],
// uniform weights, bound (a_hi-a_lo)(b_hi-b_lo)/4.
struct ScalarGrussInstance {
    std::vector<double> a_values, b_values;
    double a_lo = 0.0, a_hi = 0.0, b_lo = 0.0, b_hi = 0.0;
};

Verdict check_scalar_gruss(const ScalarGrussInstance& inst,
                           const Tolerance& tol = {});

// The two-point extremal construction at radii (r, s): ||G_p|| equals r*s, so
// the ball bound is attained. Returns the instance and an equality verdict.
std::pair<SharpnessInstance, Verdict> sharpness_demo(double r, double s, int k,
                                                     int m,
                                                     const GenConfig& cfg = {});

// ----------------------------------------------------------------------------
// Seeded fuzzing

struct DimRanges {
    int k_max = 4;  // algebra dimension
    int m_max = 4;  // module rows
    int n_max = 8;  // tuple length
};

// Every id accepted by make_instance / evaluate_instance / fuzz_campaign.
const std::vector<std::string>& known_inequality_ids();

// Deterministic hypothesis-satisfying instance for (id, trial), serialized in
// the interchange format with the generating config embedded.
Json make_instance(const std::string& id, std::uint64_t trial,
                   const DimRanges& dims, const GenConfig& base);

// Re-evaluates a serialized instance. The verdict carries the sub-id of the
// worst link for multi-link families.
Verdict evaluate_instance(const std::string& id, const Json& instance,
                          const Tolerance& tol = {});

struct FuzzReport {
    std::size_t trials = 0;
    std::size_t failures = 0;
    double min_slack = 0.0;
    std::uint64_t seed = 0;
    Json worst_case;
};

// Runs `trials` independent substream trials; deterministic given the seed.
FuzzReport fuzz_campaign(const std::string& id, std::size_t trials,
                         std::uint64_t seed, const DimRanges& dims = {},
                         const Tolerance& tol = {});

Json fuzz_report_to_json(const FuzzReport& report);

}  // namespace gruss
