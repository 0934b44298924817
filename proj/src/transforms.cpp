#include "gruss/transforms.hpp"

#include "gruss/algebra.hpp"
#include "gruss/module.hpp"

#include <cmath>
#include <limits>

namespace gruss {

namespace {

// Verdict plumbing shared by the bound checks.

double report_scale(const Matrix& lhs, const Matrix& rhs) {
    return std::max(operator_norm(lhs), operator_norm(rhs)) + 1.0;
}

void apply_link(BoundReport& report, const Matrix& lower, const Matrix& upper,
                const Tolerance& tol) {
    const double slack = loewner_slack(lower, upper);
    report.min_slack = std::min(report.min_slack, slack);
    if (slack < -tol.bound(report_scale(lower, upper))) report.loewner_holds = false;
}

void finalize(BoundReport& report, const Tolerance& tol) {
    report.lhs_norm = operator_norm(report.true_error_sq);
    if (report.bound_final <= tol.atol) {
        report.tightness = report.lhs_norm <= tol.atol
                               ? 0.0
                               : std::numeric_limits<double>::infinity();
    } else {
        report.tightness = report.lhs_norm / report.bound_final;
    }
}

Matrix tuple_mean(const ModuleTuple& xs) {
    Matrix mean = Matrix::Zero(xs.front().rows(), xs.front().cols());
    for (const Matrix& x : xs) mean += x;
    return mean / static_cast<double>(xs.size());
}

// sum_k |x_k - c|^2 (unnormalized).
Matrix centered_gram_sum(const ModuleTuple& xs, const Matrix& c) {
    Matrix total = Matrix::Zero(xs.front().cols(), xs.front().cols());
    for (const Matrix& x : xs) total += inner_product(x - c, x - c);
    return total;
}

// Generic two-level check shared by the Fourier and Mellin chains:
//   D = sum_k w_k <A_k, B_k> - <avg A, sum_k w_k B_k>,
//   |D|^2 <= || sum|A_k - A|^2 - |avg A - A|^2 || *
//            ( sum|w_k B_k - B|^2 - |avg(w B) - B|^2 )
//         <= ( sum ||A_k - A||^2 ) * ( sum |w_k B_k - B|^2 ).
BoundReport weighted_chain_check(const std::vector<Complex>& ws,
                                 const ModuleTuple& As, const ModuleTuple& Bs,
                                 const Matrix& A, const Matrix& B,
                                 const Tolerance& tol) {
    require_uniform(As, "weighted_chain_check");
    require_uniform(Bs, "weighted_chain_check");
    require(As.size() == Bs.size() && As.size() == ws.size(),
            "weighted_chain_check: length mismatch");
    require(A.rows() == As.front().rows() && A.cols() == As.front().cols() &&
                B.rows() == Bs.front().rows() && B.cols() == Bs.front().cols(),
            "weighted_chain_check: center shape mismatch");
    require(As.front().rows() == Bs.front().rows() &&
                As.front().cols() == Bs.front().cols(),
            "weighted_chain_check: tuple shapes differ");

    const std::size_t n = As.size();
    const Eigen::Index k = As.front().cols();

    ModuleTuple weighted_b(n);
    for (std::size_t i = 0; i < n; ++i) weighted_b[i] = ws[i] * Bs[i];

    Matrix cross = Matrix::Zero(k, k);
    for (std::size_t i = 0; i < n; ++i) cross += inner_product(As[i], weighted_b[i]);

    Matrix weighted_b_sum = Matrix::Zero(B.rows(), B.cols());
    for (const Matrix& wb : weighted_b) weighted_b_sum += wb;

    const Matrix deviation = cross - inner_product(tuple_mean(As), weighted_b_sum);

    const Matrix avg_a = tuple_mean(As);
    const Matrix avg_wb = weighted_b_sum / static_cast<double>(n);

    const Matrix factor_a =
        centered_gram_sum(As, A) - inner_product(avg_a - A, avg_a - A);
    const Matrix factor_b =
        centered_gram_sum(weighted_b, B) - inner_product(avg_wb - B, avg_wb - B);

    double crude_a = 0.0;
    for (const Matrix& a : As) {
        const double d = module_norm(a - A);
        crude_a += d * d;
    }
    const Matrix crude_b = centered_gram_sum(weighted_b, B);

    BoundReport report;
    report.loewner_holds = true;
    report.min_slack = std::numeric_limits<double>::infinity();
    report.true_error_sq = deviation.adjoint() * deviation;
    report.bound_mid = operator_norm(factor_a) * factor_b;
    const Matrix final_level = crude_a * crude_b;
    report.bound_final = operator_norm(final_level);

    apply_link(report, report.true_error_sq, report.bound_mid, tol);
    apply_link(report, report.bound_mid, final_level, tol);
    finalize(report, tol);
    return report;
}

// Surrogate deviation sum_k w_k (A_k - avg A); equals
// sum_k w_k A_k - (sum_k w_k) avg A, evaluated centered so a constant tuple
// yields an exactly zero deviation.
Matrix centered_weighted_sum(const std::vector<Complex>& ws, const ModuleTuple& xs) {
    const Matrix avg = tuple_mean(xs);
    Matrix d = Matrix::Zero(xs.front().rows(), xs.front().cols());
    for (std::size_t i = 0; i < xs.size(); ++i) d += ws[i] * (xs[i] - avg);
    return d;
}

// (1/n) sum |A_k|^2 - (1/n^2) |sum A_k|^2.
Matrix uniform_variance(const ModuleTuple& xs) {
    const double n = static_cast<double>(xs.size());
    Matrix second = Matrix::Zero(xs.front().cols(), xs.front().cols());
    Matrix total = Matrix::Zero(xs.front().rows(), xs.front().cols());
    for (const Matrix& x : xs) {
        second += inner_product(x, x);
        total += x;
    }
    return second / n - inner_product(total, total) / (n * n);
}

BoundReport surrogate_report(const Matrix& deviation, double coefficient,
                             const Matrix& variance, const Tolerance& tol) {
    BoundReport report;
    report.loewner_holds = true;
    report.min_slack = std::numeric_limits<double>::infinity();
    report.true_error_sq = deviation.adjoint() * deviation;
    report.bound_mid = coefficient * variance;
    report.bound_final = operator_norm(report.bound_mid);
    apply_link(report, report.true_error_sq, report.bound_mid, tol);
    finalize(report, tol);
    return report;
}

}  // namespace

void validate(const TransformParams& params) {
    require(params.n >= 1, "TransformParams: n must be positive");
    require(params.m >= 1 && params.m <= params.n,
            "TransformParams: m must lie in [1, n]");
    require(std::isfinite(params.omega), "TransformParams: omega must be finite");
}

std::vector<Complex> fourier_weights(const TransformParams& params) {
    validate(params);
    const long double theta = static_cast<long double>(params.omega) * params.m;
    std::vector<Complex> ws(static_cast<std::size_t>(params.n));
    for (int k = 1; k <= params.n; ++k) {
        const long double phase = 2.0L * theta * k;
        ws[static_cast<std::size_t>(k - 1)] =
            Complex(static_cast<double>(std::cos(phase)),
                    static_cast<double>(std::sin(phase)));
    }
    return ws;
}

std::vector<double> mellin_weights(int m, int n) {
    require(m >= 1, "mellin_weights: m must be positive");
    require(n >= 1, "mellin_weights: n must be positive");
    std::vector<double> ws(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        long double w = 1.0L;
        for (int j = 0; j < m - 1; ++j) w *= k;
        ws[static_cast<std::size_t>(k - 1)] = static_cast<double>(w);
    }
    return ws;
}

Matrix fourier_transform(const ModuleTuple& xs, const TransformParams& params) {
    require_uniform(xs, "fourier_transform");
    require(static_cast<std::size_t>(params.n) == xs.size(),
            "fourier_transform: params.n must equal the tuple length");
    const std::vector<Complex> ws = fourier_weights(params);
    Matrix sum = Matrix::Zero(xs.front().rows(), xs.front().cols());
    for (std::size_t i = 0; i < xs.size(); ++i) sum += ws[i] * xs[i];
    return sum;
}

Matrix fourier_algebra(const ModuleTuple& xs, const ModuleTuple& ys,
                       const TransformParams& params) {
    require_uniform(xs, "fourier_algebra");
    require_uniform(ys, "fourier_algebra");
    require(xs.size() == ys.size(), "fourier_algebra: length mismatch");
    require(static_cast<std::size_t>(params.n) == xs.size(),
            "fourier_algebra: params.n must equal the tuple length");
    const std::vector<Complex> ws = fourier_weights(params);
    Matrix sum = Matrix::Zero(xs.front().cols(), xs.front().cols());
    for (std::size_t i = 0; i < xs.size(); ++i)
        sum += ws[i] * inner_product(xs[i], ys[i]);
    return sum;
}

Matrix mellin_transform(const ModuleTuple& xs, int m) {
    require_uniform(xs, "mellin_transform");
    const std::vector<double> ws = mellin_weights(m, static_cast<int>(xs.size()));
    Matrix sum = Matrix::Zero(xs.front().rows(), xs.front().cols());
    for (std::size_t i = 0; i < xs.size(); ++i) sum += ws[i] * xs[i];
    return sum;
}

Matrix mellin_algebra(const ModuleTuple& xs, const ModuleTuple& ys, int m) {
    require_uniform(xs, "mellin_algebra");
    require_uniform(ys, "mellin_algebra");
    require(xs.size() == ys.size(), "mellin_algebra: length mismatch");
    const std::vector<double> ws = mellin_weights(m, static_cast<int>(xs.size()));
    Matrix sum = Matrix::Zero(xs.front().cols(), xs.front().cols());
    for (std::size_t i = 0; i < xs.size(); ++i)
        sum += ws[i] * inner_product(xs[i], ys[i]);
    return sum;
}

mpz_class power_sum(unsigned long p, unsigned long n) {
    require(n >= 1, "power_sum: n must be positive");
    mpz_class total = 0;
    mpz_class term;
    for (unsigned long k = 1; k <= n; ++k) {
        mpz_ui_pow_ui(term.get_mpz_t(), k, p);
        total += term;
    }
    return total;
}

mpz_class mellin_coefficient(int m, int n) {
    require(m >= 1, "mellin_coefficient: m must be positive");
    require(n >= 1, "mellin_coefficient: n must be positive");
    const mpz_class s_high = power_sum(2 * static_cast<unsigned long>(m) - 2,
                                       static_cast<unsigned long>(n));
    const mpz_class s_low =
        power_sum(static_cast<unsigned long>(m) - 1, static_cast<unsigned long>(n));
    return n * s_high - s_low * s_low;
}

Complex fourier_kernel_sum(const TransformParams& params, double guard) {
    validate(params);
    const long double theta = static_cast<long double>(params.omega) * params.m;
    const long double denom = std::sin(theta);
    if (std::abs(static_cast<double>(denom)) <= guard)
        throw SingularKernelError("fourier_kernel_sum: sin(omega*m) within guard band");
    const long double ratio = std::sin(theta * params.n) / denom;
    const long double phase = theta * (params.n + 1);
    return Complex(static_cast<double>(ratio * std::cos(phase)),
                   static_cast<double>(ratio * std::sin(phase)));
}

Complex fourier_kernel_direct(const TransformParams& params) {
    validate(params);
    const long double theta = static_cast<long double>(params.omega) * params.m;
    long double re = 0.0L;
    long double im = 0.0L;
    for (int k = 1; k <= params.n; ++k) {
        const long double phase = 2.0L * theta * k;
        re += std::cos(phase);
        im += std::sin(phase);
    }
    return Complex(static_cast<double>(re), static_cast<double>(im));
}

BoundReport fourier_chain_check(const ModuleTuple& As, const ModuleTuple& Bs,
                                const Matrix& A, const Matrix& B,
                                const TransformParams& params,
                                const Tolerance& tol) {
    require(static_cast<std::size_t>(params.n) == As.size(),
            "fourier_chain_check: params.n must equal the tuple length");
    return weighted_chain_check(fourier_weights(params), As, Bs, A, B, tol);
}

BoundReport mellin_chain_check(const ModuleTuple& As, const ModuleTuple& Bs,
                               const Matrix& A, const Matrix& B, int m,
                               const Tolerance& tol) {
    require(!As.empty(), "mellin_chain_check: empty tuple");
    require(m >= 1 && static_cast<std::size_t>(m) <= As.size(),
            "mellin_chain_check: m must lie in [1, n]");
    const std::vector<double> wd = mellin_weights(m, static_cast<int>(As.size()));
    std::vector<Complex> ws(wd.begin(), wd.end());
    return weighted_chain_check(ws, As, Bs, A, B, tol);
}

BoundReport fourier_surrogate_check(const ModuleTuple& As,
                                    const TransformParams& params,
                                    const Tolerance& tol, double guard) {
    require_uniform(As, "fourier_surrogate_check");
    require(static_cast<std::size_t>(params.n) == As.size(),
            "fourier_surrogate_check: params.n must equal the tuple length");

    // Guard first: the coefficient needs sin(omega*m) bounded away from zero.
    const long double theta = static_cast<long double>(params.omega) * params.m;
    const long double denom = std::sin(theta);
    if (std::abs(static_cast<double>(denom)) <= guard)
        throw SingularKernelError("fourier_surrogate_check: sin(omega*m) within guard band");
    const long double ratio = std::sin(theta * params.n) / denom;

    const double n = static_cast<double>(params.n);
    double coeff = n * n - static_cast<double>(ratio * ratio);
    if (coeff < 0.0) coeff = 0.0;  // |ratio| <= n up to round-off

    const Matrix deviation = centered_weighted_sum(fourier_weights(params), As);
    return surrogate_report(deviation, coeff, uniform_variance(As), tol);
}

BoundReport mellin_surrogate_check(const ModuleTuple& As, int m,
                                   const Tolerance& tol) {
    require_uniform(As, "mellin_surrogate_check");
    const int n = static_cast<int>(As.size());
    require(m >= 1 && m <= n, "mellin_surrogate_check: m must lie in [1, n]");

    const std::vector<double> wd = mellin_weights(m, n);
    std::vector<Complex> ws(wd.begin(), wd.end());
    const Matrix deviation = centered_weighted_sum(ws, As);
    const double coeff = mellin_coefficient(m, n).get_d();
    return surrogate_report(deviation, coeff, uniform_variance(As), tol);
}

TransformBounds fourier_bound_check(const ModuleTuple& As, const ModuleTuple& Bs,
                                    const Matrix& A, const Matrix& B,
                                    const TransformParams& params,
                                    const Tolerance& tol) {
    return TransformBounds{fourier_chain_check(As, Bs, A, B, params, tol),
                           fourier_surrogate_check(As, params, tol)};
}

TransformBounds mellin_bound_check(const ModuleTuple& As, const ModuleTuple& Bs,
                                   const Matrix& A, const Matrix& B, int m,
                                   const Tolerance& tol) {
    return TransformBounds{mellin_chain_check(As, Bs, A, B, m, tol),
                           mellin_surrogate_check(As, m, tol)};
}

BoundReport alpha_bound_check(const std::vector<Complex>& alphas,
                              const ModuleTuple& As, const Matrix& A,
                              const Matrix& B, const ProbabilityVector& p,
                              const Tolerance& tol) {
    require_uniform(As, "alpha_bound_check");
    require(As.front().rows() == As.front().cols(),
            "alpha_bound_check: tuple elements must be square (module over itself)");
    require(alphas.size() == As.size() && As.size() == p.size(),
            "alpha_bound_check: length mismatch");
    require(A.rows() == As.front().rows() && A.cols() == As.front().cols() &&
                B.rows() == As.front().rows() && B.cols() == As.front().cols(),
            "alpha_bound_check: center shape mismatch");

    const Eigen::Index k = As.front().rows();
    const Matrix id = Matrix::Identity(k, k);

    Matrix lead = Matrix::Zero(k, k);
    Matrix mean_a = Matrix::Zero(k, k);
    Complex alpha_mean = 0.0;
    for (std::size_t i = 0; i < As.size(); ++i) {
        lead += p[i] * alphas[i] * As[i];
        mean_a += p[i] * As[i];
        alpha_mean += p[i] * alphas[i];
    }
    const Matrix deviation = lead - alpha_mean * mean_a;

    // Coefficient factor: sum p_k |conj(alpha_k) I - A|^2 - |sum p_k conj(alpha_k) I - A|^2.
    Matrix coeff_sum = Matrix::Zero(k, k);
    Matrix coeff_mean = Matrix::Zero(k, k);
    for (std::size_t i = 0; i < As.size(); ++i) {
        const Matrix z = std::conj(alphas[i]) * id - A;
        coeff_sum += p[i] * inner_product(z, z);
        coeff_mean += p[i] * (std::conj(alphas[i]) * id);
    }
    const Matrix coeff_factor =
        coeff_sum - inner_product(coeff_mean - A, coeff_mean - A);

    // Tuple factor: sum p_k |A_k - B|^2 - |sum p_k A_k - B|^2.
    Matrix tuple_sum = Matrix::Zero(k, k);
    for (std::size_t i = 0; i < As.size(); ++i)
        tuple_sum += p[i] * inner_product(As[i] - B, As[i] - B);
    const Matrix tuple_factor = tuple_sum - inner_product(mean_a - B, mean_a - B);

    BoundReport report;
    report.loewner_holds = true;
    report.min_slack = std::numeric_limits<double>::infinity();
    report.true_error_sq = deviation.adjoint() * deviation;
    report.bound_mid = operator_norm(coeff_factor) * tuple_factor;
    report.bound_final = operator_norm(report.bound_mid);
    apply_link(report, report.true_error_sq, report.bound_mid, tol);
    finalize(report, tol);
    return report;
}

}  // namespace gruss
