#include "gruss/module.hpp"

#include <cmath>

namespace gruss {

Matrix inner_product(const Matrix& x, const Matrix& y) {
    require(x.rows() == y.rows() && x.cols() == y.cols(),
            "inner_product: shape mismatch");
    require(x.rows() >= 1 && x.cols() >= 1, "inner_product: empty element");
    return x.adjoint() * y;
}

Matrix right_action(const Matrix& x, const Matrix& a) {
    require(a.rows() == a.cols(), "right_action: algebra element must be square");
    require(x.cols() == a.rows(), "right_action: algebra dimension mismatch");
    return x * a;
}

double module_norm(const Matrix& x) {
    return std::sqrt(operator_norm(inner_product(x, x)));
}

Matrix module_abs(const Matrix& x) { return sqrt_psd(inner_product(x, x)); }

void require_uniform(const ModuleTuple& xs, const char* what) {
    require(!xs.empty(), std::string(what) + ": tuple must be nonempty");
    for (const Matrix& x : xs)
        require(x.rows() == xs.front().rows() && x.cols() == xs.front().cols(),
                std::string(what) + ": tuple shapes are not uniform");
}

Matrix gruss_idempotent(const Matrix& x, const Matrix& y, const Matrix& e,
                        const Tolerance& tol) {
    require(x.rows() == e.rows() && x.cols() == e.cols() &&
                y.rows() == e.rows() && y.cols() == e.cols(),
            "gruss_idempotent: shape mismatch");
    if (!is_idempotent(inner_product(e, e), tol))
        throw PreconditionError("gruss_idempotent: <e,e> is not idempotent");
    return inner_product(x, y) - inner_product(x, e) * inner_product(e, y);
}

Matrix gruss_weighted(const ModuleTuple& xs, const ModuleTuple& ys,
                      const ProbabilityVector& p) {
    require_uniform(xs, "gruss_weighted");
    require_uniform(ys, "gruss_weighted");
    require(xs.size() == ys.size() && xs.size() == p.size(),
            "gruss_weighted: length mismatch");
    require(xs.front().rows() == ys.front().rows() &&
                xs.front().cols() == ys.front().cols(),
            "gruss_weighted: tuple shapes differ");

    const Eigen::Index k = xs.front().cols();
    Matrix cross = Matrix::Zero(k, k);
    Matrix mx = Matrix::Zero(xs.front().rows(), k);
    Matrix my = Matrix::Zero(xs.front().rows(), k);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        cross += p[i] * inner_product(xs[i], ys[i]);
        mx += p[i] * xs[i];
        my += p[i] * ys[i];
    }
    return cross - inner_product(mx, my);
}

Matrix weighted_alpha_combination(const std::vector<Complex>& alphas,
                                  const ModuleTuple& xs,
                                  const ProbabilityVector& p) {
    require_uniform(xs, "weighted_alpha_combination");
    require(alphas.size() == xs.size() && xs.size() == p.size(),
            "weighted_alpha_combination: length mismatch");

    Matrix lead = Matrix::Zero(xs.front().rows(), xs.front().cols());
    Matrix mean = lead;
    Complex alpha_mean = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        lead += p[i] * alphas[i] * xs[i];
        mean += p[i] * xs[i];
        alpha_mean += p[i] * alphas[i];
    }
    return lead - alpha_mean * mean;
}

Matrix weighted_mean(const ModuleTuple& xs, const ProbabilityVector& p) {
    require_uniform(xs, "weighted_mean");
    require(xs.size() == p.size(), "weighted_mean: length mismatch");
    Matrix m = Matrix::Zero(xs.front().rows(), xs.front().cols());
    for (std::size_t i = 0; i < xs.size(); ++i) m += p[i] * xs[i];
    return m;
}

}  // namespace gruss
