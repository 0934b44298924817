#include "gruss/algebra.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>

namespace gruss {

namespace {

void require_square(const Matrix& a, const char* what) {
    require(a.rows() == a.cols(), std::string(what) + ": matrix must be square");
    require(a.rows() >= 1, std::string(what) + ": matrix must be nonempty");
}

}  // namespace

Matrix adjoint(const Matrix& a) { return a.adjoint(); }

Matrix hermitian_part(const Matrix& a) {
    require_square(a, "hermitian_part");
    return 0.5 * (a + a.adjoint());
}

double operator_norm(const Matrix& a) {
    if (a.size() == 0) return 0.0;
    if (a.isZero(0.0)) return 0.0;
    Eigen::JacobiSVD<Matrix> svd(a);
    return svd.singularValues()(0);
}

double spectral_radius(const Matrix& a) {
    require_square(a, "spectral_radius");
    Eigen::ComplexEigenSolver<Matrix> es(a, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("spectral_radius: eigensolver failed");
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

double min_eigenvalue(const Matrix& a) {
    require_square(a, "min_eigenvalue");
    Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(a), Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("min_eigenvalue: eigensolver failed");
    return es.eigenvalues()(0);
}

Matrix sqrt_psd(const Matrix& a, const Tolerance& tol) {
    require_square(a, "sqrt_psd");
    const double norm = operator_norm(a);
    const double slack = tol.bound(norm);
    if (operator_norm(a - a.adjoint()) > 2.0 * slack)
        throw std::domain_error("sqrt_psd: input is not Hermitian within tolerance");

    Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(a));
    if (es.info() != Eigen::Success)
        throw std::runtime_error("sqrt_psd: eigensolver failed");

    Eigen::VectorXd lambda = es.eigenvalues();
    for (Eigen::Index i = 0; i < lambda.size(); ++i) {
        if (lambda(i) < -slack)
            throw std::domain_error("sqrt_psd: input is not positive semidefinite within tolerance");
        if (lambda(i) < 0.0) lambda(i) = 0.0;  // round-off clamp
    }
    return es.eigenvectors() * lambda.cwiseSqrt().asDiagonal() *
           es.eigenvectors().adjoint();
}

Matrix abs_element(const Matrix& a) {
    require_square(a, "abs_element");
    return sqrt_psd(a.adjoint() * a);
}

double loewner_slack(const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(),
            "loewner_slack: dimension mismatch");
    return min_eigenvalue(b - a);
}

bool loewner_leq(const Matrix& a, const Matrix& b, const Tolerance& tol) {
    require(a.rows() == b.rows() && a.cols() == b.cols(),
            "loewner_leq: dimension mismatch");
    require(a.rows() == a.cols(), "loewner_leq: matrices must be square");
    const Matrix d = b - a;
    return min_eigenvalue(d) >= -tol.bound(operator_norm(d));
}

bool is_idempotent(const Matrix& a, const Tolerance& tol) {
    require_square(a, "is_idempotent");
    return operator_norm(a * a - a) <= tol.bound(operator_norm(a));
}

Complex trace_functional(const Matrix& a) {
    require_square(a, "trace_functional");
    return a.trace();
}

}  // namespace gruss
