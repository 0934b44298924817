#include "gruss/generate.hpp"

#include "gruss/module.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <numbers>

namespace gruss {

namespace {

std::uint64_t splitmix_step(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

std::uint64_t SplitMix::next_u64() { return splitmix_step(state_); }

double SplitMix::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SplitMix::next_symmetric(double half_width) {
    return (2.0 * next_unit() - 1.0) * half_width;
}

std::uint64_t SplitMix::next_range(std::uint64_t lo, std::uint64_t hi) {
    require(lo <= hi, "SplitMix::next_range: empty range");
    const std::uint64_t span = hi - lo + 1;
    return lo + next_u64() % span;  // span is tiny here; modulo bias is negligible
}

GenConfig substream(const GenConfig& base, std::string_view tag, std::uint64_t index) {
    std::uint64_t s = base.seed;
    s = splitmix_step(s) ^ fnv1a(tag);
    s = splitmix_step(s) ^ index;
    (void)splitmix_step(s);
    GenConfig child = base;
    child.seed = s;
    return child;
}

Matrix random_matrix(Eigen::Index rows, Eigen::Index cols, const GenConfig& cfg) {
    require(rows >= 1 && cols >= 1, "random_matrix: dimensions must be positive");
    SplitMix rng(cfg.seed);
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) {
            const double re = rng.next_symmetric(cfg.scale);
            const double im = rng.next_symmetric(cfg.scale);
            m(i, j) = Complex(re, im);
        }
    return m;
}

Matrix random_real_matrix(Eigen::Index rows, Eigen::Index cols, const GenConfig& cfg) {
    require(rows >= 1 && cols >= 1, "random_real_matrix: dimensions must be positive");
    SplitMix rng(cfg.seed);
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j)
            m(i, j) = Complex(rng.next_symmetric(cfg.scale), 0.0);
    return m;
}

Matrix random_partial_isometry(Eigen::Index rows, Eigen::Index cols,
                               Eigen::Index rank, const GenConfig& cfg) {
    require(rows >= 1 && cols >= 1, "random_partial_isometry: dimensions must be positive");
    require(rank >= 0 && rank <= std::min(rows, cols),
            "random_partial_isometry: rank is infeasible");
    if (rank == 0) return Matrix::Zero(rows, cols);

    const Matrix seed_matrix = random_matrix(rows, cols, cfg);
    Eigen::JacobiSVD<Matrix> svd(seed_matrix, Eigen::ComputeThinU | Eigen::ComputeThinV);
    return svd.matrixU().leftCols(rank) * svd.matrixV().leftCols(rank).adjoint();
}

ProbabilityVector random_probability_vector(std::size_t n, const GenConfig& cfg) {
    require(n >= 1, "random_probability_vector: n must be positive");
    SplitMix rng(cfg.seed);
    std::vector<double> w(n);
    double sum = 0.0;
    for (double& wi : w) {
        wi = rng.next_unit() + 1e-12;  // keep weights strictly positive
        sum += wi;
    }
    std::size_t largest = 0;
    for (std::size_t i = 0; i < n; ++i) {
        w[i] /= sum;
        if (w[i] > w[largest]) largest = i;
    }
    // Push the residual of the normalized sum into the largest weight.
    for (int pass = 0; pass < 2; ++pass) {
        double s = 0.0;
        for (double wi : w) s += wi;
        w[largest] += 1.0 - s;
    }
    return ProbabilityVector(std::move(w));
}

std::vector<Complex> random_scalars(std::size_t n, const GenConfig& cfg) {
    require(n >= 1, "random_scalars: n must be positive");
    SplitMix rng(cfg.seed);
    std::vector<Complex> v(n);
    for (Complex& c : v) {
        const double re = rng.next_symmetric(cfg.scale);
        const double im = rng.next_symmetric(cfg.scale);
        c = Complex(re, im);
    }
    return v;
}

ModuleTuple ball_tuple(const Matrix& center, double radius, std::size_t n,
                       const GenConfig& cfg) {
    require(radius >= 0.0, "ball_tuple: radius must be nonnegative");
    require(n >= 1, "ball_tuple: n must be positive");
    ModuleTuple xs;
    xs.reserve(n);
    SplitMix rng(substream(cfg, "ball.fractions", 0).seed);
    for (std::size_t i = 0; i < n; ++i) {
        if (radius == 0.0) {
            xs.push_back(center);
            continue;
        }
        Matrix offset;
        double norm = 0.0;
        GenConfig sub = substream(cfg, "ball.offset", i);
        for (std::size_t attempt = 0; attempt <= cfg.retry_limit; ++attempt) {
            offset = random_matrix(center.rows(), center.cols(), sub);
            norm = module_norm(offset);
            if (norm > 0.0) break;
            sub = substream(sub, "ball.retry", attempt);
        }
        if (norm == 0.0) throw GenerationError("ball_tuple: could not draw a nonzero offset");
        // First element lands in [0.9, 0.999]*radius, the rest anywhere inside.
        const double fraction =
            (i == 0) ? 0.9 + 0.099 * rng.next_unit() : 0.999 * rng.next_unit();
        xs.push_back(center + offset * (fraction * radius / norm));
    }
    return xs;
}

Matrix midpoint_ball_element(const Matrix& e, const Matrix& a, const Matrix& b,
                             const GenConfig& cfg) {
    require(a.rows() == a.cols() && b.rows() == b.cols() && a.rows() == b.rows(),
            "midpoint_ball_element: algebra elements must be square and matched");
    require(e.cols() == a.rows(), "midpoint_ball_element: algebra dimension mismatch");

    const Matrix mid = e * (0.5 * (a + b));
    const Matrix z = e * (0.5 * (a - b));
    const Matrix gram = z.adjoint() * z;

    Eigen::SelfAdjointEigenSolver<Matrix> es(gram);
    const Eigen::VectorXd lambda = es.eigenvalues();
    const double lambda_max = lambda(lambda.size() - 1);
    if (lambda_max <= 1e-14) return mid;  // degenerate ball, only the midpoint fits

    SplitMix rng(substream(cfg, "midpoint.mu", 0).seed);
    const Complex mu =
        std::polar(0.6 * rng.next_unit(), 2.0 * std::numbers::pi * rng.next_unit());
    Matrix delta = mu * z;

    // Component outside col(z), restricted to the range of the Gram matrix so
    // it stays inside the (possibly rank-deficient) ball.
    const double cutoff = 1e-10 * lambda_max;
    Eigen::Index first_kept = 0;
    while (first_kept < lambda.size() && lambda(first_kept) <= cutoff) ++first_kept;
    if (first_kept < lambda.size()) {
        const double lambda_min_pos = lambda(first_kept);
        const Matrix range_proj =
            es.eigenvectors().rightCols(lambda.size() - first_kept) *
            es.eigenvectors().rightCols(lambda.size() - first_kept).adjoint();

        Eigen::JacobiSVD<Matrix> zsvd(z, Eigen::ComputeThinU);
        const auto& sv = zsvd.singularValues();
        Eigen::Index zrank = 0;
        while (zrank < sv.size() && sv(zrank) > 1e-12 * sv(0)) ++zrank;

        Matrix w = random_matrix(e.rows(), e.cols(), substream(cfg, "midpoint.w", 0));
        if (zrank > 0) {
            const Matrix uz = zsvd.matrixU().leftCols(zrank);
            w -= uz * (uz.adjoint() * w);
        }
        w = w * range_proj;
        const double w_norm = operator_norm(w);
        if (w_norm > 1e-12)
            delta += std::sqrt(0.45 * lambda_min_pos) / w_norm * w;
    }
    return mid + delta;
}

SharpnessInstance sharpness_pair(const Matrix& a, const Matrix& b, double r,
                                 double s, const GenConfig& cfg) {
    require(a.rows() == b.rows() && a.cols() == b.cols(),
            "sharpness_pair: centers must share a shape");
    require(r >= 0.0 && s >= 0.0, "sharpness_pair: radii must be nonnegative");
    const Matrix e = random_partial_isometry(a.rows(), a.cols(), 1, cfg);
    SharpnessInstance inst{ModuleTuple{a + r * e, a - r * e},
                           ModuleTuple{b + s * e, b - s * e},
                           ProbabilityVector::uniform(2), e};
    return inst;
}

}  // namespace gruss
