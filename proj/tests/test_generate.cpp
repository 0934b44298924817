#include "gruss/generate.hpp"
#include "gruss/module.hpp"

#include <doctest.h>

#include <cmath>

using namespace gruss;

TEST_CASE("random_matrix is deterministic and respects the scale") {
    const GenConfig cfg{42, 2.5, 64};
    const Matrix a = random_matrix(3, 4, cfg);
    const Matrix b = random_matrix(3, 4, cfg);
    CHECK(a == b);

    double max_entry = 0.0;
    for (std::uint64_t s = 0; s < 50; ++s) {
        const Matrix m = random_matrix(4, 4, {s, 2.5, 64});
        max_entry = std::max(
            max_entry,
            std::max(m.real().cwiseAbs().maxCoeff(), m.imag().cwiseAbs().maxCoeff()));
    }
    CHECK(max_entry <= 2.5);

    CHECK(operator_norm(random_matrix(3, 3, {1, 0.0, 64})) == 0.0);
}

TEST_CASE("substreams differ by tag and index") {
    const GenConfig base{7, 1.0, 64};
    CHECK(substream(base, "a", 0).seed != substream(base, "a", 1).seed);
    CHECK(substream(base, "a", 0).seed != substream(base, "b", 0).seed);
    CHECK(substream(base, "a", 3).seed == substream(base, "a", 3).seed);
}

TEST_CASE("random_partial_isometry has an idempotent Gram matrix") {
    // scalar case: rank 1 in one dimension is a unimodular scalar
    const Matrix unit = random_partial_isometry(1, 1, 1, {3});
    CHECK(std::abs(std::abs(unit(0, 0)) - 1.0) <= 1e-12);

    // rank 0 gives the zero element
    CHECK(operator_norm(random_partial_isometry(3, 2, 0, {4})) == 0.0);

    for (std::uint64_t seed = 0; seed < 24; ++seed) {
        const Eigen::Index m = 1 + static_cast<Eigen::Index>(seed % 4);
        const Eigen::Index k = 1 + static_cast<Eigen::Index>((seed / 4) % 3);
        const Eigen::Index r = static_cast<Eigen::Index>(seed % (std::min(m, k) + 1));
        const Matrix e = random_partial_isometry(m, k, r, {seed});
        const Matrix gram = inner_product(e, e);
        CHECK(operator_norm(gram * gram - gram) <= 1e-10);
        if (r > 0) CHECK(operator_norm(gram) == doctest::Approx(1.0).epsilon(1e-10));
    }

    CHECK_THROWS_AS(random_partial_isometry(2, 2, 3, {0}), std::invalid_argument);
}

TEST_CASE("random_probability_vector sums to one") {
    const ProbabilityVector single = random_probability_vector(1, {0});
    CHECK(single[0] == doctest::Approx(1.0).epsilon(1e-15));

    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const std::size_t n = 1 + seed % 12;
        const ProbabilityVector p = random_probability_vector(n, {seed});
        double sum = 0.0;
        double min_w = 1.0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            sum += p[i];
            min_w = std::min(min_w, p[i]);
        }
        CHECK(min_w >= 0.0);
        CHECK(std::abs(sum - 1.0) <= 1e-15);
    }

    const ProbabilityVector a = random_probability_vector(5, {9});
    const ProbabilityVector b = random_probability_vector(5, {9});
    CHECK(a.weights() == b.weights());
}

TEST_CASE("ball_tuple stays inside the ball and covers the boundary region") {
    const Matrix center = random_matrix(3, 2, {1});

    const ModuleTuple degenerate = ball_tuple(center, 0.0, 4, {2});
    for (const Matrix& x : degenerate) CHECK(operator_norm(x - center) == 0.0);

    for (std::uint64_t seed = 0; seed < 16; ++seed) {
        const double r = 0.25 + 0.5 * static_cast<double>(seed % 5);
        const ModuleTuple xs = ball_tuple(center, r, 6, {seed});
        double max_norm = 0.0;
        for (const Matrix& x : xs) {
            const double d = module_norm(x - center);
            CHECK(d <= r * (1.0 + 1e-12));
            max_norm = std::max(max_norm, d);
        }
        CHECK(max_norm >= 0.9 * r * (1.0 - 1e-12));
    }

    const ModuleTuple a = ball_tuple(center, 1.0, 5, {77});
    const ModuleTuple b = ball_tuple(center, 1.0, 5, {77});
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("sharpness_pair reproduces the extremal value") {
    const Matrix a = random_matrix(2, 2, {1});
    const Matrix b = random_matrix(2, 2, {2});

    SUBCASE("norm of the functional equals r*s") {
        for (double r : {0.5, 1.0, 2.0})
            for (double s : {0.25, 3.0}) {
                const SharpnessInstance inst = sharpness_pair(a, b, r, s, {11});
                const double g =
                    operator_norm(gruss_weighted(inst.xs, inst.ys, inst.p));
                CHECK(g == doctest::Approx(r * s).epsilon(1e-9));
                for (const Matrix& x : inst.xs)
                    CHECK(module_norm(x - a) <= r * (1.0 + 1e-12));
                for (const Matrix& y : inst.ys)
                    CHECK(module_norm(y - b) <= s * (1.0 + 1e-12));
            }
    }

    SUBCASE("zero radius collapses to constant tuples") {
        const SharpnessInstance inst = sharpness_pair(a, b, 1.0, 0.0, {12});
        CHECK(operator_norm(gruss_weighted(inst.xs, inst.ys, inst.p)) <= 1e-13);
    }

    SUBCASE("scalar instance is the alternating pair") {
        const Matrix zero = Matrix::Zero(1, 1);
        const SharpnessInstance inst = sharpness_pair(zero, zero, 1.0, 1.0, {13});
        // x = (e, -e) with |e| = 1
        CHECK(std::abs(std::abs(inst.xs[0](0, 0)) - 1.0) <= 1e-12);
        CHECK(std::abs(inst.xs[0](0, 0) + inst.xs[1](0, 0)) <= 1e-12);
    }
}

TEST_CASE("midpoint_ball_element satisfies the Hermitian-part condition") {
    for (std::uint64_t seed = 0; seed < 24; ++seed) {
        const Eigen::Index m = 2 + static_cast<Eigen::Index>(seed % 3);
        const Eigen::Index k = 1 + static_cast<Eigen::Index>(seed % 3);
        const Eigen::Index rank = 1 + static_cast<Eigen::Index>(seed % std::min(m, k));
        const Matrix e = random_partial_isometry(m, k, rank, {seed});
        const Matrix a = random_matrix(k, k, {seed + 100});
        const Matrix b = random_matrix(k, k, {seed + 200});
        const Matrix x = midpoint_ball_element(e, a, b, {seed + 300});

        const Matrix ea = right_action(e, a);
        const Matrix eb = right_action(e, b);
        const Matrix re = hermitian_part(inner_product(x - ea, eb - x));
        CHECK(min_eigenvalue(re) >= -1e-10 * (operator_norm(re) + 1.0));
    }
}
