#include "gruss/generate.hpp"
#include "gruss/inequality.hpp"
#include "gruss/serialize.hpp"

#include <doctest.h>

#include <limits>

using namespace gruss;

TEST_CASE("matrix records round-trip bitwise") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Eigen::Index r = 1 + static_cast<Eigen::Index>(seed % 4);
        const Eigen::Index c = 1 + static_cast<Eigen::Index>((seed / 4) % 4);
        const Matrix m = random_matrix(r, c, {seed, 3.0, 64});
        const Json j = matrix_to_json(m);
        // through text, as a file round-trip would go
        const Matrix back = matrix_from_json(Json::parse(j.dump()));
        CHECK(back == m);
    }
}

TEST_CASE("matrix parser rejects malformed records") {
    const Json good = matrix_to_json(Matrix::Identity(2, 2));

    Json ragged = good;
    ragged["data"].erase(3);
    CHECK_THROWS_AS(matrix_from_json(ragged), std::invalid_argument);

    Json nan_entry = good;
    nan_entry["data"][0][0] = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(matrix_from_json(nan_entry), std::invalid_argument);

    Json inf_entry = good;
    inf_entry["data"][1][1] = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(matrix_from_json(inf_entry), std::invalid_argument);

    Json bad_shape = good;
    bad_shape["rows"] = 0;
    CHECK_THROWS_AS(matrix_from_json(bad_shape), std::invalid_argument);

    Json missing = good;
    missing.erase("cols");
    CHECK_THROWS_AS(matrix_from_json(missing), std::invalid_argument);

    Json not_pair = good;
    not_pair["data"][2] = 1.5;
    CHECK_THROWS_AS(matrix_from_json(not_pair), std::invalid_argument);
}

TEST_CASE("tuples must be uniform on load") {
    Json j = Json::array();
    j.push_back(matrix_to_json(Matrix::Identity(2, 2)));
    j.push_back(matrix_to_json(Matrix::Identity(3, 3)));
    CHECK_THROWS_AS(tuple_from_json(j), std::invalid_argument);

    const ModuleTuple xs{random_matrix(2, 3, {1}), random_matrix(2, 3, {2})};
    const ModuleTuple back = tuple_from_json(tuple_to_json(xs));
    CHECK(back.size() == 2);
    CHECK(back[0] == xs[0]);
    CHECK(back[1] == xs[1]);
}

TEST_CASE("probability vectors are validated on load") {
    const ProbabilityVector p = random_probability_vector(4, {5});
    const ProbabilityVector back = probability_from_json(probability_to_json(p));
    CHECK(back.weights() == p.weights());

    CHECK_THROWS_AS(probability_from_json(Json{0.5, 0.6}), std::invalid_argument);
    CHECK_THROWS_AS(probability_from_json(Json{-0.5, 1.5}), std::invalid_argument);
    CHECK_THROWS_AS(probability_from_json(Json::array()), std::invalid_argument);
}

TEST_CASE("scalar lists round-trip") {
    const auto v = random_scalars(5, {9});
    CHECK(scalars_from_json(scalars_to_json(v)) == v);
}

TEST_CASE("verdict serialization carries the documented fields") {
    const Matrix x = random_matrix(2, 2, {1});
    const Matrix y = random_matrix(2, 2, {2});
    const Verdict v = check_schwarz(SchwarzVariant::Abs, x, y);
    const Json j = verdict_to_json(v);
    CHECK(j.at("inequality_id") == "schwarz.abs");
    CHECK(j.at("holds") == v.holds);
    CHECK(j.at("lhs_scalar").get<double>() == v.lhs_scalar);
    CHECK(j.at("rhs_scalar").get<double>() == v.rhs_scalar);
    CHECK(j.at("slack").get<double>() == v.slack);
    CHECK(j.contains("rtol"));
    CHECK(j.contains("atol"));
}

TEST_CASE("generated instances embed their generator config") {
    const Json inst = make_instance("thm42", 3, {2, 2, 4}, {99, 1.0, 64});
    CHECK(inst.at("id") == "thm42");
    CHECK(inst.at("gen").contains("seed"));
    CHECK(inst.at("gen").contains("scale"));
    CHECK(inst.at("dims").contains("k"));
}
