#include "gruss/serialize.hpp"

#include <cmath>

namespace gruss {

namespace {

double finite_number(const Json& j, const char* what) {
    if (!j.is_number())
        throw std::invalid_argument(std::string(what) + ": expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v))
        throw std::invalid_argument(std::string(what) + ": non-finite entry");
    return v;
}

Complex complex_from_json(const Json& j, const char* what) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument(std::string(what) + ": entry must be an [re, im] pair");
    return Complex(finite_number(j[0], what), finite_number(j[1], what));
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
    Json data = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            data.push_back({m(i, j).real(), m(i, j).imag()});
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
        throw std::invalid_argument("matrix: record needs rows, cols, data");
    if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer())
        throw std::invalid_argument("matrix: rows and cols must be integers");
    const auto rows = j["rows"].get<Eigen::Index>();
    const auto cols = j["cols"].get<Eigen::Index>();
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("matrix: dimensions must be positive");
    const Json& data = j["data"];
    if (!data.is_array() || data.size() != static_cast<std::size_t>(rows * cols))
        throw std::invalid_argument("matrix: data length does not match rows*cols");
    Matrix m(rows, cols);
    std::size_t idx = 0;
    for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c)
            m(r, c) = complex_from_json(data[idx++], "matrix");
    return m;
}

Json tuple_to_json(const ModuleTuple& xs) {
    Json j = Json::array();
    for (const Matrix& x : xs) j.push_back(matrix_to_json(x));
    return j;
}

ModuleTuple tuple_from_json(const Json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("tuple: expected a nonempty array of matrix records");
    ModuleTuple xs;
    xs.reserve(j.size());
    for (const Json& item : j) xs.push_back(matrix_from_json(item));
    for (const Matrix& x : xs)
        if (x.rows() != xs.front().rows() || x.cols() != xs.front().cols())
            throw std::invalid_argument("tuple: shapes are not uniform");
    return xs;
}

Json scalars_to_json(const std::vector<Complex>& v) {
    Json j = Json::array();
    for (const Complex& c : v) j.push_back({c.real(), c.imag()});
    return j;
}

std::vector<Complex> scalars_from_json(const Json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("scalars: expected a nonempty array");
    std::vector<Complex> v;
    v.reserve(j.size());
    for (const Json& item : j) v.push_back(complex_from_json(item, "scalars"));
    return v;
}

Json probability_to_json(const ProbabilityVector& p) {
    return Json(p.weights());
}

ProbabilityVector probability_from_json(const Json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("probability vector: expected a nonempty array");
    std::vector<double> w;
    w.reserve(j.size());
    for (const Json& item : j) w.push_back(finite_number(item, "probability vector"));
    return ProbabilityVector(std::move(w));
}

}  // namespace gruss
