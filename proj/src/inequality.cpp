#include "gruss/inequality.hpp"

#include "gruss/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gruss {

namespace {

double pair_scale(double lhs, double rhs) {
    return std::max(std::abs(lhs), std::abs(rhs)) + 1.0;
}

Verdict scalar_verdict(std::string id, double lhs, double rhs, const Tolerance& tol) {
    Verdict v{std::move(id), lhs, rhs, rhs - lhs, false, tol};
    v.holds = v.slack >= -tol.bound(pair_scale(lhs, rhs));
    return v;
}

Verdict loewner_verdict(std::string id, const Matrix& lhs, const Matrix& rhs,
                        const Tolerance& tol) {
    const double ln = operator_norm(lhs);
    const double rn = operator_norm(rhs);
    Verdict v{std::move(id), ln, rn, loewner_slack(lhs, rhs), false, tol};
    v.holds = v.slack >= -tol.bound(pair_scale(ln, rn));
    return v;
}

// Identity check: residual norm as lhs against 0, slack = -residual.
Verdict residual_verdict(std::string id, const Matrix& lhs, const Matrix& rhs,
                         const Tolerance& tol) {
    const double residual = operator_norm(lhs - rhs);
    const double scale = pair_scale(operator_norm(lhs), operator_norm(rhs));
    Verdict v{std::move(id), residual, 0.0, -residual, false, tol};
    v.holds = residual <= tol.bound(scale);
    return v;
}

Verdict aggregate(const std::vector<Verdict>& links) {
    Verdict worst = links.front();
    bool all_hold = true;
    for (const Verdict& v : links) {
        all_hold = all_hold && v.holds;
        if (v.slack < worst.slack) worst = v;
    }
    worst.holds = all_hold;
    return worst;
}

Verdict from_bound_report(std::string id, const BoundReport& report,
                          const Tolerance& tol) {
    return Verdict{std::move(id), report.lhs_norm, report.bound_final,
                   report.min_slack, report.loewner_holds, tol};
}

// sum_i p_i |x_i - c|^2 - |sum_i p_i x_i - c|^2.
Matrix weighted_centered_variance(const ModuleTuple& xs, const ProbabilityVector& p,
                                  const Matrix& c) {
    Matrix second = Matrix::Zero(xs.front().cols(), xs.front().cols());
    Matrix mean = Matrix::Zero(xs.front().rows(), xs.front().cols());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        second += p[i] * inner_product(xs[i] - c, xs[i] - c);
        mean += p[i] * xs[i];
    }
    return second - inner_product(mean - c, mean - c);
}

void require_ball(const ModuleTuple& xs, const Matrix& center, double radius,
                  const Tolerance& tol, const char* what) {
    for (const Matrix& x : xs)
        if (module_norm(x - center) > radius + tol.bound(radius + 1.0))
            throw PreconditionError(std::string(what) +
                                    ": tuple leaves the certified ball");
}

}  // namespace

Json verdict_to_json(const Verdict& v) {
    return Json{{"inequality_id", v.inequality_id}, {"lhs_scalar", v.lhs_scalar},
                {"rhs_scalar", v.rhs_scalar},       {"slack", v.slack},
                {"holds", v.holds},                 {"rtol", v.tol_used.rtol},
                {"atol", v.tol_used.atol}};
}

std::string to_string(SchwarzVariant v) {
    switch (v) {
        case SchwarzVariant::Module: return "schwarz.module";
        case SchwarzVariant::Abs: return "schwarz.abs";
        case SchwarzVariant::Functional: return "schwarz.functional";
        case SchwarzVariant::Radius: return "schwarz.radius";
        case SchwarzVariant::Seminorm: return "schwarz.seminorm";
    }
    throw std::invalid_argument("to_string: unknown Schwarz variant");
}

SchwarzVariant schwarz_variant_from_string(const std::string& name) {
    for (SchwarzVariant v : {SchwarzVariant::Module, SchwarzVariant::Abs,
                             SchwarzVariant::Functional, SchwarzVariant::Radius,
                             SchwarzVariant::Seminorm})
        if (to_string(v) == name || to_string(v) == "schwarz." + name) return v;
    throw std::invalid_argument("unknown Schwarz variant: " + name);
}

Verdict check_schwarz(SchwarzVariant variant, const Matrix& x, const Matrix& y,
                      const Tolerance& tol) {
    require(x.rows() == y.rows() && x.cols() == y.cols(),
            "check_schwarz: shape mismatch");
    const Matrix xy = inner_product(x, y);
    const Matrix xx = inner_product(x, x);
    const Matrix yy = inner_product(y, y);

    switch (variant) {
        case SchwarzVariant::Module:
            // <x,y><y,x> has the norm factor on the y-Gram side.
            return loewner_verdict("schwarz.module", xy * xy.adjoint(),
                                   operator_norm(yy) * xx, tol);
        case SchwarzVariant::Abs:
            return loewner_verdict("schwarz.abs", xy.adjoint() * xy,
                                   operator_norm(xx) * yy, tol);
        case SchwarzVariant::Functional: {
            const double lhs = std::norm(trace_functional(xy));
            const double rhs =
                trace_functional(xx).real() * trace_functional(yy).real();
            return scalar_verdict("schwarz.functional", lhs, rhs, tol);
        }
        case SchwarzVariant::Radius: {
            const double lhs = trace_functional(xy * xy.adjoint()).real();
            const double rhs = trace_functional(xx).real() * spectral_radius(yy);
            return scalar_verdict("schwarz.radius", lhs, rhs, tol);
        }
        case SchwarzVariant::Seminorm: {
            const double g = operator_norm(xy);
            return scalar_verdict("schwarz.seminorm", g * g,
                                  operator_norm(xx) * operator_norm(yy), tol);
        }
    }
    throw std::invalid_argument("check_schwarz: unknown variant");
}

std::vector<Verdict> check_idempotent_identities(const IdempotentInstance& inst,
                                                 const Tolerance& tol) {
    const Matrix gxx = gruss_idempotent(inst.x, inst.x, inst.e, tol);
    const Matrix gxy = gruss_idempotent(inst.x, inst.y, inst.e, tol);

    const Matrix projected = inst.x - right_action(inst.e, inner_product(inst.e, inst.x));
    const Matrix shifted_x = inst.x - right_action(inst.e, inst.a);
    const Matrix shifted_y = inst.y - right_action(inst.e, inst.b);
    const Matrix g_shifted = gruss_idempotent(shifted_x, shifted_y, inst.e, tol);

    std::vector<Verdict> out;
    out.push_back(residual_verdict("lemma31.self_gram", gxx,
                                   inner_product(projected, projected), tol));
    out.push_back(loewner_verdict("lemma31.psd",
                                  Matrix::Zero(gxx.rows(), gxx.cols()), gxx, tol));
    out.push_back(loewner_verdict("lemma31.center_bound", gxx,
                                  inner_product(shifted_x, shifted_x), tol));
    out.push_back(residual_verdict("lemma31.translation", g_shifted, gxy, tol));
    return out;
}

Verdict check_gruss_idempotent_bound(const IdempotentInstance& inst,
                                     const Tolerance& tol) {
    const Matrix g = gruss_idempotent(inst.x, inst.y, inst.e, tol);
    const Matrix gxx = gruss_idempotent(inst.x, inst.x, inst.e, tol);
    const Matrix gyy = gruss_idempotent(inst.y, inst.y, inst.e, tol);

    const Matrix mid_x = inst.x - right_action(inst.e, 0.5 * (inst.a + inst.b));
    const Matrix mid_y = inst.y - right_action(inst.e, 0.5 * (inst.c + inst.d));
    const Matrix mid_x_gram = inner_product(mid_x, mid_x);
    const Matrix mid_y_gram = inner_product(mid_y, mid_y);

    std::vector<Verdict> links;
    links.push_back(
        loewner_verdict("thm31.schwarz", g.adjoint() * g,
                        operator_norm(gxx) * gyy, tol));
    links.push_back(scalar_verdict("thm31.x_bound", operator_norm(gxx),
                                   operator_norm(mid_x_gram), tol));
    links.push_back(loewner_verdict("thm31.y_bound", gyy, mid_y_gram, tol));
    links.push_back(scalar_verdict(
        "thm31.squared_chain", std::pow(operator_norm(g), 2),
        operator_norm(mid_x_gram) * operator_norm(mid_y_gram), tol));

    // Midpoint identity |x - e(a+b)/2|^2 = |e(a-b)|^2/4 - Re<x - ea, eb - x>,
    // and the analogue for y.
    const Matrix ea = right_action(inst.e, inst.a);
    const Matrix eb = right_action(inst.e, inst.b);
    const Matrix ec = right_action(inst.e, inst.c);
    const Matrix ed = right_action(inst.e, inst.d);
    const Matrix re_x = hermitian_part(inner_product(inst.x - ea, eb - inst.x));
    const Matrix re_y = hermitian_part(inner_product(inst.y - ec, ed - inst.y));
    const Matrix quarter_x = 0.25 * inner_product(ea - eb, ea - eb);
    const Matrix quarter_y = 0.25 * inner_product(ec - ed, ec - ed);
    links.push_back(residual_verdict("thm31.x_midpoint_identity", mid_x_gram,
                                     quarter_x - re_x, tol));
    links.push_back(residual_verdict("thm31.y_midpoint_identity", mid_y_gram,
                                     quarter_y - re_y, tol));

    const bool re_condition =
        min_eigenvalue(re_x) >= -tol.bound(operator_norm(re_x) + 1.0) &&
        min_eigenvalue(re_y) >= -tol.bound(operator_norm(re_y) + 1.0);
    if (re_condition) {
        // Checked in squared form: |G|^2 <= (||e(a-b)||/4)^2 |e(c-d)|^2. The
        // unsquared bound follows by monotonicity of the operator square
        // root; comparing the roots directly would put the Loewner check at
        // sqrt(eps) noise next to singular Gram matrices.
        const double quarter_norm_sq = std::pow(0.25 * module_norm(ea - eb), 2);
        links.push_back(loewner_verdict(
            "thm31.quarter_bound", g.adjoint() * g,
            quarter_norm_sq * inner_product(ec - ed, ec - ed), tol));
    }
    return aggregate(links);
}

std::vector<Verdict> check_weighted_identities(const WeightedInstance& inst,
                                               const Tolerance& tol) {
    require_uniform(inst.xs, "check_weighted_identities");
    require(inst.xs.size() == inst.ys.size() &&
                inst.xs.size() == inst.alphas.size() &&
                inst.xs.size() == inst.p.size(),
            "check_weighted_identities: length mismatch");

    const std::size_t n = inst.xs.size();

    Complex alpha_mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) alpha_mean += inst.p[i] * inst.alphas[i];

    Matrix centered_comb =
        Matrix::Zero(inst.xs.front().rows(), inst.xs.front().cols());
    for (std::size_t i = 0; i < n; ++i)
        centered_comb +=
            inst.p[i] * (inst.alphas[i] - alpha_mean) * (inst.xs[i] - inst.a);

    Matrix translated_cross = Matrix::Zero(inst.xs.front().cols(), inst.xs.front().cols());
    Matrix mean_x_shift = Matrix::Zero(inst.xs.front().rows(), inst.xs.front().cols());
    Matrix mean_y_shift = mean_x_shift;
    for (std::size_t i = 0; i < n; ++i) {
        translated_cross +=
            inst.p[i] * inner_product(inst.xs[i] - inst.a, inst.ys[i] - inst.b);
        mean_x_shift += inst.p[i] * (inst.xs[i] - inst.a);
        mean_y_shift += inst.p[i] * (inst.ys[i] - inst.b);
    }
    const Matrix translated =
        translated_cross - inner_product(mean_x_shift, mean_y_shift);

    const Matrix self_var = weighted_centered_variance(inst.xs, inst.p, inst.a);
    Matrix crude = Matrix::Zero(self_var.rows(), self_var.cols());
    for (std::size_t i = 0; i < n; ++i)
        crude += inst.p[i] * inner_product(inst.xs[i] - inst.a, inst.xs[i] - inst.a);

    std::vector<Verdict> out;
    out.push_back(residual_verdict(
        "lemma41.alpha_identity",
        weighted_alpha_combination(inst.alphas, inst.xs, inst.p), centered_comb,
        tol));
    out.push_back(residual_verdict("lemma41.translation",
                                   gruss_weighted(inst.xs, inst.ys, inst.p),
                                   translated, tol));
    out.push_back(residual_verdict("lemma41.self_identity",
                                   gruss_weighted(inst.xs, inst.xs, inst.p),
                                   self_var, tol));
    out.push_back(loewner_verdict("lemma41.self_bound", self_var, crude, tol));
    return out;
}

Verdict check_gruss_weighted_bound(const WeightedInstance& inst,
                                   const Tolerance& tol) {
    const Matrix g = gruss_weighted(inst.xs, inst.ys, inst.p);
    const Matrix var_x = weighted_centered_variance(inst.xs, inst.p, inst.a);
    const Matrix var_y = weighted_centered_variance(inst.ys, inst.p, inst.b);
    const double var_x_norm = operator_norm(var_x);

    double crude_x = 0.0;
    Matrix crude_y = Matrix::Zero(var_y.rows(), var_y.cols());
    for (std::size_t i = 0; i < inst.xs.size(); ++i) {
        const double d = module_norm(inst.xs[i] - inst.a);
        crude_x += inst.p[i] * d * d;
        crude_y += inst.p[i] * inner_product(inst.ys[i] - inst.b, inst.ys[i] - inst.b);
    }

    std::vector<Verdict> links;
    links.push_back(
        loewner_verdict("thm42.schwarz", g.adjoint() * g, var_x_norm * var_y, tol));
    links.push_back(scalar_verdict("thm42.x_crude", var_x_norm, crude_x, tol));
    links.push_back(loewner_verdict("thm42.y_crude", var_y, crude_y, tol));
    links.push_back(loewner_verdict("thm42.final", var_x_norm * var_y,
                                    crude_x * crude_y, tol));
    return aggregate(links);
}

Verdict check_gruss_ball_bound(const BallInstance& inst, const Tolerance& tol) {
    require(inst.r >= 0.0 && inst.s >= 0.0,
            "check_gruss_ball_bound: radii must be nonnegative");
    require_ball(inst.xs, inst.a, inst.r, tol, "check_gruss_ball_bound");
    require_ball(inst.ys, inst.b, inst.s, tol, "check_gruss_ball_bound");
    const double lhs = operator_norm(gruss_weighted(inst.xs, inst.ys, inst.p));
    return scalar_verdict("cor43", lhs, inst.r * inst.s, tol);
}

Verdict check_alpha_ball_bound(const AlphaBallInstance& inst, const Tolerance& tol) {
    require(inst.r >= 0.0, "check_alpha_ball_bound: radius must be nonnegative");
    require_ball(inst.xs, inst.a, inst.r, tol, "check_alpha_ball_bound");

    Complex alpha_mean = 0.0;
    for (std::size_t i = 0; i < inst.alphas.size(); ++i)
        alpha_mean += inst.p[i] * inst.alphas[i];

    double spread = 0.0;
    double second_moment = 0.0;
    for (std::size_t i = 0; i < inst.alphas.size(); ++i) {
        spread += inst.p[i] * std::abs(inst.alphas[i] - alpha_mean);
        second_moment += inst.p[i] * std::norm(inst.alphas[i]);
    }
    const double variance = std::max(0.0, second_moment - std::norm(alpha_mean));

    const double lhs =
        module_norm(weighted_alpha_combination(inst.alphas, inst.xs, inst.p));
    const double mid = inst.r * spread;
    const double fin = inst.r * std::sqrt(variance);

    std::vector<Verdict> links;
    links.push_back(scalar_verdict("rem44.first", lhs, mid, tol));
    links.push_back(scalar_verdict("rem44.second", mid, fin, tol));
    return aggregate(links);
}

Verdict check_scalar_gruss(const ScalarGrussInstance& inst, const Tolerance& tol) {
    const std::size_t n = inst.a_values.size();
    require(n >= 1 && inst.b_values.size() == n,
            "check_scalar_gruss: sample lengths mismatch");
    require(inst.a_lo <= inst.a_hi && inst.b_lo <= inst.b_hi,
            "check_scalar_gruss: bounds are not ordered");

    const double slack_a = tol.bound(std::abs(inst.a_lo) + std::abs(inst.a_hi) + 1.0);
    const double slack_b = tol.bound(std::abs(inst.b_lo) + std::abs(inst.b_hi) + 1.0);
    for (double v : inst.a_values)
        if (v < inst.a_lo - slack_a || v > inst.a_hi + slack_a)
            throw PreconditionError("check_scalar_gruss: a sample outside its bounds");
    for (double v : inst.b_values)
        if (v < inst.b_lo - slack_b || v > inst.b_hi + slack_b)
            throw PreconditionError("check_scalar_gruss: b sample outside its bounds");

    double mean_ab = 0.0, mean_a = 0.0, mean_b = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_ab += inst.a_values[i] * inst.b_values[i];
        mean_a += inst.a_values[i];
        mean_b += inst.b_values[i];
    }
    const double dn = static_cast<double>(n);
    mean_ab /= dn;
    mean_a /= dn;
    mean_b /= dn;

    const double lhs = std::abs(mean_ab - mean_a * mean_b);
    const double rhs = 0.25 * (inst.a_hi - inst.a_lo) * (inst.b_hi - inst.b_lo);
    return scalar_verdict("scalar12", lhs, rhs, tol);
}

std::pair<SharpnessInstance, Verdict> sharpness_demo(double r, double s, int k,
                                                     int m, const GenConfig& cfg) {
    require(r > 0.0 && s > 0.0, "sharpness_demo: radii must be positive");
    require(k >= 1 && m >= 1, "sharpness_demo: dimensions must be positive");
    const Matrix a = random_matrix(m, k, substream(cfg, "sharpness.a", 0));
    const Matrix b = random_matrix(m, k, substream(cfg, "sharpness.b", 0));
    SharpnessInstance inst = sharpness_pair(a, b, r, s, substream(cfg, "sharpness.e", 0));

    const double lhs = operator_norm(gruss_weighted(inst.xs, inst.ys, inst.p));
    const double rhs = r * s;
    Tolerance tol;  // defaults: rtol 1e-9
    Verdict v{"sharpness", lhs, rhs, -std::abs(lhs - rhs), false, tol};
    v.holds = std::abs(lhs - rhs) <= tol.bound(pair_scale(lhs, rhs));
    return {std::move(inst), std::move(v)};
}

// ----------------------------------------------------------------------------
// Fuzzing: deterministic instance construction and replayable evaluation.

const std::vector<std::string>& known_inequality_ids() {
    static const std::vector<std::string> ids = {
        "schwarz.module", "schwarz.abs", "schwarz.functional", "schwarz.radius",
        "schwarz.seminorm", "lemma31", "lemma41", "thm31", "thm42", "cor43",
        "rem44", "scalar12", "fourier41", "fourier45", "mellin42", "mellin46",
        "alpha43", "alpha44"};
    return ids;
}

namespace {

bool is_schwarz_id(const std::string& id) { return id.rfind("schwarz.", 0) == 0; }

ModuleTuple random_tuple(Eigen::Index rows, Eigen::Index cols, std::size_t n,
                         const GenConfig& cfg, const std::string& tag) {
    ModuleTuple xs;
    xs.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        xs.push_back(random_matrix(rows, cols, substream(cfg, tag, i)));
    return xs;
}

struct TrialDims {
    int k = 1;
    int rows = 1;
    int n = 1;
};

TrialDims draw_dims(const DimRanges& dims, const GenConfig& cfg) {
    SplitMix rng(substream(cfg, "dims", 0).seed);
    TrialDims d;
    d.k = 1 + static_cast<int>(rng.next_range(0, static_cast<std::uint64_t>(dims.k_max - 1)));
    d.rows = 1 + static_cast<int>(rng.next_range(0, static_cast<std::uint64_t>(dims.m_max - 1)));
    d.n = 1 + static_cast<int>(rng.next_range(0, static_cast<std::uint64_t>(dims.n_max - 1)));
    return d;
}

Json base_instance(const std::string& id, const TrialDims& d, const GenConfig& cfg) {
    return Json{{"id", id},
                {"gen", Json{{"seed", cfg.seed}, {"scale", cfg.scale}}},
                {"dims", Json{{"k", d.k}, {"rows", d.rows}, {"n", d.n}}}};
}

}  // namespace

Json make_instance(const std::string& id, std::uint64_t trial,
                   const DimRanges& dims, const GenConfig& base) {
    const GenConfig cfg = substream(base, id, trial);
    const TrialDims d = draw_dims(dims, cfg);
    SplitMix rng(substream(cfg, "randoms", 0).seed);
    Json inst = base_instance(id, d, cfg);

    if (is_schwarz_id(id)) {
        inst["x"] = matrix_to_json(random_matrix(d.rows, d.k, substream(cfg, "x", 0)));
        inst["y"] = matrix_to_json(random_matrix(d.rows, d.k, substream(cfg, "y", 0)));
        return inst;
    }
    if (id == "lemma31" || id == "thm31") {
        const Eigen::Index max_rank = std::min(d.rows, d.k);
        const Eigen::Index min_rank = id == "thm31" ? 1 : 0;
        const Eigen::Index rank =
            min_rank + static_cast<Eigen::Index>(
                           rng.next_range(0, static_cast<std::uint64_t>(max_rank - min_rank)));
        const Matrix e = random_partial_isometry(d.rows, d.k, rank, substream(cfg, "e", 0));
        const Matrix a = random_matrix(d.k, d.k, substream(cfg, "a", 0));
        const Matrix b = random_matrix(d.k, d.k, substream(cfg, "b", 0));
        inst["e"] = matrix_to_json(e);
        inst["a"] = matrix_to_json(a);
        inst["b"] = matrix_to_json(b);
        if (id == "thm31") {
            const Matrix c = random_matrix(d.k, d.k, substream(cfg, "c", 0));
            const Matrix dd = random_matrix(d.k, d.k, substream(cfg, "d", 0));
            inst["c"] = matrix_to_json(c);
            inst["d"] = matrix_to_json(dd);
            inst["x"] = matrix_to_json(midpoint_ball_element(e, a, b, substream(cfg, "x", 0)));
            inst["y"] = matrix_to_json(midpoint_ball_element(e, c, dd, substream(cfg, "y", 0)));
        } else {
            inst["x"] = matrix_to_json(random_matrix(d.rows, d.k, substream(cfg, "x", 0)));
            inst["y"] = matrix_to_json(random_matrix(d.rows, d.k, substream(cfg, "y", 0)));
        }
        return inst;
    }
    if (id == "lemma41" || id == "thm42") {
        inst["xs"] = tuple_to_json(random_tuple(d.rows, d.k, d.n, cfg, "xs"));
        inst["ys"] = tuple_to_json(random_tuple(d.rows, d.k, d.n, cfg, "ys"));
        inst["alphas"] = scalars_to_json(random_scalars(d.n, substream(cfg, "alphas", 0)));
        inst["p"] = probability_to_json(random_probability_vector(d.n, substream(cfg, "p", 0)));
        inst["a"] = matrix_to_json(random_matrix(d.rows, d.k, substream(cfg, "a", 0)));
        inst["b"] = matrix_to_json(random_matrix(d.rows, d.k, substream(cfg, "b", 0)));
        return inst;
    }
    if (id == "cor43") {
        const Matrix a = random_matrix(d.rows, d.k, substream(cfg, "a", 0));
        const Matrix b = random_matrix(d.rows, d.k, substream(cfg, "b", 0));
        const double r = 0.1 + 2.0 * rng.next_unit();
        const double s = 0.1 + 2.0 * rng.next_unit();
        inst["a"] = matrix_to_json(a);
        inst["b"] = matrix_to_json(b);
        inst["r"] = r;
        inst["s"] = s;
        inst["xs"] = tuple_to_json(ball_tuple(a, r, d.n, substream(cfg, "xs", 0)));
        inst["ys"] = tuple_to_json(ball_tuple(b, s, d.n, substream(cfg, "ys", 0)));
        inst["p"] = probability_to_json(random_probability_vector(d.n, substream(cfg, "p", 0)));
        return inst;
    }
    if (id == "rem44") {
        const Matrix a = random_matrix(d.rows, d.k, substream(cfg, "a", 0));
        const double r = 0.1 + 2.0 * rng.next_unit();
        inst["a"] = matrix_to_json(a);
        inst["r"] = r;
        inst["xs"] = tuple_to_json(ball_tuple(a, r, d.n, substream(cfg, "xs", 0)));
        inst["alphas"] = scalars_to_json(random_scalars(d.n, substream(cfg, "alphas", 0)));
        inst["p"] = probability_to_json(random_probability_vector(d.n, substream(cfg, "p", 0)));
        return inst;
    }
    if (id == "scalar12") {
        const double a_center = rng.next_symmetric(1.0);
        const double a_width = 0.2 + 1.8 * rng.next_unit();
        const double b_center = rng.next_symmetric(1.0);
        const double b_width = 0.2 + 1.8 * rng.next_unit();
        const double a_lo = a_center - 0.5 * a_width;
        const double a_hi = a_center + 0.5 * a_width;
        const double b_lo = b_center - 0.5 * b_width;
        const double b_hi = b_center + 0.5 * b_width;
        std::vector<double> av(static_cast<std::size_t>(d.n));
        std::vector<double> bv(static_cast<std::size_t>(d.n));
        for (auto& v : av) v = a_lo + rng.next_unit() * (a_hi - a_lo);
        for (auto& v : bv) v = b_lo + rng.next_unit() * (b_hi - b_lo);
        inst["a_values"] = av;
        inst["b_values"] = bv;
        inst["bounds"] = {a_lo, a_hi, b_lo, b_hi};
        return inst;
    }
    if (id == "fourier41" || id == "fourier45") {
        const int m_idx = 1 + static_cast<int>(rng.next_range(0, static_cast<std::uint64_t>(d.n - 1)));
        double omega = 0.0;
        bool found = false;
        GenConfig retry = cfg;
        for (std::size_t attempt = 0; attempt <= base.retry_limit; ++attempt) {
            SplitMix orng(substream(retry, "omega", attempt).seed);
            omega = 0.05 + 1.45 * orng.next_unit();
            if (id == "fourier41" ||
                std::abs(std::sin(omega * m_idx)) > 1e-6) {
                found = true;
                break;
            }
        }
        if (!found)
            throw GenerationError("make_instance: no omega outside the kernel guard band");
        inst["omega"] = omega;
        inst["m"] = m_idx;
        inst["As"] = tuple_to_json(random_tuple(d.rows, d.k, d.n, cfg, "As"));
        if (id == "fourier41") {
            inst["Bs"] = tuple_to_json(random_tuple(d.rows, d.k, d.n, cfg, "Bs"));
            inst["A"] = matrix_to_json(random_matrix(d.rows, d.k, substream(cfg, "A", 0)));
            inst["B"] = matrix_to_json(random_matrix(d.rows, d.k, substream(cfg, "B", 0)));
        }
        return inst;
    }
    if (id == "mellin42" || id == "mellin46") {
        const int m_idx = 1 + static_cast<int>(rng.next_range(0, static_cast<std::uint64_t>(d.n - 1)));
        inst["m"] = m_idx;
        inst["As"] = tuple_to_json(random_tuple(d.rows, d.k, d.n, cfg, "As"));
        if (id == "mellin42") {
            inst["Bs"] = tuple_to_json(random_tuple(d.rows, d.k, d.n, cfg, "Bs"));
            inst["A"] = matrix_to_json(random_matrix(d.rows, d.k, substream(cfg, "A", 0)));
            inst["B"] = matrix_to_json(random_matrix(d.rows, d.k, substream(cfg, "B", 0)));
        }
        return inst;
    }
    if (id == "alpha43" || id == "alpha44") {
        inst["As"] = tuple_to_json(random_tuple(d.k, d.k, d.n, cfg, "As"));
        inst["alphas"] = scalars_to_json(random_scalars(d.n, substream(cfg, "alphas", 0)));
        inst["p"] = probability_to_json(random_probability_vector(d.n, substream(cfg, "p", 0)));
        if (id == "alpha43") {
            inst["A"] = matrix_to_json(random_matrix(d.k, d.k, substream(cfg, "A", 0)));
            inst["B"] = matrix_to_json(random_matrix(d.k, d.k, substream(cfg, "B", 0)));
        }
        return inst;
    }
    throw std::invalid_argument("make_instance: unknown inequality id: " + id);
}

Verdict evaluate_instance(const std::string& id, const Json& inst,
                          const Tolerance& tol) {
    if (is_schwarz_id(id)) {
        return check_schwarz(schwarz_variant_from_string(id),
                             matrix_from_json(inst.at("x")),
                             matrix_from_json(inst.at("y")), tol);
    }
    if (id == "lemma31" || id == "thm31") {
        IdempotentInstance s{matrix_from_json(inst.at("x")),
                             matrix_from_json(inst.at("y")),
                             matrix_from_json(inst.at("e")),
                             matrix_from_json(inst.at("a")),
                             matrix_from_json(inst.at("b")),
                             Matrix{},
                             Matrix{}};
        if (id == "thm31") {
            s.c = matrix_from_json(inst.at("c"));
            s.d = matrix_from_json(inst.at("d"));
            return check_gruss_idempotent_bound(s, tol);
        }
        return aggregate(check_idempotent_identities(s, tol));
    }
    if (id == "lemma41" || id == "thm42") {
        WeightedInstance s{tuple_from_json(inst.at("xs")),
                           tuple_from_json(inst.at("ys")),
                           scalars_from_json(inst.at("alphas")),
                           probability_from_json(inst.at("p")),
                           matrix_from_json(inst.at("a")),
                           matrix_from_json(inst.at("b"))};
        if (id == "thm42") return check_gruss_weighted_bound(s, tol);
        return aggregate(check_weighted_identities(s, tol));
    }
    if (id == "cor43") {
        BallInstance s{tuple_from_json(inst.at("xs")),
                       tuple_from_json(inst.at("ys")),
                       probability_from_json(inst.at("p")),
                       matrix_from_json(inst.at("a")),
                       matrix_from_json(inst.at("b")),
                       inst.at("r").get<double>(),
                       inst.at("s").get<double>()};
        return check_gruss_ball_bound(s, tol);
    }
    if (id == "rem44") {
        AlphaBallInstance s{tuple_from_json(inst.at("xs")),
                            scalars_from_json(inst.at("alphas")),
                            probability_from_json(inst.at("p")),
                            matrix_from_json(inst.at("a")),
                            inst.at("r").get<double>()};
        return check_alpha_ball_bound(s, tol);
    }
    if (id == "scalar12") {
        const auto bounds = inst.at("bounds");
        ScalarGrussInstance s{inst.at("a_values").get<std::vector<double>>(),
                              inst.at("b_values").get<std::vector<double>>(),
                              bounds.at(0).get<double>(), bounds.at(1).get<double>(),
                              bounds.at(2).get<double>(), bounds.at(3).get<double>()};
        return check_scalar_gruss(s, tol);
    }
    if (id == "fourier41" || id == "fourier45") {
        const ModuleTuple as = tuple_from_json(inst.at("As"));
        const TransformParams params{inst.at("omega").get<double>(),
                                     inst.at("m").get<int>(),
                                     static_cast<int>(as.size())};
        if (id == "fourier45")
            return from_bound_report("fourier45",
                                     fourier_surrogate_check(as, params, tol), tol);
        return from_bound_report(
            "fourier41",
            fourier_chain_check(as, tuple_from_json(inst.at("Bs")),
                                matrix_from_json(inst.at("A")),
                                matrix_from_json(inst.at("B")), params, tol),
            tol);
    }
    if (id == "mellin42" || id == "mellin46") {
        const ModuleTuple as = tuple_from_json(inst.at("As"));
        const int m_idx = inst.at("m").get<int>();
        if (id == "mellin46")
            return from_bound_report("mellin46",
                                     mellin_surrogate_check(as, m_idx, tol), tol);
        return from_bound_report(
            "mellin42",
            mellin_chain_check(as, tuple_from_json(inst.at("Bs")),
                               matrix_from_json(inst.at("A")),
                               matrix_from_json(inst.at("B")), m_idx, tol),
            tol);
    }
    if (id == "alpha43" || id == "alpha44") {
        const ModuleTuple as = tuple_from_json(inst.at("As"));
        const Eigen::Index k = as.front().rows();
        const Matrix a = id == "alpha43" ? matrix_from_json(inst.at("A"))
                                         : Matrix(Matrix::Zero(k, k));
        const Matrix b = id == "alpha43" ? matrix_from_json(inst.at("B"))
                                         : Matrix(Matrix::Zero(k, k));
        return from_bound_report(
            id,
            alpha_bound_check(scalars_from_json(inst.at("alphas")), as, a, b,
                              probability_from_json(inst.at("p")), tol),
            tol);
    }
    throw std::invalid_argument("evaluate_instance: unknown inequality id: " + id);
}

FuzzReport fuzz_campaign(const std::string& id, std::size_t trials,
                         std::uint64_t seed, const DimRanges& dims,
                         const Tolerance& tol) {
    require(trials >= 1, "fuzz_campaign: trials must be at least 1");
    const GenConfig base{seed, 1.0, 64};

    FuzzReport report;
    report.trials = trials;
    report.seed = seed;
    report.min_slack = std::numeric_limits<double>::infinity();
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const Json inst = make_instance(id, trial, dims, base);
        const Verdict v = evaluate_instance(id, inst, tol);
        if (!v.holds) ++report.failures;
        if (v.slack < report.min_slack) {
            report.min_slack = v.slack;
            report.worst_case = Json{{"inequality_id", id},
                                     {"trial", trial},
                                     {"verdict", verdict_to_json(v)},
                                     {"instance", inst}};
        }
    }
    return report;
}

Json fuzz_report_to_json(const FuzzReport& report) {
    return Json{{"trials", report.trials},
                {"failures", report.failures},
                {"min_slack", report.min_slack},
                {"seed", report.seed},
                {"worst_case", report.worst_case}};
}

}  // namespace gruss
