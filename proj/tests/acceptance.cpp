// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Criterion 9 invokes the CLI binary end to end.

#include "gruss/inequality.hpp"
#include "gruss/transforms.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace gruss;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// 1. Five Schwarz variants, 1000 instances each, k and row dims up to 4,
//    zero failures at rtol 1e-9, under 10 seconds.
bool schwarz_suite() {
    const auto start = Clock::now();
    const Tolerance tol{1e-9, 1e-12};
    const DimRanges dims{4, 4, 8};
    bool ok = true;
    for (const char* id : {"schwarz.module", "schwarz.abs", "schwarz.functional",
                           "schwarz.radius", "schwarz.seminorm"}) {
        const FuzzReport rep = fuzz_campaign(id, 1000, 2026, dims, tol);
        if (rep.failures != 0) {
            std::printf("    %s: %zu failures (min slack %.3e)\n", id,
                        rep.failures, rep.min_slack);
            ok = false;
        }
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 10.0) {
        std::printf("    runtime %.2f s exceeds 10 s\n", elapsed);
        ok = false;
    }
    return ok;
}

// 2. Identity bundles: residual norms within 1e-10 * scale over 500 instances
//    each, with partial-isometry e for the idempotent bundle.
bool identity_residuals() {
    const Tolerance tol{1e-10, 0.0};
    bool ok = true;
    for (const char* id : {"lemma31", "lemma41"}) {
        const FuzzReport rep = fuzz_campaign(id, 500, 2027, {4, 4, 8}, tol);
        if (rep.failures != 0) {
            std::printf("    %s: %zu failures (min slack %.3e)\n", id,
                        rep.failures, rep.min_slack);
            ok = false;
        }
    }
    return ok;
}

// 3. The bound chains and the scalar-coefficient bounds, 1000 instances each.
bool gruss_suite() {
    bool ok = true;
    for (const char* id : {"thm31", "thm42", "cor43", "rem44", "alpha43", "alpha44"}) {
        const FuzzReport rep = fuzz_campaign(id, 1000, 2028, {4, 4, 8}, {});
        if (rep.failures != 0) {
            std::printf("    %s: %zu failures (min slack %.3e)\n", id,
                        rep.failures, rep.min_slack);
            ok = false;
        }
    }
    return ok;
}

// 4. The extremal construction attains the ball bound: ||G|| / (r s) within
//    1e-9 of 1 across radii and shapes.
bool sharpness() {
    bool ok = true;
    const std::vector<std::pair<double, double>> radii = {{1, 1}, {2, 3}, {0.1, 10}};
    for (const auto& [r, s] : radii)
        for (int k : {1, 2, 4})
            for (int m : {1, 2, 4}) {
                const auto [inst, verdict] =
                    sharpness_demo(r, s, k, m, {static_cast<std::uint64_t>(k * 10 + m)});
                const double ratio = verdict.lhs_scalar / (r * s);
                if (std::abs(ratio - 1.0) > 1e-9) {
                    std::printf("    r=%g s=%g k=%d m=%d: ratio %.12f\n", r, s, k,
                                m, ratio);
                    ok = false;
                }
            }
    return ok;
}

// 5. Scalar recovery: random instances never exceed the quarter bound plus
//    1e-12; the aligned alternating configuration attains it for even n <= 20.
bool scalar_recovery() {
    bool ok = true;
    for (std::uint64_t trial = 0; trial < 2000; ++trial) {
        const Json inst = make_instance("scalar12", trial, {1, 1, 20}, {2029, 1.0, 64});
        const Verdict v = evaluate_instance("scalar12", inst);
        if (v.lhs_scalar > v.rhs_scalar + 1e-12) {
            std::printf("    trial %zu exceeds the bound by %.3e\n",
                        static_cast<std::size_t>(trial),
                        v.lhs_scalar - v.rhs_scalar);
            ok = false;
        }
    }
    for (std::size_t n = 2; n <= 20; n += 2) {
        ScalarGrussInstance inst;
        inst.a_lo = -1.5;
        inst.a_hi = 2.5;
        inst.b_lo = -2.0;
        inst.b_hi = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            inst.a_values.push_back(i % 2 == 0 ? inst.a_lo : inst.a_hi);
            inst.b_values.push_back(i % 2 == 0 ? inst.b_lo : inst.b_hi);
        }
        const Verdict v = check_scalar_gruss(inst);
        if (std::abs(v.lhs_scalar - v.rhs_scalar) > 1e-12) {
            std::printf("    n=%zu attained gap %.3e\n", n,
                        std::abs(v.lhs_scalar - v.rhs_scalar));
            ok = false;
        }
    }
    return ok;
}

// 6. Closed-form kernel sum against direct summation over the grid,
//    1e-12 * n, with guard-band points skipped (and the skip path exercised).
bool kernel_grid() {
    bool ok = true;
    std::size_t checked = 0;
    for (int tenth = 1; tenth <= 15; ++tenth) {
        const double omega = 0.1 * tenth;
        for (int n = 1; n <= 64; ++n)
            for (int m = 1; m <= n; ++m) {
                const TransformParams params{omega, m, n};
                Complex closed;
                try {
                    closed = fourier_kernel_sum(params);
                } catch (const SingularKernelError&) {
                    continue;
                }
                ++checked;
                const double diff = std::abs(closed - fourier_kernel_direct(params));
                if (diff > 1e-12 * n) {
                    std::printf("    omega=%.1f m=%d n=%d: |closed-direct|=%.3e\n",
                                omega, m, n, diff);
                    ok = false;
                }
            }
    }
    if (checked == 0) ok = false;

    // the singular path must refuse rather than return garbage
    try {
        (void)fourier_kernel_sum({std::acos(-1.0), 1, 8});
        std::printf("    singular kernel point was not refused\n");
        ok = false;
    } catch (const SingularKernelError&) {
    }
    return ok;
}

// 7. Exact coefficient identities for the first two moment indices, n <= 1000.
bool mellin_coefficients() {
    bool ok = true;
    for (int n = 1; n <= 1000; ++n) {
        const mpz_class nz(n);
        const mpz_class quad = nz * nz * (nz - 1) * (nz + 1) / 12;
        const mpz_class sext =
            nz * nz * (nz - 1) * (nz + 1) * (2 * nz + 1) * (8 * nz + 11) / 180;
        if (mellin_coefficient(2, n) != quad || mellin_coefficient(3, n) != sext) {
            std::printf("    coefficient mismatch at n=%d\n", n);
            ok = false;
        }
    }
    if (mellin_coefficient(2, 2) != 1 || mellin_coefficient(3, 2) != 9) {
        std::printf("    spot values at n=2 are wrong\n");
        ok = false;
    }
    return ok;
}

// 8. Surrogate bounds on 500 random 2x2 operator tuples with n <= 16, plus
//    exactly-zero deviations on constant integer tuples.
bool transform_reports() {
    bool ok = true;
    const GenConfig base{2030, 1.0, 64};
    for (std::uint64_t trial = 0; trial < 500; ++trial) {
        const GenConfig cfg = substream(base, "criterion8", trial);
        SplitMix rng(substream(cfg, "dims", 0).seed);
        const int n = 1 + static_cast<int>(rng.next_range(0, 15));
        const int m = 1 + static_cast<int>(rng.next_range(0, static_cast<std::uint64_t>(n - 1)));

        ModuleTuple as;
        for (int i = 0; i < n; ++i)
            as.push_back(random_matrix(2, 2, substream(cfg, "As", static_cast<std::uint64_t>(i))));

        double omega = 0.0;
        bool found = false;
        for (std::uint64_t attempt = 0; attempt < 64 && !found; ++attempt) {
            SplitMix orng(substream(cfg, "omega", attempt).seed);
            omega = 0.05 + 1.45 * orng.next_unit();
            found = std::abs(std::sin(omega * m)) > 1e-6;
        }
        if (!found) continue;

        const BoundReport fourier =
            fourier_surrogate_check(as, {omega, m, n});
        const BoundReport mellin = mellin_surrogate_check(as, m);
        for (const BoundReport* rep : {&fourier, &mellin}) {
            if (!rep->loewner_holds || rep->tightness > 1.0 + 1e-9) {
                std::printf("    trial %zu (n=%d m=%d): holds=%d tightness=%.12f\n",
                            static_cast<std::size_t>(trial), n, m,
                            rep->loewner_holds, rep->tightness);
                ok = false;
            }
        }
    }

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        SplitMix rng(seed * 977 + 13);
        const int n = 2 + static_cast<int>(rng.next_range(0, 14));
        const int m = 1 + static_cast<int>(rng.next_range(0, static_cast<std::uint64_t>(n - 1)));
        Matrix a0(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                a0(i, j) = Complex(static_cast<double>(rng.next_range(0, 8)) - 4.0,
                                   static_cast<double>(rng.next_range(0, 8)) - 4.0);
        const ModuleTuple constant(static_cast<std::size_t>(n), a0);

        if (mellin_surrogate_check(constant, m).lhs_norm != 0.0) {
            std::printf("    constant tuple: nonzero Mellin deviation (n=%d m=%d)\n", n, m);
            ok = false;
        }
        double omega = 0.4 + 0.05 * static_cast<double>(seed);
        if (std::abs(std::sin(omega * m)) <= 1e-6) omega += 0.011;
        if (fourier_surrogate_check(constant, {omega, m, n}).lhs_norm != 0.0) {
            std::printf("    constant tuple: nonzero Fourier deviation (n=%d m=%d)\n", n, m);
            ok = false;
        }
    }
    return ok;
}

// 9. The full CLI verification pass finishes within a minute and exits 0.
bool cli_all_suites() {
    const auto start = Clock::now();
    const std::string cmd = std::string(GRUSS_CLI_PATH) +
                            " verify --suite all --seed 7 --quiet "
                            "--output /tmp/gruss-acceptance-verify.json >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    const double elapsed = seconds_since(start);
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
        std::printf("    verify --suite all exited with %d\n",
                    WIFEXITED(status) ? WEXITSTATUS(status) : -1);
        return false;
    }
    if (elapsed >= 60.0) {
        std::printf("    runtime %.1f s exceeds 60 s\n", elapsed);
        return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    const int only = argc > 1 ? std::atoi(argv[1]) : 0;
    const std::vector<std::pair<const char*, std::function<bool()>>> criteria = {
        {"Schwarz suite: 5 variants x 1000 instances, zero failures, <10s", schwarz_suite},
        {"identity residuals within 1e-10*scale, 500 instances per bundle", identity_residuals},
        {"bound chains and scalar-coefficient bounds, 1000 instances each", gruss_suite},
        {"extremal construction attains the ball bound within 1e-9", sharpness},
        {"scalar quarter bound: random never exceeds, alternating attains", scalar_recovery},
        {"kernel closed form matches direct summation within 1e-12*n", kernel_grid},
        {"exact coefficient factorizations for n <= 1000", mellin_coefficients},
        {"surrogate bounds on 500 random tuples; constant tuples exactly zero", transform_reports},
        {"verify --suite all exits 0 in under 60 s", cli_all_suites},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int idx = static_cast<int>(i) + 1;
        if (only != 0 && only != idx) continue;
        const bool ok = criteria[i].second();
        std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", idx,
                    criteria[i].first);
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    return failures;
}
