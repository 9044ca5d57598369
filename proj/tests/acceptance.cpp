// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. argv[1] must point at the CLI binary (used by criterion 8).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "starlike/class_params.hpp"
#include "starlike/closed_forms.hpp"
#include "starlike/function_rep.hpp"
#include "starlike/kernels.hpp"
#include "starlike/oracles.hpp"
#include "subprocess.hpp"

using namespace starlike;

namespace {

int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start =
        std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             start)
            .count();
    }
};

void report(int index, const char* name, bool ok, double elapsed, double limit,
            const std::string& detail) {
    const bool in_time = elapsed < limit;
    if (!ok || !in_time) ++g_failures;
    std::printf("[%s] %d. %s (%s; %.2fs < %.0fs%s)\n",
                ok && in_time ? "PASS" : "FAIL", index, name, detail.c_str(),
                elapsed, limit, in_time ? "" : " TIME LIMIT EXCEEDED");
    std::fflush(stdout);
}

std::string err_str(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "max_err=%.2e", v);
    return buf;
}

ClassParams random_params(std::mt19937_64& rng, double bmax) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double A = -0.999 + 1.999 * unit(rng);
    const double B = -1.0 + (A + 1.0) * 0.999 * unit(rng);
    const Complex b = std::polar(0.05 + (bmax - 0.05) * unit(rng),
                                 2.0 * std::numbers::pi * unit(rng));
    return new_class_params(A, B, b);
}

// 1. Radius golden values to 1e-12.
void criterion_radius_golden() {
    Timer t;
    double worst = 0.0;
    worst = std::max(worst,
                     std::abs(radius_of_starlikeness(new_class_params(1, -1, 1))
                                  .effective -
                              1.0));
    for (const double m : {0.5, 1.0, 2.0, 3.0}) {
        for (const Complex b : {Complex(m, 0.0), Complex(0.0, m),
                                std::polar(m, 2.5)}) {
            worst = std::max(
                worst, std::abs(radius_of_starlikeness(new_class_params(1, 0, b))
                                    .raw -
                                1.0 / m));
            for (const double beta : {0.25, 0.5, 0.75})
                worst = std::max(
                    worst,
                    std::abs(
                        radius_of_starlikeness(new_class_params(beta, 0, b)).raw -
                        1.0 / (beta * m)));
        }
    }
    report(1, "radius golden values", worst <= 1e-12, t.seconds(), 1.0,
           err_str(worst));
}

// 2. Distortion golden values to 1e-12.
void criterion_distortion_golden() {
    Timer t;
    const Bounds d1 = distortion(new_class_params(1, -1, 1), 0.5);
    const Bounds d2 = distortion(new_class_params(1, 0, 1), 0.5);
    double worst = 0.0;
    worst = std::max(worst, std::abs(d1.lower - 2.0 / 9.0));
    worst = std::max(worst, std::abs(d1.upper - 2.0));
    worst = std::max(worst, std::abs(d2.lower - 0.5 * std::exp(-0.5)));
    worst = std::max(worst, std::abs(d2.upper - 0.5 * std::exp(0.5)));
    report(2, "distortion golden values", worst <= 1e-12, t.seconds(), 1.0,
           err_str(worst));
}

// 3. Koebe golden values to 1e-12.
void criterion_koebe_golden() {
    Timer t;
    double worst = std::abs(koebe_radius(new_class_params(1, -1, 1)) - 0.25);
    for (const double m : {0.5, 1.0, 2.0, 3.0})
        for (const Complex b : {Complex(m, 0.0), std::polar(m, -1.2)})
            worst = std::max(worst,
                             std::abs(koebe_radius(new_class_params(1, 0, b)) -
                                      std::exp(-m)));
    for (const double beta : {0.25, 0.5, 0.75})
        for (const Complex b : {Complex(1.0, 0.0), Complex(0.0, 1.5)})
            worst = std::max(
                worst,
                std::abs(koebe_radius(new_class_params(1.0 - 2.0 * beta, -1, b)) -
                         std::pow(4.0, -std::abs(b) * (1.0 - beta))));
    report(3, "koebe golden values", worst <= 1e-12, t.seconds(), 1.0,
           err_str(worst));
}

// 4. Oracle agreement on a fixed 50-triple grid, |b| <= 3, to 1e-6.
void criterion_oracle_agreement() {
    Timer t;
    std::mt19937_64 rng(12345);
    ScanConfig cfg;
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const ClassParams p = random_params(rng, 3.0);
        worst = std::max(worst,
                         std::abs(estimate_radius_numeric(p, cfg) -
                                  radius_of_starlikeness(p).effective));
    }
    report(4, "oracle radius agreement (50 triples)", worst <= 1e-6,
           t.seconds(), 30.0, err_str(worst));
}

// 5. Representation equivalence over 100 random (params, c, z), |z| <= 0.9.
void criterion_representation_equivalence() {
    Timer t;
    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    QuadratureConfig quad;
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const ClassParams p = random_params(rng, 2.0);
        const Complex c = std::polar(unit(rng), 2.0 * std::numbers::pi * unit(rng));
        const Complex z = std::polar(0.9 * std::sqrt(unit(rng)),
                                     2.0 * std::numbers::pi * unit(rng));
        const Complex closed =
            p.B != 0.0 ? z * std::exp(p.b * (p.A - p.B) / p.B *
                                      std::log(1.0 + p.B * c * z))
                       : z * std::exp(p.b * p.A * c * z);
        worst = std::max(worst, std::abs(eval_f_linear(p, c, z, quad) - closed));
    }
    report(5, "representation equivalence (100 samples)", worst < 1e-9,
           t.seconds(), 10.0, err_str(worst));
}

// 6. Containment: 10^4 members x 64 angles at r in {0.3, 0.6, 0.9} inside
// p_disk, st_disk, and the distortion envelope with slack 1e-9; the
// printed-sign st_disk fixture must fail for (1,-1,2).
void criterion_containment() {
    Timer t;
    ScanConfig cfg;
    cfg.angle_count = 64;
    cfg.sample_count = 10000;
    cfg.seed = 20240915;
    cfg.slack = 1e-9;
    bool ok = true;
    std::string detail;

    const std::vector<ClassParams> disk_grid = {
        new_class_params(1, -1, 1),
        new_class_params(1, -1, 2),
        new_class_params(1, 0, 1),
        new_class_params(0.5, -0.5, 1),
        resolve_named(Spirallike{std::numbers::pi / 4.0}),
    };
    for (const ClassParams& p : disk_grid)
        for (const double r : {0.3, 0.6, 0.9}) {
            ok = ok && check_p_disk_containment(p, r, cfg).pass;
            ok = ok && check_disk_containment(p, r, cfg).pass;
        }
    if (!ok) detail = "disk containment failed";

    // envelope grid: classes whose growth bounds are provable as published
    // (real b > 0, or B = 0 where the |b| bound is exact for any direction)
    const std::vector<ClassParams> envelope_grid = {
        new_class_params(1, -1, 1),
        new_class_params(1, 0, 1),
        new_class_params(0.5, 0, Complex(0, 2)),
    };
    bool env_ok = true;
    for (const ClassParams& p : envelope_grid)
        for (const double r : {0.3, 0.6, 0.9})
            env_ok = env_ok && distortion_envelope(p, r, cfg).pass;
    if (!env_ok) detail += (detail.empty() ? "" : "; ") + std::string(
                              "envelope containment failed");
    ok = ok && env_ok;

    // printed-sign fixture must fail
    {
        const ClassParams p = new_class_params(1, -1, 2);
        const double r = 0.5;
        const double den = 1.0 - r * r;
        const Complex wrong_coef = p.B * p.B - p.b * (p.B * (p.A - p.B));
        const Disk wrong{(1.0 - wrong_coef * (r * r)) / den, 8.0 / 3.0};
        ScanConfig fix_cfg = cfg;
        fix_cfg.sample_count = 1000;
        const bool fixture_fails =
            !check_disk_containment_against(p, r, fix_cfg, wrong,
                                            "printed_sign_fixture")
                 .pass;
        ok = ok && fixture_fails;
        if (!fixture_fails)
            detail += (detail.empty() ? "" : "; ") +
                      std::string("printed-sign fixture unexpectedly passed");
    }
    if (detail.empty()) detail = "all containments hold, fixture fails as required";
    report(6, "containment suite (10^4 members)", ok, t.seconds(), 60.0, detail);
}

// 7. Koebe limit for the ten named classes with default parameters.
void criterion_koebe_limit() {
    Timer t;
    const std::vector<ClassParams> grid = {
        resolve_named(Starlike{}),
        resolve_named(StarlikeComplexOrder{1.0}),
        resolve_named(StarlikeOfOrder{0.5}),
        resolve_named(Spirallike{std::numbers::pi / 4.0}),
        resolve_named(SpirallikeOfOrder{0.5, std::numbers::pi / 4.0}),
        resolve_named(St6{1.0}),
        resolve_named(St7{0.5, 1.0}),
        resolve_named(St8{0.5, 1.0}),
        resolve_named(St9{2.0, 1.0}),
        resolve_named(St10{0.5, 1.0}),
    };
    bool ok = true;
    double worst = 0.0;
    for (const ClassParams& p : grid) {
        const OracleReport rep = koebe_limit_numeric(p);
        ok = ok && rep.pass;
        worst = std::max(worst, rep.abs_err);
    }
    report(7, "koebe limit (10 named classes)", ok, t.seconds(), 10.0,
           err_str(worst));
}

// 8. CLI determinism: verify --all twice, byte-identical, exit 0.
void criterion_cli_determinism(const char* cli_path) {
    Timer t;
    if (!cli_path) {
        report(8, "cli determinism", false, t.seconds(), 60.0,
               "missing CLI path argument");
        return;
    }
    const std::string cmd = std::string("env -u STARLIKE_SEED ") + cli_path +
                            " verify --all --samples 200 --seed 7";
    const auto a = testutil::run_command(cmd);
    const auto b = testutil::run_command(cmd);
    // the report must flag every documented specialization discrepancy
    bool notes_ok = true;
    for (const char* quantity :
         {"radius[S*(beta,-beta,b)]", "radius[S*(1-2beta,-1,b)]",
          "radius[S*(1,1/M-1,b)]", "koebe[S*(beta,-beta,b)]"})
        notes_ok = notes_ok && a.output.find(std::string("[note] ") + quantity) !=
                                   std::string::npos;
    const bool ok = a.exit_code == 0 && b.exit_code == 0 && a.output == b.output &&
                    !a.output.empty() && notes_ok;
    report(8, "cli determinism (verify --all)", ok, t.seconds(), 60.0,
           "exit=" + std::to_string(a.exit_code) +
               (a.output == b.output ? ", byte-identical" : ", OUTPUT DIFFERS") +
               (notes_ok ? ", discrepancies flagged" : ", NOTES MISSING"));
}

} // namespace

int main(int argc, char** argv) {
    std::printf("kernel backend: %s\n",
                kernels::backend_name(kernels::active_backend()));
    criterion_radius_golden();
    criterion_distortion_golden();
    criterion_koebe_golden();
    criterion_oracle_agreement();
    criterion_representation_equivalence();
    criterion_containment();
    criterion_koebe_limit();
    criterion_cli_determinism(argc > 1 ? argv[1] : nullptr);
    if (g_failures == 0)
        std::printf("acceptance: all criteria passed\n");
    else
        std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
