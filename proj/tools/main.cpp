// starlike: closed-form geometry of the Janowski class S*(A,B,b) with
// numerical certification. Subcommands: compute, table, verify, plot-data.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "starlike/class_params.hpp"
#include "starlike/closed_forms.hpp"
#include "starlike/function_rep.hpp"
#include "starlike/oracles.hpp"

namespace {

using namespace starlike;

std::string num(double v, int digits) {
    if (v == 0.0) v = 0.0; // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string json_num(double v) {
    if (std::isinf(v)) return "\"inf\"";
    return num(v, 15);
}

std::string csv_num(double v) { return num(v, 9); }

struct ParamFlags {
    std::optional<double> A, B;
    double b_re = 0.0, b_im = 0.0;
    bool b_set = false;
    std::string named;
    double alpha = 0.5;
    double beta = 0.5;
    double lambda = std::numbers::pi / 4.0;
    double M = 2.0;
};

void add_param_flags(CLI::App* cmd, ParamFlags& pf) {
    cmd->add_option("--A", pf.A, "Janowski parameter A, -1 < A <= 1");
    cmd->add_option("--B", pf.B, "Janowski parameter B, -1 <= B < A");
    auto* bre = cmd->add_option("--b-re", pf.b_re, "Re b (complex order)");
    auto* bim = cmd->add_option("--b-im", pf.b_im, "Im b (complex order)");
    cmd->add_option("--named", pf.named,
                    "named class: starlike, starlike-complex, starlike-order, "
                    "spirallike, spirallike-order, st6, st7, st8, st9, st10");
    cmd->add_option("--alpha", pf.alpha, "order parameter alpha in [0,1)");
    cmd->add_option("--beta", pf.beta, "order parameter beta");
    cmd->add_option("--lambda", pf.lambda, "spiral angle, |lambda| < pi/2");
    cmd->add_option("--M", pf.M, "disk parameter M > 1/2");
    cmd->callback([bre, bim, &pf] {
        pf.b_set = bre->count() > 0 || bim->count() > 0;
    });
}

ClassParams resolve_params(const ParamFlags& pf) {
    const bool direct = pf.A.has_value() || pf.B.has_value();
    const bool named = !pf.named.empty();
    if (direct == named)
        throw OutOfRange(
            "exactly one parameter source required: --A/--B/--b-re/--b-im or "
            "--named");
    if (direct) {
        if (!pf.A || !pf.B) throw OutOfRange("--A and --B must both be given");
        return new_class_params(*pf.A, *pf.B, Complex(pf.b_re, pf.b_im));
    }
    // b defaults to 1 for named classes with a free complex order.
    const Complex b = pf.b_set ? Complex(pf.b_re, pf.b_im) : Complex(1.0, 0.0);
    if (pf.named == "starlike") return resolve_named(Starlike{});
    if (pf.named == "starlike-complex")
        return resolve_named(StarlikeComplexOrder{b});
    if (pf.named == "starlike-order")
        return resolve_named(StarlikeOfOrder{pf.beta});
    if (pf.named == "spirallike") return resolve_named(Spirallike{pf.lambda});
    if (pf.named == "spirallike-order")
        return resolve_named(SpirallikeOfOrder{pf.alpha, pf.lambda});
    if (pf.named == "st6") return resolve_named(St6{b});
    if (pf.named == "st7") return resolve_named(St7{pf.beta, b});
    if (pf.named == "st8") return resolve_named(St8{pf.beta, b});
    if (pf.named == "st9") return resolve_named(St9{pf.M, b});
    if (pf.named == "st10") return resolve_named(St10{pf.beta, b});
    throw OutOfRange("unknown --named class: " + pf.named);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw OutOfRange("cannot open output file: " + out_path);
    os.write(text.data(), static_cast<std::streamsize>(text.size()));
}

std::uint64_t effective_seed(std::uint64_t flag_seed) {
    if (const char* env = std::getenv("STARLIKE_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0')
            throw OutOfRange("STARLIKE_SEED must be an unsigned integer");
        return static_cast<std::uint64_t>(v);
    }
    return flag_seed;
}

// ---- compute -------------------------------------------------------------

std::string compute_json(const ClassParams& p, std::optional<double> r) {
    const StarlikeRadius rad = radius_of_starlikeness(p);
    std::string s = "{\n";
    s += "  \"params\": {\"A\": " + json_num(p.A) + ", \"B\": " + json_num(p.B) +
         ", \"b_re\": " + json_num(p.b.real()) +
         ", \"b_im\": " + json_num(p.b.imag()) + "},\n";
    s += "  \"radius\": {\"raw\": " + json_num(rad.raw) +
         ", \"effective\": " + json_num(rad.effective) +
         ", \"boundary_free\": " + (rad.boundary_free ? "true" : "false") +
         "},\n";
    s += "  \"koebe\": " + json_num(koebe_radius(p));
    if (r) {
        const Bounds d = distortion(p, *r);
        const Disk disk = st_disk(p, *r);
        s += ",\n  \"distortion\": {\"r\": " + json_num(*r) +
             ", \"lower\": " + json_num(d.lower) +
             ", \"upper\": " + json_num(d.upper) + "}";
        s += ",\n  \"st_disk\": {\"center_re\": " + json_num(disk.center.real()) +
             ", \"center_im\": " + json_num(disk.center.imag()) +
             ", \"radius\": " + json_num(disk.radius) + "}";
        s += ",\n  \"re_lower_bound\": " + json_num(re_lower_bound(p, *r));
    }
    s += "\n}\n";
    return s;
}

std::string compute_csv(const ClassParams& p, std::optional<double> r) {
    const StarlikeRadius rad = radius_of_starlikeness(p);
    std::string s = "key,value\n";
    s += "params.A," + csv_num(p.A) + "\n";
    s += "params.B," + csv_num(p.B) + "\n";
    s += "params.b_re," + csv_num(p.b.real()) + "\n";
    s += "params.b_im," + csv_num(p.b.imag()) + "\n";
    s += "radius.raw," + (std::isinf(rad.raw) ? std::string("inf")
                                              : csv_num(rad.raw)) + "\n";
    s += "radius.effective," + csv_num(rad.effective) + "\n";
    s += std::string("radius.boundary_free,") +
         (rad.boundary_free ? "true" : "false") + "\n";
    s += "koebe," + csv_num(koebe_radius(p)) + "\n";
    if (r) {
        const Bounds d = distortion(p, *r);
        const Disk disk = st_disk(p, *r);
        s += "distortion.r," + csv_num(*r) + "\n";
        s += "distortion.lower," + csv_num(d.lower) + "\n";
        s += "distortion.upper," + csv_num(d.upper) + "\n";
        s += "st_disk.center_re," + csv_num(disk.center.real()) + "\n";
        s += "st_disk.center_im," + csv_num(disk.center.imag()) + "\n";
        s += "st_disk.radius," + csv_num(disk.radius) + "\n";
        s += "re_lower_bound," + csv_num(re_lower_bound(p, *r)) + "\n";
    }
    return s;
}

// ---- table ----------------------------------------------------------------

std::string table_csv(const ClassParams& p, int grid) {
    if (grid < 2) throw OutOfRange("--grid must be >= 2");
    std::string s = "r,lower,upper,re_lower_bound\n";
    const double rmax = 1.0 - 1e-6;
    for (int i = 0; i < grid; ++i) {
        const double r = rmax * static_cast<double>(i) / (grid - 1);
        const Bounds d = distortion(p, r);
        s += csv_num(r) + "," + csv_num(d.lower) + "," + csv_num(d.upper) + "," +
             csv_num(re_lower_bound(p, r)) + "\n";
    }
    return s;
}

// ---- plot-data -------------------------------------------------------------

std::string plot_data_csv(const ClassParams& p, double r, int grid) {
    if (grid < 2) throw OutOfRange("--grid must be >= 2");
    const Bounds d = distortion(p, r);
    std::string s;
    s += "# distortion_lower," + csv_num(d.lower) + "\n";
    s += "# distortion_upper," + csv_num(d.upper) + "\n";
    s += "theta,f_re,f_im,abs_f\n";
    for (int i = 0; i < grid; ++i) {
        const double theta = 2.0 * std::numbers::pi * i / grid;
        const Complex z = std::polar(r, theta);
        const Complex f = eval_extremal(p, z);
        s += csv_num(theta) + "," + csv_num(f.real()) + "," + csv_num(f.imag()) +
             "," + csv_num(std::abs(f)) + "\n";
    }
    return s;
}

// ---- verify ----------------------------------------------------------------

struct VerifyTarget {
    std::string name;
    ClassParams params;
};

std::vector<VerifyTarget> builtin_grid() {
    return {
        {"starlike", resolve_named(Starlike{})},
        {"starlike-complex", resolve_named(StarlikeComplexOrder{1.0})},
        {"starlike-order", resolve_named(StarlikeOfOrder{0.5})},
        {"spirallike", resolve_named(Spirallike{std::numbers::pi / 4.0})},
        {"spirallike-order",
         resolve_named(SpirallikeOfOrder{0.5, std::numbers::pi / 4.0})},
        {"st6", resolve_named(St6{1.0})},
        {"st7", resolve_named(St7{0.5, 1.0})},
        {"st8", resolve_named(St8{0.5, 1.0})},
        {"st9", resolve_named(St9{2.0, 1.0})},
        {"st10", resolve_named(St10{0.5, 1.0})},
    };
}

std::vector<OracleReport> run_checks(const ClassParams& p, int samples,
                                     std::uint64_t seed, double quad_tol) {
    ScanConfig radius_cfg;
    radius_cfg.angle_count = 2048;
    radius_cfg.sample_count = samples;
    radius_cfg.seed = seed;
    radius_cfg.quad.tol = quad_tol;
    ScanConfig scan_cfg = radius_cfg;
    scan_cfg.angle_count = 64;

    std::vector<OracleReport> reports;
    reports.push_back(radius_agreement(p, radius_cfg));
    for (const double r : {0.3, 0.6, 0.9})
        reports.push_back(check_disk_containment(p, r, scan_cfg));
    for (const double r : {0.3, 0.6, 0.9})
        reports.push_back(distortion_envelope(p, r, scan_cfg));
    reports.push_back(koebe_limit_numeric(p));
    reports.push_back(integral_vs_closed_form(p, scan_cfg));
    return reports;
}

std::string report_line(const OracleReport& rep) {
    std::string s = rep.pass ? "[pass] " : "[FAIL] ";
    s += rep.quantity + ": closed=" + num(rep.closed_form, 9) +
         " numeric=" + num(rep.numeric, 9) + " abs_err=" + num(rep.abs_err, 3) +
         " samples=" + std::to_string(rep.samples) + " (" + rep.note + ")\n";
    return s;
}

std::string report_json(const OracleReport& rep) {
    std::string s = "{\"quantity\": \"" + rep.quantity + "\"";
    s += ", \"closed_form\": " + json_num(rep.closed_form);
    s += ", \"numeric\": " + json_num(rep.numeric);
    s += ", \"abs_err\": " + json_num(rep.abs_err);
    s += ", \"samples\": " + std::to_string(rep.samples);
    s += std::string(", \"verdict\": \"") + (rep.pass ? "pass" : "fail") + "\"";
    s += ", \"note\": \"" + rep.note + "\"}";
    return s;
}

std::string params_label(const ClassParams& p) {
    return "A=" + num(p.A, 9) + " B=" + num(p.B, 9) + " b=" +
           num(p.b.real(), 9) + (p.b.imag() < 0 ? "" : "+") +
           num(p.b.imag(), 9) + "i";
}

int cmd_verify(const std::vector<VerifyTarget>& targets, int samples,
               std::uint64_t seed, double quad_tol, const std::string& format,
               const std::string& out_path) {
    bool all_pass = true;
    std::string text;
    std::string json = "{\n  \"classes\": [\n";
    bool first_class = true;
    for (const VerifyTarget& t : targets) {
        const auto reports = run_checks(t.params, samples, seed, quad_tol);
        if (format == "json") {
            if (!first_class) json += ",\n";
            first_class = false;
            json += "    {\"name\": \"" + t.name + "\", \"params\": {\"A\": " +
                    json_num(t.params.A) + ", \"B\": " + json_num(t.params.B) +
                    ", \"b_re\": " + json_num(t.params.b.real()) +
                    ", \"b_im\": " + json_num(t.params.b.imag()) +
                    "}, \"reports\": [\n";
            bool first = true;
            for (const OracleReport& rep : reports) {
                if (!first) json += ",\n";
                first = false;
                json += "      " + report_json(rep);
                all_pass = all_pass && rep.pass;
            }
            json += "\n    ]}";
        } else {
            text += "== " + t.name + " (" + params_label(t.params) + ") ==\n";
            for (const OracleReport& rep : reports) {
                text += report_line(rep);
                all_pass = all_pass && rep.pass;
            }
        }
    }
    const auto notes = documented_discrepancies();
    if (format == "json") {
        json += "\n  ],\n  \"discrepancies\": [\n";
        bool first = true;
        for (const DiscrepancyNote& n : notes) {
            if (!first) json += ",\n";
            first = false;
            json += "    {\"quantity\": \"" + n.quantity +
                    "\", \"published\": " + json_num(n.published) +
                    ", \"general\": " + json_num(n.general) + ", \"note\": \"" +
                    n.note + "\"}";
        }
        json += "\n  ],\n  \"pass\": " + std::string(all_pass ? "true" : "false") +
                "\n}\n";
        emit(json, out_path);
    } else {
        for (const DiscrepancyNote& n : notes)
            text += "[note] " + n.quantity + ": published=" +
                    num(n.published, 9) + " general=" + num(n.general, 9) +
                    " -- " + n.note + "\n";
        text += all_pass ? "verification: all checks passed\n"
                         : "verification: FAILURES present\n";
        emit(text, out_path);
    }
    return all_pass ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Geometry of the Janowski starlike classes S*(A,B,b): radii, "
                 "growth bounds, Koebe radii, and numerical certification"};
    app.require_subcommand(1);

    ParamFlags pf_compute, pf_table, pf_verify, pf_plot;
    std::optional<double> r_compute;
    double r_plot = 0.5;
    int grid_table = 64, grid_plot = 64;
    int samples = 200;
    std::uint64_t seed = 1;
    double quad_tol = 1e-10;
    std::string fmt_compute = "json", fmt_verify = "text";
    std::string out_compute, out_table, out_verify, out_plot;
    bool verify_all = false;

    CLI::App* compute =
        app.add_subcommand("compute", "closed forms for one class");
    add_param_flags(compute, pf_compute);
    compute->add_option("--r", r_compute, "also report bounds at |z| = r");
    compute->add_option("--format", fmt_compute, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    compute->add_option("--out", out_compute, "write to file");

    CLI::App* table =
        app.add_subcommand("table", "growth bounds on a radius grid (CSV)");
    add_param_flags(table, pf_table);
    table->add_option("--grid", grid_table, "grid points, >= 2");
    table->add_option("--out", out_table, "write to file");

    CLI::App* verify =
        app.add_subcommand("verify", "run the certification oracles");
    add_param_flags(verify, pf_verify);
    verify->add_flag("--all", verify_all, "verify the built-in named grid");
    verify->add_option("--samples", samples, "random members per check");
    verify->add_option("--seed", seed,
                       "sampler seed (STARLIKE_SEED overrides)");
    verify->add_option("--tol", quad_tol, "quadrature tolerance");
    verify->add_option("--format", fmt_verify, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", out_verify, "write to file");

    CLI::App* plot = app.add_subcommand(
        "plot-data", "extremal image of |z| = r at grid angles (CSV)");
    add_param_flags(plot, pf_plot);
    plot->add_option("--r", r_plot, "circle radius in (0,1)")->required();
    plot->add_option("--grid", grid_plot, "angle count, >= 2");
    plot->add_option("--out", out_plot, "write to file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (compute->parsed()) {
            const ClassParams p = resolve_params(pf_compute);
            if (r_compute && !(*r_compute >= 0.0 && *r_compute < 1.0))
                throw OutOfRange("--r must satisfy 0 <= r < 1");
            emit(fmt_compute == "json" ? compute_json(p, r_compute)
                                       : compute_csv(p, r_compute),
                 out_compute);
            return 0;
        }
        if (table->parsed()) {
            emit(table_csv(resolve_params(pf_table), grid_table), out_table);
            return 0;
        }
        if (plot->parsed()) {
            if (!(r_plot > 0.0 && r_plot < 1.0))
                throw OutOfRange("--r must satisfy 0 < r < 1");
            emit(plot_data_csv(resolve_params(pf_plot), r_plot, grid_plot),
                 out_plot);
            return 0;
        }
        if (verify->parsed()) {
            if (samples < 0) throw OutOfRange("--samples must be >= 0");
            std::vector<VerifyTarget> targets;
            if (verify_all) {
                targets = builtin_grid();
            } else {
                const ClassParams p = resolve_params(pf_verify);
                targets.push_back({"class", p});
            }
            return cmd_verify(targets, samples, effective_seed(seed), quad_tol,
                              fmt_verify, out_verify);
        }
    } catch (const OutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const OutOfDomain& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const QuadratureFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
