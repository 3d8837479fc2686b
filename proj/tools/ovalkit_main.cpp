// ovalkit command-line front end: ingests curve-spec JSON, runs the analyses
// and emits text/JSON reports, CSV sweeps and SVG figures.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ovalkit/ovalkit.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace ovalkit;

namespace {

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

int default_samples() {
    if (const char* env = std::getenv("OVALKIT_SAMPLES")) {
        const int v = std::atoi(env);
        if (v >= 8)
            return v;
    }
    return 4096;
}

std::string basename_of(const std::string& path) { return fs::path(path).filename().string(); }

/// temp file + rename, so readers never observe a partial file
void write_atomic(const std::string& path, const std::string& content) {
    const fs::path target(path);
    if (target.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(target.parent_path(), ec);
    }
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw IoError("cannot write " + tmp.string());
        out << content;
        if (!out)
            throw IoError("short write to " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec)
        throw IoError("cannot rename " + tmp.string() + " to " + path);
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty())
        std::cout << content;
    else
        write_atomic(out_path, content);
}

void describe_terms(std::ostringstream& os, const FourierSupport& s) {
    os << "a0: " << format_number(s.a0()) << "\n";
    os << "terms: " << s.terms().size() << "\n";
    for (const auto& t : s.terms())
        os << "  n=" << t.n << " a=" << format_number(t.a) << " b=" << format_number(t.b) << "\n";
}

ordered_json terms_json(const FourierSupport& s) {
    ordered_json arr = ordered_json::array();
    for (const auto& t : s.terms())
        arr.push_back({{"n", t.n}, {"a", t.a}, {"b", t.b}});
    return arr;
}

// ---------------------------------------------------------------- analyze ---

std::string analyze_text(const std::string& input, const FourierSupport& s, double tol) {
    const CurveMetrics m = compute_metrics(s);
    const auto verdict = improved_isoperimetric_check(m);
    const bool cw = is_constant_width(s, tol);

    std::ostringstream os;
    os << "input: " << input << "\n";
    describe_terms(os, s);
    os << "min rho: " << format_number(s.min_rho()) << " (theta " << format_number(s.min_rho_theta()) << ")\n";
    os << "length: " << format_quantity(m.length) << "\n";
    os << "area: " << format_quantity(m.area) << "\n";
    os << "psi: " << format_quantity(m.psi) << "\n";
    os << "wigner caustic area: " << format_quantity(m.wigner_area) << "\n";
    os << "classic deficit: " << format_quantity(m.classic_deficit) << "\n";
    os << "improved deficit (phi): " << format_quantity(m.improved_deficit) << "\n";
    os << "improved inequality: " << (verdict.holds ? (verdict.equality ? "holds, equality" : "holds, strict") : "VIOLATED")
       << " (margin " << format_quantity(verdict.margin) << ")\n";
    os << "constant width: " << (cw ? "yes" : "no") << "\n";
    if (cw) {
        const auto barbier = barbier_check(s);
        os << "width: " << format_number(barbier.width) << "\n";
        os << "barbier residual: " << format_number(barbier.residual) << "\n";
        os << "area identity residual: " << format_number(constant_width_area_identity(s)) << "\n";
    }
    return os.str();
}

std::string analyze_json(const std::string& input, const FourierSupport& s, double tol) {
    const CurveMetrics m = compute_metrics(s);
    const auto verdict = improved_isoperimetric_check(m);
    const bool cw = is_constant_width(s, tol);

    ordered_json j;
    j["schema"] = 1;
    j["input"] = input;
    j["a0"] = s.a0();
    j["terms"] = terms_json(s);
    j["min_rho"] = s.min_rho();
    j["min_rho_theta"] = s.min_rho_theta();
    j["length"] = m.length;
    j["area"] = m.area;
    j["psi"] = m.psi;
    j["wigner_area"] = m.wigner_area;
    j["classic_deficit"] = m.classic_deficit;
    j["improved_deficit"] = m.improved_deficit;
    j["improved_inequality"] = {{"holds", verdict.holds}, {"equality", verdict.equality}, {"margin", verdict.margin}};
    j["constant_width"] = cw;
    if (cw) {
        const auto barbier = barbier_check(s);
        j["width"] = barbier.width;
        j["barbier_residual"] = barbier.residual;
        j["area_identity_residual"] = constant_width_area_identity(s);
    }
    return j.dump(2) + "\n";
}

// ------------------------------------------------------------- equidistant --

std::string equidistant_text(const std::string& input, const FourierSupport& s, double lambda, int samples) {
    const EquidistantReport r = equidistant_report(s, lambda, samples);
    bool degenerate = false;
    try {
        cusp_parameters({s, lambda});
    } catch (const DegenerateRoot&) {
        degenerate = true;
    }

    std::ostringstream os;
    os << "input: " << input << "\n";
    os << "lambda: " << format_number(r.lambda) << "\n";
    os << "wigner caustic: " << (r.is_wigner ? "yes" : "no") << "\n";
    os << "oriented area: " << format_quantity(r.oriented_area) << "\n";
    os << "length estimate: " << format_number(r.length_estimate) << "\n";
    if (degenerate) {
        os << "cusps: degenerate (point caustic)\n";
    } else {
        os << "cusps: " << r.cusp_thetas.size() << "\n";
        for (double theta : r.cusp_thetas)
            os << "  theta " << format_quantity(theta) << "\n";
    }
    return os.str();
}

std::string equidistant_json(const std::string& input, const FourierSupport& s, double lambda, int samples) {
    const EquidistantReport r = equidistant_report(s, lambda, samples);
    ordered_json j;
    j["schema"] = 1;
    j["input"] = input;
    j["lambda"] = r.lambda;
    j["is_wigner"] = r.is_wigner;
    j["oriented_area"] = r.oriented_area;
    j["length_estimate"] = r.length_estimate;
    j["cusp_thetas"] = r.cusp_thetas;
    return j.dump(2) + "\n";
}

// -------------------------------------------------------------------- sweep -

std::string sweep_csv(const FourierSupport& s, double lo, double hi, int steps, int samples) {
    std::ostringstream os;
    os << "lambda,oriented_area,lower_bound,upper_bound,cusp_count,length_estimate\n";
    for (int i = 0; i < steps; ++i) {
        double lambda = lo + (hi - lo) * (double(i) / (steps - 1));
        // snap to the structurally special values the user almost surely meant
        for (double special : {0.0, 0.5, 1.0})
            if (lambda != special && std::abs(lambda - special) < 1e-12)
                lambda = special;
        const auto bounds = bounds_check(s, lambda);  // BoundViolation aborts the run
        std::size_t cusps = 0;
        try {
            cusps = cusp_parameters({s, lambda}).size();
        } catch (const DegenerateRoot&) {
            cusps = 0;
        }
        const double len = equidistant_length({s, lambda}, samples);
        os << format_number(lambda) << "," << format_number(bounds.value) << "," << format_number(bounds.lower)
           << "," << format_number(bounds.upper) << "," << cusps << "," << format_number(len) << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------- stability -

std::string stability_text(const std::string& input, const FourierSupport& s) {
    const StabilityReport r = stability_check(s);
    const FourierSupport w = wigner_type_curve(s);
    constexpr double pi = std::numbers::pi;

    std::ostringstream os;
    os << "input: " << input << "\n";
    os << "phi: " << format_quantity(r.phi) << "\n";
    os << "d_inf: " << format_number(r.d_inf) << "\n";
    os << "d_2: " << format_number(r.d_2) << "\n";
    os << "hausdorff bound 4pi^2 d_inf^2: " << format_quantity(4.0 * pi * pi * r.d_inf * r.d_inf) << "\n";
    os << "l2 bound 6pi d_2^2: " << format_quantity(6.0 * pi * r.d_2 * r.d_2) << "\n";
    os << "margin_max: " << format_quantity(r.margin_max) << "\n";
    os << "margin_l2: " << format_quantity(r.margin_l2) << "\n";
    os << "equality class: "
       << (r.equality_class == EqualityClass::constant_width      ? "constant_width"
           : r.equality_class == EqualityClass::l2_equality_family ? "l2_equality_family"
                                                                    : "strict")
       << "\n";
    os << "wigner type curve:\n";
    describe_terms(os, w);
    return os.str();
}

std::string stability_json(const std::string& input, const FourierSupport& s) {
    const StabilityReport r = stability_check(s);
    const FourierSupport w = wigner_type_curve(s);
    ordered_json j;
    j["schema"] = 1;
    j["input"] = input;
    j["phi"] = r.phi;
    j["d_inf"] = r.d_inf;
    j["d_2"] = r.d_2;
    j["margin_max"] = r.margin_max;
    j["margin_l2"] = r.margin_l2;
    j["equality_class"] = r.equality_class == EqualityClass::constant_width      ? "constant_width"
                          : r.equality_class == EqualityClass::l2_equality_family ? "l2_equality_family"
                                                                                   : "strict";
    j["wigner_type_curve"] = {{"a0", w.a0()}, {"terms", terms_json(w)}};
    return j.dump(2) + "\n";
}

// ------------------------------------------------------------------- family -

std::string family_text(int n, const std::string& out_path) {
    const FourierSupport s = make_cusp_family(n);
    const int harmonic = 2 * n + 1;
    const auto barbier = barbier_check(s);
    const auto cusps = cusp_parameters({s, 0.5});

    double max_dev = 0.0;
    for (std::size_t k = 0; k < cusps.size(); ++k) {
        const double predicted = (std::numbers::pi + 2.0 * k * std::numbers::pi) / (4.0 * n + 2.0);
        max_dev = std::max(max_dev, std::abs(cusps[k] - predicted));
    }

    std::ostringstream os;
    os << "family: n=" << n << "\n";
    os << "harmonic: " << harmonic << "\n";
    os << "a0: " << format_number(s.a0()) << "\n";
    os << "width: " << format_number(barbier.width) << "\n";
    os << "constant width: " << (is_constant_width(s) ? "yes" : "no") << "\n";
    os << "barbier residual: " << format_number(barbier.residual) << "\n";
    os << "cusps: " << cusps.size() << " (expected " << (2 * n + 1) << ")\n";
    os << "max cusp deviation: " << format_number(max_dev) << "\n";
    for (double theta : cusps)
        os << "  theta " << format_quantity(theta) << "\n";
    if (!out_path.empty()) {
        write_atomic(out_path, curve_spec_json(s));
        os << "wrote: " << out_path << "\n";
    }
    return os.str();
}

// ------------------------------------------------------------------- render -

std::string render_figure(const FourierSupport& s, const std::vector<double>& lambdas, bool with_wigner_type,
                          int samples) {
    static const char* palette[] = {"#c02020", "#2040c0", "#208040", "#c08020", "#8020c0"};
    std::vector<SvgCurve> curves;
    curves.push_back({sample_curve(s, samples), {"#000000", 2.0, false}});
    if (with_wigner_type)
        curves.push_back({sample_curve(wigner_type_curve(s), samples), {"#606060", 1.5, true}});
    for (std::size_t i = 0; i < lambdas.size(); ++i)
        curves.push_back({sample_equidistant({s, lambdas[i]}, samples), {palette[i % 5], 1.5, false}});
    return render_svg(curves);
}

int run(int argc, char** argv) {
    CLI::App app{"ovalkit: planar ovals from Minkowski support functions - equidistants, Wigner caustics and isoperimetric-type inequalities"};
    app.require_subcommand(1);

    std::string input, out, format = "text", lambda_range = "0.05:0.95:19";
    double lambda = 0.5, tol = 1e-12;
    int samples = default_samples();
    int family_n = 1;
    std::vector<double> lambdas;
    bool with_wigner_type = false;

    auto add_input = [&](CLI::App* cmd) { cmd->add_option("input", input, "curve-spec JSON file")->required(); };

    CLI::App* analyze = app.add_subcommand("analyze", "global metrics and inequality checks");
    add_input(analyze);
    analyze->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    analyze->add_option("--out", out, "write the report to a file");
    analyze->add_option("--tol", tol, "constant-width classification tolerance");

    CLI::App* equidistant = app.add_subcommand("equidistant", "one affine equidistant in detail");
    add_input(equidistant);
    equidistant->add_option("--lambda", lambda, "affine time");
    equidistant->add_option("--samples", samples, "quadrature sample count");
    equidistant->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    equidistant->add_option("--out", out);

    CLI::App* sweep = app.add_subcommand("sweep", "CSV of equidistant areas and bounds over a lambda range");
    add_input(sweep);
    sweep->add_option("--lambda-range", lambda_range, "lo:hi:steps");
    sweep->add_option("--samples", samples);
    sweep->add_option("--out", out);

    CLI::App* stability = app.add_subcommand("stability", "stability margins and the wigner-type curve");
    add_input(stability);
    stability->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    stability->add_option("--out", out);

    CLI::App* family = app.add_subcommand("family", "cusp family member and its verification report");
    family->add_option("--n", family_n, "family index (harmonic 2n+1)")->required();
    family->add_option("--out", out, "write the curve-spec JSON here");

    CLI::App* render = app.add_subcommand("render", "SVG figure of the oval and chosen equidistants");
    add_input(render);
    render->add_option("--lambda", lambdas, "equidistants to draw (repeatable)");
    render->add_flag("--with-wigner-type", with_wigner_type, "overlay the wigner-type curve, dashed");
    render->add_option("--samples", samples, "polyline density");
    render->add_option("--out", out, "output SVG path")->required();

    CLI11_PARSE(app, argc, argv);

    if (analyze->parsed()) {
        const auto s = load_curve_spec(input);
        if (s.near_singular())
            std::cerr << "warning: near-singular oval (min rho < 1e-9 a0)\n";
        const std::string name = basename_of(input);
        emit(format == "json" ? analyze_json(name, s, tol) : analyze_text(name, s, tol), out);
    } else if (equidistant->parsed()) {
        const auto s = load_curve_spec(input);
        const std::string name = basename_of(input);
        emit(format == "json" ? equidistant_json(name, s, lambda, samples)
                              : equidistant_text(name, s, lambda, samples),
             out);
    } else if (sweep->parsed()) {
        const auto s = load_curve_spec(input);
        double lo = 0.0, hi = 0.0;
        int steps = 0;
        if (std::sscanf(lambda_range.c_str(), "%lf:%lf:%d", &lo, &hi, &steps) != 3 || !(lo < hi) || steps < 2)
            throw std::invalid_argument("--lambda-range wants lo:hi:steps with lo < hi, steps >= 2");
        emit(sweep_csv(s, lo, hi, steps, samples), out);
    } else if (stability->parsed()) {
        const auto s = load_curve_spec(input);
        const std::string name = basename_of(input);
        emit(format == "json" ? stability_json(name, s) : stability_text(name, s), out);
    } else if (family->parsed()) {
        std::cout << family_text(family_n, out);
    } else if (render->parsed()) {
        const auto s = load_curve_spec(input);
        write_atomic(out, render_figure(s, lambdas, with_wigner_type, samples));
        std::cout << "wrote: " << out << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NonConvexCurve& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BoundViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
