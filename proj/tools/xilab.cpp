// xilab -- numerical laboratory for the completed zeta function xi(s), its
// critical-line restriction Xi(t), the spectral kernel S(omega) and the
// product form over nontrivial zeros.
//
// Subcommands: eval, scan, spectrum, zeros, gram, verify, export-zeros.
// Exit status: 0 success, 1 verification failure, 2 usage or I/O error.

#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "xilab/hadamard.hpp"
#include "xilab/specfun.hpp"
#include "xilab/spectral.hpp"
#include "xilab/verification.hpp"
#include "xilab/xi.hpp"
#include "xilab/zeros.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

// locale-independent, 17 significant digits
std::string fmt(double v) {
    char buf[40];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v,
                                   std::chars_format::general, 17);
    return std::string(buf, end);
}

// shortest round-trip form, for labels
std::string fmt_short(double v) {
    char buf[40];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

struct Range {
    double lo = 0.0;
    double hi = 0.0;
    double step = 0.0;
    bool has_step = false;
};

Range parse_range(const std::string& text) {
    Range r;
    std::vector<double> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t next = text.find(':', pos);
        const std::string piece =
            text.substr(pos, next == std::string::npos ? next : next - pos);
        double v = 0.0;
        const auto* b = piece.data();
        auto [p, ec] = std::from_chars(b, b + piece.size(), v);
        if (ec != std::errc{} || p != b + piece.size())
            throw CLI::ValidationError("--range", "malformed range component '" + piece +
                                                      "' (expected lo:hi[:step])");
        parts.push_back(v);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (parts.size() < 2 || parts.size() > 3)
        throw CLI::ValidationError("--range", "expected lo:hi[:step]");
    r.lo = parts[0];
    r.hi = parts[1];
    if (parts.size() == 3) {
        r.step = parts[2];
        r.has_step = true;
        if (!(r.step > 0.0)) throw CLI::ValidationError("--range", "step must be > 0");
    }
    if (!(r.hi > r.lo)) throw CLI::ValidationError("--range", "requires hi > lo");
    return r;
}

// complex literal: "a", "a+bi", "a-bi"
xilab::Complex parse_point(const std::string& text, std::size_t position) {
    const auto fail = [&]() {
        throw CLI::ValidationError(
            "--s", "invalid point '" + text + "' at position " +
                       std::to_string(position) + " (expected a or a+bi)");
    };
    const char* b = text.data();
    const char* e = b + text.size();
    double re = 0.0;
    auto [p, ec] = std::from_chars(b, e, re);
    if (ec != std::errc{}) fail();
    if (p == e) return {re, 0.0};
    if (*p != '+' && *p != '-') fail();
    double im = 0.0;
    auto [p2, ec2] = std::from_chars(*p == '+' ? p + 1 : p, e, im);
    if (ec2 != std::errc{} || p2 + 1 != e || *p2 != 'i') fail();
    return {re, im};
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file " + path);
    return file;
}

void emit_eval_row(std::ostream& os, const xilab::StripPoint& p) {
    using namespace xilab;
    const Complex xi = xi_direct(p);
    const auto zeta_r = zeta(p.s());
    os << fmt(p.sigma) << ',' << fmt(p.t) << ',' << fmt(xi.real()) << ','
       << fmt(xi.imag()) << ',' << fmt(Xi(p.t)) << ',' << fmt(hardy_Z(p.t)) << ','
       << fmt(theta_rs(p.t)) << ',' << fmt(std::abs(zeta_r.value)) << ','
       << fmt(zeta_r.abs_err) << '\n';
}

constexpr const char* kEvalHeader =
    "# sigma,t,re_xi,im_xi,Xi,Z,theta,abs_zeta,zeta_err\n";

int run_eval(const std::vector<std::string>& s_args,
             const std::vector<std::string>& t_args, const std::string& out_path) {
    if (s_args.empty() && t_args.empty())
        throw CLI::ValidationError("eval", "requires at least one --s or --t point");
    std::ofstream file;
    std::ostream& os = open_output(file, out_path);
    os << kEvalHeader;
    std::size_t pos = 1;
    for (const auto& text : s_args)
        emit_eval_row(os, xilab::StripPoint::from_s(parse_point(text, pos++)));
    for (const auto& text : t_args) {
        double t = 0.0;
        const auto* b = text.data();
        auto [p, ec] = std::from_chars(b, b + text.size(), t);
        if (ec != std::errc{} || p != b + text.size())
            throw CLI::ValidationError("--t", "invalid ordinate '" + text + "'");
        emit_eval_row(os, xilab::StripPoint::on_line(t));
    }
    return kExitOk;
}

int run_scan(const Range& range, double sigma, const std::string& out_path) {
    if (!range.has_step)
        throw CLI::ValidationError("--range", "scan requires lo:hi:step");
    std::ofstream file;
    std::ostream& os = open_output(file, out_path);
    os << kEvalHeader;
    const auto n = static_cast<long>(std::floor((range.hi - range.lo) / range.step + 1e-9));
    for (long i = 0; i <= n; ++i)
        emit_eval_row(os, {sigma, range.lo + static_cast<double>(i) * range.step});
    return kExitOk;
}

int run_spectrum(const Range& range, double tol, const std::string& out_path) {
    if (!range.has_step)
        throw CLI::ValidationError("--range", "spectrum requires lo:hi:step");
    using namespace xilab;
    std::ofstream file;
    std::ostream& os = open_output(file, out_path);
    QuadratureConfig quad;
    if (tol > 0.0) quad.abs_tol = quad.rel_tol = tol;
    os << "# omega,S,S1,S_neg,S_inverse\n";
    const auto n = static_cast<long>(std::floor((range.hi - range.lo) / range.step + 1e-9));
    for (long i = 0; i <= n; ++i) {
        const double w = range.lo + static_cast<double>(i) * range.step;
        os << fmt(w) << ',' << fmt(S_kernel(w)) << ',' << fmt(S_n_kernel(1, w)) << ','
           << fmt(S_kernel(-w)) << ',' << fmt(S_from_Xi(w, 60.0, quad).value) << '\n';
    }
    return kExitOk;
}

int run_zeros(const Range& range, const std::string& out_path) {
    std::ofstream file;
    std::ostream& os = open_output(file, out_path);
    const double step = range.has_step ? range.step : 0.05;
    const auto hits = xilab::find_zeros(range.lo, range.hi, step);
    os << "# ordinate,bracket_width,iterations\n";
    for (const auto& h : hits)
        os << fmt(h.ordinate) << ',' << fmt(h.bracket_width) << ','
           << h.refinement_iters << '\n';
    return kExitOk;
}

int run_export_zeros(const Range& range, const std::string& out_path) {
    if (out_path.empty())
        throw CLI::ValidationError("--out", "export-zeros requires --out");
    const double step = range.has_step ? range.step : 0.05;
    const auto hits = xilab::find_zeros(range.lo, range.hi, step);
    xilab::ZeroTable table;
    table.source_label = "xilab export-zeros range " + fmt_short(range.lo) + ".." +
                         fmt_short(range.hi) + " step " + fmt_short(step);
    for (const auto& h : hits) table.ordinates.push_back(h.ordinate);
    xilab::save_zeros(out_path, table);
    return kExitOk;
}

int run_gram(int n_lo, int n_hi, bool law, const std::string& zeros_path,
             const std::string& out_path) {
    using namespace xilab;
    std::ofstream file;
    std::ostream& os = open_output(file, out_path);
    const auto pts = gram_points(n_lo, n_hi);
    if (!law) {
        os << "# index,g,theta_residual\n";
        for (const auto& p : pts)
            os << p.index << ',' << fmt(p.g) << ','
               << fmt(theta_rs(p.g) - p.index * 3.14159265358979323846) << '\n';
        return kExitOk;
    }

    std::vector<double> ordinates;
    if (!zeros_path.empty()) {
        ordinates = load_zeros(zeros_path).ordinates;
    } else {
        const double lo = std::max(0.0, pts.front().g - 5.0);
        const double hi = pts.back().g + 8.0;
        if (hi > 200.0)
            throw std::runtime_error(
                "gram --law: interval range exceeds the t <= 200 scan cap; "
                "supply a table with --zeros");
        for (const auto& h : find_zeros(lo, hi)) ordinates.push_back(h.ordinate);
    }
    const auto report = gram_law_report(n_lo, n_hi, ordinates);
    os << "# index,g_lo,g_hi,zero_count\n";
    for (const auto& iv : report.intervals)
        os << iv.index << ',' << fmt(iv.g_lo) << ',' << fmt(iv.g_hi) << ','
           << iv.zero_count << '\n';
    os << "# intervals=" << report.intervals.size()
       << " exactly_one=" << report.exactly_one << " empty=" << report.empty_intervals
       << " multiple=" << report.multiple
       << " zeros_in_range=" << report.total_zeros_in_range << '\n';
    return kExitOk;
}

int run_verify(const std::string& suite, const std::string& zeros_path,
               const std::string& out_path) {
    using namespace xilab;
    std::ofstream file;
    std::ostream& os = open_output(file, out_path);

    const bool all = suite == "all";
    std::vector<CheckResult> checks;
    auto append = [&checks](std::vector<CheckResult> more) {
        checks.insert(checks.end(), more.begin(), more.end());
    };

    std::optional<ZeroTable> table;
    if (all || suite == "hadamard" || suite == "monotonic") {
        if (zeros_path.empty())
            throw std::runtime_error("verify: suite '" + suite +
                                     "' requires a zero table (--zeros <path>)");
        table = load_zeros(zeros_path);
    }

    if (all || suite == "identities") append(verify_identities());
    if (all || suite == "fourier") append(verify_fourier());
    if (all || suite == "hadamard") append(verify_hadamard(*table));
    if (all || suite == "monotonic") append(verify_monotonic(*table));

    std::size_t failed = 0;
    for (const auto& c : checks) {
        if (!c.passed) ++failed;
        os << (c.passed ? "PASS " : "FAIL ") << c.name << " (observed=" << fmt(c.observed)
           << ", tol=" << fmt(c.tolerance) << ")\n";
    }
    os << "verify-summary suite=" << suite << " checks=" << checks.size()
       << " passed=" << checks.size() - failed << " failed=" << failed << '\n';
    return failed == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"xilab: evaluation, verification, zero location and spectrum "
                 "export for the completed zeta function"};
    app.require_subcommand(1);
    app.set_config("--config", "", "optional key=value config file");

    std::string out_path;
    app.add_option("--out", out_path, "write CSV/report to this file instead of stdout")
        ->capture_default_str();
    double tol = 0.0;
    app.add_option("--tol", tol,
                   "tolerance override for quadrature-backed columns "
                   "(spectrum inverse route)");

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate xi, Xi, Z, theta at points");
    eval->fallthrough();
    std::vector<std::string> s_args, t_args;
    eval->add_option("--s", s_args, "strip points as a or a+bi (comma separated)")
        ->delimiter(',');
    eval->add_option("--t", t_args, "critical-line ordinates (comma separated)")
        ->delimiter(',');

    // scan
    auto* scan = app.add_subcommand("scan", "evaluate along a t range");
    scan->fallthrough();
    std::string scan_range;
    double scan_sigma = 0.5;
    scan->add_option("--range", scan_range, "t range lo:hi:step")->required();
    scan->add_option("--sigma", scan_sigma, "real part of the scan line")
        ->capture_default_str();

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "export S(omega) columns");
    spectrum->fallthrough();
    std::string spectrum_range;
    spectrum->add_option("--range", spectrum_range, "omega range lo:hi:step")->required();

    // zeros
    auto* zeros_cmd = app.add_subcommand("zeros", "locate critical-line zeros");
    zeros_cmd->fallthrough();
    std::string zeros_range;
    zeros_cmd->add_option("--range", zeros_range, "t range lo:hi[:step], t <= 200")
        ->required();

    // export-zeros
    auto* export_cmd =
        app.add_subcommand("export-zeros", "write located zeros as a zero table");
    export_cmd->fallthrough();
    std::string export_range;
    export_cmd->add_option("--range", export_range, "t range lo:hi[:step], t <= 200")
        ->required();

    // gram
    auto* gram = app.add_subcommand("gram", "Gram points and Gram-law counts");
    gram->fallthrough();
    int n_lo = 0, n_hi = 0;
    bool law = false;
    std::string gram_zeros;
    gram->add_option("--n-lo", n_lo, "first Gram index (>= -1)")->required();
    gram->add_option("--n-hi", n_hi, "last Gram index")->required();
    gram->add_flag("--law", law, "emit zero counts per Gram interval");
    gram->add_option("--zeros", gram_zeros, "zero table used for --law counts");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->fallthrough();
    std::string suite = "all";
    std::string verify_zeros;
    verify->add_option("--suite", suite, "identities|fourier|hadamard|monotonic|all")
        ->check(CLI::IsMember({"identities", "fourier", "hadamard", "monotonic", "all"}))
        ->capture_default_str();
    verify->add_option("--zeros", verify_zeros, "zero table (hadamard/monotonic suites)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*eval) return run_eval(s_args, t_args, out_path);
        if (*scan) return run_scan(parse_range(scan_range), scan_sigma, out_path);
        if (*spectrum)
            return run_spectrum(parse_range(spectrum_range), tol, out_path);
        if (*zeros_cmd) return run_zeros(parse_range(zeros_range), out_path);
        if (*export_cmd) return run_export_zeros(parse_range(export_range), out_path);
        if (*gram) return run_gram(n_lo, n_hi, law, gram_zeros, out_path);
        if (*verify) return run_verify(suite, verify_zeros, out_path);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
