#include "schlicht/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>

#include "CLI11.hpp"

#include "schlicht/blaschke.hpp"
#include "schlicht/geometry.hpp"
#include "schlicht/harmonic.hpp"
#include "schlicht/membership.hpp"
#include "schlicht/scalars.hpp"

namespace schlicht {

const std::vector<std::string> &FunctionSpec::families()
{
    static const std::vector<std::string> names{"identity", "f_theta",    "g",  "example32",
                                                "f_a",      "omega", "omega1_az2", "sz"};
    return names;
}

FunctionSpec FunctionSpec::from_json(const Json &j)
{
    if (!j.is_object())
        throw UsageError("function spec must be a JSON object");
    FunctionSpec s;
    auto number = [&](const std::string &key) -> std::optional<double> {
        if (!j.contains(key))
            return std::nullopt;
        if (!j[key].is_number())
            throw UsageError("function spec key '" + key + "' must be a number");
        return j[key].get<double>();
    };
    auto text = [&](const std::string &key) -> std::optional<std::string> {
        if (!j.contains(key))
            return std::nullopt;
        if (!j[key].is_string())
            throw UsageError("function spec key '" + key + "' must be a string");
        return j[key].get<std::string>();
    };
    for (auto it = j.begin(); it != j.end(); ++it) {
        static const std::vector<std::string> keys{"family", "lambda", "theta",  "a",         "k",
                                                   "omega",  "a2",     "member", "dilatation"};
        if (std::find(keys.begin(), keys.end(), it.key()) == keys.end())
            throw UsageError("unknown function spec key '" + it.key() + "'");
    }
    s.family = text("family").value_or("");
    s.lambda = number("lambda");
    s.theta = number("theta");
    s.a = number("a");
    if (j.contains("k")) {
        if (!j["k"].is_number_integer())
            throw UsageError("function spec key 'k' must be an integer");
        s.k = j["k"].get<int>();
    }
    s.omega = text("omega");
    s.a2 = number("a2");
    s.member = text("member");
    s.dilatation = text("dilatation");
    return s;
}

void FunctionSpec::merge_missing(const FunctionSpec &o)
{
    if (family.empty())
        family = o.family;
    if (!lambda) lambda = o.lambda;
    if (!theta) theta = o.theta;
    if (!a) a = o.a;
    if (!k) k = o.k;
    if (!omega) omega = o.omega;
    if (!a2) a2 = o.a2;
    if (!member) member = o.member;
    if (!dilatation) dilatation = o.dilatation;
}

Json FunctionSpec::to_json() const
{
    Json j{{"family", family}};
    if (lambda) j["lambda"] = *lambda;
    if (theta) j["theta"] = *theta;
    if (a) j["a"] = *a;
    if (k) j["k"] = *k;
    if (omega) j["omega"] = *omega;
    if (a2) j["a2"] = *a2;
    if (member) j["member"] = *member;
    if (dilatation) j["dilatation"] = *dilatation;
    return j;
}

namespace {

template <class T>
T need(const std::optional<T> &v, const std::string &family, const char *name)
{
    if (!v)
        throw UsageError("family '" + family + "' requires --" + name);
    return *v;
}

} // namespace

AnalyticMap resolve_function(const FunctionSpec &s, std::size_t order)
{
    const std::string &f = s.family;
    if (f.empty())
        throw UsageError("missing --family");
    if (f == "identity")
        return make_identity(order);
    if (f == "f_theta")
        return make_f_theta(need(s.lambda, f, "lambda"), s.theta.value_or(0.0), order);
    if (f == "g")
        return make_g_threefold(order);
    if (f == "example32")
        return make_example32(need(s.lambda, f, "lambda"), need(s.k, f, "k"), order);
    if (f == "f_a")
        return make_f_a(need(s.lambda, f, "lambda"), need(s.a, f, "a"), order);
    if (f == "omega") {
        const double lambda = need(s.lambda, f, "lambda");
        const SchwarzCandidate om =
            schwarz_from_formula(need(s.omega, f, "omega"), SchwarzRole::omega, order, s.a.value_or(0.0));
        return make_from_omega(lambda, s.a2.value_or(0.0), om);
    }
    if (f == "omega1_az2")
        return make_omega1_az2(need(s.lambda, f, "lambda"), s.a.value_or(1.0), order);
    if (f == "sz")
        return make_sz(need(s.member, f, "member"), order);
    throw UsageError("unknown family '" + f + "'");
}

std::vector<double> default_scan_lambdas()
{
    std::vector<double> l;
    for (int i = 1; i <= 500; ++i)
        l.push_back(0.001 * i);
    return l;
}

std::vector<double> default_scan_as()
{
    std::vector<double> a;
    for (int j = 1; j <= 19; ++j)
        a.push_back(0.05 * j);
    a.insert(a.end(), {0.99, 0.999, 0.9999});
    return a;
}

CounterexampleScan scan_counterexample(std::span<const double> lambdas, std::span<const double> as)
{
    for (double l : lambdas)
        if (!(l > 0.0 && l < 1.0))
            throw DomainError("scan_counterexample: lambda grid must lie in (0,1)");
    for (double a : as)
        if (!(a > 0.0 && a < 1.0))
            throw DomainError("scan_counterexample: a grid must lie in (0,1)");
    CounterexampleScan scan;
    scan.threshold_lower = std::numeric_limits<double>::quiet_NaN();
    scan.threshold_upper = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> sorted(lambdas.begin(), lambdas.end());
    std::sort(sorted.begin(), sorted.end());
    for (double l : lambdas) {
        bool any = false;
        for (double a : as) {
            const double a3 = a3_formula(l, a);
            const double bound = 1.0 + l + l * l;
            scan.rows.push_back({l, a, a3, bound, a3 - bound});
            any = any || a3 > bound;
        }
        if (any && !(l <= scan.threshold_lower))
            scan.threshold_lower = l;
    }
    if (!std::isnan(scan.threshold_lower)) {
        const auto it = std::upper_bound(sorted.begin(), sorted.end(), scan.threshold_lower);
        if (it != sorted.end())
            scan.threshold_upper = *it;
    }
    return scan;
}

std::string format_double(double x)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

namespace {

std::string fixed3(double x)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, 3);
    return std::string(buf, res.ptr);
}

} // namespace

std::string curve_csv(std::span<const cplx> points)
{
    std::string out = "t,re,im\n";
    const double n = static_cast<double>(points.size());
    for (std::size_t k = 0; k < points.size(); ++k) {
        out += format_double(two_pi * static_cast<double>(k) / n);
        out += ',';
        out += format_double(points[k].real());
        out += ',';
        out += format_double(points[k].imag());
        out += '\n';
    }
    return out;
}

std::string curve_svg(std::span<const cplx> points)
{
    constexpr double size = 1024.0, margin = 32.0;
    double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
    for (cplx p : points) {
        x0 = std::min(x0, p.real());
        x1 = std::max(x1, p.real());
        y0 = std::min(y0, p.imag());
        y1 = std::max(y1, p.imag());
    }
    const double span = std::max(x1 - x0, y1 - y0);
    const double scale = span > 0.0 ? (size - 2.0 * margin) / span : 1.0;
    const double ox = margin + 0.5 * ((size - 2.0 * margin) - (x1 - x0) * scale);
    const double oy = margin + 0.5 * ((size - 2.0 * margin) - (y1 - y0) * scale);
    auto sx = [&](double x) { return ox + (x - x0) * scale; };
    auto sy = [&](double y) { return size - (oy + (y - y0) * scale); };

    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
                      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
                      "width=\"1024\" height=\"1024\" viewBox=\"0 0 1024 1024\">\n";
    if (x0 <= 0.0 && 0.0 <= x1)
        out += "<line x1=\"" + fixed3(sx(0.0)) + "\" y1=\"0\" x2=\"" + fixed3(sx(0.0)) +
               "\" y2=\"1024\" stroke=\"gray\" stroke-width=\"1\"/>\n";
    if (y0 <= 0.0 && 0.0 <= y1)
        out += "<line x1=\"0\" y1=\"" + fixed3(sy(0.0)) + "\" x2=\"1024\" y2=\"" + fixed3(sy(0.0)) +
               "\" stroke=\"gray\" stroke-width=\"1\"/>\n";
    out += "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
    for (std::size_t k = 0; k <= points.size(); ++k) {
        const cplx p = points[k % points.size()];
        if (k > 0)
            out += ' ';
        out += fixed3(sx(p.real()));
        out += ',';
        out += fixed3(sy(p.imag()));
    }
    out += "\"/>\n</svg>\n";
    return out;
}

std::string scan_csv(const CounterexampleScan &scan)
{
    std::string out = "lambda,a,a3,bound,excess\n";
    for (const ScanRow &r : scan.rows)
        out += format_double(r.lambda) + ',' + format_double(r.a) + ',' + format_double(r.a3) + ',' +
               format_double(r.bound) + ',' + format_double(r.excess) + '\n';
    return out;
}

void write_file_atomic(const std::string &path, const std::string &content)
{
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream o(tmp, std::ios::binary | std::ios::trunc);
        if (!o)
            throw std::runtime_error("cannot write " + tmp.string());
        o << content;
        o.flush();
        if (!o)
            throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, target);
}

namespace {

struct CommonOptions {
    std::string json_path;
    std::optional<std::size_t> radii_count;
    std::optional<std::size_t> angles;
    std::optional<double> tolerance;
    bool timing = false;
};

struct SpecOptions {
    FunctionSpec spec;
    std::string spec_path;
    double lambda = 0.0, theta = 0.0, a = 0.0, a2 = 0.0;
    int k = 0;
};

void add_common(CLI::App *cmd, CommonOptions &o)
{
    cmd->add_option("--json", o.json_path, "write the JSON report here instead of stdout");
    cmd->add_option("--radii-count", o.radii_count, "number of dyadic circles 1 - 2^-j")
        ->check(CLI::Range(1, 52));
    cmd->add_option("--angles", o.angles, "angles per circle")->check(CLI::Range(64, 1 << 20));
    cmd->add_option("--tolerance", o.tolerance, "grid tolerance")->check(CLI::PositiveNumber);
    cmd->add_flag("--timing", o.timing, "record wall_time_ms (otherwise 0)");
}

void add_spec(CLI::App *cmd, FunctionSpec &s, std::string &spec_path)
{
    cmd->add_option("--spec", spec_path, "JSON file with a function descriptor");
    cmd->add_option("--family", s.family, "function family");
    cmd->add_option("--lambda", s.lambda, "class parameter lambda");
    cmd->add_option("--theta", s.theta, "rotation angle for f_theta");
    cmd->add_option("--a", s.a, "parameter a");
    cmd->add_option("--k", s.k, "order k for example32");
    cmd->add_option("--omega", s.omega, "omega formula");
    cmd->add_option("--a2", s.a2, "second coefficient for the omega family");
    cmd->add_option("--member", s.member, "member of the integer-coefficient set");
}

SamplingPlan make_plan(const CommonOptions &o)
{
    return SamplingPlan::dyadic(o.radii_count.value_or(20), o.angles.value_or(4096),
                                o.tolerance.value_or(1e-9));
}

FunctionSpec full_spec(FunctionSpec s, const std::string &spec_path)
{
    if (!spec_path.empty()) {
        std::ifstream in(spec_path);
        if (!in)
            throw UsageError("cannot open spec file " + spec_path);
        Json j;
        try {
            j = Json::parse(in);
        } catch (const Json::parse_error &e) {
            throw UsageError(std::string("spec file is not valid JSON: ") + e.what());
        }
        s.merge_missing(FunctionSpec::from_json(j));
    }
    const auto &fam = FunctionSpec::families();
    if (s.family.empty())
        throw UsageError("missing --family");
    if (std::find(fam.begin(), fam.end(), s.family) == fam.end())
        throw UsageError("unknown family '" + s.family + "'");
    return s;
}

Json num_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Numerical toolkit for the class U(lambda) of univalent functions", "schlicht"};
    app.require_subcommand(1);
    CommonOptions common;
    FunctionSpec spec;
    std::string spec_path;

    auto *membership = app.add_subcommand("membership", "grid supremum of |U_f| and verdict");
    std::optional<double> against;
    add_spec(membership, spec, spec_path);
    membership->add_option("--against", against, "level to test (default: the family lambda)");

    auto *coeffs = app.add_subcommand("coeffs", "Taylor coefficients of f and z/f");
    add_spec(coeffs, spec, spec_path);
    std::size_t coeff_count = 12;
    coeffs->add_option("--count", coeff_count, "number of coefficients a_1..a_n")->check(CLI::Range(1, 64));

    auto *counter = app.add_subcommand("counterexample", "third-coefficient counterexample family");
    std::optional<double> c_lambda, c_a;
    bool scan = false;
    std::string scan_csv_path;
    double lambda_step = 0.001, lambda_max = 0.5;
    std::vector<double> a_values;
    counter->add_option("--lambda", c_lambda, "lambda in (0,1)");
    counter->add_option("--a", c_a, "a in (0,1)");
    counter->add_flag("--scan", scan, "scan a (lambda, a) grid for the threshold");
    counter->add_option("--lambda-step", lambda_step, "scan step in lambda")->check(CLI::PositiveNumber);
    counter->add_option("--lambda-max", lambda_max, "largest scanned lambda")->check(CLI::Range(0.0, 1.0));
    counter->add_option("--a-values", a_values, "a grid for the scan");
    counter->add_option("--csv", scan_csv_path, "write the scan table here");

    auto *convexity = app.add_subcommand("convexity", "convexity-in-direction certificates");
    add_spec(convexity, spec, spec_path);
    std::vector<double> gammas;
    std::optional<std::size_t> gamma_count;
    DirectionSearch search;
    convexity->add_option("--gamma", gammas, "direction(s) gamma");
    convexity->add_option("--gamma-count", gamma_count, "scan gamma = pi i / N, i < N")
        ->check(CLI::Range(1, 4096));
    convexity->add_option("--mu-count", search.mu_count, "mu grid size")->check(CLI::Range(1, 4096));
    convexity->add_option("--nu-count", search.nu_count, "nu grid size")->check(CLI::Range(2, 4096));

    auto *subord = app.add_subcommand("subordination", "Schwarz-function recovery for z/f");
    add_spec(subord, spec, spec_path);
    std::optional<double> target_lambda;
    subord->add_option("--against", target_lambda, "target lambda (default: the family lambda)");

    auto *blaschke = app.add_subcommand("blaschke", "boundary behaviour of the model Blaschke products");
    std::string kind;
    std::size_t factors = 40, terms = 50, julia_radii = 40;
    double zeta_angle = 0.0;
    blaschke->add_option("--kind", kind, "B1 or B2")->required()->check(CLI::IsMember({"B1", "B2"}));
    blaschke->add_option("--factors", factors, "retained zeros")->check(CLI::Range(1, 60));
    blaschke->add_option("--terms", terms, "terms of the boundary sum")->check(CLI::Range(1, 1000));
    blaschke->add_option("--radii", julia_radii, "radii 1 - 2^-j, j = 1..N")->check(CLI::Range(6, 52));
    blaschke->add_option("--zeta-angle", zeta_angle, "boundary point e^{i angle}");

    auto *harmonic = app.add_subcommand("harmonic", "harmonic-map certificates");
    std::optional<double> h_lambda;
    std::string h_omega = "z", h_dilatation = "0", theorem = "auto";
    harmonic->add_option("--lambda", h_lambda, "lambda of the analytic part");
    harmonic->add_option("--omega", h_omega, "omega of the analytic part (a2 = 0)");
    harmonic->add_option("--dilatation", h_dilatation, "dilatation formula");
    harmonic->add_option("--theorem", theorem, "T42, T43, both or auto")
        ->check(CLI::IsMember({"T42", "T43", "both", "auto"}));

    auto *render = app.add_subcommand("render", "boundary curve f(r e^{it}) as SVG and CSV");
    add_spec(render, spec, spec_path);
    double radius = 0.999;
    std::size_t samples = 4096;
    std::string svg_path, csv_path;
    render->add_option("--radius", radius, "circle radius r < 1");
    render->add_option("--samples", samples, "number of samples")->check(CLI::Range(3, 1 << 22));
    render->add_option("--svg", svg_path, "SVG output path");
    render->add_option("--csv", csv_path, "CSV output path");

    for (CLI::App *cmd : {membership, coeffs, counter, convexity, subord, blaschke, harmonic, render})
        add_common(cmd, common);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    const auto start = std::chrono::steady_clock::now();
    std::string command;
    Json result;
    std::vector<std::string> warnings;
    int code = exit_ok;

    try {
        if (membership->parsed()) {
            command = "membership";
            const FunctionSpec s = full_spec(spec, spec_path);
            const SamplingPlan plan = make_plan(common);
            const AnalyticMap f = resolve_function(s);
            const double level = against.value_or(f.lambda);
            const MembershipReport rep = membership_verdict(f, level, plan);
            if (!rep.skipped_points.empty())
                warnings.push_back(std::to_string(rep.skipped_points.size()) +
                                   " grid points skipped at poles of f");
            result = Json{{"function", s.to_json()}, {"plan", to_json(plan)}, {"report", to_json(rep)}};
        } else if (coeffs->parsed()) {
            command = "coeffs";
            const FunctionSpec s = full_spec(spec, spec_path);
            const AnalyticMap f = resolve_function(s);
            Json a = Json::array(), q = Json::array();
            for (std::size_t n = 1; n <= coeff_count; ++n) {
                a.push_back(to_json(f.coefficient(n)));
                q.push_back(to_json(f.inverse_series[n - 1]));
            }
            result = Json{{"function", s.to_json()},
                          {"count", coeff_count},
                          {"coefficients", a},
                          {"inverse_coefficients", q},
                          {"invariant_defect", f.order() > 0 ? invariant_defect(f) : 0.0}};
        } else if (counter->parsed()) {
            command = "counterexample";
            if (scan) {
                if (!(lambda_max > 0.0 && lambda_max < 1.0))
                    throw UsageError("--lambda-max must lie in (0,1)");
                std::vector<double> lambdas;
                for (int i = 1; i * lambda_step <= lambda_max * (1.0 + 1e-12); ++i)
                    lambdas.push_back(i * lambda_step);
                if (lambdas.empty())
                    throw UsageError("--lambda-step exceeds --lambda-max");
                const std::vector<double> as = a_values.empty() ? default_scan_as() : a_values;
                const CounterexampleScan sc = scan_counterexample(lambdas, as);
                if (!scan_csv_path.empty())
                    write_file_atomic(scan_csv_path, scan_csv(sc));
                const double d = delta();
                const bool brackets = sc.threshold_lower <= d && d <= sc.threshold_upper;
                result = Json{{"mode", "scan"},
                              {"lambda_step", lambda_step},
                              {"lambda_max", lambda_max},
                              {"a_values", as},
                              {"rows", sc.rows.size()},
                              {"threshold_lower", num_or_null(sc.threshold_lower)},
                              {"threshold_upper", num_or_null(sc.threshold_upper)},
                              {"delta", d},
                              {"brackets_delta", brackets},
                              {"csv_path", scan_csv_path}};
            } else {
                if (!c_lambda || !c_a)
                    throw UsageError("counterexample requires --lambda and --a (or --scan)");
                const double l = *c_lambda, av = *c_a;
                const AnalyticMap f = make_f_a(l, av);
                const double a3_series = f.coefficient(3).real();
                const double a3_quad = a3_formula_with_v(l, av, v_quadrature(av));
                const double bound = 1.0 + l + l * l;
                result = Json{{"mode", "single"},
                              {"lambda", l},
                              {"a", av},
                              {"a3", a3_series},
                              {"a3_imag", f.coefficient(3).imag()},
                              {"a3_formula", a3_quad},
                              {"agreement", std::abs(a3_series - a3_quad)},
                              {"bound", bound},
                              {"excess", a3_series - bound},
                              {"v", v(av)},
                              {"lambda_threshold", lambda_threshold(av)},
                              {"delta", delta()}};
            }
        } else if (convexity->parsed()) {
            command = "convexity";
            const FunctionSpec s = full_spec(spec, spec_path);
            const SamplingPlan plan = make_plan(common);
            const AnalyticMap f = resolve_function(s);
            std::vector<double> gs = gammas;
            if (gamma_count)
                for (std::size_t i = 0; i < *gamma_count; ++i)
                    gs.push_back(pi * static_cast<double>(i) / static_cast<double>(*gamma_count));
            if (gs.empty())
                gs.push_back(0.0);
            const auto certs = scan_directions(f, gs, plan, search, common.tolerance);
            Json arr = Json::array();
            std::size_t certified = 0;
            for (const auto &c : certs) {
                arr.push_back(to_json(c));
                certified += c.status == CertStatus::CERTIFIED;
            }
            result = Json{{"function", s.to_json()},
                          {"plan", to_json(plan)},
                          {"mu_count", search.mu_count},
                          {"nu_count", search.nu_count},
                          {"certified_count", certified},
                          {"certificates", arr}};
        } else if (subord->parsed()) {
            command = "subordination";
            const FunctionSpec s = full_spec(spec, spec_path);
            const SamplingPlan plan = make_plan(common);
            const AnalyticMap f = resolve_function(s);
            const double l = target_lambda.value_or(f.lambda);
            const SubordinationVerdict v = schwarz_recover(f, l, plan);
            if (v.status == SubordinationStatus::UNDECIDED)
                warnings.insert(warnings.end(), v.diagnostics.begin(), v.diagnostics.end());
            result = Json{{"function", s.to_json()},
                          {"lambda", l},
                          {"plan", to_json(plan)},
                          {"verdict", to_json(v)}};
            if (v.tracking_failed)
                code = exit_numerical;
        } else if (blaschke->parsed()) {
            command = "blaschke";
            const BlaschkeSpec bs = kind == "B1" ? BlaschkeSpec::b1(factors) : BlaschkeSpec::b2(factors);
            const cplx zeta = unimodular(zeta_angle);
            const std::vector<double> partial = blaschke_gsum(bs, zeta, terms);
            std::vector<double> radii;
            for (std::size_t j = 1; j <= julia_radii; ++j)
                radii.push_back(1.0 - std::ldexp(1.0, -static_cast<int>(j)));
            const JuliaReport jr =
                julia_quotient([&](cplx z) { return blaschke_defect(bs, z); }, zeta, radii);
            double min_margin = std::numeric_limits<double>::infinity();
            for (std::size_t n = 1; n <= factors; ++n)
                min_margin = std::min(min_margin, zero_inequality_margin(bs, n));
            result = Json{{"kind", kind},
                          {"zeta", to_json(zeta)},
                          {"factors", factors},
                          {"blaschke_sum", bs.blaschke_sum()},
                          {"tail_bound", bs.tail_bound()},
                          {"partial_sums", partial},
                          {"julia", to_json(jr)},
                          {"zero_inequality",
                           Json{{"checked", factors},
                                {"min_margin", min_margin},
                                {"holds", min_margin >= 0.0}}}};
        } else if (harmonic->parsed()) {
            command = "harmonic";
            if (!h_lambda)
                throw UsageError("harmonic requires --lambda");
            const double l = *h_lambda;
            const AnalyticMap H =
                make_from_omega(l, 0.0, schwarz_from_formula(h_omega, SchwarzRole::omega));
            const HarmonicMap F =
                build_harmonic(H, schwarz_from_formula(h_dilatation, SchwarzRole::omega));
            const SamplingPlan plan = make_plan(common);
            std::vector<HarmonicCertificate> certs;
            const bool t42_range = l > 0.0 && l <= std::sqrt(2.0) - 1.0;
            const bool t43_range = l > 0.0 && l <= 0.5;
            if (theorem == "T42" || theorem == "both" || (theorem == "auto" && t42_range))
                certs.push_back(certify_T42(F, plan, common.tolerance));
            if (theorem == "T43" || theorem == "both" || (theorem == "auto" && t43_range))
                certs.push_back(certify_T43(F, plan, common.tolerance));
            if (certs.empty())
                throw HypothesisError("lambda lies outside the range of both theorems");
            Json arr = Json::array();
            for (const auto &c : certs) {
                arr.push_back(to_json(c));
                if (c.clamp_events > 0)
                    warnings.push_back("arcsin clamping in " + std::string(to_string(c.theorem)));
            }
            Json g = Json::array();
            for (std::size_t n = 0; n < 8; ++n)
                g.push_back(to_json(F.G_series[n]));
            result = Json{{"lambda", l},
                          {"omega", h_omega},
                          {"dilatation", h_dilatation},
                          {"plan", to_json(plan)},
                          {"G_series", g},
                          {"certificates", arr}};
        } else if (render->parsed()) {
            command = "render";
            const FunctionSpec s = full_spec(spec, spec_path);
            if (!(radius > 0.0 && radius < 1.0))
                throw UsageError("--radius must lie in (0,1)");
            const AnalyticMap f = resolve_function(s);
            const std::vector<cplx> pts = boundary_curve(f, radius, samples);
            if (!svg_path.empty())
                write_file_atomic(svg_path, curve_svg(pts));
            if (!csv_path.empty())
                write_file_atomic(csv_path, curve_csv(pts));
            double x0 = pts[0].real(), x1 = x0, y0 = pts[0].imag(), y1 = y0;
            for (cplx p : pts) {
                x0 = std::min(x0, p.real());
                x1 = std::max(x1, p.real());
                y0 = std::min(y0, p.imag());
                y1 = std::max(y1, p.imag());
            }
            result = Json{{"function", s.to_json()},
                          {"radius", radius},
                          {"samples", samples},
                          {"bbox", Json{{"re_min", x0}, {"re_max", x1}, {"im_min", y0}, {"im_max", y1}}},
                          {"svg_path", svg_path},
                          {"csv_path", csv_path}};
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const SingularPoint &e) {
        err << "numerical failure: " << e.what() << "\n";
        return exit_numerical;
    } catch (const NumericalFailure &e) {
        err << "numerical failure: " << e.what() << "\n";
        return exit_numerical;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::domain_error &e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return exit_internal;
    }

    long long ms = 0;
    if (common.timing)
        ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                 .count();
    const Json env = make_envelope(command, std::move(result), warnings, ms);
    const std::string text = env.dump(2) + "\n";
    try {
        if (common.json_path.empty())
            out << text;
        else
            write_file_atomic(common.json_path, text);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return exit_internal;
    }
    return code;
}

} // namespace schlicht
