#ifndef SCHLICHT_CLI_HPP
#define SCHLICHT_CLI_HPP

#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "schlicht/report_json.hpp"
#include "schlicht/zoo.hpp"

namespace schlicht {

/// Bad or incomplete request; mapped to exit code 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_internal = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_numerical = 3;

/// Function descriptor shared by the flags and the --spec JSON file.
struct FunctionSpec {
    std::string family;
    std::optional<double> lambda;
    std::optional<double> theta;
    std::optional<double> a;
    std::optional<int> k;
    std::optional<std::string> omega;
    std::optional<double> a2;
    std::optional<std::string> member;
    std::optional<std::string> dilatation;

    /// Families: identity, f_theta, g, example32, f_a, omega, omega1_az2, sz.
    static const std::vector<std::string> &families();
    /// Reads the keys of a descriptor object; unknown keys are rejected.
    static FunctionSpec from_json(const Json &j);
    /// Fills every field that is unset here from `other`.
    void merge_missing(const FunctionSpec &other);
    Json to_json() const;
};

/// Builds the map; throws UsageError on unknown families or missing
/// parameters, before any numerical work.
AnalyticMap resolve_function(const FunctionSpec &spec, std::size_t order = default_order);

struct ScanRow {
    double lambda;
    double a;
    double a3;
    double bound;
    double excess;
};

struct CounterexampleScan {
    std::vector<ScanRow> rows; // lambda-major
    // Largest grid lambda for which some a gives a positive excess, and the
    // next grid lambda. Both NaN when no excess is positive.
    double threshold_lower;
    double threshold_upper;
};

CounterexampleScan scan_counterexample(std::span<const double> lambdas, std::span<const double> as);
/// lambda = 0.001 i for i = 1..500.
std::vector<double> default_scan_lambdas();
/// a = 0.05 j for j = 1..19, then 0.99, 0.999, 0.9999.
std::vector<double> default_scan_as();

/// Shortest round-trip decimal form.
std::string format_double(double x);
/// "t,re,im" header, one row per sample at t = 2 pi k / n, LF endings.
std::string curve_csv(std::span<const cplx> points);
/// 1024 x 1024 SVG with the closed polyline auto-fitted and the axes.
std::string curve_svg(std::span<const cplx> points);
std::string scan_csv(const CounterexampleScan &scan);

/// Writes through a temporary file in the same directory and renames it.
void write_file_atomic(const std::string &path, const std::string &content);

/// Runs one command line (without the program name). Returns the exit code:
/// 0 analysis done (any verdict), 2 usage or parse error, 3 numerical failure.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace schlicht

#endif
