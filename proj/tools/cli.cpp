#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "bohrlab/functionals.hpp"
#include "bohrlab/witnesses.hpp"

namespace bohrlab::cli
{

namespace
{

using nlohmann::json;

constexpr double kSnapTolerance = 1e-9;

std::size_t resolve_order(std::size_t flag_value, bool flag_given)
{
    if (flag_given) {
        return flag_value;
    }
    if (const char *env = std::getenv("BOHRLAB_ORDER")) {
        std::size_t value = 0;
        const std::string text(env);
        const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || end != text.data() + text.size() || value < 1) {
            throw std::invalid_argument("BOHRLAB_ORDER must be a positive integer, got '" + text + "'");
        }
        return value;
    }
    return kDefaultOrder;
}

double require_param(const std::map<std::string, double> &params, const std::string &key)
{
    const auto it = params.find(key);
    if (it == params.end()) {
        throw std::invalid_argument("missing parameter '" + key + "'");
    }
    return it->second;
}

double param_or(const std::map<std::string, double> &params, const std::string &key, double fallback)
{
    const auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

// Moebius extremal of the harmonic inequalities: co-analytic part lambda * k * (h - a),
// dilatation bound k. lambda -> 1 attains the sharp constant.
HarmonicPair harmonic_extremal(double a, double k, double lambda, std::size_t order)
{
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw std::domain_error("lambda must lie in [0, 1]");
    }
    HarmonicPair p = extremal_theorem3(a, lambda * k, order);
    p.k = k;
    return p;
}

json coefficients(const TruncatedSeries &f)
{
    json out = json::array();
    for (const auto &c : f.coeffs()) {
        out.push_back({c.real(), c.imag()});
    }
    return out;
}

std::string format_params(const std::map<std::string, double> &params)
{
    std::string out;
    for (const auto &[key, value] : params) {
        if (!out.empty()) {
            out += ';';
        }
        out += key + '=' + format_double(value);
    }
    return out;
}

struct RadiusArgs
{
    std::string theorem;
    double a = 0.0;
    double k = 0.0;
    int p = 1;
};

struct SweepArgs
{
    std::string functional;
    std::string params;
    double r_min = 0.0;
    double r_max = 0.0;
    int steps = 10;
};

struct ExtremalArgs
{
    std::string theorem;
    double a = 0.0;
    double k = 0.0;
    double lambda = 1.0;
    std::size_t order = kDefaultOrder;
};

struct VerifyArgs
{
    std::string suite;
    std::size_t trials = 1000;
    std::uint64_t seed = 42;
    std::size_t order = kDefaultOrder;
};

void write_json(std::ostream &out, const json &j)
{
    out << j.dump(2) << '\n';
}

int do_radius(const RadiusArgs &args, const CLI::App &cmd, std::ostream &out)
{
    RadiusResult result;
    json extra = json::object();
    if (args.theorem == "classical") {
        result = classical_radius();
    } else if (args.theorem == "odd") {
        result = odd_bohr_radius();
    } else if (args.theorem == "psym") {
        result = p_symmetric_radius(args.p);
        extra["p"] = args.p;
    } else if (args.theorem == "t5") {
        if (cmd.count("--a") == 0) {
            throw std::invalid_argument("radius --theorem t5 requires --a");
        }
        result = theorem5_radius(args.a);
        extra["a"] = args.a;
    } else {
        if (cmd.count("--a") == 0) {
            throw std::invalid_argument("radius --theorem t6 requires --a");
        }
        result = theorem6_radius(args.a, args.k);
        extra["a"] = args.a;
        extra["k"] = args.k;
    }
    json j = to_json(result);
    j["theorem"] = args.theorem;
    for (auto it = extra.begin(); it != extra.end(); ++it) {
        j[it.key()] = it.value();
    }
    write_json(out, j);
    return kExitOk;
}

int do_sweep(const SweepArgs &args, std::ostream &out, std::ostream &err)
{
    const auto params = parse_params(args.params);
    if (args.steps < 1) {
        throw std::invalid_argument("--steps must be >= 1");
    }
    const double r_min = snap_endpoint(args.r_min);
    const double r_max = snap_endpoint(args.r_max);
    if (!(r_min >= 0.0 && r_min < r_max && r_max < 1.0)) {
        throw std::invalid_argument("need 0 <= r-min < r-max < 1");
    }
    const double a = require_param(params, "a");
    const std::size_t order = resolve_order(kDefaultOrder, false);

    std::function<Evaluation(double)> eval;
    if (args.functional == "bohr") {
        const TruncatedSeries f = mobius_series(a, order);
        eval = [f](double r) { return Evaluation{bohr_sum(f, r), 0.0, false}; };
    } else if (args.functional == "cor2") {
        const TruncatedSeries f = extremal_corollary2(a, order);
        eval = [f, a](double r) { return corollary2_lhs(f, a, r); };
    } else if (args.functional == "t3") {
        const HarmonicPair p = harmonic_extremal(a, param_or(params, "k", 0.0), param_or(params, "lambda", 1.0), order);
        eval = [p, a](double r) { return theorem3_lhs(p, a, r); };
    } else if (args.functional == "t5") {
        const TruncatedSeries f = extremal_theorem5(a, order);
        eval = [f](double r) { return theorem5_lhs(f, -r); };
    } else {
        const HarmonicPair p = harmonic_extremal(a, param_or(params, "k", 0.0), param_or(params, "lambda", 1.0), order);
        eval = [p](double r) { return theorem6_lhs(p, r); };
    }

    const std::string param_text = format_params(params);
    std::ostringstream body;
    body << "r,value,functional,params\n";
    bool informational = false;
    for (int i = 0; i <= args.steps; ++i) {
        const double r = i == args.steps ? r_max : r_min + (r_max - r_min) * i / args.steps;
        const Evaluation e = eval(r);
        informational = informational || e.informational;
        body << format_double(r) << ',' << format_double(e.value) << ',' << args.functional << ',' << param_text
             << '\n';
    }
    out << body.str();
    if (informational) {
        err << "note: rows with r > 1/3 lie beyond the radius where the inequality is claimed; informational only\n";
    }
    return kExitOk;
}

int do_extremal(const ExtremalArgs &args, const CLI::App &cmd, std::ostream &out)
{
    const std::size_t order = resolve_order(args.order, cmd.count("--order") > 0);
    json j;
    j["theorem"] = args.theorem;
    j["a"] = args.a;
    j["order"] = order;
    if (args.theorem == "cor2") {
        j["analytic"] = coefficients(extremal_corollary2(args.a, order));
    } else if (args.theorem == "t5") {
        j["analytic"] = coefficients(extremal_theorem5(args.a, order));
    } else {
        const HarmonicPair p = harmonic_extremal(args.a, args.k, args.lambda, order);
        j["k"] = args.k;
        j["lambda"] = args.lambda;
        j["dilatation_bound"] = p.k;
        j["analytic"] = coefficients(p.h);
        j["coanalytic"] = coefficients(p.g);
    }
    write_json(out, j);
    return kExitOk;
}

VerificationReport run_suite(const std::string &suite, std::size_t trials, std::uint64_t seed, std::size_t order)
{
    static const double k_grid_t3[] = {0.0, 0.5, 1.0};
    static const double a_grid_t6[] = {0.5, 0.6, 0.7, 0.8, 0.9};
    static const double k_grid_t6[] = {0.0, 0.25, 0.5, 0.75, 1.0};
    if (suite == "classical") {
        return check_classical(trials, seed, order);
    }
    if (suite == "t1") {
        return check_theorem1(trials, seed, order);
    }
    if (suite == "t2") {
        return check_theorem2_odd(trials, seed, order);
    }
    if (suite == "t3") {
        return check_theorem3(trials, seed, k_grid_t3, order);
    }
    if (suite == "t5") {
        const double a_grid[] = {theorem5_threshold(), 0.5, 0.6, 0.7, 0.8, 0.9, 0.95};
        return check_theorem5(a_grid, trials, seed, order);
    }
    return check_theorem6(a_grid_t6, k_grid_t6, trials, seed, order);
}

int do_verify(const VerifyArgs &args, const CLI::App &cmd, std::ostream &out)
{
    const std::size_t order = resolve_order(args.order, cmd.count("--order") > 0);
    if (args.trials < 1) {
        throw std::invalid_argument("--trials must be >= 1");
    }
    if (args.suite != "all") {
        const VerificationReport report = run_suite(args.suite, args.trials, args.seed, order);
        write_json(out, to_json(report));
        return report.passed ? kExitOk : kExitVerificationFailed;
    }
    json reports = json::array();
    bool passed = true;
    for (const char *suite : {"classical", "t1", "t2", "t3", "t5", "t6"}) {
        const VerificationReport report = run_suite(suite, args.trials, args.seed, order);
        passed = passed && report.passed;
        reports.push_back(to_json(report));
    }
    json j;
    j["suite"] = "all";
    j["passed"] = passed;
    j["verdict"] = passed ? "pass" : "fail";
    j["reports"] = std::move(reports);
    write_json(out, j);
    return passed ? kExitOk : kExitVerificationFailed;
}

} // namespace

std::string format_double(double v)
{
    char buffer[64];
    const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, v, std::chars_format::general, 17);
    if (ec != std::errc{}) {
        throw std::runtime_error("number formatting failed");
    }
    return std::string(buffer, end);
}

double snap_endpoint(double r)
{
    const double third = 1.0 / 3.0;
    const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
    if (std::abs(r - third) <= kSnapTolerance) {
        return third;
    }
    if (std::abs(r - inv_sqrt3) <= kSnapTolerance) {
        return inv_sqrt3;
    }
    return r;
}

std::map<std::string, double> parse_params(const std::string &text)
{
    std::map<std::string, double> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find_first_of(",;", pos);
        if (end == std::string::npos) {
            end = text.size();
        }
        const std::string item = text.substr(pos, end - pos);
        pos = end + 1;
        if (item.empty()) {
            continue;
        }
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw std::invalid_argument("malformed parameter '" + item + "', expected key=value");
        }
        const std::string key = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        double parsed = 0.0;
        const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
        if (ec != std::errc{} || ptr != value.data() + value.size() || !std::isfinite(parsed)) {
            throw std::invalid_argument("parameter '" + key + "' has non-numeric value '" + value + "'");
        }
        out[key] = parsed;
    }
    return out;
}

nlohmann::json to_json(const RadiusResult &result)
{
    json j;
    j["value"] = result.value;
    j["residual"] = result.residual;
    j["threshold_a"] = result.threshold_a ? json(*result.threshold_a) : json(nullptr);
    j["binding_cap"] = result.binding_cap ? json(*result.binding_cap) : json(nullptr);
    j["admissible"] = result.admissible ? json(*result.admissible) : json(nullptr);
    return j;
}

nlohmann::json to_json(const VerificationReport &report)
{
    json j;
    j["suite"] = report.suite;
    j["trials"] = report.trials;
    j["seed"] = report.seed;
    j["r_grid"] = report.r_grid;
    j["tolerance"] = report.tolerance;
    j["max_residual"] = report.max_residual;
    j["worst_check"] = report.worst_check;
    j["worst_witness"] = report.worst_witness;
    j["checks"] = report.checks;
    j["failures"] = report.failures;
    j["passed"] = report.passed;
    j["verdict"] = report.passed ? "pass" : "fail";
    j["informational"] = report.informational;
    return j;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Bohr-type inequality laboratory: sharp radii, functional sweeps, extremal functions and "
                 "seeded verification suites"};
    app.require_subcommand(1);

    RadiusArgs radius_args;
    auto *radius = app.add_subcommand("radius", "Sharp radius and admissibility threshold as JSON");
    radius->add_option("--theorem", radius_args.theorem, "Which radius")
        ->required()
        ->check(CLI::IsMember({"classical", "odd", "psym", "t5", "t6"}));
    radius->add_option("--a", radius_args.a, "|a0| in [0, 1)");
    radius->add_option("--k", radius_args.k, "Dilatation bound in [0, 1]");
    radius->add_option("--p", radius_args.p, "Symmetry order p >= 1");

    SweepArgs sweep_args;
    auto *sweep = app.add_subcommand("sweep", "Evaluate a functional on its extremal function over an r-range as CSV");
    sweep->add_option("--functional", sweep_args.functional, "Functional to evaluate")
        ->required()
        ->check(CLI::IsMember({"bohr", "cor2", "t3", "t5", "t6"}));
    sweep->add_option("--params", sweep_args.params, "key=value list, e.g. a=0.5,k=0.25,lambda=1")->required();
    sweep->add_option("--r-min", sweep_args.r_min, "Smallest radius")->required();
    sweep->add_option("--r-max", sweep_args.r_max, "Largest radius")->required();
    sweep->add_option("--steps", sweep_args.steps, "Number of intervals (rows = steps + 1)")->required();

    ExtremalArgs extremal_args;
    auto *extremal = app.add_subcommand("extremal", "Coefficients of an extremal function as JSON");
    extremal->add_option("--theorem", extremal_args.theorem, "Which extremal")
        ->required()
        ->check(CLI::IsMember({"cor2", "t3", "t5", "t6"}));
    extremal->add_option("--a", extremal_args.a, "a0 (real) with |a0| < 1")->required();
    extremal->add_option("--k", extremal_args.k, "Dilatation bound in [0, 1]");
    extremal->add_option("--lambda", extremal_args.lambda, "Fraction of k carried by the co-analytic part");
    extremal->add_option("--order", extremal_args.order, "Truncation order")->check(CLI::PositiveNumber);

    VerifyArgs verify_args;
    auto *verify = app.add_subcommand("verify", "Run seeded verification suites; exit 2 on failure");
    verify->add_option("--suite", verify_args.suite, "Suite to run")
        ->required()
        ->check(CLI::IsMember({"classical", "t1", "t2", "t3", "t5", "t6", "all"}));
    verify->add_option("--trials", verify_args.trials, "Random trials per suite");
    verify->add_option("--seed", verify_args.seed, "PRNG seed");
    verify->add_option("--order", verify_args.order, "Truncation order")->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) {
        reversed.pop_back(); // program name
    }
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (radius->parsed()) {
            return do_radius(radius_args, *radius, out);
        }
        if (sweep->parsed()) {
            return do_sweep(sweep_args, out, err);
        }
        if (extremal->parsed()) {
            return do_extremal(extremal_args, *extremal, out);
        }
        return do_verify(verify_args, *verify, out);
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace bohrlab::cli
