#include "bohrlab/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "bohrlab/functionals.hpp"
#include "bohrlab/radii.hpp"
#include "bohrlab/witnesses.hpp"

namespace bohrlab
{

namespace
{

using Witness = std::map<std::string, double>;

constexpr double kStructuralZero = 1e-14;
constexpr std::size_t kAngles = 16;
constexpr double kMaxRandomA = 0.95;
// Moebius parameter whose Bohr sum exceeds 1 just beyond r = 1/3.
constexpr double kClassicalCapWitness = 0.999;

// Residual for a condition that must hold strictly: negative margin when it
// holds, pushed above any tolerance when it does not.
double gate(bool holds, double margin)
{
    return holds ? -std::abs(margin) : 1.0 + std::abs(margin);
}

class Tally
{
public:
    explicit Tally(double tolerance) : tolerance_(tolerance) {}

    template <typename MakeWitness>
    void record(double residual, const char *check, MakeWitness &&make_witness)
    {
        ++checks_;
        if (residual > tolerance_) {
            ++failures_;
        }
        if (checks_ == 1 || residual > max_residual_) {
            max_residual_ = residual;
            worst_check_ = check;
            worst_witness_ = make_witness();
        }
    }

    void merge(const Tally &other)
    {
        if (other.checks_ == 0) {
            return;
        }
        if (checks_ == 0 || other.max_residual_ > max_residual_) {
            max_residual_ = other.max_residual_;
            worst_check_ = other.worst_check_;
            worst_witness_ = other.worst_witness_;
        }
        checks_ += other.checks_;
        failures_ += other.failures_;
    }

    std::size_t failures() const { return failures_; }

    VerificationReport report(std::string suite, std::size_t trials, std::uint64_t seed, std::vector<double> grid) const
    {
        VerificationReport out;
        out.suite = std::move(suite);
        out.trials = trials;
        out.seed = seed;
        out.r_grid = std::move(grid);
        out.tolerance = tolerance_;
        out.max_residual = max_residual_;
        out.worst_check = worst_check_;
        out.worst_witness = worst_witness_;
        out.checks = checks_;
        out.failures = failures_;
        out.passed = checks_ > 0 && max_residual_ <= tolerance_;
        return out;
    }

private:
    double tolerance_;
    double max_residual_ = -1.0;
    std::string worst_check_;
    Witness worst_witness_;
    std::size_t checks_ = 0;
    std::size_t failures_ = 0;
};

// Runs `trial(index, order, tally)` for every trial. A trial that fails is
// regenerated at twice the order and only that re-evaluation is kept, which
// separates truncation artefacts from genuine violations.
template <typename Trial>
void run_trials(Tally &total, std::size_t trials, std::size_t order, Trial &&trial)
{
    for (std::size_t i = 0; i < trials; ++i) {
        Tally local(kViolationTolerance);
        trial(i, order, local);
        if (local.failures() > 0) {
            local = Tally(kViolationTolerance);
            trial(i, 2 * order, local);
        }
        total.merge(local);
    }
}

void require_trials(std::size_t trials)
{
    if (trials < 1) {
        throw std::invalid_argument("verification needs at least one trial");
    }
}

double as_double(std::size_t v)
{
    return static_cast<double>(v);
}

// Moebius extremal of the harmonic inequalities with co-analytic scale s,
// reported against dilatation bound k >= s.
HarmonicPair scaled_extremal(double a, double s, double k, std::size_t order)
{
    HarmonicPair p = extremal_theorem3(a, s, order);
    p.k = k;
    return p;
}

void classical_sanity(Tally &tally, const TruncatedSeries &bounded, std::size_t trial)
{
    const double r = kClassicalRadius;
    tally.record(bohr_sum(bounded, r) - 1.0, "classical", [&] {
        return Witness{{"trial", as_double(trial)}, {"r", r}};
    });
}

} // namespace

std::vector<double> chebyshev_grid(double radius, std::size_t n)
{
    if (n == 0) {
        throw std::invalid_argument("grid needs at least one point");
    }
    std::vector<double> grid(n);
    for (std::size_t i = 1; i <= n; ++i) {
        const double t = std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
        grid[i - 1] = 0.5 * radius * (1.0 - std::cos(t));
    }
    grid.back() = radius;
    return grid;
}

VerificationReport check_classical(std::size_t trials, std::uint64_t seed, std::size_t order)
{
    require_trials(trials);
    Tally total(kViolationTolerance);
    run_trials(total, trials, order, [&](std::size_t i, std::size_t n, Tally &tally) {
        Rng rng(trial_seed(seed, i));
        classical_sanity(tally, random_bounded(rng, n), i);
    });
    return total.report("classical", trials, seed, {kClassicalRadius});
}

VerificationReport check_theorem1(std::size_t trials, std::uint64_t seed, std::size_t order)
{
    require_trials(trials);
    const std::vector<double> grid = chebyshev_grid(kClassicalRadius);
    Tally total(kViolationTolerance);
    run_trials(total, trials, order, [&](std::size_t i, std::size_t n, Tally &tally) {
        Rng rng(trial_seed(seed, i));
        // 0: general quasi-subordination, 1: subordination (phi = 1), 2: majorization (omega = z)
        const int mode = rng.uniform_int(0, 2);
        TruncatedSeries g = random_polynomial(rng, 8, 2.0, n);
        TruncatedSeries phi = mode == 1 ? unit_series(n) : random_bounded(rng, n);
        TruncatedSeries omega = mode == 2 ? identity_series(n) : random_schwarz(rng, false, n);
        const QuasiTriple triple = build_quasi_triple(std::move(g), std::move(phi), std::move(omega));

        for (const double r : grid) {
            const double residual = bohr_sum(triple.f, r) - bohr_sum(triple.g, r);
            tally.record(residual, "theorem1", [&] {
                return Witness{{"trial", as_double(i)},
                               {"mode", mode},
                               {"r", r},
                               {"degree", as_double(*triple.g.exact_degree())}};
            });
        }
        classical_sanity(tally, triple.phi, i);
        classical_sanity(tally, triple.omega, i);
    });
    return total.report("theorem1", trials, seed, grid);
}

VerificationReport check_theorem2_odd(std::size_t trials, std::uint64_t seed, std::size_t order)
{
    require_trials(trials);
    const std::vector<double> grid = chebyshev_grid(p_symmetric_radius(2).value);
    Tally total(kViolationTolerance);
    run_trials(total, trials, order, [&](std::size_t i, std::size_t n, Tally &tally) {
        Rng rng(trial_seed(seed, i));
        const TruncatedSeries even_part = random_polynomial(rng, 4, 2.0, n / 2);
        const TruncatedSeries g = mul(identity_series(n), p_symmetric_lift(even_part, 2, n));
        const TruncatedSeries omega = random_schwarz(rng, true, n);
        const TruncatedSeries f = compose(g, omega);

        double even_leak = 0.0;
        for (std::size_t k = 0; k <= n; k += 2) {
            even_leak = std::max(even_leak, std::abs(f[k]));
        }
        tally.record(gate(even_leak < kStructuralZero, kStructuralZero - even_leak), "theorem2-even-coefficients",
                     [&] { return Witness{{"trial", as_double(i)}, {"leak", even_leak}}; });

        for (const double r : grid) {
            double f_sum = 0.0;
            double g_sum = 0.0;
            double worst = -1.0;
            std::size_t worst_m = 0;
            const double r2 = r * r;
            double rk = r;
            for (std::size_t m = 1; 2 * m - 1 <= n; ++m, rk *= r2) {
                f_sum += std::abs(f[2 * m - 1]) * rk;
                g_sum += std::abs(g[2 * m - 1]) * rk;
                if (m == 1 || f_sum - g_sum > worst) {
                    worst = f_sum - g_sum;
                    worst_m = m;
                }
            }
            tally.record(worst, "theorem2-partial-sums", [&] {
                return Witness{{"trial", as_double(i)}, {"r", r}, {"m", as_double(worst_m)}};
            });
        }
        classical_sanity(tally, omega, i);
    });
    return total.report("theorem2", trials, seed, grid);
}

VerificationReport check_theorem3(std::size_t trials, std::uint64_t seed, std::span<const double> k_grid,
                                  std::size_t order)
{
    require_trials(trials);
    if (k_grid.empty()) {
        throw std::invalid_argument("check_theorem3 needs at least one k");
    }
    for (const double k : k_grid) {
        if (!(k >= 0.0 && k <= 1.0)) {
            throw std::domain_error("check_theorem3: k must lie in [0, 1]");
        }
    }
    const std::vector<double> grid = chebyshev_grid(kClassicalRadius);
    Tally total(kViolationTolerance);

    // Extremal family: lambda = k gives equality, lambda * k for lambda < 1 approaches it from below.
    const double lambdas[] = {0.9, 0.99, 0.999, 1.0};
    for (std::size_t ai = 0; ai < 10; ++ai) {
        const double a = 0.095 * static_cast<double>(ai);
        for (const double k : k_grid) {
            for (const double r : grid) {
                double previous = -1.0;
                for (const double lambda : lambdas) {
                    const HarmonicPair p = scaled_extremal(a, lambda * k, k, order);
                    const double lhs = theorem3_lhs(p, a, r).value;
                    auto witness = [&] { return Witness{{"a", a}, {"k", k}, {"r", r}, {"lambda", lambda}}; };
                    if (lambda == 1.0) {
                        total.record(std::abs(lhs - 1.0), "theorem3-extremal-equality", witness);
                    } else {
                        total.record(lhs - 1.0, "theorem3-extremal-approach", witness);
                    }
                    total.record(previous - lhs, "theorem3-extremal-monotone", witness);
                    previous = lhs;
                }
            }
        }
    }

    run_trials(total, trials, order, [&](std::size_t i, std::size_t n, Tally &tally) {
        Rng rng(trial_seed(seed, i));
        const double a_draw = rng.uniform(0.0, kMaxRandomA);
        const TruncatedSeries h = random_bounded_at(rng, a_draw, n);
        const TruncatedSeries omega_tilde = random_bounded(rng, n);
        const double a = std::min(std::abs(h[0]), std::nextafter(1.0, 0.0));

        for (const double k : k_grid) {
            const HarmonicPair p = harmonic_witness(h, k, omega_tilde);
            for (const double r : grid) {
                auto witness = [&] { return Witness{{"trial", as_double(i)}, {"a", a}, {"k", k}, {"r", r}}; };
                tally.record(theorem3_lhs(p, a, r).value - 1.0, "theorem3", witness);
                const double sums = majorant_tail(p.h, r) + majorant_tail(p.g, r);
                tally.record(sums - lemma2_bound(a, k, r), "lemma2", witness);
            }
            const double r = kClassicalRadius;
            tally.record(majorant_tail(p.g, r) - k * majorant_tail(p.h, r), "lemma2-integrated", [&] {
                return Witness{{"trial", as_double(i)}, {"a", a}, {"k", k}, {"r", r}};
            });
        }
        classical_sanity(tally, h, i);
    });
    return total.report("theorem3", trials, seed, grid);
}

VerificationReport check_theorem5(std::span<const double> a_grid, std::size_t trials, std::uint64_t seed,
                                  std::size_t order)
{
    require_trials(trials);
    if (a_grid.empty()) {
        throw std::invalid_argument("check_theorem5 needs at least one a");
    }
    for (const double a : a_grid) {
        if (!theorem5_radius(a).admissible.value_or(false)) {
            throw std::invalid_argument("check_theorem5: a = " + std::to_string(a) + " is below 2 sqrt(3) - 3");
        }
    }
    Tally total(kViolationTolerance);
    std::vector<double> radii;

    for (const double a : a_grid) {
        const double ra = theorem5_radius(a).value;
        radii.push_back(ra);
        const TruncatedSeries f = extremal_theorem5(a, order);
        for (const double r : chebyshev_grid(ra)) {
            const double lhs = theorem5_lhs(f, -r).value;
            total.record(lhs - 1.0, "theorem5-extremal", [&] { return Witness{{"a", a}, {"r", r}}; });
        }
        const double at = theorem5_lhs(f, -ra).value;
        total.record(std::abs(at - 1.0), "theorem5-sharpness", [&] { return Witness{{"a", a}, {"r", ra}}; });
        const double beyond = theorem5_lhs(f, -(ra + kBeyondRadiusStep)).value;
        total.record(gate(beyond > 1.0, beyond - 1.0), "theorem5-beyond-radius", [&] {
            return Witness{{"a", a}, {"r", ra + kBeyondRadiusStep}};
        });
    }

    // Universal radius sqrt(5) - 2, valid for every a < 1.
    const double universal = std::sqrt(5.0) - 2.0;
    for (std::size_t j = 0; j < 100; ++j) {
        const double a = static_cast<double>(j) / 100.0;
        const double lhs = theorem5_lhs(extremal_theorem5(a, order), -universal).value;
        total.record(lhs - 1.0, "theorem5-universal-radius", [&] { return Witness{{"a", a}, {"r", universal}}; });
    }

    run_trials(total, trials, order, [&](std::size_t i, std::size_t n, Tally &tally) {
        Rng rng(trial_seed(seed, i));
        const double a = a_grid[i % a_grid.size()];
        const double ra = theorem5_radius(a).value;
        const TruncatedSeries f = random_bounded_at(rng, a, n);
        const double offset = rng.uniform(0.0, 2.0 * std::numbers::pi / kAngles);
        for (const double r : chebyshev_grid(ra)) {
            for (std::size_t j = 0; j < kAngles; ++j) {
                const double theta = offset + 2.0 * std::numbers::pi * static_cast<double>(j) / kAngles;
                const double lhs = theorem5_lhs(f, std::polar(r, theta)).value;
                tally.record(lhs - 1.0, "theorem5", [&] {
                    return Witness{{"trial", as_double(i)}, {"a", a}, {"r", r}, {"theta", theta}};
                });
            }
        }
        const double a_any = rng.uniform(0.0, 0.99);
        const TruncatedSeries f_any = random_bounded_at(rng, a_any, n);
        for (std::size_t j = 0; j < kAngles; ++j) {
            const double theta = offset + 2.0 * std::numbers::pi * static_cast<double>(j) / kAngles;
            const double lhs = theorem5_lhs(f_any, std::polar(universal, theta)).value;
            tally.record(lhs - 1.0, "theorem5-universal-radius", [&] {
                return Witness{{"trial", as_double(i)}, {"a", a_any}, {"r", universal}, {"theta", theta}};
            });
        }
        classical_sanity(tally, f, i);
    });
    return total.report("theorem5", trials, seed, radii);
}

VerificationReport check_theorem6(std::span<const double> a_grid, std::span<const double> k_grid, std::size_t trials,
                                  std::uint64_t seed, std::size_t order)
{
    require_trials(trials);
    if (a_grid.empty() || k_grid.empty()) {
        throw std::invalid_argument("check_theorem6 needs non-empty a and k grids");
    }
    std::vector<std::pair<double, double>> pairs;
    for (const double a : a_grid) {
        for (const double k : k_grid) {
            if (!theorem6_radius(a, k).admissible.value_or(false)) {
                throw std::invalid_argument("check_theorem6: a = " + std::to_string(a) + " is below alpha_k for k = "
                                            + std::to_string(k));
            }
            pairs.emplace_back(a, k);
        }
    }
    Tally total(kViolationTolerance);
    std::vector<double> radii;

    const double lambdas[] = {0.9, 0.99, 0.999, 1.0};
    for (const auto &[a, k] : pairs) {
        const double rak = theorem6_radius(a, k).value;
        radii.push_back(rak);
        double previous = -1.0;
        for (const double lambda : lambdas) {
            const HarmonicPair p = scaled_extremal(a, lambda * k, k, order);
            const double lhs = theorem6_lhs(p, rak).value;
            auto witness = [&] { return Witness{{"a", a}, {"k", k}, {"r", rak}, {"lambda", lambda}}; };
            if (lambda == 1.0) {
                total.record(std::abs(lhs - 1.0), "theorem6-sharpness", witness);
            } else {
                total.record(lhs - 1.0, "theorem6-extremal-approach", witness);
            }
            total.record(previous - lhs, "theorem6-extremal-monotone", witness);
            previous = lhs;
        }
        const HarmonicPair limit = scaled_extremal(a, k, k, order);
        for (const double r : chebyshev_grid(rak)) {
            const double lhs = theorem6_lhs(limit, r).value;
            total.record(lhs - 1.0, "theorem6-extremal", [&] { return Witness{{"a", a}, {"k", k}, {"r", r}}; });
        }
        const double beyond = theorem6_lhs(limit, rak + kBeyondRadiusStep).value;
        total.record(gate(beyond > 1.0, beyond - 1.0), "theorem6-beyond-radius", [&] {
            return Witness{{"a", a}, {"k", k}, {"r", rak + kBeyondRadiusStep}};
        });
    }

    run_trials(total, trials, order, [&](std::size_t i, std::size_t n, Tally &tally) {
        Rng rng(trial_seed(seed, i));
        const auto [a, k] = pairs[i % pairs.size()];
        const double rak = theorem6_radius(a, k).value;
        const TruncatedSeries h = random_bounded_at(rng, a, n);
        const TruncatedSeries omega_tilde = random_bounded(rng, n);
        const HarmonicPair p = harmonic_witness(h, k, omega_tilde);
        const double offset = rng.uniform(0.0, 2.0 * std::numbers::pi / kAngles);
        for (const double r : chebyshev_grid(rak)) {
            for (std::size_t j = 0; j < kAngles; ++j) {
                const double theta = offset + 2.0 * std::numbers::pi * static_cast<double>(j) / kAngles;
                const double lhs = theorem6_lhs(p, std::polar(r, theta)).value;
                tally.record(lhs - 1.0, "theorem6", [&] {
                    return Witness{{"trial", as_double(i)}, {"a", a}, {"k", k}, {"r", r}, {"theta", theta}};
                });
            }
        }
        classical_sanity(tally, h, i);
    });
    return total.report("theorem6", trials, seed, radii);
}

VerificationReport sharpness_certificate(SharpClaim claim, SharpnessParams params, std::size_t order)
{
    const double a = params.a;
    const double k = params.k;
    Tally tally(kSharpnessTolerance);
    std::vector<double> grid;

    // Equality for every r <= 1/3, and the 1/3 cap itself cannot be raised.
    auto equality_on_interval = [&](auto &&lhs_at, const char *check) {
        grid = chebyshev_grid(kClassicalRadius);
        grid.insert(grid.begin(), 0.0);
        for (const double r : grid) {
            tally.record(std::abs(lhs_at(r) - 1.0), check, [&] { return Witness{{"a", a}, {"k", k}, {"r", r}}; });
        }
        const double r = kClassicalRadius + kBeyondRadiusStep;
        const double beyond = bohr_sum(mobius_series(kClassicalCapWitness, order), r);
        tally.record(gate(beyond > 1.0, beyond - 1.0), "classical-cap", [&] {
            return Witness{{"a", kClassicalCapWitness}, {"r", r}};
        });
        grid.push_back(r);
    };

    switch (claim) {
    case SharpClaim::corollary2: {
        const TruncatedSeries f = extremal_corollary2(a, order);
        equality_on_interval([&](double r) { return corollary2_lhs(f, a, r).value; }, "corollary2-equality");
        return tally.report("sharpness/corollary2", 1, 0, grid);
    }
    case SharpClaim::theorem3: {
        const HarmonicPair p = extremal_theorem3(a, k, order);
        equality_on_interval([&](double r) { return theorem3_lhs(p, a, r).value; }, "theorem3-equality");
        return tally.report("sharpness/theorem3", 1, 0, grid);
    }
    case SharpClaim::theorem5: {
        const RadiusResult radius = theorem5_radius(a);
        if (!radius.admissible.value_or(false)) {
            throw std::invalid_argument("sharpness_certificate: a is below 2 sqrt(3) - 3");
        }
        const TruncatedSeries f = extremal_theorem5(a, order);
        const double at = theorem5_lhs(f, -radius.value).value;
        tally.record(std::abs(at - 1.0), "theorem5-at-radius", [&] { return Witness{{"a", a}, {"r", radius.value}}; });
        const double r_beyond = radius.value + kBeyondRadiusStep;
        const double beyond = theorem5_lhs(f, -r_beyond).value;
        tally.record(gate(beyond > 1.0, beyond - 1.0), "theorem5-beyond-radius",
                     [&] { return Witness{{"a", a}, {"r", r_beyond}}; });
        return tally.report("sharpness/theorem5", 1, 0, {radius.value, r_beyond});
    }
    case SharpClaim::theorem6: {
        const RadiusResult radius = theorem6_radius(a, k);
        if (!radius.admissible.value_or(false)) {
            throw std::invalid_argument("sharpness_certificate: a is below alpha_k");
        }
        const HarmonicPair p = extremal_theorem3(a, k, order);
        const double at = theorem6_lhs(p, radius.value).value;
        tally.record(std::abs(at - 1.0), "theorem6-at-radius",
                     [&] { return Witness{{"a", a}, {"k", k}, {"r", radius.value}}; });
        const double r_beyond = radius.value + kBeyondRadiusStep;
        const double beyond = theorem6_lhs(p, r_beyond).value;
        tally.record(gate(beyond > 1.0, beyond - 1.0), "theorem6-beyond-radius",
                     [&] { return Witness{{"a", a}, {"k", k}, {"r", r_beyond}}; });
        return tally.report("sharpness/theorem6", 1, 0, {radius.value, r_beyond});
    }
    case SharpClaim::odd_bohr:
        throw std::domain_error("no extremal function is available for the odd-function Bohr radius; "
                                "its sharpness cannot be certified numerically");
    }
    throw std::invalid_argument("unknown sharpness claim");
}

} // namespace bohrlab
