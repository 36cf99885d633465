// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "bohrlab/functionals.hpp"
#include "bohrlab/radii.hpp"
#include "bohrlab/verifier.hpp"
#include "bohrlab/witnesses.hpp"
#include "oracles.hpp"

using namespace bohrlab;

namespace
{

const double kThird = 1.0 / 3.0;
const double kSqrt3 = std::sqrt(3.0);

struct Criterion
{
    const char *name;
    std::function<std::string()> run; // empty string on pass, otherwise the first failure
};

std::string fmt(const char *format, double x, double y = 0.0, double z = 0.0)
{
    char buffer[256];
    std::snprintf(buffer, sizeof buffer, format, x, y, z);
    return buffer;
}

std::string odd_radius()
{
    const RadiusResult r = odd_bohr_radius();
    const double x = r.value;
    const double residual = std::abs(8 * x * x * x * x + x * x - 6 * x + 1);
    if (std::abs(x - 0.789991) > 1e-6) {
        return fmt("root %.12f", x);
    }
    if (residual > 1e-12 || r.residual > 1e-12) {
        return fmt("residual %.3e", residual);
    }
    return {};
}

std::string theorem5_radii()
{
    const double at_threshold = theorem5_radius(2.0 * kSqrt3 - 3.0).value;
    if (std::abs(at_threshold - kThird) > 1e-12) {
        return fmt("r at threshold %.17g", at_threshold);
    }
    if (theorem5_radius(0.0).value != 0.5) {
        return fmt("r(0) %.17g", theorem5_radius(0.0).value);
    }
    const double limit = theorem5_radius(std::nextafter(1.0, 0.0)).value;
    if (std::abs(limit - (std::sqrt(5.0) - 2.0)) > 1e-12) {
        return fmt("r(1-) %.17g", limit);
    }
    return {};
}

std::string theorem6_radii()
{
    for (int i = 0; i < 100; ++i) {
        const double a = i / 100.0;
        if (std::abs(theorem6_radius(a, 0.0).value - theorem5_radius(a).value) > 1e-12) {
            return fmt("r(a,0) != r_a at a=%g", a);
        }
    }
    if (std::abs(theorem6_threshold(0.0) - (2.0 * kSqrt3 - 3.0)) > 1e-12) {
        return fmt("alpha_0 %.17g", theorem6_threshold(0.0));
    }
    for (const double k : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const double r = theorem6_radius(theorem6_threshold(k), k).value;
        if (std::abs(r - kThird) > 1e-10) {
            return fmt("r(alpha_k, k) = %.17g at k=%g", r, k);
        }
    }
    return {};
}

std::string corollary2_identity()
{
    for (int i = 0; i < 50; ++i) {
        const double a = 0.95 * i / 49.0;
        const TruncatedSeries f = extremal_corollary2(a);
        for (int j = 0; j < 50; ++j) {
            const double r = kThird * j / 49.0;
            const double v = corollary2_lhs(f, a, r).value;
            if (std::abs(v - 1.0) > 1e-10) {
                return fmt("a=%g r=%g lhs=%.17g", a, r, v);
            }
        }
    }
    return {};
}

std::string theorem3_identity()
{
    for (int i = 0; i < 20; ++i) {
        const double a = 0.95 * i / 19.0;
        for (const double k : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            const HarmonicPair p = extremal_theorem3(a, k);
            for (int j = 0; j < 20; ++j) {
                const double r = kThird * j / 19.0;
                const double v = theorem3_lhs(p, a, r).value;
                if (std::abs(v - 1.0) > 1e-10) {
                    return fmt("a=%g k=%g lhs=%.17g", a, k, v);
                }
            }
        }
    }
    return {};
}

std::string sharpness()
{
    for (const double a : {0.5, 0.6, 0.8}) {
        const VerificationReport r = sharpness_certificate(SharpClaim::theorem5, {a, 0.0});
        if (!r.passed) {
            return fmt("theorem5 a=%g residual %.3e", a, r.max_residual);
        }
    }
    for (const double k : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        std::vector<double> as = {theorem6_threshold(k)};
        for (int i = 5; i <= 9; ++i) {
            as.push_back(i / 10.0);
        }
        for (const double a : as) {
            const VerificationReport r = sharpness_certificate(SharpClaim::theorem6, {a, k});
            if (!r.passed) {
                return fmt("theorem6 a=%g k=%g residual %.3e", a, k, r.max_residual);
            }
        }
    }
    return {};
}

std::string property_suites()
{
    const std::array<double, 3> k_grid = {0.0, 0.5, 1.0};
    const auto t1 = check_theorem1(1000, 42);
    const auto t2 = check_theorem2_odd(1000, 42);
    const auto t3 = check_theorem3(500, 42, k_grid);
    for (const auto *r : {&t1, &t2, &t3}) {
        if (!r->passed || r->max_residual > 1e-9) {
            return r->suite + fmt(" failed: residual %.3e", r->max_residual) + " at " + r->worst_check;
        }
    }
    if (!(t1 == check_theorem1(1000, 42)) || !(t2 == check_theorem2_odd(1000, 42))
        || !(t3 == check_theorem3(500, 42, k_grid))) {
        return "reports differ between identical runs";
    }
    return {};
}

std::string convolution_identity()
{
    const std::size_t n = kDefaultOrder;
    for (std::uint64_t t = 0; t < 100; ++t) {
        Rng rng(trial_seed(2024, t));
        const QuasiTriple q = build_quasi_triple(random_polynomial(rng, 8, 2.0, n), random_bounded(rng, n),
                                                 random_schwarz(rng, t % 2 == 1, n));
        const oracle::Poly g(q.g.coeffs().begin(), q.g.coeffs().end());
        const oracle::Poly phi(q.phi.coeffs().begin(), q.phi.coeffs().end());
        const oracle::Poly w(q.omega.coeffs().begin(), q.omega.coeffs().end());
        const oracle::Poly ref = oracle::quasi_subordinate(g, phi, w, n);
        for (std::size_t k = 0; k <= n; ++k) {
            if (std::abs(q.f[k] - ref[k]) > 1e-12) {
                return fmt("triple %g coefficient %g differs by %.3e", double(t), double(k), std::abs(q.f[k] - ref[k]));
            }
        }
    }
    return {};
}

std::string classical_sanity()
{
    for (std::uint64_t t = 0; t < 1000; ++t) {
        Rng rng(trial_seed(42, t));
        const double v = bohr_sum(random_bounded(rng), kThird);
        if (v > 1.0 + 1e-9) {
            return fmt("witness %g: bohr sum %.17g", double(t), v);
        }
    }
    for (int i = 1; i < 1000; ++i) {
        const double a = i / 1000.0;
        const double v = bohr_sum(mobius_series(a), kThird);
        const double closed = a + (1.0 - a * a) / (3.0 - a);
        if (std::abs(v - closed) > 1e-12 || !(v < 1.0)) {
            return fmt("mobius a=%g: %.17g vs %.17g", a, v, closed);
        }
    }
    return {};
}

std::string universal_radius_sweep()
{
    const double r = std::sqrt(5.0) - 2.0;
    for (int i = 0; i < 100; ++i) {
        const double a = i / 100.0;
        const double v = theorem5_lhs(extremal_theorem5(a), -r).value;
        if (v > 1.0 + 1e-9) {
            return fmt("a=%g lhs=%.17g", a, v);
        }
    }
    return {};
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {"odd-function Bohr radius 0.789991", odd_radius},
        {"r_a at threshold, zero and a -> 1", theorem5_radii},
        {"r_{a,k} reduction, alpha_0 and r = 1/3 at alpha_k", theorem6_radii},
        {"Moebius extremal identity on 50x50 grid", corollary2_identity},
        {"harmonic extremal identity on 20x20x5 grid", theorem3_identity},
        {"sharpness certificates at r_a and r_{a,k}", sharpness},
        {"property suites at seed 42", property_suites},
        {"quasi-subordination convolution identity", convolution_identity},
        {"classical Bohr sanity at 1/3", classical_sanity},
        {"universal radius sqrt(5) - 2 sweep", universal_radius_sweep},
    };

    const auto start = std::chrono::steady_clock::now();
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string problem;
        try {
            problem = criteria[i].run();
        } catch (const std::exception &e) {
            problem = std::string("exception: ") + e.what();
        }
        if (problem.empty()) {
            std::printf("PASS %2zu %s\n", i + 1, criteria[i].name);
        } else {
            ++failed;
            std::printf("FAIL %2zu %s: %s\n", i + 1, criteria[i].name, problem.c_str());
        }
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%zu/%zu criteria passed in %.2f s\n", criteria.size() - failed, criteria.size(), seconds);
    return failed == 0 ? 0 : 1;
}
