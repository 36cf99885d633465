#include "bohrlab/radii.hpp"

#include <cmath>
#include <stdexcept>

namespace bohrlab
{

namespace
{

constexpr double kRootBracketWidth = 1e-14;
constexpr double kScanStep = 1e-3;
// Slack when comparing a against an admissibility threshold.
constexpr double kThresholdSlack = 1e-12;

void require_a(double a)
{
    if (!(a >= 0.0 && a < 1.0)) {
        throw std::domain_error("a = |a0| must lie in [0, 1)");
    }
}

void require_k(double k)
{
    if (!(k >= 0.0 && k <= 1.0)) {
        throw std::domain_error("dilatation bound k must lie in [0, 1]");
    }
}

} // namespace

RadiusResult classical_radius()
{
    return RadiusResult{1.0 / 3.0, std::nullopt, std::nullopt, std::nullopt, 0.0};
}

RadiusResult p_symmetric_radius(int p)
{
    if (p < 1) {
        throw std::domain_error("p-symmetric radius needs p >= 1");
    }
    if (p == 1) {
        return classical_radius();
    }
    if (p == 2) {
        return RadiusResult{1.0 / std::sqrt(3.0), std::nullopt, std::nullopt, std::nullopt, 0.0};
    }
    return RadiusResult{std::exp(-std::log(3.0) / p), std::nullopt, std::nullopt, std::nullopt, 0.0};
}

double odd_bohr_quartic(double r)
{
    return (((8.0 * r) * r + 1.0) * r - 6.0) * r + 1.0;
}

RadiusResult odd_bohr_radius()
{
    // Walk down from 1 until the sign changes; the quartic is positive at 1
    // and has a second positive root near 0.17 that must not be picked up.
    double hi = 1.0;
    double lo = hi - kScanStep;
    while (odd_bohr_quartic(lo) > 0.0) {
        hi = lo;
        lo -= kScanStep;
    }
    while (hi - lo > kRootBracketWidth) {
        const double mid = 0.5 * (lo + hi);
        if (odd_bohr_quartic(mid) > 0.0) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    const double root = 0.5 * (lo + hi);
    return RadiusResult{root, std::nullopt, std::nullopt, std::nullopt, std::abs(odd_bohr_quartic(root))};
}

double theorem5_threshold()
{
    return 2.0 * std::sqrt(3.0) - 3.0;
}

RadiusResult theorem5_radius(double a)
{
    require_a(a);
    const double s = 1.0 + a;
    const double value = 1.0 / (std::sqrt(s * s + a * a) + s);
    const double threshold = theorem5_threshold();
    return RadiusResult{value, threshold, 1.0 / 3.0, a >= threshold - kThresholdSlack,
                        std::abs(quadratic_residual(Quadratic::eq9, a, 0.0, value))};
}

double theorem6_threshold(double k)
{
    require_k(k);
    return (std::sqrt(k * k + 12.0 * k + 12.0) - (2.0 * k + 3.0)) / (k + 1.0);
}

double theorem6_discriminant_root(double a, double k)
{
    return std::sqrt(a * a * (k * k + 8.0 * k + 8.0) + 2.0 * a * (k * k + 6.0 * k + 4.0) + (k + 2.0) * (k + 2.0));
}

RadiusResult theorem6_radius(double a, double k)
{
    require_a(a);
    require_k(k);
    // (B - b) / (2A) rewritten as 2 / (B + b): same root, no cancellation
    // as a -> 0, and it reduces to 1 / (k + 2) at a = 0.
    const double b = (k + 2.0) * (1.0 + a);
    const double value = 2.0 / (theorem6_discriminant_root(a, k) + b);
    const double threshold = theorem6_threshold(k);
    return RadiusResult{value, threshold, 1.0 / 3.0, a >= threshold - kThresholdSlack,
                        std::abs(quadratic_residual(Quadratic::eq10, a, k, value))};
}

double quadratic_residual(Quadratic which, double a, double k, double r)
{
    switch (which) {
    case Quadratic::eq9:
        return r * r * a * a + 2.0 * r * a + 2.0 * r - 1.0;
    case Quadratic::eq10:
        return a * (a + k + k * a) * r * r + (k + 2.0) * (a + 1.0) * r - 1.0;
    case Quadratic::eq11:
        return r * r * (k + 1.0) * a * a + r * (k * r + k + 2.0) * a + r * (k + 2.0) - 1.0;
    }
    throw std::invalid_argument("unknown quadratic");
}

} // namespace bohrlab
