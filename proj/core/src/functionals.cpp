#include "bohrlab/functionals.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace bohrlab
{

namespace
{

// Radii this close above 1/3 are treated as the endpoint itself.
constexpr double kRadiusSlack = 1e-15;

void require_radius(double r)
{
    if (!(r >= 0.0 && r < 1.0)) {
        throw std::domain_error("radius must lie in [0, 1), got " + std::to_string(r));
    }
}

void require_modulus(double a, const char *what)
{
    if (!(a >= 0.0 && a < 1.0)) {
        throw std::domain_error(std::string(what) + " must lie in [0, 1)");
    }
}

void require_dilatation(double k)
{
    if (!(k >= 0.0 && k <= 1.0)) {
        throw std::domain_error("dilatation bound k must lie in [0, 1]");
    }
}

bool beyond_classical(double r)
{
    return r > kClassicalRadius + kRadiusSlack;
}

double tail_truncation(const TruncatedSeries &f, double r)
{
    if (f.is_exact()) {
        return 0.0;
    }
    if (f.tail()) {
        return f.tail()->remainder(r, f.order());
    }
    return std::numeric_limits<double>::infinity();
}

// Error allowance for a majorant sum: zero when exact or closed-form.
double majorant_truncation(const TruncatedSeries &f)
{
    if (f.is_exact() || f.tail()) {
        return 0.0;
    }
    return std::numeric_limits<double>::infinity();
}

} // namespace

HarmonicPair make_harmonic_pair(TruncatedSeries h, TruncatedSeries g, double k)
{
    require_dilatation(k);
    if (h.order() != g.order()) {
        throw std::invalid_argument("harmonic pair: analytic and co-analytic parts differ in order");
    }
    if (g[0] != Complex{}) {
        throw std::invalid_argument("harmonic pair: co-analytic part must vanish at the origin");
    }
    return HarmonicPair{std::move(h), std::move(g), k};
}

double dilatation_from_quasiconformality(double big_k)
{
    if (!(big_k >= 1.0)) {
        throw std::domain_error("quasiconformality constant K must be >= 1");
    }
    return (big_k - 1.0) / (big_k + 1.0);
}

double majorant_tail(const TruncatedSeries &f, double r)
{
    require_radius(r);
    if (f.tail() && !f.is_exact()) {
        return f.tail()->majorant(r);
    }
    return majorant_eval(f, r, true);
}

double bohr_sum(const TruncatedSeries &f, double r)
{
    return std::abs(f[0]) + majorant_tail(f, r);
}

Evaluation corollary2_lhs(const TruncatedSeries &f, double a0_mod, double r)
{
    require_radius(r);
    require_modulus(a0_mod, "|a0|");
    const double a = a0_mod;
    const double head = (1.0 - (1.0 + a - a * a) * r) / (1.0 - a * r);
    return Evaluation{head + majorant_tail(f, r), majorant_truncation(f), beyond_classical(r)};
}

Evaluation theorem3_lhs(const HarmonicPair &p, double a0_mod, double r)
{
    require_radius(r);
    require_modulus(a0_mod, "|a0|");
    const double a = a0_mod;
    const double head = (1.0 - r * (a + (p.k + 1.0) * (1.0 - a * a))) / (1.0 - r * a);
    const double sums = majorant_tail(p.h, r) + majorant_tail(p.g, r);
    return Evaluation{head + sums, majorant_truncation(p.h) + majorant_truncation(p.g), beyond_classical(r)};
}

Evaluation theorem5_lhs(const TruncatedSeries &f, Complex z)
{
    const double r = std::abs(z);
    require_radius(r);
    const double value = std::abs(f(z)) + majorant_tail(f, r);
    return Evaluation{value, tail_truncation(f, r) + majorant_truncation(f), false};
}

Evaluation theorem6_lhs(const HarmonicPair &p, Complex z)
{
    const double r = std::abs(z);
    require_radius(r);
    const double value = std::abs(p.h(z)) + majorant_tail(p.h, r) + majorant_tail(p.g, r);
    const double bound = tail_truncation(p.h, r) + majorant_truncation(p.h) + majorant_truncation(p.g);
    return Evaluation{value, bound, false};
}

double lemma2_bound(double a, double k, double r)
{
    require_modulus(a, "a");
    require_dilatation(k);
    if (!(r >= 0.0 && r <= kClassicalRadius + kRadiusSlack)) {
        throw std::domain_error("lemma2_bound: r must lie in [0, 1/3]");
    }
    return (1.0 + k) * r * (1.0 - a * a) / (1.0 - r * a);
}

double schwarz_pick_bound(double a, double r)
{
    require_modulus(a, "a");
    require_radius(r);
    return (r + a) / (1.0 + a * r);
}

} // namespace bohrlab
