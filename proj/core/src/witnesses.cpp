#include "bohrlab/witnesses.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace bohrlab
{

double Rng::uniform(double lo, double hi)
{
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

int Rng::uniform_int(int lo, int hi)
{
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
}

Complex Rng::unit_phase()
{
    return std::polar(1.0, uniform(0.0, 2.0 * std::numbers::pi));
}

Complex Rng::polar(double max_modulus)
{
    const double rho = uniform(0.0, max_modulus);
    return rho * unit_phase();
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial)
{
    std::uint64_t z = seed + (trial + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

BlaschkeSpec random_blaschke_spec(Rng &rng)
{
    BlaschkeSpec spec;
    const int count = rng.uniform_int(0, static_cast<int>(kMaxBlaschkeZeros));
    for (int i = 0; i < count; ++i) {
        spec.zeros.push_back(rng.polar(kMaxBlaschkeZeroModulus));
    }
    spec.rotation = rng.unit_phase();
    return spec;
}

TruncatedSeries random_schwarz(Rng &rng, bool odd, std::size_t order)
{
    const BlaschkeSpec spec = random_blaschke_spec(rng);
    if (!odd) {
        return blaschke_series(spec, order, true);
    }
    const TruncatedSeries base = blaschke_series(spec, order / 2, false);
    return mul(identity_series(order), p_symmetric_lift(base, 2, order));
}

TruncatedSeries random_schwarz(std::uint64_t seed, bool odd, std::size_t order)
{
    Rng rng(seed);
    return random_schwarz(rng, odd, order);
}

TruncatedSeries random_bounded(Rng &rng, std::size_t order)
{
    return blaschke_series(random_blaschke_spec(rng), order, false);
}

TruncatedSeries random_bounded_at(Rng &rng, double a, std::size_t order)
{
    const TruncatedSeries psi = random_schwarz(rng, false, order);
    const Complex rotation = rng.unit_phase();
    return compose(mobius_series(a, order), psi).scaled(rotation);
}

TruncatedSeries random_polynomial(Rng &rng, std::size_t max_degree, double max_modulus, std::size_t order)
{
    const auto degree = static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(max_degree)));
    std::vector<Complex> c(degree + 1);
    for (auto &x : c) {
        x = rng.polar(max_modulus);
    }
    return make_series(c, order);
}

QuasiTriple build_quasi_triple(TruncatedSeries g, TruncatedSeries phi, TruncatedSeries omega)
{
    if (!g.exact_degree()) {
        throw std::invalid_argument("quasi-subordination outer function must be a polynomial");
    }
    if (std::abs(omega[0]) >= kComposeConstantTolerance) {
        throw std::invalid_argument("quasi-subordination inner function must vanish at the origin");
    }
    if (g.order() != phi.order() || g.order() != omega.order()) {
        throw std::invalid_argument("quasi-subordination triple with mismatched orders");
    }
    TruncatedSeries f = mul(phi, compose(g, omega));

    const std::size_t n = g.order();
    const std::size_t degree = *g.exact_degree();
    std::vector<Complex> b_conv(n + 1);
    TruncatedSeries omega_pow = unit_series(n);
    for (std::size_t m = 0; m <= degree; ++m) {
        if (m > 0) {
            omega_pow = mul(omega_pow, omega);
        }
        for (std::size_t j = m; j <= n; ++j) {
            b_conv[j] += g[m] * omega_pow[j];
        }
    }
    for (std::size_t k = 0; k <= n; ++k) {
        Complex a_k{};
        for (std::size_t m = 0; m <= k; ++m) {
            a_k += phi[m] * b_conv[k - m];
        }
        if (std::abs(a_k - f[k]) > kConvolutionTolerance) {
            throw std::logic_error("quasi-subordination coefficient " + std::to_string(k)
                                   + " disagrees with the convolution identity");
        }
    }
    return QuasiTriple{std::move(g), std::move(phi), std::move(omega), std::move(f)};
}

TruncatedSeries extremal_corollary2(Complex a0, std::size_t order)
{
    return mobius_series(a0, order);
}

TruncatedSeries extremal_theorem5(Complex a0, std::size_t order)
{
    const double a = std::abs(a0);
    if (!(a < 1.0)) {
        throw std::domain_error("extremal_theorem5: |a0| must be < 1");
    }
    std::vector<Complex> c(order + 1);
    c[0] = a0;
    const Complex q = std::conj(a0);
    Complex term = -(1.0 - a * a);
    for (std::size_t k = 1; k <= order; ++k) {
        c[k] = term;
        term *= q;
    }
    std::optional<std::size_t> degree;
    if (a0 == Complex{}) {
        degree = std::min<std::size_t>(1, order);
    }
    return TruncatedSeries(std::move(c), degree, GeometricTail{1.0 - a * a, a});
}

HarmonicPair harmonic_witness(const TruncatedSeries &h, double k, const TruncatedSeries &omega_tilde)
{
    if (!(k >= 0.0 && k <= 1.0)) {
        throw std::domain_error("dilatation bound k must lie in [0, 1]");
    }
    TruncatedSeries g = integrate(mul(omega_tilde.scaled(k), derivative(h)));
    return make_harmonic_pair(h, std::move(g), k);
}

HarmonicPair extremal_theorem3(Complex a0, double lambda, std::size_t order)
{
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw std::domain_error("extremal_theorem3: lambda must lie in [0, 1]");
    }
    TruncatedSeries h = mobius_series(a0, order);
    TruncatedSeries g = h.without_constant().scaled(lambda);
    return make_harmonic_pair(std::move(h), std::move(g), lambda);
}

TruncatedSeries p_symmetric_lift(const TruncatedSeries &base, int p, std::optional<std::size_t> order)
{
    if (p < 1) {
        throw std::invalid_argument("p_symmetric_lift: p must be >= 1");
    }
    const auto step = static_cast<std::size_t>(p);
    const std::size_t target = order.value_or(base.order() * step);
    if (base.order() * step > target) {
        throw std::invalid_argument("p_symmetric_lift: base order times p exceeds the target order");
    }
    std::vector<Complex> c(target + 1);
    for (std::size_t k = 0; k <= base.order(); ++k) {
        c[k * step] = base[k];
    }
    std::optional<std::size_t> degree;
    if (base.exact_degree()) {
        degree = *base.exact_degree() * step;
    }
    return TruncatedSeries(std::move(c), degree);
}

} // namespace bohrlab
