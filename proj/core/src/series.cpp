#include "bohrlab/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bohrlab
{

namespace
{

bool is_finite(Complex c)
{
    return std::isfinite(c.real()) && std::isfinite(c.imag());
}

void require_same_order(const TruncatedSeries &f, const TruncatedSeries &g, const char *op)
{
    if (f.order() != g.order()) {
        throw std::invalid_argument(std::string(op) + ": truncation order mismatch (" + std::to_string(f.order())
                                    + " vs " + std::to_string(g.order()) + ")");
    }
}

void require_radius(double r)
{
    if (!(r >= 0.0 && r < 1.0)) {
        throw std::domain_error("radius must lie in [0, 1), got " + std::to_string(r));
    }
}

} // namespace

double GeometricTail::majorant(double r) const
{
    return lead * r / (1.0 - ratio * r);
}

double GeometricTail::remainder(double r, std::size_t order) const
{
    // lead * ratio^order * r^(order+1) / (1 - ratio r)
    const auto n = static_cast<double>(order);
    return lead * std::pow(ratio, n) * std::pow(r, n + 1.0) / (1.0 - ratio * r);
}

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1), exact_degree_(0) {}

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs, std::optional<std::size_t> exact_degree,
                                 std::optional<GeometricTail> tail)
    : coeffs_(std::move(coeffs)), exact_degree_(exact_degree), tail_(tail)
{
    if (coeffs_.empty()) {
        throw std::invalid_argument("truncated series needs at least one coefficient");
    }
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (!is_finite(coeffs_[k])) {
            throw std::invalid_argument("non-finite coefficient at index " + std::to_string(k));
        }
    }
    if (exact_degree_) {
        if (*exact_degree_ > order()) {
            throw std::invalid_argument("exact degree exceeds truncation order");
        }
        for (std::size_t k = *exact_degree_ + 1; k < coeffs_.size(); ++k) {
            if (coeffs_[k] != Complex{}) {
                throw std::invalid_argument("coefficient " + std::to_string(k) + " is nonzero beyond the exact degree");
            }
        }
    }
}

TruncatedSeries TruncatedSeries::scaled(Complex c) const
{
    std::vector<Complex> out(coeffs_);
    for (auto &x : out) {
        x *= c;
    }
    std::optional<GeometricTail> t;
    if (tail_) {
        t = GeometricTail{tail_->lead * std::abs(c), tail_->ratio};
    }
    return TruncatedSeries(std::move(out), exact_degree_, t);
}

TruncatedSeries TruncatedSeries::without_constant() const
{
    std::vector<Complex> out(coeffs_);
    out[0] = Complex{};
    return TruncatedSeries(std::move(out), exact_degree_, tail_);
}

Complex TruncatedSeries::operator()(Complex z) const
{
    const std::size_t top = exact_degree_ ? *exact_degree_ : order();
    Complex acc = coeffs_[top];
    for (std::size_t k = top; k-- > 0;) {
        acc = acc * z + coeffs_[k];
    }
    return acc;
}

TruncatedSeries make_series(std::span<const Complex> coeffs, std::size_t order)
{
    if (coeffs.size() > order + 1) {
        throw std::invalid_argument("more coefficients than the truncation order admits");
    }
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (!is_finite(coeffs[k])) {
            throw std::invalid_argument("non-finite coefficient at index " + std::to_string(k));
        }
    }
    std::vector<Complex> out(order + 1);
    std::copy(coeffs.begin(), coeffs.end(), out.begin());
    const std::size_t degree = coeffs.empty() ? 0 : coeffs.size() - 1;
    return TruncatedSeries(std::move(out), degree);
}

TruncatedSeries make_series(std::initializer_list<Complex> coeffs, std::size_t order)
{
    return make_series(std::span<const Complex>(coeffs.begin(), coeffs.size()), order);
}

TruncatedSeries unit_series(std::size_t order)
{
    return make_series({Complex{1.0}}, order);
}

TruncatedSeries identity_series(std::size_t order)
{
    return make_series({Complex{}, Complex{1.0}}, order);
}

TruncatedSeries add(const TruncatedSeries &f, const TruncatedSeries &g)
{
    require_same_order(f, g, "add");
    std::vector<Complex> out(f.size());
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = f[k] + g[k];
    }
    std::optional<std::size_t> degree;
    if (f.exact_degree() && g.exact_degree()) {
        degree = std::max(*f.exact_degree(), *g.exact_degree());
    }
    return TruncatedSeries(std::move(out), degree);
}

TruncatedSeries mul(const TruncatedSeries &f, const TruncatedSeries &g)
{
    require_same_order(f, g, "mul");
    const std::size_t n = f.order();
    const std::size_t f_top = f.exact_degree().value_or(n);
    const std::size_t g_top = g.exact_degree().value_or(n);
    std::vector<Complex> out(n + 1);
    for (std::size_t m = 0; m <= f_top; ++m) {
        if (f[m] == Complex{}) {
            continue;
        }
        const std::size_t j_end = std::min(g_top, n - m);
        for (std::size_t j = 0; j <= j_end; ++j) {
            out[m + j] += f[m] * g[j];
        }
    }
    std::optional<std::size_t> degree;
    if (f.exact_degree() && g.exact_degree() && f_top + g_top <= n) {
        degree = f_top + g_top;
    }
    return TruncatedSeries(std::move(out), degree);
}

TruncatedSeries compose(const TruncatedSeries &g, const TruncatedSeries &w)
{
    require_same_order(g, w, "compose");
    if (std::abs(w[0]) >= kComposeConstantTolerance) {
        throw std::invalid_argument("compose: inner series must vanish at the origin");
    }
    const std::size_t n = g.order();
    const std::size_t g_top = g.exact_degree().value_or(n);

    // Force w_0 = 0 exactly so that the power structure is clean.
    const TruncatedSeries inner = w.without_constant();

    TruncatedSeries acc = make_series({g[g_top]}, n);
    for (std::size_t k = g_top; k-- > 0;) {
        acc = mul(acc, inner);
        std::vector<Complex> c(acc.coeffs().begin(), acc.coeffs().end());
        c[0] += g[k];
        acc = TruncatedSeries(std::move(c), acc.exact_degree());
    }

    return acc;
}

TruncatedSeries power(const TruncatedSeries &w, int k)
{
    if (k < 0) {
        throw std::invalid_argument("power: negative exponent");
    }
    TruncatedSeries acc = unit_series(w.order());
    for (int i = 0; i < k; ++i) {
        acc = mul(acc, w);
    }
    return acc;
}

TruncatedSeries derivative(const TruncatedSeries &f)
{
    const std::size_t n = f.order();
    std::vector<Complex> out(n + 1);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = static_cast<double>(k + 1) * f[k + 1];
    }
    std::optional<std::size_t> degree;
    if (f.exact_degree()) {
        degree = *f.exact_degree() > 0 ? *f.exact_degree() - 1 : 0;
    }
    return TruncatedSeries(std::move(out), degree);
}

TruncatedSeries integrate(const TruncatedSeries &f)
{
    const std::size_t n = f.order();
    std::vector<Complex> out(n + 1);
    for (std::size_t k = 1; k <= n; ++k) {
        out[k] = f[k - 1] / static_cast<double>(k);
    }
    std::optional<std::size_t> degree;
    if (f.exact_degree()) {
        if (*f.exact_degree() < n) {
            degree = *f.exact_degree() + 1;
        } else if (f[n] == Complex{}) {
            degree = n;
        }
    }
    return TruncatedSeries(std::move(out), degree);
}

double majorant_eval(const TruncatedSeries &f, double r, bool skip_constant)
{
    require_radius(r);
    const std::size_t top = f.exact_degree().value_or(f.order());
    double sum = skip_constant ? 0.0 : std::abs(f[0]);
    double rk = 1.0;
    for (std::size_t k = 1; k <= top; ++k) {
        rk *= r;
        sum += std::abs(f[k]) * rk;
    }
    return sum;
}

TruncatedSeries mobius_series(Complex a0, std::size_t order)
{
    const double a = std::abs(a0);
    if (!(a < 1.0)) {
        throw std::domain_error("mobius_series: |a0| must be < 1");
    }
    std::vector<Complex> c(order + 1);
    c[0] = a0;
    if (order >= 1) {
        const Complex q = -std::conj(a0);
        Complex term = 1.0 - a * a;
        for (std::size_t k = 1; k <= order; ++k) {
            c[k] = term;
            term *= q;
        }
    }
    std::optional<std::size_t> degree;
    if (a0 == Complex{}) {
        degree = std::min<std::size_t>(1, order);
    }
    return TruncatedSeries(std::move(c), degree, GeometricTail{1.0 - a * a, a});
}

} // namespace bohrlab
