#include "bohrlab/blaschke.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bohrlab
{

namespace
{

// (z - z0) / (1 - conj(z0) z) = -z0 + sum_{k>=1} (1 - |z0|^2) conj(z0)^(k-1) z^k
TruncatedSeries factor_series(Complex z0, std::size_t order)
{
    std::vector<Complex> c(order + 1);
    c[0] = -z0;
    const Complex q = std::conj(z0);
    Complex term = 1.0 - std::norm(z0);
    for (std::size_t k = 1; k <= order; ++k) {
        c[k] = term;
        term *= q;
    }
    std::optional<std::size_t> degree;
    if (z0 == Complex{}) {
        degree = std::min<std::size_t>(1, order);
    }
    return TruncatedSeries(std::move(c), degree);
}

} // namespace

void BlaschkeSpec::validate() const
{
    if (zeros.size() > kMaxBlaschkeZeros) {
        throw std::invalid_argument("Blaschke product limited to " + std::to_string(kMaxBlaschkeZeros) + " zeros");
    }
    for (std::size_t i = 0; i < zeros.size(); ++i) {
        if (!(std::abs(zeros[i]) <= kMaxBlaschkeZeroModulus)) {
            throw std::invalid_argument("Blaschke zero " + std::to_string(i) + " has modulus above 0.9");
        }
    }
    if (!(std::abs(std::abs(rotation) - 1.0) <= kRotationTolerance)) {
        throw std::invalid_argument("Blaschke rotation must be unimodular");
    }
}

Complex BlaschkeSpec::operator()(Complex z) const
{
    Complex v = rotation;
    for (const auto &z0 : zeros) {
        v *= (z - z0) / (1.0 - std::conj(z0) * z);
    }
    return v;
}

TruncatedSeries blaschke_series(const BlaschkeSpec &spec, std::size_t order, bool vanish_at_origin)
{
    spec.validate();
    TruncatedSeries acc = make_series({spec.rotation}, order);
    for (const auto &z0 : spec.zeros) {
        acc = mul(acc, factor_series(z0, order));
    }
    if (vanish_at_origin) {
        acc = mul(acc, identity_series(order));
    }
    return acc;
}

} // namespace bohrlab
