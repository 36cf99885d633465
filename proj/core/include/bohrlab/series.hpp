#ifndef BOHRLAB_SERIES_HPP
#define BOHRLAB_SERIES_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace bohrlab
{

using Complex = std::complex<double>;

inline constexpr std::size_t kDefaultOrder = 64;

// Inner series passed to compose() must have |w_0| below this.
inline constexpr double kComposeConstantTolerance = 1e-15;

// Closed-form description of coefficient moduli for k >= 1:
//   |c_k| = lead * ratio^(k-1).
// Carried by the Moebius family (and scalings of it) so that majorant sums
// and truncation tails can be evaluated exactly.
struct GeometricTail
{
    double lead = 0.0;
    double ratio = 0.0;

    // Sum_{k>=1} |c_k| r^k.
    double majorant(double r) const;
    // Sum_{k>order} |c_k| r^k.
    double remainder(double r, std::size_t order) const;
};

// Truncated power series c_0 + c_1 z + ... + c_N z^N with complex coefficients.
//
// exact_degree(), when present, certifies that every coefficient of the
// underlying function beyond that index is zero, i.e. the series is a
// polynomial and the truncation loses nothing.
class TruncatedSeries
{
public:
    // Zero series of the given order, exact_degree 0.
    explicit TruncatedSeries(std::size_t order = kDefaultOrder);

    TruncatedSeries(std::vector<Complex> coeffs, std::optional<std::size_t> exact_degree,
                    std::optional<GeometricTail> tail = std::nullopt);

    std::size_t order() const { return coeffs_.size() - 1; }
    std::size_t size() const { return coeffs_.size(); }

    const Complex &operator[](std::size_t k) const { return coeffs_[k]; }
    std::span<const Complex> coeffs() const { return coeffs_; }

    const std::optional<std::size_t> &exact_degree() const { return exact_degree_; }
    const std::optional<GeometricTail> &tail() const { return tail_; }

    bool is_exact() const { return exact_degree_.has_value(); }

    // Multiplication by a constant; keeps exactness and the closed-form tail.
    TruncatedSeries scaled(Complex c) const;
    // Same series with c_0 replaced by zero.
    TruncatedSeries without_constant() const;

    // Horner evaluation of the truncated polynomial.
    Complex operator()(Complex z) const;

private:
    std::vector<Complex> coeffs_;
    std::optional<std::size_t> exact_degree_;
    std::optional<GeometricTail> tail_;
};

// Zero-pads `coeffs` to order+1 entries; exact_degree = coeffs.size()-1
// (0 for an empty list). Throws std::invalid_argument on a non-finite
// entry, naming its index.
TruncatedSeries make_series(std::span<const Complex> coeffs, std::size_t order = kDefaultOrder);
TruncatedSeries make_series(std::initializer_list<Complex> coeffs, std::size_t order = kDefaultOrder);

// The constant series 1.
TruncatedSeries unit_series(std::size_t order = kDefaultOrder);
// The identity series z.
TruncatedSeries identity_series(std::size_t order = kDefaultOrder);

TruncatedSeries add(const TruncatedSeries &f, const TruncatedSeries &g);
TruncatedSeries mul(const TruncatedSeries &f, const TruncatedSeries &g);

// g(w(z)) by Horner accumulation. w must vanish at the origin, so
// coefficient k of the result only depends on w_1..w_k.
TruncatedSeries compose(const TruncatedSeries &g, const TruncatedSeries &w);

TruncatedSeries power(const TruncatedSeries &w, int k);

TruncatedSeries derivative(const TruncatedSeries &f);
TruncatedSeries integrate(const TruncatedSeries &f);

// Sum |c_k| r^k over the stored coefficients (k >= 1 when skip_constant).
// Exact for polynomial series, a lower bound otherwise.
double majorant_eval(const TruncatedSeries &f, double r, bool skip_constant = false);

// (z + a0) / (1 + conj(a0) z). Coefficients c_k = (-1)^(k-1) (1-|a0|^2) conj(a0)^(k-1).
TruncatedSeries mobius_series(Complex a0, std::size_t order = kDefaultOrder);

} // namespace bohrlab

#endif
