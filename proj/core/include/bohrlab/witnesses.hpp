#ifndef BOHRLAB_WITNESSES_HPP
#define BOHRLAB_WITNESSES_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>

#include "bohrlab/blaschke.hpp"
#include "bohrlab/functionals.hpp"
#include "bohrlab/series.hpp"

namespace bohrlab
{

// Reproducible source of witness parameters. Real draws use the top 53 bits
// of a mt19937_64 word so results do not depend on the standard library's
// distribution implementations.
class Rng
{
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi);
    // Uniform on {lo, ..., hi}.
    int uniform_int(int lo, int hi);
    Complex unit_phase();
    // Modulus uniform on [0, max_modulus], phase uniform.
    Complex polar(double max_modulus);

private:
    std::mt19937_64 engine_;
};

// Seed for trial `trial` of a suite seeded with `seed` (splitmix64 mixing),
// so trial i sees the same witness whatever the total trial count is.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

// 0..4 zeros with moduli uniform on [0, 0.9], uniform phases and rotation.
BlaschkeSpec random_blaschke_spec(Rng &rng);

// rotation * z * B(z), or rotation * z * B(z^2) when odd.
TruncatedSeries random_schwarz(Rng &rng, bool odd, std::size_t order = kDefaultOrder);
TruncatedSeries random_schwarz(std::uint64_t seed, bool odd, std::size_t order = kDefaultOrder);

// Blaschke product: analytic with |f| <= 1 on the disk.
TruncatedSeries random_bounded(Rng &rng, std::size_t order = kDefaultOrder);

// rotation * M_a(psi(z)) with psi a random Schwarz function, so |f| <= 1 and |f(0)| = a.
TruncatedSeries random_bounded_at(Rng &rng, double a, std::size_t order = kDefaultOrder);

// Degree uniform on {0..max_degree}, coefficients with modulus <= max_modulus.
TruncatedSeries random_polynomial(Rng &rng, std::size_t max_degree, double max_modulus,
                                  std::size_t order = kDefaultOrder);

// f = phi * (g o omega).
struct QuasiTriple
{
    TruncatedSeries g;
    TruncatedSeries phi;
    TruncatedSeries omega;
    TruncatedSeries f;
};

inline constexpr double kConvolutionTolerance = 1e-12;

// Computes f by compose-then-multiply and cross-checks it against the
// coefficient convolution a_k = sum phi_m B_j, B_j = sum_n b_n alpha_j^(n)
// (std::logic_error on mismatch). g must be a polynomial and omega(0) = 0.
QuasiTriple build_quasi_triple(TruncatedSeries g, TruncatedSeries phi, TruncatedSeries omega);

// (z + a0) / (1 + conj(a0) z)
TruncatedSeries extremal_corollary2(Complex a0, std::size_t order = kDefaultOrder);

// (a0 - z) / (1 - conj(a0) z)
TruncatedSeries extremal_theorem5(Complex a0, std::size_t order = kDefaultOrder);

// g = integral of k * omega_tilde * h', so |g'| <= k |h'| whenever |omega_tilde| <= 1.
HarmonicPair harmonic_witness(const TruncatedSeries &h, double k, const TruncatedSeries &omega_tilde);

// h = M_{a0}, g = lambda (h - a0); the co-analytic constant is dropped.
HarmonicPair extremal_theorem3(Complex a0, double lambda, std::size_t order = kDefaultOrder);

// base(z^p). The target order defaults to base.order() * p.
TruncatedSeries p_symmetric_lift(const TruncatedSeries &base, int p, std::optional<std::size_t> order = std::nullopt);

} // namespace bohrlab

#endif
