#ifndef BOHRLAB_VERIFIER_HPP
#define BOHRLAB_VERIFIER_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "bohrlab/series.hpp"

namespace bohrlab
{

inline constexpr double kViolationTolerance = 1e-9;
inline constexpr double kSharpnessTolerance = 1e-8;
inline constexpr double kBeyondRadiusStep = 1e-3;
inline constexpr std::size_t kGridPoints = 12;

// Outcome of one verification suite.
//
// max_residual is the most positive LHS - RHS seen over every check in the
// suite. Equality checks contribute |LHS - RHS|; strict checks (a value that
// must exceed 1, a structural zero) contribute a negative margin when they
// hold and a value above 1 when they do not, so passed <=> max_residual <= tolerance.
struct VerificationReport
{
    std::string suite;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<double> r_grid;
    double tolerance = kViolationTolerance;
    double max_residual = -1.0;
    std::string worst_check;
    std::map<std::string, double> worst_witness;
    std::size_t checks = 0;
    std::size_t failures = 0;
    bool passed = false;
    bool informational = false;

    bool operator==(const VerificationReport &) const = default;
};

// n Chebyshev-Lobatto points in (0, radius]; the last one is radius exactly.
std::vector<double> chebyshev_grid(double radius, std::size_t n = kGridPoints);

// Classical Bohr inequality on random Blaschke products at r = 1/3.
VerificationReport check_classical(std::size_t trials, std::uint64_t seed, std::size_t order = kDefaultOrder);

// Quasi-subordination: sum |a_k| r^k <= sum |b_k| r^k for r <= 1/3.
VerificationReport check_theorem1(std::size_t trials, std::uint64_t seed, std::size_t order = kDefaultOrder);

// Odd subordination for r <= 1/sqrt(3), including every partial sum.
VerificationReport check_theorem2_odd(std::size_t trials, std::uint64_t seed, std::size_t order = kDefaultOrder);

// Harmonic Bohr inequality with the rational first term, for each k in k_grid.
VerificationReport check_theorem3(std::size_t trials, std::uint64_t seed, std::span<const double> k_grid,
                                  std::size_t order = kDefaultOrder);

// |f(z)| + sum |a_k| r^k <= 1 up to r_a; every a must be >= 2 sqrt(3) - 3.
VerificationReport check_theorem5(std::span<const double> a_grid, std::size_t trials, std::uint64_t seed,
                                  std::size_t order = kDefaultOrder);

// Harmonic analogue up to r_{a,k}; every (a, k) in the product of the grids must be admissible.
VerificationReport check_theorem6(std::span<const double> a_grid, std::span<const double> k_grid, std::size_t trials,
                                  std::uint64_t seed, std::size_t order = kDefaultOrder);

enum class SharpClaim
{
    corollary2,
    theorem3,
    theorem5,
    theorem6,
    odd_bohr, // no extremal function is known: always refused
};

struct SharpnessParams
{
    double a = 0.5;
    double k = 0.0;
};

// Evaluates the extremal function at the claimed radius (|LHS - 1| <= 1e-8)
// and just beyond it (LHS > 1). Throws std::domain_error for odd_bohr.
VerificationReport sharpness_certificate(SharpClaim claim, SharpnessParams params, std::size_t order = kDefaultOrder);

} // namespace bohrlab

#endif
