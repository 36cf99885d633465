#ifndef BOHRLAB_RADII_HPP
#define BOHRLAB_RADII_HPP

#include <optional>

namespace bohrlab
{

struct RadiusResult
{
    double value = 0.0;
    // Smallest |a0| for which the radius claim applies.
    std::optional<double> threshold_a;
    // Cap the radius is measured against (1/3 for the Schwarz-Pick based bounds).
    std::optional<double> binding_cap;
    // Whether the queried a satisfies a >= threshold_a.
    std::optional<bool> admissible;
    // Defining-polynomial residual at value; 0 for exact closed forms.
    double residual = 0.0;
};

enum class Quadratic
{
    eq9,  // r^2 a^2 + 2 r a + 2 r - 1
    eq10, // a (a + k + k a) r^2 + (k + 2)(a + 1) r - 1
    eq11, // r^2 (k + 1) a^2 + r (k r + k + 2) a + r (k + 2) - 1
};

RadiusResult classical_radius();

// 3^(-1/p)
RadiusResult p_symmetric_radius(int p);

// Largest positive root of 8 r^4 + r^2 - 6 r + 1.
RadiusResult odd_bohr_radius();
double odd_bohr_quartic(double r);

// 1 / (sqrt((1+a)^2 + a^2) + 1 + a), threshold 2 sqrt(3) - 3.
RadiusResult theorem5_radius(double a);
double theorem5_threshold();

// (sqrt(k^2 + 12k + 12) - (2k + 3)) / (k + 1)
double theorem6_threshold(double k);

// Positive root in r of a (a + k + k a) r^2 + (k + 2)(a + 1) r - 1, threshold theorem6_threshold(k).
RadiusResult theorem6_radius(double a, double k);

// sqrt(a^2 (k^2+8k+8) + 2a (k^2+6k+4) + (k+2)^2)
double theorem6_discriminant_root(double a, double k);

// Signed residual; <= 0 inside the admissible region.
double quadratic_residual(Quadratic which, double a, double k, double r);

} // namespace bohrlab

#endif
