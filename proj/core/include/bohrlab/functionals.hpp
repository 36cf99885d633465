#ifndef BOHRLAB_FUNCTIONALS_HPP
#define BOHRLAB_FUNCTIONALS_HPP

#include "bohrlab/series.hpp"

namespace bohrlab
{

inline constexpr double kClassicalRadius = 1.0 / 3.0;

// f = h + conj(g). k bounds the dilatation |g'/h'|.
struct HarmonicPair
{
    TruncatedSeries h;
    TruncatedSeries g;
    double k = 0.0;
};

// Validates g_0 = 0, k in [0, 1] and matching orders.
HarmonicPair make_harmonic_pair(TruncatedSeries h, TruncatedSeries g, double k);

// (K - 1) / (K + 1) for K >= 1.
double dilatation_from_quasiconformality(double big_k);

// A functional value together with what is known about its accuracy.
struct Evaluation
{
    double value = 0.0;
    // Upper bound on the part of the value lost to truncation: 0 for
    // polynomial input or closed-form tails, +inf when nothing is known.
    double truncation_bound = 0.0;
    // Set when r lies beyond the radius for which the inequality is claimed.
    bool informational = false;
};

// Sum_{k>=1} |c_k| r^k, using the closed form when the series carries a
// geometric tail and the truncated sum otherwise.
double majorant_tail(const TruncatedSeries &f, double r);

// |c_0| + Sum_{k>=1} |c_k| r^k.
double bohr_sum(const TruncatedSeries &f, double r);

// (1 - (1 + a - a^2) r) / (1 - a r) + Sum_{n>=1} |a_n| r^n
Evaluation corollary2_lhs(const TruncatedSeries &f, double a0_mod, double r);

// (1 - r (a + (k+1)(1 - a^2))) / (1 - r a) + Sum |a_n| r^n + Sum |b_n| r^n
Evaluation theorem3_lhs(const HarmonicPair &p, double a0_mod, double r);

// |f(z)| + Sum_{k>=1} |a_k| |z|^k
Evaluation theorem5_lhs(const TruncatedSeries &f, Complex z);

// |h(z)| + Sum |a_n| |z|^n + Sum |b_n| |z|^n
Evaluation theorem6_lhs(const HarmonicPair &p, Complex z);

// (1 + k) r (1 - a^2) / (1 - r a), valid for r <= 1/3.
double lemma2_bound(double a, double k, double r);

// (r + a) / (1 + a r)
double schwarz_pick_bound(double a, double r);

} // namespace bohrlab

#endif
