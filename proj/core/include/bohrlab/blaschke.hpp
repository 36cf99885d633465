#ifndef BOHRLAB_BLASCHKE_HPP
#define BOHRLAB_BLASCHKE_HPP

#include <cstddef>
#include <vector>

#include "bohrlab/series.hpp"

namespace bohrlab
{

inline constexpr double kMaxBlaschkeZeroModulus = 0.9;
inline constexpr std::size_t kMaxBlaschkeZeros = 4;
inline constexpr double kRotationTolerance = 1e-15;

// rotation * prod_i (z - z_i) / (1 - conj(z_i) z)
struct BlaschkeSpec
{
    std::vector<Complex> zeros;
    Complex rotation{1.0, 0.0};

    // Throws std::invalid_argument when a zero is outside the 0.9 disk,
    // there are too many zeros, or |rotation| != 1.
    void validate() const;

    Complex operator()(Complex z) const;
};

// Taylor expansion of the Blaschke product. With vanish_at_origin an extra
// factor z is appended, so the result is a Schwarz function.
TruncatedSeries blaschke_series(const BlaschkeSpec &spec, std::size_t order = kDefaultOrder,
                                bool vanish_at_origin = false);

} // namespace bohrlab

#endif
