// Union bound and truncated union bound on frame error rate from a weight
// spectrum, for BPSK on the AWGN channel.
#pragma once

#include <cstddef>

#include "listcode/spectrum.hpp"

namespace listcode {

// Gaussian tail Q(x) via the complementary error function; underflows to 0.
double gaussian_q(double x);

// P2(d) = Q(sqrt(2 d R Eb/N0)) with R in information bits per channel bit
// (CRC bits count as overhead).
double pairwise_error_prob(std::size_t d, double rate, double ebno_db);

// Sum of A(d) P2(d) over d >= 1; may exceed 1.
double union_bound(const WeightSpectrum& ws, double rate, double ebno_db);

// Partial sum up to d_max; equals union_bound at d_max = n.
double truncated_union_bound(const WeightSpectrum& ws, double rate, double ebno_db,
                             std::size_t d_max);

} // namespace listcode
