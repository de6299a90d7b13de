#include "listcode/analysis.hpp"

#include <cmath>

namespace listcode {

double gaussian_q(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

double pairwise_error_prob(std::size_t d, double rate, double ebno_db) {
    const double ebno = std::pow(10.0, ebno_db / 10.0);
    return gaussian_q(std::sqrt(2.0 * static_cast<double>(d) * rate * ebno));
}

double union_bound(const WeightSpectrum& ws, double rate, double ebno_db) {
    return truncated_union_bound(ws, rate, ebno_db, ws.counts.size() - 1);
}

double truncated_union_bound(const WeightSpectrum& ws, double rate, double ebno_db,
                             std::size_t d_max) {
    double sum = 0.0;
    const std::size_t top = std::min(d_max, ws.counts.size() - 1);
    for (std::size_t d = 1; d <= top; ++d)
        if (ws.counts[d]) sum += static_cast<double>(ws.counts[d]) * pairwise_error_prob(d, rate, ebno_db);
    return sum;
}

} // namespace listcode
