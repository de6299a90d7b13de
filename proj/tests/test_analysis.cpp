#include <doctest.h>

#include <cmath>

#include "listcode/analysis.hpp"

using namespace listcode;

namespace {

// Simpson-rule Gaussian tail, the independent oracle for Q.
double q_quadrature(double x) {
    const double upper = x + 40.0;
    const int steps = 200000;
    const double h = (upper - x) / steps;
    auto f = [](double t) { return std::exp(-t * t / 2.0) / std::sqrt(2.0 * M_PI); };
    double sum = f(x) + f(upper);
    for (int i = 1; i < steps; ++i) sum += f(x + i * h) * (i % 2 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

} // namespace

TEST_CASE("gaussian_q high-precision values") {
    CHECK(gaussian_q(0.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(gaussian_q(1.0) == doctest::Approx(0.15865525393145705).epsilon(1e-12));
    CHECK(gaussian_q(5.0) == doctest::Approx(2.866515718791939e-07).epsilon(1e-12));
    CHECK(gaussian_q(10.0) == doctest::Approx(7.619853024160526e-24).epsilon(1e-12));
    CHECK(gaussian_q(20.0) == doctest::Approx(2.7536241186062337e-89).epsilon(1e-12));
    CHECK(gaussian_q(50.0) == 0.0);  // below double underflow
    CHECK(gaussian_q(1.0) == doctest::Approx(q_quadrature(1.0)).epsilon(1e-9));
    CHECK(gaussian_q(3.0) == doctest::Approx(q_quadrature(3.0)).epsilon(1e-9));
}

TEST_CASE("pairwise_error_prob") {
    CHECK(pairwise_error_prob(0, 0.5, 3.0) == doctest::Approx(0.5));
    // d=1, R=1/2, 0 dB -> Q(1)
    CHECK(pairwise_error_prob(1, 0.5, 0.0) == doctest::Approx(0.15865525393145705).epsilon(1e-12));
    // quadrupling d doubles the Q argument
    for (std::size_t d : {1u, 3u, 7u}) {
        const double lhs = pairwise_error_prob(4 * d, 0.25, 2.0);
        const double arg = std::sqrt(2.0 * d * 0.25 * std::pow(10.0, 0.2));
        CHECK(lhs == doctest::Approx(gaussian_q(2.0 * arg)).epsilon(1e-12));
    }
}

TEST_CASE("union_bound") {
    SUBCASE("zero-word-only spectrum gives 0") {
        WeightSpectrum ws(8, 0);
        ws.counts[0] = 1;
        CHECK(union_bound(ws, 0.5, 1.0) == 0.0);
    }
    SUBCASE("single term") {
        WeightSpectrum ws(8, 1);
        ws.counts[0] = 1;
        ws.counts[3] = 1;
        CHECK(union_bound(ws, 0.5, 0.0) ==
              doctest::Approx(0.04163225833177520).epsilon(1e-12));  // Q(sqrt(3))
    }
    SUBCASE("bound decreases with Eb/N0") {
        WeightSpectrum ws(20, 4);
        ws.counts[0] = 1;
        ws.counts[5] = 3;
        ws.counts[9] = 12;
        double prev = union_bound(ws, 0.3, -2.0);
        for (double e = -1.0; e <= 6.0; e += 1.0) {
            const double b = union_bound(ws, 0.3, e);
            CHECK(b < prev);
            prev = b;
        }
    }
}

TEST_CASE("truncated_union_bound") {
    WeightSpectrum ws(24, 6);
    ws.counts[0] = 1;
    ws.counts[6] = 5;
    ws.counts[8] = 11;
    ws.counts[15] = 40;

    SUBCASE("zero below d_min, full at n, monotone between") {
        CHECK(truncated_union_bound(ws, 0.25, 2.0, 5) == 0.0);
        CHECK(truncated_union_bound(ws, 0.25, 2.0, 24) ==
              doctest::Approx(union_bound(ws, 0.25, 2.0)));
        double prev = -1.0;
        for (std::size_t d = 0; d <= 24; ++d) {
            const double b = truncated_union_bound(ws, 0.25, 2.0, d);
            CHECK(b >= prev);
            prev = b;
        }
    }
}
