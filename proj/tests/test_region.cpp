#include <doctest.h>

#include <cmath>
#include <numbers>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "blbc/region.hpp"

using namespace blbc;
using big = boost::multiprecision::cpp_bin_float_50;

namespace {
big gordon_big(const big& x)
{
    using boost::multiprecision::log;
    if (x == 0)
        return 0;
    return ((x + 1) * log(x + 1) - x * log(x)) / log(big(2));
}
}  // namespace

TEST_CASE("gordon_g")
{
    CHECK(gordon_g(0.0) == 0.0);
    CHECK(gordon_g(1.0) == 2.0);
    for (double x : {1e-12, 1e-6, 1e-3, 0.5, 3.0, 1e3, 1e6, 1e12})
        CHECK(gordon_g(x) == doctest::Approx(gordon_big(big(x)).convert_to<double>()).epsilon(1e-13));
    CHECK(gordon_g(1e6) == doctest::Approx(21.374264331560417).epsilon(1e-14));
    CHECK_THROWS_AS(gordon_g(-1.0), ValidationError);
}

TEST_CASE("gordon_g is concave and dominates the homodyne capacity")
{
    std::vector<double> xs, gs;
    for (int i = 0; i < 100; ++i) {
        xs.push_back(std::pow(10.0, -6.0 + 12.0 * i / 99.0));
        gs.push_back(gordon_g(xs.back()));
        CHECK(gs.back() >= 0.5 * std::log2(1.0 + xs.back()));
    }
    for (int i = 1; i + 1 < 100; ++i) {
        const double left = (gs[i] - gs[i - 1]) / (xs[i] - xs[i - 1]);
        const double right = (gs[i + 1] - gs[i]) / (xs[i + 1] - xs[i]);
        CHECK(right <= left);
    }
}

TEST_CASE("quantum_region")
{
    const auto fig = quantum_region(ChannelFamily(1.0, {0.0, 1.0}, 1e6));
    CHECK(fig.region.rate_bits == gordon_g(1e6));
    CHECK(fig.region.exponent_nats == 5e5);
    CHECK(quantum_region(ChannelFamily(1.0, {0.0, 1.0}, 1e6), ExponentConvention::overlap).region.exponent_nats ==
          1e6);

    const auto zero = quantum_region(ChannelFamily(1.0, {0.0, 1.0}, 0.0));
    CHECK(zero.region.rate_bits == 0.0);
    CHECK(zero.region.exponent_nats == 0.0);

    const auto three = quantum_region(ChannelFamily(1.0, {0.0, 0.5, 1.0}, 2.0));
    CHECK(three.region.exponent_nats == 0.25);
    CHECK(three.k == cplx(0.0));
    CHECK(three.k_prime == cplx(0.5));

    SUBCASE("depends only on pairwise differences")
    {
        const std::vector<cplx> k{{0.1, 0.2}, {-0.3, 0.4}, {0.5, -0.1}};
        const double base = quantum_region(ChannelFamily(0.5, k, 3.0)).region.exponent_nats;
        const cplx phase = std::polar(1.0, 0.9);
        std::vector<cplx> rotated, shifted;
        for (auto v : k) {
            rotated.push_back(v * phase);
            shifted.push_back(v + cplx(0.2, -0.3));
        }
        CHECK(quantum_region(ChannelFamily(0.5, rotated, 3.0)).region.exponent_nats ==
              doctest::Approx(base).epsilon(1e-14));
        CHECK(quantum_region(ChannelFamily(0.5, shifted, 3.0)).region.exponent_nats ==
              doctest::Approx(base).epsilon(1e-14));
    }
    CHECK_THROWS_AS(ChannelFamily(1.0, {1.0}, 1.0), ValidationError);
    CHECK_THROWS_AS(ChannelFamily(1.0, {1.0, 1.0}, 1.0), ValidationError);
}

TEST_CASE("comparison_metrics")
{
    for (double E : {1e-3, 1.0, 55.0, 1e6}) {
        const auto m = comparison_metrics(ChannelFamily(1.0, {0.0, 1.0}, E), HomodyneModel{});
        CHECK(m.detection_ratio == 0.25);
    }
    const auto large = comparison_metrics(ChannelFamily(1.0, {0.0, 1.0}, 1e6), HomodyneModel{});
    CHECK(large.capacity_ratio == doctest::Approx(0.46625160292858133).epsilon(1e-12));
    const auto small = comparison_metrics(ChannelFamily(1.0, {0.0, 1.0}, 1e-3), HomodyneModel{});
    CHECK(small.capacity_ratio == doctest::Approx(std::log2(1.001) / 2.0 / gordon_g(1e-3)).epsilon(1e-14));
    CHECK(small.capacity_ratio < 0.1);
    CHECK_THROWS_AS(comparison_metrics(ChannelFamily(1.0, {0.0, 1.0}, 0.0), HomodyneModel{}), ValidationError);
}

TEST_CASE("frontier_samples")
{
    const RateDetectionRegion rect{2.0, 1.0, RegionKind::quantum_paper};
    const auto pts = frontier_samples({rect}, 3);
    std::vector<std::pair<double, double>> segment;
    int corners = 0;
    for (const auto& p : pts) {
        if (p.series == "timesharing")
            segment.emplace_back(p.rate_bits, p.exponent_nats);
        else
            ++corners;
    }
    CHECK(corners == 4);
    REQUIRE(segment.size() == 3);
    CHECK(segment[0] == std::pair{2.0, 0.0});
    CHECK(segment[1] == std::pair{1.0, 0.5});
    CHECK(segment[2] == std::pair{0.0, 1.0});

    const auto two = frontier_samples({rect}, 2);
    int ts = 0;
    for (const auto& p : two)
        ts += p.series == "timesharing";
    CHECK(ts == 2);
    CHECK_THROWS_AS(frontier_samples({rect}, 1), ValidationError);

    SUBCASE("quantum rectangle contains the classical one")
    {
        const ChannelFamily family(1.0, {0.0, 1.0}, 1e6);
        const auto q = quantum_region(family).region;
        const auto c = classical_region(family, HomodyneModel{});
        CHECK(q.rate_bits > c.rate_bits);
        CHECK(q.exponent_nats == 4.0 * c.exponent_nats);
    }
    SUBCASE("samples lie on the segment")
    {
        const RateDetectionRegion r{21.37, 5e5, RegionKind::quantum_paper};
        for (const auto& p : frontier_samples({r}, 17))
            if (p.series == "timesharing")
                CHECK(p.rate_bits / r.rate_bits + p.exponent_nats / r.exponent_nats ==
                      doctest::Approx(1.0).epsilon(1e-14));
    }
}
