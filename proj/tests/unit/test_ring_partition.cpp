#include "rrhash/error.hpp"
#include "rrhash/ring_partition.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace rrhash;

TEST(RibbonRadii, SingleRibbonIsInscribedCircle) {
    const auto r = ribbon_radii(512, 1);
    ASSERT_EQ(r.size(), 1u);
    EXPECT_DOUBLE_EQ(r[0], 256.0);
}

TEST(RibbonRadii, FourRibbons) {
    const auto r = ribbon_radii(512, 4);
    ASSERT_EQ(r.size(), 4u);
    EXPECT_NEAR(r[0], 128.0, 1e-9);
    EXPECT_NEAR(r[1], 181.01933598375618, 1e-9);
    EXPECT_NEAR(r[2], 221.70250336881628, 1e-9);
    EXPECT_DOUBLE_EQ(r[3], 256.0);
}

TEST(RibbonRadii, SixtySevenRibbons) {
    const auto r = ribbon_radii(512, 67);
    ASSERT_EQ(r.size(), 67u);
    EXPECT_NEAR(r[0], 256.0 / std::sqrt(67.0), 1e-9);
    EXPECT_NEAR(r[0], 31.2754, 1e-4);
    EXPECT_DOUBLE_EQ(r[66], 256.0);
    for (int k = 1; k <= 67; ++k) EXPECT_NEAR(r[k - 1], 256.0 * std::sqrt(k / 67.0), 1e-9);
}

TEST(RibbonRadii, StrictlyIncreasingAndOddSides) {
    const auto r = ribbon_radii(257, 20);
    EXPECT_DOUBLE_EQ(r.back(), 128.0);
    for (std::size_t i = 1; i < r.size(); ++i) EXPECT_GT(r[i], r[i - 1]);
}

TEST(RibbonRadii, RejectsBadCounts) {
    EXPECT_THROW(ribbon_radii(512, 0), ParameterError);
    // pi * 4^2 / N < 1 for N = 60.
    EXPECT_THROW(ribbon_radii(8, 60), ParameterError);
}

TEST(AssignRibbons, CentreOfEvenSide) {
    const RibbonMap m = make_ribbons(512, 67);
    EXPECT_DOUBLE_EQ(m.center(), 256.5);
    // 0-based pixels 255 and 256 are the 1-based 256 and 257 around the centre.
    EXPECT_EQ(m.label(255, 255), 1);
    EXPECT_EQ(m.label(256, 256), 1);
    EXPECT_EQ(m.label(0, 0), 0);
}

TEST(AssignRibbons, CountsWithinFivePercentOfArea) {
    for (int n : {1, 4, 32, 67}) {
        const RibbonMap m = make_ribbons(512, n);
        const double rho = std::numbers::pi * 256.0 * 256.0 / n;
        std::vector<int> counts(n + 1, 0);
        for (int y = 0; y < 512; ++y)
            for (int x = 0; x < 512; ++x) ++counts[m.label(x, y)];
        for (int k = 1; k <= n; ++k) EXPECT_NEAR(counts[k], rho, 0.05 * rho) << "N=" << n << " k=" << k;
        EXPECT_EQ(counts, m.pixel_counts());
    }
}

TEST(AssignRibbons, PartitionAndMonotonicity) {
    const RibbonMap m = make_ribbons(64, 9);
    const double c = m.center();
    std::vector<std::pair<double, int>> by_distance;
    for (int y = 0; y < 64; ++y) {
        for (int x = 0; x < 64; ++x) {
            const double d = std::hypot(x + 1 - c, y + 1 - c);
            EXPECT_DOUBLE_EQ(m.distance(x, y), d);
            const int k = m.label(x, y);
            if (d <= m.radii().back()) {
                ASSERT_GE(k, 1);
                EXPECT_LE(d, m.outer_radius(k));
                EXPECT_GT(d, m.inner_radius(k));
                by_distance.emplace_back(d, k);
            } else {
                EXPECT_EQ(k, 0);
            }
        }
    }
    std::sort(by_distance.begin(), by_distance.end());
    for (std::size_t i = 1; i < by_distance.size(); ++i) EXPECT_LE(by_distance[i - 1].second, by_distance[i].second);
}

TEST(AssignRibbons, BoundaryTieGoesInside) {
    const RibbonMap m = make_ribbons(512, 4);
    EXPECT_EQ(m.ribbon_of_distance(128.0), 1);
    EXPECT_EQ(m.ribbon_of_distance(128.0000001), 2);
    EXPECT_EQ(m.ribbon_of_distance(256.0), 4);
    EXPECT_EQ(m.ribbon_of_distance(256.0001), 0);
}

TEST(AssignRibbons, ExactQuarterTurnInvariance) {
    for (int side : {64, 65}) {
        const RibbonMap m = make_ribbons(side, 7);
        for (int y = 0; y < side; ++y) {
            for (int x = 0; x < side; ++x) {
                const int l = m.label(x, y);
                EXPECT_EQ(m.label(side - 1 - y, x), l);
                EXPECT_EQ(m.label(side - 1 - x, side - 1 - y), l);
                EXPECT_EQ(m.label(y, side - 1 - x), l);
            }
        }
    }
}

TEST(AssignRibbons, MostLabelsSurviveFifteenDegreeRoundTrip) {
    // Rotate each pixel centre by 15 degrees onto the grid and back again.
    const RibbonMap m = make_ribbons(512, 67);
    const double c = m.center() - 1.0;  // 0-based
    const double a = 15.0 * std::numbers::pi / 180.0;
    const double ca = std::cos(a), sa = std::sin(a);
    auto inside = [](long x, long y) { return x >= 0 && y >= 0 && x < 512 && y < 512; };
    int interior = 0, kept = 0;
    for (int y = 0; y < 512; ++y) {
        for (int x = 0; x < 512; ++x) {
            if (m.label(x, y) == 0) continue;
            const double dx = x - c, dy = y - c;
            const long qx = std::lround(c + ca * dx - sa * dy), qy = std::lround(c + sa * dx + ca * dy);
            if (!inside(qx, qy)) continue;
            const double ex = qx - c, ey = qy - c;
            const long px = std::lround(c + ca * ex + sa * ey), py = std::lround(c - sa * ex + ca * ey);
            if (!inside(px, py)) continue;
            ++interior;
            kept += m.label(static_cast<int>(px), static_cast<int>(py)) == m.label(x, y);
        }
    }
    EXPECT_GE(static_cast<double>(kept) / interior, 0.97);
}
