#include "oracles.hpp"

#include "rrhash/error.hpp"
#include "rrhash/imaging.hpp"
#include "rrhash/ring_partition.hpp"
#include "rrhash/rng.hpp"
#include "rrhash/texture.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace rrhash;

namespace {

std::vector<int> random_pixels(int n, std::uint64_t seed, int lo = 0, int hi = 255) {
    SplitMix64 rng(seed);
    std::vector<int> px(static_cast<std::size_t>(n));
    for (int& v : px) v = lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
    return px;
}

LumaImage to_luma(const std::vector<int>& px, int w, int h) {
    return LumaImage(w, h, std::vector<double>(px.begin(), px.end()));
}

QuadtreeParams params(double vc) {
    QuadtreeParams p;
    p.variance_threshold = vc;
    return p;
}

// Levels 1..6. The only horizontally adjacent (1, 1) pairs are at rows 0 and
// 3, so #C = 2 * 2 = 4 and #S = 2 * 6 * 5 = 60.
const std::vector<int> kSixBySix = {
    1, 1, 2, 3, 4, 5,
    2, 3, 1, 4, 1, 6,
    5, 6, 2, 1, 3, 2,
    3, 2, 4, 1, 1, 5,
    6, 1, 5, 2, 6, 1,
    4, 5, 1, 6, 2, 3,
};

}  // namespace

TEST(Quadtree, ConstantImageHasNoSplits) {
    const LumaImage lum(32, 32, 90.0);
    EXPECT_EQ(quadtree_count(lum, std::vector<bool>(32 * 32, true), params(0)), 0);
}

TEST(Quadtree, OneDetailPerQuadrantGivesFiveSplits) {
    // Root splits, each 4x4 quadrant splits once, 2x2 blocks are leaves.
    LumaImage lum(8, 8, 200.0);
    lum.at(1, 1) = 0.0;
    lum.at(6, 1) = 0.0;
    lum.at(1, 6) = 0.0;
    lum.at(5, 5) = 0.0;
    EXPECT_EQ(quadtree_count(lum, std::vector<bool>(64, true), params(14)), 5);
}

TEST(Quadtree, MatchesRecursiveOracle) {
    for (int side : {16, 32}) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto px = random_pixels(side * side, 1000 * side + trial);
            SplitMix64 rng(trial + 7);
            std::vector<bool> region(side * side);
            const bool masked = trial % 2 == 1;
            for (std::size_t i = 0; i < region.size(); ++i) region[i] = !masked || rng.below(3) != 0;
            for (int vc : {0, 10, 14, 40, 1000}) {
                EXPECT_EQ(quadtree_count(to_luma(px, side, side), region, params(vc)),
                          oracle::quadtree(px, side, side, region, vc))
                    << side << " " << trial << " " << vc;
            }
        }
    }
}

TEST(Quadtree, PadsNonPowerOfTwo) {
    const auto px = random_pixels(20 * 12, 3, 100, 140);
    const std::vector<bool> region(20 * 12, true);
    EXPECT_EQ(quadtree_count(to_luma(px, 20, 12), region, params(14)), oracle::quadtree(px, 20, 12, region, 14));
}

TEST(Quadtree, MonotoneInThreshold) {
    const auto px = random_pixels(32 * 32, 11, 60, 180);
    const std::vector<bool> region(32 * 32, true);
    int prev = 1 << 30;
    for (double vc : {0.0, 1.0, 5.0, 10.0, 14.0, 40.0, 100.0, 400.0, 1e4}) {
        const int n = quadtree_count(to_luma(px, 32, 32), region, params(vc));
        EXPECT_LE(n, prev);
        prev = n;
    }
}

TEST(Quadtree, RejectsBadParameters) {
    const LumaImage lum(8, 8);
    const std::vector<bool> region(64, true);
    QuadtreeParams p;
    p.min_block = 3;
    EXPECT_THROW(quadtree_count(lum, region, p), ParameterError);
    EXPECT_THROW(quadtree_count(lum, region, params(-1)), ParameterError);
    EXPECT_THROW(quadtree_count(lum, std::vector<bool>(10, true), params(1)), ShapeError);
}

TEST(LocalTexture, WhiteImageAllZero) {
    const RibbonMap m = make_ribbons(64, 8);
    const auto hq = local_texture_vector(LumaImage(64, 64, 255.0), m, params(14));
    ASSERT_EQ(hq.size(), 8u);
    for (double v : hq) EXPECT_EQ(v, 0.0);
}

TEST(LocalTexture, DarkConstantImageSplitsOnlyAtRibbonEdges) {
    // The white fill around each ribbon is the only source of variance.
    const int side = 64;
    const RibbonMap m = make_ribbons(side, 8);
    const std::vector<int> px(side * side, 10);
    const auto hq = local_texture_vector(LumaImage(side, side, 10.0), m, params(14));
    for (int k = 1; k <= 8; ++k) {
        std::vector<bool> region(side * side);
        for (int i = 0; i < side * side; ++i) region[i] = m.labels()[i] == k;
        EXPECT_EQ(hq[k - 1], oracle::quadtree(px, side, side, region, 14));
        EXPECT_GT(hq[k - 1], 0.0);
    }
}

TEST(LocalTexture, EachRibbonMatchesMaskedOracle) {
    const int side = 64;
    const auto px = random_pixels(side * side, 21);
    const RibbonMap m = make_ribbons(side, 5);
    const auto hq = local_texture_vector(to_luma(px, side, side), m, params(14));
    ASSERT_EQ(hq.size(), 5u);
    // Full quadtree over a 64 side with min block 2 has 1 + 4 + ... + 4^4 internal nodes.
    const double max_splits = (std::pow(4.0, 5) - 1) / 3;
    for (int k = 1; k <= 5; ++k) {
        std::vector<bool> region(side * side);
        for (int y = 0; y < side; ++y)
            for (int x = 0; x < side; ++x) region[y * side + x] = m.label(x, y) == k;
        EXPECT_EQ(hq[k - 1], oracle::quadtree(px, side, side, region, 14));
        EXPECT_GE(hq[k - 1], 0.0);
        EXPECT_LE(hq[k - 1], max_splits);
        EXPECT_EQ(hq[k - 1], std::floor(hq[k - 1]));
    }
}

TEST(LocalTexture, SingleRibbon) {
    const RibbonMap m = make_ribbons(32, 1);
    EXPECT_EQ(local_texture_vector(to_luma(random_pixels(32 * 32, 2), 32, 32), m, params(14)).size(), 1u);
}

TEST(LocalTexture, ExactUnderQuarterTurns) {
    const int side = 64;
    const LumaImage lum = to_luma(random_pixels(side * side, 31), side, side);
    const RibbonMap m = make_ribbons(side, 6);
    const auto base = local_texture_vector(lum, m, params(14));
    for (int q = 1; q < 4; ++q) EXPECT_EQ(local_texture_vector(rotate90(lum, q), m, params(14)), base);
}

TEST(Glcm, SixBySixExample) {
    const Glcm g = glcm_from_levels(kSixBySix, 6, 6, 1, GlcmDirection::deg0, 6);
    EXPECT_EQ(g.total_pairs, 60);
    EXPECT_EQ(g.count(1, 1), 4);
    EXPECT_NEAR(g.at(1, 1), 0.0667, 1e-4);
    EXPECT_DOUBLE_EQ(g.at(1, 1), 4.0 / 60.0);
}

TEST(Glcm, ConstantImage) {
    const Glcm g = glcm(LumaImage(10, 10, 130.0), 1, GlcmDirection::deg0, 16);
    const int level = quantize_level(130.0, 16);
    EXPECT_EQ(level, 9);
    for (int i = 1; i <= 16; ++i)
        for (int j = 1; j <= 16; ++j) EXPECT_EQ(g.at(i, j), i == level && j == level ? 1.0 : 0.0);
    const GlcmScalars s = glcm_scalars(g);
    EXPECT_EQ(s.contrast, 0.0);
    EXPECT_EQ(s.entropy, 0.0);
    EXPECT_EQ(s.correlation, 0.0);
}

TEST(Glcm, QuantizationBounds) {
    EXPECT_EQ(quantize_level(0.0, 16), 1);
    EXPECT_EQ(quantize_level(15.99, 16), 1);
    EXPECT_EQ(quantize_level(16.0, 16), 2);
    EXPECT_EQ(quantize_level(255.0, 16), 16);
    EXPECT_EQ(quantize_level(-3.0, 16), 1);
}

TEST(Glcm, MatchesPairEnumerationOracle) {
    struct Dir {
        GlcmDirection dir;
        int dr, dc;
    };
    for (int d : {1, 2}) {
        for (const Dir& dir : {Dir{GlcmDirection::deg0, 0, d}, Dir{GlcmDirection::deg45, -d, d},
                               Dir{GlcmDirection::deg90, d, 0}, Dir{GlcmDirection::deg135, d, d}}) {
            for (int trial = 0; trial < 5; ++trial) {
                const auto levels = random_pixels(8 * 8, 50 + trial, 1, 6);
                const Glcm g = glcm_from_levels(levels, 8, 8, d, dir.dir, 6);
                const auto expected = oracle::glcm_counts(levels, 8, 8, dir.dr, dir.dc, 6);
                EXPECT_EQ(g.counts, expected);
                double sum = 0;
                for (double p : g.probabilities) sum += p;
                EXPECT_NEAR(sum, 1.0, 1e-12);
            }
        }
    }
}

TEST(Glcm, ScalarsMatchOracle) {
    for (int trial = 0; trial < 10; ++trial) {
        const auto px = random_pixels(64, 70 + trial);
        const Glcm g = glcm(to_luma(px, 8, 8), 1, GlcmDirection::deg0, 16);
        const GlcmScalars s = glcm_scalars(g);
        const auto o = oracle::glcm_scalars(g.probabilities, 16);
        EXPECT_NEAR(s.correlation, o.correlation, 1e-10);
        EXPECT_NEAR(s.contrast, o.contrast, 1e-10);
        EXPECT_NEAR(s.entropy, o.entropy, 1e-10);
        EXPECT_GE(s.entropy, 0.0);
    }
}

TEST(Glcm, OffDiagonalContrast) {
    // Alternating columns of levels 2 and 5: every horizontal pair is (2,5).
    std::vector<int> levels(6 * 4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 6; ++c) levels[r * 6 + c] = c % 2 == 0 ? 2 : 5;
    const GlcmScalars s = glcm_scalars(glcm_from_levels(levels, 6, 4, 1, GlcmDirection::deg0, 6));
    EXPECT_DOUBLE_EQ(s.contrast, 9.0);
}

TEST(Glcm, TransposeSwapsHorizontalAndVertical) {
    const auto px = random_pixels(9 * 7, 90, 1, 8);
    std::vector<int> t(px.size());
    for (int r = 0; r < 7; ++r)
        for (int c = 0; c < 9; ++c) t[c * 7 + r] = px[r * 9 + c];
    EXPECT_EQ(glcm_from_levels(px, 9, 7, 1, GlcmDirection::deg0, 8).counts,
              glcm_from_levels(t, 7, 9, 1, GlcmDirection::deg90, 8).counts);
}

TEST(Glcm, DiagonalMassHasZeroContrast) {
    const Glcm g = glcm(LumaImage(6, 6, 30.0), 1, GlcmDirection::deg45, 16);
    EXPECT_EQ(glcm_scalars(g).contrast, 0.0);
}

TEST(Glcm, RejectsTooSmallImages) {
    EXPECT_THROW(glcm(LumaImage(1, 5, 0.0), 1, GlcmDirection::deg0, 16), ImageError);
    EXPECT_THROW(glcm(LumaImage(5, 5, 0.0), 0, GlcmDirection::deg0, 16), ParameterError);
}
