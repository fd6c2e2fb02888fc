#pragma once

#include "rrhash/color.hpp"
#include "rrhash/config.hpp"
#include "rrhash/image.hpp"
#include "rrhash/ring_partition.hpp"
#include "rrhash/texture.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace rrhash {

/// The four feature vectors extracted from one image.
struct FeatureBundle {
    std::vector<double> hq;         // N quadtree split counts
    std::array<double, 3> zg{};     // GLCM correlation, contrast, entropy
    std::vector<double> hc;         // N CVA variances
    std::array<double, 3> cg{};     // colour low-order moments

    /// Texture view [H_Q, Z_G].
    std::vector<double> texture_view() const;
    /// Colour view [H_C, C_G].
    std::vector<double> color_view() const;
    /// [H_Q, Z_G, H_C, C_G].
    std::vector<double> concatenated() const;
};

/// Everything that does not depend on K_1, computed once per image. The
/// keyed corner selection is the only remaining step.
struct PreparedImage {
    RgbImage secondary;
    RibbonMap ribbons;
    std::vector<double> hq;
    GlcmScalars zg;
    std::array<double, 3> cg{};
    std::vector<Corner> corners;
    Color reference{};
};

PreparedImage prepare_image(const RgbImage& img, const Config& config);

FeatureBundle finish_features(const PreparedImage& prepared, const Config& config, std::uint64_t feature_key);

FeatureBundle extract_features(const RgbImage& img, const Config& config, std::uint64_t feature_key);

}  // namespace rrhash
