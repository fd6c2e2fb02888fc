#pragma once

#include "rrhash/image.hpp"
#include "rrhash/ring_partition.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace rrhash {

struct QuadtreeParams {
    double variance_threshold = 14.0;  // V_C
    int min_block = 2;                 // blocks of this side are never split
    double fill_value = 255.0;         // luminance outside the active region
};

/// Number of split events of a variance-driven quadtree decomposition.
///
/// Pixels where `region` is false (and any padding up to the next power of
/// two) are replaced by `fill_value`. A block splits when its population
/// variance exceeds V_C and its side is larger than min_block. Variances are
/// evaluated on luminance rounded to 1/256 of a level with exact integer
/// arithmetic, so the count does not depend on summation order.
int quadtree_count(const LumaImage& lum, const std::vector<bool>& region, const QuadtreeParams& params);

/// H_Q: one quadtree count per ribbon, region = pixels of that ribbon.
std::vector<double> local_texture_vector(const LumaImage& lum, const RibbonMap& ribbons,
                                         const QuadtreeParams& params);

enum class GlcmDirection { deg0, deg45, deg90, deg135 };

/// Normalized symmetric gray-level co-occurrence matrix.
struct Glcm {
    int levels = 0;
    int distance = 1;
    GlcmDirection direction = GlcmDirection::deg0;
    std::vector<double> probabilities;  // levels x levels, row-major
    std::vector<std::int64_t> counts;   // raw pair counts, same layout
    std::int64_t total_pairs = 0;       // #S, each pair counted in both orders

    /// Entry for gray levels g1, g2 in 1..levels.
    double at(int g1, int g2) const {
        return probabilities[static_cast<std::size_t>(g1 - 1) * levels + (g2 - 1)];
    }
    std::int64_t count(int g1, int g2) const {
        return counts[static_cast<std::size_t>(g1 - 1) * levels + (g2 - 1)];
    }
};

/// Uniform quantization of [0, 255] luminance to levels 1..g_max.
int quantize_level(double luma, int levels) noexcept;

/// GLCM of a pre-quantized level raster (values in 1..levels, row-major).
Glcm glcm_from_levels(const std::vector<int>& level_raster, int width, int height, int distance,
                      GlcmDirection direction, int levels);

Glcm glcm(const LumaImage& lum, int distance, GlcmDirection direction, int levels);

struct GlcmScalars {
    double correlation = 0.0;
    double contrast = 0.0;
    double entropy = 0.0;  // base 10

    std::array<double, 3> as_array() const { return {correlation, contrast, entropy}; }
};

GlcmScalars glcm_scalars(const Glcm& g);

}  // namespace rrhash
