#pragma once

#include "rrhash/image.hpp"
#include "rrhash/ring_partition.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace rrhash {

using Color = std::array<double, 3>;

struct HarrisParams {
    double kappa = 0.04;
    double tensor_sigma = 1.0;  // Gaussian weighting of the structure tensor
    int suppression_radius = 3;
    double relative_floor = 1e-6;  // responses <= floor * max are dropped
};

struct Corner {
    int x = 0;
    int y = 0;
    double response = 0.0;
};

struct CornerPoint {
    int x = 0;
    int y = 0;
    double response = 0.0;
    int ribbon = 0;  // 1..N
};

/// Local maxima of the Harris response det(M) - kappa * trace(M)^2 computed
/// from Sobel gradients and a Gaussian-weighted structure tensor. Returned
/// in raster order.
std::vector<Corner> harris_corners(const LumaImage& lum, const HarrisParams& params = {});

/// Width of the outer-boundary band (r_k - width, r_k] a corner must fall in.
inline constexpr double kBoundaryBand = 2.0;

/// Per-ribbon selection of the strongest boundary corners.
///
/// Corners inside ribbon k's boundary band are sorted by descending
/// response and the first ceil(count * tau) are kept. `tie_key` (K_1)
/// orders corners of equal response.
std::vector<std::vector<CornerPoint>> select_boundary_corners(const std::vector<Corner>& corners,
                                                              const RibbonMap& ribbons, double tau,
                                                              std::uint64_t tie_key);

/// Sine of the angle between two RGB vectors, in [0, 1]. Zero vectors have
/// no direction and give 0.
double cva_sin(const Color& f1, const Color& f2) noexcept;

/// Plain Euclidean RGB distance; kept to contrast with cva_sin, unused by
/// the hash.
double euclidean_color_distance(const Color& f1, const Color& f2) noexcept;

/// Per-channel means of the image.
Color reference_color(const RgbImage& img);

/// H_C: population variance of the CVA sines of each ribbon's selected
/// corners against the reference colour; 0 for fewer than two corners.
std::vector<double> local_color_vector(const RgbImage& secondary,
                                       const std::vector<std::vector<CornerPoint>>& selected,
                                       const Color& reference);

/// C_G: mean, standard deviation and signed cube root of the third central
/// moment, each averaged over the R, G and B channels.
std::array<double, 3> color_moments(const RgbImage& img);

}  // namespace rrhash
