#pragma once

// Reference implementations written from the definitions, sharing no code
// with the library.

#include <array>
#include <cstdint>
#include <vector>

namespace rrhash::oracle {

/// Recursive quadtree split count over an integer image. Pixels outside
/// `region` read as `fill`; the image is padded with `fill` to the next
/// power of two. A block of side s splits when its population variance
/// exceeds vc (compared exactly as n*S2 - S^2 > vc * n^2) and s > min_block.
int quadtree(const std::vector<int>& pixels, int width, int height, const std::vector<bool>& region, std::int64_t vc,
             int min_block = 2, int fill = 255);

/// GLCM counts by enumerating every ordered pair of pixels and checking
/// whether they are (d, theta) neighbours in either order. Row-major
/// levels x levels, gray levels 1..levels.
std::vector<std::int64_t> glcm_counts(const std::vector<int>& levels_raster, int width, int height, int row_step,
                                      int col_step, int levels);

struct Scalars {
    double correlation, contrast, entropy;
};
Scalars glcm_scalars(const std::vector<double>& p, int levels);

/// Probability that a positive score is below a negative one, ties one
/// half, by comparing every pair.
double mann_whitney_auc(const std::vector<double>& positives, const std::vector<double>& negatives);

/// Keyed Fisher-Yates from the documented algorithm: SplitMix64 seeded
/// with the key, j drawn from [0, i] by rejection below 2^64 mod (i+1).
std::vector<double> scramble(const std::vector<double>& values, std::uint64_t key);

/// Per-channel moment averages by direct summation.
std::array<double, 3> color_moments(const std::vector<std::array<double, 3>>& pixels);

double population_variance(const std::vector<double>& v);

}  // namespace rrhash::oracle
