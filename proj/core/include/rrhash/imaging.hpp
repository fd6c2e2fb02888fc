#pragma once

#include "rrhash/image.hpp"

#include <vector>

namespace rrhash {

/// Bilinear resampling with pixel-centre alignment and edge clamping.
///
/// Output values are convex combinations of input values, so the [0, 255]
/// range is preserved. Each output pixel is accumulated as a sorted sum of
/// its four weighted taps, which makes the result exactly equivariant under
/// quarter turns and mirrors of the input: resize(rotate90(img)) is
/// bit-identical to rotate90(resize(img)).
RgbImage resize_bilinear(const RgbImage& img, int width, int height);

/// Square resize to L x L.
RgbImage resize_bilinear(const RgbImage& img, int side);

/// Normalized Gaussian convolution mask of odd size.
class GaussianMask {
public:
    int size() const noexcept { return size_; }
    int radius() const noexcept { return size_ / 2; }
    double sigma() const noexcept { return sigma_; }
    /// Weight at offset (du, dv) from the centre, |du|, |dv| <= radius().
    double weight(int du, int dv) const noexcept {
        return weights_[static_cast<std::size_t>(dv + radius()) * size_ + (du + radius())];
    }
    const std::vector<double>& weights() const noexcept { return weights_; }

private:
    friend GaussianMask gaussian_mask(int size, double sigma);
    int size_ = 1;
    double sigma_ = 1.0;
    std::vector<double> weights_{1.0};
};

/// Throws ParameterError for even size or sigma <= 0.
GaussianMask gaussian_mask(int size, double sigma);

/// Per-channel convolution with replicate-border padding.
///
/// Taps sharing a radius u^2 + v^2 carry the same weight; their pixel values
/// are summed in sorted order so the filter commutes bit-exactly with quarter
/// turns and mirrors.
RgbImage gaussian_filter(const RgbImage& img, const GaussianMask& mask);

struct YCbCrPlanes {
    LumaImage y;
    LumaImage cb;
    LumaImage cr;
};

/// BT.601 full-range transform, outputs clamped to [0, 255].
YCbCrPlanes rgb_to_ycbcr(const RgbImage& img);

/// Y plane only.
LumaImage luminance(const RgbImage& img);

inline double luma_of(double r, double g, double b) noexcept {
    return 0.299 * r + 0.587 * g + 0.114 * b;
}

/// Resize to L x L then Gaussian low-pass: produces the secondary image.
RgbImage preprocess(const RgbImage& img, int side, int mask_size, double sigma);

}  // namespace rrhash
