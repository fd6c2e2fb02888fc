#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace rrhash {

/// Dense RGB raster, row-major, channels interleaved. Values are reals in
/// [0, 255]; quantization to 8 bits only happens on export.
class RgbImage {
public:
    RgbImage() = default;
    RgbImage(int width, int height, double fill = 0.0);
    RgbImage(int width, int height, std::vector<double> interleaved);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    bool empty() const noexcept { return data_.empty(); }

    double& at(int x, int y, int c) noexcept {
        return data_[(static_cast<std::size_t>(y) * width_ + x) * 3 + c];
    }
    double at(int x, int y, int c) const noexcept {
        return data_[(static_cast<std::size_t>(y) * width_ + x) * 3 + c];
    }

    std::span<double> data() noexcept { return data_; }
    std::span<const double> data() const noexcept { return data_; }

    bool operator==(const RgbImage&) const = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<double> data_;
};

/// Single-channel raster (luminance or a chroma plane).
class LumaImage {
public:
    LumaImage() = default;
    LumaImage(int width, int height, double fill = 0.0);
    LumaImage(int width, int height, std::vector<double> values);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    bool empty() const noexcept { return data_.empty(); }

    double& at(int x, int y) noexcept { return data_[static_cast<std::size_t>(y) * width_ + x]; }
    double at(int x, int y) const noexcept { return data_[static_cast<std::size_t>(y) * width_ + x]; }

    std::span<double> data() noexcept { return data_; }
    std::span<const double> data() const noexcept { return data_; }

    bool operator==(const LumaImage&) const = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<double> data_;
};

// Exact geometric helpers; these are pixel permutations, no resampling.
RgbImage rotate90(const RgbImage& img, int quarter_turns);
LumaImage rotate90(const LumaImage& img, int quarter_turns);
RgbImage crop(const RgbImage& img, int x0, int y0, int width, int height);

}  // namespace rrhash
