#include "rrhash/image.hpp"

#include "rrhash/error.hpp"

#include <string>
#include <utility>

namespace rrhash {

namespace {

void check_dims(int width, int height) {
    if (width < 1 || height < 1) {
        throw ImageError("image dimensions must be positive, got " + std::to_string(width) + "x" +
                         std::to_string(height));
    }
}

// Source coordinate of output pixel (x, y) after `turns` counter-clockwise
// quarter turns of a width x height source.
std::pair<int, int> unrotate(int x, int y, int width, int height, int turns) {
    switch (turns) {
        case 1: return {width - 1 - y, x};
        case 2: return {width - 1 - x, height - 1 - y};
        case 3: return {y, height - 1 - x};
        default: return {x, y};
    }
}

int normalize_turns(int quarter_turns) { return ((quarter_turns % 4) + 4) % 4; }

}  // namespace

RgbImage::RgbImage(int width, int height, double fill)
    : width_(width), height_(height) {
    check_dims(width, height);
    data_.assign(static_cast<std::size_t>(width) * height * 3, fill);
}

RgbImage::RgbImage(int width, int height, std::vector<double> interleaved)
    : width_(width), height_(height), data_(std::move(interleaved)) {
    check_dims(width, height);
    if (data_.size() != static_cast<std::size_t>(width) * height * 3) {
        throw ImageError("RGB buffer size does not match dimensions");
    }
}

LumaImage::LumaImage(int width, int height, double fill)
    : width_(width), height_(height) {
    check_dims(width, height);
    data_.assign(static_cast<std::size_t>(width) * height, fill);
}

LumaImage::LumaImage(int width, int height, std::vector<double> values)
    : width_(width), height_(height), data_(std::move(values)) {
    check_dims(width, height);
    if (data_.size() != static_cast<std::size_t>(width) * height) {
        throw ImageError("luma buffer size does not match dimensions");
    }
}

RgbImage rotate90(const RgbImage& img, int quarter_turns) {
    const int turns = normalize_turns(quarter_turns);
    const bool swap = turns % 2 == 1;
    RgbImage out(swap ? img.height() : img.width(), swap ? img.width() : img.height());
    for (int y = 0; y < out.height(); ++y) {
        for (int x = 0; x < out.width(); ++x) {
            auto [sx, sy] = unrotate(x, y, img.width(), img.height(), turns);
            for (int c = 0; c < 3; ++c) out.at(x, y, c) = img.at(sx, sy, c);
        }
    }
    return out;
}

LumaImage rotate90(const LumaImage& img, int quarter_turns) {
    const int turns = normalize_turns(quarter_turns);
    const bool swap = turns % 2 == 1;
    LumaImage out(swap ? img.height() : img.width(), swap ? img.width() : img.height());
    for (int y = 0; y < out.height(); ++y) {
        for (int x = 0; x < out.width(); ++x) {
            auto [sx, sy] = unrotate(x, y, img.width(), img.height(), turns);
            out.at(x, y) = img.at(sx, sy);
        }
    }
    return out;
}

RgbImage crop(const RgbImage& img, int x0, int y0, int width, int height) {
    if (x0 < 0 || y0 < 0 || width < 1 || height < 1 || x0 + width > img.width() ||
        y0 + height > img.height()) {
        throw ImageError("crop window outside image");
    }
    RgbImage out(width, height);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            for (int c = 0; c < 3; ++c) out.at(x, y, c) = img.at(x0 + x, y0 + y, c);
        }
    }
    return out;
}

}  // namespace rrhash
