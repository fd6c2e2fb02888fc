#pragma once

#include "rrhash/image.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rrhash {

/// Decodes PNG, JPEG or BMP. Grayscale inputs are expanded to RGB and any
/// alpha channel is dropped. Throws ImageError on failure.
RgbImage load_image(const std::string& path);

/// Writes an 8-bit PNG (values rounded and clamped).
void save_png(const RgbImage& img, const std::string& path);

/// Encodes to JPEG at `quality` (1..100) in memory and decodes it again.
RgbImage jpeg_roundtrip(const RgbImage& img, int quality);

/// Rounds every channel to the nearest integer in [0, 255].
RgbImage quantize_8bit(const RgbImage& img);

}  // namespace rrhash
