#include "rrhash/attacks.hpp"

#include "rrhash/error.hpp"
#include "rrhash/image_io.hpp"
#include "rrhash/imaging.hpp"
#include "rrhash/rng.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace rrhash {

namespace {

struct Range {
    double lo;
    double hi;
    bool integral;
};

Range range_of(Manipulation m) {
    switch (m) {
        case Manipulation::scaling: return {0.8, 1.25, false};
        case Manipulation::salt_pepper: return {0.001, 0.01, false};
        case Manipulation::jpeg: return {55, 100, true};
        case Manipulation::gaussian_filter: return {0.1, 1.0, false};
        case Manipulation::circular_blur: return {0.2, 1.1, false};
        case Manipulation::motion_blur: return {1, 10, true};
        case Manipulation::rotate_crop: return {-1.0, 1.0, false};
        case Manipulation::large_rotate: return {-90.0, 90.0, false};
    }
    return {0, 0, false};
}

constexpr std::array<std::pair<Manipulation, std::string_view>, 8> kNames{{
    {Manipulation::scaling, "scaling"},
    {Manipulation::salt_pepper, "salt_pepper"},
    {Manipulation::jpeg, "jpeg"},
    {Manipulation::gaussian_filter, "gaussian_filter"},
    {Manipulation::circular_blur, "circular_blur"},
    {Manipulation::motion_blur, "motion_blur"},
    {Manipulation::rotate_crop, "rotate_crop"},
    {Manipulation::large_rotate, "large_rotate"},
}};

RgbImage salt_pepper(const RgbImage& img, double density, std::uint64_t seed) {
    RgbImage out = img;
    SplitMix64 rng(seed);
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            const double u = rng.uniform();
            if (u >= density) continue;
            const double v = u < density / 2.0 ? 0.0 : 255.0;
            for (int c = 0; c < 3; ++c) out.at(x, y, c) = v;
        }
    }
    return out;
}

int expanded_side(int side, int other, double c, double s) {
    int out = static_cast<int>(std::ceil(side * std::abs(c) + other * std::abs(s) - 1e-9));
    out = std::max(out, 1);
    if ((out - side) % 2 != 0) ++out;
    return out;
}

}  // namespace

std::string_view to_string(Manipulation m) noexcept {
    for (const auto& [k, name] : kNames) {
        if (k == m) return name;
    }
    return "unknown";
}

Manipulation parse_manipulation(std::string_view name) {
    for (const auto& [k, n] : kNames) {
        if (n == name) return k;
    }
    throw ParameterError("unknown manipulation '" + std::string(name) + "'");
}

void validate(const ManipulationSpec& spec) {
    const Range r = range_of(spec.kind);
    const double p = spec.parameter;
    const double eps = 1e-9;
    if (!std::isfinite(p) || p < r.lo - eps || p > r.hi + eps) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "%s parameter %g outside [%g, %g]", std::string(to_string(spec.kind)).c_str(), p,
                      r.lo, r.hi);
        throw ParameterError(buf);
    }
    if (r.integral && p != std::round(p)) {
        throw ParameterError(std::string(to_string(spec.kind)) + " parameter must be an integer");
    }
}

Kernel disk_kernel(double radius) {
    if (!(radius > 0.0)) throw ParameterError("disk radius must be positive");
    const int half = static_cast<int>(std::ceil(radius - 1e-12));
    const int size = 2 * half + 1;
    constexpr int kSub = 32;
    Kernel k{size, size, std::vector<double>(static_cast<std::size_t>(size) * size, 0.0)};
    const double r2 = radius * radius;
    double total = 0.0;
    for (int j = -half; j <= half; ++j) {
        for (int i = -half; i <= half; ++i) {
            int inside = 0;
            for (int sj = 0; sj < kSub; ++sj) {
                const double py = j - 0.5 + (sj + 0.5) / kSub;
                for (int si = 0; si < kSub; ++si) {
                    const double px = i - 0.5 + (si + 0.5) / kSub;
                    if (px * px + py * py <= r2) ++inside;
                }
            }
            const double w = static_cast<double>(inside) / (kSub * kSub);
            k.weights[static_cast<std::size_t>(j + half) * size + (i + half)] = w;
            total += w;
        }
    }
    if (total <= 0.0) {
        // Radius below the sampling resolution: identity.
        k.weights.assign(k.weights.size(), 0.0);
        k.weights[k.weights.size() / 2] = 1.0;
        return k;
    }
    for (double& w : k.weights) w /= total;
    return k;
}

Kernel motion_kernel(int length) {
    if (length < 1) throw ParameterError("motion length must be >= 1");
    return {length, 1, std::vector<double>(static_cast<std::size_t>(length), 1.0 / length)};
}

RgbImage convolve(const RgbImage& img, const Kernel& kernel) {
    const int ax = (kernel.width - 1) / 2;
    const int ay = (kernel.height - 1) / 2;
    const int w = img.width();
    const int h = img.height();
    RgbImage out(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            for (int c = 0; c < 3; ++c) {
                double acc = 0.0;
                for (int j = 0; j < kernel.height; ++j) {
                    const int sy = std::clamp(y + j - ay, 0, h - 1);
                    for (int i = 0; i < kernel.width; ++i) {
                        const int sx = std::clamp(x + i - ax, 0, w - 1);
                        acc += kernel.weights[static_cast<std::size_t>(j) * kernel.width + i] * img.at(sx, sy, c);
                    }
                }
                out.at(x, y, c) = std::clamp(acc, 0.0, 255.0);
            }
        }
    }
    return out;
}

RgbImage rotate(const RgbImage& img, double degrees, bool expand) {
    const double turns = degrees / 90.0;
    if (turns == std::round(turns)) {
        const int q = static_cast<int>(std::lround(turns));
        if (expand || img.width() == img.height() || q % 2 == 0) return rotate90(img, q);
    }

    const double rad = degrees * std::numbers::pi / 180.0;
    const double c = std::cos(rad);
    const double s = std::sin(rad);
    const int w = img.width();
    const int h = img.height();
    const int ow = expand ? expanded_side(w, h, c, s) : w;
    const int oh = expand ? expanded_side(h, w, c, s) : h;
    const double cx = (w - 1) / 2.0, cy = (h - 1) / 2.0;
    const double ocx = (ow - 1) / 2.0, ocy = (oh - 1) / 2.0;

    RgbImage out(ow, oh, 255.0);
    for (int y = 0; y < oh; ++y) {
        const double dy = y - ocy;
        for (int x = 0; x < ow; ++x) {
            const double dx = x - ocx;
            const double sx = cx + c * dx - s * dy;
            const double sy = cy + s * dx + c * dy;
            if (sx < 0.0 || sy < 0.0 || sx > w - 1 || sy > h - 1) continue;
            const int x0 = std::min(static_cast<int>(sx), w - 1);
            const int y0 = std::min(static_cast<int>(sy), h - 1);
            const int x1 = std::min(x0 + 1, w - 1);
            const int y1 = std::min(y0 + 1, h - 1);
            const double fx = sx - x0, fy = sy - y0;
            for (int ch = 0; ch < 3; ++ch) {
                const double top = img.at(x0, y0, ch) * (1.0 - fx) + img.at(x1, y0, ch) * fx;
                const double bottom = img.at(x0, y1, ch) * (1.0 - fx) + img.at(x1, y1, ch) * fx;
                out.at(x, y, ch) = std::clamp(top * (1.0 - fy) + bottom * fy, 0.0, 255.0);
            }
        }
    }
    return out;
}

RgbImage apply_manipulation(const RgbImage& img, const ManipulationSpec& spec) {
    validate(spec);
    const double p = spec.parameter;
    switch (spec.kind) {
        case Manipulation::scaling: {
            const int w = std::max(2, static_cast<int>(std::lround(img.width() * p)));
            const int h = std::max(2, static_cast<int>(std::lround(img.height() * p)));
            return resize_bilinear(img, w, h);
        }
        case Manipulation::salt_pepper: return salt_pepper(img, p, spec.seed);
        case Manipulation::jpeg: return jpeg_roundtrip(img, static_cast<int>(p));
        case Manipulation::gaussian_filter: return gaussian_filter(img, gaussian_mask(3, p));
        case Manipulation::circular_blur: return convolve(img, disk_kernel(p));
        case Manipulation::motion_blur: return convolve(img, motion_kernel(static_cast<int>(p)));
        case Manipulation::rotate_crop: return rotate(img, p, false);
        case Manipulation::large_rotate: return rotate(img, p, true);
    }
    throw ParameterError("unknown manipulation");
}

RgbImage central_crop_for_large_rotation(const RgbImage& img) {
    if (img.width() < kLargeRotationCrop || img.height() < kLargeRotationCrop) {
        throw ImageError("image smaller than the 361x361 central crop");
    }
    return crop(img, (img.width() - kLargeRotationCrop) / 2, (img.height() - kLargeRotationCrop) / 2,
                kLargeRotationCrop, kLargeRotationCrop);
}

std::vector<ManipulationSpec> attack_specs(std::uint64_t seed) {
    std::vector<ManipulationSpec> specs;
    specs.reserve(82);
    for (int i = 0; i < 10; ++i) specs.push_back({Manipulation::scaling, (80 + 5 * i) / 100.0, 0});
    for (int i = 0; i < 10; ++i) {
        specs.push_back({Manipulation::salt_pepper, (i + 1) / 1000.0, mix64(seed, static_cast<std::uint64_t>(i))});
    }
    for (int i = 0; i < 10; ++i) specs.push_back({Manipulation::jpeg, 55.0 + 5 * i, 0});
    for (int i = 0; i < 10; ++i) specs.push_back({Manipulation::gaussian_filter, (i + 1) / 10.0, 0});
    for (int i = 0; i < 10; ++i) specs.push_back({Manipulation::circular_blur, (2 + i) / 10.0, 0});
    for (int i = 0; i < 10; ++i) specs.push_back({Manipulation::motion_blur, i + 1.0, 0});
    for (double a : {1.0, 0.75, 0.5, 0.25}) {
        specs.push_back({Manipulation::rotate_crop, a, 0});
        specs.push_back({Manipulation::rotate_crop, -a, 0});
    }
    for (double a : {90.0, 45.0, 30.0, 15.0, 10.0, 5.0, 3.0}) {
        specs.push_back({Manipulation::large_rotate, a, 0});
        specs.push_back({Manipulation::large_rotate, -a, 0});
    }
    return specs;
}

std::vector<AttackedImage> full_attack_matrix(const RgbImage& img, std::uint64_t seed) {
    std::vector<AttackedImage> out;
    for (const auto& spec : attack_specs(seed)) out.push_back({spec, apply_manipulation(img, spec)});
    return out;
}

std::pair<RgbImage, RgbImage> similar_pair(const RgbImage& original, const AttackedImage& attacked) {
    if (attacked.spec.kind == Manipulation::large_rotate) {
        return {central_crop_for_large_rotation(original), central_crop_for_large_rotation(attacked.image)};
    }
    return {original, attacked.image};
}

std::string attack_label(const ManipulationSpec& spec) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s__%g", std::string(to_string(spec.kind)).c_str(), spec.parameter);
    return buf;
}

}  // namespace rrhash
