#include "rrhash/imaging.hpp"

#include "rrhash/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <string>

namespace rrhash {

namespace {

struct Tap {
    int i0;
    int i1;
    double w0;
    double w1;
};

Tap direct_tap(int x, int src_len, int dst_len) {
    const double s = (x + 0.5) * static_cast<double>(src_len) / dst_len - 0.5;
    if (s <= 0.0) return {0, 0, 1.0, 0.0};
    if (s >= src_len - 1) return {src_len - 1, src_len - 1, 1.0, 0.0};
    const int i0 = static_cast<int>(std::floor(s));
    const double f = s - i0;
    return {i0, i0 + 1, 1.0 - f, f};
}

// The second half of the table mirrors the first so that flipping the input
// flips the output exactly.
std::vector<Tap> make_taps(int src_len, int dst_len) {
    std::vector<Tap> taps(dst_len);
    for (int x = 0; x < dst_len; ++x) {
        const int mirror = dst_len - 1 - x;
        if (x <= mirror) {
            taps[x] = direct_tap(x, src_len, dst_len);
        } else {
            const Tap& m = taps[mirror];
            taps[x] = {src_len - 1 - m.i1, src_len - 1 - m.i0, m.w1, m.w0};
        }
    }
    return taps;
}

template <std::size_t N>
double sorted_sum(std::array<double, N>& terms) {
    std::sort(terms.begin(), terms.end());
    double acc = 0.0;
    for (double t : terms) acc += t;
    return acc;
}

}  // namespace

RgbImage resize_bilinear(const RgbImage& img, int width, int height) {
    if (img.width() < 2 || img.height() < 2) {
        throw ImageError("cannot resize a degenerate image (" + std::to_string(img.width()) + "x" +
                         std::to_string(img.height()) + ")");
    }
    if (width < 1 || height < 1) throw ParameterError("resize target must be positive");
    if (width == img.width() && height == img.height()) return img;

    const auto xt = make_taps(img.width(), width);
    const auto yt = make_taps(img.height(), height);
    RgbImage out(width, height);
    for (int y = 0; y < height; ++y) {
        const Tap& ty = yt[y];
        for (int x = 0; x < width; ++x) {
            const Tap& tx = xt[x];
            const double w00 = tx.w0 * ty.w0;
            const double w10 = tx.w1 * ty.w0;
            const double w01 = tx.w0 * ty.w1;
            const double w11 = tx.w1 * ty.w1;
            for (int c = 0; c < 3; ++c) {
                std::array<double, 4> terms{img.at(tx.i0, ty.i0, c) * w00, img.at(tx.i1, ty.i0, c) * w10,
                                            img.at(tx.i0, ty.i1, c) * w01, img.at(tx.i1, ty.i1, c) * w11};
                out.at(x, y, c) = std::clamp(sorted_sum(terms), 0.0, 255.0);
            }
        }
    }
    return out;
}

RgbImage resize_bilinear(const RgbImage& img, int side) { return resize_bilinear(img, side, side); }

GaussianMask gaussian_mask(int size, double sigma) {
    if (size < 1 || size % 2 == 0) {
        throw ParameterError("Gaussian mask size must be a positive odd integer, got " + std::to_string(size));
    }
    if (!(sigma > 0.0)) throw ParameterError("Gaussian sigma must be positive");

    GaussianMask mask;
    mask.size_ = size;
    mask.sigma_ = sigma;
    mask.weights_.assign(static_cast<std::size_t>(size) * size, 0.0);
    const int r = size / 2;
    double total = 0.0;
    for (int v = -r; v <= r; ++v) {
        for (int u = -r; u <= r; ++u) {
            const double w = std::exp(-(u * u + v * v) / (2.0 * sigma * sigma));
            mask.weights_[static_cast<std::size_t>(v + r) * size + (u + r)] = w;
            total += w;
        }
    }
    for (double& w : mask.weights_) w /= total;
    return mask;
}

RgbImage gaussian_filter(const RgbImage& img, const GaussianMask& mask) {
    const int r = mask.radius();
    if (img.width() < mask.size() || img.height() < mask.size()) {
        throw ImageError("image smaller than the Gaussian mask");
    }

    // Offsets grouped by squared radius; every member of a group has the
    // same weight.
    struct Group {
        double weight;
        std::vector<std::pair<int, int>> offsets;
    };
    std::map<int, Group> by_radius;
    for (int v = -r; v <= r; ++v) {
        for (int u = -r; u <= r; ++u) {
            auto& g = by_radius[u * u + v * v];
            g.weight = mask.weight(u, v);
            g.offsets.emplace_back(u, v);
        }
    }
    std::vector<Group> groups;
    std::size_t widest = 0;
    for (auto& [_, g] : by_radius) {
        widest = std::max(widest, g.offsets.size());
        groups.push_back(std::move(g));
    }

    const int w = img.width();
    const int h = img.height();
    RgbImage out(w, h);
    std::vector<double> vals(widest);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            for (int c = 0; c < 3; ++c) {
                double acc = 0.0;
                for (const Group& g : groups) {
                    const std::size_t n = g.offsets.size();
                    for (std::size_t k = 0; k < n; ++k) {
                        const int sx = std::clamp(x + g.offsets[k].first, 0, w - 1);
                        const int sy = std::clamp(y + g.offsets[k].second, 0, h - 1);
                        vals[k] = img.at(sx, sy, c);
                    }
                    std::sort(vals.begin(), vals.begin() + static_cast<std::ptrdiff_t>(n));
                    double s = 0.0;
                    for (std::size_t k = 0; k < n; ++k) s += vals[k];
                    acc += g.weight * s;
                }
                out.at(x, y, c) = std::clamp(acc, 0.0, 255.0);
            }
        }
    }
    return out;
}

YCbCrPlanes rgb_to_ycbcr(const RgbImage& img) {
    const int w = img.width();
    const int h = img.height();
    YCbCrPlanes p{LumaImage(w, h), LumaImage(w, h), LumaImage(w, h)};
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const double r = img.at(x, y, 0);
            const double g = img.at(x, y, 1);
            const double b = img.at(x, y, 2);
            p.y.at(x, y) = std::clamp(luma_of(r, g, b), 0.0, 255.0);
            p.cb.at(x, y) = std::clamp(-0.1687 * r - 0.3313 * g + 0.5 * b + 128.0, 0.0, 255.0);
            p.cr.at(x, y) = std::clamp(0.5 * r - 0.4187 * g - 0.0813 * b + 128.0, 0.0, 255.0);
        }
    }
    return p;
}

LumaImage luminance(const RgbImage& img) {
    LumaImage out(img.width(), img.height());
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            out.at(x, y) = std::clamp(luma_of(img.at(x, y, 0), img.at(x, y, 1), img.at(x, y, 2)), 0.0, 255.0);
        }
    }
    return out;
}

RgbImage preprocess(const RgbImage& img, int side, int mask_size, double sigma) {
    if (side < 8) throw ParameterError("normalized size L must be at least 8");
    return gaussian_filter(resize_bilinear(img, side), gaussian_mask(mask_size, sigma));
}

}  // namespace rrhash
