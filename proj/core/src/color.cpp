#include "rrhash/color.hpp"

#include "rrhash/error.hpp"
#include "rrhash/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

namespace rrhash {

namespace {

// Separable Gaussian smoothing of a single plane, replicate border.
std::vector<double> smooth(const std::vector<double>& src, int w, int h, double sigma) {
    const int r = std::max(1, static_cast<int>(std::ceil(3.0 * sigma)));
    std::vector<double> k(2 * r + 1);
    double total = 0.0;
    for (int i = -r; i <= r; ++i) total += k[i + r] = std::exp(-(i * i) / (2.0 * sigma * sigma));
    for (double& v : k) v /= total;

    std::vector<double> tmp(src.size()), out(src.size());
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int i = -r; i <= r; ++i) acc += k[i + r] * src[static_cast<std::size_t>(y) * w + std::clamp(x + i, 0, w - 1)];
            tmp[static_cast<std::size_t>(y) * w + x] = acc;
        }
    }
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int i = -r; i <= r; ++i) acc += k[i + r] * tmp[static_cast<std::size_t>(std::clamp(y + i, 0, h - 1)) * w + x];
            out[static_cast<std::size_t>(y) * w + x] = acc;
        }
    }
    return out;
}

// Sliding-window maximum over a (2r+1)^2 square, clipped at the borders.
std::vector<double> window_max(const std::vector<double>& src, int w, int h, int r) {
    std::vector<double> tmp(src.size()), out(src.size());
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double m = -std::numeric_limits<double>::infinity();
            for (int i = std::max(0, x - r); i <= std::min(w - 1, x + r); ++i) m = std::max(m, src[static_cast<std::size_t>(y) * w + i]);
            tmp[static_cast<std::size_t>(y) * w + x] = m;
        }
    }
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double m = -std::numeric_limits<double>::infinity();
            for (int i = std::max(0, y - r); i <= std::min(h - 1, y + r); ++i) m = std::max(m, tmp[static_cast<std::size_t>(i) * w + x]);
            out[static_cast<std::size_t>(y) * w + x] = m;
        }
    }
    return out;
}

}  // namespace

std::vector<Corner> harris_corners(const LumaImage& lum, const HarrisParams& params) {
    const int w = lum.width();
    const int h = lum.height();
    const std::size_t n = static_cast<std::size_t>(w) * h;
    auto px = [&](int x, int y) { return lum.at(std::clamp(x, 0, w - 1), std::clamp(y, 0, h - 1)); };

    std::vector<double> ixx(n), iyy(n), ixy(n);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const double gx = ((px(x + 1, y - 1) + 2.0 * px(x + 1, y) + px(x + 1, y + 1)) -
                               (px(x - 1, y - 1) + 2.0 * px(x - 1, y) + px(x - 1, y + 1))) / 8.0;
            const double gy = ((px(x - 1, y + 1) + 2.0 * px(x, y + 1) + px(x + 1, y + 1)) -
                               (px(x - 1, y - 1) + 2.0 * px(x, y - 1) + px(x + 1, y - 1))) / 8.0;
            const std::size_t i = static_cast<std::size_t>(y) * w + x;
            ixx[i] = gx * gx;
            iyy[i] = gy * gy;
            ixy[i] = gx * gy;
        }
    }
    ixx = smooth(ixx, w, h, params.tensor_sigma);
    iyy = smooth(iyy, w, h, params.tensor_sigma);
    ixy = smooth(ixy, w, h, params.tensor_sigma);

    std::vector<double> response(n);
    double peak = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double det = ixx[i] * iyy[i] - ixy[i] * ixy[i];
        const double tr = ixx[i] + iyy[i];
        response[i] = det - params.kappa * tr * tr;
        peak = std::max(peak, response[i]);
    }
    std::vector<Corner> corners;
    if (peak <= 0.0) return corners;

    const double floor = params.relative_floor * peak;
    const auto local_max = window_max(response, w, h, params.suppression_radius);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const std::size_t i = static_cast<std::size_t>(y) * w + x;
            if (response[i] > floor && response[i] >= local_max[i]) corners.push_back({x, y, response[i]});
        }
    }
    return corners;
}

std::vector<std::vector<CornerPoint>> select_boundary_corners(const std::vector<Corner>& corners,
                                                              const RibbonMap& ribbons, double tau,
                                                              std::uint64_t tie_key) {
    if (!(tau > 0.0 && tau <= 1.0)) throw ParameterError("tau must lie in (0, 1]");
    const int n = ribbons.count();
    std::vector<std::vector<CornerPoint>> band(static_cast<std::size_t>(n));
    for (const Corner& c : corners) {
        if (c.x < 0 || c.y < 0 || c.x >= ribbons.side() || c.y >= ribbons.side()) continue;
        const int k = ribbons.label(c.x, c.y);
        if (k == 0) continue;
        if (ribbons.distance(c.x, c.y) > ribbons.outer_radius(k) - kBoundaryBand) {
            band[k - 1].push_back({c.x, c.y, c.response, k});
        }
    }

    const auto side = static_cast<std::uint64_t>(ribbons.side());
    for (auto& pts : band) {
        if (pts.empty()) continue;
        std::sort(pts.begin(), pts.end(), [&](const CornerPoint& a, const CornerPoint& b) {
            if (a.response != b.response) return a.response > b.response;
            const auto ka = mix64(tie_key, static_cast<std::uint64_t>(a.y) * side + a.x);
            const auto kb = mix64(tie_key, static_cast<std::uint64_t>(b.y) * side + b.x);
            if (ka != kb) return ka < kb;
            return std::tie(a.y, a.x) < std::tie(b.y, b.x);
        });
        const double wanted = static_cast<double>(pts.size()) * tau;
        std::size_t keep = static_cast<std::size_t>(std::ceil(wanted - 1e-9));
        keep = std::clamp<std::size_t>(keep, 1, pts.size());
        pts.resize(keep);
    }
    return band;
}

double cva_sin(const Color& f1, const Color& f2) noexcept {
    const double n1 = f1[0] * f1[0] + f1[1] * f1[1] + f1[2] * f1[2];
    const double n2 = f2[0] * f2[0] + f2[1] * f2[1] + f2[2] * f2[2];
    if (n1 == 0.0 || n2 == 0.0) return 0.0;
    // |f1 x f2|^2 = |f1|^2 |f2|^2 - (f1 . f2)^2, without the cancellation
    // of the dot-product form near parallel vectors.
    const double cx = f1[1] * f2[2] - f1[2] * f2[1];
    const double cy = f1[2] * f2[0] - f1[0] * f2[2];
    const double cz = f1[0] * f2[1] - f1[1] * f2[0];
    const double s = std::sqrt(cx * cx + cy * cy + cz * cz) / (std::sqrt(n1) * std::sqrt(n2));
    return std::clamp(s, 0.0, 1.0);
}

double euclidean_color_distance(const Color& f1, const Color& f2) noexcept {
    const double dr = f1[0] - f2[0], dg = f1[1] - f2[1], db = f1[2] - f2[2];
    return std::sqrt(dr * dr + dg * dg + db * db);
}

Color reference_color(const RgbImage& img) {
    Color sum{0.0, 0.0, 0.0};
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            for (int c = 0; c < 3; ++c) sum[c] += img.at(x, y, c);
        }
    }
    const double count = static_cast<double>(img.width()) * img.height();
    for (double& s : sum) s /= count;
    return sum;
}

std::vector<double> local_color_vector(const RgbImage& secondary,
                                       const std::vector<std::vector<CornerPoint>>& selected,
                                       const Color& reference) {
    std::vector<double> hc(selected.size(), 0.0);
    for (std::size_t k = 0; k < selected.size(); ++k) {
        const auto& pts = selected[k];
        if (pts.size() < 2) continue;
        std::vector<double> values;
        values.reserve(pts.size());
        for (const CornerPoint& p : pts) {
            if (p.x < 0 || p.y < 0 || p.x >= secondary.width() || p.y >= secondary.height()) {
                throw ShapeError("selected corner outside the secondary image");
            }
            values.push_back(cva_sin({secondary.at(p.x, p.y, 0), secondary.at(p.x, p.y, 1), secondary.at(p.x, p.y, 2)},
                                     reference));
        }
        double mean = 0.0;
        for (double v : values) mean += v;
        mean /= static_cast<double>(values.size());
        double var = 0.0;
        for (double v : values) var += (mean - v) * (mean - v);
        hc[k] = var / static_cast<double>(values.size());
    }
    return hc;
}

std::array<double, 3> color_moments(const RgbImage& img) {
    const double count = static_cast<double>(img.width()) * img.height();
    std::array<double, 3> out{0.0, 0.0, 0.0};
    for (int c = 0; c < 3; ++c) {
        double mean = 0.0;
        for (int y = 0; y < img.height(); ++y)
            for (int x = 0; x < img.width(); ++x) mean += img.at(x, y, c);
        mean /= count;
        double m2 = 0.0, m3 = 0.0;
        for (int y = 0; y < img.height(); ++y) {
            for (int x = 0; x < img.width(); ++x) {
                const double d = img.at(x, y, c) - mean;
                m2 += d * d;
                m3 += d * d * d;
            }
        }
        out[0] += mean;
        out[1] += std::sqrt(m2 / count);
        out[2] += std::cbrt(m3 / count);
    }
    for (double& v : out) v /= 3.0;
    return out;
}

}  // namespace rrhash
