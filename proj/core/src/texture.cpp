#include "rrhash/texture.hpp"

#include "rrhash/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace rrhash {

namespace {

__extension__ using wide_t = __int128;

constexpr double kFixedScale = 256.0;

std::int64_t to_fixed(double v) { return std::llround(v * kFixedScale); }

void validate(const QuadtreeParams& p) {
    if (!(p.variance_threshold >= 0.0)) throw ParameterError("variance threshold V_C must be >= 0");
    if (p.min_block < 2 || (p.min_block & (p.min_block - 1)) != 0) {
        throw ParameterError("quadtree min_block must be a power of two >= 2");
    }
    if (p.fill_value < 0.0 || p.fill_value > 255.0) throw ParameterError("fill value outside [0, 255]");
}

int next_pow2(int v) {
    int p = 1;
    while (p < v) p <<= 1;
    return p;
}

struct Box {
    int x0 = 0, y0 = 0, x1 = 0, y1 = 0;  // half-open
    bool empty() const { return x1 <= x0 || y1 <= y0; }
};

// Quadtree over a padded power-of-two square in which only the pixels
// accepted by `inside` keep their luminance. Sums are taken from integral
// images restricted to the bounding box of the region; everything else is
// fill.
class QuadtreeCounter {
public:
    QuadtreeCounter(const QuadtreeParams& params, int width, int height)
        : params_(params), width_(width), height_(height), root_(next_pow2(std::max(width, height))),
          fill_(to_fixed(params.fill_value)) {
        const double vc = params.variance_threshold;
        exact_threshold_ = vc == std::floor(vc) && vc < 1e6;
        threshold_int_ = static_cast<std::int64_t>(vc);
    }

    template <typename Inside>
    int count(const std::vector<std::int64_t>& fixed, const Box& box, Inside inside) {
        box_ = box;
        const int bw = box.x1 - box.x0;
        const int bh = box.y1 - box.y0;
        stride_ = bw + 1;
        const std::size_t cells = static_cast<std::size_t>(bw + 1) * (bh + 1);
        s1_.assign(cells, 0);
        s2_.assign(cells, 0);
        cnt_.assign(cells, 0);
        for (int y = 0; y < bh; ++y) {
            std::int64_t r1 = 0, r2 = 0, rc = 0;
            for (int x = 0; x < bw; ++x) {
                const int gx = box.x0 + x;
                const int gy = box.y0 + y;
                if (inside(gx, gy)) {
                    const std::int64_t q = fixed[static_cast<std::size_t>(gy) * width_ + gx];
                    r1 += q;
                    r2 += q * q;
                    rc += 1;
                }
                const std::size_t at = static_cast<std::size_t>(y + 1) * stride_ + (x + 1);
                const std::size_t up = at - stride_;
                s1_[at] = s1_[up] + r1;
                s2_[at] = s2_[up] + r2;
                cnt_[at] = cnt_[up] + rc;
            }
        }

        int splits = 0;
        struct Node {
            int x, y, size;
        };
        std::vector<Node> stack{{0, 0, root_}};
        while (!stack.empty()) {
            const Node n = stack.back();
            stack.pop_back();
            if (n.size <= params_.min_block) continue;
            if (!should_split(n.x, n.y, n.size)) continue;
            ++splits;
            const int h = n.size / 2;
            stack.push_back({n.x, n.y, h});
            stack.push_back({n.x + h, n.y, h});
            stack.push_back({n.x, n.y + h, h});
            stack.push_back({n.x + h, n.y + h, h});
        }
        return splits;
    }

private:
    bool should_split(int x, int y, int size) const {
        const std::int64_t n = static_cast<std::int64_t>(size) * size;
        std::int64_t s = 0, s2 = 0, c = 0;
        const Box clip{std::max(x, box_.x0), std::max(y, box_.y0), std::min(x + size, box_.x1),
                       std::min(y + size, box_.y1)};
        if (!clip.empty()) {
            const int ax = clip.x0 - box_.x0, ay = clip.y0 - box_.y0;
            const int bx = clip.x1 - box_.x0, by = clip.y1 - box_.y0;
            auto rect = [&](const std::vector<std::int64_t>& t) {
                return t[idx(bx, by)] - t[idx(ax, by)] - t[idx(bx, ay)] + t[idx(ax, ay)];
            };
            s = rect(s1_);
            s2 = rect(s2_);
            c = rect(cnt_);
        }
        s += fill_ * (n - c);
        s2 += fill_ * fill_ * (n - c);
        // n * var = s2 - s^2 / n, compared in units of 1/256^2.
        const wide_t spread = static_cast<wide_t>(n) * s2 - static_cast<wide_t>(s) * s;
        const wide_t scale = static_cast<wide_t>(kFixedScale * kFixedScale) * n * n;
        if (exact_threshold_) return spread > scale * threshold_int_;
        return static_cast<long double>(spread) >
               static_cast<long double>(params_.variance_threshold) * static_cast<long double>(scale);
    }

    std::size_t idx(int x, int y) const { return static_cast<std::size_t>(y) * stride_ + x; }

    QuadtreeParams params_;
    int width_;
    int height_;
    int root_;
    std::int64_t fill_;
    bool exact_threshold_ = false;
    std::int64_t threshold_int_ = 0;
    Box box_;
    int stride_ = 0;
    std::vector<std::int64_t> s1_, s2_, cnt_;
};

std::vector<std::int64_t> fixed_luma(const LumaImage& lum) {
    std::vector<std::int64_t> out(lum.data().size());
    std::transform(lum.data().begin(), lum.data().end(), out.begin(),
                   [](double v) { return to_fixed(std::clamp(v, 0.0, 255.0)); });
    return out;
}

}  // namespace

int quadtree_count(const LumaImage& lum, const std::vector<bool>& region, const QuadtreeParams& params) {
    validate(params);
    const int w = lum.width();
    const int h = lum.height();
    if (region.size() != static_cast<std::size_t>(w) * h) throw ShapeError("region mask size mismatch");

    Box box{w, h, 0, 0};
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (region[static_cast<std::size_t>(y) * w + x]) {
                box.x0 = std::min(box.x0, x);
                box.y0 = std::min(box.y0, y);
                box.x1 = std::max(box.x1, x + 1);
                box.y1 = std::max(box.y1, y + 1);
            }
        }
    }
    if (box.empty()) box = {0, 0, 0, 0};
    QuadtreeCounter counter(params, w, h);
    return counter.count(fixed_luma(lum), box,
                         [&](int x, int y) { return static_cast<bool>(region[static_cast<std::size_t>(y) * w + x]); });
}

std::vector<double> local_texture_vector(const LumaImage& lum, const RibbonMap& ribbons,
                                         const QuadtreeParams& params) {
    validate(params);
    const int side = ribbons.side();
    if (lum.width() != side || lum.height() != side) {
        throw ShapeError("ribbon map built for " + std::to_string(side) + "x" + std::to_string(side) +
                         " but luminance is " + std::to_string(lum.width()) + "x" + std::to_string(lum.height()));
    }
    const int n = ribbons.count();
    std::vector<Box> boxes(static_cast<std::size_t>(n) + 1, Box{side, side, 0, 0});
    for (int y = 0; y < side; ++y) {
        for (int x = 0; x < side; ++x) {
            Box& b = boxes[ribbons.label(x, y)];
            b.x0 = std::min(b.x0, x);
            b.y0 = std::min(b.y0, y);
            b.x1 = std::max(b.x1, x + 1);
            b.y1 = std::max(b.y1, y + 1);
        }
    }

    const auto fixed = fixed_luma(lum);
    QuadtreeCounter counter(params, side, side);
    std::vector<double> hq(static_cast<std::size_t>(n), 0.0);
    for (int k = 1; k <= n; ++k) {
        const Box& b = boxes[k];
        if (b.empty()) continue;
        hq[k - 1] = counter.count(fixed, b, [&](int x, int y) { return ribbons.label(x, y) == k; });
    }
    return hq;
}

int quantize_level(double luma, int levels) noexcept {
    const double v = std::clamp(luma, 0.0, 255.0);
    const int level = static_cast<int>(std::floor(v * levels / 256.0)) + 1;
    return std::clamp(level, 1, levels);
}

Glcm glcm_from_levels(const std::vector<int>& raster, int width, int height, int distance,
                      GlcmDirection direction, int levels) {
    if (levels < 1) throw ParameterError("GLCM needs at least one gray level");
    if (distance < 1) throw ParameterError("GLCM distance must be >= 1");
    if (raster.size() != static_cast<std::size_t>(width) * height) throw ShapeError("level raster size mismatch");

    // (row step, column step) of the forward neighbour; the reverse
    // neighbour is covered by symmetric counting.
    int dr = 0, dc = 0;
    switch (direction) {
        case GlcmDirection::deg0: dc = distance; break;
        case GlcmDirection::deg45: dr = -distance; dc = distance; break;
        case GlcmDirection::deg90: dr = distance; break;
        case GlcmDirection::deg135: dr = distance; dc = distance; break;
    }

    Glcm g;
    g.levels = levels;
    g.distance = distance;
    g.direction = direction;
    g.counts.assign(static_cast<std::size_t>(levels) * levels, 0);
    for (int r = 0; r < height; ++r) {
        for (int c = 0; c < width; ++c) {
            const int r2 = r + dr;
            const int c2 = c + dc;
            if (r2 < 0 || r2 >= height || c2 < 0 || c2 >= width) continue;
            const int a = raster[static_cast<std::size_t>(r) * width + c];
            const int b = raster[static_cast<std::size_t>(r2) * width + c2];
            if (a < 1 || a > levels || b < 1 || b > levels) throw ParameterError("gray level outside 1..levels");
            ++g.counts[static_cast<std::size_t>(a - 1) * levels + (b - 1)];
            ++g.counts[static_cast<std::size_t>(b - 1) * levels + (a - 1)];
            g.total_pairs += 2;
        }
    }
    if (g.total_pairs == 0) throw ImageError("image too small for a GLCM at this distance and direction");
    g.probabilities.resize(g.counts.size());
    for (std::size_t i = 0; i < g.counts.size(); ++i) {
        g.probabilities[i] = static_cast<double>(g.counts[i]) / static_cast<double>(g.total_pairs);
    }
    return g;
}

Glcm glcm(const LumaImage& lum, int distance, GlcmDirection direction, int levels) {
    if (levels < 1) throw ParameterError("GLCM needs at least one gray level");
    std::vector<int> raster(lum.data().size());
    std::transform(lum.data().begin(), lum.data().end(), raster.begin(),
                   [levels](double v) { return quantize_level(v, levels); });
    return glcm_from_levels(raster, lum.width(), lum.height(), distance, direction, levels);
}

GlcmScalars glcm_scalars(const Glcm& g) {
    const int n = g.levels;
    double mean_x = 0.0, mean_y = 0.0;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            mean_x += i * g.at(i, j);
            mean_y += j * g.at(i, j);
        }
    }
    double var_x = 0.0, var_y = 0.0, cov = 0.0;
    GlcmScalars out;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const double p = g.at(i, j);
            var_x += (i - mean_x) * (i - mean_x) * p;
            var_y += (j - mean_y) * (j - mean_y) * p;
            cov += (i - mean_x) * (j - mean_y) * p;
            out.contrast += static_cast<double>((i - j) * (i - j)) * p;
            if (p > 0.0) out.entropy -= p * std::log10(p);
        }
    }
    const double denom = std::sqrt(var_x) * std::sqrt(var_y);
    out.correlation = denom > 0.0 ? cov / denom : 0.0;
    return out;
}

}  // namespace rrhash
