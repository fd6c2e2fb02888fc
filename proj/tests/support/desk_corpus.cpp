#include "desk_corpus.hpp"

#include "rrhash/rng.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace rrhash::testing {

namespace {

using Rgb = std::array<double, 3>;

double lerp(double a, double b, double t) { return a + (b - a) * t; }

// h in [0, 1), s and v in [0, 1]; output in [0, 255].
Rgb hsv(double h, double s, double v) {
    h = (h - std::floor(h)) * 6.0;
    const int i = static_cast<int>(h) % 6;
    const double f = h - std::floor(h);
    const double p = v * (1 - s), q = v * (1 - s * f), t = v * (1 - s * (1 - f));
    Rgb c;
    switch (i) {
        case 0: c = {v, t, p}; break;
        case 1: c = {q, v, p}; break;
        case 2: c = {p, v, t}; break;
        case 3: c = {p, q, v}; break;
        case 4: c = {t, p, v}; break;
        default: c = {v, p, q}; break;
    }
    for (double& x : c) x *= 255.0;
    return c;
}

class ValueNoise {
public:
    ValueNoise(std::uint64_t seed, int cells) : cells_(cells), grid_((cells + 1) * (cells + 1)) {
        SplitMix64 rng(seed);
        for (double& v : grid_) v = rng.uniform() * 2.0 - 1.0;
    }

    double at(double u, double v) const {
        const double x = u * cells_, y = v * cells_;
        const int x0 = std::min(static_cast<int>(x), cells_ - 1);
        const int y0 = std::min(static_cast<int>(y), cells_ - 1);
        const double fx = smooth(x - x0), fy = smooth(y - y0);
        auto g = [&](int i, int j) { return grid_[static_cast<std::size_t>(j) * (cells_ + 1) + i]; };
        return lerp(lerp(g(x0, y0), g(x0 + 1, y0), fx), lerp(g(x0, y0 + 1), g(x0 + 1, y0 + 1), fx), fy);
    }

private:
    static double smooth(double t) { return t * t * (3 - 2 * t); }
    int cells_;
    std::vector<double> grid_;
};

// Octaves from `base` cells up to pixel scale, amplitude falling by `gain`.
struct Fractal {
    std::vector<ValueNoise> octaves;
    double gain;

    Fractal(SplitMix64& rng, int base, int side, double g) : gain(g) {
        for (int cells = base; cells <= side; cells *= 2) octaves.emplace_back(rng.next(), cells);
    }

    double at(double u, double v) const {
        double acc = 0.0, amp = 1.0;
        for (const auto& o : octaves) {
            acc += amp * o.at(u, v);
            amp *= gain;
        }
        return acc;
    }
};

enum class Fill { flat, stripes, checker, speckle };

struct Shape {
    int kind;  // 0 ellipse, 1 rectangle, 2 triangle
    double cx, cy, rx, ry, angle;
    std::array<double, 6> tri;
    Rgb color, color2;
    Fill fill;
    double freq;
};

bool covers(const Shape& s, double u, double v, double& shade) {
    const double c = std::cos(s.angle), sn = std::sin(s.angle);
    const double dx = u - s.cx, dy = v - s.cy;
    const double lx = (c * dx + sn * dy) / s.rx, ly = (-sn * dx + c * dy) / s.ry;
    if (s.kind == 0) {
        const double r2 = lx * lx + ly * ly;
        shade = 1.0 - 0.35 * r2;
        return r2 <= 1.0;
    }
    if (s.kind == 1) {
        shade = 1.0 - 0.15 * (lx + 1.0);
        return std::abs(lx) <= 1.0 && std::abs(ly) <= 1.0;
    }
    const auto& t = s.tri;
    auto edge = [&](double ax, double ay, double bx, double by) { return (bx - ax) * (v - ay) - (by - ay) * (u - ax); };
    const double e0 = edge(t[0], t[1], t[2], t[3]);
    const double e1 = edge(t[2], t[3], t[4], t[5]);
    const double e2 = edge(t[4], t[5], t[0], t[1]);
    shade = 0.9 + 0.1 * std::sin(9.0 * (u + v));
    return (e0 >= 0 && e1 >= 0 && e2 >= 0) || (e0 <= 0 && e1 <= 0 && e2 <= 0);
}

RgbImage render(std::uint64_t seed, int side) {
    SplitMix64 rng(seed);

    // Scene-wide look: palette, saturation, exposure, contrast and texture.
    const double hue = rng.uniform();
    const double hue_spread = 0.05 + 0.6 * rng.uniform();
    const double saturation = std::pow(rng.uniform(), 0.8);
    const double exposure = 0.25 + 0.7 * rng.uniform();
    const double contrast = 0.3 + 0.9 * rng.uniform();
    const double texture = std::pow(rng.uniform(), 1.5) * 70.0;
    const double tilt = rng.uniform() * std::numbers::pi;

    auto palette = [&](SplitMix64& r) {
        return hsv(hue + hue_spread * (r.uniform() - 0.5), saturation * (0.4 + 0.6 * r.uniform()),
                   std::clamp(exposure + contrast * (r.uniform() - 0.5), 0.03, 1.0));
    };

    const Rgb top = palette(rng), bottom = palette(rng), accent = palette(rng);
    const Fractal light(rng, 2 + static_cast<int>(rng.below(3)), 8, 0.5);
    const Fractal grain(rng, 4 + static_cast<int>(rng.below(8)), side, 0.45 + 0.3 * rng.uniform());
    const Fractal blend(rng, 2, 16, 0.5);

    std::vector<Shape> shapes(rng.below(30));
    for (auto& s : shapes) {
        s.kind = static_cast<int>(rng.below(3));
        s.cx = rng.uniform();
        s.cy = rng.uniform();
        const double size = 0.02 + 0.3 * std::pow(rng.uniform(), 2.0);
        s.rx = size * (0.5 + rng.uniform());
        s.ry = size * (0.5 + rng.uniform());
        s.angle = rng.uniform() * std::numbers::pi;
        for (int k = 0; k < 3; ++k) {
            s.tri[2 * k] = s.cx + (rng.uniform() - 0.5) * 3.0 * size;
            s.tri[2 * k + 1] = s.cy + (rng.uniform() - 0.5) * 3.0 * size;
        }
        s.color = palette(rng);
        s.color2 = palette(rng);
        s.fill = static_cast<Fill>(rng.below(4));
        s.freq = 15 + 80 * rng.uniform();
    }

    RgbImage img(side, side);
    for (int y = 0; y < side; ++y) {
        for (int x = 0; x < side; ++x) {
            const double u = (x + 0.5) / side, v = (y + 0.5) / side;
            const double t = std::clamp(0.5 + (u - 0.5) * std::cos(tilt) + (v - 0.5) * std::sin(tilt), 0.0, 1.0);
            const double mix = std::clamp(0.5 + 0.6 * blend.at(u, v), 0.0, 1.0);
            const double illum = 1.0 + 0.35 * light.at(u, v);
            const double g = grain.at(u, v);
            Rgb px;
            for (int c = 0; c < 3; ++c) px[c] = lerp(lerp(top[c], bottom[c], t), accent[c], 0.5 * mix);
            for (const auto& s : shapes) {
                double shade = 1.0;
                if (!covers(s, u, v, shade)) continue;
                bool alt = false;
                const double along = u * std::cos(s.angle) + v * std::sin(s.angle);
                switch (s.fill) {
                    case Fill::flat: break;
                    case Fill::stripes: alt = std::sin(s.freq * along) > 0; break;
                    case Fill::checker:
                        alt = (static_cast<int>(std::floor(u * s.freq / 3)) + static_cast<int>(std::floor(v * s.freq / 3))) % 2 != 0;
                        break;
                    case Fill::speckle: alt = g > 0.15; break;
                }
                const Rgb& col = alt ? s.color2 : s.color;
                for (int c = 0; c < 3; ++c) px[c] = col[c] * shade;
            }
            for (int c = 0; c < 3; ++c) {
                img.at(x, y, c) = std::round(std::clamp(px[c] * illum + texture * g, 0.0, 255.0));
            }
        }
    }
    return img;
}

}  // namespace

RgbImage desk_image(std::uint64_t seed, int side) { return render(mix64(0x6465736B, seed), side); }

RgbImage training_image(std::uint64_t index, int side) { return render(mix64(0x747261696E, index), side); }

std::vector<RgbImage> desk_corpus(int count, int side) {
    std::vector<RgbImage> out;
    for (int i = 0; i < count; ++i) out.push_back(desk_image(static_cast<std::uint64_t>(i), side));
    return out;
}

std::vector<RgbImage> training_corpus(int count, int side) {
    std::vector<RgbImage> out;
    for (int i = 0; i < count; ++i) out.push_back(training_image(static_cast<std::uint64_t>(i), side));
    return out;
}

RgbImage tamper(const RgbImage& img) {
    RgbImage out = img;
    const int w = img.width(), h = img.height();
    const double cx = w * 0.5, cy = h * 0.45, rx = w * 0.3, ry = h * 0.28;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const double dx = (x - cx) / rx, dy = (y - cy) / ry;
            if (dx * dx + dy * dy > 1.0) continue;
            const bool check = ((x / 16) + (y / 16)) % 2 == 0;
            out.at(x, y, 0) = check ? 230 : 20;
            out.at(x, y, 1) = check ? 40 : 200;
            out.at(x, y, 2) = check ? 30 : 60;
        }
    }
    return out;
}

}  // namespace rrhash::testing
