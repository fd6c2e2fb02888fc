#include "oracles.hpp"

#include <cmath>

namespace rrhash::oracle {

namespace {

struct Padded {
    std::vector<std::int64_t> px;
    int side;
};

bool splits(const Padded& img, int x0, int y0, int s, std::int64_t vc) {
    std::int64_t sum = 0, sq = 0;
    for (int y = y0; y < y0 + s; ++y) {
        for (int x = x0; x < x0 + s; ++x) {
            const std::int64_t v = img.px[static_cast<std::size_t>(y) * img.side + x];
            sum += v;
            sq += v * v;
        }
    }
    const std::int64_t n = static_cast<std::int64_t>(s) * s;
    return n * sq - sum * sum > vc * n * n;
}

int recurse(const Padded& img, int x0, int y0, int s, std::int64_t vc, int min_block) {
    if (s <= min_block || !splits(img, x0, y0, s, vc)) return 0;
    const int h = s / 2;
    return 1 + recurse(img, x0, y0, h, vc, min_block) + recurse(img, x0 + h, y0, h, vc, min_block) +
           recurse(img, x0, y0 + h, h, vc, min_block) + recurse(img, x0 + h, y0 + h, h, vc, min_block);
}

class Mix {
public:
    explicit Mix(std::uint64_t s) : s_(s) {}
    std::uint64_t next() {
        s_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = s_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t s_;
};

}  // namespace

int quadtree(const std::vector<int>& pixels, int width, int height, const std::vector<bool>& region, std::int64_t vc,
             int min_block, int fill) {
    int side = 1;
    while (side < width || side < height) side *= 2;
    Padded img{std::vector<std::int64_t>(static_cast<std::size_t>(side) * side, fill), side};
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const std::size_t i = static_cast<std::size_t>(y) * width + x;
            if (region[i]) img.px[static_cast<std::size_t>(y) * side + x] = pixels[i];
        }
    }
    return recurse(img, 0, 0, side, vc, min_block);
}

std::vector<std::int64_t> glcm_counts(const std::vector<int>& raster, int width, int height, int row_step,
                                      int col_step, int levels) {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(levels) * levels, 0);
    const int n = width * height;
    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
            const int dr = q / width - p / width;
            const int dc = q % width - p % width;
            const bool forward = dr == row_step && dc == col_step;
            const bool backward = dr == -row_step && dc == -col_step;
            if (forward || backward) ++counts[static_cast<std::size_t>(raster[p] - 1) * levels + (raster[q] - 1)];
        }
    }
    return counts;
}

Scalars glcm_scalars(const std::vector<double>& p, int levels) {
    auto at = [&](int i, int j) { return p[static_cast<std::size_t>(i - 1) * levels + (j - 1)]; };
    double mx = 0, my = 0;
    for (int i = 1; i <= levels; ++i)
        for (int j = 1; j <= levels; ++j) {
            mx += i * at(i, j);
            my += j * at(i, j);
        }
    double vx = 0, vy = 0, c = 0, con = 0, ent = 0;
    for (int i = 1; i <= levels; ++i)
        for (int j = 1; j <= levels; ++j) {
            vx += (i - mx) * (i - mx) * at(i, j);
            vy += (j - my) * (j - my) * at(i, j);
            c += (i - mx) * (j - my) * at(i, j);
            con += (i - j) * (i - j) * at(i, j);
            if (at(i, j) > 0) ent -= at(i, j) * std::log(at(i, j)) / std::log(10.0);
        }
    return {vx > 0 && vy > 0 ? c / std::sqrt(vx * vy) : 0.0, con, ent};
}

double mann_whitney_auc(const std::vector<double>& positives, const std::vector<double>& negatives) {
    double wins = 0;
    for (double a : positives)
        for (double b : negatives) wins += a < b ? 1.0 : (a == b ? 0.5 : 0.0);
    return wins / (static_cast<double>(positives.size()) * static_cast<double>(negatives.size()));
}

std::vector<double> scramble(const std::vector<double>& values, std::uint64_t key) {
    std::vector<double> out = values;
    Mix rng(key);
    for (std::size_t i = out.size(); i-- > 1;) {
        const std::uint64_t bound = i + 1;
        const std::uint64_t reject_below = (~bound + 1) % bound;
        std::uint64_t r;
        do {
            r = rng.next();
        } while (r < reject_below);
        std::swap(out[i], out[r % bound]);
    }
    return out;
}

std::array<double, 3> color_moments(const std::vector<std::array<double, 3>>& pixels) {
    const double n = static_cast<double>(pixels.size());
    std::array<double, 3> out{};
    for (int c = 0; c < 3; ++c) {
        double mean = 0;
        for (const auto& p : pixels) mean += p[c];
        mean /= n;
        double m2 = 0, m3 = 0;
        for (const auto& p : pixels) {
            m2 += (p[c] - mean) * (p[c] - mean);
            m3 += (p[c] - mean) * (p[c] - mean) * (p[c] - mean);
        }
        out[0] += mean / 3;
        out[1] += std::sqrt(m2 / n) / 3;
        out[2] += std::cbrt(m3 / n) / 3;
    }
    return out;
}

double population_variance(const std::vector<double>& v) {
    double mean = 0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double s = 0;
    for (double x : v) s += (x - mean) * (x - mean);
    return s / static_cast<double>(v.size());
}

}  // namespace rrhash::oracle
