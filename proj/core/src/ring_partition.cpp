#include "rrhash/ring_partition.hpp"

#include "rrhash/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace rrhash {

std::vector<double> ribbon_radii(int side, int count) {
    if (side < 2) throw ParameterError("image side must be at least 2");
    if (count < 1) throw ParameterError("ribbon count must be at least 1");
    const double r_outer = std::floor(side / 2.0);
    const double total_area = std::numbers::pi * r_outer * r_outer;
    if (total_area / count < 1.0) {
        throw ParameterError("ribbon count " + std::to_string(count) + " leaves less than one pixel per ribbon");
    }
    const double step = (total_area / count) / std::numbers::pi;  // rho / pi

    std::vector<double> radii(static_cast<std::size_t>(count));
    radii[0] = std::sqrt(step);
    for (int k = 1; k < count; ++k) {
        radii[k] = std::sqrt(radii[k - 1] * radii[k - 1] + step);
    }
    radii.back() = r_outer;
    return radii;
}

RibbonMap::RibbonMap(int side, std::vector<double> radii)
    : side_(side), center_((side + 1) / 2.0), radii_(std::move(radii)) {
    if (radii_.empty()) throw ParameterError("ribbon radii must not be empty");
    if (!std::is_sorted(radii_.begin(), radii_.end()) ||
        std::adjacent_find(radii_.begin(), radii_.end()) != radii_.end()) {
        throw ParameterError("ribbon radii must be strictly increasing");
    }
    if (radii_.size() > 65535) throw ParameterError("too many ribbons");
    labels_.resize(static_cast<std::size_t>(side) * side);
    for (int y = 0; y < side; ++y) {
        for (int x = 0; x < side; ++x) {
            labels_[static_cast<std::size_t>(y) * side + x] =
                static_cast<std::uint16_t>(ribbon_of_distance(distance(x, y)));
        }
    }
}

double RibbonMap::distance(int x, int y) const noexcept {
    const double dx = (x + 1) - center_;
    const double dy = (y + 1) - center_;
    return std::sqrt(dx * dx + dy * dy);
}

int RibbonMap::ribbon_of_distance(double d) const noexcept {
    // First radius >= d; ties stay on the inner ribbon.
    auto it = std::lower_bound(radii_.begin(), radii_.end(), d);
    if (it == radii_.end()) return 0;
    return static_cast<int>(it - radii_.begin()) + 1;
}

std::vector<int> RibbonMap::pixel_counts() const {
    std::vector<int> counts(radii_.size() + 1, 0);
    for (auto l : labels_) ++counts[l];
    return counts;
}

double RibbonMap::ribbon_area() const noexcept {
    return std::numbers::pi * radii_.back() * radii_.back() / static_cast<double>(radii_.size());
}

RibbonMap assign_ribbons(int side, const std::vector<double>& radii) { return RibbonMap(side, radii); }

}  // namespace rrhash
