#pragma once

#include <cstdint>
#include <vector>

namespace rrhash {

/// Concentric equal-area ribbons inscribed in an L x L image.
///
/// Label 0 marks pixels outside the inscribed circle; labels 1..N name the
/// ribbons from the centre outwards. Pixel (x, y) in 0-based raster
/// coordinates sits at (x + 1, y + 1) in the 1-based frame the distances are
/// measured in.
class RibbonMap {
public:
    RibbonMap(int side, std::vector<double> radii);

    int side() const noexcept { return side_; }
    int count() const noexcept { return static_cast<int>(radii_.size()); }
    const std::vector<double>& radii() const noexcept { return radii_; }
    /// Outer radius of ribbon k (1-based).
    double outer_radius(int k) const { return radii_.at(static_cast<std::size_t>(k - 1)); }
    double inner_radius(int k) const { return k <= 1 ? 0.0 : outer_radius(k - 1); }
    double center() const noexcept { return center_; }

    int label(int x, int y) const noexcept {
        return labels_[static_cast<std::size_t>(y) * side_ + x];
    }
    const std::vector<std::uint16_t>& labels() const noexcept { return labels_; }

    /// Distance of pixel (x, y) from the image centre.
    double distance(int x, int y) const noexcept;
    /// Ribbon index for an arbitrary distance (0 when beyond r_N).
    int ribbon_of_distance(double d) const noexcept;

    /// Pixel count of every ribbon; index 0 holds the outside count.
    std::vector<int> pixel_counts() const;

    /// Equal-area target rho = pi r_N^2 / N.
    double ribbon_area() const noexcept;

private:
    int side_;
    double center_;
    std::vector<double> radii_;
    std::vector<std::uint16_t> labels_;
};

/// Outer radii r_1 < ... < r_N with r_N = floor(L/2) and equal ribbon
/// areas. Throws ParameterError if N = 0 or a ribbon would cover less than
/// one pixel of area.
std::vector<double> ribbon_radii(int side, int count);

RibbonMap assign_ribbons(int side, const std::vector<double>& radii);

inline RibbonMap make_ribbons(int side, int count) { return assign_ribbons(side, ribbon_radii(side, count)); }

}  // namespace rrhash
