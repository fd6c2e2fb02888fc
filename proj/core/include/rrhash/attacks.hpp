#pragma once

#include "rrhash/image.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rrhash {

enum class Manipulation {
    scaling,          // ratio S_r
    salt_pepper,      // density N_d
    jpeg,             // quality Q_f
    gaussian_filter,  // sigma S_d of a 3x3 mask
    circular_blur,    // disk radius C_r
    motion_blur,      // horizontal length N_p
    rotate_crop,      // angle R_a, output cropped to the input size
    large_rotate,     // angle R_b, canvas expanded and filled white
};

std::string_view to_string(Manipulation m) noexcept;
Manipulation parse_manipulation(std::string_view name);

struct ManipulationSpec {
    Manipulation kind = Manipulation::scaling;
    double parameter = 1.0;
    std::uint64_t seed = 0;  // used by salt_pepper only
};

/// Throws ParameterError if the parameter is outside the range of the
/// benchmark settings for its kind.
void validate(const ManipulationSpec& spec);

RgbImage apply_manipulation(const RgbImage& img, const ManipulationSpec& spec);

/// Side of the central crop used to compare large-angle rotations.
inline constexpr int kLargeRotationCrop = 361;

/// Centred 361 x 361 window (offset floor((W - 361) / 2)).
RgbImage central_crop_for_large_rotation(const RgbImage& img);

/// Rotation by `degrees` counter-clockwise about the image centre with
/// bilinear resampling and white fill. Multiples of 90 degrees are exact
/// pixel permutations. With `expand` the canvas grows to hold the whole
/// rotated image (keeping the parity of each side, so centres stay aligned);
/// otherwise the output keeps the input size.
RgbImage rotate(const RgbImage& img, double degrees, bool expand);

struct Kernel {
    int width = 1;
    int height = 1;
    std::vector<double> weights{1.0};  // row-major, sums to 1
};

/// Disk of the given radius; each weight is the covered area of its pixel.
Kernel disk_kernel(double radius);

/// 1 x length box kernel.
Kernel motion_kernel(int length);

/// Convolution with the kernel centred at (width / 2, height / 2) for odd
/// sizes and at ((width - 1) / 2, ...) for even ones; replicate border.
RgbImage convolve(const RgbImage& img, const Kernel& kernel);

struct AttackedImage {
    ManipulationSpec spec;
    RgbImage image;
};

/// The benchmark settings: 10 scalings, 10 noise densities, 10 JPEG
/// qualities, 10 Gaussian sigmas, 10 disk radii, 10 motion lengths,
/// 8 small rotations and 14 large rotations.
std::vector<ManipulationSpec> attack_specs(std::uint64_t seed = 0);

/// All 82 manipulations of `img`, in attack_specs order.
std::vector<AttackedImage> full_attack_matrix(const RgbImage& img, std::uint64_t seed = 0);

/// Images to hash for a similar pair: large rotations compare the central
/// crops of both images, everything else compares the images themselves.
std::pair<RgbImage, RgbImage> similar_pair(const RgbImage& original, const AttackedImage& attacked);

/// "<kind>__<param>" with the parameter printed by %g.
std::string attack_label(const ManipulationSpec& spec);

}  // namespace rrhash
