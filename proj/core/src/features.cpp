#include "rrhash/features.hpp"

#include "rrhash/error.hpp"
#include "rrhash/imaging.hpp"

namespace rrhash {

std::vector<double> FeatureBundle::texture_view() const {
    std::vector<double> v(hq);
    v.insert(v.end(), zg.begin(), zg.end());
    return v;
}

std::vector<double> FeatureBundle::color_view() const {
    std::vector<double> v(hc);
    v.insert(v.end(), cg.begin(), cg.end());
    return v;
}

std::vector<double> FeatureBundle::concatenated() const {
    std::vector<double> v(hq);
    v.insert(v.end(), zg.begin(), zg.end());
    v.insert(v.end(), hc.begin(), hc.end());
    v.insert(v.end(), cg.begin(), cg.end());
    return v;
}

PreparedImage prepare_image(const RgbImage& img, const Config& config) {
    validate(config);
    if (img.width() < 8 || img.height() < 8) throw ImageError("input image must be at least 8x8");

    RgbImage secondary = preprocess(img, config.side, config.mask_size, config.sigma);
    RibbonMap ribbons = make_ribbons(config.side, config.ribbons);
    const LumaImage y = luminance(secondary);

    const QuadtreeParams qt{config.variance_threshold, 2, 255.0};
    PreparedImage p{std::move(secondary), std::move(ribbons), {}, {}, {}, {}, {}};
    p.hq = local_texture_vector(y, p.ribbons, qt);
    p.zg = glcm_scalars(glcm(y, config.glcm_distance, config.glcm_direction, config.glcm_levels));
    p.cg = color_moments(p.secondary);
    p.corners = harris_corners(y);
    p.reference = reference_color(p.secondary);
    return p;
}

FeatureBundle finish_features(const PreparedImage& prepared, const Config& config, std::uint64_t feature_key) {
    const auto selected = select_boundary_corners(prepared.corners, prepared.ribbons, config.tau, feature_key);
    FeatureBundle b;
    b.hq = prepared.hq;
    b.zg = prepared.zg.as_array();
    b.hc = local_color_vector(prepared.secondary, selected, prepared.reference);
    b.cg = prepared.cg;
    return b;
}

FeatureBundle extract_features(const RgbImage& img, const Config& config, std::uint64_t feature_key) {
    return finish_features(prepare_image(img, config), config, feature_key);
}

}  // namespace rrhash
