#pragma once

#include "rrhash/texture.hpp"

#include <string>
#include <string_view>

namespace rrhash {

enum class Scheme { concat, cca };

std::string_view to_string(Scheme s) noexcept;
Scheme parse_scheme(std::string_view text);

/// Every tunable of the hashing pipeline plus the decision threshold.
struct Config {
    std::string name = "cca-default";
    Scheme scheme = Scheme::cca;
    int side = 512;                    // L
    int ribbons = 67;                  // N
    double tau = 0.4;                  // fraction of boundary corners kept
    double variance_threshold = 14.0;  // V_C
    int mask_size = 3;
    double sigma = 1.0;
    int glcm_levels = 16;
    int glcm_distance = 1;
    GlcmDirection glcm_direction = GlcmDirection::deg0;
    int components = 0;  // CCA components e; 0 means N + 3
    double ridge = 1e-3;
    double threshold = 740.0;  // xi

    int feature_dim() const noexcept { return ribbons + 3; }
    int effective_components() const noexcept { return components > 0 ? components : feature_dim(); }
    /// 2N + 6 for concat, e for cca.
    int hash_length() const noexcept;
};

/// Named presets: "concat-default" and "cca-default".
Config preset(std::string_view name);

/// Flat `key = value` text; '#' starts a comment. A `preset` key, if
/// present, must come first and seeds every other field.
Config parse_config(std::string_view text);
Config load_config(const std::string& path);

/// Canonical text of all hashing-relevant fields (threshold excluded).
std::string canonical_config(const Config& c);

/// Short SHA-256 digest of canonical_config; changes with any
/// hashing-relevant parameter.
std::string config_digest(const Config& c);

/// Throws ConfigError on out-of-range fields.
void validate(const Config& c);

}  // namespace rrhash
