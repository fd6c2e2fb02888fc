#pragma once

#include "rrhash/cca.hpp"
#include "rrhash/config.hpp"
#include "rrhash/features.hpp"
#include "rrhash/image.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rrhash {

struct SecretKeys {
    std::uint64_t feature_key = 0;  // K_1: orders equal-response corners
    std::uint64_t hash_key = 0;     // K_2: permutes the hash elements

    bool operator==(const SecretKeys&) const = default;
};

/// One-way 16-hex-digit fingerprint of both keys; safe to store.
std::string key_fingerprint(const SecretKeys& keys);

struct Hash {
    std::vector<double> values;
    Scheme scheme = Scheme::concat;
    std::string key_fingerprint;
    std::string config_digest;

    std::size_t size() const noexcept { return values.size(); }
};

/// Keyed Fisher-Yates permutation ("scramble-v1").
///
/// A SplitMix64 stream is seeded with `key`. For i = n-1 down to 1 an index
/// j is drawn uniformly from [0, i] by rejection (discard draws below
/// 2^64 mod (i+1), then take the draw mod (i+1)) and elements i and j are
/// swapped.
std::vector<double> scramble(std::span<const double> values, std::uint64_t key);
std::vector<double> unscramble(std::span<const double> values, std::uint64_t key);
/// The permutation itself: output[i] = input[perm[i]].
std::vector<std::size_t> scramble_permutation(std::size_t n, std::uint64_t key);

/// [H_Q, Z_G, H_C, C_G] scrambled with K_2; length 2N + 6.
Hash concat_hash(const FeatureBundle& bundle, std::uint64_t hash_key);

/// Hash for already extracted features. `model` is required for the cca
/// scheme and must have been fitted under the same config.
Hash hash_from_features(const FeatureBundle& bundle, const Config& config, const CcaModel* model,
                        const SecretKeys& keys);

/// Full pipeline: preprocess, ribbons, texture and colour features, then
/// direct concatenation or CCA fusion, then scrambling.
Hash generate_hash(const RgbImage& img, const Config& config, const CcaModel* model, const SecretKeys& keys);

/// Fits the CCA model of a cca config on one bundle per training image and
/// stamps it with the config digest.
CcaModel fit_model(const std::vector<FeatureBundle>& bundles, const Config& config);

/// Throws ConfigError unless `model` matches `config` (digest and dimensions).
void check_model(const CcaModel& model, const Config& config);

/// Values as a comma-separated list with 9 significant digits.
std::string format_values(std::span<const double> values);
std::vector<double> parse_values(std::string_view text);

/// Single line: "rrhash1 <scheme> <key fingerprint> <config digest> <values>".
std::string serialize(const Hash& h);
Hash parse_hash(std::string_view line);

}  // namespace rrhash
