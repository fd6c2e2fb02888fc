#include "rrhash/hash.hpp"

#include "rrhash/digest.hpp"
#include "rrhash/error.hpp"
#include "rrhash/rng.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace rrhash {

std::string key_fingerprint(const SecretKeys& keys) {
    return sha256_hex("rrhash-keys-v1:" + std::to_string(keys.feature_key) + ":" + std::to_string(keys.hash_key))
        .substr(0, 16);
}

std::vector<std::size_t> scramble_permutation(std::size_t n, std::uint64_t key) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    SplitMix64 rng(key);
    for (std::size_t i = n; i-- > 1;) {
        const auto j = static_cast<std::size_t>(rng.below(i + 1));
        std::swap(perm[i], perm[j]);
    }
    return perm;
}

std::vector<double> scramble(std::span<const double> values, std::uint64_t key) {
    const auto perm = scramble_permutation(values.size(), key);
    std::vector<double> out(values.size());
    for (std::size_t i = 0; i < perm.size(); ++i) out[i] = values[perm[i]];
    return out;
}

std::vector<double> unscramble(std::span<const double> values, std::uint64_t key) {
    const auto perm = scramble_permutation(values.size(), key);
    std::vector<double> out(values.size());
    for (std::size_t i = 0; i < perm.size(); ++i) out[perm[i]] = values[i];
    return out;
}

Hash concat_hash(const FeatureBundle& bundle, std::uint64_t hash_key) {
    Hash h;
    h.scheme = Scheme::concat;
    h.values = scramble(bundle.concatenated(), hash_key);
    return h;
}

void check_model(const CcaModel& model, const Config& config) {
    if (model.config_digest != config_digest(config)) {
        throw ConfigError("CCA model was fitted under config " + model.config_digest + " but the active config is " +
                          config_digest(config));
    }
    if (model.dim1 != config.feature_dim() || model.dim2 != config.feature_dim() ||
        model.components != config.effective_components()) {
        throw ConfigError("CCA model dimensions do not match the active config");
    }
}

Hash hash_from_features(const FeatureBundle& bundle, const Config& config, const CcaModel* model,
                        const SecretKeys& keys) {
    Hash h;
    if (config.scheme == Scheme::concat) {
        h = concat_hash(bundle, keys.hash_key);
    } else {
        if (model == nullptr) throw ConfigError("the cca scheme requires a fitted CCA model");
        check_model(*model, config);
        h.scheme = Scheme::cca;
        h.values = scramble(cca_fuse(*model, bundle.texture_view(), bundle.color_view()), keys.hash_key);
    }
    for (double v : h.values) {
        if (!std::isfinite(v)) throw Error("hash contains a non-finite value");
    }
    h.key_fingerprint = key_fingerprint(keys);
    h.config_digest = config_digest(config);
    return h;
}

Hash generate_hash(const RgbImage& img, const Config& config, const CcaModel* model, const SecretKeys& keys) {
    if (config.scheme == Scheme::cca) {
        if (model == nullptr) throw ConfigError("the cca scheme requires a fitted CCA model");
        check_model(*model, config);
    }
    return hash_from_features(extract_features(img, config, keys.feature_key), config, model, keys);
}

CcaModel fit_model(const std::vector<FeatureBundle>& bundles, const Config& config) {
    validate(config);
    std::vector<std::vector<double>> view1, view2;
    view1.reserve(bundles.size());
    view2.reserve(bundles.size());
    for (const auto& b : bundles) {
        view1.push_back(b.texture_view());
        view2.push_back(b.color_view());
    }
    CcaOptions options;
    options.components = config.effective_components();
    options.ridge = config.ridge;
    CcaModel model = cca_fit(view1, view2, options);
    model.config_digest = config_digest(config);
    return model;
}

std::string format_values(std::span<const double> values) {
    std::string out;
    char buf[32];
    for (std::size_t i = 0; i < values.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.9g", values[i] == 0.0 ? 0.0 : values[i]);
        if (i) out += ',';
        out += buf;
    }
    return out;
}

std::vector<double> parse_values(std::string_view text) {
    std::vector<double> out;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw Error("malformed hash value '" + item + "'");
        }
    }
    return out;
}

std::string serialize(const Hash& h) {
    return "rrhash1 " + std::string(to_string(h.scheme)) + " " + h.key_fingerprint + " " + h.config_digest + " " +
           format_values(h.values);
}

Hash parse_hash(std::string_view line) {
    std::istringstream in{std::string(line)};
    std::string magic, scheme, values;
    Hash h;
    if (!(in >> magic >> scheme >> h.key_fingerprint >> h.config_digest >> values) || magic != "rrhash1") {
        throw Error("malformed serialized hash");
    }
    h.scheme = parse_scheme(scheme);
    h.values = parse_values(values);
    return h;
}

}  // namespace rrhash
