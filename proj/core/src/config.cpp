#include "rrhash/config.hpp"

#include "rrhash/digest.hpp"
#include "rrhash/error.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace rrhash {

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

int to_int(std::string_view key, std::string_view v) {
    int out = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || p != v.data() + v.size()) {
        throw ConfigError("config key '" + std::string(key) + "': expected an integer, got '" + std::string(v) + "'");
    }
    return out;
}

double to_real(std::string_view key, std::string_view v) {
    try {
        std::size_t used = 0;
        const std::string s(v);
        const double out = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument("trailing");
        return out;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + std::string(key) + "': expected a number, got '" + std::string(v) + "'");
    }
}

GlcmDirection parse_direction(std::string_view v) {
    if (v == "0") return GlcmDirection::deg0;
    if (v == "45") return GlcmDirection::deg45;
    if (v == "90") return GlcmDirection::deg90;
    if (v == "135") return GlcmDirection::deg135;
    throw ConfigError("glcm_direction must be one of 0, 45, 90, 135");
}

int direction_degrees(GlcmDirection d) {
    switch (d) {
        case GlcmDirection::deg45: return 45;
        case GlcmDirection::deg90: return 90;
        case GlcmDirection::deg135: return 135;
        default: return 0;
    }
}

std::string fmt_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string_view to_string(Scheme s) noexcept { return s == Scheme::concat ? "concat" : "cca"; }

Scheme parse_scheme(std::string_view text) {
    if (text == "concat") return Scheme::concat;
    if (text == "cca") return Scheme::cca;
    throw ConfigError("unknown scheme '" + std::string(text) + "' (expected concat or cca)");
}

int Config::hash_length() const noexcept {
    return scheme == Scheme::concat ? 2 * ribbons + 6 : effective_components();
}

Config preset(std::string_view name) {
    Config c;
    if (name == "cca-default") return c;
    if (name == "concat-default") {
        c.name = "concat-default";
        c.scheme = Scheme::concat;
        c.side = 256;
        c.ribbons = 32;
        c.tau = 0.4;
        c.variance_threshold = 40.0;
        return c;
    }
    throw ConfigError("unknown preset '" + std::string(name) + "' (expected concat-default or cca-default)");
}

Config parse_config(std::string_view text) {
    Config c;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    bool seen_field = false;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key == "preset") {
            if (seen_field) throw ConfigError("config: 'preset' must precede other keys");
            c = preset(value);
        } else if (key == "scheme") {
            c.scheme = parse_scheme(value);
        } else if (key == "L") {
            c.side = to_int(key, value);
        } else if (key == "N") {
            c.ribbons = to_int(key, value);
        } else if (key == "tau") {
            c.tau = to_real(key, value);
        } else if (key == "vc") {
            c.variance_threshold = to_real(key, value);
        } else if (key == "mask_size") {
            c.mask_size = to_int(key, value);
        } else if (key == "sigma") {
            c.sigma = to_real(key, value);
        } else if (key == "glcm_levels") {
            c.glcm_levels = to_int(key, value);
        } else if (key == "glcm_distance") {
            c.glcm_distance = to_int(key, value);
        } else if (key == "glcm_direction") {
            c.glcm_direction = parse_direction(value);
        } else if (key == "components") {
            c.components = to_int(key, value);
        } else if (key == "ridge") {
            c.ridge = to_real(key, value);
        } else if (key == "xi") {
            c.threshold = to_real(key, value);
        } else {
            throw ConfigError("config line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
        }
        if (key != "preset") {
            seen_field = true;
            c.name = "custom";
        }
    }
    validate(c);
    return c;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

void validate(const Config& c) {
    if (c.side < 8) throw ConfigError("L must be at least 8");
    if (c.ribbons < 1) throw ConfigError("N must be at least 1");
    if (!(c.tau > 0.0 && c.tau <= 1.0)) throw ConfigError("tau must lie in (0, 1]");
    if (!(c.variance_threshold >= 0.0)) throw ConfigError("vc must be >= 0");
    if (c.mask_size < 1 || c.mask_size % 2 == 0) throw ConfigError("mask_size must be a positive odd integer");
    if (!(c.sigma > 0.0)) throw ConfigError("sigma must be positive");
    if (c.glcm_levels < 1) throw ConfigError("glcm_levels must be >= 1");
    if (c.glcm_distance < 1) throw ConfigError("glcm_distance must be >= 1");
    if (c.components < 0 || c.components > c.feature_dim()) throw ConfigError("components must lie in 0..N+3");
    if (!(c.ridge >= 0.0)) throw ConfigError("ridge must be >= 0");
    if (!(c.threshold > 0.0)) throw ConfigError("xi must be positive");
}

std::string canonical_config(const Config& c) {
    std::ostringstream out;
    out << "rrhash-config-v1"
        << ";scheme=" << to_string(c.scheme) << ";L=" << c.side << ";N=" << c.ribbons << ";tau=" << fmt_real(c.tau)
        << ";vc=" << fmt_real(c.variance_threshold) << ";mask_size=" << c.mask_size << ";sigma=" << fmt_real(c.sigma)
        << ";glcm_levels=" << c.glcm_levels << ";glcm_distance=" << c.glcm_distance
        << ";glcm_direction=" << direction_degrees(c.glcm_direction);
    if (c.scheme == Scheme::cca) {
        out << ";components=" << c.effective_components() << ";ridge=" << fmt_real(c.ridge);
    }
    return out.str();
}

std::string config_digest(const Config& c) { return sha256_hex(canonical_config(c)).substr(0, 16); }

}  // namespace rrhash
