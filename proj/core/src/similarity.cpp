#include "rrhash/similarity.hpp"

#include "rrhash/error.hpp"

#include <cmath>
#include <string>

namespace rrhash {

namespace {

void check_lengths(std::size_t a, std::size_t b) {
    if (a != b) {
        throw ComparisonError("hash lengths differ (" + std::to_string(a) + " vs " + std::to_string(b) + ")");
    }
}

void check_compatible(const Hash& a, const Hash& b) {
    check_lengths(a.size(), b.size());
    if (a.scheme != b.scheme) throw ComparisonError("hashes use different schemes");
    if (a.key_fingerprint != b.key_fingerprint) throw ComparisonError("hashes were produced under different keys");
    if (a.config_digest != b.config_digest) throw ComparisonError("hashes were produced under different configs");
}

}  // namespace

double euclidean_distance(std::span<const double> a, std::span<const double> b) {
    check_lengths(a.size(), b.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return std::sqrt(acc);
}

double euclidean_distance(const Hash& a, const Hash& b) {
    check_compatible(a, b);
    return euclidean_distance(std::span<const double>(a.values), std::span<const double>(b.values));
}

double correlation_coefficient(std::span<const double> a, std::span<const double> b, double guard) {
    check_lengths(a.size(), b.size());
    if (a.size() < 2) throw ComparisonError("correlation needs at least two elements");
    const double n = static_cast<double>(a.size());
    // Means taken relative to the first element, so a constant sequence has
    // exactly zero deviations.
    double ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ma += a[i] - a[0];
        mb += b[i] - b[0];
    }
    ma = a[0] + ma / n;
    mb = b[0] + mb / n;
    double sab = 0.0, saa = 0.0, sbb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double da = a[i] - ma;
        const double db = b[i] - mb;
        sab += da * db;
        saa += da * da;
        sbb += db * db;
    }
    return sab / (std::sqrt(saa * sbb) + guard);
}

double correlation_coefficient(const Hash& a, const Hash& b, double guard) {
    check_compatible(a, b);
    return correlation_coefficient(std::span<const double>(a.values), std::span<const double>(b.values), guard);
}

Verdict classify(double distance, double threshold) {
    if (!(threshold > 0.0)) throw ParameterError("threshold must be positive");
    return {distance, threshold, distance <= threshold ? Decision::similar : Decision::different};
}

}  // namespace rrhash
