#pragma once

#include "rrhash/hash.hpp"

#include <span>

namespace rrhash {

inline constexpr double kDefaultThreshold = 740.0;
inline constexpr double kCorrelationGuard = 1e-12;

enum class Decision { similar, different };

struct Verdict {
    double distance = 0.0;
    double threshold = kDefaultThreshold;
    Decision decision = Decision::similar;
};

/// L2 distance of two raw sequences of equal length.
double euclidean_distance(std::span<const double> a, std::span<const double> b);

/// L2 distance of two hashes; throws ComparisonError unless both share
/// length, scheme, key fingerprint and config digest.
double euclidean_distance(const Hash& a, const Hash& b);

/// Pearson correlation with `guard` added to the denominator:
/// sum(da * db) / (sqrt(sum(da^2) * sum(db^2)) + guard).
double correlation_coefficient(std::span<const double> a, std::span<const double> b,
                               double guard = kCorrelationGuard);
double correlation_coefficient(const Hash& a, const Hash& b, double guard = kCorrelationGuard);

/// Similar iff distance <= threshold.
Verdict classify(double distance, double threshold = kDefaultThreshold);

}  // namespace rrhash
