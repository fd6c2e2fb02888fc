#pragma once

#include "rrhash/attacks.hpp"
#include "rrhash/cca.hpp"
#include "rrhash/config.hpp"
#include "rrhash/hash.hpp"
#include "rrhash/image.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rrhash {

enum class PairClass { similar, different, wrong_key };

std::string_view to_string(PairClass c) noexcept;

struct DistanceSample {
    std::string id;
    PairClass pair_class = PairClass::similar;
    double distance = 0.0;
    std::string tag;  // manipulation label for similar pairs
};

struct Rates {
    double tpr = 0.0;
    double fpr = 0.0;
};

/// TPR over similar pairs and FPR over different pairs, both counting
/// distances <= xi. Throws EvaluationError if either class is empty.
Rates tpr_fpr(std::span<const DistanceSample> samples, double xi);

struct RocPoint {
    double xi = 0.0;
    double tpr = 0.0;
    double fpr = 0.0;
};

struct RocCurve {
    std::vector<RocPoint> points;  // ascending xi
    double auc = 0.0;
};

/// `count` evenly spaced thresholds from 0 to the largest distance.
std::vector<double> default_grid(std::span<const DistanceSample> samples, int count = 200);

/// Area under the exact empirical ROC curve (every distinct distance is a
/// vertex), integrated with the trapezoid rule. Equals the probability that
/// a similar pair is closer than a different pair, ties counting one half.
double roc_auc(std::span<const DistanceSample> samples);

/// ROC points at each grid threshold (sorted ascending) plus roc_auc.
RocCurve roc_curve(std::span<const DistanceSample> samples, std::span<const double> grid);
RocCurve roc_curve(std::span<const DistanceSample> samples);

struct GroupStats {
    std::string tag;
    double mean = 0.0;
    double max = 0.0;
    double min = 0.0;
    std::size_t count = 0;
};

/// Mean, max and min of the similar-pair distances per tag, in order of
/// first appearance.
std::vector<GroupStats> distance_stats(std::span<const DistanceSample> samples);

struct HistogramBin {
    double lo = 0.0;
    double hi = 0.0;
    std::size_t count = 0;
};

/// Equal-width bins from the smallest to the largest value; the last bin is
/// closed on the right.
std::vector<HistogramBin> histogram(std::span<const double> values, int bins = 50);

/// `count` key pairs drawn from `seed`, each differing from `correct` in
/// both keys.
std::vector<SecretKeys> wrong_keys(const SecretKeys& correct, int count, std::uint64_t seed);

/// Distance between the correct-key hash of `img` and its hash under each
/// wrong key pair, in input order.
std::vector<double> key_security_sweep(const RgbImage& img, const SecretKeys& correct,
                                       std::span<const SecretKeys> wrong, const Config& config,
                                       const CcaModel* model);

struct EvaluationOptions {
    std::uint64_t seed = 0;
    std::size_t max_different_pairs = 0;  // 0 keeps every unordered pair
    int wrong_key_count = 100;
    std::size_t key_images = 1;  // images used for the key sweep
    int histogram_bins = 50;
    int grid_points = 200;
};

struct EvaluationReport {
    std::vector<DistanceSample> samples;
    RocCurve roc;
    std::vector<GroupStats> stats;
    std::vector<HistogramBin> hist;
    std::vector<double> key_distances;
};

/// Attack matrix on every image (similar pairs), distances between distinct
/// originals (different pairs) and a wrong-key sweep.
EvaluationReport evaluate_corpus(const std::vector<RgbImage>& images, const std::vector<std::string>& ids,
                                 const Config& config, const CcaModel* model, const SecretKeys& keys,
                                 const EvaluationOptions& options);

void write_roc_csv(const RocCurve& roc, const std::string& path);
void write_stats_csv(std::span<const GroupStats> stats, const std::string& path);
void write_hist_csv(std::span<const HistogramBin> bins, const std::string& path);
void write_keys_csv(std::span<const double> distances, const std::string& path);

/// roc.csv, stats.csv, hist.csv and keys.csv inside `dir` (created if
/// missing).
void write_reports(const EvaluationReport& report, const std::string& dir);

}  // namespace rrhash
