#include "rrhash/evaluation.hpp"

#include "rrhash/error.hpp"
#include "rrhash/features.hpp"
#include "rrhash/parallel.hpp"
#include "rrhash/rng.hpp"
#include "rrhash/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>

namespace rrhash {

namespace {

struct Populations {
    std::vector<double> similar;
    std::vector<double> different;
};

Populations split(std::span<const DistanceSample> samples) {
    Populations p;
    for (const auto& s : samples) {
        if (s.distance < 0.0 || !std::isfinite(s.distance)) throw EvaluationError("invalid distance in sample set");
        if (s.pair_class == PairClass::similar) p.similar.push_back(s.distance);
        if (s.pair_class == PairClass::different) p.different.push_back(s.distance);
    }
    if (p.similar.empty()) throw EvaluationError("no similar pairs");
    if (p.different.empty()) throw EvaluationError("no different pairs");
    std::sort(p.similar.begin(), p.similar.end());
    std::sort(p.different.begin(), p.different.end());
    return p;
}

double fraction_at_most(const std::vector<double>& sorted, double xi) {
    const auto n = std::upper_bound(sorted.begin(), sorted.end(), xi) - sorted.begin();
    return static_cast<double>(n) / static_cast<double>(sorted.size());
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::ofstream open_csv(const std::string& path, const char* header) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw EvaluationError("cannot write '" + path + "'");
    out << header << '\n';
    return out;
}

}  // namespace

std::string_view to_string(PairClass c) noexcept {
    switch (c) {
        case PairClass::similar: return "similar";
        case PairClass::different: return "different";
        case PairClass::wrong_key: return "wrong_key";
    }
    return "unknown";
}

Rates tpr_fpr(std::span<const DistanceSample> samples, double xi) {
    const Populations p = split(samples);
    return {fraction_at_most(p.similar, xi), fraction_at_most(p.different, xi)};
}

std::vector<double> default_grid(std::span<const DistanceSample> samples, int count) {
    if (count < 2) throw ParameterError("a threshold grid needs at least two points");
    double hi = 0.0;
    for (const auto& s : samples) hi = std::max(hi, s.distance);
    std::vector<double> grid(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) grid[i] = hi * i / (count - 1);
    return grid;
}

double roc_auc(std::span<const DistanceSample> samples) {
    const Populations p = split(samples);
    std::vector<double> thresholds;
    thresholds.reserve(p.similar.size() + p.different.size());
    thresholds.insert(thresholds.end(), p.similar.begin(), p.similar.end());
    thresholds.insert(thresholds.end(), p.different.begin(), p.different.end());
    std::sort(thresholds.begin(), thresholds.end());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

    double area = 0.0, prev_fpr = 0.0, prev_tpr = 0.0;
    for (double xi : thresholds) {
        const double tpr = fraction_at_most(p.similar, xi);
        const double fpr = fraction_at_most(p.different, xi);
        area += (fpr - prev_fpr) * (tpr + prev_tpr) / 2.0;
        prev_fpr = fpr;
        prev_tpr = tpr;
    }
    return std::clamp(area, 0.0, 1.0);
}

RocCurve roc_curve(std::span<const DistanceSample> samples, std::span<const double> grid) {
    if (grid.empty()) throw EvaluationError("empty threshold grid");
    const Populations p = split(samples);
    std::vector<double> xs(grid.begin(), grid.end());
    std::sort(xs.begin(), xs.end());
    RocCurve curve;
    for (double xi : xs) curve.points.push_back({xi, fraction_at_most(p.similar, xi), fraction_at_most(p.different, xi)});
    curve.auc = roc_auc(samples);
    return curve;
}

RocCurve roc_curve(std::span<const DistanceSample> samples) {
    const auto grid = default_grid(samples);
    return roc_curve(samples, grid);
}

std::vector<GroupStats> distance_stats(std::span<const DistanceSample> samples) {
    std::vector<GroupStats> out;
    std::map<std::string, std::size_t> slot;
    std::vector<double> sums;
    for (const auto& s : samples) {
        if (s.pair_class != PairClass::similar) continue;
        auto [it, fresh] = slot.try_emplace(s.tag, out.size());
        if (fresh) {
            out.push_back({s.tag, 0.0, s.distance, s.distance, 0});
            sums.push_back(0.0);
        }
        GroupStats& g = out[it->second];
        sums[it->second] += s.distance;
        g.max = std::max(g.max, s.distance);
        g.min = std::min(g.min, s.distance);
        ++g.count;
    }
    for (std::size_t i = 0; i < out.size(); ++i) out[i].mean = sums[i] / static_cast<double>(out[i].count);
    return out;
}

std::vector<HistogramBin> histogram(std::span<const double> values, int bins) {
    if (bins < 1) throw ParameterError("histogram needs at least one bin");
    if (values.empty()) throw EvaluationError("histogram of an empty set");
    const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    const double lo = *lo_it, hi = *hi_it;
    const double width = (hi - lo) / bins;
    std::vector<HistogramBin> out(static_cast<std::size_t>(bins));
    for (int b = 0; b < bins; ++b) {
        out[b].lo = lo + width * b;
        out[b].hi = b + 1 == bins ? hi : lo + width * (b + 1);
    }
    for (double v : values) {
        int b = width > 0.0 ? static_cast<int>((v - lo) / width) : bins - 1;
        b = std::clamp(b, 0, bins - 1);
        ++out[b].count;
    }
    return out;
}

std::vector<SecretKeys> wrong_keys(const SecretKeys& correct, int count, std::uint64_t seed) {
    if (count < 1) throw ParameterError("the key sweep needs at least one wrong key");
    SplitMix64 rng(seed);
    std::vector<SecretKeys> out;
    out.reserve(static_cast<std::size_t>(count));
    while (static_cast<int>(out.size()) < count) {
        SecretKeys k{rng.next(), rng.next()};
        if (k.feature_key == correct.feature_key || k.hash_key == correct.hash_key) continue;
        out.push_back(k);
    }
    return out;
}

std::vector<double> key_security_sweep(const RgbImage& img, const SecretKeys& correct,
                                       std::span<const SecretKeys> wrong, const Config& config,
                                       const CcaModel* model) {
    const PreparedImage prepared = prepare_image(img, config);
    const Hash reference =
        hash_from_features(finish_features(prepared, config, correct.feature_key), config, model, correct);
    std::vector<double> out(wrong.size());
    parallel_for(wrong.size(), [&](std::size_t i) {
        const Hash h = hash_from_features(finish_features(prepared, config, wrong[i].feature_key), config, model,
                                          wrong[i]);
        out[i] = euclidean_distance(std::span<const double>(reference.values), std::span<const double>(h.values));
    });
    return out;
}

EvaluationReport evaluate_corpus(const std::vector<RgbImage>& images, const std::vector<std::string>& ids,
                                 const Config& config, const CcaModel* model, const SecretKeys& keys,
                                 const EvaluationOptions& options) {
    if (images.empty()) throw EvaluationError("empty corpus");
    if (ids.size() != images.size()) throw ShapeError("one id per image required");
    const std::size_t n = images.size();
    const auto specs = attack_specs(0);
    const std::size_t per_image = specs.size();

    std::vector<Hash> originals(n);
    std::vector<Hash> cropped(n);
    std::vector<Hash> attacked(n * per_image);
    parallel_for(n, [&](std::size_t i) {
        originals[i] = generate_hash(images[i], config, model, keys);
        cropped[i] = generate_hash(central_crop_for_large_rotation(images[i]), config, model, keys);
    });
    parallel_for(n * per_image, [&](std::size_t t) {
        const std::size_t i = t / per_image;
        const auto image_specs = attack_specs(mix64(options.seed, i));
        const AttackedImage a{image_specs[t % per_image], apply_manipulation(images[i], image_specs[t % per_image])};
        const auto [first, second] = similar_pair(images[i], a);
        (void)first;
        attacked[t] = generate_hash(second, config, model, keys);
    });

    EvaluationReport report;
    for (std::size_t t = 0; t < n * per_image; ++t) {
        const std::size_t i = t / per_image;
        const ManipulationSpec& spec = specs[t % per_image];
        const Hash& base = spec.kind == Manipulation::large_rotate ? cropped[i] : originals[i];
        report.samples.push_back(
            {ids[i] + "/" + attack_label(spec), PairClass::similar, euclidean_distance(base, attacked[t]),
             attack_label(spec)});
    }

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    if (options.max_different_pairs > 0 && pairs.size() > options.max_different_pairs) {
        SplitMix64 rng(mix64(options.seed, 0x646966));
        for (std::size_t k = 0; k < options.max_different_pairs; ++k) {
            const std::size_t j = k + static_cast<std::size_t>(rng.below(pairs.size() - k));
            std::swap(pairs[k], pairs[j]);
        }
        pairs.resize(options.max_different_pairs);
        std::sort(pairs.begin(), pairs.end());
    }
    for (const auto& [i, j] : pairs) {
        report.samples.push_back(
            {ids[i] + "|" + ids[j], PairClass::different, euclidean_distance(originals[i], originals[j]), ""});
    }

    if (options.wrong_key_count > 0) {
        const auto wrong = wrong_keys(keys, options.wrong_key_count, mix64(options.seed, 0x6b657973));
        for (std::size_t i = 0; i < std::min(options.key_images, n); ++i) {
            const auto d = key_security_sweep(images[i], keys, wrong, config, model);
            for (std::size_t k = 0; k < d.size(); ++k) {
                report.samples.push_back({ids[i] + "#" + std::to_string(k), PairClass::wrong_key, d[k], ""});
            }
            report.key_distances.insert(report.key_distances.end(), d.begin(), d.end());
        }
    }

    report.stats = distance_stats(report.samples);
    std::vector<double> different;
    for (const auto& s : report.samples) {
        if (s.pair_class == PairClass::different) different.push_back(s.distance);
    }
    // A one-image corpus has no different pairs: no ROC, no histogram.
    if (!different.empty()) {
        const auto grid = default_grid(report.samples, options.grid_points);
        report.roc = roc_curve(report.samples, grid);
        report.hist = histogram(different, options.histogram_bins);
    }
    return report;
}

void write_roc_csv(const RocCurve& roc, const std::string& path) {
    auto out = open_csv(path, "xi,fpr,tpr");
    for (const auto& p : roc.points) out << fmt(p.xi) << ',' << fmt(p.fpr) << ',' << fmt(p.tpr) << '\n';
}

void write_stats_csv(std::span<const GroupStats> stats, const std::string& path) {
    auto out = open_csv(path, "manipulation,mean,max,min");
    for (const auto& g : stats) out << g.tag << ',' << fmt(g.mean) << ',' << fmt(g.max) << ',' << fmt(g.min) << '\n';
}

void write_hist_csv(std::span<const HistogramBin> bins, const std::string& path) {
    auto out = open_csv(path, "bin_lo,bin_hi,count");
    for (const auto& b : bins) out << fmt(b.lo) << ',' << fmt(b.hi) << ',' << b.count << '\n';
}

void write_keys_csv(std::span<const double> distances, const std::string& path) {
    auto out = open_csv(path, "key_index,distance");
    for (std::size_t i = 0; i < distances.size(); ++i) out << i << ',' << fmt(distances[i]) << '\n';
}

void write_reports(const EvaluationReport& report, const std::string& dir) {
    std::filesystem::create_directories(dir);
    const std::filesystem::path base(dir);
    write_roc_csv(report.roc, (base / "roc.csv").string());
    write_stats_csv(report.stats, (base / "stats.csv").string());
    write_hist_csv(report.hist, (base / "hist.csv").string());
    write_keys_csv(report.key_distances, (base / "keys.csv").string());
}

}  // namespace rrhash
