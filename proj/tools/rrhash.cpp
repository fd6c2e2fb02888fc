#include "rrhash/attacks.hpp"
#include "rrhash/color.hpp"
#include "rrhash/config.hpp"
#include "rrhash/error.hpp"
#include "rrhash/evaluation.hpp"
#include "rrhash/features.hpp"
#include "rrhash/hash.hpp"
#include "rrhash/image_io.hpp"
#include "rrhash/index.hpp"
#include "rrhash/model_io.hpp"
#include "rrhash/parallel.hpp"
#include "rrhash/similarity.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace rrhash;

namespace {

constexpr int kExitError = 2;

struct Common {
    std::string preset = "concat-default";
    std::string config_path;
    std::string model_path;
    std::string key1;
    std::string key2;
    std::optional<double> xi;
    std::uint64_t seed = 0;
    std::string out;
};

void add_common(CLI::App* app, Common& c, bool with_out = false) {
    app->add_option("--preset", c.preset, "Named preset (concat-default, cca-default)");
    app->add_option("--config", c.config_path, "Config file (key = value lines)");
    app->add_option("--model", c.model_path, "CCA model file, required by the cca scheme");
    app->add_option("--key1", c.key1, "Feature key K1 (or RRHASH_KEY1)");
    app->add_option("--key2", c.key2, "Hash key K2 (or RRHASH_KEY2)");
    app->add_option("--xi", c.xi, "Distance threshold");
    app->add_option("--seed", c.seed, "Seed for attacks and sampling");
    if (with_out) app->add_option("--out", c.out, "Output path")->required();
}

std::uint64_t parse_key(const std::string& text, const char* name) {
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(text, &used, 0);
        if (used != text.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw ParameterError(std::string("invalid ") + name + " '" + text + "'");
    }
}

SecretKeys resolve_keys(const Common& c) {
    auto pick = [](const std::string& flag, const char* env, const char* name) {
        if (!flag.empty()) return parse_key(flag, name);
        if (const char* v = std::getenv(env); v != nullptr && *v != '\0') return parse_key(v, name);
        throw ParameterError(std::string("missing ") + name + ": pass --" + name + " or set " + env);
    };
    return {pick(c.key1, "RRHASH_KEY1", "key1"), pick(c.key2, "RRHASH_KEY2", "key2")};
}

Config resolve_config(const Common& c) {
    Config cfg = c.config_path.empty() ? preset(c.preset) : load_config(c.config_path);
    if (c.xi) cfg.threshold = *c.xi;
    validate(cfg);
    return cfg;
}

std::optional<CcaModel> resolve_model(const Common& c, const Config& cfg) {
    if (cfg.scheme != Scheme::cca) return std::nullopt;
    if (c.model_path.empty()) throw ConfigError("the cca scheme requires --model");
    CcaModel m = load_model(c.model_path);
    check_model(m, cfg);
    return m;
}

const CcaModel* ptr(const std::optional<CcaModel>& m) { return m ? &*m : nullptr; }

bool is_image(const fs::path& p) {
    std::string ext = p.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char ch) { return std::tolower(ch); });
    return ext == ".png" || ext == ".jpg" || ext == ".jpeg" || ext == ".bmp";
}

std::vector<fs::path> list_images(const std::string& dir) {
    if (!fs::is_directory(dir)) throw ImageError("'" + dir + "' is not a directory");
    std::vector<fs::path> out;
    for (const auto& e : fs::directory_iterator(dir)) {
        if (e.is_regular_file() && is_image(e.path())) out.push_back(e.path());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RgbImage> load_all(const std::vector<fs::path>& paths) {
    std::vector<RgbImage> out(paths.size());
    parallel_for(paths.size(), [&](std::size_t i) { out[i] = load_image(paths[i].string()); });
    return out;
}

void draw_marker(RgbImage& img, int cx, int cy) {
    for (int d = -3; d <= 3; ++d) {
        for (auto [x, y] : {std::pair{cx + d, cy}, std::pair{cx, cy + d}}) {
            if (x < 0 || y < 0 || x >= img.width() || y >= img.height()) continue;
            img.at(x, y, 0) = 255;
            img.at(x, y, 1) = 0;
            img.at(x, y, 2) = 0;
        }
    }
}

void export_corners(const RgbImage& img, const Config& cfg, std::uint64_t k1, const std::string& path) {
    const PreparedImage p = prepare_image(img, cfg);
    RgbImage canvas = p.secondary;
    const int side = canvas.width();
    for (int y = 0; y < side; ++y) {
        for (int x = 0; x < side; ++x) {
            const int k = p.ribbons.label(x, y);
            const bool edge = (x + 1 < side && p.ribbons.label(x + 1, y) != k) ||
                              (y + 1 < side && p.ribbons.label(x, y + 1) != k);
            if (edge) {
                for (int c = 0; c < 3; ++c) canvas.at(x, y, c) = 0.6 * canvas.at(x, y, c) + 0.4 * 255;
            }
        }
    }
    for (const auto& ribbon : select_boundary_corners(p.corners, p.ribbons, cfg.tau, k1)) {
        for (const auto& c : ribbon) draw_marker(canvas, c.x, c.y);
    }
    save_png(canvas, path);
}

int cmd_hash(const Common& c, const std::vector<std::string>& images, const std::string& index_path,
             const std::string& corners_png) {
    const Config cfg = resolve_config(c);
    const auto model = resolve_model(c, cfg);
    const SecretKeys keys = resolve_keys(c);
    for (const auto& path : images) {
        const RgbImage img = load_image(path);
        const Hash h = generate_hash(img, cfg, ptr(model), keys);
        std::cout << serialize(h) << '\n';
        if (!index_path.empty()) index_add(index_path, h, path);
        if (!corners_png.empty()) export_corners(img, cfg, keys.feature_key, corners_png);
    }
    return 0;
}

int cmd_compare(const Common& c, const std::string& a, const std::string& b) {
    const Config cfg = resolve_config(c);
    const auto model = resolve_model(c, cfg);
    const SecretKeys keys = resolve_keys(c);
    const Hash ha = generate_hash(load_image(a), cfg, ptr(model), keys);
    const Hash hb = generate_hash(load_image(b), cfg, ptr(model), keys);
    const Verdict v = classify(euclidean_distance(ha, hb), cfg.threshold);
    std::printf("distance %.6f\nthreshold %g\nverdict %s\n", v.distance, v.threshold,
                v.decision == Decision::similar ? "similar" : "different");
    return v.decision == Decision::similar ? 0 : 1;
}

int cmd_attack(const Common& c, const std::string& image, const std::string& kind, std::optional<double> param) {
    const RgbImage img = load_image(image);
    std::vector<ManipulationSpec> specs;
    if (kind.empty()) {
        if (param) throw ParameterError("--param needs --kind");
        specs = attack_specs(c.seed);
    } else {
        if (!param) throw ParameterError("--kind needs --param");
        specs.push_back({parse_manipulation(kind), *param, c.seed});
    }
    fs::create_directories(c.out);
    const std::string stem = fs::path(image).stem().string();
    parallel_for(specs.size(), [&](std::size_t i) {
        const fs::path target = fs::path(c.out) / (stem + "__" + attack_label(specs[i]) + ".png");
        save_png(apply_manipulation(img, specs[i]), target.string());
    });
    std::printf("wrote %zu images to %s\n", specs.size(), c.out.c_str());
    return 0;
}

int cmd_fit(const Common& c, const std::string& corpus) {
    const Config cfg = resolve_config(c);
    if (cfg.scheme != Scheme::cca) throw ConfigError("fit-model needs a cca config");
    const SecretKeys keys = resolve_keys(c);
    const auto paths = list_images(corpus);
    if (paths.size() < 2) throw ModelError("fit-model needs at least two readable images");
    std::vector<FeatureBundle> bundles(paths.size());
    parallel_for(paths.size(), [&](std::size_t i) {
        bundles[i] = extract_features(load_image(paths[i].string()), cfg, keys.feature_key);
    });
    const CcaModel model = fit_model(bundles, cfg);
    save_model(model, c.out);
    const auto& l = model.correlations;
    std::printf("samples %d\ncomponents %d\nlambda_1 %.6f\nlambda_median %.6f\nlambda_last %.6f\n",
                model.sample_count, model.components, l[0], l[l.size() / 2], l[l.size() - 1]);
    return 0;
}

int cmd_evaluate(const Common& c, const std::string& corpus, int wrong, std::size_t max_pairs) {
    const Config cfg = resolve_config(c);
    const auto model = resolve_model(c, cfg);
    const SecretKeys keys = resolve_keys(c);
    const auto paths = list_images(corpus);
    if (paths.empty()) throw EvaluationError("no images in '" + corpus + "'");
    std::vector<std::string> ids;
    for (const auto& p : paths) ids.push_back(p.filename().string());
    EvaluationOptions opt;
    opt.seed = c.seed;
    opt.wrong_key_count = wrong;
    opt.max_different_pairs = max_pairs;
    const EvaluationReport r = evaluate_corpus(load_all(paths), ids, cfg, ptr(model), keys, opt);
    write_reports(r, c.out);
    std::size_t similar = 0, different = 0;
    for (const auto& s : r.samples) {
        similar += s.pair_class == PairClass::similar;
        different += s.pair_class == PairClass::different;
    }
    std::printf("similar_pairs %zu\ndifferent_pairs %zu\n", similar, different);
    if (different > 0) {
        const Rates rates = tpr_fpr(r.samples, cfg.threshold);
        std::printf("auc %.6f\ntpr %.6f\nfpr %.6f\n", r.roc.auc, rates.tpr, rates.fpr);
    }
    return 0;
}

int cmd_index_add(const Common& c, const std::string& index, const std::vector<std::string>& images) {
    const Config cfg = resolve_config(c);
    const auto model = resolve_model(c, cfg);
    const SecretKeys keys = resolve_keys(c);
    for (const auto& path : images) {
        const IndexEntry e = index_add(index, generate_hash(load_image(path), cfg, ptr(model), keys), path);
        std::printf("%s\t%s\n", e.id.c_str(), path.c_str());
    }
    return 0;
}

int cmd_index_query(const Common& c, const std::string& index, const std::string& image, std::size_t top_k) {
    const Config cfg = resolve_config(c);
    const auto model = resolve_model(c, cfg);
    const SecretKeys keys = resolve_keys(c);
    const Hash h = generate_hash(load_image(image), cfg, ptr(model), keys);
    for (const auto& m : index_query(index, h, top_k, cfg.threshold)) {
        std::printf("%s\t%.6f\t%s\t%s\n", m.entry.id.c_str(), m.distance, m.copy ? "copy" : "-",
                    m.entry.label.c_str());
    }
    return 0;
}

int cmd_keys_check(const Common& c, const std::string& index) {
    const SecretKeys keys = resolve_keys(c);
    const std::string fp = key_fingerprint(keys);
    std::printf("fingerprint %s\n", fp.c_str());
    if (keys.feature_key == keys.hash_key) std::fprintf(stderr, "warning: key1 and key2 are equal\n");
    if (index.empty()) return 0;
    const IndexContents contents = read_index(index);
    const bool match = contents.header.key_fingerprint == fp;
    std::printf("index %s\n", match ? "match" : "mismatch");
    return match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Perceptual colour-image hashing"};
    app.require_subcommand(1);
    Common common;

    std::vector<std::string> hash_images;
    std::string hash_index, corners_png;
    auto* hash = app.add_subcommand("hash", "Print the hash of each image");
    add_common(hash, common);
    hash->add_option("images", hash_images, "Image files")->required();
    hash->add_option("--index", hash_index, "Also append each hash to this index");
    hash->add_option("--corners-png", corners_png, "Write the selected boundary corners over the secondary image");

    std::string cmp_a, cmp_b;
    auto* compare = app.add_subcommand("compare", "Distance and verdict for two images (exit 0 similar, 1 different)");
    add_common(compare, common);
    compare->add_option("a", cmp_a)->required();
    compare->add_option("b", cmp_b)->required();

    std::string attack_image, attack_kind;
    std::optional<double> attack_param;
    auto* attack = app.add_subcommand("attack", "Write manipulated copies of an image");
    add_common(attack, common, true);
    attack->add_option("image", attack_image)->required();
    attack->add_option("--kind", attack_kind, "One manipulation instead of the full matrix");
    attack->add_option("--param", attack_param, "Parameter of --kind");

    std::string fit_corpus;
    auto* fit = app.add_subcommand("fit-model", "Fit and save a CCA model on a directory of images");
    add_common(fit, common, true);
    fit->add_option("corpus", fit_corpus)->required();

    std::string eval_corpus;
    int eval_wrong = 100;
    std::size_t eval_pairs = 0;
    auto* evaluate = app.add_subcommand("evaluate", "Attack matrix, ROC, statistics and key sweep as CSV");
    add_common(evaluate, common, true);
    evaluate->add_option("corpus", eval_corpus)->required();
    evaluate->add_option("--wrong-keys", eval_wrong, "Wrong key pairs in the key sweep")->check(CLI::NonNegativeNumber);
    evaluate->add_option("--max-different-pairs", eval_pairs, "Sample at most this many different pairs (0 = all)");

    auto* index = app.add_subcommand("index", "Hash index for copy detection");
    index->require_subcommand(1);
    std::string index_path, query_image;
    std::vector<std::string> add_images;
    std::size_t top_k = 5;
    auto* index_add_cmd = index->add_subcommand("add", "Append image hashes");
    add_common(index_add_cmd, common);
    index_add_cmd->add_option("index", index_path)->required();
    index_add_cmd->add_option("images", add_images)->required();
    auto* index_query_cmd = index->add_subcommand("query", "Nearest indexed hashes");
    add_common(index_query_cmd, common);
    index_query_cmd->add_option("index", index_path)->required();
    index_query_cmd->add_option("image", query_image)->required();
    index_query_cmd->add_option("--top-k", top_k, "Number of matches");

    auto* keys = app.add_subcommand("keys", "Key utilities");
    keys->require_subcommand(1);
    std::string keys_index;
    auto* keys_check = keys->add_subcommand("check", "Print the key fingerprint, optionally against an index");
    add_common(keys_check, common);
    keys_check->add_option("--index", keys_index);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (*hash) return cmd_hash(common, hash_images, hash_index, corners_png);
        if (*compare) return cmd_compare(common, cmp_a, cmp_b);
        if (*attack) return cmd_attack(common, attack_image, attack_kind, attack_param);
        if (*fit) return cmd_fit(common, fit_corpus);
        if (*evaluate) return cmd_evaluate(common, eval_corpus, eval_wrong, eval_pairs);
        if (*index_add_cmd) return cmd_index_add(common, index_path, add_images);
        if (*index_query_cmd) return cmd_index_query(common, index_path, query_image, top_k);
        if (*keys_check) return cmd_keys_check(common, keys_index);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "rrhash: %s\n", e.what());
        return kExitError;
    }
    return kExitError;
}
