#include "rrhash/image_io.hpp"

#include "rrhash/error.hpp"

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>

namespace rrhash {

namespace {

unsigned char to_byte(double v) { return static_cast<unsigned char>(std::lround(std::clamp(v, 0.0, 255.0))); }

cv::Mat to_bgr(const RgbImage& img) {
    cv::Mat m(img.height(), img.width(), CV_8UC3);
    for (int y = 0; y < img.height(); ++y) {
        auto* row = m.ptr<cv::Vec3b>(y);
        for (int x = 0; x < img.width(); ++x) {
            row[x] = {to_byte(img.at(x, y, 2)), to_byte(img.at(x, y, 1)), to_byte(img.at(x, y, 0))};
        }
    }
    return m;
}

RgbImage from_bgr(const cv::Mat& m) {
    RgbImage img(m.cols, m.rows);
    for (int y = 0; y < m.rows; ++y) {
        const auto* row = m.ptr<cv::Vec3b>(y);
        for (int x = 0; x < m.cols; ++x) {
            img.at(x, y, 0) = row[x][2];
            img.at(x, y, 1) = row[x][1];
            img.at(x, y, 2) = row[x][0];
        }
    }
    return img;
}

}  // namespace

RgbImage load_image(const std::string& path) {
    if (!std::filesystem::is_regular_file(path)) throw ImageError("cannot read image '" + path + "'");
    cv::Mat m = cv::imread(path, cv::IMREAD_COLOR);
    if (m.empty()) throw ImageError("cannot decode image '" + path + "'");
    return from_bgr(m);
}

void save_png(const RgbImage& img, const std::string& path) {
    if (!cv::imwrite(path, to_bgr(img))) throw ImageError("cannot write PNG '" + path + "'");
}

RgbImage jpeg_roundtrip(const RgbImage& img, int quality) {
    if (quality < 1 || quality > 100) throw ParameterError("JPEG quality must lie in 1..100");
    std::vector<unsigned char> buffer;
    if (!cv::imencode(".jpg", to_bgr(img), buffer, {cv::IMWRITE_JPEG_QUALITY, quality})) {
        throw ImageError("JPEG encoding failed");
    }
    cv::Mat decoded = cv::imdecode(buffer, cv::IMREAD_COLOR);
    if (decoded.empty()) throw ImageError("JPEG decoding failed");
    return from_bgr(decoded);
}

RgbImage quantize_8bit(const RgbImage& img) {
    RgbImage out = img;
    for (double& v : out.data()) v = to_byte(v);
    return out;
}

}  // namespace rrhash
