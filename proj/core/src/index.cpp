#include "rrhash/index.hpp"

#include "rrhash/error.hpp"
#include "rrhash/parallel.hpp"
#include "rrhash/similarity.hpp"

#include <json.hpp>

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <chrono>
#include <cstring>
#include <ctime>
#include <filesystem>
#include <numeric>

namespace rrhash {

namespace {

using nlohmann::json;

constexpr const char* kFormat = "rrhash-index";
constexpr int kVersion = 1;

class LockedFile {
public:
    LockedFile(const std::string& path, int flags, int lock) : path_(path) {
        fd_ = ::open(path.c_str(), flags | O_CLOEXEC, 0644);
        if (fd_ < 0) throw IndexError("cannot open index '" + path + "': " + std::strerror(errno));
        if (::flock(fd_, lock) != 0) {
            ::close(fd_);
            throw IndexError("cannot lock index '" + path + "'");
        }
    }
    ~LockedFile() {
        ::flock(fd_, LOCK_UN);
        ::close(fd_);
    }
    LockedFile(const LockedFile&) = delete;
    LockedFile& operator=(const LockedFile&) = delete;

    std::string read_all() const {
        std::string out;
        char buf[65536];
        ::lseek(fd_, 0, SEEK_SET);
        for (;;) {
            const ssize_t n = ::read(fd_, buf, sizeof buf);
            if (n < 0) throw IndexError("cannot read index '" + path_ + "'");
            if (n == 0) break;
            out.append(buf, static_cast<std::size_t>(n));
        }
        return out;
    }

    void append(const std::string& text) const {
        ::lseek(fd_, 0, SEEK_END);
        std::size_t done = 0;
        while (done < text.size()) {
            const ssize_t n = ::write(fd_, text.data() + done, text.size() - done);
            if (n < 0) throw IndexError("cannot write index '" + path_ + "'");
            done += static_cast<std::size_t>(n);
        }
        ::fsync(fd_);
    }

private:
    std::string path_;
    int fd_ = -1;
};

json header_record(const IndexHeader& h) {
    return {{"format", kFormat},
            {"version", kVersion},
            {"scheme", std::string(to_string(h.scheme))},
            {"config_digest", h.config_digest},
            {"key_fingerprint", h.key_fingerprint},
            {"length", h.length}};
}

IndexContents parse_index(const std::string& text, const std::string& path) {
    IndexContents out;
    bool have_header = false;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        const bool torn = end == std::string::npos;
        if (torn) end = text.size();
        const std::string line = text.substr(pos, end - pos);
        pos = end + 1;
        if (line.empty()) continue;
        json rec;
        try {
            rec = json::parse(line);
        } catch (const json::exception&) {
            if (torn) break;
            throw IndexError("corrupt record in index '" + path + "'");
        }
        try {
            if (!have_header) {
                if (rec.at("format").get<std::string>() != kFormat || rec.at("version").get<int>() != kVersion) {
                    throw IndexError("'" + path + "' is not a version 1 hash index");
                }
                out.header.scheme = parse_scheme(rec.at("scheme").get<std::string>());
                out.header.config_digest = rec.at("config_digest").get<std::string>();
                out.header.key_fingerprint = rec.at("key_fingerprint").get<std::string>();
                out.header.length = rec.at("length").get<std::size_t>();
                have_header = true;
                continue;
            }
            IndexEntry e;
            e.id = rec.at("id").get<std::string>();
            e.label = rec.at("label").get<std::string>();
            e.timestamp = rec.at("timestamp").get<std::string>();
            e.values = rec.at("values").get<std::vector<double>>();
            if (e.values.size() != out.header.length) throw IndexError("entry " + e.id + " has the wrong length");
            out.entries.push_back(std::move(e));
        } catch (const json::exception&) {
            if (torn) break;
            throw IndexError("malformed record in index '" + path + "'");
        } catch (const Error& e) {
            if (dynamic_cast<const IndexError*>(&e)) throw;
            throw IndexError("malformed record in index '" + path + "'");
        }
    }
    if (!have_header) throw IndexError("index '" + path + "' has no header record");
    return out;
}

void check_compatible(const IndexHeader& h, const Hash& hash) {
    if (h.scheme != hash.scheme) throw IndexError("index holds " + std::string(to_string(h.scheme)) + " hashes");
    if (h.config_digest != hash.config_digest) throw IndexError("index was built under a different config");
    if (h.key_fingerprint != hash.key_fingerprint) throw IndexError("index was built under different keys");
    if (h.length != hash.size()) throw IndexError("index holds hashes of a different length");
}

}  // namespace

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

IndexEntry index_add(const std::string& path, const Hash& hash, const std::string& label,
                     const std::string& timestamp) {
    LockedFile file(path, O_RDWR | O_CREAT, LOCK_EX);
    const std::string text = file.read_all();
    std::string out;
    IndexContents contents;
    if (text.empty()) {
        contents.header = {hash.scheme, hash.config_digest, hash.key_fingerprint, hash.size()};
        out += header_record(contents.header).dump() + '\n';
    } else {
        contents = parse_index(text, path);
        check_compatible(contents.header, hash);
        if (text.back() != '\n') out += '\n';
    }
    IndexEntry e{std::to_string(contents.entries.size() + 1), label, timestamp.empty() ? utc_timestamp() : timestamp,
                 hash.values};
    const json rec = {{"id", e.id}, {"label", e.label}, {"timestamp", e.timestamp}, {"values", e.values}};
    out += rec.dump() + '\n';
    file.append(out);
    return e;
}

IndexContents read_index(const std::string& path) {
    LockedFile file(path, O_RDONLY, LOCK_SH);
    return parse_index(file.read_all(), path);
}

std::vector<IndexMatch> index_query(const std::string& path, const Hash& hash, std::size_t top_k, double xi) {
    std::error_code ec;
    if (std::filesystem::file_size(path, ec) == 0 && !ec) return {};  // created but never written
    IndexContents contents = read_index(path);
    check_compatible(contents.header, hash);
    const std::size_t n = contents.entries.size();
    std::vector<double> d(n);
    parallel_for(n, [&](std::size_t i) {
        d[i] = euclidean_distance(std::span<const double>(hash.values),
                                  std::span<const double>(contents.entries[i].values));
    });
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
    order.resize(std::min(top_k, n));
    std::vector<IndexMatch> out;
    for (std::size_t i : order) out.push_back({contents.entries[i], d[i], d[i] <= xi});
    return out;
}

}  // namespace rrhash
