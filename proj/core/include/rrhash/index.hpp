#pragma once

#include "rrhash/hash.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace rrhash {

/// Header record: every entry of an index shares these.
struct IndexHeader {
    Scheme scheme = Scheme::concat;
    std::string config_digest;
    std::string key_fingerprint;
    std::size_t length = 0;
};

struct IndexEntry {
    std::string id;
    std::string label;      // source path or free text
    std::string timestamp;  // ISO 8601, UTC
    std::vector<double> values;
};

struct IndexContents {
    IndexHeader header;
    std::vector<IndexEntry> entries;
};

struct IndexMatch {
    IndexEntry entry;
    double distance = 0.0;
    bool copy = false;  // distance <= xi
};

/// Appends `hash` to the line-delimited JSON index at `path`, creating it
/// with a header record when missing. The file is locked for the duration
/// of the append. Returns the new entry. `timestamp` defaults to now.
/// Throws IndexError when the hash is incompatible with the header.
IndexEntry index_add(const std::string& path, const Hash& hash, const std::string& label,
                     const std::string& timestamp = {});

/// Reads a whole index. A torn final line (no trailing newline) is ignored.
IndexContents read_index(const std::string& path);

/// Linear scan for the `top_k` nearest entries, closest first (ties by
/// insertion order). An index without entries yields an empty result.
std::vector<IndexMatch> index_query(const std::string& path, const Hash& hash, std::size_t top_k, double xi);

/// Current UTC time as "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_timestamp();

}  // namespace rrhash
