#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>

#include "ydc/difficulty.hpp"

namespace ydc {

/// Persistent difficulty results, stored as a JSON document
///   {"version": 1, "entries": {"<partition>": {"delta": n,
///    "certificate": [[partition, lambda, k], ...]}}}.
/// Certificates are re-verified on load; corrupt entries are discarded with
/// a warning on stderr.
class DifficultyCache {
public:
    explicit DifficultyCache(std::filesystem::path path) : path_(std::move(path)) {}

    /// Reads the file if it exists. Unreadable JSON throws IoError.
    void load();

    struct Entry {
        int delta = 0;
        ValidSequence certificate;
    };

    std::optional<Entry> lookup(const Partition& p) const;
    void put(const Partition& p, int delta, const ValidSequence& certificate);

    /// Writes the whole cache back. Throws IoError on failure.
    void save() const;

    std::size_t size() const { return entries_.size(); }
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
    std::unordered_map<std::string, Entry> entries_;
};

}  // namespace ydc
