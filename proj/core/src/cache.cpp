#include "ydc/cache.hpp"

#include <fstream>
#include <iostream>

#include <json.hpp>

#include "ydc/errors.hpp"
#include "ydc/serialize.hpp"

namespace ydc {

void DifficultyCache::load() {
    entries_.clear();
    if (!std::filesystem::exists(path_)) return;

    std::ifstream in(path_);
    if (!in) throw IoError("cannot open cache file " + path_.string());
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw IoError("cannot parse cache file " + path_.string() + ": " + e.what());
    }

    if (!doc.is_object() || doc.value("version", 0) != 1) {
        std::cerr << "warning: cache " << path_.string()
                  << " has an unsupported version; ignoring it\n";
        return;
    }
    nlohmann::json entries = doc.value("entries", nlohmann::json::object());
    for (auto& [key, value] : entries.items()) {
        try {
            Partition target = Partition::parse(key);
            Entry entry;
            entry.delta = value.at("delta").get<int>();
            entry.certificate = steps_from_json(value.at("certificate"));
            if (verify_sequence(entry.certificate, target) != entry.delta)
                throw VerificationError(VerificationError::Kind::WrongEndpoint, -1,
                                        "cost mismatch");
            entries_[key] = std::move(entry);
        } catch (const Error& e) {
            std::cerr << "warning: discarding corrupt cache entry '" << key
                      << "': " << e.what() << "\n";
        } catch (const nlohmann::json::exception& e) {
            std::cerr << "warning: discarding corrupt cache entry '" << key
                      << "': " << e.what() << "\n";
        }
    }
}

std::optional<DifficultyCache::Entry> DifficultyCache::lookup(const Partition& p) const {
    auto it = entries_.find(p.str());
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void DifficultyCache::put(const Partition& p, int delta, const ValidSequence& certificate) {
    entries_[p.str()] = {delta, certificate};
}

void DifficultyCache::save() const {
    nlohmann::json entries = nlohmann::json::object();
    for (const auto& [key, entry] : entries_)
        entries[key] = {{"delta", entry.delta},
                        {"certificate", steps_to_json(entry.certificate)}};
    nlohmann::json doc = {{"version", 1}, {"entries", std::move(entries)}};

    std::ofstream out(path_);
    if (!out) throw IoError("cannot write cache file " + path_.string());
    out << doc.dump(1) << "\n";
    if (!out) throw IoError("write to cache file " + path_.string() + " failed");
}

}  // namespace ydc
