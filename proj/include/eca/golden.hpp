#pragma once

#include <cmath>
#include <fstream>
#include <map>
#include <string>

#include <json.hpp>

#include "eca/errors.hpp"
#include "eca/io.hpp"

// Flat-file store of frozen reference values.  Every entry records where
// its value came from (provenance + oracle description) and the tolerance
// within which a re-derivation must reproduce it.

namespace eca {

struct GoldenEntry {
    double value = 0;
    std::string provenance; // "literature", "trivial", "derived"
    std::string oracle;     // how the value was first obtained
    double tolerance = 0;   // relative to max(1, |value|)
};

class GoldenStore {
public:
    static GoldenStore load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw Error("GoldenStore: cannot open " + path);
        nlohmann::json j;
        in >> j;
        GoldenStore store;
        for (auto it = j.begin(); it != j.end(); ++it) {
            GoldenEntry e;
            e.value = it.value().at("value").get<double>();
            e.provenance = it.value().at("provenance").get<std::string>();
            e.oracle = it.value().at("oracle").get<std::string>();
            e.tolerance = it.value().at("tolerance").get<double>();
            store.entries_[it.key()] = e;
        }
        return store;
    }

    void save(const std::string& path) const {
        nlohmann::json j;
        for (const auto& [key, e] : entries_) {
            j[key] = {{"value", e.value},
                      {"provenance", e.provenance},
                      {"oracle", e.oracle},
                      {"tolerance", e.tolerance}};
        }
        atomic_write(path, j.dump(2) + "\n");
    }

    bool contains(const std::string& key) const {
        return entries_.count(key) != 0;
    }

    const GoldenEntry& at(const std::string& key) const {
        auto it = entries_.find(key);
        if (it == entries_.end())
            throw Error("GoldenStore: missing key " + key);
        return it->second;
    }

    void put(const std::string& key, GoldenEntry entry) {
        entries_[key] = std::move(entry);
    }

    // True when a recomputed value reproduces the stored one within the
    // stored tolerance (relative to |value|, floored for values near zero).
    bool check(const std::string& key, double recomputed) const {
        const GoldenEntry& e = at(key);
        return std::abs(recomputed - e.value) <=
               e.tolerance * std::max(std::abs(e.value), 1e-6);
    }

    const std::map<std::string, GoldenEntry>& entries() const {
        return entries_;
    }

private:
    std::map<std::string, GoldenEntry> entries_;
};

} // namespace eca
