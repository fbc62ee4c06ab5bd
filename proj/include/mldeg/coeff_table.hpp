#pragma once

#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>
#include <vector>

#include "exact.hpp"

namespace mldeg {

enum class Family { psi, psi_complement, alpha, dA, sIJ };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::psi: return "psi";
        case Family::psi_complement: return "psi_complement";
        case Family::alpha: return "alpha";
        case Family::dA: return "dA";
        case Family::sIJ: return "sIJ";
    }
    return "?";
}

inline std::optional<Family> parse_family(const std::string& s) {
    for (Family f : {Family::psi, Family::psi_complement, Family::alpha, Family::dA, Family::sIJ})
        if (s == family_name(f)) return f;
    return std::nullopt;
}

struct CoeffRecord {
    Family family;
    std::string key;
    BigInt value;
};

// Write-once memo of Lascoux-type integers. Readers share the lock; a second
// write of the same key must carry the same value.
class CoeffTable {
public:
    static constexpr const char* header = "# mldeg coefficient cache v1";

    std::optional<BigInt> get(Family f, const std::string& key) const {
        std::shared_lock lock(mu_);
        auto it = data_.find({f, key});
        if (it == data_.end()) return std::nullopt;
        ++hits_;
        return it->second;
    }

    void put(Family f, const std::string& key, const BigInt& v) {
        std::unique_lock lock(mu_);
        auto [it, fresh] = data_.try_emplace({f, key}, v);
        if (!fresh) {
            if (it->second != v)
                throw ConsistencyError(std::string("CoeffTable: conflicting values for ") + family_name(f) + " " + key +
                                       ": " + it->second.get_str() + " vs " + v.get_str());
            return;
        }
        unsaved_.emplace(f, key);
    }

    std::size_t size() const {
        std::shared_lock lock(mu_);
        return data_.size();
    }
    unsigned long hits() const { return hits_; }

    std::vector<CoeffRecord> records() const {
        std::shared_lock lock(mu_);
        std::vector<CoeffRecord> out;
        for (const auto& [k, v] : data_) out.push_back({k.first, k.second, v});
        return out;
    }

    // Reads "family<TAB>key<TAB>value" lines; entries loaded this way count as
    // already saved.
    void load(const std::string& path) {
        std::ifstream in(path);
        if (!in) return;
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty()) continue;
            if (line[0] == '#') {
                if (lineno == 1 && line != header) throw DomainError("cache " + path + ": unknown header '" + line + "'");
                continue;
            }
            auto t1 = line.find('\t'), t2 = line.find('\t', t1 == std::string::npos ? t1 : t1 + 1);
            if (t1 == std::string::npos || t2 == std::string::npos)
                throw DomainError("cache " + path + ":" + std::to_string(lineno) + ": malformed record");
            auto fam = parse_family(line.substr(0, t1));
            if (!fam) throw DomainError("cache " + path + ":" + std::to_string(lineno) + ": unknown family");
            BigInt v;
            if (v.set_str(line.substr(t2 + 1), 10) != 0)
                throw DomainError("cache " + path + ":" + std::to_string(lineno) + ": bad value");
            std::string key = line.substr(t1 + 1, t2 - t1 - 1);
            put(*fam, key, v);
            std::unique_lock lock(mu_);
            unsaved_.erase({*fam, key});
        }
    }

    // Appends entries not yet in the file, in canonical order.
    void save(const std::string& path) {
        std::unique_lock lock(mu_);
        bool exists = static_cast<bool>(std::ifstream(path));
        std::ofstream out(path, std::ios::app);
        if (!out) throw DomainError("cache: cannot write " + path);
        if (!exists) out << header << '\n';
        for (const auto& k : unsaved_) out << family_name(k.first) << '\t' << k.second << '\t' << data_.at(k) << '\n';
        unsaved_.clear();
    }

private:
    using Key = std::pair<Family, std::string>;
    mutable std::shared_mutex mu_;
    std::map<Key, BigInt> data_;
    std::set<Key> unsaved_;
    mutable std::atomic<unsigned long> hits_{0};
};

}  // namespace mldeg
