#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include <json.hpp>
#endif

#include "modtensor/classify.hpp"
#include "modtensor/simples.hpp"

namespace modtensor {

using Json = nlohmann::json;  // std::map objects: keys serialize sorted

inline Json to_json(Weight w) { return Json::array({w.a, w.b}); }

// Sorted [a, b, m] triples.
template <class Tag>
Json to_json(const WeightSum<Tag>& s) {
    Json arr = Json::array();
    for (const auto& [w, m] : s.sorted()) arr.push_back(Json::array({w.a, w.b, m}));
    return arr;
}

inline Json to_json(const RowMatch& m) {
    Json j;
    j["table"] = m.table;
    j["row"] = m.row;
    j["swapped"] = m.swapped;
    j["digit"] = m.digit;
    return j;
}

inline Json verdict_json(const RootDatum& datum, int p, Weight lambda, Weight mu, const Verdict& v) {
    Json j;
    j["system"] = std::string(datum.name());
    j["p"] = p;
    j["lambda"] = to_json(lambda);
    j["mu"] = to_json(mu);
    j["cr"] = v.cr;
    j["mf"] = v.mf;
    Json rows = Json::array();
    for (const auto& m : v.matched_rows) rows.push_back(to_json(m));
    j["rows"] = rows;
    return j;
}

template <class Tag>
WeightSum<Tag> weight_sum_from_json(const Json& arr) {
    if (!arr.is_array()) throw DomainError("expected an array of [a, b, m] triples");
    WeightSum<Tag> out;
    for (const auto& t : arr) {
        if (!t.is_array() || t.size() != 3) throw DomainError("malformed [a, b, m] triple");
        out.add({t[0].get<int>(), t[1].get<int>()}, t[2].get<std::int64_t>());
    }
    return out;
}

inline std::string row_list(const std::vector<RowMatch>& rows) {
    std::string s;
    for (const auto& m : rows) {
        if (!s.empty()) s += ';';
        s += m.table + ":" + m.row + (m.swapped ? "'" : "");
    }
    return s;
}

// Write-then-rename so readers never see a half-written file.
inline void atomic_write(const std::filesystem::path& path, const std::string& content) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
        if (!out.flush()) throw std::runtime_error("failed writing " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

class CacheError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// One JSON document holding restricted simple characters for any number of (system, p).
class CharacterCache {
public:
    static constexpr int kVersion = 1;

    static CharacterCache load(const std::filesystem::path& path) {
        CharacterCache cache;
        std::ifstream in(path);
        if (!in) return cache;  // absent: cold start
        Json doc;
        try {
            doc = Json::parse(in);
        } catch (const std::exception& e) {
            throw CacheError(std::string("unparseable cache: ") + e.what());
        }
        if (!doc.is_object() || doc.value("format", "") != "modtensor-character-cache")
            throw CacheError("not a modtensor character cache");
        if (doc.value("version", -1) != kVersion) throw CacheError("unsupported cache version");
        try {
            for (const auto& e : doc.at("entries")) {
                Key k{e.at("system").get<std::string>(), e.at("p").get<int>(),
                      {e.at("weight").at(0).get<int>(), e.at("weight").at(1).get<int>()}};
                cache.entries_[k] = weight_sum_from_json<FormalTag>(e.at("character"));
            }
        } catch (const CacheError&) {
            throw;
        } catch (const std::exception& e) {
            throw CacheError(std::string("malformed cache entry: ") + e.what());
        }
        return cache;
    }

    std::size_t preload(CharacterTable& table) const {
        const std::string sys(table.datum().name());
        std::size_t n = 0;
        for (const auto& [k, ch] : entries_) {
            if (k.system != sys || k.p != table.p()) continue;
            table.preload_simple(k.weight, ch);
            ++n;
        }
        return n;
    }

    void absorb(const CharacterTable& table) {
        const std::string sys(table.datum().name());
        for (auto& [w, ch] : table.restricted_snapshot()) entries_[Key{sys, table.p(), w}] = std::move(ch);
    }

    std::string dump() const {
        Json doc;
        doc["format"] = "modtensor-character-cache";
        doc["version"] = kVersion;
        Json arr = Json::array();
        for (const auto& [k, ch] : entries_) {
            Json e;
            e["system"] = k.system;
            e["p"] = k.p;
            e["weight"] = to_json(k.weight);
            e["character"] = to_json(ch);
            arr.push_back(std::move(e));
        }
        doc["entries"] = std::move(arr);
        return doc.dump() + "\n";
    }

    void save(const std::filesystem::path& path) const { atomic_write(path, dump()); }

    std::size_t size() const { return entries_.size(); }

private:
    struct Key {
        std::string system;
        int p;
        Weight weight;
        auto operator<=>(const Key&) const = default;
    };
    std::map<Key, FormalCharacter> entries_;
};

}  // namespace modtensor
