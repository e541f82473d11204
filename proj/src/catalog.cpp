#include "kset/catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "catalog_data.hpp"
#include "kset/setfile.hpp"

namespace kset::catalog {
namespace {

struct Meta {
    const char* name;
    const char* symbol;
    bool parity;
    const char* provenance;
};

const Meta kMeta[] = {
    {"d3-49-36", "2^1_4 22^1_3 9^1_2 16^1_1 - 36^3_3", false,
     "critical subset of the completed Kochen-Conway set; ray table as published"},
    {"d3-57-40", "3^1_4 24^1_3 6^1_2 24^1_1 - 40^3_3", false, "completed Peres set; ray table as published, s2 = sqrt 2"},
    {"d4-18-9", "18^1_2 - 9^4_4", true, "Cabello 18-9 rays"},
    {"d5-29-16", "2^1_9 1^1_4 6^1_3 20^1_2 - 16^5_5", false, "Matsuno doubling of 18-9 with V = {1}"},
    {"d6-21-7", "21^1_2 - 7^6_6", true, "Lisonek et al. 21-7 rays; w3 = z^8, W3 = -z^4"},
    {"d7-32-12", "2^1_7 10^1_3 20^1_2 - 12^7_7", false, "Matsuno doubling of transformed 21-7; w6 = z^4"},
    {"d8-30-9", "4^2_2 2^1_4 24^1_2 - 8^8_7 1^8_8", true, "d8-34-9 with rays j, j+1 merged for j = 1, 3, 5, 7"},
    {"d8-34-9", "2^1_4 32^1_2 - 9^8_8", true, "rank-1 34-9 rays"},
    {"d9-39-13", "6^1_8 3^1_3 30^1_2 - 13^9_9", false, "Matsuno doubling of transformed 21-7; w6 = z^4"},
    {"d10-30-9", "9^2_2 6^1_4 15^1_2 - 6^10_7 3^10_10", true, "d10-39-9 with nine rank-2 pairs merged"},
    {"d10-39-9", "6^1_4 33^1_2 - 9^10_10", true, "improved Penrose-Zimba sum of 21-7 (coordinates 1-6) and 18-9 (7-10)"},
    {"d11-40-12", "2^1_7 8^1_6 10^1_3 20^1_2 - 12^11_11", false,
     "Matsuno doubling plus critical-subset search; w6 = z^4"},
};

const char* raw_text(const std::vector<detail::RawSet>& raws, std::string_view name) {
    for (const auto& r : raws)
        if (name == r.name) return r.text;
    return nullptr;
}

KSSet load(std::string_view name, const char* text) {
    KSSet s = parse_set(text);
    s.name = std::string(name);
    return s;
}

class Store {
public:
    static Store& instance() {
        static Store store;
        return store;
    }

    const CatalogEntry& entry(std::string_view name) {
        std::lock_guard lock(mutex_);
        auto it = entries_.find(name);
        if (it != entries_.end()) return it->second;
        for (const Meta& m : kMeta) {
            if (name != m.name) continue;
            const char* text = raw_text(detail::raw_catalog(), name);
            CatalogEntry e;
            e.name = m.name;
            e.set = load(name, text);
            e.dim = e.set.dim;
            e.expected_symbol = m.symbol;
            e.expected = {true, m.parity, true};
            e.provenance = m.provenance;
            return entries_.emplace(e.name, std::move(e)).first->second;
        }
        throw UnknownName(std::string(name));
    }

    const KSSet& fixture(std::string_view name) {
        std::lock_guard lock(mutex_);
        auto it = fixtures_.find(name);
        if (it != fixtures_.end()) return it->second;
        const char* text = raw_text(detail::raw_fixtures(), name);
        if (!text) throw UnknownName(std::string(name));
        return fixtures_.emplace(std::string(name), load(name, text)).first->second;
    }

private:
    std::mutex mutex_;
    std::map<std::string, CatalogEntry, std::less<>> entries_;
    std::map<std::string, KSSet, std::less<>> fixtures_;
};

}  // namespace

const CatalogEntry& get(std::string_view name) { return Store::instance().entry(name); }

std::vector<const CatalogEntry*> list() {
    std::vector<const CatalogEntry*> out;
    for (const Meta& m : kMeta) out.push_back(&get(m.name));
    std::sort(out.begin(), out.end(), [](const CatalogEntry* a, const CatalogEntry* b) {
        return std::tie(a->dim, a->name) < std::tie(b->dim, b->name);
    });
    return out;
}

std::vector<std::string> names() {
    std::vector<std::string> out;
    for (const CatalogEntry* e : list()) out.push_back(e->name);
    return out;
}

std::string source(std::string_view name) {
    if (const char* t = raw_text(detail::raw_catalog(), name)) return t;
    if (const char* t = raw_text(detail::raw_fixtures(), name)) return t;
    throw UnknownName(std::string(name));
}

const KSSet& fixture(std::string_view name) { return Store::instance().fixture(name); }

std::vector<std::string> fixture_names() {
    std::vector<std::string> out;
    for (const auto& r : detail::raw_fixtures()) out.emplace_back(r.name);
    return out;
}

Pairing d10_pairing() { return Pairing{{0, 1, 2, 3, 4, 5, 6, 0, 0}}; }

}  // namespace kset::catalog
