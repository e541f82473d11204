#pragma once

#include <string>
#include <vector>

#include "kset/catalog.hpp"
#include "kset/model.hpp"
#include "kset/setfile.hpp"

namespace support {

inline const kset::KSSet& cat(const char* name) { return kset::catalog::get(name).set; }

inline kset::KSSet parse(const std::string& text) { return kset::parse_set(text); }

inline kset::Ray ray(std::initializer_list<long> xs) {
    kset::Ray r;
    for (long x : xs) r.push_back(kset::CycNum(x));
    return r;
}

// The 12 catalog names.
inline std::vector<std::string> catalog_names() { return kset::catalog::names(); }

}  // namespace support
