#pragma once

#include <vector>

namespace kset::detail {

struct RawSet {
    const char* name;
    const char* text;
};

const std::vector<RawSet>& raw_catalog();
const std::vector<RawSet>& raw_fixtures();

}  // namespace kset::detail
