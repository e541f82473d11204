#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kset/construct.hpp"
#include "kset/model.hpp"

namespace kset::catalog {

struct ExpectedProperties {
    bool is_ks = true;
    bool is_parity = false;
    bool is_critical = true;  // in ContextOnly mode
};

struct CatalogEntry {
    std::string name;
    std::size_t dim = 0;
    KSSet set;
    std::string expected_symbol;
    ExpectedProperties expected;
    std::string provenance;
};

// Parses and validates on first use. Throws UnknownName.
const CatalogEntry& get(std::string_view name);

// Every entry, ordered by (dimension, name).
std::vector<const CatalogEntry*> list();
std::vector<std::string> names();

// Embedded set-file text of an entry or fixture. Throws UnknownName.
std::string source(std::string_view name);

// Sets used by tests and recipes that are not catalog entries:
//   "d6-21-7-basis"  21-7 after a unitary that turns its first context into e1..e6.
const KSSet& fixture(std::string_view name);
std::vector<std::string> fixture_names();

// Context map behind d10-39-9, for pz_improved(d6-21-7, d4-18-9): 18-9 contexts 1-7
// go to 21-7 contexts 1-7, and 18-9 contexts 8 and 9 reuse 21-7 context 1.
Pairing d10_pairing();

}  // namespace kset::catalog
