#include <gtest/gtest.h>

#include "kset/catalog.hpp"
#include "kset/construct.hpp"
#include "kset/errors.hpp"
#include "kset/verify.hpp"
#include "support.hpp"

using namespace kset;

TEST(Catalog, Names) {
    auto names = catalog::names();
    EXPECT_EQ(names.size(), 12u);
    for (const char* n : {"d4-18-9", "d6-21-7", "d8-34-9", "d8-30-9", "d5-29-16", "d7-32-12", "d9-39-13", "d11-40-12",
                          "d3-49-36", "d3-57-40", "d10-39-9", "d10-30-9"})
        EXPECT_NE(std::find(names.begin(), names.end(), n), names.end()) << n;
}

TEST(Catalog, ListOrder) {
    auto l = catalog::list();
    ASSERT_EQ(l.size(), 12u);
    EXPECT_EQ(l.front()->dim, 3u);
    for (std::size_t i = 1; i < l.size(); ++i)
        EXPECT_TRUE(std::tie(l[i - 1]->dim, l[i - 1]->name) < std::tie(l[i]->dim, l[i]->name));
}

TEST(Catalog, Get) {
    EXPECT_EQ(catalog::get("d4-18-9").expected_symbol, "18^1_2 - 9^4_4");
    EXPECT_EQ(catalog::get("d3-57-40").set.size(), 57u);
    EXPECT_EQ(catalog::get("d3-57-40").set.contexts.size(), 40u);
    EXPECT_TRUE(catalog::get("d11-40-12").expected.is_critical);
    EXPECT_THROW(catalog::get("d4-18-10"), UnknownName);
    EXPECT_THROW(catalog::fixture("nope"), UnknownName);
    EXPECT_THROW(catalog::source("nope"), UnknownName);
}

TEST(Catalog, EntriesMatchExpectations) {
    for (const auto* e : catalog::list()) {
        EXPECT_EQ(e->dim, e->set.dim);
        EXPECT_TRUE(validate(e->set).ok()) << e->name;
        EXPECT_EQ(symbol(e->set).detailed(), e->expected_symbol) << e->name;
        EXPECT_EQ(is_parity(e->set), e->expected.is_parity) << e->name;
        EXPECT_FALSE(e->provenance.empty());
    }
}

TEST(Catalog, DimensionTenRelations) {
    KSSet built = pz_improved(support::cat("d4-18-9"), support::cat("d6-21-7"), catalog::d10_pairing());
    EXPECT_EQ(symbol(built).detailed(), catalog::get("d10-39-9").expected_symbol);
    EXPECT_EQ(symbol(merge_rank(support::cat("d10-39-9"))).detailed(), catalog::get("d10-30-9").expected_symbol);
}

TEST(Catalog, Fixture) {
    auto names = catalog::fixture_names();
    ASSERT_EQ(names.size(), 1u);
    const KSSet& f = catalog::fixture("d6-21-7-basis");
    EXPECT_EQ(symbol(f).detailed(), "21^1_2 - 7^6_6");
    EXPECT_TRUE(is_ks(f));
}
