#include <gtest/gtest.h>

#include <random>

#include "kset/construct.hpp"
#include "kset/errors.hpp"
#include "kset/verify.hpp"
#include "oracle/oracle.hpp"
#include "support.hpp"

using namespace kset;
using support::cat;

namespace {

const Mode kModes[] = {Mode::ContextOnly, Mode::FullOrthogonality};

// Random context subsets of `s` small enough for exhaustive enumeration.
std::vector<KSSet> small_subsets(const KSSet& s, std::size_t count, unsigned seed, std::size_t max_projectors = 20) {
    std::mt19937 rng(seed);
    std::vector<KSSet> out;
    std::vector<std::size_t> order(s.contexts.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (std::size_t attempt = 0; out.size() < count && attempt < 50 * count; ++attempt) {
        std::shuffle(order.begin(), order.end(), rng);
        std::uniform_int_distribution<std::size_t> len(1, order.size());
        std::vector<std::size_t> kept(order.begin(), order.begin() + static_cast<long>(len(rng)));
        std::sort(kept.begin(), kept.end());
        KSSet sub = oracle::with_contexts(s, kept);
        if (sub.size() <= max_projectors) out.push_back(std::move(sub));
    }
    return out;
}

void check_against_oracle(const KSSet& s) {
    for (Mode mode : kModes) {
        auto witness = find_assignment(s, mode);
        EXPECT_EQ(witness.has_value(), oracle::brute_force_colorable(s, mode)) << s.name << " " << to_string(mode);
        if (witness) EXPECT_TRUE(oracle::assignment_valid(s, *witness, mode));
        oracle::Cnf cnf = oracle::parse_dimacs(export_cnf(s, mode));
        EXPECT_EQ(cnf.declared_clauses, cnf.clauses.size());
        EXPECT_EQ(cnf.variables, s.size());
        EXPECT_EQ(oracle::naive_sat(cnf), witness.has_value());
    }
}

}  // namespace

TEST(FindAssignment, EighteenNineIsUncolorable) {
    EXPECT_FALSE(find_assignment(cat("d4-18-9"), Mode::FullOrthogonality));
    EXPECT_FALSE(find_assignment(cat("d4-18-9"), Mode::ContextOnly));
}

TEST(FindAssignment, SingleContext) {
    KSSet s = support::parse("dim 3\nray a 1 0 0\nray b 0 1 0\nray c 0 0 1\nctx a b c\n");
    for (Mode mode : kModes) {
        auto w = find_assignment(s, mode);
        ASSERT_TRUE(w);
        EXPECT_EQ(w->to_lines(s), "a=1\nb=0\nc=0\n");
        EXPECT_FALSE(is_ks(s, mode));
    }
}

TEST(FindAssignment, RemovalOfFirstContextIsColorable) {
    const KSSet& s = cat("d4-18-9");
    std::size_t target = s.contexts.size();
    for (std::size_t c = 0; c < s.contexts.size(); ++c) {
        std::vector<std::string> ids;
        for (auto p : s.contexts[c]) ids.push_back(s.projectors[p].id);
        std::sort(ids.begin(), ids.end());
        if (ids == std::vector<std::string>{"1", "17", "18", "2"}) target = c;
    }
    ASSERT_LT(target, s.contexts.size());
    KSSet sub = oracle::without_context(s, target);
    EXPECT_TRUE(oracle::brute_force_colorable(sub, Mode::FullOrthogonality));
    auto w = find_assignment(sub, Mode::FullOrthogonality);
    ASSERT_TRUE(w);
    EXPECT_TRUE(oracle::assignment_valid(sub, *w, Mode::FullOrthogonality));
}

TEST(FindAssignment, RejectsInvalid) {
    KSSet s;
    s.dim = 2;
    s.projectors = {Projector::from_ray("a", support::ray({1, 0}))};
    s.contexts = {{0}};
    EXPECT_THROW(find_assignment(s), InvalidSet);
    EXPECT_THROW(export_cnf(s), InvalidSet);
}

TEST(IsKs, Catalog) {
    for (const auto& name : support::catalog_names()) EXPECT_TRUE(is_ks(cat(name.c_str()))) << name;
}

TEST(IsParity, Examples) {
    EXPECT_TRUE(is_parity(cat("d4-18-9")));
    EXPECT_FALSE(is_parity(cat("d5-29-16")));
    EXPECT_FALSE(is_parity(oracle::without_context(cat("d4-18-9"), 0)));
}

TEST(IsParity, ParityImpliesContextOnlyUncolorable) {
    std::vector<KSSet> sets;
    for (const auto& name : support::catalog_names())
        if (is_parity(cat(name.c_str()))) sets.push_back(cat(name.c_str()));
    sets.push_back(pz_improved(cat("d4-18-9"), cat("d6-21-7"), catalog::d10_pairing()));
    sets.push_back(pz_improved(cat("d4-18-9"), cat("d4-18-9"), Pairing{{0, 1, 2, 3, 4, 5, 6, 7, 8}}));
    sets.push_back(rank_scale(cat("d6-21-7"), 2));
    for (const auto& s : sets) {
        ASSERT_TRUE(is_parity(s)) << s.name;
        EXPECT_FALSE(find_assignment(s, Mode::ContextOnly)) << s.name;
    }
}

TEST(Oracle, EighteenNineRemovals) {
    const KSSet& s = cat("d4-18-9");
    check_against_oracle(s);
    for (std::size_t c = 0; c < s.contexts.size(); ++c) check_against_oracle(oracle::without_context(s, c));
}

TEST(Oracle, RandomSubsetsOfCatalogSets) {
    unsigned seed = 10;
    for (const char* name : {"d4-18-9", "d3-49-36", "d3-57-40", "d5-29-16", "d6-21-7", "d7-32-12"})
        for (const auto& sub : small_subsets(cat(name), 12, seed++)) check_against_oracle(sub);
}

TEST(Oracle, ModeMonotonicity) {
    unsigned seed = 40;
    for (const char* name : {"d3-49-36", "d3-57-40", "d5-29-16"})
        for (const auto& sub : small_subsets(cat(name), 25, seed++, 40))
            if (find_assignment(sub, Mode::FullOrthogonality)) EXPECT_TRUE(find_assignment(sub, Mode::ContextOnly));
}

TEST(Critical, EighteenNine) {
    for (Mode mode : kModes) {
        auto r = is_critical(cat("d4-18-9"), mode);
        EXPECT_TRUE(r.overall);
        EXPECT_EQ(r.colorable_count(), 9u);
        for (const auto& removal : r.removals) {
            ASSERT_TRUE(removal.witness);
            KSSet sub = oracle::without_context(cat("d4-18-9"), removal.context);
            // Witness values live on the full set's projector indices.
            Assignment a;
            for (std::size_t p = 0; p < removal.witness->value.size(); ++p) {
                bool used = false;
                for (std::size_t c = 0; c < 9; ++c)
                    if (c != removal.context)
                        for (auto q : cat("d4-18-9").contexts[c]) used |= q == p;
                if (used) a.value.push_back(removal.witness->value[p]);
            }
            EXPECT_TRUE(oracle::assignment_valid(sub, a, mode));
        }
    }
}

TEST(Critical, ParallelAgrees) {
    auto a = is_critical(cat("d6-21-7"), Mode::ContextOnly, false);
    auto b = is_critical(cat("d6-21-7"), Mode::ContextOnly, true);
    ASSERT_EQ(a.removals.size(), b.removals.size());
    for (std::size_t i = 0; i < a.removals.size(); ++i) {
        ASSERT_EQ(a.removals[i].witness.has_value(), b.removals[i].witness.has_value());
        if (a.removals[i].witness) EXPECT_EQ(a.removals[i].witness->value, b.removals[i].witness->value);
    }
}

TEST(Critical, RankOneVariantOfDimensionEight) { EXPECT_TRUE(is_critical(cat("d8-34-9")).overall); }

TEST(Critical, NotKsThrows) {
    KSSet s = support::parse("dim 2\nray a 1 0\nray b 0 1\nctx a b\n");
    EXPECT_THROW(is_critical(s), NotKS);
}

TEST(Critical, DuplicateContextRejected) {
    KSSet s = cat("d4-18-9");
    s.contexts.push_back(s.contexts.front());
    EXPECT_THROW(is_critical(s), InvalidSet);
}

TEST(Cnf, EighteenNine) {
    const KSSet& s = cat("d4-18-9");
    oracle::Cnf cnf = oracle::parse_dimacs(export_cnf(s, Mode::FullOrthogonality));
    EXPECT_EQ(cnf.variables, 18u);
    std::size_t positive = 0, binary = 0;
    for (const auto& c : cnf.clauses) {
        if (c.size() == 4 && c[0] > 0) ++positive;
        if (c.size() == 2 && c[0] < 0 && c[1] < 0) ++binary;
    }
    EXPECT_EQ(positive, 9u);
    EXPECT_EQ(binary, oracle::orthogonal_pairs(s).size());
    EXPECT_EQ(cnf.declared_clauses, 9 + binary);
    EXPECT_FALSE(oracle::naive_sat(cnf));
}

TEST(Cnf, SingleContextDimensionTwo) {
    KSSet s = support::parse("dim 2\nray a 1 0\nray b 0 1\nctx a b\n");
    for (Mode mode : kModes) EXPECT_EQ(export_cnf(s, mode), "c 1 a\nc 2 b\np cnf 2 2\n1 2 0\n-1 -2 0\n");
}

TEST(Mode, Parse) {
    EXPECT_EQ(parse_mode("full"), Mode::FullOrthogonality);
    EXPECT_EQ(parse_mode("context"), Mode::ContextOnly);
    EXPECT_FALSE(parse_mode("both"));
    EXPECT_STREQ(to_string(Mode::FullOrthogonality), "full");
}
