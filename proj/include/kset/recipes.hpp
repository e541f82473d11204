#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kset/model.hpp"

namespace kset {

/// One row of the dimension table, instantiated for a concrete dimension.
struct Recipe {
    enum class Method {
        Scale,          // rank_scale of a catalog seed; rank-1 column splits it
        PzSplitPlus,    // pz_improved(split(rank_scale(21-7, n)), seed), canonical pairing
        MatsunoScaled,  // matsuno on split(rank_scale(transformed 21-7, m)); general column merges
        PzMerged,       // merge_rank(pz_improved(rank_scale(21-7, n), rank_scale(18-9, l)))
        Ceg,            // ceg(rank_scale(seed, n), d)
    };

    std::size_t dim = 0;
    std::string row;          // "6n", "6m+1", "6n+4l", ...
    std::string description;  // method chain in words
    std::optional<std::string> general_rank;  // predicted compact symbol
    std::optional<std::string> rank_one;

    Method method = Method::Scale;
    std::string seed;             // catalog name for the general-rank column
    std::string rank_one_seed;    // catalog name for the rank-1 column, when different
    std::size_t n = 0;            // scale factor of the 21-7 (or seed) part
    std::size_t seed_scale = 0;   // scale factor of the general-rank seed
    std::size_t l = 0;            // scale factor of the 18-9 part (PzMerged)
};

// Every row that applies to d (d >= 3), ordered by the predicted (contexts,
// projectors) of the general-rank column, or the rank-1 column when that is the only
// one.
std::vector<Recipe> table_recipe(std::size_t d);

struct RecipeOutput {
    std::optional<KSSet> general_rank;
    std::optional<KSSet> rank_one;
};

// Builds the sets the recipe describes. Throws on construction failure.
RecipeOutput execute(const Recipe& recipe);

}  // namespace kset
