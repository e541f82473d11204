#include "kset/recipes.hpp"

#include <algorithm>
#include <tuple>

#include "kset/catalog.hpp"
#include "kset/construct.hpp"

namespace kset {
namespace {

std::string compact(std::size_t r, std::size_t b) { return std::to_string(r) + "-" + std::to_string(b); }

std::pair<std::size_t, std::size_t> parse_compact(const std::string& s) {
    auto dash = s.find('-');
    return {std::stoul(s.substr(0, dash)), std::stoul(s.substr(dash + 1))};
}

struct ScaleRow {
    std::size_t k;
    const char* seed;
    std::size_t seed_factor;  // general-rank seed is scaled by seed_factor * n
    const char* rank_one_seed;
};

const ScaleRow kScaleRows[] = {
    {3, "d3-49-36", 1, "d3-49-36"}, {4, "d4-18-9", 1, "d4-18-9"},   {5, "d5-29-16", 1, "d5-29-16"},
    {6, "d6-21-7", 1, "d6-21-7"},   {7, "d7-32-12", 1, "d7-32-12"}, {8, "d4-18-9", 2, "d8-34-9"},
    {9, "d9-39-13", 1, "d9-39-13"}, {10, "d10-30-9", 1, "d10-39-9"}, {11, "d11-40-12", 1, "d11-40-12"},
};

// 18-9 after H diag(1, z, z^2, z^3), which leaves no zero entry in any ray. The
// padded copies and pad projectors built from the printed rays coincide in d = 5 and
// d = 7 because the printed set contains e1, e2 and e3.
KSSet generic_18_9() {
    const long h[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
    Matrix m(4, std::vector<CycNum>(4));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m[i][j] = CycNum(h[i][j]) * CycNum::zeta(static_cast<long>(j));
    KSSet s = apply_transform(catalog::get("d4-18-9").set, m);
    s.name = "d4-18-9-generic";
    return s;
}

std::size_t projector_count(const char* name) { return catalog::get(name).set.size(); }
std::size_t context_count(const char* name) { return catalog::get(name).set.contexts.size(); }

}  // namespace

std::vector<Recipe> table_recipe(std::size_t d) {
    std::vector<Recipe> out;
    if (d < 3) return out;

    for (const ScaleRow& row : kScaleRows) {
        if (d % row.k != 0) continue;
        const std::size_t n = d / row.k;
        Recipe r;
        r.dim = d;
        r.row = std::to_string(row.k) + "n";
        r.method = Recipe::Method::Scale;
        r.seed = row.seed;
        r.seed_scale = row.seed_factor * n;
        r.rank_one_seed = row.rank_one_seed;
        r.n = n;
        r.general_rank = compact(projector_count(row.seed), context_count(row.seed));
        r.rank_one = compact(projector_count(row.rank_one_seed) * n, context_count(row.rank_one_seed));
        r.description = "rank_scale(" + r.seed + ", " + std::to_string(r.seed_scale) + "); rank-1: split(rank_scale(" +
                        r.rank_one_seed + ", " + std::to_string(n) + "))";
        out.push_back(std::move(r));
    }

    if (d % 6 == 2) {
        const std::size_t n = (d - 2) / 6;
        Recipe r;
        r.dim = d;
        r.row = "6n+2";
        r.method = Recipe::Method::PzSplitPlus;
        r.rank_one_seed = "d8-34-9";
        r.n = n - 1;
        r.rank_one = compact(21 * n + 13, 9);
        r.description = n == 1 ? "d8-34-9"
                               : "pz_improved(split(rank_scale(d6-21-7, " + std::to_string(n - 1) +
                                     ")), d8-34-9, canonical pairing)";
        out.push_back(std::move(r));
    }
    if (d % 6 == 4) {
        const std::size_t n = (d - 4) / 6;
        if (n >= 1) {
            Recipe r;
            r.dim = d;
            r.row = "6n+4";
            r.method = Recipe::Method::PzSplitPlus;
            r.rank_one_seed = "d4-18-9";
            r.n = n;
            r.rank_one = compact(21 * n + 18, 9);
            r.description =
                "pz_improved(split(rank_scale(d6-21-7, " + std::to_string(n) + ")), d4-18-9, canonical pairing)";
            out.push_back(std::move(r));
        }
    }
    if (d % 2 == 1 && d >= 13) {
        const std::size_t m = d / 6;
        const std::size_t delta = d % 6;
        const std::size_t general = delta == 1 ? 43 : delta == 3 ? 57 : 61;
        const std::size_t extra = delta == 1 ? 11 : delta == 3 ? 18 : 20;
        const std::size_t b = delta == 1 ? 12 : 13;
        Recipe r;
        r.dim = d;
        r.row = "6m+" + std::to_string(delta);
        r.method = Recipe::Method::MatsunoScaled;
        r.seed = "d6-21-7-basis";
        r.n = m;
        r.general_rank = compact(general, b);
        r.rank_one = compact(21 * m + extra, b);
        r.description = "matsuno(split(rank_scale(d6-21-7-basis, " + std::to_string(m) + ")), " + std::to_string(d) +
                        ", V = first " + std::to_string(delta) + " basis rays); general rank: merge_rank of it";
        out.push_back(std::move(r));
    }
    if (d % 2 == 0) {
        for (std::size_t n = 1; 6 * n + 4 <= d; ++n) {
            if ((d - 6 * n) % 4 != 0) continue;
            Recipe r;
            r.dim = d;
            r.row = "6n+4l";
            r.method = Recipe::Method::PzMerged;
            r.n = n;
            r.l = (d - 6 * n) / 4;
            r.general_rank = compact(30, 9);
            r.description = "merge_rank(pz_improved(rank_scale(d6-21-7, " + std::to_string(n) +
                            "), rank_scale(d4-18-9, " + std::to_string(r.l) + "), optimal pairing))";
            out.push_back(std::move(r));
            break;
        }
    }
    if (d % 2 == 1 && d >= 7) {
        std::size_t n = 1;
        while (!(6 * n < d && d < 12 * n)) ++n;
        Recipe r;
        r.dim = d;
        r.row = "2n+5";
        r.method = Recipe::Method::Ceg;
        r.seed = "d6-21-7";
        r.seed_scale = n;
        r.general_rank = compact(45, 15);
        r.description = "ceg(rank_scale(d6-21-7, " + std::to_string(n) + "), " + std::to_string(d) + ")";
        out.push_back(std::move(r));
    }
    if (d % 2 == 1 && d >= 5) {
        std::size_t n = 1;
        while (!(4 * n < d && d < 8 * n)) ++n;
        Recipe r;
        r.dim = d;
        r.row = "2n+3";
        r.method = Recipe::Method::Ceg;
        r.seed = "d4-18-9";
        r.seed_scale = n;
        r.general_rank = compact(39, 19);
        r.description = "ceg(rank_scale(d4-18-9 rotated by H diag(1,z,z^2,z^3), " + std::to_string(n) + "), " +
                        std::to_string(d) + ")";
        out.push_back(std::move(r));
    }

    auto key = [](const Recipe& r) {
        auto [rc, bc] = parse_compact(r.general_rank ? *r.general_rank : *r.rank_one);
        return std::make_tuple(bc, rc);
    };
    std::stable_sort(out.begin(), out.end(), [&](const Recipe& a, const Recipe& b) { return key(a) < key(b); });
    return out;
}

RecipeOutput execute(const Recipe& r) {
    RecipeOutput out;
    const std::string tag = "d" + std::to_string(r.dim) + " " + r.row;
    switch (r.method) {
        case Recipe::Method::Scale:
            out.general_rank = rank_scale(catalog::get(r.seed).set, r.seed_scale);
            out.rank_one = split_rank(rank_scale(catalog::get(r.rank_one_seed).set, r.n));
            break;
        case Recipe::Method::PzSplitPlus: {
            const KSSet& seed = catalog::get(r.rank_one_seed).set;
            if (r.n == 0) {
                out.rank_one = seed;
                break;
            }
            KSSet scaled = split_rank(rank_scale(catalog::get("d6-21-7").set, r.n));
            out.rank_one = pz_improved(scaled, seed, canonical_pairing(scaled, seed));
            break;
        }
        case Recipe::Method::MatsunoScaled: {
            KSSet base = split_rank(rank_scale(catalog::fixture(r.seed), r.n));
            std::vector<std::string> v;
            for (std::size_t j = 1; j <= r.dim - 6 * r.n; ++j) v.push_back(std::to_string(j) + "_1");
            out.rank_one = matsuno(base, r.dim, v);
            out.general_rank = merge_rank(*out.rank_one);
            break;
        }
        case Recipe::Method::PzMerged: {
            KSSet a = rank_scale(catalog::get("d6-21-7").set, r.n);
            KSSet b = rank_scale(catalog::get("d4-18-9").set, r.l);
            out.general_rank = merge_rank(pz_improved(a, b, optimize_pairing(a, b).pairing));
            break;
        }
        case Recipe::Method::Ceg: {
            KSSet seed = r.seed == "d4-18-9" ? generic_18_9() : catalog::get(r.seed).set;
            out.general_rank = ceg(rank_scale(seed, r.seed_scale), r.dim);
            break;
        }
    }
    if (out.general_rank) out.general_rank->name = tag + " general rank";
    if (out.rank_one) out.rank_one->name = tag + " rank 1";
    return out;
}

}  // namespace kset
