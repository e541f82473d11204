#include "kset/construct.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

namespace kset {
namespace {

Ray pad(const Ray& r, std::size_t prepend, std::size_t append) {
    Ray out;
    out.reserve(prepend + r.size() + append);
    out.resize(prepend);
    out.insert(out.end(), r.begin(), r.end());
    out.resize(prepend + r.size() + append);
    return out;
}

Projector pad(const Projector& p, std::size_t prepend, std::size_t append, const std::string& prefix = "",
              const std::string& suffix = "") {
    Projector q;
    q.id = prefix + p.id + suffix;
    for (std::size_t k = 0; k < p.rank(); ++k) {
        q.span.push_back(pad(p.span[k], prepend, append));
        if (p.rank() > 1 || !p.part_ids.empty()) q.part_ids.push_back(prefix + p.part_id(k) + suffix);
    }
    return q;
}

Ray unit(std::size_t dim, std::size_t axis) {
    Ray r(dim);
    r[axis] = CycNum(1);
    return r;
}

Projector coordinate_block(std::string id, std::size_t dim, std::size_t begin, std::size_t end) {
    Projector p;
    p.id = std::move(id);
    for (std::size_t j = begin; j < end; ++j) {
        p.span.push_back(unit(dim, j));
        if (end - begin > 1) p.part_ids.push_back(p.id + "." + std::to_string(j - begin + 1));
    }
    return p;
}

std::unordered_set<std::string> all_ids(const KSSet& s) {
    std::unordered_set<std::string> ids;
    for (const auto& p : s.projectors) {
        ids.insert(p.id);
        for (std::size_t k = 0; k < p.rank(); ++k) ids.insert(p.part_id(k));
    }
    return ids;
}

bool ids_disjoint(const KSSet& a, const KSSet& b) {
    auto ids = all_ids(a);
    for (const auto& id : all_ids(b))
        if (ids.count(id)) return false;
    return true;
}

std::string fresh_id(const std::unordered_set<std::string>& taken, std::string base) {
    while (taken.count(base)) base += '*';
    return base;
}

// Adds projectors while identifying subspaces that are already present.
class ProjectorTable {
public:
    explicit ProjectorTable(KSSet& out) : out_(out) {}

    ProjectorIndex add(Projector p) {
        for (ProjectorIndex i = 0; i < out_.projectors.size(); ++i)
            if (out_.projectors[i].rank() == p.rank() && projector_equal(out_.projectors[i], p)) return i;
        out_.projectors.push_back(std::move(p));
        return out_.projectors.size() - 1;
    }

private:
    KSSet& out_;
};

void drop_duplicate_contexts(KSSet& s) {
    std::set<std::vector<ProjectorIndex>> seen;
    std::vector<Context> kept;
    for (auto& ctx : s.contexts) {
        std::vector<ProjectorIndex> key = ctx;
        std::sort(key.begin(), key.end());
        if (seen.insert(key).second) kept.push_back(std::move(ctx));
    }
    s.contexts = std::move(kept);
}

// Keeps only the listed contexts and the projectors they use, preserving order.
KSSet restrict_to(const KSSet& s, const std::vector<std::size_t>& kept_contexts) {
    std::vector<bool> used(s.projectors.size(), false);
    for (std::size_t c : kept_contexts)
        for (ProjectorIndex p : s.contexts[c]) used[p] = true;
    std::vector<ProjectorIndex> remap(s.projectors.size(), 0);
    KSSet out;
    out.name = s.name;
    out.dim = s.dim;
    for (ProjectorIndex i = 0; i < s.projectors.size(); ++i) {
        if (!used[i]) continue;
        remap[i] = out.projectors.size();
        out.projectors.push_back(s.projectors[i]);
    }
    for (std::size_t c : kept_contexts) {
        Context ctx;
        for (ProjectorIndex p : s.contexts[c]) ctx.push_back(remap[p]);
        out.contexts.push_back(std::move(ctx));
    }
    return out;
}

}  // namespace

KSSet embed(const KSSet& set, std::size_t prepend, std::size_t append) {
    require_valid(set);
    KSSet out;
    out.name = set.name;
    out.dim = set.dim + prepend + append;
    for (const auto& p : set.projectors) out.projectors.push_back(pad(p, prepend, append));
    out.contexts = set.contexts;
    return out;
}

KSSet pz_basic(const KSSet& first, const KSSet& second) {
    require_valid(first);
    require_valid(second);
    const bool keep = ids_disjoint(first, second);
    KSSet out;
    out.name = "pz-basic(" + first.name + "," + second.name + ")";
    out.dim = first.dim + second.dim;
    for (const auto& p : first.projectors) out.projectors.push_back(pad(p, 0, second.dim, keep ? "" : "a"));
    for (const auto& p : second.projectors) out.projectors.push_back(pad(p, first.dim, 0, keep ? "" : "b"));
    const std::size_t offset = first.projectors.size();
    for (const auto& c1 : first.contexts)
        for (const auto& c2 : second.contexts) {
            Context ctx = c1;
            for (ProjectorIndex p : c2) ctx.push_back(p + offset);
            out.contexts.push_back(std::move(ctx));
        }
    return out;
}

KSSet pz_improved(const KSSet& first, const KSSet& second, const Pairing& pairing) {
    require_valid(first);
    require_valid(second);
    if (!symbol_unchecked(first).parity()) throw NotParity("first operand is not a parity set");
    if (!symbol_unchecked(second).parity()) throw NotParity("second operand is not a parity set");
    const bool second_primary = primary_side(first, second) == 1;
    const KSSet& primary = second_primary ? second : first;
    const KSSet& other = second_primary ? first : second;
    validate_pairing(pairing, primary.contexts.size(), other.contexts.size());

    const bool keep = ids_disjoint(first, second);
    KSSet out;
    out.name = "pz(" + first.name + "," + second.name + ")";
    out.dim = first.dim + second.dim;
    for (const auto& p : first.projectors) out.projectors.push_back(pad(p, 0, second.dim, keep ? "" : "a"));
    for (const auto& p : second.projectors) out.projectors.push_back(pad(p, first.dim, 0, keep ? "" : "b"));
    const std::size_t offset = first.projectors.size();
    for (std::size_t i = 0; i < primary.contexts.size(); ++i) {
        const Context& a = second_primary ? other.contexts[pairing.target[i]] : primary.contexts[i];
        const Context& b = second_primary ? primary.contexts[i] : other.contexts[pairing.target[i]];
        Context ctx = a;
        for (ProjectorIndex p : b) ctx.push_back(p + offset);
        out.contexts.push_back(std::move(ctx));
    }
    return out;
}

KSSet merge_rank(const KSSet& set) {
    require_valid(set);
    std::vector<std::vector<std::size_t>> membership(set.projectors.size());
    for (std::size_t c = 0; c < set.contexts.size(); ++c)
        for (ProjectorIndex p : set.contexts[c]) membership[p].push_back(c);

    std::map<std::vector<std::size_t>, std::size_t> group_of;
    std::vector<std::size_t> group(set.projectors.size());
    std::vector<std::vector<ProjectorIndex>> members;
    for (ProjectorIndex i = 0; i < set.projectors.size(); ++i) {
        std::size_t g = members.size();
        if (!membership[i].empty()) g = group_of.emplace(membership[i], members.size()).first->second;
        if (g == members.size()) members.emplace_back();
        members[g].push_back(i);
        group[i] = g;
    }

    KSSet out;
    out.name = set.name;
    out.dim = set.dim;
    for (const auto& m : members) {
        if (m.size() == 1) {
            out.projectors.push_back(set.projectors[m[0]]);
            continue;
        }
        Projector p;
        for (std::size_t k = 0; k < m.size(); ++k) {
            const Projector& q = set.projectors[m[k]];
            p.id += (k ? "+" : "") + q.id;
            for (std::size_t r = 0; r < q.rank(); ++r) {
                p.span.push_back(q.span[r]);
                p.part_ids.push_back(q.part_id(r));
            }
        }
        out.projectors.push_back(std::move(p));
    }
    for (const auto& ctx : set.contexts) {
        Context merged;
        for (ProjectorIndex p : ctx)
            if (std::find(merged.begin(), merged.end(), group[p]) == merged.end()) merged.push_back(group[p]);
        out.contexts.push_back(std::move(merged));
    }
    return out;
}

KSSet split_rank(const KSSet& set) {
    require_valid(set);
    KSSet out;
    out.name = set.name;
    out.dim = set.dim;
    std::vector<std::vector<ProjectorIndex>> parts(set.projectors.size());
    for (ProjectorIndex i = 0; i < set.projectors.size(); ++i) {
        const Projector& p = set.projectors[i];
        if (p.rank() == 1) {
            parts[i].push_back(out.projectors.size());
            out.projectors.push_back(Projector::from_ray(p.id, p.span[0]));
            continue;
        }
        for (std::size_t k = 0; k < p.rank(); ++k) {
            parts[i].push_back(out.projectors.size());
            out.projectors.push_back(Projector::from_ray(p.part_id(k), p.span[k]));
        }
    }
    for (const auto& ctx : set.contexts) {
        Context split;
        for (ProjectorIndex p : ctx) split.insert(split.end(), parts[p].begin(), parts[p].end());
        out.contexts.push_back(std::move(split));
    }
    return out;
}

KSSet rank_scale(const KSSet& set, std::size_t n) {
    require_valid(set);
    if (n == 0) throw BadDimension("scale factor must be positive");
    if (n == 1) return set;
    KSSet out;
    out.name = set.name + "x" + std::to_string(n);
    out.dim = set.dim * n;
    for (const auto& p : set.projectors) {
        Projector q;
        q.id = p.id;
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t k = 0; k < p.rank(); ++k) {
                q.span.push_back(pad(p.span[k], c * set.dim, (n - 1 - c) * set.dim));
                q.part_ids.push_back(p.part_id(k) + "_" + std::to_string(c + 1));
            }
        out.projectors.push_back(std::move(q));
    }
    out.contexts = set.contexts;
    return out;
}

KSSet ceg(const KSSet& set, std::size_t target_dim) {
    require_valid(set);
    const std::size_t d = set.dim;
    if (target_dim <= d || target_dim >= 2 * d)
        throw BadDimension("target dimension must lie strictly between " + std::to_string(d) + " and " +
                           std::to_string(2 * d));
    const std::size_t delta = target_dim - d;

    KSSet out;
    out.name = "ceg(" + set.name + "," + std::to_string(target_dim) + ")";
    out.dim = target_dim;
    ProjectorTable table(out);
    std::vector<ProjectorIndex> first, second;
    for (const auto& p : set.projectors) first.push_back(table.add(pad(p, 0, delta)));
    for (const auto& p : set.projectors) second.push_back(table.add(pad(p, delta, 0, "", "'")));
    auto taken = all_ids(out);
    ProjectorIndex l = table.add(coordinate_block(fresh_id(taken, "L"), target_dim, 0, delta));
    ProjectorIndex c = table.add(coordinate_block(fresh_id(taken, "C"), target_dim, delta, d));
    ProjectorIndex r = table.add(coordinate_block(fresh_id(taken, "R"), target_dim, d, target_dim));

    out.contexts.push_back({l, c, r});
    for (const auto& ctx : set.contexts) {
        Context x;
        for (ProjectorIndex p : ctx) x.push_back(first[p]);
        x.push_back(r);
        out.contexts.push_back(std::move(x));
    }
    for (const auto& ctx : set.contexts) {
        Context x;
        for (ProjectorIndex p : ctx) x.push_back(second[p]);
        x.push_back(l);
        out.contexts.push_back(std::move(x));
    }
    drop_duplicate_contexts(out);
    return out;
}

KSSet matsuno(const KSSet& input, std::size_t target_dim, const std::vector<std::string>& v_ids) {
    KSSet set = split_rank(input);
    const std::size_t d = set.dim;
    if (target_dim <= d || target_dim >= 2 * d)
        throw BadDimension("target dimension must lie strictly between " + std::to_string(d) + " and " +
                           std::to_string(2 * d));
    const std::size_t delta = target_dim - d;
    if (v_ids.size() != delta)
        throw BadV("V must list " + std::to_string(delta) + " rays, got " + std::to_string(v_ids.size()));

    std::vector<ProjectorIndex> v;
    std::vector<bool> axis_taken(delta, false);
    for (const auto& id : v_ids) {
        auto idx = set.find(id);
        if (!idx) throw BadV("unknown ray in V: " + id);
        const Ray& r = set.projectors[*idx].span[0];
        std::size_t nonzero = 0, axis = d;
        for (std::size_t j = 0; j < d; ++j)
            if (!r[j].is_zero()) {
                ++nonzero;
                axis = j;
            }
        if (nonzero != 1 || axis >= delta)
            throw BadV("ray " + id + " is not proportional to a basis vector among the first " +
                       std::to_string(delta) + " coordinates");
        if (axis_taken[axis]) throw BadV("V repeats basis direction " + std::to_string(axis + 1));
        axis_taken[axis] = true;
        v.push_back(*idx);
    }

    auto swap = [&](const Ray& r) {
        Ray t = r;
        for (std::size_t j = 0; j < delta; ++j) std::swap(t[j], t[target_dim - delta + j]);
        return t;
    };

    KSSet out;
    out.name = "matsuno(" + input.name + "," + std::to_string(target_dim) + ")";
    out.dim = target_dim;
    const std::size_t r = set.projectors.size();
    for (const auto& p : set.projectors) out.projectors.push_back(pad(p, 0, delta));
    std::vector<ProjectorIndex> image(r);
    for (std::size_t i = 0; i < r; ++i) {
        Ray t = swap(out.projectors[i].span[0]);
        std::optional<ProjectorIndex> hit;
        for (std::size_t j = 0; j < r && !hit; ++j)
            if (ray_equal(out.projectors[j].span[0], t)) hit = j;
        if (hit) {
            image[i] = *hit;
        } else {
            image[i] = out.projectors.size();
            out.projectors.push_back(Projector::from_ray(set.projectors[i].id + "'", std::move(t)));
        }
    }
    for (const auto& ctx : set.contexts) {
        Context x = ctx;
        for (ProjectorIndex p : v) x.push_back(image[p]);
        out.contexts.push_back(std::move(x));
    }
    for (const auto& ctx : set.contexts) {
        Context x;
        for (ProjectorIndex p : ctx) x.push_back(image[p]);
        x.insert(x.end(), v.begin(), v.end());
        out.contexts.push_back(std::move(x));
    }
    drop_duplicate_contexts(out);
    return out;
}

KSSet apply_transform(const KSSet& set, const Matrix& m) {
    require_valid(set);
    const std::size_t d = set.dim;
    if (m.size() != d) throw DimensionMismatch(m.size(), d);
    for (const auto& row : m)
        if (row.size() != d) throw DimensionMismatch(row.size(), d);

    CycNum scale;
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = j; k < d; ++k) {
            CycNum g;
            for (std::size_t i = 0; i < d; ++i) g += m[i][j].conj() * m[i][k];
            if (j == k) {
                if (j == 0) scale = g;
                if (!(g == scale)) throw NotScaledUnitary("columns of the matrix have unequal norms");
            } else if (!g.is_zero()) {
                throw NotScaledUnitary("columns " + std::to_string(j + 1) + " and " + std::to_string(k + 1) +
                                       " are not orthogonal");
            }
        }
    if (scale.is_zero() || !scale.is_real()) throw NotScaledUnitary("matrix is singular");

    KSSet out = set;
    for (auto& p : out.projectors)
        for (auto& ray : p.span) {
            Ray mapped(d);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t k = 0; k < d; ++k)
                    if (!m[i][k].is_zero() && !ray[k].is_zero()) mapped[i] += m[i][k] * ray[k];
            ray = std::move(mapped);
        }
    return out;
}

KSSet reduce_critical(const KSSet& set, Mode mode) {
    require_valid(set);
    std::optional<OrthogonalityGraph> graph;
    if (mode == Mode::FullOrthogonality) graph = orthogonality_graph_unchecked(set);
    const OrthogonalityGraph* g = graph ? &*graph : nullptr;

    std::vector<std::size_t> kept = detail::all_contexts(set);
    if (detail::ColoringProblem(set, g, mode, kept).solve())
        throw NotKS("set is colorable in " + std::string(to_string(mode)) + " mode");

    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t pos = 0; pos < kept.size();) {
            std::vector<std::size_t> trial = kept;
            trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(pos));
            if (!detail::ColoringProblem(set, g, mode, trial).solve()) {
                kept = std::move(trial);
                changed = true;
            } else {
                ++pos;
            }
        }
    }
    KSSet out = restrict_to(set, kept);
    out.name = "critical(" + set.name + ")";
    return out;
}

}  // namespace kset
