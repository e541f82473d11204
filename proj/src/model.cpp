#include "kset/model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "kset/errors.hpp"

namespace kset {

std::string Projector::part_id(std::size_t k) const {
    if (k < part_ids.size()) return part_ids[k];
    if (rank() == 1) return id;
    return id + "." + std::to_string(k + 1);
}

Projector Projector::from_ray(std::string id, Ray ray) {
    Projector p;
    p.id = std::move(id);
    p.span.push_back(std::move(ray));
    return p;
}

std::optional<ProjectorIndex> KSSet::find(std::string_view id) const {
    for (ProjectorIndex i = 0; i < projectors.size(); ++i)
        if (projectors[i].id == id) return i;
    return std::nullopt;
}

std::vector<std::size_t> KSSet::multiplicities() const {
    std::vector<std::size_t> m(projectors.size(), 0);
    for (const auto& ctx : contexts)
        for (ProjectorIndex p : ctx)
            if (p < m.size()) ++m[p];
    return m;
}

bool identical(const KSSet& a, const KSSet& b) {
    if (a.dim != b.dim || a.contexts != b.contexts || a.projectors.size() != b.projectors.size())
        return false;
    for (std::size_t i = 0; i < a.projectors.size(); ++i) {
        const auto& p = a.projectors[i];
        const auto& q = b.projectors[i];
        if (p.id != q.id || p.span != q.span) return false;
    }
    return true;
}

CycNum inner(const Ray& u, const Ray& v) {
    if (u.size() != v.size()) throw DimensionMismatch(u.size(), v.size());
    CycNum sum;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero() || v[i].is_zero()) continue;
        if (u[i].is_rational()) sum += u[i] * v[i];
        else sum += u[i].conj() * v[i];
    }
    return sum;
}

bool is_zero_ray(const Ray& u) {
    return std::all_of(u.begin(), u.end(), [](const CycNum& x) { return x.is_zero(); });
}

bool ray_equal(const Ray& u, const Ray& v) {
    if (u.size() != v.size()) throw DimensionMismatch(u.size(), v.size());
    std::size_t pivot = u.size();
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero() != v[i].is_zero()) return false;
        if (pivot == u.size() && !u[i].is_zero()) pivot = i;
    }
    if (pivot == u.size()) return true;  // both zero
    for (std::size_t j = pivot + 1; j < u.size(); ++j) {
        if (u[j].is_zero()) continue;
        if (!(u[pivot] * v[j] == u[j] * v[pivot])) return false;
    }
    return true;
}

bool projector_orthogonal(const Projector& p, const Projector& q) {
    if (p.dim() != q.dim()) throw DimensionMismatch(p.dim(), q.dim());
    for (const Ray& a : p.span)
        for (const Ray& b : q.span)
            if (!inner(a, b).is_zero()) return false;
    return true;
}

bool projector_equal(const Projector& p, const Projector& q) {
    if (p.dim() != q.dim()) throw DimensionMismatch(p.dim(), q.dim());
    if (p.rank() != q.rank()) return false;
    if (p.rank() == 1) return ray_equal(p.span[0], q.span[0]);
    std::vector<CycNum> norm_inv;
    norm_inv.reserve(q.rank());
    for (const Ray& b : q.span) norm_inv.push_back(inner(b, b).inv());
    for (const Ray& a : p.span) {
        Ray residual = a;
        for (std::size_t j = 0; j < q.rank(); ++j) {
            const Ray& b = q.span[j];
            CycNum coef = inner(b, a) * norm_inv[j];
            if (coef.is_zero()) continue;
            for (std::size_t i = 0; i < residual.size(); ++i)
                if (!b[i].is_zero()) residual[i] -= coef * b[i];
        }
        if (!is_zero_ray(residual)) return false;
    }
    return true;
}

bool ValidationReport::has(Violation::Kind kind) const {
    return std::any_of(violations.begin(), violations.end(),
                       [kind](const Violation& v) { return v.kind == kind; });
}

std::string ValidationReport::to_string() const {
    std::string out;
    for (const auto& v : violations) out += v.message + "\n";
    return out;
}

namespace {

std::string context_label(const KSSet& s, std::size_t c) {
    std::string out = "context " + std::to_string(c + 1) + " (";
    for (std::size_t k = 0; k < s.contexts[c].size(); ++k) {
        ProjectorIndex p = s.contexts[c][k];
        if (k) out += ' ';
        out += p < s.projectors.size() ? s.projectors[p].id : "#" + std::to_string(p);
    }
    return out + ")";
}

}  // namespace

ValidationReport validate(const KSSet& s) {
    ValidationReport report;
    auto add = [&report](Violation::Kind kind, std::string message) {
        report.violations.push_back({kind, std::move(message)});
    };
    using K = Violation::Kind;

    if (s.dim == 0) add(K::BadDimension, "dimension must be positive");

    std::unordered_set<std::string> ids;
    std::vector<bool> usable(s.projectors.size(), true);
    for (std::size_t i = 0; i < s.projectors.size(); ++i) {
        const Projector& p = s.projectors[i];
        std::string where = "projector " + p.id;
        if (!ids.insert(p.id).second) add(K::DuplicateId, where + ": duplicate id");
        if (p.rank() > 1) {
            for (std::size_t k = 0; k < p.rank(); ++k) {
                std::string part = p.part_id(k);
                if (part != p.id && !ids.insert(part).second)
                    add(K::DuplicateId, where + ": duplicate ray id " + part);
            }
        }
        if (p.rank() == 0) {
            add(K::BadDimension, where + ": empty span");
            usable[i] = false;
            continue;
        }
        for (const Ray& r : p.span) {
            if (r.size() != s.dim) {
                add(K::BadDimension, where + ": ray has " + std::to_string(r.size()) +
                                         " entries, expected " + std::to_string(s.dim));
                usable[i] = false;
            } else if (is_zero_ray(r)) {
                add(K::ZeroRay, where + ": zero ray");
                usable[i] = false;
            }
        }
        if (!usable[i]) continue;
        for (std::size_t a = 0; a < p.rank(); ++a)
            for (std::size_t b = a + 1; b < p.rank(); ++b)
                if (!inner(p.span[a], p.span[b]).is_zero()) {
                    add(K::SpanNotOrthogonal, where + ": span rays " + p.part_id(a) + " and " +
                                                  p.part_id(b) + " are not orthogonal");
                    usable[i] = false;
                }
    }

    std::set<std::vector<ProjectorIndex>> seen_contexts;
    for (std::size_t c = 0; c < s.contexts.size(); ++c) {
        const Context& ctx = s.contexts[c];
        std::string where = context_label(s, c);
        if (ctx.empty()) {
            add(K::EmptyContext, "context " + std::to_string(c + 1) + ": empty");
            continue;
        }
        bool members_ok = true;
        std::vector<ProjectorIndex> sorted = ctx;
        std::sort(sorted.begin(), sorted.end());
        for (ProjectorIndex p : sorted)
            if (p >= s.projectors.size()) {
                add(K::BadMember, where + ": member index out of range");
                members_ok = false;
                break;
            }
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            add(K::RepeatedMember, where + ": repeated member");
            members_ok = false;
        }
        if (!members_ok) continue;
        if (!seen_contexts.insert(sorted).second) add(K::DuplicateContext, where + ": duplicate context");

        std::size_t rank_sum = 0;
        bool all_usable = true;
        for (ProjectorIndex p : ctx) {
            rank_sum += s.projectors[p].rank();
            all_usable = all_usable && usable[p];
        }
        if (rank_sum != s.dim)
            add(K::Incomplete, where + ": rank sum " + std::to_string(rank_sum) +
                                   " differs from dimension " + std::to_string(s.dim));
        if (!all_usable) continue;
        for (std::size_t a = 0; a < ctx.size(); ++a)
            for (std::size_t b = a + 1; b < ctx.size(); ++b)
                if (!projector_orthogonal(s.projectors[ctx[a]], s.projectors[ctx[b]]))
                    add(K::NotOrthogonal, where + ": " + s.projectors[ctx[a]].id + " and " +
                                              s.projectors[ctx[b]].id + " are not orthogonal");
    }

    for (std::size_t i = 0; i < s.projectors.size(); ++i) {
        if (!usable[i]) continue;
        for (std::size_t j = i + 1; j < s.projectors.size(); ++j) {
            if (!usable[j]) continue;
            if (projector_equal(s.projectors[i], s.projectors[j]))
                add(K::DuplicateProjector, "projectors " + s.projectors[i].id + " and " +
                                               s.projectors[j].id + " span the same subspace");
        }
    }
    return report;
}

void require_valid(const KSSet& s) {
    ValidationReport report = validate(s);
    if (!report.ok()) {
        std::string label = s.name.empty() ? "set" : "set " + s.name;
        throw InvalidSet(label + " is invalid:\n" + report.to_string());
    }
}

std::string Symbol::compact() const {
    return std::to_string(projector_count) + "-" + std::to_string(context_count);
}

std::string Symbol::detailed() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < ray_classes.size(); ++i) {
        const auto& rc = ray_classes[i];
        if (i) os << ' ';
        os << rc.count << '^' << rc.rank << '_' << rc.multiplicity;
    }
    os << " -";
    for (const auto& cc : context_classes) os << ' ' << cc.count << '^' << cc.dim << '_' << cc.size;
    return os.str();
}

bool Symbol::parity() const {
    if (context_count % 2 == 0) return false;
    return std::all_of(ray_classes.begin(), ray_classes.end(),
                       [](const RayClass& rc) { return rc.multiplicity % 2 == 0; });
}

Symbol symbol_unchecked(const KSSet& s) {
    Symbol sym;
    sym.projector_count = s.projectors.size();
    sym.context_count = s.contexts.size();
    std::vector<std::size_t> mult = s.multiplicities();

    std::map<std::pair<std::size_t, std::size_t>, std::size_t, std::greater<>> rays;
    for (std::size_t i = 0; i < s.projectors.size(); ++i) ++rays[{s.projectors[i].rank(), mult[i]}];
    for (const auto& [key, count] : rays) sym.ray_classes.push_back({count, key.first, key.second});

    std::map<std::size_t, std::size_t> sizes;
    for (const auto& ctx : s.contexts) ++sizes[ctx.size()];
    for (const auto& [size, count] : sizes) sym.context_classes.push_back({count, s.dim, size});
    return sym;
}

Symbol symbol(const KSSet& s) {
    require_valid(s);
    return symbol_unchecked(s);
}

bool OrthogonalityGraph::adjacent(ProjectorIndex a, ProjectorIndex b) const {
    const auto& nb = adjacency.at(a);
    return std::binary_search(nb.begin(), nb.end(), b);
}

std::size_t OrthogonalityGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& nb : adjacency) twice += nb.size();
    return twice / 2;
}

OrthogonalityGraph orthogonality_graph_unchecked(const KSSet& s) {
    OrthogonalityGraph g;
    g.adjacency.resize(s.projectors.size());
    for (ProjectorIndex i = 0; i < s.projectors.size(); ++i)
        for (ProjectorIndex j = i + 1; j < s.projectors.size(); ++j)
            if (projector_orthogonal(s.projectors[i], s.projectors[j])) {
                g.adjacency[i].push_back(j);
                g.adjacency[j].push_back(i);
            }
    for (auto& nb : g.adjacency) std::sort(nb.begin(), nb.end());
    return g;
}

OrthogonalityGraph orthogonality_graph(const KSSet& s) {
    require_valid(s);
    return orthogonality_graph_unchecked(s);
}

}  // namespace kset
