#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kset/cyclo.hpp"

namespace kset {

// Unnormalized ket; rays are projective, so only the direction matters.
using Ray = std::vector<CycNum>;

// Index of a projector inside KSSet::projectors.
using ProjectorIndex = std::size_t;

/// A rank-r subspace given by r mutually orthogonal spanning rays.
///
/// The order of `span` is the projector's natural decomposition. Constructions that
/// need rank-1 pieces (splitting, the Matsuno doubling) use exactly this order, and
/// `part_ids` names each piece. For rank-1 projectors `part_ids` may be empty, in
/// which case the ray is named by `id`.
struct Projector {
    std::string id;
    std::vector<Ray> span;
    std::vector<std::string> part_ids;

    std::size_t rank() const { return span.size(); }
    std::size_t dim() const { return span.empty() ? 0 : span.front().size(); }
    // Name of the k-th spanning ray.
    std::string part_id(std::size_t k) const;

    static Projector from_ray(std::string id, Ray ray);
};

// Member indices of one context. Order is informational only.
using Context = std::vector<ProjectorIndex>;

struct KSSet {
    std::string name;
    std::size_t dim = 0;
    std::vector<Projector> projectors;
    std::vector<Context> contexts;

    std::size_t size() const { return projectors.size(); }
    std::optional<ProjectorIndex> find(std::string_view id) const;
    // Number of contexts containing each projector.
    std::vector<std::size_t> multiplicities() const;
};

// Same dimension, ids, spans (entry-for-entry) and contexts. Names are ignored.
bool identical(const KSSet& a, const KSSet& b);

// Sum of conj(u_i) * v_i. Throws DimensionMismatch.
CycNum inner(const Ray& u, const Ray& v);
bool is_zero_ray(const Ray& u);
// Proportionality test. Throws DimensionMismatch.
bool ray_equal(const Ray& u, const Ray& v);
bool projector_orthogonal(const Projector& p, const Projector& q);
// Same subspace: equal rank and every span ray of p lies in span(q).
bool projector_equal(const Projector& p, const Projector& q);

struct Violation {
    enum class Kind {
        BadDimension,
        ZeroRay,
        SpanNotOrthogonal,
        DuplicateId,
        EmptyContext,
        BadMember,
        RepeatedMember,
        NotOrthogonal,
        Incomplete,
        DuplicateProjector,
        DuplicateContext,
    };
    Kind kind;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    bool has(Violation::Kind kind) const;
    // One violation per line; empty when ok.
    std::string to_string() const;
};

ValidationReport validate(const KSSet& set);
// Throws InvalidSet carrying the report text.
void require_valid(const KSSet& set);

struct RayClass {
    std::size_t count;
    std::size_t rank;
    std::size_t multiplicity;
    bool operator==(const RayClass&) const = default;
};

struct ContextClass {
    std::size_t count;
    std::size_t dim;
    std::size_t size;
    bool operator==(const ContextClass&) const = default;
};

/// Compact "R-B" and detailed "R^r_m ... - B^d_c ..." descriptions of a set.
///
/// Ray classes are ordered by descending rank, then descending multiplicity. Context
/// classes are ordered by ascending size, which puts contexts holding merged
/// higher-rank projectors first.
struct Symbol {
    std::size_t projector_count = 0;
    std::size_t context_count = 0;
    std::vector<RayClass> ray_classes;
    std::vector<ContextClass> context_classes;

    std::string compact() const;
    std::string detailed() const;
    // All multiplicities even and an odd number of contexts.
    bool parity() const;
};

// Throws InvalidSet.
Symbol symbol(const KSSet& set);
// Symbol of a set assumed valid.
Symbol symbol_unchecked(const KSSet& set);

struct OrthogonalityGraph {
    std::vector<std::vector<ProjectorIndex>> adjacency;  // sorted neighbor lists

    bool adjacent(ProjectorIndex a, ProjectorIndex b) const;
    std::size_t edge_count() const;
};

// Edge (p, q) iff the projectors are orthogonal, whether or not they share a context.
// Throws InvalidSet.
OrthogonalityGraph orthogonality_graph(const KSSet& set);
OrthogonalityGraph orthogonality_graph_unchecked(const KSSet& set);

}  // namespace kset
