#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kset/model.hpp"

namespace kset {

// Which 0/1 rules a noncontextual assignment has to obey.
enum class Mode {
    // Exactly one 1 per context, and no two orthogonal projectors both valued 1,
    // including orthogonal pairs that never share a context.
    FullOrthogonality,
    // Exactly one 1 per context; nothing else.
    ContextOnly,
};

const char* to_string(Mode mode);
// Accepts "full" and "context".
std::optional<Mode> parse_mode(std::string_view text);

/// 0/1 valuation aligned with KSSet::projectors. Projectors left out of a restricted
/// instance (see is_critical) hold -1.
struct Assignment {
    std::vector<std::int8_t> value;

    // Sorted "id=bit" lines in projector order, skipping projectors valued -1.
    std::string to_lines(const KSSet& set) const;
};

// Complete backtracking search. Branches on the unresolved context with the fewest
// undecided members (lowest index on ties); setting a projector to 1 forces 0 on its
// neighbors, and a context with all members 0 backtracks. Throws InvalidSet.
std::optional<Assignment> find_assignment(const KSSet& set, Mode mode = Mode::FullOrthogonality);

bool is_ks(const KSSet& set, Mode mode = Mode::FullOrthogonality);

// Every multiplicity even and an odd number of contexts. Throws InvalidSet.
bool is_parity(const KSSet& set);

struct CriticalityReport {
    struct Removal {
        std::size_t context;
        std::optional<Assignment> witness;  // empty: still uncolorable
    };

    Mode mode = Mode::ContextOnly;
    std::vector<Removal> removals;
    bool overall = false;

    std::size_t colorable_count() const;
};

/// For each context, drops it, keeps only projectors still used by the remaining
/// contexts, and searches for an assignment in `mode`. The default is the plain
/// context rule, which is how criticality is defined for these sets.
/// Throws InvalidSet, and NotKS when the full set is colorable in `mode`.
CriticalityReport is_critical(const KSSet& set, Mode mode = Mode::ContextOnly, bool parallel = false);

// DIMACS CNF: variable i is the i-th projector; one clause per context; one binary
// negative clause per at-most-one pair (co-context pairs for ContextOnly, all
// orthogonal pairs for FullOrthogonality). Throws InvalidSet.
std::string export_cnf(const KSSet& set, Mode mode = Mode::FullOrthogonality);

namespace detail {

/// Coloring instance over a subset of a set's contexts, used by the search entry
/// points above and by the critical-subset reduction.
class ColoringProblem {
public:
    // `graph` is required for FullOrthogonality and ignored otherwise.
    ColoringProblem(const KSSet& set, const OrthogonalityGraph* graph, Mode mode,
                    const std::vector<std::size_t>& kept_contexts);

    std::optional<Assignment> solve() const;
    std::size_t variable_count() const { return var_to_projector_.size(); }

private:
    std::size_t projector_count_;
    std::vector<ProjectorIndex> var_to_projector_;
    std::vector<std::vector<std::uint32_t>> contexts_;
    std::vector<std::vector<std::uint32_t>> var_contexts_;
    std::vector<std::vector<std::uint32_t>> neighbors_;

    friend class Search;
};

std::vector<std::size_t> all_contexts(const KSSet& set);

}  // namespace detail

}  // namespace kset
