#include "kset/verify.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <set>
#include <sstream>

#include "kset/errors.hpp"

namespace kset {

const char* to_string(Mode mode) {
    return mode == Mode::FullOrthogonality ? "full" : "context";
}

std::optional<Mode> parse_mode(std::string_view text) {
    if (text == "full") return Mode::FullOrthogonality;
    if (text == "context") return Mode::ContextOnly;
    return std::nullopt;
}

std::string Assignment::to_lines(const KSSet& set) const {
    std::string out;
    for (std::size_t i = 0; i < value.size() && i < set.projectors.size(); ++i) {
        if (value[i] < 0) continue;
        out += set.projectors[i].id + "=" + (value[i] ? "1" : "0") + "\n";
    }
    return out;
}

std::size_t CriticalityReport::colorable_count() const {
    return static_cast<std::size_t>(std::count_if(
        removals.begin(), removals.end(), [](const Removal& r) { return r.witness.has_value(); }));
}

namespace detail {

std::vector<std::size_t> all_contexts(const KSSet& set) {
    std::vector<std::size_t> kept(set.contexts.size());
    std::iota(kept.begin(), kept.end(), 0);
    return kept;
}

ColoringProblem::ColoringProblem(const KSSet& set, const OrthogonalityGraph* graph, Mode mode,
                                 const std::vector<std::size_t>& kept_contexts)
    : projector_count_(set.projectors.size()) {
    std::vector<std::int64_t> to_var(set.projectors.size(), -1);
    for (std::size_t c : kept_contexts)
        for (ProjectorIndex p : set.contexts.at(c))
            if (to_var[p] < 0) {
                to_var[p] = static_cast<std::int64_t>(var_to_projector_.size());
                var_to_projector_.push_back(p);
            }
    // Keep variables in projector order so witnesses are reproducible.
    std::sort(var_to_projector_.begin(), var_to_projector_.end());
    for (std::size_t v = 0; v < var_to_projector_.size(); ++v)
        to_var[var_to_projector_[v]] = static_cast<std::int64_t>(v);

    const std::size_t n = var_to_projector_.size();
    var_contexts_.resize(n);
    neighbors_.resize(n);
    std::vector<std::set<std::uint32_t>> nb(n);
    for (std::size_t c : kept_contexts) {
        std::vector<std::uint32_t> members;
        for (ProjectorIndex p : set.contexts[c]) members.push_back(static_cast<std::uint32_t>(to_var[p]));
        for (std::uint32_t v : members) var_contexts_[v].push_back(static_cast<std::uint32_t>(contexts_.size()));
        if (mode == Mode::ContextOnly)
            for (std::uint32_t a : members)
                for (std::uint32_t b : members)
                    if (a != b) nb[a].insert(b);
        contexts_.push_back(std::move(members));
    }
    if (mode == Mode::FullOrthogonality) {
        if (graph == nullptr) throw Error("orthogonality graph required for full mode");
        for (std::size_t v = 0; v < n; ++v)
            for (ProjectorIndex q : graph->adjacency[var_to_projector_[v]])
                if (to_var[q] >= 0) nb[v].insert(static_cast<std::uint32_t>(to_var[q]));
    }
    for (std::size_t v = 0; v < n; ++v) neighbors_[v].assign(nb[v].begin(), nb[v].end());
}

class Search {
public:
    explicit Search(const ColoringProblem& p)
        : p_(p),
          value_(p.var_to_projector_.size(), -1),
          ones_(p.contexts_.size(), 0),
          zeros_(p.contexts_.size(), 0) {}

    bool run() { return search(); }

    Assignment assignment() const {
        Assignment a;
        a.value.assign(p_.projector_count_, -1);
        for (std::size_t v = 0; v < value_.size(); ++v)
            a.value[p_.var_to_projector_[v]] = value_[v] == 1 ? 1 : 0;
        return a;
    }

private:
    struct Pending {
        std::uint32_t var;
        std::int8_t bit;
    };

    // Assigns and propagates to a fixpoint; false on conflict (trail left for undo).
    bool assign(std::uint32_t var, std::int8_t bit) {
        queue_.clear();
        queue_.push_back({var, bit});
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            auto [v, b] = queue_[head];
            if (value_[v] >= 0) {
                if (value_[v] != b) return false;
                continue;
            }
            value_[v] = b;
            trail_.push_back(v);
            // Counters are updated for every context before any conflict is reported,
            // so undo() can reverse them uniformly.
            if (b == 1) {
                bool conflict = false;
                for (std::uint32_t c : p_.var_contexts_[v]) conflict |= ++ones_[c] > 1;
                if (conflict) return false;
                for (std::uint32_t u : p_.neighbors_[v]) {
                    if (value_[u] == 1) return false;
                    if (value_[u] < 0) queue_.push_back({u, 0});
                }
            } else {
                for (std::uint32_t c : p_.var_contexts_[v]) ++zeros_[c];
                for (std::uint32_t c : p_.var_contexts_[v]) {
                    const auto& members = p_.contexts_[c];
                    if (zeros_[c] == members.size()) return false;
                    if (ones_[c] == 0 && zeros_[c] + 1 == members.size()) {
                        for (std::uint32_t u : members)
                            if (value_[u] < 0) queue_.push_back({u, 1});
                    }
                }
            }
        }
        return true;
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            std::uint32_t v = trail_.back();
            trail_.pop_back();
            if (value_[v] == 1) {
                for (std::uint32_t c : p_.var_contexts_[v]) --ones_[c];
            } else {
                for (std::uint32_t c : p_.var_contexts_[v]) --zeros_[c];
            }
            value_[v] = -1;
        }
    }

    bool search() {
        std::size_t best = p_.contexts_.size();
        std::size_t best_open = 0;
        for (std::size_t c = 0; c < p_.contexts_.size(); ++c) {
            if (ones_[c] > 0) continue;
            std::size_t open = p_.contexts_[c].size() - zeros_[c];
            if (best == p_.contexts_.size() || open < best_open) {
                best = c;
                best_open = open;
            }
        }
        if (best == p_.contexts_.size()) return true;

        const std::size_t node_mark = trail_.size();
        for (std::uint32_t u : p_.contexts_[best]) {
            if (value_[u] >= 0) continue;
            const std::size_t mark = trail_.size();
            if (assign(u, 1) && search()) return true;
            undo(mark);
            if (!assign(u, 0)) {
                undo(node_mark);
                return false;
            }
            if (ones_[best] > 0) break;  // propagation already satisfied this context
        }
        if (ones_[best] > 0 && search()) return true;
        undo(node_mark);
        return false;
    }

    const ColoringProblem& p_;
    std::vector<std::int8_t> value_;
    std::vector<std::uint32_t> ones_;
    std::vector<std::uint32_t> zeros_;
    std::vector<std::uint32_t> trail_;
    std::vector<Pending> queue_;
};

std::optional<Assignment> ColoringProblem::solve() const {
    Search s(*this);
    if (!s.run()) return std::nullopt;
    return s.assignment();
}

}  // namespace detail

std::optional<Assignment> find_assignment(const KSSet& set, Mode mode) {
    require_valid(set);
    std::optional<OrthogonalityGraph> graph;
    if (mode == Mode::FullOrthogonality) graph = orthogonality_graph_unchecked(set);
    detail::ColoringProblem problem(set, graph ? &*graph : nullptr, mode, detail::all_contexts(set));
    auto witness = problem.solve();
    if (witness) {
        // Projectors outside every context are unconstrained by the context rule.
        for (auto& v : witness->value)
            if (v < 0) v = 0;
    }
    return witness;
}

bool is_ks(const KSSet& set, Mode mode) { return !find_assignment(set, mode).has_value(); }

bool is_parity(const KSSet& set) { return symbol(set).parity(); }

CriticalityReport is_critical(const KSSet& set, Mode mode, bool parallel) {
    require_valid(set);
    std::optional<OrthogonalityGraph> graph;
    if (mode == Mode::FullOrthogonality) graph = orthogonality_graph_unchecked(set);
    const OrthogonalityGraph* g = graph ? &*graph : nullptr;

    if (detail::ColoringProblem(set, g, mode, detail::all_contexts(set)).solve())
        throw NotKS("set is colorable in " + std::string(to_string(mode)) + " mode");

    const std::size_t b = set.contexts.size();
    auto removal = [&](std::size_t removed) {
        std::vector<std::size_t> kept;
        for (std::size_t c = 0; c < b; ++c)
            if (c != removed) kept.push_back(c);
        return CriticalityReport::Removal{removed, detail::ColoringProblem(set, g, mode, kept).solve()};
    };

    CriticalityReport report;
    report.mode = mode;
    if (parallel) {
        std::vector<std::future<CriticalityReport::Removal>> jobs;
        for (std::size_t c = 0; c < b; ++c) jobs.push_back(std::async(std::launch::async, removal, c));
        for (auto& j : jobs) report.removals.push_back(j.get());
    } else {
        for (std::size_t c = 0; c < b; ++c) report.removals.push_back(removal(c));
    }
    report.overall = report.colorable_count() == b;
    return report;
}

std::string export_cnf(const KSSet& set, Mode mode) {
    require_valid(set);
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    if (mode == Mode::FullOrthogonality) {
        OrthogonalityGraph g = orthogonality_graph_unchecked(set);
        for (std::size_t a = 0; a < g.adjacency.size(); ++a)
            for (std::size_t b : g.adjacency[a])
                if (a < b) pairs.insert({a, b});
    } else {
        for (const auto& ctx : set.contexts)
            for (std::size_t i = 0; i < ctx.size(); ++i)
                for (std::size_t j = i + 1; j < ctx.size(); ++j)
                    pairs.insert({std::min(ctx[i], ctx[j]), std::max(ctx[i], ctx[j])});
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < set.projectors.size(); ++i)
        os << "c " << i + 1 << ' ' << set.projectors[i].id << '\n';
    os << "p cnf " << set.projectors.size() << ' ' << set.contexts.size() + pairs.size() << '\n';
    for (const auto& ctx : set.contexts) {
        for (ProjectorIndex p : ctx) os << p + 1 << ' ';
        os << "0\n";
    }
    for (const auto& [a, b] : pairs) os << '-' << a + 1 << " -" << b + 1 << " 0\n";
    return os.str();
}

}  // namespace kset
