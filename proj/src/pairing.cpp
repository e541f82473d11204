#include <algorithm>
#include <cstdint>

#include "kset/construct.hpp"

namespace kset {
namespace {

struct Sides {
    const KSSet& primary;
    const KSSet& other;
};

Sides sides(const KSSet& first, const KSSet& second) {
    if (primary_side(first, second) == 1) return {second, first};
    return {first, second};
}

void require_parity(const KSSet& first, const KSSet& second) {
    require_valid(first);
    require_valid(second);
    if (!symbol_unchecked(first).parity()) throw NotParity("first operand is not a parity set");
    if (!symbol_unchecked(second).parity()) throw NotParity("second operand is not a parity set");
}

using Mask = std::uint64_t;

/// Projector count after merging, as a function of the pairing.
///
/// Projectors of the primary set keep their own context membership. A projector of
/// the other set lands in every primary context paired with one of its contexts.
/// Merging identifies equal memberships, so the count is the number of distinct masks.
class Scorer {
public:
    Scorer(const KSSet& primary, const KSSet& other) : other_(other) {
        fixed_.assign(primary.projectors.size(), 0);
        for (std::size_t c = 0; c < primary.contexts.size(); ++c)
            for (ProjectorIndex p : primary.contexts[c]) fixed_[p] |= Mask{1} << c;
        masks_.assign(other.projectors.size(), 0);
    }

    void add(std::size_t primary_context, std::size_t other_context) {
        for (ProjectorIndex p : other_.contexts[other_context]) masks_[p] |= Mask{1} << primary_context;
    }

    void clear(std::size_t primary_context) {
        for (auto& m : masks_) m &= ~(Mask{1} << primary_context);
    }

    std::size_t count() {
        scratch_.assign(fixed_.begin(), fixed_.end());
        scratch_.insert(scratch_.end(), masks_.begin(), masks_.end());
        std::sort(scratch_.begin(), scratch_.end());
        return static_cast<std::size_t>(std::unique(scratch_.begin(), scratch_.end()) - scratch_.begin());
    }

    std::size_t score(const Pairing& p) {
        std::fill(masks_.begin(), masks_.end(), 0);
        for (std::size_t i = 0; i < p.target.size(); ++i) add(i, p.target[i]);
        return count();
    }

private:
    const KSSet& other_;
    std::vector<Mask> fixed_;
    std::vector<Mask> masks_;
    std::vector<Mask> scratch_;
};

class Exhaustive {
public:
    Exhaustive(const KSSet& primary, const KSSet& other)
        : scorer_(primary, other),
          slots_(primary.contexts.size()),
          choices_(other.contexts.size()),
          uses_(choices_, 0),
          current_(slots_, 0) {}

    PairingSearch run() {
        dfs(0, choices_);
        return {Pairing{best_}, best_score_, true};
    }

private:
    // `even` counts other-set contexts whose usage is currently even (zero included).
    void dfs(std::size_t slot, std::size_t even) {
        const std::size_t remaining = slots_ - slot;
        if (remaining < even || (remaining - even) % 2 != 0) return;
        if (slot == slots_) {
            std::size_t s = scorer_.count();
            if (best_.empty() || s < best_score_) {
                best_score_ = s;
                best_ = current_;
            }
            return;
        }
        for (std::size_t t = 0; t < choices_; ++t) {
            current_[slot] = t;
            ++uses_[t];
            scorer_.add(slot, t);
            dfs(slot + 1, uses_[t] % 2 == 0 ? even + 1 : even - 1);
            scorer_.clear(slot);
            --uses_[t];
        }
    }

    Scorer scorer_;
    std::size_t slots_;
    std::size_t choices_;
    std::vector<std::size_t> uses_;
    std::vector<std::size_t> current_;
    std::vector<std::size_t> best_;
    std::size_t best_score_ = 0;
};

PairingSearch greedy(const KSSet& primary, const KSSet& other, Pairing start) {
    Scorer scorer(primary, other);
    std::size_t best = scorer.score(start);
    const std::size_t n = start.target.size();
    const std::size_t choices = other.contexts.size();
    for (bool improved = true; improved;) {
        improved = false;
        // Swaps keep usage counts; moving a pair of equal targets keeps their parity.
        for (std::size_t i = 0; i < n && !improved; ++i)
            for (std::size_t j = i + 1; j < n && !improved; ++j) {
                Pairing trial = start;
                if (trial.target[i] != trial.target[j]) {
                    std::swap(trial.target[i], trial.target[j]);
                    std::size_t s = scorer.score(trial);
                    if (s < best) {
                        best = s;
                        start = std::move(trial);
                        improved = true;
                    }
                    continue;
                }
                for (std::size_t t = 0; t < choices && !improved; ++t) {
                    if (t == start.target[i]) continue;
                    trial.target[i] = trial.target[j] = t;
                    std::size_t s = scorer.score(trial);
                    if (s < best) {
                        best = s;
                        start = trial;
                        improved = true;
                    }
                }
            }
    }
    return {std::move(start), best, false};
}

}  // namespace

int primary_side(const KSSet& first, const KSSet& second) {
    return first.contexts.size() > second.contexts.size() ? 0 : 1;
}

Pairing canonical_pairing(const KSSet& first, const KSSet& second) {
    auto [primary, other] = sides(first, second);
    Pairing p;
    for (std::size_t i = 0; i < primary.contexts.size(); ++i)
        p.target.push_back(i < other.contexts.size() ? i : 0);
    return p;
}

void validate_pairing(const Pairing& pairing, std::size_t primary_contexts, std::size_t other_contexts) {
    if (pairing.target.size() != primary_contexts)
        throw InvalidPairing("pairing has " + std::to_string(pairing.target.size()) + " entries, expected " +
                             std::to_string(primary_contexts));
    std::vector<std::size_t> uses(other_contexts, 0);
    for (std::size_t t : pairing.target) {
        if (t >= other_contexts) throw InvalidPairing("pairing target " + std::to_string(t + 1) + " out of range");
        ++uses[t];
    }
    for (std::size_t c = 0; c < other_contexts; ++c) {
        if (uses[c] == 0) throw InvalidPairing("context " + std::to_string(c + 1) + " is never paired");
        if (uses[c] % 2 == 0)
            throw InvalidPairing("context " + std::to_string(c + 1) + " is paired " + std::to_string(uses[c]) +
                                 " times; extra copies must come in pairs");
    }
}

PairingSearch optimize_pairing(const KSSet& first, const KSSet& second, std::size_t exhaustive_limit) {
    require_parity(first, second);
    auto [primary, other] = sides(first, second);
    if (primary.contexts.size() > 64) throw InvalidPairing("too many contexts to pair");
    if (primary.contexts.size() <= exhaustive_limit) return Exhaustive(primary, other).run();
    return greedy(primary, other, canonical_pairing(first, second));
}

}  // namespace kset
