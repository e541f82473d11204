#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kset/errors.hpp"
#include "kset/model.hpp"
#include "kset/verify.hpp"

namespace kset {

// Pads every ray with zeros on both sides. Contexts are copied unchanged, so the
// result is a fragment that no longer validates on its own. Throws InvalidSet.
KSSet embed(const KSSet& set, std::size_t prepend, std::size_t append);

// Direct sum: `first` gets zeros appended, `second` zeros prepended, and every pair of
// contexts is joined, giving B1 * B2 contexts. Ids are kept when the two id sets are
// disjoint and otherwise prefixed with "a" and "b". Throws InvalidSet.
KSSet pz_basic(const KSSet& first, const KSSet& second);

/// Context map used by the improved direct sum.
///
/// The primary set is the one with more contexts (the second argument on ties).
/// `target[i]` is the context of the other set joined to primary context i. Every
/// context of the other set must be used an odd number of times, so extra copies come
/// in pairs and multiplicities stay even.
struct Pairing {
    std::vector<std::size_t> target;

    bool operator==(const Pairing&) const = default;
};

// Index of the primary operand: 0 for `first`, 1 for `second`.
int primary_side(const KSSet& first, const KSSet& second);

// i -> i for the first B_other contexts, extra primary contexts -> 0.
Pairing canonical_pairing(const KSSet& first, const KSSet& second);

// Throws InvalidPairing with the reason.
void validate_pairing(const Pairing& pairing, std::size_t primary_contexts, std::size_t other_contexts);

// `first` gets zeros appended, `second` zeros prepended. Output contexts follow the
// primary set; each lists the first operand's members, then the second's. Both inputs
// must be parity sets. Throws InvalidSet, NotParity, InvalidPairing.
KSSet pz_improved(const KSSet& first, const KSSet& second, const Pairing& pairing);

struct PairingSearch {
    Pairing pairing;
    std::size_t projectors_after_merge = 0;
    bool exhaustive = false;
};

// Minimizes the projector count of merge_rank(pz_improved(first, second, p)).
// Exhaustive when the primary set has at most `exhaustive_limit` contexts, returning
// the lexicographically first optimum; otherwise greedy descent from the canonical
// pairing. Throws NotParity.
PairingSearch optimize_pairing(const KSSet& first, const KSSet& second, std::size_t exhaustive_limit = 9);

// Joins projectors that belong to exactly the same contexts into one projector. The
// merged projector sits at its first member's position, its span is the members'
// spans concatenated, and its id joins theirs with '+'. Throws InvalidSet.
KSSet merge_rank(const KSSet& set);

// Replaces each rank-r projector by its r spanning rays, named by their part ids.
// Throws InvalidSet.
KSSet split_rank(const KSSet& set);

// Dimension n*d; each span ray is copied into each of the n coordinate blocks,
// copy-major, with part ids "<part>_<copy>". n = 1 returns the set unchanged.
// Throws InvalidSet, BadDimension (n = 0).
KSSet rank_scale(const KSSet& set, std::size_t n);

// Cabello-Estebaranz-Garcia-Alcaine extension to dimension d < target < 2d. Two
// padded copies (the second with ids suffixed "'"), pad projectors L, C and R on the
// first, middle and last coordinates, contexts {L, C, R}, then copy-1 contexts + R,
// then copy-2 contexts + L. Coinciding projectors and contexts are removed.
// Throws InvalidSet, BadDimension.
KSSet ceg(const KSSet& set, std::size_t target_dim);

// Matsuno doubling to dimension d < target < 2d after splitting to rank 1. `v_ids`
// names delta = target - d rays proportional to distinct e_j with j <= delta. The
// swap T exchanges the first and last delta coordinates. Images under T that equal
// an existing ray are identified with it, new images are appended as "<id>'", and
// repeated contexts are dropped keeping the first. Throws InvalidSet, BadDimension,
// BadV.
KSSet matsuno(const KSSet& set, std::size_t target_dim, const std::vector<std::string>& v_ids);

using Matrix = std::vector<std::vector<CycNum>>;

// Replaces every ray v by M v. M must satisfy M^dagger M = c I with c real and
// nonzero. Throws InvalidSet, DimensionMismatch, NotScaledUnitary.
KSSet apply_transform(const KSSet& set, const Matrix& m);

// Greedy critical subset: scans contexts in ascending order, dropping each one whose
// removal keeps the remainder uncolorable in `mode`, and repeats until a full pass
// removes nothing. Unused projectors are dropped. Throws InvalidSet, NotKS.
KSSet reduce_critical(const KSSet& set, Mode mode = Mode::ContextOnly);

}  // namespace kset
