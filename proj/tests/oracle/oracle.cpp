#include "oracle.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace oracle {

cplx zeta_power(int k) {
    const double pi = std::acos(-1.0);
    return std::polar(1.0, pi * k / 12.0);
}

cplx ev(const kset::CycNum& x) {
    cplx sum = 0;
    for (int k = 0; k < 8; ++k) sum += x.coeff(k).get_d() * zeta_power(k);
    return sum;
}

std::vector<cplx> ev(const kset::Ray& r) {
    std::vector<cplx> out;
    for (const auto& x : r) out.push_back(ev(x));
    return out;
}

cplx inner(const std::vector<cplx>& u, const std::vector<cplx>& v) {
    cplx s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
    return s;
}

bool orthogonal(const kset::Projector& p, const kset::Projector& q) {
    for (const auto& a : p.span)
        for (const auto& b : q.span)
            if (std::abs(inner(ev(a), ev(b))) > 1e-9) return false;
    return true;
}

std::vector<std::pair<std::size_t, std::size_t>> orthogonal_pairs(const kset::KSSet& s) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < s.projectors.size(); ++i)
        for (std::size_t j = i + 1; j < s.projectors.size(); ++j)
            if (orthogonal(s.projectors[i], s.projectors[j])) out.emplace_back(i, j);
    return out;
}

kset::KSSet with_contexts(const kset::KSSet& s, const std::vector<std::size_t>& kept) {
    std::vector<long> remap(s.projectors.size(), -1);
    kset::KSSet out;
    out.dim = s.dim;
    out.name = s.name;
    std::set<std::size_t> used;
    for (std::size_t c : kept) used.insert(s.contexts[c].begin(), s.contexts[c].end());
    for (std::size_t p : used) {
        remap[p] = static_cast<long>(out.projectors.size());
        out.projectors.push_back(s.projectors[p]);
    }
    for (std::size_t c : kept) {
        kset::Context ctx;
        for (std::size_t p : s.contexts[c]) ctx.push_back(static_cast<std::size_t>(remap[p]));
        out.contexts.push_back(ctx);
    }
    return out;
}

kset::KSSet without_context(const kset::KSSet& s, std::size_t context) {
    std::vector<std::size_t> kept;
    for (std::size_t c = 0; c < s.contexts.size(); ++c)
        if (c != context) kept.push_back(c);
    return with_contexts(s, kept);
}

bool brute_force_colorable(const kset::KSSet& s, kset::Mode mode) {
    const std::size_t r = s.projectors.size();
    if (r > 24) throw std::invalid_argument("too many projectors for brute force");
    std::vector<std::uint32_t> ctx_masks;
    for (const auto& c : s.contexts) {
        std::uint32_t m = 0;
        for (std::size_t p : c) m |= 1u << p;
        ctx_masks.push_back(m);
    }
    std::vector<std::uint32_t> pair_masks;
    if (mode == kset::Mode::FullOrthogonality)
        for (auto [i, j] : orthogonal_pairs(s)) pair_masks.push_back((1u << i) | (1u << j));
    for (std::uint32_t x = 0; x < (1u << r); ++x) {
        bool ok = true;
        for (std::uint32_t m : ctx_masks)
            if (__builtin_popcount(x & m) != 1) {
                ok = false;
                break;
            }
        if (!ok) continue;
        for (std::uint32_t m : pair_masks)
            if ((x & m) == m) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

bool assignment_valid(const kset::KSSet& s, const kset::Assignment& a, kset::Mode mode) {
    if (a.value.size() != s.projectors.size()) return false;
    for (const auto& c : s.contexts) {
        int ones = 0;
        for (std::size_t p : c) {
            if (a.value[p] != 0 && a.value[p] != 1) return false;
            ones += a.value[p];
        }
        if (ones != 1) return false;
    }
    if (mode == kset::Mode::FullOrthogonality)
        for (auto [i, j] : orthogonal_pairs(s))
            if (a.value[i] == 1 && a.value[j] == 1) return false;
    return true;
}

Cnf parse_dimacs(const std::string& text) {
    Cnf cnf;
    std::istringstream in(text);
    std::string line;
    std::vector<int> current;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (line[0] == 'p') {
            std::string p, kind;
            ls >> p >> kind >> cnf.variables >> cnf.declared_clauses;
            continue;
        }
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                cnf.clauses.push_back(current);
                current.clear();
            } else {
                current.push_back(lit);
            }
        }
    }
    return cnf;
}

bool naive_sat(const Cnf& cnf) {
    if (cnf.variables > 24) throw std::invalid_argument("too many variables for naive SAT");
    for (std::uint32_t x = 0; x < (1u << cnf.variables); ++x) {
        bool all = true;
        for (const auto& clause : cnf.clauses) {
            bool sat = false;
            for (int lit : clause) {
                bool v = (x >> (std::abs(lit) - 1)) & 1u;
                if ((lit > 0) == v) {
                    sat = true;
                    break;
                }
            }
            if (!sat) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return false;
}

}  // namespace oracle
