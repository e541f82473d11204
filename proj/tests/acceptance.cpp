// One PASS/FAIL line per acceptance criterion; exit status is nonzero if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "kset/catalog.hpp"
#include "kset/construct.hpp"
#include "kset/recipes.hpp"
#include "kset/verify.hpp"
#include "oracle/oracle.hpp"

using namespace kset;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
    bool pass = true;
    std::ostringstream note;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            note << " [failed: " << what << "]";
        }
    }
};

const KSSet& cat(const char* name) { return catalog::get(name).set; }

void catalog_fidelity(Outcome& o) {
    auto t = Clock::now();
    std::size_t n = 0;
    for (const auto* e : catalog::list()) {
        o.require(validate(e->set).ok(), e->name + " validates");
        o.require(symbol(e->set).detailed() == e->expected_symbol, e->name + " symbol");
        ++n;
    }
    double s = seconds_since(t);
    o.require(n == 12, "12 entries");
    o.require(s < 1.0, "under 1 s");
    o.note << " " << n << " entries, " << s << " s";
}

void ks_property(Outcome& o) {
    double worst = 0;
    std::string worst_name;
    for (const auto* e : catalog::list()) {
        auto t = Clock::now();
        bool ks = is_ks(e->set);
        double s = seconds_since(t);
        o.require(ks, e->name + " is KS");
        o.require(s < 5.0, e->name + " under 5 s");
        if (s > worst) {
            worst = s;
            worst_name = e->name;
        }
    }
    o.note << " slowest " << worst_name << " " << worst << " s";
}

void criticality(Outcome& o) {
    auto t = Clock::now();
    std::ostringstream full;
    for (const auto* e : catalog::list()) {
        auto r = is_critical(e->set, Mode::ContextOnly);
        o.require(r.overall == e->expected.is_critical, e->name + " critical");
        o.note << " " << e->name << ":" << r.colorable_count() << "/" << r.removals.size();
        auto f = is_critical(e->set, Mode::FullOrthogonality);
        full << " " << e->name << ":" << f.colorable_count() << "/" << f.removals.size();
    }
    double s = seconds_since(t);
    o.require(s < 30.0, "under 30 s");
    o.note << " (context mode); full mode" << full.str() << "; " << s << " s";
}

void parity(Outcome& o) {
    const std::map<std::string, bool> expected = {
        {"d4-18-9", true},   {"d6-21-7", true},   {"d8-34-9", true},   {"d8-30-9", true},
        {"d10-39-9", true},  {"d10-30-9", true},  {"d3-49-36", false}, {"d3-57-40", false},
        {"d5-29-16", false}, {"d7-32-12", false}, {"d9-39-13", false}, {"d11-40-12", false},
    };
    std::size_t parity_sets = 0;
    for (const auto& [name, want] : expected) {
        const KSSet& s = cat(name.c_str());
        bool p = is_parity(s);
        o.require(p == want, name + " parity");
        if (p) {
            ++parity_sets;
            o.require(!find_assignment(s, Mode::ContextOnly), name + " uncolorable in context mode");
        }
    }
    o.note << " " << parity_sets << " parity sets, all uncolorable in context mode";
}

void fig3_reproduction(Outcome& o) {
    auto t = Clock::now();
    KSSet rank_one = pz_improved(cat("d4-18-9"), cat("d6-21-7"), catalog::d10_pairing());
    KSSet merged = merge_rank(rank_one);
    o.require(rank_one.size() == 39 && rank_one.contexts.size() == 9, "39/9");
    o.require(symbol(rank_one).detailed() == "6^1_4 33^1_2 - 9^10_10", "rank-1 symbol");
    o.require(merged.size() == 30, "30 merged projectors");
    o.require(symbol(merged).detailed() == "9^2_2 6^1_4 15^1_2 - 6^10_7 3^10_10", "merged symbol");
    for (const KSSet* s : {&rank_one, &merged}) {
        o.require(is_ks(*s), "KS");
        o.require(is_critical(*s).overall, "critical");
    }
    double s = seconds_since(t);
    o.require(s < 10.0, "under 10 s");
    o.note << " " << symbol(rank_one).detailed() << " / " << symbol(merged).detailed() << ", " << s << " s";
}

void matsuno_reproduction(Outcome& o) {
    KSSet five = matsuno(cat("d4-18-9"), 5, {"1"});
    o.require(five.size() == 29 && five.contexts.size() == 16, "29/16");
    o.require(is_ks(five) && is_critical(five).overall, "d5 critical KS");
    const KSSet& base = catalog::fixture("d6-21-7-basis");
    KSSet seven = matsuno(base, 7, {"1"});
    KSSet nine = matsuno(base, 9, {"1", "2", "3"});
    o.require(seven.size() == 32 && seven.contexts.size() == 12, "32/12");
    o.require(nine.size() == 39 && nine.contexts.size() == 13, "39/13");
    o.require(is_ks(seven) && is_ks(nine), "d7 and d9 KS");
    o.note << " " << symbol(five).compact() << " " << symbol(seven).compact() << " " << symbol(nine).compact();
}

void ceg_counts(Outcome& o) {
    KSSet a = ceg(cat("d4-18-9"), 5);
    KSSet b = ceg(cat("d6-21-7"), 7);
    o.note << " ceg(18-9,5)=" << a.size() << "/" << a.contexts.size() << " ceg(21-7,7)=" << b.size() << "/"
           << b.contexts.size();
    o.require(a.size() == 39 && a.contexts.size() == 19, "ceg(18-9,5) is 39/19");
    o.require(b.size() == 45 && b.contexts.size() == 15, "ceg(21-7,7) is 45/15");
    o.require(is_ks(a) && is_ks(b), "both KS");
    KSSet r = reduce_critical(a);
    o.require(is_ks(r) && is_critical(r).overall, "reduced set is critical KS");
    o.note << "; reduce_critical(ceg(18-9,5)) = " << symbol(r).detailed();
}

void table(Outcome& o) {
    // Compact symbols of the dimension table, per row and column.
    std::size_t predicted = 0, executed = 0;
    for (std::size_t d = 3; d <= 24; ++d) {
        auto rows = table_recipe(d);
        o.require(!rows.empty(), "rows for d=" + std::to_string(d));
        predicted += rows.size();
        const bool run = (d % 2 == 0 && d <= 16) || (d % 2 == 1 && d <= 13);
        if (!run) continue;
        for (const auto& r : rows) {
            RecipeOutput built = execute(r);
            auto check = [&](const std::optional<KSSet>& s, const std::optional<std::string>& want, const char* col) {
                if (!want) return;
                bool ok = s && s->dim == d && symbol(*s).compact() == *want;
                o.require(ok, "d=" + std::to_string(d) + " " + r.row + " " + col);
                ++executed;
            };
            check(built.general_rank, r.general_rank, "general");
            check(built.rank_one, r.rank_one, "rank-1");
            if (d % 6 == 0 && r.row == "6n" && built.rank_one)
                o.require(2 * built.rank_one->size() == 7 * d, "R = 3.5 d at d=" + std::to_string(d));
        }
    }
    // Spot checks against the printed table.
    auto has = [](std::size_t d, const char* general, const char* rank_one) {
        for (const auto& r : table_recipe(d))
            if ((!general || r.general_rank == std::string(general)) && (!rank_one || r.rank_one == std::string(rank_one)))
                return true;
        return false;
    };
    o.require(has(10, "30-9", "39-9"), "d=10 row");
    o.require(has(7, "32-12", nullptr), "d=7 row");
    o.require(has(13, "43-12", "53-12"), "d=13 row");
    o.note << " " << predicted << " rows for d=3..24, " << executed << " columns built";
}

void oracle_equivalence(Outcome& o) {
    std::mt19937 rng(99);
    std::size_t checked = 0;
    for (const char* name : {"d4-18-9", "d3-49-36", "d3-57-40", "d5-29-16", "d6-21-7", "d7-32-12", "d8-34-9"}) {
        const KSSet& s = cat(name);
        std::vector<KSSet> subs;
        if (s.size() <= 20) {
            subs.push_back(s);
            for (std::size_t c = 0; c < s.contexts.size(); ++c) subs.push_back(oracle::without_context(s, c));
        }
        std::vector<std::size_t> order(s.contexts.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        for (int attempt = 0; attempt < 200 && subs.size() < 30; ++attempt) {
            std::shuffle(order.begin(), order.end(), rng);
            std::uniform_int_distribution<std::size_t> len(1, order.size());
            std::vector<std::size_t> kept(order.begin(), order.begin() + static_cast<long>(len(rng)));
            std::sort(kept.begin(), kept.end());
            KSSet sub = oracle::with_contexts(s, kept);
            if (sub.size() <= 20) subs.push_back(std::move(sub));
        }
        for (const auto& sub : subs)
            for (Mode mode : {Mode::ContextOnly, Mode::FullOrthogonality}) {
                auto w = find_assignment(sub, mode);
                bool brute = oracle::brute_force_colorable(sub, mode);
                bool sat = oracle::naive_sat(oracle::parse_dimacs(export_cnf(sub, mode)));
                o.require(w.has_value() == brute, std::string(name) + " search vs enumeration");
                o.require(sat == brute, std::string(name) + " CNF vs enumeration");
                if (w) o.require(oracle::assignment_valid(sub, *w, mode), std::string(name) + " witness valid");
                ++checked;
            }
    }
    o.note << " " << checked << " (set, mode) cases";
}

void field_arithmetic(Outcome& o) {
    auto t = Clock::now();
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> coef(-10, 10);
    auto element = [&] {
        std::array<Rational, 8> c;
        for (auto& x : c) x = coef(rng);
        return CycNum::from_coeffs(c);
    };
    auto close = [](oracle::cplx a, oracle::cplx b) { return std::abs(a - b) < 1e-9 * (1 + std::abs(b)); };
    const int cases = 10000;
    int failures = 0;
    for (int i = 0; i < cases; ++i) {
        CycNum a = element(), b = element(), c = element();
        bool ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a + b == b + a && a * b == b * a &&
                  a * (b + c) == a * b + a * c && (a * b).conj() == a.conj() * b.conj() &&
                  (a + b).conj() == a.conj() + b.conj() && (a * a.conj()).conj() == a * a.conj() &&
                  (a.is_zero() || a * a.inv() == CycNum(1)) && close(oracle::ev(a * b), oracle::ev(a) * oracle::ev(b)) &&
                  close(oracle::ev(a + b), oracle::ev(a) + oracle::ev(b)) &&
                  close(oracle::ev(a.conj()), std::conj(oracle::ev(a)));
        failures += !ok;
    }
    double s = seconds_since(t);
    o.require(failures == 0, std::to_string(failures) + " failing cases");
    o.require(s < 10.0, "under 10 s");
    o.note << " " << cases << " cases, " << s << " s";
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
        {"catalog fidelity", catalog_fidelity},
        {"KS property", ks_property},
        {"criticality", criticality},
        {"parity", parity},
        {"direct-sum reproduction", fig3_reproduction},
        {"Matsuno reproduction", matsuno_reproduction},
        {"CEG counts", ceg_counts},
        {"dimension table", table},
        {"oracle equivalence", oracle_equivalence},
        {"field arithmetic", field_arithmetic},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.note << " [exception: " << e.what() << "]";
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ":" << o.note.str()
                  << std::endl;
    }
    std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria pass"
              << std::endl;
    return failed == 0 ? 0 : 1;
}
