#include "kset/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "kset/catalog.hpp"
#include "kset/construct.hpp"
#include "kset/recipes.hpp"
#include "kset/setfile.hpp"
#include "kset/verify.hpp"

namespace kset {
namespace {

// Thrown for problems that are the caller's fault but not CLI syntax.
class InputError : public Error {
public:
    using Error::Error;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// A file path if one exists, otherwise a catalog entry or fixture name.
KSSet load_set(const std::string& ref) {
    namespace fs = std::filesystem;
    if (fs::is_regular_file(ref)) {
        std::ifstream in(ref);
        std::stringstream buf;
        buf << in.rdbuf();
        KSSet s = parse_set(buf.str());
        s.name = fs::path(ref).stem().string();
        return s;
    }
    for (const auto& n : catalog::names())
        if (n == ref) return catalog::get(ref).set;
    for (const auto& n : catalog::fixture_names())
        if (n == ref) return catalog::fixture(ref);
    throw InputError("no such file or catalog entry: " + ref);
}

Mode mode_from(const std::string& text) {
    auto m = parse_mode(text);
    if (!m) throw InputError("unknown mode '" + text + "' (expected full or context)");
    return *m;
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != item.size() || v == 0) throw InputError("bad pairing entry '" + item + "' (1-based indices)");
        out.push_back(v - 1);
    }
    return out;
}

void write_set(const KSSet& s, const std::string& path, std::ostream& out) {
    std::string text = "# symbol: " + symbol(s).detailed() + "\n" + serialize(s);
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw InputError("cannot write " + path);
    f << text;
}

struct Options {
    std::string set, set2, mode = "full", critical_mode = "context", reduce_mode = "context", output, pairing, name, dim_or_n;
    std::vector<std::string> v_ids;
    bool no_critical = false, parallel = false, optimize = false, merge = false, run = false;
    std::size_t number = 0;
};

int cmd_verify(const Options& o, std::ostream& out) {
    KSSet s = load_set(o.set);
    Mode mode = mode_from(o.mode);
    Mode cmode = mode_from(o.critical_mode);
    Symbol sym = symbol(s);
    out << "set: " << s.name << "\n";
    out << "symbol: " << sym.detailed() << "\n";
    out << "modes: coloring " << to_string(mode) << ", criticality " << to_string(cmode) << "\n";

    auto witness = find_assignment(s, mode);
    std::string line = std::string("KS: ") + yes_no(!witness) + ", parity: " + yes_no(sym.parity());
    if (witness) {
        out << line << "\n" << "witness:\n" << witness->to_lines(s);
        return kExitPropertyFails;
    }
    if (o.no_critical) {
        out << line << "\n";
        return kExitOk;
    }
    try {
        CriticalityReport rep = is_critical(s, cmode, o.parallel);
        out << line << ", critical: " << yes_no(rep.overall) << " (" << rep.colorable_count() << "/"
            << rep.removals.size() << " removals colorable)\n";
        for (const auto& r : rep.removals)
            if (!r.witness) out << "still uncolorable without context " << r.context + 1 << "\n";
        return rep.overall ? kExitOk : kExitPropertyFails;
    } catch (const NotKS&) {
        out << line << ", critical: no (colorable in " << to_string(cmode) << " mode)\n";
        return kExitPropertyFails;
    }
}

int cmd_symbol(const Options& o, std::ostream& out) {
    Symbol sym = symbol(load_set(o.set));
    out << sym.compact() << "\n" << sym.detailed() << "\n";
    return kExitOk;
}

int cmd_catalog_list(std::ostream& out) {
    for (const auto* e : catalog::list())
        out << std::left << std::setw(10) << e->name << " d=" << std::setw(3) << e->dim << std::setw(6)
            << symbol(e->set).compact() << " " << e->expected_symbol << "\n";
    return kExitOk;
}

int cmd_catalog_show(const Options& o, std::ostream& out) {
    const auto& e = catalog::get(o.name);
    out << "name: " << e.name << "\n"
        << "dimension: " << e.dim << "\n"
        << "projectors: " << e.set.size() << "\n"
        << "contexts: " << e.set.contexts.size() << "\n"
        << "symbol: " << e.expected_symbol << "\n"
        << "expected: KS " << yes_no(e.expected.is_ks) << ", parity " << yes_no(e.expected.is_parity)
        << ", critical " << yes_no(e.expected.is_critical) << "\n"
        << "source: " << e.provenance << "\n";
    return kExitOk;
}

int cmd_catalog_export(const Options& o, std::ostream& out) {
    out << serialize(catalog::get(o.name).set);
    return kExitOk;
}

std::size_t to_count(const std::string& text, const char* what) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(text, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != text.size() || text.empty()) throw InputError(std::string("bad ") + what + " '" + text + "'");
    return v;
}

int cmd_construct(const std::string& op, const Options& o, std::ostream& out, std::ostream& err) {
    KSSet a = load_set(o.set);
    KSSet result;
    if (op == "pz" || op == "pz-basic") {
        KSSet b = load_set(o.set2);
        bool parity = symbol(a).parity() && symbol(b).parity();
        if (op == "pz-basic" || !parity) {
            if (op == "pz") err << "warning: an operand is not a parity set; using the basic direct sum\n";
            result = pz_basic(a, b);
        } else {
            Pairing p;
            if (!o.pairing.empty()) {
                p.target = parse_index_list(o.pairing);
            } else if (o.optimize) {
                p = optimize_pairing(a, b).pairing;
            } else {
                p = canonical_pairing(a, b);
            }
            result = pz_improved(a, b, p);
        }
        if (o.merge) result = merge_rank(result);
    } else if (op == "scale") {
        result = rank_scale(a, to_count(o.dim_or_n, "scale factor"));
    } else if (op == "ceg") {
        result = ceg(a, to_count(o.dim_or_n, "dimension"));
    } else if (op == "matsuno") {
        result = matsuno(a, to_count(o.dim_or_n, "dimension"), o.v_ids);
    } else if (op == "merge") {
        result = merge_rank(a);
    } else if (op == "split") {
        result = split_rank(a);
    }
    write_set(result, o.output, out);
    return kExitOk;
}

int cmd_reduce(const Options& o, std::ostream& out) {
    KSSet s = load_set(o.set);
    try {
        write_set(reduce_critical(s, mode_from(o.reduce_mode)), o.output, out);
    } catch (const NotKS& e) {
        out << "not reducible: " << e.what() << "\n";
        return kExitPropertyFails;
    }
    return kExitOk;
}

int cmd_table(const Options& o, std::ostream& out) {
    if (o.number < 3) throw InputError("dimension must be at least 3");
    bool all_match = true;
    out << "d=" << o.number << "\n";
    for (const Recipe& r : table_recipe(o.number)) {
        out << std::left << std::setw(7) << r.row << " R^r-B " << std::setw(7) << r.general_rank.value_or("-")
            << " R^1-B " << std::setw(7) << r.rank_one.value_or("-") << " " << r.description << "\n";
        if (!o.run) continue;
        RecipeOutput built = execute(r);
        auto report = [&](const char* column, const std::optional<KSSet>& s, const std::optional<std::string>& want) {
            if (!s) return;
            Symbol sym = symbol(*s);
            bool match = want && sym.compact() == *want;
            all_match = all_match && match;
            out << "  " << column << ": " << sym.compact() << " (" << sym.detailed() << ") " << (match ? "ok" : "MISMATCH")
                << "\n";
        };
        report("R^r", built.general_rank, r.general_rank);
        report("R^1", built.rank_one, r.rank_one);
    }
    return all_match ? kExitOk : kExitPropertyFails;
}

int cmd_export_cnf(const Options& o, std::ostream& out) {
    out << export_cnf(load_set(o.set), mode_from(o.mode));
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Kochen-Specker set toolkit", "kset"};
    app.require_subcommand(1);
    Options o;
    std::string action;

    auto* verify = app.add_subcommand("verify", "Check KS, parity and criticality");
    verify->add_option("set", o.set, "Set file or catalog name")->required();
    const auto modes = CLI::IsMember({"full", "context"});
    verify->add_option("--mode", o.mode, "Coloring rule for the KS check: full or context")->check(modes);
    verify->add_option("--critical-mode", o.critical_mode, "Coloring rule for criticality: context or full")
        ->check(modes);
    verify->add_flag("--no-critical", o.no_critical, "Skip the criticality check");
    verify->add_flag("--parallel", o.parallel, "Run removals concurrently");

    auto* sym = app.add_subcommand("symbol", "Print compact and detailed symbols");
    sym->add_option("set", o.set, "Set file or catalog name")->required();

    auto* cat = app.add_subcommand("catalog", "Embedded sets");
    cat->require_subcommand(1);
    auto* cat_list = cat->add_subcommand("list", "List entries");
    auto* cat_show = cat->add_subcommand("show", "Describe one entry");
    cat_show->add_option("name", o.name)->required();
    auto* cat_export = cat->add_subcommand("export", "Print an entry as a set file");
    cat_export->add_option("name", o.name)->required();

    auto* con = app.add_subcommand("construct", "Build a new set; writes a set file");
    con->require_subcommand(1);
    auto add_output = [&](CLI::App* c) { c->add_option("-o,--output", o.output, "Write to FILE instead of stdout"); };
    auto* pz = con->add_subcommand("pz", "Improved direct sum of two parity sets");
    pz->add_option("first", o.set)->required();
    pz->add_option("second", o.set2)->required();
    pz->add_option("--pairing", o.pairing, "Comma-separated 1-based targets for the primary contexts");
    pz->add_flag("--optimize", o.optimize, "Search for the pairing with the most merges");
    pz->add_flag("--merge", o.merge, "Merge projectors with identical contexts");
    auto* pzb = con->add_subcommand("pz-basic", "Direct sum with all context pairs");
    pzb->add_option("first", o.set)->required();
    pzb->add_option("second", o.set2)->required();
    pzb->add_flag("--merge", o.merge, "Merge projectors with identical contexts");
    auto* scale = con->add_subcommand("scale", "Rank scaling by a factor N");
    scale->add_option("set", o.set)->required();
    scale->add_option("n", o.dim_or_n)->required();
    auto* cg = con->add_subcommand("ceg", "Extension to dimension D, d < D < 2d");
    cg->add_option("set", o.set)->required();
    cg->add_option("dim", o.dim_or_n)->required();
    auto* mt = con->add_subcommand("matsuno", "Matsuno doubling to dimension D with basis rays V");
    mt->add_option("set", o.set)->required();
    mt->add_option("dim", o.dim_or_n)->required();
    mt->add_option("v", o.v_ids, "Ray ids along e1..e(D-d)")->required();
    auto* mg = con->add_subcommand("merge", "Merge projectors with identical contexts");
    mg->add_option("set", o.set)->required();
    auto* sp = con->add_subcommand("split", "Split every projector into rank-1 rays");
    sp->add_option("set", o.set)->required();
    for (auto* c : {pz, pzb, scale, cg, mt, mg, sp}) add_output(c);

    auto* red = app.add_subcommand("reduce", "Greedy critical subset; writes a set file");
    red->add_option("set", o.set)->required();
    red->add_option("--mode", o.reduce_mode, "Coloring rule: context or full")->check(modes);
    add_output(red);

    auto* tab = app.add_subcommand("table", "Dimension-table rows for D");
    tab->add_option("dim", o.number)->required();
    tab->add_flag("--run", o.run, "Build each row and compare symbols");

    auto* cnf = app.add_subcommand("export-cnf", "DIMACS CNF of the coloring problem");
    cnf->add_option("set", o.set)->required();
    cnf->add_option("--mode", o.mode, "full or context")->check(modes);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*verify) return cmd_verify(o, out);
        if (*sym) return cmd_symbol(o, out);
        if (*cat_list) return cmd_catalog_list(out);
        if (*cat_show) return cmd_catalog_show(o, out);
        if (*cat_export) return cmd_catalog_export(o, out);
        for (auto* c : {pz, pzb, scale, cg, mt, mg, sp})
            if (*c) return cmd_construct(c->get_name(), o, out, err);
        if (*red) return cmd_reduce(o, out);
        if (*tab) return cmd_table(o, out);
        if (*cnf) return cmd_export_cnf(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitUsage;
}

}  // namespace kset
