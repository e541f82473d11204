#include "kset/setfile.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>

namespace kset {
namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size() || line[i] == '#') break;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

struct RayDecl {
    std::string id;
    Ray ray;
    std::optional<std::size_t> group;  // index into groups once grouped
    bool used_directly = false;
};

struct GroupDecl {
    std::string id;
    std::vector<std::size_t> rays;
};

struct ContextDecl {
    std::vector<std::string> members;
};

class Parser {
public:
    KSSet parse(std::string_view text) {
        std::size_t line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t end = text.find('\n', pos);
            if (end == std::string_view::npos) end = text.size();
            std::string_view line = text.substr(pos, end - pos);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            ++line_no;
            handle(tokenize(line), line_no);
            pos = end + 1;
        }
        if (!dim_) throw SyntaxError("missing 'dim' line", line_no, 1);
        return build();
    }

private:
    void handle(const std::vector<Token>& toks, std::size_t line) {
        if (toks.empty()) return;
        std::string_view kw = toks[0].text;
        if (!dim_) {
            if (kw != "dim") throw SyntaxError("expected 'dim' before '" + std::string(kw) + "'", line, toks[0].column);
            if (toks.size() != 2) throw SyntaxError("'dim' takes one integer", line, toks[0].column);
            dim_ = parse_dim(toks[1], line);
            return;
        }
        if (kw == "ray") ray_line(toks, line);
        else if (kw == "proj") proj_line(toks, line);
        else if (kw == "ctx") ctx_line(toks, line);
        else if (kw == "dim") throw SyntaxError("duplicate 'dim' line", line, toks[0].column);
        else throw SyntaxError("unknown keyword '" + std::string(kw) + "'", line, toks[0].column);
    }

    static std::size_t parse_dim(const Token& t, std::size_t line) {
        std::size_t value = 0;
        if (t.text.empty() || t.text.size() > 6) throw SyntaxError("bad dimension", line, t.column);
        for (char c : t.text) {
            if (!std::isdigit(static_cast<unsigned char>(c))) throw SyntaxError("bad dimension", line, t.column);
            value = value * 10 + static_cast<std::size_t>(c - '0');
        }
        if (value == 0) throw SyntaxError("dimension must be positive", line, t.column);
        return value;
    }

    void claim_id(const Token& t, std::size_t line) {
        std::string id(t.text);
        if (!names_.emplace(id, true).second) throw SyntaxError("duplicate id '" + id + "'", line, t.column);
    }

    void ray_line(const std::vector<Token>& toks, std::size_t line) {
        if (toks.size() < 2) throw SyntaxError("'ray' needs an id", line, toks[0].column);
        if (toks.size() != 2 + *dim_)
            throw SyntaxError("ray '" + std::string(toks[1].text) + "' has " + std::to_string(toks.size() - 2) +
                                  " entries, expected " + std::to_string(*dim_),
                              line, toks[1].column);
        claim_id(toks[1], line);
        RayDecl decl;
        decl.id = std::string(toks[1].text);
        for (std::size_t k = 2; k < toks.size(); ++k) {
            try {
                decl.ray.push_back(parse_scalar(toks[k].text));
            } catch (const SyntaxError& e) {
                throw SyntaxError(e.what(), line, toks[k].column + e.column() - 1);
            }
        }
        ray_index_[decl.id] = rays_.size();
        rays_.push_back(std::move(decl));
    }

    void proj_line(const std::vector<Token>& toks, std::size_t line) {
        if (toks.size() < 3) throw SyntaxError("'proj' needs an id and at least one ray", line, toks[0].column);
        claim_id(toks[1], line);
        GroupDecl g;
        g.id = std::string(toks[1].text);
        for (std::size_t k = 2; k < toks.size(); ++k) {
            auto it = ray_index_.find(std::string(toks[k].text));
            if (it == ray_index_.end())
                throw UnknownRayReference("unknown ray '" + std::string(toks[k].text) + "'", line, toks[k].column);
            RayDecl& r = rays_[it->second];
            if (r.group)
                throw UnknownRayReference("ray '" + r.id + "' already belongs to projector '" + groups_[*r.group].id + "'",
                                          line, toks[k].column);
            if (r.used_directly)
                throw UnknownRayReference("ray '" + r.id + "' was already used as a rank-1 projector", line,
                                          toks[k].column);
            r.group = groups_.size();
            g.rays.push_back(it->second);
        }
        group_index_[g.id] = groups_.size();
        groups_.push_back(std::move(g));
    }

    void ctx_line(const std::vector<Token>& toks, std::size_t line) {
        if (toks.size() < 2) throw SyntaxError("'ctx' needs members", line, toks[0].column);
        ContextDecl c;
        for (std::size_t k = 1; k < toks.size(); ++k) {
            std::string id(toks[k].text);
            if (group_index_.count(id) == 0) {
                auto it = ray_index_.find(id);
                if (it == ray_index_.end())
                    throw UnknownRayReference("unknown projector '" + id + "'", line, toks[k].column);
                RayDecl& r = rays_[it->second];
                if (r.group)
                    throw UnknownRayReference("ray '" + id + "' is part of projector '" + groups_[*r.group].id + "'",
                                              line, toks[k].column);
                r.used_directly = true;
            }
            c.members.push_back(std::move(id));
        }
        contexts_.push_back(std::move(c));
    }

    KSSet build() {
        KSSet s;
        s.dim = *dim_;
        std::map<std::string, ProjectorIndex> index;
        std::vector<bool> group_done(groups_.size(), false);
        for (const RayDecl& r : rays_) {
            if (!r.group) {
                index[r.id] = s.projectors.size();
                s.projectors.push_back(Projector::from_ray(r.id, r.ray));
                continue;
            }
            std::size_t gi = *r.group;
            if (group_done[gi]) continue;
            group_done[gi] = true;
            const GroupDecl& g = groups_[gi];
            Projector p;
            p.id = g.id;
            for (std::size_t ri : g.rays) {
                p.span.push_back(rays_[ri].ray);
                p.part_ids.push_back(rays_[ri].id);
            }
            index[g.id] = s.projectors.size();
            s.projectors.push_back(std::move(p));
        }
        for (const ContextDecl& c : contexts_) {
            Context ctx;
            for (const auto& m : c.members) ctx.push_back(index.at(m));
            s.contexts.push_back(std::move(ctx));
        }
        return s;
    }

    std::optional<std::size_t> dim_;
    std::map<std::string, bool> names_;
    std::vector<RayDecl> rays_;
    std::map<std::string, std::size_t> ray_index_;
    std::vector<GroupDecl> groups_;
    std::map<std::string, std::size_t> group_index_;
    std::vector<ContextDecl> contexts_;
};

}  // namespace

KSSet parse_set(std::string_view text, ParseOptions options) {
    KSSet s = Parser().parse(text);
    if (options.validate) {
        ValidationReport report = validate(s);
        if (!report.ok()) throw ValidationError(std::move(report));
    }
    return s;
}

std::string serialize(const KSSet& set) {
    std::ostringstream os;
    if (!set.name.empty()) os << "# " << set.name << '\n';
    os << "dim " << set.dim << '\n';
    for (const Projector& p : set.projectors) {
        for (std::size_t k = 0; k < p.rank(); ++k) {
            os << "ray " << (p.rank() == 1 ? p.id : p.part_id(k));
            for (const CycNum& x : p.span[k]) os << ' ' << format_scalar(x);
            os << '\n';
        }
    }
    for (const Projector& p : set.projectors) {
        if (p.rank() == 1) continue;
        os << "proj " << p.id;
        for (std::size_t k = 0; k < p.rank(); ++k) os << ' ' << p.part_id(k);
        os << '\n';
    }
    for (const Context& ctx : set.contexts) {
        os << "ctx";
        for (ProjectorIndex i : ctx) os << ' ' << set.projectors[i].id;
        os << '\n';
    }
    return os.str();
}

}  // namespace kset
