#include "defext/session.hpp"

#include <fstream>
#include <sstream>

#include "defext/error.hpp"
#include "toml.hpp"

namespace defext {

namespace {

std::string at(const toml::node& n)
{
    const auto& p = n.source().begin;
    return "line " + std::to_string(p.line) + ", column " + std::to_string(p.column);
}

std::string at(const toml::node_view<const toml::node>& n)
{
    return n.node() ? at(*n.node()) : std::string("unknown position");
}

[[noreturn]] void semantic(const std::string& where, const std::string& msg)
{
    throw Error(ErrorKind::Semantic, where + ": " + msg);
}

std::string require_string(const toml::node_view<const toml::node>& n, const std::string& what,
                           const std::string& fallback_where)
{
    if (!n)
        semantic(fallback_where, "missing " + what);
    auto v = n.value<std::string>();
    if (!v)
        semantic(at(n), what + " must be a string");
    return *v;
}

std::string bare_message(const Error& e)
{
    return std::string(e.what()).substr(std::string(to_string(e.kind())).size() + 2);
}

// Re-raises an expression error with the TOML position of the node holding it.
template <class F>
auto located(const toml::node_view<const toml::node>& n, F&& f)
{
    try {
        return f();
    } catch (const Error& e) {
        throw Error(e.kind(), at(n) + ": " + bare_message(e));
    }
}

std::size_t single_basis_index(const Element& e, const std::string& where,
                               const std::string& text)
{
    if (e.terms.size() != 1 || !e.terms[0].second.is_one())
        semantic(where, "'" + text + "' is not a basis element of the algebra");
    return e.terms[0].first;
}

} // namespace

Session Session::parse(std::string_view text, const std::string& source)
{
    toml::table root;
    try {
        root = toml::parse(text, source);
    } catch (const toml::parse_error& e) {
        const auto& p = e.source().begin;
        throw Error(ErrorKind::Parse, source + ": line " + std::to_string(p.line) + ", column " +
                                          std::to_string(p.column) + ": " + std::string(e.description()));
    }
    for (const auto& [k, v] : root) {
        const std::string key(k.str());
        if (key != "name" && key != "field" && key != "quiver" && key != "algebra" && key != "cocycle" &&
            key != "options")
            semantic(at(v), "unknown section '" + key + "'");
    }
    const toml::node_view<const toml::node> doc{root};
    Session s;
    s.name = doc["name"].value_or(std::string("session"));

    Field field;
    if (auto f = doc["field"]) {
        const std::string kind = f["kind"].value_or(std::string("rational"));
        if (kind == "prime") {
            auto p = f["p"].value<std::int64_t>();
            if (!p)
                semantic(at(f), "a prime field needs an integer p");
            if (*p < 2 || *p > 0x7fffffff)
                semantic(at(f["p"]), "p = " + std::to_string(*p) + " is out of range");
            for (std::int64_t d = 2; d * d <= *p; ++d)
                if (*p % d == 0)
                    semantic(at(f["p"]), "p = " + std::to_string(*p) + " is not prime");
            field.prime = static_cast<std::uint32_t>(*p);
        } else if (kind != "rational") {
            semantic(at(f["kind"]), "field kind must be 'rational' or 'prime', got '" + kind + "'");
        }
    }

    auto q = doc["quiver"];
    if (!q)
        semantic(source, "missing [quiver] section");
    std::vector<std::string> vertices;
    auto vs = q["vertices"].as_array();
    if (!vs)
        semantic(at(q), "quiver.vertices must be an array of labels");
    for (const auto& v : *vs) {
        if (auto str = v.value<std::string>())
            vertices.push_back(*str);
        else if (auto num = v.value<std::int64_t>())
            vertices.push_back(std::to_string(*num));
        else
            semantic(at(v), "vertex labels must be strings or integers");
    }
    auto find_vertex = [&](const toml::node_view<const toml::node>& n, const std::string& what) {
        std::string label;
        if (auto num = n.value<std::int64_t>())
            label = std::to_string(*num);
        else
            label = require_string(n, what, at(q));
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i] == label)
                return i;
        semantic(at(n), "unknown vertex '" + label + "'");
    };
    std::vector<Arrow> arrows;
    if (auto arr = q["arrow"].as_array()) {
        for (const auto& a : *arr) {
            const toml::node_view<const toml::node> an{a};
            if (!a.is_table())
                semantic(at(a), "each [[quiver.arrow]] must be a table");
            arrows.push_back({require_string(an["name"], "arrow name", at(a)), find_vertex(an["source"], "source"),
                              find_vertex(an["target"], "target")});
        }
    }
    Quiver quiver = located(q, [&] { return Quiver(vertices, arrows); });

    auto alg = doc["algebra"];
    std::vector<PathPoly> relations;
    std::size_t bound = 0;
    if (alg) {
        if (auto rs = alg["relations"].as_array()) {
            for (const auto& r : *rs) {
                const toml::node_view<const toml::node> rn{r};
                const std::string t = require_string(rn, "relation", at(alg));
                relations.push_back(located(rn, [&] { return parse_path_poly(quiver, field, t); }));
            }
        } else if (alg["relations"]) {
            semantic(at(alg["relations"]), "algebra.relations must be an array of strings");
        }
        if (auto lb = alg["length_bound"]) {
            auto v = lb.value<std::int64_t>();
            if (!v || *v < 1)
                semantic(at(lb), "length_bound must be a positive integer");
            bound = static_cast<std::size_t>(*v);
        }
    }
    s.algebra = located(alg ? alg : q, [&] { return QuotientAlgebra::build(quiver, field, relations, bound); });
    const QuotientAlgebra& A = *s.algebra;

    std::vector<PatternRule> rules;
    std::vector<EntryRule> entries;
    if (auto co = doc["cocycle"]) {
        if (auto rs = co["rule"].as_array())
            for (const auto& r : *rs) {
                const toml::node_view<const toml::node> rn{r};
                const std::string pat = require_string(rn["pattern"], "pattern", at(r));
                const std::string val = require_string(rn["value"], "value", at(r));
                PathPoly pp = located(rn["pattern"], [&] { return parse_path_poly(A.quiver(), field, pat); });
                if (pp.size() != 1 || !pp.begin()->second.is_one())
                    semantic(at(rn["pattern"]), "pattern '" + pat + "' must be a single path");
                PathPoly vp = located(rn["value"], [&] { return parse_path_poly(A.quiver(), field, val); });
                rules.push_back({pp.begin()->first, std::move(vp)});
            }
        if (auto es = co["entry"].as_array())
            for (const auto& e : *es) {
                const toml::node_view<const toml::node> en{e};
                const std::string l = require_string(en["left"], "left", at(e));
                const std::string r = require_string(en["right"], "right", at(e));
                const std::string v = require_string(en["value"], "value", at(e));
                Element le = located(en["left"], [&] { return A.parse(l); });
                Element re = located(en["right"], [&] { return A.parse(r); });
                Element ve = located(en["value"], [&] { return A.parse(v); });
                entries.push_back({single_basis_index(le, at(en["left"]), l),
                                   single_basis_index(re, at(en["right"]), r), ve});
            }
        s.cocycle = located(co, [&] { return Cochain2::materialize(A, rules, entries); });
    } else {
        s.cocycle = Cochain2::zero(A.algebra());
    }

    if (auto opt = doc["options"]) {
        if (auto d = opt["degree"]) {
            auto v = d.value<std::int64_t>();
            if (!v || *v < 0)
                semantic(at(d), "options.degree must be a nonnegative integer");
            s.degree = static_cast<std::size_t>(*v);
        }
        if (auto f = opt["format"]) {
            s.format = require_string(f, "format", at(opt));
            if (s.format != "text" && s.format != "json")
                semantic(at(f), "options.format must be 'text' or 'json'");
        }
    }
    return s;
}

Session Session::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::Semantic, "cannot open session file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
}

Session fixture(const std::string& name)
{
    for (const auto& [key, text] : embedded_fixtures())
        if (key == name)
            return Session::parse(text, name + ".toml");
    std::string known;
    for (const auto& kv : embedded_fixtures())
        known += (known.empty() ? "" : ", ") + kv.first;
    throw Error(ErrorKind::Semantic, "unknown fixture '" + name + "' (known: " + known + ")");
}

std::size_t Session::vertex(const std::string& label) const
{
    auto v = algebra->quiver().find_vertex(label);
    if (!v)
        throw Error(ErrorKind::Semantic, "unknown vertex '" + label + "'");
    return *v;
}

Element parse_deformed(const QuotientAlgebra& A, const DeformedAlgebra& D, std::string_view text)
{
    std::string plain, tagged;
    std::size_t depth = 0, start = 0;
    auto flush = [&](std::size_t end) {
        std::string term(text.substr(start, end - start));
        const auto first = term.find_first_not_of(' ');
        const auto last = term.find_last_not_of(' ');
        if (first == std::string::npos)
            return;
        term = term.substr(first, last - first + 1);
        // sign stays attached to the term
        std::string body = term;
        std::string sgn;
        if (body[0] == '+' || body[0] == '-') {
            sgn = body.substr(0, 1);
            body = body.substr(body.find_first_not_of(' ', 1));
        }
        if (body.size() >= 2 && body.compare(body.size() - 2, 2, "*t") == 0)
            tagged += (sgn.empty() ? "+" : sgn) + body.substr(0, body.size() - 2);
        else if (body == "t")
            throw Error(ErrorKind::Parse, "write t as e_v*t for a vertex v in '" + std::string(text) + "'");
        else
            plain += (sgn.empty() ? "+" : sgn) + body;
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '(')
            ++depth;
        else if (c == ')')
            depth = depth ? depth - 1 : 0;
        else if ((c == '+' || c == '-') && depth == 0 && i > 0) {
            // a sign after '/' or '*' belongs to a literal
            std::size_t j = i;
            while (j > 0 && text[j - 1] == ' ')
                --j;
            if (j > 0 && (text[j - 1] == '*' || text[j - 1] == '/'))
                continue;
            flush(i);
            start = i;
        }
    }
    flush(text.size());
    auto strip = [](std::string s) { return s.empty() ? std::string("0") : (s[0] == '+' ? s.substr(1) : s); };
    return D.lift(A.parse(strip(plain)), A.parse(strip(tagged)));
}

} // namespace defext
