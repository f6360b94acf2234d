#include "defext/quiver.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "defext/error.hpp"

namespace defext {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows))
{
    std::set<std::string> seen;
    for (const auto& v : vertices_) {
        if (v.empty())
            throw Error(ErrorKind::Semantic, "empty vertex label");
        if (!seen.insert(v).second)
            throw Error(ErrorKind::Semantic, "duplicate vertex '" + v + "'");
    }
    std::set<std::string> names;
    for (const auto& a : arrows_) {
        if (a.name.empty())
            throw Error(ErrorKind::Semantic, "empty arrow name");
        if (!names.insert(a.name).second)
            throw Error(ErrorKind::Semantic, "duplicate arrow '" + a.name + "'");
        if (a.source >= vertices_.size() || a.target >= vertices_.size())
            throw Error(ErrorKind::Semantic, "arrow '" + a.name + "' has an undeclared endpoint");
    }
}

std::optional<std::size_t> Quiver::find_vertex(const std::string& label) const
{
    auto it = std::find(vertices_.begin(), vertices_.end(), label);
    if (it == vertices_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> Quiver::find_arrow(const std::string& name) const
{
    for (std::size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].name == name)
            return i;
    return std::nullopt;
}

Path Path::of_arrow(const Quiver& q, std::size_t a)
{
    const Arrow& arr = q.arrow(a);
    return {arr.source, arr.target, {a}};
}

bool PathLess::operator()(const Path& a, const Path& b) const
{
    if (a.length() != b.length())
        return a.length() < b.length();
    if (a.is_stationary())
        return a.source < b.source;
    return a.arrows < b.arrows;
}

std::optional<Path> compose_paths(const Path& p, const Path& q)
{
    if (p.target != q.source)
        return std::nullopt;
    Path r{p.source, q.target, p.arrows};
    r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
    return r;
}

std::vector<Path> enumerate_paths(const Quiver& q, std::size_t max_length)
{
    std::vector<Path> all;
    std::vector<Path> layer;
    for (std::size_t v = 0; v < q.vertex_count(); ++v)
        layer.push_back(Path::stationary(v));
    all = layer;
    for (std::size_t len = 1; len <= max_length; ++len) {
        std::vector<Path> next;
        if (len == 1) {
            for (std::size_t a = 0; a < q.arrow_count(); ++a)
                next.push_back(Path::of_arrow(q, a));
        } else {
            for (const auto& p : layer)
                for (std::size_t a = 0; a < q.arrow_count(); ++a)
                    if (auto c = compose_paths(p, Path::of_arrow(q, a)))
                        next.push_back(std::move(*c));
        }
        if (next.empty())
            break;
        all.insert(all.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return all;
}

std::string path_to_string(const Quiver& q, const Path& p)
{
    if (p.is_stationary())
        return "e_" + q.vertex(p.source);
    std::string s;
    for (std::size_t i = 0; i < p.arrows.size(); ++i) {
        if (i)
            s += '*';
        s += q.arrow(p.arrows[i]).name;
    }
    return s;
}

namespace {

std::string quoted(const std::string& s)
{
    std::string r = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            r += '\\';
        r += c;
    }
    return r + "\"";
}

} // namespace

std::string emit_dot(const Quiver& q)
{
    std::ostringstream os;
    os << "digraph Q {\n";
    for (const auto& v : q.vertices())
        os << "  " << quoted(v) << ";\n";
    for (const auto& a : q.arrows())
        os << "  " << quoted(q.vertex(a.source)) << " -> " << quoted(q.vertex(a.target))
           << " [label=" << quoted(a.name) << "];\n";
    os << "}\n";
    return os.str();
}

} // namespace defext
