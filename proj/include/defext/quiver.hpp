#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace defext {

struct Arrow {
    std::string name;
    std::size_t source = 0;
    std::size_t target = 0;
};

/// Finite quiver; vertices and arrows keep their declaration order.
class Quiver {
public:
    Quiver() = default;
    /// Throws Error(Semantic) on duplicate labels or dangling endpoints.
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t arrow_count() const { return arrows_.size(); }
    const std::string& vertex(std::size_t v) const { return vertices_.at(v); }
    const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    std::optional<std::size_t> find_vertex(const std::string& label) const;
    std::optional<std::size_t> find_arrow(const std::string& name) const;

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
};

/// A path read in diagram order: arrows[0] first. An empty arrow list is the
/// stationary path at `source` (== `target`).
struct Path {
    std::size_t source = 0;
    std::size_t target = 0;
    std::vector<std::size_t> arrows;

    static Path stationary(std::size_t v) { return {v, v, {}}; }
    static Path of_arrow(const Quiver& q, std::size_t a);

    std::size_t length() const { return arrows.size(); }
    bool is_stationary() const { return arrows.empty(); }
    bool operator==(const Path&) const = default;
};

/// Length first, then lexicographic (vertex index for stationary paths,
/// arrow indices otherwise).
struct PathLess {
    bool operator()(const Path& a, const Path& b) const;
};

/// p then q, or nullopt when target(p) != source(q).
std::optional<Path> compose_paths(const Path& p, const Path& q);

/// All paths of length <= max_length, in PathLess order.
std::vector<Path> enumerate_paths(const Quiver& q, std::size_t max_length);

/// `e_v` or `a*b*c`.
std::string path_to_string(const Quiver& q, const Path& p);

/// Graphviz digraph with one node per vertex and one labelled edge per arrow.
std::string emit_dot(const Quiver& q);

} // namespace defext
