#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "defext/deformation.hpp"
#include "defext/hochschild.hpp"
#include "defext/path_algebra.hpp"

namespace defext {

/// A parsed session file: algebra, cocycle and options.
struct Session {
    std::string name;
    QuotientPtr algebra;
    Cochain2 cocycle;
    std::size_t degree = 6;
    std::string format = "text";

    /// Throws Parse (with line and column) or Semantic naming the offending identifier.
    static Session parse(std::string_view text, const std::string& source = "<session>");
    static Session load(const std::string& path);

    /// Vertex index for a label.
    std::size_t vertex(const std::string& label) const;
};

/// Embedded example sessions: ex1, ex2, ex3_r3, ex3_r4, ex3_r5, ex4, ex5.
const std::vector<std::pair<std::string, std::string>>& embedded_fixtures();
Session fixture(const std::string& name);

/// An element of A_f written as terms of A, each optionally followed by `*t`.
Element parse_deformed(const QuotientAlgebra& A, const DeformedAlgebra& D, std::string_view text);

} // namespace defext
