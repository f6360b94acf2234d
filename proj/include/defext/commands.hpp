#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "defext/error.hpp"
#include "defext/ext_deformed.hpp"
#include "defext/session.hpp"
#include "json.hpp"

namespace defext {

/// Exit status, plain-text report and the same report as JSON.
struct CommandResult {
    int exit_code = 0;
    std::string text;
    nlohmann::ordered_json json;
};

enum class Over { Base, Deformed };
enum class ResolveMethod { Generic, Theorem };

/// Exit code for an exception escaping a command: 2 for input errors, 1 otherwise.
int exit_code_for(const Error& e);

CommandResult cmd_alg_check(const Session& s);
CommandResult cmd_cocycle_check(const Session& s);
CommandResult cmd_resolve(const Session& s, const std::string& simple, Over over, std::size_t N, ResolveMethod method);
CommandResult cmd_star_check(const Session& s, const std::string& simple, std::size_t N);
/// S is the given simple, or the sum of all simples when `simple` is empty.
CommandResult cmd_ext_dims(const Session& s, Over over, std::size_t N, const std::string& simple = "");
CommandResult cmd_ext_basis(const Session& s, std::size_t n);
CommandResult cmd_yoneda(const Session& s, const std::string& h, const std::string& g, ProductMethod method);
CommandResult cmd_corollary_check(const Session& s, std::size_t N);
CommandResult cmd_emit_dot(const Session& s);
CommandResult cmd_deform_info(const Session& s);

/// `n:[c c|c|...]`: degree, then per-k coordinate blocks; blanks or commas separate scalars.
DeformedExtClass parse_class(const DeformedExt& E, const Field& field, const std::string& text);
std::string format_class(const DeformedExtClass& c);

/// Resolution of the sum of all simples over A, to degree N.
std::shared_ptr<const Resolution> semisimple_resolution(const QuotientAlgebra& A, std::size_t N);
/// Ext over A_f of the sum of all simples through the explicit complex; throws
/// StarNotCertified without condition (∗).
DeformedExt deformed_ext(const Session& s, std::size_t N);

} // namespace defext
