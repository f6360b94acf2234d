#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "defext/acceptance.hpp"
#include "defext/commands.hpp"
#include "defext/error.hpp"

using namespace defext;

namespace {

struct Globals {
    std::string session_path;
    std::string fixture_name;
    bool json = false;
};

Session load_session(const Globals& g)
{
    if (!g.session_path.empty() && !g.fixture_name.empty())
        throw Error(ErrorKind::Semantic, "give either --session or --fixture, not both");
    if (!g.session_path.empty())
        return Session::load(g.session_path);
    if (!g.fixture_name.empty())
        return fixture(g.fixture_name);
    throw Error(ErrorKind::Semantic, "no session: pass --session FILE or --fixture NAME");
}

int emit(const CommandResult& r, bool json)
{
    if (json)
        std::cout << r.json.dump(2) << "\n";
    else
        std::cout << r.text;
    return r.exit_code;
}

int emit_error(const Error& e, bool json)
{
    if (json) {
        nlohmann::ordered_json j = {{"error", to_string(e.kind())}, {"message", e.what()}};
        std::cout << j.dump(2) << "\n";
    }
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
}

Over parse_over(const std::string& s) { return s == "deformed" ? Over::Deformed : Over::Base; }

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Infinitesimal deformations of quiver algebras: resolutions and Ext algebras"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--session", g.session_path, "Session file (TOML)");
    app.add_option("--fixture", g.fixture_name, "Embedded example session")
        ->check(CLI::IsMember({"ex1", "ex2", "ex3_r3", "ex3_r4", "ex3_r5", "ex4", "ex5"}));
    app.add_flag("--json", g.json, "Machine-readable report");

    std::optional<std::size_t> degree;
    std::string simple;
    std::string over = "base";

    auto* alg = app.add_subcommand("alg", "Algebra commands")->require_subcommand(1);
    auto* alg_check = alg->add_subcommand("check", "Dimension, basis and ideal basis");

    auto* cocycle = app.add_subcommand("cocycle", "Cocycle commands")->require_subcommand(1);
    auto* cocycle_check = cocycle->add_subcommand("check", "Check the Hochschild 2-cocycle identity");

    auto* resolve = app.add_subcommand("resolve", "Minimal projective resolution of a simple");
    resolve->add_option("--simple", simple, "Vertex label")->required();
    resolve->add_option("--over", over, "base or deformed")->check(CLI::IsMember({"base", "deformed"}));
    resolve->add_option("--degree", degree, "Resolution degree");
    std::string resolve_method = "generic";
    resolve->add_option("--method", resolve_method, "generic or theorem")
        ->check(CLI::IsMember({"generic", "theorem"}));

    auto* star = app.add_subcommand("star", "Condition (*) commands")->require_subcommand(1);
    auto* star_check = star->add_subcommand("check", "Verdict, correction terms and alpha maps");
    star_check->add_option("--simple", simple, "Vertex label")->required();
    star_check->add_option("--degree", degree, "Resolution degree");

    auto* ext = app.add_subcommand("ext", "Ext commands")->require_subcommand(1);
    auto* ext_dims = ext->add_subcommand("dims", "dim Ext^n(S, S) for n <= N");
    ext_dims->add_option("--over", over, "base or deformed")->check(CLI::IsMember({"base", "deformed"}));
    ext_dims->add_option("--degree", degree, "Largest degree");
    ext_dims->add_option("--simple", simple, "Restrict to one simple");
    auto* ext_basis = ext->add_subcommand("basis", "Canonical basis of Ext^n over A_f");
    std::size_t basis_degree = 0;
    ext_basis->add_option("--degree", basis_degree, "Degree n")->required();

    auto* yoneda = app.add_subcommand("yoneda", "Yoneda product of two classes over A_f");
    yoneda->set_help_flag("--help", "Print this help message and exit");
    std::string h_text, g_text;
    yoneda->add_option("--h", h_text, "Left class, n:[c ...|c ...]")->required();
    yoneda->add_option("--g", g_text, "Right class, n:[c ...|c ...]")->required();
    std::string yoneda_method = "formula";
    yoneda->add_option("--method", yoneda_method, "formula, structured or generic")
        ->check(CLI::IsMember({"formula", "structured", "generic"}));

    auto* corollary = app.add_subcommand("corollary", "Twisted tensor product commands")->require_subcommand(1);
    auto* corollary_check = corollary->add_subcommand("check", "Radical-image hypothesis and product formula");
    corollary_check->add_option("--degree", degree, "Largest total degree (default 4)");

    auto* emit_cmd = app.add_subcommand("emit", "Export commands")->require_subcommand(1);
    auto* emit_dot = emit_cmd->add_subcommand("dot", "Quiver as a Graphviz digraph");

    auto* deform = app.add_subcommand("deform", "Deformation commands")->require_subcommand(1);
    auto* deform_info = deform->add_subcommand("info", "Dimensions and nonzero cocycle values");

    auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite and mutation checks");
    bool sequential = false;
    selftest->add_flag("--sequential", sequential, "Run checks one at a time");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (selftest->parsed()) {
            const auto rep = run_selftest(!sequential);
            if (g.json) {
                nlohmann::ordered_json items = nlohmann::ordered_json::array();
                for (const auto& r : rep.results)
                    items.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail},
                                     {"seconds", r.seconds}});
                std::cout << nlohmann::ordered_json{{"command", "selftest"}, {"pass", rep.all_pass()}, {"checks", items}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << rep.text();
            }
            return rep.all_pass() ? 0 : 1;
        }

        const Session s = load_session(g);
        const bool json = g.json || s.format == "json";
        try {
            if (alg_check->parsed())
                return emit(cmd_alg_check(s), json);
            if (cocycle_check->parsed())
                return emit(cmd_cocycle_check(s), json);
            if (resolve->parsed())
                return emit(cmd_resolve(s, simple, parse_over(over), degree.value_or(s.degree),
                                        resolve_method == "theorem" ? ResolveMethod::Theorem : ResolveMethod::Generic),
                            json);
            if (star_check->parsed())
                return emit(cmd_star_check(s, simple, degree.value_or(s.degree)), json);
            if (ext_dims->parsed())
                return emit(cmd_ext_dims(s, parse_over(over), degree.value_or(s.degree), simple), json);
            if (ext_basis->parsed())
                return emit(cmd_ext_basis(s, basis_degree), json);
            if (yoneda->parsed()) {
                const ProductMethod m = yoneda_method == "structured" ? ProductMethod::Structured
                                        : yoneda_method == "generic"  ? ProductMethod::Generic
                                                                      : ProductMethod::Formula;
                return emit(cmd_yoneda(s, h_text, g_text, m), json);
            }
            if (corollary_check->parsed())
                return emit(cmd_corollary_check(s, degree.value_or(4)), json);
            if (emit_dot->parsed())
                return emit(cmd_emit_dot(s), json);
            if (deform_info->parsed())
                return emit(cmd_deform_info(s), json);
        } catch (const Error& e) {
            return emit_error(e, json);
        }
    } catch (const Error& e) {
        return emit_error(e, g.json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
