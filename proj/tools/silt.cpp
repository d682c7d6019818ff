// silt: command-line front end for the silting library.
//
// Exit codes: 0 success (including INCOMPLETE explorations), 2 verification failure,
// 3 input error.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "silt/algebra_io.hpp"
#include "silt/builtins.hpp"
#include "silt/explorer.hpp"
#include "silt/orders.hpp"

using namespace silt;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitInputError = 3;

struct RunConfig {
    std::string builtin;
    std::size_t n = 1;
    std::string file;
    std::uint32_t prime = Field::kDefaultPrime;
    std::size_t max_nodes = 100000;
    std::size_t max_depth = 100000;
    std::string format = "text";
    std::string out;
    std::string cache;
    std::size_t workers = 0;
};

void add_source_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--builtin", cfg.builtin, "hereditary | bass_v | auslander_bass_v | triangular_a2");
    cmd->add_option("--n", cfg.n, "family parameter");
    cmd->add_option("--file", cfg.file, "algebra JSON file");
    cmd->add_option("--prime", cfg.prime, "field characteristic (odd prime)");
}

void add_run_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--max-nodes", cfg.max_nodes, "stop after this many silting modules")->check(CLI::PositiveNumber);
    cmd->add_option("--max-depth", cfg.max_depth, "stop after this many mutation steps from Lambda")->check(CLI::PositiveNumber);
    cmd->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "dot", "json"}));
    cmd->add_option("--out", cfg.out, "write DOT/JSON here instead of stdout");
    cmd->add_option("--cache", cfg.cache, "cache directory (SILT_CACHE overrides)");
    cmd->add_option("--workers", cfg.workers, "explorer threads, 0 = all cores");
}

struct Source {
    AlgebraPresentation presentation;
    OrderFamily family = OrderFamily::custom;
};

Source load_source(const RunConfig& cfg) {
    if (cfg.builtin.empty() == cfg.file.empty()) throw Error("give exactly one of --builtin NAME or --file PATH");
    Field f(cfg.prime);
    if (!cfg.file.empty()) {
        auto p = read_presentation_file(cfg.file);
        p.field = f;
        return {std::move(p), OrderFamily::custom};
    }
    if (cfg.builtin == "custom") throw Error("--builtin custom needs --file instead");
    return {builtin_presentation(cfg.builtin, cfg.n, f), family_from_name(cfg.builtin)};
}

std::string path_name(const FiniteDimAlgebra& a, const PathWord& w) {
    if (w.arrows.empty()) return "e" + a.quiver().vertices[w.source];
    std::string s;
    for (auto x : w.arrows) s += (s.empty() ? "" : "*") + a.quiver().arrows[x].label;
    return s;
}

std::string dims_text(const std::vector<std::size_t>& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream o(cfg.out);
    if (!o) throw Error("cannot write '" + cfg.out + "'");
    o << text;
}

int cmd_algebra_show(const RunConfig& cfg) {
    Source src = load_source(cfg);
    auto a = FiniteDimAlgebra::build(src.presentation);
    const auto& q = a->quiver();
    if (cfg.format == "json") {
        json j = presentation_to_json(a->presentation());
        j["dimension"] = a->dimension();
        json basis = json::array();
        for (std::size_t i = 0; i < a->dimension(); ++i) basis.push_back(path_name(*a, a->basis_path(i)));
        j["basis"] = basis;
        emit(cfg, j.dump(2) + "\n");
        return kExitOk;
    }
    std::ostringstream out;
    out << "algebra: " << q.vertices.size() << " vertices, " << q.arrows.size() << " arrows, "
        << a->presentation().relations.size() << " relations, nilpotency bound "
        << a->presentation().nilpotency_bound << ", p = " << a->field().prime() << "\n";
    out << "dimension " << a->dimension() << "\n";
    out << "basis paths:\n";
    for (std::size_t s = 0; s < a->num_vertices(); ++s)
        for (std::size_t t = 0; t < a->num_vertices(); ++t) {
            auto paths = a->basis_between(s, t);
            if (paths.empty()) continue;
            out << "  " << q.vertices[s] << " -> " << q.vertices[t] << ":";
            for (auto i : paths) out << " " << path_name(*a, a->basis_path(i));
            out << "\n";
        }
    out << "projective dimension vectors:\n";
    for (std::size_t v = 0; v < a->num_vertices(); ++v)
        out << "  P" << q.vertices[v] << " " << dims_text(projective_module(a, v).dims()) << "\n";
    emit(cfg, out.str());
    return kExitOk;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string cache_dir(const RunConfig& cfg) {
    if (const char* env = std::getenv("SILT_CACHE"); env && *env) return env;
    return cfg.cache;
}

struct Exploration {
    json poset;
    bool hasse = false;
    bool from_cache = false;
};

Exploration run_explore(const RunConfig& cfg, const AlgebraPresentation& p) {
    const std::string dir = cache_dir(cfg);
    std::filesystem::path file;
    if (!dir.empty()) {
        std::string key = presentation_to_json(p).dump() + "|p=" + std::to_string(p.field.prime()) +
                          "|nodes=" + std::to_string(cfg.max_nodes) + "|depth=" + std::to_string(cfg.max_depth);
        char name[40];
        std::snprintf(name, sizeof name, "explore-%016llx.json", static_cast<unsigned long long>(fnv1a(key)));
        file = std::filesystem::path(dir) / name;
        std::ifstream in(file);
        if (in) {
            try {
                json c = json::parse(in);
                return {c.at("poset"), c.at("hasse_check").get<bool>(), true};
            } catch (const json::exception&) {
                // unreadable cache entries are recomputed
            }
        }
    }
    auto eq = explore(FiniteDimAlgebra::build(p), {cfg.max_nodes, cfg.max_depth}, cfg.workers);
    Exploration ex{to_json(eq), eq.complete && hasse_check(eq, cfg.workers), false};
    if (!file.empty()) {
        std::filesystem::create_directories(file.parent_path());
        std::ofstream o(file);
        o << json{{"poset", ex.poset}, {"hasse_check", ex.hasse}}.dump() << "\n";
    }
    return ex;
}

int cmd_explore(const RunConfig& cfg) {
    Source src = load_source(cfg);
    FiniteDimAlgebra::build(src.presentation);  // validate before touching the cache
    Exploration ex = run_explore(cfg, src.presentation);
    PosetSummary s = poset_summary(ex.poset);
    if (cfg.format == "json") {
        emit(cfg, ex.poset.dump(2) + "\n");
        return kExitOk;
    }
    if (cfg.format == "dot") {
        emit(cfg, to_dot(s));
        return kExitOk;
    }
    auto sincere = s.sincere();
    std::ostringstream out;
    if (!s.complete) out << "INCOMPLETE: limits reached (max-nodes " << cfg.max_nodes << ", max-depth " << cfg.max_depth << ")\n";
    out << s.proj_part.size() << " silting modules\n";
    out << s.edges.size() << " exchange edges\n";
    out << std::count(sincere.begin(), sincere.end(), true) << " sincere\n";
    if (s.complete) out << "hasse check: " << (ex.hasse ? "pass" : "FAIL") << "\n";
    if (ex.from_cache) out << "(cached)\n";
    std::cout << out.str();
    return s.complete && !ex.hasse ? kExitVerifyFailed : kExitOk;
}

int cmd_tors(const RunConfig& cfg) {
    Source src = load_source(cfg);
    if (!supports_tors_assembly(src.family))
        throw Error("refusing to assemble torsion classes for family '" + family_name(src.family) +
                    "': the finite-length test (non-sincere silting modules) is only established for the "
                    "hereditary family");
    Exploration ex = run_explore(cfg, src.presentation);
    PosetSummary s = poset_summary(ex.poset);
    if (!s.complete) {
        std::cout << "INCOMPLETE: exploration hit its limits; torsion classes not assembled\n";
        return kExitOk;
    }
    TorsHasse h = assemble_tors_hasse(src.family, s);
    if (cfg.format == "json") {
        emit(cfg, h.to_json().dump(2) + "\n");
        return kExitOk;
    }
    if (cfg.format == "dot") {
        emit(cfg, h.to_dot());
        return kExitOk;
    }
    std::cout << h.nodes.size() << " torsion classes\n" << h.edges.size() << " cover relations\n";
    return kExitOk;
}

std::size_t binomial(std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

struct Table {
    bool ok = true;
    void row(const std::string& what, const std::string& expected, const std::string& got) {
        bool pass = expected == got;
        ok = ok && pass;
        std::cout << "  " << std::left << std::setw(44) << what << " expected " << std::setw(8) << expected << " got "
                  << std::setw(8) << got << (pass ? " ok" : " MISMATCH") << "\n";
    }
    int finish() const {
        std::cout << (ok ? "PASS" : "FAIL") << "\n";
        return ok ? kExitOk : kExitVerifyFailed;
    }
};

ExchangeQuiver explore_builtin(const AlgebraPresentation& p, const RunConfig& cfg) {
    return explore(FiniteDimAlgebra::build(p), {cfg.max_nodes, cfg.max_depth}, cfg.workers);
}

int verify_hereditary(const RunConfig& cfg, std::size_t max_n) {
    Table t;
    for (std::size_t n = 1; n <= max_n; ++n) {
        auto eq = explore_builtin(hereditary_reduction(n, Field(cfg.prime)), cfg);
        const std::string tag = "hereditary n=" + std::to_string(n);
        t.row(tag + " complete", "yes", eq.complete ? "yes" : "no");
        if (!eq.complete) continue;
        t.row(tag + " silting modules", std::to_string(binomial(2 * n, n)), std::to_string(eq.nodes.size()));
        auto h = assemble_tors_hasse(OrderFamily::hereditary, eq);
        t.row(tag + " torsion classes", std::to_string(3 * binomial(2 * n, n) / 2), std::to_string(h.nodes.size()));
        auto s = classify_sincere(eq);
        auto sincere = std::count(s.begin(), s.end(), true);
        t.row(tag + " sincere = non-sincere", std::to_string(s.size() - sincere), std::to_string(sincere));
        t.row(tag + " exchange = Hasse", "yes", hasse_check(eq, cfg.workers) ? "yes" : "no");
    }
    return t.finish();
}

int verify_weak_order(const RunConfig& cfg, std::size_t max_n) {
    Table t;
    for (std::size_t n = 0; n <= max_n; ++n) {
        auto eq = explore_builtin(auslander_bass_v_reduction(n, Field(cfg.prime)), cfg);
        const std::string tag = "auslander n=" + std::to_string(n);
        t.row(tag + " complete", "yes", eq.complete ? "yes" : "no");
        if (!eq.complete) continue;
        t.row(tag + " silting modules", std::to_string(factorial(n + 2)), std::to_string(eq.nodes.size()));
        bool iso = n + 2 <= kWeakOrderCap && poset_isomorphic(eq.graph(), weak_order_hasse(n + 2).hasse_graph());
        t.row(tag + " poset iso to S_" + std::to_string(n + 2), "yes", iso ? "yes" : "no");
        t.row(tag + " exchange = Hasse", "yes", hasse_check(eq, cfg.workers) ? "yes" : "no");
    }
    return t.finish();
}

int verify_reduction(const RunConfig& cfg, std::size_t n) {
    Table t;
    auto low = explore_builtin(hereditary_truncation(n, 1, Field(cfg.prime)), cfg);
    auto high = explore_builtin(hereditary_truncation(n, 2, Field(cfg.prime)), cfg);
    const std::string tag = "n=" + std::to_string(n);
    t.row(tag + " both complete", "yes", low.complete && high.complete ? "yes" : "no");
    t.row(tag + " level 1 vs level 2 node count", std::to_string(low.nodes.size()), std::to_string(high.nodes.size()));
    t.row(tag + " posets isomorphic", "yes", poset_isomorphic(low.graph(), high.graph()) ? "yes" : "no");
    return t.finish();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"silt: 2-term silting complexes, silting modules and torsion classes"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* algebra = app.add_subcommand("algebra", "inspect an algebra");
    algebra->require_subcommand(1);
    auto* show = algebra->add_subcommand("show", "dimension, basis paths, projectives");
    add_source_options(show, cfg);
    show->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
    show->add_option("--out", cfg.out, "write JSON here instead of stdout");

    auto* exp = app.add_subcommand("explore", "enumerate silting modules by mutation");
    add_source_options(exp, cfg);
    add_run_options(exp, cfg);

    auto* tors = app.add_subcommand("tors", "assemble the torsion-class Hasse diagram");
    add_source_options(tors, cfg);
    add_run_options(tors, cfg);

    auto* verify = app.add_subcommand("verify", "check counts and isomorphisms");
    verify->require_subcommand(1);
    std::size_t max_n = 4, red_n = 2;
    auto* v_her = verify->add_subcommand("hereditary", "silting and torsion counts");
    v_her->add_option("--max-n", max_n, "largest family parameter")->check(CLI::PositiveNumber);
    auto* v_weak = verify->add_subcommand("weak-order", "Auslander order versus the symmetric group");
    v_weak->add_option("--max-n", max_n, "largest family parameter");
    auto* v_red = verify->add_subcommand("reduction", "level 1 versus level 2 reductions");
    v_red->add_option("--n", red_n, "largest number of vertices")->check(CLI::PositiveNumber);
    for (auto* v : {v_her, v_weak, v_red}) {
        v->add_option("--prime", cfg.prime, "field characteristic (odd prime)");
        v->add_option("--workers", cfg.workers, "explorer threads, 0 = all cores");
        v->add_option("--max-nodes", cfg.max_nodes, "stop after this many silting modules")->check(CLI::PositiveNumber);
        v->add_option("--max-depth", cfg.max_depth, "stop after this many mutation steps from Lambda")->check(CLI::PositiveNumber);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (show->parsed()) return cmd_algebra_show(cfg);
        if (exp->parsed()) return cmd_explore(cfg);
        if (tors->parsed()) return cmd_tors(cfg);
        if (v_her->parsed()) return verify_hereditary(cfg, max_n);
        if (v_weak->parsed()) return verify_weak_order(cfg, max_n);
        if (v_red->parsed()) return verify_reduction(cfg, red_n);
    } catch (const Error& e) {
        std::cerr << "silt: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "silt: internal error: " << e.what() << "\n";
        return 1;
    }
    return kExitInputError;
}
