#include "silt/explorer.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <thread>

#include "silt/algebra_io.hpp"

namespace silt {

using nlohmann::json;

void parallel_for(std::size_t n, std::size_t workers, const std::function<void(std::size_t)>& f) {
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

std::size_t ExchangeQuiver::max_depth() const {
    return depth.empty() ? 0 : *std::max_element(depth.begin(), depth.end());
}

CoverGraph ExchangeQuiver::graph() const {
    CoverGraph g{nodes.size(), {}};
    for (const auto& e : edges) g.edges.emplace_back(e.from, e.to);
    return g;
}

ExchangeQuiver explore(const AlgebraPtr& a, const ExploreLimits& limits, std::size_t workers) {
    ExchangeQuiver eq;
    eq.algebra = a;
    eq.registry = std::make_shared<Registry>(a);
    eq.complete = true;
    Registry& reg = *eq.registry;

    std::map<SiltingPair, std::size_t> index;
    std::vector<PairModules> modules;
    auto add_node = [&](SiltingPair p, std::size_t d) {
        std::size_t id = eq.nodes.size();
        index.emplace(p, id);
        modules.push_back(PairModules::from_ids(reg, p));
        eq.nodes.push_back(std::move(p));
        eq.depth.push_back(d);
        return id;
    };

    SiltingPair top;
    for (std::size_t v = 0; v < a->num_vertices(); ++v) top.summands.push_back(reg.get_or_insert(projective_module(a, v)));
    top.canonicalize();
    if (limits.max_nodes == 0) {
        eq.complete = false;
        return eq;
    }
    add_node(top, 0);

    std::vector<std::size_t> frontier{0};
    for (std::size_t d = 0; !frontier.empty(); ++d) {
        struct Task {
            std::size_t node, at;
        };
        std::vector<Task> tasks;
        for (auto node : frontier)
            for (std::size_t i = 0; i < eq.nodes[node].summands.size(); ++i) tasks.push_back({node, i});
        std::vector<std::optional<PairModules>> results(tasks.size());
        parallel_for(tasks.size(), workers, [&](std::size_t t) {
            results[t] = left_mutation(modules[tasks[t].node], tasks[t].at);
        });

        std::vector<std::size_t> next;
        for (std::size_t t = 0; t < tasks.size(); ++t) {
            if (!results[t]) continue;
            if (d >= limits.max_depth) {
                eq.complete = false;
                continue;
            }
            SiltingPair p;
            for (const auto& s : results[t]->summands) p.summands.push_back(reg.get_or_insert(s));
            p.proj_part = results[t]->proj_part;
            p.canonicalize();
            auto it = index.find(p);
            std::size_t target;
            if (it != index.end()) {
                target = it->second;
            } else if (eq.nodes.size() >= limits.max_nodes) {
                eq.complete = false;
                continue;
            } else {
                target = add_node(std::move(p), d + 1);
                next.push_back(target);
            }
            const std::size_t from = tasks[t].node;
            eq.edges.push_back({from, target, eq.nodes[from].summands[tasks[t].at]});
        }
        frontier = std::move(next);
    }
    return eq;
}

std::vector<std::vector<bool>> poset_relations(const ExchangeQuiver& eq, std::size_t workers) {
    const std::size_t n = eq.nodes.size();
    std::vector<PairModules> mods;
    for (std::size_t i = 0; i < n; ++i) mods.push_back(eq.modules(i));
    std::vector<std::vector<char>> rows(n, std::vector<char>(n, 0));
    parallel_for(n, workers, [&](std::size_t i) {
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = i == j || pair_leq(mods[i], mods[j]);
    });
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) leq[i][j] = rows[i][j];
    return leq;
}

bool hasse_check(const ExchangeQuiver& eq, std::size_t workers) {
    if (!eq.complete) throw Error("hasse_check: exploration is incomplete");
    const std::size_t n = eq.nodes.size();
    auto leq = poset_relations(eq, workers);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && leq[i][j] && leq[j][i]) return false;
            for (std::size_t k = 0; k < n; ++k)
                if (leq[i][j] && leq[j][k] && !leq[i][k]) return false;
        }
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t hi = 0; hi < n; ++hi)
        for (std::size_t lo = 0; lo < n; ++lo) {
            if (hi == lo || !leq[lo][hi]) continue;
            bool cover = true;
            for (std::size_t k = 0; k < n && cover; ++k)
                if (k != hi && k != lo && leq[lo][k] && leq[k][hi]) cover = false;
            if (cover) covers.emplace_back(hi, lo);
        }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& e : eq.edges) edges.emplace_back(e.from, e.to);
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) return false;
    return edges == covers;
}

namespace {

std::string dims_text(const std::vector<std::size_t>& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
}

} // namespace

std::string to_dot(const ExchangeQuiver& eq) { return to_dot(poset_summary(eq)); }

json to_json(const ExchangeQuiver& eq) {
    json nodes = json::array();
    for (std::size_t i = 0; i < eq.nodes.size(); ++i) {
        json summands = json::array();
        for (auto id : eq.nodes[i].summands) {
            const auto& e = eq.registry->at(id);
            summands.push_back({{"dims", e.module.dims()}, {"gvec", e.gvec}});
        }
        nodes.push_back({{"id", i}, {"summands", summands}, {"proj_part", eq.nodes[i].proj_part}});
    }
    json edges = json::array();
    for (const auto& e : eq.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"at", e.at}});
    return {{"algebra", presentation_to_json(eq.algebra->presentation())},
            {"complete", eq.complete},
            {"nodes", nodes},
            {"edges", edges}};
}

CoverGraph PosetSummary::graph() const {
    CoverGraph g{proj_part.size(), {}};
    for (const auto& e : edges) g.edges.emplace_back(e.from, e.to);
    return g;
}

std::vector<bool> PosetSummary::sincere() const {
    std::vector<bool> out;
    for (std::size_t i = 0; i < proj_part.size(); ++i)
        out.push_back(proj_part[i].empty() && summand_dims[i].size() == num_vertices);
    return out;
}

PosetSummary poset_summary(const json& j) {
    PosetSummary s;
    try {
        s.complete = j.at("complete").get<bool>();
        for (const auto& v : j.at("algebra").at("quiver").at("vertices")) s.vertex_labels.push_back(v.get<std::string>());
        s.num_vertices = s.vertex_labels.size();
        for (const auto& n : j.at("nodes")) {
            if (n.at("id").get<std::size_t>() != s.proj_part.size()) throw Error("poset JSON: node ids out of order");
            std::vector<std::vector<std::size_t>> dims;
            for (const auto& m : n.at("summands")) dims.push_back(m.at("dims").get<std::vector<std::size_t>>());
            s.summand_dims.push_back(std::move(dims));
            s.proj_part.push_back(n.at("proj_part").get<std::vector<std::size_t>>());
        }
        for (const auto& e : j.at("edges"))
            s.edges.push_back({e.at("from").get<std::size_t>(), e.at("to").get<std::size_t>(), e.at("at").get<std::size_t>()});
    } catch (const json::exception& e) {
        throw Error(std::string("poset JSON: ") + e.what());
    }
    return s;
}

PosetSummary poset_summary(const ExchangeQuiver& eq) { return poset_summary(to_json(eq)); }

std::string to_dot(const PosetSummary& s) {
    std::ostringstream out;
    out << "digraph exchange {\n";
    for (std::size_t i = 0; i < s.proj_part.size(); ++i) {
        std::string mods;
        for (const auto& d : s.summand_dims[i]) mods += (mods.empty() ? "" : " ") + dims_text(d);
        std::string proj;
        for (auto v : s.proj_part[i]) proj += (proj.empty() ? "" : ",") + s.vertex_labels.at(v);
        out << "  n" << i << " [label=\"" << i << "\\n" << mods << " | {" << proj << "}\", tooltip=\"" << mods
            << "\"];\n";
    }
    for (const auto& e : s.edges) out << "  n" << e.from << " -> n" << e.to << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace silt
