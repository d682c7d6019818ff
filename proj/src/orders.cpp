#include "silt/orders.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

namespace silt {

OrderFamily family_from_name(const std::string& name) {
    if (name == "hereditary") return OrderFamily::hereditary;
    if (name == "bass_v") return OrderFamily::bass_v;
    if (name == "auslander_bass_v") return OrderFamily::auslander_bass_v;
    if (name == "triangular_a2") return OrderFamily::triangular_a2;
    if (name == "custom") return OrderFamily::custom;
    throw Error("unknown family '" + name + "'");
}

std::string family_name(OrderFamily f) {
    switch (f) {
    case OrderFamily::hereditary: return "hereditary";
    case OrderFamily::bass_v: return "bass_v";
    case OrderFamily::auslander_bass_v: return "auslander_bass_v";
    case OrderFamily::triangular_a2: return "triangular_a2";
    case OrderFamily::custom: return "custom";
    }
    return "custom";
}

bool supports_tors_assembly(OrderFamily f) { return f == OrderFamily::hereditary; }

std::vector<bool> classify_sincere(const ExchangeQuiver& eq) {
    if (!eq.complete) throw Error("classify_sincere: exploration is incomplete");
    std::vector<bool> out;
    for (const auto& n : eq.nodes) out.push_back(is_sincere_silting(n, eq.algebra->num_vertices()));
    return out;
}

TorsHasse assemble_tors_hasse(OrderFamily family, const PosetSummary& eq) {
    if (!supports_tors_assembly(family))
        throw Error("torsion-class assembly is only available for the hereditary family, where silting modules of "
                    "infinite length are exactly the sincere ones; '" + family_name(family) + "' is not covered");
    if (!eq.complete) throw Error("assemble_tors_hasse: exploration is incomplete");
    auto sincere = eq.sincere();
    const std::size_t n = sincere.size();
    TorsHasse h;
    for (std::size_t i = 0; i < n; ++i) h.nodes.push_back({sincere[i] ? TorsHasse::Kind::FacFl : TorsHasse::Kind::Fac, i});
    std::vector<std::size_t> gamma(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        if (sincere[i]) {
            gamma[i] = h.nodes.size();
            h.nodes.push_back({TorsHasse::Kind::Fac, i});
        }
    for (const auto& e : eq.edges) h.edges.emplace_back(e.from, e.to);
    for (const auto& e : eq.edges)
        if (sincere[e.from] && sincere[e.to]) h.edges.emplace_back(gamma[e.from], gamma[e.to]);
    for (std::size_t i = 0; i < n; ++i)
        if (sincere[i]) h.edges.emplace_back(gamma[i], i);
    return h;
}

TorsHasse assemble_tors_hasse(OrderFamily family, const ExchangeQuiver& eq) {
    return assemble_tors_hasse(family, poset_summary(eq));
}

nlohmann::json TorsHasse::to_json() const {
    nlohmann::json ns = nlohmann::json::array();
    for (std::size_t i = 0; i < nodes.size(); ++i)
        ns.push_back({{"id", i}, {"kind", nodes[i].kind == Kind::Fac ? "Fac" : "FacFl"}, {"pair", nodes[i].pair}});
    nlohmann::json es = nlohmann::json::array();
    for (auto [a, b] : edges) es.push_back({a, b});
    return {{"nodes", ns}, {"edges", es}};
}

std::string TorsHasse::to_dot() const {
    std::ostringstream out;
    out << "digraph tors {\n";
    for (std::size_t i = 0; i < nodes.size(); ++i)
        out << "  t" << i << " [label=\"" << (nodes[i].kind == Kind::Fac ? "Fac " : "FacFl ") << nodes[i].pair
            << "\"];\n";
    for (auto [a, b] : edges) out << "  t" << a << " -> t" << b << ";\n";
    out << "}\n";
    return out.str();
}

std::size_t WeakOrderPoset::length(std::size_t i) const {
    const auto& w = elements[i];
    std::size_t inv = 0;
    for (std::size_t a = 0; a < w.size(); ++a)
        for (std::size_t b = a + 1; b < w.size(); ++b) inv += w[a] > w[b];
    return inv;
}

CoverGraph WeakOrderPoset::hasse_graph() const {
    CoverGraph g{elements.size(), {}};
    for (auto [lo, hi] : covers) g.edges.emplace_back(hi, lo);
    return g;
}

WeakOrderPoset weak_order_hasse(std::size_t m, std::size_t cap) {
    if (m < 1) throw Error("weak_order_hasse: degree must be at least 1");
    if (m > cap) throw Error("weak_order_hasse: degree " + std::to_string(m) + " exceeds the cap " + std::to_string(cap));
    WeakOrderPoset p;
    p.degree = m;
    std::vector<int> w(m);
    std::iota(w.begin(), w.end(), 1);
    do {
        p.elements.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < p.elements.size(); ++i) index[p.elements[i]] = i;
    for (std::size_t i = 0; i < p.elements.size(); ++i)
        for (std::size_t s = 0; s + 1 < m; ++s) {
            auto ws = p.elements[i];
            if (ws[s] > ws[s + 1]) continue;
            std::swap(ws[s], ws[s + 1]);
            p.covers.emplace_back(i, index.at(ws));
        }
    return p;
}

namespace {

struct Prepared {
    std::vector<std::vector<std::size_t>> succ, pred;
    std::vector<std::vector<bool>> adj;
};

Prepared prepare(const CoverGraph& g) {
    Prepared p{g.successors(), g.predecessors(), std::vector<std::vector<bool>>(g.size, std::vector<bool>(g.size))};
    for (auto [a, b] : g.edges) p.adj[a][b] = true;
    return p;
}

std::vector<std::size_t> distances(const std::vector<std::vector<std::size_t>>& next, std::size_t start) {
    std::vector<std::size_t> d(next.size(), SIZE_MAX);
    std::deque<std::size_t> q{start};
    d[start] = 0;
    while (!q.empty()) {
        auto u = q.front();
        q.pop_front();
        for (auto w : next[u])
            if (d[w] == SIZE_MAX) {
                d[w] = d[u] + 1;
                q.push_back(w);
            }
    }
    return d;
}

std::size_t unique_with_empty(const std::vector<std::vector<std::size_t>>& lists, const char* what) {
    std::size_t found = SIZE_MAX;
    for (std::size_t i = 0; i < lists.size(); ++i)
        if (lists[i].empty()) {
            if (found != SIZE_MAX) throw Error(std::string("poset_isomorphic: more than one ") + what);
            found = i;
        }
    if (found == SIZE_MAX) throw Error(std::string("poset_isomorphic: no ") + what);
    return found;
}

// Joint colour refinement of both graphs so colours are comparable.
void refine(const Prepared& a, const Prepared& b, std::vector<std::size_t>& ca, std::vector<std::size_t>& cb) {
    std::size_t classes = 0;
    for (;;) {
        using Sig = std::tuple<std::size_t, std::vector<std::size_t>, std::vector<std::size_t>>;
        std::map<Sig, std::size_t> ids;
        auto sig = [](const Prepared& p, const std::vector<std::size_t>& c, std::size_t v) {
            std::vector<std::size_t> s, r;
            for (auto w : p.succ[v]) s.push_back(c[w]);
            for (auto w : p.pred[v]) r.push_back(c[w]);
            std::sort(s.begin(), s.end());
            std::sort(r.begin(), r.end());
            return Sig{c[v], s, r};
        };
        std::vector<Sig> sa, sb;
        for (std::size_t v = 0; v < ca.size(); ++v) sa.push_back(sig(a, ca, v));
        for (std::size_t v = 0; v < cb.size(); ++v) sb.push_back(sig(b, cb, v));
        for (const auto& s : sa) ids.emplace(s, 0);
        for (const auto& s : sb) ids.emplace(s, 0);
        std::size_t k = 0;
        for (auto& [s, id] : ids) id = k++;
        for (std::size_t v = 0; v < ca.size(); ++v) ca[v] = ids.at(sa[v]);
        for (std::size_t v = 0; v < cb.size(); ++v) cb[v] = ids.at(sb[v]);
        if (ids.size() == classes) return;
        classes = ids.size();
    }
}

} // namespace

bool poset_isomorphic(const CoverGraph& ga, const CoverGraph& gb) {
    if (ga.size != gb.size || ga.edges.size() != gb.edges.size()) return false;
    const std::size_t n = ga.size;
    if (n == 0) return true;
    Prepared a = prepare(ga), b = prepare(gb);
    const std::size_t sa = unique_with_empty(a.pred, "source"), sb = unique_with_empty(b.pred, "source");
    const std::size_t ta = unique_with_empty(a.succ, "sink"), tb = unique_with_empty(b.succ, "sink");
    auto da = distances(a.succ, sa), db = distances(b.succ, sb);
    auto ua = distances(a.pred, ta), ub = distances(b.pred, tb);

    std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>, std::size_t> init;
    auto key = [](const Prepared& p, const std::vector<std::size_t>& d, const std::vector<std::size_t>& u, std::size_t v) {
        return std::tuple{p.pred[v].size(), p.succ[v].size(), d[v], u[v]};
    };
    for (std::size_t v = 0; v < n; ++v) {
        init.emplace(key(a, da, ua, v), 0);
        init.emplace(key(b, db, ub, v), 0);
    }
    std::size_t k = 0;
    for (auto& [kk, id] : init) id = k++;
    std::vector<std::size_t> ca(n), cb(n);
    for (std::size_t v = 0; v < n; ++v) {
        ca[v] = init.at(key(a, da, ua, v));
        cb[v] = init.at(key(b, db, ub, v));
    }
    refine(a, b, ca, cb);
    auto hist_a = ca, hist_b = cb;
    std::sort(hist_a.begin(), hist_a.end());
    std::sort(hist_b.begin(), hist_b.end());
    if (hist_a != hist_b) return false;

    // Match vertices of a in breadth-first order from the source.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return da[x] < da[y]; });
    std::vector<std::size_t> map(n, SIZE_MAX);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> extend = [&](std::size_t pos) {
        if (pos == n) return true;
        const std::size_t v = order[pos];
        for (std::size_t w = 0; w < n; ++w) {
            if (used[w] || cb[w] != ca[v]) continue;
            bool ok = true;
            for (std::size_t i = 0; i < pos && ok; ++i) {
                const std::size_t u = order[i];
                ok = a.adj[u][v] == b.adj[map[u]][w] && a.adj[v][u] == b.adj[w][map[u]];
            }
            if (!ok) continue;
            map[v] = w;
            used[w] = true;
            if (extend(pos + 1)) return true;
            used[w] = false;
            map[v] = SIZE_MAX;
        }
        return false;
    };
    return extend(0);
}

} // namespace silt
