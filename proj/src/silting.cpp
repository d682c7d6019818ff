#include "silt/silting.hpp"

#include <algorithm>

namespace silt {

namespace {

bool dims_leq(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    for (std::size_t v = 0; v < a.size(); ++v)
        if (a[v] > b[v]) return false;
    return true;
}

Vec flatten(const RepMap& h) {
    Vec out;
    for (const auto& c : h.components)
        for (std::size_t i = 0; i < c.rows(); ++i) {
            auto r = c.row(i);
            out.insert(out.end(), r.begin(), r.end());
        }
    return out;
}

std::size_t span_rank(const Field& f, const std::vector<const Vec*>& vecs, std::size_t len) {
    if (vecs.empty() || len == 0) return 0;
    Matrix m(f, vecs.size(), len);
    for (std::size_t i = 0; i < vecs.size(); ++i)
        for (std::size_t j = 0; j < len; ++j) m.at(i, j) = (*vecs[i])[j];
    return rank(m);
}

} // namespace

std::optional<std::size_t> Registry::find_locked(const Rep& m, const GVector& g) const {
    auto it = by_key_.find({m.dims(), g});
    if (it == by_key_.end()) return std::nullopt;
    for (auto id : it->second)
        if (is_isomorphic(entries_[id]->module, m)) return id;
    return std::nullopt;
}

std::size_t Registry::get_or_insert(const Rep& m) {
    if (m.algebra() != algebra_) throw Error("registry: module over a different algebra");
    TwoTermComplex pres = min_projective_presentation(m);
    GVector g = g_vector(pres);
    std::unique_lock lock(mutex_);
    if (auto id = find_locked(m, g)) return *id;
    const std::size_t id = entries_.size();
    by_key_[{m.dims(), g}].push_back(id);
    entries_.push_back(std::make_unique<const RegistryEntry>(RegistryEntry{m, std::move(g), std::move(pres)}));
    return id;
}

std::optional<std::size_t> Registry::find(const Rep& m) const {
    GVector g = g_vector(min_projective_presentation(m));
    std::shared_lock lock(mutex_);
    return find_locked(m, g);
}

const RegistryEntry& Registry::at(std::size_t id) const {
    std::shared_lock lock(mutex_);
    if (id >= entries_.size()) throw Error("registry: unknown id " + std::to_string(id));
    return *entries_[id];
}

std::size_t Registry::size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
}

void SiltingPair::canonicalize() {
    std::sort(summands.begin(), summands.end());
    std::sort(proj_part.begin(), proj_part.end());
}

PairModules PairModules::make(AlgebraPtr a, std::vector<Rep> summands, std::vector<std::size_t> proj_part) {
    PairModules p{std::move(a), std::move(summands), std::move(proj_part), {}, {}};
    std::sort(p.proj_part.begin(), p.proj_part.end());
    p.sum = direct_sum(p.summands, p.algebra);
    p.presentation = TwoTermComplex::zero(p.algebra);
    for (const auto& s : p.summands) p.presentation = direct_sum(p.presentation, min_projective_presentation(s));
    return p;
}

PairModules PairModules::from_ids(const Registry& reg, const SiltingPair& pair) {
    PairModules p{reg.algebra(), {}, pair.proj_part, {}, TwoTermComplex::zero(reg.algebra())};
    for (auto id : pair.summands) {
        const auto& e = reg.at(id);
        p.summands.push_back(e.module);
        p.presentation = direct_sum(p.presentation, e.presentation);
    }
    p.sum = direct_sum(p.summands, p.algebra);
    return p;
}

bool hom_d_surjective(const TwoTermComplex& d, const Rep& n) {
    std::size_t rows = 0, cols = 0;
    std::vector<std::size_t> row_off, col_off;
    for (auto v : d.degree_minus1) {
        row_off.push_back(rows);
        rows += n.dim(v);
    }
    if (rows == 0) return true;
    for (auto v : d.degree0) {
        col_off.push_back(cols);
        cols += n.dim(v);
    }
    if (cols < rows) return false;
    Matrix m(n.field(), rows, cols);
    for (std::size_t r = 0; r < d.degree0.size(); ++r)
        for (std::size_t c = 0; c < d.degree_minus1.size(); ++c) {
            if (n.dim(d.degree0[r]) == 0 || n.dim(d.degree_minus1[c]) == 0) continue;
            m.set_block(row_off[c], col_off[r], n.action(d.d[r][c], d.degree0[r], d.degree_minus1[c]));
        }
    return rank(m) == rows;
}

bool is_presilting_module(const Rep& m) { return hom_d_surjective(min_projective_presentation(m), m); }

Validation validate_silting_pair(const PairModules& pair) {
    const auto& a = pair.algebra;
    const std::size_t n = a->num_vertices();
    auto fail = [](std::string why) { return Validation{false, std::move(why)}; };
    for (std::size_t i = 0; i < pair.summands.size(); ++i) {
        if (!is_indecomposable(pair.summands[i])) return fail("summand " + std::to_string(i) + " is not indecomposable");
        for (std::size_t j = 0; j < i; ++j)
            if (is_isomorphic(pair.summands[i], pair.summands[j]))
                return fail("summands " + std::to_string(j) + " and " + std::to_string(i) + " are isomorphic");
    }
    for (auto v : pair.proj_part)
        if (v >= n) return fail("projective part names an unknown vertex");
    if (std::adjacent_find(pair.proj_part.begin(), pair.proj_part.end()) != pair.proj_part.end())
        return fail("projective part repeats a vertex");
    if (pair.summands.size() + pair.proj_part.size() != n) return fail("|M| + |P| differs from the number of vertices");
    for (std::size_t v = 0; v < n; ++v) {
        bool in_p = std::find(pair.proj_part.begin(), pair.proj_part.end(), v) != pair.proj_part.end();
        if (in_p != (pair.sum.dim(v) == 0)) return fail("support of M does not match the projective part at vertex " + std::to_string(v));
    }
    if (!hom_d_surjective(pair.presentation, pair.sum)) return fail("M is not presilting");
    for (std::size_t v = 0; v < n; ++v) {
        auto approx = left_minimal_approximation(projective_module(a, v), pair.summands);
        Rep c = cokernel(approx.map).module;
        if (!decompose_against(c, pair.summands))
            return fail("cokernel of the add M approximation of P_" + std::to_string(v) + " is not in add M");
    }
    return {};
}

Validation validate_silting_pair(const Registry& reg, const SiltingPair& pair) {
    return validate_silting_pair(PairModules::from_ids(reg, pair));
}

Approximation left_minimal_approximation(const Rep& n, std::span<const Rep> targets) {
    const auto& a = n.algebra();
    const Field& f = n.field();
    struct Copy {
        std::size_t target;
        RepMap map;
        std::vector<Vec> composites;  // flattened g o map for every target u and basis g of Hom(t, u)
        std::vector<std::size_t> composite_target;
    };
    std::vector<Copy> copies;
    for (std::size_t t = 0; t < targets.size(); ++t)
        for (auto& h : hom_basis(n, targets[t])) copies.push_back({t, std::move(h), {}, {}});
    std::vector<std::size_t> need(targets.size()), length(targets.size());
    for (std::size_t u = 0; u < targets.size(); ++u) {
        need[u] = hom_dim(n, targets[u]);
        for (std::size_t v = 0; v < n.dims().size(); ++v) length[u] += n.dim(v) * targets[u].dim(v);
    }
    std::vector<std::vector<std::vector<RepMap>>> between(targets.size(), std::vector<std::vector<RepMap>>(targets.size()));
    for (std::size_t t = 0; t < targets.size(); ++t)
        for (std::size_t u = 0; u < targets.size(); ++u) between[t][u] = hom_basis(targets[t], targets[u]);
    for (auto& c : copies)
        for (std::size_t u = 0; u < targets.size(); ++u)
            for (const auto& g : between[c.target][u]) {
                c.composites.push_back(flatten(g.compose_after(c.map)));
                c.composite_target.push_back(u);
            }

    std::vector<bool> active(copies.size(), true);
    auto approximates = [&]() {
        for (std::size_t u = 0; u < targets.size(); ++u) {
            std::vector<const Vec*> vecs;
            for (std::size_t k = 0; k < copies.size(); ++k) {
                if (!active[k]) continue;
                for (std::size_t i = 0; i < copies[k].composites.size(); ++i)
                    if (copies[k].composite_target[i] == u) vecs.push_back(&copies[k].composites[i]);
            }
            if (span_rank(f, vecs, length[u]) != need[u]) return false;
        }
        return true;
    };
    for (std::size_t k = 0; k < copies.size(); ++k) {
        active[k] = false;
        if (!approximates()) active[k] = true;
    }

    Approximation out;
    std::vector<Rep> parts;
    std::vector<const RepMap*> maps;
    for (std::size_t k = 0; k < copies.size(); ++k) {
        if (!active[k]) continue;
        out.targets.push_back(copies[k].target);
        parts.push_back(targets[copies[k].target]);
        maps.push_back(&copies[k].map);
    }
    Rep e = direct_sum(parts, a);
    out.map = RepMap{n, e, {}};
    for (std::size_t v = 0; v < n.dims().size(); ++v) {
        Matrix comp(f, 0, n.dim(v));
        for (const auto* m : maps) comp = vstack(comp, m->components[v]);
        out.map.components.push_back(std::move(comp));
    }
    return out;
}

bool pair_leq(const PairModules& a, const PairModules& b) {
    for (auto v : b.proj_part)
        if (a.sum.dim(v) != 0) return false;
    return hom_d_surjective(b.presentation, a.sum);
}

bool pair_leq(const Registry& reg, const SiltingPair& a, const SiltingPair& b) {
    return pair_leq(PairModules::from_ids(reg, a), PairModules::from_ids(reg, b));
}

std::optional<PairModules> left_mutation(const PairModules& pair, std::size_t at) {
    if (at >= pair.summands.size()) throw Error("left_mutation: summand index out of range");
    const auto& a = pair.algebra;
    std::vector<Rep> others;
    for (std::size_t i = 0; i < pair.summands.size(); ++i)
        if (i != at) others.push_back(pair.summands[i]);
    auto approx = left_minimal_approximation(pair.summands[at], others);
    Rep c = cokernel(approx.map).module;
    std::optional<PairModules> cand;
    if (!c.is_zero()) {
        others.push_back(std::move(c));
        cand = PairModules::make(a, std::move(others), pair.proj_part);
    } else {
        Rep rest = direct_sum(others, a);
        std::vector<std::size_t> free;
        for (std::size_t v = 0; v < a->num_vertices(); ++v)
            if (rest.dim(v) == 0 && std::find(pair.proj_part.begin(), pair.proj_part.end(), v) == pair.proj_part.end())
                free.push_back(v);
        if (free.empty()) return std::nullopt;
        if (free.size() > 1) throw Error("left_mutation: several vertices leave the support; input pair is not silting");
        auto proj = pair.proj_part;
        proj.push_back(free.front());
        cand = PairModules::make(a, std::move(others), std::move(proj));
    }
    if (!validate_silting_pair(*cand)) return std::nullopt;
    if (!pair_leq(*cand, pair) || pair_leq(pair, *cand)) return std::nullopt;
    return cand;
}

std::optional<SiltingPair> mutate_left(Registry& reg, const SiltingPair& pair, std::size_t at) {
    auto res = left_mutation(PairModules::from_ids(reg, pair), at);
    if (!res) return std::nullopt;
    SiltingPair out;
    for (const auto& s : res->summands) out.summands.push_back(reg.get_or_insert(s));
    out.proj_part = res->proj_part;
    out.canonicalize();
    return out;
}

bool is_sincere_silting(const SiltingPair& pair, std::size_t num_vertices) {
    return pair.proj_part.empty() && pair.summands.size() == num_vertices;
}

TwoTermComplex complex_of(const PairModules& pair) {
    return direct_sum(pair.presentation, TwoTermComplex::stalk1(pair.algebra, pair.proj_part));
}

TwoTermComplex complex_of(const Registry& reg, const SiltingPair& pair) {
    return complex_of(PairModules::from_ids(reg, pair));
}

SiltingPair pair_of(const Registry& reg, const TwoTermComplex& p) {
    TwoTermComplex r = minimality_reduce(p);
    Rep h = h0(r);
    std::vector<std::size_t> ids;
    std::vector<Rep> candidates;
    for (std::size_t id = 0; id < reg.size(); ++id) {
        const auto& e = reg.at(id);
        if (dims_leq(e.module.dims(), h.dims())) {
            ids.push_back(id);
            candidates.push_back(e.module);
        }
    }
    auto mult = decompose_against(h, candidates);
    if (!mult) throw Error("pair_of: H0 is not a sum of registered indecomposables");
    SiltingPair out;
    for (std::size_t i = 0; i < ids.size(); ++i)
        if ((*mult)[i] > 0) out.summands.push_back(ids[i]);
    auto rho = rho1(r);
    for (std::size_t v = 0; v < rho.size(); ++v)
        if (rho[v] > 0) out.proj_part.push_back(v);
    out.canonicalize();
    return out;
}

std::vector<GVector> g_vector_matrix(const PairModules& pair) {
    std::vector<GVector> rows;
    for (const auto& s : pair.summands) rows.push_back(g_vector(min_projective_presentation(s)));
    for (auto v : pair.proj_part) {
        GVector g(pair.algebra->num_vertices(), 0);
        g[v] = -1;
        rows.push_back(std::move(g));
    }
    return rows;
}

std::int64_t g_vector_determinant(const PairModules& pair) {
    auto rows = g_vector_matrix(pair);
    for (const auto& r : rows)
        if (r.size() != rows.size()) throw Error("g-vector matrix is not square");
    return integer_determinant(rows);
}

} // namespace silt
