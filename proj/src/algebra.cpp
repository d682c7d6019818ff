#include "silt/algebra.hpp"

#include <algorithm>
#include <set>

namespace silt {

std::size_t Quiver::vertex_index(std::string_view label) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == label) return i;
    throw Error("unknown vertex '" + std::string(label) + "'");
}

std::size_t Quiver::arrow_index(std::string_view label) const {
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].label == label) return i;
    throw Error("unknown arrow '" + std::string(label) + "'");
}

void Quiver::validate() const {
    std::set<std::string> seen;
    for (const auto& v : vertices)
        if (!seen.insert(v).second) throw Error("duplicate vertex label '" + v + "'");
    std::set<std::string> arrow_seen;
    for (const auto& a : arrows) {
        if (!arrow_seen.insert(a.label).second) throw Error("duplicate arrow label '" + a.label + "'");
        if (a.source >= vertices.size() || a.target >= vertices.size())
            throw Error("arrow '" + a.label + "' has an undeclared endpoint");
    }
}

namespace {

struct PathGroupKey {
    std::size_t source, target;
    auto operator<=>(const PathGroupKey&) const = default;
};

} // namespace

std::shared_ptr<const FiniteDimAlgebra> FiniteDimAlgebra::build(AlgebraPresentation p) {
    p.quiver.validate();
    const Quiver& q = p.quiver;
    const Field& field = p.field;
    const std::size_t n = q.vertices.size();
    const std::size_t bound = p.nilpotency_bound;
    if (bound < 1) throw Error("nilpotency bound must be at least 1");

    struct ParsedRelation {
        std::size_t index, source, target, length;
        std::vector<std::pair<Scalar, std::vector<std::size_t>>> terms;
    };
    std::vector<ParsedRelation> rels;
    for (std::size_t ri = 0; ri < p.relations.size(); ++ri) {
        const auto& rel = p.relations[ri];
        const std::string where = "relation " + std::to_string(ri);
        if (rel.empty()) throw Error(where + " is empty");
        ParsedRelation pr{ri, 0, 0, rel.front().arrows.size(), {}};
        for (std::size_t ti = 0; ti < rel.size(); ++ti) {
            const auto& term = rel[ti];
            if (term.arrows.size() < 2) throw Error(where + " has a term of length < 2");
            if (term.arrows.size() != pr.length) throw Error(where + " is not length-homogeneous");
            for (auto a : term.arrows)
                if (a >= q.arrows.size()) throw Error(where + " names an unknown arrow");
            for (std::size_t k = 0; k + 1 < term.arrows.size(); ++k)
                if (q.arrows[term.arrows[k]].target != q.arrows[term.arrows[k + 1]].source)
                    throw Error(where + " has a term whose arrows do not compose");
            std::size_t s = q.arrows[term.arrows.front()].source;
            std::size_t t = q.arrows[term.arrows.back()].target;
            if (ti == 0) {
                pr.source = s;
                pr.target = t;
            } else if (s != pr.source || t != pr.target) {
                throw Error(where + " has terms that are not parallel");
            }
            pr.terms.emplace_back(field.reduce(term.coefficient), term.arrows);
        }
        if (pr.length > bound) throw Error(where + " is longer than the nilpotency bound");
        rels.push_back(std::move(pr));
    }

    // all paths by length, each list in lexicographic arrow order
    std::vector<std::vector<PathWord>> paths(bound + 1);
    for (std::size_t v = 0; v < n; ++v) paths[0].push_back({v, v, {}});
    for (std::size_t len = 1; len <= bound; ++len)
        for (const auto& prev : paths[len - 1])
            for (std::size_t a = 0; a < q.arrows.size(); ++a)
                if (q.arrows[a].source == prev.target) {
                    PathWord w = prev;
                    w.arrows.push_back(a);
                    w.target = q.arrows[a].target;
                    paths[len].push_back(std::move(w));
                }

    struct Group {
        std::vector<std::size_t> members;  // indices into paths[len]
        RrefResult reduced;
        std::vector<bool> in_ideal;
    };
    std::vector<std::map<PathGroupKey, Group>> groups(bound + 1);

    auto result = std::shared_ptr<FiniteDimAlgebra>(new FiniteDimAlgebra());
    FiniteDimAlgebra& alg = *result;
    std::vector<std::pair<std::size_t, std::size_t>> basis_origin;  // (len, index in paths[len])

    for (std::size_t len = 0; len <= bound; ++len) {
        auto& gmap = groups[len];
        for (std::size_t i = 0; i < paths[len].size(); ++i)
            gmap[{paths[len][i].source, paths[len][i].target}].members.push_back(i);
        for (auto& [key, g] : gmap) {
            std::map<std::vector<std::size_t>, std::size_t> column;
            for (std::size_t c = 0; c < g.members.size(); ++c) column[paths[len][g.members[c]].arrows] = c;
            std::vector<Vec> rows;
            for (const auto& r : rels) {
                if (r.length > len) continue;
                for (std::size_t pre = 0; pre + r.length <= len; ++pre) {
                    std::size_t post = len - r.length - pre;
                    for (const auto& u : paths[pre]) {
                        if (u.source != key.source || u.target != r.source) continue;
                        for (const auto& v : paths[post]) {
                            if (v.source != r.target || v.target != key.target) continue;
                            Vec row(g.members.size(), 0);
                            for (const auto& [coef, word] : r.terms) {
                                std::vector<std::size_t> full = u.arrows;
                                full.insert(full.end(), word.begin(), word.end());
                                full.insert(full.end(), v.arrows.begin(), v.arrows.end());
                                auto c = column.at(full);
                                row[c] = field.add(row[c], coef);
                            }
                            rows.push_back(std::move(row));
                        }
                    }
                }
            }
            Matrix m(field, rows.size(), g.members.size());
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
            g.reduced = rref(std::move(m));
            g.in_ideal.assign(g.members.size(), false);
            for (auto pc : g.reduced.pivots) g.in_ideal[pc] = true;
            if (len == bound && g.reduced.pivots.size() != g.members.size())
                throw Error("basis still growing at the nilpotency bound " + std::to_string(bound) +
                            " (relations do not kill all paths of that length)");
        }
        if (len == bound) break;
        for (const auto& [key, g] : gmap) {
            (void)key;
            for (std::size_t c = 0; c < g.members.size(); ++c)
                if (!g.in_ideal[c]) basis_origin.emplace_back(len, g.members[c]);
        }
        // keep basis of each length in lexicographic order
        auto first = std::find_if(basis_origin.begin(), basis_origin.end(),
                                  [len](const auto& o) { return o.first == len; });
        std::sort(first, basis_origin.end());
    }

    alg.basis_.reserve(basis_origin.size());
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> global_of;
    for (const auto& o : basis_origin) {
        global_of[o] = alg.basis_.size();
        alg.basis_.push_back(paths[o.first][o.second]);
    }
    const std::size_t dim = alg.basis_.size();
    alg.between_.assign(n * n, {});
    alg.local_.assign(dim, 0);
    alg.trivial_.assign(n, 0);
    for (std::size_t i = 0; i < dim; ++i) {
        const auto& w = alg.basis_[i];
        auto& list = alg.between_[w.source * n + w.target];
        alg.local_[i] = list.size();
        list.push_back(i);
        if (w.length() == 0) alg.trivial_[w.source] = i;
    }

    for (std::size_t len = 0; len < bound; ++len) {
        for (const auto& [key, g] : groups[len]) {
            (void)key;
            const auto& form = g.reduced.form;
            for (std::size_t c = 0; c < g.members.size(); ++c) {
                const PathWord& w = paths[len][g.members[c]];
                Sparse sp;
                if (!g.in_ideal[c]) {
                    sp.terms.emplace_back(global_of.at({len, g.members[c]}), 1);
                } else {
                    std::size_t row = std::find(g.reduced.pivots.begin(), g.reduced.pivots.end(), c) -
                                      g.reduced.pivots.begin();
                    for (std::size_t j = 0; j < g.members.size(); ++j) {
                        if (g.in_ideal[j] || form.at(row, j) == 0) continue;
                        sp.terms.emplace_back(global_of.at({len, g.members[j]}), field.neg(form.at(row, j)));
                    }
                }
                alg.expansion_[{w.source, w.arrows}] = std::move(sp);
            }
        }
    }

    alg.table_.assign(dim * dim, {});
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            const auto& a = alg.basis_[i];
            const auto& b = alg.basis_[j];
            if (a.target != b.source || a.length() + b.length() >= bound) continue;
            std::vector<std::size_t> word = a.arrows;
            word.insert(word.end(), b.arrows.begin(), b.arrows.end());
            alg.table_[i * dim + j] = alg.expansion_.at({a.source, word});
        }

    alg.pres_ = std::move(p);
    return result;
}

Element FiniteDimAlgebra::unit(std::size_t i) const {
    Element e = zero();
    e.at(i) = 1;
    return e;
}

Element FiniteDimAlgebra::expand_path(std::size_t source, std::span<const std::size_t> arrows) const {
    Element e = zero();
    if (arrows.size() >= pres_.nilpotency_bound) return e;
    auto it = expansion_.find({source, std::vector<std::size_t>(arrows.begin(), arrows.end())});
    if (it == expansion_.end()) throw Error("expand_path: not a path of the quiver");
    for (const auto& [idx, c] : it->second.terms) e[idx] = c;
    return e;
}

Element FiniteDimAlgebra::multiply(const Element& x, const Element& y) const {
    const std::size_t dim = dimension();
    const Field& f = field();
    Element out = zero();
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (y[j] == 0) continue;
            Scalar c = f.mul(x[i], y[j]);
            for (const auto& [k, s] : table_[i * dim + j].terms) out[k] = f.add(out[k], f.mul(c, s));
        }
    }
    return out;
}

Element FiniteDimAlgebra::add(const Element& x, const Element& y) const {
    Element out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = field().add(x[i], y[i]);
    return out;
}

Element FiniteDimAlgebra::sub(const Element& x, const Element& y) const {
    Element out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = field().sub(x[i], y[i]);
    return out;
}

Element FiniteDimAlgebra::scale(const Element& x, Scalar s) const {
    Element out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = field().mul(x[i], s);
    return out;
}

bool FiniteDimAlgebra::is_zero(const Element& x) const {
    return std::all_of(x.begin(), x.end(), [](Scalar s) { return s == 0; });
}

Element FiniteDimAlgebra::local_inverse(const Element& x, std::size_t v) const {
    const Field& f = field();
    Scalar lambda = trivial_coefficient(x, v);
    if (lambda == 0) throw Error("local_inverse: element is not invertible");
    Scalar li = f.inv(lambda);
    // x = lambda (e_v - m) with m nilpotent; x^-1 = lambda^-1 (e_v + m + m^2 + ...)
    Element m = scale(x, f.neg(li));
    m[trivial_[v]] = f.add(m[trivial_[v]], 1);
    Element sum = unit(trivial_[v]);
    Element term = sum;
    for (std::size_t k = 0; k <= pres_.nilpotency_bound; ++k) {
        term = multiply(term, m);
        if (is_zero(term)) break;
        sum = add(sum, term);
    }
    return scale(sum, li);
}

std::size_t FiniteDimAlgebra::paths_from(std::size_t v) const {
    std::size_t total = 0;
    for (std::size_t t = 0; t < num_vertices(); ++t) total += basis_between(v, t).size();
    return total;
}

} // namespace silt
