#include "silt/rep.hpp"

namespace silt {

Rep::Rep(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> arrow_maps)
    : algebra_(std::move(algebra)), dims_(std::move(dims)), maps_(std::move(arrow_maps)) {
    const Quiver& q = algebra_->quiver();
    if (dims_.size() != q.vertices.size()) throw Error("Rep: one dimension per vertex required");
    if (maps_.size() != q.arrows.size()) throw Error("Rep: one matrix per arrow required");
    for (std::size_t a = 0; a < maps_.size(); ++a) {
        const auto& arrow = q.arrows[a];
        if (maps_[a].rows() != dims_[arrow.target] || maps_[a].cols() != dims_[arrow.source])
            throw Error("Rep: arrow map '" + arrow.label + "' has the wrong shape");
        if (maps_[a].field() != algebra_->field()) throw Error("Rep: field mismatch");
    }
    actions_.reserve(algebra_->dimension());
    for (std::size_t i = 0; i < algebra_->dimension(); ++i) {
        const auto& w = algebra_->basis_path(i);
        actions_.push_back(path_action(w.source, w.arrows));
    }
}

Rep Rep::zero(AlgebraPtr algebra) {
    const Quiver& q = algebra->quiver();
    std::vector<Matrix> maps(q.arrows.size(), Matrix(algebra->field(), 0, 0));
    std::vector<std::size_t> dims(q.vertices.size(), 0);
    return Rep(std::move(algebra), std::move(dims), std::move(maps));
}

std::size_t Rep::total_dim() const {
    std::size_t t = 0;
    for (auto d : dims_) t += d;
    return t;
}

Matrix Rep::path_action(std::size_t source, std::span<const std::size_t> arrows) const {
    Matrix m = Matrix::identity(field(), dims_[source]);
    for (auto a : arrows) m = maps_[a] * m;
    return m;
}

Matrix Rep::action(const Element& x, std::size_t s, std::size_t t) const {
    Matrix m(field(), dims_[t], dims_[s]);
    for (auto i : algebra_->basis_between(s, t))
        if (x[i] != 0) m = m + actions_[i].scaled(x[i]);
    return m;
}

bool Rep::check_relations() const {
    const Quiver& q = algebra_->quiver();
    for (const auto& rel : algebra_->presentation().relations) {
        if (rel.empty()) continue;
        std::size_t s = q.arrows[rel.front().arrows.front()].source;
        std::size_t t = q.arrows[rel.front().arrows.back()].target;
        Matrix acc(field(), dims_[t], dims_[s]);
        for (const auto& term : rel)
            acc = acc + path_action(s, term.arrows).scaled(field().reduce(term.coefficient));
        if (!acc.is_zero()) return false;
    }
    // paths of length >= bound are zero in the algebra
    std::size_t bound = algebra_->presentation().nilpotency_bound;
    std::vector<std::pair<std::size_t, Matrix>> layer;
    for (std::size_t v = 0; v < dims_.size(); ++v) layer.emplace_back(v, Matrix::identity(field(), dims_[v]));
    for (std::size_t len = 1; len <= bound; ++len) {
        std::vector<std::pair<std::size_t, Matrix>> next;
        for (const auto& [end, m] : layer)
            for (std::size_t a = 0; a < q.arrows.size(); ++a)
                if (q.arrows[a].source == end) {
                    Matrix nm = maps_[a] * m;
                    if (!nm.is_zero()) next.emplace_back(q.arrows[a].target, std::move(nm));
                }
        layer = std::move(next);
    }
    return layer.empty();
}

bool RepMap::commutes() const {
    const Quiver& q = source.algebra()->quiver();
    if (components.size() != q.vertices.size()) return false;
    for (std::size_t v = 0; v < components.size(); ++v)
        if (components[v].rows() != target.dim(v) || components[v].cols() != source.dim(v)) return false;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        const auto& arrow = q.arrows[a];
        if (!(target.arrow_map(a) * components[arrow.source] == components[arrow.target] * source.arrow_map(a)))
            return false;
    }
    return true;
}

bool RepMap::is_zero() const {
    for (const auto& c : components)
        if (!c.is_zero()) return false;
    return true;
}

RepMap RepMap::compose_after(const RepMap& first) const {
    RepMap out{first.source, target, {}};
    for (std::size_t v = 0; v < components.size(); ++v) out.components.push_back(components[v] * first.components[v]);
    return out;
}

RepMap identity_map(const Rep& m) {
    RepMap out{m, m, {}};
    for (auto d : m.dims()) out.components.push_back(Matrix::identity(m.field(), d));
    return out;
}

RepMap zero_map(const Rep& from, const Rep& to) {
    RepMap out{from, to, {}};
    for (std::size_t v = 0; v < from.dims().size(); ++v)
        out.components.emplace_back(from.field(), to.dim(v), from.dim(v));
    return out;
}

Rep projective_module(const AlgebraPtr& a, std::size_t v) {
    const std::size_t n = a->num_vertices();
    if (v >= n) throw Error("projective_module: unknown vertex " + std::to_string(v));
    const Quiver& q = a->quiver();
    std::vector<std::size_t> dims(n);
    for (std::size_t w = 0; w < n; ++w) dims[w] = a->basis_between(v, w).size();
    std::vector<Matrix> maps;
    for (std::size_t b = 0; b < q.arrows.size(); ++b) {
        const auto& arrow = q.arrows[b];
        Matrix m(a->field(), dims[arrow.target], dims[arrow.source]);
        Element arrow_elem = a->expand_path(arrow.source, std::vector<std::size_t>{b});
        auto from = a->basis_between(v, arrow.source);
        for (std::size_t j = 0; j < from.size(); ++j) {
            Element prod = a->multiply(a->unit(from[j]), arrow_elem);
            for (auto k : a->basis_between(v, arrow.target)) m.at(a->local_index(k), j) = prod[k];
        }
        maps.push_back(std::move(m));
    }
    return Rep(a, std::move(dims), std::move(maps));
}

Rep simple_module(const AlgebraPtr& a, std::size_t v) {
    const std::size_t n = a->num_vertices();
    if (v >= n) throw Error("simple_module: unknown vertex " + std::to_string(v));
    std::vector<std::size_t> dims(n, 0);
    dims[v] = 1;
    std::vector<Matrix> maps;
    for (const auto& arrow : a->quiver().arrows) maps.emplace_back(a->field(), dims[arrow.target], dims[arrow.source]);
    return Rep(a, std::move(dims), std::move(maps));
}

Rep direct_sum(const std::vector<Rep>& parts, const AlgebraPtr& a) {
    const Quiver& q = a->quiver();
    std::vector<std::size_t> dims(q.vertices.size(), 0);
    for (const auto& p : parts)
        for (std::size_t v = 0; v < dims.size(); ++v) dims[v] += p.dim(v);
    std::vector<Matrix> maps;
    for (std::size_t b = 0; b < q.arrows.size(); ++b) {
        const auto& arrow = q.arrows[b];
        Matrix m(a->field(), dims[arrow.target], dims[arrow.source]);
        std::size_t r0 = 0, c0 = 0;
        for (const auto& p : parts) {
            m.set_block(r0, c0, p.arrow_map(b));
            r0 += p.dim(arrow.target);
            c0 += p.dim(arrow.source);
        }
        maps.push_back(std::move(m));
    }
    return Rep(a, std::move(dims), std::move(maps));
}

Rep projective_sum(const AlgebraPtr& a, const std::vector<std::size_t>& vertices) {
    std::vector<Rep> parts;
    for (auto v : vertices) parts.push_back(projective_module(a, v));
    return direct_sum(parts, a);
}

RepMap projective_map(const AlgebraPtr& a, const std::vector<std::size_t>& rows,
                      const std::vector<std::size_t>& cols,
                      const std::vector<std::vector<Element>>& entries) {
    const std::size_t n = a->num_vertices();
    RepMap out{projective_sum(a, cols), projective_sum(a, rows), {}};
    for (std::size_t w = 0; w < n; ++w) {
        Matrix comp(a->field(), out.target.dim(w), out.source.dim(w));
        std::size_t r0 = 0;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            auto to = a->basis_between(rows[r], w);
            std::size_t c0 = 0;
            for (std::size_t c = 0; c < cols.size(); ++c) {
                auto from = a->basis_between(cols[c], w);
                const Element& x = entries[r][c];
                if (!a->is_zero(x)) {
                    for (std::size_t j = 0; j < from.size(); ++j) {
                        Element prod = a->multiply(x, a->unit(from[j]));
                        for (auto k : to) comp.at(r0 + a->local_index(k), c0 + j) = prod[k];
                    }
                }
                c0 += from.size();
            }
            r0 += to.size();
        }
        out.components.push_back(std::move(comp));
    }
    return out;
}

} // namespace silt
