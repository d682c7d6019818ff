#include "silt/repmod.hpp"

#include <algorithm>
#include <cstdint>

namespace silt {

namespace {

void require_same_algebra(const Rep& a, const Rep& b, const char* op) {
    if (a.algebra() != b.algebra()) throw Error(std::string(op) + ": modules over different algebras");
}

// Commuting-square system for Hom(m, n); unknown (v, i, j) is entry (i, j) of f_v.
struct HomSystem {
    Matrix equations;
    std::vector<std::size_t> offsets;
};

HomSystem hom_system(const Rep& m, const Rep& n) {
    const Quiver& q = m.algebra()->quiver();
    const Field& f = m.field();
    const std::size_t nv = q.vertices.size();
    HomSystem sys;
    sys.offsets.assign(nv + 1, 0);
    for (std::size_t v = 0; v < nv; ++v) sys.offsets[v + 1] = sys.offsets[v] + n.dim(v) * m.dim(v);
    std::size_t eqs = 0;
    for (const auto& a : q.arrows) eqs += n.dim(a.target) * m.dim(a.source);
    sys.equations = Matrix(f, eqs, sys.offsets[nv]);
    auto var = [&](std::size_t v, std::size_t i, std::size_t j) { return sys.offsets[v] + i * m.dim(v) + j; };
    std::size_t row = 0;
    for (std::size_t b = 0; b < q.arrows.size(); ++b) {
        const std::size_t s = q.arrows[b].source, t = q.arrows[b].target;
        const Matrix& nb = n.arrow_map(b);
        const Matrix& mb = m.arrow_map(b);
        // (n_b f_s - f_t m_b)_{ij} = 0
        for (std::size_t i = 0; i < n.dim(t); ++i)
            for (std::size_t j = 0; j < m.dim(s); ++j, ++row) {
                for (std::size_t k = 0; k < n.dim(s); ++k) {
                    Scalar c = nb.at(i, k);
                    if (c != 0) {
                        Scalar& e = sys.equations.at(row, var(s, k, j));
                        e = f.add(e, c);
                    }
                }
                for (std::size_t k = 0; k < m.dim(t); ++k) {
                    Scalar c = mb.at(k, j);
                    if (c != 0) {
                        Scalar& e = sys.equations.at(row, var(t, i, k));
                        e = f.sub(e, c);
                    }
                }
            }
    }
    return sys;
}

Scalar trace_product(const Matrix& a, const Matrix& b, const Field& f) {
    // tr(a b) with a: r x c, b: c x r; products are summed in batches that cannot overflow
    const std::uint64_t p = f.prime();
    const std::uint64_t batch = std::max<std::uint64_t>(1, (UINT64_MAX - p) / ((p - 1) * (p - 1)));
    std::uint64_t acc = 0, n = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            acc += static_cast<std::uint64_t>(a.at(i, k)) * b.at(k, i);
            if (++n == batch) {
                acc %= p;
                n = 0;
            }
        }
    return static_cast<Scalar>(acc % p);
}

Scalar trace_of_composite(const RepMap& g, const RepMap& h) {
    // tr(g o h) summed over vertices
    const Field& f = g.source.field();
    Scalar t = 0;
    for (std::size_t v = 0; v < g.components.size(); ++v)
        t = f.add(t, trace_product(g.components[v], h.components[v], f));
    return t;
}

void require_trace_form_valid(const Rep& m) {
    if (m.total_dim() >= m.field().prime())
        throw Error("module dimension exceeds the field characteristic; trace criteria do not apply");
}

} // namespace

std::vector<RepMap> hom_basis(const Rep& m, const Rep& n) {
    require_same_algebra(m, n, "hom_basis");
    HomSystem sys = hom_system(m, n);
    std::vector<RepMap> out;
    const std::size_t nv = m.dims().size();
    for (const auto& vec : kernel_basis(sys.equations)) {
        RepMap h{m, n, {}};
        for (std::size_t v = 0; v < nv; ++v) {
            Matrix c(m.field(), n.dim(v), m.dim(v));
            for (std::size_t i = 0; i < n.dim(v); ++i)
                for (std::size_t j = 0; j < m.dim(v); ++j) c.at(i, j) = vec[sys.offsets[v] + i * m.dim(v) + j];
            h.components.push_back(std::move(c));
        }
        out.push_back(std::move(h));
    }
    return out;
}

std::size_t hom_dim(const Rep& m, const Rep& n) {
    require_same_algebra(m, n, "hom_dim");
    HomSystem sys = hom_system(m, n);
    return sys.equations.cols() - rank(sys.equations);
}

bool is_isomorphic(const Rep& m, const Rep& n) {
    require_same_algebra(m, n, "is_isomorphic");
    if (m.dims() != n.dims()) return false;
    if (m.is_zero()) return true;
    for (const auto& h : hom_basis(m, n)) {
        bool iso = true;
        for (const auto& c : h.components)
            if (rank(c) != c.rows()) {
                iso = false;
                break;
            }
        if (iso) return true;
    }
    return false;
}

Matrix radical_basis(const Rep& m, std::size_t v) {
    const Quiver& q = m.algebra()->quiver();
    Matrix acc(m.field(), m.dim(v), 0);
    for (std::size_t b = 0; b < q.arrows.size(); ++b)
        if (q.arrows[b].target == v) acc = hstack(acc, m.arrow_map(b));
    return acc;
}

TopResult top(const Rep& m) {
    const auto& a = m.algebra();
    std::vector<Matrix> quot;
    std::vector<std::size_t> dims;
    for (std::size_t v = 0; v < m.dims().size(); ++v) {
        quot.push_back(cokernel_projection(radical_basis(m, v)));
        dims.push_back(quot.back().rows());
    }
    std::vector<Matrix> maps;
    for (const auto& arrow : a->quiver().arrows) maps.emplace_back(m.field(), dims[arrow.target], dims[arrow.source]);
    Rep t(a, std::move(dims), std::move(maps));
    RepMap qmap{m, t, std::move(quot)};
    return {std::move(t), std::move(qmap)};
}

std::vector<std::size_t> ProjectiveCover::multiplicities(std::size_t num_vertices) const {
    std::vector<std::size_t> mult(num_vertices, 0);
    for (auto v : vertices) ++mult[v];
    return mult;
}

ProjectiveCover projective_cover(const Rep& m) {
    const auto& a = m.algebra();
    const std::size_t nv = a->num_vertices();
    ProjectiveCover pc;
    for (std::size_t v = 0; v < nv; ++v) {
        for (auto unit : complement_units(radical_basis(m, v), m.dim(v))) {
            Vec g(m.dim(v), 0);
            g[unit] = 1;
            pc.vertices.push_back(v);
            pc.generators.push_back(std::move(g));
        }
    }
    pc.module = projective_sum(a, pc.vertices);
    pc.epi = RepMap{pc.module, m, {}};
    for (std::size_t w = 0; w < nv; ++w) {
        Matrix comp(m.field(), m.dim(w), pc.module.dim(w));
        std::size_t c0 = 0;
        for (std::size_t k = 0; k < pc.vertices.size(); ++k) {
            auto paths = a->basis_between(pc.vertices[k], w);
            for (std::size_t j = 0; j < paths.size(); ++j) {
                Vec img = m.basis_action(paths[j]).apply(pc.generators[k]);
                for (std::size_t r = 0; r < img.size(); ++r) comp.at(r, c0 + j) = img[r];
            }
            c0 += paths.size();
        }
        pc.epi.components.push_back(std::move(comp));
    }
    return pc;
}

TwoTermComplex min_projective_presentation(const Rep& m) {
    const auto& a = m.algebra();
    ProjectiveCover p0 = projective_cover(m);
    Kernel k = kernel(p0.epi);
    ProjectiveCover p1 = projective_cover(k.module);
    TwoTermComplex out{a, p1.vertices, p0.vertices, {}};
    out.d.assign(p0.vertices.size(), std::vector<Element>(p1.vertices.size(), a->zero()));
    for (std::size_t c = 0; c < p1.vertices.size(); ++c) {
        const std::size_t v = p1.vertices[c];
        Vec x = k.inclusion.components[v].apply(p1.generators[c]);
        std::size_t pos = 0;
        for (std::size_t r = 0; r < p0.vertices.size(); ++r) {
            for (auto gi : a->basis_between(p0.vertices[r], v)) out.d[r][c][gi] = x[pos++];
        }
    }
    return out;
}

Cokernel cokernel(const RepMap& h) {
    const auto& a = h.target.algebra();
    const Quiver& q = a->quiver();
    const Field& f = h.target.field();
    std::vector<Matrix> proj, sect;
    std::vector<std::size_t> dims;
    for (std::size_t v = 0; v < h.components.size(); ++v) {
        Matrix p = cokernel_projection(h.components[v]);
        auto s = solve_right(p, Matrix::identity(f, p.rows()));
        if (!s) throw Error("cokernel: projection has no section");
        dims.push_back(p.rows());
        proj.push_back(std::move(p));
        sect.push_back(std::move(*s));
    }
    std::vector<Matrix> maps;
    for (std::size_t b = 0; b < q.arrows.size(); ++b) {
        const auto& arrow = q.arrows[b];
        maps.push_back(proj[arrow.target] * h.target.arrow_map(b) * sect[arrow.source]);
    }
    Rep c(a, std::move(dims), std::move(maps));
    RepMap pi{h.target, c, std::move(proj)};
    return {std::move(c), std::move(pi)};
}

Kernel kernel(const RepMap& h) {
    const auto& a = h.source.algebra();
    const Quiver& q = a->quiver();
    const Field& f = h.source.field();
    std::vector<Matrix> incl;
    std::vector<std::size_t> dims;
    for (std::size_t v = 0; v < h.components.size(); ++v) {
        auto basis = kernel_basis(h.components[v]);
        dims.push_back(basis.size());
        incl.push_back(Matrix::from_columns(f, h.source.dim(v), basis));
    }
    std::vector<Matrix> maps;
    for (std::size_t b = 0; b < q.arrows.size(); ++b) {
        const auto& arrow = q.arrows[b];
        auto m = solve_right(incl[arrow.target], h.source.arrow_map(b) * incl[arrow.source]);
        if (!m) throw Error("kernel: image of a subrepresentation escaped the kernel");
        maps.push_back(std::move(*m));
    }
    Rep k(a, std::move(dims), std::move(maps));
    RepMap inc{k, h.source, std::move(incl)};
    return {std::move(k), std::move(inc)};
}

bool fac_contains(const Rep& generators, const Rep& x) {
    require_same_algebra(generators, x, "fac_contains");
    auto homs = hom_basis(generators, x);
    for (std::size_t v = 0; v < x.dims().size(); ++v) {
        if (x.dim(v) == 0) continue;
        Matrix acc(x.field(), x.dim(v), 0);
        for (const auto& h : homs) acc = hstack(acc, h.components[v]);
        if (rank(acc) != x.dim(v)) return false;
    }
    return true;
}

Scalar trace(const RepMap& endo) {
    const Field& f = endo.source.field();
    Scalar t = 0;
    for (const auto& c : endo.components)
        for (std::size_t i = 0; i < std::min(c.rows(), c.cols()); ++i) t = f.add(t, c.at(i, i));
    return t;
}

namespace {

Matrix trace_gram(const std::vector<RepMap>& basis) {
    const Field& f = basis.empty() ? Field() : basis.front().source.field();
    Matrix g(f, basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i; j < basis.size(); ++j) {
            Scalar t = trace_of_composite(basis[i], basis[j]);
            g.at(i, j) = t;
            g.at(j, i) = t;
        }
    return g;
}

} // namespace

bool is_indecomposable(const Rep& m) {
    if (m.is_zero()) return false;
    require_trace_form_valid(m);
    return rank(trace_gram(hom_basis(m, m))) == 1;
}

std::size_t count_summands(const Rep& m) {
    if (m.is_zero()) return 0;
    require_trace_form_valid(m);
    const Field& f = m.field();
    auto basis = hom_basis(m, m);
    // rad End = kernel of the trace form; the pivot columns of the Gram matrix span a complement
    std::vector<RepMap> s;
    for (auto i : rref(trace_gram(basis)).pivots) s.push_back(basis[i]);
    // radical elements are central mod rad and pair to zero, so only s is needed:
    // z in span s is central mod rad iff tr(z [s_j, s_l]) = 0 for all j, l
    const std::size_t k = s.size();
    Matrix constraints(f, k * k, k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t l = j + 1; l < k; ++l) {
            RepMap jl = s[j].compose_after(s[l]);
            RepMap lj = s[l].compose_after(s[j]);
            for (std::size_t i = 0; i < k; ++i)
                constraints.at(j * k + l, i) = f.sub(trace_of_composite(s[i], jl), trace_of_composite(s[i], lj));
        }
    return k - rank(constraints);
}

std::vector<std::size_t> summand_multiplicities(const Rep& x, std::span<const Rep> indecomposables) {
    std::vector<std::size_t> mult;
    for (const auto& y : indecomposables) {
        require_same_algebra(x, y, "summand_multiplicities");
        require_trace_form_valid(y);
        auto into = hom_basis(y, x);
        auto outof = hom_basis(x, y);
        Matrix pairing(x.field(), into.size(), outof.size());
        for (std::size_t i = 0; i < into.size(); ++i)
            for (std::size_t j = 0; j < outof.size(); ++j)
                pairing.at(i, j) = trace(outof[j].compose_after(into[i]));
        mult.push_back(rank(pairing));
    }
    return mult;
}

std::optional<std::vector<std::size_t>> decompose_against(const Rep& x, std::span<const Rep> indecomposables) {
    auto mult = summand_multiplicities(x, indecomposables);
    std::vector<std::size_t> dims(x.dims().size(), 0);
    for (std::size_t i = 0; i < indecomposables.size(); ++i)
        for (std::size_t v = 0; v < dims.size(); ++v) dims[v] += mult[i] * indecomposables[i].dim(v);
    if (dims != x.dims()) return std::nullopt;
    return mult;
}

} // namespace silt
