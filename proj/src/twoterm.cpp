#include "silt/twoterm.hpp"

#include <algorithm>

#include "silt/repmod.hpp"

namespace silt {

namespace {

void require_same_algebra(const TwoTermComplex& p, const TwoTermComplex& q, const char* op) {
    if (p.algebra != q.algebra) throw Error(std::string(op) + ": complexes over different algebras");
}

// Coordinates of Hom(P_{cols}, P_{rows}): block (r, c) is basis_between(rows[r], cols[c]).
struct BlockSpace {
    std::vector<std::vector<std::size_t>> offset;
    std::size_t dim = 0;

    BlockSpace(const FiniteDimAlgebra& a, const std::vector<std::size_t>& rows,
               const std::vector<std::size_t>& cols) {
        offset.assign(rows.size(), std::vector<std::size_t>(cols.size(), 0));
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < cols.size(); ++c) {
                offset[r][c] = dim;
                dim += a.basis_between(rows[r], cols[c]).size();
            }
    }
};

void write_block(const FiniteDimAlgebra& a, const BlockSpace& bs, std::size_t r, std::size_t c,
                 const Element& x, Vec& out, bool negate) {
    const Field& f = a.field();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        std::size_t pos = bs.offset[r][c] + a.local_index(i);
        out[pos] = negate ? f.sub(out[pos], x[i]) : f.add(out[pos], x[i]);
    }
}

struct Working {
    std::vector<std::size_t> cols, rows;
    std::vector<std::vector<Element>> d;
};

TwoTermComplex to_complex(const AlgebraPtr& a, Working w) {
    return {a, std::move(w.cols), std::move(w.rows), std::move(w.d)};
}

bool cancel_invertible_block(const FiniteDimAlgebra& a, Working& w) {
    for (std::size_t r = 0; r < w.rows.size(); ++r)
        for (std::size_t c = 0; c < w.cols.size(); ++c) {
            const std::size_t v = w.rows[r];
            if (w.cols[c] != v || a.trivial_coefficient(w.d[r][c], v) == 0) continue;
            Element u_inv = a.local_inverse(w.d[r][c], v);
            Working next;
            for (std::size_t rr = 0; rr < w.rows.size(); ++rr)
                if (rr != r) next.rows.push_back(w.rows[rr]);
            for (std::size_t cc = 0; cc < w.cols.size(); ++cc)
                if (cc != c) next.cols.push_back(w.cols[cc]);
            for (std::size_t rr = 0; rr < w.rows.size(); ++rr) {
                if (rr == r) continue;
                std::vector<Element> row;
                Element left = a.multiply(w.d[rr][c], u_inv);
                for (std::size_t cc = 0; cc < w.cols.size(); ++cc) {
                    if (cc == c) continue;
                    // Schur complement d[rr][cc] - d[rr][c] u^-1 d[r][cc]
                    row.push_back(a.sub(w.d[rr][cc], a.multiply(left, w.d[r][cc])));
                }
                next.d.push_back(std::move(row));
            }
            w = std::move(next);
            return true;
        }
    return false;
}

bool column_is_zero(const FiniteDimAlgebra& a, const Working& w, std::size_t c) {
    for (std::size_t r = 0; r < w.rows.size(); ++r)
        if (!a.is_zero(w.d[r][c])) return false;
    return true;
}

// Find x in ker d with nonzero top coordinate on a nonzero column; that column then
// spans a summand P_v -> 0 and can be replaced by x, i.e. zeroed.
bool split_kernel_summand(const AlgebraPtr& ap, Working& w) {
    const FiniteDimAlgebra& a = *ap;
    TwoTermComplex c = {ap, w.cols, w.rows, w.d};
    RepMap diff = c.differential();
    for (std::size_t v = 0; v < a.num_vertices(); ++v) {
        // positions of top coordinates at vertex v for nonzero columns
        std::vector<std::pair<std::size_t, std::size_t>> tops;  // (column, coordinate)
        std::size_t pos = 0;
        for (std::size_t col = 0; col < w.cols.size(); ++col) {
            auto paths = a.basis_between(w.cols[col], v);
            if (w.cols[col] == v && !column_is_zero(a, w, col)) tops.emplace_back(col, pos + a.local_index(a.trivial(v)));
            pos += paths.size();
        }
        if (tops.empty()) continue;
        for (const auto& x : kernel_basis(diff.components[v])) {
            for (const auto& [col, coord] : tops) {
                if (x[coord] == 0) continue;
                for (std::size_t r = 0; r < w.rows.size(); ++r) w.d[r][col] = a.zero();
                return true;
            }
        }
    }
    return false;
}

Working working_of(const TwoTermComplex& p) { return {p.degree_minus1, p.degree0, p.d}; }

// Basis of Hom(P_cols, P_v) / (Hom(P_rows, P_v) o d), as row vectors of elements.
std::vector<std::vector<Element>> maps_to_projective_mod_homotopy(const TwoTermComplex& p, std::size_t v) {
    const FiniteDimAlgebra& a = *p.algebra;
    const std::vector<std::size_t> target{v};
    BlockSpace space(a, target, p.degree_minus1);
    std::vector<Vec> gens;
    for (std::size_t j = 0; j < p.degree0.size(); ++j)
        for (auto b : a.basis_between(v, p.degree0[j])) {
            Vec img(space.dim, 0);
            Element be = a.unit(b);
            for (std::size_t c = 0; c < p.degree_minus1.size(); ++c)
                write_block(a, space, 0, c, a.multiply(be, p.d[j][c]), img, false);
            gens.push_back(std::move(img));
        }
    Matrix sub = Matrix::from_columns(a.field(), space.dim, gens);
    std::vector<std::vector<Element>> reps;
    for (auto unit : complement_units(sub, space.dim)) {
        std::vector<Element> phi(p.degree_minus1.size(), a.zero());
        for (std::size_t c = 0; c < p.degree_minus1.size(); ++c) {
            auto paths = a.basis_between(v, p.degree_minus1[c]);
            if (unit >= space.offset[0][c] && unit < space.offset[0][c] + paths.size())
                phi[c][paths[unit - space.offset[0][c]]] = 1;
        }
        reps.push_back(std::move(phi));
    }
    return reps;
}

// Basis of Hom(P_v, P_rows) / (d o Hom(P_v, P_cols)), as column vectors of elements.
std::vector<std::vector<Element>> maps_from_projective_mod_homotopy(const TwoTermComplex& p, std::size_t v) {
    const FiniteDimAlgebra& a = *p.algebra;
    const std::vector<std::size_t> source{v};
    BlockSpace space(a, p.degree0, source);
    std::vector<Vec> gens;
    for (std::size_t c = 0; c < p.degree_minus1.size(); ++c)
        for (auto b : a.basis_between(p.degree_minus1[c], v)) {
            Vec img(space.dim, 0);
            Element be = a.unit(b);
            for (std::size_t r = 0; r < p.degree0.size(); ++r)
                write_block(a, space, r, 0, a.multiply(p.d[r][c], be), img, false);
            gens.push_back(std::move(img));
        }
    Matrix sub = Matrix::from_columns(a.field(), space.dim, gens);
    std::vector<std::vector<Element>> reps;
    for (auto unit : complement_units(sub, space.dim)) {
        std::vector<Element> psi(p.degree0.size(), a.zero());
        for (std::size_t r = 0; r < p.degree0.size(); ++r) {
            auto paths = a.basis_between(p.degree0[r], v);
            if (unit >= space.offset[r][0] && unit < space.offset[r][0] + paths.size())
                psi[r][paths[unit - space.offset[r][0]]] = 1;
        }
        reps.push_back(std::move(psi));
    }
    return reps;
}

} // namespace

bool hom_shift_vanishes(const TwoTermComplex& p, const TwoTermComplex& q) {
    require_same_algebra(p, q, "hom_shift_vanishes");
    const FiniteDimAlgebra& a = *p.algebra;
    BlockSpace target(a, q.degree0, p.degree_minus1);
    if (target.dim == 0) return true;
    std::vector<Vec> images;
    // f : P_{-1} -> Q_{-1}, contributes -d_q o f
    for (std::size_t k = 0; k < q.degree_minus1.size(); ++k)
        for (std::size_t c = 0; c < p.degree_minus1.size(); ++c)
            for (auto b : a.basis_between(q.degree_minus1[k], p.degree_minus1[c])) {
                Vec img(target.dim, 0);
                Element be = a.unit(b);
                for (std::size_t r = 0; r < q.degree0.size(); ++r)
                    write_block(a, target, r, c, a.multiply(q.d[r][k], be), img, true);
                images.push_back(std::move(img));
            }
    // g : P_0 -> Q_0, contributes g o d_p
    for (std::size_t r = 0; r < q.degree0.size(); ++r)
        for (std::size_t j = 0; j < p.degree0.size(); ++j)
            for (auto b : a.basis_between(q.degree0[r], p.degree0[j])) {
                Vec img(target.dim, 0);
                Element be = a.unit(b);
                for (std::size_t c = 0; c < p.degree_minus1.size(); ++c)
                    write_block(a, target, r, c, a.multiply(be, p.d[j][c]), img, false);
                images.push_back(std::move(img));
            }
    if (images.size() < target.dim) return false;
    return rank(Matrix::from_columns(a.field(), target.dim, images)) == target.dim;
}

bool is_presilting(const TwoTermComplex& p) { return hom_shift_vanishes(p, p); }

TwoTermComplex minimality_reduce(const TwoTermComplex& p) {
    const FiniteDimAlgebra& a = *p.algebra;
    Working w = working_of(p);
    while (cancel_invertible_block(a, w)) {
    }
    while (split_kernel_summand(p.algebra, w)) {
    }
    return to_complex(p.algebra, std::move(w));
}

Rep h0(const TwoTermComplex& p) { return cokernel(p.differential()).module; }

std::vector<std::size_t> rho1(const TwoTermComplex& p) {
    TwoTermComplex r = minimality_reduce(p);
    const FiniteDimAlgebra& a = *p.algebra;
    std::vector<std::size_t> mult(a.num_vertices(), 0);
    Working w = working_of(r);
    for (std::size_t c = 0; c < w.cols.size(); ++c)
        if (column_is_zero(a, w, c)) ++mult[w.cols[c]];
    return mult;
}

bool silt_leq(const TwoTermComplex& p, const TwoTermComplex& q) { return hom_shift_vanishes(p, q); }

GVector g_vector(const TwoTermComplex& p) {
    GVector g = p.mult_0();
    auto m1 = p.mult_neg1();
    for (std::size_t v = 0; v < g.size(); ++v) g[v] -= m1[v];
    return g;
}

std::size_t count_summands(const TwoTermComplex& p) {
    TwoTermComplex r = minimality_reduce(p);
    std::size_t count = count_summands(h0(r));
    for (auto m : rho1(r))
        if (m > 0) ++count;
    return count;
}

bool additively_equivalent(const TwoTermComplex& p, const TwoTermComplex& q) {
    std::size_t n = count_summands(p);
    return n == count_summands(q) && n == count_summands(direct_sum(p, q));
}

bool is_silting(const TwoTermComplex& p) {
    return is_presilting(p) && count_summands(p) == p.num_vertices();
}

TwoTermComplex bongartz_completion(const TwoTermComplex& p) {
    const AlgebraPtr& ap = p.algebra;
    const FiniteDimAlgebra& a = *ap;
    const std::size_t n = a.num_vertices();
    // rows: copies of P_0, then Lambda; columns: copies of P_{-1}
    std::vector<std::pair<std::size_t, std::vector<Element>>> approx;  // (vertex, phi)
    for (std::size_t v = 0; v < n; ++v)
        for (auto& phi : maps_to_projective_mod_homotopy(p, v)) approx.emplace_back(v, std::move(phi));
    Working w;
    const std::size_t copies = approx.size();
    for (std::size_t k = 0; k < copies; ++k) {
        w.cols.insert(w.cols.end(), p.degree_minus1.begin(), p.degree_minus1.end());
        w.rows.insert(w.rows.end(), p.degree0.begin(), p.degree0.end());
    }
    const std::size_t lambda_row0 = w.rows.size();
    for (std::size_t v = 0; v < n; ++v) w.rows.push_back(v);
    w.d.assign(w.rows.size(), std::vector<Element>(w.cols.size(), a.zero()));
    const std::size_t pc = p.degree_minus1.size(), pr = p.degree0.size();
    for (std::size_t k = 0; k < copies; ++k) {
        for (std::size_t r = 0; r < pr; ++r)
            for (std::size_t c = 0; c < pc; ++c) w.d[k * pr + r][k * pc + c] = p.d[r][c];
        const auto& [v, phi] = approx[k];
        for (std::size_t c = 0; c < pc; ++c) w.d[lambda_row0 + v][k * pc + c] = phi[c];
    }
    TwoTermComplex cone = to_complex(ap, std::move(w));
    TwoTermComplex out = minimality_reduce(direct_sum(p, cone));
    if (!is_silting(out)) throw Error("bongartz_completion: result is not silting (input not presilting?)");
    return out;
}

TwoTermComplex co_bongartz_completion(const TwoTermComplex& p) {
    const AlgebraPtr& ap = p.algebra;
    const FiniteDimAlgebra& a = *ap;
    const std::size_t n = a.num_vertices();
    const std::size_t pc = p.degree_minus1.size(), pr = p.degree0.size();
    Working w;
    std::vector<std::tuple<std::size_t, std::size_t, std::vector<Element>>> approx;  // (vertex, copy, psi)
    std::size_t copies = 0;
    for (std::size_t v = 0; v < n; ++v)
        for (auto& psi : maps_from_projective_mod_homotopy(p, v)) approx.emplace_back(v, copies++, std::move(psi));
    // columns: Lambda, then copies of P_{-1}; rows: copies of P_0
    for (std::size_t v = 0; v < n; ++v) w.cols.push_back(v);
    for (std::size_t k = 0; k < copies; ++k) {
        w.cols.insert(w.cols.end(), p.degree_minus1.begin(), p.degree_minus1.end());
        w.rows.insert(w.rows.end(), p.degree0.begin(), p.degree0.end());
    }
    w.d.assign(w.rows.size(), std::vector<Element>(w.cols.size(), a.zero()));
    for (const auto& [v, k, psi] : approx) {
        for (std::size_t r = 0; r < pr; ++r) {
            w.d[k * pr + r][v] = psi[r];
            for (std::size_t c = 0; c < pc; ++c) w.d[k * pr + r][n + k * pc + c] = p.d[r][c];
        }
    }
    TwoTermComplex cone = to_complex(ap, std::move(w));
    TwoTermComplex out = minimality_reduce(direct_sum(p, cone));
    if (!is_silting(out)) throw Error("co_bongartz_completion: result is not silting (input not presilting?)");
    return out;
}

} // namespace silt
