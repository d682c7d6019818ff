#include "silt/complex.hpp"

namespace silt {

TwoTermComplex TwoTermComplex::zero(AlgebraPtr a) { return {std::move(a), {}, {}, {}}; }

TwoTermComplex TwoTermComplex::stalk0(AlgebraPtr a, const std::vector<std::size_t>& vertices) {
    TwoTermComplex c{std::move(a), {}, vertices, {}};
    c.d.assign(vertices.size(), {});
    return c;
}

TwoTermComplex TwoTermComplex::stalk1(AlgebraPtr a, const std::vector<std::size_t>& vertices) {
    return {std::move(a), vertices, {}, {}};
}

TwoTermComplex TwoTermComplex::lambda(AlgebraPtr a) {
    std::vector<std::size_t> all(a->num_vertices());
    for (std::size_t v = 0; v < all.size(); ++v) all[v] = v;
    return stalk0(std::move(a), all);
}

TwoTermComplex TwoTermComplex::lambda_shift(AlgebraPtr a) {
    std::vector<std::size_t> all(a->num_vertices());
    for (std::size_t v = 0; v < all.size(); ++v) all[v] = v;
    return stalk1(std::move(a), all);
}

std::vector<std::int64_t> TwoTermComplex::mult_neg1() const {
    std::vector<std::int64_t> m(num_vertices(), 0);
    for (auto v : degree_minus1) ++m[v];
    return m;
}

std::vector<std::int64_t> TwoTermComplex::mult_0() const {
    std::vector<std::int64_t> m(num_vertices(), 0);
    for (auto v : degree0) ++m[v];
    return m;
}

RepMap TwoTermComplex::differential() const { return projective_map(algebra, degree0, degree_minus1, d); }

bool TwoTermComplex::well_formed() const {
    if (d.size() != degree0.size()) return false;
    for (std::size_t r = 0; r < degree0.size(); ++r) {
        if (d[r].size() != degree_minus1.size()) return false;
        for (std::size_t c = 0; c < degree_minus1.size(); ++c) {
            const Element& x = d[r][c];
            if (x.size() != algebra->dimension()) return false;
            for (std::size_t i = 0; i < x.size(); ++i) {
                if (x[i] == 0) continue;
                const auto& w = algebra->basis_path(i);
                if (w.source != degree0[r] || w.target != degree_minus1[c]) return false;
            }
        }
    }
    return true;
}

TwoTermComplex direct_sum(const TwoTermComplex& a, const TwoTermComplex& b) {
    TwoTermComplex out{a.algebra, a.degree_minus1, a.degree0, {}};
    out.degree_minus1.insert(out.degree_minus1.end(), b.degree_minus1.begin(), b.degree_minus1.end());
    out.degree0.insert(out.degree0.end(), b.degree0.begin(), b.degree0.end());
    const Element z = a.algebra->zero();
    out.d.assign(out.degree0.size(), std::vector<Element>(out.degree_minus1.size(), z));
    for (std::size_t r = 0; r < a.degree0.size(); ++r)
        for (std::size_t c = 0; c < a.degree_minus1.size(); ++c) out.d[r][c] = a.d[r][c];
    for (std::size_t r = 0; r < b.degree0.size(); ++r)
        for (std::size_t c = 0; c < b.degree_minus1.size(); ++c)
            out.d[a.degree0.size() + r][a.degree_minus1.size() + c] = b.d[r][c];
    return out;
}

} // namespace silt
