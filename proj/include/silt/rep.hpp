#pragma once

#include <cstddef>
#include <vector>

#include "silt/algebra.hpp"

namespace silt {

/// A finite-dimensional module, stored as a quiver representation.
class Rep {
  public:
    Rep() = default;
    Rep(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> arrow_maps);

    static Rep zero(AlgebraPtr algebra);

    const AlgebraPtr& algebra() const { return algebra_; }
    const Field& field() const { return algebra_->field(); }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t dim(std::size_t v) const { return dims_[v]; }
    std::size_t total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
    const Matrix& arrow_map(std::size_t a) const { return maps_[a]; }
    const std::vector<Matrix>& arrow_maps() const { return maps_; }

    /// Action of the global basis path i : M_source -> M_target.
    const Matrix& basis_action(std::size_t i) const { return actions_[i]; }
    /// Action of an element of e_s A e_t as a map M_s -> M_t.
    Matrix action(const Element& x, std::size_t s, std::size_t t) const;
    Matrix path_action(std::size_t source, std::span<const std::size_t> arrows) const;

    bool check_relations() const;

  private:
    AlgebraPtr algebra_;
    std::vector<std::size_t> dims_;
    std::vector<Matrix> maps_;
    std::vector<Matrix> actions_;
};

/// Module homomorphism given by one matrix per vertex.
struct RepMap {
    Rep source;
    Rep target;
    std::vector<Matrix> components;

    bool commutes() const;
    bool is_zero() const;
    RepMap compose_after(const RepMap& first) const;  // (*this) o first
};

RepMap identity_map(const Rep& m);
RepMap zero_map(const Rep& from, const Rep& to);

/// P_v = A e_v: paths starting at v, arrows appended on the right.
Rep projective_module(const AlgebraPtr& a, std::size_t v);
Rep simple_module(const AlgebraPtr& a, std::size_t v);

/// Direct sum of the projectives P_{v_0} + P_{v_1} + ...; coordinates at vertex w are the
/// concatenated basis_between(v_k, w) lists.
Rep projective_sum(const AlgebraPtr& a, const std::vector<std::size_t>& vertices);

/// The map P_{cols} -> P_{rows} given by a block matrix of algebra elements,
/// entry[r][c] in e_{rows[r]} A e_{cols[c]}.
RepMap projective_map(const AlgebraPtr& a, const std::vector<std::size_t>& rows,
                      const std::vector<std::size_t>& cols,
                      const std::vector<std::vector<Element>>& entries);

Rep direct_sum(const std::vector<Rep>& parts, const AlgebraPtr& a);

} // namespace silt
