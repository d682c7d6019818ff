#include "silt/builtins.hpp"

namespace silt {

AlgebraPresentation hereditary_truncation(std::size_t n, std::size_t level, const Field& f) {
    if (n < 1) throw Error("hereditary family needs n >= 1");
    if (level < 1) throw Error("hereditary family needs level >= 1");
    const std::size_t length = n * level;
    AlgebraPresentation p{f, {}, {}, std::max<std::size_t>(length, 1)};
    for (std::size_t v = 0; v < n; ++v) p.quiver.vertices.push_back(std::to_string(v + 1));
    // A single loop killed in length 1 is just k.
    if (length == 1) return p;
    for (std::size_t v = 0; v < n; ++v)
        p.quiver.arrows.push_back({"a" + std::to_string(v + 1), v, (v + 1) % n});
    for (std::size_t v = 0; v < n; ++v) {
        RelationTerm t{1, {}};
        for (std::size_t k = 0; k < length; ++k) t.arrows.push_back((v + k) % n);
        p.relations.push_back({t});
    }
    return p;
}

AlgebraPresentation hereditary_reduction(std::size_t n, const Field& f) { return hereditary_truncation(n, 1, f); }

AlgebraPresentation auslander_bass_v_reduction(std::size_t n, const Field& f) {
    AlgebraPresentation p{f, {}, {}, n + 2};
    for (std::size_t v = 0; v <= n; ++v) p.quiver.vertices.push_back(std::to_string(v));
    for (std::size_t i = 0; i < n; ++i) {
        p.quiver.arrows.push_back({"a" + std::to_string(i), i, i + 1});
        p.quiver.arrows.push_back({"b" + std::to_string(i), i + 1, i});
    }
    for (std::size_t i = 0; i < n; ++i) {
        p.relations.push_back({{1, {2 * i, 2 * i + 1}}});
        p.relations.push_back({{1, {2 * i + 1, 2 * i}}});
    }
    return p;
}

AlgebraPresentation bass_v_reduction(const Field& f) { return auslander_bass_v_reduction(1, f); }

AlgebraPresentation triangular_example_reduction(const Field& f) {
    AlgebraPresentation p{f, {}, {}, 2};
    p.quiver.vertices = {"1", "2"};
    p.quiver.arrows = {{"a", 0, 1}};
    return p;
}

AlgebraPresentation builtin_presentation(const std::string& name, std::size_t n, const Field& f) {
    if (name == "hereditary") return hereditary_reduction(n, f);
    if (name == "auslander_bass_v") return auslander_bass_v_reduction(n, f);
    if (name == "bass_v") return bass_v_reduction(f);
    if (name == "triangular_a2") return triangular_example_reduction(f);
    throw Error("unknown builtin '" + name + "' (expected hereditary, bass_v, auslander_bass_v, triangular_a2)");
}

} // namespace silt
