#pragma once

// Silting pairs (M, P) on the module side, the mutation formula and the order test.

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <vector>

#include "silt/repmod.hpp"
#include "silt/twoterm.hpp"

namespace silt {

struct RegistryEntry {
    Rep module;
    GVector gvec;
    TwoTermComplex presentation;
};

/// Indecomposable modules with stable ids. Lookups are keyed by (dims, g-vector) and
/// confirmed by an isomorphism test; insertion is atomic.
class Registry {
  public:
    explicit Registry(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}

    const AlgebraPtr& algebra() const { return algebra_; }
    std::size_t get_or_insert(const Rep& m);
    std::optional<std::size_t> find(const Rep& m) const;
    const RegistryEntry& at(std::size_t id) const;
    std::size_t size() const;

  private:
    std::optional<std::size_t> find_locked(const Rep& m, const GVector& g) const;

    AlgebraPtr algebra_;
    mutable std::shared_mutex mutex_;
    std::vector<std::unique_ptr<const RegistryEntry>> entries_;
    std::map<std::pair<std::vector<std::size_t>, GVector>, std::vector<std::size_t>> by_key_;
};

/// Summands are registry ids; both lists are kept sorted.
struct SiltingPair {
    std::vector<std::size_t> summands;
    std::vector<std::size_t> proj_part;

    void canonicalize();
    bool operator==(const SiltingPair&) const = default;
    auto operator<=>(const SiltingPair&) const = default;
};

/// A pair given by module values rather than ids, with the data every test needs.
struct PairModules {
    AlgebraPtr algebra;
    std::vector<Rep> summands;
    std::vector<std::size_t> proj_part;
    Rep sum;
    TwoTermComplex presentation;  // minimal presentation of sum

    static PairModules make(AlgebraPtr a, std::vector<Rep> summands, std::vector<std::size_t> proj_part);
    static PairModules from_ids(const Registry& reg, const SiltingPair& pair);
};

/// Hom(d, n) : Hom(P_0, n) -> Hom(P_{-1}, n) is surjective.
bool hom_d_surjective(const TwoTermComplex& d, const Rep& n);

bool is_presilting_module(const Rep& m);

struct Validation {
    bool ok = true;
    std::string reason;
    explicit operator bool() const { return ok; }
};
Validation validate_silting_pair(const PairModules& pair);
Validation validate_silting_pair(const Registry& reg, const SiltingPair& pair);

struct Approximation {
    std::vector<std::size_t> targets;  // index into the target list, one per summand of E
    RepMap map;                        // n -> E
};
Approximation left_minimal_approximation(const Rep& n, std::span<const Rep> targets);

/// Left mutation of a pair at module summand `at`, or nullopt when it does not go down.
std::optional<PairModules> left_mutation(const PairModules& pair, std::size_t at);
std::optional<SiltingPair> mutate_left(Registry& reg, const SiltingPair& pair, std::size_t at);

/// a <= b, i.e. Fac M_a is contained in Fac M_b.
bool pair_leq(const PairModules& a, const PairModules& b);
bool pair_leq(const Registry& reg, const SiltingPair& a, const SiltingPair& b);

bool is_sincere_silting(const SiltingPair& pair, std::size_t num_vertices);

TwoTermComplex complex_of(const PairModules& pair);
TwoTermComplex complex_of(const Registry& reg, const SiltingPair& pair);
/// Splits H0 into registered indecomposables; throws if some summand is not registered.
SiltingPair pair_of(const Registry& reg, const TwoTermComplex& p);

/// g-vectors of the summands (modules by presentation, P_v[1] as -e_v), one row each.
std::vector<GVector> g_vector_matrix(const PairModules& pair);
std::int64_t g_vector_determinant(const PairModules& pair);

} // namespace silt
