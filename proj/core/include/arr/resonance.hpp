#ifndef ARR_RESONANCE_HPP
#define ARR_RESONANCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "arr/arrangement.hpp"
#include "arr/flats.hpp"
#include "arr/linalg.hpp"

namespace arr {

/// The mod-p cocycle space Z_p(A) of functions eta: A -> F_p constrained
/// per 2-flat: sum over the flat when p divides its multiplicity, equality
/// across the flat otherwise. Always contains the constants.
struct CocycleSpace {
    int64_t p = 0;
    std::vector<std::vector<int64_t>> basis; // vectors in F_p^A
    int64_t dim() const { return static_cast<int64_t>(basis.size()); }
};

struct BettiNumber {
    int64_t p = 0;
    int64_t dim_zp = 0;
    int64_t value = 0; // dim Z_p - 1
    /// Non-constant cocycle, present when value > 0.
    std::optional<std::vector<int64_t>> witness;
};

enum class GammaKind {
    modulus, // edge iff multiplicity not divisible by k (special odd-or-2 rule for k = 2)
    exact,   // edge iff multiplicity equals k
};

struct GammaGraph {
    GammaKind kind = GammaKind::modulus;
    int64_t k = 0;
    int64_t vertex_count = 0;
    std::vector<std::pair<int64_t, int64_t>> edges;
    std::vector<int64_t> component; // vertex -> component id (0-based, by least vertex)
    int64_t component_count = 0;
    bool connected() const { return component_count <= 1; }
};

/// The per-flat constraint matrix whose right nullspace is Z_p(A).
PrimeFieldMatrix cocycle_constraint_matrix(const Arrangement& a, const FlatTable& flats, int64_t p);

CocycleSpace cocycle_space(const Arrangement& a, const FlatTable& flats, int64_t p);

BettiNumber beta_p(const Arrangement& a, const FlatTable& flats, int64_t p);
/// Convenience overload computing the flat table internally.
BettiNumber beta_p(const Arrangement& a, int64_t p);

GammaGraph gamma_graph(const Arrangement& a, const FlatTable& flats, GammaKind kind, int64_t k);

/// m_p(H) = 1 + sum (|A_X| - 1) over the flats X through H whose
/// multiplicity is not divisible by p.
int64_t m_p_of(const Arrangement& a, const FlatTable& flats, int64_t h, int64_t p);

struct CriterionResult {
    std::string id;
    bool fires = false;
    std::string conclusion; // "beta_p = 0" when it fires
};

struct VanishingReport {
    int64_t p = 0;
    std::vector<CriterionResult> criteria;
    bool any_fires() const;
};

/// Evaluates every vanishing criterion exactly. Soundness is part of the
/// contract: if any criterion fires the independently computed beta_p must
/// be zero, otherwise an internal_error is raised.
VanishingReport vanishing_report(const Arrangement& a, const FlatTable& flats, int64_t p);

} // namespace arr

#endif
