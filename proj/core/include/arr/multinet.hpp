#ifndef ARR_MULTINET_HPP
#define ARR_MULTINET_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "arr/arrangement.hpp"
#include "arr/flats.hpp"
#include "arr/os_quadratic.hpp"

namespace arr {

/// A candidate multinet: a partition of the hyperplanes into k >= 3 blocks
/// plus a positive weight per hyperplane.
struct Multinet {
    std::vector<std::vector<int64_t>> blocks;
    std::vector<int64_t> mult; // weight per hyperplane index

    int64_t k() const { return static_cast<int64_t>(blocks.size()); }
    int64_t size() const { return static_cast<int64_t>(mult.size()); }

    /// Hyperplane index -> block index; throws if blocks do not partition
    /// 0..n-1 exactly.
    std::vector<int64_t> block_assignment() const;

    /// gcd over H of (weight_H - 1); zero means every weight is 1.
    int64_t weight_gcd() const;
    /// All weights equal to 1.
    bool reduced() const { return weight_gcd() == 0; }
    /// Weights congruent to 1 mod h (h >= 2).
    bool h_reduced(int64_t h) const;
};

/// Throws user_error unless the blocks partition 0..n-1, k >= 3, and all
/// weights are positive.
void check_well_formed(const Multinet& net, int64_t n);

struct MultinetReport {
    struct Failure {
        int64_t flat = -1;
        int64_t gamma1 = -1, gamma2 = -1; // blocks with differing sums
        int64_t value1 = 0, value2 = 0;
    };

    bool valid = false;
    std::map<int64_t, int64_t> cross_flat_values; // flat index -> n_X
    std::vector<Failure> failures;
    bool reduced = false;
    int64_t reduction_gcd = 0;
    std::vector<int64_t> reduced_mod; // h >= 2 with weights = 1 mod h (divisors of the gcd)
};

/// Checks the defining multinet axiom: for every flat spanned by two
/// hyperplanes in different blocks, the weighted member count per block is
/// the same for every block. Flats contained in a single block are skipped.
MultinetReport verify(const Arrangement& a, const FlatTable& flats, const Multinet& net);

/// Ready-made structures on catalog arrangements. Each builder reads the
/// conventional labels of its family and throws user_error when handed
/// anything else; the result is certified by verify in the test suites.

/// Direction 3-net on A(m,m,l=3): one block per coordinate pair.
Multinet fy_monomial_3net(const Arrangement& monomial_l3);
/// Residue 3-net on A(m,m,3) with 3 | m: blocks by alpha mod 3, with the
/// sign of alpha flipped on the {1,3} direction.
Multinet mod3_net(const Arrangement& monomial_l3);
/// Complementary-pairs 3-net on A(m,m,4).
Multinet pairs_net(const Arrangement& monomial_l4);
/// Weighted 3-multinet on A(m,1,3): block i holds H_i (weight m) and the
/// opposite difference pencil (weight 1). 3-reduced iff m = 1 mod 3.
Multinet full_monomial_multinet(const Arrangement& full_monomial_l3);
/// The four singular triangles of the Hesse pencil as a 4-net.
Multinet hessian_4net(const Arrangement& hessian);

struct SearchOptions {
    int64_t max_results = 64;
    int64_t guard = 30;         // refuse larger arrangements unless overridden
    bool override_guard = false;
};

/// Exhaustive backtracking search for reduced k-nets (weights = 1, every
/// cross flat meeting every block with equal counts), up to block
/// relabeling. Deterministic canonical output.
std::vector<Multinet> search_nets(const Arrangement& a, const FlatTable& flats, int64_t k,
                                  const SearchOptions& options = {});

/// Basis of the pulled-back subspace im(phi*) in field^A: k-1 vectors taking
/// the weighted block value on each block. Over F_p the multinet must be
/// p-reduced.
template <class F>
std::vector<OneClass<F>> multinet_subspace(const Arrangement& a, const Multinet& net,
                                           const F& field) {
    check_well_formed(net, a.size());
    if constexpr (std::is_same_v<F, FpField>) {
        if (!net.h_reduced(field.p))
            throw user_error("multinet_subspace: multinet is not " + std::to_string(field.p) +
                             "-reduced");
    }
    const std::vector<int64_t> block_of = net.block_assignment();
    const int64_t k = net.k();
    std::vector<OneClass<F>> basis;
    for (int64_t b = 0; b + 1 < k; ++b) {
        OneClass<F> v(a.size(), field.zero());
        for (int64_t h = 0; h < a.size(); ++h) {
            if (block_of[h] == b)
                v[h] = field.from_long(net.mult[h]);
            else if (block_of[h] == k - 1)
                v[h] = field.sub(field.zero(), field.from_long(net.mult[h]));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Isotropy of the pulled-back subspace via the comultiplication route; see
/// os_quadratic. Works for unverified candidates too.
bool nabla_check(const Arrangement& a, const FlatTable& flats, const Multinet& net);

/// What a verified k-reduced k-multinet forces: positive monodromy
/// multiplicity e_d for every divisor d > 1 of k, and beta_p >= 1 for every
/// prime p | k. The beta claims are cross-checked on the spot.
struct MultinetConsequences {
    int64_t k = 0;
    std::vector<int64_t> positive_monodromy_divisors; // d | k, d > 1: e_d > 0
    std::vector<int64_t> positive_betti_primes;       // p | k prime: beta_p >= 1
};
MultinetConsequences multinet_consequences(const Arrangement& a, const FlatTable& flats,
                                           const Multinet& net);

/// The known multinet structures on a catalog arrangement, read off its
/// family metadata. Empty for families without one.
std::vector<Multinet> catalog_multinets(const Arrangement& a);

} // namespace arr

#endif
