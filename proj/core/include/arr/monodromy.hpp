#ifndef ARR_MONODROMY_HPP
#define ARR_MONODROMY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arr/arrangement.hpp"
#include "arr/flats.hpp"
#include "arr/multinet.hpp"
#include "arr/numeric.hpp"

namespace arr {

/// Resolution status of one eigenvalue-order multiplicity e_d.
struct MonodromyStatus {
    enum class Kind { zero, exact, range };
    Kind kind = Kind::range;
    int64_t value = 0;          // exact (or zero)
    int64_t lo = 0;             // range lower bound
    std::optional<int64_t> hi;  // range upper bound; empty = unbounded
    std::vector<std::string> rules;

    bool resolved() const { return kind != Kind::range; }
    int64_t exact_value() const; // throws unless resolved
};

/// Per-divisor monodromy data for H_1 of the Milnor fiber: one status for
/// each divisor d > 1 of n, plus e_1 = n - 1.
struct MonodromyProfile {
    std::string id;
    int64_t n = 0;
    std::map<int64_t, MonodromyStatus> e; // key: divisor d > 1 of n

    int64_t e1() const { return n - 1; }
    bool complete() const;
    /// e_d as an exact number; d outside the divisor set yields 0.
    int64_t exact_e(int64_t d) const;
};

/// Characteristic polynomial (t-1)^{n-1} prod Phi_d(t)^{e_d} in factored
/// form; complete only when every divisor is resolved.
struct CharPoly {
    int64_t n = 0;
    std::vector<std::pair<int64_t, int64_t>> factors; // (d, exponent); d = 1 first
    bool complete = false;
    std::vector<int64_t> unresolved; // divisors still carrying a range

    /// Dense integer coefficients of the expanded product (resolved factors
    /// only).
    std::vector<Int> expand() const;
    std::string to_string() const;
};

/// True iff some 2-flat has multiplicity divisible by d.
bool divisor_flat_screen(const Arrangement& a, const FlatTable& flats, int64_t d);

/// Assembles the per-divisor statuses by applying, in order: the
/// divisor-multiplicity screen, product vanishing, the prime equality on
/// reflection arrangements, the prime-power upper bound, and multinet lower
/// bounds. Contradictory rules raise internal_error.
MonodromyProfile monodromy_profile(const Arrangement& a, const FlatTable& flats,
                                   const std::map<int64_t, int64_t>& betti,
                                   const std::vector<Multinet>& nets, bool is_reflection);

CharPoly char_poly(const MonodromyProfile& profile);

} // namespace arr

#endif
