#ifndef ARR_OS_QUADRATIC_HPP
#define ARR_OS_QUADRATIC_HPP

#include <cstdint>
#include <vector>

#include "arr/arrangement.hpp"
#include "arr/errors.hpp"
#include "arr/flats.hpp"
#include "arr/linalg.hpp"
#include "arr/numeric.hpp"

namespace arr {

/// Coefficient field policies for the degree-<=2 cohomology computations.

struct RationalField {
    using Elem = Rat;
    Elem zero() const { return Rat(0); }
    Elem from_long(long long v) const { return Rat(static_cast<long>(v)); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    bool is_zero(const Elem& a) const { return a == 0; }
    int64_t rank(const std::vector<std::vector<Elem>>& rows) const { return rank_rational(rows); }
};

struct FpField {
    int64_t p;
    using Elem = int64_t;
    Elem zero() const { return 0; }
    Elem from_long(long long v) const {
        Elem r = static_cast<Elem>(v % p);
        return r < 0 ? r + p : r;
    }
    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem sub(Elem a, Elem b) const { return ((a - b) % p + p) % p; }
    Elem mul(Elem a, Elem b) const { return a * b % p; }
    bool is_zero(Elem a) const { return a % p == 0; }
    int64_t rank(const std::vector<std::vector<Elem>>& rows) const {
        if (rows.empty()) return 0;
        PrimeFieldMatrix m(p, static_cast<int64_t>(rows.size()),
                           static_cast<int64_t>(rows[0].size()));
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < rows[i].size(); ++j)
                m.set(static_cast<int64_t>(i), static_cast<int64_t>(j), rows[i][j]);
        return m.rank();
    }
};

/// Degree-one cohomology class in the distinguished basis, one coordinate
/// per hyperplane.
template <class F>
using OneClass = std::vector<typename F::Elem>;

/// Degree-two class in the per-flat basis b^X_H, H running over the members
/// of X other than the least-index one.
template <class F>
struct DegreeTwoClass {
    std::vector<std::vector<typename F::Elem>> per_flat;

    bool is_zero(const F& field) const {
        for (const auto& block : per_flat)
            for (const auto& c : block)
                if (!field.is_zero(c)) return false;
        return true;
    }
};

/// Cup product of two degree-one classes. The X-component coefficient of
/// b^X_H is sigma_X tau_H - tau_X sigma_H with sigma_X the sum of sigma over
/// the members of X. Bilinear and antisymmetric.
template <class F>
DegreeTwoClass<F> cup(const FlatTable& flats, const F& field, const OneClass<F>& sigma,
                      const OneClass<F>& tau) {
    if (static_cast<int64_t>(sigma.size()) != flats.hyperplane_count() ||
        static_cast<int64_t>(tau.size()) != flats.hyperplane_count())
        throw user_error("cup: class size does not match the arrangement");
    DegreeTwoClass<F> out;
    out.per_flat.reserve(flats.size());
    for (const Flat2& f : flats.flats()) {
        typename F::Elem sigma_x = field.zero();
        typename F::Elem tau_x = field.zero();
        for (int64_t h : f.members) {
            sigma_x = field.add(sigma_x, sigma[h]);
            tau_x = field.add(tau_x, tau[h]);
        }
        std::vector<typename F::Elem> block;
        block.reserve(f.members.size() - 1);
        for (size_t i = 1; i < f.members.size(); ++i) {
            const int64_t h = f.members[i];
            block.push_back(field.sub(field.mul(sigma_x, tau[h]), field.mul(tau_x, sigma[h])));
        }
        out.per_flat.push_back(std::move(block));
    }
    return out;
}

/// Dimension of H^1 of the mod-p cochain complex with differential
/// "multiply by the diagonal class": dim ker(cup(sigma_p, -)) - 1.
/// Independent route to the Aomoto-Betti number.
int64_t aomoto_h1(const Arrangement& a, const FlatTable& flats, int64_t p);

/// True iff all pairwise cup products of the (independent) basis vanish.
template <class F>
bool is_isotropic(const Arrangement& a, const FlatTable& flats, const F& field,
                  const std::vector<OneClass<F>>& basis) {
    (void)a;
    if (basis.empty()) return true;
    if (field.rank(basis) != static_cast<int64_t>(basis.size()))
        throw user_error("is_isotropic: basis vectors are dependent");
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j)
            if (!cup(flats, field, basis[i], basis[j]).is_zero(field)) return false;
    return true;
}

/// Dual route to the isotropy test: evaluates the composition of the
/// comultiplication with the second exterior power of the block/weight map
/// on the degree-two generators, flat by flat. Asserts agreement with the
/// cup-product route and returns the common verdict.
bool nabla_check(const Arrangement& a, const FlatTable& flats, int64_t k,
                 const std::vector<int64_t>& block_of, const std::vector<int64_t>& weight);

} // namespace arr

#endif
