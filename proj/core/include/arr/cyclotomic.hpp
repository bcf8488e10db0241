#ifndef ARR_CYCLOTOMIC_HPP
#define ARR_CYCLOTOMIC_HPP

#include <cstdint>
#include <vector>

#include "arr/numeric.hpp"

namespace arr {

/// m-th cyclotomic polynomial as a dense integer coefficient vector,
/// index = degree. Monic, degree phi(m). Memoized; thread safe.
const std::vector<Int>& cyclotomic_polynomial(int64_t m);

/// An element of the cyclotomic field Q(zeta_m), stored in the power basis
/// 1, zeta, ..., zeta^{phi(m)-1} modulo the m-th cyclotomic polynomial.
/// Immutable value type; all arithmetic is exact.
class CycElem {
public:
    /// Zero element of Q(zeta_m).
    explicit CycElem(int64_t order);
    static CycElem from_rational(int64_t order, const Rat& value);
    static CycElem from_integer(int64_t order, long value);
    /// zeta_m^power (power taken mod m, negative allowed).
    static CycElem zeta(int64_t order, int64_t power);
    /// Builds an element from arbitrary power-basis coefficients; the vector
    /// is reduced mod Phi_m if longer than phi(m), padded if shorter.
    static CycElem from_coeffs(int64_t order, std::vector<Rat> coeffs);

    int64_t order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Value of a rational element; throws if not rational.
    Rat rational_value() const;

    CycElem operator+(const CycElem& rhs) const;
    CycElem operator-(const CycElem& rhs) const;
    CycElem operator*(const CycElem& rhs) const;
    CycElem operator-() const;
    bool operator==(const CycElem& rhs) const;
    bool operator!=(const CycElem& rhs) const { return !(*this == rhs); }

    /// Multiplicative inverse; throws user_error on zero.
    CycElem inverse() const;

    /// Image under the embedding Q(zeta_m) -> Q(zeta_{new_order}) sending
    /// zeta_m to zeta_{new_order}^{new_order/m}. Requires m | new_order.
    CycElem embedded(int64_t new_order) const;

    std::string to_string() const;

private:
    int64_t order_;
    std::vector<Rat> coeffs_; // size phi(order_)

    void check_same_order(const CycElem& rhs) const;
};

} // namespace arr

#endif
