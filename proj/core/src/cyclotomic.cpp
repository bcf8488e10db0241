#include "arr/cyclotomic.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <sstream>

#include "arr/errors.hpp"

namespace arr {

int64_t euler_phi(int64_t m) {
    if (m < 1) throw user_error("euler_phi: argument must be >= 1");
    int64_t result = m;
    int64_t n = m;
    for (int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

bool is_prime(int64_t p) {
    if (p < 2) return false;
    for (int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::vector<int64_t> primes_up_to(int64_t n) {
    std::vector<int64_t> out;
    for (int64_t p = 2; p <= n; ++p)
        if (is_prime(p)) out.push_back(p);
    return out;
}

std::vector<int64_t> divisors(int64_t n) {
    if (n < 1) throw user_error("divisors: argument must be >= 1");
    std::vector<int64_t> small, large;
    for (int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

namespace {

void trim(std::vector<Int>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division by a monic integer polynomial; the remainder must vanish.
std::vector<Int> divide_exact(std::vector<Int> num, const std::vector<Int>& den) {
    const size_t dd = den.size() - 1;
    require_internal(num.size() > dd, "divide_exact: degree underflow");
    std::vector<Int> quot(num.size() - dd, 0);
    for (size_t k = quot.size(); k-- > 0;) {
        Int c = num[k + dd];
        quot[k] = c;
        if (c != 0)
            for (size_t i = 0; i <= dd; ++i) num[k + i] -= c * den[i];
    }
    trim(num);
    require_internal(num.empty(), "cyclotomic polynomial division left a remainder");
    return quot;
}

const std::vector<Int>& cyclotomic_impl(int64_t m, std::map<int64_t, std::vector<Int>>& cache) {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    // x^m - 1 divided by every proper Phi_d, d | m.
    std::vector<Int> poly(m + 1, 0);
    poly[0] = -1;
    poly[m] = 1;
    for (int64_t d : divisors(m))
        if (d < m) poly = divide_exact(std::move(poly), cyclotomic_impl(d, cache));
    require_internal(static_cast<int64_t>(poly.size()) == euler_phi(m) + 1,
                     "cyclotomic polynomial has wrong degree");
    return cache.emplace(m, std::move(poly)).first->second;
}

// Rational dense-polynomial helpers for field arithmetic mod Phi_m.

void trim_rat(std::vector<Rat>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Reduces a dense rational polynomial modulo the (monic, integer) Phi_m.
void reduce_mod_phi(std::vector<Rat>& poly, const std::vector<Int>& phi) {
    const size_t deg = phi.size() - 1;
    for (size_t d = poly.size(); d-- > deg;) {
        Rat c = poly[d];
        if (c != 0) {
            for (size_t i = 0; i <= deg; ++i) poly[d - deg + i] -= c * Rat(phi[i]);
        }
    }
    poly.resize(deg, Rat(0));
}

// Polynomial division over Q: returns quotient, leaves remainder in num.
std::vector<Rat> divmod_rat(std::vector<Rat>& num, const std::vector<Rat>& den) {
    trim_rat(num);
    std::vector<Rat> quot;
    if (num.size() < den.size()) return quot;
    quot.assign(num.size() - den.size() + 1, Rat(0));
    const size_t dd = den.size() - 1;
    const Rat lead = den.back();
    for (size_t k = quot.size(); k-- > 0;) {
        if (num.size() < k + dd + 1) continue;
        Rat c = num[k + dd] / lead;
        quot[k] = c;
        if (c != 0)
            for (size_t i = 0; i <= dd; ++i) num[k + i] -= c * den[i];
    }
    trim_rat(num);
    return quot;
}

} // namespace

const std::vector<Int>& cyclotomic_polynomial(int64_t m) {
    if (m < 1) throw user_error("cyclotomic_polynomial: order must be >= 1");
    static std::mutex mutex;
    static std::map<int64_t, std::vector<Int>> cache;
    std::scoped_lock lock(mutex);
    return cyclotomic_impl(m, cache);
}

CycElem::CycElem(int64_t order) : order_(order) {
    if (order < 1) throw user_error("CycElem: order must be >= 1");
    coeffs_.assign(euler_phi(order), Rat(0));
}

CycElem CycElem::from_rational(int64_t order, const Rat& value) {
    CycElem e(order);
    e.coeffs_[0] = value;
    return e;
}

CycElem CycElem::from_integer(int64_t order, long value) {
    return from_rational(order, Rat(value));
}

CycElem CycElem::zeta(int64_t order, int64_t power) {
    power %= order;
    if (power < 0) power += order;
    std::vector<Rat> poly(power + 1, Rat(0));
    poly[power] = 1;
    return from_coeffs(order, std::move(poly));
}

CycElem CycElem::from_coeffs(int64_t order, std::vector<Rat> coeffs) {
    CycElem e(order);
    reduce_mod_phi(coeffs, cyclotomic_polynomial(order));
    e.coeffs_ = std::move(coeffs);
    return e;
}

bool CycElem::is_zero() const {
    for (const Rat& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycElem::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rat CycElem::rational_value() const {
    if (!is_rational()) throw user_error("CycElem: not a rational element");
    return coeffs_[0];
}

void CycElem::check_same_order(const CycElem& rhs) const {
    if (order_ != rhs.order_)
        throw user_error("CycElem: cyclotomic order mismatch (" + std::to_string(order_) +
                         " vs " + std::to_string(rhs.order_) + ")");
}

CycElem CycElem::operator+(const CycElem& rhs) const {
    check_same_order(rhs);
    CycElem out(order_);
    for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] + rhs.coeffs_[i];
    return out;
}

CycElem CycElem::operator-(const CycElem& rhs) const {
    check_same_order(rhs);
    CycElem out(order_);
    for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] - rhs.coeffs_[i];
    return out;
}

CycElem CycElem::operator-() const {
    CycElem out(order_);
    for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = -coeffs_[i];
    return out;
}

CycElem CycElem::operator*(const CycElem& rhs) const {
    check_same_order(rhs);
    const size_t n = coeffs_.size();
    std::vector<Rat> conv(2 * n - 1, Rat(0));
    for (size_t i = 0; i < n; ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < n; ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            conv[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return from_coeffs(order_, std::move(conv));
}

bool CycElem::operator==(const CycElem& rhs) const {
    return order_ == rhs.order_ && coeffs_ == rhs.coeffs_;
}

CycElem CycElem::inverse() const {
    if (is_zero()) throw user_error("CycElem: inverse of zero");
    // Extended Euclid against Phi_m over Q[x]; Phi_m is irreducible so the
    // gcd is a nonzero constant and the Bezout coefficient of *this is the
    // inverse after scaling.
    const std::vector<Int>& phi = cyclotomic_polynomial(order_);
    std::vector<Rat> r0(phi.size());
    for (size_t i = 0; i < phi.size(); ++i) r0[i] = Rat(phi[i]);
    std::vector<Rat> r1 = coeffs_;
    trim_rat(r1);
    std::vector<Rat> t0{Rat(0)}, t1{Rat(1)};
    while (!r1.empty()) {
        std::vector<Rat> rem = r0;
        std::vector<Rat> q = divmod_rat(rem, r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        // t0, t1 = t1, t0 - q*t1
        std::vector<Rat> qt(q.size() + t1.size(), Rat(0));
        if (!q.empty())
            for (size_t i = 0; i < q.size(); ++i) {
                if (q[i] == 0) continue;
                for (size_t j = 0; j < t1.size(); ++j) qt[i + j] += q[i] * t1[j];
            }
        std::vector<Rat> next(std::max(t0.size(), qt.size()), Rat(0));
        for (size_t i = 0; i < t0.size(); ++i) next[i] += t0[i];
        for (size_t i = 0; i < qt.size(); ++i) next[i] -= qt[i];
        trim_rat(next);
        t0 = std::move(t1);
        t1 = std::move(next);
    }
    require_internal(r0.size() == 1 && r0[0] != 0,
                     "CycElem::inverse: gcd with the cyclotomic polynomial is not constant");
    for (Rat& c : t0) c /= r0[0];
    return from_coeffs(order_, std::move(t0));
}

CycElem CycElem::embedded(int64_t new_order) const {
    if (new_order < order_ || new_order % order_ != 0)
        throw user_error("CycElem::embedded: target order must be a multiple of the current order");
    if (new_order == order_) return *this;
    const int64_t k = new_order / order_;
    std::vector<Rat> poly(k * (coeffs_.size() - 1) + 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) poly[k * i] = coeffs_[i];
    return from_coeffs(new_order, std::move(poly));
}

std::string CycElem::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        Rat c = coeffs_[i];
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        } else if (c < 0 && i > 0) {
            os << "-";
            c = -c;
        }
        first = false;
        const bool unit = (c == 1 && i > 0);
        if (!unit) os << c;
        if (i > 0) {
            if (!unit) os << "*";
            os << "z" << order_;
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

} // namespace arr
