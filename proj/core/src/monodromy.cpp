#include "arr/monodromy.hpp"

#include <algorithm>
#include <sstream>

#include "arr/cyclotomic.hpp"
#include "arr/errors.hpp"
#include "arr/matroid.hpp"

namespace arr {

int64_t MonodromyStatus::exact_value() const {
    if (kind == Kind::zero) return 0;
    if (kind == Kind::exact) return value;
    throw user_error("MonodromyStatus: value is not resolved");
}

bool MonodromyProfile::complete() const {
    return std::all_of(e.begin(), e.end(),
                       [](const auto& kv) { return kv.second.resolved(); });
}

int64_t MonodromyProfile::exact_e(int64_t d) const {
    if (d == 1) return e1();
    auto it = e.find(d);
    if (it == e.end()) return 0; // d does not divide n
    return it->second.exact_value();
}

bool divisor_flat_screen(const Arrangement& a, const FlatTable& flats, int64_t d) {
    (void)a;
    if (d < 2) throw user_error("divisor_flat_screen: d must be >= 2");
    for (const Flat2& f : flats.flats())
        if (f.multiplicity() % d == 0) return true;
    return false;
}

namespace {

// The prime p with d = p^s, or 0 if d is not a prime power.
int64_t prime_power_base(int64_t d) {
    for (int64_t p = 2; p * p <= d; ++p) {
        if (d % p != 0) continue;
        while (d % p == 0) d /= p;
        return d == 1 ? p : 0;
    }
    return d; // d itself prime (or 1, excluded by callers)
}

} // namespace

MonodromyProfile monodromy_profile(const Arrangement& a, const FlatTable& flats,
                                   const std::map<int64_t, int64_t>& betti,
                                   const std::vector<Multinet>& nets, bool is_reflection) {
    require_valid(a);
    MonodromyProfile profile;
    profile.id = a.metadata().family.value_or("arrangement");
    profile.n = a.size();

    const bool decomposable = decompose(a).size() >= 2;

    // Re-check the supplied multinets; only verified ones with weights
    // congruent to 1 mod k can contribute lower bounds.
    std::vector<int64_t> usable_net_orders;
    for (const Multinet& net : nets) {
        const MultinetReport report = verify(a, flats, net);
        if (report.valid && net.h_reduced(net.k())) usable_net_orders.push_back(net.k());
    }

    auto betti_of = [&](int64_t p) {
        auto it = betti.find(p);
        if (it == betti.end())
            throw user_error("monodromy_profile: beta_" + std::to_string(p) +
                             " required but not supplied");
        return it->second;
    };

    for (int64_t d : divisors(profile.n)) {
        if (d == 1) continue;
        MonodromyStatus status;

        bool zero = false;
        if (!divisor_flat_screen(a, flats, d)) {
            zero = true;
            status.rules.push_back("no 2-flat multiplicity divisible by " + std::to_string(d));
        }
        if (decomposable) {
            zero = true;
            status.rules.push_back("product arrangement: e_d = 0 for all d > 1");
        }

        std::optional<int64_t> exact;
        if (is_prime(d) && is_reflection) {
            exact = betti_of(d);
            status.rules.push_back("reflection arrangement: e_p = beta_p for p prime");
        }

        std::optional<int64_t> hi;
        const int64_t p = prime_power_base(d);
        if (p != 0 && is_prime(p)) {
            hi = betti_of(p);
            status.rules.push_back("modular bound: e_{p^s} <= beta_p (p = " + std::to_string(p) +
                                   ")");
        }

        int64_t lo = 0;
        for (int64_t k : usable_net_orders)
            if (k % d == 0) {
                lo = std::max<int64_t>(lo, 1);
                status.rules.push_back("verified reduced " + std::to_string(k) +
                                       "-multinet: e_d > 0 for d | k");
            }

        // Combine, surfacing contradictions as internal errors.
        if (zero) {
            require_internal(!exact || *exact == 0,
                             "monodromy rules conflict: vanishing rule vs exact value");
            require_internal(lo == 0, "monodromy rules conflict: vanishing rule vs lower bound");
            status.kind = MonodromyStatus::Kind::zero;
            status.value = 0;
        } else if (exact) {
            require_internal(!hi || *exact <= *hi, "monodromy rules conflict: exact above bound");
            require_internal(lo <= *exact, "monodromy rules conflict: exact below lower bound");
            status.kind = MonodromyStatus::Kind::exact;
            status.value = *exact;
        } else if (hi && lo == *hi) {
            status.kind = MonodromyStatus::Kind::exact;
            status.value = lo;
            status.rules.push_back("bounds meet");
        } else {
            require_internal(!hi || lo <= *hi, "monodromy rules conflict: lower bound above upper");
            status.kind = MonodromyStatus::Kind::range;
            status.lo = lo;
            status.hi = hi;
        }
        profile.e.emplace(d, std::move(status));
    }
    return profile;
}

CharPoly char_poly(const MonodromyProfile& profile) {
    CharPoly poly;
    poly.n = profile.n;
    poly.factors.emplace_back(1, profile.n - 1);
    for (const auto& [d, status] : profile.e) {
        if (!status.resolved()) {
            poly.unresolved.push_back(d);
            continue;
        }
        const int64_t e = status.exact_value();
        if (e > 0) poly.factors.emplace_back(d, e);
    }
    poly.complete = poly.unresolved.empty();
    return poly;
}

std::vector<Int> CharPoly::expand() const {
    std::vector<Int> result{1};
    auto mul_by = [&](const std::vector<Int>& f, int64_t times) {
        for (int64_t t = 0; t < times; ++t) {
            std::vector<Int> next(result.size() + f.size() - 1, 0);
            for (size_t i = 0; i < result.size(); ++i)
                for (size_t j = 0; j < f.size(); ++j) next[i + j] += result[i] * f[j];
            result = std::move(next);
        }
    };
    for (const auto& [d, exponent] : factors) mul_by(cyclotomic_polynomial(d), exponent);
    return result;
}

std::string CharPoly::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, exponent] : factors) {
        if (exponent == 0) continue;
        if (!first) os << " * ";
        first = false;
        os << (d == 1 ? "(t-1)" : "Phi_" + std::to_string(d) + "(t)");
        if (exponent > 1) os << "^" << exponent;
    }
    if (first) os << "1";
    if (!complete) {
        os << "  [unresolved:";
        for (int64_t d : unresolved) os << " e_" << d;
        os << "]";
    }
    return os.str();
}

} // namespace arr
