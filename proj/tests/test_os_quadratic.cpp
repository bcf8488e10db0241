#include <doctest.h>

#include <random>

#include "arr/catalog.hpp"
#include "arr/errors.hpp"
#include "arr/multinet.hpp"
#include "arr/os_quadratic.hpp"
#include "arr/resonance.hpp"
#include "test_helpers.hpp"

using namespace arr;
using namespace arr::testing;

namespace {

// Independent oracle for the degree-two product. Expands sigma.tau over all
// ordered pairs of distinct hyperplanes sharing a flat and rewrites each
// monomial e_H e_K through the dependent-triple relation
// e_i e_j = e_0 e_j - e_0 e_i (members indexed within their flat, base 0).
// Shares no code with cup().
template <class F>
DegreeTwoClass<F> cup_oracle(const FlatTable& flats, const F& field,
                             const OneClass<F>& sigma, const OneClass<F>& tau) {
    DegreeTwoClass<F> out;
    for (const Flat2& flat : flats.flats()) {
        const int64_t q = flat.multiplicity();
        std::vector<typename F::Elem> block(q - 1, field.zero());
        auto add_monomial = [&](int64_t a, int64_t b, const typename F::Elem& coeff) {
            // e_{members[a]} e_{members[b]} with a < b in member order
            if (a == 0) {
                block[b - 1] = field.add(block[b - 1], coeff);
            } else {
                block[b - 1] = field.add(block[b - 1], coeff);
                block[a - 1] = field.sub(block[a - 1], coeff);
            }
        };
        for (int64_t i = 0; i < q; ++i)
            for (int64_t j = 0; j < q; ++j) {
                if (i == j) continue;
                const typename F::Elem c =
                    field.mul(sigma[flat.members[i]], tau[flat.members[j]]);
                if (i < j) add_monomial(i, j, c);
                else add_monomial(j, i, field.sub(field.zero(), c));
            }
        out.per_flat.push_back(std::move(block));
    }
    return out;
}

template <class F>
bool classes_equal(const F& field, const DegreeTwoClass<F>& a, const DegreeTwoClass<F>& b) {
    if (a.per_flat.size() != b.per_flat.size()) return false;
    for (size_t f = 0; f < a.per_flat.size(); ++f) {
        if (a.per_flat[f].size() != b.per_flat[f].size()) return false;
        for (size_t i = 0; i < a.per_flat[f].size(); ++i)
            if (!field.is_zero(field.sub(a.per_flat[f][i], b.per_flat[f][i]))) return false;
    }
    return true;
}

} // namespace

TEST_CASE("cup product agrees with the rewriting oracle") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<long> value(-5, 5);

    std::vector<Arrangement> arrangements;
    arrangements.push_back(boolean_arrangement(3));
    arrangements.push_back(pencil_lines(4));
    arrangements.push_back(build(parse_family_spec("monomial:2:3")));
    arrangements.push_back(build(parse_family_spec("braid:4")));
    for (int i = 0; i < 4; ++i) arrangements.push_back(random_rank3_arrangement(rng, 5 + i));

    int cases = 0;
    for (const Arrangement& a : arrangements) {
        const FlatTable t = compute_flat_table(a);
        for (int rep = 0; rep < 8; ++rep) {
            // over Q
            RationalField q;
            OneClass<RationalField> sigma(a.size()), tau(a.size());
            for (auto& v : sigma) v = Rat(value(rng));
            for (auto& v : tau) v = Rat(value(rng));
            CHECK(classes_equal(q, cup(t, q, sigma, tau), cup_oracle(t, q, sigma, tau)));

            // over F_p
            for (int64_t p : {2, 3, 5}) {
                FpField fp{p};
                OneClass<FpField> s2(a.size()), t2(a.size());
                for (auto& v : s2) v = fp.from_long(value(rng));
                for (auto& v : t2) v = fp.from_long(value(rng));
                CHECK(classes_equal(fp, cup(t, fp, s2, t2), cup_oracle(t, fp, s2, t2)));
                ++cases;
            }
            ++cases;
        }
    }
    CHECK(cases >= 100);
}

TEST_CASE("cup is antisymmetric and vanishes on the diagonal") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> value(-3, 3);
    const Arrangement a = build(parse_family_spec("monomial:2:3"));
    const FlatTable t = compute_flat_table(a);
    RationalField q;
    for (int rep = 0; rep < 10; ++rep) {
        OneClass<RationalField> sigma(a.size()), tau(a.size());
        for (auto& v : sigma) v = Rat(value(rng));
        for (auto& v : tau) v = Rat(value(rng));
        CHECK(cup(t, q, sigma, sigma).is_zero(q));

        const auto st = cup(t, q, sigma, tau);
        const auto ts = cup(t, q, tau, sigma);
        for (size_t f = 0; f < st.per_flat.size(); ++f)
            for (size_t i = 0; i < st.per_flat[f].size(); ++i)
                CHECK(st.per_flat[f][i] + ts.per_flat[f][i] == 0);
    }
}

TEST_CASE("double points contribute the Koszul coefficient") {
    // On a generic triple every flat is a double point {K, H}; the
    // coefficient must be sigma_K tau_H - tau_K sigma_H.
    const Arrangement a = boolean_arrangement(3);
    const FlatTable t = compute_flat_table(a);
    RationalField q;
    OneClass<RationalField> sigma{Rat(2), Rat(-1), Rat(5)};
    OneClass<RationalField> tau{Rat(3), Rat(7), Rat(1)};
    const auto c = cup(t, q, sigma, tau);
    for (int64_t f = 0; f < t.size(); ++f) {
        const int64_t k = t.flat(f).members[0];
        const int64_t h = t.flat(f).members[1];
        CHECK(c.per_flat[f][0] == sigma[k] * tau[h] - tau[k] * sigma[h]);
    }
}

TEST_CASE("cocycles are exactly the kernel of the diagonal cup") {
    for (const char* s : {"monomial:3:3", "full-monomial:4:3", "hessian"}) {
        const Arrangement a = build(parse_family_spec(s));
        const FlatTable t = compute_flat_table(a);
        for (int64_t p : {2, 3}) {
            FpField fp{p};
            OneClass<FpField> ones(a.size(), 1);
            for (const auto& eta : cocycle_space(a, t, p).basis) {
                CHECK(cup(t, fp, ones, eta).is_zero(fp));
            }
        }
    }
}

TEST_CASE("the cochain route reproduces beta") {
    auto check_match = [](const Arrangement& a) {
        const FlatTable t = compute_flat_table(a);
        for (int64_t p : {2, 3, 5})
            CHECK(aomoto_h1(a, t, p) == beta_p(a, t, p).value);
    };
    check_match(build(parse_family_spec("monomial:3:3")));
    check_match(build(parse_family_spec("monomial:2:4")));
    check_match(build(parse_family_spec("full-monomial:4:3")));
    check_match(build(parse_family_spec("hessian")));
    check_match(boolean_arrangement(3));
    check_match(pencil_lines(6));

    const Arrangement a333 = build(parse_family_spec("monomial:3:3"));
    CHECK(aomoto_h1(a333, compute_flat_table(a333), 3) == 2);
    const Arrangement hes = build(parse_family_spec("hessian"));
    CHECK(aomoto_h1(hes, compute_flat_table(hes), 2) == 2);
}

TEST_CASE("isotropy") {
    const Arrangement a = boolean_arrangement(3);
    const FlatTable t = compute_flat_table(a);
    RationalField q;

    SUBCASE("random pairs on a generic triple are not isotropic") {
        std::vector<OneClass<RationalField>> basis{{Rat(1), Rat(0), Rat(0)},
                                                   {Rat(0), Rat(1), Rat(0)}};
        CHECK(!is_isotropic(a, t, q, basis));
    }
    SUBCASE("dependent bases are rejected") {
        std::vector<OneClass<RationalField>> basis{{Rat(1), Rat(1), Rat(0)},
                                                   {Rat(2), Rat(2), Rat(0)}};
        CHECK_THROWS_AS(is_isotropic(a, t, q, basis), user_error);
    }
    SUBCASE("the diagonal class and a witness cocycle span an isotropic plane") {
        const Arrangement fm = build(parse_family_spec("full-monomial:4:3"));
        const FlatTable fmt = compute_flat_table(fm);
        const BettiNumber b = beta_p(fm, fmt, 3);
        REQUIRE(b.witness.has_value());
        FpField fp{3};
        std::vector<OneClass<FpField>> basis{OneClass<FpField>(fm.size(), 1), *b.witness};
        CHECK(is_isotropic(fm, fmt, fp, basis));
    }
}

TEST_CASE("the comultiplication route matches the cup route") {
    SUBCASE("valid structures on A(3,3,3)") {
        const Arrangement a = build(parse_family_spec("monomial:3:3"));
        const FlatTable t = compute_flat_table(a);
        CHECK(nabla_check(a, t, fy_monomial_3net(a)));
        CHECK(nabla_check(a, t, mod3_net(a)));
    }
    SUBCASE("an arbitrary partition of a generic triple fails both routes") {
        const Arrangement a = boolean_arrangement(3);
        const FlatTable t = compute_flat_table(a);
        Multinet bogus;
        bogus.blocks = {{0}, {1}, {2}};
        bogus.mult = {1, 1, 1};
        CHECK(!nabla_check(a, t, bogus));
        // agreement with the direct isotropy of the pulled-back basis
        RationalField q;
        CHECK(!is_isotropic(a, t, q, multinet_subspace(a, bogus, q)));
    }
}
