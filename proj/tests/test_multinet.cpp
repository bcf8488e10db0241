#include <doctest.h>

#include <algorithm>

#include "arr/catalog.hpp"
#include "arr/errors.hpp"
#include "arr/multinet.hpp"
#include "arr/resonance.hpp"
#include "test_helpers.hpp"

using namespace arr;
using namespace arr::testing;

TEST_CASE("direction 3-net on A(3,3,3)") {
    const Arrangement a = build(parse_family_spec("monomial:3:3"));
    const FlatTable t = compute_flat_table(a);
    const Multinet net = fy_monomial_3net(a);
    const MultinetReport r = verify(a, t, net);
    REQUIRE(r.valid);
    CHECK(r.reduced);
    CHECK(net.k() == 3);
    // cross flats are exactly the 9 triples, each with n_X = 1; the three
    // pencils stay inside one block
    CHECK(r.cross_flat_values.size() == 9);
    for (const auto& [flat, nx] : r.cross_flat_values) {
        CHECK(t.flat(flat).multiplicity() == 3);
        CHECK(nx == 1);
    }
}

TEST_CASE("residue 3-net on A(m,m,3) with 3 | m") {
    for (const char* s : {"monomial:3:3", "monomial:6:3"}) {
        const Arrangement a = build(parse_family_spec(s));
        const FlatTable t = compute_flat_table(a);
        const Multinet net = mod3_net(a);
        const MultinetReport r = verify(a, t, net);
        REQUIRE(r.valid);
        CHECK(r.reduced);
        const int64_t m = a.cyclotomic_order();
        // under the residue colouring the pencils become cross flats with
        // n_X = m/3, and the distinct-residue triples give n_X = 1
        int64_t pencils = 0;
        for (const auto& [flat, nx] : r.cross_flat_values) {
            if (t.flat(flat).multiplicity() == m && m > 3) {
                CHECK(nx == m / 3);
                ++pencils;
            } else if (t.flat(flat).multiplicity() == 3) {
                CHECK(nx == 1);
            }
        }
        if (m > 3) CHECK(pencils == 3);
    }
    CHECK_THROWS_AS(mod3_net(build(parse_family_spec("monomial:4:3"))), user_error);
}

TEST_CASE("complementary-pairs 3-net on A(m,m,4)") {
    const Arrangement a = build(parse_family_spec("monomial:2:4"));
    const FlatTable t = compute_flat_table(a);
    const MultinetReport r = verify(a, t, pairs_net(a));
    REQUIRE(r.valid);
    CHECK(r.reduced);
    for (const auto& [flat, nx] : r.cross_flat_values) {
        CHECK(t.flat(flat).multiplicity() == 3);
        CHECK(nx == 1);
    }
}

TEST_CASE("weighted 3-multinet on A(m,1,3)") {
    const Arrangement a = build(parse_family_spec("full-monomial:4:3"));
    const FlatTable t = compute_flat_table(a);
    const Multinet net = full_monomial_multinet(a);
    const MultinetReport r = verify(a, t, net);
    REQUIRE(r.valid);
    CHECK(!r.reduced);
    CHECK(net.h_reduced(3)); // weights 1 and 4
    CHECK(std::find(r.reduced_mod.begin(), r.reduced_mod.end(), 3) != r.reduced_mod.end());
    // the coordinate flats carry n_X = m
    for (const auto& [flat, nx] : r.cross_flat_values) {
        if (t.flat(flat).multiplicity() == 6) CHECK(nx == 4);
        else CHECK(nx == 1);
    }

    const Arrangement a2 = build(parse_family_spec("full-monomial:2:3"));
    CHECK(!full_monomial_multinet(a2).h_reduced(3)); // 2 is not 1 mod 3
}

TEST_CASE("the Hesse triangles form a 4-net") {
    const Arrangement a = build(parse_family_spec("hessian"));
    const FlatTable t = compute_flat_table(a);
    const Multinet net = hessian_4net(a);
    CHECK(net.k() == 4);
    const MultinetReport r = verify(a, t, net);
    REQUIRE(r.valid);
    CHECK(r.reduced);
    // cross flats are the nine quadruple points with one line per triangle
    CHECK(r.cross_flat_values.size() == 9);
    for (const auto& [flat, nx] : r.cross_flat_values) {
        CHECK(t.flat(flat).multiplicity() == 4);
        CHECK(nx == 1);
    }
}

TEST_CASE("verify rejects malformed partitions and bad structures") {
    const Arrangement a = boolean_arrangement(3);
    const FlatTable t = compute_flat_table(a);

    Multinet singletons;
    singletons.blocks = {{0}, {1}, {2}};
    singletons.mult = {1, 1, 1};
    CHECK(!verify(a, t, singletons).valid); // double points cannot spread over 3 blocks

    Multinet overlap = singletons;
    overlap.blocks = {{0, 1}, {1}, {2}};
    CHECK_THROWS_AS(verify(a, t, overlap), user_error);

    Multinet missing = singletons;
    missing.blocks = {{0}, {1}};
    CHECK_THROWS_AS(verify(a, t, missing), user_error);

    Multinet bad_weight = singletons;
    bad_weight.mult = {1, 0, 1};
    CHECK_THROWS_AS(verify(a, t, bad_weight), user_error);
}

TEST_CASE("verdicts are invariant under block relabeling") {
    const Arrangement a = build(parse_family_spec("monomial:3:3"));
    const FlatTable t = compute_flat_table(a);
    const Multinet net = mod3_net(a);
    Multinet rotated = net;
    std::rotate(rotated.blocks.begin(), rotated.blocks.begin() + 1, rotated.blocks.end());
    const MultinetReport r1 = verify(a, t, net);
    const MultinetReport r2 = verify(a, t, rotated);
    CHECK(r1.valid == r2.valid);
    CHECK(r1.cross_flat_values == r2.cross_flat_values);
}

TEST_CASE("net search") {
    SUBCASE("A(2,2,3) has the direction net") {
        const Arrangement a = build(parse_family_spec("monomial:2:3"));
        const FlatTable t = compute_flat_table(a);
        const auto nets = search_nets(a, t, 3);
        REQUIRE(!nets.empty());
        const Multinet expected = fy_monomial_3net(a);
        bool found = false;
        for (const Multinet& n : nets) {
            if (n.blocks == expected.blocks) found = true;
            const MultinetReport r = verify(a, t, n);
            CHECK(r.valid);
            CHECK(r.reduced);
        }
        CHECK(found);
    }
    SUBCASE("generic triples carry no 3-net") {
        const Arrangement a = boolean_arrangement(3);
        CHECK(search_nets(a, compute_flat_table(a), 3).empty());
    }
    SUBCASE("guard") {
        const Arrangement a = build(parse_family_spec("monomial:7:5"));
        const FlatTable t = compute_flat_table(a);
        CHECK_THROWS_AS(search_nets(a, t, 3), user_error);
        SearchOptions opts;
        opts.guard = 100;
        opts.max_results = 1;
        CHECK_NOTHROW(search_nets(a, t, 3, opts));
    }
}

TEST_CASE("pulled-back subspaces") {
    const Arrangement a = build(parse_family_spec("monomial:3:3"));
    const FlatTable t = compute_flat_table(a);
    const Multinet net = fy_monomial_3net(a);
    RationalField q;

    SUBCASE("dimension k - 1 and isotropy") {
        const auto basis = multinet_subspace(a, net, q);
        REQUIRE(basis.size() == 2);
        CHECK(q.rank(basis) == 2);
        CHECK(is_isotropic(a, t, q, basis));
    }
    SUBCASE("two structures meeting only at zero") {
        for (const char* s : {"monomial:3:3", "monomial:6:3"}) {
            const Arrangement arr = build(parse_family_spec(s));
            const auto b1 = multinet_subspace(arr, fy_monomial_3net(arr), q);
            const auto b2 = multinet_subspace(arr, mod3_net(arr), q);
            std::vector<std::vector<Rat>> stacked;
            stacked.insert(stacked.end(), b1.begin(), b1.end());
            stacked.insert(stacked.end(), b2.begin(), b2.end());
            const int64_t dim_sum = rank_rational(stacked);
            CHECK(static_cast<int64_t>(b1.size() + b2.size()) - dim_sum == 0);
        }
    }
    SUBCASE("the diagonal class lies in the mod-p subspace of a p-reduced structure") {
        const Arrangement hes = build(parse_family_spec("hessian"));
        FpField f2{2};
        auto basis = multinet_subspace(hes, hessian_4net(hes), f2);
        REQUIRE(basis.size() == 3);
        CHECK(f2.rank(basis) == 3);
        basis.push_back(OneClass<FpField>(hes.size(), 1));
        CHECK(f2.rank(basis) == 3); // adding sigma_p does not raise the rank
    }
    SUBCASE("reduction hypothesis enforced over F_p") {
        const Arrangement fm = build(parse_family_spec("full-monomial:2:3"));
        FpField f3{3};
        CHECK_THROWS_AS(multinet_subspace(fm, full_monomial_multinet(fm), f3), user_error);
    }
}

TEST_CASE("what a reduced structure forces") {
    SUBCASE("the Hesse 4-net") {
        const Arrangement a = build(parse_family_spec("hessian"));
        const FlatTable t = compute_flat_table(a);
        const MultinetConsequences c = multinet_consequences(a, t, hessian_4net(a));
        CHECK(c.k == 4);
        CHECK(c.positive_monodromy_divisors == std::vector<int64_t>{2, 4});
        CHECK(c.positive_betti_primes == std::vector<int64_t>{2});
    }
    SUBCASE("the direction net") {
        const Arrangement a = build(parse_family_spec("monomial:3:3"));
        const FlatTable t = compute_flat_table(a);
        const MultinetConsequences c = multinet_consequences(a, t, fy_monomial_3net(a));
        CHECK(c.positive_monodromy_divisors == std::vector<int64_t>{3});
        CHECK(c.positive_betti_primes == std::vector<int64_t>{3});
    }
    SUBCASE("3-reduced weighted multinet on A(4,1,3)") {
        const Arrangement a = build(parse_family_spec("full-monomial:4:3"));
        const FlatTable t = compute_flat_table(a);
        const MultinetConsequences c = multinet_consequences(a, t, full_monomial_multinet(a));
        CHECK(c.positive_monodromy_divisors == std::vector<int64_t>{3});
    }
    SUBCASE("non-reduced weights are rejected") {
        const Arrangement a = build(parse_family_spec("full-monomial:2:3"));
        const FlatTable t = compute_flat_table(a);
        CHECK_THROWS_AS(multinet_consequences(a, t, full_monomial_multinet(a)), user_error);
    }
    SUBCASE("invalid candidates are rejected") {
        const Arrangement a = boolean_arrangement(3);
        const FlatTable t = compute_flat_table(a);
        Multinet bogus;
        bogus.blocks = {{0}, {1}, {2}};
        bogus.mult = {1, 1, 1};
        CHECK_THROWS_AS(multinet_consequences(a, t, bogus), user_error);
    }
}
