#include <doctest.h>

#include <algorithm>
#include <set>

#include "arr/catalog.hpp"
#include "arr/errors.hpp"
#include "arr/flats.hpp"
#include "arr/matroid.hpp"
#include "test_helpers.hpp"

using namespace arr;
using namespace arr::testing;

TEST_CASE("validate flags structural problems") {
    SUBCASE("proportional normals") {
        Arrangement a = integer_arrangement({{1, 0, 0}, {2, 0, 0}});
        const auto v = validate(a);
        REQUIRE(v.size() == 1);
        CHECK(v[0].find("proportional") != std::string::npos);
    }
    SUBCASE("empty arrangement") {
        Arrangement a(3, 1);
        CHECK(!validate(a).empty());
    }
    SUBCASE("zero normal") {
        Arrangement a(2, 1);
        a.add_hyperplane({"Z", {CycElem(1), CycElem(1)}});
        CHECK(!validate(a).empty());
    }
    SUBCASE("duplicate labels") {
        Arrangement a(2, 1);
        a.add_hyperplane({"H", {CycElem::from_integer(1, 1), CycElem(1)}});
        a.add_hyperplane({"H", {CycElem(1), CycElem::from_integer(1, 1)}});
        CHECK(!validate(a).empty());
    }
    SUBCASE("order mismatch") {
        Arrangement a(1, 4);
        a.add_hyperplane({"H", {CycElem::from_integer(2, 1)}});
        CHECK(!validate(a).empty());
    }
    SUBCASE("catalog output is valid") {
        CHECK(validate(build(parse_family_spec("monomial:3:3"))).empty());
        CHECK(validate(build(parse_family_spec("G32"))).empty());
    }
}

TEST_CASE("arrangement rank") {
    CHECK(arrangement_rank(integer_arrangement({{1, 2, 3}})) == 1);
    CHECK(arrangement_rank(build(parse_family_spec("monomial:2:3"))) == 3);
    CHECK(arrangement_rank(build(parse_family_spec("full-monomial:2:3"))) == 3);
    CHECK(arrangement_rank(build(parse_family_spec("full-monomial:3:4"))) == 4);
    // braid normals all annihilate (1,...,1)
    CHECK(arrangement_rank(build(parse_family_spec("braid:3"))) == 2);
    CHECK(arrangement_rank(build(parse_family_spec("braid:4"))) == 3);
    CHECK(arrangement_rank(build(parse_family_spec("braid:5"))) == 4);
}

TEST_CASE("flat tables of small arrangements") {
    SUBCASE("three coordinate planes") {
        const FlatTable t = compute_flat_table(boolean_arrangement(3));
        REQUIRE(t.size() == 3);
        for (const Flat2& f : t.flats()) CHECK(f.multiplicity() == 2);
    }
    SUBCASE("pencil of four lines") {
        const FlatTable t = compute_flat_table(pencil_lines(4));
        REQUIRE(t.size() == 1);
        CHECK(t.flat(0).multiplicity() == 4);
    }
    SUBCASE("A(2,2,3) against brute force over all pairs") {
        const Arrangement a = build(parse_family_spec("monomial:2:3"));
        const FlatTable t = compute_flat_table(a);
        int64_t mult2 = 0, mult3 = 0;
        for (const Flat2& f : t.flats()) {
            if (f.multiplicity() == 2) ++mult2;
            else if (f.multiplicity() == 3) ++mult3;
            else CHECK(false);
        }
        CHECK(mult2 == 3);
        CHECK(mult3 == 4);
        // every unordered pair accounted for exactly once
        int64_t pairs = 0;
        for (const Flat2& f : t.flats()) pairs += binomial2(f.multiplicity());
        CHECK(pairs == binomial2(a.size()));
        for (int64_t i = 0; i < a.size(); ++i)
            for (int64_t j = i + 1; j < a.size(); ++j) CHECK(t.flat_of_pair(i, j) >= 0);
    }
}

TEST_CASE("flat table is independent of hyperplane order") {
    const Arrangement a = build(parse_family_spec("monomial:3:3"));
    Arrangement shuffled(a.ambient_dim(), a.cyclotomic_order());
    const std::vector<int64_t> perm{4, 7, 0, 2, 8, 1, 5, 3, 6};
    for (int64_t i : perm) shuffled.add_hyperplane(a.hyperplane(i));

    auto label_sets = [](const Arrangement& arr, const FlatTable& t) {
        std::set<std::set<std::string>> out;
        for (const Flat2& f : t.flats()) {
            std::set<std::string> labels;
            for (int64_t h : f.members) labels.insert(arr.hyperplane(h).label);
            out.insert(std::move(labels));
        }
        return out;
    };
    CHECK(label_sets(a, compute_flat_table(a)) == label_sets(shuffled, compute_flat_table(shuffled)));
}

TEST_CASE("restriction to a flat") {
    const Arrangement a = build(parse_family_spec("monomial:3:3"));
    const FlatTable t = compute_flat_table(a);

    SUBCASE("multiplicity-2 flats restrict to two hyperplanes") {
        const Arrangement g = boolean_arrangement(3);
        const FlatTable gt = compute_flat_table(g);
        CHECK(restrict_to_flat(g, gt, gt.flat(0)).size() == 2);
    }
    SUBCASE("a type II pencil restricts to a pencil") {
        // the flat holding all three H12^alpha
        const int64_t f = t.flat_of_pair(a.index_of("H12^0"), a.index_of("H12^1"));
        const Flat2& pencil = t.flat(f);
        REQUIRE(pencil.multiplicity() == 3);
        const Arrangement sub = restrict_to_flat(a, t, pencil);
        CHECK(sub.size() == 3);
        const FlatTable subt = compute_flat_table(sub);
        REQUIRE(subt.size() == 1);
        CHECK(subt.flat(0).multiplicity() == 3);
    }
    SUBCASE("type I_a flats of A(4,1,3) have m + 2 hyperplanes") {
        const Arrangement fm = build(parse_family_spec("full-monomial:4:3"));
        const FlatTable fmt = compute_flat_table(fm);
        const int64_t f = fmt.flat_of_pair(fm.index_of("H1"), fm.index_of("H2"));
        CHECK(fmt.flat(f).multiplicity() == 6);
        const Arrangement sub = restrict_to_flat(fm, fmt, fmt.flat(f));
        CHECK(sub.size() == 6);
        // line-closed: the restriction keeps the full member set of each of
        // its own flats
        const FlatTable subt = compute_flat_table(sub);
        for (const Flat2& f2 : subt.flats()) {
            const int64_t parent = fmt.flat_of_pair(fm.index_of(sub.hyperplane(f2.members[0]).label),
                                                    fm.index_of(sub.hyperplane(f2.members[1]).label));
            CHECK(fmt.flat(parent).multiplicity() == f2.multiplicity());
        }
    }
    SUBCASE("foreign flats are rejected") {
        Flat2 fake;
        fake.members = {0, 1, 2, 3, 4};
        CHECK_THROWS_AS(restrict_to_flat(a, t, fake), user_error);
    }
}

TEST_CASE("matroid decomposition") {
    SUBCASE("boolean arrangement splits into singletons") {
        const auto comps = decompose(boolean_arrangement(4));
        CHECK(comps.size() == 4);
    }
    SUBCASE("a rank-2 pencil of three lines is connected") {
        CHECK(decompose(pencil_lines(3)).size() == 1);
    }
    SUBCASE("block-diagonal product splits") {
        // A(2,2,3) in coordinates 1..3 plus the lone hyperplane w = 0
        const Arrangement base = build(parse_family_spec("monomial:2:3"));
        Arrangement prod(4, base.cyclotomic_order());
        for (const Hyperplane& h : base.hyperplanes()) {
            Hyperplane lift;
            lift.label = h.label;
            lift.normal = h.normal;
            lift.normal.push_back(CycElem(base.cyclotomic_order()));
            prod.add_hyperplane(std::move(lift));
        }
        Hyperplane w;
        w.label = "W";
        w.normal.assign(4, CycElem(base.cyclotomic_order()));
        w.normal[3] = CycElem::from_integer(base.cyclotomic_order(), 1);
        prod.add_hyperplane(std::move(w));

        const auto comps = decompose(prod);
        REQUIRE(comps.size() == 2);
        CHECK(comps[0].size() + comps[1].size() == 7);
    }
    SUBCASE("components carry the full rank") {
        for (const char* s : {"monomial:2:3", "full-monomial:2:3", "hessian"}) {
            const Arrangement a = build(parse_family_spec(s));
            const auto comps = decompose(a);
            int64_t rank_sum = 0;
            for (const auto& comp : comps) {
                Arrangement sub(a.ambient_dim(), a.cyclotomic_order());
                for (int64_t h : comp) sub.add_hyperplane(a.hyperplane(h));
                rank_sum += arrangement_rank(sub);
            }
            CHECK(rank_sum == arrangement_rank(a));
        }
    }
}
