#include <doctest.h>

#include "arr/catalog.hpp"
#include "arr/errors.hpp"
#include "arr/io_json.hpp"
#include "arr/monodromy.hpp"
#include "arr/resonance.hpp"
#include "arr/os_quadratic.hpp"

using namespace arr;

TEST_CASE("arrangement round trip") {
    for (const char* s : {"monomial:3:3", "G32", "hessian"}) {
        const Arrangement a = build(parse_family_spec(s));
        const json j = arrangement_to_json(a);
        const Arrangement back = arrangement_from_json(j);
        CHECK(back.size() == a.size());
        CHECK(back.cyclotomic_order() == a.cyclotomic_order());
        CHECK(back.ambient_dim() == a.ambient_dim());
        for (int64_t i = 0; i < a.size(); ++i) {
            CHECK(back.hyperplane(i).label == a.hyperplane(i).label);
            CHECK(back.hyperplane(i).normal == a.hyperplane(i).normal);
        }
        CHECK(arrangement_to_json(back) == j);
    }
}

TEST_CASE("arrangement schema violations") {
    CHECK_THROWS_AS(arrangement_from_json(json::array()), user_error);
    CHECK_THROWS_AS(arrangement_from_json(json{{"cyclotomic_order", 1}}), user_error);

    json j{{"cyclotomic_order", 4},
           {"ambient_dim", 2},
           {"hyperplanes", json::array({json{{"label", "H"}, {"normal", {{1}, {0}}}}})}};
    // phi(4) = 2, so single-entry coefficient lists are rejected
    CHECK_THROWS_AS(arrangement_from_json(j), user_error);

    json frac{{"cyclotomic_order", 1},
              {"ambient_dim", 1},
              {"hyperplanes", json::array({json{{"label", "H"}, {"normal", {{0.5}}}}})}};
    CHECK_THROWS_AS(arrangement_from_json(frac), user_error);
}

TEST_CASE("flat table serialization") {
    const Arrangement a = build(parse_family_spec("monomial:2:3"));
    const json j = flats_to_json(a, compute_flat_table(a));
    REQUIRE(j.contains("flats"));
    CHECK(j.at("flats").size() == 7);
    int64_t pairs = 0;
    for (const json& f : j.at("flats")) {
        CHECK(f.at("members").size() == f.at("multiplicity").get<size_t>());
        const int64_t m = f.at("multiplicity").get<int64_t>();
        pairs += m * (m - 1) / 2;
    }
    CHECK(pairs == binomial2(a.size()));
}

TEST_CASE("betti report serialization") {
    const Arrangement a = build(parse_family_spec("full-monomial:4:3"));
    const FlatTable t = compute_flat_table(a);
    const BettiNumber b = beta_p(a, t, 3);
    const VanishingReport r = vanishing_report(a, t, 3);
    const json j = betti_to_json(a, b, r, aomoto_h1(a, t, 3));
    CHECK(j.at("prime") == 3);
    CHECK(j.at("dim_Zp") == 2);
    CHECK(j.at("beta") == 1);
    CHECK(j.at("beta_via_aomoto") == 1);
    CHECK(j.at("witness").is_object());
    CHECK(j.at("witness").size() == 15);
    CHECK(j.at("criteria").is_array());

    const BettiNumber zero = beta_p(a, t, 2);
    const json jz = betti_to_json(a, zero, vanishing_report(a, t, 2), aomoto_h1(a, t, 2));
    CHECK(jz.at("witness").is_null());
}

TEST_CASE("multinet round trip") {
    const Arrangement a = build(parse_family_spec("full-monomial:4:3"));
    const Multinet net = full_monomial_multinet(a);
    const json j = multinet_to_json(a, net);
    CHECK(j.at("blocks").size() == 3);
    CHECK(j.at("multiplicities").size() == 3); // only the non-unit weights

    const Multinet back = multinet_from_json(a, j);
    CHECK(back.blocks == net.blocks);
    CHECK(back.mult == net.mult);

    json bad = j;
    bad["blocks"][0][0] = "NOPE";
    CHECK_THROWS_AS(multinet_from_json(a, bad), user_error);
}

TEST_CASE("multinet report serialization") {
    const Arrangement a = build(parse_family_spec("monomial:3:3"));
    const FlatTable t = compute_flat_table(a);
    const MultinetReport r = verify(a, t, fy_monomial_3net(a));
    const json j = multinet_report_to_json(a, t, r);
    CHECK(j.at("valid") == true);
    CHECK(j.at("reduced") == true);
    CHECK(j.at("cross_flat_values").size() == 9);
    CHECK(j.at("failures").empty());
}

TEST_CASE("profile serialization") {
    const Arrangement a = build(parse_family_spec("full-monomial:4:3"));
    const FlatTable t = compute_flat_table(a);
    std::map<int64_t, int64_t> betti;
    for (int64_t p : {3, 5}) betti[p] = beta_p(a, t, p).value;
    const MonodromyProfile prof = monodromy_profile(a, t, betti, {}, true);
    const json j = profile_to_json(prof, char_poly(prof));
    CHECK(j.at("n") == 15);
    CHECK(j.at("e").at("1") == 14);
    CHECK(j.at("e").at("3").at("status") == "exact");
    CHECK(j.at("e").at("3").at("value") == 1);
    CHECK(j.at("e").at("15").at("status") == "zero");
    CHECK(j.at("char_poly").at("complete") == true);
    const json factors = j.at("char_poly").at("factors");
    REQUIRE(factors.size() == 2);
    CHECK(factors[0][0] == "t-1");
    CHECK(factors[0][1] == 14);
    CHECK(factors[1][0] == "Phi_3");
}
