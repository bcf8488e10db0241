// arr: command line front end for the arrangements library.
//
// Exit codes: 0 success, 1 user/validation error, 2 internal invariant
// violation (including reproduction mismatches).

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "arr/catalog.hpp"
#include "arr/errors.hpp"
#include "arr/flats.hpp"
#include "arr/io_json.hpp"
#include "arr/matroid.hpp"
#include "arr/monodromy.hpp"
#include "arr/multinet.hpp"
#include "arr/os_quadratic.hpp"
#include "arr/resonance.hpp"

using namespace arr;

namespace {

struct InputOptions {
    std::string spec;
    std::string file;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
    auto* spec = cmd->add_option(
        "--spec", in.spec,
        "catalog family: braid:l, monomial:m:l, full-monomial:m:l, G31, G32, G33, hessian");
    auto* file = cmd->add_option("--file", in.file, "arrangement JSON file");
    spec->excludes(file);
    file->excludes(spec);
}

json read_json_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw user_error("cannot open '" + path + "'");
    try {
        json j;
        is >> j;
        return j;
    } catch (const json::exception& e) {
        throw user_error("malformed JSON in '" + path + "': " + e.what());
    }
}

Arrangement load_input(const InputOptions& in) {
    if (!in.spec.empty()) return build(parse_family_spec(in.spec));
    if (!in.file.empty()) {
        Arrangement a = arrangement_from_json(read_json_file(in.file));
        require_valid(a);
        return a;
    }
    throw user_error("provide --spec or --file");
}

std::string describe(const Arrangement& a) {
    return a.metadata().family.value_or("arrangement") + " (n = " + std::to_string(a.size()) + ")";
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::map<int64_t, int64_t> betti_for_divisors(const Arrangement& a, const FlatTable& t) {
    std::map<int64_t, int64_t> betti;
    for (int64_t p : primes_up_to(a.size()))
        if (a.size() % p == 0) betti[p] = beta_p(a, t, p).value;
    return betti;
}

int run_build(const std::string& spec, const std::string& output) {
    const Arrangement a = build(parse_family_spec(spec));
    const json j = arrangement_to_json(a);
    if (output.empty() || output == "-") {
        emit(j);
    } else {
        std::ofstream os(output);
        if (!os) throw user_error("cannot write '" + output + "'");
        os << j.dump(2) << "\n";
    }
    return 0;
}

int run_flats(const InputOptions& in, bool census, bool json_out) {
    const Arrangement a = load_input(in);
    const FlatTable t = compute_flat_table(a);
    if (json_out) {
        json j = flats_to_json(a, t);
        if (census) j["census"] = census_to_json(census_of_table(a, t)).at("census");
        emit(j);
    } else {
        std::cout << describe(a) << ": " << t.size() << " rank-2 flats\n";
        if (census) {
            const FlatCensus c = census_of_table(a, t);
            for (const auto& e : c.entries)
                std::cout << "  " << std::setw(6) << e.type << "  count " << std::setw(4) << e.count
                          << "  multiplicity " << e.multiplicity << "\n";
        } else {
            for (const Flat2& f : t.flats()) {
                std::cout << "  {";
                for (size_t i = 0; i < f.members.size(); ++i)
                    std::cout << (i ? ", " : " ") << a.hyperplane(f.members[i]).label;
                std::cout << " }\n";
            }
        }
    }
    if (census && !in.spec.empty()) {
        const FamilySpec spec = parse_family_spec(in.spec);
        if (spec.family == Family::monomial || spec.family == Family::braid ||
            spec.family == Family::full_monomial) {
            const FlatCensus expected = expected_flat_census(spec);
            const FlatCensus got = census_of_table(a, t);
            require_internal(got == expected, "computed census deviates from the closed form");
        }
    }
    return 0;
}

void print_betti_line(const Arrangement& a, const FlatTable& t, int64_t p, bool json_out) {
    const BettiNumber b = beta_p(a, t, p);
    const VanishingReport r = vanishing_report(a, t, p);
    const int64_t via_aomoto = aomoto_h1(a, t, p);
    require_internal(via_aomoto == b.value, "the two beta routes disagree");
    if (json_out) {
        emit(betti_to_json(a, b, r, via_aomoto));
        return;
    }
    std::cout << "p = " << p << ": dim Z_p = " << b.dim_zp << ", beta = " << b.value
              << " (cochain route: " << via_aomoto << ")\n";
    if (b.witness) {
        std::cout << "  witness:";
        for (int64_t h = 0; h < a.size(); ++h)
            if ((*b.witness)[h] != 0)
                std::cout << " " << a.hyperplane(h).label << "=" << (*b.witness)[h];
        std::cout << "\n";
    }
    bool any = false;
    for (const auto& c : r.criteria)
        if (c.fires) {
            std::cout << "  vanishing criterion fired: " << c.id << "\n";
            any = true;
        }
    if (!any && b.value == 0) std::cout << "  (no vanishing criterion fired)\n";
}

int run_betti(const InputOptions& in, int64_t prime, bool all_primes, bool json_out) {
    const Arrangement a = load_input(in);
    const FlatTable t = compute_flat_table(a);
    if (!json_out) std::cout << describe(a) << "\n";
    if (all_primes) {
        for (int64_t p : primes_up_to(a.size())) print_betti_line(a, t, p, json_out);
    } else {
        print_betti_line(a, t, prime, json_out);
    }
    return 0;
}

int run_criteria(const InputOptions& in, int64_t prime, bool json_out) {
    const Arrangement a = load_input(in);
    const FlatTable t = compute_flat_table(a);
    const VanishingReport r = vanishing_report(a, t, prime);
    if (json_out) {
        emit(json{{"prime", prime}, {"criteria", criteria_to_json(r)}});
    } else {
        std::cout << describe(a) << ", p = " << prime << "\n";
        for (const auto& c : r.criteria)
            std::cout << "  " << std::setw(34) << std::left << c.id
                      << (c.fires ? "fires -> " + c.conclusion : "does not fire") << "\n";
    }
    return 0;
}

int run_multinet_verify(const InputOptions& in, const std::string& net_file, bool json_out) {
    const Arrangement a = load_input(in);
    const FlatTable t = compute_flat_table(a);
    const Multinet net = multinet_from_json(a, read_json_file(net_file));
    const MultinetReport r = verify(a, t, net);
    if (json_out) {
        emit(multinet_report_to_json(a, t, r));
    } else {
        std::cout << describe(a) << ": multinet with " << net.k() << " blocks is "
                  << (r.valid ? "valid" : "invalid") << "\n";
        if (r.valid) {
            std::cout << "  reduced: " << (r.reduced ? "yes" : "no") << "\n";
            std::cout << "  cross flats: " << r.cross_flat_values.size() << "\n";
        }
        for (const auto& f : r.failures) {
            std::cout << "  failure at {";
            for (int64_t h : t.flat(f.flat).members) std::cout << " " << a.hyperplane(h).label;
            std::cout << " }: block " << f.gamma1 << " gives " << f.value1 << ", block "
                      << f.gamma2 << " gives " << f.value2 << "\n";
        }
    }
    return r.valid ? 0 : 1;
}

int run_multinet_search(const InputOptions& in, int64_t k, int64_t max_n, int64_t max_results,
                        bool json_out) {
    const Arrangement a = load_input(in);
    const FlatTable t = compute_flat_table(a);
    SearchOptions options;
    options.max_results = max_results;
    if (max_n > 0) {
        options.guard = max_n;
        options.override_guard = true;
    }
    const std::vector<Multinet> nets = search_nets(a, t, k, options);
    if (json_out) {
        json out = json::array();
        for (const Multinet& net : nets) out.push_back(multinet_to_json(a, net));
        emit(out);
    } else {
        std::cout << describe(a) << ": " << nets.size() << " reduced " << k << "-net(s)\n";
        for (const Multinet& net : nets) {
            for (const auto& block : net.blocks) {
                std::cout << "  {";
                for (size_t i = 0; i < block.size(); ++i)
                    std::cout << (i ? ", " : " ") << a.hyperplane(block[i]).label;
                std::cout << " }";
            }
            std::cout << "\n";
        }
    }
    return 0;
}

int run_monodromy(const InputOptions& in, const std::vector<std::string>& net_files,
                  bool json_out) {
    const Arrangement a = load_input(in);
    const FlatTable t = compute_flat_table(a);
    std::vector<Multinet> nets = catalog_multinets(a);
    for (const std::string& path : net_files)
        nets.push_back(multinet_from_json(a, read_json_file(path)));
    const MonodromyProfile prof =
        monodromy_profile(a, t, betti_for_divisors(a, t), nets, a.metadata().is_reflection);
    const CharPoly poly = char_poly(prof);
    if (json_out) {
        emit(profile_to_json(prof, poly));
        return 0;
    }
    std::cout << describe(a) << "\n";
    std::cout << "  e_1 = " << prof.e1() << "\n";
    for (const auto& [d, status] : prof.e) {
        std::cout << "  e_" << d;
        switch (status.kind) {
            case MonodromyStatus::Kind::zero:
            case MonodromyStatus::Kind::exact:
                std::cout << " = " << status.exact_value();
                break;
            case MonodromyStatus::Kind::range:
                std::cout << " in [" << status.lo << ", "
                          << (status.hi ? std::to_string(*status.hi) : "?") << "]";
                break;
        }
        std::cout << "   [";
        for (size_t i = 0; i < status.rules.size(); ++i)
            std::cout << (i ? "; " : "") << status.rules[i];
        std::cout << "]\n";
    }
    std::cout << "  Delta(t) = " << poly.to_string() << "\n";
    return 0;
}

int run_reproduce_thm_b(int64_t m_max, bool json_out) {
    std::vector<std::string> specs;
    for (const char* family : {"monomial", "full-monomial"})
        for (int64_t m = 2; m <= m_max; ++m)
            for (int64_t l = 3; l <= 5; ++l)
                specs.push_back(std::string(family) + ":" + std::to_string(m) + ":" +
                                std::to_string(l));
    specs.insert(specs.end(), {"G31", "G32", "G33", "hessian"});

    bool all_ok = true;
    json rows = json::array();
    if (!json_out)
        std::cout << std::left << std::setw(22) << "instance" << std::setw(4) << "p"
                  << std::setw(6) << "beta" << std::setw(10) << "expected" << "ok\n";
    for (const std::string& s : specs) {
        const FamilySpec spec = parse_family_spec(s);
        const Arrangement a = build(spec);
        const FlatTable t = compute_flat_table(a);
        for (int64_t p : {2, 3, 5, 7}) {
            const auto expected = reference_beta(spec, p);
            const int64_t got = beta_p(a, t, p).value;
            const bool ok = expected && got == *expected;
            all_ok = all_ok && ok;
            if (json_out) {
                rows.push_back({{"instance", s},
                                {"p", p},
                                {"beta", got},
                                {"expected", expected ? json(*expected) : json(nullptr)},
                                {"ok", ok}});
            } else {
                std::cout << std::left << std::setw(22) << s << std::setw(4) << p << std::setw(6)
                          << got << std::setw(10) << (expected ? std::to_string(*expected) : "-")
                          << (ok ? "yes" : "NO") << "\n";
            }
        }
    }
    if (json_out) emit(json{{"rows", rows}, {"ok", all_ok}});
    else std::cout << (all_ok ? "all values match" : "MISMATCH") << "\n";
    return all_ok ? 0 : 2;
}

int run_reproduce_prop_full(int64_t m_max, bool json_out) {
    bool all_ok = true;
    json rows = json::array();
    for (int64_t l : {3, 4}) {
        for (int64_t m = 2; m <= m_max; ++m) {
            const std::string s = "full-monomial:" + std::to_string(m) + ":" + std::to_string(l);
            const Arrangement a = build(parse_family_spec(s));
            const FlatTable t = compute_flat_table(a);
            const MonodromyProfile prof =
                monodromy_profile(a, t, betti_for_divisors(a, t), catalog_multinets(a), true);
            const CharPoly poly = char_poly(prof);

            std::vector<std::pair<int64_t, int64_t>> expected{{1, a.size() - 1}};
            if (l == 3 && m % 3 == 1) expected.emplace_back(3, 1);
            const bool ok = poly.complete && poly.factors == expected;
            all_ok = all_ok && ok;
            if (json_out) {
                rows.push_back(
                    {{"instance", s}, {"delta", poly.to_string()}, {"ok", ok}});
            } else {
                std::cout << std::left << std::setw(22) << s << "Delta(t) = " << poly.to_string()
                          << (ok ? "" : "   MISMATCH") << "\n";
            }
        }
    }
    if (json_out) emit(json{{"rows", rows}, {"ok", all_ok}});
    else std::cout << (all_ok ? "all polynomials match" : "MISMATCH") << "\n";
    return all_ok ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of complex reflection arrangements"};
    app.require_subcommand(1);
    bool json_out = false;
    app.add_flag("--json", json_out, "machine-readable output");
    app.fallthrough();

    // build
    auto* cmd_build = app.add_subcommand("build", "construct a catalog arrangement");
    std::string build_spec, build_output;
    cmd_build->add_option("--spec", build_spec, "family spec")->required();
    cmd_build->add_option("-o,--output", build_output, "output file (default stdout)");

    // flats
    auto* cmd_flats = app.add_subcommand("flats", "rank-2 intersection data");
    InputOptions flats_in;
    add_input_options(cmd_flats, flats_in);
    bool flats_census = false;
    cmd_flats->add_flag("--census", flats_census, "per-type flat counts");

    // betti
    auto* cmd_betti = app.add_subcommand("betti", "mod-p Aomoto-Betti numbers");
    InputOptions betti_in;
    add_input_options(cmd_betti, betti_in);
    int64_t betti_prime = 0;
    bool betti_all = false;
    auto* prime_opt = cmd_betti->add_option("--prime", betti_prime, "prime p");
    auto* all_opt = cmd_betti->add_flag("--all-primes", betti_all, "all primes up to n");
    prime_opt->excludes(all_opt);
    all_opt->excludes(prime_opt);

    // criteria
    auto* cmd_criteria = app.add_subcommand("criteria", "vanishing criteria report");
    InputOptions criteria_in;
    add_input_options(cmd_criteria, criteria_in);
    int64_t criteria_prime = 0;
    cmd_criteria->add_option("--prime", criteria_prime, "prime p")->required();

    // multinet verify/search
    auto* cmd_multinet = app.add_subcommand("multinet", "multinet verification and search");
    cmd_multinet->require_subcommand(1);
    auto* cmd_mverify = cmd_multinet->add_subcommand("verify", "check the multinet axiom");
    InputOptions mverify_in;
    add_input_options(cmd_mverify, mverify_in);
    std::string mverify_net;
    cmd_mverify->add_option("--net", mverify_net, "multinet JSON file")->required();
    auto* cmd_msearch = cmd_multinet->add_subcommand("search", "exhaustive reduced k-net search");
    InputOptions msearch_in;
    add_input_options(cmd_msearch, msearch_in);
    int64_t msearch_k = 0, msearch_max_n = 0, msearch_max_results = 64;
    cmd_msearch->add_option("--k", msearch_k, "number of blocks")->required();
    cmd_msearch->add_option("--max-n", msearch_max_n, "raise the size guard to this many hyperplanes");
    cmd_msearch->add_option("--max-results", msearch_max_results, "stop after this many nets");

    // monodromy
    auto* cmd_monodromy = app.add_subcommand("monodromy", "per-divisor monodromy profile");
    InputOptions monodromy_in;
    add_input_options(cmd_monodromy, monodromy_in);
    std::vector<std::string> monodromy_nets;
    cmd_monodromy->add_option("--net", monodromy_nets, "multinet JSON files supplying lower bounds");

    // reproduce
    auto* cmd_reproduce = app.add_subcommand("reproduce", "reproduce the published tables");
    std::string reproduce_what;
    cmd_reproduce->add_option("what", reproduce_what, "thm-b | prop-full")->required();
    int64_t m_max = 7;
    cmd_reproduce->add_option("--m-max", m_max, "largest m in the sweep (default 7)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_build) return run_build(build_spec, build_output);
        if (*cmd_flats) return run_flats(flats_in, flats_census, json_out);
        if (*cmd_betti) {
            if (!betti_all && betti_prime == 0)
                throw user_error("betti: provide --prime or --all-primes");
            return run_betti(betti_in, betti_prime, betti_all, json_out);
        }
        if (*cmd_criteria) return run_criteria(criteria_in, criteria_prime, json_out);
        if (*cmd_multinet) {
            if (*cmd_mverify) return run_multinet_verify(mverify_in, mverify_net, json_out);
            return run_multinet_search(msearch_in, msearch_k, msearch_max_n, msearch_max_results,
                                       json_out);
        }
        if (*cmd_monodromy) return run_monodromy(monodromy_in, monodromy_nets, json_out);
        if (*cmd_reproduce) {
            if (reproduce_what == "thm-b") return run_reproduce_thm_b(m_max, json_out);
            if (reproduce_what == "prop-full") return run_reproduce_prop_full(m_max, json_out);
            throw user_error("reproduce: expected 'thm-b' or 'prop-full'");
        }
        throw user_error("no command given");
    } catch (const user_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
