#include "arr/io_json.hpp"

#include "arr/errors.hpp"

namespace arr {

namespace {

int64_t get_int(const json& j, const std::string& what) {
    if (!j.is_number_integer()) throw user_error("expected an integer for " + what);
    return j.get<int64_t>();
}

const json& get_field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw user_error(std::string("missing field '") + key + "'");
    return j.at(key);
}

} // namespace

json arrangement_to_json(const Arrangement& a) {
    json hyperplanes = json::array();
    for (const Hyperplane& h : a.hyperplanes()) {
        json normal = json::array();
        for (const CycElem& e : h.normal) {
            json coords = json::array();
            for (const Rat& c : e.coeffs()) {
                if (c.get_den() != 1)
                    throw user_error("arrangement_to_json: normal of '" + h.label +
                                     "' has non-integer coefficients; rescale the normal");
                coords.push_back(static_cast<int64_t>(c.get_num().get_si()));
            }
            normal.push_back(std::move(coords));
        }
        hyperplanes.push_back({{"label", h.label}, {"normal", std::move(normal)}});
    }
    return json{{"cyclotomic_order", a.cyclotomic_order()},
                {"ambient_dim", a.ambient_dim()},
                {"hyperplanes", std::move(hyperplanes)}};
}

Arrangement arrangement_from_json(const json& j) {
    if (!j.is_object()) throw user_error("arrangement JSON must be an object");
    const int64_t m = get_int(get_field(j, "cyclotomic_order"), "cyclotomic_order");
    const int64_t l = get_int(get_field(j, "ambient_dim"), "ambient_dim");
    if (m < 1 || l < 1) throw user_error("arrangement JSON: bad dimensions");
    const int64_t phi = euler_phi(m);

    Arrangement a(l, m);
    if (!get_field(j, "hyperplanes").is_array())
        throw user_error("arrangement JSON: hyperplanes must be an array");
    for (const json& hj : j.at("hyperplanes")) {
        if (!hj.is_object() || !hj.contains("label") || !hj.at("label").is_string())
            throw user_error("arrangement JSON: hyperplane without a string label");
        Hyperplane h;
        h.label = hj.at("label").get<std::string>();
        const json& normal = get_field(hj, "normal");
        if (!normal.is_array() || static_cast<int64_t>(normal.size()) != l)
            throw user_error("arrangement JSON: normal of '" + h.label + "' must have length " +
                             std::to_string(l));
        for (const json& entry : normal) {
            if (!entry.is_array() || static_cast<int64_t>(entry.size()) != phi)
                throw user_error("arrangement JSON: each coordinate of '" + h.label +
                                 "' must list " + std::to_string(phi) +
                                 " power-basis integers");
            std::vector<Rat> coeffs;
            coeffs.reserve(phi);
            for (const json& c : entry) coeffs.emplace_back(get_int(c, "normal coefficient"));
            h.normal.push_back(CycElem::from_coeffs(m, std::move(coeffs)));
        }
        a.add_hyperplane(std::move(h));
    }
    return a;
}

json flats_to_json(const Arrangement& a, const FlatTable& table) {
    json flats = json::array();
    for (const Flat2& f : table.flats()) {
        json members = json::array();
        for (int64_t h : f.members) members.push_back(a.hyperplane(h).label);
        flats.push_back({{"members", std::move(members)}, {"multiplicity", f.multiplicity()}});
    }
    return json{{"flats", std::move(flats)}};
}

json census_to_json(const FlatCensus& census) {
    json entries = json::array();
    for (const FlatCensus::Entry& e : census.entries)
        entries.push_back({{"type", e.type}, {"count", e.count}, {"multiplicity", e.multiplicity}});
    return json{{"census", std::move(entries)}, {"n", census.hyperplane_count}};
}

json criteria_to_json(const VanishingReport& report) {
    json criteria = json::array();
    for (const CriterionResult& c : report.criteria) {
        json entry{{"id", c.id}, {"fires", c.fires}};
        entry["conclusion"] = c.fires ? json(c.conclusion) : json(nullptr);
        criteria.push_back(std::move(entry));
    }
    return criteria;
}

json betti_to_json(const Arrangement& a, const BettiNumber& beta, const VanishingReport& report,
                   int64_t beta_via_aomoto) {
    json witness(nullptr);
    if (beta.witness) {
        witness = json::object();
        for (int64_t h = 0; h < a.size(); ++h)
            witness[a.hyperplane(h).label] = (*beta.witness)[h];
    }
    return json{{"prime", beta.p},
                {"dim_Zp", beta.dim_zp},
                {"beta", beta.value},
                {"witness", std::move(witness)},
                {"criteria", criteria_to_json(report)},
                {"beta_via_aomoto", beta_via_aomoto}};
}

json multinet_to_json(const Arrangement& a, const Multinet& net) {
    json blocks = json::array();
    for (const std::vector<int64_t>& block : net.blocks) {
        json members = json::array();
        for (int64_t h : block) members.push_back(a.hyperplane(h).label);
        blocks.push_back(std::move(members));
    }
    json mults = json::object();
    for (int64_t h = 0; h < net.size(); ++h)
        if (net.mult[h] != 1) mults[a.hyperplane(h).label] = net.mult[h];
    return json{{"blocks", std::move(blocks)}, {"multiplicities", std::move(mults)}};
}

Multinet multinet_from_json(const Arrangement& a, const json& j) {
    if (!j.is_object() || !j.contains("blocks") || !j.at("blocks").is_array())
        throw user_error("multinet JSON must contain a blocks array");
    Multinet net;
    net.mult.assign(a.size(), 1);
    for (const json& bj : j.at("blocks")) {
        if (!bj.is_array()) throw user_error("multinet JSON: each block must be an array of labels");
        std::vector<int64_t> block;
        for (const json& label : bj) {
            if (!label.is_string()) throw user_error("multinet JSON: labels must be strings");
            const int64_t h = a.index_of(label.get<std::string>());
            if (h < 0)
                throw user_error("multinet JSON: unknown hyperplane '" +
                                 label.get<std::string>() + "'");
            block.push_back(h);
        }
        net.blocks.push_back(std::move(block));
    }
    if (j.contains("multiplicities")) {
        const json& mults = j.at("multiplicities");
        if (!mults.is_object()) throw user_error("multinet JSON: multiplicities must be an object");
        for (const auto& [label, value] : mults.items()) {
            const int64_t h = a.index_of(label);
            if (h < 0) throw user_error("multinet JSON: unknown hyperplane '" + label + "'");
            net.mult[h] = get_int(value, "multiplicity of '" + label + "'");
        }
    }
    return net;
}

json multinet_report_to_json(const Arrangement& a, const FlatTable& table,
                             const MultinetReport& report) {
    auto member_labels = [&](int64_t flat) {
        json members = json::array();
        for (int64_t h : table.flat(flat).members) members.push_back(a.hyperplane(h).label);
        return members;
    };
    json cross = json::array();
    for (const auto& [flat, value] : report.cross_flat_values)
        cross.push_back({{"members", member_labels(flat)}, {"n_X", value}});
    json failures = json::array();
    for (const MultinetReport::Failure& f : report.failures)
        failures.push_back({{"members", member_labels(f.flat)},
                            {"block_a", f.gamma1},
                            {"block_b", f.gamma2},
                            {"value_a", f.value1},
                            {"value_b", f.value2}});
    return json{{"valid", report.valid},
                {"cross_flat_values", std::move(cross)},
                {"failures", std::move(failures)},
                {"reduced", report.reduced},
                {"reduced_mod", report.reduced_mod}};
}

json profile_to_json(const MonodromyProfile& profile, const CharPoly& poly) {
    json e = json::object();
    e["1"] = profile.e1();
    for (const auto& [d, status] : profile.e) {
        json entry;
        switch (status.kind) {
            case MonodromyStatus::Kind::zero:
                entry["status"] = "zero";
                break;
            case MonodromyStatus::Kind::exact:
                entry["status"] = "exact";
                entry["value"] = status.value;
                break;
            case MonodromyStatus::Kind::range:
                entry["status"] = "range";
                entry["lo"] = status.lo;
                entry["hi"] = status.hi ? json(*status.hi) : json(nullptr);
                break;
        }
        entry["rules"] = status.rules;
        e[std::to_string(d)] = std::move(entry);
    }
    json factors = json::array();
    for (const auto& [d, exponent] : poly.factors)
        factors.push_back(json::array(
            {d == 1 ? "t-1" : "Phi_" + std::to_string(d), exponent}));
    return json{{"n", profile.n},
                {"e", std::move(e)},
                {"char_poly", json{{"factors", std::move(factors)}, {"complete", poly.complete}}}};
}

} // namespace arr
