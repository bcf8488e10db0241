#include "arr/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "arr/errors.hpp"
#include "arr/numeric.hpp"

namespace arr {

namespace {

int64_t binom(int64_t n, int64_t k) {
    if (k < 0 || k > n) return 0;
    int64_t r = 1;
    for (int64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

int64_t parse_int(const std::string& s, const std::string& what) {
    try {
        size_t pos = 0;
        const long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw user_error("invalid " + what + " '" + s + "' in family spec");
    }
}

void check_monomial_params(int64_t m, int64_t l, bool full) {
    if (full && m < 2) throw user_error("full-monomial requires m >= 2");
    if (!full && m < 1) throw user_error("monomial requires m >= 1");
    if (l < 2) throw user_error("monomial families require l >= 2");
    if (l > 9) throw user_error("monomial families supported up to l = 9 (label scheme)");
}

std::string diff_label(int64_t i, int64_t j, int64_t alpha) {
    std::ostringstream os;
    os << "H" << i << j << "^" << alpha;
    return os.str();
}

// z_i - omega^alpha z_j in C^l over Q(zeta_m).
std::vector<CycElem> diff_normal(int64_t m, int64_t l, int64_t i, int64_t j, int64_t alpha) {
    std::vector<CycElem> normal(l, CycElem(m));
    normal[i - 1] = CycElem::from_integer(m, 1);
    normal[j - 1] = -CycElem::zeta(m, alpha);
    return normal;
}

void add_monomial_part(Arrangement& a, int64_t m, int64_t l) {
    for (int64_t i = 1; i <= l; ++i)
        for (int64_t j = i + 1; j <= l; ++j)
            for (int64_t alpha = 0; alpha < m; ++alpha)
                a.add_hyperplane({diff_label(i, j, alpha), diff_normal(m, l, i, j, alpha)});
}

Arrangement build_monomial(int64_t m, int64_t l) {
    check_monomial_params(m, l, false);
    Arrangement a(l, m);
    add_monomial_part(a, m, l);
    return a;
}

Arrangement build_full_monomial(int64_t m, int64_t l) {
    check_monomial_params(m, l, true);
    Arrangement a(l, m);
    for (int64_t i = 1; i <= l; ++i) {
        std::vector<CycElem> normal(l, CycElem(m));
        normal[i - 1] = CycElem::from_integer(m, 1);
        a.add_hyperplane({"H" + std::to_string(i), std::move(normal)});
    }
    add_monomial_part(a, m, l);
    return a;
}

Arrangement build_g31() {
    const int64_t m = 4, l = 4;
    Arrangement a(l, m);
    for (int64_t i = 1; i <= l; ++i) {
        std::vector<CycElem> normal(l, CycElem(m));
        normal[i - 1] = CycElem::from_integer(m, 1);
        a.add_hyperplane({"H" + std::to_string(i), std::move(normal)});
    }
    add_monomial_part(a, m, l);
    // z_1 + sum_i omega^{alpha_i} z_i with alpha_2+alpha_3+alpha_4 even.
    for (int64_t a2 = 0; a2 < 4; ++a2)
        for (int64_t a3 = 0; a3 < 4; ++a3)
            for (int64_t a4 = 0; a4 < 4; ++a4) {
                if ((a2 + a3 + a4) % 2 != 0) continue;
                std::vector<CycElem> normal(l, CycElem(m));
                normal[0] = CycElem::from_integer(m, 1);
                normal[1] = CycElem::zeta(m, a2);
                normal[2] = CycElem::zeta(m, a3);
                normal[3] = CycElem::zeta(m, a4);
                std::ostringstream label;
                label << "Ha(" << a2 << "," << a3 << "," << a4 << ")";
                a.add_hyperplane({label.str(), std::move(normal)});
            }
    return a;
}

Arrangement build_g32() {
    const int64_t m = 3, l = 4;
    Arrangement a(l, m);
    for (int64_t i = 1; i <= l; ++i) {
        std::vector<CycElem> normal(l, CycElem(m));
        normal[i - 1] = CycElem::from_integer(m, 1);
        a.add_hyperplane({"H" + std::to_string(i), std::move(normal)});
    }
    // The four omega-triple families, one per omitted coordinate.
    for (int64_t i = 1; i <= 4; ++i)
        for (int64_t alpha = 0; alpha < 3; ++alpha)
            for (int64_t beta = 0; beta < 3; ++beta) {
                std::vector<CycElem> normal(l, CycElem(m));
                const CycElem one = CycElem::from_integer(m, 1);
                const CycElem wa = CycElem::zeta(m, alpha);
                const CycElem wb = CycElem::zeta(m, beta);
                switch (i) {
                    case 1: // z_2 + w^a z_3 + w^b z_4
                        normal[1] = one;
                        normal[2] = wa;
                        normal[3] = wb;
                        break;
                    case 2: // z_1 + w^a z_3 - w^b z_4
                        normal[0] = one;
                        normal[2] = wa;
                        normal[3] = -wb;
                        break;
                    case 3: // z_1 - w^a z_2 + w^b z_4
                        normal[0] = one;
                        normal[1] = -wa;
                        normal[3] = wb;
                        break;
                    case 4: // z_1 + w^a z_2 - w^b z_3
                        normal[0] = one;
                        normal[1] = wa;
                        normal[2] = -wb;
                        break;
                }
                std::ostringstream label;
                label << "H" << i << "^(" << alpha << "," << beta << ")";
                a.add_hyperplane({label.str(), std::move(normal)});
            }
    return a;
}

Arrangement build_g33() {
    const int64_t m = 3, l = 6;
    Arrangement a(l, m);
    for (int64_t i = 1; i <= 4; ++i)
        for (int64_t j = i + 1; j <= 4; ++j)
            for (int64_t beta = 0; beta < 3; ++beta)
                a.add_hyperplane({diff_label(i, j, beta), diff_normal(m, l, i, j, beta)});
    // sum_i omega^{alpha_i} z_i + z_5 + z_6 with sum alpha_i = 0 (mod 3).
    for (int64_t a1 = 0; a1 < 3; ++a1)
        for (int64_t a2 = 0; a2 < 3; ++a2)
            for (int64_t a3 = 0; a3 < 3; ++a3)
                for (int64_t a4 = 0; a4 < 3; ++a4) {
                    if ((a1 + a2 + a3 + a4) % 3 != 0) continue;
                    std::vector<CycElem> normal(l, CycElem(m));
                    normal[0] = CycElem::zeta(m, a1);
                    normal[1] = CycElem::zeta(m, a2);
                    normal[2] = CycElem::zeta(m, a3);
                    normal[3] = CycElem::zeta(m, a4);
                    normal[4] = CycElem::from_integer(m, 1);
                    normal[5] = CycElem::from_integer(m, 1);
                    std::ostringstream label;
                    label << "Ha(" << a1 << "," << a2 << "," << a3 << "," << a4 << ")";
                    a.add_hyperplane({label.str(), std::move(normal)});
                }
    return a;
}

// Twelve lines: the coordinate triangle plus the nine lines
// z_1 + w^a z_2 + w^b z_3 = 0 of the four singular members of the Hesse
// pencil of cubics.
Arrangement build_hessian() {
    const int64_t m = 3, l = 3;
    Arrangement a(l, m);
    for (int64_t i = 1; i <= 3; ++i) {
        std::vector<CycElem> normal(l, CycElem(m));
        normal[i - 1] = CycElem::from_integer(m, 1);
        a.add_hyperplane({"H" + std::to_string(i), std::move(normal)});
    }
    for (int64_t x = 0; x < 3; ++x)
        for (int64_t y = 0; y < 3; ++y) {
            std::vector<CycElem> normal(l, CycElem(m));
            normal[0] = CycElem::from_integer(m, 1);
            normal[1] = CycElem::zeta(m, x);
            normal[2] = CycElem::zeta(m, y);
            std::ostringstream label;
            label << "L(" << x << "," << y << ")";
            a.add_hyperplane({label.str(), std::move(normal)});
        }
    return a;
}

} // namespace

FamilySpec parse_family_spec(const std::string& s) {
    if (s == "G31") return {Family::g31};
    if (s == "G32") return {Family::g32};
    if (s == "G33") return {Family::g33};
    if (s == "hessian") return {Family::hessian};
    const std::vector<std::string> parts = split(s, ':');
    if (parts[0] == "braid") {
        if (parts.size() != 2) throw user_error("braid spec must be braid:l");
        return {Family::braid, 1, parse_int(parts[1], "l")};
    }
    if (parts[0] == "monomial") {
        if (parts.size() != 3) throw user_error("monomial spec must be monomial:m:l");
        return {Family::monomial, parse_int(parts[1], "m"), parse_int(parts[2], "l")};
    }
    if (parts[0] == "full-monomial") {
        if (parts.size() != 3) throw user_error("full-monomial spec must be full-monomial:m:l");
        return {Family::full_monomial, parse_int(parts[1], "m"), parse_int(parts[2], "l")};
    }
    throw user_error("unknown family '" + s +
                     "'; expected braid:l, monomial:m:l, full-monomial:m:l, G31, G32, G33 or hessian");
}

std::string to_string(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::braid: return "braid:" + std::to_string(spec.l);
        case Family::monomial:
            return "monomial:" + std::to_string(spec.m) + ":" + std::to_string(spec.l);
        case Family::full_monomial:
            return "full-monomial:" + std::to_string(spec.m) + ":" + std::to_string(spec.l);
        case Family::g31: return "G31";
        case Family::g32: return "G32";
        case Family::g33: return "G33";
        case Family::hessian: return "hessian";
    }
    throw internal_error("to_string: bad family");
}

Arrangement build(const FamilySpec& spec) {
    Arrangement a = [&] {
        switch (spec.family) {
            case Family::braid: return build_monomial(1, spec.l);
            case Family::monomial: return build_monomial(spec.m, spec.l);
            case Family::full_monomial: return build_full_monomial(spec.m, spec.l);
            case Family::g31: return build_g31();
            case Family::g32: return build_g32();
            case Family::g33: return build_g33();
            case Family::hessian: return build_hessian();
        }
        throw internal_error("build: bad family");
    }();
    a.metadata().family = to_string(spec);
    a.metadata().is_reflection = true;
    return a;
}

bool FlatCensus::operator==(const FlatCensus& rhs) const {
    auto key = [](const FlatCensus& c) {
        std::map<std::pair<std::string, int64_t>, int64_t> k;
        for (const Entry& e : c.entries)
            if (e.count != 0) k[{e.type, e.multiplicity}] += e.count;
        return k;
    };
    return hyperplane_count == rhs.hyperplane_count && key(*this) == key(rhs);
}

bool FlatCensus::pair_identity_holds() const {
    int64_t total = 0;
    for (const Entry& e : entries) total += e.count * binomial2(e.multiplicity);
    return total == binomial2(hyperplane_count);
}

FlatCensus expected_flat_census(const FamilySpec& spec) {
    const bool full = spec.family == Family::full_monomial;
    const bool plain = spec.family == Family::monomial || spec.family == Family::braid;
    if (!full && !plain)
        throw user_error("expected_flat_census: no closed form for family " + to_string(spec));
    const int64_t m = spec.family == Family::braid ? 1 : spec.m;
    const int64_t l = spec.l;
    check_monomial_params(m, l, full);

    FlatCensus census;
    census.hyperplane_count = (full ? l : 0) + m * binom(l, 2);
    auto add = [&](const std::string& type, int64_t count, int64_t multiplicity) {
        if (count > 0 && multiplicity >= 2) census.entries.push_back({type, count, multiplicity});
    };
    if (full) add("I_a", binom(l, 2), m + 2);
    add("I_b", binom(l, 3) * m * m, 3);
    add("I_c", binom(l, 2) * binom(l - 2, 2) / 2 * m * m, 2);
    if (full) add("I_d", binom(l, 2) * (l - 2) * m, 2);
    if (!full) add("II", binom(l, 2), m); // only a flat when m >= 2
    require_internal(census.pair_identity_holds(), "expected_flat_census: identity violated");
    return census;
}

namespace {

struct ParsedLabel {
    enum Kind { coord, diff, other } kind = other;
    int64_t i = 0, j = 0, alpha = 0;
};

ParsedLabel parse_label(const std::string& label) {
    ParsedLabel p;
    if (label.size() < 2 || label[0] != 'H') return p;
    const std::string body = label.substr(1);
    const size_t caret = body.find('^');
    if (caret == std::string::npos) {
        if (body.size() == 1 && std::isdigit(static_cast<unsigned char>(body[0]))) {
            p.kind = ParsedLabel::coord;
            p.i = body[0] - '0';
        }
        return p;
    }
    const std::string pair = body.substr(0, caret);
    const std::string exp = body.substr(caret + 1);
    if (pair.size() != 2 || exp.empty()) return p;
    if (!std::isdigit(static_cast<unsigned char>(pair[0])) ||
        !std::isdigit(static_cast<unsigned char>(pair[1])))
        return p;
    for (char c : exp)
        if (!std::isdigit(static_cast<unsigned char>(c))) return p;
    p.kind = ParsedLabel::diff;
    p.i = pair[0] - '0';
    p.j = pair[1] - '0';
    p.alpha = std::stoll(exp);
    return p;
}

std::string classify_flat(const Arrangement& a, const Flat2& flat) {
    std::vector<int64_t> coords;
    std::vector<std::pair<int64_t, int64_t>> pairs;
    for (int64_t h : flat.members) {
        const ParsedLabel p = parse_label(a.hyperplane(h).label);
        if (p.kind == ParsedLabel::coord) {
            coords.push_back(p.i);
        } else if (p.kind == ParsedLabel::diff) {
            pairs.emplace_back(p.i, p.j);
        } else {
            return "other";
        }
    }
    std::sort(coords.begin(), coords.end());
    const bool same_pair =
        !pairs.empty() && std::all_of(pairs.begin(), pairs.end(),
                                      [&](const auto& pr) { return pr == pairs[0]; });

    if (coords.size() == 2 && same_pair &&
        pairs[0] == std::make_pair(coords[0], coords[1]))
        return "I_a";
    if (coords.empty() && pairs.size() >= 2 && same_pair) return "II";
    if (coords.empty() && pairs.size() == 3) {
        std::vector<int64_t> idx{pairs[0].first, pairs[0].second, pairs[1].first,
                                 pairs[1].second, pairs[2].first, pairs[2].second};
        std::sort(idx.begin(), idx.end());
        idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
        if (idx.size() == 3 && !same_pair) return "I_b";
    }
    if (coords.empty() && pairs.size() == 2) {
        const auto& p0 = pairs[0];
        const auto& p1 = pairs[1];
        if (p0.first != p1.first && p0.first != p1.second && p0.second != p1.first &&
            p0.second != p1.second)
            return "I_c";
    }
    if (coords.size() == 1 && pairs.size() == 1 && coords[0] != pairs[0].first &&
        coords[0] != pairs[0].second)
        return "I_d";
    return "other";
}

} // namespace

FlatCensus census_of_table(const Arrangement& a, const FlatTable& table) {
    std::map<std::pair<std::string, int64_t>, int64_t> counts;
    for (const Flat2& f : table.flats()) ++counts[{classify_flat(a, f), f.multiplicity()}];
    FlatCensus census;
    census.hyperplane_count = a.size();
    for (const auto& [key, count] : counts)
        census.entries.push_back({key.first, count, key.second});
    return census;
}

std::optional<int64_t> reference_beta(const FamilySpec& spec, int64_t p) {
    if (!is_prime(p)) throw user_error("reference_beta: p must be prime");
    switch (spec.family) {
        case Family::g31:
        case Family::g32:
        case Family::g33:
            return 0;
        case Family::hessian:
            return p == 2 ? 2 : 0;
        case Family::braid:
        case Family::monomial: {
            const int64_t m = spec.family == Family::braid ? 1 : spec.m;
            const int64_t l = spec.l;
            const int64_t rank = m == 1 ? l - 1 : l;
            if (rank < 3) return std::nullopt;
            if (p != 3) return 0;
            if (l == 3) return m % 3 == 0 ? 2 : 1;
            if (l == 4) return 1;
            return 0;
        }
        case Family::full_monomial: {
            if (spec.l < 3) return std::nullopt;
            return (p == 3 && spec.l == 3 && spec.m % 3 == 1) ? 1 : 0;
        }
    }
    throw internal_error("reference_beta: bad family");
}

} // namespace arr
