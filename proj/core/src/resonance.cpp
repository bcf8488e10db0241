#include "arr/resonance.hpp"

#include <algorithm>
#include <numeric>

#include "arr/errors.hpp"
#include "arr/matroid.hpp"

namespace arr {

PrimeFieldMatrix cocycle_constraint_matrix(const Arrangement& a, const FlatTable& flats, int64_t p) {
    const int64_t n = a.size();
    int64_t rows = 0;
    for (const Flat2& f : flats.flats())
        rows += (f.multiplicity() % p == 0) ? 1 : f.multiplicity() - 1;

    PrimeFieldMatrix m(p, rows, n);
    int64_t r = 0;
    for (const Flat2& f : flats.flats()) {
        if (f.multiplicity() % p == 0) {
            for (int64_t h : f.members) m.set(r, h, 1);
            ++r;
        } else {
            const int64_t h0 = f.members[0];
            for (size_t i = 1; i < f.members.size(); ++i) {
                m.set(r, f.members[i], 1);
                m.set(r, h0, p - 1);
                ++r;
            }
        }
    }
    return m;
}

CocycleSpace cocycle_space(const Arrangement& a, const FlatTable& flats, int64_t p) {
    if (!is_prime(p)) throw user_error("cocycle_space: p must be prime");
    CocycleSpace space;
    space.p = p;
    space.basis = cocycle_constraint_matrix(a, flats, p).nullspace();

    // The constants always satisfy the flat equations; check they lie in
    // the computed span.
    PrimeFieldMatrix with_ones(p, static_cast<int64_t>(space.basis.size()) + 1, a.size());
    for (size_t i = 0; i < space.basis.size(); ++i)
        for (int64_t j = 0; j < a.size(); ++j) with_ones.set(static_cast<int64_t>(i), j, space.basis[i][j]);
    for (int64_t j = 0; j < a.size(); ++j)
        with_ones.set(static_cast<int64_t>(space.basis.size()), j, 1);
    require_internal(with_ones.rank() == space.dim(),
                     "cocycle_space: the constant cocycle is missing from Z_p");
    return space;
}

namespace {

bool is_constant_vector(const std::vector<int64_t>& v) {
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i] != v[0]) return false;
    return true;
}

} // namespace

BettiNumber beta_p(const Arrangement& a, const FlatTable& flats, int64_t p) {
    const CocycleSpace space = cocycle_space(a, flats, p);
    BettiNumber b;
    b.p = p;
    b.dim_zp = space.dim();
    b.value = space.dim() - 1;
    require_internal(b.value >= 0, "beta_p: empty cocycle space");
    if (b.value > 0) {
        for (const std::vector<int64_t>& v : space.basis) {
            if (!is_constant_vector(v)) {
                b.witness = v;
                break;
            }
        }
        require_internal(b.witness.has_value(), "beta_p: positive value but no non-constant basis vector");
    }
    return b;
}

BettiNumber beta_p(const Arrangement& a, int64_t p) {
    return beta_p(a, compute_flat_table(a), p);
}

GammaGraph gamma_graph(const Arrangement& a, const FlatTable& flats, GammaKind kind, int64_t k) {
    if (k < 2) throw user_error("gamma_graph: k must be >= 2");
    GammaGraph g;
    g.kind = kind;
    g.k = k;
    g.vertex_count = a.size();

    std::vector<int64_t> parent(a.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int64_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    for (int64_t i = 0; i < a.size(); ++i)
        for (int64_t j = i + 1; j < a.size(); ++j) {
            const int64_t mult = flats.flat(flats.flat_of_pair(i, j)).multiplicity();
            bool edge = false;
            if (kind == GammaKind::exact) {
                edge = mult == k;
            } else if (k == 2) {
                edge = (mult % 2 == 1) || mult == 2;
            } else {
                edge = mult % k != 0;
            }
            if (edge) {
                g.edges.emplace_back(i, j);
                parent[find(i)] = find(j);
            }
        }

    g.component.assign(a.size(), -1);
    for (int64_t v = 0; v < a.size(); ++v) {
        const int64_t root = find(v);
        if (g.component[root] < 0) g.component[root] = g.component_count++;
        g.component[v] = g.component[root];
    }
    return g;
}

int64_t m_p_of(const Arrangement& a, const FlatTable& flats, int64_t h, int64_t p) {
    if (h < 0 || h >= a.size()) throw user_error("m_p_of: hyperplane index out of range");
    int64_t total = 1;
    for (int64_t f : flats.flats_through(h)) {
        const int64_t mult = flats.flat(f).multiplicity();
        if (mult % p != 0) total += mult - 1;
    }
    return total;
}

bool VanishingReport::any_fires() const {
    return std::any_of(criteria.begin(), criteria.end(),
                       [](const CriterionResult& c) { return c.fires; });
}

VanishingReport vanishing_report(const Arrangement& a, const FlatTable& flats, int64_t p) {
    if (!is_prime(p)) throw user_error("vanishing_report: p must be prime");
    VanishingReport report;
    report.p = p;
    const int64_t n = a.size();
    auto add = [&](const std::string& id, bool fires) {
        report.criteria.push_back({id, fires, fires ? "beta_" + std::to_string(p) + " = 0" : ""});
    };

    // Hyperplane count not divisible by p.
    add("count_not_divisible", n % p != 0);

    // Product arrangements have vanishing beta_p for every p.
    add("product", decompose(a).size() >= 2);

    add("gamma_p_connected", gamma_graph(a, flats, GammaKind::modulus, p).connected());
    add("gamma_(2)_connected", gamma_graph(a, flats, GammaKind::exact, 2).connected());

    bool no_divisible_flat = true;
    bool has_proper_multiple_of_p = false; // some flat of multiplicity p*r, r > 1
    for (const Flat2& f : flats.flats()) {
        if (f.multiplicity() % p == 0) {
            no_divisible_flat = false;
            if (f.multiplicity() > p) has_proper_multiple_of_p = true;
        }
    }
    add("no_flat_multiplicity_divisible", no_divisible_flat);

    bool all_over_half = true;
    bool all_over_third = true;
    for (int64_t h = 0; h < n; ++h) {
        const int64_t mp = m_p_of(a, flats, h, p);
        if (2 * mp <= n) all_over_half = false;
        if (3 * mp <= n) all_over_third = false;
    }
    add("m_p_majority_half", all_over_half);
    add("m_p_majority_third", all_over_third && !has_proper_multiple_of_p);

    if (report.any_fires()) {
        const BettiNumber b = beta_p(a, flats, p);
        require_internal(b.value == 0,
                         "vanishing_report: a criterion fired but beta_" + std::to_string(p) +
                             " = " + std::to_string(b.value));
    }
    return report;
}

} // namespace arr
