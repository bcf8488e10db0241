#include "arr/matroid.hpp"

#include <algorithm>
#include <numeric>

#include "arr/errors.hpp"

namespace arr {

namespace {

struct UnionFind {
    std::vector<int64_t> parent;
    explicit UnionFind(int64_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int64_t find(int64_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int64_t a, int64_t b) { parent[find(a)] = find(b); }
};

} // namespace

std::vector<std::vector<int64_t>> decompose(const Arrangement& a) {
    require_valid(a);
    const int64_t n = a.size();
    const int64_t order = a.cyclotomic_order();
    const int64_t dim = a.ambient_dim();

    // Greedy basis with combination bookkeeping: each echelon row carries the
    // coefficients expressing it in terms of the original normals, so a
    // dependent element yields its fundamental circuit directly.
    struct TrackedRow {
        std::vector<CycElem> vec;
        std::vector<CycElem> combo; // length n, support = circuit contributors
        int64_t pivot;
    };
    std::vector<TrackedRow> echelon;
    UnionFind uf(n);

    for (int64_t h = 0; h < n; ++h) {
        std::vector<CycElem> v = a.hyperplane(h).normal;
        std::vector<CycElem> combo(n, CycElem(order));
        combo[h] = CycElem::from_integer(order, 1);

        for (const TrackedRow& row : echelon) {
            const CycElem f = v[row.pivot];
            if (f.is_zero()) continue;
            for (int64_t j = 0; j < dim; ++j) v[j] = v[j] - f * row.vec[j];
            for (int64_t j = 0; j < n; ++j)
                if (!row.combo[j].is_zero()) combo[j] = combo[j] - f * row.combo[j];
        }

        int64_t pivot = -1;
        for (int64_t j = 0; j < dim; ++j)
            if (!v[j].is_zero()) {
                pivot = j;
                break;
            }

        if (pivot < 0) {
            // Fundamental circuit = support of the dependency combination.
            std::vector<int64_t> circuit;
            for (int64_t j = 0; j < n; ++j)
                if (!combo[j].is_zero()) circuit.push_back(j);
            require_internal(circuit.size() >= 2, "decompose: trivial circuit");
            for (size_t i = 1; i < circuit.size(); ++i) uf.unite(circuit[0], circuit[i]);
        } else {
            const CycElem inv = v[pivot].inverse();
            for (int64_t j = 0; j < dim; ++j) v[j] = v[j] * inv;
            for (int64_t j = 0; j < n; ++j)
                if (!combo[j].is_zero()) combo[j] = combo[j] * inv;
            // Keep the echelon fully reduced so reductions above stay valid
            // in any processing order.
            for (TrackedRow& row : echelon) {
                const CycElem f = row.vec[pivot];
                if (f.is_zero()) continue;
                for (int64_t j = 0; j < dim; ++j) row.vec[j] = row.vec[j] - f * v[j];
                for (int64_t j = 0; j < n; ++j) row.combo[j] = row.combo[j] - f * combo[j];
            }
            echelon.push_back({std::move(v), std::move(combo), pivot});
        }
    }

    std::vector<std::vector<int64_t>> components;
    std::vector<int64_t> root_slot(n, -1);
    for (int64_t h = 0; h < n; ++h) {
        const int64_t r = uf.find(h);
        if (root_slot[r] < 0) {
            root_slot[r] = static_cast<int64_t>(components.size());
            components.emplace_back();
        }
        components[root_slot[r]].push_back(h);
    }
    return components;
}

} // namespace arr
