#include "arr/flats.hpp"

#include <algorithm>

#include "arr/errors.hpp"
#include "arr/numeric.hpp"

namespace arr {

FlatTable::FlatTable(int64_t n, std::vector<Flat2> flats) : n_(n), flats_(std::move(flats)) {
    for (Flat2& f : flats_) std::sort(f.members.begin(), f.members.end());
    std::sort(flats_.begin(), flats_.end(),
              [](const Flat2& a, const Flat2& b) { return a.members < b.members; });

    pair_index_.assign(n_ * n_, -1);
    through_.assign(n_, {});
    int64_t pair_total = 0;
    for (size_t f = 0; f < flats_.size(); ++f) {
        const std::vector<int64_t>& m = flats_[f].members;
        if (m.size() < 2) throw user_error("FlatTable: flat with fewer than 2 members");
        for (int64_t h : m) {
            if (h < 0 || h >= n_) throw user_error("FlatTable: member index out of range");
            through_[h].push_back(static_cast<int64_t>(f));
        }
        for (size_t i = 0; i < m.size(); ++i)
            for (size_t j = i + 1; j < m.size(); ++j) {
                int64_t& slot_a = pair_index_[m[i] * n_ + m[j]];
                int64_t& slot_b = pair_index_[m[j] * n_ + m[i]];
                if (slot_a != -1)
                    throw user_error("FlatTable: a hyperplane pair appears in two flats");
                slot_a = slot_b = static_cast<int64_t>(f);
                ++pair_total;
            }
    }
    if (pair_total != binomial2(n_))
        throw user_error("FlatTable: pair-count identity violated");
}

int64_t FlatTable::flat_of_pair(int64_t i, int64_t j) const {
    if (i == j || i < 0 || j < 0 || i >= n_ || j >= n_)
        throw user_error("FlatTable: bad pair query");
    return pair_index_[i * n_ + j];
}

int64_t FlatTable::find(const Flat2& x) const {
    Flat2 key = x;
    std::sort(key.members.begin(), key.members.end());
    auto it = std::lower_bound(flats_.begin(), flats_.end(), key,
                               [](const Flat2& a, const Flat2& b) { return a.members < b.members; });
    if (it != flats_.end() && it->members == key.members)
        return static_cast<int64_t>(it - flats_.begin());
    return -1;
}

int64_t FlatTable::degree_two_dim() const {
    int64_t d = 0;
    for (const Flat2& f : flats_) d += f.multiplicity() - 1;
    return d;
}

FlatTable compute_flat_table(const Arrangement& a) {
    require_valid(a);
    const int64_t n = a.size();
    if (n < 2) throw user_error("compute_flat_table: need at least 2 hyperplanes");

    std::vector<int64_t> assigned(n * n, -1);
    std::vector<Flat2> flats;

    for (int64_t i = 0; i < n; ++i) {
        for (int64_t j = i + 1; j < n; ++j) {
            if (assigned[i * n + j] != -1) continue;
            // Echelon basis of span(normal_i, normal_j); rank 2 since the
            // arrangement has no proportional normals.
            CycEchelon span;
            span.order = a.cyclotomic_order();
            span.cols = a.ambient_dim();
            span.absorb(a.hyperplane(i).normal);
            span.absorb(a.hyperplane(j).normal);
            require_internal(span.rank() == 2, "compute_flat_table: degenerate pair span");

            Flat2 flat;
            for (int64_t k = 0; k < n; ++k)
                if (span.contains(a.hyperplane(k).normal)) flat.members.push_back(k);

            const int64_t id = static_cast<int64_t>(flats.size());
            for (size_t u = 0; u < flat.members.size(); ++u)
                for (size_t v = u + 1; v < flat.members.size(); ++v) {
                    assigned[flat.members[u] * n + flat.members[v]] = id;
                    assigned[flat.members[v] * n + flat.members[u]] = id;
                }
            flats.push_back(std::move(flat));
        }
    }
    return FlatTable(n, std::move(flats));
}

Arrangement restrict_to_flat(const Arrangement& a, const FlatTable& table, const Flat2& x) {
    if (table.find(x) < 0) throw user_error("restrict_to_flat: not a flat of this arrangement");
    Arrangement sub(a.ambient_dim(), a.cyclotomic_order());
    for (int64_t h : x.members) sub.add_hyperplane(a.hyperplane(h));
    return sub;
}

} // namespace arr
