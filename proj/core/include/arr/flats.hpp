#ifndef ARR_FLATS_HPP
#define ARR_FLATS_HPP

#include <cstdint>
#include <vector>

#include "arr/arrangement.hpp"

namespace arr {

/// A codimension-2 flat, recorded as the full set of hyperplanes containing
/// it (sorted indices). The multiplicity is the member count.
struct Flat2 {
    std::vector<int64_t> members;
    int64_t multiplicity() const { return static_cast<int64_t>(members.size()); }
    bool operator==(const Flat2& rhs) const { return members == rhs.members; }
};

/// All rank-2 flats of an arrangement, canonically sorted, with a pair
/// lookup table. Satisfies sum_X C(|A_X|, 2) = C(n, 2).
class FlatTable {
public:
    FlatTable() = default;
    FlatTable(int64_t n, std::vector<Flat2> flats);

    int64_t size() const { return static_cast<int64_t>(flats_.size()); }
    const Flat2& flat(int64_t i) const { return flats_[i]; }
    const std::vector<Flat2>& flats() const { return flats_; }

    /// Index of the flat containing both hyperplanes; i != j required.
    int64_t flat_of_pair(int64_t i, int64_t j) const;
    /// Indices of the flats through one hyperplane.
    const std::vector<int64_t>& flats_through(int64_t h) const { return through_[h]; }
    /// Index of an equal flat (same member set), or -1.
    int64_t find(const Flat2& x) const;

    int64_t hyperplane_count() const { return n_; }
    /// Total dimension sum_X (|A_X| - 1) of the degree-two component.
    int64_t degree_two_dim() const;

private:
    int64_t n_ = 0;
    std::vector<Flat2> flats_;
    std::vector<int64_t> pair_index_; // n*n, -1 off-diagonal-less entries
    std::vector<std::vector<int64_t>> through_;
};

/// Enumerates all rank-2 flats by pairwise span comparison with exact
/// membership tests over Q(zeta_m). Requires a validated arrangement with
/// n >= 2.
FlatTable compute_flat_table(const Arrangement& a);

/// The subarrangement A_X of all hyperplanes containing the flat X, with
/// inherited labels. X must be a flat of `a` (as listed in `table`).
Arrangement restrict_to_flat(const Arrangement& a, const FlatTable& table, const Flat2& x);

} // namespace arr

#endif
