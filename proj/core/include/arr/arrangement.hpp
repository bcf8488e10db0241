#ifndef ARR_ARRANGEMENT_HPP
#define ARR_ARRANGEMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "arr/cyclotomic.hpp"
#include "arr/linalg.hpp"

namespace arr {

/// One hyperplane through the origin: a label plus its normal vector, with
/// entries in Q(zeta_m).
struct Hyperplane {
    std::string label;
    std::vector<CycElem> normal;
};

struct ArrangementMetadata {
    std::optional<std::string> family; // catalog provenance, if built there
    bool is_reflection = false;        // set only by catalog builders
};

/// A central arrangement in C^l with normals over a fixed cyclotomic field.
class Arrangement {
public:
    Arrangement(int64_t ambient_dim, int64_t cyclotomic_order);

    int64_t ambient_dim() const { return ambient_dim_; }
    int64_t cyclotomic_order() const { return order_; }
    int64_t size() const { return static_cast<int64_t>(hyperplanes_.size()); }

    void add_hyperplane(Hyperplane h);
    const Hyperplane& hyperplane(int64_t i) const { return hyperplanes_[i]; }
    const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }

    /// Index of the hyperplane with the given label, or -1.
    int64_t index_of(const std::string& label) const;

    ArrangementMetadata& metadata() { return meta_; }
    const ArrangementMetadata& metadata() const { return meta_; }

    /// Hyperplane normals stacked as an n x l cyclotomic matrix.
    CycMatrix normal_matrix() const;

private:
    int64_t ambient_dim_, order_;
    std::vector<Hyperplane> hyperplanes_;
    ArrangementMetadata meta_;
};

/// Structural checks: nonzero normals, no proportional pair, unique labels,
/// consistent orders and dimensions, at least one hyperplane. Returns the
/// list of violations (empty means valid).
std::vector<std::string> validate(const Arrangement& a);

/// Throws user_error listing the violations if validate() is nonempty.
void require_valid(const Arrangement& a);

/// Rank of the matrix of all normals over Q(zeta_m).
int64_t arrangement_rank(const Arrangement& a);

} // namespace arr

#endif
