#include "arr/arrangement.hpp"

#include <set>

#include "arr/errors.hpp"

namespace arr {

Arrangement::Arrangement(int64_t ambient_dim, int64_t cyclotomic_order)
    : ambient_dim_(ambient_dim), order_(cyclotomic_order) {
    if (ambient_dim < 1) throw user_error("Arrangement: ambient dimension must be >= 1");
    if (cyclotomic_order < 1) throw user_error("Arrangement: cyclotomic order must be >= 1");
}

void Arrangement::add_hyperplane(Hyperplane h) {
    if (static_cast<int64_t>(h.normal.size()) != ambient_dim_)
        throw user_error("Arrangement: normal for '" + h.label + "' has wrong length");
    hyperplanes_.push_back(std::move(h));
}

int64_t Arrangement::index_of(const std::string& label) const {
    for (size_t i = 0; i < hyperplanes_.size(); ++i)
        if (hyperplanes_[i].label == label) return static_cast<int64_t>(i);
    return -1;
}

CycMatrix Arrangement::normal_matrix() const {
    CycMatrix m(order_, size(), ambient_dim_);
    for (int64_t i = 0; i < size(); ++i)
        for (int64_t j = 0; j < ambient_dim_; ++j) m.set(i, j, hyperplanes_[i].normal[j]);
    return m;
}

namespace {

bool proportional(const std::vector<CycElem>& a, const std::vector<CycElem>& b, int64_t order) {
    CycEchelon ech;
    ech.order = order;
    ech.cols = static_cast<int64_t>(a.size());
    ech.absorb(a);
    return ech.contains(b);
}

} // namespace

std::vector<std::string> validate(const Arrangement& a) {
    std::vector<std::string> violations;
    const int64_t n = a.size();
    if (n < 1) {
        violations.push_back("arrangement has no hyperplanes");
        return violations;
    }

    std::set<std::string> seen;
    for (int64_t i = 0; i < n; ++i) {
        const Hyperplane& h = a.hyperplane(i);
        if (h.label.empty()) violations.push_back("hyperplane " + std::to_string(i) + " has an empty label");
        if (!seen.insert(h.label).second)
            violations.push_back("duplicate label '" + h.label + "'");

        bool zero = true;
        bool order_ok = true;
        for (const CycElem& e : h.normal) {
            if (e.order() != a.cyclotomic_order()) order_ok = false;
            if (!e.is_zero()) zero = false;
        }
        if (!order_ok)
            violations.push_back("normal of '" + h.label + "' mixes cyclotomic orders");
        if (zero) violations.push_back("normal of '" + h.label + "' is zero");
    }
    if (!violations.empty()) return violations;

    for (int64_t i = 0; i < n; ++i)
        for (int64_t j = i + 1; j < n; ++j)
            if (proportional(a.hyperplane(i).normal, a.hyperplane(j).normal, a.cyclotomic_order()))
                violations.push_back("hyperplanes '" + a.hyperplane(i).label + "' and '" +
                                     a.hyperplane(j).label + "' are proportional");
    return violations;
}

void require_valid(const Arrangement& a) {
    const std::vector<std::string> v = validate(a);
    if (v.empty()) return;
    std::string msg = "invalid arrangement:";
    for (const std::string& s : v) msg += "\n  - " + s;
    throw user_error(msg);
}

int64_t arrangement_rank(const Arrangement& a) {
    return rank_cyc(a.normal_matrix());
}

} // namespace arr
