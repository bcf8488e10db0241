#include "arr/multinet.hpp"

#include <algorithm>
#include <numeric>

#include "arr/catalog.hpp"
#include "arr/errors.hpp"
#include "arr/resonance.hpp"

namespace arr {

std::vector<int64_t> Multinet::block_assignment() const {
    const int64_t n = size();
    std::vector<int64_t> assignment(n, -1);
    for (size_t b = 0; b < blocks.size(); ++b)
        for (int64_t h : blocks[b]) {
            if (h < 0 || h >= n) throw user_error("multinet: hyperplane index out of range");
            if (assignment[h] != -1) throw user_error("multinet: blocks overlap");
            assignment[h] = static_cast<int64_t>(b);
        }
    for (int64_t h = 0; h < n; ++h)
        if (assignment[h] < 0) throw user_error("multinet: blocks do not cover the arrangement");
    return assignment;
}

int64_t Multinet::weight_gcd() const {
    int64_t g = 0;
    for (int64_t w : mult) g = std::gcd(g, w - 1);
    return g;
}

bool Multinet::h_reduced(int64_t h) const {
    if (h < 2) throw user_error("h_reduced: h must be >= 2");
    return weight_gcd() % h == 0;
}

void check_well_formed(const Multinet& net, int64_t n) {
    if (net.size() != n) throw user_error("multinet: weight vector length does not match the arrangement");
    if (net.k() < 3) throw user_error("multinet: need at least 3 blocks");
    for (const std::vector<int64_t>& block : net.blocks)
        if (block.empty()) throw user_error("multinet: empty block");
    for (int64_t w : net.mult)
        if (w < 1) throw user_error("multinet: weights must be positive");
    net.block_assignment();
}

MultinetReport verify(const Arrangement& a, const FlatTable& flats, const Multinet& net) {
    check_well_formed(net, a.size());
    const std::vector<int64_t> block_of = net.block_assignment();
    const int64_t k = net.k();

    MultinetReport report;
    report.reduction_gcd = net.weight_gcd();
    report.reduced = net.reduced();
    if (report.reduction_gcd > 1)
        for (int64_t h : divisors(report.reduction_gcd))
            if (h >= 2) report.reduced_mod.push_back(h);

    for (int64_t f = 0; f < flats.size(); ++f) {
        const Flat2& flat = flats.flat(f);
        std::vector<int64_t> sums(k, 0);
        bool multi_block = false;
        for (int64_t h : flat.members) {
            sums[block_of[h]] += net.mult[h];
            if (block_of[h] != block_of[flat.members[0]]) multi_block = true;
        }
        if (!multi_block) continue; // not a cross flat

        bool equal = true;
        for (int64_t b = 1; b < k; ++b)
            if (sums[b] != sums[0]) {
                report.failures.push_back({f, 0, b, sums[0], sums[b]});
                equal = false;
                break;
            }
        if (equal) report.cross_flat_values[f] = sums[0];
    }
    report.valid = report.failures.empty();
    return report;
}

namespace {

struct LabelView {
    enum Kind { coord, diff, line, other } kind = other;
    int64_t i = 0, j = 0, alpha = 0; // diff: pair + exponent; line: (i,j) grid
};

LabelView view_label(const std::string& label) {
    LabelView v;
    if (label.size() >= 4 && label[0] == 'L' && label[1] == '(') {
        // L(a,b)
        const size_t comma = label.find(',');
        const size_t close = label.find(')');
        if (comma == std::string::npos || close == std::string::npos) return v;
        v.kind = LabelView::line;
        v.i = std::stoll(label.substr(2, comma - 2));
        v.j = std::stoll(label.substr(comma + 1, close - comma - 1));
        return v;
    }
    if (label.size() < 2 || label[0] != 'H') return v;
    const std::string body = label.substr(1);
    const size_t caret = body.find('^');
    if (caret == std::string::npos) {
        if (body.size() == 1 && std::isdigit(static_cast<unsigned char>(body[0]))) {
            v.kind = LabelView::coord;
            v.i = body[0] - '0';
        }
        return v;
    }
    const std::string pair = body.substr(0, caret);
    if (pair.size() != 2) return v;
    v.kind = LabelView::diff;
    v.i = pair[0] - '0';
    v.j = pair[1] - '0';
    v.alpha = std::stoll(body.substr(caret + 1));
    return v;
}

[[noreturn]] void bad_catalog(const std::string& builder, const std::string& expected) {
    throw user_error(builder + ": expected the catalog " + expected + " arrangement");
}

} // namespace

Multinet fy_monomial_3net(const Arrangement& a) {
    Multinet net;
    net.mult.assign(a.size(), 1);
    std::map<std::pair<int64_t, int64_t>, std::vector<int64_t>> by_pair;
    for (int64_t h = 0; h < a.size(); ++h) {
        const LabelView v = view_label(a.hyperplane(h).label);
        if (v.kind != LabelView::diff) bad_catalog("fy_monomial_3net", "A(m,m,3)");
        by_pair[{v.i, v.j}].push_back(h);
    }
    if (by_pair.size() != 3) bad_catalog("fy_monomial_3net", "A(m,m,3)");
    for (auto& [pair, members] : by_pair) net.blocks.push_back(std::move(members));
    return net;
}

Multinet mod3_net(const Arrangement& a) {
    Multinet net;
    net.mult.assign(a.size(), 1);
    net.blocks.assign(3, {});
    int64_t m = 0;
    std::vector<std::pair<int64_t, LabelView>> parsed;
    for (int64_t h = 0; h < a.size(); ++h) {
        const LabelView v = view_label(a.hyperplane(h).label);
        if (v.kind != LabelView::diff) bad_catalog("mod3_net", "A(m,m,3) with 3 | m");
        m = std::max(m, v.alpha + 1);
        parsed.emplace_back(h, v);
    }
    if (a.size() != 3 * m || m % 3 != 0)
        throw user_error("mod3_net: requires A(m,m,3) with 3 | m");
    for (const auto& [h, v] : parsed) {
        // alpha counts with flipped sign on the {1,3} direction.
        const int64_t effective = (v.i == 1 && v.j == 3) ? (3 - v.alpha % 3) % 3 : v.alpha % 3;
        net.blocks[effective].push_back(h);
    }
    return net;
}

Multinet pairs_net(const Arrangement& a) {
    Multinet net;
    net.mult.assign(a.size(), 1);
    net.blocks.assign(3, {});
    for (int64_t h = 0; h < a.size(); ++h) {
        const LabelView v = view_label(a.hyperplane(h).label);
        if (v.kind != LabelView::diff || v.i < 1 || v.j > 4) bad_catalog("pairs_net", "A(m,m,4)");
        // Complementary index pairs: {12,34}, {13,24}, {14,23}.
        int64_t block;
        if ((v.i == 1 && v.j == 2) || (v.i == 3 && v.j == 4)) block = 0;
        else if ((v.i == 1 && v.j == 3) || (v.i == 2 && v.j == 4)) block = 1;
        else if ((v.i == 1 && v.j == 4) || (v.i == 2 && v.j == 3)) block = 2;
        else bad_catalog("pairs_net", "A(m,m,4)");
        net.blocks[block].push_back(h);
    }
    return net;
}

Multinet full_monomial_multinet(const Arrangement& a) {
    Multinet net;
    net.mult.assign(a.size(), 1);
    net.blocks.assign(3, {});
    int64_t m = (a.size() - 3) / 3;
    if (a.size() != 3 * m + 3) bad_catalog("full_monomial_multinet", "A(m,1,3)");
    for (int64_t h = 0; h < a.size(); ++h) {
        const LabelView v = view_label(a.hyperplane(h).label);
        if (v.kind == LabelView::coord && v.i >= 1 && v.i <= 3) {
            net.blocks[v.i - 1].push_back(h);
            net.mult[h] = m;
        } else if (v.kind == LabelView::diff && v.i >= 1 && v.j <= 3) {
            const int64_t opposite = 6 - v.i - v.j; // index not in the pair
            net.blocks[opposite - 1].push_back(h);
        } else {
            bad_catalog("full_monomial_multinet", "A(m,1,3)");
        }
    }
    return net;
}

Multinet hessian_4net(const Arrangement& a) {
    Multinet net;
    net.mult.assign(a.size(), 1);
    net.blocks.assign(4, {});
    for (int64_t h = 0; h < a.size(); ++h) {
        const LabelView v = view_label(a.hyperplane(h).label);
        if (v.kind == LabelView::coord) {
            net.blocks[0].push_back(h);
        } else if (v.kind == LabelView::line) {
            // One singular triangle of the pencil per residue of a+b.
            net.blocks[1 + (v.i + v.j) % 3].push_back(h);
        } else {
            bad_catalog("hessian_4net", "hessian");
        }
    }
    return net;
}

std::vector<Multinet> search_nets(const Arrangement& a, const FlatTable& flats, int64_t k,
                                  const SearchOptions& options) {
    if (k < 3) throw user_error("search_nets: k must be >= 3");
    const int64_t n = a.size();
    if (n > options.guard && !options.override_guard)
        throw user_error("search_nets: arrangement size " + std::to_string(n) +
                         " exceeds the guard (" + std::to_string(options.guard) +
                         "); raise the guard to force the search");

    std::vector<Multinet> results;
    std::vector<int64_t> colour(n, -1);

    // Per-flat bookkeeping for pruning: counts per block, assigned member
    // count, and distinct colours used so far.
    const int64_t flat_count = flats.size();
    std::vector<std::vector<int64_t>> counts(flat_count, std::vector<int64_t>(k, 0));
    std::vector<int64_t> assigned(flat_count, 0);
    std::vector<int64_t> colours_used(flat_count, 0);

    auto flat_ok = [&](int64_t f) {
        const Flat2& flat = flats.flat(f);
        const int64_t mult = flat.multiplicity();
        if (colours_used[f] <= 1) return true; // may still end up single-block
        // Cross flat: every block must end with exactly mult/k members.
        if (mult % k != 0) return false;
        const int64_t quota = mult / k;
        for (int64_t b = 0; b < k; ++b)
            if (counts[f][b] > quota) return false;
        if (assigned[f] == mult) {
            for (int64_t b = 0; b < k; ++b)
                if (counts[f][b] != quota) return false;
        }
        return true;
    };

    // Restricted-growth assignment: hyperplane 0 goes to block 0 and block b
    // opens only after b-1 is in use, so each partition appears exactly once.
    auto dfs = [&](auto&& self, int64_t h, int64_t used) -> void {
        if (static_cast<int64_t>(results.size()) >= options.max_results) return;
        if (h == n) {
            if (used != k) return;
            Multinet net;
            net.mult.assign(n, 1);
            net.blocks.assign(k, {});
            for (int64_t i = 0; i < n; ++i) net.blocks[colour[i]].push_back(i);
            results.push_back(std::move(net));
            return;
        }
        // Not enough hyperplanes left to open the remaining blocks.
        if (k - used > n - h) return;
        const int64_t limit = std::min<int64_t>(used + 1, k);
        for (int64_t b = 0; b < limit; ++b) {
            colour[h] = b;
            bool ok = true;
            for (int64_t f : flats.flats_through(h)) {
                ++assigned[f];
                ++counts[f][b];
                if (counts[f][b] == 1) {
                    // Recount distinct colours lazily.
                    int64_t distinct = 0;
                    for (int64_t c = 0; c < k; ++c)
                        if (counts[f][c] > 0) ++distinct;
                    colours_used[f] = distinct;
                }
                if (ok && !flat_ok(f)) ok = false;
            }
            if (ok) self(self, h + 1, std::max(used, b + 1));
            for (int64_t f : flats.flats_through(h)) {
                --assigned[f];
                --counts[f][b];
                if (counts[f][b] == 0) {
                    int64_t distinct = 0;
                    for (int64_t c = 0; c < k; ++c)
                        if (counts[f][c] > 0) ++distinct;
                    colours_used[f] = distinct;
                }
            }
            colour[h] = -1;
        }
    };
    dfs(dfs, 0, 0);
    return results;
}

bool nabla_check(const Arrangement& a, const FlatTable& flats, const Multinet& net) {
    check_well_formed(net, a.size());
    return nabla_check(a, flats, net.k(), net.block_assignment(), net.mult);
}

MultinetConsequences multinet_consequences(const Arrangement& a, const FlatTable& flats,
                                           const Multinet& net) {
    const MultinetReport report = verify(a, flats, net);
    if (!report.valid) throw user_error("multinet_consequences: multinet fails the axiom");
    const int64_t k = net.k();
    if (!net.h_reduced(k))
        throw user_error("multinet_consequences: weights are not congruent to 1 mod k");

    MultinetConsequences out;
    out.k = k;
    for (int64_t d : divisors(k))
        if (d > 1) out.positive_monodromy_divisors.push_back(d);
    for (int64_t p : primes_up_to(k))
        if (k % p == 0) out.positive_betti_primes.push_back(p);

    for (int64_t p : out.positive_betti_primes) {
        const BettiNumber b = beta_p(a, flats, p);
        require_internal(b.value >= 1,
                         "multinet_consequences: verified " + std::to_string(k) +
                             "-multinet but beta_" + std::to_string(p) + " = 0");
    }
    return out;
}

std::vector<Multinet> catalog_multinets(const Arrangement& a) {
    std::vector<Multinet> nets;
    if (!a.metadata().family) return nets;
    const FamilySpec spec = parse_family_spec(*a.metadata().family);
    const int64_t m = spec.family == Family::braid ? 1 : spec.m;
    switch (spec.family) {
        case Family::braid:
        case Family::monomial:
            if (spec.l == 3) {
                nets.push_back(fy_monomial_3net(a));
                if (m % 3 == 0) nets.push_back(mod3_net(a));
            } else if (spec.l == 4) {
                nets.push_back(pairs_net(a));
            }
            break;
        case Family::full_monomial:
            if (spec.l == 3) nets.push_back(full_monomial_multinet(a));
            break;
        case Family::hessian:
            nets.push_back(hessian_4net(a));
            break;
        case Family::g31:
        case Family::g32:
        case Family::g33:
            break;
    }
    return nets;
}

} // namespace arr
