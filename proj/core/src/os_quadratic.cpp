#include "arr/os_quadratic.hpp"

namespace arr {

int64_t aomoto_h1(const Arrangement& a, const FlatTable& flats, int64_t p) {
    if (!is_prime(p)) throw user_error("aomoto_h1: p must be prime");
    const int64_t n = a.size();
    // Matrix of tau |-> cup(sigma_p, tau) in the distinguished bases: the
    // (X, H)-row coefficient for column K is |A_X| [K = H] - [K in A_X].
    PrimeFieldMatrix m(p, flats.degree_two_dim(), n);
    int64_t row = 0;
    for (const Flat2& f : flats.flats()) {
        const int64_t mult = f.multiplicity();
        for (size_t i = 1; i < f.members.size(); ++i) {
            for (int64_t k : f.members) m.add_at(row, k, -1);
            m.add_at(row, f.members[i], mult);
            ++row;
        }
    }
    const int64_t kernel = n - m.rank();
    require_internal(kernel >= 1, "aomoto_h1: diagonal class not in the kernel");
    return kernel - 1;
}

bool nabla_check(const Arrangement& a, const FlatTable& flats, int64_t k,
                 const std::vector<int64_t>& block_of, const std::vector<int64_t>& weight) {
    const int64_t n = a.size();
    if (k < 3) throw user_error("nabla_check: need k >= 3 blocks");
    if (static_cast<int64_t>(block_of.size()) != n || static_cast<int64_t>(weight.size()) != n)
        throw user_error("nabla_check: block/weight map size mismatch");
    for (int64_t h = 0; h < n; ++h) {
        if (block_of[h] < 0 || block_of[h] >= k) throw user_error("nabla_check: block index out of range");
        if (weight[h] < 1) throw user_error("nabla_check: weights must be positive");
    }

    // Direct route. The comultiplication sends the generator dual to b^X_H
    // to sum_{K in A_X} a_K wedge a_H; its image under the second exterior
    // power of phi vanishes iff the weighted block total of X and the image
    // of a_H are parallel modulo the all-ones relation in the target.
    bool direct = true;
    std::vector<Rat> ones(k, Rat(1));
    for (const Flat2& f : flats.flats()) {
        std::vector<Rat> total(k, Rat(0));
        for (int64_t h : f.members) total[block_of[h]] += Rat(static_cast<long>(weight[h]));
        for (size_t i = 1; i < f.members.size() && direct; ++i) {
            const int64_t h = f.members[i];
            std::vector<Rat> image(k, Rat(0));
            image[block_of[h]] = Rat(static_cast<long>(weight[h]));
            if (rank_rational({total, image, ones}) > 2) direct = false;
        }
        if (!direct) break;
    }

    // Cup-product route on the pulled-back subspace.
    RationalField field;
    std::vector<OneClass<RationalField>> basis;
    for (int64_t b = 0; b + 1 < k; ++b) {
        OneClass<RationalField> v(n, Rat(0));
        for (int64_t h = 0; h < n; ++h) {
            if (block_of[h] == b) v[h] = Rat(static_cast<long>(weight[h]));
            else if (block_of[h] == k - 1) v[h] = -Rat(static_cast<long>(weight[h]));
        }
        basis.push_back(std::move(v));
    }
    bool dual = true;
    for (size_t i = 0; i < basis.size() && dual; ++i)
        for (size_t j = i + 1; j < basis.size(); ++j)
            if (!cup(flats, field, basis[i], basis[j]).is_zero(field)) {
                dual = false;
                break;
            }

    require_internal(direct == dual, "nabla_check: the two isotropy routes disagree");
    return direct;
}

} // namespace arr
