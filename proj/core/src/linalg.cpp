#include "arr/linalg.hpp"

#include <algorithm>

#include "arr/errors.hpp"

namespace arr {

CycMatrix::CycMatrix(int64_t order, int64_t rows, int64_t cols)
    : order_(order), rows_(rows), cols_(cols), entries_(rows * cols, CycElem(order)) {
    if (rows < 0 || cols < 0) throw user_error("CycMatrix: negative dimension");
}

CycMatrix CycMatrix::from_rows(int64_t order, std::vector<std::vector<CycElem>> rows) {
    const int64_t r = static_cast<int64_t>(rows.size());
    const int64_t c = r == 0 ? 0 : static_cast<int64_t>(rows[0].size());
    CycMatrix m(order, r, c);
    for (int64_t i = 0; i < r; ++i) {
        if (static_cast<int64_t>(rows[i].size()) != c)
            throw user_error("CycMatrix: ragged rows");
        for (int64_t j = 0; j < c; ++j) m.set(i, j, std::move(rows[i][j]));
    }
    return m;
}

const CycElem& CycMatrix::at(int64_t r, int64_t c) const { return entries_[r * cols_ + c]; }

void CycMatrix::set(int64_t r, int64_t c, CycElem v) {
    if (v.order() != order_)
        throw user_error("CycMatrix: entry order mismatch; embed entries into the matrix order first");
    entries_[r * cols_ + c] = std::move(v);
}

CycMatrix CycMatrix::transposed() const {
    CycMatrix t(order_, cols_, rows_);
    for (int64_t i = 0; i < rows_; ++i)
        for (int64_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
    return t;
}

bool CycEchelon::absorb(std::vector<CycElem> v) {
    if (cols == 0) cols = static_cast<int64_t>(v.size());
    require_internal(static_cast<int64_t>(v.size()) == cols, "CycEchelon: size mismatch");
    for (size_t r = 0; r < rows.size(); ++r) {
        const int64_t p = pivot_cols[r];
        if (!v[p].is_zero()) {
            const CycElem factor = v[p];
            for (int64_t j = 0; j < cols; ++j) v[j] = v[j] - factor * rows[r][j];
        }
    }
    int64_t pivot = -1;
    for (int64_t j = 0; j < cols; ++j)
        if (!v[j].is_zero()) {
            pivot = j;
            break;
        }
    if (pivot < 0) return false;
    const CycElem inv = v[pivot].inverse();
    for (int64_t j = 0; j < cols; ++j) v[j] = v[j] * inv;
    // Maintain full reduced form: clear the new pivot column everywhere so
    // later reductions can run in any row order.
    for (size_t r = 0; r < rows.size(); ++r) {
        const CycElem f = rows[r][pivot];
        if (f.is_zero()) continue;
        for (int64_t j = 0; j < cols; ++j) rows[r][j] = rows[r][j] - f * v[j];
    }
    size_t pos = 0;
    while (pos < rows.size() && pivot_cols[pos] < pivot) ++pos;
    rows.insert(rows.begin() + pos, std::move(v));
    pivot_cols.insert(pivot_cols.begin() + pos, pivot);
    return true;
}

bool CycEchelon::contains(std::vector<CycElem> v) const {
    require_internal(static_cast<int64_t>(v.size()) == cols || rows.empty(),
                     "CycEchelon: size mismatch");
    for (size_t r = 0; r < rows.size(); ++r) {
        const int64_t p = pivot_cols[r];
        if (!v[p].is_zero()) {
            const CycElem factor = v[p];
            for (int64_t j = 0; j < cols; ++j) v[j] = v[j] - factor * rows[r][j];
        }
    }
    for (const CycElem& e : v)
        if (!e.is_zero()) return false;
    return true;
}

int64_t rank_cyc(const CycMatrix& m) {
    CycEchelon ech;
    ech.order = m.order();
    ech.cols = m.cols();
    for (int64_t i = 0; i < m.rows(); ++i) {
        std::vector<CycElem> row;
        row.reserve(m.cols());
        for (int64_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
        ech.absorb(std::move(row));
    }
    return ech.rank();
}

int64_t rank_rational(const std::vector<std::vector<Rat>>& input) {
    std::vector<std::vector<Rat>> rows = input;
    int64_t rank = 0;
    const int64_t nrows = static_cast<int64_t>(rows.size());
    const int64_t ncols = nrows == 0 ? 0 : static_cast<int64_t>(rows[0].size());
    int64_t row = 0;
    for (int64_t col = 0; col < ncols && row < nrows; ++col) {
        int64_t pivot = -1;
        for (int64_t r = row; r < nrows; ++r)
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[row], rows[pivot]);
        const Rat inv = 1 / rows[row][col];
        for (int64_t j = col; j < ncols; ++j) rows[row][j] *= inv;
        for (int64_t r = 0; r < nrows; ++r) {
            if (r == row || rows[r][col] == 0) continue;
            const Rat f = rows[r][col];
            for (int64_t j = col; j < ncols; ++j) rows[r][j] -= f * rows[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

int64_t mod_inverse(int64_t a, int64_t p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw user_error("mod_inverse: zero has no inverse");
    int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        const int64_t q = r / new_r;
        int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    require_internal(r == 1, "mod_inverse: modulus is not prime or inputs not coprime");
    if (t < 0) t += p;
    return t;
}

PrimeFieldMatrix::PrimeFieldMatrix(int64_t p, int64_t rows, int64_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (!is_prime(p)) throw user_error("PrimeFieldMatrix: modulus " + std::to_string(p) + " is not prime");
    if (rows < 0 || cols < 0) throw user_error("PrimeFieldMatrix: negative dimension");
}

void PrimeFieldMatrix::set(int64_t r, int64_t c, int64_t v) {
    v %= p_;
    if (v < 0) v += p_;
    data_[r * cols_ + c] = v;
}

void PrimeFieldMatrix::add_at(int64_t r, int64_t c, int64_t v) {
    set(r, c, data_[r * cols_ + c] + v % p_);
}

std::vector<int64_t> PrimeFieldMatrix::rref() {
    std::vector<int64_t> pivots;
    int64_t row = 0;
    for (int64_t col = 0; col < cols_ && row < rows_; ++col) {
        int64_t pivot = -1;
        for (int64_t r = row; r < rows_; ++r)
            if (data_[r * cols_ + col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        for (int64_t j = 0; j < cols_; ++j)
            std::swap(data_[row * cols_ + j], data_[pivot * cols_ + j]);
        const int64_t inv = mod_inverse(data_[row * cols_ + col], p_);
        for (int64_t j = col; j < cols_; ++j)
            data_[row * cols_ + j] = data_[row * cols_ + j] * inv % p_;
        for (int64_t r = 0; r < rows_; ++r) {
            if (r == row) continue;
            const int64_t f = data_[r * cols_ + col];
            if (f == 0) continue;
            for (int64_t j = col; j < cols_; ++j) {
                int64_t v = data_[r * cols_ + j] - f * data_[row * cols_ + j] % p_;
                if (v < 0) v += p_;
                data_[r * cols_ + j] = v;
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int64_t PrimeFieldMatrix::rank() const {
    PrimeFieldMatrix copy = *this;
    return static_cast<int64_t>(copy.rref().size());
}

std::vector<std::vector<int64_t>> PrimeFieldMatrix::nullspace() const {
    PrimeFieldMatrix copy = *this;
    const std::vector<int64_t> pivots = copy.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int64_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<int64_t>> basis;
    for (int64_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<int64_t> v(cols_, 0);
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) {
            // Row r reads: x_{pivot_r} + sum_{j free} a_j x_j = 0.
            const int64_t a = copy.at(static_cast<int64_t>(r), free);
            if (a != 0) v[pivots[r]] = p_ - a;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace arr
