#ifndef ARR_LINALG_HPP
#define ARR_LINALG_HPP

#include <cstdint>
#include <vector>

#include "arr/cyclotomic.hpp"
#include "arr/numeric.hpp"

namespace arr {

/// Dense matrix over Q(zeta_m). All entries share one cyclotomic order.
class CycMatrix {
public:
    CycMatrix(int64_t order, int64_t rows, int64_t cols);
    static CycMatrix from_rows(int64_t order, std::vector<std::vector<CycElem>> rows);

    int64_t order() const { return order_; }
    int64_t rows() const { return rows_; }
    int64_t cols() const { return cols_; }
    const CycElem& at(int64_t r, int64_t c) const;
    void set(int64_t r, int64_t c, CycElem v);
    CycMatrix transposed() const;

private:
    int64_t order_, rows_, cols_;
    std::vector<CycElem> entries_;
};

/// Exact rank over Q(zeta_m) by Gaussian elimination with exact inverses.
/// Pivots are chosen first-nonzero in row-major order (deterministic).
int64_t rank_cyc(const CycMatrix& m);

/// Row echelon basis of the row span of `rows` (pivot entries normalized
/// to 1), plus the pivot column of each row. Building block for span
/// membership tests.
struct CycEchelon {
    int64_t order = 1;
    int64_t cols = 0;
    std::vector<std::vector<CycElem>> rows;
    std::vector<int64_t> pivot_cols;

    int64_t rank() const { return static_cast<int64_t>(rows.size()); }
    /// Adds a vector to the span; returns true if it enlarged the rank.
    bool absorb(std::vector<CycElem> v);
    /// True iff v lies in the current row span.
    bool contains(std::vector<CycElem> v) const;
};

/// Exact rank of a dense rational matrix.
int64_t rank_rational(const std::vector<std::vector<Rat>>& rows);

/// Dense matrix over the prime field F_p, entries normalized to {0..p-1}.
class PrimeFieldMatrix {
public:
    PrimeFieldMatrix(int64_t p, int64_t rows, int64_t cols);

    int64_t modulus() const { return p_; }
    int64_t rows() const { return rows_; }
    int64_t cols() const { return cols_; }
    int64_t at(int64_t r, int64_t c) const { return data_[r * cols_ + c]; }
    void set(int64_t r, int64_t c, int64_t v);
    void add_at(int64_t r, int64_t c, int64_t v);

    /// In-place reduced row echelon form; returns the pivot columns.
    std::vector<int64_t> rref();
    int64_t rank() const;
    /// Basis of the right nullspace {v : M v = 0}; vectors are independent
    /// and their count is cols - rank.
    std::vector<std::vector<int64_t>> nullspace() const;

private:
    int64_t p_, rows_, cols_;
    std::vector<int64_t> data_;
};

/// Modular inverse in F_p; throws on zero.
int64_t mod_inverse(int64_t a, int64_t p);

} // namespace arr

#endif
