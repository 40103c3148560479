#pragma once

#include <vector>

#include "singord/scalar.hpp"

namespace singord {

using Vec = std::vector<ExactScalar>;

// Row space in reduced row echelon form over ExactScalar. Canonical: the
// RREF of a subspace is unique, so operator== decides subspace equality and
// serialized rows are bit-stable.
class EchelonBasis {
public:
    explicit EchelonBasis(int ncols = 0) : ncols_(ncols) {}

    int ncols() const { return ncols_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    // reduce v against the basis in place; returns true if v reduces to zero
    bool reduce(Vec& v) const;
    bool contains(Vec v) const { return reduce(v); }

    // insert a row (after reduction); returns true if the rank grew
    bool insert(Vec v);

    // columns without a pivot, ascending
    std::vector<int> non_pivots() const;

    bool operator==(const EchelonBasis& o) const { return ncols_ == o.ncols_ && rows_ == o.rows_; }

private:
    void back_substitute(std::size_t new_row);
    int ncols_;
    std::vector<Vec> rows_;    // sorted by pivot column
    std::vector<int> pivots_;
};

// Dense matrix with exact RREF, kernel and solving;
// used for condition matrices and membership systems.
class DenseMatrix {
public:
    DenseMatrix(int nrows, int ncols) : ncols_(ncols), rows_(static_cast<std::size_t>(nrows), Vec(static_cast<std::size_t>(ncols), ExactScalar(0))) {}

    int nrows() const { return static_cast<int>(rows_.size()); }
    int ncols() const { return ncols_; }
    Vec& row(int i) { return rows_[static_cast<std::size_t>(i)]; }
    const Vec& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
    ExactScalar& at(int i, int j) { return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    const ExactScalar& at(int i, int j) const { return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    void add_row(Vec v) { rows_.push_back(std::move(v)); }

    int rank() const;
    // basis of the right kernel {x : A x = 0}
    std::vector<Vec> kernel() const;
    // one solution of A x = b, empty if inconsistent
    bool solve(const Vec& b, Vec& out) const;
    // basis of the left kernel {y : y^T A = 0}
    std::vector<Vec> left_kernel() const;

private:
    int ncols_;
    std::vector<Vec> rows_;
};

} // namespace singord
