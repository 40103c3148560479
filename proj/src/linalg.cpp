#include "singord/linalg.hpp"

#include <algorithm>

namespace singord {

bool EchelonBasis::reduce(Vec& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        int p = pivots_[r];
        const ExactScalar& c = v[static_cast<std::size_t>(p)];
        if (c.is_zero()) continue;
        ExactScalar factor = c; // pivot entries are 1
        const Vec& row = rows_[r];
        for (int j = p; j < ncols_; ++j) {
            auto jj = static_cast<std::size_t>(j);
            if (!row[jj].is_zero()) v[jj] -= factor * row[jj];
        }
    }
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

bool EchelonBasis::insert(Vec v) {
    if (reduce(v)) return false;
    int p = -1;
    for (int j = 0; j < ncols_; ++j)
        if (!v[static_cast<std::size_t>(j)].is_zero()) {
            p = j;
            break;
        }
    ExactScalar inv = v[static_cast<std::size_t>(p)].inverse();
    for (int j = p; j < ncols_; ++j) v[static_cast<std::size_t>(j)] *= inv;
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    auto idx = static_cast<std::size_t>(it - pivots_.begin());
    pivots_.insert(it, p);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
    back_substitute(idx);
    return true;
}

void EchelonBasis::back_substitute(std::size_t new_row) {
    int p = pivots_[new_row];
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r == new_row) continue;
        ExactScalar c = rows_[r][static_cast<std::size_t>(p)];
        if (c.is_zero()) continue;
        for (int j = p; j < ncols_; ++j) {
            auto jj = static_cast<std::size_t>(j);
            if (!rows_[new_row][jj].is_zero()) rows_[r][jj] -= c * rows_[new_row][jj];
        }
    }
}

std::vector<int> EchelonBasis::non_pivots() const {
    std::vector<int> out;
    std::size_t r = 0;
    for (int j = 0; j < ncols_; ++j) {
        if (r < pivots_.size() && pivots_[r] == j)
            ++r;
        else
            out.push_back(j);
    }
    return out;
}

namespace {

// RREF of an explicit row list; returns pivot columns
std::vector<int> rref_rows(std::vector<Vec>& rows, int ncols) {
    std::vector<int> pivots;
    std::size_t r = 0;
    for (int c = 0; c < ncols && r < rows.size(); ++c) {
        auto cc = static_cast<std::size_t>(c);
        std::size_t sel = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i)
            if (!rows[i][cc].is_zero()) {
                sel = i;
                break;
            }
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        ExactScalar inv = rows[r][cc].inverse();
        for (int j = c; j < ncols; ++j) rows[r][static_cast<std::size_t>(j)] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r) continue;
            ExactScalar f = rows[i][cc];
            if (f.is_zero()) continue;
            for (int j = c; j < ncols; ++j) {
                auto jj = static_cast<std::size_t>(j);
                if (!rows[r][jj].is_zero()) rows[i][jj] -= f * rows[r][jj];
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

int DenseMatrix::rank() const {
    std::vector<Vec> rows = rows_;
    return static_cast<int>(rref_rows(rows, ncols_).size());
}

std::vector<Vec> DenseMatrix::kernel() const {
    std::vector<Vec> rows = rows_;
    std::vector<int> pivots = rref_rows(rows, ncols_);
    std::vector<bool> is_pivot(static_cast<std::size_t>(ncols_), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<Vec> basis;
    for (int f = 0; f < ncols_; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        Vec v(static_cast<std::size_t>(ncols_), ExactScalar(0));
        v[static_cast<std::size_t>(f)] = ExactScalar(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = -rows[r][static_cast<std::size_t>(f)];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool DenseMatrix::solve(const Vec& b, Vec& out) const {
    std::vector<Vec> rows = rows_;
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i].push_back(b[i]);
    std::vector<int> pivots = rref_rows(rows, ncols_ + 1);
    for (int p : pivots)
        if (p == ncols_) return false; // pivot in the augmented column
    out.assign(static_cast<std::size_t>(ncols_), ExactScalar(0));
    for (std::size_t r = 0; r < pivots.size(); ++r)
        out[static_cast<std::size_t>(pivots[r])] = rows[r][static_cast<std::size_t>(ncols_)];
    return true;
}

std::vector<Vec> DenseMatrix::left_kernel() const {
    // transpose, then kernel
    DenseMatrix t(ncols_, nrows());
    for (int i = 0; i < nrows(); ++i)
        for (int j = 0; j < ncols_; ++j) t.at(j, i) = at(i, j);
    return t.kernel();
}

} // namespace singord
