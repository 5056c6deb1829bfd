#include "quasiq/linalg.hpp"

#include <algorithm>

#include "quasiq/error.hpp"

namespace quasiq {

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Cyclotomic(1);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw internal_error("matrix product shape mismatch");
    Matrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Cyclotomic& x = at(i, k);
            if (x.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += x * o.at(k, j);
            }
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw internal_error("matrix sum shape mismatch");
    Matrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw internal_error("matrix diff shape mismatch");
    Matrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

Matrix Matrix::scaled(const Cyclotomic& c) const {
    Matrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
}

std::vector<Cyclotomic> Matrix::apply(const std::vector<Cyclotomic>& v) const {
    if (v.size() != cols_) throw internal_error("matrix apply shape mismatch");
    std::vector<Cyclotomic> r(rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? Cyclotomic(1) : Cyclotomic(0))) return false;
    return true;
}

size_t Matrix::rank() const {
    EchelonBasis eb(cols_);
    for (size_t i = 0; i < rows_; ++i) {
        std::vector<Cyclotomic> row(cols_);
        for (size_t j = 0; j < cols_; ++j) row[j] = at(i, j);
        eb.insert(std::move(row));
    }
    return eb.rank();
}

Cyclotomic Matrix::det() const {
    if (rows_ != cols_) throw internal_error("determinant of non-square matrix");
    Matrix m = *this;
    Cyclotomic d(1);
    for (size_t c = 0; c < cols_; ++c) {
        size_t p = c;
        while (p < rows_ && m.at(p, c).is_zero()) ++p;
        if (p == rows_) return Cyclotomic(0);
        if (p != c) {
            for (size_t j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(c, j));
            d = -d;
        }
        d *= m.at(c, c);
        Cyclotomic inv_piv = m.at(c, c).inv();
        for (size_t i = c + 1; i < rows_; ++i) {
            if (m.at(i, c).is_zero()) continue;
            Cyclotomic f = m.at(i, c) * inv_piv;
            for (size_t j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return d;
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    Matrix m = *this;
    Matrix inv = identity(rows_);
    for (size_t c = 0; c < cols_; ++c) {
        size_t p = c;
        while (p < rows_ && m.at(p, c).is_zero()) ++p;
        if (p == rows_) return std::nullopt;
        if (p != c)
            for (size_t j = 0; j < cols_; ++j) {
                std::swap(m.at(p, j), m.at(c, j));
                std::swap(inv.at(p, j), inv.at(c, j));
            }
        Cyclotomic f = m.at(c, c).inv();
        for (size_t j = 0; j < cols_; ++j) {
            m.at(c, j) *= f;
            inv.at(c, j) *= f;
        }
        for (size_t i = 0; i < rows_; ++i) {
            if (i == c || m.at(i, c).is_zero()) continue;
            Cyclotomic g = m.at(i, c);
            for (size_t j = 0; j < cols_; ++j) {
                m.at(i, j) -= g * m.at(c, j);
                inv.at(i, j) -= g * inv.at(c, j);
            }
        }
    }
    return inv;
}

std::vector<std::vector<Cyclotomic>> Matrix::nullspace() const {
    // Reduce to RREF, then read free-column solutions.
    Matrix m = *this;
    std::vector<long> pivot_of_col(cols_, -1);
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
        size_t p = r;
        while (p < rows_ && m.at(p, c).is_zero()) ++p;
        if (p == rows_) continue;
        if (p != r)
            for (size_t j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(r, j));
        Cyclotomic f = m.at(r, c).inv();
        for (size_t j = c; j < cols_; ++j) m.at(r, j) *= f;
        for (size_t i = 0; i < rows_; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Cyclotomic g = m.at(i, c);
            for (size_t j = c; j < cols_; ++j) m.at(i, j) -= g * m.at(r, j);
        }
        pivot_of_col[c] = static_cast<long>(r);
        ++r;
    }
    std::vector<std::vector<Cyclotomic>> basis;
    for (size_t c = 0; c < cols_; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        std::vector<Cyclotomic> v(cols_);
        v[c] = Cyclotomic(1);
        for (size_t j = 0; j < cols_; ++j)
            if (pivot_of_col[j] >= 0) v[j] = -m.at(static_cast<size_t>(pivot_of_col[j]), c);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool EchelonBasis::insert(std::vector<Cyclotomic> v) {
    v = reduce(std::move(v));
    size_t piv = width_;
    for (size_t j = 0; j < width_; ++j)
        if (!v[j].is_zero()) { piv = j; break; }
    if (piv == width_) return false;
    Cyclotomic f = v[piv].inv();
    for (size_t j = piv; j < width_; ++j) v[j] = v[j] * f;
    // Clear this column in existing rows, then place the row by pivot order.
    for (auto& row : rows_) {
        if (row[piv].is_zero()) continue;
        Cyclotomic g = row[piv];
        for (size_t j = piv; j < width_; ++j) row[j] -= g * v[j];
    }
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, piv);
    return true;
}

std::vector<Cyclotomic> EchelonBasis::reduce(std::vector<Cyclotomic> v) const {
    if (v.size() != width_) throw internal_error("echelon width mismatch");
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Cyclotomic& c = v[pivots_[r]];
        if (c.is_zero()) continue;
        Cyclotomic g = c;
        const auto& row = rows_[r];
        for (size_t j = pivots_[r]; j < width_; ++j)
            if (!row[j].is_zero()) v[j] -= g * row[j];
    }
    return v;
}

bool EchelonBasis::contains(const std::vector<Cyclotomic>& v) const {
    auto r = reduce(v);
    for (const auto& x : r)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace quasiq
