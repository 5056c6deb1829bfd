#pragma once

#include <optional>
#include <vector>

#include "quasiq/cyclotomic.hpp"

namespace quasiq {

// Dense matrix over the cyclotomic field. All elimination is exact; there
// is no pivoting heuristic beyond first-nonzero because arithmetic never
// loses precision.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static Matrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Cyclotomic& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Cyclotomic& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Cyclotomic& c) const;
    std::vector<Cyclotomic> apply(const std::vector<Cyclotomic>& v) const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    bool is_identity() const;
    size_t rank() const;
    Cyclotomic det() const;  // square only
    std::optional<Matrix> inverse() const;

    // Basis of { x : A x = 0 }, each vector of length cols().
    std::vector<std::vector<Cyclotomic>> nullspace() const;

  private:
    size_t rows_, cols_;
    std::vector<Cyclotomic> a_;
};

// Incremental reduced-echelon container: rows span a subspace of k^width
// and stay in reduced echelon form (unit pivots, zeros above and below).
class EchelonBasis {
  public:
    explicit EchelonBasis(size_t width) : width_(width) {}

    size_t width() const { return width_; }
    size_t rank() const { return rows_.size(); }
    const std::vector<std::vector<Cyclotomic>>& rows() const { return rows_; }

    // Reduces v against the current rows; inserts the remainder when nonzero.
    // Returns true when the rank grew.
    bool insert(std::vector<Cyclotomic> v);

    // Remainder of v after reduction (zero vector iff v is in the span).
    std::vector<Cyclotomic> reduce(std::vector<Cyclotomic> v) const;
    bool contains(const std::vector<Cyclotomic>& v) const;

  private:
    size_t width_;
    std::vector<std::vector<Cyclotomic>> rows_;  // sorted by pivot column
    std::vector<size_t> pivots_;
};

}  // namespace quasiq
