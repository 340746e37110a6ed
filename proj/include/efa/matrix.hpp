#pragma once

#include "efa/scalar.hpp"

#include <optional>
#include <vector>

namespace efa {

// Dense matrix over exact rationals, sized for basis dimensions (a handful
// of rows), not for numerics at scale.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& at(int r, int c) { return data_[size_t(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    Matrix operator*(const Matrix& o) const;
    Matrix transposed() const;

    bool is_symmetric() const;
    bool is_involution() const; // M*M == I

    // Gauss-Jordan; nullopt when singular.
    std::optional<Matrix> inverse() const;

  private:
    int rows_, cols_;
    std::vector<Scalar> data_;
};

} // namespace efa
