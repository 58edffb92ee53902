#pragma once

#include <cstddef>
#include <vector>

#include "ncq/rational.hpp"

namespace ncq {

// Small dense matrix of exact rationals.  Row-major storage.
class RatMatrix {
  public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    static RatMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const {
        return data_[static_cast<size_t>(r) * cols_ + c];
    }

    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const RatMatrix& o) const { return !(*this == o); }

    bool is_zero() const;

    RatMatrix operator*(const RatMatrix& o) const;  // DimensionError on mismatch
    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;

    // Exact Gauss-Jordan inverse; throws SingularTransform when not invertible.
    RatMatrix inverse() const;

    // Exact determinant via fraction-free elimination on a copy.
    Rational det() const;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

}  // namespace ncq
